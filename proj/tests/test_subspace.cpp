#include <doctest.h>

#include <sstream>

#include "formcode/subspace.hpp"
#include "formcode/util.hpp"

using namespace formcode;

TEST_CASE("span construction canonicalizes") {
    auto f2 = Field::make(2);
    auto s = Subspace::from_vectors(f2, 2, {{1, 0}, {1, 1}});
    CHECK(s.dim() == 2);
    CHECK(s.row_values(0) == std::vector<uint32_t>{1, 0});
    CHECK(s.row_values(1) == std::vector<uint32_t>{0, 1});

    auto dup = Subspace::from_vectors(f2, 3, {{1, 1, 0}, {1, 1, 0}});
    CHECK(dup.dim() == 1);

    auto f3 = Field::make(3);
    auto line = Subspace::from_vectors(f3, 2, {{1, 2}, {2, 1}});
    CHECK(line.dim() == 1);
    CHECK(line.row_values(0) == std::vector<uint32_t>{1, 2});
}

TEST_CASE("same span means identical representation") {
    SplitMix64 rng(11);
    for (auto f : {Field::make(2), Field::make(3), Field::make(5)}) {
        for (int iter = 0; iter < 40; ++iter) {
            int ambient = 6, l = 3;
            Subspace s = random_subspace(f, ambient, l, rng);
            // random invertible recombination of the basis
            auto rows = s.basis_rows();
            std::vector<std::vector<uint32_t>> mixed;
            for (int tries = 0;; ++tries) {
                REQUIRE(tries < 100);
                std::vector<std::vector<uint32_t>> m(l, std::vector<uint32_t>(l));
                for (auto& row : m)
                    for (auto& x : row) x = static_cast<uint32_t>(rng.below(f->q()));
                mixed.clear();
                for (int i = 0; i < l; ++i) {
                    std::vector<uint32_t> v(ambient, 0);
                    for (int j = 0; j < l; ++j)
                        for (int c = 0; c < ambient; ++c)
                            v[c] = f->add(v[c], f->mul(m[i][j], rows[j][c]));
                    mixed.push_back(std::move(v));
                }
                Subspace t = Subspace::from_vectors(f, ambient, mixed);
                if (t.dim() == l) {
                    CHECK(t == s);
                    break;
                }
            }
        }
    }
}

TEST_CASE("distances of hand-built spans") {
    auto f2 = Field::make(2);
    auto ex = Subspace::from_vectors(f2, 2, {{1, 0}});
    auto ey = Subspace::from_vectors(f2, 2, {{0, 1}});
    CHECK(dist(ex, ex) == 0);
    CHECK(dist(ex, ey) == 2);
    CHECK(sum_dim(ex, ey) == 2);
    CHECK(intersect_dim(ex, ey) == 0);

    auto f3 = Field::make(3);
    auto a = Subspace::from_vectors(f3, 3, {{1, 0, 0}, {0, 1, 0}});
    auto b = Subspace::from_vectors(f3, 3, {{0, 1, 0}, {0, 0, 1}});
    CHECK(dist(a, b) == 2);
    CHECK(intersect_dim(a, b) == 1);
    CHECK(intersect_dim(a, a) == 2);
}

TEST_CASE("ambient mismatch is rejected") {
    auto f2 = Field::make(2);
    auto a = Subspace::from_vectors(f2, 2, {{1, 0}});
    auto b = Subspace::from_vectors(f2, 3, {{1, 0, 0}});
    CHECK_THROWS_AS((void)dist(a, b), Error);
    CHECK_THROWS_AS(Subspace::from_vectors(f2, 2, {{1, 0, 1}}), Error);
}

TEST_CASE("zero-dimensional subspace behaves") {
    auto f2 = Field::make(2);
    auto z = Subspace::zero(f2, 4);
    CHECK(z.dim() == 0);
    auto s = Subspace::from_vectors(f2, 4, {{1, 1, 0, 0}});
    CHECK(dist(z, s) == 1);
    CHECK(intersect_dim(z, s) == 0);
    CHECK(z.contains(std::vector<uint32_t>(4, 0)));
    CHECK(!z.contains({1, 0, 0, 0}));
}

TEST_CASE("metric axioms on random triples") {
    SplitMix64 rng(2024);
    for (auto f : {Field::make(2), Field::make(3)}) {
        for (int iter = 0; iter < 200; ++iter) {
            int ambient = 8;
            auto u = random_subspace(f, ambient, static_cast<int>(rng.below(5)), rng);
            auto v = random_subspace(f, ambient, static_cast<int>(rng.below(5)), rng);
            auto w = random_subspace(f, ambient, static_cast<int>(rng.below(5)), rng);
            int duv = dist(u, v), dvw = dist(v, w), duw = dist(u, w);
            CHECK(duv >= 0);
            CHECK(duv == dist(v, u));
            CHECK((duv == 0) == (u == v));
            CHECK(duw <= duv + dvw);
            if (u.dim() == v.dim()) CHECK(duv % 2 == 0);
        }
    }
}

TEST_CASE("stacking a space with itself keeps its rank") {
    SplitMix64 rng(31);
    auto f2 = Field::make(2);
    for (int iter = 0; iter < 20; ++iter) {
        auto v = random_subspace(f2, 10, 4, rng);
        CHECK(sum_dim(v, v) == 4);
        CHECK(dist(v, v) == 0);
    }
}

TEST_CASE("intersection matches its dimension oracle") {
    SplitMix64 rng(77);
    for (auto f : {Field::make(2), Field::make(3)}) {
        for (int iter = 0; iter < 50; ++iter) {
            auto a = random_subspace(f, 8, 3 + static_cast<int>(rng.below(3)), rng);
            auto b = random_subspace(f, 8, 3 + static_cast<int>(rng.below(3)), rng);
            Subspace cap = intersection(a, b);
            CHECK(cap.dim() == intersect_dim(a, b));
            for (int i = 0; i < cap.dim(); ++i) {
                CHECK(a.contains(cap.row_values(i)));
                CHECK(b.contains(cap.row_values(i)));
            }
        }
    }
}

TEST_CASE("containment test") {
    auto f3 = Field::make(3);
    auto s = Subspace::from_vectors(f3, 3, {{1, 0, 2}, {0, 1, 1}});
    CHECK(s.contains({1, 0, 2}));
    CHECK(s.contains({1, 1, 0}));  // sum
    CHECK(s.contains({2, 0, 1}));  // scalar multiple
    CHECK(!s.contains({0, 0, 1}));
}

TEST_CASE("text format round trips and rejects deficient rows") {
    auto f2 = Field::make(2);
    auto s = Subspace::from_vectors(f2, 4, {{1, 0, 1, 1}, {0, 1, 1, 0}});
    std::stringstream io;
    write_subspace(io, s);
    auto loaded = read_subspace(io, false);
    CHECK(loaded.subspace == s);
    CHECK(!loaded.rank_deficient);

    std::stringstream bad("2 3 2\n1 1 0\n1 1 0\n");
    CHECK_THROWS_AS((void)read_subspace(bad, false), Error);
    std::stringstream bad2("2 3 2\n1 1 0\n1 1 0\n");
    auto tolerated = read_subspace(bad2, true);
    CHECK(tolerated.rank_deficient);
    CHECK(tolerated.subspace.dim() == 1);

    std::stringstream f9io("9 2 1\n1,2 0,1\n");
    auto ext = read_subspace(f9io, false);
    CHECK(ext.subspace.field()->q() == 9);
    CHECK(ext.subspace.dim() == 1);
}
