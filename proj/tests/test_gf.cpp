#include <doctest.h>

#include "formcode/gf.hpp"
#include "formcode/util.hpp"

using namespace formcode;

namespace {

void check_axioms_exhaustive(const FieldPtr& f) {
    uint32_t q = f->q();
    for (uint32_t a = 0; a < q; ++a)
        for (uint32_t b = 0; b < q; ++b) {
            CHECK(f->add(a, b) == f->add(b, a));
            CHECK(f->mul(a, b) == f->mul(b, a));
            for (uint32_t c = 0; c < q; ++c) {
                CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
                CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
                CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
            }
        }
}

void check_axioms_sampled(const FieldPtr& f, int samples) {
    SplitMix64 rng(0xF1E7D5);
    uint32_t q = f->q();
    for (int i = 0; i < samples; ++i) {
        uint32_t a = static_cast<uint32_t>(rng.below(q));
        uint32_t b = static_cast<uint32_t>(rng.below(q));
        uint32_t c = static_cast<uint32_t>(rng.below(q));
        CHECK(f->add(a, b) == f->add(b, a));
        CHECK(f->mul(a, b) == f->mul(b, a));
        CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
        CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
        CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
    }
}

}  // namespace

TEST_CASE("prime field basics") {
    auto f3 = Field::make(3);
    CHECK(f3->add(2, 2) == 1);
    auto f2 = Field::make(2);
    CHECK(f2->mul(1, 1) == 1);
    auto f5 = Field::make(5);
    CHECK(f5->inv(3) == 2);
}

TEST_CASE("field construction rejects bad input") {
    CHECK_THROWS_AS(Field::make(4), Error);             // not prime
    CHECK_THROWS_AS(Field::make(6), Error);             // not prime
    CHECK_THROWS_AS(Field::make(2, 0), Error);          // degree < 1
    CHECK_THROWS_AS(Field::make(2, 17), Error);         // beyond the q cap
    CHECK_THROWS_AS(Field::make(2, 2, {0, 1, 1}), Error);  // x^2 + x = x(x+1)
    CHECK_THROWS_AS(Field::make(2, 2, {1, 0, 1}), Error);  // x^2 + 1 = (x+1)^2
}

TEST_CASE("F4 has the expected structure") {
    auto f4 = Field::make(2, 2, {1, 1, 1});  // x^2 + x + 1
    CHECK(f4->q() == 4);
    // exhaustive multiplication table: group of order 3 on nonzero elements
    for (uint32_t a = 1; a < 4; ++a) {
        CHECK(f4->pow(a, 3) == 1);
        CHECK(f4->mul(a, f4->inv(a)) == 1);
    }
    // x * x = x + 1 under x^2 = x + 1
    CHECK(f4->mul(2, 2) == 3);
    check_axioms_exhaustive(f4);
    // default modulus for (2,2) is the same polynomial
    auto f4_default = Field::make(2, 2);
    CHECK(f4_default->modulus() == std::vector<uint32_t>{1, 1, 1});
}

TEST_CASE("axioms hold exhaustively for tiny fields") {
    for (auto f : {Field::make(2), Field::make(3), Field::make(5), Field::make(7),
                   Field::make(2, 2), Field::make(2, 3), Field::make(3, 2)})
        check_axioms_exhaustive(f);
}

TEST_CASE("axioms hold on random triples up to q = 64") {
    for (auto f : {Field::make(2, 6), Field::make(61), Field::make(5, 2), Field::make(3, 3)})
        check_axioms_sampled(f, 300);
}

TEST_CASE("multiplicative order divides q - 1") {
    for (auto f : {Field::make(2, 4), Field::make(7), Field::make(3, 3), Field::make(2, 6)}) {
        for (uint32_t a = 1; a < f->q(); ++a) CHECK(f->pow(a, f->q() - 1) == 1);
    }
}

TEST_CASE("inverse is an involution") {
    for (auto f : {Field::make(11), Field::make(2, 5), Field::make(13, 1)}) {
        for (uint32_t a = 1; a < f->q(); ++a) CHECK(f->inv(f->inv(a)) == a);
        CHECK_THROWS_AS((void)f->inv(0), Error);
    }
}

TEST_CASE("a larger extension field still works") {
    auto f256 = Field::make(2, 8);
    check_axioms_sampled(f256, 200);
    for (uint32_t a : {1u, 2u, 77u, 255u}) {
        CHECK(f256->mul(a, f256->inv(a)) == 1);
        CHECK(f256->pow(a, 255) == 1);
    }
}

TEST_CASE("the order cap is inclusive") {
    auto top = Field::make(2, 16);
    CHECK(top->q() == 65536);
    check_axioms_sampled(top, 50);
    for (uint32_t a : {1u, 54321u, 65535u}) CHECK(top->mul(a, top->inv(a)) == 1);
    CHECK_THROWS_AS(Field::make(257, 2), Error);  // 66049 > 2^16
}

TEST_CASE("element wrappers enforce field identity") {
    auto f3 = Field::make(3);
    auto f5 = Field::make(5);
    FieldElement a = f3->element(2), b = f3->element(2);
    CHECK((a + b).value() == 1);
    CHECK((a * b).value() == 1);
    CHECK(inv(f5->element(3)).value() == 2);
    CHECK_THROWS_AS((void)(a + f5->element(1)), Error);
    // same (p, m, modulus) built twice is the same field
    auto f3_again = Field::make(3);
    CHECK((a + f3_again->element(1)).value() == 0);
    CHECK_THROWS_AS((void)f3->element(3), Error);
}

TEST_CASE("element text round trips") {
    auto f7 = Field::make(7);
    CHECK(f7->elem_to_string(5) == "5");
    CHECK(f7->elem_from_string("5") == 5);
    auto f9 = Field::make(3, 2);
    for (uint32_t a = 0; a < 9; ++a)
        CHECK(f9->elem_from_string(f9->elem_to_string(a)) == a);
    CHECK(f9->elem_to_string(5) == "2,1");  // 5 = 2 + 1*3
    CHECK_THROWS_AS((void)f7->elem_from_string(""), Error);
    CHECK_THROWS_AS((void)f7->elem_from_string("x"), Error);
}
