// Acceptance suite: runs every shipped guarantee end to end and prints one
// PASS/FAIL line per criterion. Exits nonzero if any line fails.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <vector>

#include "formcode/channel.hpp"
#include "formcode/codes.hpp"
#include "formcode/irreducibles.hpp"
#include "formcode/table.hpp"
#include "formcode/util.hpp"

using namespace formcode;

namespace {

int failures = 0;

class Criterion {
public:
    Criterion(std::string name, double time_limit_s = 0.0)
        : name_(std::move(name)), limit_(time_limit_s) {
        start_ = std::chrono::steady_clock::now();
    }

    void require(bool ok, const std::string& detail) {
        if (!ok && problem_.empty()) problem_ = detail;
    }

    ~Criterion() {
        auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_);
        if (limit_ > 0 && elapsed.count() > limit_ && problem_.empty())
            problem_ = "exceeded " + format3(limit_) + " s time limit";
        if (problem_.empty()) {
            std::cout << "[PASS] " << name_ << " (" << format3(elapsed.count()) << " s)\n";
        } else {
            std::cout << "[FAIL] " << name_ << ": " << problem_ << '\n';
            ++failures;
        }
    }

private:
    std::string name_;
    double limit_;
    std::string problem_;
    std::chrono::steady_clock::time_point start_;
};

// Published parameter grid for q = 2, n = 2 (columns d = e..10), with the
// five d = 2e distance cells replaced by the values the distance formula
// yields there (the published table applied the empty-intersection case at
// the boundary; the intersection is one-dimensional).
struct GridRow {
    int e;
    uint64_t size;
    std::vector<int> l, D;
    std::vector<const char*> lambda, delta, rate;
};

const std::vector<GridRow> kGrid = {
    {1,
     7,
     {1, 3, 6, 10, 15, 21, 28, 36, 45, 55},
     {2, 4, 6, 8, 10, 12, 14, 16, 18, 20},
     {"0.333", "0.500", "0.600", "0.667", "0.714", "0.750", "0.778", "0.800", "0.818", "0.833"},
     {"1.000", "0.667", "0.500", "0.400", "0.333", "0.286", "0.250", "0.222", "0.200", "0.182"},
     {"0.936", "0.156", "0.047", "0.019", "0.009", "0.005", "0.003", "0.002", "0.001", "0.001"}},
    {2,
     35,
     {1, 3, 6, 10, 15, 21, 28, 36, 45},
     {2, 6, 10, 14, 18, 22, 26, 30, 34},
     {"0.167", "0.300", "0.400", "0.476", "0.536", "0.583", "0.622", "0.655", "0.682"},
     {"1.000", "1.000", "0.833", "0.700", "0.600", "0.524", "0.464", "0.417", "0.378"},
     {"0.855", "0.171", "0.057", "0.024", "0.012", "0.007", "0.004", "0.003", "0.002"}},
    {3,
     694,
     {1, 3, 6, 10, 15, 21, 28, 36},
     {2, 6, 12, 18, 24, 30, 36, 42},
     {"0.100", "0.200", "0.286", "0.357", "0.417", "0.467", "0.509", "0.545"},
     {"1.000", "1.000", "1.000", "0.900", "0.800", "0.714", "0.643", "0.583"},
     {"0.944", "0.210", "0.075", "0.034", "0.017", "0.010", "0.006", "0.004"}},
    {4,
     26089,
     {1, 3, 6, 10, 15, 21, 28},
     {2, 6, 12, 20, 28, 36, 44},
     {"0.067", "0.143", "0.214", "0.278", "0.333", "0.382", "0.424"},
     {"1.000", "1.000", "1.000", "1.000", "0.933", "0.857", "0.786"},
     {"0.978", "0.233", "0.087", "0.041", "0.022", "0.013", "0.008"}},
    {5,
     1862994,
     {1, 3, 6, 10, 15, 21},
     {2, 6, 12, 20, 30, 40},
     {"0.048", "0.107", "0.167", "0.222", "0.273", "0.318"},
     {"1.000", "1.000", "1.000", "1.000", "1.000", "0.952"},
     {"0.992", "0.248", "0.096", "0.046", "0.025", "0.015"}},
};

const int kAmbient[10] = {3, 6, 10, 15, 21, 28, 36, 45, 55, 66};

void criterion_cardinalities() {
    Criterion c("criterion 1: irreducible-family sizes for e = 1..5", 1.0);
    const uint64_t expect[5] = {7, 35, 694, 26089, 1862994};
    for (int e = 1; e <= 5; ++e)
        c.require(count_irreducible(2, 2, e) == BigUint(expect[e - 1]),
                  "count at e = " + std::to_string(e));
}

void criterion_sieve_agreement() {
    {
        Criterion c("criterion 2: sieve matches the recursion for e <= 4", 30.0);
        auto f2 = Field::make(2);
        for (int e = 1; e <= 4; ++e) {
            uint64_t sieved = 0;
            for_each_irreducible(f2, 2, e, [&](const NormalizedPoly&) { ++sieved; });
            c.require(BigUint(sieved) == count_irreducible(2, 2, e),
                      "sieve count at e = " + std::to_string(e));
        }
    }
    const char* env = std::getenv("FORMCODE_ACCEPTANCE_E5");
    if (env != nullptr && std::string(env) == "1") {
        Criterion c("criterion 2 (optional): sieve matches the recursion at e = 5");
        auto f2 = Field::make(2);
        uint64_t sieved = 0;
        for_each_irreducible(f2, 2, 5, [&](const NormalizedPoly&) { ++sieved; });
        c.require(BigUint(sieved) == count_irreducible(2, 2, 5), "sieve count at e = 5");
    }
}

void criterion_table() {
    Criterion c("criterion 3: parameter grid reproduction (erratum cells per the formula)",
                5.0);
    auto rows = table_rows(2, 2, 5, 10);
    size_t idx = 0;
    for (const auto& grid : kGrid) {
        for (size_t col = 0; col < grid.l.size(); ++col, ++idx) {
            if (idx >= rows.size()) {
                c.require(false, "grid truncated");
                return;
            }
            const TableRow& row = rows[idx];
            int d = grid.e + static_cast<int>(col);
            std::string cell = " at e = " + std::to_string(grid.e) + ", d = " + std::to_string(d);
            c.require(row.e == grid.e && row.d == d, "cell order" + cell);
            c.require(row.N == kAmbient[d - 1], "packet length" + cell);
            c.require(row.l == grid.l[col], "codeword dimension" + cell);
            c.require(row.size == BigUint(grid.size), "family size" + cell);
            c.require(row.D == grid.D[col], "distance" + cell);
            c.require(format3_ratio(row.l, row.N) == grid.lambda[col], "lambda" + cell);
            c.require(format3_ratio(row.D, 2ULL * row.l) == grid.delta[col], "delta" + cell);
            c.require(format3(row.rate) == grid.rate[col], "rate" + cell);
            c.require(row.erratum == (d == 2 * grid.e), "erratum flag" + cell);
        }
    }
    c.require(idx == rows.size(), "row count");
}

void criterion_equidistance() {
    Criterion c("criterion 4: every pairwise oracle distance equals the formula", 60.0);
    auto f2 = Field::make(2);
    for (auto [e, d] : {std::pair<int, int>{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {2, 5}}) {
        auto code = build_code(sieve_irreducible(f2, 2, e), d, Family::irreducible,
                               CoprimePolicy::structural);
        int expect = theoretical_distance(2, d, e);
        uint64_t pairs = 0;
        for (size_t i = 0; i < code.size(); ++i)
            for (size_t j = i + 1; j < code.size(); ++j) {
                ++pairs;
                if (dist(code.codewords()[i], code.codewords()[j]) != expect) {
                    c.require(false, "pair (" + std::to_string(i) + "," + std::to_string(j) +
                                         ") at e = " + std::to_string(e) +
                                         ", d = " + std::to_string(d));
                    return;
                }
            }
        c.require(pairs == code.size() * (code.size() - 1) / 2, "pair sweep");
    }
}

void criterion_intersections() {
    Criterion c("criterion 5: pairwise intersections are spanned by the generator product");
    auto f2 = Field::make(2);
    for (auto [e, d] : {std::pair<int, int>{1, 2}, {1, 3}, {1, 4}, {2, 4}, {2, 5}}) {
        auto code = build_code(sieve_irreducible(f2, 2, e), d, Family::irreducible,
                               CoprimePolicy::structural);
        int expect_dim = static_cast<int>(binom_u64(2 + d - 2 * e, 2));
        for (size_t i = 0; i < code.size(); ++i)
            for (size_t j = i + 1; j < code.size(); ++j) {
                const Subspace& vi = code.codewords()[i];
                const Subspace& vj = code.codewords()[j];
                if (intersect_dim(vi, vj) != expect_dim) {
                    c.require(false, "intersection dimension at e = " + std::to_string(e) +
                                         ", d = " + std::to_string(d));
                    return;
                }
                auto product =
                    normalize(poly_mul(code.generators()[i].poly(), code.generators()[j].poly()));
                if (!(intersection(vi, vj) == build_codeword(product, d))) {
                    c.require(false, "intersection subspace at e = " + std::to_string(e) +
                                         ", d = " + std::to_string(d));
                    return;
                }
            }
    }
}

void criterion_factorization_identity() {
    Criterion c("criterion 6: every form factors uniquely over the partitions");
    for (auto [q, n, e_max] : {std::tuple<uint32_t, int, int>{2, 2, 5}, {3, 1, 6}}) {
        std::vector<BigUint> irr(e_max + 1);
        for (int s = 1; s <= e_max; ++s) irr[s] = count_irreducible(q, n, s);
        for (int e = 1; e <= e_max; ++e) {
            BigUint total(0);
            for_each_partition(e, e, [&](const std::vector<int>& mult) {
                BigUint term(1);
                for (int part = 1; part <= e; ++part)
                    if (mult[part] > 0) term *= multiset_count(irr[part], mult[part]);
                total += term;
            });
            c.require(total == count_normalized(q, n, e),
                      "identity at q = " + std::to_string(q) + ", n = " + std::to_string(n) +
                          ", e = " + std::to_string(e));
        }
    }
}

void criterion_linear_powers() {
    Criterion c("criterion 7: the line-power family keeps size 7 and stays equidistant");
    auto f2 = Field::make(2);
    for (int e = 1; e <= 5; ++e)
        c.require(linear_powers(f2, 2, e).size() == 7,
                  "family size at e = " + std::to_string(e));
    for (int d : {3, 4}) {
        auto code =
            build_code(linear_powers(f2, 2, 2), d, Family::linear, CoprimePolicy::structural);
        int expect = theoretical_distance(2, d, 2);
        for (size_t i = 0; i < code.size(); ++i)
            for (size_t j = i + 1; j < code.size(); ++j)
                if (dist(code.codewords()[i], code.codewords()[j]) != expect) {
                    c.require(false, "pair distance at d = " + std::to_string(d));
                    return;
                }
    }
}

void criterion_decoding() {
    Criterion c("criterion 8: half-distance decoding succeeds and the bound is sharp", 30.0);
    auto f2 = Field::make(2);
    auto code =
        build_code(sieve_irreducible(f2, 2, 1), 3, Family::irreducible, CoprimePolicy::structural);
    // D = 6: every corruption with rho + t <= 2 decodes to the sent index
    for (auto [rho, t] :
         {std::pair<int, int>{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}}) {
        SimulationReport rep = simulate(code, rho, t, 1000, 20260808);
        if (rep.unique_correct != 1000) {
            c.require(false, "failures below half distance at rho = " + std::to_string(rho) +
                                 ", t = " + std::to_string(t));
            return;
        }
    }
    // sharpness, deterministically: the 3-dimensional intersection of two
    // codewords is a rho = 3 erasure of either and decodes ambiguously
    Subspace mid = intersection(code.codewords()[0], code.codewords()[1]);
    c.require(mid.dim() == 3, "midpoint dimension");
    c.require(decode(code, mid).status == DecodeResult::Status::ambiguous,
              "midpoint did not tie");
    // and across seeded trials at rho + t = 3
    SimulationReport over = simulate(code, 0, 3, 200, 777);
    c.require(over.unique_wrong + over.ambiguous > 0,
              "no failure observed beyond half distance");
}

void criterion_metric_axioms() {
    Criterion c("criterion 9: metric axioms over 10000 random triples in F_2^10", 10.0);
    auto f2 = Field::make(2);
    SplitMix64 rng(0xC0DE);
    for (int trial = 0; trial < 10000; ++trial) {
        auto u = random_subspace(f2, 10, static_cast<int>(rng.below(7)), rng);
        auto v = random_subspace(f2, 10, static_cast<int>(rng.below(7)), rng);
        auto w = random_subspace(f2, 10, static_cast<int>(rng.below(7)), rng);
        int duv = dist(u, v), dvu = dist(v, u), dvw = dist(v, w), duw = dist(u, w);
        if (duv != dvu) {
            c.require(false, "symmetry");
            return;
        }
        if (duv < 0 || (duv == 0) != (u == v)) {
            c.require(false, "identity of indiscernibles");
            return;
        }
        if (duw > duv + dvw) {
            c.require(false, "triangle inequality");
            return;
        }
    }
}

void criterion_rates() {
    Criterion c("criterion 10: rate spot checks");
    auto p11 = code_params_from_counts(2, 2, 1, 1, count_irreducible(2, 2, 1));
    c.require(format3(p11.rate) == "0.936", "rate at e = 1, d = 1");
    auto p22 = code_params_from_counts(2, 2, 2, 2, count_irreducible(2, 2, 2));
    c.require(format3(p22.rate) == "0.855", "rate at e = 2, d = 2");
}

}  // namespace

int main() {
    criterion_cardinalities();
    criterion_sieve_agreement();
    criterion_table();
    criterion_equidistance();
    criterion_intersections();
    criterion_factorization_identity();
    criterion_linear_powers();
    criterion_decoding();
    criterion_metric_axioms();
    criterion_rates();
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
