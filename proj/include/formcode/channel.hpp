#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "formcode/codes.hpp"
#include "formcode/subspace.hpp"

namespace formcode {

/// RNG recorded in simulation output.
inline constexpr const char* kRngName = "splitmix64";

/// Operator-channel action on a transmitted codeword: drop `rho` dimensions,
/// adjoin `t` error dimensions. Deterministic in `seed`.
struct ChannelConfig {
    int rho = 0;
    int t = 0;
    uint64_t seed = 0;
};

/// Applies the channel: a uniformly random (l - rho)-dimensional subspace of
/// V (random invertible recombination of the basis, first rows kept), plus t
/// random vectors each rejected until it falls outside V + the running
/// result. The output U then satisfies dist(V, U) = rho + t exactly.
[[nodiscard]] Subspace corrupt(const Subspace& v, const ChannelConfig& cfg);

struct DecodeResult {
    enum class Status { unique, ambiguous };
    Status status = Status::unique;
    std::optional<size_t> index;  // set when status == unique
    int distance = 0;             // minimum distance achieved
    int margin = 0;               // D/2 - distance (formula D)
};

/// Exhaustive minimum-distance decoding of a received subspace.
[[nodiscard]] DecodeResult decode(const SubspaceCode& code, const Subspace& received);

struct SimulationReport {
    int e = 0, d = 0;
    uint32_t q = 0;
    int n = 0, rho = 0, t = 0;
    uint64_t trials = 0;
    uint64_t unique_correct = 0;
    uint64_t unique_wrong = 0;
    uint64_t ambiguous = 0;
    uint64_t seed = 0;
};

/// Runs `trials` corrupt-decode trials (transmitted codeword rotates through
/// the code; trial k is reproducible from (seed, k)). Each trial asserts
/// dist(sent, received) == rho + t via the oracle.
[[nodiscard]] SimulationReport simulate(const SubspaceCode& code, int rho, int t,
                                        uint64_t trials, uint64_t seed);

[[nodiscard]] std::string simulation_csv_header();
[[nodiscard]] std::string simulation_csv_row(const SimulationReport& r);

}  // namespace formcode
