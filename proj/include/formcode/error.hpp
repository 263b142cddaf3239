#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace formcode {

/// Domain error with a stable machine-readable slug (used verbatim by the CLI).
class Error : public std::runtime_error {
public:
    Error(std::string slug, const std::string& message)
        : std::runtime_error(slug + ": " + message), slug_(std::move(slug)) {}

    [[nodiscard]] const std::string& slug() const noexcept { return slug_; }

private:
    std::string slug_;
};

namespace errs {
inline constexpr const char* invalid_field = "invalid_field";
inline constexpr const char* reducible_modulus = "reducible_modulus";
inline constexpr const char* mixed_fields = "mixed_fields";
inline constexpr const char* division_by_zero = "division_by_zero";
inline constexpr const char* zero_polynomial = "zero_polynomial";
inline constexpr const char* degree_mismatch = "degree_mismatch";
inline constexpr const char* shape_mismatch = "shape_mismatch";
inline constexpr const char* out_of_range = "out_of_range";
inline constexpr const char* capacity_exceeded = "capacity_exceeded";
inline constexpr const char* budget_exceeded = "budget_exceeded";
inline constexpr const char* mixed_parameters = "mixed_parameters";
inline constexpr const char* non_coprime_family = "non_coprime_family";
inline constexpr const char* empty_family = "empty_family";
inline constexpr const char* verify_failed = "verify_failed";
inline constexpr const char* ambient_mismatch = "ambient_mismatch";
inline constexpr const char* rank_deficient = "rank_deficient";
inline constexpr const char* infeasible_channel = "infeasible_channel";
inline constexpr const char* parse_error = "parse_error";
inline constexpr const char* io_error = "io_error";
}  // namespace errs

}  // namespace formcode
