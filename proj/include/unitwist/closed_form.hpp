#pragma once

/**
 * @file closed_form.hpp
 * @brief Randomized checks of explicit Φ formulas against matrix products.
 *
 * Each case draws the free coordinates of x₊ and x₋ from F_p, forms
 * Φ(x₊x₋) = x₊x₋x₊^{-1} with phi_apply and compares it entry by entry with a
 * transcribed polynomial display. The per-cell cases additionally compare
 * x₊x₋ with the cell's normal form, check x ∈ ẇB₊, check the image in the
 * (X, Y, Z, A, B, C, D) coordinates and the cell's defining equation.
 * Samples hitting a zero denominator are redrawn and counted.
 */

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "unitwist/report.hpp"

namespace unitwist {

enum class ClosedFormCase { SL2Gen, SL2W0, SL3Gen, SL3TS, SL3ST, SL3W0, SP4Gen, SP4STS };

std::string to_string(ClosedFormCase c);
/// Accepts the to_string names ("SL3-ts", ...), case-insensitively. Throws InvalidArgument.
ClosedFormCase parse_closed_form_case(std::string_view name);
std::vector<ClosedFormCase> all_closed_form_cases();

/// lhs = samples with every comparison matching, rhs = samples drawn.
CountReport closed_form_check(ClosedFormCase c, std::uint32_t p, int samples, std::uint64_t seed);

}  // namespace unitwist
