#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "modcat/exact/cycnum.hpp"

namespace modcat::exact {

/// Canonical text form of an exact value.
///
/// Roots of unity print as "1", "-1", "ζ_n" or "ζ_n^k"; elements of
/// Q(√3, i) as "a+b√3" with an optional "+(c+d√3)ζ_4" imaginary part;
/// real elements of Q(√2) as "a+b√2"; anything else falls back to the
/// coefficient list "[N: c0, c1, ...]". Every rendered string parses back to
/// the same value.
std::string render(const CycNum& value);

std::string render(const Rational& value);

/// Parse the text form above. Also accepts products by juxtaposition and
/// parentheses, e.g. "-(1+2ζ_4)(3+2√3)", and the ASCII spellings "sqrt3",
/// "zeta_12^5", "i".
CycNum parse_cycnum(std::string_view text);

/// If value is a root of unity, the reduced (n, k) with value = zeta_n^k.
std::optional<std::pair<int, int>> as_root_of_unity(const CycNum& value);

/// Coordinates (p, q, r, s) of value = p + q√3 + (r + s√3)i, when value lies
/// in Q(zeta_12).
std::optional<std::array<Rational, 4>> as_sqrt3_gaussian(const CycNum& value);

/// Coordinates (p, q) of value = p + q√2, when value is a real element of
/// Q(zeta_8).
std::optional<std::array<Rational, 2>> as_real_sqrt2(const CycNum& value);

}  // namespace modcat::exact
