#pragma once

#include <optional>
#include <string>

#include "modcat/exact/cycnum.hpp"

namespace modcat::fusion {

/// a + b*sqrt(d) with machine integers; overflow throws.
struct QuadraticInteger {
  long long a = 0;
  long long b = 0;
  int d = 3;

  QuadraticInteger operator+(const QuadraticInteger& o) const;
  QuadraticInteger operator-(const QuadraticInteger& o) const;
  QuadraticInteger operator*(const QuadraticInteger& o) const;
  QuadraticInteger operator*(long long s) const;
  friend bool operator==(const QuadraticInteger&, const QuadraticInteger&) = default;

  /// Galois conjugate a - b*sqrt(d).
  QuadraticInteger conjugate() const { return {a, -b, d}; }
  long long norm() const;
  /// Exact test of a + b*sqrt(d) >= 0.
  bool is_nonnegative() const;
  /// Both real embeddings nonnegative.
  bool is_totally_nonnegative() const { return is_nonnegative() && conjugate().is_nonnegative(); }
  /// True iff this divides `other` in Z[sqrt(d)].
  bool divides(const QuadraticInteger& other) const;
  double value() const;
  exact::CycNum to_cycnum() const { return exact::quadratic(exact::Rational(static_cast<long>(a)), exact::Rational(static_cast<long>(b)), d); }
  std::string str() const;
};

/// Lexicographic on (a, b); used only for canonical ordering.
bool lex_less(const QuadraticInteger& x, const QuadraticInteger& y);

/// other / divisor when the quotient lies in Z[sqrt(d)].
std::optional<QuadraticInteger> exact_quotient(const QuadraticInteger& other, const QuadraticInteger& divisor);

/// The nonnegative square root, when x is the square of an element of
/// Z[sqrt(d)].
std::optional<QuadraticInteger> exact_sqrt(const QuadraticInteger& x);

/// Coordinates of a real element of Z[sqrt(d)], d in {2, 3}.
std::optional<QuadraticInteger> to_quadratic(const exact::CycNum& value, int d);

}  // namespace modcat::fusion
