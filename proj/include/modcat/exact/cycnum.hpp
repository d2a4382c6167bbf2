#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace modcat::exact {

/// Exact rational in lowest terms with positive denominator.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Largest cyclotomic order the arithmetic will build. Anything beyond
/// raises CapExceeded.
inline constexpr int kMaxOrder = 72;

int euler_phi(int n);
long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long long>& cyclotomic_polynomial(int n);

/// An element of Q(zeta_N) in the reduced power basis
/// {1, z, ..., z^(phi(N)-1)} modulo Phi_N.
///
/// Coefficients are kept as integer numerators over one shared positive
/// denominator, normalised so the content of the numerators is coprime to
/// the denominator. Two values of the same order are equal iff their
/// coefficient lists agree; values of different orders are compared after
/// lifting both to the lcm of the orders.
class CycNum {
 public:
  CycNum();
  CycNum(long long value);  // NOLINT(google-explicit-constructor)
  explicit CycNum(const Rational& value);

  /// Build from power-basis coefficients; `coeffs.size()` must be phi(order).
  static CycNum from_coeffs(int order, const std::vector<Rational>& coeffs);

  /// zeta_n^k, stored at order n.
  static CycNum root_of_unity(int n, long long k);

  int order() const noexcept { return order_; }
  std::vector<Rational> coeffs() const;
  Rational coeff(std::size_t i) const;

  bool is_zero() const noexcept;
  std::optional<Rational> as_rational() const;
  /// Nonnegative integer value, if this element is one.
  std::optional<long long> as_nonnegative_integer() const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& other);
  CycNum& operator-=(const CycNum& other);
  CycNum& operator*=(const CycNum& other);
  CycNum& operator/=(const CycNum& other);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  friend bool operator==(const CycNum& a, const CycNum& b);

  /// Multiplicative inverse: product of the nontrivial Galois conjugates
  /// divided by the field norm. Throws ZeroDivision on zero.
  CycNum inverse() const;

  /// Ring automorphism zeta_N -> zeta_N^j; j must be a unit mod N.
  CycNum galois(long long j) const;
  CycNum conj() const { return galois(order_ - 1); }

  /// Same value represented at order m (order() must divide m).
  CycNum lifted(int m) const;
  /// Same value at order m when it lies in Q(zeta_m); m must divide order().
  std::optional<CycNum> restricted(int m) const;
  /// Same value at the smallest order whose field contains it.
  CycNum minimized() const;

  std::complex<double> embed() const;

  /// Coefficients written out, e.g. "[12: 3, 2, 0, -1]".
  std::string debug_string() const;

 private:
  CycNum(int order, std::vector<BigInt> num, BigInt den);
  void normalize();
  std::vector<BigInt> scaled_to(int order, const BigInt& factor) const;

  int order_ = 1;
  std::vector<BigInt> num_;
  BigInt den_ = 1;
};

inline CycNum root_of_unity(int n, long long k) { return CycNum::root_of_unity(n, k); }
inline CycNum inverse(const CycNum& a) { return a.inverse(); }
inline CycNum galois(const CycNum& a, long long j) { return a.galois(j); }
inline std::complex<double> embed(const CycNum& a) { return a.embed(); }

/// sin(pi * a / b) built as (z^a - z^-a) * (-zeta_4) / 2 with z = zeta_{2b}.
CycNum sin_pi(long long a, long long b);
/// sqrt(2) = zeta_8 + zeta_8^-1.
CycNum sqrt2();
/// sqrt(3) = zeta_12 + zeta_12^-1.
CycNum sqrt3();
/// a + b*sqrt(d) for d in {1, 2, 3}.
CycNum quadratic(const Rational& a, const Rational& b, int d);

/// Sign of a totally real value via its float embedding.
int real_sign(const CycNum& a);

}  // namespace modcat::exact
