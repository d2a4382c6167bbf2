#include "modcat/fusion/quadratic.hpp"

#include <cmath>

#include "modcat/errors.hpp"
#include "modcat/exact/format.hpp"

namespace modcat::fusion {

namespace {

long long checked_add(long long x, long long y) {
  long long r = 0;
  if (__builtin_add_overflow(x, y, &r)) throw CapExceeded("quadratic integer overflow");
  return r;
}

long long checked_mul(long long x, long long y) {
  long long r = 0;
  if (__builtin_mul_overflow(x, y, &r)) throw CapExceeded("quadratic integer overflow");
  return r;
}

void same_field(const QuadraticInteger& x, const QuadraticInteger& y) {
  if (x.d != y.d) throw InvalidArgument("mixing Z[sqrt(" + std::to_string(x.d) + ")] and Z[sqrt(" + std::to_string(y.d) + ")]");
}

}  // namespace

QuadraticInteger QuadraticInteger::operator+(const QuadraticInteger& o) const {
  same_field(*this, o);
  return {checked_add(a, o.a), checked_add(b, o.b), d};
}

QuadraticInteger QuadraticInteger::operator-(const QuadraticInteger& o) const {
  same_field(*this, o);
  return {checked_add(a, -o.a), checked_add(b, -o.b), d};
}

QuadraticInteger QuadraticInteger::operator*(const QuadraticInteger& o) const {
  same_field(*this, o);
  const long long ra = checked_add(checked_mul(a, o.a), checked_mul(checked_mul(b, o.b), d));
  const long long rb = checked_add(checked_mul(a, o.b), checked_mul(b, o.a));
  return {ra, rb, d};
}

QuadraticInteger QuadraticInteger::operator*(long long s) const { return {checked_mul(a, s), checked_mul(b, s), d}; }

long long QuadraticInteger::norm() const { return checked_add(checked_mul(a, a), -checked_mul(checked_mul(b, b), d)); }

bool QuadraticInteger::is_nonnegative() const {
  if (a >= 0 && b >= 0) return true;
  if (a <= 0 && b <= 0) return a == 0 && b == 0;
  const long long a2 = checked_mul(a, a);
  const long long db2 = checked_mul(checked_mul(b, b), d);
  return a > 0 ? a2 >= db2 : db2 >= a2;
}

bool QuadraticInteger::divides(const QuadraticInteger& other) const {
  same_field(*this, other);
  const long long n = norm();
  if (n == 0) return other == QuadraticInteger{0, 0, d};
  const QuadraticInteger t = other * conjugate();
  return t.a % n == 0 && t.b % n == 0;
}

double QuadraticInteger::value() const { return static_cast<double>(a) + static_cast<double>(b) * std::sqrt(static_cast<double>(d)); }

std::string QuadraticInteger::str() const {
  const std::string rad = "√" + std::to_string(d);
  if (b == 0) return std::to_string(a);
  const long long ab = b < 0 ? -b : b;
  const std::string coef = ab == 1 ? "" : std::to_string(ab);
  if (a == 0) return (b < 0 ? "-" : "") + coef + rad;
  return std::to_string(a) + (b < 0 ? "-" : "+") + coef + rad;
}

bool lex_less(const QuadraticInteger& x, const QuadraticInteger& y) {
  return x.a != y.a ? x.a < y.a : x.b < y.b;
}

std::optional<QuadraticInteger> exact_quotient(const QuadraticInteger& other, const QuadraticInteger& divisor) {
  if (!divisor.divides(other)) return std::nullopt;
  const long long n = divisor.norm();
  if (n == 0) return std::nullopt;
  const QuadraticInteger t = other * divisor.conjugate();
  return QuadraticInteger{t.a / n, t.b / n, other.d};
}

std::optional<QuadraticInteger> exact_sqrt(const QuadraticInteger& x) {
  if (!x.is_totally_nonnegative()) return std::nullopt;
  const double root = std::sqrt(static_cast<double>(x.d));
  const double s = std::sqrt(x.value());
  const double t = std::sqrt(std::max(0.0, x.conjugate().value()));
  // The conjugate of the root is +t or -t.
  for (const double u : {t, -t}) {
    const QuadraticInteger r{std::llround((s + u) / 2), std::llround((s - u) / (2 * root)), x.d};
    if (r * r == x && r.is_nonnegative()) return r;
  }
  return std::nullopt;
}

std::optional<QuadraticInteger> to_quadratic(const exact::CycNum& value, int d) {
  auto integral = [](const exact::Rational& q) -> std::optional<long long> {
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) return std::nullopt;
    return q.get_num().get_si();
  };
  if (d == 3) {
    const auto c = exact::as_sqrt3_gaussian(value);
    if (!c || (*c)[2] != 0 || (*c)[3] != 0) return std::nullopt;
    const auto a = integral((*c)[0]), b = integral((*c)[1]);
    if (!a || !b) return std::nullopt;
    return QuadraticInteger{*a, *b, 3};
  }
  if (d == 2) {
    const auto c = exact::as_real_sqrt2(value);
    if (!c) return std::nullopt;
    const auto a = integral((*c)[0]), b = integral((*c)[1]);
    if (!a || !b) return std::nullopt;
    return QuadraticInteger{*a, *b, 2};
  }
  throw InvalidArgument("only Z[sqrt(2)] and Z[sqrt(3)] are supported");
}

}  // namespace modcat::fusion
