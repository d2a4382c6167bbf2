#include "modcat/exact/cycnum.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "modcat/errors.hpp"

namespace modcat::exact {

namespace {

struct OrderTable {
  int order = 1;
  int phi = 1;
  std::vector<long long> poly;                 // Phi_order, constant term first
  std::vector<std::vector<long long>> powers;  // zeta^j in the power basis, 0 <= j < order
};

std::vector<long long> poly_divide_exact(std::vector<long long> num, const std::vector<long long>& den) {
  // den is monic; num is divisible by den.
  const std::size_t dn = den.size() - 1;
  std::vector<long long> quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const long long c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return quot;
}

std::array<OrderTable, kMaxOrder + 1> build_tables() {
  std::array<OrderTable, kMaxOrder + 1> tables;
  for (int n = 1; n <= kMaxOrder; ++n) {
    OrderTable& t = tables[n];
    t.order = n;
    std::vector<long long> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d) {
      if (n % d == 0) p = poly_divide_exact(p, tables[d].poly);
    }
    t.poly = p;
    t.phi = static_cast<int>(p.size()) - 1;
    t.powers.assign(n, std::vector<long long>(t.phi, 0));
    t.powers[0][0] = 1;
    for (int j = 1; j < n; ++j) {
      // zeta^j = zeta * zeta^(j-1), then fold the overflow with x^phi = -sum p_i x^i.
      const auto& prev = t.powers[j - 1];
      auto& cur = t.powers[j];
      const long long top = prev[t.phi - 1];
      for (int i = t.phi - 1; i >= 1; --i) cur[i] = prev[i - 1];
      cur[0] = 0;
      if (top != 0) {
        for (int i = 0; i < t.phi; ++i) cur[i] -= top * t.poly[i];
      }
    }
  }
  return tables;
}

const OrderTable& table(int n) {
  static const std::array<OrderTable, kMaxOrder + 1> tables = build_tables();
  if (n < 1) throw InvalidArgument("cyclotomic order must be positive, got " + std::to_string(n));
  if (n > kMaxOrder) throw CapExceeded("cyclotomic order " + std::to_string(n) + " exceeds cap " + std::to_string(kMaxOrder));
  return tables[n];
}

int common_order(int a, int b) {
  const long long l = lcm_ll(a, b);
  if (l > kMaxOrder) {
    throw CapExceeded("lcm of orders " + std::to_string(a) + " and " + std::to_string(b) + " is " + std::to_string(l));
  }
  return static_cast<int>(l);
}

long long mod(long long a, long long n) {
  const long long r = a % n;
  return r < 0 ? r + n : r;
}

// Accumulate c * zeta^e (exponent already reduced mod the order) into out.
void add_power(std::vector<BigInt>& out, const OrderTable& t, long long e, const BigInt& c) {
  if (c == 0) return;
  const auto& rep = t.powers[e];
  for (int i = 0; i < t.phi; ++i) {
    if (rep[i] == 0) continue;
    if (rep[i] > 0) {
      mpz_addmul_ui(out[i].get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(rep[i]));
    } else {
      mpz_submul_ui(out[i].get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(-rep[i]));
    }
  }
}

// Solve A x = b exactly; A is rows x cols. Returns nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                                                 std::size_t cols) {
  const std::size_t rows = a.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (b[i] != 0) return std::nullopt;
  }
  std::vector<Rational> x(cols, 0);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

}  // namespace

int euler_phi(int n) { return table(n).phi; }

long long gcd_ll(long long a, long long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    const long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long long lcm_ll(long long a, long long b) { return a / gcd_ll(a, b) * b; }

const std::vector<long long>& cyclotomic_polynomial(int n) { return table(n).poly; }

CycNum::CycNum() : order_(1), num_(1, 0), den_(1) {}

CycNum::CycNum(long long value) : order_(1), num_(1, BigInt(static_cast<long>(value))), den_(1) {}

CycNum::CycNum(const Rational& value) : order_(1), num_(1, value.get_num()), den_(value.get_den()) {}

CycNum::CycNum(int order, std::vector<BigInt> num, BigInt den)
    : order_(order), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

CycNum CycNum::from_coeffs(int order, const std::vector<Rational>& coeffs) {
  const OrderTable& t = table(order);
  if (static_cast<int>(coeffs.size()) != t.phi) {
    throw InvalidArgument("order " + std::to_string(order) + " needs " + std::to_string(t.phi) + " coefficients, got " +
                          std::to_string(coeffs.size()));
  }
  BigInt den = 1;
  for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> num(t.phi);
  for (int i = 0; i < t.phi; ++i) num[i] = coeffs[i].get_num() * (den / coeffs[i].get_den());
  return CycNum(order, std::move(num), std::move(den));
}

CycNum CycNum::root_of_unity(int n, long long k) {
  const OrderTable& t = table(n);
  std::vector<BigInt> num(t.phi, 0);
  add_power(num, t, mod(k, n), BigInt(1));
  return CycNum(n, std::move(num), BigInt(1));
}

void CycNum::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  BigInt g = den_;
  bool all_zero = true;
  for (const auto& c : num_) {
    if (c == 0) continue;
    all_zero = false;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  if (all_zero) {
    den_ = 1;
    return;
  }
  if (g != 1) {
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

std::vector<Rational> CycNum::coeffs() const {
  std::vector<Rational> out;
  out.reserve(num_.size());
  for (const auto& c : num_) {
    Rational q(c, den_);
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

Rational CycNum::coeff(std::size_t i) const {
  Rational q(num_.at(i), den_);
  q.canonicalize();
  return q;
}

bool CycNum::is_zero() const noexcept {
  for (const auto& c : num_) {
    if (c != 0) return false;
  }
  return true;
}

std::optional<Rational> CycNum::as_rational() const {
  for (std::size_t i = 1; i < num_.size(); ++i) {
    if (num_[i] != 0) return std::nullopt;
  }
  return coeff(0);
}

std::optional<long long> CycNum::as_nonnegative_integer() const {
  const auto q = as_rational();
  if (!q || q->get_den() != 1 || q->get_num() < 0 || !q->get_num().fits_slong_p()) return std::nullopt;
  return q->get_num().get_si();
}

// Numerators lifted to `order` and multiplied by `factor`.
std::vector<BigInt> CycNum::scaled_to(int order, const BigInt& factor) const {
  if (order == order_) {
    std::vector<BigInt> out(num_);
    if (factor != 1) {
      for (auto& c : out) c *= factor;
    }
    return out;
  }
  const OrderTable& t = table(order);
  const long long step = order / order_;
  std::vector<BigInt> out(t.phi, 0);
  BigInt scaled;
  for (std::size_t j = 0; j < num_.size(); ++j) {
    if (num_[j] == 0) continue;
    scaled = num_[j] * factor;
    add_power(out, t, mod(static_cast<long long>(j) * step, order), scaled);
  }
  return out;
}

CycNum CycNum::operator-() const {
  CycNum out(*this);
  for (auto& c : out.num_) c = -c;
  return out;
}

CycNum& CycNum::operator+=(const CycNum& other) {
  const int n = common_order(order_, other.order_);
  BigInt den;
  mpz_lcm(den.get_mpz_t(), den_.get_mpz_t(), other.den_.get_mpz_t());
  auto a = scaled_to(n, den / den_);
  const auto b = other.scaled_to(n, den / other.den_);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  *this = CycNum(n, std::move(a), std::move(den));
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& other) { return *this += -other; }

CycNum& CycNum::operator*=(const CycNum& other) {
  const int n = common_order(order_, other.order_);
  const OrderTable& t = table(n);
  const auto a = scaled_to(n, BigInt(1));
  const auto b = other.scaled_to(n, BigInt(1));
  std::vector<BigInt> prod(2 * t.phi - 1, 0);
  for (int i = 0; i < t.phi; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < t.phi; ++j) {
      if (b[j] == 0) continue;
      mpz_addmul(prod[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  std::vector<BigInt> out(t.phi, 0);
  for (std::size_t e = 0; e < prod.size(); ++e) add_power(out, t, static_cast<long long>(e) % n, prod[e]);
  *this = CycNum(n, std::move(out), den_ * other.den_);
  return *this;
}

CycNum& CycNum::operator/=(const CycNum& other) { return *this *= other.inverse(); }

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.order_ == b.order_) return a.den_ == b.den_ && a.num_ == b.num_;
  const int n = common_order(a.order_, b.order_);
  return a.scaled_to(n, b.den_) == b.scaled_to(n, a.den_);
}

CycNum CycNum::galois(long long j) const {
  const long long jm = mod(j, order_);
  if (gcd_ll(jm, order_) != 1 && order_ > 1) {
    throw BadAutomorphism("exponent " + std::to_string(j) + " is not a unit mod " + std::to_string(order_));
  }
  if (jm == 1 || order_ <= 2) return *this;
  const OrderTable& t = table(order_);
  std::vector<BigInt> out(t.phi, 0);
  for (std::size_t i = 0; i < num_.size(); ++i) add_power(out, t, mod(static_cast<long long>(i) * jm, order_), num_[i]);
  return CycNum(order_, std::move(out), den_);
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw ZeroDivision("inverse of zero");
  if (auto q = as_rational()) return CycNum(Rational(1 / *q));
  CycNum conjugates(1);
  for (int j = 2; j < order_; ++j) {
    if (gcd_ll(j, order_) == 1) conjugates *= galois(j);
  }
  const auto norm = (*this * conjugates).as_rational();
  if (!norm) throw ConsistencyError("field norm of " + debug_string() + " is not rational");
  return conjugates * CycNum(Rational(1 / *norm));
}

CycNum CycNum::lifted(int m) const {
  if (m % order_ != 0) {
    throw InvalidArgument("cannot lift order " + std::to_string(order_) + " to " + std::to_string(m));
  }
  return CycNum(m, scaled_to(m, BigInt(1)), den_);
}

std::optional<CycNum> CycNum::restricted(int m) const {
  if (order_ % m != 0) {
    throw InvalidArgument("cannot restrict order " + std::to_string(order_) + " to " + std::to_string(m));
  }
  if (m == order_) return *this;
  const OrderTable& big = table(order_);
  const OrderTable& small = table(m);
  const long long step = order_ / m;
  std::vector<std::vector<Rational>> a(big.phi, std::vector<Rational>(small.phi, 0));
  for (int c = 0; c < small.phi; ++c) {
    const auto& rep = big.powers[mod(c * step, order_)];
    for (int r = 0; r < big.phi; ++r) a[r][c] = Rational(static_cast<long>(rep[r]));
  }
  auto x = solve_exact(std::move(a), coeffs(), small.phi);
  if (!x) return std::nullopt;
  return from_coeffs(m, *x);
}

CycNum CycNum::minimized() const {
  if (auto q = as_rational()) return CycNum(*q);
  for (int m = 2; m < order_; ++m) {
    if (order_ % m != 0) continue;
    if (auto r = restricted(m)) return *r;
  }
  return *this;
}

std::complex<double> CycNum::embed() const {
  std::complex<double> acc(0.0, 0.0);
  const double den = den_.get_d();
  for (std::size_t j = 0; j < num_.size(); ++j) {
    if (num_[j] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / order_;
    acc += (num_[j].get_d() / den) * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return acc;
}

std::string CycNum::debug_string() const {
  std::ostringstream os;
  os << "[" << order_ << ":";
  for (std::size_t i = 0; i < num_.size(); ++i) os << (i ? ", " : " ") << coeff(i).get_str();
  os << "]";
  return os.str();
}

CycNum sin_pi(long long a, long long b) {
  if (b == 0) throw ZeroDivision("sin_pi with zero denominator");
  const int n2 = static_cast<int>(2 * (b < 0 ? -b : b));
  const long long aa = b < 0 ? -a : a;
  const CycNum diff = CycNum::root_of_unity(n2, aa) - CycNum::root_of_unity(n2, -aa);
  return diff * (-CycNum::root_of_unity(4, 1)) * CycNum(Rational(1, 2));
}

CycNum sqrt2() { return CycNum::root_of_unity(8, 1) + CycNum::root_of_unity(8, -1); }

CycNum sqrt3() { return CycNum::root_of_unity(12, 1) + CycNum::root_of_unity(12, -1); }

CycNum quadratic(const Rational& a, const Rational& b, int d) {
  switch (d) {
    case 1:
      return CycNum(Rational(a + b));
    case 2:
      return CycNum(a) + CycNum(b) * sqrt2();
    case 3:
      return CycNum(a) + CycNum(b) * sqrt3();
    default:
      throw InvalidArgument("quadratic(): unsupported radicand " + std::to_string(d));
  }
}

int real_sign(const CycNum& a) {
  if (a.is_zero()) return 0;
  return a.embed().real() > 0 ? 1 : -1;
}

}  // namespace modcat::exact
