#include "modcat/exact/format.hpp"

#include <cctype>
#include <sstream>

#include "modcat/errors.hpp"

namespace modcat::exact {

namespace {

std::optional<CycNum> view_at(const CycNum& value, int order) {
  const long long l = lcm_ll(value.order(), order);
  if (l > kMaxOrder) return std::nullopt;
  return value.lifted(static_cast<int>(l)).restricted(order);
}

// p + q*radical, e.g. "3+2√3", "-√3", "1/2".
std::string render_quadratic(const Rational& p, const Rational& q, const std::string& radical) {
  if (q == 0) return render(p);
  std::string coef;
  const Rational aq = abs(q);
  if (aq != 1) coef = render(aq);
  if (p == 0) return (q < 0 ? "-" : "") + coef + radical;
  return render(p) + (q < 0 ? "-" : "+") + coef + radical;
}

bool is_single_term(const Rational& p, const Rational& q) { return p == 0 || q == 0; }

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  CycNum parse() {
    CycNum v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(std::string_view token) {
    skip_ws();
    if (s_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  bool at_digit() {
    skip_ws();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  long long integer() {
    if (!at_digit()) fail("expected digits");
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > (1LL << 50)) fail("integer literal too large");
      ++pos_;
    }
    return v;
  }

  BigInt big_integer() {
    if (!at_digit()) fail("expected digits");
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return BigInt(std::string(s_.substr(start, pos_ - start)));
  }

  Rational signed_rational() {
    bool neg = eat("-");
    BigInt num = big_integer();
    BigInt den = 1;
    if (eat("/")) den = big_integer();
    if (den == 0) fail("zero denominator");
    Rational q(neg ? BigInt(-num) : num, den);
    q.canonicalize();
    return q;
  }

  bool at_factor_start() {
    skip_ws();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == '[' || c == '*') return true;
    const std::string_view rest = s_.substr(pos_);
    return rest.starts_with("√") || rest.starts_with("ζ") || rest.starts_with("sqrt") || rest.starts_with("zeta") ||
           rest.starts_with("i") || rest.starts_with("·");
  }

  CycNum expr() {
    CycNum acc;
    bool first = true;
    while (true) {
      bool neg = false;
      if (eat("+")) {
      } else if (eat("-")) {
        neg = true;
      } else if (!first) {
        break;
      }
      CycNum t = term();
      acc += neg ? -t : t;
      first = false;
    }
    return acc;
  }

  CycNum term() {
    CycNum acc = factor();
    while (at_factor_start()) {
      if (!eat("*")) eat("·");
      acc *= factor();
    }
    return acc;
  }

  CycNum factor() {
    skip_ws();
    if (eat("(")) {
      CycNum v = expr();
      if (!eat(")")) fail("expected ')'");
      return v;
    }
    if (eat("[")) {
      const long long order = integer();
      if (!eat(":")) fail("expected ':'");
      std::vector<Rational> coeffs;
      do {
        coeffs.push_back(signed_rational());
      } while (eat(","));
      if (!eat("]")) fail("expected ']'");
      return CycNum::from_coeffs(static_cast<int>(order), coeffs);
    }
    if (eat("√") || eat("sqrt")) {
      const long long d = integer();
      if (d == 2) return sqrt2();
      if (d == 3) return sqrt3();
      fail("only √2 and √3 are supported");
    }
    if (eat("ζ_") || eat("zeta_")) {
      const long long n = integer();
      long long k = 1;
      if (eat("^")) {
        const bool neg = eat("-");
        k = integer();
        if (neg) k = -k;
      }
      return CycNum::root_of_unity(static_cast<int>(n), k);
    }
    if (eat("i")) return CycNum::root_of_unity(4, 1);
    if (at_digit()) {
      BigInt num = big_integer();
      BigInt den = 1;
      if (eat("/")) den = big_integer();
      if (den == 0) fail("zero denominator");
      Rational q(num, den);
      q.canonicalize();
      return CycNum(q);
    }
    fail("expected a factor");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string render(const Rational& value) { return value.get_str(); }

std::optional<std::pair<int, int>> as_root_of_unity(const CycNum& value) {
  if (value.is_zero()) return std::nullopt;
  if (!(value * value.conj() == CycNum(1))) return std::nullopt;
  const int n = value.order();
  for (int j = 0; j < n; ++j) {
    const CycNum z = CycNum::root_of_unity(n, j);
    int big_n = 0;
    long long big_k = 0;
    if (value == z) {
      big_n = n;
      big_k = j;
    } else if (value == -z) {
      big_n = 2 * n;
      big_k = 2LL * j + n;
    } else {
      continue;
    }
    big_k %= big_n;
    const long long g = gcd_ll(big_k, big_n);
    if (big_k == 0) return std::pair<int, int>{1, 0};
    return std::pair<int, int>{static_cast<int>(big_n / g), static_cast<int>(big_k / g)};
  }
  return std::nullopt;
}

std::optional<std::array<Rational, 4>> as_sqrt3_gaussian(const CycNum& value) {
  const auto v = view_at(value, 12);
  if (!v) return std::nullopt;
  const auto c = v->coeffs();
  // p + q√3 + (r + s√3)i = (p - s) + 2q z + 2s z^2 + (r - q) z^3 with z = zeta_12.
  const Rational s = c[2] / 2;
  const Rational q = c[1] / 2;
  return std::array<Rational, 4>{Rational(c[0] + s), q, Rational(c[3] + q), s};
}

std::optional<std::array<Rational, 2>> as_real_sqrt2(const CycNum& value) {
  const auto v = view_at(value, 8);
  if (!v) return std::nullopt;
  const auto c = v->coeffs();
  // p + q√2 + (r + s√2)i = p + (q + s) z + r z^2 + (s - q) z^3 with z = zeta_8.
  const Rational q = (c[1] - c[3]) / 2;
  const Rational s = (c[1] + c[3]) / 2;
  if (c[2] != 0 || s != 0) return std::nullopt;
  return std::array<Rational, 2>{c[0], q};
}

std::string render(const CycNum& value) {
  if (value.is_zero()) return "0";
  if (auto q = value.as_rational()) return render(*q);
  if (auto root = as_root_of_unity(value)) {
    const auto [n, k] = *root;
    if (n == 2) return "-1";
    return "ζ_" + std::to_string(n) + (k == 1 ? "" : "^" + std::to_string(k));
  }
  if (auto g = as_sqrt3_gaussian(value)) {
    const auto& [p, q, r, s] = *g;
    const std::string real = render_quadratic(p, q, "√3");
    if (r == 0 && s == 0) return real;
    std::string imag;
    if (r == 1 && s == 0) {
      imag = "ζ_4";
    } else if (r == -1 && s == 0) {
      imag = "-ζ_4";
    } else if (is_single_term(r, s)) {
      imag = render_quadratic(r, s, "√3") + "ζ_4";
    } else {
      imag = "(" + render_quadratic(r, s, "√3") + ")ζ_4";
    }
    if (p == 0 && q == 0) return imag;
    return real + (imag.starts_with("-") ? "" : "+") + imag;
  }
  if (auto r2 = as_real_sqrt2(value)) return render_quadratic((*r2)[0], (*r2)[1], "√2");
  return value.debug_string();
}

CycNum parse_cycnum(std::string_view text) { return Parser(text).parse(); }

}  // namespace modcat::exact
