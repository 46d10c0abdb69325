#include "k3/rational.hpp"

#include <cctype>

namespace k3 {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) fail(ErrorCode::kDivisionByZero, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

namespace {

bool parse_integer(std::string_view s, BigInt& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  if (i == s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  }
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return out.set_str(digits, 10) == 0;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto s = trim(text);
  auto slash = s.find('/');
  BigInt num;
  BigInt den = 1;
  bool ok;
  if (slash == std::string_view::npos) {
    ok = parse_integer(s, num);
  } else {
    ok = parse_integer(trim(s.substr(0, slash)), num) && parse_integer(trim(s.substr(slash + 1)), den);
  }
  if (!ok) fail(ErrorCode::kParse, "cannot parse rational from '" + std::string(text) + "'");
  if (den == 0) fail(ErrorCode::kParse, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

Rational Rational::inverse() const {
  if (is_zero()) fail(ErrorCode::kDivisionByZero, "inverse of zero rational");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
  return Rational(r);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorCode::kDivisionByZero, "rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

std::optional<BigInt> integer_sqrt_exact(const BigInt& n) {
  if (n < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  auto n = integer_sqrt_exact(q.numerator());
  auto d = integer_sqrt_exact(q.denominator());
  if (!n || !d) return std::nullopt;
  return Rational(*n, *d);
}

std::optional<Rational> rational_fourth_root(const Rational& q) {
  auto s = rational_sqrt(q);
  if (!s) return std::nullopt;
  return rational_sqrt(*s);
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace k3
