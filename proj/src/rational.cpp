#include "exactdual/rational.hpp"

#include <cctype>
#include <ostream>

namespace exactdual {

Rat Rat::make(Integer n, Integer d) {
  if (d == 0) {
    return {};
  }
  Rat r(Raw{}, std::move(n), std::move(d));
  r.normalize();
  return r;
}

void Rat::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  Integer g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (g != 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

Integer parse_integer(std::string_view s, bool allow_sign, std::string_view whole) {
  std::string digits(s);
  std::size_t start = 0;
  if (allow_sign && !digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
    start = 1;
  }
  if (start == digits.size()) {
    throw std::invalid_argument("bad rational literal '" + std::string(whole) + "'");
  }
  for (std::size_t i = start; i < digits.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
      throw std::invalid_argument("bad rational literal '" + std::string(whole) + "'");
    }
  }
  if (digits[0] == '+') {
    digits.erase(0, 1);
  }
  return Integer(digits, 10);
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    return Rat(parse_integer(s, true, text));
  }
  Integer n = parse_integer(trim(s.substr(0, slash)), true, text);
  Integer d = parse_integer(trim(s.substr(slash + 1)), false, text);
  if (d == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  return make(std::move(n), std::move(d));
}

Rat Rat::inverse() const {
  if (num_ == 0) {
    return {};
  }
  return make(den_, num_);
}

Rat Rat::pow(unsigned long exponent) const {
  // Componentwise: (n/d)^k = n^k / d^k, already coprime.
  Integer n;
  Integer d;
  mpz_pow_ui(n.get_mpz_t(), num_.get_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), den_.get_mpz_t(), exponent);
  return {Raw{}, std::move(n), std::move(d)};
}

Rat Rat::abs() const { return {Raw{}, num_ < 0 ? Integer(-num_) : num_, den_}; }

std::string Rat::str() const {
  if (den_ == 1) {
    return num_.get_str();
  }
  return num_.get_str() + "/" + den_.get_str();
}

std::string Rat::to_decimal(int digits) const {
  if (digits < 0) {
    digits = 0;
  }
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Integer magnitude = (num_ < 0 ? Integer(-num_) : num_) * scale;
  // round half away from zero: floor((2|n|*scale + den) / (2 den))
  Integer scaled = (2 * magnitude + den_) / (2 * den_);
  std::string body = scaled.get_str();
  if (static_cast<int>(body.size()) <= digits) {
    body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
  }
  std::string out;
  if (num_ < 0 && scaled != 0) {
    out = "-";
  }
  out += body.substr(0, body.size() - static_cast<std::size_t>(digits));
  if (digits > 0) {
    out += "." + body.substr(body.size() - static_cast<std::size_t>(digits));
  }
  return out;
}

double Rat::to_double() const {
  mpq_class q(num_, den_);
  return q.get_d();
}

Rat& Rat::operator+=(const Rat& other) {
  if (den_ == 1 && other.den_ == 1) {
    num_ += other.num_;
    return *this;
  }
  num_ = num_ * other.den_ + other.num_ * den_;
  den_ *= other.den_;
  normalize();
  return *this;
}

Rat& Rat::operator-=(const Rat& other) {
  if (den_ == 1 && other.den_ == 1) {
    num_ -= other.num_;
    return *this;
  }
  num_ = num_ * other.den_ - other.num_ * den_;
  den_ *= other.den_;
  normalize();
  return *this;
}

Rat& Rat::operator*=(const Rat& other) {
  num_ *= other.num_;
  den_ *= other.den_;
  normalize();
  return *this;
}

Rat& Rat::operator/=(const Rat& other) { return *this *= other.inverse(); }

Rat operator-(const Rat& a) { return {Rat::Raw{}, -a.num_, a.den_}; }

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
  if (a.den_ == b.den_) {
    const int c = cmp(a.num_, b.num_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  const int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace exactdual
