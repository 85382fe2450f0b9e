#include "exroc/rational.hpp"

#include <cctype>
#include <ostream>

namespace exroc {

Rational::Rational(long num) : value_(num) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.sign() == 0) throw std::domain_error("rational: division by zero");
  return Rational::from_mpq(a.value_ / b.value_);
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad(std::string_view text) {
  throw std::invalid_argument("not a decimal number: '" + std::string(text) + "'");
}

BigInt pow10(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  if (s.empty()) bad(text);

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view n = s.substr(0, slash), d = s.substr(slash + 1);
    bool neg = !n.empty() && (n.front() == '-' || n.front() == '+');
    std::string_view ndigits = neg ? n.substr(1) : n;
    if (!all_digits(ndigits) || !all_digits(d)) bad(text);
    BigInt num(std::string(ndigits), 10), den(std::string(d), 10);
    if (den == 0) bad(text);
    if (n.front() == '-') num = -num;
    return Rational(num, den);
  }

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp = s.substr(e + 1);
    s = s.substr(0, e);
    bool eneg = false;
    if (!exp.empty() && (exp.front() == '+' || exp.front() == '-')) {
      eneg = exp.front() == '-';
      exp.remove_prefix(1);
    }
    if (!all_digits(exp) || exp.size() > 6) bad(text);
    exponent = std::stol(std::string(exp));
    if (eneg) exponent = -exponent;
  }

  std::string_view int_part = s, frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) bad(text);
  if (!int_part.empty() && !all_digits(int_part)) bad(text);
  if (!frac_part.empty() && !all_digits(frac_part)) bad(text);

  std::string digits = std::string(int_part) + std::string(frac_part);
  BigInt num(digits, 10);
  if (negative) num = -num;
  exponent -= static_cast<long>(frac_part.size());

  if (exponent >= 0) return Rational(num * pow10(static_cast<unsigned long>(exponent)), BigInt(1));
  return Rational(num, pow10(static_cast<unsigned long>(-exponent)));
}

std::string Rational::to_fraction_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal_string(int digits) const {
  if (digits < 1) throw std::invalid_argument("to_decimal_string: digits must be positive");
  if (sign() == 0) return "0";

  const BigInt num = abs(value_.get_num());
  const BigInt den = value_.get_den();

  // Decimal exponent e with 10^e <= |x| < 10^(e+1).
  long e = static_cast<long>(num.get_str().size()) - static_cast<long>(den.get_str().size());
  auto below = [&](long k) {  // |x| < 10^k
    return k >= 0 ? num < den * pow10(k) : num * pow10(-k) < den;
  };
  while (!below(e + 1)) ++e;
  while (below(e)) --e;

  auto scaled = [&](long shift) {  // round-half-up of |x| * 10^shift
    BigInt n = num, d = den;
    if (shift >= 0) n *= pow10(shift); else d *= pow10(-shift);
    BigInt q = (2 * n + d) / (2 * d);
    return q;
  };
  long shift = digits - 1 - e;
  BigInt mantissa = scaled(shift);
  if (mantissa >= pow10(digits)) {  // rounding carried into a new digit
    ++e;
    --shift;
    mantissa = scaled(shift);
  }

  std::string m = mantissa.get_str();
  std::string out = sign() < 0 ? "-" : "";
  if (e < 0) {
    out += "0.";
    out.append(static_cast<std::size_t>(-e - 1), '0');
    out += m;
  } else if (e + 1 >= digits) {
    out += m;
    out.append(static_cast<std::size_t>(e + 1 - digits), '0');
  } else {
    out += m.substr(0, static_cast<std::size_t>(e + 1));
    out += '.';
    out += m.substr(static_cast<std::size_t>(e + 1));
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_fraction_string(); }

}  // namespace exroc
