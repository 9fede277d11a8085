#include "hkg/field.hpp"

#include <cctype>

namespace hkg {

namespace {

bool is_integer_literal(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer parse_integer(const std::string& s) {
  if (!is_integer_literal(s)) throw std::invalid_argument("not an integer: '" + s + "'");
  return Integer(s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

RationalField::Elem RationalField::parse(const std::string& s) const {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Elem(parse_integer(s));
  const Integer num = parse_integer(s.substr(0, slash));
  const Integer den = parse_integer(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  return Elem(num, den);
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 2 || p >= (1u << 31)) throw std::invalid_argument("PrimeField: p = " + std::to_string(p) + " out of range");
  for (std::uint32_t d = 2; std::uint64_t(d) * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not prime");
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("division by zero in F_" + std::to_string(p_));
  // a^(p-2)
  std::uint64_t r = 1, b = a, e = p_ - 2;
  while (e) {
    if (e & 1) r = r * b % p_;
    b = b * b % p_;
    e >>= 1;
  }
  return static_cast<Elem>(r);
}

PrimeField::Elem PrimeField::parse(const std::string& s) const {
  const Integer v = parse_integer(s);
  Integer r = v % p_;
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

}  // namespace hkg
