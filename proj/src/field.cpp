#include "brisk/field.hpp"

#include <cctype>

namespace brisk {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::int64_t p) {
  if (p < 5 || p >= (std::int64_t{1} << 31) || !is_prime(p))
    throw InputError("field prime must be an odd prime >= 5 and < 2^31, got " +
                     std::to_string(p));
  return FieldSpec{Kind::prime, p};
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "rational") return rational();
  std::string rest;
  if (text.rfind("prime:", 0) == 0)
    rest = text.substr(6);
  else if (text.rfind("prime ", 0) == 0)
    rest = text.substr(6);
  else
    throw InputError("unknown field '" + text + "', expected prime:<p> or rational");
  if (rest.empty() || rest.size() > 12)
    throw InputError("bad prime in field '" + text + "'");
  for (char c : rest)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw InputError("bad prime in field '" + text + "'");
  return prime(std::stoll(rest));
}

std::string FieldSpec::str() const {
  return kind == Kind::rational ? "rational" : "prime:" + std::to_string(p);
}

PrimeField::PrimeField(std::int64_t p) : p_(FieldSpec::prime(p).p) {}

PrimeField::Elt PrimeField::inv(Elt a) const {
  if (a == 0) throw InvariantViolation("division by zero in F_" + std::to_string(p_));
  // extended Euclid
  std::int64_t t = 0, nt = 1, r = p_, nr = a;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  return t < 0 ? t + p_ : t;
}

PrimeField::Elt PrimeField::from_rational(const mpq_class& q) const {
  mpz_class num = q.get_num() % p_;
  mpz_class den = q.get_den() % p_;
  if (den == 0) throw InputError("denominator vanishes modulo " + std::to_string(p_));
  Elt n = from_int(num.get_si());
  Elt d = from_int(den.get_si());
  return div(n, d);
}

RationalField::Elt RationalField::inv(const Elt& a) const {
  if (sgn(a) == 0) throw InvariantViolation("division by zero in Q");
  Elt r = 1 / a;
  r.canonicalize();
  return r;
}

}  // namespace brisk
