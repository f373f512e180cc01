#include "sturmian/numeric.hpp"

#include <cctype>

namespace sturmian {

Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Integer ipow(const Integer& base, const Integer& exp) {
  if (exp < 0) fail_internal("negative exponent");
  if (!exp.fits_ulong_p()) fail_horizon("exponent too large: " + exp.get_str());
  return ipow(base, exp.get_ui());
}

Integer floor_q(const Rational& x) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

Integer ceil_q(const Rational& x) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

std::string to_dec(const Integer& x) { return x.get_str(10); }

std::string to_dec(const Rational& x) {
  Rational c = x;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str(10);
  return c.get_num().get_str(10) + "/" + c.get_den().get_str(10);
}

Integer parse_integer(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) fail_input("not an integer: '" + s + "'");
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) fail_input("not an integer: '" + s + "'");
  Integer r;
  r.set_str(s[0] == '+' ? s.substr(1) : s, 10);
  return r;
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(s));
  Integer num = parse_integer(s.substr(0, slash));
  Integer den = parse_integer(s.substr(slash + 1));
  if (den == 0) fail_input("zero denominator in '" + s + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::uint64_t to_u64(const Integer& x, const char* what) {
  if (x < 0 || mpz_sizeinbase(x.get_mpz_t(), 2) > 63)
    fail_horizon(std::string(what) + " exceeds 63-bit range");
  std::uint64_t r = 0;
  mpz_export(&r, nullptr, -1, sizeof r, 0, 0, x.get_mpz_t());
  return r;
}

}  // namespace sturmian
