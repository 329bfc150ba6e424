#include "jacring/rational.hpp"

#include <stdexcept>

namespace jacring {

Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (r.get_den() == 0) throw std::domain_error("rational with zero denominator");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }
std::string to_string(const Integer& z) { return z.get_str(10); }

bool is_canonical(const Rational& r) {
  if (sgn(r.get_den()) <= 0) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return g == 1;
}

std::size_t bit_size(const Integer& z) {
  return z == 0 ? 0 : mpz_sizeinbase(z.get_mpz_t(), 2);
}

std::size_t bit_size(const Rational& r) {
  return bit_size(r.get_num()) + bit_size(r.get_den());
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Rational binomial(const Rational& a, long k) {
  if (k < 0) return 0;
  Rational out = 1;
  for (long i = 0; i < k; ++i) {
    out *= (a - i);
    out /= (i + 1);
  }
  return out;
}

Integer lcm_of_denominators_accumulate(const Integer& acc, const Rational& r) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), acc.get_mpz_t(), r.get_den_mpz_t());
  return out;
}

const char* version() {
#ifdef JACRING_VERSION
  return JACRING_VERSION;
#else
  return "unknown";
#endif
}

}  // namespace jacring
