#include "psg/scalar.hpp"

namespace psg {

namespace field {

namespace {
unsigned long g_char = 0;  // process-wide; set before scalar work starts
}

unsigned long characteristic() { return g_char; }

void set_rational() { g_char = 0; }

void set_prime(unsigned long p) {
  if (p < 3 || p % 2 == 0) throw error("field: characteristic must be an odd prime");
  mpz_class z(static_cast<unsigned long>(p));
  if (mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
    throw error("field: " + std::to_string(p) + " is not prime");
  g_char = p;
}

void set_from_spec(std::string_view s) {
  if (s == "rational" || s.empty()) {
    set_rational();
    return;
  }
  if (s.rfind("fp:", 0) == 0) {
    std::string digits(s.substr(3));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw error("field: bad prime in spec '" + std::string(s) + "'");
    set_prime(std::stoul(digits));
    return;
  }
  throw error("field: bad spec '" + std::string(s) + "' (want rational or fp:<p>)");
}

std::string describe() {
  return g_char == 0 ? std::string("rational") : "fp:" + std::to_string(g_char);
}

}  // namespace field

void Scalar::reduce() {
  unsigned long p = field::characteristic();
  if (p == 0) return;
  mpz_class mod(static_cast<unsigned long>(p));
  mpz_class num = v_.get_num(), den = v_.get_den();
  num %= mod;
  if (num < 0) num += mod;
  if (den != 1) {
    den %= mod;
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0)
      throw error("scalar: denominator not invertible mod " + std::to_string(p));
    num = (num * inv) % mod;
    if (num < 0) num += mod;
  }
  v_ = mpq_class(num);
}

Scalar::Scalar(long num, long den) {
  if (den == 0) throw error("scalar: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
  reduce();
}

Scalar Scalar::parse(std::string_view s) {
  std::string t(s);
  if (t.empty()) throw error("scalar: empty literal");
  mpq_class q;
  if (q.set_str(t, 10) != 0) throw error("scalar: bad literal '" + t + "'");
  if (q.get_den() == 0) throw error("scalar: zero denominator in '" + t + "'");
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::operator-() const {
  Scalar r;
  r.v_ = -v_;
  r.reduce();
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r;
  r.v_ = v_ + o.v_;
  r.reduce();
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar r;
  r.v_ = v_ - o.v_;
  r.reduce();
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar r;
  r.v_ = v_ * o.v_;
  r.reduce();
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw error("scalar: division by zero");
  Scalar r;
  r.v_ = v_ / o.v_;
  r.reduce();
  return r;
}

std::string Scalar::str() const { return v_.get_str(); }

}  // namespace psg
