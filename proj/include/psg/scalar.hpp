#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace psg {

// Input/contract violations. Mathematical counterexamples are values, not exceptions.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A mathematically impossible state reached from inputs that passed their own
// verification: something the theory rules out happened anyway. Callers treat
// this as a counterexample, not as bad input.
struct inconsistency : error {
  using error::error;
};

// Session coefficient field: rationals (characteristic 0) or F_p, p an odd prime.
// Selected once per process, before any scalars are created; characteristic 2 is
// rejected because every construction here divides by 2 somewhere.
namespace field {

unsigned long characteristic();          // 0 means rationals
void set_rational();
void set_prime(unsigned long p);         // throws unless p is an odd prime
void set_from_spec(std::string_view s);  // "rational" or "fp:<p>"
std::string describe();

// Test helper: restores the previous field on scope exit.
struct Guard {
  unsigned long saved;
  Guard() : saved(characteristic()) {}
  ~Guard() {
    if (saved == 0)
      set_rational();
    else
      set_prime(saved);
  }
};

}  // namespace field

// Exact scalar in the session field. Rational values are kept canonical
// (gcd(num, den) = 1, den > 0); F_p values are integer residues in [0, p).
class Scalar {
 public:
  Scalar() : v_(0) {}
  Scalar(long n) : v_(n) { reduce(); }
  Scalar(long num, long den);
  explicit Scalar(const mpq_class& q) : v_(q) {
    v_.canonicalize();
    reduce();
  }

  static Scalar parse(std::string_view s);  // "p", "p/q", optional leading -

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws on division by zero
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  bool operator==(const Scalar& o) const { return v_ == o.v_; }
  bool operator!=(const Scalar& o) const { return v_ != o.v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  Scalar inverse() const { return Scalar(1) / *this; }

  std::string str() const;  // canonical "p" or "p/q"
  const mpq_class& raw() const { return v_; }
  // Sign of the stored representative; mod p this refers to the residue in [0,p).
  bool is_negative() const { return sgn(v_) < 0; }

 private:
  void reduce();  // mod-p normalization when the session field is F_p
  mpq_class v_;
};

inline Scalar operator*(long n, const Scalar& s) { return Scalar(n) * s; }

// (-1)^e as a scalar, for Koszul sign bookkeeping.
inline Scalar sign_scalar(int e) { return (e & 1) ? Scalar(-1) : Scalar(1); }

}  // namespace psg
