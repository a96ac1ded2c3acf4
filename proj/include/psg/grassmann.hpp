#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "psg/scalar.hpp"
#include "psg/superalgebra.hpp"

namespace psg {

// Index set of a monomial in anticommuting generators, bit k standing for the
// generator with 1-based index k+1. Factors are always kept in increasing
// order; every sign lives in the coefficient.
using Mask = std::uint64_t;

constexpr int kMaxGenerators = 62;

int mask_parity(Mask m);
std::string mask_label(Mask m);  // "1" for the empty set, otherwise "e{1,3}"

// Sign of the product of two ordered monomials, counting the inversions needed
// to sort the concatenation. Zero when the index sets intersect.
int mul_sign(Mask a, Mask b);

class GrassmannElement {
 public:
  explicit GrassmannElement(int n);
  static GrassmannElement monomial(int n, Mask mask, const Scalar& c = Scalar(1));
  static GrassmannElement parse(int n, std::string_view text);

  int n() const { return n_; }
  const std::map<Mask, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(Mask mask) const;

  void add_term(Mask mask, const Scalar& c);
  GrassmannElement& operator+=(const GrassmannElement& o);
  GrassmannElement& operator-=(const GrassmannElement& o);
  GrassmannElement operator+(const GrassmannElement& o) const;
  GrassmannElement operator-(const GrassmannElement& o) const;
  GrassmannElement operator-() const;
  GrassmannElement scaled(const Scalar& c) const;
  bool operator==(const GrassmannElement& o) const;

  std::optional<int> parity() const;  // nullopt when mixed or zero
  GrassmannElement parity_part(int p) const;

  Vec to_vec() const;  // coordinates in the 2^n basis, index = mask
  static GrassmannElement from_vec(int n, const Vec& v);

  std::string str() const;

 private:
  int n_;
  std::map<Mask, Scalar> terms_;
};

GrassmannElement g_mul(const GrassmannElement& f, const GrassmannElement& g);
GrassmannElement g_partial(int i, const GrassmannElement& f);  // 1-based index
GrassmannElement g_bracket(const GrassmannElement& f, const GrassmannElement& g);

// Monomial in commuting pairs x_1..x_m, y_1..y_m and anticommuting e_1..e_n.
struct PGKey {
  std::vector<int> xe, ye;  // exponent vectors of length m
  Mask mask = 0;
  bool operator<(const PGKey& o) const;
  bool operator==(const PGKey& o) const;
};

class PolyGrassmannElement {
 public:
  PolyGrassmannElement(int m, int n);
  static PolyGrassmannElement monomial(int m, int n, PGKey key, const Scalar& c = Scalar(1));
  static PolyGrassmannElement parse(int m, int n, std::string_view text);

  int m() const { return m_; }
  int n() const { return n_; }
  const std::map<PGKey, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const PGKey& key, const Scalar& c);
  PolyGrassmannElement& operator+=(const PolyGrassmannElement& o);
  PolyGrassmannElement operator+(const PolyGrassmannElement& o) const;
  PolyGrassmannElement operator-(const PolyGrassmannElement& o) const;
  PolyGrassmannElement operator-() const;
  PolyGrassmannElement scaled(const Scalar& c) const;
  bool operator==(const PolyGrassmannElement& o) const;

  std::optional<int> parity() const;  // parity of the anticommuting part
  PolyGrassmannElement parity_part(int p) const;

  std::string str() const;

 private:
  int m_, n_;
  std::map<PGKey, Scalar> terms_;
};

PolyGrassmannElement pg_mul(const PolyGrassmannElement& f, const PolyGrassmannElement& g);
PolyGrassmannElement pg_x_partial(int i, const PolyGrassmannElement& f);
PolyGrassmannElement pg_y_partial(int i, const PolyGrassmannElement& f);
PolyGrassmannElement pg_e_partial(int i, const PolyGrassmannElement& f);
// Symplectic term over the x,y pairs plus the signed term over the e's.
PolyGrassmannElement pg_bracket(const PolyGrassmannElement& f, const PolyGrassmannElement& g);

// Dense 2^n-dimensional export with the monomial product and bracket tables,
// basis index = mask, unit = the empty monomial.
SuperAlgebra gn_structure_constants(int n);

}  // namespace psg
