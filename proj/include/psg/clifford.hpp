#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "psg/supermodule.hpp"

namespace psg {

// Defining data for the relations u.w + w.u = f(u,w) 1 on odd generators.
struct CliffordSpec {
  int d = 0;
  Mat form;  // d x d, must be symmetric
};

// Associative unital algebra on the 2^d increasing generator products, graded
// by product length mod 2. Normalization moves out-of-order generators left
// with v_j v_i = -v_i v_j + f(i,j) 1 for j > i and v_i^2 = f(i,i)/2. The
// finished table is re-checked against the defining relations.
SuperAlgebra clifford(const CliffordSpec& spec);

// The associative envelope of G_n: 2n odd generators, the first n standing
// for multiplication by e_i, the last n for bracketing with e_i, coupled by
// f(v_i, v_{n+j}) = -delta_ij and zero diagonal blocks. dim = 4^n.
struct EnvelopePresentation {
  SuperAlgebra algebra;
  std::vector<Vec> mult_gen;     // basis vector of the multiplication generator for e_i
  std::vector<Vec> bracket_gen;  // basis vector of the bracket generator for e_i
};
EnvelopePresentation u_poisson_gn(int n);

// Decides whether an associative unital algebra is the full k x k matrix
// algebra. The certificate for a yes: dim = k^2, center of dimension 1, a
// basis-generated minimal left ideal of dimension k on which left
// multiplication acts faithfully and fills all of End. A no is certified by a
// non-square dimension, a larger center, or an explicit proper two-sided
// ideal. Anything else is reported inconclusive rather than guessed.
struct MatrixAlgebraReport {
  bool verdict = false;
  bool conclusive = false;
  int k = 0;
  int center_dim = 0;
  bool basis_ideals_full = false;  // every basis element two-sided-generates everything
  int irrep_dim = 0;               // dimension of the minimal left ideal found
  std::optional<std::vector<Vec>> irreducible;          // its basis, when requested
  std::optional<std::pair<int, int>> graded_split;      // (even, odd) sizes when graded
  std::optional<std::vector<Vec>> ideal_witness;        // proper two-sided ideal, on a no
  std::string note;
};
MatrixAlgebraReport verify_matrix_algebra(const SuperAlgebra& a, bool want_irreducible = true);

// Extends a lawful multiplication-and-bracket module over G_n to the
// envelope: each increasing generator product goes to the matching product of
// action matrices. The extension is verified multiplicative on every basis
// pair and throws when that fails. Row r of matrix is the flattened operator
// of envelope basis element r.
struct EnvelopeActionReport {
  Mat matrix;             // 4^n rows, (dim V)^2 columns
  int image_dim = 0;      // rank of the span of all operators
  int commutant_dim = 0;  // solutions of X commuting with every generator operator
};
EnvelopeActionReport action_homomorphism(int n, const SuperModule& v);

}  // namespace psg
