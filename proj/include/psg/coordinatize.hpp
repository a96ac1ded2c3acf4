#pragma once

#include <string>
#include <vector>

#include "psg/supermodule.hpp"

namespace psg {

// A copy of the n-generator exterior algebra inside a unital algebra with
// bracket: odd images that square to zero, anticommute, and bracket to
// -delta_ij times the shared unit.
struct Embedding {
  std::vector<Vec> images;  // one per generator, in the ambient coordinates
  Vec unit;                 // must be the ambient unit
};

// Verifies every Embedding invariant inside p. A failing relation is named in
// the counterexample; an empty embedding only has the unit to get right.
IdentityReport check_embedding(const SuperAlgebra& p, const Embedding& emb);

// Homogeneous basis of { a : {a, image_i} = 0 for all i }, even rows first.
// Closure under dot and bracket is re-verified and failure throws: a verified
// embedding cannot yield a non-closed solution space.
std::vector<Vec> centralizer(const SuperAlgebra& p, const Embedding& emb);

// The centralizer with its inherited products, plus the row-per-(a_r, e_I)
// matrix sending the tensor square to p. The witness map is certified
// bijective and structure-preserving against tensor_product(a, G_n); any
// defect throws inconsistency carrying an elimination trace that names the
// first dependent row.
struct CoordinatizationResult {
  SuperAlgebra a;
  IsoWitness witness;
};
CoordinatizationResult coordinatization(const SuperAlgebra& p, const Embedding& emb);

// The canonical right-factor embedding of the last Grassmann factor of
// tensor_product(q, G_n): images 1 (x) e_i. Convenience for round trips.
Embedding right_factor_embedding(const SuperAlgebra& q, int n);

// Coordinates of each target in the row span of basis; throws when a target
// falls outside the span.
Mat coords_in_span(const std::vector<Vec>& basis, const std::vector<Vec>& targets);

}  // namespace psg
