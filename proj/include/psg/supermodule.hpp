#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "psg/brackets.hpp"
#include "psg/superalgebra.hpp"

namespace psg {

// Axiom system the action pair is checked against. The same matrices mean
// different things under different kinds; nothing is auto-detected.
enum class ModuleKind { poisson, contact, jordan_bracket, plain_jordan };

ModuleKind module_kind_from_string(std::string_view s);
std::string to_string(ModuleKind k);

// Right-action pair over a fixed algebra: v.a = v m(a) and {v,a} = v h(a),
// with matrices acting on row vectors so operator products read left to right.
// plain_jordan modules carry no h family.
class SuperModule {
 public:
  SuperModule(std::shared_ptr<const SuperAlgebra> algebra, GradedSpace space,
              std::vector<Mat> m_act, std::optional<std::vector<Mat>> h_act, ModuleKind kind,
              std::vector<std::string> labels = {});

  const SuperAlgebra& algebra() const { return *alg_; }
  std::shared_ptr<const SuperAlgebra> algebra_ptr() const { return alg_; }
  int dim() const { return space_.dim; }
  int parity(int i) const { return space_.parity[size_t(i)]; }
  const GradedSpace& space() const { return space_; }
  ModuleKind kind() const { return kind_; }
  bool has_h() const { return h_.has_value(); }
  const Mat& m(int i) const { return m_[size_t(i)]; }
  const Mat& h(int i) const;

  // Action matrix of a general algebra element.
  Mat m_of(const SparseVec& a) const;
  Mat h_of(const SparseVec& a) const;
  Vec act_m(const Vec& v, const Vec& a) const;
  Vec act_h(const Vec& v, const Vec& a) const;

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int i) const;
  std::optional<int> parity_of(const Vec& v) const;

 private:
  std::shared_ptr<const SuperAlgebra> alg_;
  GradedSpace space_;
  std::vector<Mat> m_;
  std::optional<std::vector<Mat>> h_;
  ModuleKind kind_;
  std::vector<std::string> labels_;
};

bool same_algebra(const SuperAlgebra& a, const SuperAlgebra& b);

// Axiom reports for the module's kind. poisson and contact kinds are checked
// as matrix identities over all algebra basis pairs; the two bracket-Jordan
// kinds are checked through the split null extension.
std::vector<IdentityReport> check_module(const SuperModule& v);
bool all_pass(const std::vector<IdentityReport>& reports);

// Algebra on A + V with V a square-zero ideal: (a+v)(b+u) = ab + v.b +
// (-1)^{|u||a|} u.a, and when both brackets exist {a+v,b+u} = {a,b} + {v,b} -
// (-1)^{|a||u|}{u,a}. Basis: A's then V's.
SuperAlgebra split_null_extension(const SuperAlgebra& a, const SuperModule& v);

SuperModule regular_module(std::shared_ptr<const SuperAlgebra> a, ModuleKind kind);
SuperModule opposite(const SuperModule& v);
SuperModule direct_sum(const SuperModule& a, const SuperModule& b);
// Basis change by an invertible parity-homogeneous-rows matrix g: actions
// become g f g^{-1}; the result is an isomorphic copy.
SuperModule conjugate(const SuperModule& v, const Mat& g);

// Contact-kind module on the mirror copy of G_n: for basis I and algebra
// monomial J the dot action mirrors multiplication and the bracket action is
// the mirrored bracket plus beta(|J|-2) times the mirrored product.
SuperModule gn_beta(int n, const Scalar& beta);

// Jordan-bracket variant of the above, produced mechanically by converting the
// bracket of the split null extension and restricting back to the ideal.
SuperModule gn_beta_jordan(int n, const Scalar& beta);

// Generic module-level conversions through the split null extension. The
// returned module lives over the converted algebra (unchanged when the algebra
// bracket is Poisson).
SuperModule jordan_module_from_contact(const SuperModule& v);
SuperModule contact_module_from_jordan(const SuperModule& v);

// One-parameter family of Jordan modules over kantor_double(G_n) on basis
// {w_I} + {w_I~}: subset-indexed actions with ordered-index bookkeeping, every
// stored index set increasing.
SuperModule m_alpha(int n, const Scalar& alpha);

// Jordan module on V + V~ over kantor_double(a), realized inside the Kantor
// double of the split null extension, where V + V~ is an ideal.
SuperModule kantor_module(const SuperAlgebra& a, const SuperModule& v);

// Smallest subspace containing the seeds and closed under every action matrix.
std::vector<Vec> submodule_closure(const SuperModule& v, const std::vector<Vec>& seeds);

struct IrreducibilityReport {
  bool irreducible = false;
  bool conclusive = false;
  int closure_dim = 0;
  std::optional<std::vector<Vec>> invariant_subspace;
  std::string note;
};

// Density criterion: the action matrices span all of End(V) iff V is
// absolutely irreducible; on failure a proper invariant subspace is hunted
// from basis vectors and pairwise sums.
IrreducibilityReport is_irreducible(const SuperModule& v);

struct DecompComponent {
  std::vector<Vec> basis;
  std::string tag;  // "reg" or "reg-op"
};

struct DecompositionResult {
  std::vector<DecompComponent> components;
};

// Splits a unital poisson-kind module over the structure constants of a
// Grassmann algebra into closures of the joint bracket-action kernel.
DecompositionResult decompose(const SuperModule& v);

enum class IsoParity { even, odd, any };

struct IsoWitness {
  bool found = false;
  int parity = 0;  // parity of the found map
  Mat map{0, 0};
  int intertwiner_dim = 0;
  // With found = false: true means the intertwiner space itself is zero.
  bool conclusive_none = false;
  std::string note;
};

// Solves the intertwiner system for both action families restricted to maps
// of the requested parity, then searches the solution space for an invertible
// element by deterministic small-integer enumeration.
IsoWitness find_isomorphism(const SuperModule& v, const SuperModule& w, IsoParity p,
                            int coeff_bound = 3);

struct ContactIrrepProfile {
  Scalar alpha;       // scalar value of h(1)
  Scalar beta;        // module family parameter
  Vec lowest;         // homogeneous vector killed by every m(e_i)
  bool straight = true;  // false selects the opposite family member
  Mat iso{0, 0};      // even isomorphism onto the (possibly opposite) model
  std::string note;
};

// Constructive identification of an irreducible contact module over G_n:
// lowest vector, scalar of h(1), the iterated-bracket basis with its four
// action laws, and the explicit isomorphism onto the model module.
ContactIrrepProfile identify_contact_irrep(const SuperModule& v);

}  // namespace psg
