#include "psg/supermodule.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>

#include "psg/grassmann.hpp"

namespace psg {

namespace {

Vec basis_vec(int n, int i) {
  Vec v = zero_vec(n);
  v[size_t(i)] = Scalar(1);
  return v;
}

SparseVec basis_sparse(int i) { return SparseVec{{i, Scalar(1)}}; }

// #{(p,q) : p in pset, q in qset, p > q}
int crossings(Mask pset, Mask qset) {
  int c = 0;
  for (Mask t = pset; t;) {
    int b = std::countr_zero(t);
    t &= t - 1;
    c += std::popcount(qset & ((Mask(1) << b) - 1));
  }
  return c;
}

std::string w_label(Mask m) {
  std::string s = "w{";
  bool first = true;
  for (Mask t = m; t;) {
    int b = std::countr_zero(t);
    t &= t - 1;
    if (!first) s += ",";
    s += std::to_string(b + 1);
    first = false;
  }
  return s + "}";
}

int log2_dim(int d, const char* who) {
  if (d <= 0 || (d & (d - 1)) != 0)
    throw error(std::string(who) + ": dimension " + std::to_string(d) + " is not a power of two");
  return std::countr_zero(unsigned(d));
}

}  // namespace

ModuleKind module_kind_from_string(std::string_view s) {
  if (s == "poisson") return ModuleKind::poisson;
  if (s == "contact" || s == "contact-lie") return ModuleKind::contact;
  if (s == "jordan-bracket") return ModuleKind::jordan_bracket;
  if (s == "plain-jordan" || s == "jordan") return ModuleKind::plain_jordan;
  throw error("unknown module kind: " + std::string(s));
}

std::string to_string(ModuleKind k) {
  switch (k) {
    case ModuleKind::poisson: return "poisson";
    case ModuleKind::contact: return "contact-lie";
    case ModuleKind::jordan_bracket: return "jordan-bracket";
    case ModuleKind::plain_jordan: return "plain-jordan";
  }
  throw error("unknown module kind value");
}

SuperModule::SuperModule(std::shared_ptr<const SuperAlgebra> algebra, GradedSpace space,
                         std::vector<Mat> m_act, std::optional<std::vector<Mat>> h_act,
                         ModuleKind kind, std::vector<std::string> labels)
    : alg_(std::move(algebra)),
      space_(std::move(space)),
      m_(std::move(m_act)),
      h_(std::move(h_act)),
      kind_(kind),
      labels_(std::move(labels)) {
  if (!alg_) throw error("module over a null algebra");
  if (space_.dim <= 0) throw error("module dimension must be positive");
  if (int(space_.parity.size()) != space_.dim) throw error("module parity vector size mismatch");
  for (int p : space_.parity)
    if (p != 0 && p != 1) throw error("module parity entries must be 0 or 1");
  if (kind_ == ModuleKind::plain_jordan) {
    if (h_.has_value()) throw error("plain-jordan modules carry no bracket action");
  } else {
    if (!h_.has_value()) throw error(to_string(kind_) + " modules need a bracket action");
  }
  auto check_family = [&](const std::vector<Mat>& fam, const char* name) {
    if (int(fam.size()) != alg_->dim())
      throw error(std::string(name) + " family size differs from the algebra dimension");
    for (int i = 0; i < alg_->dim(); ++i) {
      const Mat& f = fam[size_t(i)];
      if (f.rows() != space_.dim || f.cols() != space_.dim)
        throw error(std::string(name) + " matrix shape mismatch at algebra index " +
                    std::to_string(i));
      int pa = alg_->parity(i);
      for (int r = 0; r < space_.dim; ++r)
        for (int c = 0; c < space_.dim; ++c)
          if (!f.at(r, c).is_zero() && space_.parity[size_t(c)] != ((space_.parity[size_t(r)] + pa) & 1))
            throw error(std::string(name) + "(" + alg_->label(i) + ") is not parity-homogeneous at (" +
                        std::to_string(r) + "," + std::to_string(c) + ")");
    }
  };
  check_family(m_, "m");
  if (h_) check_family(*h_, "h");
  if (!labels_.empty() && int(labels_.size()) != space_.dim)
    throw error("module label count differs from the dimension");
}

const Mat& SuperModule::h(int i) const {
  if (!h_) throw error("module has no bracket action");
  return (*h_)[size_t(i)];
}

Mat SuperModule::m_of(const SparseVec& a) const {
  Mat r(dim(), dim());
  for (const auto& [i, c] : a) r = r + m_[size_t(i)].scaled(c);
  return r;
}

Mat SuperModule::h_of(const SparseVec& a) const {
  if (!h_) throw error("module has no bracket action");
  Mat r(dim(), dim());
  for (const auto& [i, c] : a) r = r + (*h_)[size_t(i)].scaled(c);
  return r;
}

Vec SuperModule::act_m(const Vec& v, const Vec& a) const { return m_of(to_sparse(a)).apply(v); }

Vec SuperModule::act_h(const Vec& v, const Vec& a) const { return h_of(to_sparse(a)).apply(v); }

std::string SuperModule::label(int i) const {
  if (!labels_.empty()) return labels_[size_t(i)];
  return "v" + std::to_string(i);
}

std::optional<int> SuperModule::parity_of(const Vec& v) const {
  std::optional<int> p;
  for (int i = 0; i < dim(); ++i) {
    if (v[size_t(i)].is_zero()) continue;
    if (!p)
      p = parity(i);
    else if (*p != parity(i))
      return std::nullopt;
  }
  return p;
}

bool same_algebra(const SuperAlgebra& a, const SuperAlgebra& b) {
  if (a.dim() != b.dim()) return false;
  if (a.space().parity != b.space().parity) return false;
  if (a.has_bracket() != b.has_bracket()) return false;
  if (a.has_unit() != b.has_unit()) return false;
  if (a.has_unit() && !(a.unit() == b.unit())) return false;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      if (!(a.dot_b(i, j) == b.dot_b(i, j))) return false;
      if (a.has_bracket() && !(a.br_b(i, j) == b.br_b(i, j))) return false;
    }
  return true;
}

SuperAlgebra split_null_extension(const SuperAlgebra& a, const SuperModule& v) {
  if (!same_algebra(a, v.algebra()))
    throw error("split_null_extension: the module is not over the given algebra");
  const int da = a.dim(), dv = v.dim(), d = da + dv;

  GradedSpace sp;
  sp.dim = d;
  sp.parity = a.space().parity;
  sp.parity.insert(sp.parity.end(), v.space().parity.begin(), v.space().parity.end());

  auto vrow_m = [&](int r, int j) {  // v_r . b_j expanded in the V block
    SparseVec out;
    for (int s = 0; s < dv; ++s) {
      const Scalar& c = v.m(j).at(r, s);
      if (!c.is_zero()) out[da + s] = c;
    }
    return out;
  };
  auto vrow_h = [&](int r, int j) {
    SparseVec out;
    for (int s = 0; s < dv; ++s) {
      const Scalar& c = v.h(j).at(r, s);
      if (!c.is_zero()) out[da + s] = c;
    }
    return out;
  };

  ProductTable dot(size_t(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      SparseVec& row = dot[size_t(i) * d + j];
      if (i < da && j < da) {
        row = a.dot_b(i, j);
      } else if (i >= da && j < da) {
        row = vrow_m(i - da, j);
      } else if (i < da && j >= da) {
        row = vrow_m(j - da, i);
        if ((a.parity(i) & 1) && (v.parity(j - da) & 1))
          for (auto& [k, c] : row) c = -c;
      }  // V.V = 0
    }

  std::optional<ProductTable> bracket;
  if (a.has_bracket() && v.has_h()) {
    bracket.emplace(size_t(d) * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        SparseVec& row = (*bracket)[size_t(i) * d + j];
        if (i < da && j < da) {
          row = a.br_b(i, j);
        } else if (i >= da && j < da) {
          row = vrow_h(i - da, j);
        } else if (i < da && j >= da) {
          // forced by super-anticommutativity: {a,v} = -(-1)^{|a||v|} {v,a}
          row = vrow_h(j - da, i);
          int sgn = 1 + (a.parity(i) & v.parity(j - da) & 1);
          if (sgn & 1)
            for (auto& [k, c] : row) c = -c;
        }  // {V,V} = 0
      }
  }

  std::optional<Vec> unit;
  if (a.has_unit() && v.m_of(to_sparse(a.unit())) == Mat::identity(dv)) {
    Vec u = a.unit();
    u.resize(size_t(d));
    unit = u;
  }

  std::vector<std::string> labels;
  labels.reserve(size_t(d));
  for (int i = 0; i < da; ++i) labels.push_back(a.label(i));
  for (int r = 0; r < dv; ++r) labels.push_back(v.label(r));

  return SuperAlgebra(sp, std::move(dot), std::move(bracket), std::move(unit), std::move(labels));
}

namespace {

// One matrix identity over all algebra basis pairs.
IdentityReport check_pair_identity(const SuperModule& v, const std::string& name,
                                   const std::function<Mat(int, int)>& lhs,
                                   const std::function<Mat(int, int)>& rhs) {
  const SuperAlgebra& a = v.algebra();
  IdentityReport rep;
  rep.identity = name;
  rep.pass = true;
  for (int i = 0; i < a.dim() && rep.pass; ++i)
    for (int j = 0; j < a.dim(); ++j) {
      ++rep.tuples_checked;
      Mat d = lhs(i, j) - rhs(i, j);
      if (!d.is_zero()) {
        rep.pass = false;
        rep.counterexample = Counterexample{{i, j}, a.label(i) + ", " + a.label(j), d.flatten()};
        break;
      }
    }
  return rep;
}

}  // namespace

std::vector<IdentityReport> check_module(const SuperModule& v) {
  const SuperAlgebra& a = v.algebra();
  std::vector<IdentityReport> out;

  if (v.kind() == ModuleKind::jordan_bracket || v.kind() == ModuleKind::plain_jordan) {
    // Checked through the split null extension: the action pair is lawful
    // exactly when the extension satisfies the corresponding algebra suite.
    SuperAlgebra e = split_null_extension(a, v);
    const char* suite = v.kind() == ModuleKind::plain_jordan ? "jordan" : "jordan-bracket";
    return check_suite(e, suite);
  }

  auto sigma = [&](int i, int j) { return sign_scalar(a.parity(i) & a.parity(j)); };
  auto M = [&](int i) { return v.m(i); };
  auto H = [&](int i) { return v.h(i); };

  out.push_back(check_pair_identity(
      v, "m-multiplicative", [&](int i, int j) { return v.m_of(a.dot_b(i, j)); },
      [&](int i, int j) { return M(i) * M(j); }));

  if (v.kind() == ModuleKind::poisson) {
    out.push_back(check_pair_identity(
        v, "m-of-bracket", [&](int i, int j) { return v.m_of(a.br_b(i, j)); },
        [&](int i, int j) { return M(i) * H(j) - (H(j) * M(i)).scaled(sigma(i, j)); }));
    out.push_back(check_pair_identity(
        v, "h-of-product", [&](int i, int j) { return v.h_of(a.dot_b(i, j)); },
        [&](int i, int j) { return H(i) * M(j) + (H(j) * M(i)).scaled(sigma(i, j)); }));
  } else {  // contact: the same two shapes pick up unit-derivation corrections
    if (!a.has_unit()) throw error("contact module checks need a unital algebra");
    SparseVec unit_sv = to_sparse(a.unit());
    std::vector<Mat> mD;
    mD.reserve(size_t(a.dim()));
    for (int j = 0; j < a.dim(); ++j) mD.push_back(v.m_of(a.br(unit_sv, basis_sparse(j))));
    Mat h1 = v.h_of(unit_sv);
    out.push_back(check_pair_identity(
        v, "m-of-bracket", [&](int i, int j) { return v.m_of(a.br_b(i, j)); },
        [&](int i, int j) {
          return M(i) * H(j) - (H(j) * M(i)).scaled(sigma(i, j)) + M(i) * mD[size_t(j)];
        }));
    out.push_back(check_pair_identity(
        v, "h-of-product", [&](int i, int j) { return v.h_of(a.dot_b(i, j)); },
        [&](int i, int j) {
          return H(i) * M(j) + (H(j) * M(i)).scaled(sigma(i, j)) - h1 * M(i) * M(j);
        }));
  }

  out.push_back(check_pair_identity(
      v, "h-of-bracket", [&](int i, int j) { return v.h_of(a.br_b(i, j)); },
      [&](int i, int j) { return H(i) * H(j) - (H(j) * H(i)).scaled(sigma(i, j)); }));

  return out;
}

bool all_pass(const std::vector<IdentityReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass) return false;
  return true;
}

SuperModule regular_module(std::shared_ptr<const SuperAlgebra> a, ModuleKind kind) {
  if (!a) throw error("regular_module: null algebra");
  const int d = a->dim();
  std::vector<Mat> m(size_t(d), Mat(d, d));
  for (int i = 0; i < d; ++i)
    for (int r = 0; r < d; ++r)
      for (const auto& [s, c] : a->dot_b(r, i)) m[size_t(i)].at(r, s) = c;
  std::optional<std::vector<Mat>> h;
  if (kind != ModuleKind::plain_jordan) {
    if (!a->has_bracket()) throw error("regular_module: the algebra has no bracket");
    h.emplace(size_t(d), Mat(d, d));
    for (int i = 0; i < d; ++i)
      for (int r = 0; r < d; ++r)
        for (const auto& [s, c] : a->br_b(r, i)) (*h)[size_t(i)].at(r, s) = c;
  }
  return SuperModule(a, a->space(), std::move(m), std::move(h), kind, a->labels());
}

SuperModule opposite(const SuperModule& v) {
  GradedSpace sp = v.space();
  for (int& p : sp.parity) p ^= 1;
  std::vector<Mat> m;
  std::optional<std::vector<Mat>> h;
  for (int i = 0; i < v.algebra().dim(); ++i) m.push_back(v.m(i));
  if (v.has_h()) {
    h.emplace();
    for (int i = 0; i < v.algebra().dim(); ++i) h->push_back(v.h(i));
  }
  return SuperModule(v.algebra_ptr(), std::move(sp), std::move(m), std::move(h), v.kind(),
                     v.labels());
}

SuperModule direct_sum(const SuperModule& a, const SuperModule& b) {
  if (a.kind() != b.kind()) throw error("direct_sum: mixed module kinds");
  if (!same_algebra(a.algebra(), b.algebra()))
    throw error("direct_sum: the summands live over different algebras");
  const int da = a.dim(), db = b.dim(), d = da + db;
  GradedSpace sp;
  sp.dim = d;
  sp.parity = a.space().parity;
  sp.parity.insert(sp.parity.end(), b.space().parity.begin(), b.space().parity.end());
  auto block = [&](const Mat& x, const Mat& y) {
    Mat f(d, d);
    for (int r = 0; r < da; ++r)
      for (int c = 0; c < da; ++c) f.at(r, c) = x.at(r, c);
    for (int r = 0; r < db; ++r)
      for (int c = 0; c < db; ++c) f.at(da + r, da + c) = y.at(r, c);
    return f;
  };
  std::vector<Mat> m;
  std::optional<std::vector<Mat>> h;
  for (int i = 0; i < a.algebra().dim(); ++i) m.push_back(block(a.m(i), b.m(i)));
  if (a.has_h() != b.has_h()) throw error("direct_sum: one summand lacks the bracket action");
  if (a.has_h()) {
    h.emplace();
    for (int i = 0; i < a.algebra().dim(); ++i) h->push_back(block(a.h(i), b.h(i)));
  }
  std::vector<std::string> labels;
  for (int r = 0; r < da; ++r) labels.push_back(a.label(r));
  for (int r = 0; r < db; ++r) labels.push_back(b.label(r) + "#2");
  return SuperModule(a.algebra_ptr(), std::move(sp), std::move(m), std::move(h), a.kind(),
                     std::move(labels));
}

SuperModule conjugate(const SuperModule& v, const Mat& g) {
  const int d = v.dim();
  if (g.rows() != d || g.cols() != d) throw error("conjugate: basis-change shape mismatch");
  auto gi = inverse(g);
  if (!gi) throw error("conjugate: basis change is singular");
  GradedSpace sp;
  sp.dim = d;
  sp.parity.resize(size_t(d));
  for (int r = 0; r < d; ++r) {
    std::optional<int> p;
    for (int c = 0; c < d; ++c) {
      if (g.at(r, c).is_zero()) continue;
      if (!p)
        p = v.parity(c);
      else if (*p != v.parity(c))
        throw error("conjugate: row " + std::to_string(r) + " of the basis change mixes parities");
    }
    sp.parity[size_t(r)] = *p;  // a singular check above rules out empty rows
  }
  std::vector<Mat> m;
  std::optional<std::vector<Mat>> h;
  for (int i = 0; i < v.algebra().dim(); ++i) m.push_back(g * v.m(i) * *gi);
  if (v.has_h()) {
    h.emplace();
    for (int i = 0; i < v.algebra().dim(); ++i) h->push_back(g * v.h(i) * *gi);
  }
  return SuperModule(v.algebra_ptr(), std::move(sp), std::move(m), std::move(h), v.kind());
}

SuperModule gn_beta(int n, const Scalar& beta) {
  auto alg = std::make_shared<SuperAlgebra>(gn_structure_constants(n));
  const int d = alg->dim();
  GradedSpace sp;
  sp.dim = d;
  sp.parity.resize(size_t(d));
  for (int i = 0; i < d; ++i) sp.parity[size_t(i)] = mask_parity(Mask(i));

  std::vector<Mat> m(size_t(d), Mat(d, d));
  std::vector<Mat> h(size_t(d), Mat(d, d));
  for (int j = 0; j < d; ++j) {
    Mask J = Mask(j);
    Scalar weight = beta * Scalar(std::popcount(J) - 2);
    for (int i = 0; i < d; ++i) {
      Mask I = Mask(i);
      int s = mul_sign(I, J);
      if (s != 0) {
        m[size_t(j)].at(i, int(I | J)) = Scalar(s);
        h[size_t(j)].at(i, int(I | J)) += Scalar(s) * weight;
      }
      GrassmannElement br =
          g_bracket(GrassmannElement::monomial(n, I), GrassmannElement::monomial(n, J));
      for (const auto& [k, c] : br.terms()) h[size_t(j)].at(i, int(k)) += c;
    }
  }

  std::vector<std::string> labels;
  labels.reserve(size_t(d));
  for (int i = 0; i < d; ++i) labels.push_back(mask_label(Mask(i)) + "'");
  return SuperModule(alg, std::move(sp), std::move(m), std::move(h), ModuleKind::contact,
                     std::move(labels));
}

namespace {

// Shared body of the two module-level bracket conversions: convert the split
// null extension's bracket and read the action families back off the ideal.
SuperModule convert_through_extension(const SuperModule& v, ModuleKind out_kind,
                                      const std::function<SuperAlgebra(const SuperAlgebra&)>& conv,
                                      const char* who) {
  const SuperAlgebra& a = v.algebra();
  const int da = a.dim(), dv = v.dim();
  SuperAlgebra e2 = conv(split_null_extension(a, v));

  auto block_row = [&](const SparseVec& sv, int lo, int hi) {
    SparseVec out;
    for (const auto& [k, c] : sv) {
      if (k < lo || k >= hi)
        throw error(std::string(who) + ": converted product leaves its block");
      out[k - lo] = c;
    }
    return out;
  };

  ProductTable adot(size_t(da) * da), abr(size_t(da) * da);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j) {
      adot[size_t(i) * da + j] = block_row(e2.dot_b(i, j), 0, da);
      abr[size_t(i) * da + j] = block_row(e2.br_b(i, j), 0, da);
    }
  std::vector<std::string> alabels;
  for (int i = 0; i < da; ++i) alabels.push_back(a.label(i));
  auto alg2 = std::make_shared<SuperAlgebra>(
      a.space(), std::move(adot), std::move(abr),
      a.has_unit() ? std::optional<Vec>(a.unit()) : std::nullopt, std::move(alabels));

  std::vector<Mat> m(size_t(da), Mat(dv, dv)), h(size_t(da), Mat(dv, dv));
  for (int j = 0; j < da; ++j)
    for (int r = 0; r < dv; ++r) {
      for (const auto& [s, c] : block_row(e2.dot_b(da + r, j), da, da + dv))
        m[size_t(j)].at(r, s) = c;
      for (const auto& [s, c] : block_row(e2.br_b(da + r, j), da, da + dv))
        h[size_t(j)].at(r, s) = c;
    }
  return SuperModule(alg2, v.space(), std::move(m), std::move(h), out_kind, v.labels());
}

}  // namespace

SuperModule jordan_module_from_contact(const SuperModule& v) {
  if (v.kind() != ModuleKind::contact)
    throw error("jordan_module_from_contact expects a contact-kind module");
  return convert_through_extension(
      v, ModuleKind::jordan_bracket, [](const SuperAlgebra& e) { return jordan_from_contact(e); },
      "jordan_module_from_contact");
}

SuperModule contact_module_from_jordan(const SuperModule& v) {
  if (v.kind() != ModuleKind::jordan_bracket)
    throw error("contact_module_from_jordan expects a jordan-bracket module");
  return convert_through_extension(
      v, ModuleKind::contact, [](const SuperAlgebra& e) { return contact_from_jordan(e); },
      "contact_module_from_jordan");
}

SuperModule gn_beta_jordan(int n, const Scalar& beta) {
  return jordan_module_from_contact(gn_beta(n, beta));
}

SuperModule m_alpha(int n, const Scalar& alpha) {
  auto alg = std::make_shared<SuperAlgebra>(kantor_double(gn_structure_constants(n)));
  const int g = 1 << n;   // plain masks per layer
  const int d = 2 * g;    // module dimension
  GradedSpace sp;
  sp.dim = d;
  sp.parity.resize(size_t(d));
  for (int i = 0; i < g; ++i) {
    sp.parity[size_t(i)] = (n + std::popcount(Mask(i))) & 1;
    sp.parity[size_t(g + i)] = (n + std::popcount(Mask(i)) + 1) & 1;
  }

  // Every index set is stored increasing; the product rules are stated for the
  // ordered forms that end (resp. start) with the shared indices, so each
  // action picks up the reordering signs computed here.
  auto sgn_left = [](Mask I, Mask J) {
    Mask common = I & J, keep = I & ~J;
    int s1 = std::popcount(common);
    return sign_scalar(s1 * (s1 - 1) / 2 + crossings(keep, common));
  };
  auto sgn_right = [](Mask I, Mask J) {
    Mask common = I & J, extra = J & ~I;
    return sign_scalar(crossings(common, extra));
  };

  std::vector<Mat> m(size_t(d), Mat(d, d));
  for (int jj = 0; jj < d; ++jj) {
    bool jb = jj >= g;           // barred algebra element
    Mask J = Mask(jj & (g - 1));
    int lenJ = std::popcount(J);
    Mat& f = m[size_t(jj)];
    for (int ii = 0; ii < d; ++ii) {
      bool ib = ii >= g;         // barred module vector
      Mask I = Mask(ii & (g - 1));
      Mask extra = J & ~I;
      if (!jb) {
        if (extra) continue;     // plain algebra part only strips subsets
        Scalar c = sgn_left(I, J);
        if (ib) c *= sign_scalar(lenJ);
        f.at(ii, (ib ? g : 0) + int(I & ~J)) = c;
      } else if (!ib) {
        if (extra) continue;
        f.at(ii, g + int(I & ~J)) = sgn_left(I, J);
      } else {
        int ex = std::popcount(extra);
        if (ex >= 2) continue;
        if (ex == 1) {
          int x = std::countr_zero(extra);
          Mask keep = I & ~J;
          Scalar c = sgn_left(I, J) * sgn_right(I, J) *
                     sign_scalar(std::popcount(I & J) + crossings(keep, extra));
          f.at(ii, int(keep | (Mask(1) << x))) = c;
        } else {
          if (lenJ == 1) continue;  // weight |J|-1 vanishes
          Scalar c = sgn_left(I, J) * sign_scalar(lenJ - 1) * alpha * Scalar(lenJ - 1);
          f.at(ii, int(I & ~J)) = c;
        }
      }
    }
  }

  std::vector<std::string> labels;
  labels.reserve(size_t(d));
  for (int i = 0; i < g; ++i) labels.push_back(w_label(Mask(i)));
  for (int i = 0; i < g; ++i) labels.push_back(w_label(Mask(i)) + "~");
  return SuperModule(alg, std::move(sp), std::move(m), std::nullopt, ModuleKind::plain_jordan,
                     std::move(labels));
}

SuperModule kantor_module(const SuperAlgebra& a, const SuperModule& v) {
  if (!v.has_h()) throw error("kantor_module needs a module with a bracket action");
  const int da = a.dim(), dv = v.dim(), de = da + dv;
  SuperAlgebra e = split_null_extension(a, v);
  SuperAlgebra k = kantor_double(e);
  auto alg = std::make_shared<SuperAlgebra>(kantor_double(a));

  // Positions of the doubled module inside the doubled extension.
  auto mu = [&](int r) { return r < dv ? da + r : de + da + (r - dv); };
  auto kappa = [&](int b) { return b < da ? b : de + (b - da); };
  auto back = [&](int idx) {
    if (idx >= da && idx < de) return idx - da;
    if (idx >= de + da) return dv + (idx - de - da);
    throw error("kantor_module: action leaves the doubled module");
  };

  const int d = 2 * dv;
  GradedSpace sp;
  sp.dim = d;
  sp.parity.resize(size_t(d));
  for (int r = 0; r < d; ++r) sp.parity[size_t(r)] = k.parity(mu(r));

  std::vector<Mat> m(size_t(2 * da), Mat(d, d));
  for (int b = 0; b < 2 * da; ++b)
    for (int r = 0; r < d; ++r)
      for (const auto& [idx, c] : k.dot_b(mu(r), kappa(b))) m[size_t(b)].at(r, back(idx)) = c;

  std::vector<std::string> labels;
  labels.reserve(size_t(d));
  for (int r = 0; r < dv; ++r) labels.push_back(v.label(r));
  for (int r = 0; r < dv; ++r) labels.push_back(v.label(r) + "~");
  return SuperModule(alg, std::move(sp), std::move(m), std::nullopt, ModuleKind::plain_jordan,
                     std::move(labels));
}

std::vector<Vec> submodule_closure(const SuperModule& v, const std::vector<Vec>& seeds) {
  EchelonBasis basis(v.dim());
  std::deque<Vec> work;
  for (const Vec& s : seeds)
    if (basis.insert(s)) work.push_back(s);
  auto push = [&](const Vec& u) {
    if (basis.insert(u)) work.push_back(u);
  };
  while (!work.empty()) {
    Vec x = work.front();
    work.pop_front();
    for (int i = 0; i < v.algebra().dim(); ++i) {
      push(v.m(i).apply(x));
      if (v.has_h()) push(v.h(i).apply(x));
    }
  }
  return basis.rows();
}

IrreducibilityReport is_irreducible(const SuperModule& v) {
  IrreducibilityReport rep;
  std::vector<Mat> gens;
  for (int i = 0; i < v.algebra().dim(); ++i) {
    gens.push_back(v.m(i));
    if (v.has_h()) gens.push_back(v.h(i));
  }
  rep.closure_dim = int(span_closure(gens).size());
  const int full = v.dim() * v.dim();
  if (rep.closure_dim == full) {
    rep.irreducible = true;
    rep.conclusive = true;
    rep.note = "action matrices span End(V)";
    return rep;
  }
  std::vector<Vec> candidates;
  for (int r = 0; r < v.dim(); ++r) candidates.push_back(basis_vec(v.dim(), r));
  for (int r = 0; r < v.dim(); ++r)
    for (int s = r + 1; s < v.dim(); ++s) {
      candidates.push_back(add(basis_vec(v.dim(), r), basis_vec(v.dim(), s)));
      candidates.push_back(sub(basis_vec(v.dim(), r), basis_vec(v.dim(), s)));
    }
  for (const Vec& c : candidates) {
    auto cl = submodule_closure(v, {c});
    if (!cl.empty() && int(cl.size()) < v.dim()) {
      rep.irreducible = false;
      rep.conclusive = true;
      rep.invariant_subspace = cl;
      rep.note = "proper invariant subspace found";
      return rep;
    }
  }
  rep.irreducible = false;
  rep.conclusive = false;
  rep.note = "action algebra is proper in End(V) but no invariant subspace was located";
  return rep;
}

DecompositionResult decompose(const SuperModule& v) {
  if (v.kind() != ModuleKind::poisson) throw error("decompose expects a poisson-kind module");
  const SuperAlgebra& a = v.algebra();
  int n = log2_dim(a.dim(), "decompose");
  if (!same_algebra(a, gn_structure_constants(n)))
    throw error("decompose expects a module over the dense Grassmann structure constants");
  if (!(v.m_of(to_sparse(a.unit())) == Mat::identity(v.dim())))
    throw error("decompose: the module is not unital");
  if (!all_pass(check_module(v))) throw error("decompose: the module fails its axiom suite");

  // Joint kernel of the generator bracket actions, split into parity layers so
  // reduction cannot mix them.
  Mat stacked(v.dim(), n * v.dim());
  for (int g = 0; g < n; ++g) {
    const Mat& hg = v.h(1 << g);
    for (int r = 0; r < v.dim(); ++r)
      for (int c = 0; c < v.dim(); ++c) stacked.at(r, g * v.dim() + c) = hg.at(r, c);
  }
  std::vector<Vec> raw = left_kernel(stacked);
  EchelonBasis even(v.dim()), odd(v.dim());
  for (const Vec& k : raw) {
    Vec p0 = zero_vec(v.dim()), p1 = zero_vec(v.dim());
    for (int i = 0; i < v.dim(); ++i) (v.parity(i) ? p1 : p0)[size_t(i)] = k[size_t(i)];
    if (!is_zero_vec(p0)) even.insert(p0);
    if (!is_zero_vec(p1)) odd.insert(p1);
  }

  DecompositionResult res;
  EchelonBasis total(v.dim());
  int covered = 0;
  auto take = [&](const Vec& gen, int parity) {
    DecompComponent comp;
    comp.basis = submodule_closure(v, {gen});
    comp.tag = parity == 0 ? "reg" : "reg-op";
    covered += int(comp.basis.size());
    for (const Vec& b : comp.basis) total.insert(b);
    res.components.push_back(std::move(comp));
  };
  for (const Vec& g : even.rows()) take(g, 0);
  for (const Vec& g : odd.rows()) take(g, 1);
  if (covered != v.dim() || total.dim() != v.dim())
    throw error("decompose: socle closures do not split the module (covered " +
                std::to_string(covered) + " of " + std::to_string(v.dim()) + ")");
  return res;
}

IsoWitness find_isomorphism(const SuperModule& v, const SuperModule& w, IsoParity p,
                            int coeff_bound) {
  if (v.kind() != w.kind()) throw error("find_isomorphism: mixed module kinds");
  if (!same_algebra(v.algebra(), w.algebra()))
    throw error("find_isomorphism: the modules live over different algebras");
  IsoWitness out;
  if (v.dim() != w.dim()) {
    out.conclusive_none = true;
    out.note = "dimension mismatch";
    return out;
  }
  const int d = v.dim();
  const SuperAlgebra& a = v.algebra();

  std::vector<int> parities;
  if (p == IsoParity::even || p == IsoParity::any) parities.push_back(0);
  if (p == IsoParity::odd || p == IsoParity::any) parities.push_back(1);

  int total_dim = 0;
  bool exhausted = false;
  for (int pi : parities) {
    // Unknown entries: positions compatible with a parity-pi map.
    std::vector<int> pos(size_t(d) * d, -1);
    std::vector<std::pair<int, int>> slots;
    for (int r = 0; r < d; ++r)
      for (int s = 0; s < d; ++s)
        if (w.parity(s) == ((v.parity(r) + pi) & 1)) {
          pos[size_t(r) * d + s] = int(slots.size());
          slots.emplace_back(r, s);
        }
    if (slots.empty()) continue;

    std::vector<SparseVec> eqs;
    auto add_entry = [](SparseVec& eq, int idx, const Scalar& c) {
      Scalar& slot = eq[idx];
      slot += c;
      if (slot.is_zero()) eq.erase(idx);
    };
    auto add_family = [&](const Mat& mv, const Mat& mw) {
      for (int r = 0; r < d; ++r)
        for (int s = 0; s < d; ++s) {
          SparseVec eq;
          for (int t = 0; t < d; ++t) {
            if (!mv.at(r, t).is_zero() && pos[size_t(t) * d + s] >= 0)
              add_entry(eq, pos[size_t(t) * d + s], mv.at(r, t));
            if (pos[size_t(r) * d + t] >= 0 && !mw.at(t, s).is_zero())
              add_entry(eq, pos[size_t(r) * d + t], -mw.at(t, s));
          }
          if (!eq.empty()) eqs.push_back(std::move(eq));
        }
    };
    for (int i = 0; i < a.dim(); ++i) {
      add_family(v.m(i), w.m(i));
      if (v.has_h()) add_family(v.h(i), w.h(i));
    }

    std::vector<Vec> sol;
    if (eqs.empty()) {
      for (int i = 0; i < int(slots.size()); ++i) sol.push_back(basis_vec(int(slots.size()), i));
    } else {
      SparseMatrix sys;
      sys.rows = int(eqs.size());
      sys.cols = int(slots.size());
      for (int r = 0; r < sys.rows; ++r)
        for (const auto& [cidx, c] : eqs[size_t(r)]) sys.set(r, cidx, c);
      sol = kernel(sys);
    }
    total_dim += int(sol.size());
    if (sol.empty()) continue;

    auto materialize = [&](const Vec& coords) {
      Mat f(d, d);
      for (size_t t = 0; t < slots.size(); ++t) f.at(slots[t].first, slots[t].second) = coords[t];
      return f;
    };
    std::vector<Mat> basis;
    for (const Vec& s : sol) basis.push_back(materialize(s));

    auto accept = [&](const Mat& cand) -> bool {
      auto ci = inverse(cand);
      if (!ci) return false;
      out.found = true;
      out.parity = pi;
      out.map = cand;
      out.intertwiner_dim = int(sol.size());
      out.note = "ok";
      return true;
    };

    long attempts = 0;
    const long cap = 20000;
    for (const Mat& b : basis) {
      ++attempts;
      if (accept(b)) return out;
    }
    if (basis.size() > 1) {
      std::vector<int> c(basis.size(), -coeff_bound);
      bool done = false;
      while (!done && attempts < cap) {
        int first_nz = -1;
        for (size_t t = 0; t < c.size(); ++t)
          if (c[t] != 0) {
            first_nz = int(t);
            break;
          }
        bool single_unit =
            first_nz >= 0 && std::count_if(c.begin(), c.end(), [](int x) { return x != 0; }) == 1 &&
            std::abs(c[size_t(first_nz)]) == 1;
        if (first_nz >= 0 && c[size_t(first_nz)] > 0 && !single_unit) {
          Mat cand(d, d);
          for (size_t t = 0; t < basis.size(); ++t)
            if (c[t] != 0) cand = cand + basis[t].scaled(Scalar(c[t]));
          ++attempts;
          if (accept(cand)) return out;
        }
        size_t t = 0;
        for (; t < c.size(); ++t) {
          if (c[t] < coeff_bound) {
            ++c[t];
            break;
          }
          c[t] = -coeff_bound;
        }
        done = t == c.size();
      }
      if (attempts >= cap) exhausted = true;
    }
  }

  out.intertwiner_dim = total_dim;
  if (total_dim == 0) {
    out.conclusive_none = true;
    out.note = "the intertwiner space is zero";
  } else {
    out.conclusive_none = false;
    out.note = exhausted ? "intertwiners exist, invertibility search exhausted"
                         : "intertwiners exist, none invertible with small integer coefficients";
  }
  return out;
}

ContactIrrepProfile identify_contact_irrep(const SuperModule& v) {
  if (v.kind() != ModuleKind::contact)
    throw error("identify_contact_irrep expects a contact-kind module");
  const SuperAlgebra& a = v.algebra();
  int n = log2_dim(a.dim(), "identify_contact_irrep");
  if (!same_algebra(a, gn_structure_constants(n)))
    throw error("identify_contact_irrep expects a module over the dense Grassmann structure constants");
  const int d = v.dim();
  if (d != a.dim())
    throw error("identify_contact_irrep: expected module dimension " + std::to_string(a.dim()));

  auto gen = [&](int i) { return 1 << (i - 1); };  // algebra index of the i-th generator

  // Lowest vector: the joint kernel of the dot actions of the generators.
  Mat stacked(d, n * d);
  for (int i = 1; i <= n; ++i) {
    const Mat& mg = v.m(gen(i));
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) stacked.at(r, (i - 1) * d + c) = mg.at(r, c);
  }
  std::vector<Vec> low = left_kernel(stacked);
  if (low.empty()) throw error("identify_contact_irrep: no lowest vector");
  if (low.size() > 1)
    throw error("identify_contact_irrep: lowest space has dimension " +
                std::to_string(low.size()) + ", the module is not irreducible");
  Vec v0 = low[0];
  auto pv = v.parity_of(v0);
  if (!pv) throw error("identify_contact_irrep: lowest vector is not parity-homogeneous");

  Mat h1 = v.h_of(to_sparse(a.unit()));
  Scalar alpha = h1.at(0, 0);
  if (!(h1 == Mat::identity(d).scaled(alpha)))
    throw error("identify_contact_irrep: the unit does not act as a scalar under the bracket");
  Scalar beta = -alpha / Scalar(2);

  // Iterated bracket vectors, generators applied in increasing order.
  std::vector<Vec> vi;
  vi.resize(size_t(d));
  vi[0] = v0;
  for (int mask = 1; mask < d; ++mask) {
    int top = 31 - std::countl_zero(unsigned(mask));  // highest generator applied last
    vi[size_t(mask)] = v.h(1 << top).apply(vi[size_t(mask & ~(1 << top))]);
  }
  {
    EchelonBasis span(d);
    for (const Vec& x : vi) span.insert(x);
    if (span.dim() != d)
      throw error("identify_contact_irrep: iterated bracket vectors span only " +
                  std::to_string(span.dim()) + " dimensions, the module is not irreducible");
  }

  // The four action laws of the iterated basis.
  Scalar half_alpha = alpha / Scalar(2);
  for (int mask = 0; mask < d; ++mask) {
    int k = std::popcount(unsigned(mask));
    for (int j = 1; j <= n; ++j) {
      int bit = 1 << (j - 1);
      Vec dot = v.m(bit).apply(vi[size_t(mask)]);
      Vec br = v.h(bit).apply(vi[size_t(mask)]);
      std::string at = " at I = " + mask_label(Mask(mask)) + ", j = " + std::to_string(j);
      if (!(mask & bit)) {
        if (!is_zero_vec(dot))
          throw error("identify_contact_irrep: law 'dot kills a missing index' fails" + at);
        int s = std::popcount(unsigned(mask) >> j);  // indices above j
        Vec want = scale(sign_scalar(s), vi[size_t(mask | bit)]);
        if (!(br == want))
          throw error("identify_contact_irrep: law 'bracket appends a missing index' fails" + at);
      } else {
        int s = std::popcount(unsigned(mask) & unsigned(bit - 1)) + 1;  // position of j
        Scalar sg = sign_scalar(k - s - 1);
        if (!(dot == scale(sg, vi[size_t(mask & ~bit)])))
          throw error("identify_contact_irrep: law 'dot strips a present index' fails" + at);
        if (!(br == scale(sg * half_alpha, vi[size_t(mask & ~bit)])))
          throw error("identify_contact_irrep: law 'bracket scales out a present index' fails" + at);
      }
    }
  }

  bool straight = (*pv == (n & 1));
  SuperModule target = gn_beta(n, beta);
  if (!straight) target = opposite(target);

  // Closed-form matching map: the iterated vector for I goes to the mirrored
  // complement monomial with a sign depending on |I| and the index sum.
  Mat b(d, d), phi(d, d);
  for (int mask = 0; mask < d; ++mask) {
    for (int c = 0; c < d; ++c) b.at(mask, c) = vi[size_t(mask)][size_t(c)];
    int k = std::popcount(unsigned(mask));
    int idx_sum = 0;
    for (int j = 1; j <= n; ++j)
      if (mask & (1 << (j - 1))) idx_sum += j;
    phi.at(mask, (d - 1) & ~mask) = sign_scalar(k * (n - 1) + idx_sum);
  }
  auto binv = inverse(b);
  if (!binv) throw error("identify_contact_irrep: iterated basis matrix is singular");
  Mat iso = *binv * phi;

  ContactIrrepProfile prof;
  prof.alpha = alpha;
  prof.beta = beta;
  prof.lowest = v0;
  prof.straight = straight;
  prof.note = "closed-form map";

  bool ok = true;
  for (int i = 0; i < a.dim() && ok; ++i)
    ok = v.m(i) * iso == iso * target.m(i) && v.h(i) * iso == iso * target.h(i);
  if (ok) {
    prof.iso = iso;
  } else {
    IsoWitness w = find_isomorphism(v, target, IsoParity::even);
    if (!w.found)
      throw error("identify_contact_irrep: the module does not match the model family");
    prof.iso = w.map;
    prof.note = "closed-form map failed its check, solver map substituted";
  }
  return prof;
}

}  // namespace psg
