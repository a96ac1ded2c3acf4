#include "psg/brackets.hpp"

namespace psg {

BracketKind bracket_kind_from_string(std::string_view s) {
  if (s == "poisson") return BracketKind::poisson;
  if (s == "contact" || s == "contact-lie") return BracketKind::contact;
  if (s == "jordan") return BracketKind::jordan;
  throw error("unknown bracket kind '" + std::string(s) + "'");
}

std::string to_string(BracketKind k) {
  switch (k) {
    case BracketKind::poisson: return "poisson";
    case BracketKind::contact: return "contact-lie";
    case BracketKind::jordan: return "jordan";
  }
  throw error("bad bracket kind value");
}

const std::string& suite_for(BracketKind k) {
  static const std::string poisson = "poisson", contact = "contact", jordan = "jordan-bracket";
  switch (k) {
    case BracketKind::poisson: return poisson;
    case BracketKind::contact: return contact;
    case BracketKind::jordan: return jordan;
  }
  throw error("bad bracket kind value");
}

Vec d_operator(const SuperAlgebra& a, BracketKind kind, const Vec& x) {
  if (!a.has_bracket()) throw error("d_operator: algebra has no bracket");
  if (!a.has_unit()) throw error("d_operator: algebra has no unit");
  if (kind == BracketKind::jordan) return a.br(x, a.unit());
  return a.br(a.unit(), x);
}

namespace {

void require_pass(const SuperAlgebra& a, const std::vector<std::string>& names, const char* who) {
  for (const auto& name : names) {
    auto rep = check_identity(a, name);
    if (!rep.pass)
      throw error(std::string(who) + ": input bracket fails " + rep.identity + " at " +
                  rep.counterexample->description);
  }
}

}  // namespace

SuperAlgebra jordan_from_contact(const SuperAlgebra& a) {
  if (!a.has_bracket()) throw error("jordan_from_contact: algebra has no bracket");
  if (!a.has_unit()) throw error("jordan_from_contact: algebra has no unit");
  require_pass(a, {"super-anticommutativity", "super-jacobi", "contact-leibniz"},
               "jordan_from_contact");
  int d = a.dim();
  SparseVec one = to_sparse(a.unit());
  Scalar half(1, 2);
  ProductTable nb(size_t(d) * d);
  for (int i = 0; i < d; ++i) {
    SparseVec di = a.br(one, SparseVec{{i, Scalar(1)}});
    for (int j = 0; j < d; ++j) {
      SparseVec dj = a.br(one, SparseVec{{j, Scalar(1)}});
      SparseVec r = a.br_b(i, j);
      sparse_add_scaled(r, -half, a.dot(SparseVec{{i, Scalar(1)}}, dj));
      sparse_add_scaled(r, half, a.dot(di, SparseVec{{j, Scalar(1)}}));
      nb[size_t(i) * d + j] = std::move(r);
    }
  }
  ProductTable dot(size_t(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) dot[size_t(i) * d + j] = a.dot_b(i, j);
  return SuperAlgebra(a.space(), std::move(dot), std::move(nb), a.unit(), a.labels());
}

SuperAlgebra contact_from_jordan(const SuperAlgebra& a) {
  if (!a.has_bracket()) throw error("contact_from_jordan: algebra has no bracket");
  if (!a.has_unit()) throw error("contact_from_jordan: algebra has no unit");
  require_pass(a,
               {"super-anticommutativity", "jordan-bracket-leibniz", "jordan-bracket-jacobi",
                "jordan-bracket-odd"},
               "contact_from_jordan");
  int d = a.dim();
  SparseVec one = to_sparse(a.unit());
  ProductTable nb(size_t(d) * d);
  for (int i = 0; i < d; ++i) {
    SparseVec di = a.br(one, SparseVec{{i, Scalar(1)}});
    for (int j = 0; j < d; ++j) {
      SparseVec dj = a.br(one, SparseVec{{j, Scalar(1)}});
      SparseVec r = a.br_b(i, j);
      sparse_add_scaled(r, Scalar(1), a.dot(SparseVec{{i, Scalar(1)}}, dj));
      sparse_add_scaled(r, Scalar(-1), a.dot(di, SparseVec{{j, Scalar(1)}}));
      nb[size_t(i) * d + j] = std::move(r);
    }
  }
  ProductTable dot(size_t(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) dot[size_t(i) * d + j] = a.dot_b(i, j);
  return SuperAlgebra(a.space(), std::move(dot), std::move(nb), a.unit(), a.labels());
}

SuperAlgebra kantor_double(const SuperAlgebra& a) {
  if (!a.has_bracket()) throw error("kantor_double: algebra has no bracket");
  require_pass(a, {"supercommutativity", "associativity"}, "kantor_double");
  int d = a.dim(), dd = 2 * d;
  GradedSpace sp;
  sp.dim = dd;
  sp.parity.resize(size_t(dd));
  for (int i = 0; i < d; ++i) {
    sp.parity[size_t(i)] = a.parity(i);
    sp.parity[size_t(d + i)] = a.parity(i) ^ 1;
  }
  ProductTable dot(size_t(dd) * dd);
  auto shift = [d](const SparseVec& v) {
    SparseVec r;
    for (const auto& [k, c] : v) r[k + d] = c;
    return r;
  };
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const SparseVec& ab = a.dot_b(i, j);
      Scalar sj = sign_scalar(a.parity(j));
      dot[size_t(i) * dd + j] = ab;
      dot[size_t(i) * dd + (d + j)] = shift(ab);
      SparseVec left = shift(ab);
      for (auto& [k, c] : left) c = sj * c;
      dot[size_t(d + i) * dd + j] = std::move(left);
      SparseVec bb = a.br_b(i, j);
      for (auto& [k, c] : bb) c = sj * c;
      dot[size_t(d + i) * dd + (d + j)] = std::move(bb);
    }
  std::optional<Vec> unit;
  if (a.has_unit()) {
    Vec u = zero_vec(dd);
    for (int i = 0; i < d; ++i) u[size_t(i)] = a.unit()[size_t(i)];
    unit = u;
  }
  std::vector<std::string> labels;
  labels.reserve(size_t(dd));
  for (int i = 0; i < d; ++i) labels.push_back(a.label(i));
  for (int i = 0; i < d; ++i) labels.push_back(a.label(i) + "~");
  return SuperAlgebra(std::move(sp), std::move(dot), std::nullopt, std::move(unit),
                      std::move(labels));
}

}  // namespace psg
