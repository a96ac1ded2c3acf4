#include "psg/superalgebra.hpp"

#include <algorithm>
#include <functional>

namespace psg {

namespace {

SparseVec basis_sv(int i) { return SparseVec{{i, Scalar(1)}}; }

void require_homogeneous_table(const GradedSpace& s, const ProductTable& t, const char* what) {
  if (t.size() != size_t(s.dim) * size_t(s.dim))
    throw error(std::string(what) + ": table size mismatch");
  for (int i = 0; i < s.dim; ++i)
    for (int j = 0; j < s.dim; ++j) {
      int want = (s.parity[size_t(i)] + s.parity[size_t(j)]) & 1;
      for (const auto& [k, c] : t[size_t(i) * s.dim + j]) {
        if (k < 0 || k >= s.dim) throw error(std::string(what) + ": index out of range");
        if (c.is_zero()) throw error(std::string(what) + ": stored zero coefficient");
        if (s.parity[size_t(k)] != want)
          throw error(std::string(what) + ": product of basis " + std::to_string(i) + "," +
                      std::to_string(j) + " is not parity-homogeneous");
      }
    }
}

}  // namespace

SuperAlgebra::SuperAlgebra(GradedSpace space, ProductTable dot, std::optional<ProductTable> bracket,
                           std::optional<Vec> unit, std::vector<std::string> labels)
    : space_(std::move(space)),
      dot_(std::move(dot)),
      bracket_(std::move(bracket)),
      unit_(std::move(unit)),
      labels_(std::move(labels)) {
  if (space_.dim <= 0) throw error("algebra: dimension must be positive");
  if (int(space_.parity.size()) != space_.dim) throw error("algebra: parity vector size mismatch");
  for (int p : space_.parity)
    if (p != 0 && p != 1) throw error("algebra: parity entries must be 0 or 1");
  require_homogeneous_table(space_, dot_, "dot");
  if (bracket_) require_homogeneous_table(space_, *bracket_, "bracket");
  if (unit_) {
    if (int(unit_->size()) != space_.dim) throw error("algebra: unit vector size mismatch");
    for (int i = 0; i < space_.dim; ++i) {
      Vec bi = to_dense(basis_sv(i), space_.dim);
      if (this->dot(*unit_, bi) != bi || this->dot(bi, *unit_) != bi)
        throw error("algebra: declared unit fails the unit law at basis " + std::to_string(i));
    }
  }
  if (!labels_.empty() && int(labels_.size()) != space_.dim)
    throw error("algebra: label count mismatch");
}

const Vec& SuperAlgebra::unit() const {
  if (!unit_) throw error("algebra: no unit available");
  return *unit_;
}

const SparseVec& SuperAlgebra::br_b(int i, int j) const {
  if (!bracket_) throw error("algebra: no bracket available");
  return (*bracket_)[size_t(i) * space_.dim + j];
}

SparseVec SuperAlgebra::dot(const SparseVec& x, const SparseVec& y) const {
  SparseVec r;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) sparse_add_scaled(r, a * b, dot_b(i, j));
  return r;
}

SparseVec SuperAlgebra::br(const SparseVec& x, const SparseVec& y) const {
  SparseVec r;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) sparse_add_scaled(r, a * b, br_b(i, j));
  return r;
}

Vec SuperAlgebra::dot(const Vec& x, const Vec& y) const {
  return to_dense(dot(to_sparse(x), to_sparse(y)), space_.dim);
}

Vec SuperAlgebra::br(const Vec& x, const Vec& y) const {
  return to_dense(br(to_sparse(x), to_sparse(y)), space_.dim);
}

std::string SuperAlgebra::label(int i) const {
  if (!labels_.empty()) return labels_[size_t(i)];
  return "b" + std::to_string(i);
}

std::optional<int> SuperAlgebra::parity_of(const Vec& v) const {
  std::optional<int> p;
  for (int i = 0; i < space_.dim; ++i) {
    if (v[size_t(i)].is_zero()) continue;
    if (!p)
      p = parity(i);
    else if (*p != parity(i))
      return std::nullopt;
  }
  return p;
}

namespace {

struct Checker {
  const SuperAlgebra& a;
  IdentityReport rep;

  explicit Checker(const SuperAlgebra& alg, std::string name) : a(alg) {
    rep.identity = std::move(name);
  }

  SparseVec D_contact(int i) const { return a.br(to_sparse(a.unit()), basis_sv(i)); }
  SparseVec D_jordan(int i) const { return a.br(basis_sv(i), to_sparse(a.unit())); }

  bool fail(std::vector<int> tuple, std::string desc, const SparseVec& defect) {
    rep.pass = false;
    rep.counterexample = Counterexample{std::move(tuple), std::move(desc), to_dense(defect, a.dim())};
    return false;
  }

  std::string tup_desc(const std::vector<int>& t) const {
    std::string s = "(";
    for (size_t k = 0; k < t.size(); ++k) s += a.label(t[k]) + (k + 1 < t.size() ? "," : "");
    return s + ")";
  }

  template <class F>
  bool pairs(F f) {
    for (int i = 0; i < a.dim(); ++i)
      for (int j = 0; j < a.dim(); ++j) {
        ++rep.tuples_checked;
        SparseVec d = f(i, j);
        if (!d.empty()) return fail({i, j}, tup_desc({i, j}), d);
      }
    rep.pass = true;
    return true;
  }

  template <class F>
  bool triples(F f) {
    for (int i = 0; i < a.dim(); ++i)
      for (int j = 0; j < a.dim(); ++j)
        for (int k = 0; k < a.dim(); ++k) {
          ++rep.tuples_checked;
          SparseVec d = f(i, j, k);
          if (!d.empty()) return fail({i, j, k}, tup_desc({i, j, k}), d);
        }
    rep.pass = true;
    return true;
  }
};

SparseVec sv_sub(SparseVec x, const SparseVec& y) {
  sparse_add_scaled(x, Scalar(-1), y);
  return x;
}

}  // namespace

IdentityReport check_identity(const SuperAlgebra& a, const std::string& name) {
  Checker ck(a, name);
  auto& A = a;
  auto base = basis_sv;

  auto need_bracket = [&] {
    if (!a.has_bracket()) throw error("identity '" + name + "' requires a bracket");
  };
  auto need_unit = [&] {
    if (!a.has_unit()) throw error("identity '" + name + "' requires a unit");
  };

  if (name == "supercommutativity") {
    ck.pairs([&](int i, int j) {
      SparseVec d = A.dot_b(i, j);
      sparse_add_scaled(d, -sign_scalar(A.parity(i) * A.parity(j)), A.dot_b(j, i));
      return d;
    });
  } else if (name == "associativity") {
    ck.triples([&](int i, int j, int k) {
      return sv_sub(A.dot(A.dot_b(i, j), base(k)), A.dot(base(i), A.dot_b(j, k)));
    });
  } else if (name == "super-anticommutativity") {
    need_bracket();
    ck.pairs([&](int i, int j) {
      SparseVec d = A.br_b(i, j);
      sparse_add_scaled(d, sign_scalar(A.parity(i) * A.parity(j)), A.br_b(j, i));
      return d;
    });
  } else if (name == "super-jacobi") {
    need_bracket();
    ck.triples([&](int i, int j, int k) {
      SparseVec d = A.br(base(i), A.br_b(j, k));
      sparse_add_scaled(d, Scalar(-1), A.br(A.br_b(i, j), base(k)));
      sparse_add_scaled(d, -sign_scalar(A.parity(i) * A.parity(j)), A.br(base(j), A.br_b(i, k)));
      return d;
    });
  } else if (name == "poisson-leibniz" || name == "contact-leibniz" ||
             name == "jordan-bracket-leibniz") {
    need_bracket();
    if (name != "poisson-leibniz") need_unit();
    ck.triples([&](int i, int j, int k) {
      SparseVec d = A.br(base(i), A.dot_b(j, k));
      sparse_add_scaled(d, Scalar(-1), A.dot(A.br_b(i, j), base(k)));
      sparse_add_scaled(d, -sign_scalar(A.parity(i) * A.parity(j)), A.dot(base(j), A.br_b(i, k)));
      if (name == "contact-leibniz")
        sparse_add_scaled(d, Scalar(-1), A.dot(ck.D_contact(i), A.dot_b(j, k)));
      else if (name == "jordan-bracket-leibniz")
        sparse_add_scaled(d, Scalar(1), A.dot(ck.D_jordan(i), A.dot_b(j, k)));
      return d;
    });
  } else if (name == "jordan-bracket-jacobi") {
    need_bracket();
    need_unit();
    ck.triples([&](int i, int j, int k) {
      int pi = A.parity(i), pj = A.parity(j), pk = A.parity(k);
      Scalar s_jk = sign_scalar(pi * pj + pi * pk);  // sign moving a past b,c
      Scalar s_ki = sign_scalar(pi * pk + pj * pk);  // sign moving c,a in front
      SparseVec d = A.br(A.br_b(i, j), base(k));
      sparse_add_scaled(d, s_jk, A.br(A.br_b(j, k), base(i)));
      sparse_add_scaled(d, s_ki, A.br(A.br_b(k, i), base(j)));
      sparse_add_scaled(d, Scalar(1), A.dot(A.br_b(i, j), ck.D_jordan(k)));
      sparse_add_scaled(d, s_jk, A.dot(A.br_b(j, k), ck.D_jordan(i)));
      sparse_add_scaled(d, s_ki, A.dot(A.br_b(k, i), ck.D_jordan(j)));
      return d;
    });
  } else if (name == "jordan-bracket-odd") {
    need_bracket();
    need_unit();
    // Cubic identity: evaluated on single odd basis vectors, signed pairs and
    // triple sums, which determines every coefficient of the cubic map when the
    // characteristic is not 2.
    std::vector<int> odd;
    for (int i = 0; i < a.dim(); ++i)
      if (a.parity(i) == 1) odd.push_back(i);
    auto q_defect = [&](const SparseVec& x) {
      SparseVec xx = A.br(x, x);
      SparseVec d = A.br(xx, x);
      SparseVec dx;
      for (const auto& [i, c] : x) sparse_add_scaled(dx, c, ck.D_jordan(i));
      sparse_add_scaled(d, Scalar(1), A.dot(xx, dx));
      return d;
    };
    auto run = [&]() -> bool {
      for (int i : odd) {
        ++ck.rep.tuples_checked;
        SparseVec d = q_defect(basis_sv(i));
        if (!d.empty()) return ck.fail({i}, "x = " + a.label(i), d);
      }
      for (size_t u = 0; u < odd.size(); ++u)
        for (size_t v = u + 1; v < odd.size(); ++v)
          for (int sgn : {1, -1}) {
            ++ck.rep.tuples_checked;
            SparseVec x = basis_sv(odd[u]);
            sparse_add_scaled(x, Scalar(sgn), basis_sv(odd[v]));
            SparseVec d = q_defect(x);
            if (!d.empty())
              return ck.fail({odd[u], odd[v]},
                             "x = " + a.label(odd[u]) + (sgn > 0 ? " + " : " - ") + a.label(odd[v]),
                             d);
          }
      for (size_t u = 0; u < odd.size(); ++u)
        for (size_t v = u + 1; v < odd.size(); ++v)
          for (size_t w = v + 1; w < odd.size(); ++w) {
            ++ck.rep.tuples_checked;
            SparseVec x = basis_sv(odd[u]);
            sparse_add_scaled(x, Scalar(1), basis_sv(odd[v]));
            sparse_add_scaled(x, Scalar(1), basis_sv(odd[w]));
            SparseVec d = q_defect(x);
            if (!d.empty())
              return ck.fail({odd[u], odd[v], odd[w]},
                             "x = " + a.label(odd[u]) + " + " + a.label(odd[v]) + " + " +
                                 a.label(odd[w]),
                             d);
          }
      ck.rep.pass = true;
      return true;
    };
    run();
  } else if (name == "jordan-superalgebra") {
    // Graded linearization of (x1 x2 . y) x3 = (x1 x2)(y x3) summed over the
    // cyclic shifts of (x1,x2,x3). Each term's sign moves its variables from
    // the reference order (x1,x2,x3,y) to the term's reading order.
    for (int i = 0; i < a.dim(); ++i)
      for (int j = 0; j < a.dim(); ++j)
        for (int k = 0; k < a.dim(); ++k)
          for (int y = 0; y < a.dim(); ++y) {
            ++ck.rep.tuples_checked;
            int pi = a.parity(i), pj = a.parity(j), pk = a.parity(k), q = a.parity(y);
            struct Term {
              int a1, a2, c;
              Scalar sgn;
            };
            Term terms[3] = {
                {i, j, k, sign_scalar(q * pk)},
                {j, k, i, sign_scalar(pi * (pj + pk + q))},
                {k, i, j, sign_scalar(pk * pi + pk * pj + q * pj)},
            };
            SparseVec d;
            for (const auto& t : terms) {
              SparseVec p12 = A.dot_b(t.a1, t.a2);
              sparse_add_scaled(d, t.sgn, A.dot(A.dot(p12, base(y)), base(t.c)));
              sparse_add_scaled(d, -t.sgn, A.dot(p12, A.dot_b(y, t.c)));
            }
            if (!d.empty()) {
              ck.fail({i, j, k, y}, ck.tup_desc({i, j, k, y}), d);
              IdentityReport r = ck.rep;
              return r;
            }
          }
    ck.rep.pass = true;
  } else {
    throw error("unknown identity name '" + name + "'");
  }
  return ck.rep;
}

const std::vector<std::string>& identity_suite(const std::string& suite_name) {
  static const std::vector<std::string> poisson = {"supercommutativity", "associativity",
                                                   "super-anticommutativity", "super-jacobi",
                                                   "poisson-leibniz"};
  static const std::vector<std::string> contact = {"supercommutativity", "associativity",
                                                   "super-anticommutativity", "super-jacobi",
                                                   "contact-leibniz"};
  static const std::vector<std::string> jordan_bracket = {
      "supercommutativity",     "associativity",         "super-anticommutativity",
      "jordan-bracket-leibniz", "jordan-bracket-jacobi", "jordan-bracket-odd"};
  static const std::vector<std::string> jordan = {"supercommutativity", "jordan-superalgebra"};
  static const std::vector<std::string> associative = {"associativity"};
  if (suite_name == "poisson") return poisson;
  if (suite_name == "contact") return contact;
  if (suite_name == "jordan-bracket") return jordan_bracket;
  if (suite_name == "jordan") return jordan;
  if (suite_name == "associative") return associative;
  throw error("unknown identity suite '" + suite_name + "'");
}

std::vector<IdentityReport> check_suite(const SuperAlgebra& a, const std::string& suite_name) {
  std::vector<IdentityReport> out;
  for (const auto& name : identity_suite(suite_name)) out.push_back(check_identity(a, name));
  return out;
}

IdentityReport algebra_map_report(const SuperAlgebra& src, const SuperAlgebra& dst, const Mat& f) {
  if (f.rows() != src.dim() || f.cols() != dst.dim())
    throw error("algebra map has shape " + std::to_string(f.rows()) + "x" +
                std::to_string(f.cols()) + ", algebras have dimensions " +
                std::to_string(src.dim()) + " and " + std::to_string(dst.dim()));
  IdentityReport rep;
  rep.identity = "algebra-map";
  auto row_of = [&](int r) {
    Vec v(size_t(dst.dim()));
    for (int c = 0; c < dst.dim(); ++c) v[size_t(c)] = f.at(r, c);
    return v;
  };
  auto push = [&](const SparseVec& x) {
    Vec v(size_t(dst.dim()));
    for (const auto& [k, ck] : x)
      for (int c = 0; c < dst.dim(); ++c) v[size_t(c)] += ck * f.at(k, c);
    return v;
  };
  auto diff = [](const Vec& a, const Vec& b) {
    Vec d(a.size());
    for (size_t t = 0; t < a.size(); ++t) d[t] = a[t] - b[t];
    return d;
  };
  auto fail = [&](std::vector<int> tuple, std::string desc, Vec defect) {
    rep.counterexample = Counterexample{std::move(tuple), std::move(desc), std::move(defect)};
    return rep;
  };
  for (int i = 0; i < src.dim(); ++i) {
    Vec v = row_of(i);
    Vec bad(size_t(dst.dim()));
    bool any = false;
    for (int c = 0; c < dst.dim(); ++c)
      if (!v[size_t(c)].is_zero() && dst.parity(c) != src.parity(i)) {
        bad[size_t(c)] = v[size_t(c)];
        any = true;
      }
    ++rep.tuples_checked;
    if (any) return fail({i}, "image of " + src.label(i) + " leaks into the wrong parity", bad);
  }
  const bool brackets = src.has_bracket() && dst.has_bracket();
  for (int i = 0; i < src.dim(); ++i)
    for (int j = 0; j < src.dim(); ++j) {
      Vec lhs = dst.dot(row_of(i), row_of(j));
      Vec rhs = push(src.dot_b(i, j));
      ++rep.tuples_checked;
      if (lhs != rhs)
        return fail({i, j}, src.label(i) + " . " + src.label(j), diff(lhs, rhs));
      if (brackets) {
        Vec bl = dst.br(row_of(i), row_of(j));
        Vec br = push(src.br_b(i, j));
        ++rep.tuples_checked;
        if (bl != br)
          return fail({i, j}, "{" + src.label(i) + ", " + src.label(j) + "}", diff(bl, br));
      }
    }
  if (src.has_unit() && dst.has_unit()) {
    Vec lhs = f.apply(src.unit());
    ++rep.tuples_checked;
    if (lhs != dst.unit()) return fail({}, "image of the unit", diff(lhs, dst.unit()));
  }
  rep.pass = true;
  return rep;
}

SuperAlgebra tensor_product(const SuperAlgebra& a, const SuperAlgebra& b) {
  int da = a.dim(), db = b.dim(), d = da * db;
  GradedSpace sp;
  sp.dim = d;
  sp.parity.resize(size_t(d));
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j) sp.parity[size_t(i) * db + j] = (a.parity(i) + b.parity(j)) & 1;

  auto flat = [db](int i, int j) { return i * db + j; };

  ProductTable dot(size_t(d) * d);
  std::optional<ProductTable> bracket;
  if (a.has_bracket() && b.has_bracket()) bracket.emplace(size_t(d) * d);

  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j)
      for (int k = 0; k < da; ++k)
        for (int l = 0; l < db; ++l) {
          Scalar koszul = sign_scalar(b.parity(j) * a.parity(k));
          size_t slot = size_t(flat(i, j)) * d + flat(k, l);
          SparseVec& row = dot[slot];
          for (const auto& [r, ca] : a.dot_b(i, k))
            for (const auto& [s, cb] : b.dot_b(j, l)) {
              Scalar c = koszul * ca * cb;
              if (!c.is_zero()) row[flat(r, s)] = row.count(flat(r, s)) ? row[flat(r, s)] + c : c;
            }
          if (bracket) {
            SparseVec& brow = (*bracket)[slot];
            SparseVec t;
            for (const auto& [r, ca] : a.dot_b(i, k))
              for (const auto& [s, cb] : b.br_b(j, l)) {
                int idx = flat(r, s);
                Scalar c = koszul * ca * cb;
                sparse_add_scaled(t, Scalar(1), SparseVec{{idx, c}});
              }
            for (const auto& [r, ca] : a.br_b(i, k))
              for (const auto& [s, cb] : b.dot_b(j, l)) {
                int idx = flat(r, s);
                Scalar c = koszul * ca * cb;
                sparse_add_scaled(t, Scalar(1), SparseVec{{idx, c}});
              }
            brow = std::move(t);
          }
        }
  // Drop explicit zeros produced by cancellation in the dot table.
  for (auto& row : dot)
    for (auto it = row.begin(); it != row.end();)
      it = it->second.is_zero() ? row.erase(it) : std::next(it);

  std::optional<Vec> unit;
  if (a.has_unit() && b.has_unit()) {
    Vec u = zero_vec(d);
    for (int i = 0; i < da; ++i)
      for (int j = 0; j < db; ++j) {
        Scalar c = a.unit()[size_t(i)] * b.unit()[size_t(j)];
        if (!c.is_zero()) u[size_t(flat(i, j))] = c;
      }
    unit = u;
  }

  std::vector<std::string> labels;
  if (!a.labels().empty() || !b.labels().empty()) {
    labels.resize(size_t(d));
    for (int i = 0; i < da; ++i)
      for (int j = 0; j < db; ++j) labels[size_t(flat(i, j))] = a.label(i) + "*" + b.label(j);
  }
  return SuperAlgebra(std::move(sp), std::move(dot), std::move(bracket), std::move(unit),
                      std::move(labels));
}

std::optional<Vec> detect_unit(const SuperAlgebra& a) {
  int d = a.dim();
  SparseMatrix sys;
  sys.cols = d;
  sys.rows = 2 * d * d;
  Vec rhs = zero_vec(2 * d * d);
  // Unknown u: for all i, u . b_i = b_i and b_i . u = b_i.
  int row = 0;
  for (int i = 0; i < d; ++i) {
    for (int k = 0; k < d; ++k) {
      for (int r = 0; r < d; ++r) {
        Scalar c = [&] {
          auto it = a.dot_b(r, i).find(k);
          return it == a.dot_b(r, i).end() ? Scalar(0) : it->second;
        }();
        if (!c.is_zero()) sys.set(row, r, sys.get(row, r) + c);
      }
      rhs[size_t(row)] = (k == i) ? Scalar(1) : Scalar(0);
      ++row;
    }
    for (int k = 0; k < d; ++k) {
      for (int r = 0; r < d; ++r) {
        Scalar c = [&] {
          auto it = a.dot_b(i, r).find(k);
          return it == a.dot_b(i, r).end() ? Scalar(0) : it->second;
        }();
        if (!c.is_zero()) sys.set(row, r, sys.get(row, r) + c);
      }
      rhs[size_t(row)] = (k == i) ? Scalar(1) : Scalar(0);
      ++row;
    }
  }
  auto res = solve_linear(sys, rhs);
  if (!res.particular) return std::nullopt;
  return *res.particular;
}

SimplicityReport is_simple(const SuperAlgebra& a) {
  int d = a.dim();
  SimplicityReport rep;

  auto right_dot = [&](int i) {
    Mat m(d, d);
    for (int r = 0; r < d; ++r)
      for (const auto& [k, c] : a.dot_b(r, i)) m.at(r, k) = c;
    return m;
  };
  auto left_dot = [&](int i) {
    Mat m(d, d);
    for (int r = 0; r < d; ++r)
      for (const auto& [k, c] : a.dot_b(i, r)) m.at(r, k) = c;
    return m;
  };
  auto right_br = [&](int i) {
    Mat m(d, d);
    for (int r = 0; r < d; ++r)
      for (const auto& [k, c] : a.br_b(r, i)) m.at(r, k) = c;
    return m;
  };
  auto left_br = [&](int i) {
    Mat m(d, d);
    for (int r = 0; r < d; ++r)
      for (const auto& [k, c] : a.br_b(i, r)) m.at(r, k) = c;
    return m;
  };

  std::vector<Mat> seeds;
  for (int i = 0; i < d; ++i) seeds.push_back(right_dot(i));
  for (int i = 0; i < d; ++i) seeds.push_back(left_dot(i));
  if (a.has_bracket()) {
    for (int i = 0; i < d; ++i) seeds.push_back(right_br(i));
    for (int i = 0; i < d; ++i) seeds.push_back(left_br(i));
  }

  auto closure = span_closure(seeds);
  rep.closure_dim = int(closure.size());
  if (rep.closure_dim == d * d) {
    rep.simple = true;
    rep.conclusive = true;
    return rep;
  }

  // Density failed: hunt for an explicit ideal from basis vectors and pairwise sums.
  auto orbit = [&](Vec v) {
    EchelonBasis basis(d);
    std::vector<Vec> work{v};
    basis.insert(v);
    while (!work.empty()) {
      Vec w = work.back();
      work.pop_back();
      for (const auto& s : seeds) {
        Vec img = s.apply(w);
        if (basis.insert(img)) work.push_back(img);
      }
    }
    return basis;
  };

  std::vector<Vec> candidates;
  for (int i = 0; i < d; ++i) candidates.push_back(to_dense(SparseVec{{i, Scalar(1)}}, d));
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Vec v = zero_vec(d);
      v[size_t(i)] = Scalar(1);
      v[size_t(j)] = Scalar(1);
      candidates.push_back(v);
    }
  for (const auto& v : candidates) {
    auto basis = orbit(v);
    if (basis.dim() > 0 && basis.dim() < d) {
      rep.simple = false;
      rep.conclusive = true;
      rep.ideal_witness = basis.rows();
      return rep;
    }
  }
  rep.simple = false;
  rep.conclusive = false;  // not absolutely irreducible, no rational witness found
  return rep;
}

}  // namespace psg
