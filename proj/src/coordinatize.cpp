#include "psg/coordinatize.hpp"

#include <bit>

#include "psg/grassmann.hpp"

namespace psg {

namespace {

SparseVec sparsify(const Vec& v) {
  SparseVec out;
  for (int i = 0; i < int(v.size()); ++i)
    if (!v[size_t(i)].is_zero()) out[i] = v[size_t(i)];
  return out;
}

Vec vec_diff(const Vec& a, const Vec& b) {
  Vec d(a.size());
  for (size_t t = 0; t < a.size(); ++t) d[t] = a[t] - b[t];
  return d;
}

}  // namespace

IdentityReport check_embedding(const SuperAlgebra& p, const Embedding& emb) {
  if (!p.has_unit()) throw error("the ambient algebra must be unital");
  if (!p.has_bracket()) throw error("the ambient algebra must carry a bracket");
  const int d = p.dim();
  for (const auto& img : emb.images)
    if (int(img.size()) != d) throw error("a generator image has the wrong dimension");
  if (int(emb.unit.size()) != d) throw error("the declared unit has the wrong dimension");

  IdentityReport rep;
  rep.identity = "grassmann-embedding";
  auto fail = [&](std::vector<int> tuple, std::string desc, Vec defect) {
    rep.counterexample = Counterexample{std::move(tuple), std::move(desc), std::move(defect)};
    return rep;
  };

  ++rep.tuples_checked;
  if (emb.unit != p.unit())
    return fail({}, "the declared unit is not the ambient unit", vec_diff(emb.unit, p.unit()));

  const int n = int(emb.images.size());
  for (int i = 0; i < n; ++i) {
    Vec bad = zero_vec(d);
    bool leak = false;
    for (int c = 0; c < d; ++c)
      if (!emb.images[size_t(i)][size_t(c)].is_zero() && p.parity(c) == 0) {
        bad[size_t(c)] = emb.images[size_t(i)][size_t(c)];
        leak = true;
      }
    ++rep.tuples_checked;
    if (leak)
      return fail({i}, "the image of generator " + std::to_string(i + 1) + " is not odd", bad);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const Vec &u = emb.images[size_t(i)], &v = emb.images[size_t(j)];
      ++rep.tuples_checked;
      if (i == j) {
        Vec sq = p.dot(u, u);
        if (!is_zero_vec(sq))
          return fail({i, i}, "the square of generator " + std::to_string(i + 1) + " is nonzero",
                      sq);
      } else {
        Vec anti = p.dot(u, v);
        Vec rev = p.dot(v, u);
        for (size_t t = 0; t < anti.size(); ++t) anti[t] += rev[t];
        if (!is_zero_vec(anti))
          return fail({i, j},
                      "generators " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                          " fail to anticommute",
                      anti);
      }
      Vec br = p.br(u, v);
      if (i == j)
        for (size_t t = 0; t < br.size(); ++t) br[t] += p.unit()[t];
      ++rep.tuples_checked;
      if (!is_zero_vec(br))
        return fail({i, j},
                    "the bracket of generators " + std::to_string(i + 1) + " and " +
                        std::to_string(j + 1) + " is off",
                    br);
    }
  rep.pass = true;
  return rep;
}

std::vector<Vec> centralizer(const SuperAlgebra& p, const Embedding& emb) {
  const int d = p.dim(), n = int(emb.images.size());
  SparseMatrix sys;
  sys.rows = n * d;
  sys.cols = d;
  for (int i = 0; i < n; ++i) {
    SparseVec img = sparsify(emb.images[size_t(i)]);
    for (int j = 0; j < d; ++j) {
      SparseVec w = p.br(SparseVec{{j, Scalar(1)}}, img);
      for (const auto& [c, v] : w) sys.set(i * d + c, j, v);
    }
  }
  EchelonBasis even(d), odd(d);
  for (const auto& v : kernel(sys)) {
    Vec v0 = zero_vec(d), v1 = zero_vec(d);
    for (int c = 0; c < d; ++c) (p.parity(c) ? v1 : v0)[size_t(c)] = v[size_t(c)];
    even.insert(std::move(v0));
    odd.insert(std::move(v1));
  }
  std::vector<Vec> out = even.rows();
  out.insert(out.end(), odd.rows().begin(), odd.rows().end());

  EchelonBasis span(d);
  for (const auto& row : out) span.insert(row);
  for (const auto& u : out)
    for (const auto& v : out) {
      if (!span.contains(p.dot(u, v)))
        throw error("centralizer is not closed under the product");
      if (!span.contains(p.br(u, v)))
        throw error("centralizer is not closed under the bracket");
    }
  return out;
}

Mat coords_in_span(const std::vector<Vec>& basis, const std::vector<Vec>& targets) {
  const int k = int(basis.size());
  const int d = k ? int(basis.front().size()) : 0;
  SparseMatrix bt;
  bt.rows = d;
  bt.cols = k;
  for (int c = 0; c < k; ++c)
    for (int r = 0; r < d; ++r)
      if (!basis[size_t(c)][size_t(r)].is_zero()) bt.set(r, c, basis[size_t(c)][size_t(r)]);
  Mat out(int(targets.size()), k);
  for (int t = 0; t < int(targets.size()); ++t) {
    auto sol = solve_linear(bt, targets[size_t(t)]);
    if (!sol.particular) throw error("vector falls outside the span");
    for (int c = 0; c < k; ++c) out.at(t, c) = sol.particular.value()[size_t(c)];
  }
  return out;
}

namespace {

SuperAlgebra subalgebra_on(const SuperAlgebra& p, const std::vector<Vec>& basis) {
  const int k = int(basis.size());
  GradedSpace sp;
  sp.dim = k;
  sp.parity.resize(size_t(k));
  std::vector<std::string> labels;
  for (int r = 0; r < k; ++r) {
    auto par = p.parity_of(basis[size_t(r)]);
    if (!par) throw error("subalgebra basis vector is not homogeneous");
    sp.parity[size_t(r)] = par.value();
    labels.push_back("a" + std::to_string(r + 1));
  }
  std::vector<Vec> prods;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      prods.push_back(p.dot(basis[size_t(i)], basis[size_t(j)]));
      prods.push_back(p.br(basis[size_t(i)], basis[size_t(j)]));
    }
  prods.push_back(p.unit());
  Mat co = coords_in_span(basis, prods);
  ProductTable dot(size_t(k) * k), br(size_t(k) * k);
  int row = 0;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      SparseVec drow, brow;
      for (int c = 0; c < k; ++c) {
        if (!co.at(row, c).is_zero()) drow[c] = co.at(row, c);
        if (!co.at(row + 1, c).is_zero()) brow[c] = co.at(row + 1, c);
      }
      dot[size_t(i) * k + j] = std::move(drow);
      br[size_t(i) * k + j] = std::move(brow);
      row += 2;
    }
  Vec unit = zero_vec(k);
  for (int c = 0; c < k; ++c) unit[size_t(c)] = co.at(row, c);
  return SuperAlgebra(sp, std::move(dot), std::move(br), std::move(unit), std::move(labels));
}

}  // namespace

Embedding right_factor_embedding(const SuperAlgebra& q, int n) {
  if (!q.has_unit()) throw error("the left factor must be unital");
  const int g = 1 << n, d = q.dim() * g;
  Embedding emb;
  emb.unit = zero_vec(d);
  for (int r = 0; r < q.dim(); ++r) emb.unit[size_t(r) * g] = q.unit()[size_t(r)];
  for (int i = 0; i < n; ++i) {
    Vec img = zero_vec(d);
    for (int r = 0; r < q.dim(); ++r) img[size_t(r) * g + (size_t(1) << i)] = q.unit()[size_t(r)];
    emb.images.push_back(std::move(img));
  }
  return emb;
}

CoordinatizationResult coordinatization(const SuperAlgebra& p, const Embedding& emb) {
  auto embrep = check_embedding(p, emb);
  if (!embrep.pass)
    throw error("embedding check failed: " +
                (embrep.counterexample ? embrep.counterexample->description : "unknown relation"));

  std::vector<Vec> cen = centralizer(p, emb);
  const int n = int(emb.images.size());
  const int d = p.dim(), ka = int(cen.size());
  const int g = 1 << n;
  const long expected = long(ka) * g;

  std::vector<Vec> img_mask;
  img_mask.resize(size_t(g));
  img_mask[0] = p.unit();
  for (int m = 1; m < g; ++m) {
    int top = 31 - std::countl_zero(unsigned(m));
    img_mask[size_t(m)] = p.dot(img_mask[size_t(m & ~(1 << top))], emb.images[size_t(top)]);
  }

  Mat w(int(expected), d);
  EchelonBasis span(d);
  int dep_r = -1, dep_m = -1;
  for (int r = 0; r < ka; ++r)
    for (int m = 0; m < g; ++m) {
      Vec row = p.dot(cen[size_t(r)], img_mask[size_t(m)]);
      for (int c = 0; c < d; ++c) w.at(r * g + m, c) = row[size_t(c)];
      if (!span.insert(std::move(row)) && dep_r < 0) {
        dep_r = r;
        dep_m = m;
      }
    }
  if (expected != d || span.dim() != d) {
    std::string msg = "the coordinates do not fill the ambient algebra: dim A = " +
                      std::to_string(ka) + ", dim A * 2^n = " + std::to_string(expected) +
                      ", ambient dimension = " + std::to_string(d);
    if (dep_r >= 0)
      msg += "; the first dependent row is (a" + std::to_string(dep_r + 1) + ", " +
             mask_label(Mask(dep_m)) + "), its product lies in the span of the rows before it";
    else
      msg += "; the rows are independent but span only " + std::to_string(span.dim()) +
             " dimensions";
    throw inconsistency(msg);
  }

  SuperAlgebra a = subalgebra_on(p, cen);
  SuperAlgebra model = tensor_product(a, gn_structure_constants(n));
  auto map_rep = algebra_map_report(model, p, w);
  if (!map_rep.pass)
    throw inconsistency(
        "the coordinate map does not preserve the structure constants: " +
        (map_rep.counterexample ? map_rep.counterexample->description : "unknown pair"));

  IsoWitness wit;
  wit.found = true;
  wit.parity = 0;
  wit.map = std::move(w);
  wit.note = "rows (a_r, e_I) against the ambient basis; structure constants certified";
  return {std::move(a), std::move(wit)};
}

}  // namespace psg
