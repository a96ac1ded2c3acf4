#include "psg/clifford.hpp"

#include <bit>
#include <deque>

#include "psg/grassmann.hpp"

namespace psg {

namespace {

std::string blade_label(Mask m) {
  if (m == 0) return "1";
  std::string s = "v{";
  bool first = true;
  for (int k = 0; k < kMaxGenerators; ++k)
    if (m >> k & 1) {
      if (!first) s += ",";
      s += std::to_string(k + 1);
      first = false;
    }
  return s + "}";
}

void acc_term(std::map<Mask, Scalar>& out, Mask m, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = out.find(m);
  if (it == out.end()) {
    out.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) out.erase(it);
}

// Right-multiply an increasing product by one generator. The recursion peels
// the highest factor: v_t past v_g costs a sign and a contraction f(g,t).
std::map<Mask, Scalar> blade_times_gen(const Mat& f, Mask a, int g) {
  std::map<Mask, Scalar> out;
  const Mask gbit = Mask(1) << g;
  if (a == 0) {
    out[gbit] = Scalar(1);
    return out;
  }
  const int top = 63 - std::countl_zero(a);
  const Mask rest = a & ~(Mask(1) << top);
  if (top < g) {
    out[a | gbit] = Scalar(1);
    return out;
  }
  if (top == g) {
    acc_term(out, rest, f.at(g, g) / Scalar(2));
    return out;
  }
  for (const auto& [m, c] : blade_times_gen(f, rest, g)) acc_term(out, m | (Mask(1) << top), -c);
  acc_term(out, rest, f.at(g, top));
  return out;
}

std::map<Mask, Scalar> blade_mul(const Mat& f, Mask a, Mask b) {
  std::map<Mask, Scalar> acc{{a, Scalar(1)}};
  for (int g = 0; g < 64; ++g) {
    if (!(b >> g & 1)) continue;
    std::map<Mask, Scalar> next;
    for (const auto& [m, c] : acc)
      for (const auto& [m2, c2] : blade_times_gen(f, m, g)) acc_term(next, m2, c * c2);
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

SuperAlgebra clifford(const CliffordSpec& spec) {
  if (spec.d < 0) throw error("negative generator count");
  if (spec.d > 12) throw error("a dense table on 2^" + std::to_string(spec.d) + " products is impractical");
  if (spec.form.rows() != spec.d || spec.form.cols() != spec.d)
    throw error("the form must be " + std::to_string(spec.d) + "x" + std::to_string(spec.d));
  for (int i = 0; i < spec.d; ++i)
    for (int j = i + 1; j < spec.d; ++j)
      if (spec.form.at(i, j) != spec.form.at(j, i)) throw error("the form must be symmetric");

  const int d = 1 << spec.d;
  GradedSpace sp;
  sp.dim = d;
  sp.parity.resize(size_t(d));
  std::vector<std::string> labels;
  labels.resize(size_t(d));
  for (Mask m = 0; m < Mask(d); ++m) {
    sp.parity[size_t(m)] = mask_parity(m);
    labels[size_t(m)] = blade_label(m);
  }
  ProductTable dot(size_t(d) * d);
  for (Mask a = 0; a < Mask(d); ++a)
    for (Mask b = 0; b < Mask(d); ++b) {
      SparseVec row;
      for (const auto& [m, c] : blade_mul(spec.form, a, b)) row[int(m)] = c;
      dot[size_t(a) * d + size_t(b)] = std::move(row);
    }
  Vec unit = zero_vec(d);
  unit[0] = Scalar(1);
  SuperAlgebra out(sp, std::move(dot), std::nullopt, std::move(unit), std::move(labels));

  // The table must reproduce the defining relations exactly.
  for (int i = 0; i < spec.d; ++i) {
    for (int j = 0; j < spec.d; ++j) {
      if (i == j) continue;
      SparseVec anti = out.dot_b(1 << i, 1 << j);
      for (const auto& [t, c] : out.dot_b(1 << j, 1 << i)) {
        anti[t] += c;
        if (anti[t].is_zero()) anti.erase(t);
      }
      SparseVec expect;
      if (!spec.form.at(i, j).is_zero()) expect[0] = spec.form.at(i, j);
      if (anti != expect) throw error("generator relation failed for v_" + std::to_string(i + 1) +
                                      ", v_" + std::to_string(j + 1));
    }
    SparseVec sq = out.dot_b(1 << i, 1 << i);
    SparseVec expect;
    if (!spec.form.at(i, i).is_zero()) expect[0] = spec.form.at(i, i) / Scalar(2);
    if (sq != expect) throw error("square relation failed for v_" + std::to_string(i + 1));
  }
  return out;
}

EnvelopePresentation u_poisson_gn(int n) {
  if (n < 1) throw error("need at least one generator");
  if (2 * n > 12) throw error("envelope impractical beyond n = 6");
  CliffordSpec spec;
  spec.d = 2 * n;
  spec.form = Mat(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    spec.form.at(i, n + i) = Scalar(-1);
    spec.form.at(n + i, i) = Scalar(-1);
  }
  EnvelopePresentation out{clifford(spec), {}, {}};
  const int d = out.algebra.dim();
  for (int i = 0; i < n; ++i) {
    Vec mg = zero_vec(d), bg = zero_vec(d);
    mg[size_t(1) << i] = Scalar(1);
    bg[size_t(1) << (n + i)] = Scalar(1);
    out.mult_gen.push_back(std::move(mg));
    out.bracket_gen.push_back(std::move(bg));
  }
  return out;
}

namespace {

SparseVec sparse_basis(int i) { return SparseVec{{i, Scalar(1)}}; }

Vec densify(const SparseVec& x, int d) {
  Vec v = zero_vec(d);
  for (const auto& [k, c] : x) v[size_t(k)] = c;
  return v;
}

// Span of the one- or two-sided multiplication orbit of the seed.
int orbit_dim(const SuperAlgebra& a, const SparseVec& seed, bool two_sided, EchelonBasis& eb) {
  const int d = a.dim();
  std::deque<SparseVec> work;
  if (eb.insert(densify(seed, d))) work.push_back(seed);
  while (!work.empty()) {
    SparseVec u = std::move(work.front());
    work.pop_front();
    for (int i = 0; i < d; ++i) {
      SparseVec left = a.dot(sparse_basis(i), u);
      if (eb.insert(densify(left, d))) work.push_back(std::move(left));
      if (two_sided) {
        SparseVec right = a.dot(u, sparse_basis(i));
        if (eb.insert(densify(right, d))) work.push_back(std::move(right));
      }
    }
  }
  return eb.dim();
}

}  // namespace

MatrixAlgebraReport verify_matrix_algebra(const SuperAlgebra& a, bool want_irreducible) {
  if (!a.has_unit()) throw error("matrix-algebra verification needs a unit");
  if (!check_identity(a, "associativity").pass)
    throw error("matrix-algebra verification needs an associative product");
  const int d = a.dim();
  MatrixAlgebraReport rep;
  int k = 0;
  while ((k + 1) * (k + 1) <= d) ++k;
  rep.k = k;

  // Center: x with x b_z = b_z x for every basis z.
  SparseMatrix cen;
  cen.rows = d * d;
  cen.cols = d;
  for (int z = 0; z < d; ++z)
    for (int i = 0; i < d; ++i) {
      SparseVec diff = a.dot_b(i, z);
      for (const auto& [c, v] : a.dot_b(z, i)) {
        diff[c] -= v;
        if (diff[c].is_zero()) diff.erase(c);
      }
      for (const auto& [c, v] : diff) cen.set(z * d + c, i, v);
    }
  rep.center_dim = int(kernel(cen).size());

  if (k * k != d) {
    rep.conclusive = true;
    rep.note = "dimension " + std::to_string(d) + " is not a perfect square";
    return rep;
  }
  if (rep.center_dim != 1) {
    rep.conclusive = true;
    rep.note = "center has dimension " + std::to_string(rep.center_dim);
    return rep;
  }

  rep.basis_ideals_full = true;
  for (int r = 0; r < d; ++r) {
    EchelonBasis eb(d);
    if (orbit_dim(a, sparse_basis(r), true, eb) < d) {
      rep.basis_ideals_full = false;
      rep.conclusive = true;
      rep.ideal_witness = eb.rows();
      rep.note = a.label(r) + " generates a proper two-sided ideal of dimension " +
                 std::to_string(eb.dim());
      return rep;
    }
  }

  // Minimal left ideal of dimension k. Homogeneous seeds keep the ideal
  // graded, so the parity split comes for free when one of them works.
  std::optional<std::vector<Vec>> ideal;
  for (int r = 0; r < d && !ideal; ++r) {
    EchelonBasis eb(d);
    if (orbit_dim(a, sparse_basis(r), false, eb) == k) {
      ideal = eb.rows();
      int odd = 0;
      for (const auto& row : ideal.value())
        if (a.parity_of(row) == std::optional<int>(1)) ++odd;
      rep.graded_split = {k - odd, odd};
    }
  }
  if (!ideal && d <= 16)
    for (int r = 0; r < d && !ideal; ++r)
      for (int s = r + 1; s < d && !ideal; ++s) {
        SparseVec seed = sparse_basis(r);
        seed[s] = Scalar(1);
        EchelonBasis eb(d);
        if (orbit_dim(a, seed, false, eb) == k) ideal = eb.rows();
      }
  if (!ideal) {
    rep.note = "no left ideal of dimension " + std::to_string(k) +
               " found from basis seeds; inconclusive";
    return rep;
  }
  rep.irrep_dim = k;

  // Left multiplication on the ideal, in its own coordinates.
  SparseMatrix bt;
  bt.rows = d;
  bt.cols = k;
  for (int c = 0; c < k; ++c)
    for (int rr = 0; rr < d; ++rr)
      if (!ideal.value()[size_t(c)][size_t(rr)].is_zero())
        bt.set(rr, c, ideal.value()[size_t(c)][size_t(rr)]);
  auto coords = [&](const Vec& p) {
    auto sol = solve_linear(bt, p);
    if (!sol.particular) throw error("left ideal is not invariant; inconsistent closure");
    return sol.particular.value();
  };
  // Row convention makes plain left multiplication an anti-homomorphism, so
  // each operator is stored transposed; that restores rho(ab) = rho(a) rho(b).
  std::vector<Mat> rho(size_t(d), Mat(k, k));
  for (int i = 0; i < d; ++i)
    for (int r = 0; r < k; ++r) {
      Vec x = coords(a.dot(densify(sparse_basis(i), d), ideal.value()[size_t(r)]));
      for (int c = 0; c < k; ++c) rho[size_t(i)].at(c, r) = x[size_t(c)];
    }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Mat expect(k, k);
      for (const auto& [t, c] : a.dot_b(i, j)) expect = expect + rho[size_t(t)].scaled(c);
      if (!(rho[size_t(i)] * rho[size_t(j)] == expect))
        throw error("left action on the ideal is not multiplicative");
    }

  EchelonBasis image(k * k);
  for (int i = 0; i < d; ++i) image.insert(rho[size_t(i)].flatten());
  if (image.dim() < d) {
    Mat flat(d, k * k);
    for (int i = 0; i < d; ++i) {
      Vec f = rho[size_t(i)].flatten();
      for (int c = 0; c < k * k; ++c) flat.at(i, c) = f[size_t(c)];
    }
    rep.conclusive = true;
    rep.ideal_witness = left_kernel(flat);
    rep.note = "left action on the ideal has a kernel, a proper two-sided ideal";
    return rep;
  }

  rep.verdict = true;
  rep.conclusive = true;
  if (want_irreducible) rep.irreducible = std::move(ideal.value());
  rep.note = "left action on a " + std::to_string(k) + "-dimensional ideal fills End";
  return rep;
}

EnvelopeActionReport action_homomorphism(int n, const SuperModule& v) {
  if (v.kind() != ModuleKind::poisson)
    throw error("the envelope extension is defined for multiplication-and-bracket modules");
  if (!same_algebra(v.algebra(), gn_structure_constants(n)))
    throw error("module is not over the expected " + std::to_string(n) + "-generator algebra");
  if (!all_pass(check_module(v))) throw error("module fails its law suite");

  auto env = u_poisson_gn(n);
  const int big = env.algebra.dim(), dv = v.dim();
  auto gen_op = [&](int g) -> const Mat& { return g < n ? v.m(1 << g) : v.h(1 << (g - n)); };

  std::vector<Mat> phi;
  phi.resize(size_t(big));
  for (Mask b = 0; b < Mask(big); ++b) {
    Mat acc = Mat::identity(dv);
    for (int g = 0; g < 2 * n; ++g)
      if (b >> g & 1) acc = acc * gen_op(g);
    phi[size_t(b)] = std::move(acc);
  }
  for (int x = 0; x < big; ++x)
    for (int y = 0; y < big; ++y) {
      Mat expect(dv, dv);
      for (const auto& [t, c] : env.algebra.dot_b(x, y)) expect = expect + phi[size_t(t)].scaled(c);
      if (!(phi[size_t(x)] * phi[size_t(y)] == expect))
        throw error("product extension fails on " + env.algebra.label(x) + " . " +
                    env.algebra.label(y));
    }

  EnvelopeActionReport rep{Mat(big, dv * dv), 0, 0};
  EchelonBasis image(dv * dv);
  for (int b = 0; b < big; ++b) {
    Vec f = phi[size_t(b)].flatten();
    for (int c = 0; c < dv * dv; ++c) rep.matrix.at(b, c) = f[size_t(c)];
    image.insert(std::move(f));
  }
  rep.image_dim = image.dim();

  SparseMatrix sys;
  sys.cols = dv * dv;
  sys.rows = 2 * n * dv * dv;
  int base = 0;
  for (int g = 0; g < 2 * n; ++g) {
    const Mat& gm = gen_op(g);
    for (int r = 0; r < dv; ++r)
      for (int c = 0; c < dv; ++c) {
        // (G X - X G)[r][c] = sum_t G[r][t] X[t][c] - X[r][t] G[t][c]
        for (int t = 0; t < dv; ++t) {
          const int row = base + r * dv + c;
          if (!gm.at(r, t).is_zero()) {
            Scalar prev = sys.get(row, t * dv + c);
            sys.set(row, t * dv + c, prev + gm.at(r, t));
          }
          if (!gm.at(t, c).is_zero()) {
            Scalar prev = sys.get(row, r * dv + t);
            sys.set(row, r * dv + t, prev - gm.at(t, c));
          }
        }
      }
    base += dv * dv;
  }
  rep.commutant_dim = int(kernel(sys).size());
  return rep;
}

}  // namespace psg
