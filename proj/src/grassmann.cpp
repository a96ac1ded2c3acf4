#include "psg/grassmann.hpp"

#include <bit>
#include <cctype>

namespace psg {

int mask_parity(Mask m) { return std::popcount(m) & 1; }

std::string mask_label(Mask m) {
  if (m == 0) return "1";
  std::string s = "e{";
  bool first = true;
  for (int k = 0; k < kMaxGenerators; ++k)
    if (m >> k & 1) {
      if (!first) s += ",";
      s += std::to_string(k + 1);
      first = false;
    }
  return s + "}";
}

int mul_sign(Mask a, Mask b) {
  if (a & b) return 0;
  int inv = 0;
  for (Mask bb = b; bb; bb &= bb - 1) {
    int j = std::countr_zero(bb);
    inv += std::popcount(a >> (j + 1));
  }
  return (inv & 1) ? -1 : 1;
}

GrassmannElement::GrassmannElement(int n) : n_(n) {
  if (n < 0 || n > kMaxGenerators) throw error("grassmann: generator count out of range");
}

GrassmannElement GrassmannElement::monomial(int n, Mask mask, const Scalar& c) {
  GrassmannElement e(n);
  e.add_term(mask, c);
  return e;
}

Scalar GrassmannElement::coeff(Mask mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void GrassmannElement::add_term(Mask mask, const Scalar& c) {
  if (mask >> n_) throw error("grassmann: monomial index exceeds generator count");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(mask, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& o) {
  if (o.n_ != n_) throw error("grassmann: mismatched generator count");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

GrassmannElement& GrassmannElement::operator-=(const GrassmannElement& o) {
  if (o.n_ != n_) throw error("grassmann: mismatched generator count");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

GrassmannElement GrassmannElement::operator+(const GrassmannElement& o) const {
  GrassmannElement r = *this;
  r += o;
  return r;
}

GrassmannElement GrassmannElement::operator-(const GrassmannElement& o) const {
  GrassmannElement r = *this;
  r -= o;
  return r;
}

GrassmannElement GrassmannElement::operator-() const { return scaled(Scalar(-1)); }

GrassmannElement GrassmannElement::scaled(const Scalar& c) const {
  GrassmannElement r(n_);
  if (c.is_zero()) return r;
  for (const auto& [m, x] : terms_) r.terms_[m] = c * x;
  return r;
}

bool GrassmannElement::operator==(const GrassmannElement& o) const {
  return n_ == o.n_ && terms_ == o.terms_;
}

std::optional<int> GrassmannElement::parity() const {
  std::optional<int> p;
  for (const auto& [m, c] : terms_) {
    int q = mask_parity(m);
    if (!p)
      p = q;
    else if (*p != q)
      return std::nullopt;
  }
  return p;
}

GrassmannElement GrassmannElement::parity_part(int p) const {
  GrassmannElement r(n_);
  for (const auto& [m, c] : terms_)
    if (mask_parity(m) == p) r.terms_[m] = c;
  return r;
}

Vec GrassmannElement::to_vec() const {
  Vec v = zero_vec(1 << n_);
  for (const auto& [m, c] : terms_) v[size_t(m)] = c;
  return v;
}

GrassmannElement GrassmannElement::from_vec(int n, const Vec& v) {
  if (int(v.size()) != (1 << n)) throw error("grassmann: vector length is not 2^n");
  GrassmannElement e(n);
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) e.terms_[Mask(i)] = v[i];
  return e;
}

GrassmannElement g_mul(const GrassmannElement& f, const GrassmannElement& g) {
  if (f.n() != g.n()) throw error("grassmann: mismatched generator count");
  GrassmannElement r(f.n());
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms()) {
      int s = mul_sign(a, b);
      if (s != 0) r.add_term(a | b, sign_scalar(s < 0) * ca * cb);
    }
  return r;
}

GrassmannElement g_partial(int i, const GrassmannElement& f) {
  if (i < 1 || i > f.n()) throw error("grassmann: derivation index out of range");
  Mask bit = Mask(1) << (i - 1);
  GrassmannElement r(f.n());
  for (const auto& [m, c] : f.terms()) {
    if (!(m & bit)) continue;
    int before = std::popcount(m & (bit - 1));
    r.add_term(m & ~bit, sign_scalar(before) * c);
  }
  return r;
}

GrassmannElement g_bracket(const GrassmannElement& f, const GrassmannElement& g) {
  if (f.n() != g.n()) throw error("grassmann: mismatched generator count");
  int n = f.n();
  GrassmannElement acc(n);
  for (int p : {0, 1}) {
    GrassmannElement fp = f.parity_part(p);
    if (fp.is_zero()) continue;
    Scalar sg = sign_scalar(p);
    for (int i = 1; i <= n; ++i)
      acc += g_mul(g_partial(i, fp), g_partial(i, g)).scaled(sg);
  }
  return acc;
}

bool PGKey::operator<(const PGKey& o) const {
  if (xe != o.xe) return xe < o.xe;
  if (ye != o.ye) return ye < o.ye;
  return mask < o.mask;
}

bool PGKey::operator==(const PGKey& o) const {
  return xe == o.xe && ye == o.ye && mask == o.mask;
}

PolyGrassmannElement::PolyGrassmannElement(int m, int n) : m_(m), n_(n) {
  if (m < 0) throw error("grassmann: negative symplectic pair count");
  if (n < 0 || n > kMaxGenerators) throw error("grassmann: generator count out of range");
}

PolyGrassmannElement PolyGrassmannElement::monomial(int m, int n, PGKey key, const Scalar& c) {
  PolyGrassmannElement e(m, n);
  if (int(key.xe.size()) != m || int(key.ye.size()) != m)
    throw error("grassmann: exponent vector length mismatch");
  e.add_term(key, c);
  return e;
}

void PolyGrassmannElement::add_term(const PGKey& key, const Scalar& c) {
  if (key.mask >> n_) throw error("grassmann: monomial index exceeds generator count");
  for (int v : key.xe)
    if (v < 0) throw error("grassmann: negative exponent");
  for (int v : key.ye)
    if (v < 0) throw error("grassmann: negative exponent");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PolyGrassmannElement& PolyGrassmannElement::operator+=(const PolyGrassmannElement& o) {
  if (o.m_ != m_ || o.n_ != n_) throw error("grassmann: mismatched variable counts");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

PolyGrassmannElement PolyGrassmannElement::operator+(const PolyGrassmannElement& o) const {
  PolyGrassmannElement r = *this;
  r += o;
  return r;
}

PolyGrassmannElement PolyGrassmannElement::operator-(const PolyGrassmannElement& o) const {
  PolyGrassmannElement r = *this;
  r += o.scaled(Scalar(-1));
  return r;
}

PolyGrassmannElement PolyGrassmannElement::operator-() const { return scaled(Scalar(-1)); }

PolyGrassmannElement PolyGrassmannElement::scaled(const Scalar& c) const {
  PolyGrassmannElement r(m_, n_);
  if (c.is_zero()) return r;
  for (const auto& [k, x] : terms_) r.terms_[k] = c * x;
  return r;
}

bool PolyGrassmannElement::operator==(const PolyGrassmannElement& o) const {
  return m_ == o.m_ && n_ == o.n_ && terms_ == o.terms_;
}

std::optional<int> PolyGrassmannElement::parity() const {
  std::optional<int> p;
  for (const auto& [k, c] : terms_) {
    int q = mask_parity(k.mask);
    if (!p)
      p = q;
    else if (*p != q)
      return std::nullopt;
  }
  return p;
}

PolyGrassmannElement PolyGrassmannElement::parity_part(int p) const {
  PolyGrassmannElement r(m_, n_);
  for (const auto& [k, c] : terms_)
    if (mask_parity(k.mask) == p) r.terms_[k] = c;
  return r;
}

PolyGrassmannElement pg_mul(const PolyGrassmannElement& f, const PolyGrassmannElement& g) {
  if (f.m() != g.m() || f.n() != g.n()) throw error("grassmann: mismatched variable counts");
  PolyGrassmannElement r(f.m(), f.n());
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms()) {
      int s = mul_sign(a.mask, b.mask);
      if (s == 0) continue;
      PGKey k;
      k.xe.resize(size_t(f.m()));
      k.ye.resize(size_t(f.m()));
      for (int i = 0; i < f.m(); ++i) {
        k.xe[size_t(i)] = a.xe[size_t(i)] + b.xe[size_t(i)];
        k.ye[size_t(i)] = a.ye[size_t(i)] + b.ye[size_t(i)];
      }
      k.mask = a.mask | b.mask;
      r.add_term(k, sign_scalar(s < 0) * ca * cb);
    }
  return r;
}

namespace {

PolyGrassmannElement poly_partial(const PolyGrassmannElement& f, bool wrt_x, int i) {
  if (i < 1 || i > f.m()) throw error("grassmann: derivation index out of range");
  PolyGrassmannElement r(f.m(), f.n());
  for (const auto& [k, c] : f.terms()) {
    const auto& exps = wrt_x ? k.xe : k.ye;
    int e = exps[size_t(i - 1)];
    if (e == 0) continue;
    PGKey nk = k;
    (wrt_x ? nk.xe : nk.ye)[size_t(i - 1)] = e - 1;
    r.add_term(nk, Scalar(e) * c);
  }
  return r;
}

}  // namespace

PolyGrassmannElement pg_x_partial(int i, const PolyGrassmannElement& f) {
  return poly_partial(f, true, i);
}

PolyGrassmannElement pg_y_partial(int i, const PolyGrassmannElement& f) {
  return poly_partial(f, false, i);
}

PolyGrassmannElement pg_e_partial(int i, const PolyGrassmannElement& f) {
  if (i < 1 || i > f.n()) throw error("grassmann: derivation index out of range");
  Mask bit = Mask(1) << (i - 1);
  PolyGrassmannElement r(f.m(), f.n());
  for (const auto& [k, c] : f.terms()) {
    if (!(k.mask & bit)) continue;
    PGKey nk = k;
    nk.mask = k.mask & ~bit;
    int before = std::popcount(k.mask & (bit - 1));
    r.add_term(nk, sign_scalar(before) * c);
  }
  return r;
}

PolyGrassmannElement pg_bracket(const PolyGrassmannElement& f, const PolyGrassmannElement& g) {
  if (f.m() != g.m() || f.n() != g.n()) throw error("grassmann: mismatched variable counts");
  PolyGrassmannElement acc(f.m(), f.n());
  for (int i = 1; i <= f.m(); ++i) {
    acc += pg_mul(pg_x_partial(i, f), pg_y_partial(i, g));
    acc += pg_mul(pg_y_partial(i, f), pg_x_partial(i, g)).scaled(Scalar(-1));
  }
  for (int p : {0, 1}) {
    PolyGrassmannElement fp = f.parity_part(p);
    if (fp.is_zero()) continue;
    Scalar sg = sign_scalar(p);
    for (int j = 1; j <= f.n(); ++j)
      acc += pg_mul(pg_e_partial(j, fp), pg_e_partial(j, g)).scaled(sg);
  }
  return acc;
}

SuperAlgebra gn_structure_constants(int n) {
  if (n < 0) throw error("grassmann: negative generator count");
  if (n > 8) throw error("grassmann: dense export supports n <= 8");
  int d = 1 << n;
  GradedSpace sp;
  sp.dim = d;
  sp.parity.resize(size_t(d));
  std::vector<std::string> labels;
  labels.resize(size_t(d));
  for (int a = 0; a < d; ++a) {
    sp.parity[size_t(a)] = mask_parity(Mask(a));
    labels[size_t(a)] = mask_label(Mask(a));
  }
  ProductTable dot(size_t(d) * d), bracket(size_t(d) * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      size_t slot = size_t(a) * d + b;
      int s = mul_sign(Mask(a), Mask(b));
      if (s != 0) dot[slot][a | b] = sign_scalar(s < 0);
      auto br = g_bracket(GrassmannElement::monomial(n, Mask(a)),
                          GrassmannElement::monomial(n, Mask(b)));
      for (const auto& [m, c] : br.terms()) bracket[slot][int(m)] = c;
    }
  Vec unit = zero_vec(d);
  unit[0] = Scalar(1);
  return SuperAlgebra(std::move(sp), std::move(dot), std::move(bracket), unit, std::move(labels));
}

namespace {

// Text form: terms joined by + or -, each term an optional rational coefficient
// followed by factors x<i>[^k], y<i>[^k], e<i> or e{i,j,...}; '*' and spaces
// both separate factors. "e12" is the single generator with index 12.
struct ElementParser {
  std::string text;
  size_t pos = 0;
  int m, n;

  ElementParser(std::string_view sv, int m_in, int n_in) : m(m_in), n(n_in) {
    // Normalize the unicode minus so both spellings parse.
    for (size_t i = 0; i < sv.size();) {
      if (i + 2 < sv.size() && (unsigned char)sv[i] == 0xE2 && (unsigned char)sv[i + 1] == 0x88 &&
          (unsigned char)sv[i + 2] == 0x92) {
        text += '-';
        i += 3;
      } else {
        text += sv[i];
        ++i;
      }
    }
  }

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void skip_seps() {
    while (!done() && (std::isspace((unsigned char)peek()) || peek() == '*')) ++pos;
  }

  [[noreturn]] void fail(const std::string& why) {
    throw error("parse error at position " + std::to_string(pos) + ": " + why);
  }

  long read_int() {
    size_t start = pos;
    while (!done() && std::isdigit((unsigned char)peek())) ++pos;
    if (pos == start) fail("expected a number");
    return std::stol(text.substr(start, pos - start));
  }

  Scalar read_rational() {
    size_t start = pos;
    while (!done() && std::isdigit((unsigned char)peek())) ++pos;
    if (!done() && peek() == '/') {
      ++pos;
      while (!done() && std::isdigit((unsigned char)peek())) ++pos;
    }
    return Scalar::parse(text.substr(start, pos - start));
  }

  PolyGrassmannElement run() {
    PolyGrassmannElement out(m, n);
    skip_seps();
    if (done()) fail("empty input");
    bool first = true;
    while (true) {
      skip_seps();
      if (done()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos;
      } else if (!first) {
        fail("expected + or - between terms");
      }
      read_term(out, sign);
      first = false;
    }
    return out;
  }

  void read_term(PolyGrassmannElement& out, int sign) {
    Scalar coeff = sign_scalar(sign < 0);
    PGKey key;
    key.xe.assign(size_t(m), 0);
    key.ye.assign(size_t(m), 0);
    bool dead = false, any = false;
    while (true) {
      skip_seps();
      if (done() || peek() == '+' || peek() == '-') break;
      any = true;
      char c = peek();
      if (std::isdigit((unsigned char)c)) {
        coeff = coeff * read_rational();
      } else if (c == 'x' || c == 'y') {
        ++pos;
        long idx = read_int();
        if (idx < 1 || idx > m) fail(std::string(1, c) + std::to_string(idx) + " is out of range");
        long exp = 1;
        if (!done() && peek() == '^') {
          ++pos;
          exp = read_int();
        }
        (c == 'x' ? key.xe : key.ye)[size_t(idx - 1)] += int(exp);
      } else if (c == 'e') {
        ++pos;
        std::vector<long> idxs;
        if (!done() && peek() == '{') {
          ++pos;
          while (true) {
            skip_seps();
            idxs.push_back(read_int());
            skip_seps();
            if (!done() && peek() == ',') {
              ++pos;
              continue;
            }
            break;
          }
          if (done() || peek() != '}') fail("expected } in index set");
          ++pos;
        } else {
          idxs.push_back(read_int());
        }
        for (long idx : idxs) {
          if (idx < 1 || idx > n) fail("e" + std::to_string(idx) + " is out of range");
          Mask bit = Mask(1) << (idx - 1);
          int s = mul_sign(key.mask, bit);
          if (s == 0) {
            dead = true;
          } else {
            if (s < 0) coeff = -coeff;
            key.mask |= bit;
          }
        }
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
    }
    if (!any) fail("empty term");
    if (!dead) out.add_term(key, coeff);
  }
};

}  // namespace

PolyGrassmannElement PolyGrassmannElement::parse(int m, int n, std::string_view text) {
  return ElementParser(text, m, n).run();
}

GrassmannElement GrassmannElement::parse(int n, std::string_view text) {
  PolyGrassmannElement pg = PolyGrassmannElement::parse(0, n, text);
  GrassmannElement e(n);
  for (const auto& [k, c] : pg.terms()) e.add_term(k.mask, c);
  return e;
}

namespace {

std::string term_str(const Scalar& c, const std::string& body, bool first) {
  bool neg = c.is_negative();
  Scalar a = neg ? -c : c;
  std::string lead = first ? (neg ? "-" : "") : (neg ? " - " : " + ");
  if (body.empty()) return lead + a.str();
  if (a.is_one()) return lead + body;
  return lead + a.str() + " * " + body;
}

}  // namespace

std::string GrassmannElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [mk, c] : terms_) {
    s += term_str(c, mk == 0 ? "" : mask_label(mk), first);
    first = false;
  }
  return s;
}

namespace {

// Elements of A (x) G_aux, keyed by (basis index of A, monomial mask).
using EnvTerm = std::pair<int, Mask>;
using EnvElt = std::map<EnvTerm, Scalar>;

void env_add(EnvElt& acc, EnvTerm t, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = acc.find(t);
  if (it == acc.end()) {
    acc.emplace(t, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) acc.erase(it);
}

// (a (x) g)(b (x) h) = (-1)^{|g||b|} ab (x) gh.
EnvElt env_mul(const SuperAlgebra& alg, const EnvElt& x, const EnvElt& y) {
  EnvElt out;
  for (const auto& [tx, cx] : x)
    for (const auto& [ty, cy] : y) {
      int s = mul_sign(tx.second, ty.second);
      if (s == 0) continue;
      Scalar c = cx * cy;
      if (s < 0) c = -c;
      if (mask_parity(tx.second) && alg.parity(ty.first)) c = -c;
      for (const auto& [k, ck] : alg.dot_b(tx.first, ty.first))
        env_add(out, {k, tx.second | ty.second}, c * ck);
    }
  return out;
}

EnvElt env_sub(EnvElt x, const EnvElt& y) {
  for (const auto& [t, c] : y) env_add(x, t, -c);
  return x;
}

// Only the four slot bits ever appear, whatever aux was, so 16 columns per
// algebra index always suffice.
Vec env_flatten(const EnvElt& x, int dim_a) {
  Vec v(size_t(dim_a) << 4);
  for (const auto& [t, c] : x) v[(size_t(t.first) << 4) | t.second] = c;
  return v;
}

}  // namespace

IdentityReport grassmann_envelope_jordan_oracle(const SuperAlgebra& a, int aux) {
  if (aux < 4) throw error("the envelope certificate feeds four slots, so it needs aux >= 4");
  if (aux > kMaxGenerators) throw error("aux exceeds the generator limit");
  IdentityReport rep;
  rep.identity = "jordan-envelope";
  const int d = a.dim();
  auto lift = [&](int i, int slot) {
    EnvElt e;
    e.emplace(EnvTerm{i, a.parity(i) ? Mask(1) << slot : Mask(0)}, Scalar(1));
    return e;
  };
  auto fail = [&](std::vector<int> tuple, std::string desc, const EnvElt& defect) {
    rep.counterexample = Counterexample{std::move(tuple), std::move(desc), env_flatten(defect, d)};
    return rep;
  };
  // Downstairs the algebra must be plain commutative before the identity means anything.
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      EnvElt x = lift(i, 0), y = lift(j, 1);
      EnvElt c = env_sub(env_mul(a, x, y), env_mul(a, y, x));
      ++rep.tuples_checked;
      if (!c.empty())
        return fail({i, j}, a.label(i) + " and " + a.label(j) + " fail to commute downstairs", c);
    }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          EnvElt arg[3] = {lift(i, 0), lift(j, 1), lift(k, 2)};
          EnvElt w = lift(l, 3);
          EnvElt defect;
          for (int r = 0; r < 3; ++r) {
            EnvElt p = env_mul(a, arg[r], arg[(r + 1) % 3]);
            const EnvElt& z = arg[(r + 2) % 3];
            EnvElt lhs = env_mul(a, env_mul(a, p, w), z);
            EnvElt rhs = env_mul(a, p, env_mul(a, w, z));
            defect = env_sub(std::move(defect), env_sub(std::move(rhs), lhs));
          }
          ++rep.tuples_checked;
          if (!defect.empty())
            return fail({i, j, k, l},
                        "slots " + a.label(i) + ", " + a.label(j) + ", " + a.label(k) +
                            " with partner " + a.label(l),
                        defect);
        }
  rep.pass = true;
  return rep;
}

std::string PolyGrassmannElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::string body;
    auto put = [&](char v, int i, int e) {
      if (e == 0) return;
      if (!body.empty()) body += " ";
      body += v;
      body += std::to_string(i + 1);
      if (e > 1) body += "^" + std::to_string(e);
    };
    for (int i = 0; i < m_; ++i) put('x', i, k.xe[size_t(i)]);
    for (int i = 0; i < m_; ++i) put('y', i, k.ye[size_t(i)]);
    if (k.mask) {
      if (!body.empty()) body += " ";
      body += mask_label(k.mask);
    }
    s += term_str(c, body, first);
    first = false;
  }
  return s;
}

}  // namespace psg
