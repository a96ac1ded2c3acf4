#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <utility>
#include <vector>

#include "psg/grassmann.hpp"

using namespace psg;

// Independent oracle working on explicit generator words: multiplication is
// concatenation followed by bubble sorting with a sign flip per swap and a
// zero result on any repeated generator.
namespace {

std::pair<int, std::vector<int>> word_normalize(std::vector<int> w) {
  int sign = 1;
  for (size_t pass = 0; pass + 1 < w.size() + 1; ++pass)
    for (size_t j = 0; j + 1 < w.size(); ++j)
      if (w[j] > w[j + 1]) {
        std::swap(w[j], w[j + 1]);
        sign = -sign;
      }
  for (size_t j = 0; j + 1 < w.size(); ++j)
    if (w[j] == w[j + 1]) return {0, {}};
  return {sign, w};
}

std::vector<int> mask_word(Mask m) {
  std::vector<int> w;
  for (int k = 0; k < kMaxGenerators; ++k)
    if (m >> k & 1) w.push_back(k + 1);
  return w;
}

Mask word_mask(const std::vector<int>& w) {
  Mask m = 0;
  for (int i : w) m |= Mask(1) << (i - 1);
  return m;
}

// sign, word of e_A * e_B; sign 0 for a vanishing product
std::pair<int, std::vector<int>> word_mul(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> cat = a;
  cat.insert(cat.end(), b.begin(), b.end());
  return word_normalize(cat);
}

// sign, word of the derivation by generator i; sign 0 when i is absent
std::pair<int, std::vector<int>> word_partial(int i, std::vector<int> w) {
  for (size_t s = 0; s < w.size(); ++s)
    if (w[s] == i) {
      std::vector<int> rest = w;
      rest.erase(rest.begin() + long(s));
      return {(s % 2 == 0) ? 1 : -1, rest};
    }
  return {0, {}};
}

// Bracket of two basis monomials computed purely with the word oracle.
GrassmannElement word_bracket(int n, Mask A, Mask B) {
  GrassmannElement acc(n);
  int sgn_f = mask_parity(A) ? -1 : 1;
  for (int i = 1; i <= n; ++i) {
    auto [sa, wa] = word_partial(i, mask_word(A));
    auto [sb, wb] = word_partial(i, mask_word(B));
    if (sa == 0 || sb == 0) continue;
    auto [sp, wp] = word_mul(wa, wb);
    if (sp == 0) continue;
    acc.add_term(word_mask(wp), Scalar(sgn_f * sa * sb * sp));
  }
  return acc;
}

GrassmannElement mono(int n, Mask m) { return GrassmannElement::monomial(n, m); }

}  // namespace

TEST_CASE("monomial products: pinned values") {
  CHECK(g_mul(mono(3, 0b001), mono(3, 0b001)).is_zero());
  CHECK(g_mul(mono(3, 0b010), mono(3, 0b001)) ==
        GrassmannElement::monomial(3, 0b011, Scalar(-1)));
  CHECK(g_mul(mono(3, 0b101), mono(3, 0b010)) ==
        GrassmannElement::monomial(3, 0b111, Scalar(-1)));
}

TEST_CASE("monomial products match the word oracle for n = 4") {
  int n = 4, d = 1 << n;
  for (Mask a = 0; a < Mask(d); ++a)
    for (Mask b = 0; b < Mask(d); ++b) {
      auto got = g_mul(mono(n, a), mono(n, b));
      auto [s, w] = word_mul(mask_word(a), mask_word(b));
      if (s == 0)
        CHECK(got.is_zero());
      else
        CHECK(got == GrassmannElement::monomial(n, word_mask(w), Scalar(s)));
    }
}

TEST_CASE("derivations: pinned values") {
  CHECK(g_partial(1, mono(3, 0b001)) == mono(3, 0));
  CHECK(g_partial(2, mono(3, 0b011)) == GrassmannElement::monomial(3, 0b001, Scalar(-1)));
  CHECK(g_partial(3, mono(3, 0b111)) == mono(3, 0b011));
  CHECK(g_partial(2, mono(3, 0b101)).is_zero());
  CHECK_THROWS_AS(g_partial(4, mono(3, 0)), error);
  CHECK_THROWS_AS(g_partial(0, mono(3, 0)), error);
}

TEST_CASE("each derivation is an odd superderivation of the product") {
  int n = 4, d = 1 << n;
  for (int i = 1; i <= n; ++i)
    for (Mask a = 0; a < Mask(d); ++a)
      for (Mask b = 0; b < Mask(d); ++b) {
        auto lhs = g_partial(i, g_mul(mono(n, a), mono(n, b)));
        auto rhs = g_mul(g_partial(i, mono(n, a)), mono(n, b)) +
                   g_mul(mono(n, a), g_partial(i, mono(n, b))).scaled(sign_scalar(mask_parity(a)));
        CHECK(lhs == rhs);
      }
}

TEST_CASE("bracket: pinned values") {
  CHECK(g_bracket(mono(2, 0b01), mono(2, 0b01)) ==
        GrassmannElement::monomial(2, 0, Scalar(-1)));
  for (Mask b = 0; b < 4; ++b) CHECK(g_bracket(mono(2, 0), mono(2, b)).is_zero());
  CHECK(g_bracket(mono(2, 0b11), mono(2, 0b10)) ==
        GrassmannElement::monomial(2, 0b01, Scalar(-1)));
}

TEST_CASE("bracket on all basis pairs matches the word oracle for n = 4") {
  int n = 4, d = 1 << n;
  for (Mask a = 0; a < Mask(d); ++a)
    for (Mask b = 0; b < Mask(d); ++b)
      CHECK(g_bracket(mono(n, a), mono(n, b)) == word_bracket(n, a, b));
}

TEST_CASE("bracket splits inhomogeneous left arguments by parity") {
  // f = 1 + e1: {f, e1} = {1,e1} + {e1,e1} = -1
  auto f = GrassmannElement::parse(2, "1 + e1");
  CHECK(g_bracket(f, mono(2, 0b01)) == GrassmannElement::monomial(2, 0, Scalar(-1)));
}

TEST_CASE("structure constants agree with element operations (n = 3)") {
  int n = 3, d = 1 << n;
  auto a = gn_structure_constants(n);
  REQUIRE(a.dim() == d);
  for (int i = 0; i < d; ++i) CHECK(a.parity(i) == mask_parity(Mask(i)));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      auto want_dot = g_mul(mono(n, Mask(i)), mono(n, Mask(j)));
      auto want_br = g_bracket(mono(n, Mask(i)), mono(n, Mask(j)));
      CHECK(to_dense(a.dot_b(i, j), d) == want_dot.to_vec());
      CHECK(to_dense(a.br_b(i, j), d) == want_br.to_vec());
    }
  CHECK(a.has_unit());
  CHECK(a.unit() == mono(n, 0).to_vec());
  CHECK(a.label(0) == "1");
  CHECK(a.label(5) == "e{1,3}");
}

TEST_CASE("the exported algebra satisfies the full identity bundle (n = 3)") {
  auto a = gn_structure_constants(3);
  for (const auto& rep : check_suite(a, "poisson")) {
    INFO(rep.identity);
    CHECK(rep.pass);
  }
}

TEST_CASE("n = 2 bracket table is exactly the generator table plus its closure") {
  auto a = gn_structure_constants(2);
  // Nonzero entries occur exactly when the index sets share one element.
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      bool want = std::popcount(unsigned(i & j)) == 1;
      CHECK(!a.br_b(i, j).empty() == want);
      CHECK(to_dense(a.br_b(i, j), 4) == word_bracket(2, Mask(i), Mask(j)).to_vec());
    }
  CHECK(to_dense(a.br_b(1, 1), 4) == GrassmannElement::monomial(2, 0, Scalar(-1)).to_vec());
  CHECK(to_dense(a.br_b(2, 2), 4) == GrassmannElement::monomial(2, 0, Scalar(-1)).to_vec());
  CHECK(a.br_b(1, 2).empty());
}

TEST_CASE("degenerate and oversized exports") {
  auto a = gn_structure_constants(0);
  CHECK(a.dim() == 1);
  CHECK(a.br_b(0, 0).empty());
  CHECK(check_identity(a, "poisson-leibniz").pass);
  CHECK_THROWS_AS(gn_structure_constants(9), error);
  CHECK_THROWS_AS(gn_structure_constants(-1), error);
}

TEST_CASE("symplectic bracket: pinned values") {
  auto X1 = PolyGrassmannElement::parse(1, 1, "x1");
  auto Y1 = PolyGrassmannElement::parse(1, 1, "y1");
  auto one = PolyGrassmannElement::parse(1, 1, "1");
  CHECK(pg_bracket(X1, Y1) == one);
  CHECK(pg_bracket(Y1, X1) == -one);
  CHECK(pg_bracket(PolyGrassmannElement::parse(1, 1, "x1^2"), Y1) ==
        PolyGrassmannElement::parse(1, 1, "2 x1"));
  CHECK(pg_bracket(PolyGrassmannElement::parse(1, 1, "x1 e1"),
                   PolyGrassmannElement::parse(1, 1, "e1")) ==
        PolyGrassmannElement::parse(1, 1, "-x1"));
}

TEST_CASE("polynomial bracket is a biderivation satisfying Jacobi (m = 2, n = 0)") {
  int m = 2;
  std::vector<PolyGrassmannElement> mons;
  for (const char* t : {"1", "x1", "y1", "x2", "y2", "x1 y1", "x1^2", "x2 y1", "y2^2",
                        "x1 x2 y1 y2", "x1^3 y2"})
    mons.push_back(PolyGrassmannElement::parse(m, 0, t));
  for (const auto& f : mons)
    for (const auto& g : mons) {
      for (const auto& h : mons) {
        auto jac = pg_bracket(f, pg_bracket(g, h)) - pg_bracket(pg_bracket(f, g), h) -
                   pg_bracket(g, pg_bracket(f, h));
        CHECK(jac.is_zero());
        auto leib = pg_bracket(f, pg_mul(g, h)) - pg_mul(pg_bracket(f, g), h) -
                    pg_mul(g, pg_bracket(f, h));
        CHECK(leib.is_zero());
      }
      auto anti = pg_bracket(f, g) + pg_bracket(g, f);
      CHECK(anti.is_zero());
    }
}

TEST_CASE("mixed bracket satisfies the graded Jacobi identity (m = 1, n = 2)") {
  std::vector<PolyGrassmannElement> els;
  for (const char* t : {"1", "x1", "y1", "e1", "e2", "x1 e1", "e{1,2}", "y1 e2"})
    els.push_back(PolyGrassmannElement::parse(1, 2, t));
  for (const auto& f : els)
    for (const auto& g : els)
      for (const auto& h : els) {
        auto pf = f.parity(), pg_ = g.parity();
        if (!pf || !pg_) continue;
        auto jac = pg_bracket(f, pg_bracket(g, h)) - pg_bracket(pg_bracket(f, g), h) -
                   pg_bracket(g, pg_bracket(f, h)).scaled(sign_scalar(*pf * *pg_));
        CHECK(jac.is_zero());
      }
}

TEST_CASE("element text: parsing and printing") {
  auto e = PolyGrassmannElement::parse(1, 3, "3/2 * x1^2 y1 e1 e3");
  CHECK(e.str() == "3/2 * x1^2 y1 e{1,3}");
  CHECK(PolyGrassmannElement::parse(1, 3, e.str()) == e);

  CHECK(GrassmannElement::parse(2, "e2 e1") ==
        GrassmannElement::monomial(2, 0b11, Scalar(-1)));
  CHECK(GrassmannElement::parse(2, "e1 e1").is_zero());
  CHECK(GrassmannElement::parse(2, "e{1,2}").str() == "e{1,2}");
  CHECK(GrassmannElement::parse(2, "e{2,1}").str() == "-e{1,2}");
  CHECK(GrassmannElement::parse(3, "1 + e{1,2} - 2 * e1").str() == "1 - 2 * e{1} + e{1,2}");
  CHECK(GrassmannElement::parse(3, "e1 - e1").is_zero());
  CHECK(GrassmannElement::parse(3, "e1 - e1").str() == "0");

  // unicode minus
  CHECK(PolyGrassmannElement::parse(1, 0, "x1 \xE2\x88\x92 y1") ==
        PolyGrassmannElement::parse(1, 0, "x1 - y1"));

  CHECK_THROWS_AS(GrassmannElement::parse(2, "e9"), error);
  CHECK_THROWS_AS(GrassmannElement::parse(2, "x1"), error);
  CHECK_THROWS_AS(GrassmannElement::parse(2, "e{1,"), error);
  CHECK_THROWS_AS(GrassmannElement::parse(2, "q"), error);
  CHECK_THROWS_AS(GrassmannElement::parse(2, ""), error);
  CHECK_THROWS_AS(GrassmannElement::parse(2, "e1 e2 +"), error);
}

TEST_CASE("coordinate vector round trip") {
  auto e = GrassmannElement::parse(3, "1 - 2 e{1,3} + 5/7 e{1,2,3}");
  CHECK(GrassmannElement::from_vec(3, e.to_vec()) == e);
  CHECK(e.coeff(0b101) == Scalar(-2));
  CHECK(e.coeff(0b010) == Scalar(0));
}
