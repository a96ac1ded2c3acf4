#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "psg/linalg.hpp"
#include "psg/scalar.hpp"
#include "psg/superalgebra.hpp"

using namespace psg;

TEST_CASE("scalar arithmetic over the rationals") {
  Scalar a(1, 3), b(1, 6);
  CHECK(a + b == Scalar(1, 2));
  CHECK(a - b == Scalar(1, 6));
  CHECK(a * b == Scalar(1, 18));
  CHECK(a / b == Scalar(2));
  CHECK((-a).str() == "-1/3");
  CHECK(Scalar::parse("3/4") == Scalar(3, 4));
  CHECK(Scalar::parse("-7") == Scalar(-7));
  CHECK_THROWS_AS(a / Scalar(0), error);
  CHECK(sign_scalar(0) == Scalar(1));
  CHECK(sign_scalar(3) == Scalar(-1));
}

TEST_CASE("scalar arithmetic modulo a prime") {
  field::Guard g;
  field::set_prime(7);
  CHECK(field::characteristic() == 7);
  CHECK(Scalar(1, 2) == Scalar(4));  // 2*4 = 8 = 1 mod 7
  CHECK(Scalar(10) == Scalar(3));
  CHECK(Scalar(3).inverse() == Scalar(5));
  CHECK_THROWS_AS(Scalar(1, 7), error);  // denominator not invertible
  field::set_from_spec("fp:11");
  CHECK(Scalar(1, 2) == Scalar(6));
}

TEST_CASE("field spec parsing rejects bad input") {
  field::Guard g;
  CHECK_THROWS_AS(field::set_from_spec("fp:4"), error);
  CHECK_THROWS_AS(field::set_from_spec("fp:2"), error);
  CHECK_THROWS_AS(field::set_from_spec("float"), error);
  field::set_from_spec("rational");
  CHECK(field::characteristic() == 0);
}

TEST_CASE("linear solve with a rank-deficient system") {
  SparseMatrix m;
  m.rows = 2;
  m.cols = 2;
  m.set(0, 0, Scalar(1));
  m.set(0, 1, Scalar(1));
  m.set(1, 0, Scalar(2));
  m.set(1, 1, Scalar(2));
  Vec rhs = {Scalar(1), Scalar(2)};
  auto res = solve_linear(m, rhs);
  REQUIRE(res.particular.has_value());
  CHECK(res.rank == 1);
  CHECK(*res.particular == Vec{Scalar(1), Scalar(0)});
  REQUIRE(res.nullspace.size() == 1);
  CHECK(res.nullspace[0] == Vec{Scalar(-1), Scalar(1)});

  Vec bad = {Scalar(1), Scalar(3)};
  auto res2 = solve_linear(m, bad);
  CHECK(!res2.particular.has_value());
}

TEST_CASE("kernel and rank") {
  SparseMatrix m;
  m.rows = 2;
  m.cols = 3;
  m.set(0, 0, Scalar(1));
  m.set(0, 2, Scalar(1));
  m.set(1, 1, Scalar(1));
  auto ker = kernel(m);
  REQUIRE(ker.size() == 1);
  CHECK(ker[0] == Vec{Scalar(-1), Scalar(0), Scalar(1)});
  CHECK(rank_of(m) == 2);
}

TEST_CASE("matrix inverse in the row-vector convention") {
  Mat m(2, 2);
  m.at(0, 0) = Scalar(1);
  m.at(0, 1) = Scalar(2);
  m.at(1, 0) = Scalar(3);
  m.at(1, 1) = Scalar(4);
  auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK(m * *inv == Mat::identity(2));
  CHECK(*inv * m == Mat::identity(2));
  CHECK(inv->at(0, 0) == Scalar(-2));
  CHECK(inv->at(1, 0) == Scalar(3, 2));

  Mat sing(2, 2);
  sing.at(0, 0) = Scalar(1);
  sing.at(1, 0) = Scalar(2);
  CHECK(!inverse(sing).has_value());
}

TEST_CASE("echelon basis insert and membership") {
  EchelonBasis b(3);
  CHECK(b.insert(Vec{Scalar(1), Scalar(1), Scalar(0)}));
  CHECK(!b.insert(Vec{Scalar(2), Scalar(2), Scalar(0)}));
  CHECK(b.insert(Vec{Scalar(0), Scalar(0), Scalar(1)}));
  CHECK(b.dim() == 2);
  CHECK(b.contains(Vec{Scalar(2), Scalar(2), Scalar(3)}));
  CHECK(!b.contains(Vec{Scalar(1), Scalar(0), Scalar(0)}));
}

TEST_CASE("span closure of matrix seeds") {
  // Off-diagonal units generate the full 2x2 matrix algebra.
  Mat e12(2, 2), e21(2, 2);
  e12.at(0, 1) = Scalar(1);
  e21.at(1, 0) = Scalar(1);
  auto full = span_closure({e12, e21});
  CHECK(full.size() == 4);

  // A single diagonal involution only reaches the diagonal subalgebra.
  Mat d(2, 2);
  d.at(0, 0) = Scalar(1);
  d.at(1, 1) = Scalar(-1);
  auto diag = span_closure({d});
  CHECK(diag.size() == 2);
}

static SuperAlgebra dual_numbers() {
  // F[x]/(x^2), both basis vectors even: b0 = 1, b1 = x.
  GradedSpace s{2, {0, 0}};
  ProductTable dot(4);
  dot[0] = {{0, Scalar(1)}};
  dot[1] = {{1, Scalar(1)}};
  dot[2] = {{1, Scalar(1)}};
  // dot[3] = x*x = 0
  return SuperAlgebra(s, dot, std::nullopt, Vec{Scalar(1), Scalar(0)}, {"1", "x"});
}

TEST_CASE("superalgebra construction and products") {
  auto a = dual_numbers();
  CHECK(a.dim() == 2);
  CHECK(a.dot(Vec{Scalar(2), Scalar(3)}, Vec{Scalar(1), Scalar(1)}) ==
        Vec{Scalar(2), Scalar(5)});
  CHECK(check_identity(a, "supercommutativity").pass);
  CHECK(check_identity(a, "associativity").pass);
  auto u = detect_unit(a);
  REQUIRE(u.has_value());
  CHECK(*u == Vec{Scalar(1), Scalar(0)});
  CHECK_THROWS_AS(check_identity(a, "super-jacobi"), error);
  CHECK_THROWS_AS(check_identity(a, "no-such-identity"), error);
}

TEST_CASE("construction rejects parity-inhomogeneous tables") {
  GradedSpace s{2, {0, 1}};
  ProductTable dot(4);
  dot[0] = {{0, Scalar(1)}};
  dot[1] = {{0, Scalar(1)}};  // even*odd landing on an even index
  CHECK_THROWS_AS(SuperAlgebra(s, dot, std::nullopt, std::nullopt), error);
}

TEST_CASE("supercommutativity catches an odd square") {
  // One odd generator with e.e = 1: supercommutativity forces e.e = -e.e.
  GradedSpace s{2, {0, 1}};
  ProductTable dot(4);
  dot[0] = {{0, Scalar(1)}};
  dot[1] = {{1, Scalar(1)}};
  dot[2] = {{1, Scalar(1)}};
  dot[3] = {{0, Scalar(1)}};
  SuperAlgebra a(s, dot, std::nullopt, Vec{Scalar(1), Scalar(0)});
  auto rep = check_identity(a, "supercommutativity");
  CHECK(!rep.pass);
  REQUIRE(rep.counterexample.has_value());
  CHECK(rep.counterexample->tuple == std::vector<int>{1, 1});
  CHECK(rep.counterexample->defect == Vec{Scalar(2), Scalar(0)});
}

TEST_CASE("simplicity: dual numbers have an ideal, a field does not") {
  auto a = dual_numbers();
  auto rep = is_simple(a);
  CHECK(!rep.simple);
  CHECK(rep.conclusive);
  REQUIRE(rep.ideal_witness.has_value());
  REQUIRE(rep.ideal_witness->size() == 1);
  CHECK((*rep.ideal_witness)[0] == Vec{Scalar(0), Scalar(1)});

  GradedSpace s{1, {0}};
  ProductTable dot(1);
  dot[0] = {{0, Scalar(1)}};
  SuperAlgebra f(s, dot, std::nullopt, Vec{Scalar(1)});
  auto frep = is_simple(f);
  CHECK(frep.simple);
  CHECK(frep.conclusive);
  CHECK(frep.closure_dim == 1);
}

TEST_CASE("tensor product of two one-dimensional algebras") {
  GradedSpace s{1, {0}};
  ProductTable dot(1);
  dot[0] = {{0, Scalar(1)}};
  SuperAlgebra f(s, dot, std::nullopt, Vec{Scalar(1)}, {"1"});
  auto t = tensor_product(f, f);
  CHECK(t.dim() == 1);
  CHECK(t.has_unit());
  CHECK(check_identity(t, "associativity").pass);
}
