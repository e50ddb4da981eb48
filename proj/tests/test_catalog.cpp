#include "catch2/catch_amalgamated.hpp"
#include "oracle.hpp"
#include "qlsa/catalog.hpp"
#include "qlsa/morphisms.hpp"

#include <set>

using namespace qlsa;
using Q = Rational;

namespace {

Vector<Q> terms(const SuperVectorSpace& s, std::initializer_list<std::pair<Q, const char*>> ts) {
  Vector<Q> v = Vector<Q>::Zero(s.dim());
  for (const auto& [c, l] : ts) v(s.index_of(l)) += c;
  return v;
}

Vector<Q> br(const QuadraticAlgebra<Q>& q, const char* a, const char* b) {
  return q.algebra().bracket(q.space().index_of(a), q.space().index_of(b));
}

// Number of nonzero unordered brackets.
int bracket_count(const QuadraticAlgebra<Q>& q) {
  int n = 0;
  for (Index i = 0; i < q.dim(); ++i)
    for (Index j = i; j < q.dim(); ++j)
      if (!is_zero<Q>(q.algebra().bracket(i, j))) ++n;
  return n;
}

}  // namespace

TEST_CASE("catalog has at least 25 distinct entries") {
  const auto& l = catalog::list();
  CHECK(l.size() >= 25);
  std::set<std::string> ids;
  for (const auto& e : l) ids.insert(e.id);
  CHECK(ids.size() == l.size());
  CHECK_THROWS_AS(catalog::build("nope"), catalog::CatalogError);
}

TEST_CASE("every catalog sample satisfies the brute-force axioms") {
  for (const auto& e : catalog::list())
    for (const auto& p : e.samples()) {
      INFO(catalog::sample_key(e.id, p));
      const auto q = catalog::build(e.id, p);
      const auto t = oracle::table(q);
      CHECK(oracle::jacobi_violations(t) == 0);
      CHECK(oracle::graded_antisymmetric(t));
      CHECK(oracle::parity_consistent(t));
      CHECK(oracle::supersymmetric(t));
      CHECK(oracle::invariant(t));
      CHECK(oracle::nondegenerate(t));
      if (q.form().parity == FormParity::even) CHECK(oracle::center_dim(t) + oracle::derived_dim(t) == t.n);
    }
}

TEST_CASE("g6_3 at mu = 1/2") {
  const auto q = catalog::build("g6_3", {{"mu", Q(1, 2)}});
  const auto& s = q.space();
  CHECK(br(q, "X", "Y") == terms(s, {{1, "Y"}}));
  CHECK(br(q, "X", "Z") == terms(s, {{Q(1, 2), "Z"}}));
  CHECK(br(q, "X", "Y*") == terms(s, {{-1, "Y*"}}));
  CHECK(br(q, "X", "Z*") == terms(s, {{Q(-1, 2), "Z*"}}));
  CHECK(br(q, "Y", "Y*") == terms(s, {{1, "X*"}}));
  CHECK(br(q, "Z", "Z*") == terms(s, {{Q(1, 2), "X*"}}));
  CHECK(bracket_count(q) == 6);
  CHECK_THROWS_AS(catalog::build("g6_3", {{"mu", Q(-1)}}), catalog::CatalogError);
  CHECK_THROWS_AS(catalog::build("g6_3", {{"mu", Q(2)}}), catalog::CatalogError);
  CHECK_THROWS_AS(catalog::build("g6_3", {{"nu", Q(0)}}), catalog::CatalogError);
}

TEST_CASE("go2 at lambda = 0 is abelian") {
  const auto q = catalog::build("go2", {{"lambda", Q(0)}});
  CHECK(q.algebra().is_abelian());
  CHECK(q.form().parity == FormParity::odd);
  CHECK(q.verified().all());
  const auto q3 = catalog::build("go2", {{"lambda", Q(3)}});
  CHECK(br(q3, "X1", "X1") == terms(q3.space(), {{3, "X0"}}));
}

TEST_CASE("gs6_5 brackets") {
  const auto q = catalog::build("gs6_5");
  const auto& s = q.space();
  CHECK(br(q, "Y0", "X2") == terms(s, {{1, "X2"}}));
  CHECK(br(q, "Y0", "Y1") == terms(s, {{1, "X1"}}));
  CHECK(br(q, "Y0", "Y2") == terms(s, {{-1, "Y2"}}));
  CHECK(br(q, "Y1", "Y1") == terms(s, {{1, "X0"}}));
  CHECK(br(q, "X2", "Y2") == terms(s, {{1, "X0"}}));
}

TEST_CASE("osp(1,2) is perfect and indecomposable") {
  const auto q = catalog::build("osp12");
  CHECK(q.verified().all());
  CHECK(oracle::jacobi_violations(oracle::table(q)) == 0);
  CHECK(derived_subalgebra(q.algebra()).dim() == q.dim());
  CHECK(center(q.algebra()).is_zero());
  CHECK_FALSE(decomposability_via_center(q));

  // The o(3)-orthonormal version: B(Xi,Xj) = delta_ij, [X1,X2] = X3 cyclically.
  ScopedTolerance tol(1e-12);
  const auto o = catalog::osp12_orthonormal();
  CHECK(o.algebra.verified().all());
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j) CHECK(std::abs(o.algebra.form().gram(i, j) - Complex(i == j ? 1 : 0)) < 1e-12);
  const auto x3 = o.algebra.algebra().bracket(0, 1);
  CHECK(std::abs(x3(2) - Complex(1)) < 1e-12);
}

TEST_CASE("frozen g^s_{6,3} completion") {
  const auto q = catalog::build("gs6_3");
  const auto key = catalog::sample_key("gs6_3", {});
  const auto expected = catalog::expected_fingerprint(key);
  REQUIRE(expected);
  CHECK(fingerprint(q).to_string() == *expected);
  CHECK(q.verified().all());
  // Structure-constant regression of the invariance completion.
  const auto& s = q.space();
  CHECK(bracket_count(q) == 8);
  CHECK(br(q, "X", "X1") == terms(s, {{Q(1, 2), "X1"}}));
  CHECK(br(q, "X", "Y1") == terms(s, {{Q(-1, 2), "Y1"}}));
  CHECK(br(q, "P", "Y1") == terms(s, {{1, "X1"}}));
  CHECK(br(q, "X1", "Y1") == terms(s, {{Q(1, 2), "Z"}}));
  CHECK(br(q, "Y1", "Y1") == terms(s, {{1, "Q"}}));
}

TEST_CASE("frozen fingerprints cover every sample") {
  for (const auto& e : catalog::list())
    for (const auto& p : e.samples()) {
      const auto key = catalog::sample_key(e.id, p);
      INFO(key);
      const auto expected = catalog::expected_fingerprint(key);
      REQUIRE(expected);
      CHECK(fingerprint(catalog::build(e.id, p)).to_string() == *expected);
    }
}

TEST_CASE("entries stated indecomposable give no central witness") {
  for (const auto& e : catalog::list())
    for (const auto& p : e.samples())
      if (e.decomposability(p) == catalog::Decomposability::indecomposable) {
        INFO(catalog::sample_key(e.id, p));
        CHECK_FALSE(decomposability_via_center(catalog::build(e.id, p)));
      }
}

TEST_CASE("g_{2n+2} at n = 1 is the diamond algebra") {
  const auto g = catalog::build("g2n2", {{"n", Q(1)}});
  const auto g4 = catalog::build("g4");
  CHECK(fingerprint(g) == fingerprint(g4));
  // X0 -> Z, X1 -> P, Y0 -> X, Y1 -> Q.
  Matrix<Q> a = Matrix<Q>::Zero(4, 4);
  a(g4.space().index_of("Z"), g.space().index_of("X0")) = 1;
  a(g4.space().index_of("P"), g.space().index_of("X1")) = 1;
  a(g4.space().index_of("X"), g.space().index_of("Y0")) = 1;
  a(g4.space().index_of("Q"), g.space().index_of("Y1")) = 1;
  CHECK(oracle::is_morphism(oracle::table(g), oracle::table(g4), a, true));
}

TEST_CASE("g^o_{6,2} has the brackets of g_{6,1}") {
  const auto odd = catalog::build("go6_2");
  const auto even = catalog::build("g6_1");
  CHECK(oracle::table(odd).c == oracle::table(even).c);
}

TEST_CASE("sp(4) representatives of the g^s_{6,4..7} rows") {
  for (const char* id : {"gs6_4", "gs6_5", "gs6_6", "gs6_7"}) {
    const auto q = catalog::build(id, std::string(id) == "gs6_6" ? catalog::Params{{"lambda", Q(2)}} : catalog::Params{});
    const auto& s = q.space();
    const Matrix<Q>& ad = q.algebra().ad(s.index_of("Y0"));
    const Matrix<Q> c = ad.bottomRightCorner(4, 4);
    CHECK(c == catalog::sp4_representative(id, Q(2)));
  }
  // Partition [2,2]: C^2 = 0 and rank 2.
  const auto c = catalog::sp4_representative("gs6_4");
  CHECK(is_zero<Q>(Matrix<Q>(c * c)));
  CHECK(rank<Q>(c) == 2);
}

TEST_CASE("known decomposable rows split") {
  for (const char* id : {"go6_0", "go6_5"}) {
    const auto r = catalog::verify_entry(id, catalog::entry(id).samples().front());
    CHECK(r.passed());
  }
  CHECK(catalog::verify_all().passed());
}
