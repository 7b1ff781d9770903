#include <doctest.h>

#include "test_util.hpp"

using namespace cellar;
using namespace cellar::testutil;

namespace {

const char* kKroneckerJson = R"({
  "field": "rational",
  "vertices": ["1"],
  "arrows": [
    {"name": "X", "from": "1", "to": "1"},
    {"name": "Y", "from": "1", "to": "1"}
  ],
  "relations": [
    [{"coeff": "1", "path": ["X", "X"]}],
    [{"coeff": "1", "path": ["Y", "Y"]}],
    [{"coeff": "1", "path": ["X", "Y"]}, {"coeff": "-1", "path": ["Y", "X"]}]
  ]
})";

}  // namespace

TEST_CASE("parse_presentation accepts the Kronecker file") {
  Presentation p = parse_presentation(kKroneckerJson);
  CHECK(p.quiver.n_vertices() == 1);
  CHECK(p.quiver.n_arrows() == 2);
  CHECK(p.relations.size() == 3);
  FDAlgebra A = normalize(p);
  CHECK(A.dim() == 4);
}

TEST_CASE("parse_presentation rejects malformed input") {
  CHECK_THROWS_AS(parse_presentation("{ not json"), InputError);
  // unknown arrow in a relation
  CHECK_THROWS_AS(parse_presentation(R"({
    "field": "rational", "vertices": ["1"],
    "arrows": [{"name": "X", "from": "1", "to": "1"}],
    "relations": [[{"coeff": "1", "path": ["Z"]}]]})"),
                  InputError);
  // non-composable path: alpha alpha with alpha: 1 -> 2
  CHECK_THROWS_AS(parse_presentation(R"({
    "field": "rational", "vertices": ["1", "2"],
    "arrows": [{"name": "alpha", "from": "1", "to": "2"}],
    "relations": [[{"coeff": "1", "path": ["alpha", "alpha"]}]]})"),
                  InputError);
  // characteristic 2
  CHECK_THROWS_AS(parse_presentation(R"({
    "field": {"prime": 2}, "vertices": ["1"], "arrows": [], "relations": []})"),
                  InputError);
  // vertex idempotent in a relation
  CHECK_THROWS_AS(parse_presentation(R"({
    "field": "rational", "vertices": ["1"],
    "arrows": [{"name": "X", "from": "1", "to": "1"}],
    "relations": [[{"coeff": "1", "vertex": "1"}, {"coeff": "-1", "path": ["X"]}]]})"),
                  InputError);
}

TEST_CASE("forbidden parameter values are rejected") {
  CHECK_THROWS_AS(catalog_build("A", {{"lambda", "0"}}), InputError);
  CHECK_THROWS_AS(catalog_build("A1", {{"lambda", "1"}}), InputError);
  CHECK_THROWS_AS(catalog_build("A2", {{"lambda", "0"}}), InputError);
  CHECK_NOTHROW(catalog_build("A1", {{"lambda", "1/2"}}));
}

TEST_CASE("normalize: dimensions of the core examples") {
  FDAlgebra kron = build("Kronecker");
  CHECK(kron.dim() == 4);
  CHECK(kron.labels == std::vector<std::string>{"e(1)", "X", "Y", "X*Y"});

  FDAlgebra db2 = build("BrauerLineMod", {{"n", "2"}});
  CHECK(db2.dim() == 10);

  FDAlgebra g0 = build("Gamma0", {{"m", "1"}});
  CHECK(g0.dim() == 19);
  long pa = 0, pb = 0, p1 = 0;
  for (int k = 0; k < g0.dim(); ++k) {
    if (g0.tgt[k] == 0) ++pa;
    if (g0.tgt[k] == 1) ++pb;
    if (g0.tgt[k] == 2) ++p1;
  }
  CHECK(pa == 6);
  CHECK(pb == 8);
  CHECK(p1 == 5);
}

TEST_CASE("normalize: A1 dimension against two independent oracles") {
  BuiltAlgebra a1 = catalog_build("A1", {{"lambda", "2"}});
  FDAlgebra A = normalize(a1.presentation);
  // tableau-size oracle
  long sq = 0;
  for (int s : a1.datum->sizes) sq += static_cast<long>(s) * s;
  CHECK(sq == 20);
  CHECK(A.dim() == sq);
  // truncated path-space enumeration oracle
  CHECK(brute_force_dimension(a1.presentation, A.nilpotency + 1) == A.dim());
}

TEST_CASE("brute-force path oracle agrees on small algebras") {
  for (const char* name : {"Kronecker", "A5", "A6", "Lambda2"}) {
    BuiltAlgebra b = catalog_build(name);
    FDAlgebra A = normalize(b.presentation);
    CHECK_MESSAGE(brute_force_dimension(b.presentation, A.nilpotency + 1) == A.dim(), name);
  }
}

TEST_CASE("multiply in normal form") {
  FDAlgebra A = build("Kronecker");
  const Quiver& q = A.pres->quiver;
  Element e1 = A.idem_element(0);
  Element X = A.arrow_element(q.require_arrow("X"));
  Element Y = A.arrow_element(q.require_arrow("Y"));
  CHECK(multiply(A, e1, e1) == e1);
  Element xy = multiply(A, X, Y);
  CHECK(xy == multiply(A, Y, X));
  CHECK(!xy.zero());
  CHECK(multiply(A, X, X).zero());
  CHECK(multiply(A, xy, Y).zero());
}

TEST_CASE("multiply auto-reduces and matches reduce-then-compare") {
  FDAlgebra A = build("BrauerLineMod", {{"n", "2"}});
  const Quiver& q = A.pres->quiver;
  Element g = A.arrow_element(q.require_arrow("gamma"));
  Element a1b1(A.field);
  a1b1.add(word_from_names(q, {"alpha_1", "beta_1"}), Scalar::one(A.field));
  // gamma^2 and alpha_1*beta_1 are the same element; one of the two words is
  // the chosen normal form
  CHECK(multiply(A, g, g) == A.reduce(a1b1));
}

TEST_CASE("rewriting is confluent on relation tip products") {
  for (const char* name : {"Kronecker", "A4", "Gamma0", "LambdaPrime"}) {
    FDAlgebra A = build(name);
    const auto& rules = A.rs->rules();
    for (const auto& r1 : rules)
      for (const auto& r2 : rules) {
        Word prod;
        if (!concat(r1.tip, r2.tip, prod)) continue;
        Element direct =
            A.reduce(Element::from_word(A.field, prod, Scalar::one(A.field)));
        // rewrite the left tip first, then the right tip first
        Element left_first = A.reduce(r1.rest.rmul(r2.tip));
        Element right_first = A.reduce(r2.rest.lmul(r1.tip));
        CHECK(direct == left_first);
        CHECK(direct == right_first);
      }
  }
}

TEST_CASE("normalize is deterministic") {
  FDAlgebra a = build("A7");
  FDAlgebra b = build("A7");
  CHECK(a.labels == b.labels);
  CHECK(a.dim() == b.dim());
}

TEST_CASE("cap errors and degenerate relation lists") {
  // free loop: infinite-dimensional
  {
    Presentation p;
    p.field = Field{0};
    p.quiver.add_vertex("1");
    p.quiver.add_arrow("x", "1", "1");
    finalize_presentation(p);
    CHECK_THROWS_AS(normalize(p, 8), ResourceCapError);
  }
  // x^2 = x makes the arrow ideal image non-nilpotent
  {
    Presentation p;
    p.field = Field{0};
    p.quiver.add_vertex("1");
    p.quiver.add_arrow("x", "1", "1");
    p.relation_specs.push_back(parse_expr_dsl("x x - x"));
    finalize_presentation(p);
    CHECK_THROWS_AS(normalize(p, 8), InputError);
  }
}

TEST_CASE("algebra invariants: pair dimensions tile the algebra") {
  for (const char* name : {"Kronecker", "A3", "A7", "Lambda1"}) {
    FDAlgebra A = build(name);
    long total = 0;
    for (size_t i = 0; i < A.vertex_names.size(); ++i)
      for (size_t j = 0; j < A.vertex_names.size(); ++j)
        total += A.pair_dim(static_cast<int>(j), static_cast<int>(i));
    CHECK(total == A.dim());
    std::string why;
    CHECK_MESSAGE(A.validate(&why), why);
    CHECK(A.nilpotency <= A.dim());
  }
}

TEST_CASE("anti-automorphism checks") {
  // identity on the commutative Kronecker quotient
  {
    FDAlgebra A = build("Kronecker");
    std::map<std::string, std::string> vmap{{"1", "1"}};
    std::map<std::string, Element> amap;
    amap.emplace("X", A.arrow_element(0));
    amap.emplace("Y", A.arrow_element(1));
    CHECK(check_anti_automorphism(A, vmap, amap).ok);
  }
  // A(lambda): identity works iff lambda = 1, failing relation otherwise
  for (const char* lam : {"1", "2"}) {
    FDAlgebra A = build("A", {{"lambda", lam}});
    std::map<std::string, std::string> vmap{{"1", "1"}};
    std::map<std::string, Element> amap;
    amap.emplace("alpha", A.arrow_element(0));
    amap.emplace("beta", A.arrow_element(1));
    AntiCheck res = check_anti_automorphism(A, vmap, amap);
    if (std::string(lam) == "1") {
      CHECK(res.ok);
    } else {
      CHECK_FALSE(res.ok);
      CHECK(res.failing_relation == 2);  // alpha beta - lambda beta alpha
    }
  }
  // LambdaPrime(0,1): delta_0 fixed, gamma_0 and gamma_1 swapped
  {
    FDAlgebra A = build("LambdaPrime", {{"l", "0"}, {"m", "1"}});
    const Quiver& q = A.pres->quiver;
    std::map<std::string, std::string> vmap{{"0", "0"}, {"1", "1"}};
    std::map<std::string, Element> amap;
    amap.emplace("delta_0", A.arrow_element(q.require_arrow("delta_0")));
    amap.emplace("gamma_0", A.arrow_element(q.require_arrow("gamma_1")));
    amap.emplace("gamma_1", A.arrow_element(q.require_arrow("gamma_0")));
    amap.emplace("alpha_1", A.arrow_element(q.require_arrow("alpha_1")));
    CHECK(check_anti_automorphism(A, vmap, amap).ok);
    // ill-typed image
    std::map<std::string, Element> bad = amap;
    bad.at("gamma_0") = A.arrow_element(q.require_arrow("delta_0"));
    CHECK_FALSE(check_anti_automorphism(A, vmap, bad).ok);
  }
}

TEST_CASE("presentation serialization round-trips") {
  BuiltAlgebra a7 = catalog_build("A7");
  std::string text = serialize_presentation(a7.presentation);
  Presentation again = parse_presentation(text);
  CHECK(serialize_presentation(again) == text);
  FDAlgebra A = normalize(again);
  CHECK(A.dim() == 28);
}
