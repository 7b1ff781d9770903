#include <doctest.h>

#include "test_util.hpp"

using namespace cellar;
using namespace cellar::testutil;

TEST_CASE("catalog metadata is reproduced by the engine") {
  for (const BuiltAlgebra& b : catalog_sweep()) {
    INFO(b.name);
    FDAlgebra A = normalize(b.presentation);
    if (b.meta.expected_dimension) CHECK(A.dim() == *b.meta.expected_dimension);
    if (b.meta.expected_cartan) CHECK(cartan_matrix(A) == *b.meta.expected_cartan);
  }
}

TEST_CASE("catalog verdicts are reproduced by the report pipeline") {
  for (const BuiltAlgebra& b : catalog_sweep()) {
    if (b.meta.expected_verdict.empty()) continue;
    INFO(b.name);
    FDAlgebra A = normalize(b.presentation);
    std::optional<CellDatum> datum;
    if (b.datum) datum = instantiate_cell_datum(*b.datum, A);
    GramProblem prob{cartan_matrix(A), b.meta.self_injective};
    Verdict v = necessary_conditions_report(A, prob, datum ? &*datum : nullptr);
    CHECK_MESSAGE(v.verdict == b.meta.expected_verdict,
                  b.name << ": got " << v.verdict << ", expected " << b.meta.expected_verdict);
  }
}

TEST_CASE("self-injective entries are weakly symmetric") {
  for (const BuiltAlgebra& b : catalog_sweep()) {
    if (!b.meta.self_injective) continue;
    INFO(b.name);
    FDAlgebra A = normalize(b.presentation);
    CHECK(weakly_symmetric(A).ok);
  }
}

TEST_CASE("every bundled datum passes full verification") {
  for (const BuiltAlgebra& b : catalog_sweep()) {
    if (!b.datum) continue;
    INFO(b.name);
    FDAlgebra A = normalize(b.presentation);
    CellVerification v = verify_cell_datum(instantiate_cell_datum(*b.datum, A));
    CHECK(v.ok);
  }
}

TEST_CASE("LambdaPrime is symmetric in its two tail lengths") {
  const std::vector<std::pair<long, long>> pairs = {{0, 1}, {1, 2}};
  for (auto [l, m] : pairs) {
    FDAlgebra a = normalize(
        catalog_build("LambdaPrime",
                      {{"l", std::to_string(l)}, {"m", std::to_string(m)}})
            .presentation);
    FDAlgebra b = normalize(
        catalog_build("LambdaPrime",
                      {{"l", std::to_string(m)}, {"m", std::to_string(l)}})
            .presentation);
    CHECK(a.dim() == b.dim());
    // Cartan entries agree under the vertex relabeling i -> -i
    IntMat ca = cartan_matrix(a), cb = cartan_matrix(b);
    auto index_of = [](const FDAlgebra& x, long v) {
      for (size_t i = 0; i < x.vertex_names.size(); ++i)
        if (x.vertex_names[i] == std::to_string(v)) return static_cast<int>(i);
      return -1;
    };
    for (long i = -l; i <= m; ++i)
      for (long j = -l; j <= m; ++j)
        CHECK(ca[index_of(a, i)][index_of(a, j)] == cb[index_of(b, -i)][index_of(b, -j)]);
  }
}

TEST_CASE("LambdaPrime agrees with the generic Brauer graph builder") {
  // T(l, m): a line with a loop in the middle, all multiplicities one.
  auto loop_line = [](int l, int m) {
    BrauerGraph g;
    const int middle = l;  // graph vertices: l left, the loop vertex, m right
    const int nv = l + m + 1;
    g.multiplicity.assign(nv, 1);
    // edges: 0..l-1 left chain, l = loop, l+1..l+m right chain
    for (int e = 0; e < l; ++e) g.edges.emplace_back(e, e + 1);
    g.edges.emplace_back(middle, middle);
    for (int e = 0; e < m; ++e) g.edges.emplace_back(middle + e, middle + e + 1);
    g.cyclic.resize(nv);
    for (int u = 0; u < nv; ++u) {
      if (u < middle) {
        if (u > 0) g.cyclic[u].emplace_back(u - 1, 1);
        g.cyclic[u].emplace_back(u, 0);
      } else if (u == middle) {
        // interleaved: loop end, left edge, other loop end, right edge
        g.cyclic[u].emplace_back(l, 0);
        if (l > 0) g.cyclic[u].emplace_back(l - 1, 1);
        g.cyclic[u].emplace_back(l, 1);
        if (m > 0) g.cyclic[u].emplace_back(l + 1, 0);
      } else {
        g.cyclic[u].emplace_back(l + (u - middle), 1);
        if (u < nv - 1) g.cyclic[u].emplace_back(l + (u - middle) + 1, 0);
      }
    }
    return g;
  };
  for (auto [l, m] : std::vector<std::pair<int, int>>{{0, 1}, {1, 1}, {1, 2}, {0, 2}}) {
    FDAlgebra generic = normalize(brauer_graph_algebra(loop_line(l, m)));
    FDAlgebra named = normalize(catalog_build("LambdaPrime", {{"l", std::to_string(l)},
                                                              {"m", std::to_string(m)}})
                                    .presentation);
    INFO("l=" << l << " m=" << m);
    CHECK(generic.dim() == named.dim());
    // generic edge k <-> named vertex k - l
    IntMat cg = cartan_matrix(generic), cn = cartan_matrix(named);
    const int nedges = l + m + 1;
    for (int i = 0; i < nedges; ++i)
      for (int j = 0; j < nedges; ++j) CHECK(cg[i][j] == cn[i][j]);
  }
}

TEST_CASE("Brauer line examples") {
  FDAlgebra two = normalize(catalog_build("BrauerLine", {{"n", "2"}}).presentation);
  CHECK(two.dim() == 6);
  CHECK(cartan_matrix(two) == IntMat{{2, 1}, {1, 2}});

  // a single edge with trivial multiplicities degenerates to K[x]/(x^2)
  FDAlgebra one = normalize(catalog_build("BrauerLine", {{"n", "1"}, {"mults", "1,1"}}).presentation);
  CHECK(one.dim() == 2);
  CHECK(cartan_matrix(one) == IntMat{{2}});

  // two exceptional end vertices of multiplicity two
  FDAlgebra exc = normalize(
      catalog_build("BrauerLine", {{"n", "2"}, {"mults", "2,1,2"}}).presentation);
  CHECK(exc.dim() == 8);
  CHECK(weakly_symmetric(exc).ok);
}

TEST_CASE("invalid ribbon structures are rejected") {
  // two cycles
  BrauerGraph g;
  g.multiplicity = {1, 1};
  g.edges = {{0, 1}, {0, 1}, {0, 1}};
  g.cyclic = {{{0, 0}, {1, 0}, {2, 0}}, {{0, 1}, {1, 1}, {2, 1}}};
  CHECK_THROWS_AS(brauer_graph_algebra(g), InputError);
  // an even cycle (two parallel edges)
  BrauerGraph h;
  h.multiplicity = {1, 1};
  h.edges = {{0, 1}, {0, 1}};
  h.cyclic = {{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}};
  CHECK_THROWS_AS(brauer_graph_algebra(h), InputError);
  // disconnected
  BrauerGraph k;
  k.multiplicity = {1, 1, 1, 1};
  k.edges = {{0, 1}, {2, 3}};
  k.cyclic = {{{0, 0}}, {{0, 1}}, {{1, 0}}, {{1, 1}}};
  CHECK_THROWS_AS(brauer_graph_algebra(k), InputError);
}

TEST_CASE("double quivers hit the trivial-extension dimension") {
  for (const BuiltAlgebra& b : catalog_sweep()) {
    if (b.name != "DoubleQuiver") continue;
    FDAlgebra A = normalize(b.presentation);
    REQUIRE(b.meta.expected_dimension.has_value());
    CHECK(A.dim() == *b.meta.expected_dimension);
  }
  // the single-arrow case needs the cube relations to collapse
  FDAlgebra line2 = normalize(
      catalog_build("DoubleQuiver", {{"shape", "line"}, {"n", "2"}}).presentation);
  CHECK(line2.dim() == 6);
  CHECK(cartan_matrix(line2) == IntMat{{2, 1}, {1, 2}});
}

TEST_CASE("catalog rejects bad input") {
  CHECK_THROWS_AS(catalog_build("NoSuchAlgebra"), InputError);
  CHECK_THROWS_AS(catalog_build("Gamma2", {{"l", "2"}, {"m", "1"}}), InputError);
  CHECK_THROWS_AS(catalog_build("Gamma0", {{"m", "0"}}), InputError);
  CHECK_THROWS_AS(catalog_build("Omega", {{"n", "0"}}), InputError);
  CHECK_THROWS_AS(catalog_build("A7", {{"bogus", "1"}}), InputError);
}

TEST_CASE("catalog list covers every entry with schemas") {
  const auto& list = catalog_list();
  CHECK(list.size() >= 28);
  for (const auto& e : list) {
    std::map<std::string, std::string> params;
    CHECK_NOTHROW(catalog_build(e.name, params));
  }
}

TEST_CASE("associativity holds on all basis triples across the catalog") {
  for (const BuiltAlgebra& b : catalog_sweep()) {
    FDAlgebra A = normalize(b.presentation);
    if (A.dim() > 32) continue;
    std::string why;
    CHECK_MESSAGE(A.validate(&why), b.name << ": " << why);
  }
}
