#include <doctest.h>

#include "test_util.hpp"

using namespace cellar;
using namespace cellar::testutil;

namespace {

IntMat cycle_cartan(int l) {
  IntMat c(l, std::vector<long>(l, 0));
  for (int i = 0; i < l; ++i) {
    c[i][i] = 2;
    c[i][(i + 1) % l] += 1;
    c[(i + 1) % l][i] += 1;
  }
  return c;
}

const IntMat kBranch = {{2, 1, 0, 0}, {1, 2, 1, 1}, {0, 1, 2, 0}, {0, 1, 0, 2}};

}  // namespace

TEST_CASE("factorization enumeration matches the brute-force oracle") {
  // pinned examples first
  CHECK(gram_factorizations({{1}}) == std::vector<IntMat>{{{1}}});
  CHECK(gram_factorizations({{4, 2}, {2, 2}}) ==
        std::vector<IntMat>{{{1, 1}, {1, 1}, {1, 0}, {1, 0}}});
  CHECK(gram_factorizations(kBranch).empty());
  auto a5 = gram_factorizations({{5, 3}, {3, 3}});
  REQUIRE(a5.size() == 2);
  CHECK(a5[0] == IntMat{{1, 1}, {1, 1}, {1, 1}, {1, 0}, {1, 0}});
  CHECK(a5[1] == IntMat{{2, 1}, {1, 1}, {0, 1}});

  // oracle agreement on a spread of small matrices
  std::vector<IntMat> inputs = {
      {{1}},          {{2}},
      {{4}},          {{8}},
      {{2, 1}, {1, 2}}, {{4, 2}, {2, 2}},
      {{5, 3}, {3, 3}}, {{5, 2}, {2, 2}},
      {{2, 2}, {2, 2}}, {{3, 1}, {1, 3}},
      cycle_cartan(3),  {{2, 1, 1}, {1, 2, 0}, {1, 0, 2}},
      {{4, 2, 0}, {2, 2, 1}, {0, 1, 2}},
      {{2, 2, 1}, {2, 4, 2}, {1, 2, 2}},
  };
  for (const auto& c : inputs) CHECK(gram_factorizations(c) == gram_factorizations_oracle(c));
}

TEST_CASE("factorization validation and caps") {
  CHECK_THROWS_AS(gram_factorizations({{1, 2}, {1, 2}}), InputError);   // asymmetric
  CHECK_THROWS_AS(gram_factorizations({{0, 0}, {0, 0}}), InputError);   // zero diagonal
  CHECK_THROWS_AS(gram_factorizations({{30, 0}, {0, 30}}), ResourceCapError);
  CHECK(gram_factorizations({{4, 0}, {0, 4}}, 30).size() == 1);
}

TEST_CASE("candidates carry the canonical row order") {
  for (const auto& c : {IntMat{{4, 2}, {2, 2}}, cycle_cartan(3), IntMat{{5, 3}, {3, 3}}})
    for (const auto& d : gram_factorizations(c))
      for (size_t i = 1; i < d.size(); ++i) CHECK(d[i - 1] >= d[i]);
}

TEST_CASE("order consistency: identity and the two-column chain") {
  IntMat id3 = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  OrderCertificate cert = order_consistency(id3, true);
  CHECK(cert.consistent);
  CHECK(recheck_certificate(id3, true, cert));

  IntMat db2 = {{1, 1}, {1, 1}, {1, 0}, {1, 0}};
  OrderCertificate c2 = order_consistency(db2, true);
  CHECK(c2.consistent);
  // the paper's chain 3 < 1 < 2 < 4, zero-based
  CHECK(c2.chain == std::vector<int>{2, 0, 1, 3});
  CHECK(recheck_certificate(db2, true, c2));
}

TEST_CASE("order consistency refutes the odd-cycle circulants") {
  for (int l : {3, 5, 7}) {
    IntMat d(l, std::vector<long>(l, 0));
    for (int i = 0; i < l; ++i) {
      d[i][i] = 1;
      d[i][(i + 1) % l] = 1;
    }
    OrderCertificate cert = order_consistency(d, true);
    CHECK_FALSE(cert.consistent);
  }
}

TEST_CASE("order consistency refutes every candidate for the odd cycles") {
  for (int l : {3, 5}) {
    auto cands = gram_factorizations(cycle_cartan(l));
    CHECK(!cands.empty());
    for (const auto& d : cands) CHECK_FALSE(order_consistency(d, true).consistent);
  }
}

TEST_CASE("order consistency refutes both candidates of the four-point star") {
  auto cands = gram_factorizations({{2, 2, 1, 1}, {2, 4, 2, 2}, {1, 2, 2, 1}, {1, 2, 1, 2}});
  REQUIRE(cands.size() == 2);
  for (const auto& d : cands) CHECK_FALSE(order_consistency(d, true).consistent);
}

TEST_CASE("order consistency refutes the printed 4x3 candidate") {
  IntMat d = {{1, 1, 0}, {1, 1, 1}, {0, 1, 1}, {0, 1, 0}};
  OrderCertificate cert = order_consistency(d, true);
  CHECK_FALSE(cert.consistent);
}

TEST_CASE("the self-injective flag gates the maximal-row conditions") {
  // two unit rows are required under the flag, one suffices without it
  IntMat d = {{1, 1}, {1, 1}, {1, 0}};  // D^T D = [[3,2],[2,2]]
  CHECK_FALSE(order_consistency(d, true).consistent);
  CHECK(order_consistency(d, false).consistent);
}

TEST_CASE("consistent certificates survive the independent recheck") {
  std::vector<IntMat> cartans = {{{4, 2}, {2, 2}}, {{5, 3}, {3, 3}}, {{5, 2}, {2, 2}}, {{4}}};
  for (const auto& c : cartans)
    for (const auto& d : gram_factorizations(c)) {
      OrderCertificate cert = order_consistency(d, true);
      if (cert.consistent) CHECK(recheck_certificate(d, true, cert));
    }
}

TEST_CASE("necessary-condition pipeline end to end") {
  // Gamma0(2) in full is its own obstruction: the factorization set is empty
  FDAlgebra g0 = build("Gamma0", {{"m", "2"}});
  GramProblem prob{cartan_matrix(g0), true};
  Verdict v = necessary_conditions_report(g0, prob);
  CHECK(v.verdict == "NOT-CELLULAR");
  CHECK(v.candidates.empty());

  // Gamma1 dies on Ext^1 asymmetry
  FDAlgebra g1 = build("Gamma1");
  Verdict v1 = necessary_conditions_report(g1, GramProblem{cartan_matrix(g1), true});
  CHECK(v1.verdict == "NOT-CELLULAR");
  bool ext_failed = false;
  for (const auto& s : v1.stages) ext_failed = ext_failed || (s.stage == "ext1" && !s.passed);
  CHECK(ext_failed);

  // the two-edge modified Brauer line stays honestly undecided
  FDAlgebra db2 = build("BrauerLineMod", {{"n", "2"}});
  Verdict v2 = necessary_conditions_report(db2, GramProblem{cartan_matrix(db2), true});
  CHECK(v2.verdict == "UNDECIDED");

  // A7 with its bundled datum is verified cellular
  FDAlgebra a7 = build("A7");
  CellDatum d7 = bundled_datum(a7, "A7");
  Verdict v3 = necessary_conditions_report(a7, GramProblem{cartan_matrix(a7), true}, &d7);
  CHECK(v3.verdict == "CELLULAR-VERIFIED");
}

TEST_CASE("verdicts are deterministic") {
  FDAlgebra a3 = build("A3");
  GramProblem prob{cartan_matrix(a3), true};
  Verdict a = necessary_conditions_report(a3, prob);
  Verdict b = necessary_conditions_report(a3, prob);
  CHECK(a.verdict == b.verdict);
  CHECK(a.candidates == b.candidates);
  REQUIRE(a.certificates.size() == b.certificates.size());
  for (size_t i = 0; i < a.certificates.size(); ++i) {
    CHECK(a.certificates[i].consistent == b.certificates[i].consistent);
    CHECK(a.certificates[i].chain == b.certificates[i].chain);
  }
}

TEST_CASE("integer determinant") {
  CHECK(det_int({{4, 2}, {2, 2}}) == 4);
  CHECK(det_int({{2, 2}, {2, 2}}) == 0);
  CHECK(det_int(kBranch) == 4);
  CHECK(det_int({{2, 1, 1}, {1, 2, 1}, {1, 1, 2}}) == 4);
  CHECK(det_int(cycle_cartan(4)) == 0);
}
