#pragma once

#include "cellar/cellular.hpp"

namespace cellar {

// A Cartan matrix to factor as D^T D, with the self-injectivity flag that
// gates the maximal-row and socle-matching conditions.
struct GramProblem {
  IntMat cartan;
  bool self_injective = false;
};

// Complete, duplicate-free enumeration of natural matrices D with D^T D = C,
// no zero row, and a 1 in every column, up to row permutation. Candidates are
// canonical (rows in nonincreasing lex order) and the list is sorted. The row
// count is bounded by trace(C); tr(C) > trace_cap throws ResourceCapError.
std::vector<IntMat> gram_factorizations(const IntMat& cartan, long trace_cap = 24);

struct OrderCertificate {
  bool consistent = false;
  std::string reason;                        // deepest failure over all matchings
  std::vector<int> assignment;               // column -> matched row (d = 1 minimum)
  std::vector<std::pair<int, int>> forced;   // (greater, lesser) row pairs
  std::vector<int> chain;                    // rows, bottom to top
  std::vector<int> socle_rows;               // column -> last row (self-injective)
};

// Decides whether some partial order on the rows is compatible with the
// candidate: forced minimality relations are acyclic, some matched unit row
// can be the unique minimal element, and (under self_injective) some other
// single-entry-1 row can be the unique maximal element, every remaining row
// chains between them, and the column-wise top rows give pairwise distinct
// socles with unit entries.
OrderCertificate order_consistency(const IntMat& d, bool self_injective);

// Re-derives every condition from a claimed-consistent certificate.
bool recheck_certificate(const IntMat& d, bool self_injective, const OrderCertificate& cert);

struct StageReport {
  std::string stage;    // "det", "ext1", "weak-symmetry", "factorization", "order"
  bool passed = true;
  std::string detail;
};

struct Verdict {
  std::string verdict;  // NOT-CELLULAR | UNDECIDED | CELLULAR-VERIFIED
  std::vector<StageReport> stages;
  std::vector<IntMat> candidates;
  std::vector<OrderCertificate> certificates;  // parallel to candidates
  std::optional<CellVerification> datum;
};

// Runs det C > 0, Ext^1-symmetry, weak symmetry (when self-injectivity is
// declared), factorization enumeration and order consistency; verifies the
// datum when one is supplied.
Verdict necessary_conditions_report(const FDAlgebra& A, const GramProblem& problem,
                                    const CellDatum* datum = nullptr, long trace_cap = 24);

long trace_of(const IntMat& m);
long det_int(IntMat m);  // exact integer determinant (Bareiss)

}  // namespace cellar
