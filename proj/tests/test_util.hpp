#pragma once

#include <map>
#include <string>
#include <vector>

#include "cellar/catalog.hpp"

namespace cellar::testutil {

inline FDAlgebra build(const std::string& name, const std::map<std::string, std::string>& params = {},
                       int cap = 32) {
  return normalize(catalog_build(name, params).presentation, cap);
}

inline CellDatum bundled_datum(const FDAlgebra& A, const std::string& name,
                               const std::map<std::string, std::string>& params = {}) {
  BuiltAlgebra b = catalog_build(name, params);
  if (!b.datum) throw InputError("no bundled datum for " + name);
  return instantiate_cell_datum(*b.datum, A);
}

// Independent dimension oracle: dimension of K Q_{<=L} / (truncated ideal),
// computed by spanning all truncated products a*r*b in the path space of
// words of length <= L. Exact for the quotient by (relations) + R^{L+1};
// equals dim(KQ/I) once L reaches the nilpotency degree of the radical.
long brute_force_dimension(const Presentation& p, int L);

// Composition multiplicities by socle peeling (independent of the
// idempotent-rank shortcut).
DimensionVector composition_by_socle_peeling(const LeftModule& M);

// Independent factorization oracle: enumerates multisets of candidate rows
// (entries r_i <= sqrt(C_ii), at most trace(C) rows) and keeps D^T D = C with
// a unit entry in every column; canonicalized and sorted like the engine.
std::vector<IntMat> gram_factorizations_oracle(const IntMat& cartan);

}  // namespace cellar::testutil
