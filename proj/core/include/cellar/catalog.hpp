#pragma once

#include "cellar/obstruction.hpp"

namespace cellar {

struct ParamSchema {
  std::string name;
  std::string def;         // default value
  std::string constraint;  // human-readable
};

struct CatalogEntry {
  std::string name;
  std::string summary;
  std::vector<ParamSchema> params;
  bool self_injective = true;
  bool has_datum = false;
};

struct CatalogMetadata {
  bool self_injective = true;
  std::optional<long> expected_dimension;
  std::optional<IntMat> expected_cartan;
  std::string expected_verdict;  // engine verdict for the default pipeline
  std::string note;
};

struct BuiltAlgebra {
  std::string name;
  std::map<std::string, std::string> params;
  Presentation presentation;
  std::optional<CellDatumSpec> datum;
  CatalogMetadata meta;
};

const std::vector<CatalogEntry>& catalog_list();
BuiltAlgebra catalog_build(const std::string& name,
                           const std::map<std::string, std::string>& params = {});

// Instances swept by the metadata/property test suites: every entry with a
// representative choice of parameters.
std::vector<BuiltAlgebra> catalog_sweep();

// A Brauer graph: vertices with multiplicities, edges given by their two
// endpoints, and at each vertex a cyclic ordering of the incident edge-ends.
// end encoding: (edge index, side) with side 0/1 for the edge's two ends.
struct BrauerGraph {
  std::vector<long> multiplicity;              // per vertex
  std::vector<std::pair<int, int>> edges;      // endpoint vertices (loops allowed)
  std::vector<std::vector<std::pair<int, int>>> cyclic;  // per vertex: ordered ends

  static BrauerGraph line(int n_edges, const std::vector<long>& vertex_mults);
};

// Standard weakly symmetric Brauer graph presentation: quiver vertices are
// the edges, arrows follow the successor maps of the cyclic orderings,
// relations are the full cycle-power differences per edge plus the
// end-switching zero products. Graphs must be connected with at most one
// cycle, of odd length.
Presentation brauer_graph_algebra(const BrauerGraph& g);

}  // namespace cellar
