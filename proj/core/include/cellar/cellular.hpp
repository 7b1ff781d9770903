#pragma once

#include "cellar/module.hpp"

namespace cellar {

// Strict partial order on named elements, stored transitively closed.
struct Poset {
  std::vector<std::string> elements;
  std::vector<std::vector<bool>> greater;  // greater[i][j] <=> el_i > el_j

  int size() const { return static_cast<int>(elements.size()); }
  int index(const std::string& name) const;
  bool gt(int i, int j) const { return greater[i][j]; }
  // Throws InputError unless irreflexive/antisymmetric after closure.
  static Poset from_pairs(const std::vector<std::string>& elements,
                          const std::vector<std::pair<std::string, std::string>>& lo_hi);
  bool is_linear_extension(const std::vector<int>& order) const;
};

// Serializable description of a cell datum (file format and bundled
// fixtures share it).
struct CellDatumSpec {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> strict_pairs;  // (lower, higher)
  std::vector<int> sizes;
  std::vector<std::vector<std::vector<ExprSpec>>> basis;  // [lambda][s][t]
  std::vector<std::pair<std::string, std::string>> vertex_map;
  std::vector<std::pair<std::string, ExprSpec>> arrow_map;
};

CellDatumSpec parse_cell_datum_spec(const std::string& json_text);
std::string serialize_cell_datum_spec(const CellDatumSpec& spec);

// A cell datum bound to an algebra: poset, tableau sizes, basis entries in
// normal form, and the involution data.
class CellDatum {
 public:
  const FDAlgebra* A = nullptr;
  Poset poset;
  std::vector<int> tsize;
  std::vector<std::vector<std::vector<Element>>> entry;  // [lambda][s][t]
  std::map<std::string, std::string> vmap;
  std::map<std::string, Element> amap;

  int n_cells() const { return poset.size(); }
  // flattened entry index of (lambda, s, t)
  int flat(int lambda, int s, int t) const;
  int total_entries() const;
  const std::string& cell_name(int lambda) const { return poset.elements[lambda]; }

  // Coordinates of an algebra element in the cellular basis (requires C1).
  Vec cell_coords(const Element& e) const;
  void prepare();  // builds the coordinate transform

 private:
  std::vector<int> offset_;
  mutable std::optional<Mat> to_cell_;  // inverse coordinate transform, built on first use
};

// Validates sizes (sum of |T|^2 = dim) and the order, instantiates entries.
CellDatum instantiate_cell_datum(const CellDatumSpec& spec, const FDAlgebra& A);
CellDatum load_cell_datum(const std::string& json_text, const FDAlgebra& A);

struct C1Result {
  bool ok = false;
  std::string reason;
};
struct C2Result {
  bool ok = false;
  std::string reason;
};
struct C3Witness {
  std::string generator;
  int lambda = -1, s = -1, t = -1, t2 = -1;
};
struct C3Result {
  bool ok = false;
  std::optional<C3Witness> witness;
  std::string reason;
};

C1Result verify_c1(const CellDatum& d);
C2Result verify_c2(const CellDatum& d);
C3Result verify_c3(const CellDatum& d);

// Cell module for one poset element; requires C3 to have passed.
LeftModule cell_module(const CellDatum& d, int lambda);
Mat gram_matrix(const CellDatum& d, int lambda);
std::vector<int> lambda_plus(const CellDatum& d);

struct DecompResult {
  std::vector<int> lambda_plus;     // poset indices with nonzero Gram form
  std::vector<int> vertex_of;       // per lambda_plus position: matched vertex
  IntMat d;                         // rows = all cells, cols = lambda_plus
  bool order_compatible = true;     // d_{lm} != 0 => lambda >= mu, d_{mm} = 1
  bool cartan_identity = true;      // D^T D equals the Cartan matrix
  std::string reason;
};
DecompResult decomposition_matrix(const CellDatum& d);

struct ChainResult {
  bool ok = true;
  std::vector<int> ideal_dims;  // dim A(mu_i) along the extension
  std::string reason;
};
// Verifies the two-sided ideal chain of a linear extension and the
// Delta-filtration of every projective against the decomposition numbers.
ChainResult cell_chain(const CellDatum& d, const std::vector<int>& extension,
                       std::uint64_t seed = 0xCE11A5ULL);

struct CellVerification {
  C1Result c1;
  C2Result c2;
  C3Result c3;
  std::optional<DecompResult> decomp;
  bool ok = false;
};
CellVerification verify_cell_datum(const CellDatum& d);

}  // namespace cellar
