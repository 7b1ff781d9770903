#pragma once

#include <map>
#include <optional>

#include "cellar/linalg.hpp"
#include "cellar/presentation.hpp"

namespace cellar {

// A monic rewrite rule tip -> rest, tip the graded-lex largest word of a
// relation in the two-sided ideal.
struct Rule {
  Word tip;
  Element rest;
};

// Confluent rewriting system for the two-sided ideal of a presentation,
// obtained by overlap completion under the graded-lex order.
class RewriteSystem {
 public:
  static RewriteSystem complete(const Quiver& q, const Field& f,
                                const std::vector<Element>& relations, int cap);

  Element reduce(Element e) const;
  bool word_is_normal(const Word& w) const;
  // Assumes every proper prefix of w is normal; checks suffix redexes only.
  bool extension_is_normal(const Word& w) const;
  const std::vector<Rule>& rules() const { return rules_; }
  int cap() const { return cap_; }

 private:
  bool find_redex(const Word& w, int& pos, int& rule) const;
  Word slice(const Word& w, int from, int len) const;
  void index_rules();

  Field f_;
  int cap_ = 32;
  std::vector<std::pair<int, int>> ends_;  // arrow -> (src, tgt)
  std::vector<Rule> rules_;
  std::vector<std::vector<int>> by_first_;
};

using SparseVec = std::vector<std::pair<int, Scalar>>;

// A normalized finite-dimensional algebra: ordered basis of normal words,
// structure constants, and vertex idempotents. Algebras produced by
// idempotent truncation keep the table data but drop the presentation.
class FDAlgebra {
 public:
  Field field;
  std::vector<std::string> vertex_names;
  std::vector<Word> basis;           // ascending graded-lex order
  std::vector<std::string> labels;   // display labels, one per basis word
  std::vector<int> src, tgt, len;    // per basis word; src/tgt index vertex_names
  std::vector<int> idem;             // vertex -> basis index of e_v
  std::vector<std::vector<SparseVec>> table;
  int nilpotency = 0;                // least k with J^k = 0

  std::optional<Presentation> pres;
  std::optional<RewriteSystem> rs;

  int dim() const { return static_cast<int>(basis.size()); }
  bool presented() const { return pres.has_value(); }
  const SparseVec& mul(int i, int j) const { return table[i][j]; }
  SparseVec mul_vec(int i, const Vec& v) const;  // basis_i * (vector in coords)

  int basis_index(const Word& w) const;
  Element reduce(const Element& e) const;
  Vec coords(const Element& e) const;  // auto-reduces first
  Element from_coords(const Vec& v) const;
  Element idem_element(int v) const;
  Element arrow_element(int a) const;  // presented only

  // dim e_j A e_i, i.e. number of basis words from j to i.
  long pair_dim(int j, int i) const;

  // Exhaustive structural checks used by the test suites.
  bool validate(std::string* why = nullptr) const;

 private:
  mutable std::map<Word, int, WordLess> index_;
  void build_index() const;
};

// Runs overlap completion and enumerates the normal-word basis. Throws
// ResourceCapError if words of length >= cap survive (infinite-dimensional
// presentation or cap too small), and InputError if the arrow ideal image
// fails to be nilpotent.
FDAlgebra normalize(const Presentation& p, int cap = 32);

// Product in normal form; inputs are reduced first (multiply never errors on
// unreduced input, it auto-reduces).
Element multiply(const FDAlgebra& A, const Element& x, const Element& y);

struct AntiCheck {
  bool ok = false;
  int failing_relation = -1;  // index into pres.relations when a relation breaks
  std::string reason;
};

// Checks that vmap/amap extend to an algebra anti-automorphism with
// iota^2 = id. amap sends an arrow a to an element of
// e_{vmap(tgt a)} A e_{vmap(src a)}.
AntiCheck check_anti_automorphism(const FDAlgebra& A,
                                  const std::map<std::string, std::string>& vmap,
                                  const std::map<std::string, Element>& amap);

// The induced anti-map applied to an element, in normal form.
Element apply_anti(const FDAlgebra& A, const std::map<std::string, std::string>& vmap,
                   const std::map<std::string, Element>& amap, const Element& e);

}  // namespace cellar
