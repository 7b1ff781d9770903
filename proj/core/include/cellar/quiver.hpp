#pragma once

#include <map>
#include <string>
#include <vector>

#include "cellar/scalar.hpp"

namespace cellar {

struct Arrow {
  std::string name;
  int src;
  int tgt;
};

class Quiver {
 public:
  int add_vertex(const std::string& name);
  int add_arrow(const std::string& name, const std::string& from, const std::string& to);

  int n_vertices() const { return static_cast<int>(vertices_.size()); }
  int n_arrows() const { return static_cast<int>(arrows_.size()); }
  const std::string& vertex_name(int v) const { return vertices_[v]; }
  const Arrow& arrow(int a) const { return arrows_[a]; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<std::string>& vertices() const { return vertices_; }

  int vertex_index(const std::string& name) const;    // -1 if absent
  int arrow_index(const std::string& name) const;     // -1 if absent
  int require_vertex(const std::string& name) const;  // throws InputError
  int require_arrow(const std::string& name) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, int> vidx_;
  std::map<std::string, int> aidx_;
};

// A path word: the trivial path at a vertex (no arrows) or a left-to-right
// composable arrow sequence ("ab" means a first, then b, with tgt(a)=src(b)).
struct Word {
  int src = -1;
  int tgt = -1;
  std::vector<int> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
  static Word vertex(int v) { return Word{v, v, {}}; }
  bool operator==(const Word& o) const = default;
};

// Graded lexicographic order: by length first, ties broken left-to-right by
// arrow index (the file order of arrows); trivial paths by vertex index.
int word_cmp(const Word& a, const Word& b);

struct WordGreater {
  bool operator()(const Word& a, const Word& b) const { return word_cmp(a, b) > 0; }
};
struct WordLess {
  bool operator()(const Word& a, const Word& b) const { return word_cmp(a, b) < 0; }
};

// Concatenation; returns false (and leaves out untouched) if not composable.
bool concat(const Word& a, const Word& b, Word& out);

std::string word_label(const Quiver& q, const Word& w);
Word word_from_arrow(const Quiver& q, int arrow);
// Builds a word from whitespace-separated arrow names ("gamma0 gamma1").
Word word_from_names(const Quiver& q, const std::vector<std::string>& names);

}  // namespace cellar
