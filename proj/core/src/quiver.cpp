#include "cellar/quiver.hpp"

namespace cellar {

int Quiver::add_vertex(const std::string& name) {
  if (name.empty()) throw InputError("empty vertex name");
  if (vidx_.count(name)) throw InputError("duplicate vertex '" + name + "'");
  vertices_.push_back(name);
  vidx_[name] = n_vertices() - 1;
  return n_vertices() - 1;
}

int Quiver::add_arrow(const std::string& name, const std::string& from, const std::string& to) {
  if (name.empty()) throw InputError("empty arrow name");
  if (aidx_.count(name)) throw InputError("duplicate arrow '" + name + "'");
  int s = require_vertex(from);
  int t = require_vertex(to);
  arrows_.push_back(Arrow{name, s, t});
  aidx_[name] = n_arrows() - 1;
  return n_arrows() - 1;
}

int Quiver::vertex_index(const std::string& name) const {
  auto it = vidx_.find(name);
  return it == vidx_.end() ? -1 : it->second;
}

int Quiver::arrow_index(const std::string& name) const {
  auto it = aidx_.find(name);
  return it == aidx_.end() ? -1 : it->second;
}

int Quiver::require_vertex(const std::string& name) const {
  int v = vertex_index(name);
  if (v < 0) throw InputError("unknown vertex '" + name + "'");
  return v;
}

int Quiver::require_arrow(const std::string& name) const {
  int a = arrow_index(name);
  if (a < 0) throw InputError("unknown arrow '" + name + "'");
  return a;
}

int word_cmp(const Word& a, const Word& b) {
  if (a.length() != b.length()) return a.length() < b.length() ? -1 : 1;
  if (a.length() == 0) {
    if (a.src != b.src) return a.src < b.src ? -1 : 1;
    return 0;
  }
  for (int i = 0; i < a.length(); ++i)
    if (a.arrows[i] != b.arrows[i]) return a.arrows[i] < b.arrows[i] ? -1 : 1;
  return 0;
}

bool concat(const Word& a, const Word& b, Word& out) {
  if (a.tgt != b.src) return false;
  out.src = a.src;
  out.tgt = b.tgt;
  out.arrows = a.arrows;
  out.arrows.insert(out.arrows.end(), b.arrows.begin(), b.arrows.end());
  return true;
}

std::string word_label(const Quiver& q, const Word& w) {
  if (w.length() == 0) return "e(" + q.vertex_name(w.src) + ")";
  std::string s;
  for (size_t i = 0; i < w.arrows.size(); ++i) {
    if (i) s += "*";
    s += q.arrow(w.arrows[i]).name;
  }
  return s;
}

Word word_from_arrow(const Quiver& q, int arrow) {
  const Arrow& a = q.arrow(arrow);
  return Word{a.src, a.tgt, {arrow}};
}

Word word_from_names(const Quiver& q, const std::vector<std::string>& names) {
  if (names.empty()) throw InputError("empty path");
  Word w = word_from_arrow(q, q.require_arrow(names[0]));
  for (size_t i = 1; i < names.size(); ++i) {
    Word next = word_from_arrow(q, q.require_arrow(names[i]));
    Word out;
    if (!concat(w, next, out))
      throw InputError("non-composable path at '" + names[i] + "'");
    w = out;
  }
  return w;
}

}  // namespace cellar
