#include <algorithm>
#include <set>

#include "cellar/algebra.hpp"

namespace cellar {

void FDAlgebra::build_index() const {
  if (!index_.empty() || basis.empty()) return;
  for (int i = 0; i < dim(); ++i) index_[basis[i]] = i;
}

int FDAlgebra::basis_index(const Word& w) const {
  build_index();
  auto it = index_.find(w);
  return it == index_.end() ? -1 : it->second;
}

Element FDAlgebra::reduce(const Element& e) const {
  if (rs) return rs->reduce(e);
  return e;
}

Vec FDAlgebra::coords(const Element& e) const {
  Element r = reduce(e);
  Vec v(dim(), Scalar::zero(field));
  for (const auto& [w, c] : r.terms()) {
    int i = basis_index(w);
    if (i < 0) throw InputError("element is not supported on the basis");
    v[i] = c;
  }
  return v;
}

Element FDAlgebra::from_coords(const Vec& v) const {
  Element e(field);
  for (int i = 0; i < dim(); ++i)
    if (!v[i].is_zero()) e.add(basis[i], v[i]);
  return e;
}

Element FDAlgebra::idem_element(int v) const {
  return Element::from_word(field, basis[idem[v]], Scalar::one(field));
}

Element FDAlgebra::arrow_element(int a) const {
  if (!pres) throw InputError("algebra has no quiver presentation");
  return reduce(Element::from_word(field, word_from_arrow(pres->quiver, a), Scalar::one(field)));
}

SparseVec FDAlgebra::mul_vec(int i, const Vec& v) const {
  Vec acc(dim(), Scalar::zero(field));
  for (int j = 0; j < dim(); ++j) {
    if (v[j].is_zero()) continue;
    for (const auto& [k, c] : table[i][j]) acc[k] += c * v[j];
  }
  SparseVec out;
  for (int k = 0; k < dim(); ++k)
    if (!acc[k].is_zero()) out.emplace_back(k, acc[k]);
  return out;
}

long FDAlgebra::pair_dim(int j, int i) const {
  long n = 0;
  for (int k = 0; k < dim(); ++k)
    if (src[k] == j && tgt[k] == i) ++n;
  return n;
}

Element multiply(const FDAlgebra& A, const Element& x, const Element& y) {
  return A.reduce(raw_mul(A.reduce(x), A.reduce(y)));
}

namespace {

// Span tracker over algebra coordinates.
RowSpace product_span(const FDAlgebra& A, const std::vector<int>& left_basis,
                      const RowSpace& right) {
  RowSpace out(A.field, A.dim());
  for (int i : left_basis)
    for (const auto& row : right.rows()) {
      SparseVec p = A.mul_vec(i, row);
      Vec v(A.dim(), Scalar::zero(A.field));
      for (const auto& [k, c] : p) v[k] = c;
      out.insert(std::move(v));
    }
  return out;
}

}  // namespace

FDAlgebra normalize(const Presentation& p, int cap) {
  FDAlgebra A;
  A.field = p.field;
  A.pres = p;
  A.vertex_names = p.quiver.vertices();
  A.rs = RewriteSystem::complete(p.quiver, p.field, p.relations, cap);

  // verify every overlap of the completed system resolves
  {
    const auto& rules = A.rs->rules();
    for (const auto& r1 : rules)
      for (const auto& r2 : rules) {
        const int l1 = r1.tip.length(), l2 = r2.tip.length();
        for (int o = 1; o < std::min(l1, l2); ++o) {
          bool match = true;
          for (int k = 0; k < o; ++k)
            if (r1.tip.arrows[l1 - o + k] != r2.tip.arrows[k]) {
              match = false;
              break;
            }
          if (!match) continue;
          Word pre{r1.tip.src, 0, {}}, suf{0, r2.tip.tgt, {}};
          pre.arrows.assign(r1.tip.arrows.begin(), r1.tip.arrows.end() - o);
          suf.arrows.assign(r2.tip.arrows.begin() + o, r2.tip.arrows.end());
          if (!pre.arrows.empty()) {
            pre.src = p.quiver.arrow(pre.arrows.front()).src;
            pre.tgt = p.quiver.arrow(pre.arrows.back()).tgt;
          } else
            pre.tgt = pre.src = r1.tip.src;
          if (!suf.arrows.empty()) {
            suf.src = p.quiver.arrow(suf.arrows.front()).src;
            suf.tgt = p.quiver.arrow(suf.arrows.back()).tgt;
          } else
            suf.src = suf.tgt = r2.tip.tgt;
          Element s = r1.rest.rmul(suf) - r2.rest.lmul(pre);
          if (!A.rs->reduce(s).zero())
            throw std::logic_error("rewriting system failed to complete");
        }
      }
  }

  // enumerate normal words breadth-first by length
  std::vector<Word> frontier;
  for (int v = 0; v < p.quiver.n_vertices(); ++v) {
    A.basis.push_back(Word::vertex(v));
    frontier.push_back(Word::vertex(v));
  }
  int length = 0;
  while (!frontier.empty()) {
    ++length;
    if (length >= cap)
      throw ResourceCapError("normal words of length >= cap survive; raise --cap or expect "
                             "an infinite-dimensional quotient");
    std::vector<Word> next;
    for (const auto& w : frontier)
      for (int a = 0; a < p.quiver.n_arrows(); ++a) {
        Word ext;
        if (!concat(w, word_from_arrow(p.quiver, a), ext)) continue;
        if (A.rs->extension_is_normal(ext)) next.push_back(std::move(ext));
      }
    std::sort(next.begin(), next.end(), WordLess{});
    A.basis.insert(A.basis.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(A.basis.begin(), A.basis.end(), WordLess{});

  const int n = A.dim();
  A.labels.reserve(n);
  A.src.resize(n);
  A.tgt.resize(n);
  A.len.resize(n);
  A.idem.assign(p.quiver.n_vertices(), -1);
  for (int i = 0; i < n; ++i) {
    A.labels.push_back(word_label(p.quiver, A.basis[i]));
    A.src[i] = A.basis[i].src;
    A.tgt[i] = A.basis[i].tgt;
    A.len[i] = A.basis[i].length();
    if (A.len[i] == 0) A.idem[A.basis[i].src] = i;
  }

  A.table.assign(n, std::vector<SparseVec>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Word prod;
      if (!concat(A.basis[i], A.basis[j], prod)) continue;
      Element r = A.rs->reduce(Element::from_word(p.field, prod, Scalar::one(p.field)));
      SparseVec sv;
      for (const auto& [w, c] : r.terms()) {
        int k = A.basis_index(w);
        if (k < 0) throw std::logic_error("product left the normal basis");
        sv.emplace_back(k, c);
      }
      std::sort(sv.begin(), sv.end(), [](auto& a, auto& b) { return a.first < b.first; });
      A.table[i][j] = std::move(sv);
    }

  // the image of the arrow ideal must be nilpotent
  std::vector<int> radical;
  RowSpace power(A.field, n);
  for (int i = 0; i < n; ++i)
    if (A.len[i] >= 1) {
      radical.push_back(i);
      Vec v(n, Scalar::zero(A.field));
      v[i] = Scalar::one(A.field);
      power.insert(std::move(v));
    }
  if (n - static_cast<int>(radical.size()) != p.quiver.n_vertices())
    throw std::logic_error("semisimple quotient has wrong dimension");
  int k = 1;
  while (power.dim() > 0) {
    RowSpace nxt = product_span(A, radical, power);
    if (nxt.dim() >= power.dim())
      throw InputError("arrow ideal image is not nilpotent (relation list is degenerate)");
    power = std::move(nxt);
    ++k;
  }
  A.nilpotency = k;
  return A;
}

bool FDAlgebra::validate(std::string* why) const {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  const int n = dim();
  // vertex idempotents: orthogonal, idempotent, summing to 1
  for (size_t u = 0; u < idem.size(); ++u)
    for (size_t v = 0; v < idem.size(); ++v) {
      const SparseVec& p = table[idem[u]][idem[v]];
      if (u == v) {
        if (p.size() != 1 || p[0].first != idem[u] || !p[0].second.is_one())
          return fail("idempotent not idempotent");
      } else if (!p.empty())
        return fail("idempotents not orthogonal");
    }
  // associativity on all basis triples
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec lhs(n, Scalar::zero(field)), rhs(n, Scalar::zero(field));
        for (const auto& [m, c] : table[i][j])
          for (const auto& [q, d] : table[m][k]) lhs[q] += c * d;
        for (const auto& [m, c] : table[j][k])
          for (const auto& [q, d] : table[i][m]) rhs[q] += c * d;
        if (lhs != rhs) return fail("associativity fails on a basis triple");
      }
  // per-pair dimensions tile the algebra
  long total = 0;
  for (size_t u = 0; u < idem.size(); ++u)
    for (size_t v = 0; v < idem.size(); ++v) total += pair_dim(static_cast<int>(u), static_cast<int>(v));
  if (total != n) return fail("pair dimensions do not sum to dim");
  return true;
}

Element apply_anti(const FDAlgebra& A, const std::map<std::string, std::string>& vmap,
                   const std::map<std::string, Element>& amap, const Element& e) {
  if (!A.pres) throw InputError("anti-map requires a presented algebra");
  const Quiver& q = A.pres->quiver;
  Element out(A.field);
  for (const auto& [w, c] : e.terms()) {
    if (w.length() == 0) {
      int v = q.require_vertex(vmap.at(q.vertex_name(w.src)));
      out += Element::from_word(A.field, Word::vertex(v), c);
      continue;
    }
    Element acc(A.field);
    bool first = true;
    for (auto it = w.arrows.rbegin(); it != w.arrows.rend(); ++it) {
      const Element& img = amap.at(q.arrow(*it).name);
      acc = first ? img : raw_mul(acc, img);
      first = false;
    }
    out += acc.scaled(c);
  }
  return A.reduce(out);
}

AntiCheck check_anti_automorphism(const FDAlgebra& A,
                                  const std::map<std::string, std::string>& vmap,
                                  const std::map<std::string, Element>& amap) {
  AntiCheck res;
  if (!A.pres) {
    res.reason = "algebra has no quiver presentation";
    return res;
  }
  const Quiver& q = A.pres->quiver;
  // vmap must be an involutive vertex bijection
  for (const auto& vn : q.vertices()) {
    auto it = vmap.find(vn);
    if (it == vmap.end()) {
      res.reason = "vertex '" + vn + "' missing from the vertex map";
      return res;
    }
    int v = q.vertex_index(it->second);
    if (v < 0) {
      res.reason = "vertex map hits unknown vertex '" + it->second + "'";
      return res;
    }
    if (vmap.at(it->second) != vn) {
      res.reason = "vertex map is not an involution at '" + vn + "'";
      return res;
    }
  }
  // arrow images must be typed e_{vmap(tgt)} A e_{vmap(src)} and involutive
  for (const auto& a : q.arrows()) {
    auto it = amap.find(a.name);
    if (it == amap.end()) {
      res.reason = "arrow '" + a.name + "' missing from the arrow map";
      return res;
    }
    int want_src = q.require_vertex(vmap.at(q.vertex_name(a.tgt)));
    int want_tgt = q.require_vertex(vmap.at(q.vertex_name(a.src)));
    for (const auto& [w, c] : it->second.terms())
      if (w.src != want_src || w.tgt != want_tgt) {
        res.reason = "image of arrow '" + a.name + "' is ill-typed";
        return res;
      }
    Element twice = apply_anti(A, vmap, amap, it->second);
    Element orig = A.reduce(Element::from_word(A.field, word_from_arrow(q, q.require_arrow(a.name)),
                                               Scalar::one(A.field)));
    if (!(twice == orig)) {
      res.reason = "map is not an involution on arrow '" + a.name + "'";
      return res;
    }
  }
  // relations must be preserved
  for (size_t r = 0; r < A.pres->relations.size(); ++r) {
    if (!apply_anti(A, vmap, amap, A.pres->relations[r]).zero()) {
      res.failing_relation = static_cast<int>(r);
      res.reason = "relation " + std::to_string(r) + " is not preserved";
      return res;
    }
  }
  res.ok = true;
  return res;
}

}  // namespace cellar
