#include <deque>

#include "cellar/algebra.hpp"

namespace cellar {

namespace {
constexpr size_t kMaxRules = 20000;
}

Word RewriteSystem::slice(const Word& w, int from, int n) const {
  Word s;
  s.arrows.assign(w.arrows.begin() + from, w.arrows.begin() + from + n);
  if (n == 0) {
    s.src = s.tgt = (from == 0) ? w.src : ends_[w.arrows[from - 1]].second;
  } else {
    s.src = ends_[s.arrows.front()].first;
    s.tgt = ends_[s.arrows.back()].second;
  }
  return s;
}

bool RewriteSystem::find_redex(const Word& w, int& pos, int& rule) const {
  const int n = w.length();
  for (int i = 0; i < n; ++i) {
    for (int r : by_first_[w.arrows[i]]) {
      const Word& tip = rules_[r].tip;
      const int m = tip.length();
      if (m > n - i) continue;
      bool match = true;
      for (int k = 1; k < m; ++k)
        if (w.arrows[i + k] != tip.arrows[k]) {
          match = false;
          break;
        }
      if (match) {
        pos = i;
        rule = r;
        return true;
      }
    }
  }
  return false;
}

bool RewriteSystem::word_is_normal(const Word& w) const {
  int pos, rule;
  return !find_redex(w, pos, rule);
}

bool RewriteSystem::extension_is_normal(const Word& w) const {
  const int n = w.length();
  if (n == 0) return true;
  // only redexes ending at the last position are possible
  for (int i = 0; i < n; ++i) {
    for (int r : by_first_[w.arrows[i]]) {
      const Word& tip = rules_[r].tip;
      if (tip.length() != n - i) continue;
      bool match = true;
      for (int k = 1; k < tip.length(); ++k)
        if (w.arrows[i + k] != tip.arrows[k]) {
          match = false;
          break;
        }
      if (match) return false;
    }
  }
  return true;
}

Element RewriteSystem::reduce(Element e) const {
  Element out(f_);
  while (!e.zero()) {
    Word w = e.tip();
    Scalar c = e.tip_coeff();
    e -= Element::from_word(f_, w, c);
    int pos, rule;
    if (!find_redex(w, pos, rule)) {
      out.add(w, c);
      continue;
    }
    const Rule& r = rules_[rule];
    Word pre = slice(w, 0, pos);
    Word suf = slice(w, pos + r.tip.length(), w.length() - pos - r.tip.length());
    e += r.rest.lmul(pre).rmul(suf).scaled(c);
  }
  return out;
}

void RewriteSystem::index_rules() {
  by_first_.assign(ends_.size(), {});
  for (size_t i = 0; i < rules_.size(); ++i)
    by_first_[rules_[i].tip.arrows[0]].push_back(static_cast<int>(i));
}

RewriteSystem RewriteSystem::complete(const Quiver& q, const Field& f,
                                      const std::vector<Element>& relations, int cap) {
  RewriteSystem rs;
  rs.f_ = f;
  rs.cap_ = cap;
  for (const auto& a : q.arrows()) rs.ends_.emplace_back(a.src, a.tgt);
  rs.by_first_.assign(rs.ends_.size(), {});

  std::deque<Element> pending(relations.begin(), relations.end());
  while (!pending.empty()) {
    Element e = rs.reduce(std::move(pending.front()));
    pending.pop_front();
    if (e.zero()) continue;
    if (e.tip().length() == 0)
      throw InputError("relation ideal contains a vertex idempotent component");
    if (e.tip().length() > cap)
      throw ResourceCapError("rewriting cap exceeded without stabilization");
    e.scale(e.tip_coeff().inverse());
    Rule nr{e.tip(), Element::from_word(f, e.tip(), Scalar::one(f)) - e};

    // retire rules whose tip the new rule reduces, and renormalize the rests
    std::vector<Rule> kept;
    std::vector<Rule> retired;
    for (auto& r : rs.rules_) {
      bool contains = false;
      const int n = r.tip.length(), m = nr.tip.length();
      for (int i = 0; i + m <= n && !contains; ++i) {
        bool match = true;
        for (int k = 0; k < m; ++k)
          if (r.tip.arrows[i + k] != nr.tip.arrows[k]) {
            match = false;
            break;
          }
        contains = match;
      }
      (contains ? retired : kept).push_back(std::move(r));
    }
    rs.rules_ = std::move(kept);
    rs.rules_.push_back(nr);
    if (rs.rules_.size() > kMaxRules)
      throw ResourceCapError("rewrite rule count cap exceeded");
    rs.index_rules();
    for (auto& r : retired)
      pending.push_back(Element::from_word(f, r.tip, Scalar::one(f)) - r.rest);
    for (auto& r : rs.rules_) r.rest = rs.reduce(r.rest);

    // queue overlap ambiguities of the new rule against every rule
    const int ni = static_cast<int>(rs.rules_.size()) - 1;
    for (int i = 0; i < static_cast<int>(rs.rules_.size()); ++i) {
      for (auto [a, b] : {std::pair{i, ni}, std::pair{ni, i}}) {
        const Word& t1 = rs.rules_[a].tip;
        const Word& t2 = rs.rules_[b].tip;
        const int l1 = t1.length(), l2 = t2.length();
        for (int o = 1; o < std::min(l1, l2); ++o) {
          bool match = true;
          for (int k = 0; k < o; ++k)
            if (t1.arrows[l1 - o + k] != t2.arrows[k]) {
              match = false;
              break;
            }
          if (!match) continue;
          // t1 . t2[o:] : resolve both ways
          Word suf;
          suf.arrows.assign(t2.arrows.begin() + o, t2.arrows.end());
          Word pre;
          pre.arrows.assign(t1.arrows.begin(), t1.arrows.end() - o);
          if (!suf.arrows.empty()) {
            suf.src = rs.ends_[suf.arrows.front()].first;
            suf.tgt = rs.ends_[suf.arrows.back()].second;
          } else {
            suf.src = suf.tgt = t2.tgt;
          }
          if (!pre.arrows.empty()) {
            pre.src = rs.ends_[pre.arrows.front()].first;
            pre.tgt = rs.ends_[pre.arrows.back()].second;
          } else {
            pre.src = pre.tgt = t1.src;
          }
          Element s = rs.rules_[a].rest.rmul(suf) - rs.rules_[b].rest.lmul(pre);
          if (!s.zero()) pending.push_back(std::move(s));
        }
      }
    }
  }
  return rs;
}

}  // namespace cellar
