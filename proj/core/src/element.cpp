#include "cellar/element.hpp"

namespace cellar {

Element Element::from_word(const Field& f, const Word& w, const Scalar& c) {
  Element e(f);
  e.add(w, c);
  return e;
}

void Element::add(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

Element Element::operator+(const Element& o) const {
  Element r = *this;
  r += o;
  return r;
}

Element Element::operator-(const Element& o) const {
  Element r = *this;
  r -= o;
  return r;
}

Element Element::scaled(const Scalar& c) const {
  Element r(f_);
  if (c.is_zero()) return r;
  for (const auto& [w, x] : terms_) r.add(w, x * c);
  return r;
}

Element& Element::scale(const Scalar& c) { return *this = scaled(c); }

Element Element::lmul(const Word& w) const {
  Element r(f_);
  for (const auto& [u, c] : terms_) {
    Word out;
    if (concat(w, u, out)) r.add(out, c);
  }
  return r;
}

Element Element::rmul(const Word& w) const {
  Element r(f_);
  for (const auto& [u, c] : terms_) {
    Word out;
    if (concat(u, w, out)) r.add(out, c);
  }
  return r;
}

Element raw_mul(const Element& a, const Element& b) {
  Element r(a.field());
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms()) {
      Word out;
      if (concat(u, v, out)) r.add(out, cu * cv);
    }
  return r;
}

std::string element_label(const Quiver& q, const Element& e) {
  if (e.zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : e.terms()) {
    std::string cs = c.str();
    if (!first) s += cs[0] == '-' ? " - " : " + ";
    if (!first && cs[0] == '-') cs = cs.substr(1);
    first = false;
    if (cs == "1")
      s += word_label(q, w);
    else if (cs == "-1" && s.empty())
      s += "-" + word_label(q, w);
    else
      s += cs + "*" + word_label(q, w);
  }
  return s;
}

}  // namespace cellar
