#pragma once

#include <map>

#include "cellar/quiver.hpp"

namespace cellar {

// Finitely supported Scalar combination of path words. Terms are kept with
// the largest word first and zero coefficients dropped. Mixed source/target
// components are allowed.
class Element {
 public:
  explicit Element(const Field& f) : f_(f) {}

  static Element from_word(const Field& f, const Word& w, const Scalar& c);

  const Field& field() const { return f_; }
  bool zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const std::map<Word, Scalar, WordGreater>& terms() const { return terms_; }

  // Leading (largest) term; element must be nonzero.
  const Word& tip() const { return terms_.begin()->first; }
  const Scalar& tip_coeff() const { return terms_.begin()->second; }

  void add(const Word& w, const Scalar& c);
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element scaled(const Scalar& c) const;
  Element& scale(const Scalar& c);

  // Path-algebra products with a word; non-composable terms vanish.
  Element lmul(const Word& w) const;  // w * this
  Element rmul(const Word& w) const;  // this * w

  bool operator==(const Element& o) const { return terms_ == o.terms_; }

 private:
  Field f_;
  std::map<Word, Scalar, WordGreater> terms_;
};

// Raw path-algebra product (concatenation of supports, no reduction).
Element raw_mul(const Element& a, const Element& b);

std::string element_label(const Quiver& q, const Element& e);

}  // namespace cellar
