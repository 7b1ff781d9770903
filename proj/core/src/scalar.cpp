#include "cellar/scalar.hpp"

namespace cellar {

bool is_odd_prime(std::uint32_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint32_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

void Scalar::reduce_() {
  v_.canonicalize();
  if (p_ == 0) return;
  mpz_class num = v_.get_num();
  mpz_class den = v_.get_den();
  mpz_class pz(static_cast<unsigned long>(p_));
  mpz_class dinv;
  if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()) == 0)
    throw InputError("denominator not invertible mod " + std::to_string(p_));
  mpz_class r = (num * dinv) % pz;
  if (r < 0) r += pz;
  v_ = mpq_class(r);
}

void Scalar::check_same_(const Scalar& o) const {
  if (p_ != o.p_) throw InputError("scalar field mismatch");
}

Scalar Scalar::from_string(const Field& f, const std::string& text) {
  if (text.empty()) throw InputError("empty scalar literal");
  mpq_class v;
  if (v.set_str(text, 10) != 0) throw InputError("bad scalar literal '" + text + "'");
  if (v.get_den() == 0) throw InputError("zero denominator in '" + text + "'");
  return Scalar(f, v);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.v_ = -r.v_;
  r.reduce_();
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_(o);
  Scalar r = *this;
  r.v_ += o.v_;
  r.reduce_();
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_(o);
  Scalar r = *this;
  r.v_ -= o.v_;
  r.reduce_();
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_(o);
  Scalar r = *this;
  r.v_ *= o.v_;
  r.reduce_();
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InputError("division by zero");
  Scalar r = *this;
  if (p_ == 0) {
    r.v_ = 1 / v_;
  } else {
    mpz_class num = v_.get_num();
    mpz_class pz(static_cast<unsigned long>(p_));
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t());
    r.v_ = mpq_class(inv);
  }
  r.reduce_();
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

std::string Scalar::str() const { return v_.get_str(); }

}  // namespace cellar
