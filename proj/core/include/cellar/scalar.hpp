#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cellar {

// Raised on malformed or inconsistent input (files, parameters, CLI args).
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a configurable resource bound is exceeded (rewriting length
// cap, factorization row cap, search budget).
struct ResourceCapError : std::runtime_error {
  explicit ResourceCapError(const std::string& what) : std::runtime_error(what) {}
};

// Ground field: the rationals (p == 0) or the prime field F_p, p an odd prime.
// Characteristic 2 is rejected everywhere.
struct Field {
  std::uint32_t p = 0;

  bool rational() const { return p == 0; }
  bool operator==(const Field&) const = default;
  std::string name() const { return rational() ? "rational" : "F_" + std::to_string(p); }
};

bool is_odd_prime(std::uint32_t p);

// An exact element of the ground field. F_p values are canonical residues in
// [0, p); rational values are kept in lowest terms by mpq_class.
class Scalar {
 public:
  Scalar() : v_(0), p_(0) {}
  Scalar(const Field& f, long n) : v_(n), p_(f.p) { reduce_(); }
  Scalar(const Field& f, const mpq_class& v) : v_(v), p_(f.p) { reduce_(); }

  static Scalar zero(const Field& f) { return Scalar(f, 0); }
  static Scalar one(const Field& f) { return Scalar(f, 1); }
  // Accepts "a", "-a", "a/b" with arbitrary-precision integers.
  static Scalar from_string(const Field& f, const std::string& text);

  Field field() const { return Field{p_}; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  const mpq_class& value() const { return v_; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const { return p_ == o.p_ && v_ == o.v_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void reduce_();
  void check_same_(const Scalar& o) const;

  mpq_class v_;
  std::uint32_t p_;
};

}  // namespace cellar
