#pragma once

// Exact field elements: arbitrary-precision rationals (p == 0) or residues
// mod a prime p. Every Scalar carries its field tag; mixing fields is a
// logic error and throws.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace taucat {

struct Field {
  unsigned long p = 0;  // 0 = rationals, otherwise prime modulus

  bool is_rational() const { return p == 0; }
  bool operator==(const Field& o) const { return p == o.p; }
  bool operator!=(const Field& o) const { return p != o.p; }
  std::string str() const { return p == 0 ? "Q" : "F" + std::to_string(p); }
};

class Scalar {
 public:
  Scalar() : v_(0), p_(0) {}
  Scalar(Field f, long num, long den = 1);
  Scalar(Field f, const mpq_class& v);

  static Scalar zero(Field f) { return Scalar(f, 0); }
  static Scalar one(Field f) { return Scalar(f, 1); }

  Field field() const { return Field{p_}; }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // "7", "-3/4"; residues print as canonical representative in [0, p)
  std::string str() const;
  static Scalar parse(Field f, const std::string& text);

 private:
  mpq_class v_;
  unsigned long p_;

  void reduce_();
  void check_same_(const Scalar& o) const {
    if (p_ != o.p_) throw std::logic_error("scalar field mismatch");
  }
};

}  // namespace taucat
