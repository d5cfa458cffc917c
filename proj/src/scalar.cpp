#include "taucat/scalar.hpp"

namespace taucat {

Scalar::Scalar(Field f, long num, long den) : v_(num, den), p_(f.p) {
  if (den == 0) throw std::domain_error("scalar: zero denominator");
  v_.canonicalize();
  reduce_();
}

Scalar::Scalar(Field f, const mpq_class& v) : v_(v), p_(f.p) {
  v_.canonicalize();
  reduce_();
}

void Scalar::reduce_() {
  if (p_ == 0) return;
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_class num = v_.get_num() % p;
  mpz_class den = v_.get_den() % p;
  if (den != 0) {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
      throw std::domain_error("scalar: denominator not invertible mod p");
    num = (num * inv) % p;
  } else {
    throw std::domain_error("scalar: denominator divisible by p");
  }
  if (num < 0) num += p;
  v_ = mpq_class(num);
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_(o);
  return Scalar(Field{p_}, mpq_class(v_ + o.v_));
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_(o);
  return Scalar(Field{p_}, mpq_class(v_ - o.v_));
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_(o);
  return Scalar(Field{p_}, mpq_class(v_ * o.v_));
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same_(o);
  return *this * o.inverse();
}

Scalar Scalar::operator-() const { return Scalar(Field{p_}, mpq_class(-v_)); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("scalar: inverse of zero");
  if (p_ == 0) return Scalar(Field{0}, mpq_class(1 / v_));
  mpz_class p(p_), inv;
  mpz_class num = v_.get_num();
  mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  return Scalar(Field{p_}, mpq_class(inv));
}

bool Scalar::operator==(const Scalar& o) const {
  check_same_(o);
  return v_ == o.v_;
}

std::string Scalar::str() const { return v_.get_str(); }

Scalar Scalar::parse(Field f, const std::string& text) {
  mpq_class v;
  if (v.set_str(text, 10) != 0)
    throw std::domain_error("scalar: cannot parse '" + text + "'");
  v.canonicalize();
  return Scalar(f, v);
}

}  // namespace taucat
