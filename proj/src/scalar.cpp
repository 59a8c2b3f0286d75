#include "torsor/scalar.hpp"

namespace torsor {

Scalar Scalar::reduced(mpq_class v) const {
  if (p_ == 0) {
    v.canonicalize();
    return Scalar(std::move(v), 0);
  }
  // v is an integer here; residues never acquire denominators.
  mpz_class r = v.get_num() % p_;
  if (r < 0) r += p_;
  return Scalar(mpq_class(r), p_);
}

Scalar Scalar::operator-() const { return reduced(-q_); }

Scalar Scalar::operator+(const Scalar& o) const {
  check_compatible(o);
  return reduced(q_ + o.q_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_compatible(o);
  return reduced(q_ - o.q_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_compatible(o);
  return reduced(q_ * o.q_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("scalar: division by zero");
  if (p_ == 0) return Scalar(1 / q_, 0);
  mpz_class inv;
  mpz_class p(p_);
  if (mpz_invert(inv.get_mpz_t(), q_.get_num().get_mpz_t(), p.get_mpz_t()) == 0)
    throw std::domain_error("scalar: non-invertible residue");
  return Scalar(mpq_class(inv), p_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_compatible(o);
  return *this * o.inverse();
}

std::string Scalar::str() const { return q_.get_str(); }

}  // namespace torsor
