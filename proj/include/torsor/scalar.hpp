#ifndef TORSOR_SCALAR_HPP
#define TORSOR_SCALAR_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace torsor {

/// Exact field element: an arbitrary-precision rational (characteristic 0)
/// or a residue mod a prime p. No floating point anywhere.
///
/// Rationals are kept in lowest terms with positive denominator (mpq_class
/// canonicalization). Residues are kept in [0, p).
class Scalar {
 public:
  Scalar() : q_(0), p_(0) {}

  static Scalar rational(mpq_class v) {
    v.canonicalize();
    return Scalar(std::move(v), 0);
  }
  static Scalar integer(long v, long p = 0) {
    if (p == 0) return rational(mpq_class(v));
    return residue(v, p);
  }
  static Scalar residue(long v, long p) {
    if (p <= 1) throw std::invalid_argument("residue: modulus must be >= 2");
    long r = v % p;
    if (r < 0) r += p;
    return Scalar(mpq_class(r), p);
  }

  long characteristic() const { return p_; }
  bool is_zero() const { return q_ == 0; }
  bool is_one() const { return q_ == 1; }

  const mpq_class& value() const { return q_; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar inverse() const;

  bool operator==(const Scalar& o) const { return p_ == o.p_ && q_ == o.q_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

 private:
  Scalar(mpq_class q, long p) : q_(std::move(q)), p_(p) {}
  void check_compatible(const Scalar& o) const {
    if (p_ != o.p_) throw std::invalid_argument("scalar: mixed characteristics");
  }
  Scalar reduced(mpq_class v) const;

  mpq_class q_;
  long p_;  // 0 for Q, else the prime
};

}  // namespace torsor

#endif
