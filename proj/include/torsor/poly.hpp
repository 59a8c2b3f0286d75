#ifndef TORSOR_POLY_HPP
#define TORSOR_POLY_HPP

#include <memory>
#include <string>
#include <vector>

#include "torsor/scalar.hpp"

namespace torsor {

using Exponents = std::vector<int>;

enum class Order {
  grevlex,  // default everywhere
  lex,
  elim,  // block order eliminating the first elim_block variables:
         // grevlex on the first block, ties broken by grevlex on the rest
};

/// Ambient polynomial ring: a variable list over Q or F_p, with a fixed
/// monomial order. Rings are immutable and shared by reference.
class PolyRing {
 public:
  PolyRing(std::vector<std::string> vars, long characteristic,
           Order order = Order::grevlex, int elim_block = 0);

  /// Parses "Q[x,y]" or "F5[a,b]".
  static std::shared_ptr<const PolyRing> parse(const std::string& spec);

  int nvars() const { return static_cast<int>(vars_.size()); }
  long characteristic() const { return characteristic_; }
  Order order() const { return order_; }
  const std::vector<std::string>& vars() const { return vars_; }
  int var_index(const std::string& name) const;  // -1 if absent

  /// true if a > b in this ring's monomial order.
  bool mono_less(const Exponents& a, const Exponents& b) const;  // a < b
  bool mono_greater(const Exponents& a, const Exponents& b) const {
    return mono_less(b, a);
  }

  std::string spec_string() const;

  bool same_as(const PolyRing& o) const;

 private:
  std::vector<std::string> vars_;
  long characteristic_;
  Order order_;
  int elim_block_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

struct Term {
  Exponents mono;
  Scalar coeff;
};

/// Sparse multivariate polynomial. Terms are strictly descending in the
/// ring's monomial order; no zero coefficients are stored.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial variable(RingPtr ring, int idx, int power = 1);
  static Polynomial monomial(RingPtr ring, Exponents e, Scalar c);

  /// Parses the documented grammar: variables [a-z][a-z0-9]*, integer or
  /// rational coefficients, operators + - * ^, e.g. "x^2*y - 3/2*y".
  static Polynomial parse(RingPtr ring, const std::string& text);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  const Exponents& leading_mono() const;
  const Scalar& leading_coeff() const;
  int total_degree() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial times_mono(const Exponents& e, const Scalar& c) const;
  Polynomial monic() const;
  Polynomial pow(int n) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Substitutes images[i] for variable i; images live in the target ring.
  Polynomial substitute(const RingPtr& target,
                        const std::vector<Polynomial>& images) const;

  /// Same generators, reinterpreted in an order-compatible ring copy.
  Polynomial reordered(const RingPtr& target) const;

  /// Exact division; throws if the remainder is nonzero.
  Polynomial divide_exact(const Polynomial& divisor) const;

  std::string str() const;

 private:
  void normalize();  // sort + merge + drop zeros
  RingPtr ring_;
  std::vector<Term> terms_;
};

bool mono_divides(const Exponents& a, const Exponents& b);  // a | b
Exponents mono_mul(const Exponents& a, const Exponents& b);
Exponents mono_div(const Exponents& a, const Exponents& b);
Exponents mono_lcm(const Exponents& a, const Exponents& b);

}  // namespace torsor

#endif
