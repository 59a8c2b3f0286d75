#include "torsor/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace torsor {

PolyRing::PolyRing(std::vector<std::string> vars, long characteristic,
                   Order order, int elim_block)
    : vars_(std::move(vars)),
      characteristic_(characteristic),
      order_(order),
      elim_block_(elim_block) {
  if (order_ == Order::elim && (elim_block_ <= 0 || elim_block_ >= nvars()))
    throw std::invalid_argument("elim order needs 0 < block < nvars");
}

RingPtr PolyRing::parse(const std::string& spec) {
  auto lb = spec.find('[');
  auto rb = spec.find(']');
  if (lb == std::string::npos || rb == std::string::npos || rb < lb)
    throw std::invalid_argument("bad ring spec: " + spec);
  std::string field = spec.substr(0, lb);
  long chr = 0;
  if (field == "Q")
    chr = 0;
  else if (field.size() > 1 && field[0] == 'F')
    chr = std::stol(field.substr(1));
  else
    throw std::invalid_argument("bad coefficient field: " + field);
  std::vector<std::string> vars;
  std::string body = spec.substr(lb + 1, rb - lb - 1);
  std::string cur;
  for (char c : body) {
    if (c == ',') {
      if (!cur.empty()) vars.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) vars.push_back(cur);
  if (vars.empty()) throw std::invalid_argument("ring has no variables");
  return std::make_shared<PolyRing>(std::move(vars), chr);
}

int PolyRing::var_index(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (vars_[i] == name) return i;
  return -1;
}

namespace {

int total(const Exponents& e, int from, int to) {
  int s = 0;
  for (int i = from; i < to; ++i) s += e[i];
  return s;
}

// a < b under grevlex restricted to [from, to)
bool grevlex_less(const Exponents& a, const Exponents& b, int from, int to) {
  int da = total(a, from, to), db = total(b, from, to);
  if (da != db) return da < db;
  for (int i = to - 1; i >= from; --i) {
    if (a[i] != b[i]) return a[i] > b[i];  // larger trailing exponent loses
  }
  return false;
}

bool lex_less(const Exponents& a, const Exponents& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

}  // namespace

bool PolyRing::mono_less(const Exponents& a, const Exponents& b) const {
  switch (order_) {
    case Order::grevlex:
      return grevlex_less(a, b, 0, nvars());
    case Order::lex:
      return lex_less(a, b);
    case Order::elim:
      if (grevlex_less(a, b, 0, elim_block_)) return true;
      if (grevlex_less(b, a, 0, elim_block_)) return false;
      return grevlex_less(a, b, elim_block_, nvars());
  }
  return false;
}

std::string PolyRing::spec_string() const {
  std::string s = characteristic_ == 0 ? "Q" : "F" + std::to_string(characteristic_);
  s += "[";
  for (size_t i = 0; i < vars_.size(); ++i) {
    if (i) s += ",";
    s += vars_[i];
  }
  s += "]";
  return s;
}

bool PolyRing::same_as(const PolyRing& o) const {
  return vars_ == o.vars_ && characteristic_ == o.characteristic_;
}

bool mono_divides(const Exponents& a, const Exponents& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents mono_mul(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Exponents mono_div(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    r[i] = a[i] - b[i];
    if (r[i] < 0) throw std::invalid_argument("mono_div: does not divide");
  }
  return r;
}

Exponents mono_lcm(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  normalize();
}

void Polynomial::normalize() {
  for (auto& t : terms_) {
    if (static_cast<int>(t.mono.size()) != ring_->nvars())
      throw std::invalid_argument("term arity mismatch");
  }
  std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
    return ring_->mono_greater(a.mono, b.mono);
  });
  std::vector<Term> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().mono == t.mono)
      merged.back().coeff = merged.back().coeff + t.coeff;
    else
      merged.push_back(t);
  }
  terms_.clear();
  for (auto& t : merged)
    if (!t.coeff.is_zero()) terms_.push_back(std::move(t));
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  if (c.is_zero()) return zero(std::move(ring));
  Exponents e(ring->nvars(), 0);
  Polynomial p(ring);
  p.terms_.push_back({std::move(e), c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, int idx, int power) {
  Exponents e(ring->nvars(), 0);
  e[idx] = power;
  long chr = ring->characteristic();
  return monomial(std::move(ring), std::move(e), Scalar::integer(1, chr));
}

Polynomial Polynomial::monomial(RingPtr ring, Exponents e, Scalar c) {
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.push_back({std::move(e), std::move(c)});
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 &&
         std::all_of(terms_[0].mono.begin(), terms_[0].mono.end(),
                     [](int e) { return e == 0; });
}

const Exponents& Polynomial::leading_mono() const {
  if (is_zero()) throw std::domain_error("leading term of zero polynomial");
  return terms_.front().mono;
}

const Scalar& Polynomial::leading_coeff() const {
  if (is_zero()) throw std::domain_error("leading term of zero polynomial");
  return terms_.front().coeff;
}

int Polynomial::total_degree() const {
  int d = 0;
  for (auto& t : terms_)
    d = std::max(d, std::accumulate(t.mono.begin(), t.mono.end(), 0));
  return d;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  for (auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Term> ts = terms_;
  ts.insert(ts.end(), o.terms_.begin(), o.terms_.end());
  return Polynomial(ring_, std::move(ts));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  std::vector<Term> ts;
  ts.reserve(terms_.size() * o.terms_.size());
  for (auto& a : terms_)
    for (auto& b : o.terms_)
      ts.push_back({mono_mul(a.mono, b.mono), a.coeff * b.coeff});
  return Polynomial(ring_, std::move(ts));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  for (auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
  return r;
}

Polynomial Polynomial::times_mono(const Exponents& e, const Scalar& c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  for (auto& t : terms_) r.terms_.push_back({mono_mul(t.mono, e), t.coeff * c});
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(leading_coeff().inverse());
}

Polynomial Polynomial::pow(int n) const {
  long chr = ring_->characteristic();
  Polynomial r = constant(ring_, Scalar::integer(1, chr));
  for (int i = 0; i < n; ++i) r = r * (*this);
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

Polynomial Polynomial::substitute(const RingPtr& target,
                                  const std::vector<Polynomial>& images) const {
  long chr = target->characteristic();
  Polynomial acc = zero(target);
  for (auto& t : terms_) {
    if (t.coeff.characteristic() != chr)
      throw std::invalid_argument("substitute: characteristic mismatch");
    Polynomial m = constant(target, t.coeff);
    for (int i = 0; i < ring_->nvars(); ++i)
      for (int k = 0; k < t.mono[i]; ++k) m = m * images[static_cast<size_t>(i)];
    acc = acc + m;
  }
  return acc;
}

Polynomial Polynomial::reordered(const RingPtr& target) const {
  std::vector<Term> ts = terms_;
  return Polynomial(target, std::move(ts));
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  Polynomial rem = *this;
  Polynomial quot = zero(ring_);
  while (!rem.is_zero()) {
    if (!mono_divides(divisor.leading_mono(), rem.leading_mono()))
      throw std::domain_error("divide_exact: not divisible");
    Exponents q = mono_div(rem.leading_mono(), divisor.leading_mono());
    Scalar c = rem.leading_coeff() / divisor.leading_coeff();
    quot = quot + monomial(ring_, q, c);
    rem = rem - divisor.times_mono(q, c);
  }
  return quot;
}

namespace {

// Minimal recursive-descent parser for the documented grammar.
struct Parser {
  const std::string& s;
  size_t i = 0;
  RingPtr ring;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }

  Polynomial parse_expr() {
    Polynomial acc = Polynomial::zero(ring);
    int sign = 1;
    skip();
    if (eat('-')) sign = -1;
    while (true) {
      Polynomial t = parse_product();
      acc = sign > 0 ? acc + t : acc - t;
      skip();
      if (eat('+'))
        sign = 1;
      else if (eat('-'))
        sign = -1;
      else
        break;
    }
    skip();
    if (i != s.size()) throw std::invalid_argument("trailing junk in polynomial: " + s);
    return acc;
  }

  Polynomial parse_product() {
    Polynomial p = parse_factor();
    while (true) {
      skip();
      if (eat('*')) {
        p = p * parse_factor();
      } else if (i < s.size() && (std::isalpha(static_cast<unsigned char>(s[i])) ||
                                  std::isdigit(static_cast<unsigned char>(s[i])))) {
        // implicit multiplication, e.g. "3x" or "x y"
        p = p * parse_factor();
      } else {
        break;
      }
    }
    return p;
  }

  Polynomial parse_factor() {
    skip();
    if (i >= s.size()) throw std::invalid_argument("unexpected end of polynomial");
    if (s[i] == '(') {
      ++i;
      // sub-expression: reparse with a nested parser over the slice
      int depth = 1;
      size_t start = i;
      while (i < s.size() && depth > 0) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        ++i;
      }
      if (depth != 0) throw std::invalid_argument("unbalanced parens");
      std::string inner = s.substr(start, i - 1 - start);
      Polynomial p = Polynomial::parse(ring, inner);
      return maybe_pow(p);
    }
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::string num;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        num.push_back(s[i++]);
      std::string den;
      size_t save = i;
      skip();
      if (eat('/')) {
        skip();
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
          den.push_back(s[i++]);
        if (den.empty()) {
          i = save;  // not a fraction after all
        }
      }
      Scalar c;
      long chr = ring->characteristic();
      if (!den.empty()) {
        if (chr == 0)
          c = Scalar::rational(mpq_class(num + "/" + den));
        else
          c = Scalar::integer(std::stol(num), chr) / Scalar::integer(std::stol(den), chr);
      } else {
        if (chr == 0)
          c = Scalar::rational(mpq_class(num));
        else
          c = Scalar::integer(std::stol(num), chr);
      }
      return maybe_pow(Polynomial::constant(ring, c));
    }
    if (std::isalpha(static_cast<unsigned char>(s[i]))) {
      std::string name;
      name.push_back(s[i++]);
      while (i < s.size() && (std::islower(static_cast<unsigned char>(s[i])) ||
                              std::isdigit(static_cast<unsigned char>(s[i])))) {
        // a variable name continues with [a-z0-9]; stop if the remainder is
        // not a known variable so "xy" parses as x*y when both exist
        std::string ext = name + s[i];
        if (ring->var_index(ext) >= 0 ||
            std::isdigit(static_cast<unsigned char>(s[i]))) {
          name = ext;
          ++i;
        } else {
          break;
        }
      }
      int vi = ring->var_index(name);
      if (vi < 0) {
        // try splitting single letters: "xy" -> x * y
        Polynomial p = Polynomial::constant(
            ring, Scalar::integer(1, ring->characteristic()));
        for (char c : name) {
          int k = ring->var_index(std::string(1, c));
          if (k < 0) throw std::invalid_argument("unknown variable: " + name);
          p = p * Polynomial::variable(ring, k);
        }
        return maybe_pow(p);
      }
      return maybe_pow(Polynomial::variable(ring, vi));
    }
    throw std::invalid_argument(std::string("unexpected character '") + s[i] +
                                "' in polynomial");
  }

  Polynomial maybe_pow(Polynomial p) {
    skip();
    if (eat('^')) {
      skip();
      std::string num;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        num.push_back(s[i++]);
      if (num.empty()) throw std::invalid_argument("missing exponent");
      return p.pow(std::stoi(num));
    }
    return p;
  }
};

}  // namespace

Polynomial Polynomial::parse(RingPtr ring, const std::string& text) {
  Parser p{text, 0, ring};
  return p.parse_expr();
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& t : terms_) {
    Scalar c = t.coeff;
    bool negative = false;
    if (ring_->characteristic() == 0 && c.value() < 0) {
      negative = true;
      c = -c;
    }
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    bool any_var = false;
    for (int e : t.mono) any_var |= (e != 0);
    if (!any_var) {
      os << c.str();
    } else {
      bool printed = false;
      if (!c.is_one()) {
        os << c.str();
        printed = true;
      }
      for (int i = 0; i < ring_->nvars(); ++i) {
        if (t.mono[i] == 0) continue;
        if (printed) os << "*";
        os << ring_->vars()[i];
        if (t.mono[i] > 1) os << "^" << t.mono[i];
        printed = true;
      }
    }
  }
  return os.str();
}

}  // namespace torsor
