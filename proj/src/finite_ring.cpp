#include "torsor/finite_ring.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

#include "torsor/poly.hpp"

namespace torsor {

namespace {

int env_max_ring_size() {
  if (const char* v = std::getenv("TORSOR_MAX_RING_SIZE")) {
    int n = std::atoi(v);
    if (n > 0) return n;
  }
  return 4096;
}

bool is_prime_long(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// One ring atom described uniformly as Fp[x]/(f) data (Z/n handled apart).
struct Atom {
  bool is_zmod = false;
  long n = 0;              // Z/n case
  long p = 0;              // quotient case: characteristic
  std::vector<int> f;      // monic modulus, coefficients low-to-high
  std::string var = "x";
};

std::vector<int> poly_mul_mod(const std::vector<int>& a,
                              const std::vector<int>& b,
                              const std::vector<int>& f, long p) {
  std::vector<int> prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = static_cast<int>((prod[i + j] + 1L * a[i] * b[j]) % p);
  // reduce mod monic f
  int k = static_cast<int>(f.size()) - 1;  // degree
  for (int d = static_cast<int>(prod.size()) - 1; d >= k; --d) {
    int c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (int j = 0; j < k; ++j)
      prod[d - k + j] =
          static_cast<int>(((prod[d - k + j] - 1L * c * f[j]) % p + p) % p);
  }
  prod.resize(k, 0);
  return prod;
}

bool poly_is_zero(const std::vector<int>& a) {
  return std::all_of(a.begin(), a.end(), [](int c) { return c == 0; });
}

// irreducibility over F_p by trial division with monic divisors
bool irreducible_mod_p(const std::vector<int>& f, long p) {
  int k = static_cast<int>(f.size()) - 1;
  for (int dd = 1; 2 * dd <= k; ++dd) {
    // all monic candidate divisors of degree dd
    long count = 1;
    for (int i = 0; i < dd; ++i) count *= p;
    for (long code = 0; code < count; ++code) {
      std::vector<int> g(dd + 1, 0);
      long c = code;
      for (int i = 0; i < dd; ++i) {
        g[i] = static_cast<int>(c % p);
        c /= p;
      }
      g[dd] = 1;
      // remainder of f mod g
      std::vector<int> r = f;
      for (int d = static_cast<int>(r.size()) - 1; d >= dd; --d) {
        int lead = r[d];
        if (lead == 0) continue;
        r[d] = 0;
        for (int j = 0; j < dd; ++j)
          r[d - dd + j] = static_cast<int>(
              ((r[d - dd + j] - 1L * lead * g[j]) % p + p) % p);
      }
      r.resize(dd, 0);
      if (poly_is_zero(r)) return false;
    }
  }
  return true;
}

Atom parse_atom(const std::string& s, size_t& i) {
  Atom a;
  if (s.compare(i, 2, "Z/") == 0) {
    i += 2;
    size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) throw std::invalid_argument("bad ring spec: " + s);
    a.is_zmod = true;
    a.n = std::stol(s.substr(i, j - i));
    i = j;
    if (a.n < 1) throw std::invalid_argument("Z/n needs n >= 1");
    return a;
  }
  if (s[i] == 'F') {
    size_t j = i + 1;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i + 1) throw std::invalid_argument("bad ring spec: " + s);
    long q = std::stol(s.substr(i + 1, j - i - 1));
    i = j;
    if (i < s.size() && s[i] == '[') {
      // Fp[x]/(f)
      size_t rb = s.find(']', i);
      if (rb == std::string::npos) throw std::invalid_argument("bad spec: " + s);
      a.var = s.substr(i + 1, rb - i - 1);
      i = rb + 1;
      if (i >= s.size() || s[i] != '/')
        throw std::invalid_argument("expected /(f): " + s);
      ++i;
      if (i >= s.size() || s[i] != '(')
        throw std::invalid_argument("expected /(f): " + s);
      int depth = 1;
      size_t start = ++i;
      while (i < s.size() && depth > 0) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        ++i;
      }
      if (depth != 0) throw std::invalid_argument("unbalanced parens: " + s);
      std::string body = s.substr(start, i - 1 - start);
      if (!is_prime_long(q))
        throw std::invalid_argument("F" + std::to_string(q) +
                                    "[..] needs prime characteristic");
      a.p = q;
      auto ring = std::make_shared<PolyRing>(std::vector<std::string>{a.var}, q);
      Polynomial f = Polynomial::parse(ring, body);
      if (f.is_zero() || f.total_degree() < 1)
        throw std::invalid_argument("modulus must have degree >= 1");
      a.f.assign(f.total_degree() + 1, 0);
      for (auto& t : f.terms())
        a.f[t.mono[0]] =
            static_cast<int>(t.coeff.value().get_num().get_si());
      // normalize monic
      int lead = a.f.back();
      if (lead != 1) {
        long inv = 1;
        for (long x = 1; x < q; ++x)
          if ((x * lead) % q == 1) inv = x;
        for (auto& c : a.f) c = static_cast<int>((c * inv) % q);
      }
      return a;
    }
    // plain Fq: q = p^k
    long p = 0;
    for (long d = 2; d * d <= q; ++d)
      if (q % d == 0) {
        p = d;
        break;
      }
    if (p == 0) p = q;
    long k = 0, t = q;
    while (t > 1) {
      if (t % p != 0) throw std::invalid_argument("Fq needs a prime power q");
      t /= p;
      ++k;
    }
    if (k == 1) {
      a.is_zmod = true;
      a.n = p;
      return a;
    }
    // search an irreducible monic modulus of degree k over F_p
    a.p = p;
    long count = 1;
    for (long i2 = 0; i2 < k; ++i2) count *= p;
    for (long code = 0; code < count; ++code) {
      std::vector<int> f(k + 1, 0);
      long c = code;
      for (long i2 = 0; i2 < k; ++i2) {
        f[i2] = static_cast<int>(c % p);
        c /= p;
      }
      f[k] = 1;
      if (irreducible_mod_p(f, p)) {
        a.f = f;
        return a;
      }
    }
    throw std::logic_error("no irreducible polynomial found");
  }
  throw std::invalid_argument("bad ring spec: " + s);
}

struct AtomTables {
  int n;
  std::vector<int> add, mul;
  std::vector<std::string> names;
  int one;
};

AtomTables atom_tables(const Atom& a) {
  AtomTables t;
  if (a.is_zmod) {
    t.n = static_cast<int>(a.n);
    t.add.resize(t.n * t.n);
    t.mul.resize(t.n * t.n);
    for (int x = 0; x < t.n; ++x)
      for (int y = 0; y < t.n; ++y) {
        t.add[x * t.n + y] = (x + y) % t.n;
        t.mul[x * t.n + y] = static_cast<int>((1L * x * y) % t.n);
      }
    for (int x = 0; x < t.n; ++x) t.names.push_back(std::to_string(x));
    t.one = t.n == 1 ? 0 : 1;
    return t;
  }
  int k = static_cast<int>(a.f.size()) - 1;
  long n = 1;
  for (int i = 0; i < k; ++i) n *= a.p;
  t.n = static_cast<int>(n);
  auto decode = [&](int idx) {
    std::vector<int> v(k);
    for (int i = 0; i < k; ++i) {
      v[i] = static_cast<int>(idx % a.p);
      idx = static_cast<int>(idx / a.p);
    }
    return v;
  };
  auto encode = [&](const std::vector<int>& v) {
    long idx = 0;
    for (int i = k - 1; i >= 0; --i) idx = idx * a.p + v[i];
    return static_cast<int>(idx);
  };
  t.add.resize(t.n * t.n);
  t.mul.resize(t.n * t.n);
  for (int x = 0; x < t.n; ++x) {
    auto vx = decode(x);
    for (int y = 0; y < t.n; ++y) {
      auto vy = decode(y);
      std::vector<int> s(k);
      for (int i = 0; i < k; ++i)
        s[i] = static_cast<int>((vx[i] + vy[i]) % a.p);
      t.add[x * t.n + y] = encode(s);
      t.mul[x * t.n + y] = encode(poly_mul_mod(vx, vy, a.f, a.p));
    }
  }
  for (int x = 0; x < t.n; ++x) {
    auto v = decode(x);
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < k; ++i) {
      if (v[i] == 0) continue;
      if (!first) os << "+";
      if (i == 0 || v[i] != 1) os << v[i];
      if (i > 0) {
        if (v[i] != 1) os << "*";
        os << a.var;
        if (i > 1) os << "^" << i;
      }
      first = false;
    }
    t.names.push_back(first ? "0" : os.str());
  }
  t.one = encode([&] {
    std::vector<int> v(k, 0);
    v[0] = 1;
    return v;
  }());
  return t;
}

}  // namespace

std::shared_ptr<const FiniteRing> FiniteRing::build(const std::string& spec) {
  return build(spec, env_max_ring_size());
}

std::shared_ptr<const FiniteRing> FiniteRing::build(const std::string& spec,
                                                    int max_size) {
  // split into atoms at top level, separators 'x' or '*'
  std::vector<Atom> atoms;
  size_t i = 0;
  std::string s;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  for (;;) {
    atoms.push_back(parse_atom(s, i));
    if (i >= s.size()) break;
    if (s[i] == 'x' || s[i] == '*')
      ++i;
    else
      throw std::invalid_argument("bad ring spec near '" + s.substr(i) + "'");
  }

  std::vector<AtomTables> tabs;
  long total = 1;
  for (auto& a : atoms) {
    tabs.push_back(atom_tables(a));
    total *= tabs.back().n;
    if (total > max_size)
      throw std::domain_error("too-large: ring exceeds " +
                              std::to_string(max_size) + " elements");
  }

  auto ring = std::shared_ptr<FiniteRing>(new FiniteRing());
  FiniteRing& R = *ring;
  R.n_ = static_cast<int>(total);
  R.spec_ = spec;
  int m = static_cast<int>(tabs.size());
  auto decode = [&](int idx, std::vector<int>& v) {
    for (int j = 0; j < m; ++j) {
      v[j] = idx % tabs[j].n;
      idx /= tabs[j].n;
    }
  };
  auto encode = [&](const std::vector<int>& v) {
    int idx = 0;
    for (int j = m - 1; j >= 0; --j) idx = idx * tabs[j].n + v[j];
    return idx;
  };
  R.add_.resize(1L * R.n_ * R.n_);
  R.mul_.resize(1L * R.n_ * R.n_);
  R.neg_.resize(R.n_);
  std::vector<int> vx(m), vy(m), vz(m);
  for (int x = 0; x < R.n_; ++x) {
    decode(x, vx);
    for (int y = 0; y < R.n_; ++y) {
      decode(y, vy);
      for (int j = 0; j < m; ++j)
        vz[j] = tabs[j].add[vx[j] * tabs[j].n + vy[j]];
      R.add_[1L * x * R.n_ + y] = encode(vz);
      for (int j = 0; j < m; ++j)
        vz[j] = tabs[j].mul[vx[j] * tabs[j].n + vy[j]];
      R.mul_[1L * x * R.n_ + y] = encode(vz);
    }
  }
  for (int j = 0; j < m; ++j) vz[j] = tabs[j].one;
  R.one_ = encode(vz);
  for (int x = 0; x < R.n_; ++x) {
    decode(x, vx);
    if (m == 1) {
      R.names_.push_back(tabs[0].names[vx[0]]);
    } else {
      std::string nm = "(";
      for (int j = 0; j < m; ++j) {
        if (j) nm += ",";
        nm += tabs[j].names[vx[j]];
      }
      nm += ")";
      R.names_.push_back(nm);
    }
  }
  for (int x = 0; x < R.n_; ++x) {
    for (int y = 0; y < R.n_; ++y)
      if (R.add(x, y) == 0) {
        R.neg_[x] = y;
        break;
      }
  }
  R.verify_tables(R.n_ <= 64);
  R.derive_structure();
  return ring;
}

void FiniteRing::verify_tables(bool full) const {
  auto fail = [](const char* what) {
    throw std::domain_error(std::string("not-a-ring: ") + what);
  };
  for (int x = 0; x < n_; ++x) {
    if (add(x, 0) != x) fail("zero is not neutral");
    if (mul(x, one_) != x) fail("one is not neutral");
    if (add(x, neg_[x]) != 0) fail("negation broken");
  }
  int step = full ? 1 : std::max(1, n_ / 17);
  for (int x = 0; x < n_; x += 1) {
    for (int y = x; y < n_; y += 1) {
      if (add(x, y) != add(y, x)) fail("addition not commutative");
      if (mul(x, y) != mul(y, x)) fail("multiplication not commutative");
    }
  }
  for (int x = 0; x < n_; x += step)
    for (int y = 0; y < n_; y += step)
      for (int z = 0; z < n_; z += step) {
        if (add(add(x, y), z) != add(x, add(y, z))) fail("addition not associative");
        if (mul(mul(x, y), z) != mul(x, mul(y, z)))
          fail("multiplication not associative");
        if (mul(x, add(y, z)) != add(mul(x, y), mul(x, z)))
          fail("distributivity fails");
      }
}

bool FiniteRing::is_nilpotent(int a) const {
  int z = a;
  for (int k = 1; k < 2 * n_; k *= 2) {
    if (z == 0) return true;
    z = mul(z, z);
  }
  return z == 0;
}

bool FiniteRing::is_unit(int a) const {
  for (int x = 0; x < n_; ++x)
    if (mul(a, x) == one_) return true;
  return false;
}

std::vector<int> FiniteRing::all_idempotents() const {
  std::vector<int> out;
  for (int e = 0; e < n_; ++e)
    if (mul(e, e) == e) out.push_back(e);
  return out;
}

void FiniteRing::derive_structure() {
  auto idems = all_idempotents();
  // primitive idempotents: nonzero e whose only subidempotents (f with ef=f)
  // are 0 and e
  for (int e : idems) {
    if (e == 0) continue;
    bool primitive = true;
    for (int f : idems) {
      if (f == 0 || f == e) continue;
      if (mul(e, f) == f) {
        primitive = false;
        break;
      }
    }
    if (primitive) local_idem_.push_back(e);
  }
  // orthogonality and completeness
  int s = 0;
  for (int e : local_idem_) s = add(s, e);
  if (s != one_)
    throw std::domain_error("not-a-ring: primitive idempotents do not sum to 1");
  for (size_t i = 0; i < local_idem_.size(); ++i)
    for (size_t j = 0; j < i; ++j)
      if (mul(local_idem_[i], local_idem_[j]) != 0)
        throw std::domain_error("not-a-ring: idempotents not orthogonal");

  // prime of the local factor e*S: elements with nilpotent e-component
  for (int e : local_idem_) {
    std::vector<int> p;
    std::vector<char> mask(n_, 0);
    for (int x = 0; x < n_; ++x)
      if (is_nilpotent(mul(x, e))) {
        p.push_back(x);
        mask[x] = 1;
      }
    primes_.push_back(std::move(p));
    prime_mask_.push_back(std::move(mask));
  }

  // each prime must be maximal: S/p is a field. Checked for small rings.
  if (n_ <= 256) {
    for (size_t pi = 0; pi < primes_.size(); ++pi) {
      for (int x = 0; x < n_; ++x) {
        if (prime_mask_[pi][x]) continue;
        bool invertible_mod_p = false;
        for (int y = 0; y < n_ && !invertible_mod_p; ++y)
          if (prime_mask_[pi][sub(mul(x, y), one_)]) invertible_mod_p = true;
        if (!invertible_mod_p)
          throw std::domain_error("not-a-ring: listed prime is not maximal");
      }
    }
  }
}

int FiniteRing::prime_of_idempotent(int e) const {
  for (size_t i = 0; i < local_idem_.size(); ++i)
    if (local_idem_[i] == e) return static_cast<int>(i);
  return -1;
}

int FiniteRing::pow(int a, long k) const {
  int r = one_;
  int base = a;
  while (k > 0) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

int FiniteRing::of_integer(long v) const {
  long m = v % n_;
  // n_ need not be the additive order of 1, so walk it
  int r = 0;
  long k = ((m % n_) + n_) % n_;
  // repeated doubling on 1
  int base = one_;
  while (k > 0) {
    if (k & 1) r = add(r, base);
    base = add(base, base);
    k >>= 1;
  }
  // adjust: for negative v beyond the reduction above nothing more is needed
  // because v mod n_ already accounts for the additive order dividing n_.
  return r;
}

int FiniteRing::elem_by_name(const std::string& s) const {
  for (int i = 0; i < n_; ++i)
    if (names_[i] == s) return i;
  return -1;
}

std::vector<int> FiniteRing::ideal_generated(const std::vector<int>& gens) const {
  std::vector<char> in(n_, 0);
  in[0] = 1;
  std::vector<int> work = {0};
  for (int g : gens)
    for (int r = 0; r < n_; ++r) {
      int v = mul(r, g);
      if (!in[v]) {
        in[v] = 1;
        work.push_back(v);
      }
    }
  // close under addition
  for (size_t i = 0; i < work.size(); ++i)
    for (size_t j = 0; j <= i; ++j) {
      int v = add(work[i], work[j]);
      if (!in[v]) {
        in[v] = 1;
        work.push_back(v);
      }
    }
  std::sort(work.begin(), work.end());
  return work;
}

std::vector<int> FiniteRing::zero_set(const std::vector<int>& gens) const {
  std::vector<int> out;
  for (int pi = 0; pi < num_primes(); ++pi) {
    bool inside = true;
    for (int g : gens)
      if (!prime_mask_[pi][g]) {
        inside = false;
        break;
      }
    if (inside) out.push_back(pi);
  }
  return out;
}

std::vector<int> FiniteRing::radical_of(const std::vector<int>& gens) const {
  auto zs = zero_set(gens);
  std::vector<int> out;
  for (int x = 0; x < n_; ++x) {
    bool in_all = true;
    for (int pi : zs)
      if (!prime_mask_[pi][x]) {
        in_all = false;
        break;
      }
    if (in_all) out.push_back(x);
  }
  return out;
}

FiniteRing::StablePower FiniteRing::stable_idempotent(int t) const {
  // find i < j with t^i = t^j; the cycle gives the idempotent power
  std::vector<int> seen_at(n_, -1);
  int cur = one_;
  int tail = -1, cycle = -1;
  for (int k = 1;; ++k) {
    cur = mul(cur, t);
    if (seen_at[cur] >= 0) {
      tail = seen_at[cur];
      cycle = k - tail;
      break;
    }
    seen_at[cur] = k;
  }
  long m = cycle;
  while (m < tail) m += cycle;
  int e = pow(t, m);
  StablePower sp;
  sp.idem = e;
  sp.exponent = m;
  sp.inverse_on_im = mul(pow(t, m - 1), e);  // t * (t^(m-1) e) = t^m e = e
  return sp;
}

}  // namespace torsor
