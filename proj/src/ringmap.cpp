#include "torsor/ringmap.hpp"

#include <algorithm>
#include <stdexcept>

namespace torsor {

FiniteRingMap::FiniteRingMap(FiniteRingPtr src, FiniteRingPtr dst,
                             std::vector<int> images)
    : src_(std::move(src)), dst_(std::move(dst)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != src_->size())
    throw std::invalid_argument("ring map table has wrong size");
  if (images_[src_->one()] != dst_->one())
    throw std::domain_error("not-a-homomorphism: 1 not preserved");
  for (int a = 0; a < src_->size(); ++a)
    for (int b = 0; b <= a; ++b) {
      if (images_[src_->add(a, b)] != dst_->add(images_[a], images_[b]))
        throw std::domain_error("not-a-homomorphism: not additive");
      if (images_[src_->mul(a, b)] != dst_->mul(images_[a], images_[b]))
        throw std::domain_error("not-a-homomorphism: not multiplicative");
    }
}

FiniteRingMap FiniteRingMap::identity(const FiniteRingPtr& R) {
  std::vector<int> im(R->size());
  for (int i = 0; i < R->size(); ++i) im[i] = i;
  return FiniteRingMap(R, R, std::move(im));
}

FiniteRingMap FiniteRingMap::compose_after(const FiniteRingMap& first) const {
  if (first.dst_.get() != src_.get())
    throw std::invalid_argument("ring map composition mismatch");
  std::vector<int> im(first.src_->size());
  for (int i = 0; i < first.src_->size(); ++i) im[i] = images_[first.images_[i]];
  return FiniteRingMap(first.src_, dst_, std::move(im));
}

int FiniteRingMap::preimage_prime(int dst_prime) const {
  std::vector<int> pre;
  for (int x = 0; x < src_->size(); ++x)
    if (dst_->in_prime(images_[x], dst_prime)) pre.push_back(x);
  for (int pi = 0; pi < src_->num_primes(); ++pi)
    if (src_->primes()[pi] == pre) return pi;
  throw std::logic_error("preimage of a prime is not a listed prime");
}

namespace {

// a small ring-generating set beyond {0, 1}
std::vector<int> ring_gens(const FiniteRing& R) {
  auto closure = [&](std::vector<int> seed) {
    std::vector<char> in(R.size(), 0);
    std::vector<int> work;
    auto push = [&](int v) {
      if (!in[v]) {
        in[v] = 1;
        work.push_back(v);
      }
    };
    push(0);
    push(R.one());
    for (int s : seed) push(s);
    for (size_t i = 0; i < work.size(); ++i)
      for (size_t j = 0; j <= i; ++j) {
        push(R.add(work[i], work[j]));
        push(R.mul(work[i], work[j]));
      }
    return in;
  };
  std::vector<int> gens;
  for (;;) {
    auto in = closure(gens);
    int missing = -1;
    for (int x = 0; x < R.size(); ++x)
      if (!in[x]) {
        missing = x;
        break;
      }
    if (missing < 0) return gens;
    gens.push_back(missing);
  }
}

}  // namespace

std::vector<FiniteRingMap> FiniteRingMap::all_homs(const FiniteRingPtr& src,
                                                   const FiniteRingPtr& dst) {
  std::vector<int> gens = ring_gens(*src);
  int m = static_cast<int>(gens.size());
  std::vector<FiniteRingMap> out;
  std::vector<int> pick(m, 0);
  for (;;) {
    // try to extend {1 -> 1, gens -> pick} to a full homomorphism
    std::vector<int> def(src->size(), -1);
    def[0] = 0;
    def[src->one()] = dst->one();
    for (int k = 0; k < m; ++k) def[gens[k]] = pick[k];
    bool ok = true, changed = true;
    while (ok && changed) {
      changed = false;
      for (int a = 0; a < src->size() && ok; ++a) {
        if (def[a] < 0) continue;
        for (int b = 0; b <= a && ok; ++b) {
          if (def[b] < 0) continue;
          int s = src->add(a, b), ws = dst->add(def[a], def[b]);
          if (def[s] < 0) {
            def[s] = ws;
            changed = true;
          } else if (def[s] != ws) {
            ok = false;
          }
          int p = src->mul(a, b), wp = dst->mul(def[a], def[b]);
          if (ok) {
            if (def[p] < 0) {
              def[p] = wp;
              changed = true;
            } else if (def[p] != wp) {
              ok = false;
            }
          }
        }
      }
    }
    if (ok &&
        std::all_of(def.begin(), def.end(), [](int v) { return v >= 0; })) {
      try {
        out.emplace_back(src, dst, def);
      } catch (const std::domain_error&) {
      }
    }
    // next assignment
    int k = 0;
    for (; k < m; ++k) {
      if (++pick[k] < dst->size()) break;
      pick[k] = 0;
    }
    if (k == m) break;
  }
  return out;
}

}  // namespace torsor
