#include "torsor/fmodule.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace torsor {

namespace {
constexpr std::int64_t kMaxUniverse = 4'000'000;

void check_universe_budget(double projected, const char* what) {
  if (projected > static_cast<double>(kMaxUniverse))
    throw std::domain_error(std::string("module-too-large: ") + what);
}
}  // namespace

void FModule::decode(Handle h, std::vector<int>& out) const {
  int base = R_->size();
  out.resize(L_);
  for (int i = 0; i < L_; ++i) {
    out[i] = static_cast<int>(h % base);
    h /= base;
  }
}

FModule::Handle FModule::encode(const std::vector<int>& v) const {
  int base = R_->size();
  Handle h = 0;
  for (int i = L_ - 1; i >= 0; --i) h = h * base + v[i];
  return h;
}

FModule::Handle FModule::add_h(Handle a, Handle b) const {
  int base = R_->size();
  Handle out = 0, mult = 1;
  for (int i = 0; i < L_; ++i) {
    int x = static_cast<int>(a % base), y = static_cast<int>(b % base);
    out += static_cast<Handle>(R_->add(x, y)) * mult;
    mult *= base;
    a /= base;
    b /= base;
  }
  return out;
}

FModule::Handle FModule::neg_h(Handle a) const {
  int base = R_->size();
  Handle out = 0, mult = 1;
  for (int i = 0; i < L_; ++i) {
    out += static_cast<Handle>(R_->neg(static_cast<int>(a % base))) * mult;
    mult *= base;
    a /= base;
  }
  return out;
}

FModule::Handle FModule::act_h(int s, Handle a) const {
  int base = R_->size();
  Handle out = 0, mult = 1;
  for (int i = 0; i < L_; ++i) {
    out += static_cast<Handle>(R_->mul(s, static_cast<int>(a % base))) * mult;
    mult *= base;
    a /= base;
  }
  return out;
}

int FModule::index_of_handle(Handle h) const {
  auto it = canon_.find(h);
  return it == canon_.end() ? -1 : it->second;
}

int FModule::add(int a, int b) const {
  return canon_.at(add_h(reps_[a], reps_[b]));
}

int FModule::neg(int a) const { return canon_.at(neg_h(reps_[a])); }

int FModule::act(int s, int a) const { return canon_.at(act_h(s, reps_[a])); }

int FModule::multiple(long k, int a) const {
  if (k < 0) return multiple(-k, neg(a));
  int r = 0, base = a;
  while (k > 0) {
    if (k & 1) r = add(r, base);
    base = add(base, base);
    k >>= 1;
  }
  return r;
}

int FModule::additive_order(int a) const {
  int x = a;
  for (int k = 1;; ++k) {
    if (x == 0) return k;
    x = add(x, a);
  }
}

std::vector<char> FModule::annihilator(int a) const {
  std::vector<char> out(R_->size(), 0);
  for (int s = 0; s < R_->size(); ++s) out[s] = act(s, a) == 0;
  return out;
}

// ---------------------------------------------------------------------------
// builder

struct ModuleBuilder {
  FiniteRingPtr R;
  int L = 0;
  std::vector<FModule::Handle> universe;  // subgroup U, will be sorted
  std::vector<FModule::Handle> kern;      // subgroup K (coset of zero)
  std::vector<FModule::Handle> gen_handles;

  /// handle arithmetic helper at a given universe size, no elements
  static FModule scratch(FiniteRingPtr R, int L) {
    FModule m;
    m.R_ = std::move(R);
    m.L_ = L;
    return m;
  }
  static FModule::Handle hadd(const FModule& m, FModule::Handle a,
                              FModule::Handle b) {
    return m.add_h(a, b);
  }

  // closure of seeds under S-span inside the ambient handle arithmetic
  static std::vector<FModule::Handle> span(const FModule& arith,
                                           const std::vector<FModule::Handle>& seeds) {
    std::set<FModule::Handle> mults;
    for (auto g : seeds)
      for (int s = 0; s < arith.ring()->size(); ++s)
        mults.insert(arith.act_h(s, g));
    std::vector<FModule::Handle> work = {0};
    std::set<FModule::Handle> seen = {0};
    for (size_t i = 0; i < work.size(); ++i) {
      for (auto m : mults) {
        auto h = arith.add_h(work[i], m);
        if (seen.insert(h).second) {
          work.push_back(h);
          if (static_cast<std::int64_t>(work.size()) > kMaxUniverse)
            throw std::domain_error("module-too-large: span");
        }
      }
    }
    return {seen.begin(), seen.end()};
  }

  FModulePtr build() const {
    auto mod = std::shared_ptr<FModule>(new FModule());
    mod->R_ = R;
    mod->L_ = L;
    std::vector<FModule::Handle> uni = universe;
    std::sort(uni.begin(), uni.end());
    uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
    std::vector<FModule::Handle> K = kern;
    std::sort(K.begin(), K.end());
    K.erase(std::unique(K.begin(), K.end()), K.end());
    if (K.empty()) K.push_back(0);
    // coset partition; reps are the minimal handle per coset, assigned in
    // ascending handle order so the zero coset is element 0
    for (auto u : uni) {
      if (mod->canon_.count(u)) continue;
      int idx = static_cast<int>(mod->reps_.size());
      mod->reps_.push_back(u);
      for (auto k : K) {
        auto h = mod->add_h(u, k);
        mod->canon_.emplace(h, idx);
      }
    }
    mod->universe_ = std::move(uni);
    if (mod->reps_.empty() || mod->reps_[0] != 0)
      throw std::logic_error("zero coset missing from universe");
    // generators
    for (auto g : gen_handles) mod->gens_.push_back(mod->canon_.at(g));
    {
      // dedupe but keep order
      std::vector<int> gs;
      for (int g : mod->gens_)
        if (std::find(gs.begin(), gs.end(), g) == gs.end()) gs.push_back(g);
      mod->gens_ = gs;
    }
    if (mod->gens_.empty() && mod->size() > 1)
      throw std::logic_error("nonzero module without generators");
    build_expr(*mod);
    return mod;
  }

  static void build_expr(FModule& m) {
    int g = static_cast<int>(m.gens_.size());
    int S = m.ring()->size();
    m.expr_.assign(m.size(), {});
    std::vector<char> visited(m.size(), 0);
    m.expr_[0] = std::vector<int>(g, 0);
    visited[0] = 1;
    std::vector<int> work = {0};
    for (size_t i = 0; i < work.size(); ++i) {
      int x = work[i];
      for (int k = 0; k < g; ++k) {
        for (int s = 0; s < S; ++s) {
          int y = m.add(x, m.act(s, m.gens_[k]));
          if (!visited[y]) {
            visited[y] = 1;
            m.expr_[y] = m.expr_[x];
            m.expr_[y][k] = m.ring()->add(m.expr_[y][k], s);
            work.push_back(y);
          }
        }
      }
    }
    for (int x = 0; x < m.size(); ++x)
      if (!visited[x])
        throw std::logic_error("generators do not span the module");
  }
};

// ---------------------------------------------------------------------------
// static constructors

FModulePtr FModule::ring_module(FiniteRingPtr R) {
  ModuleBuilder b;
  b.R = R;
  b.L = 1;
  for (int i = 0; i < R->size(); ++i) b.universe.push_back(i);
  b.gen_handles = {R->one()};
  return b.build();
}

FModulePtr FModule::zero_module(FiniteRingPtr R) {
  ModuleBuilder b;
  b.R = std::move(R);
  b.L = 0;
  b.universe = {0};
  return b.build();
}

FModulePtr FModule::free_module(FiniteRingPtr R, int rank) {
  if (rank == 0) return zero_module(std::move(R));
  double total = 1;
  for (int i = 0; i < rank; ++i) total *= R->size();
  check_universe_budget(total, "free module");
  ModuleBuilder b;
  b.R = R;
  b.L = rank;
  std::int64_t n = static_cast<std::int64_t>(total);
  b.universe.resize(n);
  for (std::int64_t i = 0; i < n; ++i) b.universe[i] = i;
  Handle mult = 1;
  for (int k = 0; k < rank; ++k) {
    b.gen_handles.push_back(mult * R->one());
    mult *= R->size();
  }
  return b.build();
}

FModulePtr FModule::cyclic(FiniteRingPtr R, int gen_elem) {
  ModuleBuilder b;
  b.R = R;
  b.L = 1;
  for (int x : R->ideal_generated({gen_elem})) b.universe.push_back(x);
  b.gen_handles = {gen_elem};
  if (gen_elem == 0) b.gen_handles.clear();
  return b.build();
}

FModulePtr FModule::presented(FiniteRingPtr R, int rank,
                              const std::vector<std::vector<int>>& rel_rows) {
  if (rank == 0) return zero_module(std::move(R));
  double total = 1;
  for (int i = 0; i < rank; ++i) total *= R->size();
  check_universe_budget(total, "presented module");
  ModuleBuilder b;
  b.R = R;
  b.L = rank;
  std::int64_t n = static_cast<std::int64_t>(total);
  b.universe.resize(n);
  for (std::int64_t i = 0; i < n; ++i) b.universe[i] = i;

  // span of the relation rows, then cosets
  FModule arith = ModuleBuilder::scratch(R, rank);
  std::vector<FModule::Handle> seeds;
  for (auto& row : rel_rows) {
    if (static_cast<int>(row.size()) != rank)
      throw std::invalid_argument("relation row arity mismatch");
    seeds.push_back(arith.encode(row));
  }
  b.kern = ModuleBuilder::span(arith, seeds);
  Handle mult = 1;
  for (int k = 0; k < rank; ++k) {
    b.gen_handles.push_back(mult * R->one());
    mult *= R->size();
  }
  return b.build();
}

const std::vector<std::vector<int>>& FModule::relations() const {
  std::call_once(relcache_->flag, [this] {
    int g = static_cast<int>(gens_.size());
    int S = R_->size();
    double total = 1;
    for (int i = 0; i < g; ++i) total *= S;
    check_universe_budget(total, "relation enumeration");
    std::int64_t n = static_cast<std::int64_t>(total);
    // all kernel tuples of S^g -> M
    std::vector<std::vector<int>> ker;
    std::vector<int> tup(g, 0);
    for (std::int64_t code = 0; code < n; ++code) {
      std::int64_t c = code;
      for (int i = 0; i < g; ++i) {
        tup[i] = static_cast<int>(c % S);
        c /= S;
      }
      int acc = 0;
      for (int i = 0; i < g; ++i) acc = add(acc, act(tup[i], gens_[i]));
      if (acc == 0) ker.push_back(tup);
    }
    // reduce to a generating subset (greedy span growth)
    std::set<std::vector<int>> span = {std::vector<int>(g, 0)};
    auto add_tup = [&](const std::vector<int>& a, const std::vector<int>& b) {
      std::vector<int> r(g);
      for (int i = 0; i < g; ++i) r[i] = R_->add(a[i], b[i]);
      return r;
    };
    std::vector<std::vector<int>>& rows = relcache_->rows;
    for (auto& k : ker) {
      if (span.count(k)) continue;
      rows.push_back(k);
      // extend span by all multiples of k
      std::vector<std::vector<int>> mults;
      for (int s = 0; s < S; ++s) {
        std::vector<int> m(g);
        for (int i = 0; i < g; ++i) m[i] = R_->mul(s, k[i]);
        mults.push_back(m);
      }
      std::vector<std::vector<int>> work(span.begin(), span.end());
      for (size_t i = 0; i < work.size(); ++i)
        for (auto& m : mults) {
          auto h = add_tup(work[i], m);
          if (span.insert(h).second) work.push_back(h);
        }
    }
  });
  return relcache_->rows;
}

std::string FModule::describe() const {
  std::ostringstream os;
  os << "module(" << size() << " elements over " << R_->spec_string() << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// homs

bool ModuleHom::is_zero_map() const {
  return std::all_of(table.begin(), table.end(), [](int v) { return v == 0; });
}

ModuleHom ModuleHom::then(const ModuleHom& g) const {
  if (g.src.get() != dst.get())
    throw std::invalid_argument("hom composition mismatch");
  ModuleHom out{src, g.dst, std::vector<int>(table.size())};
  for (size_t i = 0; i < table.size(); ++i) out.table[i] = g.table[table[i]];
  return out;
}

ModuleHom ModuleHom::operator+(const ModuleHom& o) const {
  ModuleHom out{src, dst, std::vector<int>(table.size())};
  for (size_t i = 0; i < table.size(); ++i)
    out.table[i] = dst->add(table[i], o.table[i]);
  return out;
}

ModuleHom ModuleHom::operator-() const {
  ModuleHom out{src, dst, std::vector<int>(table.size())};
  for (size_t i = 0; i < table.size(); ++i) out.table[i] = dst->neg(table[i]);
  return out;
}

ModuleHom ModuleHom::scaled(int s) const {
  ModuleHom out{src, dst, std::vector<int>(table.size())};
  for (size_t i = 0; i < table.size(); ++i) out.table[i] = dst->act(s, table[i]);
  return out;
}

ModuleHom ModuleHom::identity(const FModulePtr& m) {
  ModuleHom out{m, m, std::vector<int>(m->size())};
  for (int i = 0; i < m->size(); ++i) out.table[i] = i;
  return out;
}

ModuleHom ModuleHom::zero(const FModulePtr& src, const FModulePtr& dst) {
  return ModuleHom{src, dst, std::vector<int>(src->size(), 0)};
}

ModuleHom ModuleHom::scalar(const FModulePtr& m, int s) {
  ModuleHom out{m, m, std::vector<int>(m->size())};
  for (int i = 0; i < m->size(); ++i) out.table[i] = m->act(s, i);
  return out;
}

ModuleHom ModuleHom::from_gen_images(const FModulePtr& src, const FModulePtr& dst,
                                     const std::vector<int>& images) {
  int g = static_cast<int>(src->gens().size());
  if (static_cast<int>(images.size()) != g)
    throw std::invalid_argument("generator image count mismatch");
  ModuleHom out{src, dst, std::vector<int>(src->size())};
  for (int x = 0; x < src->size(); ++x) {
    const auto& c = src->expr(x);
    int acc = 0;
    for (int k = 0; k < g; ++k) acc = dst->add(acc, dst->act(c[k], images[k]));
    out.table[x] = acc;
  }
  // verify linearity on every edge (x, x + s*gen_k)
  int S = src->ring()->size();
  for (int x = 0; x < src->size(); ++x)
    for (int k = 0; k < g; ++k)
      for (int s = 0; s < S; ++s) {
        int y = src->add(x, src->act(s, src->gens()[k]));
        int want = dst->add(out.table[x], dst->act(s, images[k]));
        if (out.table[y] != want)
          throw std::domain_error("not-a-morphism: images violate relations");
      }
  return out;
}

ModuleHom ModuleHom::from_table_checked(const FModulePtr& src,
                                        const FModulePtr& dst,
                                        std::vector<int> table) {
  ModuleHom out{src, dst, std::move(table)};
  for (int a = 0; a < src->size(); ++a)
    for (int b = 0; b <= a; ++b)
      if (out.table[src->add(a, b)] != dst->add(out.table[a], out.table[b]))
        throw std::domain_error("not-a-morphism: not additive");
  for (int a = 0; a < src->size(); ++a)
    for (int s = 0; s < src->ring()->size(); ++s)
      if (out.table[src->act(s, a)] != dst->act(s, out.table[a]))
        throw std::domain_error("not-a-morphism: not S-linear");
  return out;
}

bool ModuleHom::is_injective() const {
  std::vector<char> hit(dst->size(), 0);
  for (int v : table) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

bool ModuleHom::is_surjective() const {
  std::vector<char> hit(dst->size(), 0);
  int count = 0;
  for (int v : table)
    if (!hit[v]) {
      hit[v] = 1;
      ++count;
    }
  return count == dst->size();
}

// ---------------------------------------------------------------------------
// submodule / quotient / sums

namespace {

// closure of generated subset inside a module
std::vector<int> closure_elements(const FModulePtr& m,
                                  const std::vector<int>& gen_elems) {
  std::vector<char> in(m->size(), 0);
  in[0] = 1;
  std::vector<int> work = {0};
  std::vector<int> mults;
  for (int gidx : gen_elems)
    for (int s = 0; s < m->ring()->size(); ++s) {
      int v = m->act(s, gidx);
      if (!in[v]) {
        in[v] = 1;
        work.push_back(v);
      }
      mults.push_back(v);
    }
  std::sort(mults.begin(), mults.end());
  mults.erase(std::unique(mults.begin(), mults.end()), mults.end());
  for (size_t i = 0; i < work.size(); ++i)
    for (int mv : mults) {
      int v = m->add(work[i], mv);
      if (!in[v]) {
        in[v] = 1;
        work.push_back(v);
      }
    }
  std::sort(work.begin(), work.end());
  return work;
}

}  // namespace

SubmoduleView submodule(const FModulePtr& m, const std::vector<int>& gen_elems) {
  std::vector<int> elems = closure_elements(m, gen_elems);

  // universe of the submodule: the union of the ambient cosets of its
  // elements; identifications (kern) are the ambient zero coset
  ModuleBuilder b;
  b.R = m->ring();
  b.L = m->universe_len();
  FModule arith = ModuleBuilder::scratch(m->ring(), m->universe_len());
  std::vector<FModule::Handle> kern = m->zero_coset_handles();
  for (int e : elems)
    for (auto k : kern) b.universe.push_back(ModuleBuilder::hadd(arith, m->rep_handle(e), k));
  b.kern = kern;
  for (int gidx : gen_elems)
    if (gidx != 0) b.gen_handles.push_back(m->rep_handle(gidx));
  FModulePtr sub = b.build();

  ModuleHom inc{sub, m, std::vector<int>(sub->size())};
  for (int i = 0; i < sub->size(); ++i)
    inc.table[i] = m->index_of_handle(sub->rep_handle(i));
  return SubmoduleView{sub, std::move(inc), std::move(elems)};
}

QuotientView quotient_by_elements(const FModulePtr& m,
                                  const std::vector<int>& closed_subgroup) {
  FModule arith = ModuleBuilder::scratch(m->ring(), m->universe_len());
  std::vector<FModule::Handle> kern;
  auto zc = m->zero_coset_handles();
  for (int e : closed_subgroup)
    for (auto k : zc) kern.push_back(ModuleBuilder::hadd(arith, m->rep_handle(e), k));
  ModuleBuilder b;
  b.R = m->ring();
  b.L = m->universe_len();
  b.universe = m->universe_handles();
  b.kern = kern;
  // generators: classes of the ambient generators
  for (int g : m->gens()) b.gen_handles.push_back(m->rep_handle(g));
  FModulePtr q = b.build();
  ModuleHom proj{m, q, std::vector<int>(m->size())};
  for (int x = 0; x < m->size(); ++x)
    proj.table[x] = q->index_of_handle(m->rep_handle(x));
  // generator images may be redundant/zero in the quotient; prune zeros
  return QuotientView{q, std::move(proj)};
}

QuotientView quotient(const FModulePtr& m, const SubmoduleView& sub) {
  return quotient_by_elements(m, sub.elements);
}

SumView direct_sum(const std::vector<FModulePtr>& parts) {
  if (parts.empty()) throw std::invalid_argument("empty direct sum");
  FiniteRingPtr R = parts[0]->ring();
  double total_universe = 1;
  int L = 0;
  for (auto& p : parts) {
    total_universe *= std::max<size_t>(p->universe_handles().size(), 1);
    L += p->universe_len();
  }
  check_universe_budget(total_universe, "direct sum");

  ModuleBuilder b;
  b.R = R;
  b.L = L;
  // offsets for concatenating coordinates
  std::vector<FModule::Handle> shift(parts.size(), 1);
  {
    FModule::Handle mult = 1;
    for (size_t i = 0; i < parts.size(); ++i) {
      shift[i] = mult;
      for (int j = 0; j < parts[i]->universe_len(); ++j) mult *= R->size();
    }
  }
  // universe = product of part universes
  std::vector<FModule::Handle> uni = {0};
  std::vector<FModule::Handle> kern = {0};
  for (size_t i = 0; i < parts.size(); ++i) {
    std::vector<FModule::Handle> next;
    for (auto base : uni)
      for (auto h : parts[i]->universe_handles())
        next.push_back(base + h * shift[i]);
    uni.swap(next);
    std::vector<FModule::Handle> knext;
    for (auto base : kern)
      for (auto h : parts[i]->zero_coset_handles())
        knext.push_back(base + h * shift[i]);
    kern.swap(knext);
  }
  b.universe = uni;
  b.kern = kern;
  for (size_t i = 0; i < parts.size(); ++i)
    for (int g : parts[i]->gens())
      b.gen_handles.push_back(parts[i]->rep_handle(g) * shift[i]);
  FModulePtr sum = b.build();

  SumView out;
  out.module = sum;
  for (size_t i = 0; i < parts.size(); ++i) {
    ModuleHom in{parts[i], sum, std::vector<int>(parts[i]->size())};
    for (int x = 0; x < parts[i]->size(); ++x)
      in.table[x] = sum->index_of_handle(parts[i]->rep_handle(x) * shift[i]);
    out.into.push_back(std::move(in));
  }
  for (size_t i = 0; i < parts.size(); ++i) {
    ModuleHom pr{sum, parts[i], std::vector<int>(sum->size())};
    for (int x = 0; x < sum->size(); ++x) {
      FModule::Handle h = sum->rep_handle(x);
      // extract slice i
      FModule::Handle rest = h / shift[i];
      FModule::Handle slice = 0, mult = 1;
      for (int j = 0; j < parts[i]->universe_len(); ++j) {
        slice += (rest % R->size()) * mult;
        mult *= R->size();
        rest /= R->size();
      }
      int idx = parts[i]->index_of_handle(slice);
      pr.table[x] = idx;
    }
    out.onto.push_back(std::move(pr));
  }
  return out;
}

// ---------------------------------------------------------------------------
// tensor and hom

int TensorView::pure(int x, int y) const {
  const auto& c = left->expr(x);
  const auto& d = right->expr(y);
  const auto& R = *module->ring();
  int g = static_cast<int>(c.size());
  int h = static_cast<int>(d.size());
  int acc = 0;
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < h; ++j) {
      int coeff = R.mul(c[i], d[j]);
      acc = module->add(acc, module->act(coeff, module->gens()[i * h + j]));
    }
  return acc;
}

TensorView tensor(const FModulePtr& a, const FModulePtr& b) {
  int g = static_cast<int>(a->gens().size());
  int h = static_cast<int>(b->gens().size());
  FiniteRingPtr R = a->ring();
  if (g == 0 || h == 0)
    return TensorView{FModule::zero_module(R), a, b};
  std::vector<std::vector<int>> rows;
  for (auto& r : a->relations())
    for (int j = 0; j < h; ++j) {
      std::vector<int> row(g * h, 0);
      for (int i = 0; i < g; ++i) row[i * h + j] = r[i];
      rows.push_back(std::move(row));
    }
  for (auto& r : b->relations())
    for (int i = 0; i < g; ++i) {
      std::vector<int> row(g * h, 0);
      for (int j = 0; j < h; ++j) row[i * h + j] = r[j];
      rows.push_back(std::move(row));
    }
  return TensorView{FModule::presented(R, g * h, rows), a, b};
}

ModuleHom tensor_hom(const TensorView& src, const TensorView& dst,
                     const ModuleHom& f, const ModuleHom& g) {
  int gc = static_cast<int>(src.left->gens().size());
  int hc = static_cast<int>(src.right->gens().size());
  std::vector<int> images;
  images.reserve(gc * hc);
  for (int i = 0; i < gc; ++i)
    for (int j = 0; j < hc; ++j)
      images.push_back(
          dst.pure(f(src.left->gens()[i]), g(src.right->gens()[j])));
  return ModuleHom::from_gen_images(src.module, dst.module, images);
}

int HomView::apply(int hom_elem, int x) const {
  const auto& c = a->expr(x);
  int acc = 0;
  for (size_t k = 0; k < c.size(); ++k)
    acc = b->add(acc, b->act(c[k], components[k].table[hom_elem]));
  return acc;
}

int HomView::of_map(const ModuleHom& f) const {
  // locate the hom element whose generator images match f's
  for (int h = 0; h < module->size(); ++h) {
    bool ok = true;
    for (size_t k = 0; k < a->gens().size() && ok; ++k)
      ok = components[k].table[h] == f(a->gens()[k]);
    if (ok) return h;
  }
  return -1;
}

ModuleHom HomView::as_map(int hom_elem) const {
  std::vector<int> images;
  for (size_t k = 0; k < a->gens().size(); ++k)
    images.push_back(components[k].table[hom_elem]);
  return ModuleHom::from_gen_images(a, b, images);
}

HomView hom_module(const FModulePtr& a, const FModulePtr& b) {
  int g = static_cast<int>(a->gens().size());
  HomView out;
  out.a = a;
  out.b = b;
  if (g == 0) {
    out.module = FModule::zero_module(a->ring());
    return out;
  }
  std::vector<FModulePtr> copies(g, b);
  SumView power = direct_sum(copies);
  // a tuple of images extends to a hom iff every relation row dies
  const auto& rels = a->relations();
  std::vector<int> good;
  for (int v = 0; v < power.module->size(); ++v) {
    bool ok = true;
    for (auto& r : rels) {
      int acc = 0;
      for (int k = 0; k < g && ok; ++k)
        acc = b->add(acc, b->act(r[k], power.onto[k](v)));
      if (acc != 0) {
        ok = false;
        break;
      }
    }
    if (ok) good.push_back(v);
  }
  SubmoduleView sv = submodule(power.module, good);
  out.module = sv.module;
  // component projections restricted to the hom module
  for (int k = 0; k < g; ++k)
    out.components.push_back(sv.inclusion.then(power.onto[k]));
  return out;
}

// ---------------------------------------------------------------------------
// kernels, images, generators, invariants

std::vector<int> kernel_elements(const ModuleHom& f) {
  std::vector<int> out;
  for (int x = 0; x < f.src->size(); ++x)
    if (f(x) == 0) out.push_back(x);
  return out;
}

SubmoduleView kernel(const ModuleHom& f) {
  return submodule(f.src, kernel_elements(f));
}

SubmoduleView image(const ModuleHom& f) {
  std::vector<int> gens;
  for (int g : f.src->gens()) gens.push_back(f(g));
  return submodule(f.dst, gens);
}

std::vector<int> minimal_gens(const FModulePtr& m) {
  std::vector<int> gens;
  std::vector<char> in_span(m->size(), 0);
  in_span[0] = 1;
  int covered = 1;
  while (covered < m->size()) {
    int best = -1, best_gain = -1;
    if (m->size() <= 2048) {
      for (int x = 0; x < m->size(); ++x) {
        if (in_span[x]) continue;
        auto trial = gens;
        trial.push_back(x);
        auto elems = closure_elements(m, trial);
        int gain = static_cast<int>(elems.size());
        if (gain > best_gain) {
          best_gain = gain;
          best = x;
        }
      }
    } else {
      for (int x = 0; x < m->size(); ++x)
        if (!in_span[x]) {
          best = x;
          break;
        }
    }
    gens.push_back(best);
    auto elems = closure_elements(m, gens);
    covered = static_cast<int>(elems.size());
    std::fill(in_span.begin(), in_span.end(), 0);
    for (int e : elems) in_span[e] = 1;
  }
  return gens;
}

std::vector<long> invariant_factors(const FModulePtr& m) {
  long n = m->size();
  if (n == 1) return {};
  // factor the group order
  std::vector<std::pair<long, int>> primes;
  long t = n;
  for (long p = 2; p * p <= t; ++p)
    if (t % p == 0) {
      int e = 0;
      while (t % p == 0) {
        t /= p;
        ++e;
      }
      primes.push_back({p, e});
    }
  if (t > 1) primes.push_back({t, 1});

  // per prime: partition lambda via counts of p^k-torsion
  std::vector<std::vector<int>> partitions;
  for (auto [p, e] : primes) {
    std::vector<int> d = {0};  // d[k] = log_p #{x : p^k x = 0}
    long pk = 1;
    for (int k = 1; k <= e * 32; ++k) {
      pk *= p;
      int count = 0;
      for (int x = 0; x < m->size(); ++x)
        if (m->multiple(pk, x) == 0) ++count;
      int dk = 0;
      long c = count;
      while (c > 1) {
        c /= p;
        ++dk;
      }
      d.push_back(dk);
      if (d[k] == d[k - 1]) break;
    }
    // r_k = number of cyclic p-factors of order >= p^k
    std::vector<int> lambda;
    for (size_t k = 1; k < d.size(); ++k) {
      int rk = d[k] - d[k - 1];
      int rk1 = k + 1 < d.size() ? d[k + 1] - d[k] : 0;
      for (int i = 0; i < rk - rk1; ++i) lambda.push_back(static_cast<int>(k));
    }
    std::sort(lambda.rbegin(), lambda.rend());
    partitions.push_back(lambda);
  }
  size_t width = 0;
  for (auto& l : partitions) width = std::max(width, l.size());
  std::vector<long> factors;
  for (size_t j = 0; j < width; ++j) {
    long f = 1;
    for (size_t pi = 0; pi < primes.size(); ++pi) {
      int e = j < partitions[pi].size() ? partitions[pi][j] : 0;
      for (int i = 0; i < e; ++i) f *= primes[pi].first;
    }
    factors.push_back(f);
  }
  std::sort(factors.begin(), factors.end());  // ascending divisibility
  return factors;
}

bool modules_isomorphic(const FModulePtr& a, const FModulePtr& b) {
  if (a->size() != b->size()) return false;
  if (a->size() == 1) return true;
  if (invariant_factors(a) != invariant_factors(b)) return false;
  const auto& R = *a->ring();
  for (int s = 0; s < R.size(); ++s) {
    int ka = 0, kb = 0;
    for (int x = 0; x < a->size(); ++x) ka += a->act(s, x) == 0;
    for (int x = 0; x < b->size(); ++x) kb += b->act(s, x) == 0;
    if (ka != kb) return false;
  }
  // generator image search
  std::vector<int> gens = minimal_gens(a);
  std::vector<std::vector<int>> candidates;
  for (int g : gens) {
    std::vector<int> cand;
    int ord = a->additive_order(g);
    auto ann = a->annihilator(g);
    for (int y = 0; y < b->size(); ++y)
      if (b->additive_order(y) == ord && b->annihilator(y) == ann)
        cand.push_back(y);
    if (cand.empty()) return false;
    candidates.push_back(std::move(cand));
  }
  std::vector<int> pick(gens.size(), 0);
  // present a with gens as its generating set for image construction
  SubmoduleView re = submodule(a, gens);  // re.module has gens = gens
  for (;;) {
    std::vector<int> images;
    for (size_t i = 0; i < gens.size(); ++i)
      images.push_back(candidates[i][pick[i]]);
    try {
      ModuleHom f = ModuleHom::from_gen_images(re.module, b, images);
      if (f.is_bijective()) return true;
    } catch (const std::domain_error&) {
    }
    // next assignment
    size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < static_cast<int>(candidates[i].size())) break;
      pick[i] = 0;
    }
    if (i == pick.size()) return false;
  }
}

bool exact_at(const ModuleHom& g, const ModuleHom& f) {
  if (g.dst->size() != f.src->size())
    throw std::invalid_argument("exact_at: modules disagree");
  auto ker = kernel_elements(f);
  auto im = image(g);
  return ker == im.elements;
}

std::vector<FModule::Handle> FModule::zero_coset_handles() const {
  std::vector<Handle> out;
  for (auto h : universe_)
    if (canon_.at(h) == 0) out.push_back(h);
  return out;
}

Localization localize_finite(const FModulePtr& m, int t) {
  const auto& R = *m->ring();
  auto sp = R.stable_idempotent(t);
  std::vector<int> gen_images;
  for (int g : m->gens()) gen_images.push_back(m->act(sp.idem, g));
  SubmoduleView sub = submodule(m, gen_images);
  // x -> e*x, landing in the submodule
  std::vector<int> reverse(m->size(), -1);
  for (int i = 0; i < sub.module->size(); ++i) reverse[sub.inclusion(i)] = i;
  ModuleHom loc{m, sub.module, std::vector<int>(m->size())};
  for (int x = 0; x < m->size(); ++x) loc.table[x] = reverse[m->act(sp.idem, x)];
  return Localization{sub.module, std::move(loc)};
}

std::vector<int> annihilator_of_module(const FModulePtr& m) {
  std::vector<int> out;
  for (int s = 0; s < m->ring()->size(); ++s) {
    bool kills = true;
    for (int g : m->gens())
      if (m->act(s, g) != 0) {
        kills = false;
        break;
      }
    if (kills) out.push_back(s);
  }
  return out;
}

}  // namespace torsor
