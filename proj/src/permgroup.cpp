#include "ftd/permgroup.hpp"

#include "ftd/kernels.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <numeric>
#include <sstream>

namespace ftd {

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators, std::string label)
    : degree_(degree), gens_(std::move(generators)), label_(std::move(label)), cache_(std::make_shared<Cache>()) {
  if (degree == 0 || degree > kMaxDegree) throw PermError("group: degree out of range");
  for (const Perm& g : gens_)
    if (g.degree() != degree) throw PermError("group: generator degree mismatch");
}

const ElementStore& PermGroup::elements(std::size_t cap) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (cache_->elements) return *cache_->elements;
  auto store = std::make_unique<ElementStore>(degree_);
  Perm id(degree_);
  store->insert(id.data());
  std::vector<Point> buf(degree_ + 1, 0);
  for (std::size_t i = 0; i < store->size(); ++i) {
    for (const Perm& g : gens_) {
      compose_into((*store)[i], g.data(), buf.data(), degree_);
      if (store->insert(buf.data()).second && store->size() > cap)
        throw BudgetExceeded("element enumeration of " + (label_.empty() ? std::string("group") : label_) +
                             " exceeded cap " + std::to_string(cap));
    }
  }
  cache_->elements = std::move(store);
  return *cache_->elements;
}

bool PermGroup::has_elements() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->elements != nullptr;
}

const StabilizerChain& PermGroup::chain() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->chain) cache_->chain = std::make_unique<StabilizerChain>(degree_, gens_);
  return *cache_->chain;
}

Int PermGroup::order() const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->elements) return Int(static_cast<unsigned long>(cache_->elements->size()));
  }
  return chain().order();
}

std::vector<Point> PermGroup::orbit(Point x) const {
  if (x >= degree_) throw PermError("group: point out of range");
  std::vector<char> seen(degree_, 0);
  std::vector<Point> out{x};
  seen[x] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const Perm& g : gens_) {
      const Point y = g[out[i]];
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Point>> orbits_of(std::size_t degree, const std::vector<Perm>& gens) {
  std::vector<int> comp(degree, -1);
  std::vector<std::vector<Point>> out;
  for (std::size_t s = 0; s < degree; ++s) {
    if (comp[s] >= 0) continue;
    const int c = static_cast<int>(out.size());
    std::vector<Point> orb{static_cast<Point>(s)};
    comp[s] = c;
    for (std::size_t i = 0; i < orb.size(); ++i)
      for (const Perm& g : gens) {
        const Point y = g[orb[i]];
        if (comp[y] < 0) {
          comp[y] = c;
          orb.push_back(y);
        }
      }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

std::vector<std::vector<Point>> PermGroup::orbits() const { return orbits_of(degree_, gens_); }

bool PermGroup::is_transitive() const { return orbit(0).size() == degree_; }

PermGroup PermGroup::point_stabilizer(Point x) const {
  if (x >= degree_) throw PermError("group: point out of range");
  StabilizerChain c(degree_, gens_, {x});
  std::string lbl = (label_.empty() ? std::string("G") : label_) + " stabilizer of " + std::to_string(x);
  return PermGroup(degree_, c.stabilizer_generators(1), std::move(lbl));
}

std::vector<std::size_t> PermGroup::suborbits(Point base) const {
  if (!is_transitive()) throw std::invalid_argument("suborbits: group is not transitive");
  const PermGroup stab = point_stabilizer(base);
  std::vector<std::size_t> out;
  for (const auto& o : stab.orbits()) out.push_back(o.size());
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

bool Subgroup::contains(std::uint32_t e) const { return std::binary_search(elements.begin(), elements.end(), e); }

IndexedGroup::IndexedGroup(const PermGroup& g) : g_(&g), store_(&g.elements()) {
  const std::size_t n = store_->size();
  inv_.resize(n);
  order_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Perm p = store_->perm(i);
    inv_[i] = index_of(p.inverse());
    order_[i] = static_cast<std::uint32_t>(p.order());
  }
}

std::uint32_t IndexedGroup::index_of(const Perm& p) const {
  auto f = store_->find(p.data());
  if (!f) throw std::logic_error("indexed group: permutation is not an element");
  return *f;
}

std::uint32_t IndexedGroup::mul(std::uint32_t a, std::uint32_t b) const {
  thread_local std::vector<Point> buf;
  buf.assign(store_->degree() + 1, 0);
  compose_into((*store_)[a], (*store_)[b], buf.data(), store_->degree());
  auto f = store_->find(buf.data());
  if (!f) throw std::logic_error("indexed group: product escaped the element set");
  return *f;
}

std::vector<std::uint32_t> IndexedGroup::generator_indices() const {
  std::vector<std::uint32_t> out;
  for (const Perm& g : g_->generators()) out.push_back(index_of(g));
  return out;
}

namespace {

// Generation-stamped membership marks, reused across closures on one thread.
struct Marks {
  std::vector<std::uint32_t> stamp;
  std::uint32_t gen = 0;
  void reset(std::size_t n) {
    if (stamp.size() < n) stamp.assign(n, 0);
    if (++gen == 0) {
      std::fill(stamp.begin(), stamp.end(), 0);
      gen = 1;
    }
  }
  bool test_set(std::uint32_t i) {
    if (stamp[i] == gen) return false;
    stamp[i] = gen;
    return true;
  }
};

}  // namespace

std::optional<Subgroup> IndexedGroup::closure(std::vector<std::uint32_t> gens, std::size_t limit) const {
  thread_local Marks marks;
  marks.reset(size());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  gens.erase(std::remove(gens.begin(), gens.end(), 0U), gens.end());
  Subgroup s;
  s.elements.push_back(0);
  marks.test_set(0);
  for (std::size_t i = 0; i < s.elements.size(); ++i)
    for (std::uint32_t g : gens) {
      const std::uint32_t y = mul(s.elements[i], g);
      if (marks.test_set(y)) {
        s.elements.push_back(y);
        if (s.elements.size() > limit) return std::nullopt;
      }
    }
  std::sort(s.elements.begin(), s.elements.end());
  s.generators = std::move(gens);
  return s;
}

Subgroup IndexedGroup::whole() const {
  Subgroup s;
  s.elements.resize(size());
  std::iota(s.elements.begin(), s.elements.end(), 0U);
  s.generators = generator_indices();
  return s;
}

Subgroup IndexedGroup::normalizer(const Subgroup& s) const {
  std::vector<std::uint32_t> elts;
  for (std::uint32_t g = 0; g < size(); ++g) {
    bool ok = true;
    for (std::uint32_t h : s.generators)
      if (!s.contains(conj(h, g))) {
        ok = false;
        break;
      }
    if (ok) elts.push_back(g);
  }
  Subgroup n;
  n.elements = std::move(elts);
  // A small generating set: add elements until the closure is everything.
  std::vector<std::uint32_t> gens;
  Subgroup cur = *closure({});
  for (std::uint32_t e : n.elements) {
    if (cur.order() == n.order()) break;
    if (cur.contains(e)) continue;
    gens.push_back(e);
    cur = *closure(gens);
  }
  n.generators = std::move(gens);
  return n;
}

Subgroup IndexedGroup::conjugate(const Subgroup& s, std::uint32_t by) const {
  Subgroup c;
  c.elements.reserve(s.elements.size());
  for (std::uint32_t e : s.elements) c.elements.push_back(conj(e, by));
  std::sort(c.elements.begin(), c.elements.end());
  for (std::uint32_t g : s.generators) c.generators.push_back(conj(g, by));
  return c;
}

bool IndexedGroup::conjugate_in(const Subgroup& a, const Subgroup& b, const Subgroup& over) const {
  if (a.order() != b.order()) return false;
  if (a == b) return true;
  for (std::uint32_t g : over.elements) {
    bool ok = true;
    for (std::uint32_t h : a.generators)
      if (!b.contains(conj(h, g))) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

Subgroup IndexedGroup::sylow(const Int& p) const {
  if (!is_prime(p)) throw MathError("sylow: p must be prime");
  const Int target = p_part(Int(static_cast<unsigned long>(size())), p);
  Subgroup P = *closure({});
  const unsigned long pu = p.get_ui();
  auto is_p_power = [pu](std::uint32_t o) {
    while (o % pu == 0) o /= static_cast<std::uint32_t>(pu);
    return o == 1;
  };
  while (Int(static_cast<unsigned long>(P.order())) < target) {
    bool grown = false;
    for (std::uint32_t x = 1; x < size() && !grown; ++x) {
      if (!is_p_power(order_[x]) || P.contains(x)) continue;
      bool normalizes = true;
      for (std::uint32_t h : P.generators)
        if (!P.contains(conj(h, x))) {
          normalizes = false;
          break;
        }
      if (!normalizes) continue;
      auto gens = P.generators;
      gens.push_back(x);
      P = *closure(gens);
      grown = true;
    }
    if (!grown) throw std::logic_error("sylow: no p-element normalizes a non-Sylow p-subgroup");
  }
  return P;
}

std::vector<Perm> IndexedGroup::perms(const std::vector<std::uint32_t>& idx) const {
  std::vector<Perm> out;
  for (std::uint32_t i : idx) out.push_back(store_->perm(i));
  return out;
}

PermGroup coset_action(const IndexedGroup& g, const Subgroup& s, std::string label) {
  const std::size_t n = g.size();
  if (s.order() == 0 || n % s.order() != 0) throw std::invalid_argument("coset action: subgroup order does not divide |G|");
  const std::size_t index = n / s.order();
  if (index > kMaxDegree) throw BudgetExceeded("coset action: index " + std::to_string(index) + " too large");
  // Closure check: products of generators stay inside s.
  for (std::uint32_t a : s.generators)
    for (std::uint32_t b : s.elements)
      if (!s.contains(g.mul(b, a))) throw std::invalid_argument("coset action: element set is not closed");
  std::vector<std::uint32_t> cosetOf(n, UINT32_MAX);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t e = 0; e < n; ++e) {
    if (cosetOf[e] != UINT32_MAX) continue;
    const auto c = static_cast<std::uint32_t>(reps.size());
    reps.push_back(e);
    for (std::uint32_t x : s.elements) {
      const std::uint32_t y = g.mul(x, e);
      if (cosetOf[y] != UINT32_MAX) throw std::invalid_argument("coset action: element set is not a subgroup");
      cosetOf[y] = c;
    }
  }
  std::vector<Perm> gens;
  for (std::uint32_t gi : g.generator_indices()) {
    std::vector<Point> img(index);
    for (std::size_t c = 0; c < index; ++c) img[c] = static_cast<Point>(cosetOf[g.mul(reps[c], gi)]);
    gens.push_back(Perm::from_images(img));
  }
  if (label.empty()) label = g.group().label() + " on cosets of a subgroup of order " + std::to_string(s.order());
  return PermGroup(index, std::move(gens), std::move(label));
}

PermGroup subgroup_group(const IndexedGroup& g, const Subgroup& s, std::string label) {
  return PermGroup(g.group().degree(), g.perms(s.generators), std::move(label));
}

// ---------------------------------------------------------------------------

PointSubset PointSubset::from_points(std::size_t degree, const std::vector<Point>& pts) {
  PointSubset s(degree);
  for (Point x : pts) {
    if (x >= degree) throw PermError("subset: point out of range");
    s.set(x);
  }
  return s;
}

std::size_t PointSubset::count() const {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<Point> PointSubset::points() const {
  std::vector<Point> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t x = words_[w];
    while (x) {
      out.push_back(static_cast<Point>(w * 64 + static_cast<std::size_t>(std::countr_zero(x))));
      x &= x - 1;
    }
  }
  return out;
}

PointSubset PointSubset::image_by_inverse(const Point* inv) const {
  PointSubset out(degree_);
  kernels::active().subset_image(words_.data(), inv, out.words_.data(), degree_);
  return out;
}

PointSubset PointSubset::image(const Perm& g) const {
  if (g.degree() != degree_) throw PermError("subset: degree mismatch");
  const Perm inv = g.inverse();
  return image_by_inverse(inv.data());
}

std::vector<PointSubset> set_orbit(const PermGroup& g, const PointSubset& s, std::size_t cap) {
  if (s.degree() != g.degree()) throw PermError("set orbit: degree mismatch");
  std::vector<Perm> invs;
  for (const Perm& x : g.generators()) invs.push_back(x.inverse());
  const std::size_t words = s.word_count();
  RowStore<std::uint64_t> store(words, words);
  std::vector<PointSubset> out{s};
  store.insert(s.words());
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const Perm& inv : invs) {
      PointSubset t = out[i].image_by_inverse(inv.data());
      if (store.insert(t.words()).second) {
        out.push_back(std::move(t));
        if (out.size() > cap) throw BudgetExceeded("set orbit exceeded cap " + std::to_string(cap));
      }
    }
  return out;
}

}  // namespace ftd
