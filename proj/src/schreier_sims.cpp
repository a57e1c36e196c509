// Deterministic Schreier-Sims. Used for group orders beyond the enumeration
// cap, membership tests, and stabilizer generators; the groups involved are
// small enough that explicit transversals are the simplest option.

#include "ftd/permgroup.hpp"

#include <algorithm>

namespace ftd {

namespace {

bool fixes_all(const Perm& g, const std::vector<Point>& pts, std::size_t upto) {
  for (std::size_t i = 0; i < upto; ++i)
    if (g[pts[i]] != pts[i]) return false;
  return true;
}

Point first_moved(const Perm& g) {
  for (std::size_t i = 0; i < g.degree(); ++i)
    if (g[i] != i) return static_cast<Point>(i);
  return 0;
}

}  // namespace

StabilizerChain::StabilizerChain(std::size_t degree, const std::vector<Perm>& gens,
                                 const std::vector<Point>& initialBase)
    : degree_(degree), base_(initialBase) {
  for (const Perm& g : gens) {
    if (g.degree() != degree) throw PermError("stabilizer chain: generator degree mismatch");
    if (!g.is_identity()) {
      strong_.push_back(g);
      strongInv_.push_back(g.inverse());
    }
  }
  for (Point b : base_)
    if (b >= degree) throw PermError("stabilizer chain: base point out of range");
  for (const Perm& s : strong_)
    if (fixes_all(s, base_, base_.size())) base_.push_back(first_moved(s));
  build();
}

void StabilizerChain::refresh(std::size_t i) {
  Level& L = levels_[i];
  if (L.version == version_) return;
  L.point = base_[i];
  L.transversal.assign(degree_, -1);
  L.orbit.assign(1, L.point);
  L.transversal[L.point] = -2;
  std::vector<int> gensIdx;
  for (std::size_t s = 0; s < strong_.size(); ++s)
    if (fixes_all(strong_[s], base_, i)) gensIdx.push_back(static_cast<int>(s));
  for (std::size_t pos = 0; pos < L.orbit.size(); ++pos) {
    const Point x = L.orbit[pos];
    for (int s : gensIdx) {
      const Point y = strong_[s][x];
      if (L.transversal[y] == -1) {
        L.transversal[y] = s;
        L.orbit.push_back(y);
      }
    }
  }
  L.version = version_;
}

Perm StabilizerChain::transversal_element(std::size_t i, Point x) const {
  const Level& L = levels_[i];
  std::vector<int> path;
  while (L.transversal[x] != -2) {
    const int s = L.transversal[x];
    path.push_back(s);
    x = strongInv_[s][x];  // step back along the Schreier tree
  }
  Perm u(degree_);
  for (auto it = path.rbegin(); it != path.rend(); ++it) u = u * strong_[*it];
  return u;
}

std::pair<Perm, std::size_t> StabilizerChain::strip(Perm g, std::size_t from) const {
  for (std::size_t l = from; l < base_.size(); ++l) {
    const Point x = g[base_[l]];
    if (levels_[l].transversal[x] == -1) return {std::move(g), l};
    g = g * transversal_element(l, x).inverse();
  }
  return {std::move(g), base_.size()};
}

void StabilizerChain::build() {
  levels_.assign(base_.size(), Level{});
  if (base_.empty()) return;
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(base_.size()) - 1;
  while (i >= 0) {
    for (std::size_t l = static_cast<std::size_t>(i); l < base_.size(); ++l) refresh(l);
    const Level& L = levels_[i];
    std::vector<int> gensIdx;
    for (std::size_t s = 0; s < strong_.size(); ++s)
      if (fixes_all(strong_[s], base_, static_cast<std::size_t>(i))) gensIdx.push_back(static_cast<int>(s));
    bool added = false;
    for (std::size_t pos = 0; !added && pos < L.orbit.size(); ++pos) {
      const Point x = L.orbit[pos];
      const Perm ux = transversal_element(static_cast<std::size_t>(i), x);
      for (int s : gensIdx) {
        const Point y = strong_[s][x];
        Perm schreier = ux * strong_[s] * transversal_element(static_cast<std::size_t>(i), y).inverse();
        auto [h, j] = strip(std::move(schreier), static_cast<std::size_t>(i) + 1);
        if (h.is_identity()) continue;
        if (j == base_.size()) {
          base_.push_back(first_moved(h));
          levels_.push_back(Level{});
        }
        strongInv_.push_back(h.inverse());
        strong_.push_back(std::move(h));
        ++version_;
        i = static_cast<std::ptrdiff_t>(j);
        added = true;
        break;
      }
    }
    if (!added) --i;
  }
  for (std::size_t l = 0; l < base_.size(); ++l) refresh(l);
}

Int StabilizerChain::order() const {
  Int o = 1;
  for (const Level& L : levels_) o *= static_cast<unsigned long>(L.orbit.size());
  return o;
}

bool StabilizerChain::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  auto [h, j] = strip(g, 0);
  return j == base_.size() && h.is_identity();
}

std::vector<Perm> StabilizerChain::stabilizer_generators(std::size_t i) const {
  std::vector<Perm> out;
  for (const Perm& s : strong_)
    if (fixes_all(s, base_, std::min(i, base_.size()))) out.push_back(s);
  return out;
}

std::vector<std::size_t> StabilizerChain::basic_orbit_sizes() const {
  std::vector<std::size_t> out;
  for (const Level& L : levels_) out.push_back(L.orbit.size());
  return out;
}

}  // namespace ftd
