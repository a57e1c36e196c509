#pragma once

// Permutation groups given by generators: breadth-first element enumeration,
// orbits and suborbits, stabilizers, coset actions, set orbits and a
// complete-or-fail search for subgroups of a given order.

#include "ftd/exactmath.hpp"
#include "ftd/permutation.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace ftd {

inline constexpr std::size_t kDefaultElementCap = 10'000'000;

/// A configured limit was hit; results would be partial.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Subgroup enumeration gave up before it was complete.
class IncompleteEnumeration : public BudgetExceeded {
public:
  using BudgetExceeded::BudgetExceeded;
};

/// Base and strong generating set built by deterministic Schreier-Sims.
class StabilizerChain {
public:
  StabilizerChain(std::size_t degree, const std::vector<Perm>& gens, const std::vector<Point>& initialBase = {});

  std::size_t degree() const { return degree_; }
  const std::vector<Point>& base() const { return base_; }
  const std::vector<Perm>& strong_generators() const { return strong_; }
  Int order() const;
  bool contains(const Perm& g) const;
  /// Strong generators fixing base[0..i-1] pointwise.
  std::vector<Perm> stabilizer_generators(std::size_t i) const;
  std::vector<std::size_t> basic_orbit_sizes() const;

private:
  struct Level {
    Point point;
    std::vector<int> transversal;  // index into strong_ of the edge label, -1 unreached, -2 root
    std::vector<Point> orbit;
    std::size_t version = SIZE_MAX;
  };
  void refresh(std::size_t i);
  Perm transversal_element(std::size_t i, Point x) const;
  // Returns the residue and the level where sifting stopped.
  std::pair<Perm, std::size_t> strip(Perm g, std::size_t from) const;
  void build();

  std::size_t degree_;
  std::vector<Point> base_;
  std::vector<Perm> strong_;
  std::vector<Perm> strongInv_;
  std::vector<Level> levels_;
  std::size_t version_ = 0;
};

class PermGroup {
public:
  PermGroup(std::size_t degree, std::vector<Perm> generators, std::string label = {});

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::string& label() const { return label_; }
  void set_label(std::string s) { label_ = std::move(s); }

  /// Complete element set by breadth-first closure; identity is index 0.
  /// Cached after the first call. Throws BudgetExceeded past cap.
  const ElementStore& elements(std::size_t cap = kDefaultElementCap) const;
  bool has_elements() const;

  /// Element count when enumerated, otherwise from a stabilizer chain.
  Int order() const;
  const StabilizerChain& chain() const;
  bool contains(const Perm& g) const { return chain().contains(g); }

  std::vector<Point> orbit(Point x) const;
  /// Orbits in order of their least point; each orbit sorted.
  std::vector<std::vector<Point>> orbits() const;
  bool is_transitive() const;
  /// Orbit lengths of the stabilizer of base, sorted ascending. Throws
  /// std::invalid_argument when the group is not transitive.
  std::vector<std::size_t> suborbits(Point base) const;
  PermGroup point_stabilizer(Point x) const;

private:
  struct Cache {
    std::mutex mu;
    std::unique_ptr<ElementStore> elements;
    std::unique_ptr<StabilizerChain> chain;
  };
  std::size_t degree_;
  std::vector<Perm> gens_;
  std::string label_;
  std::shared_ptr<Cache> cache_;
};

/// Orbits of the group generated by gens on {0..degree-1}.
std::vector<std::vector<Point>> orbits_of(std::size_t degree, const std::vector<Perm>& gens);

// ---------------------------------------------------------------------------
// Subgroups as sets of element indices into an enumerated parent group.

struct Subgroup {
  std::vector<std::uint32_t> elements;    // sorted element indices
  std::vector<std::uint32_t> generators;  // element indices
  std::size_t order() const { return elements.size(); }
  bool contains(std::uint32_t e) const;
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements == b.elements; }
};

/// Arithmetic on element indices of an enumerated group.
class IndexedGroup {
public:
  explicit IndexedGroup(const PermGroup& g);
  /// Keeps a pointer to g, which must outlive this object.
  IndexedGroup(PermGroup&&) = delete;

  const PermGroup& group() const { return *g_; }
  const ElementStore& store() const { return *store_; }
  std::size_t size() const { return store_->size(); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
  std::uint32_t conj(std::uint32_t a, std::uint32_t by) const { return mul(mul(inv(by), a), by); }
  std::uint32_t element_order(std::uint32_t a) const { return order_[a]; }
  std::uint32_t index_of(const Perm& p) const;
  std::vector<std::uint32_t> generator_indices() const;

  /// Closure of gens; nullopt once it grows beyond limit elements.
  std::optional<Subgroup> closure(std::vector<std::uint32_t> gens, std::size_t limit = SIZE_MAX) const;
  Subgroup whole() const;
  /// N_G(S) (computed over all elements of the ambient group).
  Subgroup normalizer(const Subgroup& s) const;
  Subgroup conjugate(const Subgroup& s, std::uint32_t by) const;
  /// True iff some element of `over` conjugates a into b.
  bool conjugate_in(const Subgroup& a, const Subgroup& b, const Subgroup& over) const;
  Subgroup sylow(const Int& p) const;
  std::vector<Perm> perms(const std::vector<std::uint32_t>& idx) const;

private:
  const PermGroup* g_;
  const ElementStore* store_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint32_t> order_;
};

struct SubgroupSearchOptions {
  /// Upper bound on subgroup closures attempted.
  std::uint64_t closureBudget = 2'000'000;
};

struct SubgroupSearchStats {
  std::string prime;          // prime used to anchor the search
  std::string anchorOrder;    // order of the anchor p-subgroups
  std::size_t anchors = 0;    // anchor classes
  bool forcedNormal = false;  // the Sylow p-subgroup is normal in every candidate
  bool anchorIsSylow = false;
  std::uint64_t closures = 0;
};

/// One representative per conjugacy class of subgroups of order m. Complete
/// or throws IncompleteEnumeration.
std::vector<Subgroup> subgroups_of_order(const IndexedGroup& g, const Int& m, const SubgroupSearchOptions& opt = {},
                                         SubgroupSearchStats* stats = nullptr);

/// Action of the group on the right cosets of s (degree |G:S|).
PermGroup coset_action(const IndexedGroup& g, const Subgroup& s, std::string label = {});

/// The subgroup as a PermGroup of the same degree, generated by its generators.
PermGroup subgroup_group(const IndexedGroup& g, const Subgroup& s, std::string label = {});

// ---------------------------------------------------------------------------
// Point sets.

class PointSubset {
public:
  PointSubset() = default;
  explicit PointSubset(std::size_t degree) : degree_(degree), words_((degree + 63) / 64, 0) {}
  static PointSubset from_points(std::size_t degree, const std::vector<Point>& pts);

  std::size_t degree() const { return degree_; }
  std::size_t word_count() const { return words_.size(); }
  const std::uint64_t* words() const { return words_.data(); }
  std::uint64_t* words() { return words_.data(); }
  bool test(std::size_t x) const { return (words_[x >> 6] >> (x & 63)) & 1U; }
  void set(std::size_t x) { words_[x >> 6] |= 1ULL << (x & 63); }
  std::size_t count() const;
  std::vector<Point> points() const;
  /// Image under g: {x^g : x in this}.
  PointSubset image(const Perm& g) const;
  /// Image given the inverse permutation's images (the kernel form).
  PointSubset image_by_inverse(const Point* inv) const;

  friend bool operator==(const PointSubset&, const PointSubset&) = default;
  /// Lexicographic order on sorted point lists.
  friend bool operator<(const PointSubset& a, const PointSubset& b) { return a.points() < b.points(); }

private:
  std::size_t degree_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Orbit of a point set under the generators, in breadth-first order
/// starting with the subset itself. Throws BudgetExceeded beyond cap.
std::vector<PointSubset> set_orbit(const PermGroup& g, const PointSubset& s, std::size_t cap = 1'000'000);

// ---------------------------------------------------------------------------
// Generator files: "degree N" then one line of N images per generator.

PermGroup parse_action(const std::string& text, std::string label = {});
PermGroup load_action(const std::string& path);
std::string format_action(const PermGroup& g);

}  // namespace ftd
