#pragma once

// Permutations on {0..n-1} stored as 16-bit image arrays, and flat hashed
// stores of fixed-width rows (permutations, point-set bitsets).
//
// Convention: p * q applies p first, so (p * q)[i] = q[p[i]] and points are
// acted on from the right.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ftd {

using Point = std::uint16_t;
inline constexpr std::size_t kMaxDegree = 65535;

class PermError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class Perm {
public:
  Perm() = default;
  /// Identity of the given degree.
  explicit Perm(std::size_t degree);
  /// Validates that images is a bijection.
  static Perm from_images(std::span<const Point> images);
  static Perm from_images(std::initializer_list<Point> images) {
    return from_images(std::span<const Point>(images.begin(), images.size()));
  }
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return img_.empty() ? 0 : img_.size() - 1; }
  Point operator[](std::size_t i) const { return img_[i]; }
  Point& operator[](std::size_t i) { return img_[i]; }
  /// Image array with one trailing pad entry (kept at 0) so gathers may read
  /// one element past the end.
  const Point* data() const { return img_.data(); }
  Point* data() { return img_.data(); }
  std::span<const Point> images() const { return {img_.data(), degree()}; }

  bool is_identity() const;
  Perm inverse() const;
  /// Least common multiple of the cycle lengths.
  std::uint64_t order() const;
  std::string to_cycle_string() const;

  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

private:
  std::vector<Point> img_;
};

/// out = a * b using the active kernel table.
void compose_into(const Point* a, const Point* b, Point* out, std::size_t degree);

/// Open-addressed hash set of fixed-width rows with stable insertion indices.
/// Each row occupies `stride` words; only the first `width` take part in
/// hashing and equality (the rest is padding).
template <class Word>
class RowStore {
public:
  RowStore(std::size_t width, std::size_t stride);

  std::size_t width() const { return width_; }
  std::size_t stride() const { return stride_; }
  std::size_t size() const { return count_; }
  const Word* row(std::size_t i) const { return data_.data() + i * stride_; }

  /// Index of an equal row, if present.
  std::optional<std::uint32_t> find(const Word* r) const;
  /// Inserts a copy; returns (index, inserted).
  std::pair<std::uint32_t, bool> insert(const Word* r);
  void reserve(std::size_t rows);

private:
  std::uint64_t hash(const Word* r) const;
  void rehash(std::size_t buckets);

  std::size_t width_, stride_, count_ = 0;
  std::vector<Word> data_;
  std::vector<std::uint32_t> table_;
};

extern template class RowStore<std::uint16_t>;
extern template class RowStore<std::uint64_t>;

/// Distinct permutations of one degree, padded for the gather kernels.
class ElementStore {
public:
  explicit ElementStore(std::size_t degree) : degree_(degree), rows_(degree, degree + 1) {}

  std::size_t degree() const { return degree_; }
  std::size_t size() const { return rows_.size(); }
  const Point* operator[](std::size_t i) const { return rows_.row(i); }
  std::optional<std::uint32_t> find(const Point* p) const { return rows_.find(p); }
  std::pair<std::uint32_t, bool> insert(const Point* p) { return rows_.insert(p); }
  void reserve(std::size_t n) { rows_.reserve(n); }
  Perm perm(std::size_t i) const;

private:
  std::size_t degree_;
  RowStore<Point> rows_;
};

}  // namespace ftd
