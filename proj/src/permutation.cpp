#include "ftd/permutation.hpp"

#include "ftd/kernels.hpp"

#include <cstring>
#include <numeric>
#include <sstream>

namespace ftd {

Perm::Perm(std::size_t degree) : img_(degree + 1, 0) {
  if (degree > kMaxDegree) throw PermError("perm: degree too large");
  std::iota(img_.begin(), img_.end() - 1, Point{0});
}

Perm Perm::from_images(std::span<const Point> images) {
  const std::size_t n = images.size();
  if (n > kMaxDegree) throw PermError("perm: degree too large");
  std::vector<char> seen(n, 0);
  for (Point x : images) {
    if (x >= n) throw PermError("perm: image " + std::to_string(x) + " out of range");
    if (seen[x]) throw PermError("perm: repeated image " + std::to_string(x));
    seen[x] = 1;
  }
  Perm p;
  p.img_.assign(images.begin(), images.end());
  p.img_.push_back(0);
  return p;
}

Perm Perm::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  Perm p(degree);
  std::vector<char> used(degree, 0);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= degree || used[c[i]]) throw PermError("perm: bad cycle");
      used[c[i]] = 1;
      p.img_[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return p;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm r(degree());
  for (std::size_t i = 0; i < degree(); ++i) r.img_[img_[i]] = static_cast<Point>(i);
  return r;
}

std::uint64_t Perm::order() const {
  std::vector<char> seen(degree(), 0);
  std::uint64_t o = 1;
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      ++len;
    }
    o = std::lcm(o, len);
  }
  return o;
}

std::string Perm::to_cycle_string() const {
  std::ostringstream os;
  std::vector<char> seen(degree(), 0);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    os << "(";
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      os << j << (seen[img_[j]] ? "" : " ");
    }
    os << ")";
  }
  const std::string s = os.str();
  return s.empty() ? "()" : s;
}

void compose_into(const Point* a, const Point* b, Point* out, std::size_t degree) {
  kernels::active().compose(a, b, out, degree);
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw PermError("perm: degree mismatch");
  Perm r(a.degree());
  compose_into(a.data(), b.data(), r.data(), a.degree());
  return r;
}

// ---------------------------------------------------------------------------

template <class Word>
RowStore<Word>::RowStore(std::size_t width, std::size_t stride) : width_(width), stride_(stride) {
  table_.assign(64, UINT32_MAX);
}

template <class Word>
std::uint64_t RowStore<Word>::hash(const Word* r) const {
  // FNV-1a over the words, finished with a 64-bit mixer.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::size_t i = 0; i < width_; ++i) {
    h ^= static_cast<std::uint64_t>(r[i]);
    h *= 0x100000001b3ULL;
  }
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  return h;
}

template <class Word>
std::optional<std::uint32_t> RowStore<Word>::find(const Word* r) const {
  const std::size_t mask = table_.size() - 1;
  for (std::size_t b = hash(r) & mask;; b = (b + 1) & mask) {
    const std::uint32_t idx = table_[b];
    if (idx == UINT32_MAX) return std::nullopt;
    if (std::memcmp(row(idx), r, width_ * sizeof(Word)) == 0) return idx;
  }
}

template <class Word>
void RowStore<Word>::rehash(std::size_t buckets) {
  table_.assign(buckets, UINT32_MAX);
  const std::size_t mask = buckets - 1;
  for (std::uint32_t i = 0; i < count_; ++i) {
    std::size_t b = hash(row(i)) & mask;
    while (table_[b] != UINT32_MAX) b = (b + 1) & mask;
    table_[b] = i;
  }
}

template <class Word>
void RowStore<Word>::reserve(std::size_t rows) {
  data_.reserve(rows * stride_);
  std::size_t buckets = table_.size();
  while (buckets < 2 * rows) buckets *= 2;
  if (buckets != table_.size()) rehash(buckets);
}

template <class Word>
std::pair<std::uint32_t, bool> RowStore<Word>::insert(const Word* r) {
  if (auto f = find(r)) return {*f, false};
  if (count_ >= UINT32_MAX - 1) throw std::length_error("row store full");
  if (2 * (count_ + 1) > table_.size()) rehash(table_.size() * 2);
  const std::uint32_t idx = static_cast<std::uint32_t>(count_);
  data_.insert(data_.end(), r, r + width_);
  data_.resize(data_.size() + (stride_ - width_), Word{0});
  ++count_;
  const std::size_t mask = table_.size() - 1;
  std::size_t b = hash(r) & mask;
  while (table_[b] != UINT32_MAX) b = (b + 1) & mask;
  table_[b] = idx;
  return {idx, true};
}

template class RowStore<std::uint16_t>;
template class RowStore<std::uint64_t>;

Perm ElementStore::perm(std::size_t i) const {
  return Perm::from_images(std::span<const Point>((*this)[i], degree_));
}

}  // namespace ftd
