#include "ftd/classical.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

namespace ftd {

std::string to_string(ActionVariant v) {
  switch (v) {
    case ActionVariant::Socle: return "socle";
    case ActionVariant::SocleExt2: return "socle.2";
    case ActionVariant::PGL: return "pgl";
    case ActionVariant::PGammaL: return "pgammal";
  }
  return "?";
}

ActionVariant parse_variant(const std::string& s) {
  if (s == "socle") return ActionVariant::Socle;
  if (s == "socle.2") return ActionVariant::SocleExt2;
  if (s == "pgl") return ActionVariant::PGL;
  if (s == "pgammal") return ActionVariant::PGammaL;
  throw std::invalid_argument("unknown action variant '" + s + "'");
}

namespace {

using Mat = std::vector<Vec>;

struct PointIndex {
  unsigned q;
  std::unordered_map<std::uint64_t, Point> index;

  PointIndex(const std::vector<Vec>& pts, unsigned q_) : q(q_) {
    for (std::size_t i = 0; i < pts.size(); ++i) index.emplace(key(pts[i]), static_cast<Point>(i));
  }
  std::uint64_t key(const Vec& v) const {
    std::uint64_t k = 0;
    for (auto it = v.rbegin(); it != v.rend(); ++it) k = k * q + *it;
    return k;
  }
  Point at(const Vec& v) const {
    auto it = index.find(key(v));
    if (it == index.end()) throw std::logic_error("classical action: image is not a listed point");
    return it->second;
  }
};

void normalize(Vec& v, const Field& f) {
  for (Field::Elt x : v)
    if (x != 0) {
      const Field::Elt s = f.inv(x);
      for (auto& y : v) y = f.mul(y, s);
      return;
    }
  throw std::logic_error("classical action: zero vector");
}

Vec row_times(const Vec& x, const Mat& m, const Field& f) {
  const std::size_t n = x.size();
  Vec y(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) y[j] = f.add(y[j], f.mul(x[i], m[i][j]));
  }
  return y;
}

Mat identity(unsigned n) {
  Mat m(n, Vec(n, 0));
  for (unsigned i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat inverse_transpose(const Mat& m, const Field& f) {
  const std::size_t n = m.size();
  Mat a = m, inv = identity(static_cast<unsigned>(n));
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw std::logic_error("classical action: singular matrix");
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    const Field::Elt s = f.inv(a[c][c]);
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] = f.mul(a[c][j], s);
      inv[c][j] = f.mul(inv[c][j], s);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Field::Elt t = a[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] = f.sub(a[r][j], f.mul(t, a[c][j]));
        inv[r][j] = f.sub(inv[r][j], f.mul(t, inv[c][j]));
      }
    }
  }
  Mat t(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = inv[j][i];
  return t;
}

using PointMap = std::function<Vec(const Vec&)>;

std::vector<Point> induced(const std::vector<Vec>& pts, const PointIndex& idx, const Field& f, const PointMap& map) {
  std::vector<Point> img(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Vec y = map(pts[i]);
    normalize(y, f);
    img[i] = idx.at(y);
  }
  return img;
}

// Keeps a candidate only if it is not already in the group generated so far.
void add_if_new(std::vector<Perm>& gens, std::unique_ptr<StabilizerChain>& chain, const Perm& cand) {
  if (cand.is_identity()) return;
  if (chain && chain->contains(cand)) return;
  gens.push_back(cand);
  chain = std::make_unique<StabilizerChain>(cand.degree(), gens);
}

std::string group_name(const std::string& fam, unsigned n, unsigned long q) {
  return fam + "(" + std::to_string(n) + "," + std::to_string(q) + ")";
}

}  // namespace

std::vector<Vec> projective_points(unsigned n, const Field& f) {
  std::vector<Vec> out;
  const unsigned q = f.q();
  // Leading 1 at position i, zeros before it, anything after.
  for (unsigned lead = 0; lead < n; ++lead) {
    const unsigned free = n - lead - 1;
    std::uint64_t total = 1;
    for (unsigned j = 0; j < free; ++j) total *= q;
    for (std::uint64_t c = 0; c < total; ++c) {
      Vec v(n, 0);
      v[lead] = 1;
      std::uint64_t x = c;
      for (unsigned j = n; j-- > lead + 1;) {
        v[j] = static_cast<Field::Elt>(x % q);
        x /= q;
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::vector<Vec> isotropic_points(unsigned n, const Field& f2) {
  const unsigned f = f2.f() / 2;
  std::vector<Vec> out;
  for (Vec& v : projective_points(n, f2)) {
    Field::Elt s = 0;
    for (unsigned i = 0; i < n; ++i) s = f2.add(s, f2.mul(v[i], f2.frobenius(v[n - 1 - i], f)));
    if (s == 0) out.push_back(std::move(v));
  }
  return out;
}

PermGroup linear_action(unsigned n, unsigned long q, ActionVariant variant) {
  if (n < 2) throw std::invalid_argument("linear action: n must be at least 2");
  const PrimePower pp = PrimePower::from_value(Int(q));
  const Field F(static_cast<unsigned>(pp.p().get_ui()), pp.f());
  const auto pts = projective_points(n, F);
  const std::size_t N = pts.size();
  const bool dual = variant == ActionVariant::SocleExt2;
  if (dual && n == 2) throw std::invalid_argument("linear action: socle.2 needs n >= 3");
  const std::size_t degree = dual ? 2 * N : N;
  if (degree > kClassicalDegreeLimit) throw BudgetExceeded("linear action: degree " + std::to_string(degree) + " too large");
  const PointIndex idx(pts, F.q());

  auto matrix_perm = [&](const Mat& m) {
    std::vector<Point> img = induced(pts, idx, F, [&](const Vec& x) { return row_times(x, m, F); });
    if (dual) {
      const Mat it = inverse_transpose(m, F);
      const auto h = induced(pts, idx, F, [&](const Vec& x) { return row_times(x, it, F); });
      for (Point y : h) img.push_back(static_cast<Point>(y + N));
    }
    return Perm::from_images(img);
  };

  std::vector<Perm> gens;
  std::unique_ptr<StabilizerChain> chain;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      if (i == j) continue;
      for (unsigned k = 0; k < F.f(); ++k) {
        Mat m = identity(n);
        m[i][j] = F.exp(k);
        add_if_new(gens, chain, matrix_perm(m));
      }
    }
  std::string label = group_name("PSL", n, q);
  if (variant == ActionVariant::PGL || variant == ActionVariant::PGammaL) {
    Mat d = identity(n);
    d[0][0] = F.primitive();
    add_if_new(gens, chain, matrix_perm(d));
    label = group_name("PGL", n, q);
  }
  if (variant == ActionVariant::PGammaL) {
    add_if_new(gens, chain, Perm::from_images(induced(pts, idx, F, [&](const Vec& x) {
                 Vec y(x.size());
                 for (std::size_t i = 0; i < x.size(); ++i) y[i] = F.frobenius(x[i]);
                 return y;
               })));
    label = group_name("PGammaL", n, q);
  }
  if (dual) {
    std::vector<Point> tau(degree);
    for (std::size_t i = 0; i < N; ++i) {
      tau[i] = static_cast<Point>(i + N);
      tau[i + N] = static_cast<Point>(i);
    }
    gens.push_back(Perm::from_images(tau));
    label += ":2 on " + std::to_string(N) + " points and " + std::to_string(N) + " hyperplanes";
  } else {
    label += " on " + std::to_string(N) + " points";
  }
  return PermGroup(degree, std::move(gens), std::move(label));
}

PermGroup unitary_action(unsigned n, unsigned long q, ActionVariant variant) {
  if (n != 3) throw std::invalid_argument("unitary action: only n = 3 is supported");
  if (variant == ActionVariant::PGL || variant == ActionVariant::PGammaL)
    throw std::invalid_argument("unitary action: variant must be socle or socle.2");
  const PrimePower pp = PrimePower::from_value(Int(q));
  const unsigned f = pp.f();
  const Field F(static_cast<unsigned>(pp.p().get_ui()), 2 * f);
  const auto pts = isotropic_points(n, F);
  if (pts.size() > kClassicalDegreeLimit) throw BudgetExceeded("unitary action: degree too large");
  const PointIndex idx(pts, F.q());
  auto conj = [&](Field::Elt a) { return F.frobenius(a, f); };
  auto form = [&](const Vec& x, const Vec& y) {
    Field::Elt s = 0;
    for (unsigned i = 0; i < n; ++i) s = F.add(s, F.mul(x[i], conj(y[n - 1 - i])));
    return s;
  };
  std::vector<Field::Elt> traceless;
  for (Field::Elt a = 1; a < F.q(); ++a)
    if (F.add(a, conj(a)) == 0) traceless.push_back(a);

  std::vector<Perm> gens;
  std::unique_ptr<StabilizerChain> chain;
  // Unitary transvections x -> x + a (x, v) v, v isotropic, a + a^q = 0.
  for (const Vec& v : pts)
    for (Field::Elt a : traceless)
      add_if_new(gens, chain, Perm::from_images(induced(pts, idx, F, [&](const Vec& x) {
                   const Field::Elt c = F.mul(a, form(x, v));
                   Vec y = x;
                   for (unsigned i = 0; i < n; ++i) y[i] = F.add(y[i], F.mul(c, v[i]));
                   return y;
                 })));
  std::string label = group_name("PSU", n, q);
  if (variant == ActionVariant::SocleExt2) {
    gens.push_back(Perm::from_images(induced(pts, idx, F, [&](const Vec& x) {
      Vec y(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) y[i] = F.frobenius(x[i]);
      return y;
    })));
    label += ":2";
  }
  label += " on " + std::to_string(pts.size()) + " isotropic points";
  return PermGroup(pts.size(), std::move(gens), std::move(label));
}

PermGroup classical_action(const GroupSpec& spec, ActionVariant variant) {
  const unsigned long q = spec.q().as_ulong();
  if (spec.family() == Family::Linear) return linear_action(static_cast<unsigned>(spec.n()), q, variant);
  return unitary_action(static_cast<unsigned>(spec.n()), q, variant);
}

PermGroup alternating_action(unsigned n) {
  if (n < 3) throw std::invalid_argument("alternating action: n must be at least 3");
  std::vector<Perm> gens{Perm::from_cycles(n, {{0, 1, 2}})};
  if (n > 3) {
    std::vector<Point> cyc;
    for (unsigned i = (n % 2 ? 0 : 1); i < n; ++i) cyc.push_back(static_cast<Point>(i));
    gens.push_back(Perm::from_cycles(n, {cyc}));
  }
  return PermGroup(n, std::move(gens), "A" + std::to_string(n) + " on " + std::to_string(n) + " points");
}

PermGroup symmetric_action(unsigned n) {
  if (n < 2) throw std::invalid_argument("symmetric action: n must be at least 2");
  std::vector<Point> cyc;
  for (unsigned i = 0; i < n; ++i) cyc.push_back(static_cast<Point>(i));
  std::vector<Perm> gens{Perm::from_cycles(n, {{0, 1}})};
  if (n > 2) gens.push_back(Perm::from_cycles(n, {cyc}));
  return PermGroup(n, std::move(gens), "S" + std::to_string(n) + " on " + std::to_string(n) + " points");
}

PermGroup k_subset_action(const PermGroup& g, unsigned k) {
  const std::size_t n = g.degree();
  if (k == 0 || k > n) throw std::invalid_argument("k-subset action: bad k");
  std::vector<std::vector<Point>> subsets;
  std::vector<Point> c(k);
  for (unsigned i = 0; i < k; ++i) c[i] = static_cast<Point>(i);
  // Colex order: advance the lowest position that can move.
  while (true) {
    subsets.push_back(c);
    if (subsets.size() > kMaxDegree) throw BudgetExceeded("k-subset action: too many subsets");
    unsigned i = 0;
    while (i < k && std::size_t{c[i]} + 1 == (i + 1 < k ? std::size_t{c[i + 1]} : n)) ++i;
    if (i == k) break;
    ++c[i];
    for (unsigned j = 0; j < i; ++j) c[j] = static_cast<Point>(j);
  }
  std::map<std::vector<Point>, Point> index;
  for (std::size_t i = 0; i < subsets.size(); ++i) index.emplace(subsets[i], static_cast<Point>(i));
  std::vector<Perm> gens;
  for (const Perm& p : g.generators()) {
    std::vector<Point> img(subsets.size());
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      std::vector<Point> s;
      for (Point x : subsets[i]) s.push_back(p[x]);
      std::sort(s.begin(), s.end());
      img[i] = index.at(s);
    }
    gens.push_back(Perm::from_images(img));
  }
  return PermGroup(subsets.size(), std::move(gens),
                   g.label() + " on " + std::to_string(k) + "-subsets (" + std::to_string(subsets.size()) + " points)");
}

}  // namespace ftd
