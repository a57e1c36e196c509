#include "ftd/grouporders.hpp"

#include <algorithm>
#include <stdexcept>

namespace ftd {

const std::vector<NamedGroupOrder>& named_group_orders() {
  static const std::vector<NamedGroupOrder> table = {
      {"PSL_2(7)", Int(168), "2^3 * 3 * 7"},
      {"PSL_2(11)", Int(660), "2^2 * 3 * 5 * 11"},
      {"A6", Int(360), "2^3 * 3^2 * 5"},
      {"A6.2_3", Int(720), "2^4 * 3^2 * 5"},
      {"A7", Int(2520), "2^3 * 3^2 * 5 * 7"},
      {"PSL_3(4)", Int(20160), "2^6 * 3^2 * 5 * 7"},
      {"PSU_4(2)", Int(25920), "2^6 * 3^4 * 5"},
      {"PSU_4(3):2_2", Int(6531840), "2^8 * 3^6 * 5 * 7"},
      {"M11", Int(7920), "2^4 * 3^2 * 5 * 11"},
      {"M12", Int(95040), "2^6 * 3^3 * 5 * 11"},
      {"M22", Int(443520), "2^7 * 3^2 * 5 * 7 * 11"},
      {"J3", Int(50232960), "2^7 * 3^5 * 5 * 17 * 19"},
  };
  return table;
}

Int named_order(const std::string& name) {
  for (const auto& e : named_group_orders())
    if (e.name == name) return e.order;
  throw std::invalid_argument("no stored order for " + name);
}

namespace {

std::function<Int(const PrimePower&)> constant(const std::string& name) {
  const Int o = named_order(name);
  return [o](const PrimePower&) { return o; };
}

std::function<bool(const PrimePower&)> prime_mod(unsigned long mod, std::vector<unsigned long> residues) {
  return [mod, residues](const PrimePower& q) {
    if (q.f() != 1) return false;
    const unsigned long r = Int(q.value() % mod).get_ui();
    return std::find(residues.begin(), residues.end(), r) != residues.end();
  };
}

std::function<bool(const PrimePower&)> exactly(unsigned long value) {
  return [value](const PrimePower& q) { return q.value() == value; };
}

std::vector<SClassLine> build_lines() {
  std::vector<SClassLine> v;
  const Family L = Family::Linear, U = Family::Unitary;

  {
    auto c = prime_mod(7, {1, 2, 4});
    v.push_back({L, 1, 3, "PSL_2(7)", constant("PSL_2(7)"),
                 [c](const PrimePower& q) { return c(q) && q.value() != 2; }, {11},
                 "q = p = 1,2,4 mod 7, q != 2"});
  }
  v.push_back({L, 2, 3, "A6", constant("A6"), prime_mod(15, {1, 4}), {19}, "q = p = 1,4 mod 15"});
  v.push_back({L, 3, 3, "A6", constant("A6"),
               [](const PrimePower& q) {
                 if (q.f() != 2 || q.p() == 3) return false;
                 const unsigned long r = Int(q.p() % 5).get_ui();
                 return r == 2 || r == 3;
               },
               {4}, "q = p^2, p = 2,3 mod 5, p != 3"});
  v.push_back({L, 4, 4, "A7", constant("A7"), prime_mod(7, {1, 2, 4}), {2}, "q = p = 1,2,4 mod 7"});
  v.push_back({L, 5, 4, "PSU_4(2)", constant("PSU_4(2)"), prime_mod(6, {1}), {7}, "q = p = 1 mod 6"});
  v.push_back({L, 6, 5, "M11", constant("M11"), exactly(3), {3}, "q = 3"});
  v.push_back({L, 7, 6, "M12", constant("M12"), exactly(3), {3}, "q = 3"});
  v.push_back({L, 8, 6, "PSL_3(q)",
               [](const PrimePower& q) { return order_X(GroupSpec(Family::Linear, 3, q)); },
               [](const PrimePower& q) { return q.p() != 2; }, {}, "q odd"});

  v.push_back({U, 1, 3, "PSL_2(7)", constant("PSL_2(7)"), prime_mod(7, {3, 5, 6}), {3, 5, 13, 17, 19},
               "q = p = 3,5,6 mod 7"});
  v.push_back({U, 2, 3, "A6", constant("A6"), prime_mod(15, {11, 14}), {11, 29}, "q = p = 11,14 mod 15"});
  v.push_back({U, 3, 3, "A6.2_3", constant("A6.2_3"), exactly(5), {5}, "q = 5"});
  v.push_back({U, 4, 3, "A7", constant("A7"), exactly(5), {5}, "q = 5"});
  v.push_back({U, 5, 4, "A7", constant("A7"), prime_mod(7, {3, 5, 6}), {3, 5}, "q = p = 3,5,6 mod 7"});
  v.push_back({U, 6, 4, "PSL_3(4)", constant("PSL_3(4)"), exactly(3), {3}, "q = 3"});
  v.push_back({U, 7, 4, "PSU_4(2)", constant("PSU_4(2)"), prime_mod(6, {5}), {5, 11}, "q = p = 5 mod 6"});
  v.push_back({U, 8, 5, "PSL_2(11)", constant("PSL_2(11)"), prime_mod(11, {2, 6, 7, 8, 10}), {2},
               "q = p = 2,6,7,8,10 mod 11"});
  v.push_back({U, 9, 6, "M22", constant("M22"), exactly(2), {2}, "q = 2"});
  v.push_back({U, 10, 6, "PSU_4(3):2_2", constant("PSU_4(3):2_2"), exactly(2), {2}, "q = 2"});
  v.push_back({U, 11, 9, "J3", constant("J3"), exactly(2), {2}, "q = 2"});
  return v;
}

}  // namespace

const std::vector<SClassLine>& sclass_lines() {
  static const std::vector<SClassLine> lines = build_lines();
  return lines;
}

const SClassLine& sclass_line(Family family, int line) {
  for (const auto& l : sclass_lines())
    if (l.family == family && l.line == line) return l;
  throw std::invalid_argument("no S-class line " + std::to_string(line) + " for " + to_string(family));
}

bool sclass_q_bound(const SClassLine& line, const PrimePower& q) {
  const unsigned long n = static_cast<unsigned long>(line.n);
  const unsigned long e = line.family == Family::Linear ? n * n - 2 : n * n - 3;
  const Int h = line.h0Order(q);
  const Int rhs = 4 * Int(q.f()) * q.f() * Int(n * n) * h * h * h;
  return ipow(q.value(), e) < rhs;
}

std::vector<SubgroupCase> enumerate_cases(const GroupSpec& spec) {
  std::vector<SubgroupCase> out;
  const int n = spec.n();
  const bool lin = spec.family() == Family::Linear;
  const Int& q = spec.q().value();
  const Int& p = spec.p();
  auto add = [&](const SubgroupCase& sc) {
    try {
      validate_case(spec, sc);
      out.push_back(sc);
    } catch (const IncompatibleCase&) {
    }
  };

  for (int i = 1; 2 * i <= n; ++i) add(SubgroupCase::Pi(i));
  if (lin) {
    for (int i = 1; 2 * i < n; ++i) add(SubgroupCase::Pij(i));
    for (int i = 1; 2 * i < n; ++i) add(SubgroupCase::GLiGLni(i));
  } else {
    for (int i = 1; 2 * i < n; ++i) add(SubgroupCase::Ni(i));
  }

  for (int t = 2; t <= n; ++t) {
    if (n % t) continue;
    add(lin ? SubgroupCase::GLwr(n / t, t) : SubgroupCase::GUwr(n / t, t));
  }
  if (!lin) add(SubgroupCase::GLhalf());

  for (int t = 2; t <= n; ++t)
    if (n % t == 0) add(SubgroupCase::ExtField(n / t, t));

  for (int i = 2; i * i < n; ++i)
    if (n % i == 0) add(SubgroupCase::Tensor(i));

  for (unsigned t = 2; t <= spec.f(); ++t) {
    if (spec.f() % t || !is_prime(Int(t))) continue;
    const Int q0 = ipow(p, spec.f() / t);
    add(SubgroupCase::Subfield(q0.get_si(), static_cast<int>(t)));
  }

  if (!lin) {
    if (n % 2) add(SubgroupCase::UnitaryO(0));
    else {
      add(SubgroupCase::UnitaryO(1));
      add(SubgroupCase::UnitaryO(-1));
    }
    add(SubgroupCase::UnitarySp());
  }

  for (int t = 2; t <= n; ++t) {
    if (!is_prime(Int(t))) continue;
    int m = 0, x = 1;
    while (x < n) {
      x *= t;
      ++m;
    }
    if (x == n) add(SubgroupCase::Extraspecial(t, m));
  }

  for (int m = 3; m * m <= n; ++m) {
    int t = 0, x = 1;
    while (x < n) {
      x *= m;
      ++t;
    }
    if (x == n && t >= 2) add(SubgroupCase::TensorInduced(m, t));
  }

  if (lin) {
    add(SubgroupCase::Symplectic());
    if (n % 2) add(SubgroupCase::Orthogonal(0));
    else {
      add(SubgroupCase::Orthogonal(1));
      add(SubgroupCase::Orthogonal(-1));
    }
    if (spec.f() % 2 == 0) add(SubgroupCase::UnitaryForm(ipow(p, spec.f() / 2).get_si()));
  }

  for (const auto& line : sclass_lines()) {
    if (line.family != spec.family() || line.n != n) continue;
    if (!line.condition(spec.q())) continue;
    add(SubgroupCase::SLine(line.line));
  }
  (void)q;
  return out;
}

}  // namespace ftd
