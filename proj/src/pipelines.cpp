#include "pipelines.hpp"

#include "ftd/builtin.hpp"
#include "ftd/classical.hpp"

#include <numeric>

namespace ftd::detail {

namespace {

Int qpow(const Int& q, long e) { return ipow(q, static_cast<unsigned long>(e)); }

Int signed_term(const Int& q, long e) {
  // q^e - (-1)^e
  return e % 2 == 0 ? Int(qpow(q, e) - 1) : Int(qpow(q, e) + 1);
}

Refinement subdegree(std::string formula, const Int& s) {
  return {"subdegree", "r* divides the subdegree s = " + std::move(formula), s, {{"s", s.get_str()}}};
}

Refinement two_point(const std::string& nName, const Int& orderN, const CaseOrders& o) {
  const Int div = stabilizer_divisor(o.orderOut, o.orderH0, orderN);
  return {"two-point-stabilizer",
          "a subgroup N = " + nName + " fixes two points, so r* divides |Out||H0|/|N|",
          div,
          {{"|N|", orderN.get_str()}, {"|Out||H0|/|N|", div.get_str()}}};
}

}  // namespace

std::vector<Refinement> refinements(const GroupSpec& spec, const SubgroupCase& sc, const CaseOrders& o) {
  std::vector<Refinement> out;
  const Int& q = spec.q().value();
  const long n = spec.n();
  const bool lin = spec.family() == Family::Linear;
  if (lin) {
    switch (sc.kind) {
      case CaseKind::C1_Pi:
        if (sc.i >= 2)
          out.push_back(subdegree("q(q^i-1)(q^(n-i)-1)/(q-1)^2",
                                  q * (qpow(q, sc.i) - 1) * (qpow(q, n - sc.i) - 1) / ((q - 1) * (q - 1))));
        break;
      case CaseKind::C1_Pij:
        out.push_back(subdegree("2q(q^(n-2i)-1)(q^i-1)/(q-1)^2",
                                2 * q * (qpow(q, n - 2 * sc.i) - 1) * (qpow(q, sc.i) - 1) / ((q - 1) * (q - 1))));
        break;
      case CaseKind::C1_GLiGLni:
        // Antiflags (U, W) with U' = U and W' - W of rank one, together with
        // their images under the graph automorphism, form one suborbit.
        out.push_back(subdegree("2(q^i-1)(q^(n-i)-1)/(q-1)",
                                2 * (qpow(q, sc.i) - 1) * (qpow(q, n - sc.i) - 1) / (q - 1)));
        break;
      case CaseKind::C2_GLwr:
        if (sc.t == 2)
          out.push_back(subdegree("4q^(2(m-1))(q^m-1)^2/(q-1)^2",
                                  4 * qpow(q, 2 * (sc.m - 1)) * (qpow(q, sc.m) - 1) * (qpow(q, sc.m) - 1) /
                                      ((q - 1) * (q - 1))));
        break;
      case CaseKind::C5_subfield:
        if (sc.t == 2 && n - 2 >= 2)
          out.push_back(two_point("SL_" + std::to_string(n - 2) + "(q0)",
                                  order_SL(static_cast<unsigned>(n - 2), Int(sc.q0)), o));
        break;
      case CaseKind::C8_Sp:
        if (n == 4 && q == 2) {
          // PSL_4(2) = A8 acting on the 28 pairs of an 8-set; read the
          // subdegrees off the concrete action.
          const PermGroup g = k_subset_action(alternating_action(8), 2);
          const auto sub = g.suborbits(0);
          Int gc = 0;
          std::string list;
          for (std::size_t i = 1; i < sub.size(); ++i) {
            gc = gcd(gc, Int(static_cast<unsigned long>(sub[i])));
            list += (list.empty() ? "" : ",") + std::to_string(sub[i]);
          }
          out.push_back({"subdegrees",
                         "r* divides every nontrivial subdegree, computed from the action of A8 on 2-subsets",
                         gc,
                         {{"subdegrees", "{" + list + "}"}, {"gcd", gc.get_str()}}});
        } else if (n >= 6) {
          out.push_back(two_point("Sp_" + std::to_string(n - 4) + "(q)", order_Sp(static_cast<unsigned>(n - 4), q), o));
        }
        break;
      default:
        break;
    }
  } else {
    switch (sc.kind) {
      case CaseKind::C1_Pi:
        // U' meeting U in a hyperplane T with U + U' not totally singular:
        // choose T, then an isotropic point of T^perp/T not perpendicular to U/T.
        if (n >= 4)
          out.push_back(subdegree("q^(2n-4i+1)(q^(2i)-1)/(q^2-1)",
                                  qpow(q, 2 * n - 4 * sc.i + 1) * (qpow(q, 2 * sc.i) - 1) / (q * q - 1)));
        break;
      case CaseKind::C1_Ni:
        out.push_back(subdegree("(q^i-(-1)^i)(q^(n-i)-(-1)^(n-i))", signed_term(q, sc.i) * signed_term(q, n - sc.i)));
        break;
      case CaseKind::C2_GUwr:
        if (sc.m == 1 && n >= 4) {
          if (q <= 3)
            out.push_back(subdegree("n(n-1)(n-2)(q+1)^3/6", Int(n * (n - 1) * (n - 2)) * qpow(q + 1, 3) / 6));
          else
            out.push_back(subdegree("n(n-1)(q+1)^2/2", Int(n * (n - 1)) * qpow(q + 1, 2) / 2));
        }
        break;
      default:
        break;
    }
  }
  return out;
}

Conclusion cited_conclusion(const GroupSpec& spec, const SubgroupCase& sc) {
  const bool lin = spec.family() == Family::Linear;
  if (lin && sc.kind == CaseKind::C1_Pi && sc.i == 2 && spec.n() % 2 == 1)
    return {ConclusionKind::SymmetricExcluded, "symmetric-designs-excluded",
            "the cited classification of symmetric designs with a primitive group on 2-spaces has no "
            "design with lambda >= (r,lambda)^2 > 1"};
  if (!lin) {
    switch (sc.kind) {
      case CaseKind::C3:
      case CaseKind::C4:
      case CaseKind::C5_subfield:
      case CaseKind::C6:
      case CaseKind::C7:
        return {ConclusionKind::Excluded, "cited-exclusion",
                "type excluded for unitary socles by the cited classifications under |X| < "
                "|Out|_p'^2 |H0| |H0|_p'^2"};
      default:
        break;
    }
  }
  return {};
}

std::vector<SearchTarget> search_targets(const GroupSpec& spec, const SubgroupCase& sc) {
  const bool lin = spec.family() == Family::Linear;
  const int n = spec.n();
  const Int& q = spec.q().value();
  if (lin && n == 3 && q == 2 && sc.kind == CaseKind::C3 && sc.m == 1 && sc.t == 3)
    return {{"psl2_7", 0, true}, {"pgl2_7", 0, true}};
  if (lin && n == 3 && q == 3 && sc.kind == CaseKind::C3 && sc.m == 1 && sc.t == 3)
    return {{"psl3_3", 39, false}, {"psl3_3_2", 78, false}};
  if (lin && n == 4 && q == 2 && sc.kind == CaseKind::S && sc.line == 4)
    return {{"a8", 0, true}, {"s8", 0, true}};
  if (!lin && n == 3 && q == 3 && sc.kind == CaseKind::S && sc.line == 1)
    return {{"psu3_3", 168, false}, {"psu3_3_2", 336, false}};
  return {};
}

PermGroup build_target(const SearchTarget& t, const SubgroupSearchOptions& opt) {
  PermGroup g = builtin_action(t.group);
  if (t.cosetOrder == 0) return g;
  const IndexedGroup ig(g);
  const auto classes = subgroups_of_order(ig, Int(t.cosetOrder), opt);
  if (classes.size() != 1)
    throw std::logic_error(t.group + ": expected one class of subgroups of order " + std::to_string(t.cosetOrder) +
                           ", found " + std::to_string(classes.size()));
  return coset_action(ig, classes[0], t.group + " on cosets of a subgroup of order " + std::to_string(t.cosetOrder));
}

std::vector<Int> factor_hints(const GroupSpec& spec, const SubgroupCase&) {
  return cyclotomic_hints(spec.p(), 2 * spec.f() * static_cast<unsigned>(spec.n()) + 2);
}

}  // namespace ftd::detail
