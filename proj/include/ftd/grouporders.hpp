#pragma once

// Exact orders for the simple classical groups PSL_n(q), PSU_n(q), their
// outer automorphism groups, and the candidate point stabilizers H0 = H ∩ X
// organised by Aschbacher class.
//
// Every H0 formula is transcribed as data (one evaluator per class) and the
// assembled CaseOrders re-checks |H0| divides |X|, so a transcription slip
// is a hard failure rather than a wrong verdict.

#include "ftd/exactmath.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ftd {

enum class Family { Linear, Unitary };

std::string to_string(Family f);
/// Accepts "linear"/"psl"/"L" and "unitary"/"psu"/"U".
Family parse_family(const std::string& s);

class GroupSpec {
public:
  /// Throws MathError for n < 3 or for PSU_3(2), which is solvable.
  GroupSpec(Family family, int n, PrimePower q);
  static GroupSpec make(Family family, int n, unsigned long q);

  Family family() const { return family_; }
  int n() const { return n_; }
  const PrimePower& q() const { return q_; }
  const Int& p() const { return q_.p(); }
  unsigned f() const { return q_.f(); }
  /// (n, q-1) for linear, (n, q+1) for unitary.
  Int d() const;
  /// e.g. "PSL_3(2)".
  std::string name() const;

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.family_ == b.family_ && a.n_ == b.n_ && a.q_ == b.q_;
  }

private:
  Family family_;
  int n_;
  PrimePower q_;
};

enum class CaseKind {
  C1_Pi,        // stabilizer of an i-space (linear) or totally singular i-space (unitary)
  C1_Pij,       // stabilizer of an incident (i, n-i) flag, graph automorphism present
  C1_Ni,        // stabilizer of a non-degenerate i-space (unitary)
  C1_GLiGLni,   // stabilizer of an (i, n-i) decomposition, graph automorphism present
  C2_GLwr,      // GL_m(q) wr S_t, n = mt (linear)
  C2_GUwr,      // GU_m(q) wr S_t, n = mt (unitary); m = 1 is the GU_1 wr S_n case
  C2_GLhalf,    // GL_{n/2}(q^2).2 (unitary)
  C3,           // GL_m(q^t) / GU_m(q^t), t prime
  C4,           // GL_i (x) GL_{n/i} / GU_i (x) GU_{n/i}
  C5_subfield,  // GL_n(q0) / GU_n(q0), q = q0^t, t prime
  C5_O,         // O^eps_n(q), unitary, q odd
  C5_Sp,        // Sp_n(q), unitary
  C6,           // t^{2m}.Sp_{2m}(t), n = t^m
  C7,           // GL_m(q) wr S_t tensor-induced, n = m^t
  C8_Sp,        // Sp_n(q) (linear)
  C8_O,         // O^eps_n(q) (linear, q odd)
  C8_U,         // GU_n(q0), q = q0^2 (linear)
  S,            // almost simple, from the S-class tables
};

/// Short class token used by the CLI ("c1p", "c2", ...) and by reports ("C2").
std::string class_token(CaseKind k);
std::string aschbacher_class(CaseKind k);

struct SubgroupCase {
  CaseKind kind = CaseKind::C1_Pi;
  int i = 0;        // C1 dimension, C4 smaller tensor factor
  int m = 0;        // block dimension (C2, C3, C7)
  int t = 0;        // number of blocks / field degree / tensor power / C6 prime
  long q0 = 0;      // subfield order (C5_subfield, C8_U)
  int eps = 0;      // orthogonal type: 0 (odd dimension), +1, -1
  int line = 0;     // S-class table line

  static SubgroupCase Pi(int i) { return {CaseKind::C1_Pi, i}; }
  static SubgroupCase Pij(int i) { return {CaseKind::C1_Pij, i}; }
  static SubgroupCase Ni(int i) { return {CaseKind::C1_Ni, i}; }
  static SubgroupCase GLiGLni(int i) { return {CaseKind::C1_GLiGLni, i}; }
  static SubgroupCase GLwr(int m, int t) { return {CaseKind::C2_GLwr, 0, m, t}; }
  static SubgroupCase GUwr(int m, int t) { return {CaseKind::C2_GUwr, 0, m, t}; }
  static SubgroupCase GLhalf() { return {CaseKind::C2_GLhalf}; }
  static SubgroupCase ExtField(int m, int t) { return {CaseKind::C3, 0, m, t}; }
  static SubgroupCase Tensor(int i) { return {CaseKind::C4, i}; }
  static SubgroupCase Subfield(long q0, int t) { return {CaseKind::C5_subfield, 0, 0, t, q0}; }
  static SubgroupCase UnitaryO(int eps) { return {CaseKind::C5_O, 0, 0, 0, 0, eps}; }
  static SubgroupCase UnitarySp() { return {CaseKind::C5_Sp}; }
  static SubgroupCase Extraspecial(int t, int m) { return {CaseKind::C6, 0, m, t}; }
  static SubgroupCase TensorInduced(int m, int t) { return {CaseKind::C7, 0, m, t}; }
  static SubgroupCase Symplectic() { return {CaseKind::C8_Sp}; }
  static SubgroupCase Orthogonal(int eps) { return {CaseKind::C8_O, 0, 0, 0, 0, eps}; }
  static SubgroupCase UnitaryForm(long q0) { return {CaseKind::C8_U, 0, 0, 0, q0}; }
  static SubgroupCase SLine(int line) { return {CaseKind::S, 0, 0, 0, 0, 0, line}; }

  /// e.g. "C2_GLwr(m=2,t=3)", "S(line=4)".
  std::string label() const;

  friend bool operator==(const SubgroupCase&, const SubgroupCase&) = default;
};

class IncompatibleCase : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct CaseOrders {
  Int orderX;
  Int orderOut;
  Int orderH0;
  Int v;
};

Int order_X(const GroupSpec& spec);
Int order_out(const GroupSpec& spec);

/// Throws IncompatibleCase when the class parameters do not fit the spec.
void validate_case(const GroupSpec& spec, const SubgroupCase& sc);

Int order_H0(const GroupSpec& spec, const SubgroupCase& sc);

/// Assembles the orders; throws std::logic_error if |H0| does not divide |X|.
CaseOrders case_orders(const GroupSpec& spec, const SubgroupCase& sc);

/// Where the H0 order (or v) formula comes from, for report output.
std::string order_citation(const GroupSpec& spec, const SubgroupCase& sc);

// Classical group orders used by the formulas above and by refinements.
Int order_GL(unsigned m, const Int& q);
Int order_SL(unsigned m, const Int& q);
Int order_GU(unsigned m, const Int& q);
Int order_SU(unsigned m, const Int& q);
Int order_Sp(unsigned n, const Int& q);
/// |SO^eps_n(q)| for q odd; eps = 0 for n odd, +-1 for n even.
Int order_SO(unsigned n, int eps, const Int& q);

// ---------------------------------------------------------------------------
// S-class candidate tables.

struct SClassLine {
  Family family;
  int line;
  int n;
  std::string h0Name;
  /// |H0|; a function because one line depends on q.
  std::function<Int(const PrimePower&)> h0Order;
  /// Existence conditions on q for the embedding (from the maximal-subgroup tables).
  std::function<bool(const PrimePower&)> condition;
  /// The q values the table lists as possible; empty when none survive.
  std::vector<unsigned long> listedQ;
  std::string conditionText;
};

const std::vector<SClassLine>& sclass_lines();
const SClassLine& sclass_line(Family family, int line);

/// Strict q-bound used to cut the S lines down to finitely many q:
/// linear q^{n^2-2} < 4 f^2 n^2 |H0|^3, unitary q^{n^2-3} < 4 f^2 n^2 |H0|^3.
bool sclass_q_bound(const SClassLine& line, const PrimePower& q);

struct NamedGroupOrder {
  std::string name;
  Int order;
  std::string factorization;  // expected, checked in tests
};
const std::vector<NamedGroupOrder>& named_group_orders();
Int named_order(const std::string& name);

/// Every candidate case for the given socle that the sweeps cover, in a
/// fixed deterministic order.
std::vector<SubgroupCase> enumerate_cases(const GroupSpec& spec);

}  // namespace ftd
