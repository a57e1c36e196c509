// ftdesign: command-line front end for the sieve, the eliminator, grid
// sweeps, concrete design searches and design-file verification.
//
// Exit status: 0 completed, 1 discrepancy against the expected results,
// 2 usage error, malformed input or exhausted budget.

#include "ftd/builtin.hpp"
#include "ftd/designsearch.hpp"
#include "ftd/eliminator.hpp"
#include "ftd/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <thread>

using namespace ftd;
using ojson = nlohmann::ordered_json;

namespace {

struct Output {
  std::string format = "json";
  std::string path;
};

std::string default_dir() {
  const char* d = std::getenv("FTD_OUTPUT_DIR");
  return d && *d ? std::string(d) : std::string();
}

// Writes to --out, else to $FTD_OUTPUT_DIR/<stem>.<format>, else stdout.
void emit(const Output& out, const std::string& stem, const std::string& text) {
  std::string path = out.path;
  if (path.empty() && !default_dir().empty()) path = (std::filesystem::path(default_dir()) / (stem + "." + out.format)).string();
  if (path.empty()) {
    std::cout << text;
    return;
  }
  write_file(path, text);
  std::cerr << "wrote " << path << "\n";
}

ojson params_json(const DesignParams& p) {
  return ojson{{"v", p.v.get_str()}, {"b", p.b.get_str()}, {"r", p.r.get_str()}, {"k", p.k.get_str()},
               {"lambda", p.lambda.get_str()}};
}

DesignParams parse_params(const std::string& s) {
  std::vector<Int> xs;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, ',');) {
    Int x;
    if (tok.empty() || x.set_str(tok, 10) != 0 || x < 0) throw std::invalid_argument("bad --params value '" + s + "'");
    xs.push_back(x);
  }
  if (xs.size() != 5) throw std::invalid_argument("--params needs v,b,r,k,lambda");
  return {xs[0], xs[1], xs[2], xs[3], xs[4]};
}

std::string file_stem(std::string s) {
  for (char& c : s)
    if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
  return s;
}

Int parse_int(const std::string& s, const char* what) {
  Int x;
  if (s.empty() || x.set_str(s, 10) != 0) throw std::invalid_argument(std::string("bad ") + what + " '" + s + "'");
  return x;
}

struct GroupSource {
  std::string group;
  std::string action;
  unsigned long cosetOrder = 0;
};

PermGroup load_group(const GroupSource& src, const SubgroupSearchOptions& so) {
  if (src.group.empty() == src.action.empty()) throw std::invalid_argument("give exactly one of --group or --action");
  PermGroup g = src.group.empty() ? load_action(src.action) : builtin_action(src.group);
  if (src.cosetOrder == 0) return g;
  const IndexedGroup ig(g);
  const auto classes = subgroups_of_order(ig, Int(src.cosetOrder), so);
  if (classes.empty()) throw std::invalid_argument("no subgroup of order " + std::to_string(src.cosetOrder));
  if (classes.size() > 1)
    std::cerr << "note: " << classes.size() << " classes of subgroups of order " << src.cosetOrder
              << "; using the first\n";
  return coset_action(ig, classes[0], g.label() + "/" + std::to_string(src.cosetOrder));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flag-transitive 2-design classification tools for PSL_n(q) and PSU_n(q)"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  Output out;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--format", out.format, "Report format")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--out", out.path, "Report path (default: $FTD_OUTPUT_DIR/<command>.<format>, else stdout)");
  app.add_option("--workers", workers, "Worker threads for sweeps")->check(CLI::PositiveNumber);

  // sieve
  auto* sieve = app.add_subcommand("sieve", "Admissible (v,b,r,k,lambda) for a point count and an r divisor");
  std::string sv, srd, srs;
  std::uint64_t sBudget = 20'000'000;
  sieve->add_option("--v", sv, "Number of points")->required();
  sieve->add_option("--r-divisor", srd, "A known multiple of r, e.g. |Out||H0|")->required();
  sieve->add_option("--rstar-divisor", srs, "A sharper divisor of r*");
  sieve->add_option("--budget", sBudget, "Work budget")->check(CLI::PositiveNumber);

  // eliminate
  auto* elim = app.add_subcommand("eliminate", "Run the constraint pipeline on one cell");
  std::string family = "psl", token;
  int n = 0, ci = 0, cm = 0, ct = 0, ceps = 0, cline = 0;
  unsigned long q = 0;
  long cq0 = 0;
  bool noSearch = false;
  std::uint64_t admissibleBudget = EliminatorOptions{}.admissibleBudget;
  elim->add_option("--family", family, "psl or psu");
  elim->add_option("--n", n, "Dimension")->required();
  elim->add_option("--q", q, "Field order")->required();
  elim->add_option("--class", token, "Class token: c1p c1pij c1n c1gl c2 c2half c3 c4 c5 c5o c5sp c6 c7 c8sp c8o c8u s")
      ->required();
  elim->add_option("--i", ci, "Subspace dimension (c1*, c4)");
  elim->add_option("--m", cm, "Block dimension (c2, c3, c6, c7)");
  elim->add_option("--t", ct, "Blocks, field degree or tensor power");
  elim->add_option("--q0", cq0, "Subfield order (c5, c8u)");
  elim->add_option("--eps", ceps, "Orthogonal type 0, 1 or -1 (c5o, c8o)");
  elim->add_option("--line", cline, "S-class table line (s)");
  elim->add_flag("--no-search", noSearch, "Skip the concrete searches");
  elim->add_option("--admissible-budget", admissibleBudget, "Tuple enumeration budget")->check(CLI::PositiveNumber);

  // sweep
  auto* sw = app.add_subcommand("sweep", "Run every cell of a grid and compare survivors with the classification");
  std::string swFamily = "psl", swClasses;
  int nMin = 3, nMax = 12;
  unsigned long qMin = 2, qMax = 32;
  bool full = false, swNoSearch = false;
  sw->add_option("--family", swFamily, "psl or psu");
  sw->add_option("--n-min", nMin, "Smallest n");
  sw->add_option("--n-max", nMax, "Largest n");
  sw->add_option("--q-min", qMin, "Smallest q");
  sw->add_option("--q-max", qMax, "Largest q");
  sw->add_option("--classes", swClasses, "Comma-separated class tokens (default all)");
  sw->add_flag("--full", full, "Linear n<=12, q<=32 and unitary n<=8, q<=8");
  sw->add_flag("--no-search", swNoSearch, "Skip the concrete searches");
  sw->add_option("--admissible-budget", admissibleBudget, "Tuple enumeration budget")->check(CLI::PositiveNumber);

  // search
  auto* se = app.add_subcommand("search", "Search a permutation group for flag-transitive designs");
  GroupSource src;
  unsigned k = 0;
  std::string paramsText, emitDir;
  KOrbitOptions ko;
  StabilizerSearchOptions so;
  se->add_option("--group", src.group, "Builtin action label");
  se->add_option("--action", src.action, "Generator file");
  se->add_option("--coset-order", src.cosetOrder, "Act on cosets of a subgroup of this order");
  se->add_option("--k", k, "Enumerate all orbits on k-subsets");
  se->add_option("--params", paramsText, "v,b,r,k,lambda for the stabilizer search");
  se->add_option("--emit-dir", emitDir, "Directory for design files (default $FTD_OUTPUT_DIR, else .)");
  se->add_option("--max-subsets", ko.maxSubsets, "Cap on C(v,k) for --k")->check(CLI::PositiveNumber);
  se->add_option("--union-budget", so.unionBudget, "Cap on stabilizer-orbit unions")->check(CLI::PositiveNumber);
  se->add_option("--closure-budget", so.subgroups.closureBudget, "Cap on subgroup closures")
      ->check(CLI::PositiveNumber);

  // verify
  auto* ve = app.add_subcommand("verify", "Re-check a design file against a group");
  std::string designPath;
  GroupSource vsrc;
  ve->add_option("--design", designPath, "Design file")->required();
  ve->add_option("--group", vsrc.group, "Builtin action label");
  ve->add_option("--action", vsrc.action, "Generator file");
  ve->add_option("--coset-order", vsrc.cosetOrder, "Act on cosets of a subgroup of this order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;  // --help exits 0
  }

  try {
    if (*sieve) {
      AdmissibleOptions ao;
      ao.workBudget = sBudget;
      if (!srs.empty()) ao.rStarDivisor = parse_int(srs, "--rstar-divisor");
      const Int v = parse_int(sv, "--v");
      const AdmissibleResult r = admissible_tuples(v, parse_int(srd, "--r-divisor"), ao);
      if (out.format == "json") {
        ojson j{{"schemaVersion", kReportSchemaVersion}, {"command", "sieve"}, {"v", sv}, {"rDivisor", srd}};
        j["rStarGcd"] = r.rStarGcd.get_str();
        j["truncated"] = r.truncated;
        j["work"] = r.work;
        ojson ts = ojson::array();
        for (const auto& t : r.tuples) ts.push_back(params_json(t));
        j["tuples"] = ts;
        ojson counts = ojson::object();
        for (const auto& [reason, c] : r.rejectionCounts) counts[reason_code(reason)] = c;
        j["rejectionCounts"] = counts;
        ojson rej = ojson::array();
        for (const auto& x : r.rejections)
          rej.push_back({{"rStar", x.rStar.get_str()},
                         {"lambdaStar", x.lambdaStar.get_str()},
                         {"k", x.k.get_str()},
                         {"g", x.g.get_str()},
                         {"reason", reason_code(x.reason)}});
        j["rejections"] = rej;
        emit(out, "sieve", j.dump(2) + "\n");
      } else {
        std::string s = "v\tb\tr\tk\tlambda\n";
        for (const auto& t : r.tuples)
          s += t.v.get_str() + "\t" + t.b.get_str() + "\t" + t.r.get_str() + "\t" + t.k.get_str() + "\t" +
               t.lambda.get_str() + "\n";
        emit(out, "sieve", s);
      }
      if (r.truncated) {
        std::cerr << "error: work budget exhausted; the tuple list is incomplete\n";
        return 2;
      }
      return 0;
    }

    if (*elim) {
      const Family fam = parse_family(family);
      const GroupSpec spec = GroupSpec::make(fam, n, q);
      const SubgroupCase sc = case_from_token(fam, token, ci, cm, ct, cq0, ceps, cline);
      EliminatorOptions opt;
      opt.runSearch = !noSearch;
      opt.admissibleBudget = admissibleBudget;
      const EliminationReport r = run_case(spec, sc, opt);
      emit(out, "eliminate", format_report(parse_report_format(out.format), {}, {r}));
      std::cerr << cell_key(r) << ": " << to_string(r.final.kind);
      if (r.final.kind == FinalKind::Eliminated) std::cerr << " at " << r.steps[r.final.stepIndex].name;
      std::cerr << "\n";
      return 0;
    }

    if (*sw) {
      std::vector<SweepGrid> grids;
      if (full) {
        grids.push_back({Family::Linear, 3, 12, 2, 32, {}});
        grids.push_back({Family::Unitary, 3, 8, 2, 8, {}});
      } else {
        SweepGrid g{parse_family(swFamily), nMin, nMax, qMin, qMax, {}};
        std::stringstream ss(swClasses);
        for (std::string c; std::getline(ss, c, ',');)
          if (!c.empty()) g.classes.push_back(c);
        grids.push_back(g);
      }
      for (const auto& g : grids) g.validate();
      EliminatorOptions opt;
      opt.runSearch = !swNoSearch;
      opt.admissibleBudget = admissibleBudget;
      const SweepResult res = sweep(grids, opt, workers);
      emit(out, "sweep", format_report(parse_report_format(out.format), res.grids, res.reports));
      const SurvivorCheck chk = survivors_check(res.reports);
      std::cerr << "cells " << res.summary.cells << ", eliminated " << res.summary.eliminated << ", survives "
                << res.summary.survives << ", needs-search " << res.summary.needsSearch << "\n";
      for (const auto& d : chk.discrepancies) std::cerr << "discrepancy: " << d << "\n";
      std::cerr << "survivor check: " << (chk.pass ? "pass" : "FAIL") << "\n";
      return chk.pass ? 0 : 1;
    }

    if (*se) {
      if ((k == 0) == paramsText.empty()) throw std::invalid_argument("give exactly one of --k or --params");
      const PermGroup g = load_group(src, so.subgroups);
      std::string dir = emitDir.empty() ? default_dir() : emitDir;
      if (dir.empty()) dir = ".";
      std::vector<CandidateDesign> designs;
      ojson j{{"schemaVersion", kReportSchemaVersion}, {"command", "search"}, {"group", g.label()},
              {"degree", g.degree()}, {"order", g.order().get_str()}};
      if (k) {
        const KOrbitResult kr = korbit_designs(g, k, ko);
        j["method"] = "korbit";
        j["k"] = k;
        j["orbitSizes"] = kr.orbitSizes;
        j["constantCoverageOrbits"] = kr.designs.size();
        for (const auto& d : hypothesis_filter(kr.designs))
          if (d.flagTransitive) designs.push_back(d);
      } else {
        const SearchReport sr = stabilizer_search(g, parse_params(paramsText), so);
        j["method"] = sr.strategy;
        j["params"] = params_json(sr.params);
        j["subgroupOrder"] = sr.subgroupOrder.get_str();
        j["subgroupClasses"] = sr.subgroupClasses;
        j["unionsExamined"] = sr.unionsExamined;
        j["orbitsExpanded"] = sr.orbitsExpanded;
        j["exhaustiveness"] = sr.exhaustiveness;
        designs = sr.designs;
      }
      ojson ds = ojson::array();
      std::filesystem::create_directories(dir);
      for (std::size_t i = 0; i < designs.size(); ++i) {
        const auto& d = designs[i];
        const std::string file = (std::filesystem::path(dir) / (file_stem(g.label()) + "_" + d.params.v.get_str() + "_" +
                                                                 d.params.b.get_str() + "_" + d.params.k.get_str() +
                                                                 "_" + std::to_string(i + 1) + ".design"))
                                     .string();
        write_file(file, format_design(d));
        ds.push_back({{"params", params_json(d.params)},
                      {"blockStabilizerOrder", d.blockStabilizerOrder.get_str()},
                      {"flagTransitive", d.flagTransitive},
                      {"file", file}});
      }
      j["designs"] = ds;
      emit(out, "search", j.dump(2) + "\n");
      std::cerr << designs.size() << " design(s)\n";
      return 0;
    }

    if (*ve) {
      const DesignFile f = load_design(designPath);
      GroupSource s = vsrc;
      if (s.group.empty() && s.action.empty()) s.group = f.group;
      const PermGroup g = load_group(s, {});
      const VerificationReport vr = verify(f.blocks, g, f.params);
      ojson j{{"schemaVersion", kReportSchemaVersion}, {"command", "verify"}, {"design", designPath},
              {"group", g.label()}, {"ok", vr.ok()}};
      ojson cs = ojson::array();
      for (const auto& c : vr.checks) cs.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      j["checks"] = cs;
      emit(out, "verify", j.dump(2) + "\n");
      for (const auto& c : vr.checks)
        if (!c.pass) std::cerr << "failed: " << c.name << ": " << c.detail << "\n";
      std::cerr << (vr.ok() ? "verified" : "NOT verified") << "\n";
      return vr.ok() ? 0 : 1;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: budget exhausted: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
