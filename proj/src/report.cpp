#include "ftd/report.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace ftd {

using ojson = nlohmann::ordered_json;

ReportFormat parse_report_format(const std::string& s) {
  if (s == "json") return ReportFormat::Json;
  if (s == "tsv") return ReportFormat::Tsv;
  throw std::invalid_argument("unknown report format '" + s + "' (expected json or tsv)");
}

namespace {

ojson params_json(const DesignParams& p) {
  return ojson{{"v", p.v.get_str()}, {"b", p.b.get_str()}, {"r", p.r.get_str()}, {"k", p.k.get_str()},
               {"lambda", p.lambda.get_str()}};
}

ojson case_json(const SubgroupCase& sc) {
  ojson c{{"class", aschbacher_class(sc.kind)}, {"token", class_token(sc.kind)}, {"label", sc.label()}};
  if (sc.i) c["i"] = sc.i;
  if (sc.m) c["m"] = sc.m;
  if (sc.t) c["t"] = sc.t;
  if (sc.q0) c["q0"] = sc.q0;
  if (sc.kind == CaseKind::C5_O || sc.kind == CaseKind::C8_O) c["eps"] = sc.eps;
  if (sc.line) c["line"] = sc.line;
  return c;
}

ojson cell_json(const EliminationReport& r) {
  ojson cell;
  cell["spec"] = {{"family", to_string(r.spec.family())},
                  {"n", r.spec.n()},
                  {"q", r.spec.q().value().get_str()},
                  {"name", r.spec.name()}};
  cell["case"] = case_json(r.sc);
  ojson steps = ojson::array();
  for (const auto& s : r.steps) {
    ojson w = ojson::object();
    for (const auto& x : s.witnesses) w[x.name] = x.value;
    steps.push_back({{"name", s.name}, {"citation", s.citation}, {"witnesses", w}, {"verdict", to_string(s.verdict)}});
  }
  cell["steps"] = steps;
  ojson fin{{"kind", to_string(r.final.kind)}};
  if (r.final.kind == FinalKind::Eliminated) {
    fin["stepIndex"] = r.final.stepIndex;
    fin["step"] = r.steps.at(r.final.stepIndex).name;
  } else {
    ojson cands = ojson::array();
    for (const auto& c : r.final.candidates) cands.push_back(params_json(c));
    fin["candidateCount"] = r.final.candidateCount;
    fin["candidates"] = cands;
    fin["truncated"] = r.final.truncated;
  }
  fin["flags"] = r.final.flags;
  if (!r.final.searches.empty()) {
    ojson ss = ojson::array();
    for (const auto& s : r.final.searches)
      ss.push_back({{"group", s.group},
                    {"method", s.method},
                    {"params", params_json(s.params)},
                    {"designs", s.designs},
                    {"certificate", s.certificate}});
    fin["searches"] = ss;
  }
  cell["final"] = fin;
  return cell;
}

}  // namespace

std::string report_json(const std::vector<SweepGrid>& grids, const std::vector<EliminationReport>& reports) {
  ojson j;
  j["schemaVersion"] = kReportSchemaVersion;
  ojson g = ojson::array();
  for (const auto& x : grids) g.push_back(x.describe());
  j["grid"] = g;
  ojson cells = ojson::array();
  for (const auto& r : reports) cells.push_back(cell_json(r));
  j["cells"] = cells;
  const SweepSummary s = summarize(reports);
  j["summary"] = {{"scope", "verdicts hold for the listed grid cells only"},
                  {"cells", s.cells},
                  {"eliminated", s.eliminated},
                  {"survives", s.survives},
                  {"needsSearch", s.needsSearch}};
  return j.dump(2) + "\n";
}

std::string report_tsv(const std::vector<EliminationReport>& reports) {
  std::ostringstream os;
  os << "family\tn\tq\tcase\tv\tfinal\tstep\tcandidates\tflags\n";
  for (const auto& r : reports) {
    os << to_string(r.spec.family()) << '\t' << r.spec.n() << '\t' << r.spec.q().value() << '\t' << r.sc.label()
       << '\t' << r.orders.v << '\t' << to_string(r.final.kind) << '\t';
    if (r.final.kind == FinalKind::Eliminated) os << r.steps.at(r.final.stepIndex).name;
    else os << '-';
    os << '\t';
    if (r.final.candidates.empty()) os << '-';
    for (std::size_t i = 0; i < r.final.candidates.size(); ++i)
      os << (i ? " " : "") << r.final.candidates[i].to_string();
    os << '\t';
    if (r.final.flags.empty()) os << '-';
    for (std::size_t i = 0; i < r.final.flags.size(); ++i) os << (i ? "," : "") << r.final.flags[i];
    os << '\n';
  }
  return os.str();
}

std::string format_report(ReportFormat f, const std::vector<SweepGrid>& grids,
                          const std::vector<EliminationReport>& reports) {
  return f == ReportFormat::Json ? report_json(grids, reports) : report_tsv(reports);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace ftd
