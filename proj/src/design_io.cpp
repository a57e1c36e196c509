#include "ftd/designsearch.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace ftd {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw std::invalid_argument("design file line " + std::to_string(line) + ": " + what);
}

Int parse_int(const std::string& tok, std::size_t line) {
  Int x;
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || x.set_str(tok, 10) != 0)
    fail(line, "expected a non-negative integer, got '" + tok + "'");
  return x;
}

}  // namespace

std::string format_design(const CandidateDesign& d) {
  std::ostringstream out;
  out << "version 1\n";
  out << "group " << (d.actionLabel.empty() ? "-" : d.actionLabel) << "\n";
  out << "v " << d.params.v << "\nb " << d.params.b << "\nr " << d.params.r << "\nk " << d.params.k << "\nlambda "
      << d.params.lambda << "\n";
  for (const PointSubset& s : d.blocks) {
    out << "block";
    for (Point x : s.points()) out << ' ' << x;
    out << '\n';
  }
  return out.str();
}

DesignFile parse_design(const std::string& text) {
  DesignFile f;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineNo = 0;
  std::set<std::string> seen;
  bool haveVersion = false;
  std::vector<std::vector<Point>> rawBlocks;
  std::vector<std::size_t> blockLines;
  while (std::getline(in, raw)) {
    ++lineNo;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    std::istringstream ls(raw);
    std::string key;
    if (!(ls >> key)) continue;
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (!haveVersion) {
      if (key != "version" || toks.size() != 1) fail(lineNo, "expected 'version 1' first");
      if (toks[0] != "1") fail(lineNo, "unsupported version " + toks[0]);
      haveVersion = true;
      continue;
    }
    if (key == "block") {
      std::vector<Point> pts;
      for (const std::string& t : toks) {
        const Int x = parse_int(t, lineNo);
        if (x > kMaxDegree) fail(lineNo, "point " + t + " out of range");
        pts.push_back(static_cast<Point>(x.get_ui()));
      }
      if (pts.empty()) fail(lineNo, "empty block");
      rawBlocks.push_back(std::move(pts));
      blockLines.push_back(lineNo);
      continue;
    }
    if (!seen.insert(key).second) fail(lineNo, "repeated key '" + key + "'");
    if (toks.size() != 1) fail(lineNo, "key '" + key + "' takes one value");
    if (key == "group") f.group = toks[0];
    else if (key == "v") f.params.v = parse_int(toks[0], lineNo);
    else if (key == "b") f.params.b = parse_int(toks[0], lineNo);
    else if (key == "r") f.params.r = parse_int(toks[0], lineNo);
    else if (key == "k") f.params.k = parse_int(toks[0], lineNo);
    else if (key == "lambda") f.params.lambda = parse_int(toks[0], lineNo);
    else fail(lineNo, "unknown key '" + key + "'");
  }
  if (!haveVersion) throw std::invalid_argument("design file: empty");
  for (const char* k : {"v", "b", "r", "k", "lambda"})
    if (!seen.count(k)) throw std::invalid_argument(std::string("design file: missing '") + k + "'");
  if (f.params.v > kMaxDegree || f.params.v < 2) throw std::invalid_argument("design file: v out of range");
  const std::size_t v = f.params.v.get_ui();
  for (std::size_t i = 0; i < rawBlocks.size(); ++i) {
    std::set<Point> uniq(rawBlocks[i].begin(), rawBlocks[i].end());
    if (uniq.size() != rawBlocks[i].size()) fail(blockLines[i], "repeated point in block");
    if (*uniq.rbegin() >= v) fail(blockLines[i], "point " + std::to_string(*uniq.rbegin()) + " >= v");
    f.blocks.push_back(PointSubset::from_points(v, rawBlocks[i]));
  }
  if (Int(static_cast<unsigned long>(f.blocks.size())) != f.params.b)
    throw std::invalid_argument("design file: " + std::to_string(f.blocks.size()) + " blocks but b = " +
                                f.params.b.get_str());
  return f;
}

DesignFile load_design(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open design file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_design(ss.str());
}

}  // namespace ftd
