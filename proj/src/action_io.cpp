// Generator file format: "degree N" on the first content line, then one
// line of N space-separated 0-based images per generator; '#' comments.

#include "ftd/permgroup.hpp"

#include <fstream>
#include <sstream>

namespace ftd {

PermGroup parse_action(const std::string& text, std::string label) {
  std::istringstream in(text);
  std::string line;
  std::size_t degree = 0;
  bool haveDegree = false;
  std::vector<Perm> gens;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    const std::string where = "generator file line " + std::to_string(lineNo);
    if (!haveDegree) {
      if (first != "degree" || !(ls >> degree) || degree == 0 || degree > kMaxDegree)
        throw PermError(where + ": expected 'degree N'");
      std::string rest;
      if (ls >> rest) throw PermError(where + ": trailing text after degree");
      haveDegree = true;
      continue;
    }
    std::vector<Point> img;
    std::istringstream all(line);
    long long x;
    while (all >> x) {
      if (x < 0 || static_cast<std::size_t>(x) >= degree) throw PermError(where + ": image out of range");
      img.push_back(static_cast<Point>(x));
    }
    if (!all.eof()) throw PermError(where + ": non-numeric token");
    if (img.size() != degree)
      throw PermError(where + ": expected " + std::to_string(degree) + " images, got " + std::to_string(img.size()));
    try {
      gens.push_back(Perm::from_images(img));
    } catch (const PermError& e) {
      throw PermError(where + ": " + e.what());
    }
  }
  if (!haveDegree) throw PermError("generator file: missing 'degree N' line");
  return PermGroup(degree, std::move(gens), std::move(label));
}

PermGroup load_action(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open generator file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_action(ss.str(), path);
}

std::string format_action(const PermGroup& g) {
  std::ostringstream os;
  os << "degree " << g.degree() << "\n";
  for (const Perm& p : g.generators()) {
    for (std::size_t i = 0; i < g.degree(); ++i) os << (i ? " " : "") << p[i];
    os << "\n";
  }
  return os.str();
}

}  // namespace ftd
