#include "kdom/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "kdom/errors.hpp"

namespace kdom {

namespace {

bool next_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line[0] == '#') continue;
    return true;
  }
  return false;
}

// Parses exactly `count` whitespace-separated integers and nothing else.
std::vector<std::int64_t> parse_ints(const std::string& line, std::size_t count, const char* what) {
  std::istringstream ss(line);
  std::vector<std::int64_t> out;
  std::int64_t v;
  while (ss >> v) out.push_back(v);
  if (!ss.eof() || out.size() != count) throw FormatError(std::string("malformed ") + what + ": '" + line + "'");
  return out;
}

}  // namespace

SetFile load_set_file(std::istream& in) {
  std::string line;
  if (!next_line(in, line) || line != "kdom v1") throw FormatError("missing 'kdom v1' header");
  if (!next_line(in, line)) throw FormatError("missing size line");
  const auto head = parse_ints(line, 4, "size line");
  SetFile f;
  f.k = head[0];
  f.m = head[1];
  f.n = head[2];
  const std::int64_t count = head[3];
  if (f.k < 1 || f.m < 1 || f.n < 1 || count < 0) throw FormatError("size line values out of range");

  if (!next_line(in, line) || line.rfind("flags ", 0) != 0) throw FormatError("missing flags line");
  const std::string flags = line.substr(6);
  if (flags != "-") {
    std::istringstream ss(flags);
    std::string flag;
    while (std::getline(ss, flag, ',')) {
      if (flag == "projected") f.projected = true;
      else if (flag == "no-corner-removal") f.no_corner_removal = true;
      else throw FormatError("unknown flag '" + flag + "'");
    }
  }

  std::vector<LatticePoint> pts;
  for (std::int64_t idx = 0; idx < count; ++idx) {
    if (!next_line(in, line)) throw FormatError("fewer points than the declared count");
    const auto v = parse_ints(line, 2, "point line");
    const LatticePoint q{v[0], v[1]};
    if (f.projected && (q.i < 0 || q.i >= f.m || q.j < 0 || q.j >= f.n)) {
      throw FormatError("point outside the grid in a projected file: '" + line + "'");
    }
    pts.push_back(q);
  }
  while (next_line(in, line)) {
    if (!line.empty()) throw FormatError("more points than the declared count");
  }
  f.points = VertexSet(pts);
  if (f.points.size() != pts.size()) throw FormatError("duplicate vertex");
  return f;
}

void save_set_file(std::ostream& out, const SetFile& f) {
  out << "kdom v1\n" << f.k << ' ' << f.m << ' ' << f.n << ' ' << f.points.size() << '\n';
  std::string flags;
  if (f.projected) flags = "projected";
  if (f.no_corner_removal) flags += flags.empty() ? "no-corner-removal" : ",no-corner-removal";
  out << "flags " << (flags.empty() ? "-" : flags) << '\n';
  for (const auto& q : f.points) out << q.i << ' ' << q.j << '\n';
}

SetFile to_set_file(const Construction& c) {
  SetFile f;
  f.k = c.trace.k.value();
  f.m = c.trace.dims.m;
  f.n = c.trace.dims.n;
  f.projected = true;
  f.no_corner_removal = !c.trace.corners_removed;
  f.points = c.set;
  return f;
}

void write_trace(std::ostream& out, const ConstructionTrace& t) {
  auto pt = [](const LatticePoint& q) {
    std::ostringstream s;
    s << q.i << ',' << q.j;
    return s.str();
  };
  out << "m=" << t.dims.m << '\n'
      << "n=" << t.dims.n << '\n'
      << "k=" << t.k.value() << '\n'
      << "modulus=" << t.chosen_residue.modulus() << '\n'
      << "residue=" << t.chosen_residue.value() << '\n'
      << "base_size=" << t.base_size << '\n'
      << "corners_removed=" << (t.corners_removed ? "true" : "false") << '\n';
  for (const auto& c : t.corner_cases) {
    const std::string key = std::string("corner.") + to_string(c.corner);
    out << key << ".case=" << to_string(c.kind) << '\n'
        << key << ".frame_residue=" << c.frame_residue.value() << '\n'
        << key << ".s=" << pt(c.s) << '\n'
        << key << ".z=" << pt(c.z) << '\n';
    if (c.slope_l1) out << key << ".slope_l1=" << *c.slope_l1 << '\n';
    else out << key << ".slope_l1=undefined\n";
    out << key << ".slope_l2=" << c.slope_l2 << '\n';
  }
  for (const auto& q : t.removed) out << "removed=" << pt(q) << '\n';
  for (const auto& s : t.shifted_pairs) {
    out << "shift=" << to_string(s.corner) << ':' << pt(s.from) << "->" << pt(s.to) << '\n';
  }
  out << "projection_merged=" << t.projection_merged << '\n'
      << "fallback_activations=" << t.fallback_activations << '\n'
      << "final_size=" << t.final_size << '\n';
}

}  // namespace kdom
