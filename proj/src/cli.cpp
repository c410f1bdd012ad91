#include "kdom/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <thread>

#include "kdom/bounds.hpp"
#include "kdom/construction.hpp"
#include "kdom/errors.hpp"
#include "kdom/exact.hpp"
#include "kdom/grid.hpp"
#include "kdom/io.hpp"
#include "kdom/render.hpp"

namespace kdom::cli {

namespace {

std::int64_t parse_int(const std::string& s, const std::string& text) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw FormatError("malformed range '" + text + "'");
  return v;
}

unsigned resolve_threads(unsigned threads) {
  if (threads != 0) return threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

SetFile read_set_file(const std::string& path, std::istream& in) {
  if (path == "-") return load_set_file(in);
  std::ifstream f(path);
  if (!f) throw FormatError("cannot open '" + path + "'");
  return load_set_file(f);
}

// Writes to `out` when `path` is empty or "-".
template <class Fn>
void write_to(const std::string& path, std::ostream& out, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(out);
    return;
  }
  std::ofstream f(path);
  if (!f) throw FormatError("cannot write '" + path + "'");
  fn(f);
  if (!f) throw FormatError("write to '" + path + "' failed");
}

struct Args {
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t k = 1;
  unsigned threads = 1;
  std::string output;
  std::string trace;
  bool fallback = false;
  std::string file;
  std::optional<std::int64_t> k_override;
  std::string range = "51:65:2";
  std::int64_t n_offset = 1;
  bool csv = false;
  bool build = false;
  std::int64_t budget = ExactBudget{}.max_nodes;
  std::string format = "ascii";
  bool coverage = false;
  bool diamonds = false;
};

int cmd_construct(const Args& a, std::ostream& out) {
  ConstructOptions opts;
  opts.fallback_repair = a.fallback;
  opts.threads = resolve_threads(a.threads);
  const Construction c = construct(GridDims(a.m, a.n), Radius(a.k), opts);
  write_to(a.output, out, [&](std::ostream& os) { save_set_file(os, to_set_file(c)); });
  if (!a.trace.empty()) write_to(a.trace, out, [&](std::ostream& os) { write_trace(os, c.trace); });
  return kExitOk;
}

int cmd_verify(const Args& a, std::istream& in, std::ostream& out) {
  const SetFile f = read_set_file(a.file, in);
  const Radius k(a.k_override.value_or(f.k));
  const CoverageReport r = verify_domination(GridDims(f.m, f.n), k, f.points);
  if (r.dominating()) {
    out << "# dominating: " << f.points.size() << " points cover " << r.covered_count << " vertices\n";
    return kExitOk;
  }
  out << "# not dominating: " << r.uncovered.size() << " uncovered\n";
  for (const auto& q : r.uncovered) out << q.i << ' ' << q.j << '\n';
  return kExitNegative;
}

template <class Fn>
std::string annotated(Fn&& fn) {
  try {
    return std::to_string(fn());
  } catch (const DomainError&) {
    return "n/a (domain)";
  }
}

int cmd_bound(const Args& a, std::ostream& out) {
  // Validate once so bad k, m, n exit 2 instead of printing n/a everywhere.
  GridDims(a.m, a.n);
  Radius(a.k);
  out << "new=" << annotated([&] { return new_bound(a.m, a.n, a.k); })
      << " cor=" << cor_bound(a.m, a.n, a.k) << " fss=" << fss_bound(a.m, a.n, a.k);
  if (a.k == 1) out << " chang=" << annotated([&] { return chang_bound(a.m, a.n); });
  if (a.k == 2) out << " bijm=" << annotated([&] { return bijm_bound(a.m, a.n); });
  out << '\n';
  return kExitOk;
}

int cmd_table(const Args& a, std::ostream& out) {
  Radius(a.k);
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (const std::int64_t m : parse_range(a.range)) {
    pairs.emplace_back(m, detail::checked_add(m, a.n_offset));
  }
  const auto rows = comparison_table(pairs, a.k, a.build, resolve_threads(a.threads));

  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"M", "N", "New Bound", "Old Bound"};
  if (a.build) header.emplace_back("Constructed");
  for (const auto& r : rows) {
    auto opt = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string("n/a"); };
    std::vector<std::string> row{std::to_string(r.m), std::to_string(r.n), opt(r.new_bound), opt(r.fss_bound)};
    if (a.build) row.push_back(opt(r.constructed_size));
    cells.push_back(std::move(row));
  }

  if (a.csv) {
    auto line = [&](const std::vector<std::string>& row) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
      out << '\n';
    };
    line(header);
    for (const auto& row : cells) line(row);
    return kExitOk;
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  auto line = [&](const std::vector<std::string>& row) {
    std::string s;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) s += "  ";
      s += std::string(width[c] - row[c].size(), ' ') + row[c];
    }
    out << s << '\n';
  };
  line(header);
  for (const auto& row : cells) line(row);
  return kExitOk;
}

int cmd_exact(const Args& a, std::ostream& out) {
  if (a.budget < 1) throw DomainError("budget must be ≥ 1");
  const ExactResult r = exact_gamma(GridDims(a.m, a.n), Radius(a.k), ExactBudget{a.budget});
  if (r.time_budget_exceeded) {
    out << "gamma>=? budget exceeded\n"
        << "# lower_bound=" << r.lower_bound << " upper_bound=" << r.gamma << " nodes=" << r.nodes_explored
        << '\n';
    return kExitBudget;
  }
  out << "gamma=" << r.gamma << '\n';
  return kExitOk;
}

int cmd_render(const Args& a, std::istream& in, std::ostream& out) {
  const SetFile f = read_set_file(a.file, in);
  const GridDims dims(f.m, f.n);
  const Radius k(f.k);
  const RenderOptions opts{a.coverage, a.diamonds};
  if (a.format == "svg") out << render_svg(dims, k, f.points, opts);
  else out << render_ascii(dims, k, f.points, opts);
  return kExitOk;
}

}  // namespace

std::vector<std::int64_t> parse_range(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ':')) parts.push_back(part);
  if (parts.size() < 2 || parts.size() > 3) throw FormatError("malformed range '" + text + "'");
  const std::int64_t lo = parse_int(parts[0], text);
  const std::int64_t hi = parse_int(parts[1], text);
  const std::int64_t step = parts.size() == 3 ? parse_int(parts[2], text) : 1;
  if (step < 1) throw FormatError("range step must be positive in '" + text + "'");
  std::vector<std::int64_t> out;
  for (std::int64_t v = lo; v <= hi; v = detail::checked_add(v, step)) {
    out.push_back(v);
    if (hi - v < step) break;
  }
  return out;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"k-distance domination in grid graphs", "kdom"};
  app.require_subcommand(1);
  Args a;

  auto threads_opt = [&](CLI::App* sub) {
    sub->add_option("--threads", a.threads, "worker threads (0 = all cores)")->envname("KDOM_THREADS");
  };

  auto* construct_cmd = app.add_subcommand("construct", "build a dominating set");
  construct_cmd->add_option("-m", a.m, "columns")->required();
  construct_cmd->add_option("-n", a.n, "rows")->required();
  construct_cmd->add_option("-k", a.k, "distance")->required();
  construct_cmd->add_option("-o,--output", a.output, "set file (default stdout)");
  construct_cmd->add_option("--trace", a.trace, "trace file");
  construct_cmd->add_flag("--fallback", a.fallback, "repair corners locally if a shift fails");
  threads_opt(construct_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "check that a set file dominates its grid");
  verify_cmd->add_option("file", a.file, "set file or -")->required();
  verify_cmd->add_option("-k", a.k_override, "override the file's k");

  auto* bound_cmd = app.add_subcommand("bound", "closed-form upper bounds");
  bound_cmd->add_option("-m", a.m)->required();
  bound_cmd->add_option("-n", a.n)->required();
  bound_cmd->add_option("-k", a.k)->required();

  auto* table_cmd = app.add_subcommand("table", "bound comparison table");
  a.k = 3;
  table_cmd->add_option("-k", a.k, "distance")->capture_default_str();
  table_cmd->add_option("--range", a.range, "M values as A:B[:S]")->capture_default_str();
  table_cmd->add_option("--n-offset", a.n_offset, "N = M + offset")->capture_default_str();
  table_cmd->add_flag("--csv", a.csv);
  table_cmd->add_flag("--build", a.build, "also construct and report the set size");
  threads_opt(table_cmd);

  auto* exact_cmd = app.add_subcommand("exact", "exact domination number of a small grid");
  exact_cmd->add_option("-m", a.m)->required();
  exact_cmd->add_option("-n", a.n)->required();
  exact_cmd->add_option("-k", a.k)->required();
  exact_cmd->add_option("--budget", a.budget, "search node budget")->capture_default_str();

  auto* render_cmd = app.add_subcommand("render", "draw a set file");
  render_cmd->add_option("file", a.file, "set file or -")->required();
  render_cmd->add_option("--format", a.format)->check(CLI::IsMember({"ascii", "svg"}))->capture_default_str();
  render_cmd->add_flag("--coverage", a.coverage, "mark uncovered vertices (ascii)");
  render_cmd->add_flag("--diamonds", a.diamonds, "outline each point's k-ball (svg)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (construct_cmd->parsed()) return cmd_construct(a, out);
    if (verify_cmd->parsed()) return cmd_verify(a, in, out);
    if (bound_cmd->parsed()) return cmd_bound(a, out);
    if (table_cmd->parsed()) return cmd_table(a, out);
    if (exact_cmd->parsed()) return cmd_exact(a, out);
    if (render_cmd->parsed()) return cmd_render(a, in, out);
  } catch (const CornerRepairError& e) {
    err << "kdom: " << e.what() << '\n';
    return kExitNegative;
  } catch (const std::domain_error& e) {
    err << "kdom: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::runtime_error& e) {
    err << "kdom: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace kdom::cli
