#include "kdom/render.hpp"

#include <sstream>

namespace kdom {

std::string render_ascii(const GridDims& dims, Radius k, const VertexSet& s, const RenderOptions& opts) {
  const Box g = grid_box(dims);
  bool outside = false;
  for (const auto& q : s) outside = outside || !g.contains(q);
  const Box view = outside ? neighborhood_box(dims, k) : g;

  VertexSet uncovered;
  if (opts.coverage) uncovered = verify_domination(dims, k, s).uncovered;

  std::ostringstream out;
  for (std::int64_t j = view.j_hi(); j >= view.j_lo(); --j) {
    std::string row;
    for (std::int64_t i = view.i_lo(); i <= view.i_hi(); ++i) {
      const LatticePoint q{i, j};
      char ch = g.contains(q) ? '.' : ' ';
      if (s.contains(q)) ch = '#';
      else if (opts.coverage && uncovered.contains(q)) ch = 'x';
      row.push_back(ch);
    }
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out << row << '\n';
  }
  return out.str();
}

std::string render_svg(const GridDims& dims, Radius k, const VertexSet& s, const RenderOptions& opts) {
  constexpr int kCell = 20;
  const Box y = neighborhood_box(dims, k);
  const Box g = grid_box(dims);
  // Lattice point (i, j) sits at pixel (x(i), y(j)); one cell of padding.
  auto px = [&](std::int64_t i) { return (i - y.i_lo() + 1) * kCell; };
  auto py = [&](std::int64_t j) { return (y.j_hi() - j + 1) * kCell; };
  const std::int64_t width = (y.width() + 1) * kCell;
  const std::int64_t height = (y.height() + 1) * kCell;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n"
      << "<g stroke=\"#cccccc\" stroke-width=\"1\">\n";
  for (std::int64_t i = y.i_lo(); i <= y.i_hi(); ++i) {
    out << "<line x1=\"" << px(i) << "\" y1=\"" << py(y.j_hi()) << "\" x2=\"" << px(i) << "\" y2=\""
        << py(y.j_lo()) << "\"/>\n";
  }
  for (std::int64_t j = y.j_lo(); j <= y.j_hi(); ++j) {
    out << "<line x1=\"" << px(y.i_lo()) << "\" y1=\"" << py(j) << "\" x2=\"" << px(y.i_hi())
        << "\" y2=\"" << py(j) << "\"/>\n";
  }
  out << "</g>\n";
  auto frame = [&](const Box& b, const char* colour) {
    out << "<rect x=\"" << px(b.i_lo()) << "\" y=\"" << py(b.j_hi()) << "\" width=\""
        << (b.width() - 1) * kCell << "\" height=\"" << (b.height() - 1) * kCell
        << "\" fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"3\"/>\n";
  };
  frame(y, "green");
  frame(g, "red");
  if (opts.diamonds) {
    const std::int64_t kk = k.value();
    out << "<g fill=\"none\" stroke=\"red\" stroke-width=\"1.5\">\n";
    for (const auto& q : s) {
      out << "<polygon points=\"" << px(q.i - kk) << ',' << py(q.j) << ' ' << px(q.i) << ','
          << py(q.j + kk) << ' ' << px(q.i + kk) << ',' << py(q.j) << ' ' << px(q.i) << ','
          << py(q.j - kk) << "\"/>\n";
    }
    out << "</g>\n";
  }
  out << "<g fill=\"blue\">\n";
  for (const auto& q : s) {
    out << "<circle cx=\"" << px(q.i) << "\" cy=\"" << py(q.j) << "\" r=\"5\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace kdom
