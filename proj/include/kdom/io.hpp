#pragma once

// Plain-text serialization.
//
// Set file, version 1:
//
//   kdom v1
//   <k> <m> <n> <count>
//   flags <comma-separated flags, or ->
//   <i> <j>            (count lines, row-major)
//
// Known flags: "projected" (every point lies in the grid) and
// "no-corner-removal". Lines starting with '#' are skipped on load.

#include <cstdint>
#include <iosfwd>
#include <string>

#include "kdom/construction.hpp"
#include "kdom/vertex_set.hpp"

namespace kdom {

struct SetFile {
  std::int64_t k = 1;
  std::int64_t m = 1;
  std::int64_t n = 1;
  bool projected = false;
  bool no_corner_removal = false;
  VertexSet points;

  friend bool operator==(const SetFile&, const SetFile&) = default;
};

/// Throws FormatError on malformed input, duplicates, or a projected file
/// with points outside [0, m-1] x [0, n-1].
SetFile load_set_file(std::istream& in);
void save_set_file(std::ostream& out, const SetFile& file);

SetFile to_set_file(const Construction& c);

/// One key=value per line.
void write_trace(std::ostream& out, const ConstructionTrace& trace);

}  // namespace kdom
