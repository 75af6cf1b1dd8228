#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "minkpack/bounds.hpp"
#include "minkpack/packing.hpp"

namespace minkpack::io {

// Disc file: {"vertices": [[x, y], ...]}, counterclockwise. Reading normalizes
// and validates; malformed text throws InvalidInput.
ConvexDisc parse_disc(std::string_view json_text);
std::string disc_json(const ConvexDisc& d);

// Packing file: {"disc": {...}, "centers": [[x, y], ...], "generator": {...}}.
Packing parse_packing(std::string_view json_text);
std::string packing_json(const Packing& p);

// Whole-file helpers; unreadable or unwritable paths throw InvalidInput.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

// 12 significant digits, '.' decimal point.
std::string format_number(double x);

std::string stats_csv_header();
std::string stats_csv_row(const PackingStats& s);

struct BoundRow {
  double lambda = 0.0;
  double d0p = 0.0;
  Branch branch = Branch::LowD0;
  double bound = 0.0;
  double corollary1 = 0.0;
  double corollary2 = 0.0;
};

BoundRow bound_row(double lambda, double d0p);
std::string bound_csv_header();
std::string bound_csv_row(const BoundRow& r);

struct SvgOptions {
  bool edges = true;
  bool cells = true;
  double pixels_per_unit = 10.0;
};

// Translates as <polygon> elements (one per center), touching edges as
// <line> elements, interior cells as <path> elements. g and s may be null.
std::string render_svg(const Packing& p, const NeighbourGraph* g, const Subdivision* s, const SvgOptions& opt = {});

}  // namespace minkpack::io
