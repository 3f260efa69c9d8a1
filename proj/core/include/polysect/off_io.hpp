#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "polysect/polytope.hpp"

namespace polysect {

/// Contents of an OFF-like polytope file. Coordinates are exact: decimal
/// literals are read as base-10 rationals, "a/b" as written.
struct OffData {
  std::vector<Point> vertices;
  std::vector<std::vector<std::size_t>> facets;
};

/// Accepts an optional "OFF" header, a count line "nv [nf [ne]]", nv vertex
/// lines of 2-4 coordinates, then nf facet lines "m i1 ... im". '#' starts a
/// comment.
OffData read_off(std::istream& in);
OffData read_off_file(const std::filesystem::path& path);

/// Writes vertices as exact rationals and one line per facet. In 3D facet
/// vertices are listed counterclockwise seen from outside.
void write_off(std::ostream& out, const VPolytope& polytope);
std::string to_off(const VPolytope& polytope);

}  // namespace polysect
