#pragma once

// JSON documents for posets, arrangements and subspace arrangements.
//
// Poset:
//   { "elements": [{"id": "x", "rank": 1}, ...],
//     "covers":   [["lower", "upper"], ...],
//     "zeta":     [{"from": "x", "to": "y", "value": 2}, ...] }     (optional)
// Comparable pairs missing from "zeta" weigh 1. Integers may be JSON numbers
// or decimal strings (for values beyond 64 bits).
//
// Arrangement: a poset document whose elements also carry "dim" (null or
// absent for the empty intersection), "euler" and optionally "components",
// plus the header fields "carrier_dim", "carrier_euler" and, for bounding
// manifolds, "ambient_manifold_dim" and "ambient_manifold_euler". The optional
// "carrier_kind" is "closed" (default) or "affine".
//
// Subspaces:
//   { "ambient": n, "subspaces": [{"A": [["1", "-1/2"], ...], "b": ["0", ...]}] }
// Entries are integers or "p/q" strings; floating-point entries are rejected.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "arrcd/geometry.hpp"
#include "arrcd/intersection_poset.hpp"
#include "arrcd/poset.hpp"

namespace arrcd {

struct ArrangementDocument {
  IntersectionPoset poset;
  std::optional<BoundingManifold> manifold;
};

/// Throws ParseError for malformed documents and unreadable files.
QuasiGradedPoset parse_poset(std::string_view text);
ArrangementDocument parse_arrangement(std::string_view text);
SubspaceArrangement parse_subspaces(std::string_view text);

std::string read_file(const std::filesystem::path& path);

/// Pretty-printed with a stable key order; zeta lists only values other than 1.
std::string write_poset(const QuasiGradedPoset& p);
std::string write_arrangement(const ArrangementDocument& doc);

}  // namespace arrcd
