#include "fixtures.hpp"

namespace arrcd::testing {

namespace {

AffineSubspace subspace(const std::vector<std::vector<long>>& rows, const std::vector<long>& rhs) {
  RationalMatrix a(rows.size(), rows.empty() ? 0 : rows.front().size());
  std::vector<Rational> b;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) a(i, j) = rows[i][j];
    b.emplace_back(rhs[i]);
  }
  return AffineSubspace(std::move(a), std::move(b));
}

SubspaceArrangement lines(std::vector<AffineSubspace> subspaces) { return {2, std::move(subspaces)}; }

/// Keeps the first `keep` coordinates free: x_j = 0 for j >= keep.
AffineSubspace coordinate_subspace(unsigned n, unsigned keep) {
  std::vector<std::vector<long>> rows;
  for (unsigned j = keep; j < n; ++j) {
    std::vector<long> row(n, 0);
    row[j] = 1;
    rows.push_back(row);
  }
  return subspace(rows, std::vector<long>(rows.size(), 0));
}

std::vector<long> moment_row(long t, unsigned d) {
  std::vector<long> row;
  long power = 1;
  for (unsigned j = 0; j < d; ++j, power *= t) row.push_back(power);
  return row;
}

IntersectionPoset make_arrangement(const std::vector<std::tuple<std::string, long, std::optional<long>, long>>& elements,
                                   const std::vector<std::pair<std::string, std::string>>& relations,
                                   long carrier_dim) {
  std::vector<ElementSpec> specs;
  EulerData euler;
  for (const auto& [id, rank, dim, chi] : elements) {
    specs.push_back({id, rank});
    euler.set(id, chi);
  }
  QuasiGradedPoset poset = QuasiGradedPoset::from_relations(specs, relations);
  std::vector<std::optional<long>> dims(poset.size());
  for (const auto& [id, rank, dim, chi] : elements) dims[poset.index(id)] = dim;
  return IntersectionPoset(std::move(poset), carrier_dim, std::move(dims), std::move(euler));
}

}  // namespace

AffineSubspace hyperplane(const std::vector<long>& normal, long rhs) { return subspace({normal}, {rhs}); }

SubspaceArrangement two_planes_and_line() {
  return {3, {hyperplane({1, 0, 0}, 0), hyperplane({0, 1, 0}, 0), subspace({{1, -1, 0}, {0, 1, -1}}, {0, 0})}};
}

IntersectionPoset two_planes_and_line_spherical() { return spherize(two_planes_and_line()); }

IntersectionPoset two_planes_and_line_points() {
  return make_arrangement(
      {{"S2", 0, 2, 2},
       {"C1", 1, 1, 0},
       {"C2", 1, 1, 0},
       {"north", 2, 0, 1},
       {"south", 2, 0, 1},
       {"p", 2, 0, 1},
       {"q", 2, 0, 1},
       {"empty", 3, std::nullopt, 0}},
      {{"S2", "C1"}, {"S2", "C2"}, {"C1", "north"}, {"C1", "south"}, {"C2", "north"}, {"C2", "south"},
       {"S2", "p"}, {"S2", "q"}, {"north", "empty"}, {"south", "empty"}, {"p", "empty"}, {"q", "empty"}},
      2);
}

QuasiGradedPoset two_planes_and_line_faces() {
  std::vector<ElementSpec> elements{{"0", 0},  {"a", 1},  {"b", 1},  {"n", 1},  {"s", 1},  {"e1", 2},
                                    {"e2", 2}, {"e3", 2}, {"e4", 2}, {"A", 3},  {"F", 3},  {"G", 3},
                                    {"B", 3},  {"1", 4}};
  std::vector<std::pair<std::string, std::string>> covers{
      {"0", "a"},  {"0", "b"},  {"0", "n"},  {"0", "s"},  {"n", "e1"}, {"n", "e2"}, {"n", "e3"},
      {"n", "e4"}, {"s", "e1"}, {"s", "e2"}, {"s", "e3"}, {"s", "e4"}, {"e1", "A"}, {"e2", "A"},
      {"e1", "F"}, {"e3", "F"}, {"e2", "G"}, {"e4", "G"}, {"e3", "B"}, {"e4", "B"}, {"a", "A"},
      {"b", "B"},  {"A", "1"},  {"F", "1"},  {"G", "1"},  {"B", "1"}};
  std::vector<ZetaEntry> zeta{{"0", "A", 0}, {"0", "B", 0}, {"a", "A", 0}, {"b", "B", 0}};
  return QuasiGradedPoset::from_relations(elements, covers, zeta);
}

IntersectionPoset two_curves(unsigned k) {
  std::vector<std::tuple<std::string, long, std::optional<long>, long>> elements{
      {"S2", 0, 2, 2}, {"curve1", 1, 1, 0}, {"curve2", 1, 1, 0}, {"empty", 3, std::nullopt, 0}};
  std::vector<std::pair<std::string, std::string>> relations{
      {"S2", "curve1"}, {"S2", "curve2"}, {"curve1", "empty"}, {"curve2", "empty"}};
  for (unsigned i = 1; i <= k; ++i) {
    const std::string id = "pair" + std::to_string(i);
    elements.emplace_back(id, 2, 0, 2);
    relations.emplace_back("curve1", id);
    relations.emplace_back("curve2", id);
    relations.emplace_back(id, "empty");
  }
  return make_arrangement(elements, relations, 2);
}

SubspaceArrangement complete_flag(unsigned n) {
  SubspaceArrangement arr{n, {}};
  for (unsigned i = 1; i < n; ++i) arr.subspaces.push_back(coordinate_subspace(n, i));
  return arr;
}

SubspaceArrangement toric_flag(unsigned n) {
  SubspaceArrangement arr{n, {}};
  for (unsigned i = 0; i < n; ++i) arr.subspaces.push_back(coordinate_subspace(n, i));
  return arr;
}

SubspaceArrangement generic_hyperplanes(unsigned m, unsigned d) {
  SubspaceArrangement arr{d, {}};
  for (unsigned i = 0; i < m; ++i) {
    const long t = static_cast<long>(i) + 1;
    long top = 1;
    for (unsigned j = 0; j < d; ++j) top *= t;
    arr.subspaces.push_back(hyperplane(moment_row(t, d), top));
  }
  return arr;
}

SubspaceArrangement generic_central_hyperplanes(unsigned m, unsigned d) {
  SubspaceArrangement arr{d, {}};
  for (unsigned i = 0; i < m; ++i) arr.subspaces.push_back(hyperplane(moment_row(static_cast<long>(i) + 1, d), 0));
  return arr;
}

std::vector<NamedSubspaces> planar_line_fixtures() {
  return {
      {"one line", lines({hyperplane({1, 0}, 0)})},
      {"two parallel", lines({hyperplane({1, 0}, 0), hyperplane({1, 0}, 1)})},
      {"two crossing", lines({hyperplane({1, 0}, 0), hyperplane({0, 1}, 0)})},
      {"three generic", generic_hyperplanes(3, 2)},
      {"three concurrent", lines({hyperplane({1, 0}, 0), hyperplane({0, 1}, 0), hyperplane({1, 1}, 0)})},
      {"three parallel", lines({hyperplane({1, 0}, 0), hyperplane({1, 0}, 1), hyperplane({1, 0}, 2)})},
      {"two parallel and a transversal", lines({hyperplane({1, 0}, 0), hyperplane({1, 0}, 1), hyperplane({0, 1}, 0)})},
      {"grid", lines({hyperplane({1, 0}, 0), hyperplane({1, 0}, 1), hyperplane({0, 1}, 0), hyperplane({0, 1}, 1)})},
      {"four generic", generic_hyperplanes(4, 2)},
      {"repeated line", lines({hyperplane({1, 0}, 0), hyperplane({2, 0}, 0), hyperplane({0, 1}, 0)})},
      {"pencil of four", lines({hyperplane({1, 0}, 0), hyperplane({0, 1}, 0), hyperplane({1, 1}, 0),
                                hyperplane({1, -1}, 0)})},
      {"triple point and two more", lines({hyperplane({1, 0}, 0), hyperplane({0, 1}, 0), hyperplane({1, 1}, 0),
                                           hyperplane({1, 0}, 1), hyperplane({0, 1}, 1)})},
  };
}

std::vector<NamedSubspaces> central_fixtures() {
  std::vector<NamedSubspaces> out{
      {"two great circles", {3, {hyperplane({1, 0, 0}, 0), hyperplane({0, 1, 0}, 0)}}},
      {"two planes and a line", two_planes_and_line()},
      {"coordinate planes", {3, {hyperplane({1, 0, 0}, 0), hyperplane({0, 1, 0}, 0), hyperplane({0, 0, 1}, 0)}}},
      {"braid arrangement", {3, {hyperplane({1, -1, 0}, 0), hyperplane({0, 1, -1}, 0), hyperplane({1, 0, -1}, 0)}}},
      {"three generic planes", generic_central_hyperplanes(3, 3)},
      {"four generic planes", generic_central_hyperplanes(4, 3)},
      {"five generic hyperplanes in R^4", generic_central_hyperplanes(5, 4)},
      {"two transverse planes in R^4", {4, {subspace({{1, 0, 0, 0}, {0, 1, 0, 0}}, {0, 0}),
                                            subspace({{0, 0, 1, 0}, {0, 0, 0, 1}}, {0, 0})}}},
      {"lines in R^3", {3, {subspace({{1, 0, 0}, {0, 1, 0}}, {0, 0}), subspace({{0, 1, 0}, {0, 0, 1}}, {0, 0})}}},
  };
  for (unsigned n = 2; n <= 5; ++n) out.push_back({"complete flag in R^" + std::to_string(n), complete_flag(n)});
  return out;
}

std::vector<NamedSubspaces> toric_fixtures() {
  auto rational_line = [] {
    RationalMatrix a(1, 2);
    a(0, 0) = 2;
    a(0, 1) = 3;
    return AffineSubspace(std::move(a), {Rational(1, 2)});
  };
  std::vector<NamedSubspaces> out{
      {"one circle", lines({hyperplane({1, 0}, 0)})},
      {"one rational line", lines({rational_line()})},
      {"two circles", lines({hyperplane({1, 0}, 0), hyperplane({0, 1}, 0)})},
      {"two diagonals", lines({hyperplane({1, 1}, 0), hyperplane({1, -1}, 0)})},
      {"three circles through a point", lines({hyperplane({1, 0}, 0), hyperplane({0, 1}, 0), hyperplane({1, 1}, 0)})},
      {"parallel circles and a meridian", lines({hyperplane({1, 0}, 0), hyperplane({2, 0}, 1), hyperplane({0, 1}, 0)})},
      {"plane and line in T^3", {3, {hyperplane({0, 0, 1}, 0), subspace({{1, 0, 0}, {0, 1, 0}}, {0, 0})}}},
      {"two planes in T^3", {3, {hyperplane({1, 0, 0}, 0), hyperplane({1, 2, 0}, 0)}}},
  };
  for (unsigned n = 2; n <= 5; ++n) out.push_back({"toric flag in T^" + std::to_string(n), toric_flag(n)});
  return out;
}

std::vector<NamedArrangement> stratified_fixtures() {
  std::vector<NamedArrangement> out{
      {"two planes and a line, grouped", two_planes_and_line_spherical(), 1},
      {"two planes and a line, points", two_planes_and_line_points(), 1},
  };
  for (unsigned k = 0; k <= 6; ++k) out.push_back({"two curves, k=" + std::to_string(k), two_curves(k), 1});
  for (unsigned n = 1; n <= 8; ++n) {
    out.push_back({"complete flag on S^" + std::to_string(n - 1), spherize(complete_flag(n)), 1});
  }
  for (const auto& f : central_fixtures()) out.push_back({"sphere: " + f.name, spherize(f.arrangement), 1});
  for (const auto& f : toric_fixtures()) {
    out.push_back({"torus: " + f.name, torify(f.arrangement), 0});
    out.push_back({"torus, per component: " + f.name, torify(f.arrangement, {.per_component = true}), 0});
  }
  return out;
}

}  // namespace arrcd::testing
