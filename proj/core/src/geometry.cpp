#include "arrcd/geometry.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>

namespace arrcd {

AffineSubspace::AffineSubspace(RationalMatrix constraints, std::vector<Rational> rhs)
    : constraints_(std::move(constraints)), rhs_(std::move(rhs)) {
  if (constraints_.rows() != rhs_.size()) {
    throw ValidationError("subspace has " + std::to_string(constraints_.rows()) + " equations but " +
                          std::to_string(rhs_.size()) + " right-hand sides");
  }
}

bool AffineSubspace::consistent() const { return particular_solution(constraints_, rhs_).has_value(); }

std::size_t AffineSubspace::dim() const {
  if (!consistent()) throw InconsistentSubspace("subspace has no points");
  return ambient() - row_reduce(constraints_).rank();
}

bool AffineSubspace::central() const {
  return std::all_of(rhs_.begin(), rhs_.end(), [](const Rational& q) { return q == 0; });
}

namespace {

std::string serialize(const std::vector<Rational>& values) {
  std::string out;
  for (const auto& v : values) out += v.get_str() + ",";
  return out;
}

std::string index_label(const std::vector<std::size_t>& indices) {
  std::string out = "V{";
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(indices[k] + 1);
  }
  return out + "}";
}

void check_inputs(const SubspaceArrangement& arr) {
  for (std::size_t i = 0; i < arr.subspaces.size(); ++i) {
    const AffineSubspace& s = arr.subspaces[i];
    const std::string name = "subspace " + std::to_string(i + 1);
    if (s.ambient() != arr.ambient) {
      throw ValidationError(name + " lives in dimension " + std::to_string(s.ambient()) + ", not " +
                            std::to_string(arr.ambient));
    }
    if (!s.consistent()) throw InconsistentSubspace(name + " has no points");
    if (s.dim() == arr.ambient) throw ValidationError(name + " is the whole space");
  }
}

// ---------------------------------------------------------------------------
// Affine flats over Q, identified by the reduced echelon form of [A | b].

struct Flat {
  RationalMatrix equations;  // reduced, augmented, no zero rows
  std::size_t dim = 0;
  std::string key;
  std::vector<std::size_t> containing;  // inputs containing the flat
};

std::optional<Flat> make_flat(const RationalMatrix& augmented, std::size_t ambient) {
  Echelon e = row_reduce(augmented);
  if (e.rank() > 0 && e.pivots.back() == ambient) return std::nullopt;
  Flat f;
  f.equations = e.reduced.top_rows(e.rank());
  f.dim = ambient - e.rank();
  for (std::size_t i = 0; i < f.equations.rows(); ++i) f.key += serialize(f.equations.row(i)) + ";";
  return f;
}

RationalMatrix augmented_of(const AffineSubspace& s) {
  RationalMatrix m(s.constraints().rows(), s.ambient() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < s.ambient(); ++j) m(i, j) = s.constraints()(i, j);
    m(i, s.ambient()) = s.rhs()[i];
  }
  return m;
}

std::optional<Flat> intersect(const Flat& x, const Flat& y, std::size_t ambient) {
  RationalMatrix stacked(0, ambient + 1);
  for (std::size_t i = 0; i < x.equations.rows(); ++i) stacked.append_row(x.equations.row(i));
  for (std::size_t i = 0; i < y.equations.rows(); ++i) stacked.append_row(y.equations.row(i));
  return make_flat(stacked, ambient);
}

struct FlatClosure {
  std::vector<Flat> flats;  // flats[0] is the whole space
  bool saw_empty = false;
};

FlatClosure close_flats(const SubspaceArrangement& arr) {
  check_inputs(arr);
  const std::size_t n = arr.ambient;
  std::vector<Flat> inputs;
  for (const auto& s : arr.subspaces) inputs.push_back(*make_flat(augmented_of(s), n));

  FlatClosure out;
  std::map<std::string, std::size_t> seen;
  out.flats.push_back(*make_flat(RationalMatrix(0, n + 1), n));
  seen.emplace(out.flats[0].key, 0);
  for (std::size_t k = 0; k < out.flats.size(); ++k) {
    for (const Flat& v : inputs) {
      std::optional<Flat> meet = intersect(out.flats[k], v, n);
      if (!meet) {
        out.saw_empty = true;
        continue;
      }
      if (seen.emplace(meet->key, out.flats.size()).second) out.flats.push_back(std::move(*meet));
    }
  }
  for (Flat& f : out.flats) {
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      std::optional<Flat> meet = intersect(f, inputs[i], n);
      if (meet && meet->key == f.key) f.containing.push_back(i);
    }
  }
  return out;
}

bool subset_of(const std::vector<std::size_t>& small, const std::vector<std::size_t>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

/// Flats sorted by decreasing dimension then id, with the containment order
/// read off the containing-input sets.
struct FlatOrder {
  std::vector<std::size_t> order;
  std::vector<std::string> ids;
};

FlatOrder order_flats(const FlatClosure& closure, const std::string& whole_id) {
  FlatOrder out;
  for (std::size_t k = 0; k < closure.flats.size(); ++k) {
    out.ids.push_back(k == 0 ? whole_id : index_label(closure.flats[k].containing));
    out.order.push_back(k);
  }
  std::sort(out.order.begin(), out.order.end(), [&](std::size_t a, std::size_t b) {
    if (closure.flats[a].dim != closure.flats[b].dim) return closure.flats[a].dim > closure.flats[b].dim;
    return out.ids[a] < out.ids[b];
  });
  return out;
}

}  // namespace

IntersectionPoset intersection_lattice(const SubspaceArrangement& arr) {
  const FlatClosure closure = close_flats(arr);
  const long n = static_cast<long>(arr.ambient);
  const FlatOrder fo = order_flats(closure, "R^" + std::to_string(n));

  std::vector<ElementSpec> elements;
  std::vector<std::pair<std::string, std::string>> relations;
  EulerData euler;
  for (std::size_t k : fo.order) {
    elements.push_back({fo.ids[k], n - static_cast<long>(closure.flats[k].dim)});
    euler.set(fo.ids[k], 1);
    relations.emplace_back(fo.ids[k], "empty");
    for (std::size_t j : fo.order) {
      if (j != k && subset_of(closure.flats[k].containing, closure.flats[j].containing)) {
        relations.emplace_back(fo.ids[k], fo.ids[j]);
      }
    }
  }
  elements.push_back({"empty", n + 1});
  euler.set("empty", 0);

  QuasiGradedPoset poset = QuasiGradedPoset::from_relations(elements, relations);
  std::vector<std::optional<long>> dims(poset.size());
  for (std::size_t k : fo.order) dims[poset.index(fo.ids[k])] = static_cast<long>(closure.flats[k].dim);
  return IntersectionPoset(std::move(poset), n, std::move(dims), std::move(euler), CarrierKind::affine);
}

IntersectionPoset spherize(const SubspaceArrangement& arr) {
  for (std::size_t i = 0; i < arr.subspaces.size(); ++i) {
    if (!arr.subspaces[i].central()) {
      throw NotCentral("subspace " + std::to_string(i + 1) + " does not pass through the origin");
    }
  }
  const FlatClosure closure = close_flats(arr);
  for (std::size_t i = 0; i < arr.subspaces.size(); ++i) {
    if (arr.subspaces[i].dim() == 0) {
      throw ValidationError("subspace " + std::to_string(i + 1) + " is the origin and misses the sphere");
    }
  }
  const long n = static_cast<long>(arr.ambient);
  const long carrier = n - 1;
  const FlatOrder fo = order_flats(closure, "S^" + std::to_string(carrier));

  std::vector<ElementSpec> elements;
  std::vector<std::pair<std::string, std::string>> relations;
  EulerData euler;
  std::vector<std::size_t> spheres;
  for (std::size_t k : fo.order) {
    if (closure.flats[k].dim > 0) spheres.push_back(k);
  }
  for (std::size_t k : spheres) {
    const long d = static_cast<long>(closure.flats[k].dim) - 1;
    elements.push_back({fo.ids[k], carrier - d});
    euler.set(fo.ids[k], d % 2 == 0 ? 2 : 0);
    relations.emplace_back(fo.ids[k], "empty");
    for (std::size_t j : spheres) {
      if (j != k && subset_of(closure.flats[k].containing, closure.flats[j].containing)) {
        relations.emplace_back(fo.ids[k], fo.ids[j]);
      }
    }
  }
  elements.push_back({"empty", carrier + 1});
  euler.set("empty", 0);

  QuasiGradedPoset poset = QuasiGradedPoset::from_relations(elements, relations);
  std::vector<std::optional<long>> dims(poset.size());
  for (std::size_t k : spheres) dims[poset.index(fo.ids[k])] = static_cast<long>(closure.flats[k].dim) - 1;
  return IntersectionPoset(std::move(poset), carrier, std::move(dims), std::move(euler), CarrierKind::closed);
}

// ---------------------------------------------------------------------------
// Toric images. A connected subtorus coset is {x : C x = e (mod Z^r)} with C a
// saturated integer basis (Hermite form) of the normal lattice; the fractional
// offsets e then identify it uniquely.

namespace {

struct Coset {
  IntegerMatrix normal;
  std::vector<Rational> offset;
  std::vector<Rational> point;
  std::size_t dim = 0;
  std::string key;
};

Coset make_coset(const IntegerMatrix& normal_basis, std::vector<Rational> point) {
  Coset c;
  c.normal = hermite_normal_form(normal_basis);
  c.dim = point.size() - c.normal.rows();
  c.offset = multiply(c.normal, point);
  for (auto& e : c.offset) e = fractional_part(e);
  c.point = std::move(point);
  for (std::size_t i = 0; i < c.normal.rows(); ++i) {
    for (std::size_t j = 0; j < c.normal.cols(); ++j) c.key += c.normal(i, j).get_str() + ",";
    c.key += ";";
  }
  c.key += "|" + serialize(c.offset);
  return c;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// small is contained in big.
bool contains(const Coset& big, const Coset& small) {
  if (big.dim < small.dim) return false;
  // Directions: the normal lattice of big lies in the normal space of small.
  RationalMatrix stacked = to_rational(small.normal);
  for (std::size_t i = 0; i < big.normal.rows(); ++i) {
    std::vector<Rational> row(big.normal.cols());
    for (std::size_t j = 0; j < row.size(); ++j) row[j] = big.normal(i, j);
    stacked.append_row(row);
  }
  if (stacked.rows() > 0 && row_reduce(stacked).rank() != small.normal.rows()) return false;
  const std::vector<Rational> image = multiply(big.normal, small.point);
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (!is_integer(image[i] - big.offset[i])) return false;
  }
  return true;
}

/// Connected components of the intersection of two cosets.
std::vector<Coset> intersect(const Coset& x, const Coset& y, std::size_t max_components) {
  const std::size_t n = x.point.size();
  IntegerMatrix stacked(0, n);
  std::vector<Rational> rhs;
  for (const Coset* c : {&x, &y}) {
    for (std::size_t i = 0; i < c->normal.rows(); ++i) {
      std::vector<Integer> row(n);
      for (std::size_t j = 0; j < n; ++j) row[j] = c->normal(i, j);
      stacked.append_row(row);
      rhs.push_back(c->offset[i]);
    }
  }
  // left * stacked * right = D; with x = right * y the system reads D y = left * rhs (mod 1).
  SmithForm s = smith_normal_form(stacked);
  std::vector<Rational> shifted(rhs.size());
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    for (std::size_t k = 0; k < rhs.size(); ++k) shifted[i] += Rational(s.left(i, k)) * rhs[k];
  }
  for (std::size_t i = s.rank; i < shifted.size(); ++i) {
    if (!is_integer(shifted[i])) return {};
  }
  Integer count = 1;
  for (std::size_t i = 0; i < s.rank; ++i) count *= s.diagonal(i, i);
  if (count > max_components) {
    throw ValidationError("intersection has " + count.get_str() + " components, above the configured bound");
  }
  const IntegerMatrix normal = s.right_inverse.top_rows(s.rank);
  std::vector<Coset> out;
  std::vector<unsigned long> shift(s.rank, 0);
  for (;;) {
    std::vector<Rational> y(n);
    for (std::size_t i = 0; i < s.rank; ++i) {
      y[i] = (shifted[i] + Rational(shift[i])) / Rational(s.diagonal(i, i));
      y[i].canonicalize();
    }
    std::vector<Rational> point(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < s.rank; ++k) point[i] += Rational(s.right(i, k)) * y[k];
    }
    out.push_back(make_coset(normal, std::move(point)));
    std::size_t i = 0;
    while (i < s.rank && ++shift[i] == s.diagonal(i, i).get_ui()) shift[i++] = 0;
    if (i == s.rank) break;
  }
  return out;
}

Coset image_of(const AffineSubspace& s) {
  std::vector<Rational> point = *particular_solution(s.constraints(), s.rhs());
  return make_coset(saturated_row_basis(clear_denominators(s.constraints())), std::move(point));
}

struct Component {
  Coset coset;
  std::vector<std::size_t> containing;
};

}  // namespace

IntersectionPoset torify(const SubspaceArrangement& arr, TorifyOptions options) {
  check_inputs(arr);
  const std::size_t n = arr.ambient;
  std::vector<Coset> inputs;
  for (const auto& s : arr.subspaces) inputs.push_back(image_of(s));

  std::vector<Component> comps;
  std::map<std::string, std::size_t> seen;
  comps.push_back({make_coset(IntegerMatrix(0, n), std::vector<Rational>(n)), {}});
  seen.emplace(comps[0].coset.key, 0);
  for (std::size_t k = 0; k < comps.size(); ++k) {
    for (const Coset& v : inputs) {
      if (contains(v, comps[k].coset)) continue;
      for (Coset& c : intersect(comps[k].coset, v, options.max_components)) {
        if (seen.emplace(c.key, comps.size()).second) comps.push_back({std::move(c), {}});
        if (comps.size() > options.max_components) {
          throw ValidationError("toric arrangement has more components than the configured bound");
        }
      }
    }
  }
  for (Component& c : comps) {
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      if (contains(inputs[i], c.coset)) c.containing.push_back(i);
    }
  }

  // Groups of components. Start from equal containing sets, then split until
  // any component of one group inside another group implies all are.
  std::vector<std::size_t> group(comps.size());
  if (options.per_component) {
    for (std::size_t k = 0; k < comps.size(); ++k) group[k] = k;
  } else {
    std::map<std::vector<std::size_t>, std::size_t> by_set;
    for (std::size_t k = 0; k < comps.size(); ++k) {
      group[k] = by_set.emplace(comps[k].containing, by_set.size()).first->second;
    }
    std::vector<std::vector<bool>> inside(comps.size(), std::vector<bool>(comps.size()));
    for (std::size_t a = 0; a < comps.size(); ++a) {
      for (std::size_t b = 0; b < comps.size(); ++b) inside[a][b] = a != b && contains(comps[b].coset, comps[a].coset);
    }
    for (;;) {
      std::map<std::pair<std::size_t, std::set<std::size_t>>, std::size_t> by_signature;
      std::vector<std::size_t> refined(comps.size());
      for (std::size_t a = 0; a < comps.size(); ++a) {
        std::set<std::size_t> above;
        for (std::size_t b = 0; b < comps.size(); ++b) {
          if (inside[a][b]) above.insert(group[b]);
        }
        refined[a] = by_signature.emplace(std::pair{group[a], std::move(above)}, by_signature.size()).first->second;
      }
      const bool stable = by_signature.size() == std::set<std::size_t>(group.begin(), group.end()).size();
      group = std::move(refined);
      if (stable) break;
    }
  }

  const std::size_t group_count = *std::max_element(group.begin(), group.end()) + 1;
  std::vector<std::vector<std::size_t>> members(group_count);
  for (std::size_t k = 0; k < comps.size(); ++k) members[group[k]].push_back(k);
  members.erase(std::remove_if(members.begin(), members.end(), [](const auto& m) { return m.empty(); }),
                members.end());

  for (const auto& m : members) {
    for (std::size_t k : m) {
      if (comps[k].coset.dim != comps[m.front()].coset.dim) {
        throw InternalConsistencyError("toric intersection with components of different dimensions");
      }
    }
  }

  // Ids: V{I}, with a #k suffix when several groups share I.
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> sharing;
  for (std::size_t g = 0; g < members.size(); ++g) sharing[comps[members[g].front()].containing].push_back(g);
  std::vector<std::string> ids(members.size());
  for (const auto& [set, groups] : sharing) {
    for (std::size_t k = 0; k < groups.size(); ++k) {
      std::string id = set.empty() ? "T^" + std::to_string(n) : index_label(set);
      if (groups.size() > 1) id += "#" + std::to_string(k + 1);
      ids[groups[k]] = id;
    }
  }

  std::vector<std::size_t> order(members.size());
  for (std::size_t g = 0; g < order.size(); ++g) order[g] = g;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const std::size_t da = comps[members[a].front()].coset.dim;
    const std::size_t db = comps[members[b].front()].coset.dim;
    if (da != db) return da > db;
    return ids[a] < ids[b];
  });

  auto group_inside = [&](std::size_t small, std::size_t big) {
    for (std::size_t a : members[small]) {
      bool found = false;
      for (std::size_t b : members[big]) found = found || contains(comps[b].coset, comps[a].coset);
      if (!found) return false;
    }
    return true;
  };

  const long carrier = static_cast<long>(n);
  std::vector<ElementSpec> elements;
  std::vector<std::pair<std::string, std::string>> relations;
  EulerData euler;
  for (std::size_t g : order) {
    const std::size_t d = comps[members[g].front()].coset.dim;
    elements.push_back({ids[g], carrier - static_cast<long>(d)});
    euler.set(ids[g], d == 0 ? Integer(members[g].size()) : Integer(0));
    relations.emplace_back(ids[g], "empty");
    for (std::size_t h : order) {
      if (h != g && group_inside(h, g)) relations.emplace_back(ids[g], ids[h]);
    }
  }
  elements.push_back({"empty", carrier + 1});
  euler.set("empty", 0);

  QuasiGradedPoset poset = QuasiGradedPoset::from_relations(elements, relations);
  std::vector<std::optional<long>> dims(poset.size());
  std::vector<std::optional<Integer>> counts(poset.size());
  for (std::size_t g : order) {
    const std::size_t x = poset.index(ids[g]);
    dims[x] = static_cast<long>(comps[members[g].front()].coset.dim);
    counts[x] = Integer(members[g].size());
  }
  IntersectionPoset out(std::move(poset), carrier, std::move(dims), std::move(euler), CarrierKind::closed,
                        std::move(counts));
  if (auto violations = out.validate(); !violations.empty()) {
    throw InternalConsistencyError("torify produced an invalid poset: " + violations.front().kind + ": " +
                                   violations.front().detail);
  }
  return out;
}

// ---------------------------------------------------------------------------

Integer region_count_oracle(const SubspaceArrangement& lines) {
  if (lines.ambient != 2) throw ValidationError("region counting needs lines in the plane");
  check_inputs(lines);
  std::vector<Flat> distinct;
  std::set<std::string> keys;
  for (const auto& s : lines.subspaces) {
    if (s.dim() != 1) throw ValidationError("region counting needs lines in the plane");
    Flat f = *make_flat(augmented_of(s), 2);
    if (keys.insert(f.key).second) distinct.push_back(std::move(f));
  }
  if (distinct.empty()) return 1;

  // Compactify the plane to a sphere: every line becomes a loop through the
  // point at infinity. Vertices: crossings plus infinity; a line carrying v
  // crossings contributes v + 1 edges; the graph is connected.
  std::set<std::string> vertices;
  Integer edges = 0;
  for (const Flat& line : distinct) {
    std::set<std::string> on_line;
    for (const Flat& other : distinct) {
      if (&other == &line) continue;
      if (auto meet = intersect(line, other, 2)) on_line.insert(meet->key);
    }
    vertices.insert(on_line.begin(), on_line.end());
    edges += static_cast<unsigned long>(on_line.size() + 1);
  }
  const Integer vertex_count = static_cast<unsigned long>(vertices.size() + 1);
  return edges - vertex_count + 2;
}

}  // namespace arrcd
