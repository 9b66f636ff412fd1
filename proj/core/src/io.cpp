#include "arrcd/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace arrcd {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& object, const char* name, const std::string& where) {
  if (!object.is_object()) throw ParseError(where + " must be an object");
  auto it = object.find(name);
  if (it == object.end()) throw ParseError(where + " lacks field \"" + name + "\"");
  return *it;
}

const json* optional_field(const json& object, const char* name) {
  auto it = object.find(name);
  return it == object.end() || it->is_null() ? nullptr : &*it;
}

Integer to_integer(const json& value, const std::string& where) {
  if (value.is_number_integer()) {
    return value.is_number_unsigned() ? Integer(value.get<unsigned long>()) : Integer(value.get<long>());
  }
  if (value.is_string()) {
    const std::string& s = value.get_ref<const std::string&>();
    Rational q = parse_rational(s);
    if (s.find('/') == std::string::npos) return q.get_num();
  }
  throw ParseError(where + " must be an integer");
}

long to_long(const json& value, const std::string& where) {
  if (!value.is_number_integer()) throw ParseError(where + " must be an integer");
  return value.get<long>();
}

std::string to_id(const json& value, const std::string& where) {
  if (!value.is_string()) throw ParseError(where + " must be a string id");
  return value.get<std::string>();
}

Rational to_rational_entry(const json& value, const std::string& where) {
  if (value.is_number_float()) throw NotRational(where + " is a floating-point number; write it as \"p/q\"");
  if (value.is_number_integer()) return Rational(to_integer(value, where));
  if (value.is_string()) return parse_rational(value.get<std::string>());
  throw ParseError(where + " must be an integer or a \"p/q\" string");
}

ordered_json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

struct PosetParts {
  std::vector<ElementSpec> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  std::vector<ZetaEntry> zeta;
};

PosetParts read_poset_parts(const json& doc) {
  PosetParts parts;
  const json& elements = field(doc, "elements", "document");
  if (!elements.is_array()) throw ParseError("\"elements\" must be an array");
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const std::string where = "element " + std::to_string(i + 1);
    parts.elements.push_back({to_id(field(elements[i], "id", where), where + " id"),
                              to_long(field(elements[i], "rank", where), where + " rank")});
  }
  if (const json* covers = optional_field(doc, "covers")) {
    if (!covers->is_array()) throw ParseError("\"covers\" must be an array");
    for (const auto& pair : *covers) {
      if (!pair.is_array() || pair.size() != 2) throw ParseError("each cover must be a pair of ids");
      parts.covers.emplace_back(to_id(pair[0], "cover"), to_id(pair[1], "cover"));
    }
  }
  if (const json* zeta = optional_field(doc, "zeta")) {
    if (!zeta->is_array()) throw ParseError("\"zeta\" must be an array");
    for (const auto& entry : *zeta) {
      parts.zeta.push_back({to_id(field(entry, "from", "zeta entry"), "zeta from"),
                            to_id(field(entry, "to", "zeta entry"), "zeta to"),
                            to_integer(field(entry, "value", "zeta entry"), "zeta value")});
    }
  }
  return parts;
}

ordered_json poset_json(const QuasiGradedPoset& p) {
  ordered_json covers = ordered_json::array();
  for (const auto& [x, y] : p.covers()) covers.push_back({p.id(x), p.id(y)});
  ordered_json zeta = ordered_json::array();
  for (std::size_t x : p.by_rank()) {
    for (std::size_t y : p.by_rank()) {
      if (p.less(x, y) && p.zeta(x, y) != 1) {
        zeta.push_back({{"from", p.id(x)}, {"to", p.id(y)}, {"value", integer_json(p.zeta(x, y))}});
      }
    }
  }
  ordered_json out;
  out["elements"] = ordered_json::array();
  for (std::size_t x = 0; x < p.size(); ++x) out["elements"].push_back({{"id", p.id(x)}, {"rank", p.rank(x)}});
  out["covers"] = std::move(covers);
  out["zeta"] = std::move(zeta);
  return out;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

QuasiGradedPoset parse_poset(std::string_view text) {
  PosetParts parts = read_poset_parts(parse_document(text));
  return QuasiGradedPoset::from_relations(parts.elements, parts.covers, parts.zeta);
}

ArrangementDocument parse_arrangement(std::string_view text) {
  const json doc = parse_document(text);
  PosetParts parts = read_poset_parts(doc);
  QuasiGradedPoset poset = QuasiGradedPoset::from_relations(parts.elements, parts.covers, parts.zeta);

  const json& elements = doc.at("elements");
  std::vector<std::optional<long>> dims(poset.size());
  std::vector<std::optional<Integer>> components(poset.size());
  bool any_components = false;
  EulerData euler;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const std::string& id = parts.elements[i].id;
    const std::size_t x = poset.index(id);
    if (const json* d = optional_field(elements[i], "dim")) dims[x] = to_long(*d, "dim of " + id);
    if (const json* chi = optional_field(elements[i], "euler")) euler.set(id, to_integer(*chi, "euler of " + id));
    if (const json* c = optional_field(elements[i], "components")) {
      components[x] = to_integer(*c, "components of " + id);
      any_components = true;
    }
  }
  if (!any_components) components.clear();

  const long carrier_dim = to_long(field(doc, "carrier_dim", "arrangement"), "carrier_dim");
  CarrierKind kind = CarrierKind::closed;
  if (const json* k = optional_field(doc, "carrier_kind")) {
    const std::string name = to_id(*k, "carrier_kind");
    if (name == "affine") {
      kind = CarrierKind::affine;
    } else if (name != "closed") {
      throw ParseError("carrier_kind must be \"closed\" or \"affine\", not \"" + name + "\"");
    }
  }
  IntersectionPoset arrangement(std::move(poset), carrier_dim, std::move(dims), std::move(euler), kind,
                                std::move(components));

  if (const json* chi = optional_field(doc, "carrier_euler")) {
    const Integer declared = to_integer(*chi, "carrier_euler");
    const QuasiGradedPoset& p = arrangement.poset();
    if (p.valid() && arrangement.euler().contains(p.id(p.bottom())) && arrangement.chi(p.bottom()) != declared) {
      throw ValidationError("carrier_euler " + declared.get_str() + " differs from the Euler characteristic " +
                            arrangement.chi(p.bottom()).get_str() + " of the minimum");
    }
  }

  std::optional<BoundingManifold> manifold;
  const json* m_dim = optional_field(doc, "ambient_manifold_dim");
  const json* m_chi = optional_field(doc, "ambient_manifold_euler");
  if ((m_dim == nullptr) != (m_chi == nullptr)) {
    throw ParseError("ambient_manifold_dim and ambient_manifold_euler must be given together");
  }
  if (m_dim) {
    manifold = BoundingManifold{to_long(*m_dim, "ambient_manifold_dim"), to_integer(*m_chi, "ambient_manifold_euler")};
    if (manifold->dim != carrier_dim + 1) {
      throw ValidationError("ambient manifold of dimension " + std::to_string(manifold->dim) +
                            " cannot be bounded by a carrier of dimension " + std::to_string(carrier_dim));
    }
  }
  return ArrangementDocument{std::move(arrangement), std::move(manifold)};
}

SubspaceArrangement parse_subspaces(std::string_view text) {
  const json doc = parse_document(text);
  const long ambient = to_long(field(doc, "ambient", "document"), "ambient");
  if (ambient < 1) throw ValidationError("ambient dimension must be positive");
  SubspaceArrangement out;
  out.ambient = static_cast<std::size_t>(ambient);
  const json& subspaces = field(doc, "subspaces", "document");
  if (!subspaces.is_array()) throw ParseError("\"subspaces\" must be an array");
  for (std::size_t s = 0; s < subspaces.size(); ++s) {
    const std::string where = "subspace " + std::to_string(s + 1);
    const json& rows = field(subspaces[s], "A", where);
    const json& rhs = field(subspaces[s], "b", where);
    if (!rows.is_array() || !rhs.is_array() || rows.size() != rhs.size()) {
      throw ParseError(where + ": A and b must be arrays of equal length");
    }
    RationalMatrix a(rows.size(), out.ambient);
    std::vector<Rational> b(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!rows[i].is_array() || rows[i].size() != out.ambient) {
        throw ParseError(where + ": row " + std::to_string(i + 1) + " must have " + std::to_string(ambient) +
                         " entries");
      }
      for (std::size_t j = 0; j < out.ambient; ++j) a(i, j) = to_rational_entry(rows[i][j], where + " A entry");
      b[i] = to_rational_entry(rhs[i], where + " b entry");
    }
    out.subspaces.emplace_back(std::move(a), std::move(b));
  }
  return out;
}

std::string write_poset(const QuasiGradedPoset& p) { return poset_json(p).dump(2) + "\n"; }

std::string write_arrangement(const ArrangementDocument& doc) {
  const IntersectionPoset& arr = doc.poset;
  const QuasiGradedPoset& p = arr.poset();
  ordered_json out;
  out["carrier_dim"] = arr.carrier_dim();
  out["carrier_euler"] = integer_json(arr.chi(p.bottom()));
  if (doc.manifold) {
    out["ambient_manifold_dim"] = doc.manifold->dim;
    out["ambient_manifold_euler"] = integer_json(doc.manifold->euler);
  }
  out["carrier_kind"] = arr.kind() == CarrierKind::affine ? "affine" : "closed";

  ordered_json body = poset_json(p);
  for (std::size_t x = 0; x < p.size(); ++x) {
    ordered_json& e = body["elements"][x];
    e["dim"] = arr.dim(x) ? ordered_json(*arr.dim(x)) : ordered_json(nullptr);
    e["euler"] = integer_json(arr.chi(x));
    if (!arr.components().empty() && arr.components()[x]) e["components"] = integer_json(*arr.components()[x]);
  }
  for (auto& [key, value] : body.items()) out[key] = value;
  return out.dump(2) + "\n";
}

}  // namespace arrcd
