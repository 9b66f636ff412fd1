#include "cli.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "arrcd/arrangements.hpp"
#include "arrcd/errors.hpp"
#include "arrcd/flagenum.hpp"
#include "arrcd/geometry.hpp"
#include "arrcd/io.hpp"
#include "arrcd/operators.hpp"

namespace arrcd::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

/// Result of one verb: the text rendering and the structured document.
struct Output {
  std::string text;
  ordered_json doc = ordered_json::object();
};

Output polynomial_output(const std::string& rendered) {
  Output o;
  o.text = rendered + "\n";
  o.doc["result"] = rendered;
  return o;
}

Output integer_output(const Integer& value) {
  Output o;
  o.text = value.get_str() + "\n";
  o.doc["result"] = integer_json(value);
  return o;
}

Output document_output(const std::string& document) {
  Output o;
  o.text = document;
  o.doc["result"] = ordered_json::parse(document);
  return o;
}

QuasiGradedPoset load_poset(const std::string& path) {
  QuasiGradedPoset p = parse_poset(read_file(path));
  p.require_valid();
  return p;
}

ArrangementDocument load_arrangement(const std::string& path) {
  ArrangementDocument doc = parse_arrangement(read_file(path));
  doc.poset.require_valid();
  return doc;
}

const BoundingManifold& require_manifold(const ArrangementDocument& doc) {
  if (!doc.manifold) throw ValidationError("the arrangement document names no bounding manifold");
  return *doc.manifold;
}

Output flag_vectors_output(const QuasiGradedPoset& p) {
  const FlagVector f = flag_f_vector(p);
  const FlagVector h = flag_h_vector(p);
  Output o;
  o.text = "subset f h\n";
  ordered_json fd = ordered_json::object();
  ordered_json hd = ordered_json::object();
  // Subsets listed by size, then lexicographically by mask.
  std::vector<std::uint32_t> masks(f.values().size());
  for (std::uint32_t m = 0; m < masks.size(); ++m) masks[m] = m;
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
  for (std::uint32_t m : masks) {
    const std::string label = FlagVector::subset_label(m);
    o.text += label + " " + f.at(m).get_str() + " " + h.at(m).get_str() + "\n";
    fd[label] = integer_json(f.at(m));
    hd[label] = integer_json(h.at(m));
  }
  o.doc["rank"] = p.rank();
  o.doc["f"] = std::move(fd);
  o.doc["h"] = std::move(hd);
  return o;
}

Output eulerian_output(const QuasiGradedPoset& p) {
  const EulerianReport report = p.eulerian_check();
  Output o;
  o.doc["eulerian"] = report.eulerian;
  if (report.eulerian) {
    o.text = "eulerian\n";
    o.doc["failing_interval"] = nullptr;
  } else {
    const auto [x, z] = *report.failing_interval;
    o.text = "not eulerian: interval [" + p.id(x) + ", " + p.id(z) + "] has alternating sum " +
             report.failing_sum.get_str() + "\n";
    o.doc["failing_interval"] = {p.id(x), p.id(z)};
    o.doc["failing_sum"] = integer_json(report.failing_sum);
  }
  return o;
}

Output stratify_output(const ArrangementDocument& doc, const std::string& route) {
  RouteSelection routes{route == "main" || route == "all", route == "chainsum" || route == "all",
                        route == "q" || route == "all"};
  const StratificationResult r = stratify(doc.poset, require_manifold(doc).euler, routes);
  Output o;
  o.text = "cd-index: " + to_string(r.cd_index) + "\n";
  o.doc["result"] = to_string(r.cd_index);
  ordered_json per_route = ordered_json::object();
  for (const auto& [name, value] : {std::pair{"main", &r.main}, std::pair{"chainsum", &r.chainsum},
                                    std::pair{"q", &r.q}}) {
    if (!value->has_value()) continue;
    o.text += std::string(name) + ": " + to_string(**value) + "\n";
    per_route[name] = to_string(**value);
  }
  o.doc["routes"] = std::move(per_route);
  o.doc["routes_agree"] = true;
  o.doc["divisibility"] = "ok";
  return o;
}

Output op_output(const std::string& name, const std::string& input) {
  static const std::map<std::string, std::function<AbPolynomial(const AbPolynomial&)>> ab_ops{
      {"kappa", kappa}, {"lambda", lambda_bar}, {"eta", eta},        {"phi", phi},
      {"G", g_op},      {"H", h_prime},         {"star", [](const AbPolynomial& p) { return p.star(); }},
  };
  if (auto it = ab_ops.find(name); it != ab_ops.end()) return polynomial_output(to_string(it->second(parse_ab(input))));
  if (name == "omega") return polynomial_output(to_string(omega(parse_ab(input))));
  if (name == "collapse") return polynomial_output(to_string(collapse_to_cd(parse_ab(input))));
  if (name == "coproduct") return polynomial_output(to_string(coproduct(parse_ab(input))));
  if (name == "expand") return polynomial_output(to_string(expand_cd(parse_cd(input))));
  if (name == "cd-star") return polynomial_output(to_string(parse_cd(input).star()));
  throw ValidationError("unknown operator \"" + name +
                        "\"; expected kappa, lambda, eta, phi, omega, G, H, star, collapse, coproduct, expand or cd-star");
}

int exit_code(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::parse: return 1;
    case ErrorCategory::validation: return 2;
    case ErrorCategory::internal: return 3;
  }
  return 3;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"cd-indexes of quasi-graded posets and manifold arrangements", "arrcd"};
  app.require_subcommand(1, 1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string input;
  std::string route = "all";
  std::optional<long> torus_dim;
  TorifyOptions torify_options;
  std::string op_name;
  std::string op_input;
  std::function<Output()> action;

  auto verb = [&](const char* name, const char* help, auto body) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", input, "Input file")->required();
    sub->callback([&action, body] { action = body; });
    return sub;
  };

  verb("ab-index", "ab-index of a poset", [&] { return polynomial_output(to_string(ab_index(load_poset(input)))); });
  verb("cd-index", "cd-index of an Eulerian poset",
       [&] { return polynomial_output(to_string(cd_index(load_poset(input)))); });
  verb("flag-vectors", "flag f- and h-vectors of a poset", [&] { return flag_vectors_output(load_poset(input)); });
  verb("eulerian", "check the Eulerian convolution identity", [&] { return eulerian_output(load_poset(input)); });
  verb("zaslavsky", "Zaslavsky invariant of a poset", [&] { return integer_output(zaslavsky_Z(load_poset(input))); });
  verb("zm", "manifold Zaslavsky invariant of an arrangement", [&] {
    const ArrangementDocument doc = load_arrangement(input);
    return integer_output(zaslavsky_ZM(doc.poset.poset(), doc.poset.euler()));
  });
  verb("complement-euler", "Euler characteristic of the arrangement complement",
       [&] { return integer_output(complement_euler(load_arrangement(input).poset)); });
  verb("build-q", "weighted face poset of the induced stratification", [&] {
    const ArrangementDocument doc = load_arrangement(input);
    return document_output(write_poset(build_q(doc.poset, require_manifold(doc).euler)));
  });
  verb("stratify", "cd-index of the induced stratification, by every selected route",
       [&] { return stratify_output(load_arrangement(input), route); })
      ->add_option("--route", route, "Route")
      ->check(CLI::IsMember({"main", "chainsum", "q", "all"}));
  verb("spherical", "cd-index of a spherical arrangement",
       [&] { return polynomial_output(to_string(spherical_cd_index(load_arrangement(input).poset))); });
  verb("toric", "cd-index of a toric arrangement", [&] {
        const ArrangementDocument doc = load_arrangement(input);
        const long n = torus_dim.value_or(doc.poset.carrier_dim());
        return polynomial_output(to_string(toric_cd_index(doc.poset, n)));
      })
      ->add_option("--torus-dim", torus_dim, "Torus dimension (default: carrier dimension)");
  verb("lattice", "intersection poset of affine subspaces", [&] {
    return document_output(write_arrangement({intersection_lattice(parse_subspaces(read_file(input))), std::nullopt}));
  });
  verb("spherize", "intersection poset of a central arrangement traced on the sphere", [&] {
    const SubspaceArrangement arr = parse_subspaces(read_file(input));
    return document_output(
        write_arrangement({spherize(arr), BoundingManifold{static_cast<long>(arr.ambient), Integer(1)}}));
  });
  CLI::App* torify_cmd = verb("torify", "intersection poset of the subspace images in the torus", [&] {
    return document_output(write_arrangement({torify(parse_subspaces(read_file(input)), torify_options), std::nullopt}));
  });
  torify_cmd->add_flag("--per-component", torify_options.per_component, "One element per connected component");
  torify_cmd->add_option("--max-components", torify_options.max_components, "Component bound");

  CLI::App* op = app.add_subcommand("op", "apply an operator to a polynomial");
  op->add_option("operator", op_name, "Operator name")->required();
  op->add_option("polynomial", op_input, "Polynomial text, e.g. \"a*b - 2*b^2\"")->required();
  op->callback([&] { action = [&] { return op_output(op_name, op_input); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, out, err);
    return status == 0 ? 0 : 1;
  }

  try {
    Output o = action();
    if (format == "json") {
      ordered_json doc;
      doc["verb"] = app.get_subcommands().front()->get_name();
      for (auto& [key, value] : o.doc.items()) doc[key] = value;
      out << doc.dump(2) << "\n";
    } else {
      out << o.text;
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.category());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace arrcd::cli
