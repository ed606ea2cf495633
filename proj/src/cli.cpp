#include "gorenstein/cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <optional>
#include <string>

#include "gorenstein/equivalence.hpp"
#include "gorenstein/homogeneity.hpp"
#include "gorenstein/io.hpp"
#include "gorenstein/series.hpp"
#include "gorenstein/transport.hpp"

namespace gorenstein::cli {

namespace {

using io::json;

struct Options {
  std::string algebra;
  std::string other;
  std::string projection = "canonical";
  std::string target;
  std::string from;
  std::string to;
  std::string map;
  std::size_t samples = 50;
  std::optional<std::uint64_t> seed;
};

/// Non-zero exit without an exception: property or certificate verdicts.
struct Outcome {
  json doc;
  int code = 0;
};

Projection load_projection(const Algebra& a, const std::string& spec) {
  if (spec == "canonical") return canonical_projection(a);
  return io::projection_from_json(a, io::read_json(spec));
}

json subspace_to_json(const Subspace& s) {
  json basis = json::array();
  for (const auto& b : s.basis()) basis.push_back(io::vec_to_json(b));
  return basis;
}

json automorphism_to_json(const GradedAutomorphism& phi) {
  json factors = json::array();
  for (const auto& [degree, x] : phi.factors) factors.push_back({{"degree", degree}, {"x", io::vec_to_json(x)}});
  return {{"matrix", io::matrix_to_json(phi.matrix)}, {"factors", factors}};
}

std::string residual_summary(const BlaschkeResult& r) {
  std::string s = "residuals: [";
  for (std::size_t i = 0; i < r.residuals.size(); ++i) s += (i ? ", " : "") + to_string(r.residuals[i]);
  return s + "]; " + (r.in_normal_form ? "PASS" : "FAIL");
}

Outcome cmd_validate(const Options& o) {
  const Algebra a = io::load_algebra(o.algebra);
  const ValidationReport report = validate(a);
  json checks = json::array();
  for (const auto& c : report.checks) {
    json entry{{"axiom", c.axiom}, {"passed", c.passed}};
    if (!c.passed) entry["witness"] = c.witness;
    if (!c.detail.empty()) entry["detail"] = c.detail;
    checks.push_back(entry);
  }
  const bool gorenstein = report.ok() && is_gorenstein(a);
  json doc{{"algebra", a.name()}, {"checks", checks}, {"valid", report.ok()}, {"gorenstein", gorenstein}};
  return {doc, gorenstein ? 0 : 1};
}

Outcome cmd_info(const Options& o) {
  const Algebra a = io::load_algebra(o.algebra);
  if (!validate(a).ok()) throw PropertyFailure("structure table fails the algebra axioms");
  const Subspace ann = annihilator(a);
  const bool gorenstein = ann.dim() == 1;
  const bool graded = is_graded_gorenstein(a);
  const auto powers = ideal_powers(a);
  const std::size_t der = derivation_algebra(a).dim();
  const std::size_t n = a.dim() - 1;
  const std::size_t cotangent = powers[0].dim() - powers[1].dim();
  json doc{{"algebra", a.name()},
           {"dim_m", a.dim()},
           {"nil_index", nil_index(a)},
           {"annihilator_basis", subspace_to_json(ann)},
           {"gorenstein", gorenstein},
           {"graded", graded},
           {"derivation_dim", der},
           {"bound_cotangent", {{"value", cotangent}, {"holds", der >= cotangent}}}};
  if (graded) doc["bound_n"] = {{"value", n}, {"holds", der >= n}};
  return {doc, 0};
}

Outcome cmd_hypersurface(const Options& o) {
  const Algebra a = io::load_algebra(o.algebra);
  return {io::graph_to_json(compute_graph(a, load_projection(a, o.projection))), 0};
}

Outcome cmd_blaschke(const Options& o) {
  const Algebra a = io::load_algebra(o.algebra);
  const GraphPoly gp = compute_graph(a, load_projection(a, o.projection));
  const BlaschkeResult r = blaschke_check(gp);
  if (!r.in_normal_form) throw TheoremContradiction("graph polynomial is not in Blaschke normal form", residual_summary(r));
  json doc{{"algebra", a.name()},
           {"residuals", io::vec_to_json(r.residuals)},
           {"in_normal_form", r.in_normal_form},
           {"summary", residual_summary(r)}};
  return {doc, 0};
}

Outcome cmd_transport(const Options& o) {
  if (o.target.empty()) throw MalformedInput("transport needs --target");
  const Algebra a = io::load_algebra(o.algebra);
  const Projection pi = load_projection(a, o.projection);
  const Subspace target = hyperplane_from_graph(pi, io::hyperplane_from_json(pi, io::read_json(o.target)));
  const Vec x = find_x(a, pi, target);
  const Vec y = x_to_y(a, pi, x);
  json doc{{"algebra", a.name()},
           {"target", subspace_to_json(target)},
           {"x", io::vec_to_json(x)},
           {"y", io::vec_to_json(y)},
           {"verified", true}};
  return {doc, 0};
}

Outcome cmd_automorphism(const Options& o) {
  const Algebra a = io::load_algebra(o.algebra);
  const Projection pi = load_projection(a, o.projection);
  if (!o.target.empty()) {
    // Property (P) transporter from K to the target
    const Projection canonical = canonical_projection(a);
    const Subspace target =
        hyperplane_from_graph(canonical, io::hyperplane_from_json(canonical, io::read_json(o.target)));
    const GradedAutomorphism phi = graded_transport(a, x_to_y(a, canonical, find_x(a, canonical, target)));
    json doc = automorphism_to_json(phi);
    doc["algebra"] = a.name();
    doc["target"] = subspace_to_json(target);
    return {doc, 0};
  }
  if (o.to.empty()) throw MalformedInput("automorphism needs --target or --to");
  const GraphPoly gp = compute_graph(a, pi);
  const Vec q = io::point_from_json(io::read_json(o.to), &gp, a.dim());
  const Vec p = o.from.empty() ? zero_vec(a.dim()) : io::point_from_json(io::read_json(o.from), &gp, a.dim());
  const auto f = affine_symmetry_between(a, pi, p, q);
  if (!f) return {{{"algebra", a.name()}, {"status", "undecided"}}, 1};
  const SymmetryCheck check = verify_symmetry(a, gp, *f);
  if (!check.ok() || f->apply(p) != q) throw TheoremContradiction("constructed symmetry fails verification", a.name());
  json doc{{"algebra", a.name()},
           {"status", "certified"},
           {"from", io::vec_to_json(p)},
           {"to", io::vec_to_json(q)},
           {"map", io::affine_map_to_json(*f)},
           {"checks",
            {{"linear_part_automorphism", check.linear_part_automorphism},
             {"forward", check.forward},
             {"backward", check.backward}}}};
  return {doc, 0};
}

Outcome cmd_property_p(const Options& o) {
  if (!o.seed) throw MalformedInput("property-p needs --seed");
  const Algebra a = io::load_algebra(o.algebra);
  const PropertyPReport r = property_p_certify(a, o.samples, *o.seed);
  json targets = json::array();
  for (const auto& t : r.targets) targets.push_back(io::vec_to_json(t));
  const std::string summary = std::to_string(r.certified) + "/" + std::to_string(r.samples) + " certified";
  json doc{{"algebra", a.name()},
           {"seed", r.seed},
           {"samples", r.samples},
           {"coefficient_range", {-9, 9}},
           {"certified", r.certified},
           {"summary", summary},
           {"targets", targets}};
  return {doc, r.certified == r.samples ? 0 : 3};
}

Outcome cmd_reconstruct(const Options& o) {
  const Algebra a = io::load_algebra(o.algebra);
  const Projection pi = load_projection(a, o.projection);
  const Algebra r = reconstruct_algebra(compute_graph(a, pi), a.name() + " (reconstructed)");
  const bool round_trip = r.table() == a.change_basis(pi.adapted_basis()).table();
  if (!round_trip) throw TheoremContradiction("reconstruction differs from the source algebra", a.name());
  return {{{"algebra", io::algebra_to_json(r)}, {"round_trip", round_trip}}, 0};
}

Outcome cmd_verify_equiv(const Options& o) {
  if (o.map.empty()) throw MalformedInput("verify-equiv needs --map");
  const Algebra a = io::load_algebra(o.algebra);
  const Algebra b = io::load_algebra(o.other);
  const json cert = io::read_json(o.map);
  const Projection pa = load_projection(a, o.projection);
  const Projection pb = canonical_projection(b);
  if (cert.contains("C")) {
    const io::ScaledCertificate c = io::scaled_certificate_from_json(cert);
    const ScaledVerdict v = verify_scaled_linear_equivalence(compute_graph(a, pa), compute_graph(b, pb), c.c, c.s);
    json doc{{"kind", "scaled-linear"},
             {"source_blaschke", v.source_blaschke},
             {"target_blaschke", v.target_blaschke},
             {"equivalent", v.equivalent},
             {"residual", io::poly_to_json(v.residual)}};
    return {doc, v.equivalent ? 0 : 3};
  }
  const EquivalenceVerdict v = verify_affine_equivalence(a, pa, b, pb, io::affine_map_from_json(cert));
  json doc{{"kind", "affine"}, {"equivalent", v.equivalent}, {"reason", v.reason}};
  if (v.isomorphism) doc["isomorphism"] = io::matrix_to_json(*v.isomorphism);
  if (!v.equivalent) {
    doc["forward_residual"] = io::poly_to_json(v.forward_residual);
    doc["backward_residual"] = io::poly_to_json(v.backward_residual);
  }
  return {doc, v.equivalent ? 0 : 3};
}

Outcome cmd_psi(const Options& o) {
  const Algebra a = io::load_algebra(o.algebra);
  const Projection pi = load_projection(a, o.projection);
  if (!o.target.empty()) {
    const Subspace target = hyperplane_from_graph(pi, io::hyperplane_from_json(pi, io::read_json(o.target)));
    const Vec u = psi_inverse(a, pi, target);
    return {{{"algebra", a.name()}, {"point", io::vec_to_json(u)}, {"target", subspace_to_json(target)}}, 0};
  }
  if (o.from.empty()) throw MalformedInput("psi needs --from or --target");
  std::optional<GraphPoly> gp;
  if (pi.n() > 0) gp = compute_graph(a, pi);
  const Vec u = io::point_from_json(io::read_json(o.from), gp ? &*gp : nullptr, a.dim());
  const Subspace image = psi_map(a, pi, u);
  json doc{{"algebra", a.name()},
           {"point", io::vec_to_json(u)},
           {"hyperplane", subspace_to_json(image)},
           {"graph_coeffs", io::vec_to_json(graph_coeffs_of(pi, image))}};
  return {doc, 0};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gorenstein algebras and their hypersurfaces S_pi", "gorenstein"};
  app.require_subcommand(1);
  Options o;
  std::function<Outcome(const Options&)> action;

  auto add = [&](const std::string& name, const std::string& help, Outcome (*fn)(const Options&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("algebra", o.algebra, "algebra JSON file")->required();
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };
  auto projection = [&](CLI::App* sub) {
    sub->add_option("--projection", o.projection, "projection JSON file or 'canonical'")->capture_default_str();
  };

  add("validate", "check the algebra axioms and the Gorenstein property", cmd_validate);
  add("info", "dimensions, nil-index, annihilator and derivation bounds", cmd_info);
  projection(add("hypersurface", "graph polynomial P of S_pi", cmd_hypersurface));
  projection(add("blaschke", "Blaschke normal form residuals", cmd_blaschke));
  CLI::App* transport = add("transport", "x and y with (1+x)^-1 K = target = (1+y) K", cmd_transport);
  projection(transport);
  transport->add_option("--target", o.target, "hyperplane JSON file")->required();
  CLI::App* automorphism = add("automorphism", "automorphism onto a hyperplane or affine symmetry between points",
                               cmd_automorphism);
  projection(automorphism);
  automorphism->add_option("--target", o.target, "hyperplane JSON file");
  automorphism->add_option("--from", o.from, "point JSON file (default 0)");
  automorphism->add_option("--to", o.to, "point JSON file");
  CLI::App* prop = add("property-p", "certify transitivity on seeded random hyperplanes", cmd_property_p);
  prop->add_option("--samples", o.samples, "number of target hyperplanes")->capture_default_str();
  prop->add_option("--seed", o.seed, "random seed")->required();
  projection(add("reconstruct", "rebuild the algebra from the quadratic and cubic terms", cmd_reconstruct));
  CLI::App* equiv = add("verify-equiv", "verify an equivalence certificate", cmd_verify_equiv);
  equiv->add_option("other", o.other, "target algebra JSON file")->required();
  equiv->add_option("--map", o.map, "affine map or {C, s} certificate")->required();
  projection(equiv);
  CLI::App* psi = add("psi", "psi(u) = exp(-2u) K and its inverse", cmd_psi);
  projection(psi);
  psi->add_option("--from", o.from, "point JSON file");
  psi->add_option("--target", o.target, "hyperplane JSON file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    const Outcome result = action(o);
    out << result.doc.dump(2) << "\n";
    return result.code;
  } catch (const MalformedInput& e) {
    err << json{{"error", "malformed input"}, {"detail", e.what()}}.dump(2) << "\n";
    return 2;
  } catch (const PropertyFailure& e) {
    err << json{{"error", "property fails"}, {"detail", e.what()}}.dump(2) << "\n";
    return 1;
  } catch (const VerificationFailure& e) {
    err << json{{"error", "verification failure"}, {"detail", e.what()}}.dump(2) << "\n";
    return 3;
  } catch (const TheoremContradiction& e) {
    err << json{{"error", "internal contradiction"}, {"detail", e.what()}, {"witness", e.witness()}}.dump(2) << "\n";
    return 4;
  }
}

}  // namespace gorenstein::cli
