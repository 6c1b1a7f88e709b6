#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "enriques/errors.hpp"
#include "enriques/json_io.hpp"
#include "enriques/orbitcount.hpp"
#include "enriques/perm_group.hpp"

using namespace enriques;
using json_io::Json;

namespace {

// Raised by subcommands that produced output but must exit nonzero.
struct ExitStatus {
  int code;
};

Json read_input(const std::string& path) {
  std::stringstream buf;
  if (path.empty() || path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    buf << in.rdbuf();
  }
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

Json components_json(const RootInvariant& inv) { return json_io::invariant_to_json(inv)["components"]; }

Json count_orbits(const Json& in) {
  const RootInvariant inv = json_io::invariant_from_json(in);
  const VinbergGroupSpec spec = json_io::vinberg_from_json(in);
  const OrbitCountResult r = count_curve_orbits(inv, spec);
  Json out;
  out["total"] = r.total;
  out["component_orbits"] = r.component_orbits;
  out["per_orbit_weight"] = r.per_orbit_weight;
  out["components"] = components_json(inv);
  return out;
}

Json root_invariant(const Json& in) {
  const GluedK3Input input = json_io::glued_input_from_json(in);
  const SplittingRoots sr = splitting_root_lattice_from_k3(input);
  const RootInvariant inv = nikulin_root_invariant(input);
  Json out = json_io::invariant_to_json(inv);
  out["total_rank"] = inv.total_rank();
  out["splitting_root_count"] = sr.roots.size();
  return out;
}

Json table_mod2() {
  const auto computed = table_root_mod2();
  const auto& expected = expected_table_root_mod2();
  Json rows = Json::array();
  for (const auto& r : computed) {
    Json row;
    row["R"] = r.inner;
    row["R_closure"] = r.closure;
    const Json nf = json_io::normal_form_to_json(r.form);
    for (const auto& [k, v] : nf.items()) row[k] = v;
    rows.push_back(std::move(row));
  }
  Json out;
  out["rows"] = std::move(rows);
  out["matches_reference"] = computed == expected;
  if (computed != expected) {
    std::cout << out.dump() << "\n";
    std::cerr << "error: computed table differs from the reference table\n";
    throw ExitStatus{2};
  }
  return out;
}

Json lattice_info(const Json& in) {
  const Lattice l = json_io::lattice_from_json(in);
  const IntMatrix g = l.scaled_gram();
  const Signature sig = signature(g);
  Json out;
  out["rank"] = l.rank();
  out["determinant"] = json_io::int_to_json(g.determinant());
  out["signature"] = {{"positive", sig.positive}, {"negative", sig.negative}, {"zero", sig.zero}};
  out["even"] = Lattice(g).is_even();
  if (sig.zero == 0) {
    const DiscriminantGroup d = discriminant_group(Lattice(g));
    Json orders = Json::array(), q = Json::array();
    for (const auto& o : d.orders) orders.push_back(json_io::int_to_json(o));
    for (const auto& v : d.qvalues) q.push_back(json_io::rational_to_json(v));
    out["discriminant_group"] = {{"orders", orders}, {"qvalues", q}};
  }
  if (l.rank() > 0 && sig.negative == static_cast<int>(l.rank())) {
    const RootSublattice rs = root_sublattice(Lattice(g));
    out["root_count"] = rs.roots.size();
    out["root_type"] = to_string(recognize_ade(rs.lattice.gram()));
  }
  return out;
}

Json f2_normal_form(const Json& in) {
  const QuadSpaceF2 V = json_io::quad_space_from_json(in);
  Json out = json_io::normal_form_to_json(normal_form(V));
  out["dim"] = V.dim();
  if (V.dim() <= kMaxGroupDim) out["orthogonal_group_order"] = group_order(orthogonal_group(V)).str();
  return out;
}

Json solve_quad(const std::string& c) {
  Json sols = Json::array();
  for (const auto& [x, y] : solve_binary_quadratic(json_io::int_from_json(Json(c))))
    sols.push_back(Json::array({json_io::int_to_json(x), json_io::int_to_json(y)}));
  Json out;
  out["solutions"] = std::move(sols);
  return out;
}

Json validate(const Json& in) {
  const RootInvariant inv = json_io::invariant_from_json(in);
  const auto violations = validate_invariant(inv);
  Json out;
  out["valid"] = violations.empty();
  out["violations"] = violations;
  if (!violations.empty()) {
    std::cout << out.dump() << "\n";
    for (const auto& v : violations) std::cerr << "violation: " << v << "\n";
    throw ExitStatus{1};
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orbits of smooth rational curves on Enriques surfaces"};
  app.require_subcommand(1, 1);
  std::string input;
  std::string c;
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indent the JSON output");

  auto with_input = [&](CLI::App* sub) {
    sub->add_option("--input", input, "JSON input file (default: standard input)");
    sub->add_flag("--pretty", pretty, "Indent the JSON output");
    return sub;
  };
  auto* count = with_input(app.add_subcommand("count-orbits", "Count orbits of (-2)-curves from a root invariant"));
  auto* rinv = with_input(app.add_subcommand("root-invariant", "Root invariant from anti-invariant lattice and glue"));
  auto* table = app.add_subcommand("table-mod2", "Recompute the mod 2 forms of root sublattices of E10");
  table->add_flag("--pretty", pretty, "Indent the JSON output");
  auto* info = with_input(app.add_subcommand("lattice-info", "Invariants of an integral lattice"));
  auto* nf = with_input(app.add_subcommand("f2-normal-form", "Normal form of a quadratic space over F2"));
  auto* quad = app.add_subcommand("solve-quad", "Integer solutions of 2x^2 + 6xy = c");
  quad->add_option("--c", c, "Right-hand side")->required()->allow_extra_args(false);
  quad->add_flag("--pretty", pretty, "Indent the JSON output");
  auto* val = with_input(app.add_subcommand("validate", "Check a root invariant"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    Json out;
    if (count->parsed()) out = count_orbits(read_input(input));
    else if (rinv->parsed()) out = root_invariant(read_input(input));
    else if (table->parsed()) out = table_mod2();
    else if (info->parsed()) out = lattice_info(read_input(input));
    else if (nf->parsed()) out = f2_normal_form(read_input(input));
    else if (quad->parsed()) out = solve_quad(c);
    else if (val->parsed()) out = validate(read_input(input));
    std::cout << (pretty ? out.dump(2) : out.dump()) << "\n";
    return 0;
  } catch (const ExitStatus& s) {
    return s.code;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
