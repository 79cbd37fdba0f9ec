#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <sstream>

#include "linkage/catalog.hpp"
#include "linkage/errors.hpp"
#include "linkage/serialize.hpp"
#include "linkage/svg.hpp"
#include "linkage/symmetry.hpp"

namespace linkage::cli {

namespace {

struct Options {
  std::string lengths;
  std::string space = "reduced";
  std::string group = "full";
  std::string coeffs = "Z";
  std::string from_json;
  std::string cell;
  std::string svg;
  std::string out_path;
  int subdivisions = 2;
  int samples = 4;
  int count = 1;
  int grid = 400;
  int rotation = 0;
  int dihedral = 0;
  int winding = 1;
  int reflection = -1;
  double L = -1;
  std::uint64_t seed = 0;
  bool timing = false;
};

Coeffs parse_coeffs(const std::string& s) {
  if (s == "Z" || s == "z" || s == "integers") return Coeffs::Integers;
  if (s == "Z2" || s == "z2" || s == "mod2") return Coeffs::Mod2;
  throw Error(ErrorKind::Input, "unknown coefficients '" + s + "' (Z|Z2)");
}

LengthVector need_lengths(const Options& o) {
  if (o.lengths.empty()) throw Error(ErrorKind::Input, "--lengths is required");
  return LengthVector::parse(o.lengths);
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::Input, "cannot write " + path);
  f << body;
}

Json cmd_aut(const Options& o) {
  auto l = need_lengths(o);
  Json j = to_json(automorphism_group(l));
  j["reflectivity"] = to_json(reflectivity(l));
  j["order_of_rotation_symmetry"] = order_of(l);
  return j;
}

Json cmd_complex(const Options& o) { return to_json(enumerate_cells(need_lengths(o), parse_space(o.space))); }

Json cmd_homology(const Options& o) {
  Coeffs c = parse_coeffs(o.coeffs);
  if (!o.from_json.empty()) {
    std::ifstream f(o.from_json);
    if (!f) throw Error(ErrorKind::Input, "cannot read " + o.from_json);
    Json j;
    try {
      j = Json::parse(f);
    } catch (const Json::exception& e) {
      throw Error(ErrorKind::Input, std::string("invalid JSON: ") + e.what());
    }
    // accept either a bare complex or a full envelope from `complex`
    const Json& body = j.contains("result") ? j["result"] : j;
    return to_json(homology(poset_from_json(body), c));
  }
  return to_json(homology(enumerate_cells(need_lengths(o), parse_space(o.space)), c));
}

Json cmd_quotient(const Options& o) {
  auto l = need_lengths(o);
  Space sp = parse_space(o.space);
  FacePoset P = enumerate_cells(l, Space::Reduced);
  auto G = select_group(l, o.group, sp == Space::FullyReduced);
  QuotientComplex Q = quotient_complex(P, G, o.subdivisions);
  Json j = to_json(Q);
  j["homology"] = to_json(homology(Q.complex, Coeffs::Integers));
  j["homology_mod2"] = to_json(homology(Q.complex, Coeffs::Mod2));
  if (Q.complex.dim() <= 1) j["graph"] = to_json(graph_invariants(Q.complex));
  return j;
}

Json cmd_fixed_set(const Options& o) {
  auto l = need_lengths(o);
  int modes = (o.rotation > 0) + (o.dihedral > 0);
  if (modes > 1) throw Error(ErrorKind::Input, "choose one of --rotation or --dihedral");
  if (o.rotation > 0) return to_json(rotation_fixed_report(l, o.rotation, o.seed), l);
  if (o.dihedral > 0) {
    if (o.reflection < 0) throw Error(ErrorKind::Input, "--dihedral needs --reflection <shift>");
    return to_json(dihedral_fixed_sampler(l, o.dihedral, o.reflection, o.L, o.winding, std::nullopt, o.seed), l);
  }
  if (o.reflection < 0) throw Error(ErrorKind::Input, "give --reflection, --rotation or --dihedral");
  auto rho = DihedralElement::reflection(l.size(), o.reflection);
  return to_json(reflection_fixed_report(l, rho, o.samples, o.seed), l);
}

Json cmd_classify(const Options& o) {
  auto l = need_lengths(o);
  Json j = to_json(classify_quadrilateral(l));
  if (automorphism_group(l).order() > 1) {
    auto g = quadrilateral_structure(l);
    j["structure"] = to_json(g);
    if (!o.svg.empty()) write_file(o.svg, svg_graph(g));
  } else if (!o.svg.empty()) {
    write_file(o.svg, svg_graph(quadrilateral_structure(l)));
  }
  return j;
}

Json cmd_sample(const Options& o) {
  auto l = need_lengths(o);
  if (o.cell.empty()) throw Error(ErrorKind::Input, "--cell is required");
  if (o.count < 1) throw Error(ErrorKind::Input, "--count must be positive");
  Cell c = Cell::parse(o.cell, l.size());
  Json arr = Json::array();
  for (int k = 0; k < o.count; ++k) {
    AngleConfig a = solve_cell_representative(l, c, o.seed + static_cast<std::uint64_t>(k));
    Json s = to_json(a, l);
    s["cell"] = derive_cell(l, a).label();
    s["winding"] = winding_number(a);
    arr.push_back(std::move(s));
  }
  return Json{{"cell", c.label()}, {"samples", std::move(arr)}};
}

Json cmd_render(const Options& o) {
  auto l = need_lengths(o);
  if (o.out_path.empty()) throw Error(ErrorKind::Input, "--out is required");
  std::string body;
  std::string what;
  if (o.cell.empty()) {
    body = svg_graph(quadrilateral_structure(l));
    what = "graph";
  } else {
    AngleConfig a = solve_cell_representative(l, Cell::parse(o.cell, l.size()), o.seed);
    body = svg_configuration(l, a);
    what = "configuration";
  }
  write_file(o.out_path, body);
  return Json{{"kind", what}, {"path", o.out_path}, {"bytes", body.size()}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Configuration spaces of planar polygon linkages", "linkage"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--seed", o.seed, "random seed")->capture_default_str();
  app.add_flag("--timing", o.timing, "add wall-clock timing to the output");
  app.set_version_flag("--version", kVersion);

  auto lengths = [&](CLI::App* s, bool required = true) {
    auto* opt = s->add_option("--lengths", o.lengths, "comma separated edge lengths, e.g. 1,3/2,1.25");
    if (required) opt->required();
  };
  auto space = [&](CLI::App* s) {
    s->add_option("--space", o.space, "reduced | fully-reduced")->capture_default_str();
  };
  // subcommands also accept the global flags after their name
  auto common = [&](CLI::App* s) {
    s->add_option("--seed", o.seed, "random seed");
    s->add_flag("--timing", o.timing, "add wall-clock timing to the output");
  };

  std::map<std::string, std::function<Json(const Options&)>> handlers;

  auto* aut = app.add_subcommand("aut", "automorphism group of the length vector");
  lengths(aut), common(aut);
  handlers["aut"] = cmd_aut;

  auto* cx = app.add_subcommand("complex", "face poset of the cell structure");
  lengths(cx), space(cx), common(cx);
  handlers["complex"] = cmd_complex;

  auto* hom = app.add_subcommand("homology", "homology of the configuration space");
  lengths(hom, false), space(hom), common(hom);
  hom->add_option("--coeffs", o.coeffs, "Z | Z2")->capture_default_str();
  hom->add_option("--from-json", o.from_json, "complex JSON written by the complex command");
  handlers["homology"] = cmd_homology;

  auto* quo = app.add_subcommand("quotient", "quotient by a group of symmetries");
  lengths(quo), space(quo), common(quo);
  quo->add_option("--group", o.group, "full | rotations | reflection:<shift> | trivial")->capture_default_str();
  quo->add_option("--subdivisions", o.subdivisions, "barycentric subdivisions (>= 2)")->capture_default_str();
  handlers["quotient"] = cmd_quotient;

  auto* fix = app.add_subcommand("fixed-set", "fixed point sets of symmetries");
  lengths(fix), common(fix);
  fix->add_option("--reflection", o.reflection, "shift of the reflection i -> s - i");
  fix->add_option("--rotation", o.rotation, "order d of the rotation subgroup");
  fix->add_option("--dihedral", o.dihedral, "order d of the rotation part of a dihedral subgroup");
  fix->add_option("--L", o.L, "mirror-to-mirror reach (default: fully stretched)");
  fix->add_option("--winding", o.winding, "star polygon winding")->capture_default_str();
  fix->add_option("--samples", o.samples, "samples per reflection report")->capture_default_str();
  handlers["fixed-set"] = cmd_fixed_set;

  auto* cq = app.add_subcommand("classify-quad", "symmetric configuration space of a quadrilateral");
  lengths(cq), common(cq);
  cq->add_option("--svg", o.svg, "write the annotated graph as SVG");
  handlers["classify-quad"] = cmd_classify;

  auto* pent = app.add_subcommand("pentagon-report", "equilateral pentagon report");
  common(pent);
  pent->add_option("--grid", o.grid, "sign-cell census grid size")->capture_default_str();
  handlers["pentagon-report"] = [](const Options& opt) { return to_json(pentagon_report(opt.grid)); };

  auto* hex = app.add_subcommand("hexagon-report", "equilateral hexagon report");
  common(hex);
  handlers["hexagon-report"] = [](const Options&) { return to_json(hexagon_report()); };

  auto* smp = app.add_subcommand("sample", "closed configurations inside a cell");
  lengths(smp), common(smp);
  smp->add_option("--cell", o.cell, "cell label, e.g. 1|2|3|4|5 or lin:1,3")->required();
  smp->add_option("--count", o.count, "number of samples")->capture_default_str();
  handlers["sample"] = cmd_sample;

  auto* ren = app.add_subcommand("render", "SVG of a configuration (--cell) or of a quadrilateral graph");
  lengths(ren), common(ren);
  ren->add_option("--cell", o.cell, "cell to sample and draw");
  ren->add_option("--out", o.out_path, "output SVG path")->required();
  handlers["render"] = cmd_render;

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  Json input = Json::object();
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help" || opt->get_name() == "--seed" ||
        opt->get_name() == "--timing")
      continue;
    std::string key = opt->get_name().substr(2);
    if (opt->get_expected_max() == 0)
      input[key] = true;
    else
      input[key] = opt->as<std::string>();
  }

  auto t0 = std::chrono::steady_clock::now();
  try {
    Json result = handlers.at(name)(o);
    Json env{{"tool", "linkage"}, {"version", kVersion}, {"command", name}, {"input", std::move(input)},
             {"seed", o.seed},    {"result", std::move(result)}};
    if (o.timing) {
      auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      env["timing_ms"] = ms;
    }
    out << env.dump(2) << "\n";
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace linkage::cli
