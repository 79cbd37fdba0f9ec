#include "linkage/serialize.hpp"

#include <algorithm>
#include <set>

#include "linkage/errors.hpp"

namespace linkage {

namespace {

Json rationals(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (auto& q : v) a.push_back(to_string(q));
  return a;
}

Json elements(const std::vector<DihedralElement>& v) {
  Json a = Json::array();
  for (auto& g : v) a.push_back(g.str());
  return a;
}

}  // namespace

Json to_json(const LengthVector& l) { return rationals(l.values()); }

Json to_json(const ReflectivityResult& r) {
  return Json{{"kind", to_string(r.kind)}, {"axes", elements(r.axes)}};
}

Json to_json(const AutGroup& G) {
  return Json{{"n", G.n},
              {"name", G.name()},
              {"kind", G.kind == GroupKind::Cyclic ? "cyclic" : "dihedral"},
              {"rotations", G.k},
              {"order", G.order()},
              {"elements", elements(G.elements)}};
}

Json to_json(const FacePoset& P) {
  Json cells = Json::array();
  for (int i = 0; i < P.size(); ++i) {
    Json c{{"index", i}, {"label", P.cells[i].label()}, {"dim", P.cells[i].dim()}};
    if (P.cells[i].collinear) c["collinear"] = true;
    if (P.space == Space::FullyReduced) {
      c["branch"] = static_cast<bool>(P.branch[i]);
      if (P.tie_at_pi[i]) c["tie_at_pi"] = true;
    }
    c["facets"] = P.covers[i];
    cells.push_back(std::move(c));
  }
  return Json{{"lengths", to_json(P.lengths)},
              {"space", to_string(P.space)},
              {"dim", P.dim()},
              {"f_vector", P.f_vector()},
              {"euler", P.euler()},
              {"cells", std::move(cells)}};
}

FacePoset poset_from_json(const Json& j) {
  try {
    std::vector<Rational> lv;
    for (auto& x : j.at("lengths")) lv.push_back(parse_rational(x.get<std::string>()));
    FacePoset P{LengthVector(std::move(lv))};
    P.space = parse_space(j.at("space").get<std::string>());
    const int n = P.lengths.size();
    const auto& cells = j.at("cells");
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const auto& c = cells[i];
      if (c.at("index").get<std::size_t>() != i) throw Error(ErrorKind::Input, "cells must be listed by index");
      P.cells.push_back(Cell::parse(c.at("label").get<std::string>(), n));
      P.covers.push_back(c.at("facets").get<std::vector<int>>());
      P.branch.push_back(c.value("branch", false));
      P.tie_at_pi.push_back(c.value("tie_at_pi", false));
    }
    // below = transitive closure of the facet relation; facets have lower index
    P.below.assign(P.size(), {});
    for (int i = 0; i < P.size(); ++i) {
      std::set<int> acc;
      for (int f : P.covers[i]) {
        if (f < 0 || f >= i) throw Error(ErrorKind::Input, "facet index out of order in cell " + std::to_string(i));
        acc.insert(f);
        acc.insert(P.below[f].begin(), P.below[f].end());
      }
      P.below[i].assign(acc.begin(), acc.end());
    }
    for (int i = 0; i < P.size(); ++i) P.index.emplace(P.cells[i].label(), i);
    return P;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Input, std::string("malformed complex JSON: ") + e.what());
  }
}

Json to_json(const SimplicialComplex& K) {
  // maximal simplices only; faces are implied
  std::vector<std::vector<int>> maximal;
  for (int k = K.dim(); k >= 0; --k)
    for (auto& s : K.simplices[k]) {
      bool covered = false;
      for (auto& m : maximal)
        if (std::includes(m.begin(), m.end(), s.begin(), s.end())) {
          covered = true;
          break;
        }
      if (!covered) maximal.push_back(s);
    }
  std::sort(maximal.begin(), maximal.end());
  return Json{{"vertices", K.num_vertices()},
              {"f_vector", K.f_vector()},
              {"euler", K.euler()},
              {"maximal_simplices", maximal}};
}

Json to_json(const HomologyProfile& h) {
  Json j{{"coefficients", h.coeffs == Coeffs::Integers ? "Z" : "Z/2"},
         {"betti", h.betti},
         {"torsion", h.torsion},
         {"euler", h.euler}};
  j["orientable"] = h.orientable ? Json(*h.orientable) : Json(nullptr);
  return j;
}

Json to_json(const GraphInvariants& g) {
  return Json{{"b0", g.b0},           {"b1", g.b1},   {"degrees", g.degrees},
              {"degree1", g.degree1}, {"degree3plus", g.degree3plus}, {"arcs", g.arcs}};
}

Json to_json(const QuotientComplex& Q) {
  return Json{{"group_order", Q.group_order},
              {"subdivisions", Q.subdivisions},
              {"subdivided_vertices", Q.subdivided_vertices},
              {"complex", to_json(Q.complex)}};
}

Json to_json(const AngleConfig& a, const LengthVector& l) {
  return Json{{"thetas", a.thetas},
              {"vertex_angles", vertex_angles(a.thetas).angles},
              {"closure", closure_norm(l, a)}};
}

Json to_json(const ReflectionFixedReport& r, const LengthVector& l) {
  Json samples = Json::array();
  for (auto& a : r.samples) samples.push_back(to_json(a, l));
  return Json{{"kind", "reflection"},
              {"reflection", r.reflection.str()},
              {"axis", to_string(r.axis)},
              {"axis_vertices", r.axis_vertices},
              {"axis_edges", r.axis_edges},
              {"half_chain", rationals(r.half_chain)},
              {"map_type", r.map_type},
              {"samples", std::move(samples)}};
}

Json to_json(const RotationFixedReport& r, const LengthVector& l) {
  Json comps = Json::array();
  for (auto& c : r.components)
    comps.push_back(Json{{"winding", c.winding}, {"side", c.side}, {"config", to_json(c.config, l)}});
  return Json{{"kind", "rotation"},
              {"n", r.n},
              {"d", r.d},
              {"block", r.block},
              {"windings", r.windings},
              {"components", std::move(comps)},
              {"max_invariance_error", r.max_invariance_error},
              {"max_closure", r.max_closure}};
}

Json to_json(const DihedralFixedResult& r, const LengthVector& l) {
  Json configs = Json::array();
  for (auto& a : r.configs) configs.push_back(to_json(a, l));
  return Json{{"kind", "dihedral"},
              {"d", r.d},
              {"winding", r.winding},
              {"vertex_a", r.vertex_a},
              {"L", r.L},
              {"L0", r.L0},
              {"psi", r.psi},
              {"alpha", r.alpha},
              {"radius", r.radius},
              {"reach", {r.reach_k, r.reach_m}},
              {"configs", std::move(configs)},
              {"max_invariance_error", r.max_invariance_error},
              {"max_closure", r.max_closure}};
}

Json to_json(const QuadCase& c) {
  Json pred{{"b0", c.predicted.b0},
            {"b1", c.predicted.b1},
            {"degree1", c.predicted.degree1},
            {"branch_degrees", c.predicted.branch_degrees}};
  return Json{{"type", c.homeomorphism},
              {"case", c.tag.empty() ? Json(nullptr) : Json(c.tag)},
              {"arrangement", {{"p", to_string(c.p)}, {"q", to_string(c.q)}, {"r", to_string(c.r)}, {"s", to_string(c.s)}}},
              {"witness", c.witness},
              {"aut_order", c.aut_order},
              {"reduced_subcase", c.reduced_subcase},
              {"reduced_type", c.reduced_type},
              {"predicted", std::move(pred)},
              {"computed", to_json(c.computed)},
              {"cross_check", c.cross_check}};
}

Json to_json(const AnnotatedGraph& g) {
  Json vs = Json::array(), as = Json::array(), acts = Json::array();
  for (auto& v : g.vertices) vs.push_back(Json{{"label", v.label}, {"collinear", v.collinear}});
  for (auto& a : g.arcs) as.push_back(Json{{"label", a.label}, {"from", a.from}, {"to", a.to}});
  for (auto& a : g.actions)
    acts.push_back(Json{{"element", a.element},
                        {"vertices", a.vertices},
                        {"arcs", a.arcs},
                        {"fixed_points", a.fixed_points < 0 ? Json("arc") : Json(a.fixed_points)}});
  return Json{{"lengths", to_json(g.lengths)},
              {"vertices", std::move(vs)},
              {"arcs", std::move(as)},
              {"actions", std::move(acts)},
              {"invariants", to_json(g.invariants)}};
}

Json to_json(const PentagonReport& r) {
  Json cells = Json::array();
  for (auto& c : r.census.cells)
    cells.push_back(Json{{"sign", c.sign}, {"type", c.type}, {"components", c.components}, {"samples", c.samples}});
  Json adj = Json::array();
  for (auto& a : r.census.adjacency) adj.push_back(Json{a[0], a[1], a[2]});
  Json links{{"pure", r.symmetric_links.pure},
             {"links_ok", r.symmetric_links.links_ok},
             {"boundary_components", r.symmetric_links.boundary_components},
             {"boundary_is_circles", r.symmetric_links.boundary_is_circles}};
  return Json{
      {"lengths", {"1", "1", "1", "1", "1"}},
      {"reduced", {{"f_vector", r.reduced_f}, {"homology", to_json(r.reduced)}}},
      {"fully_reduced",
       {{"f_vector", r.fully_reduced_f},
        {"homology", to_json(r.fully_reduced)},
        {"homology_mod2", to_json(r.fully_reduced_mod2)}}},
      {"symmetric",
       {{"group_order", r.symmetric_group_order},
        {"f_vector", r.symmetric_f},
        {"homology", to_json(r.symmetric)},
        {"homology_mod2", to_json(r.symmetric_mod2)},
        {"surface", std::move(links)}}},
      {"dihedral_types", {{"count", r.dihedral_types}, {"representatives", r.dihedral_type_labels}}},
      {"sign_cells",
       {{"grid", r.census.grid},
        {"samples", r.census.samples},
        {"skipped", r.census.skipped},
        {"total", r.census.total},
        {"per_type", r.census.per_type},
        {"cells", std::move(cells)},
        {"adjacency", std::move(adj)}}}};
}

Json to_json(const HexagonReport& r) {
  return Json{{"lengths", {"1", "1", "1", "1", "1", "1"}},
              {"top_cell", r.top_cell},
              {"boundary_f_vector", r.boundary_f},
              {"boundary_euler", r.boundary_euler},
              {"fine_cells", r.fine_cells},
              {"star_polygon_types", r.star_types},
              {"barycenter_stabilizer_order", r.barycenter_stabilizer},
              {"realized_stabilizers", r.realized},
              {"unrealized_subgroups", r.not_realized},
              {"reduced_f_vector", r.reduced_f},
              {"fully_reduced_f_vector", r.fully_reduced_f}};
}

Json to_json(const StabilizerCensus& c) {
  Json realized = Json::array(), missing = Json::array();
  std::set<std::vector<DihedralElement>> seen(c.realized.begin(), c.realized.end());
  for (std::size_t i = 0; i < c.realized.size(); ++i)
    realized.push_back(Json{{"subgroup", subgroup_name(c.realized[i])}, {"cells", c.realized_count[i]}});
  for (auto& H : c.all)
    if (!seen.count(H)) missing.push_back(subgroup_name(H));
  return Json{{"subgroups", c.all.size()}, {"realized", std::move(realized)}, {"unrealized", std::move(missing)}};
}

}  // namespace linkage
