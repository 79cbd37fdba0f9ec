// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "linkage/catalog.hpp"
#include "linkage/errors.hpp"
#include "linkage/geometry.hpp"
#include "linkage/symmetry.hpp"
#include "oracles.hpp"

using namespace linkage;

namespace {

// Pinned tolerances.
constexpr double kClosureTol = 1e-10;
constexpr double kRoundTripTol = 1e-12;
constexpr double kMembraneRootTol = 1e-8;
constexpr double kInvarianceTol = 1e-9;
constexpr int kGeometrySamples = 1000;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failing checks with a short description.
struct Checker {
  bool ok = true;
  std::ostringstream notes;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << " [" << what << "]";
    }
  }
};

template <class T>
std::string show(const std::vector<T>& v) {
  std::ostringstream s;
  s << "(";
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << ")";
  return s.str();
}

LengthVector lv(const char* s) { return LengthVector::parse(s); }

Outcome c1() {
  Checker c;
  const std::pair<const char*, int> quads[] = {{"1,1,1,1", 8}, {"3,1,1,3", 2}, {"1,3,1,3", 4}, {"2,3,2,4", 2}};
  std::ostringstream d;
  for (auto& [s, want] : quads) {
    int got = automorphism_group(lv(s)).order();
    d << s << "->" << got << " ";
    c.expect(got == want, std::string(s) + " order " + std::to_string(got));
  }
  auto l6 = lv("1,2,3,2,1,4");
  auto G = automorphism_group(l6);
  auto refl = reflectivity(l6);
  c.expect(G.order() == 2 && G.k == 1 && refl.kind == Reflectivity::Reflective, "1,2,3,2,1,4");
  auto D3 = automorphism_group(lv("1,2,1,2,1,2"));
  c.expect(D3.order() == 6 && D3.kind == GroupKind::Dihedral && D3.k == 3, "1,2,1,2,1,2");
  d << "| " << G.name() << " " << D3.name();
  return {c.ok, d.str() + c.notes.str()};
}

Outcome c2() {
  Checker c;
  auto l = lv("1,1,1,1,1");
  FacePoset P = enumerate_cells(l, Space::Reduced);
  auto f = P.f_vector();
  auto o = oracle::f_vector({1, 1, 1, 1, 1});
  std::vector<long> fl(f.begin(), f.end());
  c.expect(fl == o, "oracle f-vector " + show(o));
  c.expect(f == std::vector<int>{30, 60, 24}, "f-vector");
  auto h = homology(P, Coeffs::Integers);
  c.expect(h.euler == -6, "euler");
  c.expect(h.betti == std::vector<long>{1, 8, 1}, "betti");
  bool no_torsion = std::all_of(h.torsion.begin(), h.torsion.end(), [](auto& t) { return t.empty(); });
  c.expect(no_torsion, "torsion");
  c.expect(h.orientable && *h.orientable, "orientable");
  return {c.ok, "f=" + show(f) + " chi=" + std::to_string(h.euler) + " betti=" + show(h.betti) + c.notes.str()};
}

Outcome c3() {
  Checker c;
  FacePoset F = enumerate_cells(lv("1,1,1,1,1"), Space::FullyReduced);
  auto h = homology(F, Coeffs::Integers);
  auto m = homology(F, Coeffs::Mod2);
  c.expect(h.euler == -3, "euler");
  c.expect(h.betti.size() >= 2 && h.betti[1] == 4, "rank H1");
  c.expect(h.torsion.size() >= 2 && h.torsion[1] == std::vector<long>{2}, "torsion H1");
  c.expect(m.betti == std::vector<long>{1, 5, 1}, "mod-2 betti");
  c.expect(h.orientable && !*h.orientable, "nonorientable");
  return {c.ok, "chi=" + std::to_string(h.euler) + " H1 rank " + std::to_string(h.betti.size() > 1 ? h.betti[1] : -1) +
                    " torsion " + show(h.torsion.size() > 1 ? h.torsion[1] : std::vector<long>{}) + " mod2 " +
                    show(m.betti) + c.notes.str()};
}

Outcome c4() {
  Checker c;
  auto l = lv("1,1,1,1,1");
  auto G = select_group(l, "full", true);
  QuotientComplex Q = quotient_complex(enumerate_cells(l, Space::Reduced), G, 2);
  auto m = homology(Q.complex, Coeffs::Mod2);
  LinkCheck s = surface_check(Q.complex);
  c.expect(Q.group_order == 20, "group order");
  c.expect(m.betti == std::vector<long>{1, 0, 0}, "mod-2 betti");
  c.expect(s.pure && s.links_ok, "links");
  c.expect(s.boundary_components == 1 && s.boundary_is_circles, "boundary");
  return {c.ok, "|G|=" + std::to_string(Q.group_order) + " mod2 " + show(m.betti) +
                    " boundary circles " + std::to_string(s.boundary_components) + c.notes.str()};
}

Outcome c5() {
  Checker c;
  const std::pair<const char*, const char*> grid[] = {
      {"2,3,2,4", "interval"}, {"3,2,3,4", "circle"}, {"4,1,4,5", "circle"},
      {"5,3,5,2", "circle"},   {"1,3,1,3", "wedge"},  {"3,1,1,3", "circle-with-diameter"},
      {"1,1,1,1", "interval"}};
  for (auto& [s, want] : grid) {
    QuadCase q = classify_quadrilateral(lv(s));
    c.expect(q.homeomorphism == want, std::string(s) + " -> " + q.homeomorphism);
    c.expect(q.cross_check, std::string(s) + " invariants");
  }
  auto w = classify_quadrilateral(lv("1,3,1,3")).computed;
  c.expect(w.degree1 == 1 && w.degree3plus == 1 && w.b1 == 1, "wedge invariants");
  auto cd = classify_quadrilateral(lv("3,1,1,3")).computed;
  c.expect(cd.degree3plus == 2 && cd.b1 == 2, "diameter invariants");
  return {c.ok, std::to_string(std::size(grid)) + " fixtures" + c.notes.str()};
}

Outcome c6() {
  Checker c;
  auto l = lv("1,1,1,1");
  AnnotatedGraph g = quadrilateral_structure(l);
  int collinear = 0;
  for (auto& v : g.vertices) collinear += v.collinear;
  auto o = oracle::quadrilateral_graph({1, 1, 1, 1});
  c.expect(g.vertices.size() == 3 && collinear == 3, "three collinear vertices");
  c.expect(g.invariants.degrees == std::vector<int>{4, 4, 4}, "degrees");
  c.expect(g.arcs.size() == 6 && g.invariants.b1 == 4, "arcs and b1");
  c.expect(o.vertices == 3 && o.collinear == 3 && o.edges == 6 && o.b1 == 4 &&
               o.degree == std::vector<int>{4, 4, 4},
           "oracle graph");
  auto G = select_group(l, "full", false);
  QuotientComplex Q = quotient_complex(enumerate_cells(l, Space::Reduced), G, 2);
  GraphInvariants qi = graph_invariants(Q.complex);
  c.expect(Q.group_order == 8, "group order");
  c.expect(qi.b0 == 1 && qi.b1 == 0 && qi.degree1 == 2 && qi.degree3plus == 0, "quotient is an interval");
  return {c.ok, "collinear=" + std::to_string(collinear) + " arcs=" + std::to_string(g.arcs.size()) +
                    " b1=" + std::to_string(g.invariants.b1) + " quotient b1=" + std::to_string(qi.b1) +
                    " ends=" + std::to_string(qi.degree1) + c.notes.str()};
}

Outcome c7() {
  Checker c;
  HexagonReport h = hexagon_report();
  auto types = star_polygon_types(6);
  c.expect(h.boundary_f == std::vector<int>{5, 9, 6}, "boundary f-vector");
  c.expect(h.boundary_euler == 2, "boundary euler");
  c.expect(h.fine_cells == 12, "fine cells");
  c.expect(types.size() == 3, "star polygon types");
  c.expect(h.barycenter_stabilizer == 12, "stabilizer");
  return {c.ok, "boundary " + show(h.boundary_f) + " chi=" + std::to_string(h.boundary_euler) +
                    " fine=" + std::to_string(h.fine_cells) + " types=" + std::to_string(types.size()) +
                    " stab=" + std::to_string(h.barycenter_stabilizer) + c.notes.str()};
}

double circ(double a, double b) {
  double d = wrap_angle(a - b);
  return std::min(d, kTwoPi - d);
}

std::vector<double> random_angles(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(0, kTwoPi);
  std::vector<double> t(n);
  for (auto& x : t) x = u(rng);
  t[0] = 0;
  return t;
}

int sgn(double x) { return (x > 0) - (x < 0); }

Outcome c8() {
  Checker c;
  std::mt19937_64 rng(8);

  // solver closure on random top and lower cells
  std::vector<std::pair<LengthVector, Cell>> pool;
  for (const char* s : {"1,1,1,1,1", "1,1,1,1,1,1", "1,2,3,2,1,4", "2,3,2,4", "3,4,5,6,7"}) {
    auto l = lv(s);
    for (auto& cell : enumerate_cells(l, Space::Reduced).cells)
      if (!cell.collinear) pool.emplace_back(l, cell);
  }
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  double closure = 0;
  int wrong_cell = 0;
  for (int i = 0; i < kGeometrySamples; ++i) {
    auto& [l, cell] = pool[pick(rng)];
    AngleConfig a = solve_cell_representative(l, cell, 100 + i);
    closure = std::max(closure, closure_norm(l, a));
    wrong_cell += !(derive_cell(l, a) == cell);
  }
  c.expect(closure <= kClosureTol, "closure");
  c.expect(wrong_cell == 0, "solver cell");

  double round_trip = 0;
  for (int i = 0; i < kGeometrySamples; ++i) {
    AngleConfig a{random_angles(rng, 7)};
    AngleConfig b = angles_from_tangent(tangent_halfangle(a));
    for (int k = 0; k < 7; ++k) round_trip = std::max(round_trip, circ(a.thetas[k], b.thetas[k]));
  }
  c.expect(round_trip <= kRoundTripTol, "round trip");

  int preserved = 0;
  for (int i = 0; i < kGeometrySamples; ++i) {
    std::uniform_real_distribution<double> u(0.01, kTwoPi - 0.01);
    std::vector<double> th(6);
    for (auto& x : th) x = u(rng);
    std::sort(th.begin(), th.end());
    TangentCoords t;
    for (double x : th) t.t.push_back(tangent_halfangle(x));
    MoebiusMap M(t.t[0], t.t[1], t.t[5]);
    bool ok = true;
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b)
        for (int d = b + 1; d < 6; ++d)
          ok = ok && cyclic_orientation(M(t.t[a]), M(t.t[b]), M(t.t[d])) == cyclic_orientation(t.t[a], t.t[b], t.t[d]);
    preserved += ok;
  }
  c.expect(preserved == kGeometrySamples, "cyclic order");

  // sign agreement off the membrane, roots on it
  int sign_mismatch = 0, compared = 0;
  double root = 0;
  for (int i = 0; i < kGeometrySamples; ++i) {
    int n = 5 + i % 3;
    AngleConfig a{random_angles(rng, n)};
    int j = 3 + static_cast<int>(rng() % (n - 3));
    TangentCoords t = tangent_halfangle(a);
    double ra = membrane_residual_angles(a, 1, j), rt = membrane_residual_tangent(t, 2, j, j + 1);
    if (std::abs(ra) > 1e-9 && std::abs(rt) > 1e-9) {
      ++compared;
      sign_mismatch += sgn(rt) != membrane_tangent_sign(t, j) * sgn(ra);
    }
    auto th = random_angles(rng, 6);
    int k = 3 + static_cast<int>(rng() % 3);
    th[k] = wrap_angle(th[k - 1] + th[1]);
    AngleConfig on{th};
    TangentCoords tt = tangent_halfangle(on);
    double scale = 1 + std::abs(tt.t[1].value * tt.t[k - 1].value * tt.t[k].value) + std::abs(tt.t[1].value) +
                   std::abs(tt.t[k - 1].value) + std::abs(tt.t[k].value);
    root = std::max(root, std::abs(membrane_residual_tangent(tt, 2, k, k + 1)) / scale);
    root = std::max(root, std::abs(membrane_residual_angles(on, 1, k)));
  }
  c.expect(sign_mismatch == 0 && compared > kGeometrySamples * 9 / 10, "membrane signs");
  c.expect(root <= kMembraneRootTol, "membrane roots");

  char buf[256];
  std::snprintf(buf, sizeof buf, "closure %.1e, round trip %.1e, order %d/%d, sign mismatches %d/%d, root %.1e",
                closure, round_trip, preserved, kGeometrySamples, sign_mismatch, compared, root);
  return {c.ok, buf + c.notes.str()};
}

Outcome c9() {
  Checker c;
  long ok = 0, total = 0;
  for (const char* s : {"1,1,1,1,1", "1,1,1,1,1,1"}) {
    auto l = lv(s);
    FacePoset P = enumerate_cells(l, Space::Reduced);
    ActionTable T = action_on_cells(automorphism_group(l), P);
    for (int cell = 0; cell < P.size(); ++cell) {
      if (P.cells[cell].dim() != P.dim()) continue;
      AngleConfig a = solve_cell_representative(l, P.cells[cell], 11);
      VertexAngleVector phi = vertex_angles(a.thetas);
      for (std::size_t e = 0; e < T.elements.size(); ++e) {
        AngleConfig moved{thetas_from_vertex_angles(relabel_normalize(T.elements[e], phi))};
        ok += derive_cell(l, moved) == P.cells[T.image[e][cell]];
        ++total;
      }
    }
  }
  c.expect(ok == total, "agreement");
  return {c.ok, std::to_string(ok) + "/" + std::to_string(total) + " pairs agree" + c.notes.str()};
}

Outcome c10() {
  Checker c;
  LengthVector l20(std::vector<Rational>(20, Rational(1)));
  RotationFixedReport R = rotation_fixed_report(l20, 5, 0);
  auto g = DihedralElement::rotation(20, 4);
  double inv = 0;
  for (auto& comp : R.components) inv = std::max(inv, invariance_error(g, comp.config));
  c.expect(inv <= kInvarianceTol && R.max_invariance_error <= kInvarianceTol, "C5 invariance");
  c.expect(R.max_closure <= kInvarianceTol, "closure");
  // each winding class yields one configuration per mirror side of the open block
  c.expect(R.components.size() == 2 * R.windings.size(), "components per class");
  c.expect(R.components.size() == 4, "four configurations");

  auto l6 = lv("1,1,1,1,1,1");
  DihedralFixedResult D = dihedral_fixed_sampler(l6, 3, 0, -1);
  c.expect(D.configs.size() == 1, "unique stretched configuration");
  c.expect(D.max_invariance_error <= kInvarianceTol, "dihedral invariance");
  char buf[160];
  std::snprintf(buf, sizeof buf, "C5 components %zu, invariance %.1e; stretched configurations %zu", R.components.size(),
                inv, D.configs.size());
  return {c.ok, buf + c.notes.str()};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    double budget_s;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {{1, 2, c1}, {2, 1, c2},  {3, 1, c3},  {4, 10, c4}, {5, 5, c5},
                                {6, 1, c6}, {7, 5, c7}, {8, 10, c8}, {9, 10, c9}, {10, 5, c10}};
  int failed = 0;
  for (auto& k : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = k.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > k.budget_s) {
      o.pass = false;
      o.detail += " [over time budget]";
    }
    failed += !o.pass;
    std::printf("Criterion %d: %s (%.3f s, budget %.0f s) %s\n", k.id, o.pass ? "PASS" : "FAIL", s, k.budget_s,
                o.detail.c_str());
  }
  return failed;
}
