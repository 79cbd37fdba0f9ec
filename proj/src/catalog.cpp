#include "linkage/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>

#include "linkage/errors.hpp"
#include "linkage/geometry.hpp"

namespace linkage {

const char* to_string(QuadShape s) {
  switch (s) {
    case QuadShape::Interval: return "interval";
    case QuadShape::Circle: return "circle";
    case QuadShape::Wedge: return "wedge";
    case QuadShape::CircleWithDiameter: return "circle-with-diameter";
    case QuadShape::IntervalEquilateral: return "interval";
    case QuadShape::Asymmetric: return "asymmetric";
  }
  return "?";
}

ShapeSignature shape_signature(QuadShape s) {
  switch (s) {
    case QuadShape::Interval:
    case QuadShape::IntervalEquilateral: return {1, 0, 2, {}};
    case QuadShape::Circle: return {1, 1, 0, {}};
    case QuadShape::Wedge: return {1, 1, 1, {3}};
    case QuadShape::CircleWithDiameter: return {1, 2, 0, {3, 3}};
    case QuadShape::Asymmetric: break;
  }
  throw Error(ErrorKind::Input, "no fixed signature for an asymmetric quadrilateral");
}

bool matches(const ShapeSignature& sig, const GraphInvariants& g) {
  std::vector<int> branch;
  for (int d : g.degrees)
    if (d >= 3) branch.push_back(d);
  std::sort(branch.begin(), branch.end());
  auto want = sig.branch_degrees;
  std::sort(want.begin(), want.end());
  return g.b0 == sig.b0 && g.b1 == sig.b1 && g.degree1 == sig.degree1 && branch == want;
}

namespace {

struct Arrangement {
  Rational p, q, r, s;
};

// Dihedral images of the cycle with the longest length in the s slot.
std::vector<Arrangement> arrangements(const LengthVector& l) {
  const auto& v = l.values();
  Rational mx = *std::max_element(v.begin(), v.end());
  std::vector<Arrangement> out;
  for (int dir : {1, -1})
    for (int k = 0; k < 4; ++k) {
      auto at = [&](int j) { return v[((k + dir * j) % 4 + 4) % 4]; };
      Arrangement a{at(0), at(1), at(2), at(3)};
      if (a.s == mx) out.push_back(a);
    }
  return out;
}

struct Match {
  QuadShape shape;
  std::string tag;
  std::vector<std::string> witness;
};

std::vector<Match> symmetric_cases(const Arrangement& a) {
  const auto &p = a.p, &q = a.q, &r = a.r, &s = a.s;
  std::vector<Match> out;
  bool longest = s > p && s > q && s > r;
  if (longest && p == r && s < p + q + r) {
    if (s + q > 2 * p)
      out.push_back({QuadShape::Interval, "i", {"s>p,q,r", "p=r", "s<p+q+r", "s+q>2p"}});
    else
      out.push_back({QuadShape::Circle, "ii", {"s>p,q,r", "p=r", "s<p+q+r", "s+q<=2p"}});
  }
  if (s == q && q >= p && p > r) out.push_back({QuadShape::Circle, "ii", {"s=q>=p>r"}});
  if (s == q && q > p && p == r) out.push_back({QuadShape::Wedge, "iii", {"s=q>p=r"}});
  if (s == p && p > q && q == r) out.push_back({QuadShape::CircleWithDiameter, "iv", {"s=p>q=r"}});
  if (s == p && p == q && q == r) out.push_back({QuadShape::IntervalEquilateral, "v", {"s=p=q=r"}});
  return out;
}

// Case list for the reduced space, lengths sorted decreasingly.
void reduced_case(const LengthVector& l, QuadCase& out) {
  auto v = l.values();
  std::sort(v.begin(), v.end(), [](const Rational& a, const Rational& b) { return a > b; });
  const auto &l1 = v[0], &l2 = v[1], &l3 = v[2], &l4 = v[3];
  if (l1 == l4) {
    out.reduced_subcase = "vi";
    out.reduced_type = "three circles meeting pairwise in three points";
  } else if (l1 == l2 && l3 == l4) {
    out.reduced_subcase = "v";
    out.reduced_type = "parallelogram graph";
  } else if (l1 == l2) {
    out.reduced_subcase = "iv";
    out.reduced_type = "S1 + S1";
  } else if (l2 + l3 < l1 + l4) {
    out.reduced_subcase = "i";
    out.reduced_type = "S1";
  } else if (l2 + l3 == l1 + l4) {
    out.reduced_subcase = "ii";
    out.reduced_type = "S1 v S1";
  } else {
    out.reduced_subcase = "iii";
    out.reduced_type = "S1 + S1";
  }
}

ShapeSignature reduced_signature(const std::string& subcase) {
  if (subcase == "i") return {1, 1, 0, {}};
  if (subcase == "ii") return {1, 2, 0, {4}};
  return {2, 2, 0, {}};  // iii, iv
}

VertexAngleVector act(const DihedralElement& g, const AngleConfig& a) {
  return relabel_normalize(g, vertex_angles(a.thetas));
}

}  // namespace

QuadCase classify_quadrilateral(const LengthVector& l) {
  if (l.size() != 4) throw Error(ErrorKind::Input, "a quadrilateral needs four lengths");
  for (auto& x : l.values())
    if (x <= 0) throw Error(ErrorKind::Input, "lengths must be positive");
  const auto& v = l.values();
  Rational mx = *std::max_element(v.begin(), v.end());
  Rational rest = l.total() - mx;
  if (mx > rest) throw Error(ErrorKind::DegenerateLinkage, l.str() + " violates the polygon inequality");
  if (mx == rest) throw Error(ErrorKind::DegenerateLinkage, l.str() + " has a single rigid configuration");

  QuadCase out;
  out.aut_order = automorphism_group(l).order();
  reduced_case(l, out);

  std::set<QuadShape> shapes;
  bool first = true;
  for (auto& a : arrangements(l)) {
    for (auto& m : symmetric_cases(a)) {
      shapes.insert(m.shape);
      if (first) {
        out.shape = m.shape;
        out.tag = m.tag;
        out.witness = m.witness;
        out.p = a.p, out.q = a.q, out.r = a.r, out.s = a.s;
        first = false;
      }
    }
  }
  if (shapes.size() > 1) throw Error(ErrorKind::DegenerateLinkage, "conflicting cases for " + l.str());
  if (out.aut_order > 1 && shapes.empty())
    throw Error(ErrorKind::DegenerateLinkage, "no symmetric case matches " + l.str());

  if (out.shape == QuadShape::Asymmetric) {
    auto arr = arrangements(l).front();
    out.p = arr.p, out.q = arr.q, out.r = arr.r, out.s = arr.s;
    out.homeomorphism = out.reduced_type;
    out.predicted = reduced_signature(out.reduced_subcase);
  } else {
    out.homeomorphism = to_string(out.shape);
    out.predicted = shape_signature(out.shape);
  }

  FacePoset P = enumerate_cells(l, Space::Reduced);
  QuotientComplex Q = quotient_complex(P, select_group(l, "full", false), 2);
  out.computed = graph_invariants(Q.complex);
  out.cross_check = matches(out.predicted, out.computed);
  return out;
}

AnnotatedGraph quadrilateral_structure(const LengthVector& l) {
  if (l.size() != 4) throw Error(ErrorKind::Input, "a quadrilateral needs four lengths");
  FacePoset P = enumerate_cells(l, Space::Reduced);
  AnnotatedGraph out(l);
  std::vector<int> vid(P.size(), -1), aid(P.size(), -1);
  for (int c = 0; c < P.size(); ++c) {
    if (P.cells[c].dim() != 0) continue;
    vid[c] = static_cast<int>(out.vertices.size());
    out.vertices.push_back({P.cells[c].label(), P.cells[c].collinear});
  }
  for (int c = 0; c < P.size(); ++c) {
    if (P.cells[c].dim() != 1) continue;
    aid[c] = static_cast<int>(out.arcs.size());
    AnnotatedGraph::Arc arc{P.cells[c].label()};
    const auto& cv = P.covers[c];
    if (!cv.empty()) arc.from = vid[cv.front()], arc.to = vid[cv.back()];
    out.arcs.push_back(arc);
  }
  out.invariants = graph_invariants(order_complex(P));

  AutGroup G = automorphism_group(l);
  ActionTable T = action_on_cells(G, P);
  for (std::size_t e = 0; e < T.elements.size(); ++e) {
    const auto& g = T.elements[e];
    if (g.is_identity()) continue;
    AnnotatedGraph::Action act_rec;
    act_rec.element = g.str();
    int fixed_vertices = 0, reversed = 0;
    bool pointwise = false;
    for (int c = 0; c < P.size(); ++c) {
      int img = T.image[e][c];
      if (vid[c] >= 0) {
        if (img == c) {
          act_rec.vertices.push_back("fixed");
          ++fixed_vertices;
        } else {
          act_rec.vertices.push_back("-> " + P.cells[img].label());
        }
      } else if (aid[c] >= 0) {
        if (img != c) {
          act_rec.arcs.push_back("-> " + P.cells[img].label());
          continue;
        }
        // an involution of an arc either fixes it pointwise or reverses it
        AngleConfig a = solve_cell_representative(l, P.cells[c], 7);
        double err = angle_distance(vertex_angles(a.thetas), act(g, a));
        if (err < 1e-7) {
          act_rec.arcs.push_back("fixed");
          pointwise = true;
        } else {
          act_rec.arcs.push_back("reversed");
          ++reversed;
        }
      }
    }
    act_rec.fixed_points = pointwise ? -1 : fixed_vertices + reversed;
    out.actions.push_back(std::move(act_rec));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Surfaces

LinkCheck surface_check(const SimplicialComplex& K) {
  LinkCheck out;
  if (K.dim() < 2) {
    out.pure = false;
    return out;
  }
  const auto& edges = K.simplices[1];
  const auto& tris = K.simplices[2];
  std::vector<int> edge_count(edges.size(), 0);
  std::vector<std::vector<std::array<int, 2>>> link(K.num_vertices());
  std::vector<bool> vertex_used(K.num_vertices(), false);
  for (auto& t : tris) {
    for (int skip = 0; skip < 3; ++skip) {
      std::vector<int> e;
      for (int k = 0; k < 3; ++k)
        if (k != skip) e.push_back(t[k]);
      ++edge_count[K.find(e)];
      link[t[skip]].push_back({e[0], e[1]});
    }
    for (int v : t) vertex_used[v] = true;
  }
  for (int c : edge_count) {
    if (c == 0) out.pure = false;
    if (c > 2) out.links_ok = false;
  }
  for (bool u : vertex_used)
    if (!u) out.pure = false;

  // a link is a path or a cycle: connected with all degrees at most two
  auto path_or_cycle = [](const std::vector<std::array<int, 2>>& E, std::vector<int>* ends) {
    std::map<int, std::vector<int>> adj;
    for (auto& e : E) {
      adj[e[0]].push_back(e[1]);
      adj[e[1]].push_back(e[0]);
    }
    if (adj.empty()) return false;
    for (auto& [v, nb] : adj)
      if (nb.size() > 2) return false;
    std::set<int> seen;
    std::vector<int> stack{adj.begin()->first};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (!seen.insert(v).second) continue;
      for (int w : adj[v]) stack.push_back(w);
    }
    if (ends)
      for (auto& [v, nb] : adj)
        if (nb.size() == 1) ends->push_back(v);
    return seen.size() == adj.size();
  };
  for (int v = 0; v < K.num_vertices(); ++v)
    if (!path_or_cycle(link[v], nullptr)) out.links_ok = false;

  // boundary edges
  std::map<int, std::vector<int>> badj;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edge_count[i] == 1) {
      badj[edges[i][0]].push_back(edges[i][1]);
      badj[edges[i][1]].push_back(edges[i][0]);
    }
  std::set<int> seen;
  for (auto& [v, nb] : badj) {
    if (nb.size() != 2) out.boundary_is_circles = false;
    if (seen.count(v)) continue;
    ++out.boundary_components;
    std::vector<int> stack{v};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      if (!seen.insert(x).second) continue;
      for (int w : badj[x]) stack.push_back(w);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pentagon sign cells

namespace {

std::string sign_type(const std::string& label) {
  bool primed = label.back() == '\'';
  std::string s = primed ? label.substr(0, label.size() - 1) : label;
  int plus = static_cast<int>(std::count(s.begin(), s.end(), '+'));
  int n = static_cast<int>(s.size());
  if (primed) return "II";
  if (plus == 0) return "I";
  if (plus == n) return "I'";
  int minority = std::min(plus, n - plus);
  char m = plus < n - plus ? '+' : '-';
  if (minority == 1) return "IV";
  if (minority == 2) {
    for (int i = 0; i < n; ++i)
      if (s[i] == m && s[(i + 1) % n] == m) return "III";
    return "V";
  }
  return "?";
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

SignCellCensus sign_cell_census(int grid) {
  if (grid < 16) throw Error(ErrorKind::Input, "census grid too coarse");
  SignCellCensus out;
  out.grid = grid;
  const int N = grid;
  const double step = kTwoPi / N;
  // Chart: edge 1 on the x-axis, edges 2 and 5 free, vertex 4 on one of two sides.
  // The small offset keeps grid points off the symmetric loci.
  const double off = 0.5 * step + 1e-4;
  auto node = [N](int side, int i, int j) { return (side * N + i) * N + j; };
  const int total = 2 * N * N;
  std::vector<std::string> label(total);
  std::vector<VertexAngleVector> phis(total);
  std::vector<double> height(total, -1);
  for (int side = 0; side < 2; ++side)
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        int id = node(side, i, j);
        double alpha = off + i * step, beta = off + j * step;
        double x3 = 1 + std::cos(beta), y3 = std::sin(beta);
        double x5 = std::cos(alpha), y5 = std::sin(alpha);
        double dx = x5 - x3, dy = y5 - y3, d = std::hypot(dx, dy);
        if (d >= 2 || d < 1e-12) {
          ++out.skipped;
          continue;
        }
        double h = std::sqrt(1 - d * d / 4);
        double eps = side == 0 ? 1 : -1;
        double x4 = 0.5 * (x3 + x5) - eps * h * dy / d, y4 = 0.5 * (y3 + y5) + eps * h * dx / d;
        std::vector<double> th{0.0, beta, std::atan2(y4 - y3, x4 - x3), std::atan2(y5 - y4, x5 - x4),
                               alpha + kPi};
        for (double& t : th) t = wrap_angle(t);
        VertexAngleVector phi = vertex_angles(th);
        try {
          label[id] = sign_vector(phi).str();
        } catch (const Error&) {
          ++out.skipped;
          continue;
        }
        phis[id] = std::move(phi);
        height[id] = h;
        ++out.samples;
      }

  UnionFind uf(total);
  std::set<std::array<std::string, 3>> adj;
  auto link = [&](int a, int b) {
    if (label[a].empty() || label[b].empty()) return;
    if (label[a] == label[b]) {
      uf.unite(a, b);
      return;
    }
    const std::string &A = label[a], &B = label[b];
    int diff = -1, count = 0;
    for (int k = 0; k < 5; ++k)
      if (A[k] != B[k]) diff = k, ++count;
    if (count != 1) return;
    double pa = phis[a].angles[diff], pb = phis[b].angles[diff];
    bool near_pi = std::abs(pa - kPi) < kPi / 2 && std::abs(pb - kPi) < kPi / 2;
    auto [lo, hi] = std::minmax(A, B);
    adj.insert({lo, hi, near_pi ? "straighten" : "fold"});
  };
  for (int side = 0; side < 2; ++side)
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        int id = node(side, i, j);
        link(id, node(side, (i + 1) % N, j));
        link(id, node(side, i, (j + 1) % N));
      }
  // the two sheets meet where vertex 4 is the midpoint of 3 and 5
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      int a = node(0, i, j), b = node(1, i, j);
      if (height[a] >= 0 && height[a] < 2 * step) link(a, b);
    }

  // components with too few samples are grid noise along walls
  const long min_size = 4;
  std::map<int, long> comp_size;
  for (int id = 0; id < total; ++id)
    if (!label[id].empty()) ++comp_size[uf.find(id)];
  std::map<std::string, SignCellEntry> cells;
  for (auto& [root, size] : comp_size) {
    auto& e = cells[label[root]];
    e.sign = label[root];
    e.samples += size;
    if (size >= min_size) ++e.components;
  }
  for (auto& [s, e] : cells) {
    e.type = sign_type(s);
    out.per_type[e.type] += e.components;
    out.total += e.components;
    out.cells.push_back(e);
  }
  out.adjacency.assign(adj.begin(), adj.end());
  return out;
}

PentagonReport pentagon_report(int census_grid) {
  LengthVector l = LengthVector::parse("1,1,1,1,1");
  PentagonReport out;
  FacePoset P = enumerate_cells(l, Space::Reduced);
  FacePoset F = enumerate_cells(l, Space::FullyReduced);
  out.reduced_f = P.f_vector();
  out.fully_reduced_f = F.f_vector();
  out.reduced = homology(P, Coeffs::Integers);
  out.fully_reduced = homology(F, Coeffs::Integers);
  out.fully_reduced_mod2 = homology(F, Coeffs::Mod2);

  auto group = select_group(l, "full", true);
  out.symmetric_group_order = static_cast<int>(group.size());
  QuotientComplex Q = quotient_complex(P, group, 2);
  out.symmetric_f = Q.complex.f_vector();
  out.symmetric = homology(Q.complex, Coeffs::Integers);
  out.symmetric_mod2 = homology(Q.complex, Coeffs::Mod2);
  out.symmetric_links = surface_check(Q.complex);

  // dihedral types of the top cells
  AutGroup G = automorphism_group(l);
  std::set<std::string> types;
  for (auto& c : P.cells) {
    if (c.dim() != P.dim() || c.collinear) continue;
    std::string best;
    for (auto& g : G.elements)
      for (const Cell& x : {c.relabeled(g), c.relabeled(g).reversed()}) {
        std::string s = x.label();
        if (best.empty() || s < best) best = s;
      }
    types.insert(best);
  }
  out.dihedral_types = static_cast<int>(types.size());
  out.dihedral_type_labels.assign(types.begin(), types.end());
  out.census = sign_cell_census(census_grid);
  return out;
}

// ---------------------------------------------------------------------------
// Hexagon

HexagonReport hexagon_report() {
  LengthVector l = LengthVector::parse("1,1,1,1,1,1");
  HexagonReport out;
  FacePoset P = enumerate_cells(l, Space::Reduced);
  FacePoset F = enumerate_cells(l, Space::FullyReduced);
  out.reduced_f = P.f_vector();
  out.fully_reduced_f = F.f_vector();
  out.reduced_vertices = out.reduced_f.empty() ? 0 : out.reduced_f[0];
  out.fully_reduced_vertices = out.fully_reduced_f.empty() ? 0 : out.fully_reduced_f[0];

  // E_Id and its symmetries live in the fully reduced space, where a label
  // reflection composed with the mirror fixes the convex ordering.
  Cell top = Cell::partition({{1}, {2}, {3}, {4}, {5}, {6}});
  int idx = F.find(top);
  if (idx < 0) throw Error(ErrorKind::ActionMismatch, "identity cell missing from the hexagon complex");
  out.top_cell = F.cells[idx].label();
  out.boundary_f.assign(top.dim(), 0);
  for (int b : F.below[idx]) ++out.boundary_f[F.cells[b].dim()];
  for (std::size_t k = 0; k < out.boundary_f.size(); ++k)
    out.boundary_euler += (k % 2 ? -1 : 1) * static_cast<long>(out.boundary_f[k]);
  int ridx = P.find(top);
  std::vector<int> reduced_boundary(top.dim(), 0);
  for (int b : P.below[ridx]) ++reduced_boundary[P.cells[b].dim()];
  if (reduced_boundary != out.boundary_f)
    throw Error(ErrorKind::ActionMismatch, "boundary of E_Id differs between the two spaces");

  AutGroup G = automorphism_group(l);
  ActionTable T = action_on_cells(G, F);
  out.fine_cells = static_cast<int>(fine_cells(F, T, idx).size());
  out.barycenter_stabilizer = stabilizer(T, idx).order();
  out.star_types = star_polygon_types(6);

  StabilizerCensus census = realized_stabilizers(l, Space::FullyReduced);
  std::set<std::vector<DihedralElement>> realized(census.realized.begin(), census.realized.end());
  for (auto& H : census.all) (realized.count(H) ? out.realized : out.not_realized).push_back(subgroup_name(H));
  return out;
}

}  // namespace linkage
