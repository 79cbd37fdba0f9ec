#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "linkage/errors.hpp"
#include "linkage/symmetry.hpp"

namespace linkage {

using Point = std::array<double, 2>;

const char* to_string(AxisType a) {
  switch (a) {
    case AxisType::Median: return "median";
    case AxisType::Diagonal: return "diagonal";
    case AxisType::Midsegment: return "midsegment";
  }
  return "median";
}

double invariance_error(const DihedralElement& g, const AngleConfig& a) {
  VertexAngleVector phi = vertex_angles(a.thetas);
  VertexAngleVector img = relabel_normalize(g, phi);
  return angle_distance(img, g.flip ? mirror(phi) : phi);
}

namespace {

// Reflection of p across the line through the origin (or through `base`) with direction angle phi.
Point reflect(const Point& p, double phi, const Point& base = {0, 0}) {
  double x = p[0] - base[0], y = p[1] - base[1];
  double c = std::cos(2 * phi), s = std::sin(2 * phi);
  return {base[0] + c * x + s * y, base[1] + s * x - c * y};
}

AngleConfig from_vertices(const std::vector<Point>& v) {
  int n = static_cast<int>(v.size());
  AngleConfig a;
  for (int i = 0; i < n; ++i) {
    const Point &p = v[i], &q = v[(i + 1) % n];
    a.thetas.push_back(std::atan2(q[1] - p[1], q[0] - p[0]));
  }
  return reduce(a);
}

double max_length_error(const LengthVector& l, const std::vector<Point>& v) {
  int n = l.size();
  auto L = l.as_double();
  double worst = 0;
  for (int i = 0; i < n; ++i) {
    const Point &p = v[i], &q = v[(i + 1) % n];
    worst = std::max(worst, std::abs(std::hypot(q[0] - p[0], q[1] - p[1]) - L[i]));
  }
  return worst;
}

// Fills every vertex from a known subset by repeatedly applying label
// reflections together with their geometric mirrors.
struct Mirror {
  DihedralElement label;
  double phi;
  Point base;
};

bool propagate(std::vector<Point>& v, std::vector<bool>& known, const std::vector<Mirror>& mirrors) {
  int n = static_cast<int>(v.size());
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 1; i <= n; ++i) {
      if (!known[i - 1]) continue;
      for (auto& m : mirrors) {
        int j = m.label.vertex(i);
        Point p = reflect(v[i - 1], m.phi, m.base);
        if (!known[j - 1]) {
          v[j - 1] = p;
          known[j - 1] = true;
          changed = true;
        } else if (std::hypot(v[j - 1][0] - p[0], v[j - 1][1] - p[1]) > 1e-7) {
          return false;
        }
      }
    }
  }
  return std::all_of(known.begin(), known.end(), [](bool b) { return b; });
}

}  // namespace

// ---------------------------------------------------------------------------
// Reflections

ReflectionFixedReport reflection_fixed_report(const LengthVector& l, const DihedralElement& rho, int samples,
                                              std::uint64_t seed) {
  int n = l.size();
  if (!rho.flip || rho.n != n || !preserves_lengths(l, rho))
    throw Error(ErrorKind::NotAnAutomorphism, rho.str() + " is not a length-preserving reflection");
  ReflectionFixedReport R;
  R.reflection = rho;
  for (int i = 1; i <= n; ++i) {
    if (rho.vertex(i) == i) R.axis_vertices.push_back(i);
    if (rho.edge(i) == i) R.axis_edges.push_back(i);
  }
  // half chain: from the first axis site, walking up the labels to the second one
  int start;  // first vertex of the half chain
  int k;      // number of edges
  if (n % 2 == 1) {
    R.axis = AxisType::Median;
    R.map_type = "injective";
    start = R.axis_vertices[0];
    k = (n - 1) / 2;
  } else if (!R.axis_vertices.empty()) {
    R.axis = AxisType::Diagonal;
    R.map_type = "injective-except-RP1";
    start = R.axis_vertices[0];
    k = n / 2;
  } else {
    R.axis = AxisType::Midsegment;
    R.map_type = "double-cover";
    start = mod1(R.axis_edges[0] + 1, n);
    k = (n - 2) / 2;
  }
  for (int j = 0; j < k; ++j) R.half_chain.push_back(l(start + j));

  auto L = l.as_double();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  int guard = 0;
  while (static_cast<int>(R.samples.size()) < samples && guard++ < 1000 * std::max(1, samples)) {
    // random open half chain from the origin
    std::vector<Point> v(n, Point{0, 0});
    std::vector<bool> known(n, false);
    std::vector<Point> chain{{0, 0}};
    for (int j = 0; j < k; ++j) {
      double t = ang(rng) * 0.6;  // keep chains from curling up too often
      double len = L[mod1(start + j, n) - 1];
      chain.push_back({chain.back()[0] + len * std::cos(t), chain.back()[1] + len * std::sin(t)});
    }
    double phi = 0;
    Point base{0, 0};
    const Point& end = chain.back();
    double r = std::hypot(end[0], end[1]);
    if (R.axis == AxisType::Diagonal) {
      if (r < 1e-6) continue;  // closing half chains sit over the RP1 fibers
      phi = std::atan2(end[1], end[0]);
    } else if (R.axis == AxisType::Median) {
      // the crossing edge must meet the axis at right angles in its midpoint
      double half_len = L[mod1(start + k, n) - 1] / 2;
      if (r < half_len + 1e-6) continue;
      phi = std::atan2(end[1], end[0]) - std::asin(half_len / r);
    } else {
      // both end vertices sit at half their crossing edge lengths from the axis
      double d0 = L[mod1(start - 1, n) - 1] / 2, d1 = L[mod1(start + k, n) - 1] / 2;
      if (r < std::abs(d1 - d0) + 1e-6) continue;
      // axis normal nu with nu . end = d1 - d0, axis offset so that nu . 0 - c = d0
      double beta = std::atan2(end[1], end[0]);
      double nu = beta + std::acos((d1 - d0) / r);
      double c = -d0;
      phi = nu - kPi / 2;
      base = {c * std::cos(nu), c * std::sin(nu)};
    }
    for (int j = 0; j <= k; ++j) {
      v[mod1(start + j, n) - 1] = chain[j];
      known[mod1(start + j, n) - 1] = true;
    }
    if (!propagate(v, known, {{rho, phi, base}})) continue;
    if (max_length_error(l, v) > 1e-9) continue;
    AngleConfig a = from_vertices(v);
    if (invariance_error(rho, a) > 1e-9) continue;
    R.samples.push_back(a);
  }
  return R;
}

// ---------------------------------------------------------------------------
// Rotations

std::vector<int> star_polygon_types(int d) {
  if (d < 2) throw Error(ErrorKind::Input, "rotation order must be at least 2");
  std::vector<int> w;
  for (int i = 1; 2 * i <= d; ++i) w.push_back(i);
  return w;
}

RotationFixedReport rotation_fixed_report(const LengthVector& l, int d, std::uint64_t seed) {
  int n = l.size();
  if (d < 2 || n % d != 0) throw Error(ErrorKind::NotASubgroup, "C" + std::to_string(d) + " does not divide the chain");
  int k = n / d;
  auto g = DihedralElement::rotation(n, k);
  if (!preserves_lengths(l, g))
    throw Error(ErrorKind::NotASubgroup, "C" + std::to_string(d) + " is not contained in the automorphism group");
  RotationFixedReport R;
  R.n = n;
  R.d = d;
  R.block = k;
  R.windings = star_polygon_types(d);

  // one non-collinear open block, shared by all components
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ang(-kPi / 2, kPi / 2);
  std::vector<double> block(k);
  for (int tries = 0; tries < 100; ++tries) {
    for (double& t : block) t = ang(rng);
    bool collinear = true;
    for (int j = 1; j < k; ++j)
      if (std::abs(std::sin(block[j] - block[0])) > 1e-3) collinear = false;
    if (!collinear || k == 1) break;
  }
  for (int w : R.windings)
    for (int side : {1, -1}) {
      AngleConfig a;
      a.thetas.resize(n);
      for (int rep = 0; rep < d; ++rep)
        for (int j = 0; j < k; ++j) a.thetas[rep * k + j] = side * block[j] + kTwoPi * w * rep / d;
      a = reduce(a);
      R.max_invariance_error = std::max(R.max_invariance_error, invariance_error(g, a));
      R.max_closure = std::max(R.max_closure, closure_norm(l, a));
      R.components.push_back({w, side, a});
    }
  return R;
}

// ---------------------------------------------------------------------------
// Dihedral subgroups

namespace {

struct SubChain {
  std::vector<double> lengths;  // from vertex A outward
  std::vector<int> vertices;    // labels, starting with A
  double offset = 0;            // half of the edge crossing the mirror, 0 if a vertex sits on it
  double reach() const {
    double s = 0;
    for (double x : lengths) s += x;
    return s;
  }
};

// Shapes of the subchain ending on the line parallel to the mirror (direction
// phi through the origin) at distance `offset` on A's side. Up to two placements.
std::vector<std::vector<Point>> place_chain(const Point& A, double phi, const SubChain& sc, std::mt19937_64& rng) {
  Point nrm{-std::sin(phi), std::cos(phi)};
  double h = A[0] * nrm[0] + A[1] * nrm[1];
  double side = h < 0 ? -1 : 1;
  double need = side * sc.offset - h;  // signed normal displacement to reach the line
  std::vector<std::vector<Point>> out;
  if (sc.lengths.empty()) {
    if (std::abs(need) > 1e-9) return out;
    out.push_back({A});
    return out;
  }
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  std::vector<double> jitter(sc.lengths.size());
  for (double& j : jitter) j = ang(rng);
  // shrink the random bends until the chain is long enough to reach
  for (double t : {0.6, 0.4, 0.25, 0.1, 0.03, 0.0}) {
    std::vector<Point> shape{{0, 0}};
    for (std::size_t i = 0; i < sc.lengths.size(); ++i)
      shape.push_back({shape.back()[0] + sc.lengths[i] * std::cos(t * jitter[i]),
                       shape.back()[1] + sc.lengths[i] * std::sin(t * jitter[i])});
    double lam = std::hypot(shape.back()[0], shape.back()[1]);
    double q = need / lam;
    if (std::abs(q) > 1 + 1e-9) continue;
    q = std::clamp(q, -1.0, 1.0);
    double sigma = std::atan2(shape.back()[1], shape.back()[0]);
    double a1 = std::asin(q);
    for (double beta : {phi + a1, phi + kPi - a1}) {
      double rot = beta - sigma;
      std::vector<Point> pts;
      for (auto& s : shape)
        pts.push_back({A[0] + std::cos(rot) * s[0] - std::sin(rot) * s[1],
                       A[1] + std::sin(rot) * s[0] + std::cos(rot) * s[1]});
      out.push_back(std::move(pts));
    }
    break;
  }
  return out;
}

}  // namespace

DihedralFixedResult dihedral_fixed_sampler(const LengthVector& l, int d, int reflection_shift, double Lreq, int winding,
                                           std::optional<double> psi_req, std::uint64_t seed) {
  int n = l.size();
  if (d < 2 || n % d != 0) throw Error(ErrorKind::NotASubgroup, "D" + std::to_string(d) + " does not fit the chain");
  int k = n / d;
  auto rot = DihedralElement::rotation(n, k);
  auto rho0 = DihedralElement::reflection(n, reflection_shift);
  auto rho1 = DihedralElement::reflection(n, reflection_shift + k);
  if (!preserves_lengths(l, rot) || !preserves_lengths(l, rho0))
    throw Error(ErrorKind::NotASubgroup, "the dihedral subgroup is not contained in the automorphism group");
  if (winding < 1 || 2 * winding > d) throw Error(ErrorKind::Input, "winding must lie in 1..d/2");

  DihedralFixedResult R;
  R.d = d;
  R.winding = winding;
  R.alpha = kPi * winding / d;
  auto Ld = l.as_double();
  auto len = [&](int e) { return Ld[mod1(e, n) - 1]; };

  // axis sites in half-edge units: 2*p0 = s, 2*p1 = s + k
  int P0 = ((reflection_shift % n) + n) % n, P1 = P0 + k;
  int lo = (P0 + 1) / 2, hi = P1 / 2;  // vertices inside [p0, p1]
  int A = static_cast<int>(std::lround((P0 + P1) / 4.0));
  A = std::clamp(A, lo, hi);
  R.vertex_a = mod1(A, n);

  SubChain toward0, toward1;
  toward0.vertices.push_back(A);
  for (int v = A; v > lo; --v) {
    toward0.lengths.push_back(len(v - 1));
    toward0.vertices.push_back(v - 1);
  }
  if (P0 % 2 == 1) toward0.offset = len((P0 - 1) / 2) / 2;
  toward1.vertices.push_back(A);
  for (int v = A; v < hi; ++v) {
    toward1.lengths.push_back(len(v));
    toward1.vertices.push_back(v + 1);
  }
  if (P1 % 2 == 1) toward1.offset = len((P1 - 1) / 2) / 2;

  double a = toward0.reach() + toward0.offset, b = toward1.reach() + toward1.offset;
  R.reach_k = toward0.reach();
  R.reach_m = toward1.reach();
  R.L0 = 2 * a + 2 * b;
  double L = Lreq < 0 ? R.L0 : Lreq;
  if (L > R.L0 * (1 + 1e-12)) throw Error(ErrorKind::InvalidL, "L exceeds L0 = " + std::to_string(R.L0));
  R.L = L;

  const double alpha = R.alpha;
  auto radius = [&](double psi) {
    double S = std::sin(psi) + std::sin(alpha - psi);
    return S > 0 ? L / (2 * S) : 0.0;
  };
  auto feasible = [&](double psi) {
    double r = radius(psi);
    double h0 = r * std::sin(psi), h1 = r * std::sin(alpha - psi);
    return std::abs(h0 - toward0.offset) <= toward0.reach() + 1e-12 &&
           std::abs(h1 - toward1.offset) <= toward1.reach() + 1e-12;
  };

  double psi;
  if (psi_req) {
    psi = *psi_req;
    if (psi < 0 || psi > alpha || !feasible(psi))
      throw Error(ErrorKind::NoAllowablePair, "no allowable subchain pair at this axis position");
  } else if (L >= R.L0 * (1 - 1e-12)) {
    // fully stretched: both subchains reach their mirrors exactly
    psi = std::atan2(a * std::sin(alpha), b + a * std::cos(alpha));
  } else {
    const int N = 4000;
    int best_lo = -1, best_len = 0, run = 0;
    for (int i = 0; i <= N; ++i) {
      if (feasible(alpha * i / N)) {
        ++run;
        if (run > best_len) best_len = run, best_lo = i - run + 1;
      } else {
        run = 0;
      }
    }
    if (best_len == 0) throw Error(ErrorKind::NoAllowablePair, "no allowable subchain pair for this L");
    psi = alpha * (best_lo + (best_len - 1) / 2.0) / N;
  }
  R.psi = psi;
  double r = L >= R.L0 * (1 - 1e-12) && a > 0 ? a / std::sin(psi) : radius(psi);
  if (L >= R.L0 * (1 - 1e-12) && a == 0) r = b / std::sin(alpha - psi);
  R.radius = r;
  Point Apos{r * std::cos(psi), r * std::sin(psi)};

  std::mt19937_64 rng(seed);
  auto c0 = place_chain(Apos, 0.0, toward0, rng);
  auto c1 = place_chain(Apos, alpha, toward1, rng);
  if (c0.empty() || c1.empty()) throw Error(ErrorKind::NoAllowablePair, "subchains cannot reach the mirror lines");

  std::vector<Mirror> mirrors{{rho0, 0.0, {0, 0}}, {rho1, alpha, {0, 0}}};
  for (auto& s0 : c0)
    for (auto& s1 : c1) {
      std::vector<Point> v(n, Point{0, 0});
      std::vector<bool> known(n, false);
      for (std::size_t i = 0; i < s0.size(); ++i) {
        v[mod1(toward0.vertices[i], n) - 1] = s0[i];
        known[mod1(toward0.vertices[i], n) - 1] = true;
      }
      for (std::size_t i = 0; i < s1.size(); ++i) {
        v[mod1(toward1.vertices[i], n) - 1] = s1[i];
        known[mod1(toward1.vertices[i], n) - 1] = true;
      }
      if (!propagate(v, known, mirrors)) continue;
      if (max_length_error(l, v) > 1e-7) continue;
      AngleConfig cfg = from_vertices(v);
      bool dup = false;
      for (auto& c : R.configs)
        if (angle_distance(vertex_angles(c.thetas), vertex_angles(cfg.thetas)) < 1e-9) dup = true;
      if (dup) continue;
      R.max_invariance_error = std::max({R.max_invariance_error, invariance_error(rot, cfg), invariance_error(rho0, cfg)});
      R.max_closure = std::max(R.max_closure, closure_norm(l, cfg));
      R.configs.push_back(std::move(cfg));
    }
  return R;
}

}  // namespace linkage
