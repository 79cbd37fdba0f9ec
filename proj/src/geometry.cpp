#include "linkage/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "linkage/errors.hpp"

namespace linkage {

std::array<double, 2> closure_residual(const LengthVector& l, const AngleConfig& a) {
  auto L = l.as_double();
  double x = 0, y = 0;
  for (std::size_t i = 0; i < L.size(); ++i) {
    x += L[i] * std::cos(a.thetas[i]);
    y += L[i] * std::sin(a.thetas[i]);
  }
  return {x, y};
}

double closure_norm(const LengthVector& l, const AngleConfig& a) {
  auto r = closure_residual(l, a);
  return std::hypot(r[0], r[1]);
}

std::array<double, 2> closure_residual_tangent(const LengthVector& l, const TangentCoords& t) {
  auto L = l.as_double();
  double x = 0, y = 0;
  for (std::size_t i = 0; i < L.size(); ++i) {
    if (t.t[i].inf) {
      x -= L[i];
      continue;
    }
    double v = t.t[i].value, d = 1 + v * v;
    x += L[i] * (1 - v * v) / d;
    y += L[i] * 2 * v / d;
  }
  return {x, y};
}

ExtReal tangent_halfangle(double theta) {
  double w = wrap_angle(theta);
  if (std::abs(w - kPi) <= kPiSnap) return ExtReal::infinity();
  return ExtReal::finite(std::tan(w / 2));
}

double angle_from_tangent(const ExtReal& t) { return t.inf ? kPi : wrap_angle(2 * std::atan(t.value)); }

TangentCoords tangent_halfangle(const AngleConfig& a) {
  TangentCoords t;
  for (double th : a.thetas) t.t.push_back(tangent_halfangle(th));
  return t;
}

AngleConfig angles_from_tangent(const TangentCoords& t) {
  AngleConfig a;
  for (auto& x : t.t) a.thetas.push_back(angle_from_tangent(x));
  return a;
}

// ---------------------------------------------------------------------------
// Projective line. A point is [a : b]; finite v is [v : 1], infinity is [1 : 0].

namespace {

struct Proj {
  double a, b;
};

Proj proj(const ExtReal& x) { return x.inf ? Proj{1, 0} : Proj{x.value, 1}; }

double bracket(const Proj& x, const Proj& y) { return x.a * y.b - x.b * y.a; }

bool same_point(const ExtReal& x, const ExtReal& y) { return x.inf ? y.inf : (!y.inf && x.value == y.value); }

}  // namespace

MoebiusMap::MoebiusMap(const ExtReal& t1, const ExtReal& t2, const ExtReal& tn) {
  if (same_point(t1, t2) || same_point(t1, tn) || same_point(t2, tn))
    throw Error(ErrorKind::DegenerateCell, "pinned coordinates t1, t2, tn must be distinct");
  Proj p1 = proj(t1), p2 = proj(t2), pn = proj(tn);
  // P(x) = [x,t2][tn,t1] / ([x,t1][tn,t2])
  double c1 = bracket(pn, p1), c2 = bracket(pn, p2);
  m_[0][0] = c1 * p2.b;
  m_[0][1] = -c1 * p2.a;
  m_[1][0] = c2 * p1.b;
  m_[1][1] = -c2 * p1.a;
  if (det() == 0) throw Error(ErrorKind::DegenerateCell, "singular normalizing map");
}

namespace {

ExtReal apply(const double m[2][2], const ExtReal& x) {
  Proj p = proj(x);
  double num = m[0][0] * p.a + m[0][1] * p.b;
  double den = m[1][0] * p.a + m[1][1] * p.b;
  if (den == 0) return ExtReal::infinity();
  return ExtReal::finite(num / den);
}

}  // namespace

ExtReal MoebiusMap::operator()(const ExtReal& x) const { return apply(m_, x); }

ExtReal MoebiusMap::inverse(const ExtReal& w) const {
  const double adj[2][2] = {{m_[1][1], -m_[0][1]}, {-m_[1][0], m_[0][0]}};
  return apply(adj, w);
}

AffineCoords moebius_normalize(const TangentCoords& t) {
  int n = static_cast<int>(t.t.size());
  if (n < 3) throw Error(ErrorKind::Input, "need at least 3 coordinates");
  MoebiusMap P(t.t[0], t.t[1], t.t[n - 1]);
  AffineCoords s;
  for (int i = 2; i < n - 1; ++i) {
    ExtReal w = P(t.t[i]);
    if (w.inf) throw Error(ErrorKind::DegenerateCell, "coordinate " + std::to_string(i + 1) + " coincides with t1");
    s.s.push_back(w.value);
  }
  return s;
}

std::vector<ExtReal> moebius_inverse(const ExtReal& t1, const ExtReal& t2, const ExtReal& tn, const AffineCoords& s) {
  MoebiusMap P(t1, t2, tn);
  std::vector<ExtReal> out;
  for (double w : s.s) out.push_back(P.inverse(ExtReal::finite(w)));
  return out;
}

int cyclic_orientation(double a, double b, double c) {
  double db = wrap_angle(b - a), dc = wrap_angle(c - a);
  if (db == 0 || dc == 0 || db == dc) return 0;
  return db < dc ? 1 : -1;
}

int cyclic_orientation(const ExtReal& a, const ExtReal& b, const ExtReal& c) {
  Proj pa = proj(a), pb = proj(b), pc = proj(c);
  // each point occurs twice, so the sign does not depend on representatives
  double o = bracket(pb, pa) * bracket(pc, pb) * bracket(pc, pa);
  return (o > 0) - (o < 0);
}

// ---------------------------------------------------------------------------
// Membranes

double directed_gap(const AngleConfig& a, GapSite s) {
  int n = static_cast<int>(a.thetas.size());
  return wrap_angle(a.thetas[mod1(s.to, n) - 1] - a.thetas[mod1(s.from, n) - 1]);
}

double membrane_residual_angles(const AngleConfig& a, GapSite x, GapSite y) {
  return directed_gap(a, x) - directed_gap(a, y);
}

double membrane_residual_angles(const AngleConfig& a, int i, int j) {
  return membrane_residual_angles(a, GapSite{i, i + 1}, GapSite{j, j + 1});
}

double membrane_residual_tangent(const TangentCoords& t, int i, int j, int k) {
  int n = static_cast<int>(t.t.size());
  const ExtReal &a = t.t[mod1(i, n) - 1], &b = t.t[mod1(j, n) - 1], &c = t.t[mod1(k, n) - 1];
  if (a.inf || b.inf || c.inf) throw Error(ErrorKind::Input, "tangent membrane form needs finite coordinates");
  return a.value * b.value * c.value - (c.value - b.value - a.value);
}

double membrane_residual_affine(double t2, double tn, double si, double sj, double sk) {
  double ai = (t2 - tn) * si + tn, aj = (t2 - tn) * sj + tn, ak = (t2 - tn) * sk + tn;
  return t2 * t2 * tn * tn - (ai * aj - ai * ak - aj * ak);
}

int membrane_tangent_sign(const TangentCoords& t, int j) {
  int n = static_cast<int>(t.t.size());
  const ExtReal &tj = t.t[mod1(j, n) - 1], &tk = t.t[mod1(j + 1, n) - 1], &t2 = t.t[1];
  if (tj.inf || tk.inf || t2.inf) throw Error(ErrorKind::Input, "tangent membrane form needs finite coordinates");
  double th2 = angle_from_tangent(t2), thj = angle_from_tangent(tj), thk = angle_from_tangent(tk);
  double g1 = wrap_angle(th2), gj = wrap_angle(thk - thj);
  double s = (1 + tj.value * tk.value) * std::cos(g1 / 2) * std::cos(gj / 2);
  return (s > 0) - (s < 0);
}

// ---------------------------------------------------------------------------

AngleConfig reduce(const AngleConfig& a) {
  AngleConfig r = a;
  double t0 = a.thetas.empty() ? 0 : a.thetas[0];
  for (double& t : r.thetas) t = wrap_angle(t - t0);
  if (!r.thetas.empty()) r.thetas[0] = 0;
  return r;
}

Cell derive_cell(const LengthVector& l, const AngleConfig& a, double tol) {
  int n = static_cast<int>(a.thetas.size());
  if (n != l.size()) throw Error(ErrorKind::Input, "angle count does not match the length vector");
  std::vector<std::pair<double, int>> dirs;
  for (int i = 0; i < n; ++i) dirs.emplace_back(wrap_angle(a.thetas[i]), i + 1);
  std::sort(dirs.begin(), dirs.end());
  // start a group at the first direction whose predecessor gap exceeds tol
  int start = -1;
  for (int i = 0; i < n; ++i) {
    double prev = dirs[(i + n - 1) % n].first;
    double gap = wrap_angle(dirs[i].first - prev);
    if (n == 1 || gap > tol) {
      start = i;
      break;
    }
  }
  if (start < 0) throw Error(ErrorKind::DegenerateCell, "all arrows are parallel");
  std::vector<std::vector<int>> groups;
  std::vector<double> where;
  for (int s = 0; s < n; ++s) {
    int i = (start + s) % n;
    double prev = dirs[(i + n - 1) % n].first;
    if (s == 0 || wrap_angle(dirs[i].first - prev) > tol) {
      groups.push_back({});
      where.push_back(dirs[i].first);
    }
    groups.back().push_back(dirs[i].second);
  }
  if (groups.size() >= 3) return Cell::partition(std::move(groups));
  if (groups.size() == 2 && std::abs(wrap_angle(where[1] - where[0]) - kPi) <= 1e3 * tol)
    return Cell::collinear_vertex(groups[0], n);
  throw Error(ErrorKind::DegenerateCell, "arrow diagram does not describe a cell");
}

int winding_number(const AngleConfig& a) {
  int n = static_cast<int>(a.thetas.size());
  double turn = 0;
  for (int i = 0; i < n; ++i) {
    double d = wrap_angle(a.thetas[(i + 1) % n] - a.thetas[i]);
    if (d > kPi) d -= kTwoPi;
    turn += d;
  }
  return static_cast<int>(std::lround(turn / kTwoPi));
}

std::vector<std::array<double, 2>> vertex_positions(const LengthVector& l, const AngleConfig& a) {
  auto L = l.as_double();
  std::vector<std::array<double, 2>> v{{0.0, 0.0}};
  for (std::size_t i = 0; i + 1 < L.size(); ++i)
    v.push_back({v.back()[0] + L[i] * std::cos(a.thetas[i]), v.back()[1] + L[i] * std::sin(a.thetas[i])});
  return v;
}

// ---------------------------------------------------------------------------
// Sign vectors

SignVector sign_vector(const VertexAngleVector& phi) {
  constexpr double eps = 1e-12;
  SignVector sv;
  for (std::size_t i = 0; i < phi.angles.size(); ++i) {
    double p = wrap_angle(phi.angles[i]);
    if (p < eps || std::abs(p - kPi) < eps || kTwoPi - p < eps)
      throw Error(ErrorKind::Aligned, "vertex " + std::to_string(i + 1) + " is straight or folded");
    sv.signs += p < kPi ? '-' : '+';
  }
  bool all_minus = sv.signs.find('+') == std::string::npos;
  bool all_plus = sv.signs.find('-') == std::string::npos;
  if (!all_minus && !all_plus) return sv;
  VertexAngleVector q = all_plus ? mirror(phi) : phi;
  double lo = *std::min_element(q.angles.begin(), q.angles.end());
  double hi = *std::max_element(q.angles.begin(), q.angles.end());
  if (hi <= kPi / 3) {
    sv.primed = true;
  } else if (lo > 2 * std::asin(0.25)) {  // the threshold value itself goes to the winding test
    sv.primed = false;
  } else {
    sv.winding_fallback = true;
    AngleConfig a{thetas_from_vertex_angles(q)};
    sv.primed = std::abs(winding_number(a)) >= 2;
  }
  return sv;
}

bool open_chain_fully_reduced_membership(const std::vector<double>& thetas) {
  constexpr double eps = 1e-12;
  if (thetas.empty()) throw Error(ErrorKind::Input, "need at least one angle");
  bool primed = false;
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    double t = wrap_angle(thetas[i]);
    bool zero = t < eps || kTwoPi - t < eps;
    bool pi = std::abs(t - kPi) < eps;
    if (i + 1 == thetas.size()) {
      // last angle: closed half circle on the selected side
      if (zero || pi) return true;
      return primed ? t > kPi : t < kPi;
    }
    if (zero) continue;
    if (pi) {
      primed = !primed;
      continue;
    }
    return primed ? t > kPi : t < kPi;
  }
  return true;
}

}  // namespace linkage
