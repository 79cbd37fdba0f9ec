#include <algorithm>
#include <cmath>
#include <random>

#include "linkage/errors.hpp"
#include "linkage/geometry.hpp"

namespace linkage {

namespace {

constexpr double kMinGap = 1e-3;
constexpr int kMaxSteps = 10000;
constexpr int kRetries = 24;

// Central angles of the polygon with the given sides inscribed in a circle.
// Returns gaps between consecutive edge directions (exterior angles).
std::vector<double> inscribed_gaps(const std::vector<double>& L) {
  int m = static_cast<int>(L.size());
  int big = static_cast<int>(std::max_element(L.begin(), L.end()) - L.begin());
  double Lmax = L[big];
  auto central = [&](double R, int k) { return 2 * std::asin(std::min(1.0, L[k] / (2 * R))); };
  auto others = [&](double R) {
    double s = 0;
    for (int k = 0; k < m; ++k)
      if (k != big) s += central(R, k);
    return s;
  };
  double lo = Lmax / 2, hi = lo;
  bool inside = others(lo) + kPi >= kTwoPi;
  // inside: sum of all central angles = 2pi; outside: the long side subtends the rest
  auto f = [&](double R) { return inside ? others(R) + central(R, big) - kTwoPi : others(R) - central(R, big); };
  // f changes sign between lo and some hi
  hi = lo * 2;
  for (int it = 0; it < 200 && ((inside && f(hi) > 0) || (!inside && f(hi) < 0)); ++it) hi *= 2;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    bool go_up = inside ? f(mid) > 0 : f(mid) < 0;
    (go_up ? lo : hi) = mid;
    if (hi - lo <= 1e-16 * hi) break;
  }
  double R = 0.5 * (lo + hi);
  std::vector<double> alpha(m);
  for (int k = 0; k < m; ++k) alpha[k] = central(R, k);
  if (!inside) alpha[big] = kTwoPi - alpha[big];
  // vertices on the circle, edge directions from differences
  std::vector<double> c(m + 1, 0.0), dir(m);
  for (int k = 0; k < m; ++k) c[k + 1] = c[k] + alpha[k];
  for (int k = 0; k < m; ++k)
    dir[k] = std::atan2(std::sin(c[k + 1]) - std::sin(c[k]), std::cos(c[k + 1]) - std::cos(c[k]));
  std::vector<double> gaps(m);
  for (int k = 0; k < m; ++k) gaps[k] = wrap_angle(dir[(k + 1) % m] - dir[k]);
  // normalize the tiny drift in the sum
  double s = 0;
  for (double g : gaps) s += g;
  for (double& g : gaps) g *= kTwoPi / s;
  return gaps;
}

struct Residual {
  double x, y;
  double norm() const { return std::hypot(x, y); }
};

Residual residual(const std::vector<double>& L, const std::vector<double>& psi) {
  Residual r{0, 0};
  for (std::size_t k = 0; k < L.size(); ++k) {
    r.x += L[k] * std::cos(psi[k]);
    r.y += L[k] * std::sin(psi[k]);
  }
  return r;
}

std::vector<double> directions(const std::vector<double>& gaps) {
  std::vector<double> psi(gaps.size(), 0.0);
  for (std::size_t k = 1; k < gaps.size(); ++k) psi[k] = psi[k - 1] + gaps[k - 1];
  return psi;
}

bool order_ok(const std::vector<double>& psi) {
  for (std::size_t k = 1; k < psi.size(); ++k)
    if (psi[k] - psi[k - 1] < kMinGap) return false;
  return kTwoPi - psi.back() >= kMinGap;
}

// Damped Gauss-Newton with minimum-norm steps, psi[0] held at 0.
bool project_to_closed(const std::vector<double>& L, std::vector<double>& psi, double tol) {
  int m = static_cast<int>(L.size());
  Residual r = residual(L, psi);
  for (int step = 0; step < kMaxSteps; ++step) {
    if (r.norm() <= tol) return true;
    // J columns for k >= 1: d/dpsi_k (L cos, L sin) = (-L sin, L cos)
    double a = 0, b = 0, d = 0;
    std::vector<double> jx(m), jy(m);
    for (int k = 1; k < m; ++k) {
      jx[k] = -L[k] * std::sin(psi[k]);
      jy[k] = L[k] * std::cos(psi[k]);
      a += jx[k] * jx[k];
      b += jx[k] * jy[k];
      d += jy[k] * jy[k];
    }
    double det = a * d - b * b;
    if (std::abs(det) < 1e-300) return false;
    // y = (J J^T)^{-1} r
    double yx = (d * r.x - b * r.y) / det, yy = (-b * r.x + a * r.y) / det;
    std::vector<double> delta(m, 0.0);
    for (int k = 1; k < m; ++k) delta[k] = -(jx[k] * yx + jy[k] * yy);
    double t = 1;
    bool moved = false;
    for (int bt = 0; bt < 60; ++bt, t *= 0.5) {
      std::vector<double> trial = psi;
      for (int k = 1; k < m; ++k) trial[k] += t * delta[k];
      if (!order_ok(trial)) continue;
      Residual rt = residual(L, trial);
      if (rt.norm() < r.norm()) {
        psi = std::move(trial);
        r = rt;
        moved = true;
        break;
      }
    }
    if (!moved) return r.norm() <= tol;
  }
  return r.norm() <= tol;
}

AngleConfig assemble(const Cell& cell, int n, const std::vector<double>& psi) {
  AngleConfig a;
  a.thetas.assign(n, 0.0);
  for (std::size_t k = 0; k < cell.parts.size(); ++k)
    for (int e : cell.parts[k]) a.thetas[e - 1] = wrap_angle(psi[k]);
  return reduce(a);
}

}  // namespace

AngleConfig solve_cell_representative(const LengthVector& l, const Cell& cell, std::uint64_t seed) {
  const int n = l.size();
  for (auto& p : cell.parts)
    for (int e : p)
      if (e < 1 || e > n) throw Error(ErrorKind::Input, "cell does not match the length vector");
  if (!admissible(l, cell))
    throw Error(ErrorKind::Infeasible, "cell " + cell.label() + " is not admissible for " + l.str());
  if (cell.collinear) return assemble(cell, n, {0.0, kPi});

  auto Ld = l.as_double();
  std::vector<double> L;
  for (auto& p : cell.parts) {
    double s = 0;
    for (int e : p) s += Ld[e - 1];
    L.push_back(s);
  }
  double total = 0;
  for (double x : L) total += x;
  const double tol = 1e-13 * std::max(1.0, total);

  auto base = inscribed_gaps(L);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.15, 0.85);
  std::exponential_distribution<double> expo(1.0);
  for (int attempt = 0; attempt <= kRetries; ++attempt) {
    std::vector<double> gaps = base;
    if (seed != 0 || attempt > 0) {
      double lambda = uni(rng) / (1 + attempt / 4);
      std::vector<double> dir(L.size());
      double s = 0;
      for (double& x : dir) s += (x = expo(rng));
      for (std::size_t k = 0; k < gaps.size(); ++k)
        gaps[k] = (1 - lambda) * base[k] + lambda * kTwoPi * dir[k] / s;
    }
    auto psi = directions(gaps);
    if (!order_ok(psi)) continue;
    if (project_to_closed(L, psi, tol)) return assemble(cell, n, psi);
  }
  throw Error(ErrorKind::Infeasible, "no closed configuration found for cell " + cell.label());
}

}  // namespace linkage
