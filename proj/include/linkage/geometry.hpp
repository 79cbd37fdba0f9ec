#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linkage/complex.hpp"
#include "linkage/core.hpp"

namespace linkage {

// Arrow diagram: direction of edge i is thetas[i-1].
struct AngleConfig {
  std::vector<double> thetas;
};

// Point of the projective line; `inf` marks the point at infinity.
struct ExtReal {
  double value = 0;
  bool inf = false;

  static ExtReal infinity() { return {0, true}; }
  static ExtReal finite(double v) { return {v, false}; }
};

struct TangentCoords {
  std::vector<ExtReal> t;
};

struct AffineCoords {
  std::vector<double> s;  // s_3 .. s_{n-1}
};

std::array<double, 2> closure_residual(const LengthVector& l, const AngleConfig& a);
double closure_norm(const LengthVector& l, const AngleConfig& a);
// Closure evaluated through the rational parametrization of the circle.
std::array<double, 2> closure_residual_tangent(const LengthVector& l, const TangentCoords& t);

// Directions within this distance of pi map exactly to infinity.
constexpr double kPiSnap = 1e-15;

ExtReal tangent_halfangle(double theta);
double angle_from_tangent(const ExtReal& t);
TangentCoords tangent_halfangle(const AngleConfig& a);
AngleConfig angles_from_tangent(const TangentCoords& t);

// The projective map sending t_1, t_2, t_n to infinity, 0, 1.
class MoebiusMap {
 public:
  MoebiusMap(const ExtReal& t1, const ExtReal& t2, const ExtReal& tn);
  ExtReal operator()(const ExtReal& x) const;
  ExtReal inverse(const ExtReal& w) const;
  double det() const { return m_[0][0] * m_[1][1] - m_[0][1] * m_[1][0]; }

 private:
  double m_[2][2];
};

// (P(t_3), ..., P(t_{n-1})). Throws DegenerateCell when pinned coordinates coincide.
AffineCoords moebius_normalize(const TangentCoords& t);
// Recovers t_3 .. t_{n-1} from the pins t_1, t_2, t_n and the affine coordinates.
std::vector<ExtReal> moebius_inverse(const ExtReal& t1, const ExtReal& t2, const ExtReal& tn, const AffineCoords& s);

// Cyclic order on the circle / projective line: sign of the orientation of (a, b, c).
int cyclic_orientation(double a, double b, double c);
int cyclic_orientation(const ExtReal& a, const ExtReal& b, const ExtReal& c);

// Directed gap from arrow `from` to arrow `to`, in [0, 2pi).
struct GapSite {
  int from = 1, to = 2;
};
double directed_gap(const AngleConfig& a, GapSite s);

// gap(a) - gap(b); zero on the membrane between the two fine cells.
double membrane_residual_angles(const AngleConfig& a, GapSite x, GapSite y);
// Reduced form: sites (i, i+1) and (j, j+1).
double membrane_residual_angles(const AngleConfig& a, int i, int j);

// t_i t_j t_k - (t_k - t_j - t_i), for t_1 = 0 and finite arguments.
double membrane_residual_tangent(const TangentCoords& t, int i, int j, int k);
// The cross-multiplied affine form: t2^2 tn^2 - (a_i a_j - a_i a_k - a_j a_k),
// a_x = (t2 - tn) s_x + tn.
double membrane_residual_affine(double t2, double tn, double si, double sj, double sk);
// Sign relating the tangent form at (2, j, j+1) to sin of half the angle residual
// between sites (1,2) and (j,j+1), for t_1 = 0.
int membrane_tangent_sign(const TangentCoords& t, int j);

// Closed configuration inside the given cell. Seed 0 is the inscribed polygon;
// other seeds perturb it and reproject. Throws Infeasible.
AngleConfig solve_cell_representative(const LengthVector& l, const Cell& cell, std::uint64_t seed = 0);
// Group equal directions (within tol) into the cyclic partition they describe.
Cell derive_cell(const LengthVector& l, const AngleConfig& a, double tol = 1e-7);
// Rotate so theta_1 = 0.
AngleConfig reduce(const AngleConfig& a);

struct SignVector {
  std::string signs;  // '-' or '+' per vertex
  bool primed = false;
  bool winding_fallback = false;  // threshold rule was inconclusive

  std::string str() const { return signs + (primed ? "'" : ""); }
};

// Vertex angles exactly at 0 or pi (within 1e-12) throw Aligned.
SignVector sign_vector(const VertexAngleVector& phi);

// Membership of an open chain of k edges in its fully reduced space, angles theta_2..theta_k.
bool open_chain_fully_reduced_membership(const std::vector<double>& thetas);

// Turning number of the closed polygon traced by the arrow diagram.
int winding_number(const AngleConfig& a);

// Vertex positions, vertex 1 at the origin.
std::vector<std::array<double, 2>> vertex_positions(const LengthVector& l, const AngleConfig& a);

}  // namespace linkage
