#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linkage/complex.hpp"
#include "linkage/core.hpp"
#include "linkage/geometry.hpp"

namespace linkage {

// A symmetry acting on the reduced space: relabel by g, then optionally
// reverse the ambient orientation (mirror the whole configuration).
struct AmbientElement {
  DihedralElement g;
  bool mirror = false;

  std::string str() const { return g.str() + (mirror ? "m" : ""); }
  auto operator<=>(const AmbientElement&) const = default;
};

// Image of each cell under each group element.
struct ActionTable {
  std::vector<DihedralElement> elements;
  std::vector<std::vector<int>> image;  // [element][cell]

  int find_element(const DihedralElement& g) const;
};

// Throws ActionMismatch if an image cell is missing from the poset.
ActionTable action_on_cells(const AutGroup& G, const FacePoset& P);

struct Stabilizer {
  int cell = -1;
  std::vector<DihedralElement> elements;
  int order() const { return static_cast<int>(elements.size()); }
};

Stabilizer stabilizer(const ActionTable& T, int cell);

// Positions are the parts of a cell in cyclic order. A dart (position, +1)
// names the gap from that part to the next one; (position, -1) the gap to the
// previous one.
struct Dart {
  int position = 0;
  int direction = 1;
  auto operator<=>(const Dart&) const = default;
};

// How a stabilizing element moves the parts of its cell: p -> shift + sign * p (mod m).
struct PositionMap {
  int shift = 0;
  int sign = 1;
  Dart operator()(const Dart& d, int m) const;
};

PositionMap position_map(const FacePoset& P, int cell, const DihedralElement& g);

struct FineCellLabel {
  int cell = -1;
  Dart dart;
  // arrows bounding the distinguished gap, e.g. (1, 2)
  int from_edge = 0, to_edge = 0;
};

// One fine cell per dart in the orbit of (0, +1) under the stabilizer.
std::vector<FineCellLabel> fine_cells(const FacePoset& P, const ActionTable& T, int cell);

// Fine cell of a configuration in the given cell: the orbit dart whose gap word
// is lexicographically least. Throws DegenerateCell within `margin` of a membrane.
FineCellLabel classify_fine_cell(const FacePoset& P, const ActionTable& T, int cell, const AngleConfig& a,
                                 double margin = 1e-6);

// Sites compared by the membrane between two fine cells of the same parent.
std::pair<GapSite, GapSite> membrane_sites(const FineCellLabel& a, const FineCellLabel& b);

struct QuotientComplex {
  SimplicialComplex complex;
  std::vector<int> projection;  // subdivided vertex -> quotient vertex
  int subdivided_vertices = 0;
  int group_order = 0;
  int subdivisions = 2;
};

// Quotient of the reduced complex by the given ambient group, after the
// requested number of barycentric subdivisions (at least 2 for a faithful quotient).
QuotientComplex quotient_complex(const FacePoset& reduced, const std::vector<AmbientElement>& group,
                                 int subdivisions = 2);

// Group selectors: "full", "rotations", "reflection:<shift>", "trivial".
// With fully_reduced the mirror is added to every element.
std::vector<AmbientElement> select_group(const LengthVector& l, const std::string& selector, bool fully_reduced);

// All subgroups of a finite group of dihedral elements, each sorted.
std::vector<std::vector<DihedralElement>> subgroups(const std::vector<DihedralElement>& group);
std::string subgroup_name(const std::vector<DihedralElement>& H);

struct StabilizerCensus {
  std::vector<std::vector<DihedralElement>> all;       // every subgroup of Aut
  std::vector<std::vector<DihedralElement>> realized;  // those that stabilize some cell
  std::vector<int> realized_count;                     // cells per realized subgroup
};

StabilizerCensus realized_stabilizers(const LengthVector& l, Space space);

// ---------------------------------------------------------------------------
// Fixed point sets

enum class AxisType { Median, Diagonal, Midsegment };
const char* to_string(AxisType a);

struct ReflectionFixedReport {
  DihedralElement reflection;
  AxisType axis = AxisType::Median;
  std::vector<int> axis_vertices;  // vertices on the axis
  std::vector<int> axis_edges;     // edges crossed at their midpoints
  std::vector<Rational> half_chain;  // lengths of the open half chain
  std::string map_type;            // "injective", "injective-except-RP1", "double-cover"
  std::vector<AngleConfig> samples;
};

ReflectionFixedReport reflection_fixed_report(const LengthVector& l, const DihedralElement& rho,
                                              int samples = 4, std::uint64_t seed = 0);

// Windings w = 1..floor(d/2); w = d/2 is the folded collinear type.
std::vector<int> star_polygon_types(int d);

struct RotationComponent {
  int winding = 0;
  int side = 1;  // the two mirror classes of the open block
  AngleConfig config;
};

struct RotationFixedReport {
  int n = 0, d = 0, block = 0;
  std::vector<int> windings;
  std::vector<RotationComponent> components;  // one sampled configuration per component
  double max_invariance_error = 0;
  double max_closure = 0;
};

RotationFixedReport rotation_fixed_report(const LengthVector& l, int d, std::uint64_t seed = 0);

struct DihedralFixedResult {
  int d = 0, winding = 1;
  int vertex_a = 0;          // vertex placed at polar angle psi in the sector
  double L = 0, L0 = 0;
  double psi = 0, alpha = 0;  // sector between the two mirror lines is [0, alpha]
  double radius = 0;          // distance of vertex A from the center
  double reach_k = 0, reach_m = 0;  // subchain lengths toward each mirror
  std::vector<AngleConfig> configs;
  double max_invariance_error = 0;
  double max_closure = 0;
};

// Configurations fixed by the dihedral subgroup of order 2d generated by the
// rotation of order d and the reflection with the given shift. L < 0 means L0.
DihedralFixedResult dihedral_fixed_sampler(const LengthVector& l, int d, int reflection_shift, double L,
                                           int winding = 1, std::optional<double> psi = std::nullopt,
                                           std::uint64_t seed = 0);

// Largest deviation between relabel_normalize(g, phi) and phi. A flip turns a
// mirror-symmetric configuration into its mirror image, so flips compare with mirror(phi).
double invariance_error(const DihedralElement& g, const AngleConfig& a);

}  // namespace linkage
