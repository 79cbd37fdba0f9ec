#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "linkage/complex.hpp"
#include "linkage/core.hpp"
#include "linkage/symmetry.hpp"

namespace linkage {

// ---------------------------------------------------------------------------
// Quadrilaterals

enum class QuadShape { Interval, Circle, Wedge, CircleWithDiameter, IntervalEquilateral, Asymmetric };
const char* to_string(QuadShape s);

// Graph invariants a shape must have.
struct ShapeSignature {
  long b0 = 1, b1 = 0;
  int degree1 = 0;
  std::vector<int> branch_degrees;  // sorted degrees >= 3
};

struct QuadCase {
  QuadShape shape = QuadShape::Asymmetric;
  std::string tag;                  // "i".."v" for the symmetric cases
  std::string homeomorphism;        // "interval", "circle", ...
  Rational p, q, r, s;              // arrangement with s maximal that witnessed the case
  std::vector<std::string> witness; // the inequalities that held, evaluated exactly
  std::string reduced_subcase;      // "i".."vi" for the reduced space
  std::string reduced_type;         // "S1", "S1 v S1", ...
  int aut_order = 1;
  // cross-check against the computed complex
  GraphInvariants computed;
  ShapeSignature predicted;
  bool cross_check = false;
};

// Exact case analysis plus the quotient computation. Throws DegenerateLinkage
// when the space is empty or a point.
QuadCase classify_quadrilateral(const LengthVector& l);

ShapeSignature shape_signature(QuadShape s);
bool matches(const ShapeSignature& sig, const GraphInvariants& g);

// Reduced space of a quadrilateral as a graph, with the action of each
// nontrivial automorphism marked on vertices and arcs.
struct AnnotatedGraph {
  struct Vertex {
    std::string label;
    bool collinear = false;
  };
  struct Arc {
    std::string label;
    int from = -1, to = -1;  // vertex indices
  };
  struct Action {
    std::string element;
    std::vector<std::string> vertices;  // "fixed" or "-> label"
    std::vector<std::string> arcs;      // "fixed", "reversed", or "-> label"
    int fixed_points = 0;               // -1 when an arc is fixed pointwise
  };
  LengthVector lengths;
  std::vector<Vertex> vertices;
  std::vector<Arc> arcs;
  std::vector<Action> actions;
  GraphInvariants invariants;

  explicit AnnotatedGraph(LengthVector l) : lengths(std::move(l)) {}
};

AnnotatedGraph quadrilateral_structure(const LengthVector& l);

// ---------------------------------------------------------------------------
// Pentagon

struct SignCellEntry {
  std::string sign;   // e.g. "++---" or "-----'"
  std::string type;   // I, I', II, III, IV, V
  int components = 0;
  long samples = 0;
};

struct SignCellCensus {
  int grid = 0;
  long samples = 0;
  long skipped = 0;  // aligned or on the fold
  std::vector<SignCellEntry> cells;
  std::map<std::string, int> per_type;
  int total = 0;
  // adjacent sign cells and how the wall is crossed ("straighten" or "fold")
  std::vector<std::array<std::string, 3>> adjacency;
};

// Sign vectors sampled on a grid chart of the equilateral pentagon, with
// connected components per sign vector found by union-find.
SignCellCensus sign_cell_census(int grid = 400);

struct LinkCheck {
  bool pure = true;
  bool links_ok = true;          // every vertex link is a path or a cycle
  int boundary_components = 0;   // circles formed by edges in a single triangle
  bool boundary_is_circles = true;
};

LinkCheck surface_check(const SimplicialComplex& K);

struct PentagonReport {
  std::vector<int> reduced_f, fully_reduced_f;
  HomologyProfile reduced, fully_reduced, symmetric, symmetric_mod2;
  HomologyProfile fully_reduced_mod2;
  int symmetric_group_order = 0;
  std::vector<long> symmetric_f;
  LinkCheck symmetric_links;
  int dihedral_types = 0;  // orbits of top cells under relabeling and reversal
  std::vector<std::string> dihedral_type_labels;
  SignCellCensus census;
};

PentagonReport pentagon_report(int census_grid = 400);

// ---------------------------------------------------------------------------
// Hexagon

struct HexagonReport {
  std::string top_cell;
  std::vector<int> boundary_f;  // faces strictly below E_Id by dimension
  long boundary_euler = 0;
  int fine_cells = 0;
  std::vector<int> star_types;
  int barycenter_stabilizer = 0;
  std::vector<std::string> realized, not_realized;
  int reduced_vertices = 0, fully_reduced_vertices = 0;
  std::vector<int> reduced_f, fully_reduced_f;
};

HexagonReport hexagon_report();

}  // namespace linkage
