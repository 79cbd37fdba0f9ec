#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "linkage/core.hpp"

namespace linkage {

enum class Space { Reduced, FullyReduced };
const char* to_string(Space s);
Space parse_space(std::string_view s);

// A cell label. Partitions: cyclically ordered parts of {1..n}, members sorted,
// rotated so the part holding 1 comes first; dimension = parts - 3.
// Collinear vertices: parts = {S, S^c} with 1 in S, dimension 0.
struct Cell {
  bool collinear = false;
  std::vector<std::vector<int>> parts;

  static Cell partition(std::vector<std::vector<int>> parts);
  static Cell collinear_vertex(std::vector<int> side, int n);
  // "1,2|3|4|5" or "lin:1,3"
  static Cell parse(std::string_view label, int n);

  int dim() const { return collinear ? 0 : static_cast<int>(parts.size()) - 3; }
  std::string label() const;
  Cell reversed() const;  // reverse the cyclic order (collinear vertices are fixed)
  // Relabel edges by the edge action of g, keeping the cyclic order.
  Cell relabeled(const DihedralElement& g) const;
  int part_of(int edge) const;  // index into parts, -1 if absent

  auto operator<=>(const Cell&) const = default;
};

using CyclicPartition = Cell;
using CollinearVertex = Cell;

// Exact admissibility: every part sum strictly below half the perimeter.
bool admissible(const LengthVector& l, const Cell& c);

// q < p in the face order (never true for q == p).
bool boundary_relation(const LengthVector& l, const Cell& p, const Cell& q);

struct FacePoset {
  Space space = Space::Reduced;
  LengthVector lengths;
  std::vector<Cell> cells;                 // sorted by dimension, then label order
  std::vector<std::vector<int>> below;     // all strictly smaller elements, ascending
  std::vector<std::vector<int>> covers;    // elements one dimension lower
  std::vector<bool> branch;                // fixed by the ambient reversal (fully reduced only)
  std::vector<bool> tie_at_pi;             // representative chosen via the pi fallback
  std::unordered_map<std::string, int> index;

  explicit FacePoset(LengthVector l) : lengths(std::move(l)) {}

  int size() const { return static_cast<int>(cells.size()); }
  int dim() const;
  int find(const Cell& c) const;  // -1 if absent
  std::vector<int> f_vector() const;
  long euler() const;
  // Class representative of c in this poset (identity for the reduced space).
  Cell representative(const Cell& c) const;
  bool leq(int a, int b) const;  // a <= b
};

FacePoset enumerate_cells(const LengthVector& l, Space space);
FacePoset dihedral_reduce(const FacePoset& reduced);

// Representative of {c, reversed(c)} following the upper half-plane rule.
Cell dihedral_representative(const Cell& c, bool* tie_at_pi = nullptr);

// ---------------------------------------------------------------------------

struct SimplicialComplex {
  std::vector<std::string> labels;                         // one per vertex
  std::vector<std::vector<std::vector<int>>> simplices;    // [k] -> sorted k-simplices

  int num_vertices() const { return static_cast<int>(labels.size()); }
  int dim() const { return static_cast<int>(simplices.size()) - 1; }
  std::vector<long> f_vector() const;
  long euler() const;
  // Index of a sorted simplex, -1 if absent.
  long find(const std::vector<int>& s) const;

  // Builds the closure of the given simplices.
  static SimplicialComplex from_simplices(std::vector<std::string> labels,
                                          std::vector<std::vector<int>> simplices);
};

SimplicialComplex order_complex(const FacePoset& P);
// Order complex of the poset of faces strictly below element `top`.
SimplicialComplex order_complex_below(const FacePoset& P, int top);
SimplicialComplex barycentric_subdivide(const SimplicialComplex& K);

enum class Coeffs { Integers, Mod2 };

struct HomologyProfile {
  Coeffs coeffs = Coeffs::Integers;
  std::vector<long> betti;
  std::vector<std::vector<long>> torsion;  // invariant factors > 1 in each degree
  long euler = 0;
  std::optional<bool> orientable;          // set for closed pseudomanifolds
};

HomologyProfile homology(const SimplicialComplex& K, Coeffs c = Coeffs::Integers);
HomologyProfile homology(const FacePoset& P, Coeffs c = Coeffs::Integers);

// True if every codimension-one simplex lies in exactly two top simplices.
bool is_closed_pseudomanifold(const SimplicialComplex& K);

struct GraphInvariants {
  long b0 = 0, b1 = 0;
  std::vector<int> degrees;  // degrees of the vertices left after suppressing degree 2
  int degree1 = 0;
  int degree3plus = 0;
  int arcs = 0;              // edges after suppression (a bare circle counts as one)
};

GraphInvariants graph_invariants(const SimplicialComplex& K);

}  // namespace linkage
