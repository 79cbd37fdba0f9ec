#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "linkage/rational.hpp"

namespace linkage {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

// Reduce an angle to [0, 2pi).
double wrap_angle(double a);

// Closed chain given by its edge lengths, edge i joining vertices i and i+1.
// Indices in the public API are 1-based and taken mod n.
class LengthVector {
 public:
  explicit LengthVector(std::vector<Rational> lengths);

  // Comma separated rationals: "1,3/2,1,3/2".
  static LengthVector parse(std::string_view text);

  int size() const { return static_cast<int>(lengths_.size()); }
  // 1-based, cyclic.
  const Rational& operator()(int i) const;
  const std::vector<Rational>& values() const { return lengths_; }
  std::vector<double> as_double() const;
  Rational total() const;

  LengthVector rotated(int k) const;  // entry i of result is entry i+k of this
  LengthVector reversed() const;
  // Lexicographically least rotation.
  LengthVector canonical_rotation() const;

  std::string str() const;

  bool operator==(const LengthVector& o) const { return lengths_ == o.lengths_; }

 private:
  std::vector<Rational> lengths_;
};

int mod1(int i, int n);  // representative of i in 1..n

// Label symmetry of the n-cycle: i -> i + shift, or i -> shift - i when flipped.
struct DihedralElement {
  int n = 0;
  int shift = 0;
  bool flip = false;

  static DihedralElement identity(int n) { return {n, 0, false}; }
  static DihedralElement rotation(int n, int s);
  static DihedralElement reflection(int n, int s);

  int vertex(int i) const;  // image of vertex i
  int edge(int i) const;    // image of edge i (edge i joins i and i+1)

  DihedralElement compose(const DihedralElement& h) const;  // this after h
  DihedralElement inverse() const;
  bool is_identity() const { return !flip && shift == 0; }
  int order() const;

  std::string str() const;  // "r2" or "f3"
  static DihedralElement parse(int n, std::string_view s);

  auto operator<=>(const DihedralElement&) const = default;
};

enum class GroupKind { Cyclic, Dihedral };

struct AutGroup {
  int n = 0;
  GroupKind kind = GroupKind::Cyclic;
  int k = 1;  // number of rotations
  std::vector<DihedralElement> elements;  // sorted, identity first

  int order() const { return static_cast<int>(elements.size()); }
  std::string name() const;  // "C3", "D4"
  bool contains(const DihedralElement& g) const;
};

enum class Reflectivity { Palindromic, Reflective, None };
const char* to_string(Reflectivity r);

struct ReflectivityResult {
  Reflectivity kind = Reflectivity::None;
  std::vector<DihedralElement> axes;  // flips preserving the lengths
};

int order_of(const LengthVector& l);
ReflectivityResult reflectivity(const LengthVector& l);
bool preserves_lengths(const LengthVector& l, const DihedralElement& g);
AutGroup automorphism_group(const LengthVector& l);

// Vertex angle at i, measured counterclockwise from A_iA_{i+1} to A_iA_{i-1}.
struct VertexAngleVector {
  std::vector<double> angles;
};

// Conversions between edge directions and vertex angles. The reduced form has theta_1 = 0.
VertexAngleVector vertex_angles(const std::vector<double>& thetas);
std::vector<double> thetas_from_vertex_angles(const VertexAngleVector& phi);

// Relabel by g (vertex j becomes g(j)) and renormalize.
VertexAngleVector relabel_normalize(const DihedralElement& g, const VertexAngleVector& phi);

// Mirror image, used for comparisons in the fully reduced space.
VertexAngleVector mirror(const VertexAngleVector& phi);

// Max circular distance between corresponding angles.
double angle_distance(const VertexAngleVector& a, const VertexAngleVector& b);

}  // namespace linkage
