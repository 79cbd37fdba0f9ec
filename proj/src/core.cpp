#include "linkage/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "linkage/errors.hpp"

namespace linkage {

double wrap_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r >= kTwoPi) r -= kTwoPi;
  return r;
}

int mod1(int i, int n) { return ((i - 1) % n + n) % n + 1; }

// ---------------------------------------------------------------------------
// LengthVector

LengthVector::LengthVector(std::vector<Rational> lengths) : lengths_(std::move(lengths)) {
  if (lengths_.size() < 3)
    throw Error(ErrorKind::Input, "a closed chain needs at least 3 edges");
  for (auto& q : lengths_) {
    q.canonicalize();
    if (q <= 0) throw Error(ErrorKind::Input, "edge lengths must be positive");
  }
}

LengthVector LengthVector::parse(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto tok = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    out.push_back(parse_rational(tok));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return LengthVector(std::move(out));
}

const Rational& LengthVector::operator()(int i) const { return lengths_[mod1(i, size()) - 1]; }

std::vector<double> LengthVector::as_double() const {
  std::vector<double> d;
  d.reserve(lengths_.size());
  for (auto& q : lengths_) d.push_back(q.get_d());
  return d;
}

Rational LengthVector::total() const {
  Rational t = 0;
  for (auto& q : lengths_) t += q;
  return t;
}

LengthVector LengthVector::rotated(int k) const {
  std::vector<Rational> v;
  for (int i = 1; i <= size(); ++i) v.push_back((*this)(i + k));
  return LengthVector(std::move(v));
}

LengthVector LengthVector::reversed() const {
  std::vector<Rational> v(lengths_.rbegin(), lengths_.rend());
  return LengthVector(std::move(v));
}

LengthVector LengthVector::canonical_rotation() const {
  LengthVector best = *this;
  for (int k = 1; k < size(); ++k) {
    LengthVector r = rotated(k);
    if (std::lexicographical_compare(r.lengths_.begin(), r.lengths_.end(), best.lengths_.begin(),
                                     best.lengths_.end()))
      best = r;
  }
  return best;
}

std::string LengthVector::str() const {
  std::string s;
  for (std::size_t i = 0; i < lengths_.size(); ++i) {
    if (i) s += ',';
    s += to_string(lengths_[i]);
  }
  return s;
}

// ---------------------------------------------------------------------------
// DihedralElement

DihedralElement DihedralElement::rotation(int n, int s) { return {n, ((s % n) + n) % n, false}; }
DihedralElement DihedralElement::reflection(int n, int s) { return {n, ((s % n) + n) % n, true}; }

int DihedralElement::vertex(int i) const { return flip ? mod1(shift - i, n) : mod1(i + shift, n); }

int DihedralElement::edge(int i) const {
  // edge i = {i, i+1}; a flip sends it to {shift-i, shift-i-1} = edge shift-i-1
  return flip ? mod1(shift - i - 1, n) : mod1(i + shift, n);
}

DihedralElement DihedralElement::compose(const DihedralElement& h) const {
  int s;
  bool f = flip != h.flip;
  if (!flip)
    s = shift + h.shift;
  else
    s = shift - h.shift;
  return {n, ((s % n) + n) % n, f};
}

DihedralElement DihedralElement::inverse() const {
  if (flip) return *this;
  return {n, (n - shift) % n, false};
}

int DihedralElement::order() const {
  if (flip) return 2;
  if (shift == 0) return 1;
  return n / std::gcd(n, shift);
}

std::string DihedralElement::str() const { return (flip ? "f" : "r") + std::to_string(shift); }

DihedralElement DihedralElement::parse(int n, std::string_view s) {
  if (s.size() < 2 || (s[0] != 'r' && s[0] != 'f'))
    throw Error(ErrorKind::Input, "group element must look like r<k> or f<k>");
  int v = 0;
  for (char c : s.substr(1)) {
    if (c < '0' || c > '9') throw Error(ErrorKind::Input, "bad group element '" + std::string(s) + "'");
    v = v * 10 + (c - '0');
  }
  return s[0] == 'r' ? rotation(n, v) : reflection(n, v);
}

// ---------------------------------------------------------------------------
// Groups

std::string AutGroup::name() const { return (kind == GroupKind::Cyclic ? "C" : "D") + std::to_string(k); }

bool AutGroup::contains(const DihedralElement& g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

const char* to_string(Reflectivity r) {
  switch (r) {
    case Reflectivity::Palindromic: return "palindromic";
    case Reflectivity::Reflective: return "reflective";
    case Reflectivity::None: return "none";
  }
  return "none";
}

bool preserves_lengths(const LengthVector& l, const DihedralElement& g) {
  for (int i = 1; i <= l.size(); ++i)
    if (l(g.edge(i)) != l(i)) return false;
  return true;
}

int order_of(const LengthVector& l) {
  int n = l.size(), k = 0;
  for (int s = 0; s < n; ++s)
    if (preserves_lengths(l, DihedralElement::rotation(n, s))) ++k;
  return k;
}

ReflectivityResult reflectivity(const LengthVector& l) {
  int n = l.size();
  ReflectivityResult res;
  bool palindromic = false;
  for (int s = 0; s < n; ++s) {
    auto f = DihedralElement::reflection(n, s);
    if (!preserves_lengths(l, f)) continue;
    res.axes.push_back(f);
    int fixed_edges = 0;
    for (int i = 1; i <= n; ++i)
      if (f.edge(i) == i) ++fixed_edges;
    // a rotation of the word reads the same backwards iff the axis misses
    // at least one of its two possible edge crossings
    if (fixed_edges <= 1) palindromic = true;
  }
  if (palindromic)
    res.kind = Reflectivity::Palindromic;
  else if (!res.axes.empty())
    res.kind = Reflectivity::Reflective;
  return res;
}

AutGroup automorphism_group(const LengthVector& l) {
  AutGroup G;
  G.n = l.size();
  for (int f = 0; f < 2; ++f)
    for (int s = 0; s < G.n; ++s) {
      DihedralElement g{G.n, s, f == 1};
      if (preserves_lengths(l, g)) G.elements.push_back(g);
    }
  std::sort(G.elements.begin(), G.elements.end());
  G.k = static_cast<int>(std::count_if(G.elements.begin(), G.elements.end(),
                                       [](const DihedralElement& g) { return !g.flip; }));
  G.kind = G.order() == G.k ? GroupKind::Cyclic : GroupKind::Dihedral;
  return G;
}

// ---------------------------------------------------------------------------
// Vertex angles

VertexAngleVector vertex_angles(const std::vector<double>& thetas) {
  int n = static_cast<int>(thetas.size());
  VertexAngleVector phi;
  phi.angles.resize(n);
  for (int i = 0; i < n; ++i) phi.angles[i] = wrap_angle(thetas[(i + n - 1) % n] + kPi - thetas[i]);
  return phi;
}

std::vector<double> thetas_from_vertex_angles(const VertexAngleVector& phi) {
  int n = static_cast<int>(phi.angles.size());
  std::vector<double> th(n, 0.0);
  for (int i = 1; i < n; ++i) th[i] = wrap_angle(th[i - 1] + kPi - phi.angles[i]);
  return th;
}

VertexAngleVector relabel_normalize(const DihedralElement& g, const VertexAngleVector& phi) {
  int n = static_cast<int>(phi.angles.size());
  VertexAngleVector out;
  out.angles.assign(n, 0.0);
  for (int j = 1; j <= n; ++j) {
    double a = phi.angles[j - 1];
    out.angles[g.vertex(j) - 1] = g.flip ? wrap_angle(kTwoPi - a) : a;
  }
  return out;
}

VertexAngleVector mirror(const VertexAngleVector& phi) {
  VertexAngleVector out = phi;
  for (auto& a : out.angles) a = wrap_angle(kTwoPi - a);
  return out;
}

double angle_distance(const VertexAngleVector& a, const VertexAngleVector& b) {
  double worst = 0;
  for (std::size_t i = 0; i < a.angles.size(); ++i) {
    double d = wrap_angle(a.angles[i] - b.angles[i]);
    worst = std::max(worst, std::min(d, kTwoPi - d));
  }
  return worst;
}

}  // namespace linkage
