#include "linkage/symmetry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "linkage/errors.hpp"

namespace linkage {

int ActionTable::find_element(const DihedralElement& g) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == g) return static_cast<int>(i);
  return -1;
}

ActionTable action_on_cells(const AutGroup& G, const FacePoset& P) {
  ActionTable T;
  T.elements = G.elements;
  for (auto& g : G.elements) {
    std::vector<int> img(P.size());
    for (int c = 0; c < P.size(); ++c) {
      Cell im = P.cells[c].relabeled(g);
      img[c] = P.find(im);
      if (img[c] < 0)
        throw Error(ErrorKind::ActionMismatch,
                    g.str() + " sends " + P.cells[c].label() + " to " + im.label() + ", which is not a cell");
    }
    T.image.push_back(std::move(img));
  }
  return T;
}

Stabilizer stabilizer(const ActionTable& T, int cell) {
  Stabilizer s;
  s.cell = cell;
  for (std::size_t i = 0; i < T.elements.size(); ++i)
    if (T.image[i][cell] == cell) s.elements.push_back(T.elements[i]);
  return s;
}

// ---------------------------------------------------------------------------
// Fine cells

Dart PositionMap::operator()(const Dart& d, int m) const {
  return {((shift + sign * d.position) % m + m) % m, sign * d.direction};
}

PositionMap position_map(const FacePoset& P, int cell, const DihedralElement& g) {
  const Cell& c = P.cells[cell];
  int m = static_cast<int>(c.parts.size());
  std::vector<int> perm(m, -1);
  for (int p = 0; p < m; ++p) {
    std::vector<int> img;
    for (int e : c.parts[p]) img.push_back(g.edge(e));
    std::sort(img.begin(), img.end());
    for (int q = 0; q < m; ++q)
      if (c.parts[q] == img) perm[p] = q;
    if (perm[p] < 0) throw Error(ErrorKind::ActionMismatch, g.str() + " does not stabilize " + c.label());
  }
  PositionMap pm;
  pm.shift = perm[0];
  if (m >= 3) pm.sign = perm[1] == (perm[0] + 1) % m ? 1 : -1;
  for (int p = 0; p < m; ++p)
    if (perm[p] != ((pm.shift + pm.sign * p) % m + m) % m)
      throw Error(ErrorKind::ActionMismatch, g.str() + " does not act dihedrally on the parts of " + c.label());
  return pm;
}

namespace {

std::vector<Dart> dart_orbit(const FacePoset& P, const ActionTable& T, int cell) {
  int m = static_cast<int>(P.cells[cell].parts.size());
  std::set<Dart> orbit{Dart{0, 1}};
  for (auto& g : stabilizer(T, cell).elements) orbit.insert(position_map(P, cell, g)(Dart{0, 1}, m));
  return {orbit.begin(), orbit.end()};
}

FineCellLabel make_label(const FacePoset& P, int cell, Dart d) {
  const Cell& c = P.cells[cell];
  int m = static_cast<int>(c.parts.size());
  FineCellLabel f;
  f.cell = cell;
  f.dart = d;
  f.from_edge = c.parts[d.position].front();
  f.to_edge = c.parts[((d.position + d.direction) % m + m) % m].front();
  return f;
}

}  // namespace

std::vector<FineCellLabel> fine_cells(const FacePoset& P, const ActionTable& T, int cell) {
  std::vector<FineCellLabel> out;
  if (P.cells[cell].collinear) {
    out.push_back(FineCellLabel{cell, Dart{0, 1}, 0, 0});
    return out;
  }
  for (auto& d : dart_orbit(P, T, cell)) out.push_back(make_label(P, cell, d));
  return out;
}

FineCellLabel classify_fine_cell(const FacePoset& P, const ActionTable& T, int cell, const AngleConfig& a,
                                 double margin) {
  const Cell& c = P.cells[cell];
  if (c.collinear) return FineCellLabel{cell, Dart{0, 1}, 0, 0};
  int m = static_cast<int>(c.parts.size());
  std::vector<double> gap(m);
  for (int p = 0; p < m; ++p)
    gap[p] = wrap_angle(a.thetas[c.parts[(p + 1) % m].front() - 1] - a.thetas[c.parts[p].front() - 1]);
  auto word = [&](Dart d) {
    std::vector<double> w(m);
    for (int k = 0; k < m; ++k)
      w[k] = d.direction > 0 ? gap[(d.position + k) % m] : gap[((d.position - k - 1) % m + m) % m];
    return w;
  };
  auto darts = dart_orbit(P, T, cell);
  Dart best = darts[0];
  auto bw = word(best);
  for (std::size_t i = 1; i < darts.size(); ++i) {
    auto w = word(darts[i]);
    int k = 0;
    while (k < m && std::abs(w[k] - bw[k]) <= 1e-13) ++k;
    if (k == m || std::abs(w[k] - bw[k]) < margin)
      throw Error(ErrorKind::DegenerateCell, "configuration lies on a membrane of " + c.label());
    if (w[k] < bw[k]) {
      best = darts[i];
      bw = std::move(w);
    }
  }
  return make_label(P, cell, best);
}

std::pair<GapSite, GapSite> membrane_sites(const FineCellLabel& a, const FineCellLabel& b) {
  return {GapSite{a.from_edge, a.to_edge}, GapSite{b.from_edge, b.to_edge}};
}

// ---------------------------------------------------------------------------
// Quotients

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void join(int a, int b) {
    a = find(a), b = find(b);
    if (a != b) p[std::max(a, b)] = std::min(a, b);
  }
};

// Vertex permutation induced on the barycentric subdivision.
std::vector<int> lift(const SimplicialComplex& K, const std::vector<int>& perm) {
  std::vector<int> out;
  for (std::size_t k = 0; k < K.simplices.size(); ++k) {
    for (auto& s : K.simplices[k]) {
      std::vector<int> img;
      for (int v : s) img.push_back(perm[v]);
      std::sort(img.begin(), img.end());
      long idx = K.find(img);
      if (idx < 0) throw Error(ErrorKind::ActionMismatch, "group element is not simplicial");
      out.push_back(static_cast<int>(idx));
    }
  }
  // convert (dim, index) to the subdivision's vertex numbering
  std::vector<long> offset(K.simplices.size() + 1, 0);
  for (std::size_t k = 0; k < K.simplices.size(); ++k) offset[k + 1] = offset[k] + K.simplices[k].size();
  std::size_t pos = 0;
  for (std::size_t k = 0; k < K.simplices.size(); ++k)
    for (std::size_t j = 0; j < K.simplices[k].size(); ++j, ++pos) out[pos] = static_cast<int>(offset[k] + out[pos]);
  return out;
}

}  // namespace

QuotientComplex quotient_complex(const FacePoset& P, const std::vector<AmbientElement>& group, int subdivisions) {
  if (P.space != Space::Reduced) throw Error(ErrorKind::Input, "quotients are built from the reduced complex");
  std::vector<std::vector<int>> perms;
  for (auto& a : group) {
    std::vector<int> perm(P.size());
    for (int c = 0; c < P.size(); ++c) {
      Cell im = P.cells[c].relabeled(a.g);
      if (a.mirror) im = im.reversed();
      perm[c] = P.find(im);
      if (perm[c] < 0) throw Error(ErrorKind::ActionMismatch, a.str() + " does not preserve the complex");
    }
    perms.push_back(std::move(perm));
  }
  SimplicialComplex K = order_complex(P);
  for (int s = 0; s < subdivisions; ++s) {
    for (auto& p : perms) p = lift(K, p);
    K = barycentric_subdivide(K);
  }
  UnionFind uf(K.num_vertices());
  for (auto& p : perms)
    for (int v = 0; v < K.num_vertices(); ++v) uf.join(v, p[v]);

  QuotientComplex Q;
  Q.group_order = static_cast<int>(group.size());
  Q.subdivisions = subdivisions;
  Q.subdivided_vertices = K.num_vertices();
  std::vector<int> id(K.num_vertices(), -1);
  for (int v = 0; v < K.num_vertices(); ++v) {
    int r = uf.find(v);
    if (id[r] < 0) {
      id[r] = static_cast<int>(Q.complex.labels.size());
      Q.complex.labels.push_back(K.labels[r]);
    }
    id[v] = id[r];
  }
  Q.projection = id;
  Q.complex.simplices.resize(K.simplices.size());
  for (std::size_t k = 0; k < K.simplices.size(); ++k) {
    auto& out = Q.complex.simplices[k];
    for (auto& s : K.simplices[k]) {
      std::vector<int> img;
      for (int v : s) img.push_back(id[v]);
      std::sort(img.begin(), img.end());
      img.erase(std::unique(img.begin(), img.end()), img.end());
      if (img.size() != s.size()) throw Error(ErrorKind::ActionMismatch, "orbit map collapses a simplex");
      out.push_back(std::move(img));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return Q;
}

std::vector<AmbientElement> select_group(const LengthVector& l, const std::string& selector, bool fully_reduced) {
  AutGroup G = automorphism_group(l);
  int n = l.size();
  std::vector<DihedralElement> els;
  if (selector == "full") {
    els = G.elements;
  } else if (selector == "rotations") {
    for (auto& g : G.elements)
      if (!g.flip) els.push_back(g);
  } else if (selector == "trivial") {
    els = {DihedralElement::identity(n)};
  } else if (selector.rfind("reflection:", 0) == 0) {
    std::string rest = selector.substr(11);
    if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorKind::Input, "reflection selector needs a shift, e.g. reflection:2");
    auto f = DihedralElement::reflection(n, std::stoi(rest));
    if (!G.contains(f)) throw Error(ErrorKind::NotAnAutomorphism, f.str() + " does not preserve the lengths");
    els = {DihedralElement::identity(n), f};
  } else {
    throw Error(ErrorKind::Input, "unknown group selector '" + selector + "' (full|rotations|reflection:<k>|trivial)");
  }
  std::vector<AmbientElement> out;
  for (auto& g : els) {
    out.push_back({g, false});
    if (fully_reduced) out.push_back({g, true});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subgroups

std::vector<std::vector<DihedralElement>> subgroups(const std::vector<DihedralElement>& group) {
  std::set<std::vector<DihedralElement>> found;
  auto closure = [&](std::vector<DihedralElement> gens) {
    int n = group.front().n;
    std::set<DihedralElement> H{DihedralElement::identity(n)};
    std::vector<DihedralElement> frontier(H.begin(), H.end());
    while (!frontier.empty()) {
      std::vector<DihedralElement> next;
      for (auto& h : frontier)
        for (auto& g : gens) {
          auto x = g.compose(h);
          if (H.insert(x).second) next.push_back(x);
        }
      frontier = std::move(next);
    }
    return std::vector<DihedralElement>(H.begin(), H.end());
  };
  for (auto& a : group)
    for (auto& b : group) found.insert(closure({a, b}));
  return {found.begin(), found.end()};
}

std::string subgroup_name(const std::vector<DihedralElement>& H) {
  int rot = 0;
  for (auto& g : H)
    if (!g.flip) ++rot;
  bool dihedral = rot != static_cast<int>(H.size());
  std::string s = (dihedral ? "D" : "C") + std::to_string(rot) + "{";
  for (std::size_t i = 0; i < H.size(); ++i) s += (i ? "," : "") + H[i].str();
  return s + "}";
}

StabilizerCensus realized_stabilizers(const LengthVector& l, Space space) {
  FacePoset P = enumerate_cells(l, space);
  AutGroup G = automorphism_group(l);
  ActionTable T = action_on_cells(G, P);
  StabilizerCensus out;
  out.all = subgroups(G.elements);
  std::map<std::vector<DihedralElement>, int> hits;
  for (int c = 0; c < P.size(); ++c) ++hits[stabilizer(T, c).elements];
  for (auto& [H, count] : hits) {
    out.realized.push_back(H);
    out.realized_count.push_back(count);
  }
  return out;
}

}  // namespace linkage
