#include <algorithm>
#include <numeric>

#include "linkage/complex.hpp"
#include "linkage/errors.hpp"

namespace linkage {

std::vector<long> SimplicialComplex::f_vector() const {
  std::vector<long> f;
  for (auto& s : simplices) f.push_back(static_cast<long>(s.size()));
  return f;
}

long SimplicialComplex::euler() const {
  long e = 0;
  for (std::size_t k = 0; k < simplices.size(); ++k)
    e += (k % 2 == 0 ? 1 : -1) * static_cast<long>(simplices[k].size());
  return e;
}

long SimplicialComplex::find(const std::vector<int>& s) const {
  if (s.empty() || s.size() > simplices.size()) return -1;
  auto& v = simplices[s.size() - 1];
  auto it = std::lower_bound(v.begin(), v.end(), s);
  return (it != v.end() && *it == s) ? it - v.begin() : -1;
}

SimplicialComplex SimplicialComplex::from_simplices(std::vector<std::string> labels,
                                                    std::vector<std::vector<int>> tops) {
  SimplicialComplex K;
  K.labels = std::move(labels);
  std::size_t d = 0;
  for (auto& s : tops) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    d = std::max(d, s.size());
  }
  if (d == 0 && !K.labels.empty()) d = 1;
  K.simplices.assign(d, {});
  for (auto& s : tops) {
    if (s.empty()) continue;
    int k = static_cast<int>(s.size());
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      std::vector<int> f;
      for (int i = 0; i < k; ++i)
        if (mask & (1u << i)) f.push_back(s[i]);
      K.simplices[f.size() - 1].push_back(std::move(f));
    }
  }
  for (int v = 0; v < K.num_vertices(); ++v)
    if (!K.simplices.empty()) K.simplices[0].push_back({v});
  for (auto& v : K.simplices) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  while (!K.simplices.empty() && K.simplices.back().empty()) K.simplices.pop_back();
  return K;
}

namespace {

// All chains of the poset restricted to `keep`, as sorted index lists.
SimplicialComplex chains(const FacePoset& P, const std::vector<int>& keep) {
  std::vector<int> local(P.size(), -1);
  std::vector<std::string> labels;
  for (int i : keep) {
    local[i] = static_cast<int>(labels.size());
    labels.push_back(P.cells[i].label());
  }
  SimplicialComplex K;
  K.labels = labels;
  std::vector<int> chain;
  auto dfs = [&](auto&& self, int top) -> void {
    chain.push_back(local[top]);
    std::vector<int> s = chain;
    std::sort(s.begin(), s.end());
    if (K.simplices.size() < s.size()) K.simplices.resize(s.size());
    K.simplices[s.size() - 1].push_back(std::move(s));
    for (int j : P.below[top])
      if (local[j] >= 0) self(self, j);
    chain.pop_back();
  };
  for (int i : keep) dfs(dfs, i);
  for (auto& v : K.simplices) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  return K;
}

}  // namespace

SimplicialComplex order_complex(const FacePoset& P) {
  std::vector<int> all(P.size());
  std::iota(all.begin(), all.end(), 0);
  return chains(P, all);
}

SimplicialComplex order_complex_below(const FacePoset& P, int top) { return chains(P, P.below[top]); }

SimplicialComplex barycentric_subdivide(const SimplicialComplex& K) {
  // new vertex per simplex, numbered dimension by dimension
  std::vector<long> offset(K.simplices.size() + 1, 0);
  for (std::size_t k = 0; k < K.simplices.size(); ++k) offset[k + 1] = offset[k] + K.simplices[k].size();
  std::vector<std::string> labels(offset.back());
  for (std::size_t k = 0; k < K.simplices.size(); ++k)
    for (std::size_t j = 0; j < K.simplices[k].size(); ++j)
      labels[offset[k] + j] = k == 0 ? K.labels[K.simplices[0][j][0]] : "s" + std::to_string(k) + "." + std::to_string(j);

  // maximal simplices
  std::vector<std::vector<bool>> maximal(K.simplices.size());
  for (std::size_t k = 0; k < K.simplices.size(); ++k) maximal[k].assign(K.simplices[k].size(), true);
  for (std::size_t k = 1; k < K.simplices.size(); ++k)
    for (auto& s : K.simplices[k])
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        std::vector<int> f;
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != drop) f.push_back(s[i]);
        maximal[k - 1][K.find(f)] = false;
      }

  std::vector<std::vector<int>> flags;
  for (std::size_t k = 0; k < K.simplices.size(); ++k)
    for (std::size_t j = 0; j < K.simplices[k].size(); ++j) {
      if (!maximal[k][j]) continue;
      std::vector<int> perm = K.simplices[k][j];
      do {
        std::vector<int> flag, prefix;
        for (int v : perm) {
          prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
          flag.push_back(static_cast<int>(offset[prefix.size() - 1] + K.find(prefix)));
        }
        flags.push_back(std::move(flag));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  return SimplicialComplex::from_simplices(std::move(labels), std::move(flags));
}

bool is_closed_pseudomanifold(const SimplicialComplex& K) {
  int d = K.dim();
  if (d < 1) return false;
  std::vector<int> count(K.simplices[d - 1].size(), 0);
  for (auto& s : K.simplices[d])
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      std::vector<int> f;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != drop) f.push_back(s[i]);
      ++count[K.find(f)];
    }
  for (int c : count)
    if (c != 2) return false;
  // a stray lower-dimensional maximal simplex would leave a vertex outside every top simplex
  std::vector<bool> seen(K.num_vertices(), false);
  for (auto& s : K.simplices[d])
    for (int v : s) seen[v] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

GraphInvariants graph_invariants(const SimplicialComplex& K) {
  if (K.dim() > 1)
    throw Error(ErrorKind::DimensionTooHigh, "graph invariants need a complex of dimension at most 1");
  int V = K.num_vertices();
  long E = K.dim() == 1 ? static_cast<long>(K.simplices[1].size()) : 0;
  std::vector<int> deg(V, 0), parent(V);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  if (E)
    for (auto& e : K.simplices[1]) {
      ++deg[e[0]];
      ++deg[e[1]];
      parent[root(e[0])] = root(e[1]);
    }
  GraphInvariants g;
  std::vector<bool> comp_has_branch(V, false);
  for (int v = 0; v < V; ++v) {
    if (root(v) == v) ++g.b0;
    if (deg[v] != 2) comp_has_branch[root(v)] = true;
  }
  g.b1 = E - V + g.b0;
  long half = 0;
  for (int v = 0; v < V; ++v) {
    if (deg[v] == 2) continue;
    g.degrees.push_back(deg[v]);
    if (deg[v] == 1) ++g.degree1;
    if (deg[v] >= 3) ++g.degree3plus;
    half += deg[v];
  }
  std::sort(g.degrees.begin(), g.degrees.end());
  g.arcs = static_cast<int>(half / 2);
  for (int v = 0; v < V; ++v)
    if (root(v) == v && !comp_has_branch[v]) ++g.arcs;
  return g;
}

}  // namespace linkage
