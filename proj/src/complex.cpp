#include "linkage/complex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "linkage/errors.hpp"

namespace linkage {

const char* to_string(Space s) { return s == Space::Reduced ? "reduced" : "fully-reduced"; }

Space parse_space(std::string_view s) {
  if (s == "reduced") return Space::Reduced;
  if (s == "fully-reduced" || s == "fully_reduced" || s == "full") return Space::FullyReduced;
  throw Error(ErrorKind::Input, "unknown space '" + std::string(s) + "' (reduced|fully-reduced)");
}

// ---------------------------------------------------------------------------
// Cell

Cell Cell::partition(std::vector<std::vector<int>> parts) {
  Cell c;
  for (auto& p : parts) std::sort(p.begin(), p.end());
  auto first = std::find_if(parts.begin(), parts.end(),
                            [](const std::vector<int>& p) { return !p.empty() && p.front() == 1; });
  if (first != parts.end()) std::rotate(parts.begin(), first, parts.end());
  c.parts = std::move(parts);
  return c;
}

Cell Cell::collinear_vertex(std::vector<int> side, int n) {
  std::sort(side.begin(), side.end());
  std::vector<int> other;
  for (int i = 1; i <= n; ++i)
    if (!std::binary_search(side.begin(), side.end(), i)) other.push_back(i);
  if (side.empty() || side.front() != 1) std::swap(side, other);
  Cell c;
  c.collinear = true;
  c.parts = {side, other};
  return c;
}

namespace {

std::vector<int> parse_members(std::string_view s, int n, std::string_view whole) {
  std::vector<int> out;
  std::size_t start = 0;
  while (true) {
    auto comma = s.find(',', start);
    auto tok = s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (tok.empty()) throw Error(ErrorKind::Input, "empty member in cell label '" + std::string(whole) + "'");
    int v = 0;
    for (char ch : tok) {
      if (ch < '0' || ch > '9') throw Error(ErrorKind::Input, "bad cell label '" + std::string(whole) + "'");
      v = v * 10 + (ch - '0');
      if (v > n) break;
    }
    if (v < 1 || v > n) throw Error(ErrorKind::Input, "edge index out of range in '" + std::string(whole) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

Cell Cell::parse(std::string_view label, int n) {
  std::vector<int> seen(n + 1, 0);
  if (label.substr(0, 4) == "lin:") {
    auto side = parse_members(label.substr(4), n, label);
    for (int v : side)
      if (seen[v]++) throw Error(ErrorKind::Input, "repeated edge in '" + std::string(label) + "'");
    if (static_cast<int>(side.size()) >= n)
      throw Error(ErrorKind::Input, "collinear side must be a proper subset");
    return collinear_vertex(side, n);
  }
  std::vector<std::vector<int>> parts;
  std::size_t start = 0;
  while (true) {
    auto bar = label.find('|', start);
    parts.push_back(parse_members(
        label.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start), n, label));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  for (auto& p : parts)
    for (int v : p)
      if (seen[v]++) throw Error(ErrorKind::Input, "repeated edge in '" + std::string(label) + "'");
  for (int i = 1; i <= n; ++i)
    if (!seen[i]) throw Error(ErrorKind::Input, "cell label '" + std::string(label) + "' misses edge " + std::to_string(i));
  if (parts.size() < 3) throw Error(ErrorKind::Input, "a cell needs at least 3 parts");
  return partition(std::move(parts));
}

std::string Cell::label() const {
  if (collinear) return "lin:" + join(parts[0]);
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += '|';
    s += join(parts[i]);
  }
  return s;
}

Cell Cell::reversed() const {
  if (collinear) return *this;
  Cell c = *this;
  std::reverse(c.parts.begin() + 1, c.parts.end());
  return c;
}

Cell Cell::relabeled(const DihedralElement& g) const {
  std::vector<std::vector<int>> img = parts;
  for (auto& p : img)
    for (int& v : p) v = g.edge(v);
  if (collinear) return collinear_vertex(img[0], g.n);
  return partition(std::move(img));
}

int Cell::part_of(int edge) const {
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (std::find(parts[i].begin(), parts[i].end(), edge) != parts[i].end()) return static_cast<int>(i);
  return -1;
}

// ---------------------------------------------------------------------------
// Exact sums. Lengths are scaled to integers once per call site.

namespace {

struct IntLengths {
  std::vector<mpz_class> v;  // index 1..n
  mpz_class total;
};

IntLengths scale(const LengthVector& l) {
  mpz_class den = 1;
  for (auto& q : l.values()) den = lcm(den, mpz_class(q.get_den()));
  IntLengths out;
  out.v.push_back(0);
  for (auto& q : l.values()) {
    mpz_class x = q.get_num() * (den / q.get_den());
    out.v.push_back(x);
    out.total += x;
  }
  return out;
}

mpz_class sum_of(const IntLengths& L, const std::vector<int>& s) {
  mpz_class t = 0;
  for (int v : s) t += L.v[v];
  return t;
}

}  // namespace

bool admissible(const LengthVector& l, const Cell& c) {
  IntLengths L = scale(l);
  if (c.collinear) return 2 * sum_of(L, c.parts[0]) == L.total;
  if (c.parts.size() < 3) return false;
  for (auto& p : c.parts)
    if (2 * sum_of(L, p) >= L.total) return false;
  return true;
}

bool boundary_relation(const LengthVector& l, const Cell& p, const Cell& q) {
  if (p.collinear) return false;
  int n = l.size(), m = static_cast<int>(p.parts.size());
  std::vector<int> where(n + 1, -1);
  for (int t = 0; t < m; ++t)
    for (int v : p.parts[t]) where[v] = t;

  if (q.collinear) {
    if (!admissible(l, q)) return false;
    std::vector<int> in(m, -1);
    for (int v : q.parts[0]) {
      int t = where[v];
      in[t] = 1;
    }
    for (int v : q.parts[1]) {
      int t = where[v];
      if (in[t] == 1) return false;  // a part straddles S and its complement
      in[t] = 0;
    }
    int changes = 0;
    for (int t = 0; t < m; ++t)
      if (in[t] != in[(t + 1) % m]) ++changes;
    return changes == 2;
  }

  int r = static_cast<int>(q.parts.size());
  if (r >= m || !admissible(l, q)) return false;
  // q-part of each p-part; every p-part must sit inside one q-part
  std::vector<int> qof(m, -1);
  for (int j = 0; j < r; ++j)
    for (int v : q.parts[j]) {
      int t = where[v];
      if (qof[t] == -1)
        qof[t] = j;
      else if (qof[t] != j)
        return false;
    }
  // start at a run boundary and compress runs
  int s0 = -1;
  for (int t = 0; t < m; ++t)
    if (qof[t] != qof[(t + m - 1) % m]) {
      s0 = t;
      break;
    }
  if (s0 < 0) return false;
  std::vector<int> runs;
  for (int k = 0; k < m; ++k) {
    int t = (s0 + k) % m;
    if (runs.empty() || runs.back() != qof[t]) runs.push_back(qof[t]);
  }
  if (static_cast<int>(runs.size()) != r) return false;
  // runs must be a rotation of 0,1,...,r-1
  for (int k = 0; k < r; ++k)
    if (runs[k] != (runs[0] + k) % r) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Poset

int FacePoset::dim() const {
  int d = -1;
  for (auto& c : cells) d = std::max(d, c.dim());
  return d;
}

int FacePoset::find(const Cell& c) const {
  auto it = index.find(representative(c).label());
  return it == index.end() ? -1 : it->second;
}

std::vector<int> FacePoset::f_vector() const {
  std::vector<int> f(std::max(dim(), 0) + 1, 0);
  for (auto& c : cells) ++f[c.dim()];
  return f;
}

long FacePoset::euler() const {
  long e = 0;
  for (auto& c : cells) e += (c.dim() % 2 == 0) ? 1 : -1;
  return e;
}

Cell FacePoset::representative(const Cell& c) const {
  return space == Space::Reduced ? c : dihedral_representative(c);
}

bool FacePoset::leq(int a, int b) const {
  return a == b || std::binary_search(below[b].begin(), below[b].end(), a);
}

Cell dihedral_representative(const Cell& c, bool* tie_at_pi) {
  if (tie_at_pi) *tie_at_pi = false;
  if (c.collinear) return c;
  int m = static_cast<int>(c.parts.size());
  int n = 0;
  for (auto& p : c.parts) n += static_cast<int>(p.size());
  // Parts sit at the cyclotomic points 2*pi*t/m. The first label not at angle 0
  // decides: keep the orientation that puts it in the open upper half-plane.
  for (int x = 2; x <= n; ++x) {
    int t = c.part_of(x);
    if (t == 0) continue;
    if (2 * t == m) {
      if (tie_at_pi) *tie_at_pi = true;
      continue;
    }
    return 2 * t < m ? c : c.reversed();
  }
  return c;
}

namespace {

bool cell_less(const Cell& a, const Cell& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  if (a.collinear != b.collinear) return !a.collinear;
  return a.parts < b.parts;
}

void finish_poset(FacePoset& P) {
  P.index.clear();
  for (int i = 0; i < P.size(); ++i) P.index.emplace(P.cells[i].label(), i);
  P.covers.assign(P.size(), {});
  for (int i = 0; i < P.size(); ++i) {
    std::sort(P.below[i].begin(), P.below[i].end());
    P.below[i].erase(std::unique(P.below[i].begin(), P.below[i].end()), P.below[i].end());
    for (int j : P.below[i])
      if (P.cells[j].dim() == P.cells[i].dim() - 1) P.covers[i].push_back(j);
  }
}

}  // namespace

FacePoset enumerate_cells(const LengthVector& l, Space space) {
  const int n = l.size();
  IntLengths L = scale(l);
  for (int i = 1; i <= n; ++i)
    if (2 * L.v[i] > L.total)
      throw Error(ErrorKind::EmptySpace, "edge " + std::to_string(i) + " is longer than the rest combined");

  FacePoset P(l);
  P.space = Space::Reduced;

  // set partitions with admissible blocks, element 1 always in block 0
  std::vector<std::vector<int>> blocks;
  std::vector<mpz_class> sums;
  std::vector<std::vector<std::vector<int>>> partitions;
  std::function<void(int)> grow = [&](int v) {
    if (v > n) {
      if (blocks.size() >= 3) partitions.push_back(blocks);
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (2 * (sums[b] + L.v[v]) >= L.total) continue;
      blocks[b].push_back(v);
      sums[b] += L.v[v];
      grow(v + 1);
      sums[b] -= L.v[v];
      blocks[b].pop_back();
    }
    if (2 * L.v[v] < L.total) {
      blocks.push_back({v});
      sums.push_back(L.v[v]);
      grow(v + 1);
      blocks.pop_back();
      sums.pop_back();
    }
  };
  grow(1);

  for (auto& part : partitions) {
    std::vector<int> order(part.size() - 1);
    std::iota(order.begin(), order.end(), 1);
    do {
      std::vector<std::vector<int>> parts{part[0]};
      for (int t : order) parts.push_back(part[t]);
      P.cells.push_back(Cell::partition(std::move(parts)));
    } while (std::next_permutation(order.begin(), order.end()));
  }

  // balanced subsets containing edge 1
  for (long mask = 0; mask < (1L << (n - 1)); ++mask) {
    std::vector<int> side{1};
    mpz_class s = L.v[1];
    for (int i = 2; i <= n; ++i)
      if (mask & (1L << (i - 2))) {
        side.push_back(i);
        s += L.v[i];
      }
    if (2 * s == L.total) P.cells.push_back(Cell::collinear_vertex(side, n));
  }

  if (P.cells.empty()) throw Error(ErrorKind::EmptySpace, "no admissible cells");
  std::sort(P.cells.begin(), P.cells.end(), cell_less);
  P.index.clear();
  for (int i = 0; i < P.size(); ++i) P.index.emplace(P.cells[i].label(), i);

  // faces: coarsen by merging cyclic runs of parts, or collapse a balanced run
  P.below.assign(P.size(), {});
  for (int i = 0; i < P.size(); ++i) {
    const Cell& p = P.cells[i];
    if (p.collinear) continue;
    int m = static_cast<int>(p.parts.size());
    std::vector<mpz_class> ps(m);
    for (int t = 0; t < m; ++t) ps[t] = sum_of(L, p.parts[t]);
    for (long cuts = 0; cuts < (1L << m); ++cuts) {
      int k = __builtin_popcountl(cuts);
      if (k < 3 || k == m) continue;
      // cut t sits after part t
      int first = 0;
      while (!(cuts & (1L << first))) ++first;
      std::vector<std::vector<int>> arcs;
      std::vector<int> cur;
      mpz_class cs = 0;
      bool ok = true;
      for (int s = 1; s <= m && ok; ++s) {
        int t = (first + s) % m;
        cur.insert(cur.end(), p.parts[t].begin(), p.parts[t].end());
        cs += ps[t];
        if (cuts & (1L << t)) {
          if (2 * cs >= L.total) ok = false;
          arcs.push_back(cur);
          cur.clear();
          cs = 0;
        }
      }
      if (!ok) continue;
      auto it = P.index.find(Cell::partition(std::move(arcs)).label());
      if (it != P.index.end()) P.below[i].push_back(it->second);
    }
    for (int a = 0; a < m; ++a) {
      std::vector<int> run;
      mpz_class rs = 0;
      for (int len = 1; len < m; ++len) {
        int t = (a + len - 1) % m;
        run.insert(run.end(), p.parts[t].begin(), p.parts[t].end());
        rs += ps[t];
        if (2 * rs == L.total) {
          auto it = P.index.find(Cell::collinear_vertex(run, n).label());
          if (it != P.index.end()) P.below[i].push_back(it->second);
        }
      }
    }
  }
  finish_poset(P);
  P.branch.assign(P.size(), false);
  P.tie_at_pi.assign(P.size(), false);

  if (P.dim() == 0) {
    // the two mirror images of a triangle are one point once reflections are divided out
    int points = space == Space::Reduced ? P.size() : dihedral_reduce(P).size();
    throw Error(ErrorKind::RigidPoint, "configuration space is " + std::to_string(points) + " isolated point(s)");
  }
  return space == Space::Reduced ? P : dihedral_reduce(P);
}

FacePoset dihedral_reduce(const FacePoset& R) {
  FacePoset F(R.lengths);
  F.space = Space::FullyReduced;
  std::vector<Cell> reps(R.size());
  std::vector<bool> ties(R.size());
  for (int i = 0; i < R.size(); ++i) {
    bool t = false;
    reps[i] = dihedral_representative(R.cells[i], &t);
    ties[i] = t;
  }
  F.cells = reps;
  std::sort(F.cells.begin(), F.cells.end(), cell_less);
  F.cells.erase(std::unique(F.cells.begin(), F.cells.end()), F.cells.end());
  for (int i = 0; i < F.size(); ++i) F.index.emplace(F.cells[i].label(), i);
  F.below.assign(F.size(), {});
  F.branch.assign(F.size(), false);
  F.tie_at_pi.assign(F.size(), false);
  for (int i = 0; i < R.size(); ++i) {
    int ci = F.index.at(reps[i].label());
    if (ties[i]) F.tie_at_pi[ci] = true;
    if (R.cells[i] == R.cells[i].reversed()) F.branch[ci] = true;
    for (int j : R.below[i]) F.below[ci].push_back(F.index.at(reps[j].label()));
  }
  finish_poset(F);
  return F;
}

}  // namespace linkage
