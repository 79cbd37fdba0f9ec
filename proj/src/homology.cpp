#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>

#include <gmpxx.h>

#include "linkage/complex.hpp"
#include "linkage/errors.hpp"

namespace linkage {

namespace {

using Entry = std::pair<int, long>;  // (column, value)
using Row = std::vector<Entry>;      // sorted by column

long checked_add(long a, long b) {
  long r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("boundary entry overflow");
  return r;
}

long checked_mul(long a, long b) {
  long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("boundary entry overflow");
  return r;
}

// row <- row + c * piv
Row axpy(const Row& row, long c, const Row& piv) {
  Row out;
  out.reserve(row.size() + piv.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < piv.size()) {
    if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || piv[j].first < row[i].first) {
      out.emplace_back(piv[j].first, checked_mul(c, piv[j].second));
      ++j;
    } else {
      long v = checked_add(row[i].second, checked_mul(c, piv[j].second));
      if (v) out.emplace_back(row[i].first, v);
      ++i, ++j;
    }
  }
  return out;
}

struct Rank {
  long rank = 0;
  std::vector<long> torsion;  // invariant factors > 1
};

// Smith form of a small dense residual block.
void dense_smith(std::vector<std::vector<mpz_class>> A, Rank& out) {
  std::size_t R = A.size(), C = R ? A[0].size() : 0;
  std::size_t t = 0;
  while (t < std::min(R, C)) {
    // smallest nonzero entry in the trailing block
    std::size_t pr = R, pc = C;
    for (std::size_t i = t; i < R; ++i)
      for (std::size_t j = t; j < C; ++j)
        if (A[i][j] != 0 && (pr == R || abs(A[i][j]) < abs(A[pr][pc]))) pr = i, pc = j;
    if (pr == R) break;
    std::swap(A[t], A[pr]);
    for (auto& row : A) std::swap(row[t], row[pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (A[i][t] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), A[i][t].get_mpz_t(), A[t][t].get_mpz_t());
        for (std::size_t j = t; j < C; ++j) A[i][j] -= q * A[t][j];
        if (A[i][t] != 0) {
          std::swap(A[t], A[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (A[t][j] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), A[t][j].get_mpz_t(), A[t][t].get_mpz_t());
        for (std::size_t i = t; i < R; ++i) A[i][j] -= q * A[i][t];
        if (A[t][j] != 0) {
          for (auto& row : A) std::swap(row[t], row[j]);
          clean = false;
        }
      }
      if (!clean) continue;
      // divisibility: fold any offending row into the pivot row
      for (std::size_t i = t + 1; i < R && clean; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (A[i][j] % A[t][t] != 0) {
            for (std::size_t k = t; k < C; ++k) A[t][k] += A[i][k];
            clean = false;
            break;
          }
    }
    mpz_class d = abs(A[t][t]);
    ++out.rank;
    if (d != 1) {
      if (!d.fits_slong_p()) throw std::overflow_error("torsion coefficient too large");
      out.torsion.push_back(d.get_si());
    }
    ++t;
  }
}

// Rank and invariant factors of an integer matrix given by rows.
Rank integer_rank(std::vector<Row> rows, int ncols) {
  Rank out;
  std::vector<std::vector<int>> col_rows(ncols);
  for (int r = 0; r < static_cast<int>(rows.size()); ++r)
    for (auto& [c, v] : rows[r]) col_rows[c].push_back(r);
  std::vector<bool> row_done(rows.size(), false), col_done(ncols, false);

  auto value_at = [&](const Row& row, int c) -> long {
    auto it = std::lower_bound(row.begin(), row.end(), Entry{c, std::numeric_limits<long>::min()});
    return (it != row.end() && it->first == c) ? it->second : 0;
  };

  bool progress = true;
  while (progress) {
    progress = false;
    std::vector<int> order;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
      if (!row_done[r] && !rows[r].empty()) order.push_back(r);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return rows[a].size() < rows[b].size(); });
    for (int r : order) {
      if (row_done[r] || rows[r].empty()) continue;
      // unit entry whose column is sparsest
      int pc = -1;
      std::size_t best = 0;
      for (auto& [c, v] : rows[r])
        if ((v == 1 || v == -1) && (pc < 0 || col_rows[c].size() < best)) pc = c, best = col_rows[c].size();
      if (pc < 0) continue;
      long p = value_at(rows[r], pc);
      Row piv = rows[r];
      std::vector<int> targets = col_rows[pc];
      for (int r2 : targets) {
        if (r2 == r || row_done[r2]) continue;
        long a = value_at(rows[r2], pc);
        if (!a) continue;
        Row old = std::move(rows[r2]);
        rows[r2] = axpy(old, -a * p, piv);
        // record new fill
        std::size_t i = 0;
        for (auto& [c, v] : rows[r2]) {
          while (i < old.size() && old[i].first < c) ++i;
          if (i == old.size() || old[i].first != c) col_rows[c].push_back(r2);
        }
      }
      row_done[r] = true;
      col_done[pc] = true;
      ++out.rank;
      // drop the pivot column from remaining rows' view
      for (int r2 : col_rows[pc]) {
        if (row_done[r2]) continue;
        auto& row = rows[r2];
        row.erase(std::remove_if(row.begin(), row.end(), [&](const Entry& e) { return e.first == pc; }), row.end());
      }
      col_rows[pc].clear();
      progress = true;
    }
  }

  // residual block
  std::vector<int> live_rows, live_cols;
  std::map<int, int> cidx;
  for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
    if (row_done[r] || rows[r].empty()) continue;
    live_rows.push_back(r);
    for (auto& [c, v] : rows[r])
      if (!cidx.count(c)) cidx.emplace(c, 0);
  }
  if (live_rows.empty()) return out;
  int k = 0;
  for (auto& [c, i] : cidx) i = k++;
  std::vector<std::vector<mpz_class>> A(live_rows.size(), std::vector<mpz_class>(k, 0));
  for (std::size_t i = 0; i < live_rows.size(); ++i)
    for (auto& [c, v] : rows[live_rows[i]]) A[i][cidx[c]] = v;
  dense_smith(std::move(A), out);
  std::sort(out.torsion.begin(), out.torsion.end());
  return out;
}

// GF(2) column reduction.
long mod2_rank(std::vector<std::vector<int>> cols) {
  std::map<int, int> low_owner;
  long rank = 0;
  for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
    auto& col = cols[j];
    while (!col.empty()) {
      auto it = low_owner.find(col.back());
      if (it == low_owner.end()) break;
      std::vector<int> sum;
      std::set_symmetric_difference(col.begin(), col.end(), cols[it->second].begin(), cols[it->second].end(),
                                    std::back_inserter(sum));
      col = std::move(sum);
    }
    if (!col.empty()) {
      low_owner.emplace(col.back(), j);
      ++rank;
    }
  }
  return rank;
}

// Boundary of k-simplices into (k-1)-simplices, as rows over k-simplex columns.
std::vector<Row> boundary_rows(const SimplicialComplex& K, int k) {
  std::vector<Row> rows(K.simplices[k - 1].size());
  for (int j = 0; j < static_cast<int>(K.simplices[k].size()); ++j) {
    auto& s = K.simplices[k][j];
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      std::vector<int> f;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != drop) f.push_back(s[i]);
      rows[K.find(f)].emplace_back(j, drop % 2 == 0 ? 1 : -1);
    }
  }
  return rows;  // columns appended in increasing j, so already sorted
}

std::vector<std::vector<int>> boundary_cols_mod2(const SimplicialComplex& K, int k) {
  std::vector<std::vector<int>> cols(K.simplices[k].size());
  for (int j = 0; j < static_cast<int>(K.simplices[k].size()); ++j) {
    auto& s = K.simplices[k][j];
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      std::vector<int> f;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != drop) f.push_back(s[i]);
      cols[j].push_back(static_cast<int>(K.find(f)));
    }
    std::sort(cols[j].begin(), cols[j].end());
  }
  return cols;
}

// Coherent orientation of a closed pseudomanifold by propagation across facets.
bool orientable_pseudomanifold(const SimplicialComplex& K) {
  int d = K.dim();
  auto& tops = K.simplices[d];
  // facet -> (top, sign of facet in its boundary)
  std::vector<std::vector<std::pair<int, int>>> inc(K.simplices[d - 1].size());
  for (int j = 0; j < static_cast<int>(tops.size()); ++j)
    for (std::size_t drop = 0; drop < tops[j].size(); ++drop) {
      std::vector<int> f;
      for (std::size_t i = 0; i < tops[j].size(); ++i)
        if (i != drop) f.push_back(tops[j][i]);
      inc[K.find(f)].emplace_back(j, drop % 2 == 0 ? 1 : -1);
    }
  std::vector<int> orient(tops.size(), 0);
  std::vector<std::vector<int>> facets_of(tops.size());
  for (int f = 0; f < static_cast<int>(inc.size()); ++f)
    for (auto& [t, s] : inc[f]) facets_of[t].push_back(f);
  for (int start = 0; start < static_cast<int>(tops.size()); ++start) {
    if (orient[start]) continue;
    orient[start] = 1;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      for (int f : facets_of[t]) {
        auto& pr = inc[f];
        int st = pr[0].first == t ? pr[0].second : pr[1].second;
        auto& other = pr[0].first == t ? pr[1] : pr[0];
        int want = -orient[t] * st * other.second;
        if (!orient[other.first]) {
          orient[other.first] = want;
          stack.push_back(other.first);
        } else if (orient[other.first] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

HomologyProfile homology(const SimplicialComplex& K, Coeffs coeffs) {
  HomologyProfile h;
  h.coeffs = coeffs;
  int d = K.dim();
  if (d < 0) return h;
  std::vector<long> rank(d + 2, 0);
  std::vector<std::vector<long>> tors(d + 2);
  for (int k = 1; k <= d; ++k) {
    if (coeffs == Coeffs::Integers) {
      Rank r = integer_rank(boundary_rows(K, k), static_cast<int>(K.simplices[k].size()));
      rank[k] = r.rank;
      tors[k] = std::move(r.torsion);
    } else {
      rank[k] = mod2_rank(boundary_cols_mod2(K, k));
    }
  }
  for (int k = 0; k <= d; ++k) {
    h.betti.push_back(static_cast<long>(K.simplices[k].size()) - rank[k] - rank[k + 1]);
    h.torsion.push_back(tors[k + 1]);
  }
  h.euler = K.euler();
  if (is_closed_pseudomanifold(K)) h.orientable = orientable_pseudomanifold(K);
  return h;
}

HomologyProfile homology(const FacePoset& P, Coeffs coeffs) { return homology(order_complex(P), coeffs); }

}  // namespace linkage
