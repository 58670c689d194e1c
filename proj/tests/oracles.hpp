#pragma once

// Slow, independent reference implementations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bgamma/matroid.hpp"
#include "bgamma/multigraph.hpp"

namespace oracle {

using Dense = std::vector<std::vector<int>>;

// Gaussian elimination on a dense 0/1 matrix.
inline std::size_t rank(Dense a) {
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i != r && a[i][c]) {
        for (std::size_t j = 0; j < cols; ++j) a[i][j] ^= a[r][j];
      }
    }
    ++r;
  }
  return r;
}

inline Dense dense(const bgamma::Gf2Matrix& m) {
  Dense d(m.rows(), std::vector<int>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = m.get(i, j) ? 1 : 0;
  }
  return d;
}

inline Dense random_dense(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  Dense d(rows, std::vector<int>(cols));
  for (auto& row : d) {
    for (auto& x : row) x = static_cast<int>(rng() & 1u);
  }
  return d;
}

inline bgamma::Gf2Matrix to_matrix(const Dense& d, std::size_t cols) {
  bgamma::Gf2Matrix m(d.size(), cols);
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, d[i][j] != 0);
  }
  return m;
}

// Rank of a label set computed from the dense columns of the representation.
inline std::size_t dense_rank_of(const bgamma::BinaryMatroid& m, const bgamma::LabelSet& s) {
  const auto d = dense(m.matrix());
  Dense sub(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (const auto& l : s) sub[i].push_back(d[i][m.index_of(l)]);
  }
  return rank(sub);
}

// Rank in m \ x / y from m's rank function: r(S u Y) - r(Y).
inline std::size_t minor_rank(const bgamma::BinaryMatroid& m, const bgamma::LabelSet& s, const bgamma::LabelSet& y) {
  bgamma::LabelSet sy = s;
  sy.insert(y.begin(), y.end());
  return dense_rank_of(m, sy) - dense_rank_of(m, y);
}

inline std::vector<bgamma::LabelSet> all_subsets(const std::vector<bgamma::Label>& labels) {
  std::vector<bgamma::LabelSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << labels.size()); ++mask) {
    bgamma::LabelSet s;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if ((mask >> i) & 1u) s.insert(labels[i]);
    }
    out.push_back(s);
  }
  return out;
}

inline bgamma::BinaryMatroid random_matroid(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::vector<bgamma::Label> labels;
  for (std::size_t j = 0; j < cols; ++j) labels.push_back("e" + std::to_string(j));
  return bgamma::BinaryMatroid(to_matrix(random_dense(rng, rows, cols), cols), labels);
}

// Unlabeled multigraph as a sorted list of (u, v) pairs.
using EdgeList = std::vector<std::pair<int, int>>;

// Minimum edge list over all vertex permutations.
inline EdgeList brute_canonical(int n, const EdgeList& edges) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  EdgeList best;
  bool first = true;
  do {
    EdgeList e;
    for (auto [u, v] : edges) {
      int a = perm[u], b = perm[v];
      e.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(e.begin(), e.end());
    if (first || e < best) {
      best = e;
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline std::string key(int n, const EdgeList& e) {
  std::string s = std::to_string(n) + ":";
  for (auto [u, v] : e) s += std::to_string(u) + "-" + std::to_string(v) + ",";
  return s;
}

inline bool connected_without_isolated(int n, const EdgeList& e, bool need_connected) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> deg(n, 0);
  for (auto [u, v] : e) {
    ++deg[u];
    ++deg[v];
    parent[find(u)] = find(v);
  }
  for (int v = 0; v < n; ++v) {
    if (deg[v] == 0) return false;
  }
  if (!need_connected) return true;
  for (int v = 0; v < n; ++v) {
    if (find(v) != find(0)) return false;
  }
  return true;
}

// Every multigraph with exactly k edges and no isolated vertex (connected
// when asked), as brute canonical keys, by generating all edge multisets.
inline std::set<std::string> naive_census(int k, bool connected) {
  std::set<std::string> out;
  for (int n = 1; n <= 2 * k; ++n) {
    if (connected && n > k + 1) break;
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u) {
      for (int v = u; v < n; ++v) slots.emplace_back(u, v);
    }
    std::vector<std::size_t> pick(k, 0);
    while (true) {
      EdgeList e;
      for (auto p : pick) e.push_back(slots[p]);
      if (connected_without_isolated(n, e, connected)) out.insert(key(n, brute_canonical(n, e)));
      int i = k - 1;
      while (i >= 0 && pick[i] == slots.size() - 1) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[i];
    }
  }
  return out;
}

inline std::string brute_key(const bgamma::Multigraph& g) {
  EdgeList e;
  for (const auto& ed : g.edges()) e.emplace_back(static_cast<int>(ed.u), static_cast<int>(ed.v));
  const int n = static_cast<int>(g.vertex_count());
  return key(n, brute_canonical(n, e));
}

// Series-parallel reduction: a multigraph has no K4 minor iff deleting
// loops, deleting vertices of degree <= 1, merging parallel edges and
// suppressing degree-2 vertices leaves no edges.
inline bool k4_minor_free(const bgamma::Multigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
  for (const auto& e : g.edges()) {
    if (e.u == e.v) continue;
    ++mult[e.u][e.v];
    ++mult[e.v][e.u];
  }
  std::vector<bool> alive(n, true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        if (mult[u][v] > 1) {
          mult[u][v] = 1;
          changed = true;
        }
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      std::vector<std::size_t> nbrs;
      for (std::size_t u = 0; u < n; ++u) {
        if (mult[v][u]) nbrs.push_back(u);
      }
      if (nbrs.size() <= 1) {
        for (auto u : nbrs) mult[u][v] = mult[v][u] = 0;
        alive[v] = false;
        changed = true;
      } else if (nbrs.size() == 2) {
        const auto a = nbrs[0], b = nbrs[1];
        mult[a][v] = mult[v][a] = mult[b][v] = mult[v][b] = 0;
        ++mult[a][b];
        ++mult[b][a];
        alive[v] = false;
        changed = true;
      }
    }
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (mult[u][v]) return false;
    }
  }
  return true;
}

}  // namespace oracle
