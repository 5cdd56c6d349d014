#ifndef GCELL_STAIRCASE_HPP
#define GCELL_STAIRCASE_HPP

#include <vector>

#include "gcell/partition.hpp"

namespace gcell {

/// Difference vector d_i = m_i - m_{i-1}, i = 1..t.
inline std::vector<int> diff_vector(const Partition& m) {
  std::vector<int> d;
  for (int i = 1; i <= m.t(); ++i) d.push_back(m.m(i) - m.m(i - 1));
  return d;
}

struct ExpPair {
  int x = 0;
  int y = 0;
  bool operator==(const ExpPair& o) const { return x == o.x && y == o.y; }
};

/// The t+1 generators (t-i, m_i) of E, i = 0..t, in decreasing x-degree.
inline std::vector<ExpPair> monomial_generators(const Partition& m) {
  std::vector<ExpPair> g;
  int t = m.t();
  for (int i = 0; i <= t; ++i) g.push_back({t - i, m.m(i)});
  return g;
}

/// Minimal generators of E: generator i is redundant iff i < t and
/// d_{i+1} = 0 (then it is a multiple of generator i+1).
inline std::vector<ExpPair> minimal_generators(const Partition& m) {
  auto d = diff_vector(m);
  std::vector<ExpPair> g;
  int t = m.t();
  for (int i = 0; i <= t; ++i) {
    if (i < t && d[static_cast<std::size_t>(i)] == 0) continue;
    g.push_back({t - i, m.m(i)});
  }
  return g;
}

/// Degree matrix u_{i,j} = m_j - m_{i-1} + i - j, 1 <= i <= t+1, 1 <= j <= t.
struct DegreeMatrix {
  int t = 0;
  std::vector<std::vector<int>> entries;  // (t+1) x t, 0-indexed storage

  int u(int i, int j) const {  // 1-based
    return entries.at(static_cast<std::size_t>(i) - 1).at(static_cast<std::size_t>(j) - 1);
  }
  bool operator==(const DegreeMatrix& o) const { return t == o.t && entries == o.entries; }
};

inline DegreeMatrix degree_matrix(const Partition& m) {
  int t = m.t();
  DegreeMatrix U;
  U.t = t;
  U.entries.assign(static_cast<std::size_t>(t) + 1, std::vector<int>(static_cast<std::size_t>(t), 0));
  for (int i = 1; i <= t + 1; ++i)
    for (int j = 1; j <= t; ++j)
      U.entries[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1] =
          m.m(j) - m.m(i - 1) + i - j;
  return U;
}

inline bool is_lex_segment(const Partition& m) {
  if (m.t() == 0) return false;
  for (int i = 1; i <= m.t(); ++i)
    if (m.m(i) <= m.m(i - 1)) return false;
  return true;
}

/// Condition m_j - j - 1 <= m_i - i for all j < i. When it holds the two
/// parameter shapes M(E) and N_{<d}(E) coincide.
inline bool satisfies_lex_gb_condition(const Partition& m) {
  for (int i = 2; i <= m.t(); ++i)
    for (int j = 1; j < i; ++j)
      if (m.m(j) - j - 1 > m.m(i) - i) return false;
  return true;
}

}  // namespace gcell

#endif
