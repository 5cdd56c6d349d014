#ifndef GCELL_SYMBOLIC_HPP
#define GCELL_SYMBOLIC_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "gcell/hbmatrix.hpp"

namespace gcell {

namespace detail {

/// Determinant of the square submatrix formed by columns col..t-1 (0-based)
/// and the rows in `mask`, expanding along the leftmost column. Memoized on
/// the row mask; the column index is determined by its popcount.
inline ParamBivarPoly det_masked(const PBMatrix& M, int col, std::uint64_t mask,
                                 std::unordered_map<std::uint64_t, ParamBivarPoly>& memo) {
  int cols = static_cast<int>(M[0].size());
  if (col == cols) return ParamBivarPoly::term(Mono{0, 0}, ParamPoly(Rational(1)));
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  ParamBivarPoly acc;
  int pos = 0;  // index of the row within the ordered surviving rows
  for (int r = 0; r < static_cast<int>(M.size()); ++r) {
    if (!(mask & (1ULL << r))) continue;
    const ParamBivarPoly& e = M[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
    if (!e.is_zero()) {
      ParamBivarPoly sub = det_masked(M, col + 1, mask & ~(1ULL << r), memo);
      ParamBivarPoly prod = e * sub;
      if (pos % 2 == 0)
        acc += prod;
      else
        acc -= prod;
    }
    ++pos;
  }
  memo.emplace(mask, acc);
  return acc;
}

}  // namespace detail

/// Signed maximal minors of a (t+1) x t matrix:
/// g_i = (-1)^{t-i} det(M with row i+1 deleted), i = 0..t. With N = 0 this
/// yields exactly the monomial generators x^{t-i} y^{m_i}.
inline std::vector<ParamBivarPoly> maximal_minors(const PBMatrix& M) {
  int rows = static_cast<int>(M.size());
  int t = rows - 1;
  if (t < 1 || static_cast<int>(M[0].size()) != t)
    throw std::invalid_argument("maximal_minors: matrix must be (t+1) x t");
  if (rows > 62) throw std::invalid_argument("maximal_minors: matrix too large");
  std::unordered_map<std::uint64_t, ParamBivarPoly> memo;
  std::uint64_t all = (1ULL << rows) - 1;
  std::vector<ParamBivarPoly> gens;
  for (int i = 0; i <= t; ++i) {
    ParamBivarPoly d = detail::det_masked(M, 0, all & ~(1ULL << i), memo);
    if ((t - i) % 2 != 0) d = -d;
    gens.push_back(std::move(d));
  }
  return gens;
}

/// Constant part of H + N: the degree-0 parameter of each entry whose
/// window admits one, plus the unit from H at diagonal positions with
/// d_i = 0. For lex-segment staircases no units occur and this is the
/// paper's matrix of constant terms.
struct ConstantMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<ParamPoly>> entries;  // 0-indexed

  const ParamPoly& at(int i, int j) const {  // 1-based
    return entries.at(static_cast<std::size_t>(i) - 1).at(static_cast<std::size_t>(j) - 1);
  }
};

inline ConstantMatrix constant_term_matrix(const Partition& m, const ParamShape& shape) {
  int t = m.t();
  auto d = diff_vector(m);
  ParamIndex idx = param_index(shape);
  ConstantMatrix N;
  N.rows = t + 1;
  N.cols = t;
  N.entries.assign(static_cast<std::size_t>(t) + 1, std::vector<ParamPoly>(static_cast<std::size_t>(t)));
  for (int i = 1; i <= t; ++i)
    if (d[static_cast<std::size_t>(i) - 1] == 0)
      N.entries[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(i) - 1] =
          ParamPoly(Rational(1));
  for (int k = 1; k <= idx.dim(); ++k) {
    const ParamRef& r = idx.of(k);
    if (r.deg == 0)
      N.entries[static_cast<std::size_t>(r.i) - 1][static_cast<std::size_t>(r.j) - 1] =
          ParamPoly::param(k);
  }
  return N;
}

namespace detail {

inline ParamPoly det_small(const std::vector<std::vector<const ParamPoly*>>& M, std::uint64_t rowmask,
                           int col) {
  int n = static_cast<int>(M[0].size());
  if (col == n) return ParamPoly(Rational(1));
  ParamPoly acc;
  int pos = 0;
  for (int r = 0; r < static_cast<int>(M.size()); ++r) {
    if (!(rowmask & (1ULL << r))) continue;
    const ParamPoly& e = *M[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
    if (!e.is_zero()) {
      ParamPoly sub = det_small(M, rowmask & ~(1ULL << r), col + 1);
      ParamPoly prod = e * sub;
      if (pos % 2 == 0)
        acc += prod;
      else
        acc -= prod;
    }
    ++pos;
  }
  return acc;
}

inline void combinations(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> c(static_cast<std::size_t>(k));
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == k) {
      fn(c);
      return;
    }
    for (int v = start; v < n; ++v) {
      c[static_cast<std::size_t>(depth)] = v;
      self(self, v + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
}

}  // namespace detail

/// Generators of the determinantal ideal I_k(Nbar): all nonzero k x k
/// minors, exact duplicates dropped, in lexicographic (rows, cols) order.
/// I_0 = (1) by convention.
inline std::vector<ParamPoly> minor_ideal(const ConstantMatrix& Nbar, int k) {
  if (k < 0 || k > Nbar.cols) throw std::out_of_range("minor_ideal: k out of range");
  if (k == 0) return {ParamPoly(Rational(1))};
  std::vector<ParamPoly> gens;
  detail::combinations(Nbar.rows, k, [&](const std::vector<int>& rows) {
    detail::combinations(Nbar.cols, k, [&](const std::vector<int>& cols) {
      std::vector<std::vector<const ParamPoly*>> sub(rows.size(),
                                                     std::vector<const ParamPoly*>(cols.size()));
      for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = 0; b < cols.size(); ++b)
          sub[a][b] = &Nbar.entries[static_cast<std::size_t>(rows[a])][static_cast<std::size_t>(cols[b])];
      ParamPoly d = detail::det_small(sub, (1ULL << rows.size()) - 1, 0);
      if (!d.is_zero() && std::find(gens.begin(), gens.end(), d) == gens.end())
        gens.push_back(std::move(d));
    });
  });
  return gens;
}

/// One Betti stratum V_d = V(closed) \ V(removed).
struct BettiStratum {
  int d = 0;
  std::vector<ParamPoly> closed;   // generators of I_{t+2-d}(Nbar)
  std::vector<ParamPoly> removed;  // generators of I_{t+1-d}(Nbar)
};

struct BettiStrata {
  Partition m;
  bool conjectural = false;  // theorem scope is the lex-GB-condition class
  std::vector<BettiStratum> strata;  // d = max_jump(h)+1 .. t+1
};

inline BettiStrata betti_strata(const Partition& m) {
  int t = m.t();
  HilbertFunction h = hilbert_function_of_staircase(m);
  int delta = max_jump(h);
  ParamShape shape = param_shape(m, ShapeKind::full);
  ConstantMatrix Nbar = constant_term_matrix(m, shape);
  BettiStrata out;
  out.m = m;
  out.conjectural = !satisfies_lex_gb_condition(m);
  for (int d = delta + 1; d <= t + 1; ++d) {
    BettiStratum s;
    s.d = d;
    s.closed = minor_ideal(Nbar, t + 2 - d);  // d >= 2, so t + 2 - d <= t
    s.removed = minor_ideal(Nbar, t + 1 - d);
    out.strata.push_back(std::move(s));
  }
  return out;
}

/// Project a parameter point onto the homogeneous sub-cell: parameters in
/// the mask keep their value, all others become zero. Idempotent.
template <class K>
std::vector<K> initial_projection(const Partition& m, const ParamShape& shape,
                                  const std::vector<K>& assignment) {
  ParamIndex idx = param_index(shape);
  if (static_cast<int>(assignment.size()) != idx.dim())
    throw std::invalid_argument("initial_projection: assignment does not cover all parameters");
  std::vector<int> mask = homogeneous_mask(m, shape);
  std::vector<K> out;
  out.reserve(assignment.size());
  for (std::size_t k = 0; k < assignment.size(); ++k) {
    bool keep = std::find(mask.begin(), mask.end(), static_cast<int>(k) + 1) != mask.end();
    out.push_back(keep ? assignment[k] : assignment[k] - assignment[k]);
  }
  return out;
}

template <class K>
BivarPoly<K> specialize(const ParamBivarPoly& f, const std::vector<K>& assignment, const K& one) {
  BivarPoly<K> out;
  for (const auto& [mono, coeff] : f.terms()) out.add_term(mono, coeff.evaluate(assignment, one));
  return out;
}

template <class K>
std::vector<std::vector<BivarPoly<K>>> specialize(const PBMatrix& M, const std::vector<K>& assignment,
                                                  const K& one) {
  std::vector<std::vector<BivarPoly<K>>> out(M.size());
  for (std::size_t i = 0; i < M.size(); ++i)
    for (const auto& e : M[i]) out[i].push_back(specialize(e, assignment, one));
  return out;
}

template <class K>
std::vector<BivarPoly<K>> specialize(const std::vector<ParamBivarPoly>& polys,
                                     const std::vector<K>& assignment, const K& one) {
  std::vector<BivarPoly<K>> out;
  for (const auto& f : polys) out.push_back(specialize(f, assignment, one));
  return out;
}

template <class K>
int matrix_rank(std::vector<std::vector<K>> A, const K& one) {
  K zero = one - one;
  int rows = static_cast<int>(A.size());
  int cols = rows == 0 ? 0 : static_cast<int>(A[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (!(A[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] == zero)) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(A[static_cast<std::size_t>(pivot)], A[static_cast<std::size_t>(rank)]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const K& v = A[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (v == zero) continue;
      K factor = v / A[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)];
      for (int cc = c; cc < cols; ++cc)
        A[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] =
            A[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] -
            factor * A[static_cast<std::size_t>(rank)][static_cast<std::size_t>(cc)];
    }
    ++rank;
  }
  return rank;
}

/// mu(J) = t + 1 - rank of the constant part of H + N at the given point.
template <class K>
int mu_of_point(const ConstantMatrix& Nbar, const std::vector<K>& assignment, const K& one) {
  std::vector<std::vector<K>> A(static_cast<std::size_t>(Nbar.rows),
                                std::vector<K>(static_cast<std::size_t>(Nbar.cols), one - one));
  for (int i = 0; i < Nbar.rows; ++i)
    for (int j = 0; j < Nbar.cols; ++j) {
      const ParamPoly& e = Nbar.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (!e.is_zero()) A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          e.evaluate(assignment, one);
    }
  int rank = matrix_rank(std::move(A), one);
  return Nbar.cols + 1 - rank;
}

/// Rank of Nbar with every parameter set to zero: the structural units only.
inline int min_rank(const ConstantMatrix& Nbar) {
  int count = 0;
  for (int i = 0; i < Nbar.rows && i < Nbar.cols; ++i) {
    const ParamPoly& e = Nbar.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    if (!e.is_zero() && e.single_param() == 0) ++count;
  }
  return count;
}

/// Generic rank of Nbar: maximum bipartite matching on the support. Valid
/// because the parameter entries are independent indeterminates and the
/// unit entries sit on the diagonal, so distinct matchings contribute
/// distinct monomials to the minors.
inline int max_rank(const ConstantMatrix& Nbar) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(Nbar.rows));
  for (int i = 0; i < Nbar.rows; ++i)
    for (int j = 0; j < Nbar.cols; ++j)
      if (!Nbar.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].is_zero())
        adj[static_cast<std::size_t>(i)].push_back(j);
  std::vector<int> match_col(static_cast<std::size_t>(Nbar.cols), -1);
  std::vector<char> seen;
  auto augment = [&](auto&& self, int r) -> bool {
    for (int j : adj[static_cast<std::size_t>(r)]) {
      if (seen[static_cast<std::size_t>(j)]) continue;
      seen[static_cast<std::size_t>(j)] = 1;
      if (match_col[static_cast<std::size_t>(j)] < 0 ||
          self(self, match_col[static_cast<std::size_t>(j)])) {
        match_col[static_cast<std::size_t>(j)] = r;
        return true;
      }
    }
    return false;
  };
  int matched = 0;
  for (int r = 0; r < Nbar.rows; ++r) {
    seen.assign(static_cast<std::size_t>(Nbar.cols), 0);
    if (augment(augment, r)) ++matched;
  }
  return matched;
}

}  // namespace gcell

#endif
