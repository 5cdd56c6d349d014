#ifndef GCELL_HBMATRIX_HPP
#define GCELL_HBMATRIX_HPP

#include <utility>
#include <vector>

#include "gcell/bivar.hpp"
#include "gcell/staircase.hpp"

namespace gcell {

enum class ShapeKind { lower, full };

/// Admissible y-degree interval of one matrix entry; empty when lo > hi.
struct Window {
  int lo = 0;
  int hi = -1;
  bool empty() const { return lo > hi; }
  int size() const { return empty() ? 0 : hi - lo + 1; }
  bool contains(int e) const { return lo <= e && e <= hi; }
  bool operator==(const Window& o) const {
    if (empty() && o.empty()) return true;  // all empty windows are the same set
    return lo == o.lo && hi == o.hi;
  }
};

/// Per-entry parameter windows of the deformation matrix N, with fixed
/// (t+1) x t geometry; kind selects M(E) (lower) or N_{<d}(E) (full).
struct ParamShape {
  Partition m;
  ShapeKind kind = ShapeKind::lower;
  std::vector<std::vector<Window>> windows;  // (t+1) x t, 0-indexed storage

  const Window& at(int i, int j) const {  // 1-based
    return windows.at(static_cast<std::size_t>(i) - 1).at(static_cast<std::size_t>(j) - 1);
  }
};

inline ParamShape param_shape(const Partition& m, ShapeKind kind) {
  int t = m.t();
  auto d = diff_vector(m);
  DegreeMatrix U = degree_matrix(m);
  ParamShape s;
  s.m = m;
  s.kind = kind;
  s.windows.assign(static_cast<std::size_t>(t) + 1, std::vector<Window>(static_cast<std::size_t>(t)));
  for (int i = 1; i <= t + 1; ++i)
    for (int j = 1; j <= t; ++j) {
      Window w;  // empty
      if (i > j) {
        int lo = U.u(i, j);
        if (lo < 0) lo = 0;
        w = Window{lo, d[static_cast<std::size_t>(j) - 1] - 1};
      } else if (kind == ShapeKind::full) {
        int lo = U.u(i, j) + 1;
        if (lo < 0) lo = 0;
        w = Window{lo, d[static_cast<std::size_t>(i) - 1] - 1};
      }
      s.windows[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1] = w;
    }
  return s;
}

inline int cell_dimension(const ParamShape& s) {
  int total = 0;
  for (const auto& row : s.windows)
    for (const auto& w : row) total += w.size();
  return total;
}

/// Shape dimension without materializing the windows; used for the large-n
/// counting checks.
inline int full_shape_dimension(const Partition& m) {
  int t = m.t();
  auto d = diff_vector(m);
  int total = 0;
  for (int i = 1; i <= t + 1; ++i)
    for (int j = 1; j <= t; ++j) {
      int u = m.m(j) - m.m(i - 1) + i - j;
      int lo, hi;
      if (i > j) {
        lo = u < 0 ? 0 : u;
        hi = d[static_cast<std::size_t>(j) - 1] - 1;
      } else {
        lo = u + 1 < 0 ? 0 : u + 1;
        hi = d[static_cast<std::size_t>(i) - 1] - 1;
      }
      if (hi >= lo) total += hi - lo + 1;
    }
  return total;
}

/// D = n - t - sum over jump heights l >= 2 of n_l * C(l,2). Jumps are the
/// drops of h from position t on, including the terminal drop to zero.
inline int lex_cell_dimension_formula(const HilbertFunction& h) {
  if (!h.admissible()) throw std::invalid_argument("lex_cell_dimension_formula: inadmissible h");
  int t = h.t();
  int n = h.sum();
  int corr = 0;
  for (int i = t; i <= h.s() + 1; ++i) {
    int l = h.at(i - 1) - h.at(i);
    if (l >= 2) corr += l * (l - 1) / 2;
  }
  return n - t - corr;
}

/// #{(i,j) : i > j, 0 <= u_{i,j} < d_j}.
inline int hom_subcell_dimension(const Partition& m) {
  int t = m.t();
  auto d = diff_vector(m);
  DegreeMatrix U = degree_matrix(m);
  int count = 0;
  for (int i = 2; i <= t + 1; ++i)
    for (int j = 1; j < i && j <= t; ++j) {
      int u = U.u(i, j);
      if (u >= 0 && u < d[static_cast<std::size_t>(j) - 1]) ++count;
    }
  return count;
}

/// t + sum_{i=t-1}^{s} (h_{i-1} - h_i)(h_i - h_{i+1}), with h vanishing
/// outside [0, s].
inline int hom_dimension_formula_lex(const HilbertFunction& h) {
  if (!h.admissible()) throw std::invalid_argument("hom_dimension_formula_lex: inadmissible h");
  int t = h.t();
  int acc = t;
  for (int i = t - 1; i <= h.s(); ++i)
    acc += (h.at(i - 1) - h.at(i)) * (h.at(i) - h.at(i + 1));
  return acc;
}

/// One free coefficient c_k of the deformation: matrix position (1-based)
/// and the y-degree it multiplies.
struct ParamRef {
  int i = 0;
  int j = 0;
  int deg = 0;
  bool operator==(const ParamRef& o) const { return i == o.i && j == o.j && deg == o.deg; }
};

/// Row-major numbering of the free coefficients: by i, then j, then degree.
struct ParamIndex {
  std::vector<ParamRef> refs;  // refs[k-1] describes c_k

  int dim() const { return static_cast<int>(refs.size()); }
  const ParamRef& of(int k) const { return refs.at(static_cast<std::size_t>(k) - 1); }
  /// Parameter number at (i, j, deg), or 0 when absent.
  int find(int i, int j, int deg) const {
    for (std::size_t k = 0; k < refs.size(); ++k)
      if (refs[k].i == i && refs[k].j == j && refs[k].deg == deg) return static_cast<int>(k) + 1;
    return 0;
  }
};

inline ParamIndex param_index(const ParamShape& s) {
  ParamIndex idx;
  int t = s.m.t();
  for (int i = 1; i <= t + 1; ++i)
    for (int j = 1; j <= t; ++j) {
      const Window& w = s.at(i, j);
      for (int e = w.lo; e <= w.hi; ++e) idx.refs.push_back({i, j, e});
    }
  return idx;
}

using PBMatrix = std::vector<std::vector<ParamBivarPoly>>;  // (t+1) x t

/// Canonical Hilbert-Burch matrix H: y^{d_i} on the diagonal, -x on the
/// subdiagonal, zeros elsewhere.
inline PBMatrix canonical_matrix(const Partition& m) {
  int t = m.t();
  auto d = diff_vector(m);
  PBMatrix H(static_cast<std::size_t>(t) + 1, std::vector<ParamBivarPoly>(static_cast<std::size_t>(t)));
  for (int i = 1; i <= t; ++i) {
    H[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(i) - 1] =
        ParamBivarPoly::term(Mono{0, d[static_cast<std::size_t>(i) - 1]}, ParamPoly(Rational(1)));
    H[static_cast<std::size_t>(i)][static_cast<std::size_t>(i) - 1] =
        ParamBivarPoly::term(Mono{1, 0}, ParamPoly(Rational(-1)));
  }
  return H;
}

/// H + N with fresh parameters c_1..c_D placed window by window.
inline std::pair<PBMatrix, ParamIndex> generic_matrix(const Partition& m, const ParamShape& shape) {
  if (!(shape.m == m)) throw std::invalid_argument("generic_matrix: shape built from a different partition");
  PBMatrix M = canonical_matrix(m);
  ParamIndex idx = param_index(shape);
  for (int k = 1; k <= idx.dim(); ++k) {
    const ParamRef& r = idx.of(k);
    M[static_cast<std::size_t>(r.i) - 1][static_cast<std::size_t>(r.j) - 1].add_term(
        Mono{0, r.deg}, ParamPoly::param(k));
  }
  return {std::move(M), std::move(idx)};
}

/// Parameters whose y-degree matches the degree matrix entry: the
/// coordinates of the homogeneous sub-cell. Returns sorted parameter numbers.
inline std::vector<int> homogeneous_mask(const Partition& m, const ParamShape& shape) {
  DegreeMatrix U = degree_matrix(m);
  ParamIndex idx = param_index(shape);
  std::vector<int> mask;
  for (int k = 1; k <= idx.dim(); ++k) {
    const ParamRef& r = idx.of(k);
    if (r.i > r.j && r.deg == U.u(r.i, r.j)) mask.push_back(k);
  }
  return mask;
}

}  // namespace gcell

#endif
