#ifndef GCELL_DECOMPOSITION_HPP
#define GCELL_DECOMPOSITION_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gcell/localsb.hpp"
#include "gcell/symbolic.hpp"

namespace gcell {

/// Full record of one Groebner cell.
struct Cell {
  Partition m;
  std::vector<ExpPair> E;      // minimal monomial generators
  std::vector<int> d;          // difference vector
  DegreeMatrix U;
  HilbertFunction hilb;
  PBMatrix H;                  // canonical Hilbert-Burch matrix
  PBMatrix M;                  // generic matrix H + N
  ParamShape shape;            // full shape N_{<d}(E)
  ParamIndex params;
  std::vector<ParamBivarPoly> minors;  // maximal minors of M
  int dim = 0;
  int dim_hom = 0;
  bool proven = false;  // true when the parametrization theorem applies
  int mu_min = 0;       // minimal number of generators over the cell
  int mu_max = 0;
};

inline Cell cell(const Partition& m) {
  Cell c;
  c.m = m;
  c.E = minimal_generators(m);
  c.d = diff_vector(m);
  c.U = degree_matrix(m);
  c.hilb = hilbert_function_of_staircase(m);
  c.H = canonical_matrix(m);
  c.shape = param_shape(m, ShapeKind::full);
  auto [M, idx] = generic_matrix(m, c.shape);
  c.M = std::move(M);
  c.params = std::move(idx);
  c.minors = maximal_minors(c.M);
  c.dim = cell_dimension(c.shape);
  c.dim_hom = hom_subcell_dimension(m);
  c.proven = satisfies_lex_gb_condition(m);
  ConstantMatrix Nbar = constant_term_matrix(m, c.shape);
  int t = m.t();
  c.mu_min = t + 1 - max_rank(Nbar);
  c.mu_max = t + 1 - min_rank(Nbar);
  return c;
}

struct CellVerification {
  int trials = 0;
  int passed = 0;
  bool distinct_ok = true;
  std::vector<std::string> failures;
  bool ok() const { return passed == trials && distinct_ok && failures.empty(); }
};

struct DecompositionReport {
  int n = 0;
  std::vector<Cell> cells;
  std::vector<long long> a;      // dimension vector a_0..a_{n-1}
  std::vector<long long> betti;  // b_{2i} = P(i, n-i)
  std::vector<std::pair<HilbertFunction, std::vector<int>>> groups;  // cell indices per h
  bool plausible = false;
  bool fibration = false;
  std::uint64_t seed = 0;
  std::int64_t field = 0;
  std::optional<std::vector<CellVerification>> verification;

  bool verified_ok() const {
    if (!verification) return false;
    for (const auto& v : *verification)
      if (!v.ok()) return false;
    return true;
  }
};

inline std::vector<long long> betti_numbers_punctual(int n) {
  if (n < 1) throw std::invalid_argument("betti_numbers_punctual: n must be >= 1");
  std::vector<long long> b;
  for (int i = 0; i < n; ++i) b.push_back(bounded_partition_count(i, n - i));
  return b;
}

inline DecompositionReport cellular_decomposition(int n) {
  if (n < 1) throw std::invalid_argument("cellular_decomposition: n must be >= 1");
  DecompositionReport rep;
  rep.n = n;
  for (const Partition& m : partitions(n)) rep.cells.push_back(cell(m));
  rep.a.assign(static_cast<std::size_t>(n), 0);
  for (const Cell& c : rep.cells) rep.a[static_cast<std::size_t>(c.dim)] += 1;
  rep.betti = betti_numbers_punctual(n);
  std::map<HilbertFunction, std::vector<int>> byh;
  for (std::size_t k = 0; k < rep.cells.size(); ++k)
    byh[rep.cells[k].hilb].push_back(static_cast<int>(k));
  for (auto& [h, idxs] : byh) rep.groups.emplace_back(h, idxs);
  rep.plausible = rep.a == rep.betti;
  rep.fibration = true;
  for (const auto& [h, idxs] : rep.groups) {
    int diff = rep.cells[static_cast<std::size_t>(idxs[0])].dim -
               rep.cells[static_cast<std::size_t>(idxs[0])].dim_hom;
    for (int k : idxs)
      if (rep.cells[static_cast<std::size_t>(k)].dim - rep.cells[static_cast<std::size_t>(k)].dim_hom !=
          diff)
        rep.fibration = false;
  }
  return rep;
}

struct CheckResult {
  bool ok = true;
  std::vector<std::string> diffs;
};

/// a_i = P(i, n-i) for all i, using the shape-count dimensions only (fast
/// enough for n up to 50).
inline CheckResult plausibility_check(int n) {
  if (n < 1) throw std::invalid_argument("plausibility_check: n must be >= 1");
  std::vector<long long> a(static_cast<std::size_t>(n), 0);
  for (const Partition& m : partitions(n)) a[static_cast<std::size_t>(full_shape_dimension(m))] += 1;
  CheckResult res;
  for (int i = 0; i < n; ++i) {
    long long expect = bounded_partition_count(i, n - i);
    if (a[static_cast<std::size_t>(i)] != expect) {
      res.ok = false;
      std::ostringstream os;
      os << "n=" << n << " dimension " << i << ": " << a[static_cast<std::size_t>(i)]
         << " cells, expected P(" << i << "," << n - i << ") = " << expect;
      res.diffs.push_back(os.str());
    }
  }
  return res;
}

/// dim - dim_hom constant within every Hilbert-function group.
inline CheckResult fibration_check(int n) {
  if (n < 1) throw std::invalid_argument("fibration_check: n must be >= 1");
  std::map<HilbertFunction, std::vector<std::pair<Partition, int>>> byh;
  for (const Partition& m : partitions(n)) {
    int diff = full_shape_dimension(m) - hom_subcell_dimension(m);
    byh[hilbert_function_of_staircase(m)].emplace_back(m, diff);
  }
  CheckResult res;
  for (const auto& [h, entries] : byh) {
    for (const auto& [m, diff] : entries) {
      if (diff != entries.front().second) {
        res.ok = false;
        std::ostringstream os;
        os << "n=" << n << ": dim - dim_hom not constant in a Hilbert-function group";
        res.diffs.push_back(os.str());
        break;
      }
    }
  }
  return res;
}

/// Dimensions of the two cells with socle-dimension-one Hilbert function
/// (1,...,1): the lex-segment cell of (n) and the cell of (1,...,1).
inline std::pair<int, int> one_dimensional_socle_stratum(int n) {
  if (n < 2) throw std::invalid_argument("one_dimensional_socle_stratum: n must be >= 2");
  Partition lex{std::vector<int>{n}};
  Partition other{std::vector<int>(static_cast<std::size_t>(n), 1)};
  return {full_shape_dimension(lex), full_shape_dimension(other)};
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic per-trial generator state, independent of evaluation order.
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t cell, std::uint64_t trial)
      : state_(splitmix64(seed ^ splitmix64(cell ^ splitmix64(trial + 0x51ULL)))) {}
  std::uint64_t next() { return state_ = splitmix64(state_); }

 private:
  std::uint64_t state_;
};

/// Each parameter is 0 with probability 1/2, otherwise uniform in F_p \ {0}.
inline std::vector<Fp> sample_point(TrialRng& rng, int dim, std::int64_t p) {
  std::vector<Fp> point;
  for (int k = 0; k < dim; ++k) {
    if (rng.next() & 1)
      point.emplace_back(0, p);
    else
      point.emplace_back(static_cast<std::int64_t>(rng.next() % static_cast<std::uint64_t>(p - 1)) + 1,
                         p);
  }
  return point;
}

}  // namespace detail

/// For every cell: random specializations must have leading term ideal E
/// and Hilbert function h, and distinct parameter points must give distinct
/// reduced standard bases.
inline DecompositionReport verify_conjecture(int n, int trials, std::int64_t p, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("verify_conjecture: trials must be >= 1");
  if (!is_prime(static_cast<std::uint64_t>(p)))
    throw std::invalid_argument("verify_conjecture: field order must be prime");
  DecompositionReport rep = cellular_decomposition(n);
  rep.seed = seed;
  rep.field = p;
  Fp one(1, p);
  std::vector<CellVerification> results;
  for (std::size_t ci = 0; ci < rep.cells.size(); ++ci) {
    const Cell& c = rep.cells[ci];
    CellVerification v;
    v.trials = trials;
    int cutoff = 4 * n;
    for (int trial = 0; trial < trials; ++trial) {
      detail::TrialRng rng(seed, ci, static_cast<std::uint64_t>(trial));
      std::vector<Fp> point = detail::sample_point(rng, c.params.dim(), p);
      try {
        auto gens = specialize(c.minors, point, one);
        StandardBasis<Fp> B = standard_basis(gens, SBOptions{cutoff, true});
        Partition lt = leading_term_ideal(B);
        HilbertFunction hf = hilbert_function_of_quotient(B);
        if (lt == c.m && hf == c.hilb) {
          ++v.passed;
        } else {
          std::ostringstream os;
          os << "cell " << ci << " trial " << trial << ": leading term ideal or Hilbert function mismatch";
          v.failures.push_back(os.str());
        }
      } catch (const std::exception& e) {
        std::ostringstream os;
        os << "cell " << ci << " trial " << trial << " (seed " << seed << "): " << e.what();
        v.failures.push_back(os.str());
      }
    }
    // injectivity evidence: distinct points give distinct reduced bases
    if (c.params.dim() > 0) {
      std::vector<std::vector<Fp>> points;
      std::uint64_t tag = 1000;
      while (static_cast<int>(points.size()) < 5 && tag < 1200) {
        detail::TrialRng rng(seed, ci, tag++);
        std::vector<Fp> pt = detail::sample_point(rng, c.params.dim(), p);
        bool dup = false;
        for (const auto& q : points)
          if (q == pt) dup = true;
        if (!dup) points.push_back(std::move(pt));
      }
      std::vector<StandardBasis<Fp>> bases;
      for (const auto& pt : points) {
        try {
          bases.push_back(standard_basis(specialize(c.minors, pt, one), SBOptions{cutoff, true}));
        } catch (const std::exception& e) {
          v.distinct_ok = false;
          v.failures.push_back(std::string("cell ") + std::to_string(ci) +
                               " injectivity trial failed: " + e.what());
        }
      }
      for (std::size_t a = 0; a < bases.size() && v.distinct_ok; ++a)
        for (std::size_t b = a + 1; b < bases.size(); ++b)
          if (bases[a].elems == bases[b].elems) v.distinct_ok = false;
    }
    results.push_back(std::move(v));
  }
  rep.verification = std::move(results);
  return rep;
}

}  // namespace gcell

#endif
