#ifndef GCELL_LOCALSB_HPP
#define GCELL_LOCALSB_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gcell/bivar.hpp"
#include "gcell/staircase.hpp"

namespace gcell {

/// Raised when a reduction exceeds the degree cutoff, which for a
/// zero-dimensional input signals a non-terminating reduction or a
/// non-zero-dimensional ideal.
struct DegreeGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class K>
std::pair<Mono, K> leading_term(const BivarPoly<K>& f) {
  return {f.leading_mono(), f.leading_coeff()};
}

/// Mora weak normal form with ecart-guided reducer selection. Intermediate
/// results join the reducer set, so the output r satisfies u*f = sum a_i g_i + r
/// for some unit u, with Lt(r) not divisible by any Lt(g_i) (or r = 0).
template <class K>
BivarPoly<K> mora_normal_form(const BivarPoly<K>& f, const std::vector<BivarPoly<K>>& G,
                              int degree_cutoff = -1) {
  if (G.empty()) throw std::invalid_argument("mora_normal_form: empty reducer set");
  for (const auto& g : G)
    if (g.is_zero()) throw std::invalid_argument("mora_normal_form: zero reducer");
  std::vector<BivarPoly<K>> T = G;
  BivarPoly<K> h = f;
  while (!h.is_zero()) {
    int best = -1;
    int best_ecart = 0;
    for (std::size_t i = 0; i < T.size(); ++i) {
      if (!T[i].leading_mono().divides(h.leading_mono())) continue;
      int e = T[i].ecart();
      if (best < 0 || e < best_ecart) {
        best = static_cast<int>(i);
        best_ecart = e;
      }
    }
    if (best < 0) return h;
    if (best_ecart > h.ecart()) T.push_back(h);
    const BivarPoly<K>& g = T[static_cast<std::size_t>(best)];
    Mono q = h.leading_mono() / g.leading_mono();
    K factor = h.leading_coeff() / g.leading_coeff();
    h -= g.times_term(q, factor);
    if (degree_cutoff > 0 && !h.is_zero() && h.degree() > degree_cutoff)
      throw DegreeGuardError("mora_normal_form: degree cutoff exceeded");
  }
  return h;
}

template <class K>
struct StandardBasis {
  std::vector<BivarPoly<K>> elems;
  bool reduced = false;
};

struct SBOptions {
  int degree_cutoff = -1;  // <= 0: derived from the input degrees
  bool reduce = true;
};

namespace detail {

/// Staircase partition of the monomial ideal generated by the given
/// leading monomials; throws if the quotient is not finite-dimensional.
inline Partition staircase_of_leading_terms(const std::vector<Mono>& lts) {
  int t = -1;
  for (const Mono& m : lts)
    if (m.y == 0 && (t < 0 || m.x < t)) t = m.x;
  if (t < 0) throw std::domain_error("leading term ideal has no pure x power: not zero-dimensional");
  if (t == 0) throw std::domain_error("leading term ideal contains a unit");
  std::vector<int> parts;
  for (int i = 1; i <= t; ++i) {
    int a = t - i;  // column x-exponent
    int height = -1;
    for (const Mono& m : lts)
      if (m.x <= a && (height < 0 || m.y < height)) height = m.y;
    if (height < 0)
      throw std::domain_error("leading term ideal has no pure y power: not zero-dimensional");
    parts.push_back(height);
  }
  return Partition{parts};
}

/// Monomial membership in the staircase ideal E.
inline bool in_staircase(const Partition& m, const Mono& mono) {
  int t = m.t();
  if (mono.x >= t) return true;
  return mono.y >= m.m(t - mono.x);
}

}  // namespace detail

/// Partition of the staircase generated by the leading terms of B.
template <class K>
Partition leading_term_ideal(const StandardBasis<K>& B) {
  std::vector<Mono> lts;
  for (const auto& g : B.elems) lts.push_back(g.leading_mono());
  return detail::staircase_of_leading_terms(lts);
}

namespace detail {

/// Fully reduced normal forms of monomials modulo the ideal of G, computed
/// by descending recursion in the local order. Monomials of degree above
/// the socle degree lie in the ideal and reduce to zero, which bounds the
/// recursion. G must be lc-normalized with Lt(G) generating the staircase E.
template <class K>
class MonomialNormalForms {
 public:
  MonomialNormalForms(const Partition& E, const std::vector<BivarPoly<K>>& G, const K& one)
      : E_(E), G_(G), one_(one) {
    HilbertFunction h = hilbert_function_of_staircase(E);
    socle_ = h.s();
  }

  /// Normal form supported on the standard monomials of E.
  BivarPoly<K> of(const Mono& m) {
    if (m.deg() > socle_) return BivarPoly<K>{};
    auto key = std::make_pair(m.x, m.y);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    BivarPoly<K> nf;
    if (!in_staircase(E_, m)) {
      nf = BivarPoly<K>::term(m, one_);
    } else {
      const BivarPoly<K>* g = nullptr;
      for (const auto& cand : G_)
        if (cand.leading_mono().divides(m)) {
          g = &cand;
          break;
        }
      if (g == nullptr) throw std::logic_error("MonomialNormalForms: leading terms do not cover E");
      Mono q = m / g->leading_mono();
      bool first = true;
      for (const auto& [tm, tc] : g->terms()) {
        if (first) {  // the leading term itself
          first = false;
          continue;
        }
        // m = q*Lt(g) == -q*tail(g) modulo the ideal; recurse on each
        // tail monomial, all strictly smaller in the local order.
        BivarPoly<K> sub = of(q * tm);
        nf -= sub.times_term(Mono{0, 0}, tc / g->leading_coeff());
      }
    }
    memo_.emplace(key, nf);
    return nf;
  }

 private:
  Partition E_;
  const std::vector<BivarPoly<K>>& G_;
  K one_;
  int socle_ = 0;
  std::map<std::pair<int, int>, BivarPoly<K>> memo_;
};

}  // namespace detail

/// Enhanced standard basis via Buchberger's loop with Mora normal forms.
/// With opts.reduce the result is the reduced basis: one element per
/// minimal generator of E = Lt(ideal), monic, tail supported on standard
/// monomials. The reduced basis is canonical for the ideal.
template <class K>
StandardBasis<K> standard_basis(const std::vector<BivarPoly<K>>& F, SBOptions opts = {}) {
  std::vector<BivarPoly<K>> G;
  for (const auto& f : F)
    if (!f.is_zero()) G.push_back(f);
  if (G.empty()) throw std::invalid_argument("standard_basis: no nonzero generators");
  int cutoff = opts.degree_cutoff;
  if (cutoff <= 0) {
    int s = 0;
    for (const auto& g : G) s += g.degree();
    cutoff = 4 * s + 4;
  }
  // lc-normalize
  for (auto& g : G) {
    K inv = field_one(g.leading_coeff()) / g.leading_coeff();
    g = g.times_term(Mono{0, 0}, inv);
  }

  struct Pair {
    std::size_t i, j;
    Mono l;
    std::size_t order;  // insertion tick for deterministic tie-breaks
  };
  std::vector<Pair> pairs;
  std::size_t tick = 0;
  auto push_pairs = [&](std::size_t upto) {
    for (std::size_t i = 0; i < upto; ++i)
      pairs.push_back({i, upto, lcm(G[i].leading_mono(), G[upto].leading_mono()), tick++});
  };
  for (std::size_t k = 1; k < G.size(); ++k) push_pairs(k);

  while (!pairs.empty()) {
    // normal strategy: the pair whose lcm is greatest in the local order
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      int c = compare_local(pairs[k].l, pairs[best].l);
      if (c > 0 || (c == 0 && pairs[k].order < pairs[best].order)) best = k;
    }
    Pair pr = pairs[static_cast<std::size_t>(best)];
    pairs.erase(pairs.begin() + static_cast<long>(best));
    const Mono& mi = G[pr.i].leading_mono();
    const Mono& mj = G[pr.j].leading_mono();
    if (mi.x + mj.x == pr.l.x && mi.y + mj.y == pr.l.y) continue;  // coprime leading terms
    BivarPoly<K> s =
        G[pr.i].times_term(pr.l / mi, field_one(G[pr.i].leading_coeff())) -
        G[pr.j].times_term(pr.l / mj, field_one(G[pr.j].leading_coeff()));
    if (s.is_zero()) continue;
    BivarPoly<K> r = mora_normal_form(s, G, cutoff);
    if (r.is_zero()) continue;
    K inv = field_one(r.leading_coeff()) / r.leading_coeff();
    G.push_back(r.times_term(Mono{0, 0}, inv));
    push_pairs(G.size() - 1);
  }

  // Minimalize: drop elements whose leading term is a proper or duplicate
  // multiple of another element's leading term.
  std::vector<BivarPoly<K>> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      const Mono& a = G[j].leading_mono();
      const Mono& b = G[i].leading_mono();
      if (a.divides(b) && (a != b || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(G[i]);
  }

  StandardBasis<K> out;
  if (!opts.reduce) {
    out.elems = std::move(minimal);
    out.reduced = false;
    return out;
  }

  // Reduce: rebuild one monic element per minimal generator of E with tail
  // in normal form. This also makes the basis independent of generator order.
  Partition E = [&] {
    std::vector<Mono> lts;
    for (const auto& g : minimal) lts.push_back(g.leading_mono());
    return detail::staircase_of_leading_terms(lts);
  }();
  K one = field_one(minimal.front().leading_coeff());
  detail::MonomialNormalForms<K> nf(E, minimal, one);
  int t = E.t();
  auto d = diff_vector(E);
  for (int i = 0; i <= t; ++i) {
    if (i < t && d[static_cast<std::size_t>(i)] == 0) continue;  // non-minimal generator
    Mono gen{t - i, E.m(i)};
    BivarPoly<K> elem = BivarPoly<K>::term(gen, one) - nf.of(gen);
    out.elems.push_back(std::move(elem));
  }
  out.reduced = true;
  return out;
}

template <class K>
HilbertFunction hilbert_function_of_quotient(const StandardBasis<K>& B) {
  return hilbert_function_of_staircase(leading_term_ideal(B));
}

}  // namespace gcell

#endif
