#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "gcell/decomposition.hpp"
#include "gcell/localsb.hpp"

using namespace gcell;

namespace {

using QPoly = BivarPoly<Rational>;

QPoly qterm(int a, int b, Rational c) { return QPoly::term(Mono{a, b}, std::move(c)); }

// The complete-intersection specialization of the m = (1,5,8,10) cell at
// c1 = c6 = c17 = 1: J = (x^4 - x^2y^2 - x^2y^3 - x^2y^4 + y^6,
//                         x^3y - xy^3 - xy^4).
std::vector<QPoly> rs10_generators() {
  QPoly f0;
  f0.add_term(Mono{4, 0}, 1);
  f0.add_term(Mono{2, 2}, -1);
  f0.add_term(Mono{2, 3}, -1);
  f0.add_term(Mono{2, 4}, -1);
  f0.add_term(Mono{0, 6}, 1);
  QPoly f1;
  f1.add_term(Mono{3, 1}, 1);
  f1.add_term(Mono{1, 3}, -1);
  f1.add_term(Mono{1, 4}, -1);
  return {f0, f1};
}

}  // namespace

TEST_CASE("local ordering: lower degree greater, lex x > y on ties") {
  CHECK(compare_local(Mono{1, 0}, Mono{0, 2}) == 1);   // x > y^2
  CHECK(compare_local(Mono{1, 0}, Mono{0, 1}) == 1);   // x > y
  CHECK(compare_local(Mono{0, 6}, Mono{1, 0}) == -1);  // y^6 < x
  CHECK(compare_local(Mono{2, 1}, Mono{2, 1}) == 0);
  CHECK(compare_local(Mono{1, 2}, Mono{0, 3}) == 1);  // equal degree, more x
}

TEST_CASE("leading terms of the worked generators") {
  auto gens = rs10_generators();
  CHECK(gens[0].leading_mono() == Mono{4, 0});
  CHECK(gens[1].leading_mono() == Mono{3, 1});
  CHECK(qterm(0, 0, 5).leading_mono() == Mono{0, 0});
  CHECK_THROWS_AS(QPoly{}.leading_mono(), std::domain_error);
}

TEST_CASE("mora_normal_form: membership witnesses reduce to zero") {
  auto gens = rs10_generators();
  CHECK(mora_normal_form(gens[0], gens).is_zero());
  // explicit combination x*f0 + y^5*f1 + (1 + y)*f1
  QPoly f = gens[0].times_term(Mono{1, 0}, 1) + gens[1].times_term(Mono{0, 5}, 1) + gens[1] +
            gens[1].times_term(Mono{0, 1}, 1);
  CHECK(mora_normal_form(f, gens).is_zero());
}

TEST_CASE("mora_normal_form: y^3 is irreducible modulo (x^3, xy, y^4)") {
  std::vector<QPoly> G{qterm(3, 0, 1), qterm(1, 1, 1), qterm(0, 4, 1)};
  QPoly r = mora_normal_form(qterm(0, 3, 1), G);
  CHECK(r == qterm(0, 3, 1));
  CHECK_THROWS_AS(mora_normal_form(qterm(0, 3, 1), std::vector<QPoly>{}), std::invalid_argument);
}

TEST_CASE("standard_basis of a monomial ideal is itself") {
  std::vector<QPoly> G{qterm(3, 0, 1), qterm(1, 1, 1), qterm(0, 4, 1)};
  StandardBasis<Rational> B = standard_basis(G);
  CHECK(B.reduced);
  REQUIRE(B.elems.size() == 3);
  CHECK(B.elems[0] == qterm(3, 0, 1));
  CHECK(B.elems[1] == qterm(1, 1, 1));
  CHECK(B.elems[2] == qterm(0, 4, 1));
  CHECK(leading_term_ideal(B).parts == std::vector<int>{1, 1, 4});
}

TEST_CASE("RS10 worked example: leading term ideal and Hilbert function") {
  StandardBasis<Rational> B = standard_basis(rs10_generators());
  CHECK(leading_term_ideal(B).parts == std::vector<int>{1, 5, 8, 10});
  CHECK(hilbert_function_of_quotient(B).values == std::vector<int>{1, 2, 3, 4, 3, 3, 3, 2, 2, 1});
  // the reduced basis has one monic element per minimal generator of L
  REQUIRE(B.elems.size() == 5);
  CHECK(B.elems[0].leading_mono() == Mono{4, 0});
  CHECK(B.elems[1].leading_mono() == Mono{3, 1});
  CHECK(B.elems[2].leading_mono() == Mono{2, 5});
  CHECK(B.elems[3].leading_mono() == Mono{1, 8});
  CHECK(B.elems[4].leading_mono() == Mono{0, 10});
  for (const auto& g : B.elems) CHECK(g.leading_coeff() == 1);
}

TEST_CASE("reduced basis: tails on standard monomials, idempotent, order-independent") {
  Fp one(1, 32003);
  std::mt19937_64 shuffler(99);
  for (int n = 2; n <= 6; ++n)
    for (const Partition& m : partitions(n)) {
      auto [M, idx] = generic_matrix(m, param_shape(m, ShapeKind::full));
      auto minors = maximal_minors(M);
      detail::TrialRng rng(5, static_cast<std::uint64_t>(n * 37 + m.m(1)), 3);
      std::vector<Fp> pt = detail::sample_point(rng, idx.dim(), 32003);
      auto gens = specialize(minors, pt, one);
      StandardBasis<Fp> B = standard_basis(gens);

      // no term of any element divisible by any leading term
      std::vector<Mono> lts;
      for (const auto& g : B.elems) lts.push_back(g.leading_mono());
      for (const auto& g : B.elems)
        for (const auto& [mono, coeff] : g.terms()) {
          if (mono == g.leading_mono()) continue;
          for (const Mono& lt : lts) CHECK_FALSE(lt.divides(mono));
        }

      // idempotent under re-running
      StandardBasis<Fp> B2 = standard_basis(B.elems);
      CHECK(B2.elems == B.elems);

      // independent of generator order
      auto shuffled = gens;
      std::shuffle(shuffled.begin(), shuffled.end(), shuffler);
      StandardBasis<Fp> B3 = standard_basis(shuffled);
      CHECK(B3.elems == B.elems);
    }
}

TEST_CASE("random specializations stay in their cell (spot checks)") {
  Fp one(1, 32003);
  Partition m{{1, 1, 1, 1, 2}};
  auto [M, idx] = generic_matrix(m, param_shape(m, ShapeKind::full));
  auto minors = maximal_minors(M);
  for (int trial = 0; trial < 10; ++trial) {
    detail::TrialRng rng(123, 0, static_cast<std::uint64_t>(trial));
    std::vector<Fp> pt = detail::sample_point(rng, idx.dim(), 32003);
    StandardBasis<Fp> B = standard_basis(specialize(minors, pt, one));
    CHECK(leading_term_ideal(B) == m);
    CHECK(hilbert_function_of_quotient(B) == hilbert_function_of_staircase(m));
  }
}

TEST_CASE("leading_term_ideal recognizes the axis cases") {
  std::vector<QPoly> xy6{qterm(1, 0, 1), qterm(0, 6, 1)};
  CHECK(leading_term_ideal(standard_basis(xy6)).parts == std::vector<int>{6});
  std::vector<QPoly> yx6{qterm(0, 1, 1), qterm(6, 0, 1)};
  CHECK(leading_term_ideal(standard_basis(yx6)).parts == std::vector<int>{1, 1, 1, 1, 1, 1});
  std::vector<QPoly> maxideal{qterm(1, 0, 1), qterm(0, 1, 1)};
  CHECK(hilbert_function_of_quotient(standard_basis(maxideal)).values == std::vector<int>{1});
}

TEST_CASE("non-zero-dimensional input is rejected") {
  // (x) has no pure y-power in its leading term ideal
  std::vector<QPoly> G{qterm(1, 0, 1)};
  CHECK_THROWS_AS(leading_term_ideal(standard_basis(G)), std::domain_error);
  // a unit generator is rejected as well
  std::vector<QPoly> U{qterm(0, 0, 1) + qterm(1, 0, 1)};
  CHECK_THROWS_AS(leading_term_ideal(standard_basis(U)), std::domain_error);
  CHECK_THROWS_AS(standard_basis(std::vector<QPoly>{}), std::invalid_argument);
}
