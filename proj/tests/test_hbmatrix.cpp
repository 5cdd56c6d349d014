#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gcell/hbmatrix.hpp"

using namespace gcell;

TEST_CASE("parameter windows of the printed examples") {
  // m = (1,5,8,10), strict lower triangle only; entry (3,2) carries degrees 1..3
  ParamShape lower = param_shape(Partition{{1, 5, 8, 10}}, ShapeKind::lower);
  CHECK(cell_dimension(lower) == 20);
  CHECK(lower.at(3, 2) == Window{1, 3});
  CHECK(lower.at(1, 2).empty());
  CHECK(lower.at(2, 2).empty());

  // m = (1,1,1,1,2), full: three degree-0 parameters in the first row
  ParamShape f = param_shape(Partition{{1, 1, 1, 1, 2}}, ShapeKind::full);
  CHECK(cell_dimension(f) == 3);
  CHECK(f.at(1, 3) == Window{0, 0});
  CHECK(f.at(1, 4) == Window{0, 0});
  CHECK(f.at(1, 5) == Window{0, 0});
  CHECK(f.at(1, 2).empty());

  // m = (6), lower: single window [1,5] at (2,1)
  ParamShape s6 = param_shape(Partition{{6}}, ShapeKind::lower);
  CHECK(cell_dimension(s6) == 5);
  CHECK(s6.at(2, 1) == Window{1, 5});
}

TEST_CASE("Eq. (1): closed-form lex cell dimension equals window counting, n <= 30") {
  CHECK(lex_cell_dimension_formula(HilbertFunction{{1, 2, 3, 4, 3, 3, 3, 2, 2, 1}}) == 20);
  CHECK(lex_cell_dimension_formula(HilbertFunction{{1, 2, 3, 4, 4, 2, 1}}) == 12);
  CHECK(lex_cell_dimension_formula(HilbertFunction{{1, 2, 3}}) == 0);
  for (int n = 1; n <= 30; ++n)
    for (const Partition& m : partitions(n)) {
      if (!is_lex_segment(m)) continue;
      HilbertFunction h = hilbert_function_of_staircase(m);
      CHECK(lex_cell_dimension_formula(h) == cell_dimension(param_shape(m, ShapeKind::lower)));
    }
}

TEST_CASE("Eq. (2): homogeneous dimension formula equals the position count, n <= 30") {
  CHECK(hom_dimension_formula_lex(HilbertFunction{{1, 2, 3, 4, 3, 3, 3, 2, 2, 1}}) == 4);
  CHECK(hom_dimension_formula_lex(HilbertFunction{{1, 2, 3, 4, 4, 2, 1}}) == 7);
  CHECK(hom_dimension_formula_lex(HilbertFunction{{1, 1, 1, 1, 1, 1}}) == 1);
  CHECK(hom_subcell_dimension(Partition{{1, 5, 8, 10}}) == 4);
  CHECK(hom_subcell_dimension(Partition{{2, 3, 5, 7}}) == 7);
  CHECK(hom_subcell_dimension(Partition{{6}}) == 1);
  for (int n = 1; n <= 30; ++n)
    for (const Partition& m : partitions(n)) {
      if (!is_lex_segment(m)) continue;
      CHECK(hom_dimension_formula_lex(hilbert_function_of_staircase(m)) == hom_subcell_dimension(m));
    }
}

TEST_CASE("lower and full shapes coincide exactly on the lex-GB-condition class, n <= 30") {
  for (int n = 1; n <= 30; ++n)
    for (const Partition& m : partitions(n)) {
      ParamShape lower = param_shape(m, ShapeKind::lower);
      ParamShape full = param_shape(m, ShapeKind::full);
      if (satisfies_lex_gb_condition(m)) {
        CHECK(lower.windows == full.windows);
      } else {
        CHECK(cell_dimension(lower) <= cell_dimension(full));
      }
      CHECK(full_shape_dimension(m) == cell_dimension(full));
    }
}

TEST_CASE("homogeneous_mask cardinality equals hom_subcell_dimension, n <= 30") {
  for (int n = 1; n <= 30; ++n)
    for (const Partition& m : partitions(n)) {
      ParamShape full = param_shape(m, ShapeKind::full);
      CHECK(static_cast<int>(homogeneous_mask(m, full).size()) == hom_subcell_dimension(m));
    }
}

TEST_CASE("homogeneous_mask of the printed examples") {
  Partition l{{1, 5, 8, 10}};
  CHECK(homogeneous_mask(l, param_shape(l, ShapeKind::full)) == std::vector<int>{2, 10, 17, 20});

  Partition l2{{2, 3, 5, 7}};  // complement of {c4, c7, c8, c9, c11} in c1..c12
  CHECK(homogeneous_mask(l2, param_shape(l2, ShapeKind::full)) ==
        std::vector<int>{1, 2, 3, 5, 6, 10, 12});

  Partition l3{{2, 4}};
  CHECK(homogeneous_mask(l3, param_shape(l3, ShapeKind::full)) == std::vector<int>{1, 2, 4});
}

TEST_CASE("parameter numbering is row-major and reproduces printed labels") {
  // m = (2,4): c1 at (2,1) deg 1; c2, c3 at (3,1) degs 0,1; c4 at (3,2) deg 1
  Partition m24{{2, 4}};
  ParamIndex idx = param_index(param_shape(m24, ShapeKind::lower));
  REQUIRE(idx.dim() == 4);
  CHECK(idx.of(1) == ParamRef{2, 1, 1});
  CHECK(idx.of(2) == ParamRef{3, 1, 0});
  CHECK(idx.of(3) == ParamRef{3, 1, 1});
  CHECK(idx.of(4) == ParamRef{3, 2, 1});

  // m = (1,1,1,3), full: c1 at (1,3) deg 0 and c2 at (5,4) deg 1
  Partition m1113{{1, 1, 1, 3}};
  ParamIndex idx2 = param_index(param_shape(m1113, ShapeKind::full));
  REQUIRE(idx2.dim() == 2);
  CHECK(idx2.of(1) == ParamRef{1, 3, 0});
  CHECK(idx2.of(2) == ParamRef{5, 4, 1});

  // m = (1,5,8,10): c1 at (3,1) deg 0, c2..c4 at (3,2) degs 1..3, c17 at (5,3) deg 0
  Partition l{{1, 5, 8, 10}};
  ParamIndex idx3 = param_index(param_shape(l, ShapeKind::lower));
  REQUIRE(idx3.dim() == 20);
  CHECK(idx3.of(1) == ParamRef{3, 1, 0});
  CHECK(idx3.of(2) == ParamRef{3, 2, 1});
  CHECK(idx3.of(5) == ParamRef{4, 1, 0});
  CHECK(idx3.of(6) == ParamRef{4, 2, 0});
  CHECK(idx3.of(17) == ParamRef{5, 3, 0});
  CHECK(idx3.of(20) == ParamRef{5, 4, 1});
}

TEST_CASE("canonical_matrix structure") {
  PBMatrix H = canonical_matrix(Partition{{1, 5, 8, 10}});
  REQUIRE(H.size() == 5);
  std::vector<int> diag{1, 4, 3, 2};
  for (int i = 1; i <= 4; ++i) {
    CHECK(H[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(i) - 1].leading_mono() ==
          Mono{0, diag[static_cast<std::size_t>(i) - 1]});
    CHECK(H[static_cast<std::size_t>(i)][static_cast<std::size_t>(i) - 1].leading_mono() == Mono{1, 0});
  }
  CHECK(H[0][2].is_zero());

  // (1,1,2,2): diagonal y, 1, y, 1
  PBMatrix H2 = canonical_matrix(Partition{{1, 1, 2, 2}});
  CHECK(H2[0][0].leading_mono() == Mono{0, 1});
  CHECK(H2[1][1].leading_mono() == Mono{0, 0});
  CHECK(H2[2][2].leading_mono() == Mono{0, 1});
  CHECK(H2[3][3].leading_mono() == Mono{0, 0});
}

TEST_CASE("generic_matrix places each parameter at its indexed position") {
  for (int n = 1; n <= 12; ++n)
    for (const Partition& m : partitions(n)) {
      ParamShape shape = param_shape(m, ShapeKind::full);
      auto [M, idx] = generic_matrix(m, shape);
      for (int k = 1; k <= idx.dim(); ++k) {
        const ParamRef& r = idx.of(k);
        const ParamBivarPoly& e =
            M[static_cast<std::size_t>(r.i) - 1][static_cast<std::size_t>(r.j) - 1];
        ParamPoly c = e.coeff(Mono{0, r.deg});
        CHECK(c.single_param() == k);
      }
    }
}
