#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "gcell/decomposition.hpp"

using namespace gcell;

TEST_CASE("single cells match the figure rows") {
  Cell c24 = cell(Partition{{2, 4}});
  CHECK(c24.dim == 4);
  CHECK(c24.dim_hom == 3);
  CHECK(c24.mu_min == 2);
  CHECK(c24.mu_max == 3);
  CHECK(c24.proven);

  Cell c33 = cell(Partition{{3, 3}});
  CHECK(c33.dim == 3);
  CHECK(c33.mu_min == 2);
  CHECK(c33.mu_max == 2);

  Cell c123 = cell(Partition{{1, 2, 3}});
  CHECK(c123.dim == 0);
  CHECK(c123.mu_min == 4);
  CHECK(c123.mu_max == 4);

  Cell top = cell(Partition{{6}});
  CHECK(top.dim == 5);
  CHECK(top.dim_hom == 1);
  CHECK(top.mu_min == 2);
  CHECK(top.mu_max == 2);
}

TEST_CASE("n = 6 decomposition matches the published table") {
  DecompositionReport rep = cellular_decomposition(6);
  REQUIRE(rep.cells.size() == 11);
  CHECK(rep.a == std::vector<long long>{1, 1, 2, 3, 3, 1});
  CHECK(rep.betti == rep.a);
  CHECK(rep.plausible);
  CHECK(rep.fibration);
  std::map<std::vector<int>, int> dims;
  for (const Cell& c : rep.cells) dims[c.m.parts] = c.dim;
  CHECK(dims[{1, 1, 1, 1, 1, 1}] == 4);
  CHECK(dims[{1, 1, 1, 1, 2}] == 3);
  CHECK(dims[{1, 1, 1, 3}] == 2);
  CHECK(dims[{1, 1, 2, 2}] == 1);
  CHECK(dims[{1, 1, 4}] == 3);
  CHECK(dims[{1, 2, 3}] == 0);
  CHECK(dims[{1, 5}] == 4);
  CHECK(dims[{2, 2, 2}] == 2);
  CHECK(dims[{2, 4}] == 4);
  CHECK(dims[{3, 3}] == 3);
  CHECK(dims[{6}] == 5);
  // four Hilbert-function groups, with the h = (1,2,2,1) group of size 6
  REQUIRE(rep.groups.size() == 4);
  std::map<std::vector<int>, std::size_t> groups;
  for (const auto& [h, idxs] : rep.groups) groups[h.values] = idxs.size();
  CHECK(groups[{1, 2, 2, 1}] == 6);
  CHECK(groups[{1, 1, 1, 1, 1, 1}] == 2);
  CHECK(groups[{1, 2, 1, 1, 1}] == 2);
  CHECK(groups[{1, 2, 3}] == 1);
}

TEST_CASE("betti numbers and dimension vector sums") {
  CHECK(betti_numbers_punctual(6) == std::vector<long long>{1, 1, 2, 3, 3, 1});
  CHECK(betti_numbers_punctual(1) == std::vector<long long>{1});
  for (int n = 1; n <= 20; ++n) {
    DecompositionReport rep = cellular_decomposition(std::min(n, 12));
    long long total = 0;
    for (long long a : rep.a) total += a;
    CHECK(total == static_cast<long long>(partitions(rep.n).size()));
    CHECK(rep.a.back() == 1);  // the unique dense cell m = (n)
    CHECK(rep.cells.back().m.parts == std::vector<int>{rep.n});
  }
}

TEST_CASE("betti numbers of the (1,2,2,1) stratum inside n = 6") {
  // b_2 = 1, b_4 = 2, b_6 = 2, b_8 = 1 for the stratum cells of dims 1,2,2,3,3,4
  DecompositionReport rep = cellular_decomposition(6);
  std::map<int, int> by_dim;
  for (const Cell& c : rep.cells)
    if (c.hilb.values == std::vector<int>{1, 2, 2, 1}) by_dim[c.dim] += 1;
  CHECK(by_dim[1] == 1);
  CHECK(by_dim[2] == 2);
  CHECK(by_dim[3] == 2);
  CHECK(by_dim[4] == 1);
}

TEST_CASE("plausibility and fibration checks pass in the published range") {
  for (int n : {1, 2, 6, 20, 30}) {
    CHECK(plausibility_check(n).ok);
    CHECK(fibration_check(n).ok);
  }
}

TEST_CASE("one-dimensional socle stratum has cells of dimension n-1 and n-2") {
  CHECK(one_dimensional_socle_stratum(6) == std::pair<int, int>{5, 4});
  CHECK(one_dimensional_socle_stratum(2) == std::pair<int, int>{1, 0});
  CHECK(one_dimensional_socle_stratum(10) == std::pair<int, int>{9, 8});
  for (int n = 2; n <= 15; ++n) {
    // exactly two cells carry h = (1,...,1)
    int count = 0;
    for (const Partition& m : partitions(n)) {
      HilbertFunction h = hilbert_function_of_staircase(m);
      if (h.values == std::vector<int>(static_cast<std::size_t>(n), 1)) ++count;
    }
    CHECK(count == 2);
    CHECK(one_dimensional_socle_stratum(n) == std::pair<int, int>{n - 1, n - 2});
  }
}

TEST_CASE("verify_conjecture: all cells pass for small n; reports are deterministic") {
  DecompositionReport rep = verify_conjecture(5, 5, 32003, 7);
  REQUIRE(rep.verification);
  CHECK(rep.verified_ok());
  for (const auto& v : *rep.verification) {
    CHECK(v.passed == v.trials);
    CHECK(v.distinct_ok);
  }
  DecompositionReport rep2 = verify_conjecture(5, 5, 32003, 7);
  CHECK(rep2.verified_ok());

  CHECK_THROWS_AS(verify_conjecture(5, 0, 32003, 7), std::invalid_argument);
  CHECK_THROWS_AS(verify_conjecture(5, 5, 32004, 7), std::invalid_argument);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(cellular_decomposition(0), std::invalid_argument);
  CHECK_THROWS_AS(plausibility_check(0), std::invalid_argument);
  CHECK_THROWS_AS(fibration_check(-1), std::invalid_argument);
  CHECK_THROWS_AS(one_dimensional_socle_stratum(1), std::invalid_argument);
}
