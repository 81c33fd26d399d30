#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tgkz/error.hpp"
#include "tgkz/group_lattice.hpp"

using namespace tgkz;
using namespace tgkz::testing;

namespace {

void check_smith(const IntMatrix& m) {
  auto s = smith_normal_form(m);
  CHECK(s.U * m * s.V == s.D);
  CHECK(abs(determinant(s.U)) == 1);
  CHECK(abs(determinant(s.V)) == 1);
  for (std::size_t i = 0; i < s.D.rows(); ++i)
    for (std::size_t j = 0; j < s.D.cols(); ++j)
      if (i != j) CHECK(s.D(i, j) == 0);
  for (std::size_t i = 0; i + 1 < s.invariant_factors.size(); ++i)
    CHECK(s.invariant_factors[i + 1] % s.invariant_factors[i] == 0);
  for (const auto& f : s.invariant_factors) CHECK(f > 0);
}

}  // namespace

TEST_CASE("smith normal form examples") {
  auto id = smith_normal_form(IntMatrix::identity(2));
  CHECK(id.invariant_factors == std::vector<Integer>{1, 1});
  CHECK(id.D == IntMatrix::identity(2));

  auto s = smith_normal_form(IntMatrix::from_rows({{2, 4}, {6, 8}}));
  CHECK(s.invariant_factors == std::vector<Integer>{2, 4});

  auto r = smith_normal_form(IntMatrix::from_rows({{1, 2}}));
  CHECK(r.invariant_factors == std::vector<Integer>{1});

  auto z = smith_normal_form(IntMatrix(2, 3));
  CHECK(z.invariant_factors.empty());
  check_smith(IntMatrix(2, 3));
}

TEST_CASE("smith normal form identities on random matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    auto m = random_matrix(rng, dim(rng), dim(rng), 20);
    check_smith(m);
    auto s = smith_normal_form(m);
    Integer prod = 1;
    for (std::size_t k = 0; k < s.rank(); ++k) {
      prod *= s.invariant_factors[k];
      CHECK(determinantal_divisor(m.row_list(), k + 1) == prod);
    }
  }
}

TEST_CASE("hermite normal form is canonical") {
  auto h = hermite_normal_form(IntMatrix::from_rows({{4, 2}, {6, 4}, {2, 2}}));
  CHECK(h == IntMatrix::from_rows({{2, 0}, {0, 2}}));
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto m = random_matrix(rng, 3, 4, 6);
    auto u = IntMatrix::identity(3);
    u.add_row_multiple(0, 1, 3);
    u.add_row_multiple(2, 0, -2);
    u.swap_rows(1, 2);
    CHECK(hermite_normal_form(m) == hermite_normal_form(u * m));
  }
}

TEST_CASE("integer kernel") {
  CHECK(kernel_lattice_free(IntMatrix::from_rows({{1, 2}})) == IntMatrix::from_rows({{2, -1}}));
  CHECK(kernel_lattice_free(IntMatrix::from_rows({{1, 1}, {0, 2}})).rows() == 0);
  CHECK(kernel_lattice_free(IntMatrix::from_rows({{1, 1}})) == IntMatrix::from_rows({{1, -1}}));
}

TEST_CASE("group arithmetic") {
  AbelianGroup g({2, 4}, 1);
  CHECK(g.torsion_index() == 8);
  auto u = elem(g, {1, 3}, {2});
  auto v = elem(g, {1, 2}, {-5});
  CHECK(add(g, u, v) == elem(g, {0, 1}, {-3}));
  CHECK(subtract(g, add(g, u, v), v) == u);
  CHECK(elem(g, {3, -1}, {0}).torsion == std::vector<long>{1, 3});
  CHECK_THROWS_AS(AbelianGroup({1}, 1), Error);
  CHECK_THROWS_AS(AbelianGroup({2, 3}, 1), Error);
}

TEST_CASE("kernel lattice with torsion") {
  AbelianGroup z4({4}, 1);
  std::vector<GroupElement> cols{elem(z4, {1}, {1}), elem(z4, {1}, {2})};
  CHECK(kernel_lattice(cols, z4) == IntMatrix::from_rows({{8, -4}}));

  AbelianGroup z2({2}, 1);
  std::vector<GroupElement> single{elem(z2, {1}, {1})};
  CHECK(kernel_lattice(single, z2).rows() == 0);
}

TEST_CASE("kernel lattice agrees with congruence enumeration") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> t(0, 5), f(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    AbelianGroup g(trial % 2 ? std::vector<long>{2, 4} : std::vector<long>{3}, 1 + trial % 2);
    std::vector<GroupElement> cols;
    for (int j = 0; j < 3; ++j) {
      std::vector<long> tor;
      for (long o : g.torsion_orders()) tor.push_back(t(rng) % o);
      IntVector fr;
      for (std::size_t i = 0; i < g.free_rank(); ++i) fr.emplace_back(f(rng));
      cols.push_back(GroupElement::make(g, tor, fr));
    }
    auto basis = kernel_lattice(cols, g);
    for (const auto& r : basis.row_list()) CHECK(in_group_kernel(cols, g, r));
    for_each_box_vector(3, 6, [&](const IntVector& v) {
      if (in_group_kernel(cols, g, v)) CHECK(lattice_contains(basis, v));
    });
    IntMatrix a(g.free_rank(), 3);
    for (std::size_t i = 0; i < g.free_rank(); ++i)
      for (std::size_t j = 0; j < 3; ++j) a(i, j) = cols[j].free[i];
    auto free_basis = kernel_lattice_free(a);
    CHECK(free_basis.rows() == basis.rows());
    for (const auto& r : basis.row_list()) CHECK(lattice_contains(free_basis, r));
    if (basis.rows() > 0) {
      IntMatrix coords(basis.rows(), free_basis.rows());
      for (std::size_t i = 0; i < basis.rows(); ++i) {
        auto c = *lattice_coordinates(free_basis, basis.row(i));
        for (std::size_t k = 0; k < c.size(); ++k) coords(i, k) = c[k];
      }
      Integer index = abs(determinant(coords));
      Integer bound = 1;
      for (std::size_t k = 0; k < basis.rows(); ++k) bound *= g.torsion_index();
      CHECK(bound % index == 0);
    }
  }
}

TEST_CASE("lattice index") {
  AbelianGroup z2({2}, 1);
  std::vector<GroupElement> a{elem(z2, {1}, {1})};
  CHECK(lattice_index(a, z2) == Integer(2));
  std::vector<GroupElement> b{elem(z2, {0}, {2})};
  CHECK(lattice_index(b, z2) == Integer(4));
  AbelianGroup z2free({}, 2);
  std::vector<GroupElement> e{elem(z2free, {}, {1, 0}), elem(z2free, {}, {0, 1})};
  CHECK(lattice_index(e, z2free) == Integer(1));
  std::vector<GroupElement> deficient{elem(z2free, {}, {1, 1})};
  CHECK(!lattice_index(deficient, z2free).has_value());
}
