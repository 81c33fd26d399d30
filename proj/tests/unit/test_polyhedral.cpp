#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "tgkz/error.hpp"
#include "tgkz/polyhedral.hpp"

using namespace tgkz;
using namespace tgkz::testing;

namespace {

PointConfig free_config(std::vector<IntVector> cols) {
  AbelianGroup g({}, cols.front().size());
  std::vector<GroupElement> els;
  for (auto& c : cols) els.push_back(GroupElement({}, c));
  return PointConfig(g, els);
}

std::vector<IntVector> normals_of(const std::vector<Functional>& fs) {
  std::vector<IntVector> out;
  for (const auto& f : fs) {
    IntVector v;
    for (const auto& q : f.free_part) v.push_back(q.get_num());
    out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("facet examples") {
  CHECK(normals_of(facets(free_config({ivec({1, 0}), ivec({1, 2})}))) ==
        std::vector<IntVector>{ivec({0, 1}), ivec({2, -1})});
  CHECK(normals_of(facets(free_config({ivec({1})}))) == std::vector<IntVector>{ivec({1})});
  CHECK(normals_of(facets(free_config({ivec({1, 0}), ivec({1, 1}), ivec({1, 2})}))) ==
        std::vector<IntVector>{ivec({0, 1}), ivec({2, -1})});
  AbelianGroup z2({2}, 1);
  CHECK_THROWS_AS(facets(PointConfig(z2, {elem(z2, {1}, {0})})), Error);
}

TEST_CASE("facets agree with brute-force normal scan") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<long> entry(-2, 4);
  int checked = 0;
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t d = 1 + trial % 3;
    std::vector<IntVector> cols;
    for (int j = 0; j < 4; ++j) {
      IntVector c;
      for (std::size_t i = 0; i < d; ++i) c.emplace_back(entry(rng));
      cols.push_back(c);
    }
    auto config = free_config(cols);
    std::vector<IntVector> nonzero;
    for (auto& c : cols)
      if (std::any_of(c.begin(), c.end(), [](const Integer& x) { return x != 0; })) nonzero.push_back(c);
    if (nonzero.empty() || smith_normal_form(IntMatrix::from_rows(nonzero, d)).rank() < d) continue;
    if (!is_pointed(config)) continue;
    CHECK(facet_normals(config) == brute_force_facets(nonzero, d, minor_bound(nonzero, d)));
    ++checked;
  }
  CHECK(checked > 30);
}

TEST_CASE("pointedness") {
  CHECK(is_pointed(free_config({ivec({1}), ivec({2})})));
  CHECK(!is_pointed(free_config({ivec({1}), ivec({-1})})));
  CHECK(is_pointed(free_config({ivec({1, 0}), ivec({1, 2})})));
  CHECK(!is_pointed(free_config({ivec({1, 0}), ivec({-1, 0}), ivec({0, 1})})));
  CHECK(is_pointed(free_config({ivec({1, 1})})));
  auto h = positive_functional(free_config({ivec({1, 0}), ivec({1, 2})}));
  for (const auto& c : {ivec({1, 0}), ivec({1, 2})}) CHECK(h[0] * c[0] + h[1] * c[1] > 0);
}

TEST_CASE("face lattice") {
  auto line = face_lattice(free_config({ivec({1}), ivec({2})}));
  REQUIRE(line.size() == 2);
  CHECK(line[0].column_indices.empty());
  CHECK(line[1].column_indices == std::vector<std::size_t>{0, 1});

  auto square = face_lattice(free_config({ivec({1, 0}), ivec({1, 1}), ivec({1, 2})}));
  REQUIRE(square.size() == 4);
  CHECK(square[0].column_indices.empty());
  CHECK(square[0].dim == 0);
  CHECK(square[1].column_indices == std::vector<std::size_t>{0});
  CHECK(square[2].column_indices == std::vector<std::size_t>{2});
  CHECK(square[3].column_indices == std::vector<std::size_t>{0, 1, 2});
  CHECK(square[3].dim == 2);
  CHECK_THROWS_AS(face_lattice(free_config({ivec({1}), ivec({-1})})), Error);

  auto cube = face_lattice(free_config({ivec({1, 0, 0}), ivec({1, 1, 0}), ivec({1, 0, 1}), ivec({1, 1, 1})}));
  CHECK(cube.size() == 10);
  for (const auto& f : cube)
    for (const auto& g : cube) {
      std::vector<std::size_t> meet;
      std::set_intersection(f.column_indices.begin(), f.column_indices.end(), g.column_indices.begin(),
                            g.column_indices.end(), std::back_inserter(meet));
      CHECK(std::any_of(cube.begin(), cube.end(), [&](const Face& h) { return h.column_indices == meet; }));
    }
}

TEST_CASE("normalized volume examples") {
  CHECK(normalized_volume(free_config({ivec({1})})) == 1);
  CHECK(normalized_volume(free_config({ivec({1}), ivec({2})})) == 2);
  CHECK(normalized_volume(free_config({ivec({1, 0}), ivec({1, 2})})) == 2);
  CHECK(normalized_volume(free_config({ivec({1, 0}), ivec({1, 1}), ivec({1, 2})})) == 2);
  CHECK(normalized_volume(free_config({ivec({1, 1})})) == 0);
  CHECK(normalized_volume(free_config({ivec({1, 0, 0}), ivec({0, 1, 0}), ivec({0, 0, 1}), ivec({1, 1, 1})})) == 3);
}

TEST_CASE("normalized volume matches hull oracle and is invariant") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<long> entry(-3, 4);
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<IntVector> cols;
    for (int j = 0; j < 5; ++j) cols.push_back(ivec({entry(rng), entry(rng)}));
    Integer vol = normalized_volume(free_config(cols));
    CHECK(vol == hull_area_oracle(cols));
    auto shuffled = cols;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(normalized_volume(free_config(shuffled)) == vol);
  }
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<IntVector> cols;
    for (int j = 0; j < 5; ++j) cols.push_back(ivec({entry(rng), entry(rng), entry(rng)}));
    Integer vol = normalized_volume(free_config(cols));
    IntMatrix u = IntMatrix::identity(3);
    u.add_row_multiple(0, 1, entry(rng));
    u.add_row_multiple(2, 0, entry(rng));
    u.add_row_multiple(1, 2, entry(rng));
    std::vector<IntVector> moved;
    for (auto& c : cols) moved.push_back(u * c);
    std::shuffle(moved.begin(), moved.end(), rng);
    CHECK(normalized_volume(free_config(moved)) == vol);
  }
}

TEST_CASE("epsilon and homogenizing functional") {
  AbelianGroup z2({2}, 1);
  CHECK(epsilon_A(PointConfig(z2, {elem(z2, {1}, {1}), elem(z2, {1}, {2})})) == ivec({3}));
  CHECK(epsilon_A(free_config({ivec({1, 0}), ivec({1, 0}), ivec({1, 2})})) == ivec({3, 2}));
  auto h = homogenizing_functional(free_config({ivec({1, 0}), ivec({1, 2})}));
  REQUIRE(h.has_value());
  CHECK(h->free_part == RationalVector{1, 0});
  CHECK(!homogenizing_functional(free_config({ivec({1}), ivec({2})})).has_value());
  CHECK(homogenizing_functional(free_config({ivec({1})}))->free_part == RationalVector{1});
}

TEST_CASE("arrangement membership") {
  auto plane = free_config({ivec({1, 0}), ivec({1, 2})});
  Arrangement full{{AffineSubspace{{0, 0}, {0, 1}}}};
  CHECK(membership_in_arrangement({Cyclotomic(0), Cyclotomic(0)}, full, plane));
  auto line = free_config({ivec({1})});
  Arrangement point{{AffineSubspace{{0}, {}}}};
  CHECK(!membership_in_arrangement({Cyclotomic(5)}, point, line));
  CHECK(membership_in_arrangement({Cyclotomic(0)}, point, line));
  Arrangement rays{{AffineSubspace{{0, 0}, {0}}, AffineSubspace{{0, 0}, {1}}}};
  CHECK(membership_in_arrangement({Cyclotomic(1), Cyclotomic(2)}, rays, plane));
  CHECK(!membership_in_arrangement({Cyclotomic(1), Cyclotomic(1)}, rays, plane));
  Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
  CHECK(membership_in_arrangement({i, i * Cyclotomic(2)}, rays, plane));
  CHECK(!membership_in_arrangement({i, Cyclotomic(2)}, rays, plane));
}

TEST_CASE("hypotheses") {
  AbelianGroup z2({2}, 1);
  auto r = check_hypotheses(PointConfig(z2, {elem(z2, {1}, {1})}));
  CHECK(r.spans);
  CHECK(r.pointed);
  CHECK(r.delta_divides_ell);
  CHECK(r.delta == Integer(2));
  CHECK(r.ell == 2);
  CHECK(!check_hypotheses(free_config({ivec({1}), ivec({-1})})).pointed);
  CHECK(!check_hypotheses(free_config({ivec({2, 0}), ivec({0, 2})})).spans);
}
