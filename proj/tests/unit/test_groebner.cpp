#include <doctest.h>

#include <algorithm>
#include <random>

#include "tgkz/groebner.hpp"

using namespace tgkz;

namespace {

IdealBasis ideal(std::initializer_list<const char*> gens, std::size_t n, OrderPtr order = nullptr) {
  IdealBasis out;
  out.nvars = n;
  out.order = order ? order : default_order(n);
  for (const char* g : gens) out.generators.push_back(parse_polynomial(g, n, "d", out.order));
  return out;
}

}  // namespace

TEST_CASE("buchberger examples") {
  auto lex = make_order(MonomialOrder::lex(2));
  auto single = groebner(ideal({"d1^2 - d2"}, 2, lex));
  CHECK(single.to_string() == "(d1^2 - d2)");
  auto two = groebner(ideal({"d1^2 - d2", "d2"}, 2, lex));
  CHECK(two.to_string() == "(d2, d1^2)");
  auto twisted = groebner(ideal({"d1^2 - zeta(4)*d2", "d1^2 + zeta(4)*d2"}, 2, lex));
  CHECK(twisted.to_string() == "(d2, d1^2)");
  CHECK(groebner(ideal({"d1 - 1", "d1"}, 1)).is_unit_ideal());
}

TEST_CASE("reduced basis is independent of generator order") {
  std::vector<const char*> gens{"d1^2*d2 - d3^2", "d2^3 - d1*d3", "d1*d3 - d2^2 + d1", "d3^3 - d1*d2"};
  std::vector<Polynomial> polys;
  for (auto g : gens) polys.push_back(parse_polynomial(g, 3));
  auto ref = buchberger(polys, 3);
  CHECK(is_groebner_basis(ref.generators));
  for (std::size_t i = 0; i < ref.generators.size(); ++i)
    for (std::size_t j = 0; j < ref.generators.size(); ++j)
      if (i != j) CHECK(!divides(ref.generators[i].leading_monomial(), ref.generators[j].leading_monomial()));
  std::mt19937 rng(5);
  for (int trial = 0; trial < 6; ++trial) {
    std::shuffle(polys.begin(), polys.end(), rng);
    auto gb = buchberger(polys, 3);
    REQUIRE(gb.generators.size() == ref.generators.size());
    for (std::size_t k = 0; k < gb.generators.size(); ++k) CHECK(gb.generators[k] == ref.generators[k]);
  }
}

TEST_CASE("saturation") {
  CHECK(saturate_all_variables(ideal({"d1^2 - d2"}, 2)).to_string() == "(d1^2 - d2)");
  auto sat = saturate_wrt_variables(ideal({"d1*(d1 - d2)"}, 2), {0});
  CHECK(sat.to_string() == "(d1 - d2)");
  CHECK(saturate_all_variables(ideal({"d1^8 - d2^4"}, 2)).to_string() == "(d1^8 - d2^4)");
  auto lattice = saturate_all_variables(ideal({"d1*d4 - d2*d3", "d1*d3 - d2^2"}, 4));
  CHECK(ideal_member(parse_polynomial("d2*d4 - d3^2", 4), lattice));
}

TEST_CASE("intersection, membership and equality") {
  auto i = ideal({"d1^2 - d2"}, 2);
  auto j = ideal({"d1^2 + d2"}, 2);
  CHECK(ideal_intersect(i, j).to_string() == "(d1^4 - d2^2)");
  CHECK(ideal_member(parse_polynomial("d1^4 - d2^2", 2), i));
  CHECK(!ideal_member(parse_polynomial("d1^2 + d2", 2), i));
  CHECK(ideal_equal(i, i));
  CHECK(!ideal_equal(i, j));
}

TEST_CASE("random combinations are members") {
  auto i = ideal({"d1^2 - d2*d3", "d2^2 - zeta(3)*d1*d3"}, 3);
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> coef(-3, 3), expo(0, 2);
  for (int trial = 0; trial < 20; ++trial) {
    Polynomial f(3);
    for (const auto& g : i.generators) {
      Polynomial m(3);
      for (int t = 0; t < 3; ++t)
        m += Polynomial::monomial({expo(rng), expo(rng), expo(rng)}, Cyclotomic(coef(rng)));
      f += m * g;
    }
    CHECK(ideal_member(f, i));
  }
}

TEST_CASE("intersection matches membership in both ideals") {
  auto i = ideal({"d1^2 - d2", "d3"}, 3);
  auto j = ideal({"d1 - d3^2"}, 3);
  auto both = ideal_intersect(i, j);
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> coef(-2, 2), expo(0, 2);
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial g(3);
    for (int t = 0; t < 3; ++t)
      g += Polynomial::monomial({expo(rng), expo(rng), expo(rng)}, Cyclotomic(coef(rng)));
    if (trial % 3 == 0) g = g * parse_polynomial("(d1^2 - d2)*(d1 - d3^2)", 3);
    CHECK(ideal_member(g, both) == (ideal_member(g, i) && ideal_member(g, j)));
  }
}
