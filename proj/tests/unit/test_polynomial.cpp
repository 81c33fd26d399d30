#include <doctest.h>

#include "tgkz/error.hpp"
#include "tgkz/polynomial.hpp"

using namespace tgkz;

TEST_CASE("monomial orders") {
  auto lex = MonomialOrder::lex(3);
  auto grevlex = MonomialOrder::grevlex(3);
  CHECK(lex.compare({1, 0, 0}, {0, 5, 5}) > 0);
  CHECK(grevlex.compare({1, 0, 0}, {0, 5, 5}) < 0);
  CHECK(grevlex.compare({1, 1, 0}, {2, 0, 0}) < 0);
  CHECK(grevlex.compare({0, 2, 0}, {1, 0, 1}) > 0);
  auto block = MonomialOrder::block(3, {2});
  CHECK(block.compare({0, 0, 1}, {9, 9, 0}) > 0);
  CHECK(block.compare({0, 1, 1}, {0, 0, 1}) > 0);
}

TEST_CASE("polynomial printing and parsing round trip") {
  Polynomial p = parse_polynomial("d1^2 - zeta(4)*d2", 2);
  CHECK(p.to_string() == "d1^2 - zeta(4)*d2");
  CHECK(parse_polynomial(p.to_string(), 2) == p);
  Polynomial q = parse_polynomial("(d1 + 2*d2)^2 - 4*d2^2 + 1/3", 2);
  CHECK(q.to_string() == "d1^2 + 4*d1*d2 + 1/3");
  CHECK(parse_polynomial("0", 3).is_zero());
  CHECK(parse_polynomial("-d1", 1).to_string() == "-d1");
  Polynomial c = parse_polynomial("(1 - 2*zeta(8)^3)*d1*d3^4 - 7/2", 3);
  CHECK(parse_polynomial(c.to_string(), 3) == c);
  CHECK_THROWS_AS(parse_polynomial("d4", 3), Error);
  CHECK_THROWS_AS(parse_polynomial("d1 +", 3), Error);
  CHECK_THROWS_AS(parse_polynomial("d1 / d2", 3), Error);
}

TEST_CASE("polynomial arithmetic") {
  Polynomial a = parse_polynomial("d1^2 - d2", 2);
  Polynomial b = parse_polynomial("d1^2 + d2", 2);
  CHECK((a * b).to_string() == "d1^4 - d2^2");
  CHECK((a - a).is_zero());
  CHECK((a + b).to_string() == "2*d1^2");
  Polynomial prod = Polynomial::constant(2, Cyclotomic(1));
  for (long k = 0; k < 4; ++k)
    prod = prod * Polynomial::binomial({2, 0}, {0, 1}, Cyclotomic::root_of_unity(4, k));
  CHECK(prod.to_string() == "d1^8 - d2^4");
}

TEST_CASE("embedding into larger rings") {
  Polynomial a = parse_polynomial("d1^2 - d2", 2);
  Polynomial e = a.embed(3, {2, 0});
  CHECK(e.to_string() == "d3^2 - d1");
  CHECK(parse_polynomial("d1 - d2", 3).truncate_variables(2).to_string() == "d1 - d2");
}
