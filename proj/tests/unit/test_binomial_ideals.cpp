#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "tgkz/binomial_ideals.hpp"
#include "tgkz/error.hpp"

using namespace tgkz;
using namespace tgkz::testing;

namespace {

PointConfig free_config(std::vector<IntVector> cols) {
  AbelianGroup g({}, cols.front().size());
  std::vector<GroupElement> els;
  for (auto& c : cols) els.push_back(GroupElement({}, c));
  return PointConfig(g, els);
}

PointConfig z4_config() {
  AbelianGroup g({4}, 1);
  return PointConfig(g, {elem(g, {1}, {1}), elem(g, {1}, {2})});
}

PointConfig prod_struct() {
  AbelianGroup g({2}, 1);
  return PointConfig(g, {elem(g, {1}, {1})});
}

IdealBasis ideal(std::initializer_list<const char*> gens, std::size_t n) {
  IdealBasis out;
  out.nvars = n;
  out.order = default_order(n);
  for (auto g : gens) out.generators.push_back(parse_polynomial(g, n, "d", out.order));
  return out;
}

const Cyclotomic kI = Cyclotomic::root_of_unity(4, 1);

}  // namespace

TEST_CASE("toric ideals") {
  CHECK(toric_ideal_IA(free_config({ivec({1}), ivec({2})})).to_string() == "(d1^2 - d2)");
  CHECK(toric_ideal_IA(free_config({ivec({1, 0}), ivec({1, 2})})).to_string() == "(0)");
  CHECK(toric_ideal_IA(free_config({ivec({1}), ivec({1})})).to_string() == "(d1 - d2)");
  CHECK(toric_ideal_IcalA(z4_config()).to_string() == "(d1^8 - d2^4)");
  CHECK(toric_ideal_IcalA(prod_struct()).to_string() == "(0)");
  auto twisted_cube = free_config({ivec({1, 0}), ivec({1, 1}), ivec({1, 2}), ivec({1, 3})});
  CHECK(ideal_equal(toric_ideal_IcalA(twisted_cube), toric_ideal_IA(twisted_cube)));
  CHECK(toric_ideal_IA(twisted_cube).generators.size() == 3);
}

TEST_CASE("power ideal") {
  CHECK(power_ideal(z4_config()).to_string() == "(d1^8 - d2^4)");
  auto a = free_config({ivec({1}), ivec({2})});
  CHECK(ideal_equal(power_ideal(a), toric_ideal_IA(a)));
  CHECK(power_ideal(prod_struct()).to_string() == "(0)");
}

TEST_CASE("twisted ideals") {
  auto a = free_config({ivec({1}), ivec({2})});
  IntMatrix ker = IntMatrix::from_rows({{2, -1}});
  CHECK(twisted_ideal(a, PartialCharacter::trivial(ker)).to_string() == "(d1^2 - d2)");
  CHECK(twisted_ideal(a, PartialCharacter(ker, {kI})).to_string() == "(d1^2 - zeta(4)*d2)");
  auto b = free_config({ivec({1}), ivec({1})});
  CHECK(twisted_ideal(b, PartialCharacter(IntMatrix::from_rows({{1, -1}}), {Cyclotomic(-1)})).to_string() ==
        "(d1 + d2)");
  CHECK_THROWS_AS(twisted_ideal(a, PartialCharacter::trivial(IntMatrix::from_rows({{4, -2}}))), Error);
}

TEST_CASE("face twisted ideals") {
  auto a = free_config({ivec({1}), ivec({2})});
  PartialCharacter rho(IntMatrix::from_rows({{2, -1}}), {kI});
  auto faces = face_lattice(a);
  REQUIRE(faces.size() == 2);
  CHECK(ideal_equal(face_twisted_ideal(a, faces[1], rho), twisted_ideal(a, rho)));
  CHECK(face_twisted_ideal(a, faces[0], rho).to_string() == "(d2, d1)");
  auto plane = free_config({ivec({1, 0}), ivec({1, 1}), ivec({1, 2})});
  auto pf = face_lattice(plane);
  PartialCharacter triv = PartialCharacter::trivial(kernel_lattice_free(plane.A()));
  CHECK(face_twisted_ideal(plane, pf[1], triv).to_string() == "(d3, d2)");
  Face ray1{{0}, {}, 1};
  auto single = free_config({ivec({1}), ivec({2})});
  CHECK(face_twisted_ideal(single, ray1, rho).to_string() == "(d2)");
}

TEST_CASE("character extension and twist") {
  IntMatrix ker = IntMatrix::from_rows({{2, -1}});
  PartialCharacter triv = PartialCharacter::trivial(ker);
  auto t = extend_character(triv);
  CHECK(t.on_unit_vectors == std::vector<Cyclotomic>{Cyclotomic(1), Cyclotomic(1)});

  PartialCharacter rho(ker, {kI});
  auto ext = extend_character(rho);
  CHECK(ext.evaluate(ivec({2, -1})) == kI);
  auto a = free_config({ivec({1}), ivec({2})});
  CHECK(ideal_equal(twist_automorphism(twisted_ideal(a, rho), ext), toric_ideal_IA(a)));

  FullCharacter zeta8{{Cyclotomic::root_of_unity(8, 1), Cyclotomic(1)}};
  CHECK(zeta8.evaluate(ivec({2, -1})) == kI);
  Polynomial f = parse_polynomial("d1^2 - zeta(4)*d2", 2);
  Polynomial g = twist_automorphism(f, zeta8);
  CHECK(g.monic() == parse_polynomial("d1^2 - d2", 2));

  CHECK_THROWS_AS(extend_character(PartialCharacter::trivial(IntMatrix::from_rows({{4, -2}}))), Error);
}

TEST_CASE("twist carries I_{A,rho} to I_A for saturated characters") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<long> root(0, 11);
  auto a = free_config({ivec({1, 0}), ivec({1, 1}), ivec({1, 2}), ivec({1, 3})});
  IntMatrix ker = kernel_lattice_free(a.A());
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<Cyclotomic> vals;
    for (std::size_t i = 0; i < ker.rows(); ++i) vals.push_back(Cyclotomic::root_of_unity(12, root(rng)));
    PartialCharacter rho(ker, vals);
    CHECK(ideal_equal(twist_automorphism(twisted_ideal(a, rho), extend_character(rho)), toric_ideal_IA(a)));
  }
}

TEST_CASE("minimal primes of the torsion example") {
  auto config = z4_config();
  auto primes = minimal_primes_IcalA(config);
  REQUIRE(primes.size() == 4);
  std::set<std::string> got, want;
  for (const auto& p : primes) got.insert(p.ideal.to_string());
  for (long k = 0; k < 4; ++k)
    want.insert("(" + Polynomial::binomial({2, 0}, {0, 1}, Cyclotomic::root_of_unity(4, k)).to_string() + ")");
  CHECK(got == want);
  CHECK(verify_prime_intersection(config, primes));
  CHECK(minimal_primes_IcalA(prod_struct()).size() == 1);
  CHECK(minimal_primes_IcalA(prod_struct())[0].ideal.to_string() == "(0)");
  auto tf = free_config({ivec({1}), ivec({2})});
  REQUIRE(minimal_primes_IcalA(tf).size() == 1);
  CHECK(ideal_equal(minimal_primes_IcalA(tf)[0].ideal, toric_ideal_IA(tf)));
  auto threaded = minimal_primes_IcalA(config, 4);
  for (std::size_t i = 0; i < primes.size(); ++i) CHECK(threaded[i].ideal.to_string() == primes[i].ideal.to_string());
}

TEST_CASE("ideal containments and prime intersections on random torsion configs") {
  std::mt19937 rng(43);
  std::uniform_int_distribution<long> entry(1, 3), tor(0, 5);
  std::vector<std::vector<long>> torsions{{2}, {3}, {4}, {6}, {2, 2}};
  int checked = 0;
  for (int trial = 0; trial < 14; ++trial) {
    AbelianGroup g(torsions[trial % torsions.size()], 1);
    std::vector<GroupElement> cols;
    std::size_t n = 2 + trial % 2;
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<long> t;
      for (long o : g.torsion_orders()) t.push_back(tor(rng) % o);
      cols.push_back(GroupElement::make(g, t, ivec({entry(rng)})));
    }
    PointConfig config(g, cols);
    auto ia = toric_ideal_IA(config);
    auto ical = toric_ideal_IcalA(config);
    auto pow = power_ideal(config);
    CHECK(ideal_contains(ia, ical));
    CHECK(ideal_contains(ical, pow));
    auto primes = minimal_primes_IcalA(config);
    CHECK(verify_prime_intersection(config, primes));
    ++checked;
  }
  CHECK(checked == 14);
}

TEST_CASE("power ideal contains dilated fiber moves") {
  AbelianGroup g({3}, 2);
  PointConfig config(g, {elem(g, {1}, {1, 0}), elem(g, {0}, {1, 1}), elem(g, {2}, {1, 2}), elem(g, {1}, {1, 3})});
  auto pow = power_ideal(config);
  std::vector<Monomial> box;
  for (int k = 0; k < 81; ++k) box.push_back({k % 3, k / 3 % 3, k / 9 % 3, k / 27});
  int found = 0;
  for (std::size_t a = 0; a < box.size() && found < 15; ++a)
    for (std::size_t b = a + 1; b < box.size() && found < 15; ++b) {
    const Monomial& u = box[a];
    const Monomial& v = box[b];
    bool same = true;
    for (std::size_t i = 0; i < 2; ++i) {
      Integer du = 0, dv = 0;
      for (std::size_t j = 0; j < 4; ++j) {
        du += config.free_column(j)[i] * u[j];
        dv += config.free_column(j)[i] * v[j];
      }
      if (du != dv) same = false;
    }
    if (!same) continue;
    Monomial lu = u, lv = v;
    for (auto& x : lu) x *= 3;
    for (auto& x : lv) x *= 3;
    CHECK(ideal_member(Polynomial::binomial(lu, lv), pow));
    ++found;
  }
  CHECK(found >= 5);
}

TEST_CASE("classification of graded binomial primes") {
  auto a = free_config({ivec({1}), ivec({2})});
  auto all = classify_graded_binomial_prime(ideal({"d1", "d2"}, 2), a);
  REQUIRE(std::holds_alternative<ClassifiedPrime>(all));
  CHECK(std::get<ClassifiedPrime>(all).face.column_indices.empty());
  CHECK(std::get<ClassifiedPrime>(all).rho.is_trivial());

  auto tw = classify_graded_binomial_prime(ideal({"d1^2 - zeta(4)*d2"}, 2), a);
  REQUIRE(std::holds_alternative<ClassifiedPrime>(tw));
  const auto& c = std::get<ClassifiedPrime>(tw);
  CHECK(c.face.column_indices == std::vector<std::size_t>{0, 1});
  CHECK(c.rho.evaluate(ivec({2, -1})) == kI);

  auto bad = classify_graded_binomial_prime(ideal({"d1 - d2"}, 2), a);
  REQUIRE(std::holds_alternative<NotOfForm>(bad));
  CHECK(std::get<NotOfForm>(bad).reason == ErrorCode::NotGraded);

  auto not_prime = classify_graded_binomial_prime(ideal({"d1^4 - d2^2"}, 2), a);
  CHECK(std::holds_alternative<NotOfForm>(not_prime));
}

TEST_CASE("classification round trips every face and character") {
  auto config = free_config({ivec({1, 0}), ivec({1, 1}), ivec({1, 2}), ivec({1, 3})});
  IntMatrix ker = kernel_lattice_free(config.A());
  std::vector<Cyclotomic> vals{Cyclotomic::root_of_unity(3, 1), Cyclotomic(-1)};
  PartialCharacter rho(ker, vals);
  for (const auto& face : face_lattice(config)) {
    auto face_rho = restrict_to_face(config, face, rho);
    auto built = face_ideal_from_face_character(config, face, face_rho);
    auto cls = classify_graded_binomial_prime(built, config);
    REQUIRE(std::holds_alternative<ClassifiedPrime>(cls));
    const auto& got = std::get<ClassifiedPrime>(cls);
    CHECK(got.face.column_indices == face.column_indices);
    CHECK(got.rho.basis() == face_rho.basis());
    CHECK(got.rho.values() == face_rho.values());
  }
}
