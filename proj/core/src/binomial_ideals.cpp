#include "tgkz/binomial_ideals.hpp"

#include <algorithm>

#include "tgkz/error.hpp"
#include "tgkz/linear_algebra.hpp"
#include "tgkz/parallel.hpp"

namespace tgkz {

namespace {

constexpr const char* kModule = "binomial_ideals";

Cyclotomic power_of(const Cyclotomic& c, const Integer& k) {
  if (!k.fits_slong_p()) throw Error(ErrorCode::Unsupported, kModule, "character exponent too large");
  return c.pow(k.get_si());
}

/// Integer coordinates of v in the (independent) rows of m.
IntVector coordinates_in_rows(const IntMatrix& m, const IntVector& v) {
  FieldMatrix<Rational> sys(m.cols(), std::vector<Rational>(m.rows()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) sys[j][i] = m(i, j);
  auto x = solve(sys, RationalVector(v.begin(), v.end()));
  if (!x) throw Error(ErrorCode::LatticeMismatch, kModule, "vector is not in the span of the lattice basis");
  IntVector out;
  for (const auto& q : *x) {
    if (q.get_den() != 1) throw Error(ErrorCode::LatticeMismatch, kModule, "vector is not in the lattice");
    out.push_back(q.get_num());
  }
  return out;
}

Monomial positive_part(const IntVector& m) {
  Monomial e(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) e[i] = m[i] > 0 ? static_cast<std::int32_t>(m[i].get_si()) : 0;
  return e;
}

Monomial negative_part(const IntVector& m) {
  Monomial e(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) e[i] = m[i] < 0 ? static_cast<std::int32_t>(-m[i].get_si()) : 0;
  return e;
}

Polynomial lattice_binomial(const IntVector& m, const Cyclotomic& c, const OrderPtr& order) {
  return Polynomial::binomial(positive_part(m), negative_part(m), c, order);
}

IdealBasis make_ideal(std::size_t n, std::vector<Polynomial> gens) {
  IdealBasis out;
  out.nvars = n;
  out.order = default_order(n);
  out.generators = std::move(gens);
  return out;
}

IntMatrix free_matrix_of(const PointConfig& config, const std::vector<std::size_t>& cols) {
  IntMatrix b(config.d(), config.n());
  for (auto j : cols)
    for (std::size_t i = 0; i < config.d(); ++i) b(i, j) = config.free_column(j)[i];
  // Columns outside `cols` get unit entries in extra rows so they drop out of the kernel.
  IntMatrix ext(config.d() + config.n() - cols.size(), config.n());
  for (std::size_t i = 0; i < config.d(); ++i)
    for (std::size_t j = 0; j < config.n(); ++j) ext(i, j) = b(i, j);
  std::size_t r = config.d();
  for (std::size_t j = 0; j < config.n(); ++j)
    if (std::find(cols.begin(), cols.end(), j) == cols.end()) ext(r++, j) = 1;
  return ext;
}

}  // namespace

PartialCharacter::PartialCharacter(const IntMatrix& rows, std::vector<Cyclotomic> values) {
  if (rows.rows() != values.size())
    throw Error(ErrorCode::DimensionMismatch, kModule, "one character value per lattice basis row is required");
  for (const auto& v : values)
    if (v.is_zero()) throw Error(ErrorCode::UnsupportedCharacterValue, kModule, "character values must be nonzero");
  if (rows.rows() > 0 && smith_normal_form(rows).rank() != rows.rows())
    throw Error(ErrorCode::Malformed, kModule, "lattice basis rows are dependent");
  basis_ = rows.rows() == 0 ? IntMatrix(0, rows.cols()) : hermite_normal_form(rows);
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    IntVector c = coordinates_in_rows(rows, basis_.row(i));
    Cyclotomic v(1);
    for (std::size_t k = 0; k < c.size(); ++k)
      if (c[k] != 0) v *= power_of(values[k], c[k]);
    values_.push_back(v);
  }
}

PartialCharacter PartialCharacter::trivial(const IntMatrix& rows) {
  return PartialCharacter(rows, std::vector<Cyclotomic>(rows.rows(), Cyclotomic(1)));
}

bool PartialCharacter::saturated() const {
  if (basis_.rows() == 0) return true;
  auto snf = smith_normal_form(basis_);
  return std::all_of(snf.invariant_factors.begin(), snf.invariant_factors.end(),
                     [](const Integer& f) { return f == 1; });
}

bool PartialCharacter::is_trivial() const {
  return std::all_of(values_.begin(), values_.end(), [](const Cyclotomic& c) { return c.is_one(); });
}

Cyclotomic PartialCharacter::evaluate(const IntVector& m) const {
  if (m.size() != basis_.cols()) throw Error(ErrorCode::DimensionMismatch, kModule, "vector length mismatch");
  auto c = lattice_coordinates(basis_, m);
  if (!c) throw Error(ErrorCode::LatticeMismatch, kModule, "vector is not in the character lattice");
  Cyclotomic v(1);
  for (std::size_t k = 0; k < c->size(); ++k)
    if ((*c)[k] != 0) v *= power_of(values_[k], (*c)[k]);
  return v;
}

std::string PartialCharacter::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    if (i) s += ", ";
    s += tgkz::to_string(basis_.row(i)) + " -> " + values_[i].to_string();
  }
  return s + "}";
}

Cyclotomic FullCharacter::evaluate(const IntVector& m) const {
  if (m.size() != on_unit_vectors.size()) throw Error(ErrorCode::DimensionMismatch, kModule, "vector length mismatch");
  Cyclotomic v(1);
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) v *= power_of(on_unit_vectors[i], m[i]);
  return v;
}

IdealBasis lattice_ideal(const PartialCharacter& rho) {
  const std::size_t n = rho.ambient_dim();
  OrderPtr order = default_order(n);
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < rho.basis().rows(); ++i)
    gens.push_back(lattice_binomial(rho.basis().row(i), rho.values()[i], order));
  return saturate_all_variables(make_ideal(n, std::move(gens)));
}

IdealBasis toric_ideal_IA(const PointConfig& config) {
  return lattice_ideal(PartialCharacter::trivial(kernel_lattice_free(config.A())));
}

IdealBasis toric_ideal_IcalA(const PointConfig& config) {
  return lattice_ideal(PartialCharacter::trivial(kernel_lattice(config.columns(), config.group())));
}

std::vector<IntVector> markov_basis(const PointConfig& config) {
  std::vector<IntVector> out;
  for (const auto& g : toric_ideal_IA(config).generators) {
    if (g.size() != 2 || !g.terms()[0].coeff.is_one() || !(g.terms()[1].coeff == Cyclotomic(-1)))
      throw Error(ErrorCode::InternalCheckFailed, kModule, "toric Groebner basis element is not a pure binomial");
    IntVector m(config.n());
    for (std::size_t j = 0; j < config.n(); ++j) m[j] = g.terms()[0].exponent[j] - g.terms()[1].exponent[j];
    out.push_back(m);
  }
  return out;
}

IdealBasis power_ideal(const PointConfig& config) {
  const std::size_t n = config.n();
  OrderPtr order = default_order(n);
  std::vector<Polynomial> gens;
  for (auto m : markov_basis(config)) {
    for (auto& x : m) x *= config.ell();
    gens.push_back(lattice_binomial(m, Cyclotomic(1), order));
  }
  return buchberger(gens, n, order);
}

IdealBasis twisted_ideal(const PointConfig& config, const PartialCharacter& rho) {
  IntMatrix ker = kernel_lattice_free(config.A());
  if (rho.ambient_dim() != config.n() || !(rho.basis() == ker))
    throw Error(ErrorCode::LatticeMismatch, kModule, "character lattice differs from ker A");
  return lattice_ideal(rho);
}

PartialCharacter restrict_to_face(const PointConfig& config, const Face& face, const PartialCharacter& rho) {
  IntMatrix ker = integer_kernel(free_matrix_of(config, face.column_indices));
  std::vector<Cyclotomic> values;
  for (std::size_t i = 0; i < ker.rows(); ++i) values.push_back(rho.evaluate(ker.row(i)));
  return PartialCharacter(ker, values);
}

IdealBasis face_ideal_from_face_character(const PointConfig& config, const Face& face, const PartialCharacter& face_rho) {
  const std::size_t n = config.n();
  IntMatrix ker = integer_kernel(free_matrix_of(config, face.column_indices));
  if (face_rho.ambient_dim() != n || !(face_rho.basis() == ker))
    throw Error(ErrorCode::LatticeMismatch, kModule, "character lattice differs from the face kernel");
  OrderPtr order = default_order(n);
  std::vector<Polynomial> binomials;
  for (std::size_t i = 0; i < ker.rows(); ++i)
    binomials.push_back(lattice_binomial(ker.row(i), face_rho.values()[i], order));
  IdealBasis sat = saturate_wrt_variables(make_ideal(n, binomials), face.column_indices);
  std::vector<Polynomial> gens = sat.generators;
  for (std::size_t j = 0; j < n; ++j)
    if (std::find(face.column_indices.begin(), face.column_indices.end(), j) == face.column_indices.end())
      gens.push_back(Polynomial::variable(n, j, order));
  return buchberger(gens, n, order);
}

IdealBasis face_twisted_ideal(const PointConfig& config, const Face& face, const PartialCharacter& rho) {
  return face_ideal_from_face_character(config, face, restrict_to_face(config, face, rho));
}

FullCharacter extend_character(const PartialCharacter& rho) {
  if (!rho.saturated()) throw Error(ErrorCode::NotSaturated, kModule, "character lattice is not saturated");
  const std::size_t n = rho.ambient_dim();
  const std::size_t r = rho.basis().rows();
  FullCharacter out;
  if (r == 0) {
    out.on_unit_vectors.assign(n, Cyclotomic(1));
    return out;
  }
  // U B V = [I 0]; the first r rows of W = V^{-1} are U B, the rest span a complement.
  auto snf = smith_normal_form(rho.basis());
  std::vector<Cyclotomic> on_w(r, Cyclotomic(1));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k)
      if (snf.U(i, k) != 0) on_w[i] *= power_of(rho.values()[k], snf.U(i, k));
  for (std::size_t m = 0; m < n; ++m) {
    Cyclotomic v(1);
    for (std::size_t i = 0; i < r; ++i)
      if (snf.V(m, i) != 0) v *= power_of(on_w[i], snf.V(m, i));
    out.on_unit_vectors.push_back(v);
  }
  for (std::size_t i = 0; i < r; ++i)
    if (!(out.evaluate(rho.basis().row(i)) == rho.values()[i]))
      throw Error(ErrorCode::InternalCheckFailed, kModule, "extended character disagrees on the lattice");
  return out;
}

Polynomial twist_automorphism(const Polynomial& f, const FullCharacter& rho) {
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    IntVector u(t.exponent.begin(), t.exponent.end());
    terms.push_back(Term{t.exponent, t.coeff * rho.evaluate(u)});
  }
  return Polynomial::from_terms(f.nvars(), std::move(terms), f.order());
}

IdealBasis twist_automorphism(const IdealBasis& ideal, const FullCharacter& rho) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators) gens.push_back(twist_automorphism(g, rho));
  return buchberger(gens, ideal.nvars, ideal.order);
}

std::vector<MinimalPrime> minimal_primes_IcalA(const PointConfig& config, unsigned threads) {
  IntMatrix ker_a = kernel_lattice_free(config.A());
  IntMatrix ker_cal = kernel_lattice(config.columns(), config.group());
  const std::size_t r = ker_a.rows();
  if (r == 0) {
    PartialCharacter rho = PartialCharacter::trivial(ker_a);
    return {MinimalPrime{rho, lattice_ideal(rho)}};
  }
  IntMatrix c(ker_cal.rows(), r);
  for (std::size_t i = 0; i < ker_cal.rows(); ++i) {
    IntVector coords = coordinates_in_rows(ker_a, ker_cal.row(i));
    for (std::size_t k = 0; k < r; ++k) c(i, k) = coords[k];
  }
  // U C V = D; characters of Z^r / rowspan(C) send W_i = (V^{-1})_i to D_i-th roots of unity.
  auto snf = smith_normal_form(c);
  std::vector<long> orders(r);
  for (std::size_t i = 0; i < r; ++i) {
    if (i >= snf.rank()) throw Error(ErrorCode::InternalCheckFailed, kModule, "ker(cal A) has smaller rank than ker A");
    orders[i] = snf.D(i, i).get_si();
  }
  std::vector<std::vector<long>> tuples;
  std::vector<long> k(r, 0);
  for (;;) {
    tuples.push_back(k);
    std::size_t i = 0;
    while (i < r && k[i] + 1 == orders[i]) k[i++] = 0;
    if (i == r) break;
    ++k[i];
  }
  return parallel_map(tuples.size(), threads, [&](std::size_t t) {
    std::vector<Cyclotomic> values;
    for (std::size_t m = 0; m < r; ++m) {
      Cyclotomic v(1);
      for (std::size_t i = 0; i < r; ++i) {
        if (snf.V(m, i) == 0 || tuples[t][i] == 0) continue;
        Integer e = snf.V(m, i) * tuples[t][i];
        v *= Cyclotomic::root_of_unity(static_cast<std::uint32_t>(orders[i]), mod_floor(e, orders[i]).get_si());
      }
      values.push_back(v);
    }
    PartialCharacter rho(ker_a, values);
    return MinimalPrime{rho, lattice_ideal(rho)};
  });
}

bool verify_prime_intersection(const PointConfig& config, const std::vector<MinimalPrime>& primes) {
  std::vector<IdealBasis> ideals;
  for (const auto& p : primes) ideals.push_back(p.ideal);
  return ideal_equal(ideal_intersect(ideals), toric_ideal_IcalA(config));
}

bool is_A_graded(const Polynomial& f, const PointConfig& config) {
  if (f.nvars() != config.n()) throw Error(ErrorCode::DimensionMismatch, kModule, "polynomial ring differs from config");
  std::optional<IntVector> degree;
  for (const auto& t : f.terms()) {
    IntVector deg(config.d());
    for (std::size_t j = 0; j < config.n(); ++j)
      for (std::size_t i = 0; i < config.d(); ++i) deg[i] += config.free_column(j)[i] * t.exponent[j];
    if (!degree) degree = deg;
    else if (*degree != deg) return false;
  }
  return true;
}

Classification classify_graded_binomial_prime(const IdealBasis& ideal, const PointConfig& config) {
  for (const auto& g : ideal.generators)
    if (!is_A_graded(g, config))
      return NotOfForm{ErrorCode::NotGraded, "generator " + g.to_string() + " is not A-homogeneous"};
  IdealBasis gb = groebner(ideal);
  if (gb.is_unit_ideal()) return NotOfForm{ErrorCode::Unsupported, "unit ideal"};
  const std::size_t n = config.n();
  std::vector<std::size_t> face_cols;
  for (std::size_t j = 0; j < n; ++j)
    if (!ideal_member(Polynomial::variable(n, j, gb.order), gb)) face_cols.push_back(j);
  std::optional<Face> face;
  for (auto& f : face_lattice(config))
    if (f.column_indices == face_cols) face = f;
  if (!face) return NotOfForm{ErrorCode::Unsupported, "variables in the ideal do not cut out a face"};

  IntMatrix ker = integer_kernel(free_matrix_of(config, face->column_indices));
  std::vector<Cyclotomic> values;
  for (std::size_t i = 0; i < ker.rows(); ++i) {
    IntVector m = ker.row(i);
    Polynomial plus = normal_form(Polynomial::monomial(positive_part(m), Cyclotomic(1), gb.order), gb.generators);
    Polynomial minus = normal_form(Polynomial::monomial(negative_part(m), Cyclotomic(1), gb.order), gb.generators);
    if (minus.is_zero() || plus.is_zero()) return NotOfForm{ErrorCode::Unsupported, "face monomial lies in the ideal"};
    Cyclotomic c = plus.leading_coeff() / minus.leading_coeff();
    if (!(plus - minus.scaled(c)).is_zero())
      return NotOfForm{ErrorCode::Unsupported, "no twisted binomial for kernel vector " + to_string(m)};
    values.push_back(c);
  }
  PartialCharacter rho(ker, values);
  if (!ideal_equal(gb, face_ideal_from_face_character(config, *face, rho)))
    return NotOfForm{ErrorCode::Unsupported, "ideal is strictly larger than the recovered I^tau_{A,rho}"};
  return ClassifiedPrime{*face, rho};
}

}  // namespace tgkz
