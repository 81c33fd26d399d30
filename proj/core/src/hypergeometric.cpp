#include "tgkz/hypergeometric.hpp"

#include <algorithm>
#include <map>

#include "tgkz/error.hpp"

namespace tgkz {

namespace {

constexpr const char* kModule = "hypergeometric_systems";

void enumerate_monomials(std::size_t n, int bound, Monomial& current, std::size_t pos, int used,
                         std::vector<Monomial>& out) {
  if (pos == n) {
    out.push_back(current);
    return;
  }
  for (int e = 0; e + used <= bound; ++e) {
    current[pos] = e;
    enumerate_monomials(n, bound, current, pos + 1, used + e, out);
  }
  current[pos] = 0;
}

/// Monomials of total degree <= bound, by increasing degree.
std::vector<Monomial> monomials_up_to(std::size_t n, int bound) {
  std::vector<Monomial> out;
  Monomial cur(n, 0);
  enumerate_monomials(n, bound, cur, 0, 0, out);
  std::stable_sort(out.begin(), out.end(),
                   [](const Monomial& a, const Monomial& b) { return total_degree(a) < total_degree(b); });
  return out;
}

GroupElement monomial_degree(const PointConfig& config, const Monomial& u) {
  GroupElement acc = GroupElement::zero(config.group());
  for (std::size_t j = 0; j < u.size(); ++j)
    if (u[j] != 0) acc = add(config.group(), acc, scale(config.group(), config.column(j), u[j]));
  return acc;
}

Relation relation_from_module_element(const Polynomial& f, std::size_t n) {
  Relation rel{RelationKind::Binomial, {}};
  for (const auto& t : f.terms()) {
    std::size_t gen = 0;
    for (std::size_t k = n; k < t.exponent.size(); ++k)
      if (t.exponent[k] == 1) gen = k - n;
    Monomial dpart(t.exponent.begin(), t.exponent.begin() + static_cast<std::ptrdiff_t>(n));
    WeylElement op = WeylElement::term(Monomial(n, 0), dpart, t.coeff);
    auto it = std::find_if(rel.terms.begin(), rel.terms.end(), [&](const RelationTerm& r) { return r.generator == gen; });
    if (it == rel.terms.end())
      rel.terms.push_back(RelationTerm{gen, op});
    else
      it->op += op;
  }
  return rel;
}

bool y_linear(const Polynomial& f, std::size_t n) {
  for (const auto& t : f.terms()) {
    int deg = 0;
    for (std::size_t k = n; k < t.exponent.size(); ++k) deg += t.exponent[k];
    if (deg != 1) return false;
  }
  return true;
}

std::vector<std::size_t> all_columns(const PointConfig& config) {
  std::vector<std::size_t> cols(config.n());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  return cols;
}

RationalVector to_rational_vector(const IntVector& v) { return RationalVector(v.begin(), v.end()); }

}  // namespace

const char* relation_kind_name(RelationKind kind) {
  switch (kind) {
    case RelationKind::Binomial:
      return "binomial";
    case RelationKind::Euler:
      return "euler";
    case RelationKind::Ideal:
      return "ideal";
  }
  return "?";
}

std::string Relation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += " + ";
    out += "(" + terms[i].op.to_string() + ")*1_" + std::to_string(terms[i].generator);
  }
  return out.empty() ? "0" : out;
}

std::size_t SystemPresentation::count(RelationKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(relations.begin(), relations.end(), [&](const Relation& r) { return r.kind == kind; }));
}

std::vector<Relation> euler_relations(const PointConfig& config, const std::vector<Cyclotomic>& beta,
                                      const GroupElement& u, std::size_t index) {
  if (beta.size() != config.d()) throw Error(ErrorCode::DimensionMismatch, kModule, "beta must have d entries");
  auto euler = euler_operators(config.A());
  std::vector<Relation> out;
  for (std::size_t i = 0; i < config.d(); ++i) {
    Cyclotomic shift = beta[i] - Cyclotomic(Rational(u.free[i]));
    out.push_back(Relation{RelationKind::Euler, {RelationTerm{index, euler[i] - WeylElement::constant(config.n(), shift)}}});
  }
  return out;
}

SystemPresentation bbgkz_relations(const SemigroupModule& module, const std::vector<Cyclotomic>& beta,
                                   const Integer& h_bound) {
  const auto& config = module.config();
  const auto& h = module.grading();
  for (const auto& t : primitive_set(module).elements)
    if (h_degree(h, t) > h_bound)
      throw Error(ErrorCode::SliceTooSmall, kModule,
                  "primitive element " + t.to_string() + " lies above the h-degree bound " + h_bound.get_str());
  SystemPresentation sys{config, module.kind(), beta, module_slice(module, h_bound), {}, 0, true};
  std::map<GroupElement, std::size_t> index;
  for (std::size_t i = 0; i < sys.generators.size(); ++i) index.emplace(sys.generators[i], i);
  const std::size_t n = config.n();
  for (std::size_t i = 0; i < sys.generators.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto it = index.find(add(config.group(), sys.generators[i], config.column(j)));
      if (it == index.end()) continue;
      sys.relations.push_back(Relation{RelationKind::Binomial,
                                       {RelationTerm{i, WeylElement::d(n, j)},
                                        RelationTerm{it->second, WeylElement::constant(n, Cyclotomic(-1))}}});
    }
  for (std::size_t i = 0; i < sys.generators.size(); ++i)
    for (auto& r : euler_relations(config, beta, sys.generators[i], i)) sys.relations.push_back(std::move(r));
  return sys;
}

std::size_t default_binomial_bound(const PointConfig& config) {
  int maxdeg = 0;
  for (const auto& m : markov_basis(config)) {
    int plus = 0, minus = 0;
    for (const auto& e : m) (sgn(e) > 0 ? plus : minus) += static_cast<int>(Integer(abs(e)).get_si());
    maxdeg = std::max({maxdeg, plus, minus});
  }
  return 2 + 2 * static_cast<std::size_t>(config.ell()) * static_cast<std::size_t>(maxdeg);
}

std::vector<Relation> primitive_binomial_relations(const SemigroupModule& module,
                                                   const std::vector<GroupElement>& prim, std::size_t bound) {
  const auto& config = module.config();
  const std::size_t n = config.n();
  const std::size_t k = prim.size();
  const std::size_t nv = n + k;
  auto monos = monomials_up_to(n, static_cast<int>(bound));
  std::vector<GroupElement> mono_deg;
  mono_deg.reserve(monos.size());
  for (const auto& u : monos) mono_deg.push_back(monomial_degree(config, u));

  std::vector<std::size_t> first(n);
  for (std::size_t j = 0; j < n; ++j) first[j] = j;
  OrderPtr order = make_order(MonomialOrder::block(nv, first));

  struct Entry {
    Monomial lifted;
    GroupElement degree;
  };
  std::vector<Entry> entries;
  entries.reserve(k * monos.size());
  for (std::size_t g = 0; g < k; ++g)
    for (std::size_t m = 0; m < monos.size(); ++m) {
      Monomial e(nv, 0);
      std::copy(monos[m].begin(), monos[m].end(), e.begin());
      e[n + g] = 1;
      entries.push_back(Entry{std::move(e), add(config.group(), prim[g], mono_deg[m])});
    }
  std::sort(entries.begin(), entries.end(),
            [&](const Entry& a, const Entry& b) { return order->compare(a.lifted, b.lifted) < 0; });

  GroebnerBuilder builder(nv, order);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b) {
      Monomial e(nv, 0);
      e[n + a] += 1;
      e[n + b] += 1;
      builder.add(Polynomial::monomial(e, Cyclotomic(1), order));
    }
  // Entries run in increasing order, so a reducible entry is already tied to a
  // smaller entry of its bucket; only standard monomials need a new move.
  std::map<GroupElement, const Monomial*> representative;
  for (const auto& entry : entries) {
    auto [it, fresh] = representative.try_emplace(entry.degree, &entry.lifted);
    if (fresh || builder.reducible(entry.lifted)) continue;
    builder.add(Polynomial::binomial(entry.lifted, *it->second, Cyclotomic(1), order));
  }
  IdealBasis gb = builder.result();

  std::vector<Relation> out;
  for (const auto& f : gb.generators)
    if (y_linear(f, n)) out.push_back(relation_from_module_element(f, n));
  return out;
}

SystemPresentation bbgkz_primitive_presentation(const SemigroupModule& module, const std::vector<Cyclotomic>& beta,
                                                std::optional<std::size_t> bound) {
  const auto& config = module.config();
  if (beta.size() != config.d()) throw Error(ErrorCode::DimensionMismatch, kModule, "beta must have d entries");
  auto prim = primitive_set(module).elements;
  std::size_t b = bound.value_or(default_binomial_bound(config));
  auto rels = primitive_binomial_relations(module, prim, b);
  auto wider = primitive_binomial_relations(module, prim, b + 2);
  bool stable = rels.size() == wider.size();
  for (std::size_t i = 0; stable && i < rels.size(); ++i) stable = rels[i].to_string() == wider[i].to_string();

  SystemPresentation sys{config, module.kind(), beta, prim, std::move(rels), b, stable};
  for (std::size_t i = 0; i < prim.size(); ++i)
    for (auto& r : euler_relations(config, beta, prim[i], i)) sys.relations.push_back(std::move(r));
  return sys;
}

SystemPresentation h0_face_presentation(const PointConfig& config, const Face& face, const PartialCharacter& rho,
                                        const std::vector<Cyclotomic>& beta) {
  if (beta.size() != config.d()) throw Error(ErrorCode::DimensionMismatch, kModule, "beta must have d entries");
  SystemPresentation sys{config, std::nullopt, beta, {GroupElement::zero(config.group())}, {}, 0, true};
  for (const auto& g : face_twisted_ideal(config, face, rho).generators)
    sys.relations.push_back(Relation{RelationKind::Ideal, {RelationTerm{0, WeylElement::from_polynomial(g)}}});
  for (auto& r : euler_relations(config, beta, GroupElement::zero(config.group()), 0)) sys.relations.push_back(std::move(r));
  return sys;
}

Arrangement quasi_degrees(const ModuleSpec& spec, const PointConfig& config) {
  const std::size_t d = config.d();
  switch (spec.kind) {
    case ModuleSpec::Kind::K:
    case ModuleSpec::Kind::KInterior:
      return Arrangement{{AffineSubspace{RationalVector(d), all_columns(config)}}};
    case ModuleSpec::Kind::Face: {
      RationalVector shift = spec.shift.empty() ? RationalVector(d) : spec.shift;
      if (shift.size() != d) throw Error(ErrorCode::DimensionMismatch, kModule, "face shift must have d entries");
      return Arrangement{{AffineSubspace{shift, spec.face.column_indices}}};
    }
    case ModuleSpec::Kind::KModKInterior:
      break;
  }
  auto full = SemigroupModule::full(config);
  auto interior = SemigroupModule::interior(config);
  const auto& h = full.grading();
  Integer bound = 0;
  for (const auto& t : primitive_set(full).elements) bound = std::max(bound, h_degree(h, t));
  for (std::size_t j = 0; j < config.n(); ++j) bound = std::max(bound, h_degree(h, config.column(j)));
  bound *= 2;
  auto slice = module_slice(full, bound);
  Arrangement arr;
  for (const auto& nu : full.facet_normals()) {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < config.n(); ++j) {
      Integer v = 0;
      for (std::size_t i = 0; i < d; ++i) v += nu[i] * config.free_column(j)[i];
      if (v == 0) cols.push_back(j);
    }
    Arrangement facet_pieces;
    for (const auto& t : slice) {
      if (membership(t, interior)) continue;
      Integer v = 0;
      for (std::size_t i = 0; i < d; ++i) v += nu[i] * t.free[i];
      if (v != 0) continue;
      std::vector<Cyclotomic> point;
      for (const auto& x : t.free) point.emplace_back(Rational(x));
      if (!facet_pieces.pieces.empty() && membership_in_arrangement(point, facet_pieces, config)) continue;
      facet_pieces.pieces.push_back(AffineSubspace{to_rational_vector(t.free), cols});
    }
    for (auto& p : facet_pieces.pieces) {
      std::vector<Cyclotomic> zero(d, Cyclotomic(0));
      Arrangement single{{p}};
      if (membership_in_arrangement(zero, single, config)) p.shift = RationalVector(d);
      arr.pieces.push_back(std::move(p));
    }
  }
  return arr;
}

const char* vanishing_name(Vanishing v) { return v == Vanishing::Vanishes ? "VANISHES" : "NONVANISHING"; }

Vanishing vanishing_test(const ModuleSpec& spec, const PointConfig& config, const std::vector<Cyclotomic>& beta) {
  if (beta.size() != config.d()) throw Error(ErrorCode::DimensionMismatch, kModule, "beta must have d entries");
  return membership_in_arrangement(beta, quasi_degrees(spec, config), config) ? Vanishing::Nonvanishing
                                                                              : Vanishing::Vanishes;
}

std::optional<Functional> regularity_certificate(const PointConfig& config) {
  return homogenizing_functional(config);
}

}  // namespace tgkz
