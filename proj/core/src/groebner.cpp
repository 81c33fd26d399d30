#include "tgkz/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <utility>

#include "tgkz/error.hpp"

namespace tgkz {

namespace {

constexpr const char* kModule = "exact_algebra";

std::uint32_t common_field(const std::vector<Polynomial>& polys) {
  std::uint64_t e = 1;
  for (const auto& p : polys) e = lcm_u64(e, p.coefficient_order());
  return static_cast<std::uint32_t>(e);
}

Polynomial spoly(const Polynomial& f, const Polynomial& g) {
  Monomial l = monomial_lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = f.times_term(monomial_quotient(l, f.leading_monomial()), Cyclotomic(1));
  return a.minus_term_times(monomial_quotient(l, g.leading_monomial()), Cyclotomic(1), g);
}

std::vector<Polynomial> prepare(const std::vector<Polynomial>& gens, std::size_t nvars, const OrderPtr& order) {
  std::uint32_t e = common_field(gens);
  std::vector<Polynomial> out;
  out.reserve(gens.size());
  for (const auto& g : gens) {
    if (g.nvars() != nvars) throw Error(ErrorCode::DimensionMismatch, kModule, "generator in a different ring");
    if (!g.is_zero()) out.push_back(g.with_order(order).promote_coefficients(e));
  }
  return out;
}

Polynomial product_of_variables(std::size_t nvars, const std::vector<std::size_t>& vars, const OrderPtr& order) {
  Monomial m(nvars, 0);
  for (auto v : vars) m.at(v) += 1;
  return Polynomial::monomial(m, Cyclotomic(1), order);
}

/// Keeps the basis elements free of the last variable and drops that variable.
IdealBasis eliminate_last(const IdealBasis& big, std::size_t nvars, const OrderPtr& order) {
  std::vector<Polynomial> kept;
  for (const auto& g : big.generators)
    if (!g.contains_variable(nvars)) kept.push_back(g.truncate_variables(nvars, order));
  return buchberger(kept, nvars, order);
}

}  // namespace

bool IdealBasis::is_unit_ideal() const {
  for (const auto& g : generators)
    if (!g.is_zero() && g.is_constant()) return true;
  return false;
}

std::string IdealBasis::to_string(const std::string& var_prefix) const {
  if (generators.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i) out += ", ";
    out += generators[i].to_string(var_prefix);
  }
  return out + ")";
}

std::size_t default_pair_budget() {
  if (const char* env = std::getenv("TGKZ_PAIR_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 5000;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
  Polynomial p = f;
  std::vector<Term> rest;
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    const Polynomial* divisor = nullptr;
    for (const auto& g : basis)
      if (!g.is_zero() && divides(g.leading_monomial(), lt.exponent)) {
        divisor = &g;
        break;
      }
    if (divisor) {
      Cyclotomic c = lt.coeff;
      if (!divisor->leading_coeff().is_one()) c /= divisor->leading_coeff();
      p = p.minus_term_times(monomial_quotient(lt.exponent, divisor->leading_monomial()), c, *divisor);
    } else {
      rest.push_back(lt);
      p = p - Polynomial::monomial(lt.exponent, lt.coeff, p.order());
    }
  }
  return Polynomial::from_terms(f.nvars(), std::move(rest), f.order());
}

GroebnerBuilder::GroebnerBuilder(std::size_t nvars, OrderPtr order, std::optional<std::size_t> budget)
    : nvars_(nvars), order_(order ? std::move(order) : default_order(nvars)), budget_(budget.value_or(default_pair_budget())) {}

void GroebnerBuilder::add(const Polynomial& f) {
  if (f.nvars() != nvars_) throw Error(ErrorCode::DimensionMismatch, kModule, "generator in a different ring");
  if (f.is_zero()) return;
  field_ = static_cast<std::uint32_t>(lcm_u64(field_, f.coefficient_order()));
  Polynomial g = normal_form(f.with_order(order_).promote_coefficients(field_), basis_);
  if (g.is_zero()) return;
  insert(g.monic());
  complete();
}

bool GroebnerBuilder::reducible(const Monomial& m) const {
  for (const auto& g : basis_)
    if (divides(g.leading_monomial(), m)) return true;
  return false;
}

void GroebnerBuilder::complete() {
  while (!pairs_.empty()) {
    auto it = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
      int c = order_->compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    Pair p = *it;
    pairs_.erase(it);
    done_.insert({p.i, p.j});
    if (coprime(basis_[p.i].leading_monomial(), basis_[p.j].leading_monomial())) continue;
    if (chain_criterion(p)) continue;
    if (++processed_ > budget_)
      throw Error(ErrorCode::BudgetExceeded, kModule,
                  "Groebner basis computation exceeded the pair budget of " + std::to_string(budget_));
    Polynomial h = normal_form(spoly(basis_[p.i], basis_[p.j]), basis_);
    if (!h.is_zero()) insert(h.monic());
  }
}

void GroebnerBuilder::insert(Polynomial h) {
  std::size_t k = basis_.size();
  basis_.push_back(std::move(h));
  for (std::size_t i = 0; i < k; ++i)
    pairs_.push_back(Pair{i, k, monomial_lcm(basis_[i].leading_monomial(), basis_[k].leading_monomial())});
}

bool GroebnerBuilder::pending(std::size_t a, std::size_t b) const {
  if (a > b) std::swap(a, b);
  return done_.find({a, b}) == done_.end();
}

bool GroebnerBuilder::chain_criterion(const Pair& p) const {
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (k == p.i || k == p.j) continue;
    if (!divides(basis_[k].leading_monomial(), p.lcm)) continue;
    if (!pending(p.i, k) && !pending(p.j, k)) return true;
  }
  return false;
}

IdealBasis GroebnerBuilder::result() const {
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& li = basis_[i].leading_monomial();
      const auto& lj = basis_[j].leading_monomial();
      if (divides(lj, li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis_[i].promote_coefficients(field_));
  }
  IdealBasis out;
  out.nvars = nvars_;
  out.order = order_;
  out.is_groebner = true;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial lead = Polynomial::monomial(minimal[i].leading_monomial(), Cyclotomic(1), order_);
    Polynomial tail = minimal[i] - lead;
    out.generators.push_back((lead + normal_form(tail, others)).monic().promote_coefficients(field_));
  }
  std::sort(out.generators.begin(), out.generators.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order_->compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return out;
}

IdealBasis buchberger(const std::vector<Polynomial>& gens, std::size_t nvars, OrderPtr order,
                      std::optional<std::size_t> budget) {
  GroebnerBuilder builder(nvars, std::move(order), budget);
  for (const auto& g : prepare(gens, nvars, builder.order())) builder.add(g);
  return builder.result();
}

IdealBasis groebner(const IdealBasis& ideal, std::optional<std::size_t> budget) {
  if (ideal.is_groebner) return ideal;
  return buchberger(ideal.generators, ideal.nvars, ideal.order, budget);
}

IdealBasis saturate_wrt_variables(const IdealBasis& ideal, const std::vector<std::size_t>& vars) {
  const std::size_t n = ideal.nvars;
  OrderPtr order = ideal.order ? ideal.order : default_order(n);
  if (vars.empty() || ideal.generators.empty()) return buchberger(ideal.generators, n, order);
  OrderPtr elim = make_order(MonomialOrder::block(n + 1, {n}));
  std::vector<std::size_t> map(n);
  for (std::size_t i = 0; i < n; ++i) map[i] = i;
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators) gens.push_back(g.embed(n + 1, map, elim));
  std::vector<std::size_t> with_w = vars;
  with_w.push_back(n);
  gens.push_back(product_of_variables(n + 1, with_w, elim) - Polynomial::constant(n + 1, Cyclotomic(1), elim));
  return eliminate_last(buchberger(gens, n + 1, elim), n, order);
}

IdealBasis saturate_all_variables(const IdealBasis& ideal) {
  std::vector<std::size_t> vars(ideal.nvars);
  for (std::size_t i = 0; i < vars.size(); ++i) vars[i] = i;
  return saturate_wrt_variables(ideal, vars);
}

IdealBasis ideal_intersect(const IdealBasis& i, const IdealBasis& j) {
  if (i.nvars != j.nvars) throw Error(ErrorCode::DimensionMismatch, kModule, "ideals live in different rings");
  const std::size_t n = i.nvars;
  OrderPtr order = i.order ? i.order : default_order(n);
  if (i.generators.empty() || j.generators.empty()) {
    IdealBasis zero;
    zero.nvars = n;
    zero.order = order;
    zero.is_groebner = true;
    return zero;
  }
  OrderPtr elim = make_order(MonomialOrder::block(n + 1, {n}));
  std::vector<std::size_t> map(n);
  for (std::size_t k = 0; k < n; ++k) map[k] = k;
  Polynomial t = Polynomial::variable(n + 1, n, elim);
  Polynomial one_minus_t = Polynomial::constant(n + 1, Cyclotomic(1), elim) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : i.generators) gens.push_back(t * g.embed(n + 1, map, elim));
  for (const auto& g : j.generators) gens.push_back(one_minus_t * g.embed(n + 1, map, elim));
  return eliminate_last(buchberger(gens, n + 1, elim), n, order);
}

IdealBasis ideal_intersect(const std::vector<IdealBasis>& ideals) {
  if (ideals.empty()) throw Error(ErrorCode::Malformed, kModule, "intersection of no ideals");
  IdealBasis acc = groebner(ideals.front());
  for (std::size_t k = 1; k < ideals.size(); ++k) acc = ideal_intersect(acc, ideals[k]);
  return acc;
}

bool ideal_member(const Polynomial& f, const IdealBasis& ideal) {
  IdealBasis gb = groebner(ideal);
  Polynomial g = f.with_order(gb.order);
  return normal_form(g, gb.generators).is_zero();
}

bool ideal_contains(const IdealBasis& big, const IdealBasis& small) {
  IdealBasis gb = groebner(big);
  for (const auto& f : small.generators)
    if (!normal_form(f.with_order(gb.order), gb.generators).is_zero()) return false;
  return true;
}

bool ideal_equal(const IdealBasis& i, const IdealBasis& j) {
  if (i.nvars != j.nvars) return false;
  IdealBasis a = groebner(i);
  IdealBasis b = buchberger(j.generators, j.nvars, a.order);
  if (a.generators.size() != b.generators.size()) return false;
  for (std::size_t k = 0; k < a.generators.size(); ++k)
    if (!(a.generators[k] == b.generators[k])) return false;
  return true;
}

bool is_groebner_basis(const std::vector<Polynomial>& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!normal_form(spoly(gens[i], gens[j]), gens).is_zero()) return false;
  return true;
}

}  // namespace tgkz
