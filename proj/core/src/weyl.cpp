#include "tgkz/weyl.hpp"

#include <algorithm>

#include "tgkz/error.hpp"
#include "tgkz/group_lattice.hpp"

namespace tgkz {

namespace {

constexpr const char* kModule = "hypergeometric_systems";

Integer falling_factorial(long c, long k) {
  Integer r = 1;
  for (long i = 0; i < k; ++i) r *= c - i;
  return r;
}

Integer binomial_coefficient(long b, long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(k));
  return r;
}

std::string weyl_monomial_text(const WeylMonomial& m) {
  std::string s;
  auto append = [&](const Monomial& e, const char* prefix) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += prefix + std::to_string(i + 1);
      if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
  };
  append(m.x, "x");
  append(m.d, "d");
  return s;
}

}  // namespace

WeylElement WeylElement::constant(std::size_t nvars, const Cyclotomic& c) {
  WeylElement e(nvars);
  e.add_term(WeylMonomial{Monomial(nvars, 0), Monomial(nvars, 0)}, c);
  return e;
}

WeylElement WeylElement::x(std::size_t nvars, std::size_t i) {
  Monomial a(nvars, 0);
  a.at(i) = 1;
  return term(a, Monomial(nvars, 0));
}

WeylElement WeylElement::d(std::size_t nvars, std::size_t i) {
  Monomial b(nvars, 0);
  b.at(i) = 1;
  return term(Monomial(nvars, 0), b);
}

WeylElement WeylElement::term(const Monomial& x, const Monomial& d, const Cyclotomic& c) {
  if (x.size() != d.size()) throw Error(ErrorCode::DimensionMismatch, kModule, "x and d exponents differ in length");
  WeylElement e(x.size());
  e.add_term(WeylMonomial{x, d}, c);
  return e;
}

WeylElement WeylElement::from_polynomial(const Polynomial& f) {
  WeylElement e(f.nvars());
  Monomial zero(f.nvars(), 0);
  for (const auto& t : f.terms()) e.add_term(WeylMonomial{zero, t.exponent}, t.coeff);
  return e;
}

int WeylElement::total_degree() const {
  int best = -1;
  for (const auto& [m, c] : terms_) best = std::max(best, tgkz::total_degree(m.x) + tgkz::total_degree(m.d));
  return best;
}

IntVector WeylElement::a_degree(const WeylMonomial& m, const IntMatrix& a) {
  IntVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * (m.d[j] - m.x[j]);
  return out;
}

void WeylElement::add_term(const WeylMonomial& m, const Cyclotomic& c) {
  if (c.is_zero()) return;
  if (m.x.size() != nvars_ || m.d.size() != nvars_)
    throw Error(ErrorCode::DimensionMismatch, kModule, "Weyl monomial in a different number of variables");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

WeylElement& WeylElement::operator+=(const WeylElement& rhs) {
  if (rhs.nvars_ != nvars_) throw Error(ErrorCode::DimensionMismatch, kModule, "Weyl algebras differ");
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& rhs) {
  if (rhs.nvars_ != nvars_) throw Error(ErrorCode::DimensionMismatch, kModule, "Weyl algebras differ");
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

WeylElement WeylElement::operator-() const { return scaled(Cyclotomic(-1)); }

WeylElement WeylElement::scaled(const Cyclotomic& c) const {
  WeylElement out(nvars_);
  if (c.is_zero()) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
  return out;
}

// d^b x^c = sum_k C(b,k) c!/(c-k)! x^(c-k) d^(b-k), one variable at a time.
WeylElement operator*(const WeylElement& p, const WeylElement& q) {
  if (p.nvars_ != q.nvars_) throw Error(ErrorCode::DimensionMismatch, kModule, "Weyl algebras differ");
  const std::size_t n = p.nvars_;
  WeylElement out(n);
  for (const auto& [mp, cp] : p.terms_) {
    for (const auto& [mq, cq] : q.terms_) {
      std::vector<std::pair<WeylMonomial, Integer>> partial{{WeylMonomial{mp.x, Monomial(n, 0)}, Integer(1)}};
      for (std::size_t i = 0; i < n; ++i) {
        const long b = mp.d[i];
        const long c = mq.x[i];
        std::vector<std::pair<WeylMonomial, Integer>> next;
        for (long k = 0; k <= std::min(b, c); ++k) {
          Integer w = binomial_coefficient(b, k) * falling_factorial(c, k);
          for (const auto& [m, coeff] : partial) {
            WeylMonomial r = m;
            r.x[i] += static_cast<std::int32_t>(c - k);
            r.d[i] += static_cast<std::int32_t>(b - k);
            next.emplace_back(std::move(r), coeff * w);
          }
        }
        partial = std::move(next);
      }
      Cyclotomic base = cp * cq;
      for (auto& [m, coeff] : partial) {
        for (std::size_t i = 0; i < n; ++i) m.d[i] += mq.d[i];
        out.add_term(m, base * Cyclotomic(Rational(coeff)));
      }
    }
  }
  return out;
}

bool WeylElement::operator==(const WeylElement& rhs) const {
  if (nvars_ != rhs.nvars_ || terms_.size() != rhs.terms_.size()) return false;
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  for (; a != terms_.end(); ++a, ++b)
    if (a->first != b->first || !(a->second == b->second)) return false;
  return true;
}

WeylElement WeylElement::sign_twisted() const {
  WeylElement out(nvars_);
  for (const auto& [m, c] : terms_) {
    int parity = (tgkz::total_degree(m.x) + tgkz::total_degree(m.d)) % 2;
    out.terms_.emplace(m, parity ? -c : c);
  }
  return out;
}

std::string WeylElement::to_string() const {
  std::vector<std::pair<const WeylMonomial*, const Cyclotomic*>> order;
  for (const auto& [m, c] : terms_) order.emplace_back(&m, &c);
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    int da = tgkz::total_degree(a.first->x) + tgkz::total_degree(a.first->d);
    int db = tgkz::total_degree(b.first->x) + tgkz::total_degree(b.first->d);
    if (da != db) return da > db;
    return *a.first > *b.first;
  });
  std::vector<std::pair<Cyclotomic, std::string>> parts;
  for (const auto& [m, c] : order) parts.emplace_back(*c, weyl_monomial_text(*m));
  return format_signed_terms(parts);
}

std::vector<WeylElement> euler_operators(const IntMatrix& a) {
  std::vector<WeylElement> out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    RationalVector mu(a.rows());
    mu[i] = 1;
    out.push_back(euler_operator(a, mu));
  }
  return out;
}

WeylElement euler_operator(const IntMatrix& a, const RationalVector& mu) {
  if (mu.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, kModule, "functional length differs from d");
  const std::size_t n = a.cols();
  WeylElement e(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational w = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) w += mu[i] * a(i, j);
    if (w == 0) continue;
    Monomial unit(n, 0);
    unit[j] = 1;
    e += WeylElement::term(unit, unit, Cyclotomic(w));
  }
  return e;
}

}  // namespace tgkz
