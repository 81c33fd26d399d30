#include "tgkz/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "tgkz/error.hpp"

namespace tgkz {

namespace {

constexpr const char* kModule = "exact_algebra";

using RationalPoly = RationalVector;  // constant term first

void trim(RationalPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials; b monic.
std::vector<Integer> divide_exact(std::vector<Integer> a, const std::vector<Integer>& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {};
  std::vector<Integer> q(a.size() - db);
  for (std::size_t i = a.size(); i-- > db;) {
    Integer c = a[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

// (q, r) with a = q b + r over Q.
std::pair<RationalPoly, RationalPoly> divmod(RationalPoly a, const RationalPoly& b) {
  trim(a);
  RationalPoly q;
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - db, Rational(0));
  for (std::size_t i = a.size(); i-- > db;) {
    if (a[i] == 0) continue;
    Rational c = a[i] / b[db];
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  trim(a);
  return {q, a};
}

RationalPoly mul(const RationalPoly& a, const RationalPoly& b) {
  if (a.empty() || b.empty()) return {};
  RationalPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

RationalPoly sub(RationalPoly a, const RationalPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(std::uint32_t e) {
  if (e == 0) throw Error(ErrorCode::Malformed, kModule, "cyclotomic order must be positive");
  std::vector<Integer> p(e + 1);
  p[0] = -1;
  p[e] = 1;
  for (std::uint32_t d = 1; d < e; ++d)
    if (e % d == 0) p = divide_exact(p, cyclotomic_polynomial(d));
  return p;
}

CyclotomicField::CyclotomicField(std::uint32_t order) : order_(order) {
  phi_ = cyclotomic_polynomial(order);
  degree_ = phi_.size() - 1;
  powers_.reserve(order_);
  RationalVector cur(degree_, Rational(0));
  cur[0] = 1;
  for (std::uint32_t m = 0; m < order_; ++m) {
    powers_.push_back(cur);
    // multiply by x and reduce by the monic minimal polynomial
    Rational top = cur[degree_ - 1];
    for (std::size_t i = degree_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (std::size_t i = 0; i < degree_; ++i) cur[i] -= top * phi_[i];
  }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(std::uint32_t order) {
  if (order == 0) throw Error(ErrorCode::Malformed, kModule, "cyclotomic order must be positive");
  static std::mutex mutex;
  static std::map<std::uint32_t, std::shared_ptr<const CyclotomicField>> registry;
  std::lock_guard lock(mutex);
  auto it = registry.find(order);
  if (it != registry.end()) return it->second;
  auto field = std::shared_ptr<const CyclotomicField>(new CyclotomicField(order));
  registry.emplace(order, field);
  return field;
}

Cyclotomic::Cyclotomic() : Cyclotomic(Rational(0)) {}

Cyclotomic::Cyclotomic(const Rational& q) : field_(CyclotomicField::get(1)), coeffs_{q} { coeffs_[0].canonicalize(); }

Cyclotomic::Cyclotomic(std::shared_ptr<const CyclotomicField> field, RationalVector coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != field_->degree())
    throw Error(ErrorCode::DimensionMismatch, kModule, "coefficient vector length differs from field degree");
  for (auto& c : coeffs_) c.canonicalize();
}

Cyclotomic Cyclotomic::root_of_unity(std::uint32_t e, long power) {
  auto field = CyclotomicField::get(e);
  long m = ((power % static_cast<long>(e)) + static_cast<long>(e)) % static_cast<long>(e);
  RationalVector c = field->power(static_cast<std::uint64_t>(m));
  return Cyclotomic(std::move(field), std::move(c));
}

Cyclotomic Cyclotomic::zero(std::uint32_t e) {
  auto field = CyclotomicField::get(e);
  RationalVector c(field->degree(), Rational(0));
  return Cyclotomic(std::move(field), std::move(c));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool Cyclotomic::is_one() const { return is_rational() && coeffs_[0] == 1; }

Cyclotomic Cyclotomic::promote(std::uint32_t e) const {
  if (e == order()) return *this;
  if (e % order() != 0) throw Error(ErrorCode::DimensionMismatch, kModule, "promotion target is not a multiple of the order");
  auto target = CyclotomicField::get(e);
  const std::uint64_t step = e / order();
  RationalVector c(target->degree(), Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    const auto& p = target->power(k * step);
    for (std::size_t i = 0; i < c.size(); ++i)
      if (p[i] != 0) c[i] += coeffs_[k] * p[i];
  }
  return Cyclotomic(std::move(target), std::move(c));
}

namespace {

std::uint32_t common_order(const Cyclotomic& a, const Cyclotomic& b) {
  return static_cast<std::uint32_t>(lcm_u64(a.order(), b.order()));
}

}  // namespace

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  if (field_ != rhs.field_) {
    auto e = common_order(*this, rhs);
    *this = promote(e);
    return *this += rhs.promote(e);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) {
  if (field_ != rhs.field_) {
    auto e = common_order(*this, rhs);
    *this = promote(e);
    return *this -= rhs.promote(e);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  if (field_ != rhs.field_) {
    if (rhs.order() == 1) {
      for (auto& c : coeffs_) c *= rhs.coeffs_[0];
      return *this;
    }
    if (order() == 1) {
      Rational q = coeffs_[0];
      *this = rhs;
      for (auto& c : coeffs_) c *= q;
      return *this;
    }
    auto e = common_order(*this, rhs);
    *this = promote(e);
    return *this *= rhs.promote(e);
  }
  const std::size_t deg = coeffs_.size();
  if (deg == 1) {
    coeffs_[0] *= rhs.coeffs_[0];
    return *this;
  }
  RationalVector conv(2 * deg - 1, Rational(0));
  for (std::size_t i = 0; i < deg; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < deg; ++j)
      if (rhs.coeffs_[j] != 0) conv[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  RationalVector out(deg, Rational(0));
  for (std::size_t m = 0; m < conv.size(); ++m) {
    if (conv[m] == 0) continue;
    if (m < deg) {
      out[m] += conv[m];
      continue;
    }
    const auto& p = field_->power(m);
    for (std::size_t i = 0; i < deg; ++i)
      if (p[i] != 0) out[i] += conv[m] * p[i];
  }
  coeffs_ = std::move(out);
  return *this;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw Error(ErrorCode::InternalCheckFailed, kModule, "division by zero in cyclotomic field");
  if (coeffs_.size() == 1) return Cyclotomic(field_, RationalVector{1 / coeffs_[0]});
  // Extended Euclid: s * a + t * phi = 1.
  RationalPoly phi(field_->minimal_polynomial().begin(), field_->minimal_polynomial().end());
  RationalPoly a = coeffs_;
  trim(a);
  RationalPoly r0 = phi, r1 = a;
  RationalPoly s0{}, s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    RationalPoly s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since phi is irreducible.
  Rational lead = r0[0];
  RationalVector out(coeffs_.size(), Rational(0));
  auto [unused, rem] = divmod(s0, phi);
  (void)unused;
  for (std::size_t i = 0; i < rem.size(); ++i) out[i] = rem[i] / lead;
  return Cyclotomic(field_, std::move(out));
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& rhs) { return *this *= rhs.inverse(); }

Cyclotomic Cyclotomic::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  Cyclotomic result = Cyclotomic(Rational(1)).promote(order());
  Cyclotomic base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.field_ == b.field_) return a.coeffs_ == b.coeffs_;
  if (a.is_rational() && b.is_rational()) return a.coeffs_[0] == b.coeffs_[0];
  auto e = common_order(a, b);
  return a.promote(e).coeffs_ == b.promote(e).coeffs_;
}

bool Cyclotomic::needs_parentheses() const {
  // A bare power "zeta(e)^k" with unit coefficient prints without parentheses.
  if (is_rational()) return false;
  std::size_t nonzero = 0;
  bool unit = true;
  for (const auto& c : coeffs_) {
    if (c == 0) continue;
    ++nonzero;
    unit = unit && c == 1;
  }
  return nonzero > 1 || !unit;
}

std::string Cyclotomic::to_string() const {
  if (is_rational()) return tgkz::to_string(coeffs_[0]);
  std::string out;
  bool first = true;
  const std::string zeta = "zeta(" + std::to_string(order()) + ")";
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (k == 0) {
      out += tgkz::to_string(mag);
      continue;
    }
    if (mag != 1) out += tgkz::to_string(mag) + "*";
    out += zeta;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return needs_parentheses() ? "(" + out + ")" : out;
}

}  // namespace tgkz
