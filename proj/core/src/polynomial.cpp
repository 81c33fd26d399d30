#include "tgkz/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "tgkz/error.hpp"

namespace tgkz {

namespace {
constexpr const char* kModule = "exact_algebra";
}

int total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Monomial monomial_quotient(const Monomial& b, const Monomial& a) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[i] - a[i];
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

MonomialOrder MonomialOrder::lex(std::size_t nvars) {
  std::vector<std::size_t> p(nvars);
  std::iota(p.begin(), p.end(), 0);
  return MonomialOrder(Kind::Lex, std::move(p), 0);
}

MonomialOrder MonomialOrder::grevlex(std::size_t nvars) {
  std::vector<std::size_t> p(nvars);
  std::iota(p.begin(), p.end(), 0);
  return MonomialOrder(Kind::GrevLex, std::move(p), 0);
}

MonomialOrder MonomialOrder::block(std::size_t nvars, const std::vector<std::size_t>& first) {
  std::vector<std::size_t> p = first;
  for (std::size_t i = 0; i < nvars; ++i)
    if (std::find(first.begin(), first.end(), i) == first.end()) p.push_back(i);
  if (p.size() != nvars) throw Error(ErrorCode::DimensionMismatch, kModule, "block order variables out of range");
  return MonomialOrder(Kind::Block, std::move(p), first.size());
}

int MonomialOrder::grevlex_range(const Monomial& a, const Monomial& b, std::size_t from, std::size_t to) const {
  int da = 0, db = 0;
  for (std::size_t i = from; i < to; ++i) {
    da += a[priority_[i]];
    db += b[priority_[i]];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = to; i-- > from;) {
    auto x = a[priority_[i]], y = b[priority_[i]];
    if (x != y) return x < y ? 1 : -1;
  }
  return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Lex:
      for (std::size_t v : priority_)
        if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
      return 0;
    case Kind::GrevLex:
      return grevlex_range(a, b, 0, priority_.size());
    case Kind::Block:
      if (int c = grevlex_range(a, b, 0, block_); c != 0) return c;
      return grevlex_range(a, b, block_, priority_.size());
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::Lex: return "lex";
    case Kind::GrevLex: return "grevlex";
    case Kind::Block: return "block";
  }
  return "?";
}

OrderPtr make_order(MonomialOrder order) { return std::make_shared<const MonomialOrder>(std::move(order)); }

OrderPtr default_order(std::size_t nvars) { return make_order(MonomialOrder::grevlex(nvars)); }

Polynomial::Polynomial(std::size_t nvars, OrderPtr order)
    : nvars_(nvars), order_(order ? std::move(order) : default_order(nvars)) {
  if (order_->nvars() != nvars_) throw Error(ErrorCode::DimensionMismatch, kModule, "order and ring disagree on variable count");
}

Polynomial Polynomial::constant(std::size_t nvars, const Cyclotomic& c, OrderPtr order) {
  Polynomial p(nvars, std::move(order));
  if (!c.is_zero()) p.terms_.push_back(Term{Monomial(nvars, 0), c});
  return p;
}

Polynomial Polynomial::monomial(const Monomial& exponent, const Cyclotomic& c, OrderPtr order) {
  Polynomial p(exponent.size(), std::move(order));
  if (!c.is_zero()) p.terms_.push_back(Term{exponent, c});
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index, OrderPtr order) {
  Monomial m(nvars, 0);
  m.at(index) = 1;
  return monomial(m, Cyclotomic(1), std::move(order));
}

Polynomial Polynomial::binomial(const Monomial& u, const Monomial& v, const Cyclotomic& c, OrderPtr order) {
  Polynomial a = monomial(u, Cyclotomic(1), order);
  return a - monomial(v, c, order);
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms, OrderPtr order) {
  Polynomial p(nvars, std::move(order));
  const auto& ord = *p.order_;
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.compare(a.exponent, b.exponent) > 0; });
  for (auto& t : terms) {
    if (t.exponent.size() != nvars) throw Error(ErrorCode::DimensionMismatch, kModule, "term exponent length mismatch");
    if (!p.terms_.empty() && p.terms_.back().exponent == t.exponent) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && tgkz::total_degree(terms_[0].exponent) == 0);
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, tgkz::total_degree(t.exponent));
  return d;
}

std::uint32_t Polynomial::coefficient_order() const {
  std::uint64_t e = 1;
  for (const auto& t : terms_) e = lcm_u64(e, t.coeff.order());
  return static_cast<std::uint32_t>(e);
}

Polynomial Polynomial::with_order(OrderPtr order) const {
  if (order == order_ || *order == *order_) {
    Polynomial p = *this;
    p.order_ = std::move(order);
    return p;
  }
  return from_terms(nvars_, terms_, std::move(order));
}

Polynomial Polynomial::promote_coefficients(std::uint32_t e) const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = t.coeff.promote(e);
  return p;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || terms_.front().coeff.is_one()) return *this;
  return scaled(terms_.front().coeff.inverse());
}

Polynomial Polynomial::embed(std::size_t nvars, const std::vector<std::size_t>& map, OrderPtr order) const {
  if (map.size() != nvars_) throw Error(ErrorCode::DimensionMismatch, kModule, "embedding map has wrong length");
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(nvars, 0);
    for (std::size_t i = 0; i < nvars_; ++i) m.at(map[i]) += t.exponent[i];
    terms.push_back(Term{std::move(m), t.coeff});
  }
  return from_terms(nvars, std::move(terms), std::move(order));
}

Polynomial Polynomial::truncate_variables(std::size_t nvars, OrderPtr order) const {
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    for (std::size_t i = nvars; i < nvars_; ++i)
      if (t.exponent[i] != 0)
        throw Error(ErrorCode::InternalCheckFailed, kModule, "cannot drop a variable that occurs");
    terms.push_back(Term{Monomial(t.exponent.begin(), t.exponent.begin() + static_cast<std::ptrdiff_t>(nvars)), t.coeff});
  }
  return from_terms(nvars, std::move(terms), std::move(order));
}

Cyclotomic Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.exponent == m) return t.coeff;
  return Cyclotomic(0);
}

bool Polynomial::contains_variable(std::size_t index) const {
  for (const auto& t : terms_)
    if (t.exponent[index] != 0) return true;
  return false;
}

void Polynomial::check_compatible(const Polynomial& rhs) const {
  if (nvars_ != rhs.nvars_) throw Error(ErrorCode::DimensionMismatch, kModule, "polynomials live in different rings");
  if (order_ != rhs.order_ && !(*order_ == *rhs.order_))
    throw Error(ErrorCode::DimensionMismatch, kModule, "polynomials carry different monomial orders");
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial Polynomial::minus_term_times(const Monomial& m, const Cyclotomic& c, const Polynomial& g) const {
  check_compatible(g);
  Polynomial out(nvars_, order_);
  out.terms_.reserve(terms_.size() + g.terms_.size());
  const auto& ord = *order_;
  std::size_t i = 0, j = 0;
  Monomial shifted;
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j < g.terms_.size()) shifted = monomial_product(g.terms_[j].exponent, m);
    int cmp = i == terms_.size() ? -1 : j == g.terms_.size() ? 1 : ord.compare(terms_[i].exponent, shifted);
    if (cmp > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      out.terms_.push_back(Term{shifted, -(c * g.terms_[j].coeff)});
      ++j;
    } else {
      Cyclotomic v = terms_[i].coeff - c * g.terms_[j].coeff;
      if (!v.is_zero()) out.terms_.push_back(Term{shifted, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  *this = minus_term_times(Monomial(nvars_, 0), Cyclotomic(-1), rhs);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  *this = minus_term_times(Monomial(nvars_, 0), Cyclotomic(1), rhs);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial out(a.nvars_, a.order_);
  for (const auto& t : a.terms_) out = out.minus_term_times(t.exponent, -t.coeff, b);
  return out;
}

Polynomial Polynomial::scaled(const Cyclotomic& c) const {
  if (c.is_zero()) return Polynomial(nvars_, order_);
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

Polynomial Polynomial::times_term(const Monomial& m, const Cyclotomic& c) const {
  if (c.is_zero()) return Polynomial(nvars_, order_);
  Polynomial p = *this;
  for (auto& t : p.terms_) {
    t.exponent = monomial_product(t.exponent, m);
    t.coeff *= c;
  }
  return p;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
  if (nvars_ != rhs.nvars_ || terms_.size() != rhs.terms_.size()) return false;
  Polynomial r = rhs.with_order(order_);
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].exponent != r.terms_[i].exponent || !(terms_[i].coeff == r.terms_[i].coeff)) return false;
  return true;
}

namespace {

std::string monomial_text(const Monomial& m, const std::string& prefix) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += prefix + std::to_string(i + 1);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

}  // namespace

std::string format_signed_terms(const std::vector<std::pair<Cyclotomic, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, mono] : terms) {
    std::string coeff;
    bool negative = false;
    if (c.is_rational()) {
      Rational q = c.rational_part();
      negative = q < 0;
      Rational mag = abs(q);
      if (mag != 1 || mono.empty()) coeff = tgkz::to_string(mag);
    } else if (Cyclotomic neg = -c; !neg.needs_parentheses()) {
      negative = true;
      coeff = neg.to_string();
    } else {
      coeff = c.to_string();
    }
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    out += coeff;
    if (!coeff.empty() && !mono.empty()) out += "*";
    out += mono;
  }
  return out;
}

std::string Polynomial::to_string(const std::string& var_prefix) const {
  std::vector<std::pair<Cyclotomic, std::string>> parts;
  parts.reserve(terms_.size());
  for (const auto& t : terms_) parts.emplace_back(t.coeff, monomial_text(t.exponent, var_prefix));
  return format_signed_terms(parts);
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  Parser(const std::string& text, std::size_t nvars_per_prefix, const std::vector<std::string>& prefixes, OrderPtr order)
      : text_(text), per_(nvars_per_prefix), prefixes_(prefixes), order_(std::move(order)) {
    nvars_ = per_ * prefixes_.size();
    if (!order_) order_ = default_order(nvars_);
  }

  Polynomial parse() {
    Polynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::Malformed, kModule,
                what + " at offset " + std::to_string(pos_) + " in '" + text_ + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Integer integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(text_.substr(start, pos_ - start));
  }

  long small_integer() {
    Integer v = integer();
    if (!v.fits_slong_p() || v > 1000000) fail("exponent or order out of range");
    return v.get_si();
  }

  Polynomial constant(const Cyclotomic& c) { return Polynomial::constant(nvars_, c, order_); }

  Polynomial expression() {
    Polynomial acc(nvars_, order_);
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Polynomial t = term();
    acc = negate ? acc - t : acc + t;
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = power();
    for (;;) {
      if (accept('*')) {
        acc = acc * power();
      } else if (accept('/')) {
        Polynomial d = power();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc = acc.scaled(d.leading_coeff().inverse());
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial power() {
    Polynomial base = primary();
    if (accept('^')) {
      bool neg = accept('-');
      long k = small_integer();
      if (neg) {
        if (!base.is_constant() || base.is_zero()) fail("negative power of a non-constant");
        return constant(base.leading_coeff().pow(-k));
      }
      Polynomial r = constant(Cyclotomic(1));
      for (long i = 0; i < k; ++i) r = r * base;
      return r;
    }
    return base;
  }

  Polynomial primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expression();
      expect(')');
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return constant(Cyclotomic(Rational(integer())));
    if (text_.compare(pos_, 4, "zeta") == 0) {
      pos_ += 4;
      expect('(');
      long e = small_integer();
      expect(')');
      if (e < 1) fail("zeta order must be positive");
      return constant(Cyclotomic::root_of_unity(static_cast<std::uint32_t>(e), 1));
    }
    for (std::size_t p = 0; p < prefixes_.size(); ++p) {
      const auto& pre = prefixes_[p];
      if (text_.compare(pos_, pre.size(), pre) == 0 && pos_ + pre.size() < text_.size() &&
          std::isdigit(static_cast<unsigned char>(text_[pos_ + pre.size()]))) {
        pos_ += pre.size();
        long idx = small_integer();
        if (idx < 1 || static_cast<std::size_t>(idx) > per_) fail("variable index out of range");
        return Polynomial::variable(nvars_, p * per_ + static_cast<std::size_t>(idx - 1), order_);
      }
    }
    fail("unexpected character");
  }

  const std::string& text_;
  std::size_t per_;
  const std::vector<std::string>& prefixes_;
  OrderPtr order_;
  std::size_t nvars_ = 0;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, std::size_t nvars, const std::string& var_prefix, OrderPtr order) {
  std::vector<std::string> prefixes{var_prefix};
  return Parser(text, nvars, prefixes, std::move(order)).parse();
}

Polynomial parse_polynomial_multi(const std::string& text, std::size_t nvars_per_prefix,
                                  const std::vector<std::string>& prefixes, OrderPtr order) {
  return Parser(text, nvars_per_prefix, prefixes, std::move(order)).parse();
}

Cyclotomic parse_cyclotomic(const std::string& text) {
  Polynomial p = parse_polynomial(text, 0, "d");
  if (p.is_zero()) return Cyclotomic(0);
  return p.leading_coeff();
}

}  // namespace tgkz
