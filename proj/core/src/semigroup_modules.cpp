#include "tgkz/semigroup_modules.hpp"

#include <algorithm>
#include <set>

#include "tgkz/error.hpp"
#include "tgkz/linear_algebra.hpp"

namespace tgkz {

namespace {

constexpr const char* kModule = "semigroup_modules";

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

int facet_sign(const std::vector<IntVector>& facets, const IntVector& p) {
  int worst = 1;
  for (const auto& f : facets) worst = std::min(worst, sgn(dot(f, p)));
  return worst;
}

bool in_cone(const std::vector<IntVector>& facets, const IntVector& p) { return facet_sign(facets, p) >= 0; }
bool in_interior(const std::vector<IntVector>& facets, const IntVector& p) { return facet_sign(facets, p) > 0; }

struct SearchContext {
  const PointConfig& config;
  const std::vector<IntVector>& facets;
  const IntVector& h;
  const std::vector<GroupElement>& units;
  std::vector<std::size_t> nonunits;
};

bool in_semigroup_ctx(const GroupElement& t, const SearchContext& ctx) {
  const auto& g = ctx.config.group();
  std::set<GroupElement> seen;
  std::vector<GroupElement> stack{t};
  while (!stack.empty()) {
    GroupElement r = std::move(stack.back());
    stack.pop_back();
    if (!seen.insert(r).second) continue;
    if (r.is_torsion()) {
      if (std::binary_search(ctx.units.begin(), ctx.units.end(), r)) return true;
      continue;
    }
    if (h_degree(ctx.h, r) <= 0 || !in_cone(ctx.facets, r.free)) continue;
    for (auto j : ctx.nonunits) stack.push_back(subtract(g, r, ctx.config.column(j)));
  }
  return false;
}

IntMatrix columns_matrix(const std::vector<IntVector>& gens) {
  const std::size_t d = gens.size();
  IntMatrix m(d, d);
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t r = 0; r < d; ++r) m(r, c) = gens[c][r];
  return m;
}

FieldMatrix<Rational> rational_inverse(const IntMatrix& m) {
  const std::size_t d = m.rows();
  FieldMatrix<Rational> aug(d, std::vector<Rational>(2 * d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) aug[i][j] = m(i, j);
    aug[i][d + i] = 1;
  }
  auto e = rref(aug);
  FieldMatrix<Rational> inv(d, std::vector<Rational>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) inv[i][j] = e.reduced[i][d + j];
  return inv;
}

/// A lattice point of the half-open parallelepiped with its coordinates in the cone generators.
struct BoxPoint {
  IntVector point;
  RationalVector mu;
};

/// Integer points of {sum mu_i g_i : 0 <= mu_i < 1}, one per coset of Z^d / (G Z^d).
std::vector<BoxPoint> half_open_box(const std::vector<IntVector>& gens) {
  const std::size_t d = gens.size();
  IntMatrix gm = columns_matrix(gens);
  auto snf = smith_normal_form(gm);
  auto ginv = rational_inverse(gm);
  // U^{-1} = G V D^{-1}
  IntMatrix gv = gm * snf.V;
  IntMatrix uinv(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) uinv(i, j) = gv(i, j) / snf.D(j, j);
  std::vector<BoxPoint> out;
  IntVector y(d);
  for (;;) {
    IntVector x = uinv * y;
    RationalVector mu(d);
    for (std::size_t i = 0; i < d; ++i) {
      Rational s = 0;
      for (std::size_t k = 0; k < d; ++k) s += ginv[i][k] * x[k];
      mu[i] = s - Rational(floor(s));
    }
    IntVector p(d);
    for (std::size_t r = 0; r < d; ++r) {
      Rational s = 0;
      for (std::size_t i = 0; i < d; ++i) s += mu[i] * gens[i][r];
      p[r] = s.get_num();
    }
    out.push_back(BoxPoint{p, mu});
    std::size_t i = 0;
    while (i < d && y[i] + 1 == snf.D(i, i)) y[i++] = 0;
    if (i == d) break;
    y[i] += 1;
  }
  return out;
}

/// p + sum of g_i over every subset of `allowed` coordinates, each used up to `copies` times.
void add_translates(const IntVector& p, const std::vector<IntVector>& gens, const std::vector<std::size_t>& allowed,
                    int copies, std::set<IntVector>& out) {
  std::vector<int> mult(allowed.size(), 0);
  for (;;) {
    IntVector q = p;
    for (std::size_t k = 0; k < allowed.size(); ++k)
      for (std::size_t r = 0; r < q.size(); ++r) q[r] += mult[k] * gens[allowed[k]][r];
    out.insert(q);
    std::size_t k = 0;
    while (k < allowed.size() && mult[k] == copies) mult[k++] = 0;
    if (k == allowed.size()) break;
    ++mult[k];
  }
}

std::vector<GroupElement> torsion_fiber(const AbelianGroup& g, const IntVector& free) {
  std::vector<GroupElement> out;
  std::vector<long> t(g.torsion_rank(), 0);
  for (;;) {
    out.emplace_back(t, free);
    std::size_t i = 0;
    while (i < t.size() && t[i] + 1 == g.torsion_orders()[i]) t[i++] = 0;
    if (i == t.size()) break;
    ++t[i];
  }
  return out;
}

PrimitiveSet to_primitive_set(std::set<GroupElement> elements) {
  PrimitiveSet ps;
  ps.elements.assign(elements.begin(), elements.end());
  std::sort(ps.elements.begin(), ps.elements.end(), [](const GroupElement& a, const GroupElement& b) {
    if (a.free != b.free) return a.free < b.free;
    return a.torsion < b.torsion;
  });
  for (const auto& e : ps.elements) ps.degrees.push_back(e.free);
  return ps;
}

}  // namespace

const char* module_kind_name(ModuleKind kind) {
  switch (kind) {
    case ModuleKind::K: return "K";
    case ModuleKind::KInterior: return "K_interior";
    case ModuleKind::Explicit: return "explicit";
  }
  return "?";
}

SemigroupModule::SemigroupModule(ModuleKind kind, PointConfig config, std::vector<GroupElement> gens)
    : kind_(kind), config_(std::move(config)), generators_(std::move(gens)) {
  facets_ = tgkz::facet_normals(config_);
  pointed_ = is_pointed(config_);
  if (pointed_) h_ = positive_functional(config_);
  units_ = units(config_);
}

SemigroupModule SemigroupModule::full(PointConfig config) { return SemigroupModule(ModuleKind::K, std::move(config), {}); }

SemigroupModule SemigroupModule::interior(PointConfig config) {
  return SemigroupModule(ModuleKind::KInterior, std::move(config), {});
}

SemigroupModule SemigroupModule::generated(PointConfig config, std::vector<GroupElement> generators) {
  if (generators.empty()) throw Error(ErrorCode::Malformed, kModule, "explicit module needs at least one generator");
  SemigroupModule m(ModuleKind::Explicit, std::move(config), std::move(generators));
  for (const auto& g : m.generators_) {
    if (!belongs_to(m.config_.group(), g))
      throw Error(ErrorCode::DimensionMismatch, kModule, "generator " + g.to_string() + " is not in the group");
    if (!in_cone(m.facets_, g.free))
      throw Error(ErrorCode::Malformed, kModule, "generator " + g.to_string() + " does not lie in K");
  }
  std::sort(m.generators_.begin(), m.generators_.end());
  m.generators_.erase(std::unique(m.generators_.begin(), m.generators_.end()), m.generators_.end());
  return m;
}

const IntVector& SemigroupModule::grading() const {
  if (!pointed_) throw Error(ErrorCode::NotPointed, kModule, "cone is not pointed");
  return h_;
}

std::vector<GroupElement> units(const PointConfig& config) {
  const auto& g = config.group();
  std::set<GroupElement> found{GroupElement::zero(g)};
  std::vector<GroupElement> queue{GroupElement::zero(g)};
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (std::size_t j = 0; j < config.n(); ++j) {
      if (!config.is_zero_column(j)) continue;
      GroupElement next = add(g, queue[q], config.column(j));
      if (found.insert(next).second) queue.push_back(next);
    }
  return {found.begin(), found.end()};
}

std::vector<std::size_t> nonunit_columns(const PointConfig& config) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < config.n(); ++j)
    if (!config.is_zero_column(j)) out.push_back(j);
  return out;
}

Integer h_degree(const IntVector& h, const GroupElement& t) { return dot(h, t.free); }

bool in_semigroup(const GroupElement& t, const PointConfig& config) {
  auto facets = facet_normals(config);
  IntVector h = positive_functional(config);
  auto u = units(config);
  return in_semigroup_ctx(t, SearchContext{config, facets, h, u, nonunit_columns(config)});
}

bool membership(const GroupElement& t, const SemigroupModule& module) {
  if (!belongs_to(module.config().group(), t))
    throw Error(ErrorCode::DimensionMismatch, kModule, "element is not in the group");
  switch (module.kind()) {
    case ModuleKind::K: return in_cone(module.facet_normals(), t.free);
    case ModuleKind::KInterior: return in_interior(module.facet_normals(), t.free);
    case ModuleKind::Explicit: {
      SearchContext ctx{module.config(), module.facet_normals(), module.grading(), module.unit_group(),
                        nonunit_columns(module.config())};
      for (const auto& g : module.explicit_generators())
        if (in_semigroup_ctx(subtract(module.config().group(), t, g), ctx)) return true;
      return false;
    }
  }
  return false;
}

bool is_primitive(const GroupElement& t, const SemigroupModule& module) {
  if (!membership(t, module)) return false;
  const auto& g = module.config().group();
  for (auto j : nonunit_columns(module.config()))
    if (membership(subtract(g, t, module.config().column(j)), module)) return false;
  return true;
}

PrimitiveSet module_generators(const SemigroupModule& module, bool paranoid) {
  if (module.kind() == ModuleKind::Explicit) return primitive_elements(module);
  if (!module.pointed()) throw Error(ErrorCode::NotPointed, kModule, "module generators need a pointed cone");
  const bool interior = module.kind() == ModuleKind::KInterior;
  const auto& config = module.config();
  std::set<IntVector> candidates, doubled;
  for (const auto& gens : simplicial_cones(config)) {
    std::vector<std::size_t> all(gens.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    for (const auto& bp : half_open_box(gens)) {
      if (interior) {
        std::vector<std::size_t> zero;
        for (std::size_t i = 0; i < bp.mu.size(); ++i)
          if (bp.mu[i] == 0) zero.push_back(i);
        add_translates(bp.point, gens, zero, 1, candidates);
      } else {
        candidates.insert(bp.point);
      }
      if (paranoid) add_translates(bp.point, gens, all, interior ? 2 : 1, doubled);
    }
  }
  // Membership and primitivity for K and K° depend only on the free part.
  auto primitive_degree = [&](const IntVector& p) {
    GroupElement t(std::vector<long>(config.group().torsion_rank(), 0), p);
    return is_primitive(t, module);
  };
  std::set<GroupElement> prims;
  std::set<IntVector> degrees;
  for (const auto& p : candidates)
    if (primitive_degree(p)) {
      degrees.insert(p);
      for (auto& t : torsion_fiber(config.group(), p)) prims.insert(std::move(t));
    }
  if (paranoid)
    for (const auto& p : doubled)
      if (!degrees.count(p) && primitive_degree(p))
        throw Error(ErrorCode::InternalCheckFailed, kModule,
                    "doubled candidate box produced a new primitive degree " + to_string(p));
  return to_primitive_set(std::move(prims));
}

PrimitiveSet primitive_elements(const SemigroupModule& module) {
  if (module.kind() != ModuleKind::Explicit) return module_generators(module);
  const auto& g = module.config().group();
  std::set<GroupElement> prims;
  for (const auto& gen : module.explicit_generators())
    for (const auto& u : module.unit_group()) {
      GroupElement t = add(g, gen, u);
      if (is_primitive(t, module)) prims.insert(t);
    }
  return to_primitive_set(std::move(prims));
}

PrimitiveSet primitive_set(const SemigroupModule& module, bool paranoid) {
  return module.kind() == ModuleKind::Explicit ? primitive_elements(module) : module_generators(module, paranoid);
}

std::vector<GroupElement> module_slice(const SemigroupModule& module, const Integer& bound) {
  const auto& h = module.grading();
  const auto& config = module.config();
  const auto& g = config.group();
  auto nonunits = nonunit_columns(config);
  std::set<GroupElement> seen;
  std::vector<GroupElement> queue;
  for (const auto& t : primitive_set(module).elements)
    if (h_degree(h, t) <= bound && seen.insert(t).second) queue.push_back(t);
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (auto j : nonunits) {
      GroupElement next = add(g, queue[q], config.column(j));
      if (h_degree(h, next) <= bound && seen.insert(next).second) queue.push_back(next);
    }
  std::vector<GroupElement> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(), [&](const GroupElement& a, const GroupElement& b) {
    return h_degree(h, a) < h_degree(h, b);
  });
  return out;
}

}  // namespace tgkz
