#include "tgkz/polyhedral.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tgkz/error.hpp"
#include "tgkz/linear_algebra.hpp"

namespace tgkz {

namespace {

constexpr const char* kModule = "polyhedral";

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVector difference(const IntVector& a, const IntVector& b) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

bool is_zero_vector(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

std::size_t int_rank(const std::vector<IntVector>& rows) {
  if (rows.empty()) return 0;
  return rank(to_rational(rows));
}

/// Vector orthogonal to the d - 1 given vectors in Z^d (signed maximal minors).
IntVector cross_product(const std::vector<IntVector>& vs, std::size_t d) {
  IntVector n(d);
  for (std::size_t i = 0; i < d; ++i) {
    IntMatrix m(vs.size(), d - 1);
    for (std::size_t r = 0; r < vs.size(); ++r) {
      std::size_t c = 0;
      for (std::size_t k = 0; k < d; ++k)
        if (k != i) m(r, c++) = vs[r][k];
    }
    Integer minor = vs.empty() ? Integer(1) : determinant(m);
    n[i] = (i % 2 == 0) ? minor : Integer(-minor);
  }
  return n;
}

void make_primitive(IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
}

/// Calls fn on every k-subset of {0..n-1}, in lexicographic order.
template <class Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<IntVector> distinct_nonzero(const PointConfig& config) {
  std::vector<IntVector> pts;
  for (std::size_t j = 0; j < config.n(); ++j) {
    const auto& v = config.free_column(j);
    if (!is_zero_vector(v) && std::find(pts.begin(), pts.end(), v) == pts.end()) pts.push_back(v);
  }
  return pts;
}

/// Inner facet normals of the full-dimensional cone spanned by `pts` in Z^d.
std::vector<IntVector> cone_facets(const std::vector<IntVector>& pts, std::size_t d) {
  std::set<IntVector> found;
  for_each_subset(pts.size(), d - 1, [&](const std::vector<std::size_t>& idx) {
    std::vector<IntVector> vs;
    for (auto i : idx) vs.push_back(pts[i]);
    IntVector n = cross_product(vs, d);
    if (is_zero_vector(n)) return;
    make_primitive(n);
    bool nonneg = true, nonpos = true;
    for (const auto& p : pts) {
      int s = sgn(dot(n, p));
      if (s < 0) nonneg = false;
      if (s > 0) nonpos = false;
    }
    if (nonneg == nonpos) return;
    if (nonpos)
      for (auto& x : n) x = -x;
    found.insert(n);
  });
  return {found.begin(), found.end()};
}

/// Rows of A that are independent on the span of the columns.
std::vector<std::size_t> independent_coordinates(const std::vector<IntVector>& pts, std::size_t d) {
  std::vector<std::size_t> chosen;
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < d; ++i) {
    IntVector r;
    for (const auto& p : pts) r.push_back(p[i]);
    rows.push_back(r);
    if (int_rank(rows) > chosen.size())
      chosen.push_back(i);
    else
      rows.pop_back();
  }
  return chosen;
}

IntVector project(const IntVector& v, const std::vector<std::size_t>& coords) {
  IntVector r;
  for (auto c : coords) r.push_back(v[c]);
  return r;
}

Functional to_functional(const IntVector& v) { return Functional{RationalVector(v.begin(), v.end())}; }

}  // namespace

std::string to_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

PointConfig::PointConfig(AbelianGroup group, std::vector<GroupElement> columns)
    : group_(std::move(group)), columns_(std::move(columns)) {
  if (columns_.empty()) throw Error(ErrorCode::Malformed, kModule, "configuration needs at least one column");
  for (std::size_t j = 0; j < columns_.size(); ++j)
    if (!belongs_to(group_, columns_[j]))
      throw Error(ErrorCode::DimensionMismatch, kModule, "column " + std::to_string(j + 1) + " is not in the group");
  a_ = IntMatrix(d(), n());
  for (std::size_t j = 0; j < n(); ++j)
    for (std::size_t i = 0; i < d(); ++i) a_(i, j) = columns_[j].free[i];
  delta_ = lattice_index(columns_, group_);
}

bool PointConfig::is_zero_column(std::size_t j) const { return is_zero_vector(free_column(j)); }

std::vector<IntVector> facet_normals(const PointConfig& config) {
  const std::size_t d = config.d();
  if (d == 0) throw Error(ErrorCode::EmptyCone, kModule, "free rank is zero");
  auto pts = distinct_nonzero(config);
  if (pts.empty()) throw Error(ErrorCode::EmptyCone, kModule, "all free parts are zero");
  if (int_rank(pts) < d) throw Error(ErrorCode::NotFullDimensional, kModule, "cone is not full dimensional");
  return cone_facets(pts, d);
}

std::vector<Functional> facets(const PointConfig& config) {
  std::vector<Functional> out;
  for (const auto& n : facet_normals(config)) out.push_back(to_functional(n));
  return out;
}

namespace {

/// Facets of the cone inside its own linear span, in projected coordinates.
struct ProjectedCone {
  std::vector<std::size_t> coords;
  std::vector<IntVector> normals;
  bool pointed = true;
};

ProjectedCone projected_cone(const PointConfig& config) {
  ProjectedCone pc;
  auto pts = distinct_nonzero(config);
  if (pts.empty()) return pc;
  pc.coords = independent_coordinates(pts, config.d());
  std::vector<IntVector> proj;
  for (const auto& p : pts) proj.push_back(project(p, pc.coords));
  pc.normals = cone_facets(proj, pc.coords.size());
  pc.pointed = int_rank(pc.normals) == pc.coords.size();
  return pc;
}

}  // namespace

bool is_pointed(const PointConfig& config) { return projected_cone(config).pointed; }

IntVector positive_functional(const PointConfig& config) {
  auto pc = projected_cone(config);
  if (!pc.pointed) throw Error(ErrorCode::NotPointed, kModule, "cone contains a line");
  IntVector h(config.d());
  if (pc.coords.empty()) return h;
  for (const auto& n : pc.normals)
    for (std::size_t i = 0; i < pc.coords.size(); ++i) h[pc.coords[i]] += n[i];
  make_primitive(h);
  return h;
}

std::vector<Face> face_lattice(const PointConfig& config) {
  if (!is_pointed(config)) throw Error(ErrorCode::NotPointed, kModule, "face lattice needs a pointed cone");
  const auto normals = facet_normals(config);
  const std::size_t n = config.n();
  auto make_face = [&](std::vector<std::size_t> cols) {
    Face f;
    f.column_indices = std::move(cols);
    std::vector<IntVector> spanned;
    for (auto j : f.column_indices)
      if (!config.is_zero_column(j)) spanned.push_back(config.free_column(j));
    f.dim = int_rank(spanned);
    for (const auto& nv : normals) {
      bool vanishes = true;
      for (auto j : f.column_indices)
        if (dot(nv, config.free_column(j)) != 0) vanishes = false;
      if (vanishes) f.normal_functionals.push_back(to_functional(nv));
    }
    return f;
  };
  std::vector<std::size_t> all(n);
  for (std::size_t j = 0; j < n; ++j) all[j] = j;
  std::set<std::vector<std::size_t>> seen{all};
  std::vector<std::vector<std::size_t>> queue{all};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (const auto& nv : normals) {
      std::vector<std::size_t> sub;
      for (auto j : queue[q])
        if (dot(nv, config.free_column(j)) == 0) sub.push_back(j);
      if (seen.insert(sub).second) queue.push_back(sub);
    }
  }
  std::vector<Face> faces;
  for (auto& cols : queue) faces.push_back(make_face(cols));
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.column_indices < b.column_indices;
  });
  return faces;
}

std::vector<std::vector<std::size_t>> placing_triangulation(const std::vector<IntVector>& points, std::size_t dim) {
  std::vector<std::vector<std::size_t>> simplices;
  if (points.empty()) return simplices;
  std::vector<std::size_t> initial{0};
  std::vector<IntVector> edges;
  std::vector<std::size_t> pending;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (initial.size() == dim + 1) {
      pending.push_back(i);
      continue;
    }
    edges.push_back(difference(points[i], points[0]));
    if (int_rank(edges) == initial.size()) {
      initial.push_back(i);
    } else {
      edges.pop_back();
      pending.push_back(i);
    }
  }
  if (initial.size() < dim + 1) return simplices;
  simplices.push_back(initial);

  // Boundary facets: sorted d-subsets that occur in exactly one simplex, with the opposite vertex.
  auto boundary = [&]() {
    std::map<std::vector<std::size_t>, std::pair<int, std::size_t>> count;
    for (const auto& s : simplices)
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        std::vector<std::size_t> f;
        for (std::size_t k = 0; k < s.size(); ++k)
          if (k != drop) f.push_back(s[k]);
        std::sort(f.begin(), f.end());
        auto& e = count[f];
        e.first += 1;
        e.second = s[drop];
      }
    std::vector<std::pair<std::vector<std::size_t>, std::size_t>> out;
    for (const auto& [f, e] : count)
      if (e.first == 1) out.emplace_back(f, e.second);
    return out;
  };

  for (auto p : pending) {
    std::vector<std::vector<std::size_t>> added;
    for (const auto& [facet, opposite] : boundary()) {
      std::vector<IntVector> vs;
      for (std::size_t k = 1; k < facet.size(); ++k) vs.push_back(difference(points[facet[k]], points[facet[0]]));
      IntVector normal = cross_product(vs, dim);
      int side_p = sgn(dot(normal, difference(points[p], points[facet[0]])));
      int side_o = sgn(dot(normal, difference(points[opposite], points[facet[0]])));
      if (side_p != 0 && side_p != side_o) {
        auto s = facet;
        s.push_back(p);
        added.push_back(s);
      }
    }
    simplices.insert(simplices.end(), added.begin(), added.end());
  }
  return simplices;
}

namespace {

std::vector<IntVector> volume_points(const PointConfig& config) {
  std::vector<IntVector> pts{IntVector(config.d())};
  for (auto& p : distinct_nonzero(config)) pts.push_back(p);
  return pts;
}

}  // namespace

std::vector<std::vector<IntVector>> simplicial_cones(const PointConfig& config) {
  auto pts = volume_points(config);
  std::vector<std::vector<IntVector>> cones;
  for (const auto& s : placing_triangulation(pts, config.d())) {
    if (std::find(s.begin(), s.end(), std::size_t{0}) == s.end()) continue;
    std::vector<IntVector> gens;
    for (auto i : s)
      if (i != 0) gens.push_back(pts[i]);
    cones.push_back(gens);
  }
  return cones;
}

Integer normalized_volume(const PointConfig& config) {
  auto pts = volume_points(config);
  Integer vol = 0;
  for (const auto& s : placing_triangulation(pts, config.d())) {
    IntMatrix m(config.d(), config.d());
    for (std::size_t k = 1; k < s.size(); ++k) {
      auto e = difference(pts[s[k]], pts[s[0]]);
      for (std::size_t i = 0; i < config.d(); ++i) m(k - 1, i) = e[i];
    }
    vol += abs(determinant(m));
  }
  return vol;
}

IntVector epsilon_A(const PointConfig& config) {
  IntVector e(config.d());
  for (std::size_t j = 0; j < config.n(); ++j)
    for (std::size_t i = 0; i < config.d(); ++i) e[i] += config.free_column(j)[i];
  return e;
}

std::optional<Functional> homogenizing_functional(const PointConfig& config) {
  FieldMatrix<Rational> m;
  for (std::size_t j = 0; j < config.n(); ++j) {
    const auto& c = config.free_column(j);
    m.emplace_back(c.begin(), c.end());
  }
  auto x = solve(m, RationalVector(config.n(), Rational(1)));
  if (!x) return std::nullopt;
  return Functional{*x};
}

bool membership_in_arrangement(const std::vector<Cyclotomic>& beta, const Arrangement& arr, const PointConfig& config) {
  const std::size_t d = config.d();
  if (beta.size() != d) throw Error(ErrorCode::DimensionMismatch, kModule, "beta has the wrong length");
  std::uint64_t e = 1;
  for (const auto& b : beta) e = lcm_u64(e, b.order());
  std::vector<RationalVector> components;
  std::size_t degree = 0;
  {
    std::vector<Cyclotomic> promoted;
    for (const auto& b : beta) promoted.push_back(b.promote(static_cast<std::uint32_t>(e)));
    degree = promoted.empty() ? 1 : promoted[0].coeffs().size();
    components.assign(degree, RationalVector(d));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < degree; ++k) components[k][i] = promoted[i].coeffs()[k];
  }
  for (const auto& piece : arr.pieces) {
    FieldMatrix<Rational> span;
    for (auto j : piece.columns) {
      const auto& c = config.free_column(j);
      span.emplace_back(c.begin(), c.end());
    }
    const std::size_t base = span.empty() ? 0 : rank(span);
    bool inside = true;
    for (std::size_t k = 0; k < degree && inside; ++k) {
      RationalVector v = components[k];
      if (k == 0)
        for (std::size_t i = 0; i < d; ++i) v[i] -= piece.shift[i];
      auto aug = span;
      aug.push_back(v);
      if (rank(aug) != base) inside = false;
    }
    if (inside) return true;
  }
  return false;
}

HypothesisReport check_hypotheses(const PointConfig& config) {
  HypothesisReport r;
  r.ell = config.ell();
  r.delta = config.delta();
  auto snf = smith_normal_form(config.A());
  r.spans = snf.rank() == config.d() &&
            std::all_of(snf.invariant_factors.begin(), snf.invariant_factors.end(), [](const Integer& f) { return f == 1; });
  r.pointed = is_pointed(config);
  r.delta_divides_ell = r.delta.has_value() && Integer(r.ell) % *r.delta == 0;
  return r;
}

}  // namespace tgkz
