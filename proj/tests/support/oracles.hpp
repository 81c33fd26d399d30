#pragma once

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <random>
#include <vector>

#include "tgkz/group_lattice.hpp"

namespace tgkz::testing {

inline GroupElement elem(const AbelianGroup& g, std::initializer_list<long> torsion, std::initializer_list<long> free) {
  IntVector f;
  for (long x : free) f.emplace_back(x);
  return GroupElement::make(g, std::vector<long>(torsion), f);
}

inline IntVector ivec(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

/// Calls fn on every integer vector of length n with entries in [-bound, bound].
inline void for_each_box_vector(std::size_t n, long bound, const std::function<void(const IntVector&)>& fn) {
  IntVector v(n, Integer(-bound));
  if (n == 0) {
    fn(v);
    return;
  }
  for (;;) {
    fn(v);
    std::size_t i = 0;
    while (i < n && v[i] == bound) v[i++] = -bound;
    if (i == n) return;
    v[i] += 1;
  }
}

/// sum v_j a_j == 0 in N, evaluated directly on coordinates.
inline bool in_group_kernel(const std::vector<GroupElement>& cols, const AbelianGroup& g, const IntVector& v) {
  const auto& orders = g.torsion_orders();
  for (std::size_t i = 0; i < orders.size(); ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < cols.size(); ++j) s += v[j] * cols[j].torsion[i];
    if (mod_floor(s, orders[i]) != 0) return false;
  }
  for (std::size_t i = 0; i < g.free_rank(); ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < cols.size(); ++j) s += v[j] * cols[j].free[i];
    if (s != 0) return false;
  }
  return true;
}

/// Laplace expansion; independent of the Bareiss routine in the library.
inline Integer laplace_det(const std::vector<IntVector>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<IntVector> minor;
    for (std::size_t r = 1; r < n; ++r) {
      IntVector row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    Integer t = m[0][c] * laplace_det(minor);
    det += (c % 2 == 0) ? t : Integer(-t);
  }
  return det;
}

/// gcd of all k x k minors of m (the k-th determinantal divisor).
inline Integer determinantal_divisor(const std::vector<IntVector>& m, std::size_t k) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  Integer g = 0;
  std::vector<std::size_t> rs, cs;
  std::function<void(std::size_t)> pick_cols;
  std::function<void(std::size_t)> pick_rows = [&](std::size_t start) {
    if (rs.size() == k) {
      cs.clear();
      pick_cols(0);
      return;
    }
    for (std::size_t r = start; r < rows; ++r) {
      rs.push_back(r);
      pick_rows(r + 1);
      rs.pop_back();
    }
  };
  pick_cols = [&](std::size_t start) {
    if (cs.size() == k) {
      std::vector<IntVector> sub;
      for (auto r : rs) {
        IntVector row;
        for (auto c : cs) row.push_back(m[r][c]);
        sub.push_back(row);
      }
      g = gcd(g, laplace_det(sub));
      return;
    }
    for (std::size_t c = start; c < cols; ++c) {
      cs.push_back(c);
      pick_cols(c + 1);
      cs.pop_back();
    }
  };
  pick_rows(0);
  return abs(g);
}

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

}  // namespace tgkz::testing

namespace tgkz::testing {

/// Every primitive integer normal with entries in [-bound, bound] that is
/// nonnegative on all points and vanishes on a rank d - 1 subset of them.
inline std::vector<IntVector> brute_force_facets(const std::vector<IntVector>& pts, std::size_t d, long bound) {
  std::vector<IntVector> out;
  for_each_box_vector(d, bound, [&](const IntVector& n) {
    Integer g = 0;
    for (const auto& x : n) g = gcd(g, x);
    if (g != 1) return;
    std::vector<IntVector> zero;
    for (const auto& p : pts) {
      Integer s = 0;
      for (std::size_t i = 0; i < d; ++i) s += n[i] * p[i];
      if (s < 0) return;
      if (s == 0) zero.push_back(p);
    }
    std::size_t r = 0;
    if (!zero.empty()) {
      IntMatrix m = IntMatrix::from_rows(zero, d);
      r = smith_normal_form(m).rank();
    }
    if (r + 1 == d) out.push_back(n);
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// Largest absolute (d - 1) x (d - 1) minor of the point list; bounds facet normal entries.
inline long minor_bound(const std::vector<IntVector>& pts, std::size_t d) {
  if (d <= 1) return 1;
  Integer best = 1;
  std::vector<IntVector> rows;
  std::function<void(std::size_t)> pick = [&](std::size_t start) {
    if (rows.size() == d - 1) {
      for (std::size_t drop = 0; drop < d; ++drop) {
        std::vector<IntVector> sub;
        for (const auto& r : rows) {
          IntVector x;
          for (std::size_t k = 0; k < d; ++k)
            if (k != drop) x.push_back(r[k]);
          sub.push_back(x);
        }
        Integer m = abs(laplace_det(sub));
        if (m > best) best = m;
      }
      return;
    }
    for (std::size_t i = start; i < pts.size(); ++i) {
      rows.push_back(pts[i]);
      pick(i + 1);
      rows.pop_back();
    }
  };
  pick(0);
  return best.get_si();
}

/// Twice the area of the convex hull of 0 and the points (d = 2), by gift wrapping and shoelace.
inline Integer hull_area_oracle(std::vector<IntVector> pts) {
  pts.push_back(IntVector{0, 0});
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  auto cross = [](const IntVector& o, const IntVector& a, const IntVector& b) {
    return Integer((a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]));
  };
  if (pts.size() < 3) return 0;
  std::vector<IntVector> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i - 1]) <= 0) --k;
    hull[k++] = pts[i - 1];
  }
  hull.resize(k - 1);
  Integer area = 0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto& a = hull[i];
    const auto& b = hull[(i + 1) % hull.size()];
    area += a[0] * b[1] - a[1] * b[0];
  }
  return abs(area);
}

}  // namespace tgkz::testing

#include "tgkz/semigroup_modules.hpp"

namespace tgkz::testing {

inline std::vector<GroupElement> all_torsion(const AbelianGroup& g, const IntVector& free) {
  std::vector<GroupElement> out;
  std::vector<long> t(g.torsion_rank(), 0);
  for (;;) {
    out.emplace_back(t, free);
    std::size_t i = 0;
    while (i < t.size() && t[i] + 1 == g.torsion_orders()[i]) t[i++] = 0;
    if (i == t.size()) return out;
    ++t[i];
  }
}

/// Every module element whose free part lies in [-box, box]^d and has h-degree <= max_h.
inline std::vector<GroupElement> scan_module(const SemigroupModule& m, long box, const Integer& max_h) {
  std::vector<GroupElement> out;
  const auto& h = m.grading();
  for_each_box_vector(m.config().d(), box, [&](const IntVector& p) {
    Integer hp = 0;
    for (std::size_t i = 0; i < p.size(); ++i) hp += h[i] * p[i];
    if (hp > max_h) return;
    for (auto& t : all_torsion(m.config().group(), p))
      if (membership(t, m)) out.push_back(t);
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// Primitive elements by the defining subtraction test over a scanned region.
inline std::vector<GroupElement> scan_primitives(const SemigroupModule& m, long box, const Integer& max_h) {
  std::vector<GroupElement> out;
  for (auto& t : scan_module(m, box, max_h)) {
    bool prim = true;
    for (std::size_t j = 0; j < m.config().n() && prim; ++j) {
      if (m.config().is_zero_column(j)) continue;
      if (membership(subtract(m.config().group(), t, m.config().column(j)), m)) prim = false;
    }
    if (prim) out.push_back(t);
  }
  return out;
}

}  // namespace tgkz::testing
