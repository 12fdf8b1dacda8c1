#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "convexoid/codomains.hpp"
#include "convexoid/conjugate.hpp"
#include "convexoid/duality.hpp"
#include "convexoid/error.hpp"
#include "convexoid/instance.hpp"
#include "convexoid/rational.hpp"

namespace convexoid {

using Point = std::vector<ExtRational>;

/// Coordinates per axis; the grid is their cartesian product in row-major order.
struct GridSpec {
  std::vector<std::vector<ExtRational>> axes;

  static GridSpec line(std::vector<ExtRational> xs) { return GridSpec{{std::move(xs)}}; }
  static GridSpec cube(std::vector<ExtRational> xs, std::size_t dim) {
    return GridSpec{std::vector<std::vector<ExtRational>>(dim, std::move(xs))};
  }
  std::size_t dimension() const { return axes.size(); }
};

inline std::vector<Point> grid_points(const GridSpec& g) {
  if (g.axes.empty()) throw Error("grid needs at least one axis");
  for (const auto& axis : g.axes) {
    if (axis.empty()) throw Error("grid axis is empty");
    for (std::size_t i = 1; i < axis.size(); ++i) {
      if (!(axis[i - 1] < axis[i])) throw Error("grid axis coordinates must be strictly increasing");
    }
  }
  std::vector<Point> out{Point{}};
  for (const auto& axis : g.axes) {
    std::vector<Point> next;
    for (const auto& p : out) {
      for (const auto& x : axis) {
        auto q = p;
        q.push_back(x);
        next.push_back(std::move(q));
      }
    }
    out = std::move(next);
  }
  return out;
}

inline std::string format_point(const Point& p) {
  if (p.size() == 1) return to_string(p[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += to_string(p[i]);
  }
  return s + ")";
}

inline std::vector<std::string> point_names(const std::vector<Point>& pts) {
  std::vector<std::string> out;
  for (const auto& p : pts) out.push_back(format_point(p));
  return out;
}

inline Point concat(const Point& a, const Point& b) {
  Point out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

/// sum of a_i * b_i, with 0 * inf = 0 and +inf absorbing -inf.
inline ExtRational inner_product(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw Error("dimension mismatch in inner product");
  ExtRational acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc = add_upper(acc, mul_zero_absorbing(a[i], b[i]));
  return acc;
}

inline ExtRational l1_norm(const Point& a) {
  ExtRational acc(0);
  for (const auto& x : a) acc = add_upper(acc, abs(x));
  return acc;
}

inline ExtRational linf_norm(const Point& a) {
  ExtRational acc(0);
  for (const auto& x : a) acc = std::max(acc, abs(x));
  return acc;
}

/// Basepoints of a product instance: zero2 indexes delta2, zero1 indexes lambda1.
struct ProductSpec {
  ProductStructure structure;
  std::size_t zero2 = 0;
  std::size_t zero1 = 0;
};

template <Codomain C>
struct GalleryInstance {
  std::string name;
  std::string description;
  Instance<C> inst;
  std::vector<Point> delta_points;
  std::vector<Point> lambda_points;
  std::optional<std::pair<Subset, Subset>> type1;
  std::optional<std::pair<Subset, Subset>> type2;
  std::optional<ProductSpec> product;
};

namespace detail {

inline std::size_t find_point(const std::vector<Point>& pts, const Point& p, const char* what) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i] == p) return i;
  }
  throw Error(std::string(what) + " " + format_point(p) + " is not on the grid");
}

inline std::size_t find_coord(const std::vector<ExtRational>& axis, const ExtRational& x, const char* what) {
  for (std::size_t i = 0; i < axis.size(); ++i) {
    if (axis[i] == x) return i;
  }
  throw Error(std::string(what) + " " + to_string(x) + " is not on the axis");
}

inline std::vector<ExtRational> ints(std::initializer_list<int> xs) {
  std::vector<ExtRational> out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

/// Product ground set P1 x P2 with names "p1|p2" and concatenated coordinates.
struct ProductGrid {
  std::vector<Point> left, right, points;
  std::vector<std::string> left_names, right_names, names;
};

inline ProductGrid product_grid(const GridSpec& g1, const GridSpec& g2) {
  ProductGrid out;
  out.left = grid_points(g1);
  out.right = grid_points(g2);
  out.left_names = point_names(out.left);
  out.right_names = point_names(out.right);
  for (std::size_t i = 0; i < out.left.size(); ++i) {
    for (std::size_t j = 0; j < out.right.size(); ++j) {
      out.points.push_back(concat(out.left[i], out.right[j]));
      out.names.push_back(out.left_names[i] + "|" + out.right_names[j]);
    }
  }
  return out;
}

inline ExtRational pos_inf() { return ExtRational::pos_inf(); }
inline ExtRational neg_inf() { return ExtRational::neg_inf(); }

}  // namespace detail

// ---------------------------------------------------------------------------
// Classic, multiplicative, max-lattice: inner-product couplings on grids
// ---------------------------------------------------------------------------

template <Codomain C, class Rule>
GalleryInstance<C> grid_instance(C codomain, std::string name, std::string description, std::vector<Point> dp,
                                 std::vector<Point> lp, Rule&& rule) {
  auto inst = Instance<C>::from_rule(std::move(codomain), point_names(dp), point_names(lp),
                                     [&](std::size_t a, std::size_t b) { return rule(dp[a], lp[b]); });
  return GalleryInstance<C>{std::move(name), std::move(description), std::move(inst), std::move(dp), std::move(lp),
                            std::nullopt, std::nullopt, std::nullopt};
}

inline Instance<ClassicCodomain> classic_instance(const GridSpec& delta, const GridSpec& lambda) {
  if (delta.dimension() != lambda.dimension()) throw Error("classic instance: dimension mismatch");
  return grid_instance(ClassicCodomain{}, "classic", "", grid_points(delta), grid_points(lambda),
                       [](const Point& a, const Point& b) { return inner_product(a, b); })
      .inst;
}

/// phi(a, b) = |<a, b>| in the multiplicative carrier.
inline Instance<MultiplicativeCodomain> multiplicative_instance(const GridSpec& delta, const GridSpec& lambda) {
  if (delta.dimension() != lambda.dimension()) throw Error("multiplicative instance: dimension mismatch");
  return grid_instance(MultiplicativeCodomain{}, "multiplicative", "", grid_points(delta), grid_points(lambda),
                       [](const Point& a, const Point& b) { return abs(inner_product(a, b)); })
      .inst;
}

namespace gallery {

inline GalleryInstance<ClassicCodomain> classic_1d() {
  const auto pts = grid_points(GridSpec::line(detail::ints({-1, 0, 1})));
  return grid_instance(ClassicCodomain{}, "classic-1d", "inner-product coupling on {-1,0,1}, classic carrier", pts, pts,
                       [](const Point& a, const Point& b) { return inner_product(a, b); });
}

/// Perturbation instance: delta = X x U, lambda = X* x Y*, phi = x.x' + u.y.
/// X carries -inf and +inf so that phi((x,0), (x',y)) reaches -inf for x' != 0.
inline GalleryInstance<ClassicCodomain> classic_product() {
  const GridSpec x{{{detail::neg_inf(), ExtRational(-1), ExtRational(0), ExtRational(1), detail::pos_inf()}}};
  const auto u = GridSpec::line(detail::ints({-1, 0, 1}));
  const auto xs = GridSpec::line(detail::ints({-1, 0, 1}));
  const auto ys = GridSpec::line(detail::ints({-1, 0, 1}));
  auto dg = detail::product_grid(x, u);
  auto lg = detail::product_grid(xs, ys);
  auto g = grid_instance(ClassicCodomain{}, "classic-product",
                         "perturbation pair X x U against X* x Y*, phi = x.x' + u.y, classic carrier", dg.points,
                         lg.points, [](const Point& a, const Point& b) { return inner_product(a, b); });
  g.inst = Instance<ClassicCodomain>(ClassicCodomain{}, dg.names, lg.names, g.inst.phi_table());
  const std::size_t u0 = 1, x0 = 1;
  Subset dbar, lbar;
  for (std::size_t i = 0; i < dg.left.size(); ++i) dbar.push_back(i * dg.right.size() + u0);
  for (std::size_t j = 0; j < lg.right.size(); ++j) lbar.push_back(x0 * lg.right.size() + j);
  g.type1 = {dbar, lbar};
  g.product = ProductSpec{{dg.left_names, dg.right_names, lg.left_names, lg.right_names}, u0, x0};
  return g;
}

inline GalleryInstance<MultiplicativeCodomain> mult_1d() {
  const auto pts = grid_points(GridSpec::line(detail::ints({-2, -1, 0, 1, 2})));
  return grid_instance(MultiplicativeCodomain{}, "mult-1d", "|<a,b>| on {-2..2}, multiplicative carrier", pts, pts,
                       [](const Point& a, const Point& b) { return abs(inner_product(a, b)); });
}

/// delta = X x U, lambda = X* x Y*, phi = |x.x' + u.y|. The Type-I subdomain is
/// X x {1} against {(0, y) : |y| = 1}; the product basepoints sit at u = 0, x' = 0.
inline GalleryInstance<MultiplicativeCodomain> mult_product() {
  const auto axis = GridSpec::line(detail::ints({-1, 0, 1}));
  auto dg = detail::product_grid(axis, axis);
  auto lg = detail::product_grid(axis, axis);
  auto g = grid_instance(MultiplicativeCodomain{}, "mult-product",
                         "X x U against X* x Y*, phi = |x.x' + u.y|, multiplicative carrier", dg.points, lg.points,
                         [](const Point& a, const Point& b) { return abs(inner_product(a, b)); });
  g.inst = Instance<MultiplicativeCodomain>(MultiplicativeCodomain{}, dg.names, lg.names, g.inst.phi_table());
  Subset dbar, lbar;
  for (std::size_t i = 0; i < 3; ++i) dbar.push_back(i * 3 + 2);  // u = 1
  lbar = {1 * 3 + 0, 1 * 3 + 2};                                  // x' = 0, y = -1 or 1
  g.type1 = {dbar, lbar};
  g.product = ProductSpec{{dg.left_names, dg.right_names, lg.left_names, lg.right_names}, 1, 1};
  return g;
}

// ---------------------------------------------------------------------------
// Norm-induced
// ---------------------------------------------------------------------------

enum class NormKind { l1, linf };

inline ExtRational norm_of(NormKind k, const Point& p) { return k == NormKind::l1 ? l1_norm(p) : linf_norm(p); }

inline Instance<ClassicCodomain> norm_instance(const GridSpec& delta, const GridSpec& lambda,
                                               NormKind kind = NormKind::l1) {
  return grid_instance(ClassicCodomain{}, "norm", "", grid_points(delta), grid_points(lambda),
                       [kind](const Point& a, const Point& b) {
                         return mul_zero_absorbing(norm_of(kind, a), norm_of(kind, b));
                       })
      .inst;
}

/// phi = |a|_1 |b|_1 on {-1,0,1}^2; both unit spheres form the Type-I subdomain.
inline GalleryInstance<ClassicCodomain> norm_l1() {
  const auto pts = grid_points(GridSpec::cube(detail::ints({-1, 0, 1}), 2));
  auto g = grid_instance(ClassicCodomain{}, "norm-l1", "1-norm product coupling on {-1,0,1}^2, unit spheres marked",
                         pts, pts, [](const Point& a, const Point& b) { return mul_zero_absorbing(l1_norm(a), l1_norm(b)); });
  Subset sphere;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (l1_norm(pts[i]) == ExtRational(1)) sphere.push_back(i);
  }
  g.type1 = {sphere, sphere};
  return g;
}

// ---------------------------------------------------------------------------
// Bilinear
// ---------------------------------------------------------------------------

/// A square matrix stored row-major.
struct Matrix {
  std::size_t n = 0;
  std::vector<ExtRational> entries;

  const ExtRational& at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
  bool symmetric() const {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (!(at(i, j) == at(j, i))) return false;
      }
    }
    return true;
  }
};

inline std::string format_matrix(const Matrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.n; ++i) {
    if (i) s += ";";
    for (std::size_t j = 0; j < m.n; ++j) {
      if (j) s += ",";
      s += to_string(m.at(i, j));
    }
  }
  return s + "]";
}

/// All n x n matrices with entries from `values`; symmetric ones only by default.
inline std::vector<Matrix> matrix_grid(std::size_t n, const std::vector<ExtRational>& values, bool symmetric_only = true) {
  std::vector<Matrix> out{Matrix{n, std::vector<ExtRational>(n * n)}};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (symmetric_only && j < i) continue;
      std::vector<Matrix> next;
      for (const auto& m : out) {
        for (const auto& v : values) {
          auto q = m;
          q.entries[i * n + j] = v;
          if (symmetric_only) q.entries[j * n + i] = v;
          next.push_back(std::move(q));
        }
      }
      out = std::move(next);
    }
  }
  return out;
}

/// <a a^T, B>
inline ExtRational quadratic_form(const Point& a, const Matrix& m) {
  if (a.size() != m.n) throw Error("shape mismatch between vector and matrix");
  ExtRational acc(0);
  for (std::size_t i = 0; i < m.n; ++i) {
    for (std::size_t j = 0; j < m.n; ++j) acc = add_upper(acc, mul_zero_absorbing(mul_zero_absorbing(a[i], a[j]), m.at(i, j)));
  }
  return acc;
}

enum class BilinearVariant { matrix_only, vector_matrix };

/// Matrix-only: lambda is the matrix grid and phi = <a a^T, B>. Vector+matrix:
/// lambda is (vector grid) x (matrix grid) and phi = <a, b> + <a a^T, B>.
inline GalleryInstance<ClassicCodomain> bilinear_instance(const GridSpec& delta, const std::vector<ExtRational>& entries,
                                                          BilinearVariant variant, bool symmetric_only = true) {
  const auto dp = grid_points(delta);
  const auto n = delta.dimension();
  const auto mats = matrix_grid(n, entries, symmetric_only);
  std::vector<std::string> lnames;
  if (variant == BilinearVariant::matrix_only) {
    for (const auto& m : mats) lnames.push_back(format_matrix(m));
    auto inst = Instance<ClassicCodomain>::from_rule(ClassicCodomain{}, point_names(dp), lnames,
                                                     [&](std::size_t a, std::size_t b) { return quadratic_form(dp[a], mats[b]); });
    return GalleryInstance<ClassicCodomain>{"bilinear", symmetric_only ? "" : "asymmetric matrices allowed", std::move(inst),
                                            dp, {}, std::nullopt, std::nullopt, std::nullopt};
  }
  const auto vecs = grid_points(GridSpec::cube(entries, n));
  std::vector<Point> lp;
  std::vector<const Matrix*> lm;
  for (const auto& v : vecs) {
    for (const auto& m : mats) {
      lnames.push_back(format_point(v) + "|" + format_matrix(m));
      lp.push_back(v);
      lm.push_back(&m);
    }
  }
  auto inst = Instance<ClassicCodomain>::from_rule(ClassicCodomain{}, point_names(dp), lnames, [&](std::size_t a, std::size_t b) {
    return add_upper(inner_product(dp[a], lp[b]), quadratic_form(dp[a], *lm[b]));
  });
  return GalleryInstance<ClassicCodomain>{"bilinear-vm", "", std::move(inst), dp, std::move(lp),
                                          std::nullopt, std::nullopt, std::nullopt};
}

inline GalleryInstance<ClassicCodomain> bilinear_2x2() {
  auto g = bilinear_instance(GridSpec::cube(detail::ints({-1, 0, 1}), 2), detail::ints({-1, 0, 1}),
                             BilinearVariant::matrix_only);
  g.name = "bilinear-2x2";
  g.description = "<aa^T, B> for a in {-1,0,1}^2 and symmetric B with entries in {-1,0,1}";
  return g;
}

inline GalleryInstance<ClassicCodomain> bilinear_vm() {
  auto g = bilinear_instance(GridSpec::line(detail::ints({-1, 0, 1})), detail::ints({-1, 0, 1}),
                             BilinearVariant::vector_matrix);
  g.name = "bilinear-vm";
  g.description = "<a,b> + <aa^T, B> on the line, b and B in {-1,0,1}";
  return g;
}

/// delta = X x U, lambda = Bx x Bu with phi = x^2 Bx + u^2 Bu (block-diagonal quadratic).
inline GalleryInstance<ClassicCodomain> bilinear_product() {
  const auto axis = GridSpec::line(detail::ints({-1, 0, 1}));
  auto dg = detail::product_grid(axis, axis);
  auto lg = detail::product_grid(axis, axis);
  auto g = grid_instance(ClassicCodomain{}, "bilinear-product",
                         "X x U against block-diagonal matrices, phi = x^2 Bx + u^2 Bu", dg.points, lg.points,
                         [](const Point& a, const Point& b) {
                           return add_upper(mul_zero_absorbing(mul_zero_absorbing(a[0], a[0]), b[0]),
                                            mul_zero_absorbing(mul_zero_absorbing(a[1], a[1]), b[1]));
                         });
  g.inst = Instance<ClassicCodomain>(ClassicCodomain{}, dg.names, lg.names, g.inst.phi_table());
  Subset dbar, lbar;
  for (std::size_t i = 0; i < 3; ++i) dbar.push_back(i * 3 + 1);
  for (std::size_t j = 0; j < 3; ++j) lbar.push_back(1 * 3 + j);
  g.type1 = {dbar, lbar};
  g.product = ProductSpec{{dg.left_names, dg.right_names, lg.left_names, lg.right_names}, 1, 1};
  return g;
}

// ---------------------------------------------------------------------------
// Piecewise constant
// ---------------------------------------------------------------------------

enum class BallKind { box, l1 };

/// lambda = scales x centers, phi(a, (g, c)) = g * [a in B(c)], B a ball of the given radius.
inline GalleryInstance<ClassicCodomain> pwc_type1_instance(const GridSpec& grid, const std::vector<ExtRational>& scales,
                                                           const Rational& radius, BallKind ball = BallKind::box) {
  if (radius <= Rational(0)) throw Error("ball radius must be positive");
  const auto dp = grid_points(grid);
  std::vector<Point> lp;
  std::vector<std::string> lnames;
  for (const auto& s : scales) {
    for (const auto& c : dp) {
      lp.push_back(concat(Point{s}, c));
      lnames.push_back(to_string(s) + "|" + format_point(c));
    }
  }
  auto in_ball = [&](const Point& a, const Point& c) {
    Point d;
    for (std::size_t i = 0; i < a.size(); ++i) d.push_back(ExtRational(a[i].value() - c[i].value()));
    const auto r = ball == BallKind::box ? linf_norm(d) : l1_norm(d);
    return r <= ExtRational(radius);
  };
  auto inst = Instance<ClassicCodomain>::from_rule(ClassicCodomain{}, point_names(dp), lnames, [&](std::size_t a, std::size_t b) {
    const Point c(lp[b].begin() + 1, lp[b].end());
    return in_ball(dp[a], c) ? lp[b][0] : ExtRational(0);
  });
  GalleryInstance<ClassicCodomain> g{"pwc1", "", std::move(inst), dp, lp, std::nullopt, std::nullopt, std::nullopt};
  Subset zero_scale;
  for (std::size_t b = 0; b < lp.size(); ++b) {
    if (lp[b][0] == ExtRational(0)) zero_scale.push_back(b);
  }
  if (!zero_scale.empty()) g.type1 = {g.inst.all(Side::delta), zero_scale};
  return g;
}

inline GalleryInstance<ClassicCodomain> pwc1() {
  auto g = pwc_type1_instance(GridSpec::line(detail::ints({-2, -1, 0, 1, 2})), detail::ints({-1, 0, 1}), Rational(1));
  g.description = "scaled box indicators of radius 1 on {-2..2}, scales {-1,0,1}";
  return g;
}

/// A total assignment of delta positions to cells 0..n-1, each cell nonempty.
struct PartitionSpec {
  std::size_t cells = 0;
  std::vector<std::size_t> cell_of;
};

inline void validate_partition(const PartitionSpec& p, std::size_t delta_size) {
  if (p.cell_of.size() != delta_size) throw Error("partition does not cover every delta element");
  std::vector<bool> used(p.cells, false);
  for (auto c : p.cell_of) {
    if (c >= p.cells) throw Error("partition cell out of range");
    used[c] = true;
  }
  for (std::size_t c = 0; c < p.cells; ++c) {
    if (!used[c]) throw Error("partition cell " + std::to_string(c) + " is empty");
  }
}

/// phi(a, b) = b_{cell(a)} with b ranging over coordinate_values^cells.
inline GalleryInstance<ClassicCodomain> pwc_type2_instance(const GridSpec& grid, const PartitionSpec& p,
                                                           const std::vector<ExtRational>& coordinate_values) {
  const auto dp = grid_points(grid);
  validate_partition(p, dp.size());
  const auto lp = grid_points(GridSpec::cube(coordinate_values, p.cells));
  auto inst = Instance<ClassicCodomain>::from_rule(ClassicCodomain{}, point_names(dp), point_names(lp),
                                                   [&](std::size_t a, std::size_t b) { return lp[b][p.cell_of[a]]; });
  return GalleryInstance<ClassicCodomain>{"pwc2", "", std::move(inst), dp, lp, std::nullopt, std::nullopt, std::nullopt};
}

inline PartitionSpec pwc2_partition() { return PartitionSpec{2, {0, 0, 0, 1, 1, 1}}; }

inline GalleryInstance<ClassicCodomain> pwc2() {
  auto g = pwc_type2_instance(GridSpec::line(detail::ints({0, 1, 2, 3, 4, 5})), pwc2_partition(),
                              {detail::neg_inf(), ExtRational(-1), ExtRational(0), ExtRational(1)});
  g.description = "cells {0,1,2} and {3,4,5}, phi = b_cell(a), b in {-inf,-1,0,1}^2";
  return g;
}

/// delta = X x U, lambda = X* x Y*, phi = b_cell(x) + u.y; basepoints u = 0, x' = 0.
inline GalleryInstance<ClassicCodomain> pwc2_product() {
  const PartitionSpec part{2, {0, 0, 1, 1}};
  const auto bx = GridSpec::cube({detail::neg_inf(), ExtRational(-1), ExtRational(0), ExtRational(1)}, 2);
  const auto u = GridSpec::line(detail::ints({-1, 0, 1}));
  auto dg = detail::product_grid(GridSpec::line(detail::ints({0, 1, 2, 3})), u);
  auto lg = detail::product_grid(bx, u);
  auto inst = Instance<ClassicCodomain>::from_rule(ClassicCodomain{}, dg.names, lg.names, [&](std::size_t a, std::size_t b) {
    const auto cell = part.cell_of[a / dg.right.size()];
    const auto& lpnt = lg.points[b];
    const auto& dpnt = dg.points[a];
    return add_upper(lpnt[cell], mul_zero_absorbing(dpnt[1], lpnt[2]));
  });
  GalleryInstance<ClassicCodomain> g{"pwc2-product", "cells {0,1},{2,3} with a perturbation axis, phi = b_cell(x) + u.y",
                                     std::move(inst), dg.points, lg.points, std::nullopt, std::nullopt, std::nullopt};
  const std::size_t u0 = 1;
  const std::size_t x0 = detail::find_point(lg.left, Point{ExtRational(0), ExtRational(0)}, "basepoint");
  Subset dbar, lbar;
  for (std::size_t i = 0; i < dg.left.size(); ++i) dbar.push_back(i * dg.right.size() + u0);
  for (std::size_t j = 0; j < lg.right.size(); ++j) lbar.push_back(x0 * lg.right.size() + j);
  g.type1 = {dbar, lbar};
  g.product = ProductSpec{{dg.left_names, dg.right_names, lg.left_names, lg.right_names}, u0, x0};
  return g;
}

// ---------------------------------------------------------------------------
// Max-lattice threshold instance
// ---------------------------------------------------------------------------

/// delta = X x U with U = {0, 1}, lambda = X* x Y*, phi = x.x' + u.y in the
/// max-lattice carrier. The Type-I subdomain is X x {1} against the beta
/// section {(0, y) : y = beta}; it is absent when beta is not on the Y* axis.
inline GalleryInstance<MaxLatticeCodomain> lattice_instance(const ExtRational& beta, std::vector<ExtRational> y_axis) {
  const GridSpec x{{{detail::neg_inf(), ExtRational(-1), ExtRational(0), ExtRational(1), detail::pos_inf()}}};
  const auto u = GridSpec::line(detail::ints({0, 1}));
  const auto xs = GridSpec::line(detail::ints({-1, 0, 1}));
  auto dg = detail::product_grid(x, u);
  auto lg = detail::product_grid(xs, GridSpec::line(std::move(y_axis)));
  auto inst = Instance<MaxLatticeCodomain>::from_rule(MaxLatticeCodomain{}, dg.names, lg.names, [&](std::size_t a, std::size_t b) {
    return inner_product(dg.points[a], lg.points[b]);
  });
  GalleryInstance<MaxLatticeCodomain> g{"lattice-beta", "max-lattice carrier, phi = x.x' + u.y, beta section " + to_string(beta),
                                        std::move(inst), dg.points, lg.points, std::nullopt, std::nullopt, std::nullopt};
  Subset dbar, lbar;
  for (std::size_t i = 0; i < dg.left.size(); ++i) dbar.push_back(i * dg.right.size() + 1);
  for (std::size_t j = 0; j < lg.right.size(); ++j) {
    if (lg.right[j][0] == beta) lbar.push_back(1 * lg.right.size() + j);
  }
  if (!lbar.empty()) g.type1 = {dbar, lbar};
  g.product = ProductSpec{{dg.left_names, dg.right_names, lg.left_names, lg.right_names}, 0, 1};
  return g;
}

inline GalleryInstance<MaxLatticeCodomain> lattice_beta(const ExtRational& beta = ExtRational(1)) {
  return lattice_instance(beta, {beta});
}

/// sup over the beta section of f*(b) odot beta; bottom when the section is empty.
inline ExtRational lattice_threshold_dual(const GalleryInstance<MaxLatticeCodomain>& g, const FuncTable<ExtRational>& f,
                                          const ExtRational& beta) {
  if (!g.type1) return g.inst.codomain().bottom();
  const auto fs = conjugate(g.inst, f);
  auto acc = g.inst.codomain().bottom();
  for (auto b : g.type1->second) acc = g.inst.codomain().join(acc, g.inst.codomain().odot(fs[b], beta));
  return acc;
}

}  // namespace gallery

// ---------------------------------------------------------------------------
// Radial
// ---------------------------------------------------------------------------

/// Ray grid: each direction carries the same strictly increasing positive magnitudes.
struct RaySpec {
  std::vector<Point> directions;
  std::vector<Rational> magnitudes;
};

struct RayPoint {
  std::size_t direction = 0;
  Rational magnitude;
};

/// The radial convexoid on a ray grid. Its coupling rad_f depends on f, so it
/// is not a fixed Instance; `instance_for(f)` materializes it for one f.
class RadialDescriptor {
 public:
  explicit RadialDescriptor(RaySpec spec) : spec_(std::move(spec)) {
    if (spec_.directions.empty()) throw Error("ray grid needs a direction");
    if (spec_.magnitudes.empty()) throw Error("ray grid needs a magnitude");
    const auto dim = spec_.directions.front().size();
    for (std::size_t d = 0; d < spec_.directions.size(); ++d) {
      const auto& v = spec_.directions[d];
      if (v.size() != dim || dim == 0) throw Error("ray directions must share a positive dimension");
      bool nonzero = false;
      for (const auto& x : v) {
        if (!x.is_finite()) throw Error("ray direction must be finite");
        nonzero = nonzero || !(x == ExtRational(0));
      }
      if (!nonzero) throw Error("ray direction must be nonzero");
      for (std::size_t e = 0; e < d; ++e) {
        if (co_ray(spec_.directions[e], v)) throw Error("ray directions " + std::to_string(e) + " and " + std::to_string(d) + " coincide");
      }
    }
    for (std::size_t i = 0; i < spec_.magnitudes.size(); ++i) {
      if (spec_.magnitudes[i] <= Rational(0)) throw Error("ray magnitudes must be positive");
      if (i && !(spec_.magnitudes[i - 1] < spec_.magnitudes[i])) throw Error("ray magnitudes must be strictly increasing");
    }
    for (std::size_t d = 0; d < spec_.directions.size(); ++d) {
      for (const auto& m : spec_.magnitudes) {
        points_.push_back(RayPoint{d, m});
        names_.push_back("r" + std::to_string(d) + "@" + to_string(m));
      }
    }
  }

  const RaySpec& spec() const { return spec_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const RayPoint& point(std::size_t i) const { return points_.at(i); }

  Point cartesian(std::size_t i) const {
    Point p;
    for (const auto& x : spec_.directions[points_[i].direction]) p.emplace_back(x.value() * points_[i].magnitude);
    return p;
  }

  /// rad_f(a, b): (a, f(a)) and (b, 1) lie on one ray, i.e. a = f(a) b.
  /// Zero and infinite values of f never relate.
  bool rad(const FuncTable<ExtRational>& f, std::size_t a, std::size_t b) const {
    const auto& v = f[a];
    if (!v.is_finite() || v == ExtRational(0)) return false;
    return points_[a].direction == points_[b].direction && points_[a].magnitude == v.value() * points_[b].magnitude;
  }

  Instance<MultiplicativeCodomain> instance_for(const FuncTable<ExtRational>& f) const {
    check(f);
    return Instance<MultiplicativeCodomain>::from_rule(MultiplicativeCodomain{}, names_, names_,
                                                       [&](std::size_t a, std::size_t b) {
                                                         return rad(f, a, b) ? ExtRational(1) : ExtRational(0);
                                                       });
  }

  /// f*(b) = sup_a rad_f(a, b) / f(a).
  FuncTable<ExtRational> radial_conjugate(const FuncTable<ExtRational>& f) const {
    check(f);
    const MultiplicativeCodomain c;
    FuncTable<ExtRational> out{opposite(f.side), {}};
    for (std::size_t b = 0; b < size(); ++b) {
      auto acc = c.bottom();
      for (std::size_t a = 0; a < size(); ++a) acc = c.join(acc, c.odot(f[a], rad(f, a, b) ? ExtRational(1) : ExtRational(0)));
      out.values.push_back(acc);
    }
    return out;
  }

  FuncTable<ExtRational> radial_double_conjugate(const FuncTable<ExtRational>& f) const {
    return radial_conjugate(radial_conjugate(f));
  }

  bool is_star_convex(const FuncTable<ExtRational>& f) const { return f == radial_double_conjugate(f); }

  /// Delta = everything, Lambda-bar = points hit by some rad_f(a, .), alpha = 1.
  TypeIISystem<MultiplicativeCodomain> type2_system(const FuncTable<ExtRational>& f) const {
    auto inst = instance_for(f);
    Subset lbar;
    for (std::size_t b = 0; b < size(); ++b) {
      for (std::size_t a = 0; a < size(); ++a) {
        if (rad(f, a, b)) {
          lbar.push_back(b);
          break;
        }
      }
    }
    if (lbar.empty()) throw SubdomainError("no radial pair on the grid", "rad_f vanishes everywhere");
    auto all = inst.all(Side::delta);
    return make_type2_system(std::move(inst), std::move(all), std::move(lbar));
  }

 private:
  static bool co_ray(const Point& a, const Point& b) {
    // a = t b with t > 0: cross-ratios agree and signs match.
    std::optional<Rational> t;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const auto& x = a[i].value();
      const auto& y = b[i].value();
      if ((x == Rational(0)) != (y == Rational(0))) return false;
      if (x == Rational(0)) continue;
      const Rational r = x / y;
      if (r <= Rational(0) || (t && *t != r)) return false;
      t = r;
    }
    return true;
  }

  void check(const FuncTable<ExtRational>& f) const {
    if (f.size() != size()) throw Error("function does not match the ray grid");
    for (const auto& v : f.values) {
      if (v < ExtRational(0)) throw Error("radial functions take nonnegative values");
    }
  }

  RaySpec spec_;
  std::vector<RayPoint> points_;
  std::vector<std::string> names_;
};

/// Independent radial conjugate: push each graph point (a, f(a)) through
/// Gamma(a, u) = (a, 1) / u in cartesian coordinates and read off, for each b,
/// the largest last coordinate v with (b, v) in the image.
inline FuncTable<ExtRational> gamma_oracle(const RadialDescriptor& r, const FuncTable<ExtRational>& f) {
  std::vector<std::pair<Point, Rational>> image;
  for (std::size_t a = 0; a < r.size(); ++a) {
    const auto& u = f[a];
    if (!u.is_finite() || u == ExtRational(0)) continue;
    Point p;
    for (const auto& x : r.cartesian(a)) p.emplace_back(x.value() / u.value());
    image.emplace_back(std::move(p), Rational(1) / u.value());
  }
  FuncTable<ExtRational> out{opposite(f.side), {}};
  for (std::size_t b = 0; b < r.size(); ++b) {
    const auto pb = r.cartesian(b);
    ExtRational best(0);
    for (const auto& [p, v] : image) {
      if (p == pb && ExtRational(v) > best) best = ExtRational(v);
    }
    out.values.push_back(best);
  }
  return out;
}

namespace gallery {

inline RadialDescriptor radial_1ray() {
  return RadialDescriptor(RaySpec{{Point{ExtRational(1)}}, {Rational(1, 2), Rational(1), Rational(2)}});
}

inline RadialDescriptor radial_2ray() {
  return RadialDescriptor(RaySpec{{Point{ExtRational(1), ExtRational(0)}, Point{ExtRational(1), ExtRational(1)}},
                                  {Rational(1, 2), Rational(1), Rational(2), Rational(4)}});
}

}  // namespace gallery

}  // namespace convexoid
