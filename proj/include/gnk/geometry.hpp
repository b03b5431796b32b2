#ifndef GNK_GEOMETRY_HPP_
#define GNK_GEOMETRY_HPP_

// Exact predicates for points on the parabola y = x^2, and the order in which
// a point rounding P_j from above crosses the circles through P_j and two
// other configuration points.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gnk/errors.hpp"
#include "gnk/presentation.hpp"
#include "gnk/pure_braid.hpp"
#include "gnk/rational.hpp"

namespace gnk {

  inline Point on_parabola(Rat const& t) {
    return {t, t * t};
  }

  /// Determinant of the linear system for the center of a circle through
  /// (x_i, x_i^2), i = 0..3.
  inline Rat delta_det(Rat const& x0, Rat const& x1, Rat const& x2, Rat const& x3) {
    Rat const xs[3] = {x1, x2, x3};
    Rat       m[3][3];
    Rat const x02 = x0 * x0, x04 = x02 * x02;
    for (int r = 0; r < 3; ++r) {
      Rat const xi2 = xs[r] * xs[r];
      m[r][0]       = x0 - xs[r];
      m[r][1]       = x02 - xi2;
      m[r][2]       = xi2 - x02 + xi2 * xi2 - x04;
    }
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
           - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
           + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }

  /// (x0-x1)(x0-x2)(x0-x3)(x1-x2)(x1-x3)(x2-x3)(x0+x1+x2+x3)
  inline Rat delta_product(Rat const& x0, Rat const& x1, Rat const& x2, Rat const& x3) {
    return (x0 - x1) * (x0 - x2) * (x0 - x3) * (x1 - x2) * (x1 - x3) * (x2 - x3)
           * (x0 + x1 + x2 + x3);
  }

  /// Four distinct points of the parabola lie on one circle iff their
  /// abscissas sum to zero.
  inline bool concyclic_on_parabola(Rat const& x0, Rat const& x1, Rat const& x2, Rat const& x3) {
    Rat const xs[4] = {x0, x1, x2, x3};
    for (int a = 0; a < 4; ++a) {
      for (int b = a + 1; b < 4; ++b) {
        if (xs[a] == xs[b]) {
          throw DegenerateInput("concyclic_on_parabola: repeated abscissa");
        }
      }
    }
    return x0 + x1 + x2 + x3 == 0;
  }

  /// Abscissa of the fourth point where the circle through P_i, P_j, P_k
  /// meets the parabola.
  inline Rat fourth_intersection(Rat const& ti, Rat const& tj, Rat const& tk) {
    return -(ti + tj + tk);
  }

  struct Circle {
    Point center;
    Rat   radius_sq;
  };

  inline Circle circle_through(Point const& p1, Point const& p2, Point const& p3) {
    // 2(p2-p1).c = |p2|^2-|p1|^2, 2(p3-p1).c = |p3|^2-|p1|^2
    Point const u = p2 - p1, v = p3 - p1;
    Rat const   det = 2 * cross(u, v);
    if (det == 0) {
      throw NoCircle("points are collinear");
    }
    Rat const bu = norm_sq(p2) - norm_sq(p1);
    Rat const bv = norm_sq(p3) - norm_sq(p1);
    Point     c{(bu * v.y - bv * u.y) / det, (u.x * bv - v.x * bu) / det};
    return {c, norm_sq(p1 - c)};
  }

  /// Value of the circle equation (x-a)^2 + (y-b)^2 - r^2 at p.
  inline Rat circle_equation(Circle const& c, Point const& p) {
    return norm_sq(p - c.center) - c.radius_sq;
  }

  /// Slope at P_k of the circle through P_k, P_l, P_m.
  inline Rat slope_kappa(Rat const& tk, Rat const& tl, Rat const& tm) {
    if (tk == tl || tk == tm || tl == tm) {
      throw DegenerateInput("slope_kappa: abscissas must be distinct");
    }
    Rat const s   = tl + tm;
    Rat const num = tk * tk * s + tk * (s * s + 2) + tl * tm * s;
    Rat const den = tk * tk - tk * s - (tl * tl + tl * tm + tm * tm + 1);
    if (den == 0) {
      throw TangentVertical("tangent line is vertical");
    }
    return -num / den;
  }

  ////////////////////////////////////////////////////////////////////////
  // Configurations on the parabola
  ////////////////////////////////////////////////////////////////////////

  struct ParabolaConfig {
    int              n = 0;
    std::vector<Rat> t;  // t[0] < ... < t[n-1], point labels are 1-based

    ParabolaConfig() = default;
    explicit ParabolaConfig(std::vector<Rat> ts) : n(static_cast<int>(ts.size())), t(std::move(ts)) {
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] <= 0 || (i > 0 && t[i] <= t[i - 1])) {
          throw UnorderedConfiguration("abscissas must be positive and increasing");
        }
      }
    }

    Rat const& at(int label) const {
      return t.at(static_cast<std::size_t>(label - 1));
    }

    Point point(int label) const {
      return on_parabola(at(label));
    }
  };

  /// t_1 = 1, t_i = 100 t_{i-1}^2.
  inline ParabolaConfig growth_sequence_case1(int n) {
    if (n < 1) {
      throw InvalidContext("growth_sequence_case1 needs n >= 1");
    }
    std::vector<Rat> t{Rat(1)};
    for (int i = 1; i < n; ++i) {
      t.push_back(100 * t.back() * t.back());
    }
    return ParabolaConfig(std::move(t));
  }

  inline bool check_growth_case1(ParabolaConfig const& cfg) {
    if (cfg.n >= 1 && cfg.t[0] < 1) {
      return false;
    }
    for (int i = 1; i < cfg.n; ++i) {
      if (cfg.t[i] < 100 * cfg.t[i - 1] * cfg.t[i - 1]) {
        return false;
      }
    }
    return true;
  }

  /// sin^2 of the smallest angle P_u P_v P_w over labels <= p.
  inline Rat min_angle_sin_sq(ParabolaConfig const& cfg, int p) {
    bool found = false;
    Rat  best;
    for (int v = 1; v <= p; ++v) {
      for (int u = 1; u <= p; ++u) {
        for (int w = u + 1; w <= p; ++w) {
          if (u == v || w == v) {
            continue;
          }
          Point a = cfg.point(u) - cfg.point(v), b = cfg.point(w) - cfg.point(v);
          if (dot(a, b) <= 0) {
            continue;  // not acute, so not the minimum
          }
          Rat c = cross(a, b);
          Rat s = c * c / (norm_sq(a) * norm_sq(b));
          if (!found || s < best) {
            best  = s;
            found = true;
          }
        }
      }
    }
    if (!found) {
      throw DegenerateInput("no acute angle among the first points");
    }
    return best;
  }

  /// R_p^2: the largest squared radius of a circle through three points with
  /// labels <= p.
  inline Rat max_radius_sq(ParabolaConfig const& cfg, int p) {
    Rat best = 0;
    for (int k = 1; k <= p; ++k) {
      for (int l = k + 1; l <= p; ++l) {
        for (int m = l + 1; m <= p; ++m) {
          best = std::max(best, circle_through(cfg.point(k), cfg.point(l), cfg.point(m)).radius_sq);
        }
      }
    }
    return best;
  }

  // Growth condition at one index i > 3 (1-based).
  inline bool growth_case23_at(ParabolaConfig const& cfg, int i) {
    Rat const& ti = cfg.at(i);
    Rat const& tp = cfg.at(i - 1);
    if (ti < tp) {
      return false;
    }
    Rat const tp2 = tp * tp;
    // t_i >= 3 t_{i-1}^2 / sin(alpha_{i-1})
    if (ti * ti * min_angle_sin_sq(cfg, i - 1) < 9 * tp2 * tp2) {
      return false;
    }
    // t_i >= t_{i-1}^2 + 2 R_{i-1}
    Rat const gap = ti - tp2;
    return gap >= 0 && gap * gap >= 4 * max_radius_sq(cfg, i - 1);
  }

  inline bool check_growth_case23(ParabolaConfig const& cfg) {
    if (cfg.n < 3) {
      throw InvalidContext("check_growth_case23 needs n >= 3");
    }
    if (cfg.t[0] < 1) {
      return false;
    }
    for (int i = 4; i <= cfg.n; ++i) {
      if (!growth_case23_at(cfg, i)) {
        return false;
      }
    }
    return true;
  }

  /// Doubles t_i (for i = 4, 5, ...) until the case 2/3 condition holds at i,
  /// keeping t_{i+1} >= 100 t_i^2 so that the case-1 condition survives.
  inline ParabolaConfig upgrade_growth(ParabolaConfig cfg) {
    for (int i = 2; i <= cfg.n; ++i) {
      Rat& ti  = cfg.t[static_cast<std::size_t>(i - 1)];
      Rat  min = 100 * cfg.at(i - 1) * cfg.at(i - 1);
      if (ti < min) {
        ti = min;
      }
      if (i > 3) {
        while (!growth_case23_at(cfg, i)) {
          ti *= 2;
        }
      }
    }
    return cfg;
  }

  /// growth_sequence_case1(n), upgraded so that both growth checks pass.
  inline ParabolaConfig growth_sequence(int n) {
    auto cfg = growth_sequence_case1(n);
    return n >= 4 ? upgrade_growth(cfg) : cfg;
  }

  ////////////////////////////////////////////////////////////////////////
  // Crossing orders
  ////////////////////////////////////////////////////////////////////////

  // Direction at P_k of the tangent to C_{klm}, on the side above the parabola.
  inline Point upper_tangent(ParabolaConfig const& cfg, int k, int l, int m) {
    Point const pk = cfg.point(k);
    Circle      c  = circle_through(pk, cfg.point(l), cfg.point(m));
    Point const r  = pk - c.center;
    Point       d{-r.y, r.x};
    Point const normal{-2 * cfg.at(k), Rat(1)};
    int         s = sign(dot(d, normal));
    if (s == 0) {
      throw DegenerateInput("circle is tangent to the parabola");
    }
    return s > 0 ? d : Point{-d.x, -d.y};
  }

  inline int circle_case(int k, int l, int m) {
    if (m < k) {
      return 1;
    }
    if (l < k) {
      return 2;
    }
    return 3;
  }

  /// Circles C_{k,l,m} (l < m, both != k and not in `exclude`) in the order a
  /// point rounding P_k from above in the direction of increasing t meets
  /// them: clockwise order of the upper tangent directions starting from the
  /// backward tangent of the parabola.
  inline std::vector<std::pair<int, int>> crossing_order_all(ParabolaConfig const& cfg, int k,
                                                             std::vector<int> const& exclude = {}) {
    struct Item {
      int   l, m;
      Point d;
    };
    std::vector<Item> items;
    auto excluded = [&](int x) {
      return x == k || std::find(exclude.begin(), exclude.end(), x) != exclude.end();
    };
    for (int l = 1; l <= cfg.n; ++l) {
      for (int m = l + 1; m <= cfg.n; ++m) {
        if (!excluded(l) && !excluded(m)) {
          items.push_back({l, m, upper_tangent(cfg, k, l, m)});
        }
      }
    }
    std::stable_sort(items.begin(), items.end(),
                     [](Item const& a, Item const& b) { return cross(a.d, b.d) < 0; });
    std::vector<std::pair<int, int>> out;
    for (auto const& it : items) {
      out.emplace_back(it.l, it.m);
    }
    return out;
  }

  /// The circles of one case (1: l < m < k, 2: l < k < m, 3: k < l < m) in
  /// crossing order.
  inline std::vector<std::pair<int, int>> crossing_order(ParabolaConfig const& cfg, int k, int which,
                                                         std::vector<int> const& exclude = {}) {
    if (k < 1 || k > cfg.n) {
      throw InvalidPair("crossing_order: point index out of range");
    }
    if (which < 1 || which > 3) {
      throw InvalidContext("crossing_order: case must be 1, 2 or 3");
    }
    if (which == 1 ? !check_growth_case1(cfg) : (cfg.n < 3 || !check_growth_case23(cfg))) {
      throw UnorderedConfiguration("configuration does not satisfy the growth condition for case "
                                   + std::to_string(which));
    }
    std::vector<std::pair<int, int>> out;
    for (auto const& lm : crossing_order_all(cfg, k, exclude)) {
      if (circle_case(k, lm.first, lm.second) == which) {
        out.push_back(lm);
      }
    }
    return out;
  }

  // Closed-form orders.
  inline std::vector<std::pair<int, int>> case1_closed_form(int k) {
    std::vector<std::pair<int, int>> out;
    for (int m = 2; m < k; ++m) {
      for (int l = 1; l < m; ++l) {
        out.emplace_back(l, m);
      }
    }
    return out;
  }

  inline std::vector<std::pair<int, int>> case2_closed_form(int k, int n) {
    std::vector<std::pair<int, int>> out;
    for (int l = k - 1; l >= 1; --l) {
      for (int m = k + 1; m <= n; ++m) {
        out.emplace_back(l, m);
      }
    }
    return out;
  }

  inline std::vector<std::pair<int, int>> case3_closed_form(int k, int n) {
    std::vector<std::pair<int, int>> out;
    for (int l = n - 1; l > k; --l) {
      for (int m = n; m > l; --m) {
        out.emplace_back(l, m);
      }
    }
    return out;
  }

  /// Case-1 circles sorted by decreasing slope at P_k.
  inline std::vector<std::pair<int, int>> case1_kappa_order(ParabolaConfig const& cfg, int k) {
    struct Item {
      int l, m;
      Rat kappa;
    };
    std::vector<Item> items;
    for (int m = 2; m < k; ++m) {
      for (int l = 1; l < m; ++l) {
        items.push_back({l, m, slope_kappa(cfg.at(k), cfg.at(l), cfg.at(m))});
      }
    }
    std::stable_sort(items.begin(), items.end(),
                     [](Item const& a, Item const& b) { return a.kappa > b.kappa; });
    std::vector<std::pair<int, int>> out;
    for (auto const& it : items) {
      out.emplace_back(it.l, it.m);
    }
    return out;
  }

  /// c_ij read off the geometry: the circles through P_j met by point i as it
  /// rounds P_j from above, case 2 then case 1 then case 3.
  inline GnkWord g4_word_geometric(int i, int j, ParabolaConfig const& cfg) {
    validate_pair(i, j, cfg.n);
    if (cfg.n < 4) {
      throw InvalidContext("G_n^4 needs n >= 4");
    }
    GnkWord w(cfg.n, 4);
    for (int which : {2, 1, 3}) {
      for (auto const& [l, m] : crossing_order(cfg, j, which, {i})) {
        w.letters.push_back(GeneratorIndex{i, j, l, m});
      }
    }
    return w;
  }

  /// The whole motion word c_{i,i+1} ... c_{ij}^2 ... c_{i,i+1}^{-1} built
  /// from geometric c's.
  inline GnkWord g4_motion_word_geometric(int i, int j, ParabolaConfig const& cfg) {
    if (i > j) {
      throw InvalidPair("expects i < j");
    }
    GnkWord conj(cfg.n, 4);
    for (int k = i + 1; k < j; ++k) {
      conj *= g4_word_geometric(i, k, cfg);
    }
    auto c = g4_word_geometric(i, j, cfg);
    return conj * c * c * conj.inverse();
  }

}  // namespace gnk

#endif  // GNK_GEOMETRY_HPP_
