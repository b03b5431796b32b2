#ifndef GNK_SIMULATE_HPP_
#define GNK_SIMULATE_HPP_

// Trajectories realising the generators b_ij of PB_n.
//
// Circle model (trisecants): the points sit on the unit circle in
// counter-clockwise order. Point i travels just inside the circle past
// P_{i+1}, ..., P_{j-1} and stops on the circle between P_{j-1} and P_j; then j
// travels clockwise past i; then i travels clockwise past j, P_{j-1}, ...,
// P_{i+1} back home; then j returns.
//
// Parabola model (circles through four points): the points sit on y = x^2.
// Point i passes P_{i+1}, ..., P_j from above; j passes i from above; i comes
// back from above past P_{j-1}, ..., P_{i+1}; j returns.
//
// Each move is checked exactly before it is used. Rounding a point must meet
// every secant through that point once and nothing else (the clearance is
// halved until it does); travel between points must be event-free (the path
// is subdivided along the model curve until it is).

#include <cmath>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gnk/errors.hpp"
#include "gnk/geometry.hpp"
#include "gnk/presentation.hpp"
#include "gnk/rational.hpp"
#include "gnk/trajectory.hpp"

namespace gnk {

  namespace detail {

    class MotionBuilder {
     public:
      MotionBuilder(std::vector<Point> initial, SecantKind kind)
          : _initial(initial), _pos(std::move(initial)), _kind(kind) {}

      int n() const {
        return static_cast<int>(_pos.size());
      }

      Point const& pos(int label) const {
        return _pos[static_cast<std::size_t>(label - 1)];
      }

      // Secant tuples met by `mover` following `path` from `from` while the
      // others stay put. False if the motion is non-generic.
      bool trace_move(int mover, Point const& from, std::vector<Point> const& path,
                      std::vector<std::vector<int>>& tuples) const {
        auto tr = Trajectory::stationary(_pos);
        auto& p = tr.paths[static_cast<std::size_t>(mover - 1)];
        p.clear();
        p.push_back({Rat(0), from});
        for (std::size_t v = 0; v < path.size(); ++v) {
          p.push_back({Rat(static_cast<long>(v + 1), static_cast<long>(path.size())), path[v]});
        }
        tuples.clear();
        try {
          for (auto const& e : trace_events(tr, _kind)) {
            tuples.push_back(e.participants);
          }
        } catch (NonGenericTrajectory const&) {
          return false;
        }
        return true;
      }

      // Secant tuples through `mover` and `center`.
      std::vector<std::vector<int>> tuples_through(int mover, int center) const {
        int const size = _kind == SecantKind::trisecant ? 3 : 4;
        std::vector<std::vector<int>> out;
        for_each_subset(n(), size, [&](std::vector<int> const& t) {
          if (std::find(t.begin(), t.end(), mover) != t.end()
              && std::find(t.begin(), t.end(), center) != t.end()) {
            out.push_back(t);
          }
        });
        return out;
      }

      bool is_rounding(int mover, int center, std::vector<Point> const& path) const {
        std::vector<std::vector<int>> got;
        if (!trace_move(mover, pos(mover), path, got)) {
          return false;
        }
        auto expected = tuples_through(mover, center);
        std::sort(got.begin(), got.end());
        return got == expected;
      }

      // Moves `mover` along curve(s), s from 0 to 1 (curve(0) is its current
      // position), subdividing until no edge meets a secant.
      void travel(int mover, std::function<Point(Rat const&)> const& curve) {
        std::vector<Point> verts;
        subdivide(mover, curve, Rat(0), Rat(1), curve(Rat(0)), 0, verts);
        commit(mover, verts);
      }

      void commit(int mover, std::vector<Point> const& path) {
        for (auto const& v : path) {
          _edges.push_back({mover, v});
          _pos[static_cast<std::size_t>(mover - 1)] = v;
        }
      }

      Trajectory build() const {
        Trajectory tr;
        tr.n = n();
        long const total = static_cast<long>(_edges.size());
        for (int p = 1; p <= n(); ++p) {
          tr.paths.push_back({{Rat(0), _initial[static_cast<std::size_t>(p - 1)]}});
        }
        for (long e = 0; e < total; ++e) {
          auto const& edge = _edges[static_cast<std::size_t>(e)];
          auto&       path = tr.paths[static_cast<std::size_t>(edge.mover - 1)];
          Rat const   t0(e, total);
          if (path.back().time < t0) {
            path.push_back({t0, path.back().pos});
          }
          path.push_back({Rat(e + 1, total), edge.to});
        }
        for (auto& path : tr.paths) {
          if (path.back().time < 1) {
            path.push_back({Rat(1), path.back().pos});
          }
        }
        return tr;
      }

     private:
      struct Edge {
        int   mover;
        Point to;
      };

      void subdivide(int mover, std::function<Point(Rat const&)> const& curve, Rat const& s0,
                     Rat const& s1, Point const& from, int depth, std::vector<Point>& out) const {
        Point to = curve(s1);
        if (to == from) {
          return;
        }
        std::vector<std::vector<int>> got;
        if (trace_move(mover, from, {to}, got) && got.empty()) {
          out.push_back(to);
          return;
        }
        if (depth > 60) {
          throw NonGenericTrajectory("cannot find an event-free path for point "
                                     + std::to_string(mover));
        }
        Rat mid = (s0 + s1) / 2;
        subdivide(mover, curve, s0, mid, from, depth + 1, out);
        subdivide(mover, curve, mid, s1, curve(mid), depth + 1, out);
      }

      std::vector<Point> _initial;
      std::vector<Point> _pos;
      SecantKind         _kind;
      std::vector<Edge>  _edges;
    };

  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Circle model
  ////////////////////////////////////////////////////////////////////////

  /// Rational point of the unit circle with tan(theta / 2) = u.
  inline Point unit_circle_point(Rat const& u) {
    Rat const d = 1 + u * u;
    return {(1 - u * u) / d, 2 * u / d};
  }

  /// tan(theta_k / 2) for theta_k = -pi + 2 pi (k - 1/2) / n, rounded to a
  /// multiple of 2^-16. Increasing in k.
  inline std::vector<Rat> circle_parameters(int n) {
    std::vector<Rat> u;
    double const     pi = std::acos(-1.0);
    for (int k = 1; k <= n; ++k) {
      double theta = -pi + 2 * pi * (k - 0.5) / n;
      u.emplace_back(static_cast<long>(std::llround(std::tan(theta / 2) * 65536)), 65536L);
      if (k > 1 && u[k - 1] <= u[k - 2]) {
        throw InvalidContext("too many points for the circle model");
      }
    }
    return u;
  }

  inline std::vector<Point> circle_configuration(int n) {
    std::vector<Point> out;
    for (auto const& u : circle_parameters(n)) {
      out.push_back(unit_circle_point(u));
    }
    return out;
  }

  inline Trajectory simulate_bij_circle(int i, int j, int n) {
    if (n < 3) {
      throw InvalidContext("the circle model needs n >= 3");
    }
    validate_pair(i, j, n);
    if (i > j) {
      throw InvalidPair("simulate_bij_circle expects i < j");
    }
    auto u = circle_parameters(n);  // current parameter of each point, by label - 1
    std::vector<Rat> radius(static_cast<std::size_t>(n), Rat(1));
    detail::MotionBuilder mb(circle_configuration(n), SecantKind::trisecant);
    auto U = [&](int label) -> Rat& { return u[static_cast<std::size_t>(label - 1)]; };
    auto R = [&](int label) -> Rat& { return radius[static_cast<std::size_t>(label - 1)]; };

    auto travel = [&](int q, Rat const& u1, Rat const& r1) {
      Rat const u0 = U(q), r0 = R(q);
      mb.travel(q, [=](Rat const& s) {
        return ((1 - s) * r0 + s * r1) * unit_circle_point((1 - s) * u0 + s * u1);
      });
      U(q) = u1;
      R(q) = r1;
    };

    // Mover q passes point c in direction dir (+1 counter-clockwise).
    auto round = [&](int q, int c, int dir, Rat const& target) {
      Rat gap = abs(target - U(c));
      for (int x = 1; x <= n; ++x) {
        if (x != c) {
          gap = std::min(gap, Rat(abs(U(x) - U(c))));
        }
      }
      Rat const eta = gap / 8;
      Rat const ub = U(c) - dir * eta, ua = U(c) + dir * eta;
      Rat       delta = eta * eta / 8;
      for (int attempt = 0;; ++attempt) {
        Rat const rho = 1 - delta;
        Point     w1  = rho * unit_circle_point(ub);
        Point     w2  = rho * unit_circle_point(ua);
        auto      saved_u = U(q);
        auto      saved_r = R(q);
        // Reach w1 first, then check the passing edge from there.
        detail::MotionBuilder probe = mb;
        {
          Rat const u0 = saved_u, r0 = saved_r;
          probe.travel(q, [=](Rat const& s) {
            return ((1 - s) * r0 + s * rho) * unit_circle_point((1 - s) * u0 + s * ub);
          });
        }
        if (probe.is_rounding(q, c, {w2})) {
          mb = std::move(probe);
          mb.commit(q, {w2});
          U(q) = ua;
          R(q) = rho;
          return;
        }
        if (attempt > 60) {
          throw NonGenericTrajectory("cannot pass point " + std::to_string(c));
        }
        delta /= 2;
      }
    };

    // Stage 1: i counter-clockwise past i+1, ..., j-1, then onto the circle
    // two thirds of the way from the previous point to P_j.
    Rat const a     = j > i + 1 ? U(j - 1) : U(i);
    Rat const b     = U(j);
    Rat const land  = a + 2 * (b - a) / 3;
    Rat const jtemp = a + (b - a) / 3;
    for (int p = i + 1; p < j; ++p) {
      round(i, p, +1, land);
    }
    travel(i, land, 1);
    // Stage 2: j clockwise past i.
    round(j, i, -1, jtemp);
    travel(j, jtemp, 1);
    // Stage 3: i clockwise past j, then P_{j-1}, ..., P_{i+1}.
    Rat const home_i = circle_parameters(n)[static_cast<std::size_t>(i - 1)];
    round(i, j, -1, home_i);
    for (int p = j - 1; p > i; --p) {
      round(i, p, -1, home_i);
    }
    travel(i, home_i, 1);
    // Stage 4: j back home.
    travel(j, circle_parameters(n)[static_cast<std::size_t>(j - 1)], 1);
    return mb.build();
  }

  ////////////////////////////////////////////////////////////////////////
  // Parabola model
  ////////////////////////////////////////////////////////////////////////

  inline std::vector<Point> parabola_configuration(ParabolaConfig const& cfg) {
    std::vector<Point> out;
    for (auto const& t : cfg.t) {
      out.push_back(on_parabola(t));
    }
    return out;
  }

  inline Trajectory simulate_bij_parabola(int i, int j, ParabolaConfig const& cfg) {
    int const n = cfg.n;
    if (n < 4) {
      throw InvalidContext("the parabola model needs n >= 4");
    }
    validate_pair(i, j, n);
    if (i > j) {
      throw InvalidPair("simulate_bij_parabola expects i < j");
    }
    std::vector<Rat>      t = cfg.t;  // current abscissa of each point, by label - 1
    detail::MotionBuilder mb(parabola_configuration(cfg), SecantKind::concyclic);
    auto T = [&](int label) -> Rat& { return t[static_cast<std::size_t>(label - 1)]; };

    auto travel = [&](int q, Rat const& t1) {
      Rat const t0 = T(q);
      mb.travel(q, [=](Rat const& s) { return on_parabola((1 - s) * t0 + s * t1); });
      T(q) = t1;
    };

    // Mover q passes point c from above in direction dir (+1: increasing t).
    // Returns the abscissa where q lands.
    auto round = [&](int q, int c, int dir, Rat const& target) {
      Rat gap = abs(target - T(c));
      for (int x = 1; x <= n; ++x) {
        if (x != c) {
          gap = std::min(gap, Rat(abs(T(x) - T(c))));
        }
      }
      Rat eps = gap / 8;
      for (int attempt = 0;; ++attempt) {
        Rat const tb = T(c) - dir * eps, ta = T(c) + dir * eps;
        Point     top{T(c), T(c) * T(c) + 2 * T(c) * eps};
        detail::MotionBuilder probe = mb;
        Rat const t0 = T(q);
        probe.travel(q, [=](Rat const& s) { return on_parabola((1 - s) * t0 + s * tb); });
        if (probe.is_rounding(q, c, {top, on_parabola(ta)})) {
          mb = std::move(probe);
          mb.commit(q, {top, on_parabola(ta)});
          T(q) = ta;
          return;
        }
        if (attempt > 60) {
          throw NonGenericTrajectory("cannot pass point " + std::to_string(c));
        }
        eps /= 2;
      }
    };

    Rat const home_i = T(i), home_j = T(j);
    Rat const beyond = j < n ? T(j + 1) : T(j) + (T(j) - T(j - 1));
    // Stage 1: i passes P_{i+1}, ..., P_j from above.
    for (int p = i + 1; p <= j; ++p) {
      round(i, p, +1, p < j ? T(p + 1) : beyond);
    }
    // Stage 2: j passes i from above.
    round(j, i, +1, beyond);
    // Stage 3: i returns from above past P_{j-1}, ..., P_{i+1}.
    for (int p = j - 1; p > i; --p) {
      round(i, p, -1, p - 1 > i ? T(p - 1) : home_i);
    }
    travel(i, home_i);
    // Stage 4: j returns.
    travel(j, home_j);
    return mb.build();
  }

  inline Trajectory simulate_bij_parabola(int i, int j, int n) {
    if (n < 4) {
      throw InvalidContext("the parabola model needs n >= 4");
    }
    return simulate_bij_parabola(i, j, growth_sequence(n));
  }

}  // namespace gnk

#endif  // GNK_SIMULATE_HPP_
