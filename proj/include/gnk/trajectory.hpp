#ifndef GNK_TRAJECTORY_HPP_
#define GNK_TRAJECTORY_HPP_

// Piecewise-linear motions of n labelled points and exact detection of the
// moments when three of them are collinear or four of them are concyclic.
//
// On each piece between consecutive breakpoints every point moves linearly,
// so each secant condition is a polynomial in time: an orientation
// determinant for triples, the 4x4 incircle determinant for quadruples. Its
// simple roots are the events; anything else is reported as non-generic.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gnk/errors.hpp"
#include "gnk/polynomial.hpp"
#include "gnk/presentation.hpp"
#include "gnk/rational.hpp"

namespace gnk {

  struct Breakpoint {
    Rat   time;
    Point pos;

    friend bool operator==(Breakpoint const&, Breakpoint const&) = default;
  };

  // paths[p] is the motion of point p + 1 over [0, 1].
  struct Trajectory {
    int                                  n = 0;
    std::vector<std::vector<Breakpoint>> paths;

    void validate() const {
      if (n < 1 || static_cast<int>(paths.size()) != n) {
        throw InvalidContext("trajectory needs one path per point");
      }
      for (int p = 0; p < n; ++p) {
        auto const& path = paths[static_cast<std::size_t>(p)];
        if (path.empty() || path.front().time != 0 || path.back().time != 1) {
          throw DegenerateInput("path of point " + std::to_string(p + 1)
                                + " must start at time 0 and end at time 1");
        }
        for (std::size_t b = 1; b < path.size(); ++b) {
          if (path[b].time <= path[b - 1].time) {
            throw DegenerateInput("breakpoint times of point " + std::to_string(p + 1)
                                  + " are not increasing");
          }
        }
      }
    }

    bool closed() const {
      return std::all_of(paths.begin(), paths.end(),
                         [](auto const& path) { return path.front().pos == path.back().pos; });
    }

    Point position(int label, Rat const& t) const {
      auto const& path = paths.at(static_cast<std::size_t>(label - 1));
      if (t <= path.front().time) {
        return path.front().pos;
      }
      for (std::size_t b = 1; b < path.size(); ++b) {
        if (t <= path[b].time) {
          Rat s = (t - path[b - 1].time) / (path[b].time - path[b - 1].time);
          return path[b - 1].pos + s * (path[b].pos - path[b - 1].pos);
        }
      }
      return path.back().pos;
    }

    /// Sorted union of all breakpoint times.
    std::vector<Rat> breakpoints() const {
      std::vector<Rat> ts;
      for (auto const& path : paths) {
        for (auto const& b : path) {
          ts.push_back(b.time);
        }
      }
      std::sort(ts.begin(), ts.end());
      ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
      return ts;
    }

    /// All points at rest at their positions in `pos`.
    static Trajectory stationary(std::vector<Point> const& pos) {
      Trajectory tr;
      tr.n = static_cast<int>(pos.size());
      for (auto const& p : pos) {
        tr.paths.push_back({{Rat(0), p}, {Rat(1), p}});
      }
      return tr;
    }
  };

  enum class SecantKind { trisecant, concyclic };

  inline std::string kind_name(SecantKind k) {
    return k == SecantKind::trisecant ? "trisecant" : "concyclic";
  }

  struct SecantEvent {
    Rat              time_lo;  // the event time lies in [time_lo, time_hi]
    Rat              time_hi;
    SecantKind       kind;
    std::vector<int> participants;  // ascending labels
    std::size_t      piece = 0;     // index of the piece between breakpoints
  };

  namespace detail {

    struct LinearPoint {
      Poly x;
      Poly y;
      bool moving;
    };

    inline Poly det3(Poly const m[3][3]) {
      return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
             - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
             + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }

    // Orientation of (a, b, c).
    inline Poly orientation(LinearPoint const& a, LinearPoint const& b, LinearPoint const& c) {
      return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    }

    // det of rows (x - x_d, y - y_d, |p|^2 - |d|^2) for p = a, b, c: zero iff
    // a, b, c, d lie on one circle or one line.
    inline Poly incircle(LinearPoint const& a, LinearPoint const& b, LinearPoint const& c,
                         LinearPoint const& d) {
      Poly const dn = d.x * d.x + d.y * d.y;
      Poly       m[3][3];
      LinearPoint const* rows[3] = {&a, &b, &c};
      for (int r = 0; r < 3; ++r) {
        m[r][0] = rows[r]->x - d.x;
        m[r][1] = rows[r]->y - d.y;
        m[r][2] = rows[r]->x * rows[r]->x + rows[r]->y * rows[r]->y - dn;
      }
      return det3(m);
    }

    inline std::string tuple_name(std::vector<int> const& t) {
      std::string s = "{";
      for (std::size_t x = 0; x < t.size(); ++x) {
        s += (x ? "," : "") + std::to_string(t[x]);
      }
      return s + "}";
    }

    struct PendingRoot {
      Poly             poly;  // in the local parameter s of the piece
      RootInterval     iv;
      std::vector<int> tuple;
    };

    inline void for_each_subset(int n, int size, auto&& fn) {
      std::vector<int> c(static_cast<std::size_t>(size));
      for (int x = 0; x < size; ++x) {
        c[static_cast<std::size_t>(x)] = x + 1;
      }
      if (size > n) {
        return;
      }
      while (true) {
        fn(c);
        int x = size - 1;
        while (x >= 0 && c[static_cast<std::size_t>(x)] == n - size + x + 1) {
          --x;
        }
        if (x < 0) {
          return;
        }
        ++c[static_cast<std::size_t>(x)];
        for (int y = x + 1; y < size; ++y) {
          c[static_cast<std::size_t>(y)] = c[static_cast<std::size_t>(y - 1)] + 1;
        }
      }
    }

    // Could the roots isolated by x and y be equal? Open intervals unless
    // exact.
    inline bool may_coincide(RootInterval const& x, RootInterval const& y) {
      if (x.exact() && y.exact()) {
        return x.lo == y.lo;
      }
      if (x.exact()) {
        return y.lo < x.lo && x.lo < y.hi;
      }
      if (y.exact()) {
        return x.lo < y.lo && y.lo < x.hi;
      }
      return x.lo < y.hi && y.lo < x.hi;
    }

    // Orders the roots of one piece; two roots that cannot be separated are
    // the same time, which is non-generic.
    inline void separate(std::vector<PendingRoot>& roots, std::size_t piece) {
      for (std::size_t x = 0; x < roots.size(); ++x) {
        for (std::size_t y = x + 1; y < roots.size(); ++y) {
          auto& a = roots[x];
          auto& b = roots[y];
          while (may_coincide(a.iv, b.iv)) {
            Rat lo = std::max(a.iv.lo, b.iv.lo);
            Rat hi = std::min(a.iv.hi, b.iv.hi);
            if (common_root_in(a.poly, b.poly, lo, hi)) {
              throw NonGenericTrajectory("simultaneous events " + tuple_name(a.tuple) + " and "
                                         + tuple_name(b.tuple) + " on piece "
                                         + std::to_string(piece));
            }
            refine(a.poly, a.iv);
            refine(b.poly, b.iv);
          }
        }
      }
      std::sort(roots.begin(), roots.end(), [](auto const& a, auto const& b) {
        if (a.iv.lo != b.iv.lo) {
          return a.iv.lo < b.iv.lo;
        }
        return a.iv.exact() && !b.iv.exact();
      });
    }

  }  // namespace detail

  /// Events of the given kind, in time order.
  inline std::vector<SecantEvent> trace_events(Trajectory const& traj, SecantKind kind) {
    traj.validate();
    int const size = kind == SecantKind::trisecant ? 3 : 4;
    auto const ts  = traj.breakpoints();
    std::vector<SecantEvent> out;

    for (std::size_t piece = 0; piece + 1 < ts.size(); ++piece) {
      Rat const& t0 = ts[piece];
      Rat const& t1 = ts[piece + 1];
      std::vector<detail::LinearPoint> lp;
      for (int p = 1; p <= traj.n; ++p) {
        Point a = traj.position(p, t0), b = traj.position(p, t1);
        lp.push_back({Poly{a.x, b.x - a.x}, Poly{a.y, b.y - a.y}, !(a == b)});
      }
      std::vector<detail::PendingRoot> roots;
      detail::for_each_subset(traj.n, size, [&](std::vector<int> const& tup) {
        auto const& a = lp[static_cast<std::size_t>(tup[0] - 1)];
        auto const& b = lp[static_cast<std::size_t>(tup[1] - 1)];
        auto const& c = lp[static_cast<std::size_t>(tup[2] - 1)];
        bool moving = a.moving || b.moving || c.moving;
        Poly f;
        if (size == 3) {
          f = detail::orientation(a, b, c);
        } else {
          auto const& d = lp[static_cast<std::size_t>(tup[3] - 1)];
          moving        = moving || d.moving;
          f             = detail::incircle(a, b, c, d);
        }
        std::string where = detail::tuple_name(tup) + " on piece " + std::to_string(piece);
        if (f.is_zero()) {
          throw NonGenericTrajectory("degenerate throughout: " + where);
        }
        if (!moving) {
          return;
        }
        if (f.sign_at(0) == 0 || f.sign_at(1) == 0) {
          throw NonGenericTrajectory("event at a breakpoint: " + where);
        }
        auto iso = isolate_roots(f, 0, 1);
        if (iso.empty()) {
          return;
        }
        if (common_root_in(f, f.derivative(), 0, 1)) {
          throw NonGenericTrajectory("tangential event: " + where);
        }
        for (auto const& iv : iso) {
          roots.push_back({f, iv, tup});
        }
      });
      detail::separate(roots, piece);
      for (auto const& r : roots) {
        Rat const dt = t1 - t0;
        out.push_back({t0 + r.iv.lo * dt, t0 + r.iv.hi * dt, kind, r.tuple, piece});
      }
    }
    return out;
  }

  inline GnkWord events_to_word(int n, int k, std::vector<SecantEvent> const& events) {
    GnkWord w(n, k);
    for (auto const& e : events) {
      w.letters.emplace_back(e.participants);
    }
    return w;
  }

  /// Word in G_n^3: one letter a_{pqr} per collinearity of points p, q, r.
  inline GnkWord trisecant_trace(Trajectory const& traj) {
    if (traj.n < 3) {
      throw InvalidContext("trisecant_trace needs n >= 3");
    }
    return events_to_word(traj.n, 3, trace_events(traj, SecantKind::trisecant));
  }

  /// Word in G_n^4: one letter per moment four points lie on a circle.
  inline GnkWord concyclic_trace(Trajectory const& traj) {
    if (traj.n < 4) {
      throw InvalidContext("concyclic_trace needs n >= 4");
    }
    return events_to_word(traj.n, 4, trace_events(traj, SecantKind::concyclic));
  }

}  // namespace gnk

#endif  // GNK_TRAJECTORY_HPP_
