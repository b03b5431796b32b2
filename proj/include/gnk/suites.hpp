#ifndef GNK_SUITES_HPP_
#define GNK_SUITES_HPP_

// Invariant suites run by `gnk verify`. Each returns counts plus the first
// few failures as JSON.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "gnk/geometry.hpp"
#include "gnk/parity.hpp"
#include "gnk/presentation.hpp"
#include "gnk/pure_braid.hpp"
#include "gnk/simulate.hpp"
#include "gnk/trajectory.hpp"

namespace gnk {

  struct SuiteReport {
    std::string              suite;
    std::size_t              checked = 0;
    std::size_t              failed  = 0;
    std::vector<std::string> failures;  // first 20
    nlohmann::ordered_json   details = nlohmann::ordered_json::object();

    void check(bool ok, std::string const& what) {
      ++checked;
      if (!ok) {
        ++failed;
        if (failures.size() < 20) {
          failures.push_back(what);
        }
      }
    }

    bool ok() const noexcept {
      return failed == 0;
    }

    nlohmann::ordered_json to_json() const {
      nlohmann::ordered_json j;
      j["suite"]    = suite;
      j["passed"]   = ok();
      j["checked"]  = checked;
      j["failed"]   = failed;
      j["details"]  = details;
      j["failures"] = failures;
      return j;
    }
  };

  /// Elements of Z for the base; all of them while |Z| <= 4096, otherwise 0
  /// and the basis vectors.
  inline std::vector<ZVec> z_sample(BaseChoice const& base, bool* exhaustive = nullptr) {
    std::vector<ZVec> out;
    int const         w = base.width();
    if (w <= 12) {
      for (std::uint64_t b = 0; b < (std::uint64_t(1) << w); ++b) {
        out.emplace_back(w, b);
      }
    } else {
      out.push_back(base.zero());
      for (int b = 0; b < w; ++b) {
        out.emplace_back(w, std::uint64_t(1) << b);
      }
    }
    if (exhaustive) {
      *exhaustive = w <= 12;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // relators
  ////////////////////////////////////////////////////////////////////////

  /// Every relator of G_n^k acts trivially on Z x H for every base and
  /// every x; for k in {3, 4} every pure braid relation difference maps to a
  /// word with zero psi and empty phi for every base.
  inline SuiteReport relator_suite(int n, int k) {
    validate_context(n, k);
    SuiteReport rep;
    rep.suite      = "relators";
    auto const rel = relators(n, k);
    auto const bases = all_bases(n, k);
    bool exhaustive  = true;
    for (auto const& base : bases) {
      bool ex = true;
      auto xs = z_sample(base, &ex);
      exhaustive = exhaustive && ex;
      for (auto const& r : rel) {
        for (auto const& x : xs) {
          auto st = phi_at(r, base, x);
          rep.check(st.x == x && st.y.empty(),
                    "relator " + r.to_string() + " base " + base.m().to_string() + " x "
                        + x.to_string());
        }
      }
    }
    for (auto const& r : rel) {
      rep.check(is_even(r), "relator " + r.to_string() + " is not even");
    }
    std::size_t pb_count = 0;
    if ((k == 3 || k == 4) && n >= k) {
      for (auto const& rel_pair : pb_relators(n)) {
        ++pb_count;
        auto d   = rel_pair.difference();
        auto img = pb_image(d, k);
        rep.check(is_even(img), "image of " + d.to_string() + " is not even");
        for (auto const& base : bases) {
          rep.check(psi_word(img, base).is_zero() && phi(img, base).empty(),
                    "relation " + d.to_string() + " base " + base.m().to_string());
        }
      }
    }
    rep.details["n"]                 = n;
    rep.details["k"]                 = k;
    rep.details["relators"]          = rel.size();
    rep.details["bases"]             = bases.size();
    rep.details["z_exhaustive"]      = exhaustive;
    rep.details["pb_relations"]      = pb_count;
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // geometry (`verify --suite appendix`)
  ////////////////////////////////////////////////////////////////////////

  inline Rat random_rat(std::mt19937_64& rng, long lim = 50, long den = 20) {
    std::uniform_int_distribution<long> num_d(-lim, lim), den_d(1, den);
    long const                          p = num_d(rng);
    return Rat(p, den_d(rng));
  }

  inline Rat random_positive_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num_d(1, 200), den_d(1, 20);
    long const                          p = num_d(rng);
    return Rat(p, den_d(rng));
  }

  /// Determinant identity, concyclicity criterion and no-extra-intersection
  /// checks on `samples` seeded random inputs, plus slope bounds and crossing
  /// orders on growth sequences with n points.
  inline SuiteReport geometry_suite(std::uint64_t seed, std::size_t samples = 1000, int n = 5) {
    SuiteReport      rep;
    rep.suite = "appendix";
    std::mt19937_64 rng(seed);
    std::size_t      zero_sum = 0;

    for (std::size_t s = 0; s < samples; ++s) {
      Rat x[4];
      for (auto& v : x) {
        v = random_rat(rng);
      }
      if (s % 2 == 1) {
        x[3] = -(x[0] + x[1] + x[2]);
      }
      std::string const tag = rat_to_string(x[0]) + "," + rat_to_string(x[1]) + ","
                              + rat_to_string(x[2]) + "," + rat_to_string(x[3]);
      rep.check(delta_det(x[0], x[1], x[2], x[3]) == delta_product(x[0], x[1], x[2], x[3]),
                "delta factorization at " + tag);
      bool distinct = true;
      for (int a = 0; a < 4; ++a) {
        for (int b = a + 1; b < 4; ++b) {
          distinct = distinct && x[a] != x[b];
        }
      }
      if (distinct) {
        Point p[4];
        for (int a = 0; a < 4; ++a) {
          p[a] = on_parabola(x[a]);
        }
        bool on_circle = circle_equation(circle_through(p[0], p[1], p[2]), p[3]) == 0;
        bool sum_zero  = x[0] + x[1] + x[2] + x[3] == 0;
        zero_sum += sum_zero;
        rep.check(on_circle == sum_zero && concyclic_on_parabola(x[0], x[1], x[2], x[3]) == sum_zero,
                  "concyclicity criterion at " + tag);
      }

      Rat t[3];
      for (auto& v : t) {
        v = random_positive_rat(rng);
      }
      if (t[0] != t[1] && t[0] != t[2] && t[1] != t[2]) {
        Rat f = fourth_intersection(t[0], t[1], t[2]);
        auto c = circle_through(on_parabola(t[0]), on_parabola(t[1]), on_parabola(t[2]));
        rep.check(f < 0 && circle_equation(c, on_parabola(f)) == 0,
                  "fourth intersection at " + rat_to_string(t[0]) + "," + rat_to_string(t[1])
                      + "," + rat_to_string(t[2]));
      }
    }

    // Slope bounds and the case-1 order on the case-1 sequence.
    auto const c1 = growth_sequence_case1(n);
    for (int k = 1; k <= n; ++k) {
      for (int m = 2; m < k; ++m) {
        for (int l = 1; l < m; ++l) {
          Rat const kappa = slope_kappa(c1.at(k), c1.at(l), c1.at(m));
          Rat const s     = c1.at(l) + c1.at(m);
          auto const circ = circle_through(c1.point(k), c1.point(l), c1.point(m));
          Point const pk  = c1.point(k);
          Rat const oracle = -(pk.x - circ.center.x) / (pk.y - circ.center.y);
          rep.check(-(s + 1) < kappa && kappa < -s && kappa == oracle,
                    "slope bounds k=" + std::to_string(k) + " l=" + std::to_string(l)
                        + " m=" + std::to_string(m));
        }
      }
      rep.check(case1_kappa_order(c1, k) == case1_closed_form(k)
                    && crossing_order(c1, k, 1) == case1_closed_form(k),
                "case-1 order at " + std::to_string(k));
    }

    // Case-2 and case-3 orders on a sequence satisfying both conditions.
    auto const g = growth_sequence(n);
    rep.check(check_growth_case1(g) && check_growth_case23(g), "growth sequence conditions");
    rep.check(!check_growth_case23(ParabolaConfig({1, 2, 3, 4})), "(1,2,3,4) must fail case 2/3");
    for (int k = 1; k <= n; ++k) {
      rep.check(crossing_order(g, k, 2) == case2_closed_form(k, n), "case-2 order at " + std::to_string(k));
      rep.check(crossing_order(g, k, 3) == case3_closed_form(k, n), "case-3 order at " + std::to_string(k));
    }
    if (n >= 4) {
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          rep.check(g4_word_geometric(i, j, g) == g4_c(i, j, n),
                    "geometric c_" + std::to_string(i) + std::to_string(j));
        }
      }
    }
    rep.details["seed"]              = seed;
    rep.details["samples"]           = samples;
    rep.details["zero_sum_samples"]  = zero_sum;
    rep.details["n"]                 = n;
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // tracer
  ////////////////////////////////////////////////////////////////////////

  /// psi and phi agree for every base.
  inline bool same_invariants(GnkWord const& a, GnkWord const& b) {
    if (!is_even(a) || !is_even(b)) {
      return false;
    }
    for (auto const& base : all_bases(a.n, a.k)) {
      if (psi_word(a, base) != psi_word(b, base) || phi(a, base) != phi(b, base)) {
        return false;
      }
    }
    return true;
  }

  /// Circle traces of every b_ij against the k=3 images; parabola traces of
  /// b_{i,i+1} against the k=4 images. Letter-exact agreement is reported
  /// but not required.
  inline SuiteReport tracer_suite(int n) {
    SuiteReport rep;
    rep.suite = "tracer";
    std::size_t exact3 = 0, exact4 = 0, motion4 = 0, pairs = 0, pairs4 = 0;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        ++pairs;
        std::string const name = "b" + std::to_string(i) + "," + std::to_string(j);
        auto tr  = simulate_bij_circle(i, j, n);
        auto w   = trisecant_trace(tr);
        auto img = pb_image_g3(pb_generator(i, j, n));
        rep.check(tr.closed(), "circle " + name + " not closed");
        rep.check(same_invariants(w, img), "circle " + name + " invariants");
        exact3 += (w == img);
      }
    }
    if (n >= 4) {
      for (int i = 1; i < n; ++i) {
        ++pairs4;
        std::string const name = "b" + std::to_string(i) + "," + std::to_string(i + 1);
        auto tr  = simulate_bij_parabola(i, i + 1, n);
        auto w   = concyclic_trace(tr);
        auto img = pb_image_g4(pb_generator(i, i + 1, n));
        rep.check(tr.closed(), "parabola " + name + " not closed");
        rep.check(same_invariants(w, img), "parabola " + name + " invariants");
        exact4 += (w == img);
      }
      if (n <= 5) {
        for (int i = 1; i <= n; ++i) {
          for (int j = i + 1; j <= n; ++j) {
            motion4 += concyclic_trace(simulate_bij_parabola(i, j, n)) == g4_motion_word(i, j, n);
          }
        }
        rep.details["parabola_motion_word_exact"] = std::to_string(motion4) + "/" + std::to_string(pairs);
      }
    }
    rep.details["n"]                  = n;
    rep.details["circle_letter_exact"] = std::to_string(exact3) + "/" + std::to_string(pairs);
    if (n >= 4) {
      rep.details["parabola_letter_exact"] = std::to_string(exact4) + "/" + std::to_string(pairs4);
    }
    return rep;
  }

}  // namespace gnk

#endif  // GNK_SUITES_HPP_
