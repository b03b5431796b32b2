// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gnk/gnk.hpp"
#include "oracles.hpp"

using namespace gnk;

namespace {

  struct Tally {
    std::size_t checks = 0;
    std::size_t failed = 0;
    std::string first;

    void operator()(bool ok, std::string const& what) {
      ++checks;
      if (!ok && failed++ == 0) {
        first = what;
      }
    }
  };

  bool report(int id, std::string const& title, std::function<void(Tally&)> const& body) {
    Tally t;
    auto  start = std::chrono::steady_clock::now();
    try {
      body(t);
    } catch (std::exception const& e) {
      t(false, std::string("exception: ") + e.what());
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = t.failed == 0 && t.checks > 0;
    std::printf("criterion %d: %s %s (%zu checks, %.2fs)%s%s\n", id, ok ? "PASS" : "FAIL",
                title.c_str(), t.checks, secs, ok ? "" : " first failure: ", t.first.c_str());
    std::fflush(stdout);
    return ok;
  }

  ZVec z(char const* s) {
    return ZVec::from_string(s);
  }

  bool same_invariants_all_bases(GnkWord const& a, GnkWord const& b) {
    for (auto const& base : all_bases(a.n, a.k)) {
      if (psi_word(a, base) != psi_word(b, base) || phi(a, base) != phi(b, base)) {
        return false;
      }
    }
    return true;
  }

  void worked_example(Tally& t) {
    BaseChoice const base(4, 3, GeneratorIndex{1, 2, 3});
    auto beta = parse_gnk_word("a123 a234 a123 a134 a123 a134 a123 a234", 4, 3);
    t(z_pair(1, 2, base) == z("11"), "z12 = e1 + e2");
    t(z_pair(1, 3, base) == z("01"), "z13 = e2");
    t(z_pair(2, 3, base) == z("10"), "z23 = e1");
    auto h = phi(beta, base);
    t(h == HWord{z("00"), z("10"), z("11"), z("10")}, "phi(beta)");
    t(oracle::bits(h) == oracle::phi_bits(beta, {1, 2, 3}), "phi(beta) vs definition");
    t(pi_project(h) == PiVector{z("00"), z("11")}, "pi(phi(beta))");
    t(rough_unknotting_bound(beta, base) == 1, "rough bound 1");
    SwitchSystem sys(base);
    auto         r = min_switches(h, sys);
    t(r.count && *r.count == 2, "min switches 2");
    auto once = apply_switch(h, 2, 1, 3, sys);
    t(once == HWord{z("00"), z("10")}, "z13 switch");
    t(apply_switch(once, 1, 2, 3, sys).empty(), "then z23 trivializes");
    HWord w = h;
    for (auto const& s : r.witness) {
      w = apply_switch(w, s.pos, s.i, s.j, sys);
    }
    t(r.witness.size() == 2 && w.empty(), "search witness trivializes");
  }

  void toy_model(Tally& t) {
    auto wp = parse_toy_word("a^4 b^2 c^4 b^-4");
    t(toy_switch_feasible(wp), "w' feasible");
    t(toy_switch_lower_bound(wp) == 5, "w' lower bound 5");
    auto w = parse_toy_word("abcbabca");
    t(!toy_switch_feasible(w), "w infeasible");
    std::vector<char> letters{'a', 'b', 'c', 'b', 'a', 'b', 'c', 'a'};
    t(complexity(letters) == 8, "complexity(w) = 8");
    std::mt19937_64                    rng(2);
    std::uniform_int_distribution<int> g(0, 2);
    for (int x = 0; x < 500; ++x) {
      auto                                       v = letters;
      std::uniform_int_distribution<std::size_t> pos(0, v.size());
      char                                       c = static_cast<char>('a' + g(rng));
      v.insert(v.begin() + static_cast<long>(pos(rng)), {c, c});
      if (x % 2 == 1) {
        std::uniform_int_distribution<std::size_t> pos2(0, v.size());
        char                                       d = static_cast<char>('a' + g(rng));
        v.insert(v.begin() + static_cast<long>(pos2(rng)), {d, d});
      }
      t(reduce_involutive(v) == letters, "pair insertion reduces back");
    }
  }

  void relator_soundness(Tally& t) {
    std::vector<std::pair<int, int>> const contexts{{3, 3}, {4, 3}, {5, 3}, {5, 4}};
    for (auto [n, k] : contexts) {
      for (auto const& base : all_bases(n, k)) {
        bool exhaustive = false;
        auto xs         = z_sample(base, &exhaustive);
        t(exhaustive, "Z enumerated exhaustively");
        for (auto const& r : relators(n, k)) {
          for (auto const& x : xs) {
            t(phi_at(r, base, x) == ActionState{x, {}}, "relator " + r.to_string());
          }
        }
      }
      if (n >= 3) {
        for (auto const& rel : pb_relators(n)) {
          auto img = pb_image(rel.difference(), k);
          t(img.n == n && img.k == k, "pipeline context");
          for (auto const& base : all_bases(n, k)) {
            t(psi_word(img, base).is_zero() && phi(img, base).empty(),
              "pb relation " + rel.difference().to_string());
          }
        }
      }
    }
  }

  void delta_and_circles(Tally& t) {
    std::mt19937_64                     rng(4);
    std::uniform_int_distribution<long> num(-500, 500), den(1, 60);
    std::bernoulli_distribution         force_zero(0.3);
    for (int x = 0; x < 1000; ++x) {
      Rat a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
      Rat d = force_zero(rng) ? -(a + b + c) : Rat(num(rng), den(rng));
      t(delta_det(a, b, c, d) == delta_product(a, b, c, d), "delta factorization");
      if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
      auto circ = circle_through(on_parabola(a), on_parabola(b), on_parabola(c));
      t(concyclic_on_parabola(a, b, c, d) == (circle_equation(circ, on_parabola(d)) == 0),
        "concyclic iff zero sum");
    }
    std::uniform_int_distribution<long> pos(1, 500);
    for (int x = 0; x < 1000; ++x) {
      Rat a(pos(rng), den(rng)), b(pos(rng), den(rng)), c(pos(rng), den(rng));
      if (a == b || a == c || b == c) continue;
      Rat s = fourth_intersection(a, b, c);
      t(s < 0, "fourth intersection negative");
      auto circ = circle_through(on_parabola(a), on_parabola(b), on_parabola(c));
      t(circle_equation(circ, on_parabola(s)) == 0, "fourth point on circle");
    }
  }

  void slopes_and_orders(Tally& t) {
    auto cfg1 = growth_sequence_case1(5);
    for (int k = 1; k <= 5; ++k) {
      for (int m = 2; m < k; ++m) {
        for (int l = 1; l < m; ++l) {
          Rat kappa = slope_kappa(cfg1.at(k), cfg1.at(l), cfg1.at(m));
          Rat s     = cfg1.at(l) + cfg1.at(m);
          t(-(s + 1) < kappa && kappa < -s, "slope bounds");
          auto circ = circle_through(cfg1.point(k), cfg1.point(l), cfg1.point(m));
          auto p    = cfg1.point(k);
          t(kappa == -(p.x - circ.center.x) / (p.y - circ.center.y), "slope vs tangent");
        }
      }
      t(case1_kappa_order(cfg1, k) == case1_closed_form(k), "case-1 kappa order");
      t(crossing_order(cfg1, k, 1) == case1_closed_form(k), "case-1 crossing order");
    }
    auto cfg = growth_sequence(5);
    t(check_growth_case23(cfg), "growth condition for cases 2 and 3");
    for (int k = 1; k <= 5; ++k) {
      t(crossing_order(cfg, k, 2) == case2_closed_form(k, 5), "case-2 order");
      t(crossing_order(cfg, k, 3) == case3_closed_form(k, 5), "case-3 order");
    }
    using Order = std::vector<std::pair<int, int>>;
    t(crossing_order(cfg, 3, 2) == Order{{2, 4}, {2, 5}, {1, 4}, {1, 5}}, "case-2 example");
    t(crossing_order(growth_sequence(4), 1, 3) == Order{{3, 4}, {2, 4}, {2, 3}},
      "case-3 example");
  }

  void tracer(Tally& t) {
    for (int i = 1; i <= 4; ++i) {
      for (int j = i + 1; j <= 4; ++j) {
        auto traj   = simulate_bij_circle(i, j, 4);
        auto traced = trisecant_trace(traj);
        auto name   = "b" + std::to_string(i) + std::to_string(j);
        t(traj.closed(), name + " closed");
        t(is_even(traced), name + " traced word even");
        t(same_invariants_all_bases(traced, map_pb_to_g3(pb_generator(i, j, 4))),
          name + " circle invariants");
      }
    }
    auto traj   = simulate_bij_parabola(1, 2, 4);
    auto traced = concyclic_trace(traj);
    t(traj.closed(), "parabola closed");
    t(is_even(traced), "parabola word even");
    t(same_invariants_all_bases(traced, map_pb_to_g4(pb_generator(1, 2, 4))),
      "parabola invariants");
  }

  void three_strand_maps(Tally& t) {
    for (auto const& rel : pb_relators(3)) {
      t(pb3_to_even(rel.lhs) == pb3_to_even(rel.rhs), "relator killed");
    }
    std::function<void(EvenWord&)> walk = [&](EvenWord& w) {
      if (w.size() % 2 == 0) {
        t(pb3_to_even(even_to_pb3(w)) == reduce_involutive(w), "round trip");
      }
      if (w.size() == 10) return;
      for (int x = 1; x <= 3; ++x) {
        if (!w.empty() && w.back() == x) continue;
        w.push_back(x);
        walk(w);
        w.pop_back();
      }
    };
    EvenWord w;
    walk(w);
    EvenWord const u{3, 1}, v{2, 3};
    std::function<void(int, int, EvenWord const&)> grow = [&](int depth, int last,
                                                              EvenWord const& img) {
      if (depth == 12) return;
      for (int g = 0; g < 4; ++g) {
        if (last >= 0 && (g ^ 1) == last) continue;
        EvenWord piece = g < 2 ? u : v;
        if (g % 2 == 1) piece = reversed(piece);
        auto next = reduce_involutive(concat(img, piece));
        if (next.empty()) {
          t(false, "u, v relation found");
        } else {
          ++t.checks;
        }
        grow(depth + 1, g, next);
      }
    };
    grow(0, -1, {});
  }

  void bound_properties(Tally& t) {
    std::mt19937_64 rng(8);
    BaseChoice const base(4, 3, GeneratorIndex{1, 2, 3});
    for (int x = 0; x < 100; ++x) {
      auto w   = oracle::random_pb_word(rng, 4, 1 + x % 3);
      auto img = map_pb_to_g3(w);
      t(trisecant_lower_bound(w) <= pb_image_g3(w).size(), "trisecant <= unreduced length");
      for (auto const& b : all_bases(4, 3)) {
        SwitchSystem sys(b);
        auto         h     = phi(img, b);
        auto         res   = min_switches(h, sys);
        auto         rough = rough_unknotting_bound(img, b);
        t(!res.count || *res.count >= rough, "min switches >= rough on " + w.to_string());
        for (std::size_t pos = 0; pos < h.size(); ++pos) {
          for (auto const& p : sys.pairs()) {
            t(apply_switch(h, pos, p.z).size() <= h.size(), "switch does not lengthen");
          }
        }
      }
    }
  }

}  // namespace

int main() {
  bool ok = true;
  ok &= report(1, "worked example: z, phi, pi, rough 1, min switches 2", worked_example);
  ok &= report(2, "toy model: w' bound 5, w infeasible, complexity 8", toy_model);
  ok &= report(3, "relator soundness for (3,3) (4,3) (5,3) (5,4)", relator_soundness);
  ok &= report(4, "delta factorization, concyclicity, fourth intersection", delta_and_circles);
  ok &= report(5, "slope bounds and crossing orders", slopes_and_orders);
  ok &= report(6, "tracer cross-validation at n=4", tracer);
  ok &= report(7, "three-strand maps: relators, round trip, freeness", three_strand_maps);
  ok &= report(8, "bound monotonicity on a seeded corpus", bound_properties);
  return ok ? 0 : 1;
}
