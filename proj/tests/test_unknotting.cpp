#include <gtest/gtest.h>

#include <random>

#include "gnk/gnk.hpp"
#include "oracles.hpp"

using namespace gnk;

namespace {

  BaseChoice const b4{4, 3, GeneratorIndex{1, 2, 3}};

  ZVec z(char const* bits) {
    return ZVec::from_string(bits);
  }

  HWord const beta_image = parse_hword("f[00] f[10] f[11] f[10]");
  GnkWord const beta = parse_gnk_word("a123 a234 a123 a134 a123 a134 a123 a234", 4, 3);

  HWord random_hword(std::mt19937_64& rng, int width, int len) {
    std::uniform_int_distribution<std::uint64_t> d(0, (std::uint64_t(1) << width) - 1);
    HWord                                        w;
    for (int x = 0; x < len; ++x) {
      w.emplace_back(width, d(rng));
    }
    return w;
  }

}  // namespace

TEST(ZPair, Examples) {
  EXPECT_EQ(z_pair(1, 2, b4), z("11"));
  EXPECT_EQ(z_pair(1, 3, b4), z("01"));
  EXPECT_EQ(z_pair(2, 3, b4), z("10"));
  EXPECT_EQ(z_pair(1, 4, b4), z("10"));
  EXPECT_EQ(z_pair(2, 4, b4), z("01"));
  EXPECT_EQ(z_pair(3, 4, b4), z("11"));
}

TEST(ZPair, XorOfPsiOracle) {
  // z_14 = psi(a124) + psi(a134)
  EXPECT_EQ(z_pair(1, 4, b4).bits(),
            oracle::psi({1, 2, 4}, {1, 2, 3}, 4) ^ oracle::psi({1, 3, 4}, {1, 2, 3}, 4));
  EXPECT_EQ(z_pair(4, 1, b4), z_pair(1, 4, b4));
}

TEST(ZPair, InvalidPair) {
  EXPECT_THROW(z_pair(1, 1, b4), InvalidPair);
  EXPECT_THROW(z_pair(1, 5, b4), InvalidPair);
}

TEST(ApplySwitch, Examples) {
  SwitchSystem sys(b4);
  // Positions are 0-based.
  auto once = apply_switch(beta_image, 2, 1, 3, sys);
  EXPECT_EQ(once, parse_hword("f[00] f[10]"));
  EXPECT_TRUE(apply_switch(once, 1, 2, 3, sys).empty());
  EXPECT_TRUE(apply_switch(parse_hword("f[01] f[10]"), 1, 1, 2, sys).empty());
}

TEST(ApplySwitch, OutOfRange) {
  SwitchSystem sys(b4);
  EXPECT_THROW(apply_switch(beta_image, 4, 1, 3, sys), OutOfRange);
  EXPECT_THROW(apply_switch(parse_hword("f[00] f[00]"), 0, 1, 3, sys), OutOfRange);
}

TEST(SwitchFeasibility, Examples) {
  SwitchSystem sys(b4);
  EXPECT_TRUE(switch_feasibility_necessary({}, sys));
  EXPECT_TRUE(switch_feasibility_necessary(beta_image, sys));
  EXPECT_FALSE(switch_feasibility_necessary(parse_hword("f[00]"), sys));
}

TEST(SwitchFeasibility, TwoLettersNeedSameSpanCoset) {
  BaseChoice   b(5, 3, GeneratorIndex{1, 2, 3});
  SwitchSystem sys(b);
  auto const&  span = sys.switch_span();
  for (auto const& x : z_sample(b)) {
    for (auto const& y : z_sample(b)) {
      if (x == y) continue;
      bool same = std::find(span.begin(), span.end(), x + y) != span.end();
      EXPECT_EQ(switch_feasibility_necessary({x, y}, sys), same);
    }
  }
}

TEST(MinSwitches, Examples) {
  SwitchSystem sys(b4);
  EXPECT_EQ(min_switches({}, sys).count, 0u);
  auto r = min_switches(beta_image, sys);
  ASSERT_TRUE(r.count);
  EXPECT_EQ(*r.count, 2u);
  // The witness trivializes the word.
  HWord w = beta_image;
  for (auto const& s : r.witness) {
    w = apply_switch(w, s.pos, s.i, s.j, sys);
  }
  EXPECT_TRUE(w.empty());
}

TEST(MinSwitches, NoSingleSwitchSuffices) {
  SwitchSystem sys(b4);
  for (std::size_t pos = 0; pos < beta_image.size(); ++pos) {
    for (auto const& p : sys.pairs()) {
      EXPECT_FALSE(apply_switch(beta_image, pos, p.z).empty());
    }
  }
  EXPECT_TRUE(min_switches(beta_image, sys, 1).exceeded());
}

TEST(MinSwitches, InfeasibleWordExceedsEveryBudget) {
  SwitchSystem sys(b4);
  auto         w = parse_hword("f[00] f[10] f[11]");
  for (std::size_t budget = 0; budget <= 6; ++budget) {
    EXPECT_TRUE(min_switches(w, sys, budget).exceeded());
  }
}

TEST(PiProject, Examples) {
  EXPECT_EQ(pi_project(beta_image), (PiVector{z("00"), z("11")}));
  EXPECT_TRUE(pi_project(parse_hword("f[01] f[01]")).empty());
  EXPECT_TRUE(pi_project({}).empty());
}

TEST(CzCount, Examples) {
  SwitchSystem sys(b4);
  EXPECT_EQ(sys.z0().size(), 4u);
  PiVector xi{z("00"), z("11")};
  for (auto const& x : z_sample(b4)) {
    EXPECT_EQ(c_z_count(xi, x, sys), 2u);
  }
  EXPECT_EQ(c_max(xi, sys), 2u);
  EXPECT_EQ(c_max({}, sys), 0u);
}

TEST(CzCount, TrivialSubgroup) {
  // n = k: Z has no bits and Z_0 = {0}.
  BaseChoice   b(3, 3, GeneratorIndex{1, 2, 3});
  SwitchSystem sys(b);
  EXPECT_EQ(sys.z0().size(), 1u);
  EXPECT_EQ(c_max({b.zero()}, sys), 1u);
}

TEST(RoughBound, Examples) {
  EXPECT_EQ(rough_unknotting_bound(beta, b4), 1u);
  EXPECT_EQ(rough_unknotting_bound(GnkWord(4, 3), b4), 0u);
  EXPECT_EQ(rough_unknotting_bound(relators(4, 3).back(), b4), 0u);
  EXPECT_THROW(rough_unknotting_bound(parse_gnk_word("a123", 4, 3), b4), NotInEvenSubgroup);
}

TEST(UnknottingReport, BraidWithBetaInvariants) {
  auto w = parse_pb_word("B23 b13", 4);
  for (auto const& base : all_bases(4, 3)) {
    EXPECT_EQ(phi(map_pb_to_g3(w), base), phi(beta, base));
  }
  auto rep = unknotting_report(w);
  EXPECT_EQ(rep.best_bound, 2u);
  EXPECT_EQ(rep.best_k, 3);
  EXPECT_EQ(rep.best_m, (GeneratorIndex{1, 2, 3}));
  auto const& e = rep.entries.front();
  EXPECT_EQ(e.rough, 1u);
  EXPECT_EQ(e.min_switches, 2u);
}

TEST(UnknottingReport, EmptyBraid) {
  auto rep = unknotting_report(PBWord(4));
  EXPECT_EQ(rep.best_bound, 0u);
  EXPECT_EQ(rep.entries.size(), 4u + 1u);
  for (auto const& e : rep.entries) {
    EXPECT_EQ(e.rough, 0u);
    EXPECT_EQ(e.min_switches, 0u);
  }
}

TEST(UnknottingReport, FullTwistSquared) {
  auto w   = parse_pb_word("b12^2", 4);
  auto rep = unknotting_report(w);
  std::size_t best = 0;
  for (auto const& e : rep.entries) {
    auto image = map_pb_to_gk(w, e.k);
    BaseChoice base(4, e.k, e.m);
    EXPECT_EQ(oracle::bits(e.phi_image), oracle::phi_bits(image, e.m.indices()));
    EXPECT_EQ(e.rough, rough_unknotting_bound(image, base));
    ASSERT_TRUE(e.min_switches);
    EXPECT_GE(*e.min_switches, e.rough);
    best = std::max({best, e.rough, *e.min_switches});
  }
  EXPECT_EQ(rep.best_bound, best);
}

// Properties

TEST(UnknottingProperty, SwitchesNeverLengthen) {
  std::mt19937_64 rng(41);
  BaseChoice      b(5, 3, GeneratorIndex{1, 3, 5});
  SwitchSystem    sys(b);
  for (int t = 0; t < 300; ++t) {
    auto w = reduce_involutive(random_hword(rng, b.width(), 1 + t % 9));
    if (w.empty()) continue;
    std::uniform_int_distribution<std::size_t> pos(0, w.size() - 1), pr(0, sys.pairs().size() - 1);
    auto const&                                p = sys.pairs()[pr(rng)];
    EXPECT_LE(apply_switch(w, pos(rng), p.i, p.j, sys).size(), w.size());
  }
}

TEST(UnknottingProperty, MinSwitchesAtLeastRough) {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 60; ++t) {
    int  n = 4 + t % 2;
    auto w = oracle::random_even_word(rng, n, 3, 1 + t % 4);
    for (auto const& base : all_bases(n, 3)) {
      SwitchSystem sys(base);
      auto         r = min_switches(phi(w, base), sys, 4);
      if (r.count) {
        EXPECT_GE(*r.count, rough_unknotting_bound(w, base));
      }
    }
  }
}

TEST(UnknottingProperty, PiIgnoresCancellingPairs) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 200; ++t) {
    auto                                       w = random_hword(rng, 4, t % 8);
    std::uniform_int_distribution<std::size_t> pos(0, w.size());
    auto                                       x  = random_hword(rng, 4, 1).front();
    auto                                       w2 = w;
    w2.insert(w2.begin() + static_cast<long>(pos(rng)), {x, x});
    EXPECT_EQ(pi_project(w2), pi_project(w));
  }
}

TEST(UnknottingProperty, CzDependsOnlyOnCoset) {
  std::mt19937_64 rng(44);
  for (int n = 4; n <= 5; ++n) {
    for (auto const& base : all_bases(n, 3)) {
      SwitchSystem sys(base);
      auto const   zs = z_sample(base);
      for (int t = 0; t < 5; ++t) {
        auto     w = random_hword(rng, base.width(), 6);
        PiVector xi = pi_project(w);
        for (auto const& x : zs) {
          for (auto const& z0 : sys.z0()) {
            EXPECT_EQ(c_z_count(xi, x, sys), c_z_count(xi, x + z0, sys));
          }
        }
      }
    }
  }
}

TEST(UnknottingProperty, FullTwistInsertsSwitchPair) {
  // c_ij^2 contributes f_y f_{y + z_ij} when {i, j} lies in the base; the pair
  // cancels when z_ij = 0.
  for (int n = 4; n <= 5; ++n) {
    for (int k : {3, 4}) {
      if (k > n) continue;
      for (auto const& base : all_bases(n, k)) {
        for (int i = 1; i <= n; ++i) {
          for (int j = i + 1; j <= n; ++j) {
            auto c  = c_full(i, j, n, k);
            auto zz = z_pair(i, j, base);
            for (auto const& x : z_sample(base)) {
              auto st = phi_at(c * c, base, x);
              EXPECT_EQ(st.x, x);
              if (base.m().contains(i) && base.m().contains(j) && !zz.is_zero()) {
                ASSERT_EQ(st.y.size(), 2u);
                EXPECT_EQ(st.y[0] + st.y[1], zz);
              } else {
                EXPECT_TRUE(st.y.empty());
              }
            }
          }
        }
      }
    }
  }
}

TEST(UnknottingProperty, FullTwistInsertionInsideWord) {
  std::mt19937_64 rng(45);
  for (int t = 0; t < 100; ++t) {
    auto w = oracle::random_even_word(rng, 4, 3, 1 + t % 4);
    std::uniform_int_distribution<std::size_t> pos(0, w.size());
    auto p = static_cast<long>(pos(rng));
    GnkWord u(4, 3, std::vector<GeneratorIndex>(w.letters.begin(), w.letters.begin() + p));
    GnkWord v(4, 3, std::vector<GeneratorIndex>(w.letters.begin() + p, w.letters.end()));
    int i = 1 + t % 3, j = 4;
    auto c = c_full(i, j, 4, 3);
    auto w2 = u * c * c * v;
    for (auto const& base : all_bases(4, 3)) {
      auto sv = phi_at(v, base, base.zero());
      auto h  = phi_at(c * c, base, sv.x).y;
      auto su = phi_at(u, base, sv.x);
      // w2 . (0,1) = u . (x_v, h y_v), and u shifts the whole H-part by psi.
      auto expected = reduce_involutive(concat(concat(su.y, h), sv.y));
      EXPECT_EQ(phi(w2, base), expected);
      EXPECT_EQ(phi(w, base), reduce_involutive(concat(su.y, sv.y)));
    }
  }
}
