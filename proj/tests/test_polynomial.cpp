#include <gtest/gtest.h>

#include <random>

#include "gnk/gnk.hpp"

using namespace gnk;

namespace {

  Poly from_roots(std::vector<Rat> const& roots) {
    Poly p{Rat(1)};
    for (auto const& r : roots) {
      p = p * Poly{-r, Rat(1)};
    }
    return p;
  }

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(rat_from_string("3/6"), Rat(1, 2));
  EXPECT_EQ(rat_from_string("-7"), Rat(-7));
  EXPECT_EQ(rat_from_string("+4/2"), Rat(2));
  EXPECT_EQ(rat_to_string(Rat(-6, 4)), "-3/2");
  EXPECT_EQ(rat_to_string(Rat(5)), "5");
}

TEST(Rational, ParseErrors) {
  for (auto s : {"", "1/0", "a", "1/-2", "1.5", "-", "1/"}) {
    EXPECT_THROW(rat_from_string(s), ParseError) << s;
  }
}

TEST(Rational, PowAndVectors) {
  EXPECT_EQ(rat_pow(Rat(2, 3), 3), Rat(8, 27));
  EXPECT_EQ(rat_pow(Rat(5), 0), Rat(1));
  Point a{1, 2}, b{3, -1};
  EXPECT_EQ(cross(a, b), Rat(-7));
  EXPECT_EQ(dot(a, b), Rat(1));
  EXPECT_EQ(norm_sq(a - b), Rat(13));
}

TEST(Poly, Arithmetic) {
  Poly p{1, 2}, q{-1, 0, 1};
  EXPECT_EQ(p * q, (Poly{-1, -2, 1, 2}));
  EXPECT_EQ(p + q, (Poly{0, 2, 1}));
  EXPECT_EQ(q - q, Poly{});
  EXPECT_EQ(q.degree(), 2);
  EXPECT_EQ(Poly{}.degree(), -1);
  EXPECT_EQ(q(Rat(3)), Rat(8));
  EXPECT_EQ(q.derivative(), (Poly{0, 2}));
}

TEST(Poly, DivisionAndGcd) {
  auto [quot, rem] = divmod(Poly{-1, 0, 1}, Poly{-1, 1});
  EXPECT_EQ(quot, (Poly{1, 1}));
  EXPECT_TRUE(rem.is_zero());
  EXPECT_EQ(gcd(from_roots({1, 2}), from_roots({2, 3})), from_roots({2}));
  EXPECT_EQ(gcd(from_roots({1}), from_roots({3})).degree(), 0);
  EXPECT_THROW(divmod(Poly{1}, Poly{}), DegenerateInput);
}

TEST(Poly, ComposeAffine) {
  Poly p{0, 0, 1};
  auto c = p.compose_affine(Rat(1), Rat(3));
  EXPECT_EQ(c(Rat(0)), Rat(1));
  EXPECT_EQ(c(Rat(1)), Rat(9));
  EXPECT_EQ(c(Rat(1, 2)), Rat(4));
}

TEST(Sturm, CountsDistinctRoots) {
  SturmSequence s(from_roots({-1, 0, 2}));
  EXPECT_EQ(s.count(-10, 10), 3);
  EXPECT_EQ(s.count(Rat(-1, 2), 10), 2);
  EXPECT_EQ(s.count(-1, 0), 1);  // half-open (a, b]
  EXPECT_EQ(SturmSequence(Poly{1, 0, 1}).count(-100, 100), 0);
  EXPECT_THROW(SturmSequence(Poly{}), DegenerateInput);
}

TEST(IsolateRoots, SeparatesCloseRoots) {
  auto p = from_roots({Rat(1, 3), Rat(1, 3) + Rat(1, 1000000), Rat(2)});
  auto r = isolate_roots(p, 0, 1);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_LE(r[0].lo, Rat(1, 3));
  EXPECT_GE(r[0].hi, Rat(1, 3));
  EXPECT_LT(r[0].hi, r[1].hi);
}

TEST(IsolateRoots, RepeatedAndIrrationalRoots) {
  auto p = from_roots({Rat(1, 2), Rat(1, 2)}) * Poly{-2, 0, 1};  // 1/2 twice, +-sqrt 2
  auto r = isolate_roots(p, -2, 2);
  ASSERT_EQ(r.size(), 3u);
  for (auto& iv : r) {
    for (int x = 0; x < 40; ++x) refine(squarefree_part(p), iv);
  }
  EXPECT_LT(abs(r[0].lo * r[0].lo - 2), Rat(1, 1000));
  EXPECT_TRUE(r[1].exact() || (r[1].lo < Rat(1, 2) && Rat(1, 2) < r[1].hi));
}

TEST(IsolateRoots, EndpointsExcluded) {
  EXPECT_TRUE(isolate_roots(from_roots({0, 1}), 0, 1).empty());
}

TEST(CommonRoot, Examples) {
  EXPECT_TRUE(common_root_in(from_roots({1, 5}), from_roots({5}), 0, 6));
  EXPECT_FALSE(common_root_in(from_roots({1, 5}), from_roots({5}), 0, 4));
  EXPECT_TRUE(common_root_in(from_roots({0}), from_roots({0, 3}), 0, 1));
  EXPECT_FALSE(common_root_in(Poly{1}, from_roots({0}), -1, 1));
}

TEST(PolyProperty, IsolationMatchesKnownRoots) {
  std::mt19937_64                    rng(51);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 9), deg(1, 5);
  for (int t = 0; t < 200; ++t) {
    std::vector<Rat> roots;
    for (int d = deg(rng); d > 0; --d) {
      roots.emplace_back(num(rng), den(rng));
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    auto iv = isolate_roots(from_roots(roots), -100, 100);
    ASSERT_EQ(iv.size(), roots.size());
    for (std::size_t x = 0; x < roots.size(); ++x) {
      EXPECT_LE(iv[x].lo, roots[x]);
      EXPECT_GE(iv[x].hi, roots[x]);
    }
  }
}
