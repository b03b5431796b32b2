#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "gnk/gnk.hpp"
#include "oracles.hpp"

using namespace gnk;

namespace {

  GnkWord w4(std::string const& s, int n) {
    return parse_gnk_word(s, n, 4);
  }

  bool trivial_invariants(GnkWord const& w) {
    for (auto const& base : all_bases(w.n, w.k)) {
      if (!psi_word(w, base).is_zero() || !phi(w, base).empty()) {
        return false;
      }
    }
    return true;
  }

}  // namespace

TEST(PbRelators, TwoStrandsHaveNone) {
  EXPECT_TRUE(pb_relators(2).empty());
}

TEST(PbRelators, ThreeStrandsTriangle) {
  auto r = pb_relators(3);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].lhs.to_string(), "b12 b13 b23");
  EXPECT_EQ(r[0].rhs.to_string(), "b13 b23 b12");
  EXPECT_EQ(r[1].lhs.to_string(), "b13 b23 b12");
  EXPECT_EQ(r[1].rhs.to_string(), "b23 b12 b13");
}

TEST(PbRelators, FourStrandsCommutation) {
  auto r     = pb_relators(4);
  bool found = false;
  for (auto const& rel : r) {
    found = found || (rel.lhs.to_string() == "b12 b34" && rel.rhs.to_string() == "b34 b12");
  }
  EXPECT_TRUE(found);
}

TEST(PbRelators, IdenticalSidesFlagged) {
  for (auto const& rel : pb_relators(5)) {
    EXPECT_EQ(rel.vacuous, rel.lhs == rel.rhs);
  }
}

TEST(G3C, Examples) {
  EXPECT_EQ(g3_c(1, 2, 4).to_string(), "a123 a124");
  EXPECT_EQ(g3_c(1, 3, 4).to_string(), "a134 a123");
  EXPECT_EQ(g3_c(1, 2, 3).to_string(), "a123");
}

TEST(G3C, MatchesPrintedProduct) {
  for (int n = 3; n <= 7; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        EXPECT_EQ(oracle::letters(g3_c(i, j, n)), oracle::g3_c(i, j, n));
      }
    }
  }
}

TEST(MapPbToG3, Examples) {
  EXPECT_TRUE(map_pb_to_g3(pb_generator(1, 2, 3)).empty());
  EXPECT_EQ(pb_image_g3(pb_generator(1, 2, 3)).to_string(), "a123 a123");
  EXPECT_TRUE(map_pb_to_g3(PBWord(4)).empty());
}

TEST(MapPbToG3, B13ExpansionOracle) {
  // c12^{-1} c13^2 c12 with c12 = a123 a124, c13 = a134 a123.
  auto expected = oracle::naive_reduce(std::vector<oracle::Set>{
      {1, 2, 4}, {1, 2, 3}, {1, 3, 4}, {1, 2, 3}, {1, 3, 4}, {1, 2, 3}, {1, 2, 3}, {1, 2, 4}});
  auto got = map_pb_to_g3(pb_generator(1, 3, 4));
  EXPECT_EQ(oracle::letters(got), expected);
  EXPECT_EQ(got.size(), 6u);
}

TEST(MapPbToG3, InverseLetterIsReversal) {
  auto img = pb_image_g3(pb_generator(1, 4, 5));
  EXPECT_EQ(pb_image_g3(pb_generator(1, 4, 5, -1)), img.inverse());
}

TEST(MapPbToG3, AgreesWithExpansionOracleOnRandomWords) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 200; ++t) {
    int  n = 3 + t % 4;
    auto w = oracle::random_pb_word(rng, n, 1 + t % 6);
    EXPECT_EQ(oracle::letters(map_pb_to_g3(w)), oracle::naive_reduce(oracle::pb_to_g3(w)));
  }
}

TEST(G4Components, Examples) {
  EXPECT_TRUE(g4_c_components(1, 2, 4).first.empty());
  EXPECT_EQ(g4_c_components(1, 3, 4).second.to_string(), "a1234");
  EXPECT_EQ(g4_c_components(1, 2, 5).third.to_string(), "a1245 a1235 a1234");
}

TEST(G4Components, RequiresFourStrands) {
  EXPECT_THROW(g4_c_components(1, 2, 3), InvalidContext);
  EXPECT_THROW(map_pb_to_g4(pb_generator(1, 2, 3)), InvalidContext);
}

TEST(MapPbToG4, AdjacentGeneratorIsSquare) {
  for (int n = 4; n <= 6; ++n) {
    for (int i = 1; i < n; ++i) {
      auto c = g4_c(i, i + 1, n);
      EXPECT_EQ(map_pb_to_g4(pb_generator(i, i + 1, n)), (c * c).reduced());
    }
  }
}

TEST(MapPbToG4, B13ExpansionOracle) {
  // At n = 4, c12 = a1234 and c13 = a1234: both conjugation directions agree.
  auto c12 = w4("a1234", 4), c13 = w4("a1234", 4);
  EXPECT_EQ(g4_c(1, 2, 4), c12);
  EXPECT_EQ(g4_c(1, 3, 4), c13);
  auto printed = (c12 * c13 * c13 * c12.inverse()).reduced();
  EXPECT_EQ(map_pb_to_g4(pb_generator(1, 3, 4)), printed);
  EXPECT_EQ(g4_motion_word(1, 3, 4).reduced(), printed);
}

TEST(MapPbToG4, EmptyWord) {
  EXPECT_TRUE(map_pb_to_g4(PBWord(5)).empty());
}

TEST(MapPbToG4, MotionWordKeepsPrintedConjugation) {
  auto c12 = g4_c(1, 2, 5), c13 = g4_c(1, 3, 5), c14 = g4_c(1, 4, 5);
  EXPECT_EQ(g4_motion_word(1, 4, 5), c12 * c13 * c14 * c14 * c13.inverse() * c12.inverse());
  EXPECT_EQ(g4_generator_image(1, 4, 5), c12.inverse() * c13.inverse() * c14 * c14 * c13 * c12);
}

TEST(Pb3ToEven, Examples) {
  EXPECT_TRUE(pb3_to_even(parse_pb_word("b12 b13 b23")).empty());
  EXPECT_EQ(pb3_to_even(parse_pb_word("b13", 3)), (EvenWord{3, 1}));
  for (auto const& rel : pb_relators(3)) {
    EXPECT_EQ(pb3_to_even(rel.lhs), pb3_to_even(rel.rhs));
  }
  EXPECT_THROW(pb3_to_even(PBWord(4)), InvalidContext);
}

TEST(EvenToPb3, Examples) {
  EXPECT_EQ(even_to_pb3({3, 1}).to_string(), "b13");
  EXPECT_TRUE(even_to_pb3({1, 2, 2, 1}).letters.empty());
  EXPECT_EQ(even_to_pb3({1, 2}).to_string(), "B13 B23");
  EXPECT_EQ(even_to_pb3({2, 1}).to_string(), "b23 b13");
  EXPECT_THROW(even_to_pb3({1, 2, 3}), NotInEvenSubgroup);
}

// Properties

TEST(PureBraidProperty, ImagesAreEven) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 200; ++t) {
    int  n = 4 + t % 2;
    auto w = oracle::random_pb_word(rng, n, 1 + t % 5);
    EXPECT_TRUE(is_even(pb_image_g3(w)));
    EXPECT_TRUE(is_even(pb_image_g4(w)));
  }
}

TEST(PureBraidProperty, Homomorphism) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 200; ++t) {
    int  n = 4 + t % 2;
    auto u = oracle::random_pb_word(rng, n, 1 + t % 4);
    auto v = oracle::random_pb_word(rng, n, 1 + t % 3);
    EXPECT_EQ(map_pb_to_g3(u * v), (map_pb_to_g3(u) * map_pb_to_g3(v)).reduced());
    EXPECT_EQ(map_pb_to_g4(u * v), (map_pb_to_g4(u) * map_pb_to_g4(v)).reduced());
  }
}

TEST(PureBraidProperty, RelatorSoundness) {
  for (int n = 3; n <= 5; ++n) {
    for (auto const& rel : pb_relators(n)) {
      auto d = rel.difference();
      EXPECT_TRUE(trivial_invariants(map_pb_to_g3(d))) << d.to_string();
      if (n >= 4) {
        EXPECT_TRUE(trivial_invariants(map_pb_to_g4(d))) << d.to_string();
      }
    }
  }
}

TEST(PureBraidProperty, Pb3KillsTriangleRelations) {
  for (auto const& rel : pb_relators(3)) {
    EXPECT_TRUE(pb3_to_even(rel.difference()).empty());
  }
}

TEST(PureBraidProperty, EvenRoundTrip) {
  // Every reduced even word of length <= 10 over three letters.
  std::vector<EvenWord> layer{{}};
  std::size_t           count = 0;
  for (int len = 0; len <= 10; ++len) {
    std::vector<EvenWord> next;
    for (auto const& w : layer) {
      if (len % 2 == 0) {
        ++count;
        EXPECT_EQ(pb3_to_even(even_to_pb3(w)), w);
      }
      for (int x = 1; x <= 3; ++x) {
        if (w.empty() || w.back() != x) {
          auto v = w;
          v.push_back(x);
          next.push_back(v);
        }
      }
    }
    layer = std::move(next);
  }
  EXPECT_EQ(count, 1u + 6 + 24 + 96 + 384 + 1536);
}

TEST(PureBraidProperty, UAndVAreFree) {
  // Reduced nonempty words in u, v, u^-1, v^-1 of length <= 12 map to
  // nontrivial elements of Z2 * Z2 * Z2.
  EvenWord const u{3, 1}, v{2, 3};
  std::size_t    checked = 0;
  std::function<void(int, int, EvenWord const&)> grow = [&](int depth, int last,
                                                              EvenWord const& img) {
    if (depth == 12) return;
    for (int g = 0; g < 4; ++g) {  // u, u^-1, v, v^-1
      if (last >= 0 && (g ^ 1) == last) continue;
      EvenWord piece = g < 2 ? u : v;
      if (g % 2 == 1) piece = reversed(piece);
      auto next = reduce_involutive(concat(img, piece));
      ++checked;
      ASSERT_FALSE(next.empty());
      grow(depth + 1, g, next);
    }
  };
  grow(0, -1, {});
  EXPECT_GT(checked, 0u);
}
