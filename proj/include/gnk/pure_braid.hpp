#ifndef GNK_PURE_BRAID_HPP_
#define GNK_PURE_BRAID_HPP_

// Pure braid words, their defining relations, and the homomorphisms
// PB_n -> G_n^3 and PB_n -> G_n^4 given on the generators b_ij.
//
// The images are written as products of elements c_{i,j}. Inverses of words
// in G_n^k are reversals since every generator is an involution.

#include <string>
#include <vector>

#include "gnk/errors.hpp"
#include "gnk/presentation.hpp"
#include "gnk/words.hpp"

namespace gnk {

  struct PBLetter {
    int i    = 1;
    int j    = 2;
    int sign = 1;  // +1 for b_ij, -1 for b_ij^{-1}

    PBLetter inverse() const {
      return {i, j, -sign};
    }

    std::string to_string() const {
      std::string s(1, sign > 0 ? 'b' : 'B');
      if (i < 10 && j < 10) {
        return s + std::to_string(i) + std::to_string(j);
      }
      return s + "{" + std::to_string(i) + "," + std::to_string(j) + "}";
    }

    friend bool operator==(PBLetter const&, PBLetter const&) = default;
  };

  struct PBWord {
    int                   n = 2;
    std::vector<PBLetter> letters;

    PBWord() = default;
    PBWord(int n_, std::vector<PBLetter> ls = {}) : n(n_), letters(std::move(ls)) {
      if (n < 2) {
        throw InvalidContext("pure braid words need n >= 2");
      }
      for (auto const& b : letters) {
        if (b.i < 1 || b.i >= b.j || b.j > n || (b.sign != 1 && b.sign != -1)) {
          throw InvalidLetter("invalid pure braid letter " + b.to_string()
                              + " for n=" + std::to_string(n));
        }
      }
    }

    PBWord inverse() const {
      PBWord w;
      w.n = n;
      for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        w.letters.push_back(it->inverse());
      }
      return w;
    }

    friend PBWord operator*(PBWord a, PBWord const& b) {
      if (a.n != b.n) {
        throw InvalidContext("cannot multiply braids with different n");
      }
      a.letters.insert(a.letters.end(), b.letters.begin(), b.letters.end());
      return a;
    }

    std::string to_string() const {
      std::string s;
      for (std::size_t x = 0; x < letters.size(); ++x) {
        if (x > 0) {
          s += ' ';
        }
        s += letters[x].to_string();
      }
      return s;
    }

    friend bool operator==(PBWord const&, PBWord const&) = default;
  };

  inline PBWord pb_generator(int i, int j, int n, int sign = 1) {
    return PBWord(n, {PBLetter{i, j, sign}});
  }

  // One printed relation lhs = rhs of PB_n. The relation family with
  // identical sides is kept, but marked vacuous.
  struct PBRelation {
    PBWord      lhs;
    PBWord      rhs;
    std::string family;  // "commute", "triangle" or "vacuous"
    bool        vacuous = false;

    PBWord difference() const {
      return lhs * rhs.inverse();
    }
  };

  /// The relations of PB_n in the order they are printed: commutations for
  /// i<j<k<l and i<k<l<j, the two triangle equalities for i<j<k, and the
  /// four-index family whose two sides coincide.
  inline std::vector<PBRelation> pb_relators(int n) {
    if (n < 2) {
      throw InvalidContext("pb_relators needs n >= 2");
    }
    auto b = [n](int i, int j) { return PBLetter{i, j, 1}; };
    std::vector<PBRelation> out;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        for (int k = 1; k <= n; ++k) {
          for (int l = k + 1; l <= n; ++l) {
            bool disjoint = j < k;
            bool nested   = i < k && l < j;
            if (disjoint || nested) {
              out.push_back({PBWord(n, {b(i, j), b(k, l)}),
                             PBWord(n, {b(k, l), b(i, j)}),
                             "commute",
                             false});
            }
          }
        }
      }
    }
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        for (int k = j + 1; k <= n; ++k) {
          PBWord w1(n, {b(i, j), b(i, k), b(j, k)});
          PBWord w2(n, {b(i, k), b(j, k), b(i, j)});
          PBWord w3(n, {b(j, k), b(i, j), b(i, k)});
          out.push_back({w1, w2, "triangle", false});
          out.push_back({w2, w3, "triangle", false});
        }
      }
    }
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        for (int k = j + 1; k <= n; ++k) {
          for (int l = k + 1; l <= n; ++l) {
            PBWord w(n, {b(j, l), b(k, l), b(i, k), b(j, k)});
            out.push_back({w, w, "vacuous", true});
          }
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // PB_n -> G_n^3
  ////////////////////////////////////////////////////////////////////////

  /// c_{i,j} = prod_{k=j+1}^{n} a_{ijk} * prod_{k=1}^{j-1} a_{ijk}, with the
  /// index k = i skipped (a letter needs three distinct indices).
  inline GnkWord g3_c(int i, int j, int n) {
    validate_context(n, 3);
    validate_pair(i, j, n);
    GnkWord w(n, 3);
    auto    add = [&](int k) {
      if (k != i && k != j) {
        w.letters.push_back(GeneratorIndex{i, j, k});
      }
    };
    for (int k = j + 1; k <= n; ++k) {
      add(k);
    }
    for (int k = 1; k < j; ++k) {
      add(k);
    }
    return w;
  }

  // b_ij -> c_{i,i+1}^{-1} ... c_{i,j-1}^{-1} c_{ij}^2 c_{i,j-1} ... c_{i,i+1}
  inline GnkWord g3_generator_image(int i, int j, int n) {
    validate_pair(i, j, n);
    GnkWord conj(n, 3);
    for (int k = i + 1; k < j; ++k) {
      conj *= g3_c(i, k, n).inverse();
    }
    auto c = g3_c(i, j, n);
    return conj * c * c * conj.inverse();
  }

  /// Letterwise substitution without free reduction.
  inline GnkWord pb_image_g3(PBWord const& w) {
    if (w.n < 3) {
      throw InvalidContext("PB_n -> G_n^3 needs n >= 3");
    }
    GnkWord out(w.n, 3);
    for (auto const& b : w.letters) {
      auto img = g3_generator_image(b.i, b.j, w.n);
      out *= (b.sign > 0 ? img : img.inverse());
    }
    return out;
  }

  inline GnkWord map_pb_to_g3(PBWord const& w) {
    return pb_image_g3(w).reduced();
  }

  ////////////////////////////////////////////////////////////////////////
  // PB_n -> G_n^4
  ////////////////////////////////////////////////////////////////////////

  struct G4Components {
    GnkWord first;   // both extra indices below j
    GnkWord second;  // one extra index below j, one above
    GnkWord third;   // both extra indices above j
  };

  /// The three factors of c_{ij} in G_n^4, as the circles through P_j are
  /// crossed when point i rounds P_j from above. Letters are {i, j, l, m};
  /// tuples repeating an index are dropped.
  ///   first:  l < m < j, ordered by (m, l) ascending
  ///   second: l < j < m, l descending then m ascending
  ///   third:  j < l < m, l descending then m descending
  inline G4Components g4_c_components(int i, int j, int n) {
    if (n < 4) {
      throw InvalidContext("G_n^4 needs n >= 4");
    }
    validate_pair(i, j, n);
    G4Components c{GnkWord(n, 4), GnkWord(n, 4), GnkWord(n, 4)};
    auto         letter = [&](int l, int m) { return GeneratorIndex{i, j, l, m}; };
    for (int m = 2; m < j; ++m) {
      for (int l = 1; l < m; ++l) {
        if (l != i && m != i) {
          c.first.letters.push_back(letter(l, m));
        }
      }
    }
    for (int l = j - 1; l >= 1; --l) {
      for (int m = j + 1; m <= n; ++m) {
        if (l != i && m != i) {
          c.second.letters.push_back(letter(l, m));
        }
      }
    }
    for (int l = n - 1; l > j; --l) {
      for (int m = n; m > l; --m) {
        if (l != i && m != i) {
          c.third.letters.push_back(letter(l, m));
        }
      }
    }
    return c;
  }

  // c_{ij} = c^{II} c^{I} c^{III}
  inline GnkWord g4_c(int i, int j, int n) {
    auto c = g4_c_components(i, j, n);
    return c.second * c.first * c.third;
  }

  // The word read off the motion of point i (rounding P_{i+1}, ..., P_j from
  // above, j passing over i, i returning): c_{i,i+1} ... c_{i,j-1} c_{ij}^2
  // c_{i,j-1}^{-1} ... c_{i,i+1}^{-1}. This winds j clockwise around i, so
  // these words satisfy the triangle relations in reversed order.
  inline GnkWord g4_motion_word(int i, int j, int n) {
    validate_pair(i, j, n);
    if (i > j) {
      throw InvalidPair("g4_motion_word expects i < j");
    }
    GnkWord conj(n, 4);
    for (int k = i + 1; k < j; ++k) {
      conj *= g4_c(i, k, n);
    }
    auto c = g4_c(i, j, n);
    return conj * c * c * conj.inverse();
  }

  // b_ij -> c_{i,i+1}^{-1} ... c_{i,j-1}^{-1} c_{ij}^2 c_{i,j-1} ... c_{i,i+1},
  // the same conjugation direction as for k = 3. With this direction the
  // images satisfy the defining relations of PB_n.
  inline GnkWord g4_generator_image(int i, int j, int n) {
    validate_pair(i, j, n);
    if (i > j) {
      throw InvalidPair("g4_generator_image expects i < j");
    }
    GnkWord conj(n, 4);
    for (int k = i + 1; k < j; ++k) {
      conj *= g4_c(i, k, n).inverse();
    }
    auto c = g4_c(i, j, n);
    return conj * c * c * conj.inverse();
  }

  inline GnkWord pb_image_g4(PBWord const& w) {
    if (w.n < 4) {
      throw InvalidContext("PB_n -> G_n^4 needs n >= 4");
    }
    GnkWord out(w.n, 4);
    for (auto const& b : w.letters) {
      auto img = g4_generator_image(b.i, b.j, w.n);
      out *= (b.sign > 0 ? img : img.inverse());
    }
    return out;
  }

  inline GnkWord map_pb_to_g4(PBWord const& w) {
    return pb_image_g4(w).reduced();
  }

  inline GnkWord pb_image(PBWord const& w, int k) {
    if (k == 3) {
      return pb_image_g3(w);
    }
    if (k == 4) {
      return pb_image_g4(w);
    }
    throw InvalidContext("pure braids map to G_n^k only for k = 3, 4");
  }

  inline GnkWord map_pb_to_gk(PBWord const& w, int k) {
    return pb_image(w, k).reduced();
  }

  ////////////////////////////////////////////////////////////////////////
  // Three strands: PB_3 / Z(PB_3) and even words of Z_2 * Z_2 * Z_2
  ////////////////////////////////////////////////////////////////////////

  // Letters 1, 2, 3 stand for a_1, a_2, a_3. Point 3 moves around the fixed
  // points 1 and 2; a_1, a_2 are the unbounded pieces of the line 12 ending at
  // 1 and 2, and a_3 is the segment between them.
  using EvenWord = std::vector<int>;

  inline std::string even_word_to_string(EvenWord const& w) {
    std::string s;
    for (std::size_t x = 0; x < w.size(); ++x) {
      if (x > 0) {
        s += ' ';
      }
      s += "a" + std::to_string(w[x]);
    }
    return s;
  }

  /// b13 -> a3 a1, b23 -> a2 a3, b12 -> (a3 a1 a2 a3)^{-1}. The product
  /// b12 b13 b23 (the full twist) maps to the identity.
  inline EvenWord pb3_to_even(PBWord const& w) {
    if (w.n != 3) {
      throw InvalidContext("pb3_to_even needs n = 3");
    }
    EvenWord out;
    for (auto const& b : w.letters) {
      EvenWord img;
      if (b.i == 1 && b.j == 3) {
        img = {3, 1};
      } else if (b.i == 2 && b.j == 3) {
        img = {2, 3};
      } else {
        img = {3, 2, 1, 3};
      }
      if (b.sign < 0) {
        img = reversed(img);
      }
      for (int x : img) {
        push_reduced(out, x);
      }
    }
    return out;
  }

  /// Inverse of pb3_to_even on reduced even words: consecutive letter pairs
  /// are read off as loops of point 3.
  inline PBWord even_to_pb3(EvenWord const& w) {
    for (int x : w) {
      if (x < 1 || x > 3) {
        throw InvalidLetter("even words use letters a1, a2, a3");
      }
    }
    auto r = reduce_involutive(w);
    if (r.size() % 2 != 0) {
      throw NotInEvenSubgroup("word of odd reduced length is not in the even subgroup");
    }
    PBWord out(3);
    auto   b = [](int i, int j, int s) { return PBLetter{i, j, s}; };
    for (std::size_t x = 0; x < r.size(); x += 2) {
      int p = r[x], q = r[x + 1];
      if (p == 3 && q == 1) {
        out.letters.push_back(b(1, 3, 1));
      } else if (p == 1 && q == 3) {
        out.letters.push_back(b(1, 3, -1));
      } else if (p == 2 && q == 3) {
        out.letters.push_back(b(2, 3, 1));
      } else if (p == 3 && q == 2) {
        out.letters.push_back(b(2, 3, -1));
      } else if (p == 1 && q == 2) {
        out.letters.push_back(b(1, 3, -1));
        out.letters.push_back(b(2, 3, -1));
      } else {  // p == 2 && q == 1
        out.letters.push_back(b(2, 3, 1));
        out.letters.push_back(b(1, 3, 1));
      }
    }
    return out;
  }

}  // namespace gnk

#endif  // GNK_PURE_BRAID_HPP_
