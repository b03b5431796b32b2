#ifndef GNK_WORDS_HPP_
#define GNK_WORDS_HPP_

// Words in free products of cyclic groups.
//
// InvWord<Letter> is a word over an alphabet of involutions (every letter is
// its own inverse). The alphabet is identified by the Letter type, so one
// reduction engine serves Z_2 * Z_2 * Z_2, the free product H indexed by Z,
// and words of G_n^k. ToyWord is a word in Z * Z * Z with generators a, b, c.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <ranges>
#include <vector>

#include "gnk/errors.hpp"

namespace gnk {

  template <typename Letter>
  using InvWord = std::vector<Letter>;

  // Pushes `letter` onto a reduced word, cancelling against the last letter.
  template <typename Letter>
  void push_reduced(std::vector<Letter>& reduced, Letter const& letter) {
    if (!reduced.empty() && reduced.back() == letter) {
      reduced.pop_back();
    } else {
      reduced.push_back(letter);
    }
  }

  /// Free reduction in a free product of involutions: deletes adjacent equal
  /// pairs until none remain. Single left-to-right pass over a stack.
  template <std::ranges::input_range R>
  auto reduce_involutive(R const& word) {
    std::vector<std::ranges::range_value_t<R>> out;
    for (auto const& x : word) {
      push_reduced(out, x);
    }
    return out;
  }

  /// Reduced word with first != last letter (when its length is at least 2),
  /// obtained by stripping conjugating pairs from both ends.
  template <std::ranges::input_range R>
  auto cyclic_reduce(R const& word) {
    auto r = reduce_involutive(word);
    std::size_t lo = 0, hi = r.size();
    while (hi - lo >= 2 && r[lo] == r[hi - 1]) {
      ++lo;
      --hi;
    }
    return decltype(r)(r.begin() + lo, r.begin() + hi);
  }

  /// Length of the irreducible representative.
  template <std::ranges::input_range R>
  std::size_t complexity(R const& word) {
    return reduce_involutive(word).size();
  }

  template <typename Letter>
  std::vector<Letter> concat(std::vector<Letter> a, std::vector<Letter> const& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }

  // Inverse of a word over involutions.
  template <typename Letter>
  std::vector<Letter> reversed(std::vector<Letter> w) {
    std::reverse(w.begin(), w.end());
    return w;
  }

  ////////////////////////////////////////////////////////////////////////
  // Toy model: Z * Z * Z = <a, b, c>
  ////////////////////////////////////////////////////////////////////////

  struct Syllable {
    char          gen;  // 'a', 'b' or 'c'
    std::int64_t  exp;  // nonzero after normalisation

    friend bool operator==(Syllable const&, Syllable const&) = default;
  };

  using ToyWord = std::vector<Syllable>;

  inline void validate_toy(ToyWord const& w) {
    for (auto const& s : w) {
      if (s.gen != 'a' && s.gen != 'b' && s.gen != 'c') {
        throw InvalidLetter(std::string("toy generator must be a, b or c, got '")
                            + s.gen + "'");
      }
    }
  }

  /// Normal form in Z*Z*Z: merges adjacent syllables with the same generator
  /// and drops zero exponents. Empty iff the element is trivial.
  inline ToyWord toy_normal_form(ToyWord const& w) {
    validate_toy(w);
    ToyWord out;
    for (auto const& s : w) {
      if (s.exp == 0) {
        continue;
      }
      if (!out.empty() && out.back().gen == s.gen) {
        out.back().exp += s.exp;
        if (out.back().exp == 0) {
          out.pop_back();
        }
      } else {
        out.push_back(s);
      }
    }
    return out;
  }

  // Image in Z_2 * Z_2 * Z_2 (exponents mod 2), reduced.
  inline std::vector<char> toy_mod2_image(ToyWord const& w) {
    validate_toy(w);
    std::vector<char> out;
    for (auto const& s : w) {
      if (s.exp % 2 != 0) {
        push_reduced(out, s.gen);
      }
    }
    return out;
  }

  /// Sign switches g <-> g^{-1} do not change the image in Z_2^{*3}, so the
  /// word can only be switched to the identity if that image is trivial.
  inline bool toy_switch_feasible(ToyWord const& w) {
    return toy_mod2_image(w).empty();
  }

  /// ceil(1/2 * sum over generators of |exponent sum|). One switch moves a
  /// single exponent sum by 2.
  inline std::uint64_t toy_switch_lower_bound(ToyWord const& w) {
    validate_toy(w);
    std::int64_t sums[3] = {0, 0, 0};
    for (auto const& s : w) {
      sums[s.gen - 'a'] += s.exp;
    }
    std::uint64_t total = 0;
    for (auto v : sums) {
      total += static_cast<std::uint64_t>(v < 0 ? -v : v);
    }
    return (total + 1) / 2;
  }

  // Switches the sign of one letter inside syllable `index`, i.e.
  // g^e -> g^{e - 2 sign(e)}, and renormalises.
  inline ToyWord toy_switch(ToyWord w, std::size_t index) {
    if (index >= w.size()) {
      throw OutOfRange("toy_switch: syllable index out of range");
    }
    auto& s = w[index];
    s.exp -= (s.exp > 0 ? 2 : (s.exp < 0 ? -2 : 0));
    return toy_normal_form(w);
  }

}  // namespace gnk

#endif  // GNK_WORDS_HPP_
