#ifndef GNK_PRESENTATION_HPP_
#define GNK_PRESENTATION_HPP_

// Generators, relators and distinguished products of the k-free braid groups
// G_n^k. The group G_n^k is generated by involutions a_m indexed by the
// k-element subsets m of {1, ..., n}.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "gnk/errors.hpp"
#include "gnk/words.hpp"

namespace gnk {

  inline void validate_context(int n, int k) {
    if (k < 1 || k > n) {
      throw InvalidContext("invalid context (n=" + std::to_string(n)
                           + ", k=" + std::to_string(k)
                           + "): need 1 <= k <= n");
    }
    if (n > 62) {
      throw InvalidContext("n=" + std::to_string(n) + " is too large");
    }
  }

  // A k-element subset of {1, ..., n}, stored as a strictly increasing
  // sequence. Ordering is lexicographic on that sequence.
  class GeneratorIndex {
   public:
    GeneratorIndex() = default;

    explicit GeneratorIndex(std::vector<int> indices) : _idx(std::move(indices)) {
      std::sort(_idx.begin(), _idx.end());
      for (std::size_t i = 0; i < _idx.size(); ++i) {
        if (_idx[i] < 1 || (i > 0 && _idx[i] == _idx[i - 1])) {
          throw InvalidLetter("generator index must be distinct positive integers");
        }
      }
    }

    GeneratorIndex(std::initializer_list<int> indices)
        : GeneratorIndex(std::vector<int>(indices)) {}

    std::vector<int> const& indices() const noexcept {
      return _idx;
    }

    std::size_t size() const noexcept {
      return _idx.size();
    }

    int operator[](std::size_t i) const {
      return _idx[i];
    }

    bool contains(int x) const {
      return std::binary_search(_idx.begin(), _idx.end(), x);
    }

    std::uint64_t mask() const noexcept {
      std::uint64_t m = 0;
      for (int x : _idx) {
        m |= std::uint64_t(1) << x;
      }
      return m;
    }

    bool valid_for(int n, int k) const noexcept {
      return static_cast<int>(_idx.size()) == k && !_idx.empty()
             && _idx.back() <= n;
    }

    // "a{1,2,3}" or, with compact = true and all indices < 10, "a123".
    std::string to_string(bool compact = true) const {
      bool small = std::all_of(_idx.begin(), _idx.end(), [](int x) { return x < 10; });
      std::string s = "a";
      if (compact && small) {
        for (int x : _idx) {
          s += std::to_string(x);
        }
        return s;
      }
      s += '{';
      for (std::size_t i = 0; i < _idx.size(); ++i) {
        if (i > 0) {
          s += ',';
        }
        s += std::to_string(_idx[i]);
      }
      s += '}';
      return s;
    }

    friend auto operator<=>(GeneratorIndex const&, GeneratorIndex const&) = default;
    friend bool operator==(GeneratorIndex const&, GeneratorIndex const&) = default;

   private:
    std::vector<int> _idx;
  };

  inline std::size_t intersection_size(GeneratorIndex const& a, GeneratorIndex const& b) {
    return static_cast<std::size_t>(std::popcount(a.mask() & b.mask()));
  }

  // A word in G_n^k. Generators are involutions, so the inverse of a word is
  // its reversal and no formal inverses are stored.
  struct GnkWord {
    int                         n = 0;
    int                         k = 0;
    std::vector<GeneratorIndex> letters;

    GnkWord() = default;
    GnkWord(int n_, int k_, std::vector<GeneratorIndex> ls = {})
        : n(n_), k(k_), letters(std::move(ls)) {
      validate_context(n, k);
      for (auto const& m : letters) {
        if (!m.valid_for(n, k)) {
          throw InvalidLetter("letter " + m.to_string(false) + " is not a "
                              + std::to_string(k) + "-subset of {1.."
                              + std::to_string(n) + "}");
        }
      }
    }

    std::size_t size() const noexcept {
      return letters.size();
    }

    bool empty() const noexcept {
      return letters.empty();
    }

    GnkWord inverse() const {
      GnkWord w = *this;
      std::reverse(w.letters.begin(), w.letters.end());
      return w;
    }

    GnkWord reduced() const {
      GnkWord w = *this;
      w.letters = reduce_involutive(letters);
      return w;
    }

    GnkWord& operator*=(GnkWord const& other) {
      if (other.n != n || other.k != k) {
        throw InvalidContext("cannot multiply words from different G_n^k");
      }
      letters.insert(letters.end(), other.letters.begin(), other.letters.end());
      return *this;
    }

    friend GnkWord operator*(GnkWord a, GnkWord const& b) {
      a *= b;
      return a;
    }

    std::string to_string(bool compact = true) const {
      std::string s;
      for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i > 0) {
          s += ' ';
        }
        s += letters[i].to_string(compact && n <= 9);
      }
      return s;
    }

    friend bool operator==(GnkWord const&, GnkWord const&) = default;
  };

  /// All k-subsets of {1..n} in lexicographic order.
  inline std::vector<GeneratorIndex> generators(int n, int k) {
    validate_context(n, k);
    std::vector<GeneratorIndex> out;
    std::vector<int>            c(k);
    for (int i = 0; i < k; ++i) {
      c[i] = i + 1;
    }
    while (true) {
      out.emplace_back(c);
      int i = k - 1;
      while (i >= 0 && c[i] == n - k + i + 1) {
        --i;
      }
      if (i < 0) {
        break;
      }
      ++c[i];
      for (int j = i + 1; j < k; ++j) {
        c[j] = c[j - 1] + 1;
      }
    }
    return out;
  }

  /// a_m and a_m' commute when |m ∩ m'| <= k - 2.
  inline bool far_commutes(GeneratorIndex const& m, GeneratorIndex const& mp) {
    if (m.size() != mp.size()) {
      throw InvalidContext("far_commutes: letters of different sizes");
    }
    return intersection_size(m, mp) + 2 <= m.size();
  }

  // The k+1 letters a_{M \ {i_1}}, ..., a_{M \ {i_{k+1}}} of a tetrahedron
  // relator, in ascending order of the removed index.
  inline std::vector<GeneratorIndex> tetrahedron_factors(GeneratorIndex const& big) {
    std::vector<GeneratorIndex> out;
    auto const&                 idx = big.indices();
    for (std::size_t l = 0; l < idx.size(); ++l) {
      std::vector<int> m;
      for (std::size_t r = 0; r < idx.size(); ++r) {
        if (r != l) {
          m.push_back(idx[r]);
        }
      }
      out.emplace_back(std::move(m));
    }
    return out;
  }

  /// Defining relators of G_n^k: squares a_m a_m, commutators of far pairs,
  /// and (a_{m_1} ... a_{m_{k+1}})^2 for every (k+1)-subset.
  inline std::vector<GnkWord> relators(int n, int k) {
    validate_context(n, k);
    std::vector<GnkWord> out;
    auto const           gens = generators(n, k);
    for (auto const& m : gens) {
      out.emplace_back(n, k, std::vector<GeneratorIndex>{m, m});
    }
    for (std::size_t a = 0; a < gens.size(); ++a) {
      for (std::size_t b = a + 1; b < gens.size(); ++b) {
        if (far_commutes(gens[a], gens[b])) {
          out.emplace_back(
              n, k, std::vector<GeneratorIndex>{gens[a], gens[b], gens[a], gens[b]});
        }
      }
    }
    if (k + 1 <= n) {
      for (auto const& big : generators(n, k + 1)) {
        auto f = tetrahedron_factors(big);
        auto w = f;
        w.insert(w.end(), f.begin(), f.end());
        out.emplace_back(n, k, std::move(w));
      }
    }
    return out;
  }

  inline void validate_pair(int i, int j, int n) {
    if (i < 1 || j < 1 || i > n || j > n || i == j) {
      throw InvalidPair("invalid strand pair (" + std::to_string(i) + ","
                        + std::to_string(j) + ") for n=" + std::to_string(n));
    }
  }

  /// Product of a_m over all k-subsets m containing {i, j}, in lexicographic
  /// order. Its square is the full twist of strand i around strand j.
  inline GnkWord c_full(int i, int j, int n, int k) {
    validate_context(n, k);
    validate_pair(i, j, n);
    if (i > j) {
      throw InvalidPair("c_full expects i < j");
    }
    GnkWord w(n, k);
    for (auto const& m : generators(n, k)) {
      if (m.contains(i) && m.contains(j)) {
        w.letters.push_back(m);
      }
    }
    return w;
  }

}  // namespace gnk

#endif  // GNK_PRESENTATION_HPP_
