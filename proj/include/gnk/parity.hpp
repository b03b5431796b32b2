#ifndef GNK_PARITY_HPP_
#define GNK_PARITY_HPP_

// The homomorphism from the even subgroup H_n^k of G_n^k into the free
// product H of copies of Z_2 indexed by Z = (Z_2^{k-1})^{n-k}.
//
// Fix a base letter m. For p outside m and 1 <= i <= k, m[i] replaces the
// i-th element of m (ascending order) by p. Then psi_p(a_{m[i]}) = e_i for
// i < k, psi_p(a_{m[k]}) = e_1 + ... + e_{k-1}, and psi_p vanishes on every
// other letter. G_n^k acts on Z x H by
//
//   a_m  . (x, y) = (x, f_x y)
//   a_m' . (x, y) = (x + psi(a_m'), y)      (m' != m)
//
// and phi(g) is the H-component of g . (0, 1).

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gnk/errors.hpp"
#include "gnk/presentation.hpp"
#include "gnk/pure_braid.hpp"
#include "gnk/words.hpp"

namespace gnk {

  // Element of Z. Bit b = rank(p) * (k - 1) + (i - 1) holds the e_i
  // coordinate of the component indexed by the rank-th element p outside m.
  class ZVec {
   public:
    ZVec() = default;
    explicit ZVec(int width, std::uint64_t bits = 0) : _bits(bits), _width(width) {
      if (width < 0 || width > 64) {
        throw InvalidContext("Z has more than 64 coordinates");
      }
      if (width < 64 && (bits >> width) != 0) {
        throw InvalidLetter("ZVec bits exceed its width");
      }
    }

    int width() const noexcept {
      return _width;
    }

    std::uint64_t bits() const noexcept {
      return _bits;
    }

    bool bit(int b) const noexcept {
      return (_bits >> b) & 1U;
    }

    bool is_zero() const noexcept {
      return _bits == 0;
    }

    ZVec& operator+=(ZVec const& other) {
      _bits ^= other._bits;
      return *this;
    }

    friend ZVec operator+(ZVec a, ZVec const& b) {
      a += b;
      return a;
    }

    // Canonical order: bit 0 first, e.g. "10" is e_1 when Z has two bits.
    std::string to_string() const {
      std::string s;
      for (int b = 0; b < _width; ++b) {
        s += bit(b) ? '1' : '0';
      }
      return s;
    }

    static ZVec from_string(std::string const& s) {
      std::uint64_t bits = 0;
      for (std::size_t b = 0; b < s.size(); ++b) {
        if (s[b] == '1') {
          bits |= std::uint64_t(1) << b;
        } else if (s[b] != '0') {
          throw ParseError("bit string may contain only 0 and 1: '" + s + "'");
        }
      }
      return ZVec(static_cast<int>(s.size()), bits);
    }

    friend auto operator<=>(ZVec const&, ZVec const&) = default;
    friend bool operator==(ZVec const&, ZVec const&) = default;

   private:
    std::uint64_t _bits  = 0;
    int           _width = 0;
  };

  // Word in H = Z_2^{*Z}; letter x stands for f_x.
  using HWord = std::vector<ZVec>;

  inline std::string hword_to_string(HWord const& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0) {
        s += ' ';
      }
      s += "f[" + w[i].to_string() + "]";
    }
    return s;
  }

  // The fixed k-subset m used to build psi and phi.
  class BaseChoice {
   public:
    BaseChoice(int n, int k, GeneratorIndex m) : _n(n), _k(k), _m(std::move(m)) {
      validate_context(n, k);
      if (!_m.valid_for(n, k)) {
        throw InvalidLetter("base " + _m.to_string(false) + " is not a "
                            + std::to_string(k) + "-subset of {1.."
                            + std::to_string(n) + "}");
      }
      for (int p = 1; p <= n; ++p) {
        if (!_m.contains(p)) {
          _outside.push_back(p);
        }
      }
      if (width() > 64) {
        throw InvalidContext("Z has more than 64 coordinates");
      }
    }

    int n() const noexcept {
      return _n;
    }

    int k() const noexcept {
      return _k;
    }

    GeneratorIndex const& m() const noexcept {
      return _m;
    }

    // Elements of {1..n} \ m, ascending.
    std::vector<int> const& outside() const noexcept {
      return _outside;
    }

    int width() const noexcept {
      return (_k - 1) * (_n - _k);
    }

    ZVec zero() const {
      return ZVec(width());
    }

    // Number of elements of Z.
    std::uint64_t z_size() const {
      return std::uint64_t(1) << width();
    }

    int rank_of_outside(int p) const {
      auto it = std::lower_bound(_outside.begin(), _outside.end(), p);
      if (it == _outside.end() || *it != p) {
        throw InvalidLetter("index " + std::to_string(p) + " lies in the base");
      }
      return static_cast<int>(it - _outside.begin());
    }

    // e_i (1 <= i <= k-1) in the component of p.
    ZVec basis(int p, int i) const {
      int b = rank_of_outside(p) * (_k - 1) + (i - 1);
      return ZVec(width(), std::uint64_t(1) << b);
    }

    friend bool operator==(BaseChoice const& a, BaseChoice const& b) {
      return a._n == b._n && a._k == b._k && a._m == b._m;
    }

   private:
    int              _n;
    int              _k;
    GeneratorIndex   _m;
    std::vector<int> _outside;
  };

  inline std::vector<BaseChoice> all_bases(int n, int k) {
    std::vector<BaseChoice> out;
    for (auto const& m : generators(n, k)) {
      out.emplace_back(n, k, m);
    }
    return out;
  }

  /// psi(a_letter). Nonzero only when the letter shares k-1 elements with m.
  inline ZVec psi_letter(GeneratorIndex const& letter, BaseChoice const& base) {
    int const k = base.k();
    if (!letter.valid_for(base.n(), k)) {
      throw InvalidLetter("letter " + letter.to_string(false) + " is not valid for the base");
    }
    ZVec out = base.zero();
    if (static_cast<int>(intersection_size(letter, base.m())) != k - 1) {
      return out;
    }
    int p = 0;
    for (int x : letter.indices()) {
      if (!base.m().contains(x)) {
        p = x;
      }
    }
    int removed_pos = 0;
    for (int pos = 0; pos < k; ++pos) {
      if (!letter.contains(base.m()[pos])) {
        removed_pos = pos + 1;
      }
    }
    if (removed_pos <= k - 1) {
      return base.basis(p, removed_pos);
    }
    for (int i = 1; i <= k - 1; ++i) {
      out += base.basis(p, i);
    }
    return out;
  }

  inline ZVec psi_word(GnkWord const& w, BaseChoice const& base) {
    ZVec out = base.zero();
    for (auto const& m : w.letters) {
      out += psi_letter(m, base);
    }
    return out;
  }

  struct ActionState {
    ZVec  x;
    HWord y;

    friend bool operator==(ActionState const&, ActionState const&) = default;
  };

  /// One generator acting on (x, y); f_x is prepended to y and reduced.
  inline ActionState act_letter(GeneratorIndex const&  letter,
                                ActionState            s,
                                BaseChoice const&      base) {
    if (letter == base.m()) {
      if (!s.y.empty() && s.y.front() == s.x) {
        s.y.erase(s.y.begin());
      } else {
        s.y.insert(s.y.begin(), s.x);
      }
    } else {
      s.x += psi_letter(letter, base);
    }
    return s;
  }

  /// w . (x0, 1), applying the rightmost letter first.
  inline ActionState phi_at(GnkWord const& w, BaseChoice const& base, ZVec const& x0) {
    if (w.n != base.n() || w.k != base.k()) {
      throw InvalidContext("word and base belong to different G_n^k");
    }
    // y is accumulated back to front so that prepending is a push.
    ZVec  x = x0;
    HWord rev;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
      if (*it == base.m()) {
        push_reduced(rev, x);
      } else {
        x += psi_letter(*it, base);
      }
    }
    std::reverse(rev.begin(), rev.end());
    return {x, std::move(rev)};
  }

  inline bool is_even(GnkWord const& w) {
    std::map<GeneratorIndex, int> parity;
    for (auto const& m : w.letters) {
      parity[m] ^= 1;
    }
    return std::all_of(parity.begin(), parity.end(), [](auto const& kv) {
      return kv.second == 0;
    });
  }

  /// phi: H_n^k -> H for the base m.
  inline HWord phi(GnkWord const& w, BaseChoice const& base) {
    if (!is_even(w)) {
      throw NotInEvenSubgroup("phi is defined on even words only: " + w.to_string());
    }
    return phi_at(w, base, base.zero()).y;
  }

  ////////////////////////////////////////////////////////////////////////
  // Secant lower bounds
  ////////////////////////////////////////////////////////////////////////

  struct BaseBound {
    GeneratorIndex m;
    std::size_t    value = 0;
  };

  struct SecantBound {
    int                    k     = 3;
    std::size_t            value = 0;  // maximum over bases
    std::vector<BaseBound> per_base;
  };

  /// complexity(phi(image of w in G_n^k)) for every base m, and its maximum.
  /// With fewer than k strands there are no k-secants and the bound is 0.
  inline SecantBound secant_bounds(PBWord const& w, int k) {
    SecantBound out;
    out.k = k;
    if (w.n < k) {
      return out;
    }
    auto image = map_pb_to_gk(w, k);
    for (auto const& base : all_bases(w.n, k)) {
      std::size_t v = phi(image, base).size();
      out.per_base.push_back({base.m(), v});
      out.value = std::max(out.value, v);
    }
    return out;
  }

  /// Lower bound on the number of horizontal trisecants of the braid.
  inline std::size_t trisecant_lower_bound(PBWord const& w) {
    return secant_bounds(w, 3).value;
  }

  /// Lower bound on the number of circled quadrisecants of the braid.
  inline std::size_t quadrisecant_lower_bound(PBWord const& w) {
    return secant_bounds(w, 4).value;
  }

}  // namespace gnk

#endif  // GNK_PARITY_HPP_
