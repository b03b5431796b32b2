#ifndef GNK_PARSE_HPP_
#define GNK_PARSE_HPP_

// Text grammars for every word type. Tokens are separated by whitespace
// unless noted.
//
//   GnkWord   a123  or  a{1,2,3}      (compact digits only when n <= 9)
//   PBWord    b12  B12  b{1,12}  b12^-2  (B is the inverse)
//   EvenWord  a1 a2 a3
//   ToyWord   a^4 b^-2 c  or  abcb  (bare letter means exponent 1)
//   HWord     f[0110]                  (bit 0 first)

#include <cctype>
#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gnk/errors.hpp"
#include "gnk/parity.hpp"
#include "gnk/presentation.hpp"
#include "gnk/pure_braid.hpp"
#include "gnk/words.hpp"

namespace gnk {

  namespace detail {

    class Scanner {
     public:
      explicit Scanner(std::string_view s) : _s(s) {}

      void skip_space() {
        while (_p < _s.size() && std::isspace(static_cast<unsigned char>(_s[_p]))) {
          ++_p;
        }
      }

      bool done() {
        skip_space();
        return _p >= _s.size();
      }

      char peek() const {
        return _p < _s.size() ? _s[_p] : '\0';
      }

      bool accept(char c) {
        if (peek() == c) {
          ++_p;
          return true;
        }
        return false;
      }

      void expect(char c) {
        if (!accept(c)) {
          fail(std::string("expected '") + c + "'");
        }
      }

      char get() {
        if (_p >= _s.size()) {
          fail("unexpected end of input");
        }
        return _s[_p++];
      }

      std::int64_t integer() {
        std::size_t start = _p;
        if (peek() == '-' || peek() == '+') {
          ++_p;
        }
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
          ++_p;
        }
        std::string_view tok = _s.substr(start, _p - start);
        if (!tok.empty() && tok.front() == '+') {
          tok.remove_prefix(1);
        }
        std::int64_t v = 0;
        auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || end != tok.data() + tok.size()) {
          _p = start;
          fail("expected an integer");
        }
        return v;
      }

      int digit() {
        char c = get();
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          --_p;
          fail("expected a digit");
        }
        return c - '0';
      }

      bool at_token_end() const {
        return _p >= _s.size() || std::isspace(static_cast<unsigned char>(_s[_p]));
      }

      [[noreturn]] void fail(std::string const& what) const {
        throw ParseError(what + " at offset " + std::to_string(_p) + " in '" + std::string(_s)
                         + "'");
      }

     private:
      std::string_view _s;
      std::size_t      _p = 0;
    };

    // Either "{i,j,...}" or a run of single digits ending at whitespace or '^'.
    inline std::vector<int> index_list(Scanner& sc) {
      std::vector<int> out;
      if (sc.accept('{')) {
        do {
          sc.skip_space();
          auto v = sc.integer();
          if (v < 1 || v > 62) {
            sc.fail("index out of range");
          }
          out.push_back(static_cast<int>(v));
          sc.skip_space();
        } while (sc.accept(','));
        sc.expect('}');
        return out;
      }
      while (!sc.at_token_end() && sc.peek() != '^') {
        out.push_back(sc.digit());
      }
      if (out.empty()) {
        sc.fail("expected indices");
      }
      return out;
    }

  }  // namespace detail

  /// n and k default to the largest index and the letter size seen.
  inline GnkWord parse_gnk_word(std::string_view text, std::optional<int> n = {},
                                std::optional<int> k = {}) {
    detail::Scanner                     sc(text);
    std::vector<std::vector<int>>       raw;
    while (!sc.done()) {
      if (!sc.accept('a')) {
        sc.fail("expected a generator a...");
      }
      raw.push_back(detail::index_list(sc));
      if (!sc.at_token_end()) {
        sc.fail("trailing characters after generator");
      }
    }
    int max_idx = 0;
    for (auto const& r : raw) {
      for (int x : r) {
        max_idx = std::max(max_idx, x);
      }
    }
    int kk = k.value_or(raw.empty() ? 1 : static_cast<int>(raw.front().size()));
    int nn = n.value_or(std::max(max_idx, kk));
    std::vector<GeneratorIndex> letters;
    for (auto& r : raw) {
      try {
        letters.emplace_back(std::move(r));
      } catch (InvalidLetter const& e) {
        throw ParseError(e.what());
      }
    }
    try {
      return GnkWord(nn, kk, std::move(letters));
    } catch (InvalidLetter const& e) {
      throw ParseError(e.what());
    }
  }

  /// b_ji is read as b_ij. An exponent repeats the letter |e| times.
  inline PBWord parse_pb_word(std::string_view text, std::optional<int> n = {}) {
    detail::Scanner       sc(text);
    std::vector<PBLetter> letters;
    int                   max_idx = 2;
    while (!sc.done()) {
      char c = sc.get();
      if (c != 'b' && c != 'B') {
        sc.fail("expected b or B");
      }
      auto idx = detail::index_list(sc);
      if (idx.size() != 2 || idx[0] == idx[1]) {
        sc.fail("pure braid generator needs two distinct indices");
      }
      std::int64_t e = 1;
      if (sc.accept('^')) {
        e = sc.integer();
      }
      if (!sc.at_token_end()) {
        sc.fail("trailing characters after generator");
      }
      int i = std::min(idx[0], idx[1]), j = std::max(idx[0], idx[1]);
      max_idx   = std::max(max_idx, j);
      int sign  = (c == 'b' ? 1 : -1) * (e < 0 ? -1 : 1);
      for (std::int64_t r = 0; r < (e < 0 ? -e : e); ++r) {
        letters.push_back({i, j, sign});
      }
    }
    try {
      return PBWord(n.value_or(max_idx), std::move(letters));
    } catch (InvalidLetter const& e) {
      throw ParseError(e.what());
    }
  }

  inline EvenWord parse_even_word(std::string_view text) {
    detail::Scanner sc(text);
    EvenWord        out;
    while (!sc.done()) {
      sc.expect('a');
      int d = sc.digit();
      if (d < 1 || d > 3 || !sc.at_token_end()) {
        sc.fail("letters are a1, a2, a3");
      }
      out.push_back(d);
    }
    return out;
  }

  inline ToyWord parse_toy_word(std::string_view text) {
    detail::Scanner sc(text);
    ToyWord         out;
    while (!sc.done()) {
      char g = sc.get();
      if (g != 'a' && g != 'b' && g != 'c') {
        sc.fail("toy generators are a, b, c");
      }
      std::int64_t e = 1;
      if (sc.accept('^')) {
        e = sc.integer();
        if (e == 0) {
          sc.fail("exponent must be nonzero");
        }
      }
      out.push_back({g, e});
    }
    return out;
  }

  inline std::string toy_word_to_string(ToyWord const& w) {
    std::string s;
    for (std::size_t x = 0; x < w.size(); ++x) {
      s += (x ? " " : "") + std::string(1, w[x].gen);
      if (w[x].exp != 1) {
        s += "^" + std::to_string(w[x].exp);
      }
    }
    return s;
  }

  /// All letters must have the same width.
  inline HWord parse_hword(std::string_view text) {
    detail::Scanner sc(text);
    HWord           out;
    while (!sc.done()) {
      sc.expect('f');
      sc.expect('[');
      std::string bits;
      while (sc.peek() != ']') {
        bits += sc.get();
      }
      sc.expect(']');
      auto v = ZVec::from_string(bits);
      if (!out.empty() && v.width() != out.front().width()) {
        sc.fail("letters of different widths");
      }
      out.push_back(v);
    }
    return out;
  }

  /// "a123", "a{1,2,3}" or "123" as a set of strands.
  inline GeneratorIndex parse_generator_index(std::string_view text) {
    detail::Scanner sc(text);
    sc.skip_space();
    sc.accept('a');
    auto idx = detail::index_list(sc);
    if (!sc.done()) {
      sc.fail("trailing characters");
    }
    try {
      return GeneratorIndex(std::move(idx));
    } catch (InvalidLetter const& e) {
      throw ParseError(e.what());
    }
  }

}  // namespace gnk

#endif  // GNK_PARSE_HPP_
