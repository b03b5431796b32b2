#ifndef GNK_RATIONAL_HPP_
#define GNK_RATIONAL_HPP_

#include <boost/multiprecision/gmp.hpp>

#include <cctype>
#include <string>
#include <utility>

#include "gnk/errors.hpp"

namespace gnk {

  using Rat = boost::multiprecision::mpq_rational;
  using Int = boost::multiprecision::mpz_int;

  struct Point {
    Rat x;
    Rat y;

    friend bool operator==(Point const&, Point const&) = default;
  };

  inline Point operator+(Point const& a, Point const& b) {
    return {a.x + b.x, a.y + b.y};
  }

  inline Point operator-(Point const& a, Point const& b) {
    return {a.x - b.x, a.y - b.y};
  }

  inline Point operator*(Rat const& s, Point const& p) {
    return {s * p.x, s * p.y};
  }

  inline Rat cross(Point const& a, Point const& b) {
    return a.x * b.y - a.y * b.x;
  }

  inline Rat dot(Point const& a, Point const& b) {
    return a.x * b.x + a.y * b.y;
  }

  inline Rat norm_sq(Point const& a) {
    return dot(a, a);
  }

  inline int sign(Rat const& r) {
    return r.sign();
  }

  // "p/q" in lowest terms, or "p" for integers.
  inline std::string rat_to_string(Rat const& r) {
    return r.str();
  }

  inline Rat rat_from_string(std::string const& s) {
    auto ok_int = [](std::string const& t) {
      std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
      if (i >= t.size()) {
        return false;
      }
      for (; i < t.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) {
          return false;
        }
      }
      return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!ok_int(num) || !ok_int(den) || den[0] == '-' || den[0] == '+') {
      throw ParseError("not a rational number: '" + s + "'");
    }
    if (num[0] == '+') {
      num.erase(0, 1);
    }
    Int d(den);
    if (d == 0) {
      throw ParseError("zero denominator: '" + s + "'");
    }
    return Rat(Int(num), d);
  }

  inline Rat rat_pow(Rat const& base, unsigned e) {
    Rat out = 1;
    for (unsigned i = 0; i < e; ++i) {
      out *= base;
    }
    return out;
  }

}  // namespace gnk

#endif  // GNK_RATIONAL_HPP_
