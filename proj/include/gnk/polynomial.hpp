#ifndef GNK_POLYNOMIAL_HPP_
#define GNK_POLYNOMIAL_HPP_

// Univariate polynomials over Q with Sturm sequences and exact real root
// isolation. Used by the event tracers, where every secant condition is a
// polynomial in time on each piece of a piecewise-linear motion.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "gnk/errors.hpp"
#include "gnk/rational.hpp"

namespace gnk {

  class Poly {
   public:
    Poly() = default;
    Poly(Rat c) : _c{std::move(c)} {  // NOLINT: constants convert implicitly
      trim();
    }
    Poly(std::initializer_list<Rat> coeffs) : _c(coeffs) {
      trim();
    }
    explicit Poly(std::vector<Rat> coeffs) : _c(std::move(coeffs)) {
      trim();
    }

    // The polynomial t.
    static Poly x() {
      return Poly{Rat(0), Rat(1)};
    }

    // Degree of the zero polynomial is -1.
    int degree() const noexcept {
      return static_cast<int>(_c.size()) - 1;
    }

    bool is_zero() const noexcept {
      return _c.empty();
    }

    Rat coeff(std::size_t i) const {
      return i < _c.size() ? _c[i] : Rat(0);
    }

    Rat const& lead() const {
      return _c.back();
    }

    std::vector<Rat> const& coeffs() const noexcept {
      return _c;
    }

    Rat operator()(Rat const& t) const {
      Rat v = 0;
      for (auto it = _c.rbegin(); it != _c.rend(); ++it) {
        v = v * t + *it;
      }
      return v;
    }

    int sign_at(Rat const& t) const {
      return (*this)(t).sign();
    }

    Poly derivative() const {
      std::vector<Rat> d;
      for (std::size_t i = 1; i < _c.size(); ++i) {
        d.push_back(_c[i] * static_cast<long>(i));
      }
      return Poly(std::move(d));
    }

    Poly& operator+=(Poly const& o) {
      if (o._c.size() > _c.size()) {
        _c.resize(o._c.size());
      }
      for (std::size_t i = 0; i < o._c.size(); ++i) {
        _c[i] += o._c[i];
      }
      trim();
      return *this;
    }

    Poly& operator-=(Poly const& o) {
      if (o._c.size() > _c.size()) {
        _c.resize(o._c.size());
      }
      for (std::size_t i = 0; i < o._c.size(); ++i) {
        _c[i] -= o._c[i];
      }
      trim();
      return *this;
    }

    friend Poly operator+(Poly a, Poly const& b) {
      return a += b;
    }

    friend Poly operator-(Poly a, Poly const& b) {
      return a -= b;
    }

    friend Poly operator-(Poly a) {
      for (auto& c : a._c) {
        c = -c;
      }
      return a;
    }

    friend Poly operator*(Poly const& a, Poly const& b) {
      if (a.is_zero() || b.is_zero()) {
        return {};
      }
      std::vector<Rat> c(a._c.size() + b._c.size() - 1);
      for (std::size_t i = 0; i < a._c.size(); ++i) {
        for (std::size_t j = 0; j < b._c.size(); ++j) {
          c[i + j] += a._c[i] * b._c[j];
        }
      }
      return Poly(std::move(c));
    }

    /// Quotient and remainder of a / b.
    friend std::pair<Poly, Poly> divmod(Poly a, Poly const& b) {
      if (b.is_zero()) {
        throw DegenerateInput("polynomial division by zero");
      }
      std::vector<Rat> q(std::max(0, a.degree() - b.degree() + 1));
      while (!a.is_zero() && a.degree() >= b.degree()) {
        int  shift = a.degree() - b.degree();
        Rat  f     = a.lead() / b.lead();
        q[shift]   = f;
        for (int i = 0; i <= b.degree(); ++i) {
          a._c[i + shift] -= f * b._c[i];
        }
        a._c.back() = 0;
        a.trim();
      }
      return {Poly(std::move(q)), a};
    }

    Poly monic() const {
      if (is_zero()) {
        return {};
      }
      Poly p = *this;
      Rat  l = lead();
      for (auto& c : p._c) {
        c /= l;
      }
      return p;
    }

    friend Poly gcd(Poly a, Poly b) {
      while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a      = std::move(b);
        b      = std::move(r);
      }
      return a.monic();
    }

    /// p(a + (b - a) s), so that s in [0, 1] covers [a, b].
    Poly compose_affine(Rat const& a, Rat const& b) const {
      Poly lin{a, b - a};
      Poly out;
      for (auto it = _c.rbegin(); it != _c.rend(); ++it) {
        out = out * lin + Poly(*it);
      }
      return out;
    }

    std::string to_string() const {
      if (is_zero()) {
        return "0";
      }
      std::string s;
      for (std::size_t i = 0; i < _c.size(); ++i) {
        if (_c[i] == 0) {
          continue;
        }
        if (!s.empty()) {
          s += " + ";
        }
        s += "(" + rat_to_string(_c[i]) + ")";
        if (i > 0) {
          s += "t^" + std::to_string(i);
        }
      }
      return s;
    }

    friend bool operator==(Poly const&, Poly const&) = default;

   private:
    void trim() {
      while (!_c.empty() && _c.back() == 0) {
        _c.pop_back();
      }
    }

    std::vector<Rat> _c;  // _c[i] is the coefficient of t^i
  };

  class SturmSequence {
   public:
    explicit SturmSequence(Poly const& p) {
      if (p.is_zero()) {
        throw DegenerateInput("Sturm sequence of the zero polynomial");
      }
      _seq.push_back(p);
      Poly d = p.derivative();
      while (!d.is_zero()) {
        _seq.push_back(d);
        auto r = divmod(_seq[_seq.size() - 2], _seq.back()).second;
        d      = -r;
      }
    }

    int variations(Rat const& t) const {
      int count = 0, last = 0;
      for (auto const& q : _seq) {
        int s = q.sign_at(t);
        if (s == 0) {
          continue;
        }
        if (last != 0 && s != last) {
          ++count;
        }
        last = s;
      }
      return count;
    }

    /// Number of distinct real roots in (a, b].
    int count(Rat const& a, Rat const& b) const {
      return variations(a) - variations(b);
    }

   private:
    std::vector<Poly> _seq;
  };

  // Isolating interval of a real root: lo == hi for a root known exactly,
  // otherwise the root is the only one in the open interval (lo, hi) and the
  // polynomial has opposite nonzero signs at the ends.
  struct RootInterval {
    Rat lo;
    Rat hi;

    bool exact() const {
      return lo == hi;
    }
  };

  /// Shrinks an isolating interval of a simple root by one bisection.
  inline void refine(Poly const& p, RootInterval& r) {
    if (r.exact()) {
      return;
    }
    Rat mid = (r.lo + r.hi) / 2;
    int sm  = p.sign_at(mid);
    if (sm == 0) {
      r.lo = r.hi = mid;
    } else if (sm == p.sign_at(r.lo)) {
      r.lo = mid;
    } else {
      r.hi = mid;
    }
  }

  /// p / gcd(p, p'): same roots, all simple.
  inline Poly squarefree_part(Poly const& p) {
    if (p.degree() <= 0) {
      return p;
    }
    return divmod(p, gcd(p, p.derivative())).first;
  }

  /// Distinct real roots of p in the open interval (a, b), ascending, each
  /// with an isolating interval of the squarefree part of p. p must be
  /// nonzero.
  inline std::vector<RootInterval> isolate_roots(Poly const& p, Rat const& a, Rat const& b) {
    Poly                      q = squarefree_part(p);
    SturmSequence             sturm(q);
    auto                      open_count = [&](Rat const& lo, Rat const& hi) {
      return sturm.count(lo, hi) - (q.sign_at(hi) == 0 ? 1 : 0);
    };
    std::vector<RootInterval> out;
    std::vector<RootInterval> todo{{a, b}};
    while (!todo.empty()) {
      auto iv = todo.back();
      todo.pop_back();
      int c = open_count(iv.lo, iv.hi);
      if (c == 0) {
        continue;
      }
      if (c == 1 && q.sign_at(iv.lo) != 0 && q.sign_at(iv.hi) != 0) {
        out.push_back(iv);
        continue;
      }
      Rat mid = (iv.lo + iv.hi) / 2;
      if (q.sign_at(mid) == 0) {
        out.push_back({mid, mid});
      }
      todo.push_back({iv.lo, mid});
      todo.push_back({mid, iv.hi});
    }
    std::sort(out.begin(), out.end(), [](auto const& x, auto const& y) { return x.lo < y.lo; });
    return out;
  }

  /// True if p and q have a common root in the closed interval [a, b].
  inline bool common_root_in(Poly const& p, Poly const& q, Rat const& a, Rat const& b) {
    Poly g = gcd(p, q);
    if (g.is_zero() || g.degree() == 0) {
      return false;
    }
    if (g.sign_at(a) == 0) {
      return true;
    }
    return SturmSequence(g).count(a, b) > 0;
  }

}  // namespace gnk

#endif  // GNK_POLYNOMIAL_HPP_
