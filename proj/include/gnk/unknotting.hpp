#ifndef GNK_UNKNOTTING_HPP_
#define GNK_UNKNOTTING_HPP_

// Crossing switches and lower bounds on the unknotting number of a braid.
//
// Inserting a full twist c_ij^2 of strands i and j into an even word changes
// its phi-image by a factor f_x f_{x + z_ij}. On the reduced image this is the
// move f_x -> f_{x + z_ij} applied to one letter.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gnk/errors.hpp"
#include "gnk/parity.hpp"
#include "gnk/presentation.hpp"
#include "gnk/pure_braid.hpp"
#include "gnk/words.hpp"

namespace gnk {

  /// z_ij: sum of psi(a_m') over the k-subsets m' containing {i, j} that
  /// share exactly k - 1 elements with the base.
  inline ZVec z_pair(int i, int j, BaseChoice const& base) {
    validate_pair(i, j, base.n());
    if (i > j) {
      std::swap(i, j);
    }
    ZVec out = base.zero();
    for (auto const& mp : generators(base.n(), base.k())) {
      if (mp.contains(i) && mp.contains(j)
          && static_cast<int>(intersection_size(mp, base.m())) == base.k() - 1) {
        out += psi_letter(mp, base);
      }
    }
    return out;
  }

  // Elements of Z with odd multiplicity in a word of H, ascending.
  using PiVector = std::set<ZVec>;

  struct SwitchPair {
    int  i;
    int  j;
    ZVec z;
  };

  class SwitchSystem {
   public:
    explicit SwitchSystem(BaseChoice base) : _base(std::move(base)) {
      int const n = _base.n();
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          _pairs.push_back({i, j, z_pair(i, j, _base)});
        }
      }
      std::vector<ZVec> inside, all;
      for (auto const& p : _pairs) {
        all.push_back(p.z);
        if (_base.m().contains(p.i) && _base.m().contains(p.j)) {
          inside.push_back(p.z);
        }
      }
      _z0   = span(inside);
      _span = span(all);
    }

    BaseChoice const& base() const noexcept {
      return _base;
    }

    // All unordered pairs {i, j}, lexicographic.
    std::vector<SwitchPair> const& pairs() const noexcept {
      return _pairs;
    }

    ZVec const& z(int i, int j) const {
      validate_pair(i, j, _base.n());
      if (i > j) {
        std::swap(i, j);
      }
      for (auto const& p : _pairs) {
        if (p.i == i && p.j == j) {
          return p.z;
        }
      }
      throw InvalidPair("no such pair");
    }

    /// Subgroup generated by z_ij with {i, j} inside the base.
    std::vector<ZVec> const& z0() const noexcept {
      return _z0;
    }

    /// Subgroup generated by all z_ij; switches move a letter within its coset.
    std::vector<ZVec> const& switch_span() const noexcept {
      return _span;
    }

    /// Smallest element of the coset x + Z_0.
    ZVec z0_coset_rep(ZVec const& x) const {
      return coset_rep(x, _z0);
    }

    ZVec span_coset_rep(ZVec const& x) const {
      return coset_rep(x, _span);
    }

   private:
    std::vector<ZVec> span(std::vector<ZVec> const& gens) const {
      std::set<ZVec> s{_base.zero()};
      for (auto const& g : gens) {
        std::set<ZVec> next = s;
        for (auto const& v : s) {
          next.insert(v + g);
        }
        s = std::move(next);
      }
      return {s.begin(), s.end()};
    }

    static ZVec coset_rep(ZVec const& x, std::vector<ZVec> const& sub) {
      ZVec best = x;
      for (auto const& s : sub) {
        best = std::min(best, x + s);
      }
      return best;
    }

    BaseChoice              _base;
    std::vector<SwitchPair> _pairs;
    std::vector<ZVec>       _z0;
    std::vector<ZVec>       _span;
  };

  /// Replaces the letter at 0-based position `pos` of the reduced word by
  /// f_{x + z_ij}, then reduces.
  inline HWord apply_switch(HWord const& w, std::size_t pos, ZVec const& z) {
    auto r = reduce_involutive(w);
    if (pos >= r.size()) {
      throw OutOfRange("switch position " + std::to_string(pos)
                       + " out of range for a word of length "
                       + std::to_string(r.size()));
    }
    r[pos] += z;
    return reduce_involutive(r);
  }

  inline HWord apply_switch(HWord const& w, std::size_t pos, int i, int j,
                            SwitchSystem const& sys) {
    return apply_switch(w, pos, sys.z(i, j));
  }

  inline PiVector pi_project(HWord const& w) {
    PiVector out;
    for (auto const& x : w) {
      if (!out.insert(x).second) {
        out.erase(x);
      }
    }
    return out;
  }

  /// Necessary condition for a word to be switchable to 1: even length, and an
  /// even number of letters in every coset of the span of all z_ij.
  inline bool switch_feasibility_necessary(HWord const& w, SwitchSystem const& sys) {
    auto r = reduce_involutive(w);
    if (r.size() % 2 != 0) {
      return false;
    }
    std::set<ZVec> odd;
    for (auto const& x : r) {
      auto c = sys.span_coset_rep(x);
      if (!odd.insert(c).second) {
        odd.erase(c);
      }
    }
    return odd.empty();
  }

  /// c_z(xi) = #{z0 in Z_0 : xi_{z + z0} != 0}.
  inline std::size_t c_z_count(PiVector const& xi, ZVec const& z, SwitchSystem const& sys) {
    std::size_t c = 0;
    for (auto const& z0 : sys.z0()) {
      c += xi.count(z + z0);
    }
    return c;
  }

  inline std::size_t c_max(PiVector const& xi, SwitchSystem const& sys) {
    std::set<ZVec> reps;
    for (auto const& x : xi) {
      reps.insert(sys.z0_coset_rep(x));
    }
    std::size_t best = 0;
    for (auto const& r : reps) {
      best = std::max(best, c_z_count(xi, r, sys));
    }
    return best;
  }

  /// ceil(c(pi(phi(w))) / 2).
  inline std::size_t rough_unknotting_bound(GnkWord const& w, BaseChoice const& base) {
    SwitchSystem sys(base);
    auto         xi = pi_project(phi(w, base));
    return (c_max(xi, sys) + 1) / 2;
  }

  struct SwitchStep {
    std::size_t pos;  // 0-based, in the reduced word before the step
    int         i;
    int         j;
  };

  struct SwitchResult {
    std::optional<std::size_t> count;  // empty when the budget is exceeded
    std::vector<SwitchStep>    witness;
    std::size_t                explored = 0;

    bool exceeded() const noexcept {
      return !count.has_value();
    }
  };

  /// Exact minimal number of switches taking w to the empty word, by
  /// breadth-first search over reduced words. Each switch changes pi at two
  /// points at most, so states with d + ceil(|supp pi| / 2) > budget are cut.
  inline SwitchResult min_switches(HWord const& w, SwitchSystem const& sys,
                                   std::size_t budget = 6) {
    SwitchResult res;
    auto         start = reduce_involutive(w);
    if (start.empty()) {
      res.count = 0;
      return res;
    }
    if (!switch_feasibility_necessary(start, sys)) {
      return res;
    }
    auto h = [](HWord const& s) { return (pi_project(s).size() + 1) / 2; };

    struct Node {
      HWord       word;
      std::size_t parent;
      SwitchStep  step;
    };
    std::vector<Node> nodes{{start, 0, {0, 0, 0}}};
    std::set<HWord>   seen{start};
    std::vector<std::size_t> layer{0};

    std::vector<SwitchPair> moves;
    for (auto const& p : sys.pairs()) {
      if (!p.z.is_zero()) {
        moves.push_back(p);
      }
    }

    for (std::size_t depth = 1; depth <= budget && !layer.empty(); ++depth) {
      std::vector<std::size_t> next;
      for (std::size_t id : layer) {
        for (std::size_t pos = 0; pos < nodes[id].word.size(); ++pos) {
          for (auto const& mv : moves) {
            HWord s = nodes[id].word;
            s[pos] += mv.z;
            s = reduce_involutive(s);
            if (depth + h(s) > budget || !seen.insert(s).second) {
              continue;
            }
            ++res.explored;
            nodes.push_back({s, id, {pos, mv.i, mv.j}});
            if (s.empty()) {
              res.count = depth;
              for (std::size_t x = nodes.size() - 1; x != 0; x = nodes[x].parent) {
                res.witness.push_back(nodes[x].step);
              }
              std::reverse(res.witness.begin(), res.witness.end());
              return res;
            }
            next.push_back(nodes.size() - 1);
          }
        }
      }
      layer = std::move(next);
    }
    return res;
  }

  ////////////////////////////////////////////////////////////////////////
  // Report over all k in {3, 4} and all bases
  ////////////////////////////////////////////////////////////////////////

  struct BaseReport {
    int                        k;
    GeneratorIndex             m;
    HWord                      phi_image;
    PiVector                   pi_support;
    std::size_t                rough = 0;
    std::optional<std::size_t> min_switches;  // empty: budget exceeded
    std::vector<SwitchStep>    witness;
  };

  struct UnknottingReport {
    std::vector<BaseReport> entries;
    std::size_t             best_bound = 0;
    int                     best_k     = 0;
    GeneratorIndex          best_m;
    std::size_t             budget = 6;
  };

  /// Lower bounds for one even word of G_n^k over every base.
  inline std::vector<BaseReport> base_reports(GnkWord const& image, std::size_t budget) {
    std::vector<BaseReport> out;
    for (auto const& base : all_bases(image.n, image.k)) {
      BaseReport r;
      r.k          = image.k;
      r.m          = base.m();
      r.phi_image  = phi(image, base);
      r.pi_support = pi_project(r.phi_image);
      SwitchSystem sys(base);
      r.rough = (c_max(r.pi_support, sys) + 1) / 2;
      auto ms = min_switches(r.phi_image, sys, budget);
      r.min_switches = ms.count;
      r.witness      = ms.witness;
      out.push_back(std::move(r));
    }
    return out;
  }

  inline void fold_best(UnknottingReport& rep) {
    for (auto const& e : rep.entries) {
      std::size_t v = std::max(e.rough, e.min_switches.value_or(0));
      if (v > rep.best_bound || rep.best_k == 0) {
        rep.best_bound = v;
        rep.best_k     = e.k;
        rep.best_m     = e.m;
      }
    }
  }

  inline UnknottingReport unknotting_report(PBWord const& w, std::size_t budget = 6) {
    UnknottingReport rep;
    rep.budget = budget;
    for (int k : {3, 4}) {
      if (w.n < k) {
        continue;
      }
      auto part = base_reports(map_pb_to_gk(w, k), budget);
      rep.entries.insert(rep.entries.end(), part.begin(), part.end());
    }
    fold_best(rep);
    return rep;
  }

  inline UnknottingReport unknotting_report(GnkWord const& w, std::size_t budget = 6) {
    UnknottingReport rep;
    rep.budget  = budget;
    rep.entries = base_reports(w, budget);
    fold_best(rep);
    return rep;
  }

}  // namespace gnk

#endif  // GNK_UNKNOTTING_HPP_
