#ifndef GNK_CERTIFICATE_HPP_
#define GNK_CERTIFICATE_HPP_

// JSON certificates of the lower bounds computed for one braid or one even
// word of G_n^k, and their persistence keyed by a hash of the input.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gnk/errors.hpp"
#include "gnk/parity.hpp"
#include "gnk/pure_braid.hpp"
#include "gnk/unknotting.hpp"

namespace gnk {

  inline constexpr char const* tool_version = "gnk 1.0.0";

  struct CertificateEntry {
    int                        k = 3;
    std::string                base_m;
    std::string                image;      // reduced word in G_n^k
    std::string                phi_image;  // reduced word in H
    std::vector<std::string>   pi_support;
    std::size_t                rough_bound = 0;
    std::optional<std::size_t> min_switches;  // empty: budget exceeded
    std::vector<SwitchStep>    witness;

    friend bool operator==(CertificateEntry const& a, CertificateEntry const& b) {
      auto same_steps = [](auto const& x, auto const& y) {
        return x.size() == y.size()
               && std::equal(x.begin(), x.end(), y.begin(), [](auto const& s, auto const& t) {
                    return s.pos == t.pos && s.i == t.i && s.j == t.j;
                  });
      };
      return a.k == b.k && a.base_m == b.base_m && a.image == b.image
             && a.phi_image == b.phi_image && a.pi_support == b.pi_support
             && a.rough_bound == b.rough_bound && a.min_switches == b.min_switches
             && same_steps(a.witness, b.witness);
    }
  };

  struct Certificate {
    std::string                input_word;
    std::string                input_kind;  // "pb" or "gnk"
    int                        n = 0;
    // Context of the entry realizing best_bound.
    int                        k = 3;
    std::string                base_m;
    std::string                phi_image;
    std::vector<std::string>   pi_support;
    std::size_t                rough_bound = 0;
    std::optional<std::size_t> min_switches;
    std::size_t                best_bound = 0;
    std::optional<std::size_t> trisecant_bound;
    std::optional<std::size_t> quadrisecant_bound;
    std::vector<CertificateEntry> entries;
    std::size_t                budget = 6;
    std::string                version = tool_version;
    std::optional<double>      timing_ms;

    friend bool operator==(Certificate const&, Certificate const&) = default;
  };

  namespace detail {

    inline CertificateEntry make_entry(BaseReport const& r, GnkWord const& image) {
      CertificateEntry e;
      e.k         = r.k;
      e.base_m    = r.m.to_string(image.n <= 9);
      e.image     = image.to_string();
      e.phi_image = hword_to_string(r.phi_image);
      for (auto const& z : r.pi_support) {
        e.pi_support.push_back(z.to_string());
      }
      e.rough_bound  = r.rough;
      e.min_switches = r.min_switches;
      e.witness      = r.witness;
      return e;
    }

    inline void fill_best(Certificate& c, UnknottingReport const& rep) {
      c.best_bound = rep.best_bound;
      for (auto const& e : c.entries) {
        if (e.k == rep.best_k && e.base_m == rep.best_m.to_string(c.n <= 9)) {
          c.k            = e.k;
          c.base_m       = e.base_m;
          c.phi_image    = e.phi_image;
          c.pi_support   = e.pi_support;
          c.rough_bound  = e.rough_bound;
          c.min_switches = e.min_switches;
          return;
        }
      }
    }

    // Largest reduced phi-length over the entries with the given k.
    inline std::size_t secant_from_entries(UnknottingReport const& rep, int k) {
      std::size_t best = 0;
      for (auto const& e : rep.entries) {
        if (e.k == k) {
          best = std::max(best, e.phi_image.size());
        }
      }
      return best;
    }

  }  // namespace detail

  inline Certificate make_certificate(PBWord const& w, std::size_t budget = 6) {
    auto        rep = unknotting_report(w, budget);
    Certificate c;
    c.input_word = w.to_string();
    c.input_kind = "pb";
    c.n          = w.n;
    c.budget     = budget;
    for (auto const& r : rep.entries) {
      c.entries.push_back(detail::make_entry(r, map_pb_to_gk(w, r.k)));
    }
    detail::fill_best(c, rep);
    c.trisecant_bound    = detail::secant_from_entries(rep, 3);
    c.quadrisecant_bound = detail::secant_from_entries(rep, 4);
    return c;
  }

  /// The word must be even.
  inline Certificate make_certificate(GnkWord const& w, std::size_t budget = 6) {
    if (!is_even(w)) {
      throw NotInEvenSubgroup("certificate input " + w.to_string() + " is not even");
    }
    auto        rep = unknotting_report(w, budget);
    Certificate c;
    c.input_word = w.to_string();
    c.input_kind = "gnk";
    c.n          = w.n;
    c.budget     = budget;
    auto image   = w.reduced();
    for (auto const& r : rep.entries) {
      c.entries.push_back(detail::make_entry(r, image));
    }
    detail::fill_best(c, rep);
    if (w.k == 3) {
      c.trisecant_bound = detail::secant_from_entries(rep, 3);
    } else if (w.k == 4) {
      c.quadrisecant_bound = detail::secant_from_entries(rep, 4);
    }
    return c;
  }

  ////////////////////////////////////////////////////////////////////////
  // JSON
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    template <typename T>
    nlohmann::ordered_json opt_json(std::optional<T> const& v) {
      return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
    }

    template <typename T>
    std::optional<T> opt_from(nlohmann::json const& j, char const* key) {
      if (!j.contains(key) || j.at(key).is_null()) {
        return std::nullopt;
      }
      return j.at(key).get<T>();
    }

    inline nlohmann::ordered_json switches_json(std::optional<std::size_t> const& v) {
      return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json("budget_exceeded");
    }

    inline std::optional<std::size_t> switches_from(nlohmann::json const& j) {
      if (j.is_string()) {
        if (j.get<std::string>() != "budget_exceeded") {
          throw ParseError("min_switches must be a count or \"budget_exceeded\"");
        }
        return std::nullopt;
      }
      return j.get<std::size_t>();
    }

  }  // namespace detail

  inline nlohmann::ordered_json to_json(CertificateEntry const& e) {
    nlohmann::ordered_json j;
    j["k"]            = e.k;
    j["base_m"]       = e.base_m;
    j["image"]        = e.image;
    j["phi_image"]    = e.phi_image;
    j["pi_support"]   = e.pi_support;
    j["rough_bound"]  = e.rough_bound;
    j["min_switches"] = detail::switches_json(e.min_switches);
    auto& w           = j["witness"] = nlohmann::ordered_json::array();
    for (auto const& s : e.witness) {
      w.push_back({{"pos", s.pos}, {"i", s.i}, {"j", s.j}});
    }
    return j;
  }

  inline nlohmann::ordered_json to_json(Certificate const& c) {
    nlohmann::ordered_json j;
    j["input_word"]         = c.input_word;
    j["input_kind"]         = c.input_kind;
    j["n"]                  = c.n;
    j["k"]                  = c.k;
    j["base_m"]             = c.base_m;
    j["phi_image"]          = c.phi_image;
    j["pi_support"]         = c.pi_support;
    j["rough_bound"]        = c.rough_bound;
    j["min_switches"]       = detail::switches_json(c.min_switches);
    j["best_bound"]         = c.best_bound;
    j["trisecant_bound"]    = detail::opt_json(c.trisecant_bound);
    j["quadrisecant_bound"] = detail::opt_json(c.quadrisecant_bound);
    j["budget"]             = c.budget;
    j["tool_version"]       = c.version;
    if (c.timing_ms) {
      j["timing_ms"] = *c.timing_ms;
    }
    auto& es = j["entries"] = nlohmann::ordered_json::array();
    for (auto const& e : c.entries) {
      es.push_back(to_json(e));
    }
    return j;
  }

  inline CertificateEntry entry_from_json(nlohmann::json const& j) {
    CertificateEntry e;
    e.k            = j.at("k").get<int>();
    e.base_m       = j.at("base_m").get<std::string>();
    e.image        = j.at("image").get<std::string>();
    e.phi_image    = j.at("phi_image").get<std::string>();
    e.pi_support   = j.at("pi_support").get<std::vector<std::string>>();
    e.rough_bound  = j.at("rough_bound").get<std::size_t>();
    e.min_switches = detail::switches_from(j.at("min_switches"));
    for (auto const& s : j.at("witness")) {
      e.witness.push_back({s.at("pos").get<std::size_t>(), s.at("i").get<int>(),
                           s.at("j").get<int>()});
    }
    return e;
  }

  inline Certificate certificate_from_json(nlohmann::json const& j) {
    try {
      Certificate c;
      c.input_word         = j.at("input_word").get<std::string>();
      c.input_kind         = j.at("input_kind").get<std::string>();
      c.n                  = j.at("n").get<int>();
      c.k                  = j.at("k").get<int>();
      c.base_m             = j.at("base_m").get<std::string>();
      c.phi_image          = j.at("phi_image").get<std::string>();
      c.pi_support         = j.at("pi_support").get<std::vector<std::string>>();
      c.rough_bound        = j.at("rough_bound").get<std::size_t>();
      c.min_switches       = detail::switches_from(j.at("min_switches"));
      c.best_bound         = j.at("best_bound").get<std::size_t>();
      c.trisecant_bound    = detail::opt_from<std::size_t>(j, "trisecant_bound");
      c.quadrisecant_bound = detail::opt_from<std::size_t>(j, "quadrisecant_bound");
      c.budget             = j.at("budget").get<std::size_t>();
      c.version            = j.at("tool_version").get<std::string>();
      c.timing_ms          = detail::opt_from<double>(j, "timing_ms");
      for (auto const& e : j.at("entries")) {
        c.entries.push_back(entry_from_json(e));
      }
      return c;
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(std::string("malformed certificate: ") + e.what());
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Persistence
  ////////////////////////////////////////////////////////////////////////

  /// 64-bit FNV-1a.
  inline std::uint64_t fnv1a(std::string const& s) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    return h;
  }

  inline std::string certificate_key(Certificate const& c) {
    std::string key = c.input_kind + ":" + std::to_string(c.n) + ":" + c.input_word;
    char        buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(key)));
    return buf;
  }

  /// Writes <dir>/<key>.json, replacing any earlier file for the same input.
  inline std::filesystem::path persist_certificate(Certificate const& c,
                                                   std::filesystem::path const& dir) {
    std::filesystem::create_directories(dir);
    auto          path = dir / (certificate_key(c) + ".json");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << to_json(c).dump(2) << '\n';
    if (!out) {
      throw Error("cannot write " + path.string());
    }
    return path;
  }

  inline Certificate load_certificate(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error("cannot read " + path.string());
    }
    try {
      return certificate_from_json(nlohmann::json::parse(in));
    } catch (nlohmann::json::parse_error const& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
  }

}  // namespace gnk

#endif  // GNK_CERTIFICATE_HPP_
