// gnk: command-line front end.
//
// Exit codes: 0 success, 1 suite failure, 2 parse error, 3 precondition
// violation.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gnk/gnk.hpp"

namespace {

  using namespace gnk;

  constexpr int exit_ok           = 0;
  constexpr int exit_suite_failed = 1;
  constexpr int exit_parse        = 2;
  constexpr int exit_precondition = 3;

  struct Globals {
    std::optional<int> n;
    std::optional<int> k;
    std::string        base;
    std::size_t        budget  = 6;
    std::string        out_dir = "certificates";
    std::uint64_t      seed    = 1;
  };

  std::string yes_no(bool b) {
    return b ? "true" : "false";
  }

  std::vector<BaseChoice> chosen_bases(Globals const& g, int n, int k) {
    if (g.base.empty()) {
      return all_bases(n, k);
    }
    return {BaseChoice(n, k, parse_generator_index(g.base))};
  }

  ////////////////////////////////////////////////////////////////////////

  int cmd_reduce(std::string const& text, std::string const& alphabet, Globals const& g) {
    if (alphabet == "toy") {
      auto w  = parse_toy_word(text);
      auto nf = toy_normal_form(w);
      auto m2 = toy_mod2_image(w);
      std::string m2s;
      for (char c : m2) {
        m2s += (m2s.empty() ? "" : " ") + std::string(1, c);
      }
      bool feasible = toy_switch_feasible(w);
      std::cout << "normal_form: " << toy_word_to_string(nf) << '\n'
                << "syllables: " << nf.size() << '\n'
                << "mod2_image: " << m2s << '\n'
                << "complexity: " << m2.size() << '\n'
                << "feasible: " << yes_no(feasible) << '\n'
                << "lower_bound: "
                << (feasible ? std::to_string(toy_switch_lower_bound(w)) : "infinity") << '\n';
      return exit_ok;
    }
    if (alphabet == "even") {
      auto w = parse_even_word(text);
      auto r = reduce_involutive(w);
      std::cout << "reduced: " << even_word_to_string(r) << '\n'
                << "complexity: " << r.size() << '\n'
                << "cyclic: " << even_word_to_string(cyclic_reduce(w)) << '\n';
      if (r.size() % 2 == 0) {
        std::cout << "pb3: " << even_to_pb3(r).to_string() << '\n';
      }
      return exit_ok;
    }
    if (alphabet == "h") {
      auto w = parse_hword(text);
      auto r = reduce_involutive(w);
      std::cout << "reduced: " << hword_to_string(r) << '\n'
                << "complexity: " << r.size() << '\n'
                << "cyclic: " << hword_to_string(cyclic_reduce(w)) << '\n';
      std::string pis;
      for (auto const& z : pi_project(r)) {
        pis += (pis.empty() ? "" : " ") + z.to_string();
      }
      std::cout << "pi_support: " << pis << '\n';
      return exit_ok;
    }
    auto w = parse_gnk_word(text, g.n, g.k);
    auto r = w.reduced();
    GnkWord cyc(w.n, w.k, cyclic_reduce(w.letters));
    std::cout << "reduced: " << r.to_string() << '\n'
              << "complexity: " << r.size() << '\n'
              << "cyclic: " << cyc.to_string() << '\n'
              << "even: " << yes_no(is_even(w)) << '\n';
    return exit_ok;
  }

  int cmd_map(std::string const& text, Globals const& g) {
    auto w   = parse_pb_word(text, g.n);
    int  k   = g.k.value_or(3);
    auto img = pb_image(w, k);
    auto red = img.reduced();
    std::cout << "image: " << red.to_string() << '\n'
              << "length: " << red.size() << '\n'
              << "unreduced_length: " << img.size() << '\n'
              << "even: " << yes_no(is_even(img)) << '\n';
    return exit_ok;
  }

  int cmd_phi(std::string const& text, bool gnk_input, Globals const& g) {
    GnkWord w = gnk_input ? parse_gnk_word(text, g.n, g.k)
                          : map_pb_to_gk(parse_pb_word(text, g.n), g.k.value_or(3));
    if (!is_even(w)) {
      throw NotInEvenSubgroup("word " + w.to_string() + " is not even");
    }
    for (auto const& base : chosen_bases(g, w.n, w.k)) {
      auto h = phi(w, base);
      std::cout << base.m().to_string(w.n <= 9) << ": " << hword_to_string(h)
                << " (complexity " << h.size() << ")\n";
    }
    return exit_ok;
  }

  int cmd_bounds(std::string const& text, bool gnk_input, bool timing, Globals const& g) {
    auto const  t0 = std::chrono::steady_clock::now();
    Certificate c  = gnk_input ? make_certificate(parse_gnk_word(text, g.n, g.k), g.budget)
                               : make_certificate(parse_pb_word(text, g.n), g.budget);
    if (timing) {
      c.timing_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
    std::cout << to_json(c).dump(2) << '\n';
    if (!g.out_dir.empty()) {
      auto path = persist_certificate(c, g.out_dir);
      std::cerr << "certificate: " << path.string() << '\n';
    }
    return exit_ok;
  }

  int cmd_verify(std::string const& suite, std::size_t samples, Globals const& g) {
    SuiteReport rep;
    if (suite == "relators") {
      rep = relator_suite(g.n.value_or(4), g.k.value_or(3));
    } else if (suite == "appendix") {
      rep = geometry_suite(g.seed, samples, g.n.value_or(5));
    } else {
      rep = tracer_suite(g.n.value_or(4));
    }
    std::cout << rep.to_json().dump(2) << '\n';
    return rep.ok() ? exit_ok : exit_suite_failed;
  }

  struct SimulateArgs {
    std::string model = "circle";
    int         i     = 1;
    int         j     = 2;
    std::string input;
    std::string kind = "trisecant";
    std::string trajectory_out;
    bool        with_trajectory = false;
  };

  int cmd_simulate(SimulateArgs const& a, Globals const& g) {
    Trajectory tr;
    SecantKind kind;
    if (!a.input.empty()) {
      std::ifstream in(a.input);
      if (!in) {
        throw InvalidContext("cannot read " + a.input);
      }
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(in);
      } catch (nlohmann::json::parse_error const& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
      }
      tr   = trajectory_from_json(j);
      kind = a.kind == "concyclic" ? SecantKind::concyclic : SecantKind::trisecant;
    } else {
      int n = g.n.value_or(4);
      if (a.model == "parabola") {
        tr   = simulate_bij_parabola(a.i, a.j, n);
        kind = SecantKind::concyclic;
      } else {
        tr   = simulate_bij_circle(a.i, a.j, n);
        kind = SecantKind::trisecant;
      }
    }
    if (tr.n < (kind == SecantKind::trisecant ? 3 : 4)) {
      throw InvalidContext("too few points for " + kind_name(kind) + " events");
    }
    auto events = trace_events(tr, kind);
    auto word   = events_to_word(tr.n, kind == SecantKind::trisecant ? 3 : 4, events);

    nlohmann::ordered_json out;
    if (a.input.empty()) {
      out["model"] = a.model;
      out["i"]     = a.i;
      out["j"]     = a.j;
    } else {
      out["input"] = a.input;
    }
    out["n"]       = tr.n;
    out["kind"]    = kind_name(kind);
    out["closed"]  = tr.closed();
    out["word"]    = word.to_string();
    out["reduced"] = word.reduced().to_string();
    out["even"]    = is_even(word);
    out["events"]  = to_json(events);
    if (a.with_trajectory) {
      out["trajectory"] = to_json(tr);
    }
    std::cout << out.dump(2) << '\n';
    if (!a.trajectory_out.empty()) {
      std::ofstream f(a.trajectory_out, std::ios::binary | std::ios::trunc);
      f << to_json(tr).dump(2) << '\n';
      if (!f) {
        throw InvalidContext("cannot write " + a.trajectory_out);
      }
    }
    return exit_ok;
  }

  ////////////////////////////////////////////////////////////////////////
  // geometry
  ////////////////////////////////////////////////////////////////////////

  std::vector<Rat> rats(std::vector<std::string> const& xs, std::size_t count) {
    if (xs.size() != count) {
      throw ParseError("expected " + std::to_string(count) + " rational arguments");
    }
    std::vector<Rat> out;
    for (auto const& s : xs) {
      out.push_back(rat_from_string(s));
    }
    return out;
  }

  std::string order_string(std::vector<std::pair<int, int>> const& o) {
    std::string s;
    for (auto const& [l, m] : o) {
      s += (s.empty() ? "" : " ") + ("(" + std::to_string(l) + "," + std::to_string(m) + ")");
    }
    return s;
  }

  nlohmann::ordered_json config_json(ParabolaConfig const& cfg) {
    auto j = nlohmann::ordered_json::array();
    for (auto const& t : cfg.t) {
      j.push_back(rat_to_string(t));
    }
    return j;
  }

  int cmd_geometry(std::string const& op, std::vector<std::string> const& args, int point,
                   int which, Globals const& g) {
    nlohmann::ordered_json out;
    out["op"] = op;
    if (op == "delta") {
      auto x          = rats(args, 4);
      out["delta"]    = rat_to_string(delta_det(x[0], x[1], x[2], x[3]));
      out["product"]  = rat_to_string(delta_product(x[0], x[1], x[2], x[3]));
      out["concyclic"] = concyclic_on_parabola(x[0], x[1], x[2], x[3]);
    } else if (op == "fourth") {
      auto t        = rats(args, 3);
      Rat  f        = fourth_intersection(t[0], t[1], t[2]);
      auto c        = circle_through(on_parabola(t[0]), on_parabola(t[1]), on_parabola(t[2]));
      out["fourth"] = rat_to_string(f);
      out["on_circle"] = circle_equation(c, on_parabola(f)) == 0;
    } else if (op == "circle") {
      auto p          = rats(args, 6);
      auto c          = circle_through({p[0], p[1]}, {p[2], p[3]}, {p[4], p[5]});
      out["center"]   = {rat_to_string(c.center.x), rat_to_string(c.center.y)};
      out["radius_sq"] = rat_to_string(c.radius_sq);
    } else if (op == "slope") {
      auto t       = rats(args, 3);
      out["kappa"] = rat_to_string(slope_kappa(t[0], t[1], t[2]));
    } else if (op == "growth") {
      int  n              = g.n.value_or(4);
      auto c1             = growth_sequence_case1(n);
      auto up             = growth_sequence(n);
      out["n"]            = n;
      out["case1"]        = config_json(c1);
      out["case1_ok"]     = check_growth_case1(c1);
      out["case1_case23_ok"] = n >= 3 ? check_growth_case23(c1) : true;
      out["upgraded"]     = config_json(up);
      out["upgraded_ok"]  = check_growth_case1(up) && (n < 3 || check_growth_case23(up));
    } else if (op == "order") {
      int  n      = g.n.value_or(4);
      auto cfg    = which == 1 ? growth_sequence_case1(n) : growth_sequence(n);
      auto got    = crossing_order(cfg, point, which);
      auto closed = which == 1   ? case1_closed_form(point)
                    : which == 2 ? case2_closed_form(point, n)
                                 : case3_closed_form(point, n);
      out["n"]           = n;
      out["point"]       = point;
      out["case"]        = which;
      out["order"]       = order_string(got);
      out["closed_form"] = order_string(closed);
      out["match"]       = got == closed;
    }
    std::cout << out.dump(2) << '\n';
    return exit_ok;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lower bounds for pure braids from k-free braid groups"};
  app.set_version_flag("--version", std::string(tool_version));
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--n", g.n, "Number of strands");
  app.add_option("--k", g.k, "Subset size k of G_n^k (3 or 4 for braids)");
  app.add_option("--base", g.base, "Base k-subset m, e.g. a123 (default: all)");
  app.add_option("--budget", g.budget, "Search budget for exact switch counts")
      ->capture_default_str();
  app.add_option("--out-dir", g.out_dir, "Directory for certificates (empty: do not persist)")
      ->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for randomized suites")->capture_default_str();

  std::string word;

  auto* reduce = app.add_subcommand("reduce", "Reduce a word and print its complexity");
  bool  a_gnk = false, a_toy = false, a_even = false, a_h = false;
  reduce->add_option("word", word, "Word text")->required();
  auto* f_gnk  = reduce->add_flag("--gnk", a_gnk, "Word in G_n^k (default)");
  auto* f_toy  = reduce->add_flag("--toy", a_toy, "Word in Z * Z * Z, e.g. a^4 b^-2");
  auto* f_even = reduce->add_flag("--even", a_even, "Word over a1 a2 a3");
  auto* f_h    = reduce->add_flag("--hword", a_h, "Word over f[bits]");
  f_gnk->excludes(f_toy, f_even, f_h);
  f_toy->excludes(f_even, f_h);
  f_even->excludes(f_h);

  auto* map = app.add_subcommand("map", "Image of a pure braid word in G_n^k");
  map->add_option("word", word, "Pure braid word, e.g. b13 B23")->required();

  auto* phic = app.add_subcommand("phi", "Parity image of an even word for each base");
  bool  phi_gnk = false;
  phic->add_option("word", word, "Pure braid word, or a G_n^k word with --gnk")->required();
  phic->add_flag("--gnk", phi_gnk, "Input is a word in G_n^k");

  auto* bounds = app.add_subcommand("bounds", "Certificate of lower bounds");
  bool  bounds_gnk = false, timing = false;
  bounds->add_option("word", word, "Pure braid word, or an even G_n^k word with --gnk")
      ->required();
  bounds->add_flag("--gnk", bounds_gnk, "Input is a word in G_n^k");
  bounds->add_flag("--timing", timing, "Record the computation time");

  auto*       verify = app.add_subcommand("verify", "Run an invariant suite");
  std::string suite;
  std::size_t samples = 1000;
  verify->add_option("--suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"relators", "appendix", "tracer"}));
  verify->add_option("--samples", samples, "Random samples for the geometry suite")
      ->capture_default_str();

  auto*        simulate = app.add_subcommand("simulate", "Trace the secant events of a motion");
  SimulateArgs sa;
  simulate->add_option("--model", sa.model, "circle (trisecants) or parabola (concyclic)")
      ->check(CLI::IsMember({"circle", "parabola"}))
      ->capture_default_str();
  simulate->add_option("--i", sa.i, "First strand of b_ij")->capture_default_str();
  simulate->add_option("--j", sa.j, "Second strand of b_ij")->capture_default_str();
  simulate->add_option("--input", sa.input, "Trajectory JSON file to trace instead");
  simulate->add_option("--kind", sa.kind, "Event kind for --input")
      ->check(CLI::IsMember({"trisecant", "concyclic"}))
      ->capture_default_str();
  simulate->add_option("--trajectory-out", sa.trajectory_out, "Write the trajectory JSON here");
  simulate->add_flag("--with-trajectory", sa.with_trajectory, "Include the trajectory in output");

  auto*                    geometry = app.add_subcommand("geometry", "Exact parabola geometry");
  std::string              gop;
  std::vector<std::string> gargs;
  int                      point = 1, which = 1;
  geometry->add_option("op", gop, "delta | fourth | circle | slope | growth | order")
      ->required()
      ->check(CLI::IsMember({"delta", "fourth", "circle", "slope", "growth", "order"}));
  geometry->add_option("args", gargs, "Rational arguments (p or p/q)");
  geometry->add_option("--point", point, "Point P_k for order")->capture_default_str();
  geometry->add_option("--case", which, "Circle case 1, 2 or 3 for order")
      ->check(CLI::Range(1, 3))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_parse;
  }

  try {
    if (*reduce) {
      return cmd_reduce(word, a_toy ? "toy" : a_even ? "even" : a_h ? "h" : "gnk", g);
    }
    if (*map) {
      return cmd_map(word, g);
    }
    if (*phic) {
      return cmd_phi(word, phi_gnk, g);
    }
    if (*bounds) {
      return cmd_bounds(word, bounds_gnk, timing, g);
    }
    if (*verify) {
      return cmd_verify(suite, samples, g);
    }
    if (*simulate) {
      return cmd_simulate(sa, g);
    }
    return cmd_geometry(gop, gargs, point, which, g);
  } catch (ParseError const& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return exit_parse;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_precondition;
  } catch (std::filesystem::filesystem_error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_precondition;
  }
}
