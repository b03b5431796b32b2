#ifndef GNK_TRAJECTORY_IO_HPP_
#define GNK_TRAJECTORY_IO_HPP_

// JSON for trajectories and event logs. Rationals are written as "p/q"
// strings so files are exact.

#include <string>
#include <vector>

#include "json.hpp"

#include "gnk/errors.hpp"
#include "gnk/rational.hpp"
#include "gnk/trajectory.hpp"

namespace gnk {

  inline nlohmann::ordered_json to_json(Trajectory const& tr) {
    nlohmann::ordered_json j;
    j["n"]      = tr.n;
    auto& paths = j["paths"] = nlohmann::ordered_json::array();
    for (auto const& path : tr.paths) {
      auto pj = nlohmann::ordered_json::array();
      for (auto const& b : path) {
        pj.push_back({{"time", rat_to_string(b.time)},
                      {"x", rat_to_string(b.pos.x)},
                      {"y", rat_to_string(b.pos.y)}});
      }
      paths.push_back(std::move(pj));
    }
    return j;
  }

  inline Trajectory trajectory_from_json(nlohmann::json const& j) {
    try {
      Trajectory tr;
      tr.n = j.at("n").get<int>();
      for (auto const& pj : j.at("paths")) {
        std::vector<Breakpoint> path;
        for (auto const& b : pj) {
          path.push_back({rat_from_string(b.at("time").get<std::string>()),
                          {rat_from_string(b.at("x").get<std::string>()),
                           rat_from_string(b.at("y").get<std::string>())}});
        }
        tr.paths.push_back(std::move(path));
      }
      tr.validate();
      return tr;
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(std::string("malformed trajectory: ") + e.what());
    }
  }

  inline nlohmann::ordered_json to_json(std::vector<SecantEvent> const& events) {
    auto j = nlohmann::ordered_json::array();
    for (auto const& e : events) {
      j.push_back({{"time_lo", rat_to_string(e.time_lo)},
                   {"time_hi", rat_to_string(e.time_hi)},
                   {"kind", kind_name(e.kind)},
                   {"participants", e.participants}});
    }
    return j;
  }

}  // namespace gnk

#endif  // GNK_TRAJECTORY_IO_HPP_
