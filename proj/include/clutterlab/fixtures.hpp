#pragma once

#include "clutterlab/report.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace clutterlab {

// A bundled reference instance with its golden property map.  Golden values
// are frozen from exact computation and cross-checked by the oracle suites;
// each report entry names the operation chain that produces it.
struct Fixture {
  std::string name;
  std::optional<Clutter> clutter;
  std::optional<IntMatrix> matrix;  // set for matrix-shaped fixtures
  nlohmann::ordered_json expected;  // golden entries: key -> {value[, witness]}
};

namespace detail {

inline nlohmann::ordered_json golden(const char* text) {
  return nlohmann::ordered_json::parse(text);
}

}  // namespace detail

inline const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> fx = [] {
    std::vector<Fixture> v;

    v.push_back({"triangle", make_clutter(3, {{0, 1}, {0, 2}, {1, 2}}), std::nullopt,
                 detail::golden(R"({
      "n": {"value": 3}, "q": {"value": 3}, "uniform": {"value": 2},
      "min_covers": {"value": 3}, "alpha0": {"value": 2}, "beta1": {"value": 1},
      "konig": {"value": false}, "unmixed": {"value": true},
      "packing": {"value": false, "witness": {"deleted": [], "contracted": []}},
      "ideal": {"value": false, "witness": [["1/2", "1/2", "1/2"]]},
      "rees_normal": {"value": true}, "mfmc": {"value": false},
      "edge_cone_closed": {"value": false, "witness": ["1", "1", "1"]},
      "rank": {"value": 3}, "snf": {"value": ["1", "1", "2"]}, "delta_r": {"value": "2"},
      "balanced": {"value": false, "witness": {"rows": [1, 2, 3], "cols": [1, 2, 3]}},
      "perfect_matching": {"value": false}, "vertex_critical": {"value": true},
      "cover_partition": {"value": false}, "two_partitionable": {"value": false}
    })")});

    v.push_back({"4cycle", make_clutter(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), std::nullopt,
                 detail::golden(R"({
      "n": {"value": 4}, "q": {"value": 4}, "uniform": {"value": 2},
      "min_covers": {"value": 2}, "alpha0": {"value": 2}, "beta1": {"value": 2},
      "konig": {"value": true}, "unmixed": {"value": true}, "packing": {"value": true},
      "ideal": {"value": true}, "rees_normal": {"value": true}, "mfmc": {"value": true},
      "edge_cone_closed": {"value": true},
      "rank": {"value": 3}, "snf": {"value": ["1", "1", "1"]}, "delta_r": {"value": "1"},
      "balanced": {"value": true},
      "perfect_matching": {"value": true, "witness": [1, 3]},
      "vertex_critical": {"value": true},
      "cover_partition": {"value": true, "witness": [[1, 3], [2, 4]]},
      "two_partitionable": {"value": true}
    })")});

    v.push_back({"single-edge", make_clutter(2, {{0, 1}}), std::nullopt, detail::golden(R"({
      "n": {"value": 2}, "q": {"value": 1}, "uniform": {"value": 2},
      "min_covers": {"value": 2}, "alpha0": {"value": 1}, "beta1": {"value": 1},
      "konig": {"value": true}, "unmixed": {"value": true}, "packing": {"value": true},
      "ideal": {"value": true}, "rees_normal": {"value": true}, "mfmc": {"value": true},
      "edge_cone_closed": {"value": true},
      "rank": {"value": 1}, "snf": {"value": ["1"]}, "delta_r": {"value": "1"},
      "balanced": {"value": true},
      "perfect_matching": {"value": true, "witness": [1]},
      "vertex_critical": {"value": true},
      "cover_partition": {"value": true, "witness": [[1], [2]]},
      "two_partitionable": {"value": false}
    })")});

    v.push_back({"ex-2.3",
                 make_clutter(9, {{0, 1}, {2, 3, 4, 5}, {6, 7, 8}, {0, 2}, {1, 3}, {4, 6}, {5, 7}}),
                 std::nullopt, detail::golden(R"({
      "n": {"value": 9}, "q": {"value": 7}, "uniform": {"value": null},
      "min_covers": {"value": 11}, "alpha0": {"value": 4}, "beta1": {"value": 4},
      "konig": {"value": true}, "unmixed": {"value": false}, "packing": {"value": true},
      "ideal": {"value": true}, "rees_normal": {"value": true}, "mfmc": {"value": true},
      "edge_cone_closed": {"value": true},
      "rank": {"value": 7},
      "snf": {"value": ["1", "1", "1", "1", "1", "1", "1"]}, "delta_r": {"value": "1"},
      "balanced": {"value": true},
      "perfect_matching": {"value": true, "witness": [1, 2, 3]},
      "vertex_critical": {"value": false},
      "cover_partition": {"value": true, "witness": [[1, 4, 5, 6, 9], [2, 3, 7, 8]]},
      "two_partitionable": {"value": false}
    })")});

    {
      IntMatrix m(5, 4);
      const int rows[5][4] = {
          {1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 1, 1, 0}, {1, 0, 1, 0}};
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 4; ++j) m.at(i, j) = rows[i][j];
      v.push_back({"ex-3.7", make_clutter(5, {{0, 4}, {1, 3}, {2, 3, 4}, {0, 1, 2}}), m,
                   detail::golden(R"({
        "n": {"value": 5}, "q": {"value": 4}, "uniform": {"value": null},
        "min_covers": {"value": 4}, "alpha0": {"value": 2}, "beta1": {"value": 2},
        "konig": {"value": true}, "unmixed": {"value": false}, "packing": {"value": true},
        "ideal": {"value": true}, "rees_normal": {"value": true}, "mfmc": {"value": true},
        "edge_cone_closed": {"value": false, "witness": ["1", "1", "1", "1", "1"]},
        "rank": {"value": 4}, "snf": {"value": ["1", "1", "1", "2"]}, "delta_r": {"value": "2"},
        "balanced": {"value": false},
        "perfect_matching": {"value": false}, "vertex_critical": {"value": false},
        "cover_partition": {"value": false}, "two_partitionable": {"value": false}
      })")});
    }

    v.push_back({"ex-4.5", make_clutter(6, {{0, 3, 4}, {0, 2, 5}, {1, 3, 5}, {1, 2, 4}}),
                 std::nullopt, detail::golden(R"({
      "n": {"value": 6}, "q": {"value": 4}, "uniform": {"value": 3},
      "min_covers": {"value": 7}, "alpha0": {"value": 2}, "beta1": {"value": 1},
      "konig": {"value": false}, "unmixed": {"value": false},
      "packing": {"value": false, "witness": {"deleted": [], "contracted": []}},
      "ideal": {"value": true}, "rees_normal": {"value": false}, "mfmc": {"value": false},
      "edge_cone_closed": {"value": false, "witness": ["1", "1", "1", "1", "1", "1"]},
      "rank": {"value": 4}, "snf": {"value": ["1", "1", "1", "2"]}, "delta_r": {"value": "2"},
      "balanced": {"value": false},
      "perfect_matching": {"value": false}, "vertex_critical": {"value": true},
      "cover_partition": {"value": true, "witness": [[1, 2], [3, 4], [5, 6]]},
      "two_partitionable": {"value": true}
    })")});

    {
      IntMatrix m(10, 13);
      for (int j = 0; j < 9; ++j) m.at(j, j) = 1;
      const int extra[4][4] = {{5, 6, 7, 10}, {3, 4, 8, 10}, {1, 2, 9, 10}, {7, 8, 9, 10}};
      for (int j = 0; j < 4; ++j)
        for (int t = 0; t < 4; ++t) m.at(extra[j][t] - 1, 9 + j) = 1;
      v.push_back({"ex-5.7", std::nullopt, m, detail::golden(R"({
        "rows": {"value": 10}, "cols": {"value": 13}, "rank": {"value": 10},
        "snf": {"value": ["1", "1", "1", "1", "1", "1", "1", "1", "1", "1"]},
        "delta_r": {"value": "1"}, "balanced": {"value": true}
      })")});
    }

    return v;
  }();
  return fx;
}

inline const Fixture* fixture_by_name(const std::string& name) {
  for (const auto& f : fixtures())
    if (f.name == name) return &f;
  return nullptr;
}

// Report for a fixture: clutter-shaped fixtures get the full clutter report,
// matrix-shaped ones the matrix report.
inline PropertyReport fixture_report(const Fixture& f) {
  if (f.clutter) return property_report(*f.clutter, f.name);
  return property_report(*f.matrix, f.name);
}

// Compare a report against a golden map.  Returns one message per mismatch;
// empty means every golden entry is reproduced bit-exactly.
inline std::vector<std::string> check_golden(const PropertyReport& rep,
                                             const nlohmann::ordered_json& expected) {
  std::vector<std::string> bad;
  for (auto it = expected.begin(); it != expected.end(); ++it) {
    const PropertyEntry* found = nullptr;
    for (const auto& [name, e] : rep.entries)
      if (name == it.key()) {
        found = &e;
        break;
      }
    if (!found) {
      bad.push_back(it.key() + ": missing from report");
      continue;
    }
    const auto& exp = it.value();
    if (found->value != exp.at("value"))
      bad.push_back(it.key() + ": expected " + exp.at("value").dump() + " got " +
                    found->value.dump());
    if (exp.contains("witness") && found->witness != exp.at("witness"))
      bad.push_back(it.key() + ": expected witness " + exp.at("witness").dump() + " got " +
                    found->witness.dump());
  }
  return bad;
}

}  // namespace clutterlab
