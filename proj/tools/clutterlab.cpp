// clutterlab: exact certificates for cover/packing combinatorics, integer
// normal forms, Hilbert bases, and regular triangulations of small clutters.
#include "clutterlab/enumerate.hpp"
#include "clutterlab/fixtures.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace clutterlab;

struct LoadedInput {
  std::string id;
  std::optional<Clutter> clutter;
  std::optional<IntMatrix> matrix;
};

// A fixture name, or a file: JSON documents are clutters, anything else is
// read as a "rows cols" matrix.
LoadedInput load_input(const std::string& arg) {
  if (const Fixture* f = fixture_by_name(arg)) return {f->name, f->clutter, f->matrix};
  std::ifstream in(arg);
  if (!in) fail(errc::parse, "'" + arg + "' is neither a fixture name nor a readable file");
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) fail(errc::parse, "'" + arg + "' is empty");
  LoadedInput li{arg, std::nullopt, std::nullopt};
  if (text[first] == '{')
    li.clutter = parse_clutter(text);
  else
    li.matrix = parse_matrix(text);
  return li;
}

std::vector<std::vector<Int>> points_of(const LoadedInput& li) {
  IntMatrix m = li.clutter ? incidence_matrix(*li.clutter) : *li.matrix;
  std::vector<std::vector<Int>> pts(m.cols, std::vector<Int>(m.rows));
  for (int j = 0; j < m.cols; ++j)
    for (int i = 0; i < m.rows; ++i) pts[j][i] = m.at(i, j);
  return pts;
}

int cmd_report(const std::string& input, bool json) {
  LoadedInput li = load_input(input);
  PropertyReport rep =
      li.clutter ? property_report(*li.clutter, li.id) : property_report(*li.matrix, li.id);
  if (json)
    std::cout << rep.to_json().dump(2) << "\n";
  else
    std::cout << render_table(rep);
  return 0;
}

int cmd_verify(const std::string& input, const std::string& id, bool assert_cm, bool json) {
  LoadedInput li = load_input(input);
  if (!li.clutter) fail(errc::parse, "verification requires a clutter input, got a matrix");
  TheoremOutcome out = verify_theorem(*li.clutter, id, assert_cm);
  if (json) {
    nlohmann::ordered_json doc;
    doc["id"] = out.id;
    doc["verdict"] = verdict_name(out.verdict);
    doc["detail"] = out.detail;
    doc["report"] = out.report.to_json();
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << out.id << ": " << verdict_name(out.verdict) << "\n";
    if (!out.detail.empty()) std::cout << "  " << out.detail << "\n";
    std::cout << render_table(out.report);
  }
  switch (out.verdict) {
    case Verdict::pass: return 0;
    case Verdict::fail: return 1;
    default: return 4;
  }
}

int cmd_search(const SearchTask& task, bool json) {
  SearchResult res = run_search(task, &std::cerr);
  if (json) {
    std::cout << res.to_json().dump(2) << "\n";
  } else {
    std::cout << "target " << task.target << " (" << (res.info.conjecture ? "conjecture" : "theorem")
              << ", scope " << (res.info.uniform_scope ? "uniform" : "all") << "), "
              << (task.random ? "random" : "exhaustive") << " mode, d=" << task.d << ", n "
              << task.n_lo << ".." << task.n_hi;
    if (task.random) std::cout << ", seed " << task.seed << ", count " << task.count;
    std::cout << "\n";
    for (const auto& c : res.candidates)
      std::cout << c.status << ": " << c.clutter_json.dump() << "\n";
    std::cout << "tested " << res.tested << ", hypothesis met " << res.hypothesis_met
              << ", candidates " << res.candidates.size() << ", skipped (bounds) "
              << res.skipped_bound << "\n";
  }
  // counterexample / implementation-error refute the statement or the code;
  // out-of-scope-example and inconclusive refute nothing and stop softly.
  bool firm = false, soft = false;
  for (const auto& c : res.candidates) {
    if (c.status == "counterexample" || c.status == "implementation-error")
      firm = true;
    else
      soft = true;
  }
  if (firm) return 1;
  if (soft || res.skipped_bound > 0) return 3;
  return 0;
}

int cmd_triangulate(const std::string& input, const std::string& weights_arg, bool random,
                    std::uint64_t seed, int count, bool json) {
  LoadedInput li = load_input(input);
  std::vector<std::vector<Int>> pts = points_of(li);
  const int q = int(pts.size());

  std::vector<std::vector<Int>> weight_list;
  if (!weights_arg.empty()) {
    std::vector<Int> w;
    std::stringstream ss(weights_arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        w.push_back(Int(tok));
      } catch (const std::exception&) {
        fail(errc::parse, "bad weight entry '" + tok + "'");
      }
    }
    if (int(w.size()) != q)
      fail(errc::parse, "expected " + std::to_string(q) + " comma-separated weights, got " +
                            std::to_string(w.size()));
    weight_list.push_back(std::move(w));
  } else if (random) {
    if (seed == 0) fail(errc::parse, "--random requires an explicit nonzero --seed");
    std::mt19937_64 rng(seed);
    for (int k = 0; k < count; ++k) {
      std::vector<Int> w(q);
      int hi = 2 + k / 4;
      for (int i = 0; i < q; ++i) w[i] = Int(rng() % std::uint64_t(hi + 1));
      weight_list.push_back(std::move(w));
    }
  } else {
    weight_list = sample_weight_vectors(q, count);
  }

  IntMatrix whole = detail::columns_of(pts);
  nlohmann::ordered_json runs = nlohmann::ordered_json::array();
  for (const auto& w : weight_list) {
    Triangulation tri = regular_triangulation(pts, w);
    bool uni = true;
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (const auto& cell : tri.cells) {
      Int index = lattice_index(detail::columns_of(pts, cell), whole);
      if (index != 1) uni = false;
      nlohmann::ordered_json jc;
      auto& mem = jc["points"] = nlohmann::ordered_json::array();
      for (int i : cell) mem.push_back(i + 1);
      jc["index"] = index.str();
      cells.push_back(std::move(jc));
    }
    nlohmann::ordered_json run;
    auto& jw = run["weights"] = nlohmann::ordered_json::array();
    for (const Int& x : w) jw.push_back(x.str());
    run["refined"] = tri.refined;
    run["unimodular"] = uni;
    run["cells"] = std::move(cells);
    runs.push_back(std::move(run));
  }

  if (json) {
    nlohmann::ordered_json doc;
    doc["input"] = li.id;
    doc["points"] = q;
    doc["runs"] = runs;
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& run : runs) {
      std::cout << "weights [";
      bool f = true;
      for (const auto& x : run["weights"]) {
        std::cout << (f ? "" : ",") << x.get<std::string>();
        f = false;
      }
      std::cout << "] -> " << run["cells"].size() << " cells, "
                << (run["unimodular"].get<bool>() ? "unimodular" : "NOT unimodular")
                << (run["refined"].get<bool>() ? " (refined)" : "") << "\n";
      for (const auto& jc : run["cells"]) {
        std::cout << "  cell {";
        bool g = true;
        for (const auto& i : jc["points"]) {
          std::cout << (g ? "" : ",") << i.get<int>();
          g = false;
        }
        std::cout << "} index " << jc["index"].get<std::string>() << "\n";
      }
    }
  }
  return 0;
}

int cmd_snf(const std::string& input, bool json) {
  LoadedInput li = load_input(input);
  IntMatrix m = li.clutter ? incidence_matrix(*li.clutter) : *li.matrix;
  SmithResult s = smith_normal_form(m);
  int r = rank(m);
  nlohmann::ordered_json doc;
  doc["input"] = li.id;
  doc["rows"] = m.rows;
  doc["cols"] = m.cols;
  doc["rank"] = r;
  auto& jf = doc["invariant_factors"] = nlohmann::ordered_json::array();
  for (const Int& f : s.invariant_factors) jf.push_back(f.str());
  doc["delta_r"] = delta_r(m, r).str();
  if (json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "input " << li.id << ": " << m.rows << "x" << m.cols << ", rank " << r << "\n";
    std::cout << "invariant factors:";
    for (const Int& f : s.invariant_factors) std::cout << " " << f;
    std::cout << "\ndelta_r " << delta_r(m, r) << "\n";
  }
  return 0;
}

int cmd_fixtures(bool dump, const std::string& dir, bool json) {
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const Fixture& f : fixtures()) {
    nlohmann::ordered_json e;
    e["name"] = f.name;
    if (f.clutter) {
      e["kind"] = f.matrix ? "clutter+matrix" : "clutter";
      e["n"] = f.clutter->n;
      e["q"] = f.clutter->q();
    } else {
      e["kind"] = "matrix";
      e["rows"] = f.matrix->rows;
      e["cols"] = f.matrix->cols;
    }
    list.push_back(std::move(e));
  }
  std::vector<std::string> written;
  if (dump) {
    for (const Fixture& f : fixtures()) {
      if (f.clutter) {
        std::string path = dir + "/" + f.name + ".json";
        std::ofstream out(path);
        if (!out) fail(errc::parse, "cannot write '" + path + "'");
        out << serialize_clutter(*f.clutter) << "\n";
        written.push_back(path);
      }
      if (f.matrix) {
        std::string path = dir + "/" + f.name + ".txt";
        std::ofstream out(path);
        if (!out) fail(errc::parse, "cannot write '" + path + "'");
        out << matrix_to_text(*f.matrix);
        written.push_back(path);
      }
    }
  }
  if (json) {
    nlohmann::ordered_json doc;
    doc["fixtures"] = list;
    if (dump) doc["written"] = written;
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& e : list) {
      std::cout << e["name"].get<std::string>() << " (" << e["kind"].get<std::string>() << ", ";
      if (e.contains("n"))
        std::cout << "n=" << e["n"].get<int>() << ", q=" << e["q"].get<int>();
      else
        std::cout << e["rows"].get<int>() << "x" << e["cols"].get<int>();
      std::cout << ")\n";
    }
    for (const auto& p : written) std::cout << "wrote " << p << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact certificates for clutters: covers, packing, idealness, "
               "normal forms, Hilbert bases, and regular triangulations"};
  app.require_subcommand(1);

  std::string input, theorem, weights, target, dump_dir = ".";
  bool json = false, assert_cm = false, random_mode = false, dump = false;
  std::uint64_t seed = 0;
  int count = 0, d = 2, n_min = 2, n_max = 6;
  double prob = 0.25;

  CLI::App* rep = app.add_subcommand("report", "full property report for a fixture or file");
  rep->add_option("input", input, "fixture name or path")->required();
  rep->add_flag("--json", json, "machine-readable output");

  CLI::App* ver = app.add_subcommand("verify", "check one registry statement on an input");
  ver->add_option("input", input, "fixture name or path")->required();
  {
    std::string ids;
    for (const auto& t : theorem_ids()) ids += (ids.empty() ? "" : ", ") + t;
    ver->add_option("theorem", theorem, "statement id (" + ids + ")")->required();
  }
  ver->add_flag("--assert-cm", assert_cm,
                "vouch that the input is Cohen-Macaulay (unlocks the cor-4.7 rank conclusion)");
  ver->add_flag("--json", json, "machine-readable output");

  CLI::App* sea = app.add_subcommand("search", "scan small clutters for implication failures");
  {
    std::string names;
    for (const auto& t : search_targets()) names += (names.empty() ? "" : ", ") + std::string(t.name);
    sea->add_option("--target", target, "implication to test (" + names + ")")->required();
  }
  sea->add_option("--d", d, "edge size, 0 = mixed sizes (default 2)");
  sea->add_option("--n-min", n_min, "smallest vertex count (default 2)");
  sea->add_option("--n-max", n_max, "largest vertex count (default 6)");
  sea->add_flag("--random", random_mode, "sample random clutters instead of exhausting");
  sea->add_option("--seed", seed, "random seed (required with --random)");
  sea->add_option("--count", count, "random instances to examine (default 200)");
  sea->add_option("--p", prob, "edge-inclusion probability (default 0.25)");
  sea->add_flag("--json", json, "machine-readable output");

  CLI::App* tri = app.add_subcommand("triangulate",
                                     "regular triangulations with per-cell lattice indices");
  tri->add_option("input", input, "fixture name or path; matrix columns are the points")
      ->required();
  tri->add_option("--weights", weights, "comma-separated integer weights, one per point");
  tri->add_flag("--random", random_mode, "draw random weight vectors");
  tri->add_option("--seed", seed, "random seed (required with --random)");
  tri->add_option("--count", count, "number of weight vectors (default 1)");
  tri->add_flag("--json", json, "machine-readable output");

  CLI::App* snf = app.add_subcommand("snf", "Smith normal form of a matrix or incidence matrix");
  snf->add_option("input", input, "fixture name or path")->required();
  snf->add_flag("--json", json, "machine-readable output");

  CLI::App* fix = app.add_subcommand("fixtures", "list the bundled reference instances");
  fix->add_flag("--dump", dump, "write each fixture's input file");
  fix->add_option("--dir", dump_dir, "directory for --dump output (default .)");
  fix->add_flag("--json", json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (rep->parsed()) return cmd_report(input, json);
    if (ver->parsed()) return cmd_verify(input, theorem, assert_cm, json);
    if (sea->parsed()) {
      SearchTask task;
      task.target = target;
      task.d = d;
      task.n_lo = n_min;
      task.n_hi = n_max;
      task.random = random_mode;
      task.seed = seed;
      if (count > 0) task.count = count;
      task.p = prob;
      return cmd_search(task, json);
    }
    if (tri->parsed())
      return cmd_triangulate(input, weights, random_mode, seed, count > 0 ? count : 1, json);
    if (snf->parsed()) return cmd_snf(input, json);
    if (fix->parsed()) return cmd_fixtures(dump, dump_dir, json);
  } catch (const clutterlab::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
