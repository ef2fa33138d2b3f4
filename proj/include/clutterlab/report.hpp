#pragma once

#include "clutterlab/properties.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace clutterlab {

namespace detail {

inline nlohmann::ordered_json factors_json(const std::vector<Int>& fs) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const Int& f : fs) a.push_back(f.str());
  return a;
}

}  // namespace detail

// Full property report for a clutter: counting invariants, polyhedral and
// algebraic predicates, normal forms, partitions.  Deterministic: every entry
// comes from an exact, canonically ordered computation.
inline PropertyReport property_report(const Clutter& c, const std::string& id) {
  PropertyReport rep;
  rep.id = id;
  rep.add("n", c.n, "input");
  rep.add("q", c.q(), "input");
  auto d = uniformity(c);
  rep.add("uniform", d ? nlohmann::ordered_json(*d) : nlohmann::ordered_json(nullptr),
          "all edge sizes equal");

  auto covers = minimal_vertex_covers(c);
  rep.add("min_covers", int(covers.size()), "hitting-set enumeration");
  rep.add("alpha0", alpha0(c), "branch-and-bound over vertex subsets");
  rep.add("beta1", beta1(c), "branch-and-bound over disjoint edges");
  rep.add("konig", has_konig_property(c), "covering number vs matching number");
  rep.add("unmixed", is_unmixed(c), "minimal-cover size scan");

  auto [packs, pw] = has_packing_property(c);
  nlohmann::ordered_json packing_witness = nullptr;
  if (pw) {
    packing_witness = nlohmann::ordered_json::object();
    packing_witness["deleted"] = detail::cover_json(pw->zeros);
    packing_witness["contracted"] = detail::cover_json(pw->ones);
  }
  rep.add("packing", packs, "covering vs matching number on every minor", packing_witness);

  auto ideal = is_ideal(c);
  nlohmann::ordered_json frac = nullptr;
  if (!ideal.fractional_vertices.empty()) {
    frac = nlohmann::ordered_json::array();
    for (const auto& v : ideal.fractional_vertices) {
      nlohmann::ordered_json pt = nlohmann::ordered_json::array();
      for (const Rat& x : v) {
        std::ostringstream os;
        os << x;
        pt.push_back(os.str());
      }
      frac.push_back(pt);
    }
  }
  rep.add("ideal", ideal.ideal, "exact vertex enumeration of the covering polyhedron", frac);

  bool rees = rees_is_normal(c);
  rep.add("rees_normal", rees, "generator completeness for the blowup cone");
  rep.add("mfmc", ideal.ideal && rees, "integral covering polyhedron + normal blowup algebra");

  auto closure = edge_cone_closure(c);
  nlohmann::ordered_json cw = nullptr;
  if (closure.witness) cw = detail::factors_json(*closure.witness);
  rep.add("edge_cone_closed", closure.hilbert,
          "generator completeness over the cone's lattice points", cw);

  IntMatrix a = incidence_matrix(c);
  int r = rank(a);
  rep.add("rank", r, "fraction-free elimination");
  auto s = smith_normal_form(a);
  rep.add("snf", detail::factors_json(s.invariant_factors), "diagonalisation over the integers");
  rep.add("delta_r", delta_r(a, r).str(), "gcd of r x r subdeterminants");

  auto bal = is_balanced(a);
  nlohmann::ordered_json bw = nullptr;
  if (!bal.balanced) {
    bw = nlohmann::ordered_json::object();
    bw["rows"] = detail::cover_json(bal.rows);
    bw["cols"] = detail::cover_json(bal.cols);
  }
  rep.add("balanced", bal.balanced, "chordless-cycle search in the row/column graph", bw);

  auto pm = find_perfect_matching(c);
  rep.add("perfect_matching", pm.has_value(), "exact-cover search over edges",
          pm ? detail::cover_json(*pm) : nlohmann::ordered_json(nullptr));

  try {
    rep.add("vertex_critical", is_vertex_critical(c),
            "covering number of every single-vertex deletion");
  } catch (const error& e) {
    if (e.kind() != errc::hypothesis_failed) throw;
    rep.add("vertex_critical", nullptr, std::string("undefined: ") + e.what());
  }

  auto part = cover_partition(c);
  rep.add("cover_partition", part.has_value(), "backtracking over disjoint minimal covers",
          part ? detail::covers_json(*part) : nlohmann::ordered_json(nullptr));
  bool two_part = d.has_value() && is_2_partitionable(c);
  rep.add("two_partitionable", two_part, "backtracking over size-2 minimal covers");
  return rep;
}

// Report for a plain 0/1 matrix that need not be the incidence matrix of a
// clutter (column supports may be nested): only matrix-level invariants.
inline PropertyReport property_report(const IntMatrix& m, const std::string& id) {
  PropertyReport rep;
  rep.id = id;
  rep.add("rows", m.rows, "input");
  rep.add("cols", m.cols, "input");
  int r = rank(m);
  rep.add("rank", r, "fraction-free elimination");
  auto s = smith_normal_form(m);
  rep.add("snf", detail::factors_json(s.invariant_factors), "diagonalisation over the integers");
  rep.add("delta_r", delta_r(m, r).str(), "gcd of r x r subdeterminants");
  auto bal = is_balanced(m);
  nlohmann::ordered_json bw = nullptr;
  if (!bal.balanced) {
    bw = nlohmann::ordered_json::object();
    bw["rows"] = detail::cover_json(bal.rows);
    bw["cols"] = detail::cover_json(bal.cols);
  }
  rep.add("balanced", bal.balanced, "chordless-cycle search in the row/column graph", bw);
  return rep;
}

// Fixed-width text rendering of a report (the default CLI output).
inline std::string render_table(const PropertyReport& rep) {
  std::size_t w = 4;
  for (const auto& [name, e] : rep.entries) w = std::max(w, name.size());
  std::ostringstream out;
  out << "report: " << rep.id << "\n";
  for (const auto& [name, e] : rep.entries) {
    out << "  " << name << std::string(w - name.size() + 2, ' ');
    if (e.value.is_string())
      out << e.value.get<std::string>();
    else
      out << e.value.dump();
    if (!e.witness.is_null()) out << "   witness " << e.witness.dump();
    out << "\n";
  }
  return out.str();
}

}  // namespace clutterlab
