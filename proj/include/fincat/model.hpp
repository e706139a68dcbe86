// Candidate models for the category and groupoid theories: raw
// (carrier, composition, unit, inverse) data, the axiom checkers that
// judge them, conversions to and from finite categories, and a
// brute-force model enumerator.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fincat/category.hpp"
#include "fincat/error.hpp"
#include "fincat/graph.hpp"
#include "fincat/util.hpp"

namespace fincat {

enum class Theory { Category, Groupoid };

inline std::string to_string(Theory t) {
  return t == Theory::Category ? "cat" : "grpd";
}

/// Raw candidate structure on a graph: a composition value for every
/// composable pair, a unit edge for every vertex, optionally an inverse
/// edge for every edge. No laws are assumed here; the checkers judge.
struct ModelData {
  FinGraph carrier;
  CompTable comp;  // (f,g) -> edge, meant as "f then g"
  StrMap unit;     // vertex -> edge
  std::optional<StrMap> inv;  // edge -> edge
};

struct Violation {
  std::string axiom;
  std::vector<std::string> witness;
};

struct CheckReport {
  Theory theory;
  bool passed = false;
  std::vector<Violation> violations;
};

inline std::string describe(const Violation& v) {
  return v.axiom + " at (" + detail::join(v.witness, ", ") + ")";
}

/// Totality and well-formedness of the tables; distinct from axiom
/// violations and reported by throwing.
inline void validate_model_structure(const ModelData& m, bool need_inv) {
  const FinGraph& g = m.carrier;
  for (const auto& f : g.edges)
    for (const auto& h : g.edges) {
      bool composable = g.tgt.at(f) == g.src.at(h);
      auto it = m.comp.find({f, h});
      if (composable && it == m.comp.end())
        throw StructuralError("model: comp missing for composable pair (" +
                              f + ", " + h + ")");
      if (!composable && it != m.comp.end())
        throw StructuralError("model: comp defined on non-composable pair (" +
                              f + ", " + h + ")");
      if (it != m.comp.end() && !g.has_edge(it->second))
        throw StructuralError("model: comp(" + f + ", " + h +
                              ") is not an edge: '" + it->second + "'");
    }
  for (const auto& v : g.vertices) {
    auto it = m.unit.find(v);
    if (it == m.unit.end())
      throw StructuralError("model: unit missing for vertex '" + v + "'");
    if (!g.has_edge(it->second))
      throw StructuralError("model: unit(" + v + ") is not an edge: '" +
                            it->second + "'");
  }
  for (const auto& [v, e] : m.unit)
    if (!g.has_vertex(v))
      throw StructuralError("model: unit keyed by unknown vertex '" + v + "'");
  if (need_inv) {
    if (!m.inv)
      throw StructuralError("model: groupoid check requires an inverse map");
    for (const auto& e : g.edges)
      if (!m.inv->count(e))
        throw StructuralError("model: inv missing for edge '" + e + "'");
    for (const auto& [e, ie] : *m.inv)
      if (!g.has_edge(e) || !g.has_edge(ie))
        throw StructuralError("model: inv entry (" + e + ", " + ie +
                              ") off the edge set");
  }
}

namespace detail {

// Evaluates the category axioms in their Set-level form, visiting each
// violation in canonical order; stops early when visit returns false.
// Composites of triples are taken twice, once through each projection
// route ((m,id) then m, and (id,m) then m): their agreement is the
// associativity square.
inline void visit_category_violations(
    const ModelData& m,
    const std::function<bool(const Violation&)>& visit) {
  const FinGraph& g = m.carrier;
  // structure is validated, so the comp keys are exactly the composable
  // pairs, already in canonical order
  for (const auto& [p, gf] : m.comp) {
    if (g.src.at(gf) != g.src.at(p.first))
      if (!visit({"src-compat", {p.first, p.second, gf}})) return;
    if (g.tgt.at(gf) != g.tgt.at(p.second))
      if (!visit({"tgt-compat", {p.first, p.second, gf}})) return;
  }
  for (const auto& [p, fg] : m.comp)
    for (const auto& h : g.edges) {
      if (g.src.at(h) != g.tgt.at(p.second)) continue;
      // route via (m, id): compose the first pair, then the third edge;
      // route via (id, m): compose the last pair, then the first edge.
      // Either route can fall off the composable domain when a compat
      // axiom already failed; those triples are skipped.
      auto left = m.comp.find({fg, h});
      auto gh = m.comp.find({p.second, h});
      if (left == m.comp.end() || gh == m.comp.end()) continue;
      auto right = m.comp.find({p.first, gh->second});
      if (right == m.comp.end()) continue;
      if (left->second != right->second)
        if (!visit({"assoc",
                    {p.first, p.second, h, left->second, right->second}}))
          return;
    }
  for (const auto& v : g.vertices) {
    const std::string& u = m.unit.at(v);
    if (g.src.at(u) != v || g.tgt.at(u) != v)
      if (!visit({"unit-endpoints", {v, u}})) return;
  }
  for (const auto& f : g.edges) {
    // left unit only evaluable when the unit edge really is a loop there
    const std::string& us = m.unit.at(g.src.at(f));
    if (g.tgt.at(us) == g.src.at(f) && m.comp.at({us, f}) != f)
      if (!visit({"left-unit", {f, us}})) return;
    const std::string& ut = m.unit.at(g.tgt.at(f));
    if (g.src.at(ut) == g.tgt.at(f) && m.comp.at({f, ut}) != f)
      if (!visit({"right-unit", {f, ut}})) return;
  }
}

inline void visit_groupoid_violations(
    const ModelData& m,
    const std::function<bool(const Violation&)>& visit) {
  const FinGraph& g = m.carrier;
  bool stopped = false;
  visit_category_violations(m, [&](const Violation& v) {
    bool more = visit(v);
    stopped = !more;
    return more;
  });
  if (stopped) return;
  const StrMap& inv = *m.inv;
  for (const auto& f : g.edges) {
    const std::string& fi = inv.at(f);
    if (g.src.at(fi) != g.tgt.at(f) || g.tgt.at(fi) != g.src.at(f)) {
      if (!visit({"inv-endpoints", {f, fi}})) return;
      continue;  // the inverse laws below need composability
    }
    if (m.comp.at({f, fi}) != m.unit.at(g.src.at(f)))
      if (!visit({"right-inverse", {f, fi}})) return;
    if (m.comp.at({fi, f}) != m.unit.at(g.tgt.at(f)))
      if (!visit({"left-inverse", {fi, f}})) return;
  }
}

}  // namespace detail

/// Evaluates every axiom of the category theory on every tuple of the
/// carrier; an ignored inverse map is permitted.
inline CheckReport check_category_model(const ModelData& m) {
  validate_model_structure(m, false);
  CheckReport r{Theory::Category, true, {}};
  detail::visit_category_violations(m, [&](const Violation& v) {
    r.violations.push_back(v);
    return true;
  });
  r.passed = r.violations.empty();
  return r;
}

/// Category axioms plus inverse endpoints and the two inverse laws.
inline CheckReport check_groupoid_model(const ModelData& m) {
  validate_model_structure(m, true);
  CheckReport r{Theory::Groupoid, true, {}};
  detail::visit_groupoid_violations(m, [&](const Violation& v) {
    r.violations.push_back(v);
    return true;
  });
  r.passed = r.violations.empty();
  return r;
}

inline CheckReport check_model(const ModelData& m, Theory t) {
  return t == Theory::Category ? check_category_model(m)
                               : check_groupoid_model(m);
}

inline bool model_passes(const ModelData& m, Theory t) {
  validate_model_structure(m, t == Theory::Groupoid);
  bool ok = true;
  auto stop = [&](const Violation&) {
    ok = false;
    return false;
  };
  if (t == Theory::Category)
    detail::visit_category_violations(m, stop);
  else
    detail::visit_groupoid_violations(m, stop);
  return ok;
}

// ---------------------------------------------------------------------
// The equivalence with categories and groupoids, as conversions.

/// (carrier, comp, unit) as a finite category; refuses failing input.
inline FinCategory model_to_category(const ModelData& m) {
  CheckReport r = check_category_model(m);
  if (!r.passed)
    throw PreconditionError("model_to_category: model fails the axioms: " +
                            describe(r.violations.front()));
  std::vector<MorphismSpec> ms;
  for (const auto& e : m.carrier.edges)
    ms.push_back({e, m.carrier.src.at(e), m.carrier.tgt.at(e)});
  return make_category(m.carrier.name, m.carrier.vertices, ms, m.unit,
                       m.comp);
}

/// Reads the model structure off a category: comp(f,g) = "f then g" and
/// the unit map picks identities.
inline ModelData category_to_model(const FinCategory& c) {
  ModelData m;
  m.carrier = underlying_graph(c);
  m.carrier.name = c.name;
  m.unit = c.ids;
  m.comp = c.comp;
  return m;
}

struct FinGroupoid {
  FinCategory cat;
  StrMap inv;  // morphism -> two-sided inverse
};

/// Computes the inverse map of a category; fails with a witness if some
/// morphism has no two-sided inverse.
inline ModelData groupoid_to_model(const FinCategory& c) {
  ModelData m = category_to_model(c);
  StrMap inv;
  for (const auto& f : c.morphisms) {
    std::optional<std::string> found;
    for (const auto& g : c.morphisms) {
      if (!c.composable(f, g) || !c.composable(g, f)) continue;
      if (c.compose(f, g) == c.ids.at(c.src.at(f)) &&
          c.compose(g, f) == c.ids.at(c.tgt.at(f))) {
        found = g;
        break;
      }
    }
    if (!found)
      throw PreconditionError(
          "groupoid_to_model: no two-sided inverse for morphism '" + f + "'");
    inv[f] = *found;
  }
  m.inv = std::move(inv);
  return m;
}

inline FinGroupoid model_to_groupoid(const ModelData& m) {
  CheckReport r = check_groupoid_model(m);
  if (!r.passed)
    throw PreconditionError("model_to_groupoid: model fails the axioms: " +
                            describe(r.violations.front()));
  return FinGroupoid{model_to_category(m), *m.inv};
}

// ---------------------------------------------------------------------
// Brute-force enumeration over raw assignments.

/// Every assignment of comp/unit(/inv) values over the carrier's edges
/// that passes the corresponding checker, in lexicographic assignment
/// order. Throws SearchSpaceError when |E|^(pairs + |V| [+ |E|]) exceeds
/// the cap.
inline std::vector<ModelData> enumerate_models(const FinGraph& g, Theory t,
                                               std::uint64_t cap) {
  auto pairs = composable_sequences(2, g);
  std::uint64_t slots = pairs.size() + g.vertices.size() +
                        (t == Theory::Groupoid ? g.edges.size() : 0);
  std::uint64_t space = detail::saturating_pow(g.edges.size(), slots);
  if (g.edges.empty() && !g.vertices.empty()) space = 0;  // unit impossible
  if (space > cap)
    throw SearchSpaceError("enumerate_models: search space " +
                               (space == UINT64_MAX
                                    ? std::string("overflows uint64")
                                    : std::to_string(space)) +
                               " exceeds cap " + std::to_string(cap),
                           space);

  std::vector<ModelData> out;
  if (space == 0) return out;

  std::vector<std::size_t> counts(slots, g.edges.size());
  detail::for_each_assignment(counts, [&](const std::vector<std::size_t>&
                                              pick) {
    ModelData m;
    m.carrier = g;
    std::size_t k = 0;
    for (const auto& p : pairs) m.comp[{p[0], p[1]}] = g.edges[pick[k++]];
    for (const auto& v : g.vertices) m.unit[v] = g.edges[pick[k++]];
    if (t == Theory::Groupoid) {
      StrMap inv;
      for (const auto& e : g.edges) inv[e] = g.edges[pick[k++]];
      m.inv = std::move(inv);
    }
    if (model_passes(m, t)) out.push_back(std::move(m));
  });
  return out;
}

}  // namespace fincat
