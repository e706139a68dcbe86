// The batch verification suite: generated corpora, independent oracles,
// and the eleven acceptance checks run by `fincat verify-suite` and by
// the acceptance test binary. Oracles here are written against the plain
// definitions so they share no code path with the operations they judge.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fincat/category.hpp"
#include "fincat/error.hpp"
#include "fincat/fp_probe.hpp"
#include "fincat/graph.hpp"
#include "fincat/graph_limits.hpp"
#include "fincat/model.hpp"
#include "fincat/path.hpp"
#include "fincat/presentation.hpp"
#include "fincat/util.hpp"

namespace fincat {
namespace verify {

// ---------------------------------------------------------------------
// Corpora.

/// Every labeled graph with at most max_v vertices (v0, v1, ...) and at
/// most max_e edges (e0, e1, ...), one graph per endpoint assignment.
inline std::vector<FinGraph> graph_corpus(std::size_t max_v,
                                          std::size_t max_e) {
  std::vector<FinGraph> out;
  for (std::size_t nv = 0; nv <= max_v; ++nv) {
    std::vector<std::string> vs;
    for (std::size_t i = 0; i < nv; ++i) vs.push_back("v" + std::to_string(i));
    std::vector<PairKey> endpoint_choices;
    for (const auto& s : vs)
      for (const auto& t : vs) endpoint_choices.push_back({s, t});
    std::size_t max_here = nv == 0 ? 0 : max_e;
    for (std::size_t ne = 0; ne <= max_here; ++ne) {
      std::vector<std::size_t> counts(ne, endpoint_choices.size());
      detail::for_each_assignment(
          counts, [&](const std::vector<std::size_t>& pick) {
            FinGraph g;
            g.name = "c" + std::to_string(out.size());
            for (const auto& v : vs) g.add_vertex(v);
            for (std::size_t k = 0; k < ne; ++k)
              g.add_edge("e" + std::to_string(k),
                         endpoint_choices[pick[k]].first,
                         endpoint_choices[pick[k]].second);
            out.push_back(std::move(g));
          });
    }
  }
  return out;
}

// ---------------------------------------------------------------------
// Fixture graphs, categories and presentations.

inline FinGraph single_loop_graph() {
  return make_graph("loop", {"v"}, {{"a", "v", "v"}});
}

inline FinGraph two_loop_graph() {
  return make_graph("two_loops", {"v"}, {{"u", "v", "v"}, {"w", "v", "v"}});
}

inline FinGraph parallel_pair_graph() {
  return make_graph("parallel", {"a", "b"},
                    {{"e", "a", "b"}, {"f", "a", "b"}});
}

/// The commutative-square shape: f : a -> b, h : a -> c, g : b -> d,
/// k : c -> d.
inline FinGraph square_graph() {
  return make_graph("square", {"a", "b", "c", "d"},
                    {{"f", "a", "b"},
                     {"h", "a", "c"},
                     {"g", "b", "d"},
                     {"k", "c", "d"}});
}

/// One object, n loop morphisms composing cyclically (id = power 0).
inline FinCategory cyclic_group_category(std::size_t n, std::string name) {
  std::vector<MorphismSpec> ms;
  StrMap ids;
  CompTable comp;
  auto mor = [&](std::size_t k) {
    return k == 0 ? std::string("1") : "g" + std::to_string(k);
  };
  for (std::size_t k = 0; k < n; ++k) ms.push_back({mor(k), "*", "*"});
  ids["*"] = "1";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      comp[{mor(i), mor(j)}] = mor((i + j) % n);
  return make_category(std::move(name), {"*"}, ms, std::move(ids),
                       std::move(comp));
}

/// One object, morphisms {1, v} with v.v = v.
inline FinCategory idempotent_monoid_category() {
  CompTable comp;
  comp[{"1", "1"}] = "1";
  comp[{"1", "v"}] = "v";
  comp[{"v", "1"}] = "v";
  comp[{"v", "v"}] = "v";
  return make_category("idem", {"*"}, {{"1", "*", "*"}, {"v", "*", "*"}},
                       {{"*", "1"}}, std::move(comp));
}

/// Presentation of the free model on a graph: empty relation graph.
inline Presentation free_presentation(const FinGraph& g, std::string name) {
  Presentation p;
  p.name = std::move(name);
  p.generators = g;
  return p;
}

/// One loop a with a.a = id: the two-element cyclic group.
inline Presentation z2_presentation() {
  Presentation p;
  p.name = "z2";
  p.generators = single_loop_graph();
  p.relations = make_graph("H", {"w"}, {{"r", "w", "w"}});
  p.alpha.v_map = {{"w", "v"}};
  p.beta.v_map = {{"w", "v"}};
  p.alpha.e_map = {{"r", Path{"v", {"a", "a"}}}};
  p.beta.e_map = {{"r", Path{"v", {}}}};
  return p;
}

/// One loop a with a.a.a = id: the three-element cyclic group.
inline Presentation z3_presentation() {
  Presentation p = z2_presentation();
  p.name = "z3";
  p.alpha.e_map = {{"r", Path{"v", {"a", "a", "a"}}}};
  return p;
}

/// The square graph with the two length-two composites identified.
inline Presentation square_presentation() {
  Presentation p;
  p.name = "square";
  p.generators = square_graph();
  p.relations = make_graph("H", {"w0", "w1"}, {{"r", "w0", "w1"}});
  p.alpha.v_map = {{"w0", "a"}, {"w1", "d"}};
  p.beta.v_map = {{"w0", "a"}, {"w1", "d"}};
  p.alpha.e_map = {{"r", Path{"a", {"f", "g"}}}};
  p.beta.e_map = {{"r", Path{"a", {"h", "k"}}}};
  return p;
}

/// Two isolated generator vertices glued by one relation vertex.
inline Presentation merge_presentation() {
  Presentation p;
  p.name = "merge";
  p.generators = make_graph("G", {"x", "y"}, {});
  p.relations = make_graph("H", {"w"}, {});
  p.alpha.v_map = {{"w", "x"}};
  p.beta.v_map = {{"w", "y"}};
  return p;
}

/// A loop collapsed onto the identity: presents the terminal category.
inline Presentation loop_collapse_presentation() {
  Presentation p = z2_presentation();
  p.name = "collapse";
  p.alpha.e_map = {{"r", Path{"v", {"a"}}}};
  return p;
}

/// The free category on the square graph with f.g and h.k identified.
inline FinCategory commutative_square_category() {
  return coequalize(square_presentation(), CoeqBounds{4, 64}).to_category();
}

// ---------------------------------------------------------------------
// Oracles. Each one recomputes its answer from the plain definition.

/// Counts morphisms A -> B by filtering every unconstrained pair of
/// vertex/edge assignments through the commuting condition.
inline std::size_t naive_hom_count(const FinGraph& a, const FinGraph& b) {
  if (a.vertices.empty() && a.edges.empty()) return 1;
  if (b.vertices.empty()) return 0;
  std::size_t count = 0;
  std::vector<std::size_t> counts(a.vertices.size() + a.edges.size(), 0);
  for (std::size_t i = 0; i < a.vertices.size(); ++i)
    counts[i] = b.vertices.size();
  for (std::size_t i = 0; i < a.edges.size(); ++i)
    counts[a.vertices.size() + i] = b.edges.size();
  if (!a.edges.empty() && b.edges.empty()) return 0;
  detail::for_each_assignment(counts, [&](const std::vector<std::size_t>& p) {
    StrMap vm, em;
    for (std::size_t i = 0; i < a.vertices.size(); ++i)
      vm[a.vertices[i]] = b.vertices[p[i]];
    for (std::size_t i = 0; i < a.edges.size(); ++i)
      em[a.edges[i]] = b.edges[p[a.vertices.size() + i]];
    for (const auto& e : a.edges) {
      if (b.src.at(em.at(e)) != vm.at(a.src.at(e))) return;
      if (b.tgt.at(em.at(e)) != vm.at(a.tgt.at(e))) return;
    }
    ++count;
  });
  return count;
}

/// Category axioms coded as bare loops over edges, nothing shared with
/// the checker's diagram translation.
inline bool direct_category_oracle(const ModelData& m) {
  const FinGraph& g = m.carrier;
  for (const auto& f : g.edges)
    for (const auto& h : g.edges) {
      if (g.tgt.at(f) != g.src.at(h)) continue;
      const std::string& hf = m.comp.at({f, h});
      if (g.src.at(hf) != g.src.at(f)) return false;
      if (g.tgt.at(hf) != g.tgt.at(h)) return false;
    }
  for (const auto& f : g.edges)
    for (const auto& h : g.edges) {
      if (g.tgt.at(f) != g.src.at(h)) continue;
      for (const auto& k : g.edges) {
        if (g.tgt.at(h) != g.src.at(k)) continue;
        auto left = m.comp.find({m.comp.at({f, h}), k});
        auto inner = m.comp.find({h, k});
        if (left == m.comp.end() || inner == m.comp.end()) continue;
        auto right = m.comp.find({f, inner->second});
        if (right == m.comp.end()) continue;
        if (left->second != right->second) return false;
      }
    }
  for (const auto& v : g.vertices) {
    const std::string& u = m.unit.at(v);
    if (g.src.at(u) != v || g.tgt.at(u) != v) return false;
  }
  for (const auto& f : g.edges) {
    if (m.comp.at({m.unit.at(g.src.at(f)), f}) != f) return false;
    if (m.comp.at({f, m.unit.at(g.tgt.at(f))}) != f) return false;
  }
  return true;
}

inline bool direct_groupoid_oracle(const ModelData& m) {
  if (!direct_category_oracle(m)) return false;
  const FinGraph& g = m.carrier;
  const StrMap& inv = *m.inv;
  for (const auto& f : g.edges) {
    const std::string& fi = inv.at(f);
    if (g.src.at(fi) != g.tgt.at(f)) return false;
    if (g.tgt.at(fi) != g.src.at(f)) return false;
    if (m.comp.at({f, fi}) != m.unit.at(g.src.at(f))) return false;
    if (m.comp.at({fi, f}) != m.unit.at(g.tgt.at(f))) return false;
  }
  return true;
}

/// Bounded congruence classes by a relation-matrix fixpoint: reflexivity,
/// symmetry, transitivity and one-edge composition closure, with no
/// union-find and an independent path enumeration. Classes come back as
/// sorted vectors of path keys.
inline std::vector<std::vector<std::string>> congruence_oracle(
    const Presentation& pres, std::size_t bound) {
  // vertex relation by pair-set fixpoint
  std::vector<std::string> vs = pres.generators.vertices;
  auto vidx = [&](const std::string& v) {
    return std::lower_bound(vs.begin(), vs.end(), v) - vs.begin();
  };
  std::vector<std::vector<bool>> vrel(vs.size(),
                                      std::vector<bool>(vs.size(), false));
  for (std::size_t i = 0; i < vs.size(); ++i) vrel[i][i] = true;
  for (const auto& w : pres.relations.vertices) {
    std::size_t i = vidx(pres.alpha.v_map.at(w));
    std::size_t j = vidx(pres.beta.v_map.at(w));
    vrel[i][j] = vrel[j][i] = true;
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = 0; j < vs.size(); ++j)
        for (std::size_t k = 0; k < vs.size(); ++k)
          if (vrel[i][j] && vrel[j][k] && !vrel[i][k]) {
            vrel[i][k] = true;
            changed = true;
          }
  }
  auto vclass = [&](const std::string& v) {
    std::size_t i = vidx(v);
    for (std::size_t j = 0; j < vs.size(); ++j)
      if (vrel[i][j]) return vs[j];  // least equivalent vertex
    return v;
  };

  // quotient graph, built independently of coequalize's
  FinGraph q;
  q.name = "oracleq";
  for (const auto& v : vs)
    if (vclass(v) == v) q.add_vertex(v);
  for (const auto& e : pres.generators.edges)
    q.add_edge(e, vclass(pres.generators.src.at(e)),
               vclass(pres.generators.tgt.at(e)));

  // path universe by iterated right extension, ordered by key
  std::vector<Path> paths;
  for (const auto& v : q.vertices) paths.push_back(Path{v, {}});
  std::size_t lo = 0;
  for (std::size_t len = 1; len <= bound; ++len) {
    std::size_t hi = paths.size();
    for (std::size_t i = lo; i < hi; ++i)
      for (const auto& e : q.edges)
        if (q.src.at(e) == path_end(q, paths[i])) {
          Path p = paths[i];
          p.edges.push_back(e);
          paths.push_back(std::move(p));
        }
    lo = hi;
  }
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < paths.size(); ++i) index[path_key(paths[i])] = i;

  const std::size_t n = paths.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) rel[i][i] = true;
  for (const auto& h : pres.relations.edges) {
    Path a = pres.alpha.e_map.at(h);
    Path b = pres.beta.e_map.at(h);
    a.start = vclass(a.start);
    b.start = vclass(b.start);
    if (a.length() > bound || b.length() > bound)
      throw PreconditionError("congruence_oracle: relation exceeds bound");
    std::size_t i = index.at(path_key(a));
    std::size_t j = index.at(path_key(b));
    rel[i][j] = rel[j][i] = true;
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (!rel[i][j] || i == j) continue;
        // transitivity
        for (std::size_t k = 0; k < n; ++k)
          if (rel[j][k] && !rel[i][k]) {
            rel[i][k] = rel[k][i] = true;
            changed = true;
          }
        // composition closure, one edge at a time
        if (paths[i].length() + 1 <= bound &&
            paths[j].length() + 1 <= bound) {
          for (const auto& e : q.edges) {
            if (q.src.at(e) == path_end(q, paths[i])) {
              Path pi = paths[i], pj = paths[j];
              pi.edges.push_back(e);
              pj.edges.push_back(e);
              std::size_t a = index.at(path_key(pi));
              std::size_t b = index.at(path_key(pj));
              if (!rel[a][b]) {
                rel[a][b] = rel[b][a] = true;
                changed = true;
              }
            }
            if (q.tgt.at(e) == paths[i].start) {
              Path pi{q.src.at(e), {e}};
              Path pj = pi;
              pi.edges.insert(pi.edges.end(), paths[i].edges.begin(),
                              paths[i].edges.end());
              pj.edges.insert(pj.edges.end(), paths[j].edges.begin(),
                              paths[j].edges.end());
              std::size_t a = index.at(path_key(pi));
              std::size_t b = index.at(path_key(pj));
              if (!rel[a][b]) {
                rel[a][b] = rel[b][a] = true;
                changed = true;
              }
            }
          }
        }
      }
  }

  std::vector<std::vector<std::string>> classes;
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<std::string> cls;
    for (std::size_t j = 0; j < n; ++j)
      if (rel[i][j]) {
        cls.push_back(path_key(paths[j]));
        seen[j] = true;
      }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end());
  return classes;
}

/// The engine's classes in the oracle's format, for comparison.
inline std::vector<std::vector<std::string>> engine_classes(
    const PresentedCategory& pc) {
  std::map<std::size_t, std::vector<std::string>> by_class;
  for (std::size_t i = 0; i < pc.cong.paths.size(); ++i)
    by_class[pc.cong.class_id[i]].push_back(path_key(pc.cong.paths[i]));
  std::vector<std::vector<std::string>> classes;
  for (auto& [c, cls] : by_class) {
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end());
  return classes;
}

// ---------------------------------------------------------------------
// The acceptance checks.

struct CriterionResult {
  int number;
  std::string name;
  bool passed;
  std::string detail;
};

namespace detail_v {

struct Check {
  bool ok = true;
  std::string detail;
  std::size_t cases = 0;

  void expect(bool cond, const std::string& what) {
    ++cases;
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
  std::string summary() const {
    return ok ? std::to_string(cases) + " checks" : detail;
  }
};

// categories with at most 3 objects and 6 morphisms
inline std::vector<FinCategory> small_category_corpus() {
  return {terminal_category(),
          discrete_category("d2", {"x", "y"}),
          discrete_category("d3", {"x", "y", "z"}),
          free_category(path_graph(1)),
          free_category(parallel_pair_graph()),
          free_category(path_graph(2)),
          cyclic_group_category(2, "z2cat"),
          cyclic_group_category(3, "z3cat"),
          idempotent_monoid_category()};
}

}  // namespace detail_v

/// 1. The two representable graphs have the stated shapes, and their
/// hom counts read off vertices and edges across the whole corpus.
inline CriterionResult criterion_representables() {
  detail_v::Check c;
  FinGraph h0 = representable(Cell::Zero);
  FinGraph h1 = representable(Cell::One);
  c.expect(h0.vertices.size() == 1 && h0.edges.empty(),
           "representable(zero) shape");
  c.expect(h1.vertices.size() == 2 && h1.edges.size() == 1,
           "representable(one) shape");
  for (const auto& g : graph_corpus(3, 3)) {
    c.expect(hom_graphs(h0, g).size() == g.vertices.size(),
             "vertex count via hom on " + g.name);
    c.expect(hom_graphs(h1, g).size() == g.edges.size(),
             "edge count via hom on " + g.name);
  }
  return {1, "representables and Yoneda counts", c.ok, c.summary()};
}

/// 2. path_graph(n) is isomorphic to the n-fold pushout of (s, t).
inline CriterionResult criterion_path_pushouts() {
  detail_v::Check c;
  FinGraph arrow = representable(Cell::One);
  FinGraph point = representable(Cell::Zero);
  GraphMorphism s = make_morphism(point, arrow, {{"a", "a"}}, {});
  FinGraph acc = arrow;
  std::string tip = "b";
  c.expect(graphs_isomorphic(acc, path_graph(1)), "one-fold pushout");
  for (std::size_t n = 2; n <= 6; ++n) {
    GraphMorphism pick_tip = make_morphism(point, acc, {{"a", tip}}, {});
    Pushout po = pushout(pick_tip, s);
    acc = po.graph;
    tip = po.in_right.v_map.at("b");
    c.expect(graphs_isomorphic(acc, path_graph(n)),
             "pushout fold differs from path_graph(" + std::to_string(n) +
                 ")");
  }
  return {2, "path graphs as iterated pushouts", c.ok, c.summary()};
}

/// 3. Maps out of path graphs count composable sequences.
inline CriterionResult criterion_composable_sequences() {
  detail_v::Check c;
  std::vector<FinGraph> paths;
  for (std::size_t n = 1; n <= 4; ++n) paths.push_back(path_graph(n));
  for (const auto& g : graph_corpus(3, 3))
    for (std::size_t n = 1; n <= 4; ++n)
      c.expect(hom_graphs(paths[n - 1], g).size() ==
                   composable_sequences(n, g).size(),
               "count mismatch at n=" + std::to_string(n) + " on " + g.name);
  return {3, "composable sequences as hom sets", c.ok, c.summary()};
}

/// 4. The transpose maps between Gr(G, U(C)) and Cat(F(G), C) are
/// mutually inverse bijections on the corpus.
inline CriterionResult criterion_adjunction() {
  detail_v::Check c;
  auto cats = detail_v::small_category_corpus();
  for (const auto& g : graph_corpus(3, 3)) {
    if (find_cycle(g)) continue;
    FinCategory fg = free_category(g);
    for (const auto& cat : cats) {
      auto gms = hom_graphs(g, underlying_graph(cat));
      auto fs = enumerate_functors(fg, cat);
      c.expect(gms.size() == fs.size(),
               "hom counts disagree on " + g.name + " -> " + cat.name);
      if (gms.size() != fs.size()) continue;
      for (const auto& f : fs) {
        GraphMorphism back = restrict_to_generators(f, g);
        bool found = false;
        for (const auto& gm : gms)
          if (gm == back) found = true;
        c.expect(found, "restriction misses the graph hom set");
        Functor again = to_functor(transpose_to_functor(back, cat));
        c.expect(again.o_map == f.o_map && again.m_map == f.m_map,
                 "transpose roundtrip not the identity (functor side)");
      }
      for (const auto& gm : gms) {
        Functor f = to_functor(transpose_to_functor(gm, cat));
        GraphMorphism back = restrict_to_generators(f, g);
        c.expect(back == gm,
                 "transpose roundtrip not the identity (graph side)");
      }
    }
  }
  return {4, "adjunction bijection", c.ok, c.summary()};
}

/// 5. The category checker agrees with the direct-axiom oracle on every
/// structure over every carrier with at most 2 vertices and 3 edges, and
/// the two-loop carrier has exactly 4 category and 2 groupoid models.
inline CriterionResult criterion_checker_vs_oracle() {
  detail_v::Check c;
  for (const auto& g : graph_corpus(2, 3)) {
    if (g.edges.empty() && !g.vertices.empty()) continue;  // no unit exists
    auto pairs = composable_sequences(2, g);
    std::vector<std::size_t> counts(pairs.size() + g.vertices.size(),
                                    g.edges.size());
    if (g.vertices.empty() && !counts.empty()) continue;
    detail::for_each_assignment(
        counts, [&](const std::vector<std::size_t>& pick) {
          ModelData m;
          m.carrier = g;
          std::size_t k = 0;
          for (const auto& p : pairs)
            m.comp[{p[0], p[1]}] = g.edges[pick[k++]];
          for (const auto& v : g.vertices) m.unit[v] = g.edges[pick[k++]];
          c.expect(model_passes(m, Theory::Category) ==
                       direct_category_oracle(m),
                   "checker and oracle disagree on " + g.name);
        });
  }
  auto cat_models = enumerate_models(two_loop_graph(), Theory::Category,
                                     1 << 20);
  auto grp_models = enumerate_models(two_loop_graph(), Theory::Groupoid,
                                     1 << 20);
  c.expect(cat_models.size() == 4, "two-loop category model count");
  c.expect(grp_models.size() == 2, "two-loop groupoid model count");
  for (const auto& m : grp_models)
    c.expect(direct_groupoid_oracle(m), "groupoid oracle rejects a model");
  return {5, "theory checkers against the direct oracle", c.ok, c.summary()};
}

/// 6. Category/model and groupoid/model conversions are mutually inverse
/// on a corpus of at least ten finite categories.
inline CriterionResult criterion_roundtrips() {
  detail_v::Check c;
  auto cats = detail_v::small_category_corpus();
  cats.push_back(commutative_square_category());
  cats.push_back(free_category(square_graph()));
  c.expect(cats.size() >= 10, "corpus too small");
  for (const auto& cat : cats) {
    ModelData m = category_to_model(cat);
    c.expect(check_category_model(m).passed,
             "converted model fails on " + cat.name);
    FinCategory back = model_to_category(m);
    c.expect(back == cat, "category roundtrip differs on " + cat.name);
  }
  for (const auto& cat : {cyclic_group_category(2, "z2cat"),
                          cyclic_group_category(3, "z3cat"),
                          discrete_category("d3", {"x", "y", "z"})}) {
    ModelData m = groupoid_to_model(cat);
    c.expect(check_groupoid_model(m).passed,
             "groupoid model fails on " + cat.name);
    FinGroupoid back = model_to_groupoid(m);
    c.expect(back.cat == cat && back.inv == *m.inv,
             "groupoid roundtrip differs on " + cat.name);
  }
  bool refused = false;
  try {
    groupoid_to_model(idempotent_monoid_category());
  } catch (const PreconditionError&) {
    refused = true;
  }
  c.expect(refused, "idempotent monoid accepted as groupoid");
  return {6, "model conversions roundtrip", c.ok, c.summary()};
}

/// 7. The coequalizer engine matches the bounded-congruence oracle and
/// reproduces free categories on empty relations.
inline CriterionResult criterion_coequalizer_engine() {
  detail_v::Check c;
  CoeqBounds bounds{4, 64};

  PresentedCategory z2 = coequalize(z2_presentation(), bounds);
  c.expect(z2.saturation.finite && z2.objects.size() == 1 &&
               z2.morphisms.size() == 2,
           "z2 shape");
  c.expect(z2.comp.at({"a", "a"}) == "id(v)", "a.a is not the identity");

  PresentedCategory z3 = coequalize(z3_presentation(), bounds);
  c.expect(z3.saturation.finite && z3.morphisms.size() == 3, "z3 shape");

  PresentedCategory sq = coequalize(square_presentation(), bounds);
  c.expect(sq.saturation.finite && sq.objects.size() == 4 &&
               sq.morphisms.size() == 9,
           "square shape");

  for (const auto& pres :
       {z2_presentation(), z3_presentation(), square_presentation(),
        merge_presentation(), loop_collapse_presentation()}) {
    PresentedCategory pc = coequalize(pres, bounds);
    c.expect(engine_classes(pc) ==
                 congruence_oracle(pres, bounds.max_path_len),
             "engine and oracle classes differ on " + pres.name);
  }

  for (const auto& g :
       {path_graph(1), path_graph(2), path_graph(3), parallel_pair_graph(),
        square_graph()}) {
    Presentation fp = free_presentation(g, "free-" + g.name);
    PresentedCategory pc = coequalize(fp, CoeqBounds{6, 256});
    c.expect(pc.saturation.finite, "free presentation undecided on " + g.name);
    FinCategory direct = free_category(g);
    FinCategory via = pc.to_category();
    via.name = direct.name;
    c.expect(via == direct, "free category differs on " + g.name);
  }
  return {7, "coequalizer engine against the congruence oracle", c.ok,
          c.summary()};
}

/// 8. Section normalization: q-bar after the section is the identity,
/// exactly, and the coequalizers before/after normalization agree.
inline CriterionResult criterion_sections() {
  detail_v::Check c;
  CoeqBounds bounds{4, 64};
  for (const auto& pres :
       {z2_presentation(), z3_presentation(), square_presentation(),
        merge_presentation(), loop_collapse_presentation(),
        free_presentation(path_graph(2), "free-path2")}) {
    SectionedPresentation sp = section_normalize(pres, bounds);
    c.expect(compose(sp.section, sp.qbar) ==
                 identity_morphism(underlying_graph(sp.model.to_category())),
             "q-bar . s differs from the identity on " + pres.name);
    c.expect(sp.coequalizers_isomorphic,
             "coequalizers differ after normalization on " + pres.name);
  }
  return {8, "section normalization", c.ok, c.summary()};
}

/// 9. Coproducts and coequalizers of presented models, including the
/// lifts-through-the-section construction, match the directly computed
/// colimits.
inline CriterionResult criterion_finite_colimits() {
  detail_v::Check c;
  CoeqBounds bounds{4, 64};

  auto coeq_cat = [&](const Presentation& p) {
    return coequalize(p, bounds).to_category();
  };

  // coproducts
  {
    Presentation p = coproduct_presentations(z2_presentation(),
                                             z2_presentation());
    FinCategory got = coeq_cat(p);
    c.expect(got.objects.size() == 2 && got.morphisms.size() == 4,
             "z2 + z2 shape");
    c.expect(categories_isomorphic(
                 got, coproduct_categories(coeq_cat(z2_presentation()),
                                           coeq_cat(z2_presentation()))),
             "z2 + z2 differs from the category coproduct");
  }
  {
    Presentation empty = free_presentation(FinGraph{}, "empty");
    Presentation p = coproduct_presentations(z3_presentation(), empty);
    c.expect(categories_isomorphic(coeq_cat(p), coeq_cat(z3_presentation())),
             "z3 + empty is not z3");
  }
  {
    Presentation pt = free_presentation(representable(Cell::Zero), "pt");
    FinCategory got = coeq_cat(coproduct_presentations(pt, pt));
    c.expect(categories_isomorphic(got, discrete_category("d2", {"x", "y"})),
             "point + point is not the discrete pair");
  }

  // coequalizers through the lifted presentation
  auto check_coeq = [&](const Functor& u, const Functor& v,
                        const Presentation& pP, const Presentation& pQ,
                        const std::string& label) {
    Presentation lifted = coequalizer_of_presented(u, v, pP, pQ, bounds);
    PresentedCategory via = coequalize(lifted, bounds);
    c.expect(via.saturation.finite, label + ": lifted coequalizer undecided");
    PresentedCategory direct = coequalize_functors(u, v, bounds);
    c.expect(direct.saturation.finite,
             label + ": direct coequalizer undecided");
    if (via.saturation.finite && direct.saturation.finite)
      c.expect(categories_isomorphic(via.to_category(), direct.to_category()),
               label + ": lifted and direct coequalizers differ");
    return via;
  };

  {
    // equal pair out of F(path1) into z2: coequalizer is z2 itself
    Presentation pP = free_presentation(path_graph(1), "fpath1");
    FinCategory P = coeq_cat(pP);
    FinCategory q = coeq_cat(z2_presentation());
    StrMap om{{"a0", "v"}, {"a1", "v"}};
    StrMap mm{{"id(a0)", "id(v)"}, {"id(a1)", "id(v)"}, {"e1", "a"}};
    Functor u = make_functor(P, q, om, mm);
    PresentedCategory got = check_coeq(u, u, pP, z2_presentation(),
                                       "equal pair");
    if (got.saturation.finite)
      c.expect(categories_isomorphic(got.to_category(), q),
               "coequalizer of an equal pair is not the codomain");
  }
  {
    // two points of the discrete pair get glued
    Presentation pP = free_presentation(representable(Cell::Zero), "pt");
    Presentation pQ = free_presentation(
        make_graph("dd", {"x", "y"}, {}), "dd");
    FinCategory P = coeq_cat(pP);
    FinCategory q = coeq_cat(pQ);
    Functor u = make_functor(P, q, {{"a", "x"}}, {{"id(a)", "id(x)"}});
    Functor v = make_functor(P, q, {{"a", "y"}}, {{"id(a)", "id(y)"}});
    PresentedCategory got = check_coeq(u, v, pP, pQ, "glued points");
    if (got.saturation.finite)
      c.expect(got.to_category().objects.size() == 1,
               "glued points should leave one object");
  }
  {
    // the square relation already holds in the square category
    Presentation pP = free_presentation(path_graph(1), "fpath1");
    Presentation pQ = square_presentation();
    FinCategory P = coeq_cat(pP);
    FinCategory q = coeq_cat(pQ);
    PresentedCategory qpc = coequalize(pQ, bounds);
    std::string fg = *qpc.class_name_of(Path{"a", {"f", "g"}});
    std::string hk = *qpc.class_name_of(Path{"a", {"h", "k"}});
    c.expect(fg == hk, "square relation not already collapsed");
    StrMap om{{"a0", "a"}, {"a1", "d"}};
    Functor u = make_functor(
        P, q, om, {{"id(a0)", "id(a)"}, {"id(a1)", "id(d)"}, {"e1", fg}});
    Functor v = make_functor(
        P, q, om, {{"id(a0)", "id(a)"}, {"id(a1)", "id(d)"}, {"e1", hk}});
    PresentedCategory got = check_coeq(u, v, pP, pQ, "square relation");
    if (got.saturation.finite)
      c.expect(categories_isomorphic(got.to_category(), q),
               "coequalizer should be the square category itself");
  }
  return {9, "stability under finite colimits", c.ok, c.summary()};
}

/// 10. The retract criterion accepts constructed retracts and rejects a
/// pair with p . f != id.
inline CriterionResult criterion_retract() {
  detail_v::Check c;
  CoeqBounds bounds{4, 64};

  {
    Presentation fp = z2_presentation();
    FinCategory f = coequalize(fp, bounds).to_category();
    Functor id = identity_functor(f);
    c.expect(verify_retract_coequalizer(fp, id, id, bounds),
             "identity retract rejected");
  }
  {
    // terminal as a retract of z2
    Presentation fp = z2_presentation();
    FinCategory zc = coequalize(fp, bounds).to_category();
    FinCategory t = terminal_category();
    Functor into = make_functor(t, zc, {{"*", "v"}}, {{"id(*)", "id(v)"}});
    Functor onto = make_functor(zc, t, {{"v", "*"}},
                                {{"id(v)", "id(*)"}, {"a", "id(*)"}});
    c.expect(verify_retract_coequalizer(fp, into, onto, bounds),
             "terminal retract of z2 rejected");
  }
  {
    // p . f = swap on the discrete pair: must be refused with a witness
    Presentation fp = free_presentation(make_graph("dd", {"x", "y"}, {}),
                                        "dd");
    FinCategory d = coequalize(fp, bounds).to_category();
    Functor swap = make_functor(
        d, d, {{"x", "y"}, {"y", "x"}},
        {{"id(x)", "id(y)"}, {"id(y)", "id(x)"}});
    bool refused = false;
    try {
      verify_retract_coequalizer(fp, swap, identity_functor(d), bounds);
    } catch (const PreconditionError&) {
      refused = true;
    }
    c.expect(refused, "p . f != id was accepted");
  }
  return {10, "retract coequalizer criterion", c.ok, c.summary()};
}

/// 11. The stabilization probe: the two hom routes agree stage by stage
/// for free models, the collapse chain stabilizes at 1 for F(point), and
/// the discrete inclusion chain never stabilizes within any cap up to 16.
inline CriterionResult criterion_fp_probe() {
  detail_v::Check c;
  FinGraph point = representable(Cell::Zero);

  for (const auto& g :
       {representable(Cell::Zero), representable(Cell::One), path_graph(2)}) {
    for (std::size_t chain = 0; chain < 3; ++chain) {
      ChainSystem ch = chain == 0 ? collapse_chain(6)
                      : chain == 1
                          ? discrete_inclusion_chain(6)
                          : constant_chain(cyclic_group_category(2, "z2cat"),
                                           6);
      StabilizationReport r = free_model_fp_check(g, ch, 6);
      c.expect(r.functor_route_counts.has_value(),
               "functor route missing on acyclic " + g.name);
      if (r.functor_route_counts)
        c.expect(*r.functor_route_counts == r.hom_counts,
                 "hom routes disagree on " + g.name + " along " + ch.name());
    }
  }

  StabilizationReport collapse = free_model_fp_check(point, collapse_chain(8),
                                                     8);
  c.expect(collapse.stable && collapse.stable_stage == 1,
           "collapse chain verdict for F(point): " + verdict_string(collapse));

  Presentation f0 = free_presentation(point, "f0");
  for (std::size_t cap = 1; cap <= 16; ++cap) {
    StabilizationReport r = fp_stabilization_probe(
        f0, CoeqBounds{2, 16}, discrete_inclusion_chain(cap), cap);
    c.expect(!r.stable, "discrete chain stabilized at cap " +
                            std::to_string(cap) + ": " + verdict_string(r));
    c.expect(r.hom_counts.size() == cap + 1 &&
                 r.hom_counts.back() == cap + 1,
             "hom counts along the discrete chain");
  }
  return {11, "finite presentability probe", c.ok, c.summary()};
}

inline std::vector<CriterionResult> run_all() {
  return {criterion_representables(), criterion_path_pushouts(),
          criterion_composable_sequences(), criterion_adjunction(),
          criterion_checker_vs_oracle(), criterion_roundtrips(),
          criterion_coequalizer_engine(), criterion_sections(),
          criterion_finite_colimits(), criterion_retract(),
          criterion_fp_probe()};
}

}  // namespace verify
}  // namespace fincat
