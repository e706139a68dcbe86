// Finite categories and functors, the free category on a graph, the
// underlying graph, and the adjunction transpose in both directions.

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "fincat/error.hpp"
#include "fincat/graph.hpp"
#include "fincat/path.hpp"
#include "fincat/util.hpp"

namespace fincat {

/// A finite category with a full composition table. `comp` is keyed
/// diagrammatically: comp[(f,g)] = g∘f, defined exactly when
/// tgt(f) = src(g). That convention is fixed across the whole library.
struct FinCategory {
  std::string name = "C";
  std::vector<std::string> objects;    // sorted
  std::vector<std::string> morphisms;  // sorted
  StrMap src;
  StrMap tgt;
  StrMap ids;      // object -> identity morphism
  CompTable comp;  // (f,g) -> "f then g"

  bool has_object(const std::string& o) const {
    return std::binary_search(objects.begin(), objects.end(), o);
  }
  bool has_morphism(const std::string& m) const {
    return std::binary_search(morphisms.begin(), morphisms.end(), m);
  }
  bool composable(const std::string& f, const std::string& g) const {
    return tgt.at(f) == src.at(g);
  }
  /// Diagrammatic composite: f first, then g.
  const std::string& compose(const std::string& f,
                             const std::string& g) const {
    auto it = comp.find({f, g});
    if (it == comp.end())
      throw PreconditionError("compose: (" + f + ", " + g +
                              ") is not a composable pair in '" + name + "'");
    return it->second;
  }

  std::vector<std::string> hom(const std::string& a,
                               const std::string& b) const {
    std::vector<std::string> out;
    for (const auto& m : morphisms)
      if (src.at(m) == a && tgt.at(m) == b) out.push_back(m);
    return out;
  }

  friend bool operator==(const FinCategory& a, const FinCategory& b) {
    return a.objects == b.objects && a.morphisms == b.morphisms &&
           a.src == b.src && a.tgt == b.tgt && a.ids == b.ids &&
           a.comp == b.comp;
  }
};

struct LawViolation {
  std::string law;
  std::vector<std::string> witness;
};

inline std::string describe(const LawViolation& v) {
  return v.law + " at (" + detail::join(v.witness, ", ") + ")";
}

/// Checks structure (totality of the tables) and then the category laws,
/// returning the first violation in canonical order.
inline std::optional<LawViolation> first_category_violation(
    const FinCategory& c) {
  for (const auto& m : c.morphisms) {
    if (!c.src.count(m) || !c.tgt.count(m))
      return LawViolation{"endpoints-missing", {m}};
    if (!c.has_object(c.src.at(m)) || !c.has_object(c.tgt.at(m)))
      return LawViolation{"endpoints-unknown", {m}};
  }
  for (const auto& o : c.objects) {
    auto it = c.ids.find(o);
    if (it == c.ids.end() || !c.has_morphism(it->second))
      return LawViolation{"identity-missing", {o}};
    if (c.src.at(it->second) != o || c.tgt.at(it->second) != o)
      return LawViolation{"identity-endpoints", {o, it->second}};
  }
  // comp total on composable pairs, absent elsewhere, endpoint-correct
  for (const auto& f : c.morphisms)
    for (const auto& g : c.morphisms) {
      auto it = c.comp.find({f, g});
      if (c.composable(f, g)) {
        if (it == c.comp.end())
          return LawViolation{"composite-missing", {f, g}};
        if (!c.has_morphism(it->second))
          return LawViolation{"composite-unknown", {f, g, it->second}};
        if (c.src.at(it->second) != c.src.at(f) ||
            c.tgt.at(it->second) != c.tgt.at(g))
          return LawViolation{"composite-endpoints", {f, g, it->second}};
      } else if (it != c.comp.end()) {
        return LawViolation{"composite-not-composable", {f, g}};
      }
    }
  for (const auto& f : c.morphisms) {
    if (c.compose(c.ids.at(c.src.at(f)), f) != f)
      return LawViolation{"left-unit", {c.ids.at(c.src.at(f)), f}};
    if (c.compose(f, c.ids.at(c.tgt.at(f))) != f)
      return LawViolation{"right-unit", {f, c.ids.at(c.tgt.at(f))}};
  }
  for (const auto& f : c.morphisms)
    for (const auto& g : c.morphisms) {
      if (!c.composable(f, g)) continue;
      for (const auto& h : c.morphisms) {
        if (!c.composable(g, h)) continue;
        if (c.compose(c.compose(f, g), h) != c.compose(f, c.compose(g, h)))
          return LawViolation{"associativity", {f, g, h}};
      }
    }
  return std::nullopt;
}

inline void validate(const FinCategory& c) {
  if (auto v = first_category_violation(c))
    throw StructuralError("category '" + c.name + "': " + describe(*v));
}

struct MorphismSpec {
  std::string id;
  std::string src;
  std::string tgt;
};

inline FinCategory make_category(std::string name,
                                 const std::vector<std::string>& objects,
                                 const std::vector<MorphismSpec>& morphisms,
                                 StrMap ids, CompTable comp) {
  FinCategory c;
  c.name = std::move(name);
  c.objects = objects;
  std::sort(c.objects.begin(), c.objects.end());
  for (const auto& m : morphisms) {
    c.morphisms.push_back(m.id);
    c.src[m.id] = m.src;
    c.tgt[m.id] = m.tgt;
  }
  std::sort(c.morphisms.begin(), c.morphisms.end());
  if (std::adjacent_find(c.objects.begin(), c.objects.end()) !=
      c.objects.end())
    throw StructuralError("category '" + c.name + "': duplicate object");
  if (std::adjacent_find(c.morphisms.begin(), c.morphisms.end()) !=
      c.morphisms.end())
    throw StructuralError("category '" + c.name + "': duplicate morphism");
  c.ids = std::move(ids);
  c.comp = std::move(comp);
  validate(c);
  return c;
}

inline FinCategory discrete_category(std::string name,
                                     const std::vector<std::string>& objects) {
  std::vector<MorphismSpec> ms;
  StrMap ids;
  for (const auto& o : objects) {
    ms.push_back({"id(" + o + ")", o, o});
    ids[o] = "id(" + o + ")";
  }
  CompTable comp;
  for (const auto& o : objects)
    comp[{"id(" + o + ")", "id(" + o + ")"}] = "id(" + o + ")";
  return make_category(std::move(name), objects, ms, std::move(ids),
                       std::move(comp));
}

inline FinCategory terminal_category() {
  return discrete_category("1", {"*"});
}

/// Objects become vertices, every morphism (identities included) an edge.
inline FinGraph underlying_graph(const FinCategory& c) {
  FinGraph g;
  g.name = "U(" + c.name + ")";
  for (const auto& o : c.objects) g.add_vertex(o);
  for (const auto& m : c.morphisms) g.add_edge(m, c.src.at(m), c.tgt.at(m));
  return g;
}

// ---------------------------------------------------------------------
// Structure-preserving maps.

struct Functor {
  FinCategory dom;
  FinCategory cod;
  StrMap o_map;
  StrMap m_map;

  friend bool operator==(const Functor& a, const Functor& b) {
    return a.o_map == b.o_map && a.m_map == b.m_map && a.dom == b.dom &&
           a.cod == b.cod;
  }
};

inline bool is_functorial(const FinCategory& c, const FinCategory& d,
                          const StrMap& o_map, const StrMap& m_map,
                          LawViolation* why = nullptr) {
  auto fail = [&](std::string law, std::vector<std::string> w) {
    if (why) *why = LawViolation{std::move(law), std::move(w)};
    return false;
  };
  for (const auto& o : c.objects) {
    auto it = o_map.find(o);
    if (it == o_map.end() || !d.has_object(it->second))
      return fail("object-map", {o});
  }
  for (const auto& m : c.morphisms) {
    auto it = m_map.find(m);
    if (it == m_map.end() || !d.has_morphism(it->second))
      return fail("morphism-map", {m});
    if (d.src.at(it->second) != o_map.at(c.src.at(m)) ||
        d.tgt.at(it->second) != o_map.at(c.tgt.at(m)))
      return fail("endpoint-preservation", {m, it->second});
  }
  for (const auto& o : c.objects)
    if (m_map.at(c.ids.at(o)) != d.ids.at(o_map.at(o)))
      return fail("identity-preservation", {o});
  for (const auto& [pair, fg] : c.comp)
    if (d.compose(m_map.at(pair.first), m_map.at(pair.second)) !=
        m_map.at(fg))
      return fail("composition-preservation", {pair.first, pair.second});
  return true;
}

inline Functor make_functor(FinCategory dom, FinCategory cod, StrMap o_map,
                            StrMap m_map) {
  LawViolation why;
  if (!is_functorial(dom, cod, o_map, m_map, &why))
    throw StructuralError("functor: " + describe(why));
  return Functor{std::move(dom), std::move(cod), std::move(o_map),
                 std::move(m_map)};
}

inline Functor identity_functor(const FinCategory& c) {
  StrMap om, mm;
  for (const auto& o : c.objects) om[o] = o;
  for (const auto& m : c.morphisms) mm[m] = m;
  return Functor{c, c, std::move(om), std::move(mm)};
}

/// Diagrammatic composite: f first, then g.
inline Functor compose(const Functor& f, const Functor& g) {
  if (!(f.cod == g.dom))
    throw PreconditionError("compose: functor codomain/domain mismatch");
  StrMap om, mm;
  for (const auto& [o, fo] : f.o_map) om[o] = g.o_map.at(fo);
  for (const auto& [m, fm] : f.m_map) mm[m] = g.m_map.at(fm);
  return Functor{f.dom, g.cod, std::move(om), std::move(mm)};
}

/// All functors C -> D: object assignments in lexicographic order, then
/// endpoint-consistent morphism assignments (identities forced), filtered
/// by functoriality.
inline std::vector<Functor> enumerate_functors(const FinCategory& c,
                                               const FinCategory& d) {
  std::vector<Functor> out;
  if (!c.objects.empty() && d.objects.empty()) return out;
  std::vector<std::size_t> ocounts(c.objects.size(), d.objects.size());
  detail::for_each_assignment(ocounts, [&](const std::vector<std::size_t>&
                                               opick) {
    StrMap om;
    for (std::size_t i = 0; i < c.objects.size(); ++i)
      om[c.objects[i]] = d.objects[opick[i]];
    std::vector<std::vector<std::string>> cands;
    cands.reserve(c.morphisms.size());
    for (const auto& m : c.morphisms) {
      std::vector<std::string> cm;
      bool forced = false;
      for (const auto& o : c.objects)
        if (c.ids.at(o) == m) {
          cm = {d.ids.at(om.at(o))};
          forced = true;
          break;
        }
      if (!forced) cm = d.hom(om.at(c.src.at(m)), om.at(c.tgt.at(m)));
      if (cm.empty()) return;
      cands.push_back(std::move(cm));
    }
    std::vector<std::size_t> mcounts;
    for (const auto& cm : cands) mcounts.push_back(cm.size());
    detail::for_each_assignment(
        mcounts, [&](const std::vector<std::size_t>& mpick) {
          StrMap mm;
          for (std::size_t i = 0; i < c.morphisms.size(); ++i)
            mm[c.morphisms[i]] = cands[i][mpick[i]];
          if (is_functorial(c, d, om, mm))
            out.push_back(Functor{c, d, om, std::move(mm)});
        });
  });
  return out;
}

/// Isomorphism search: a functor bijective on objects and morphisms; the
/// inverse of such a functor is automatically a functor.
inline std::optional<Functor> find_category_isomorphism(const FinCategory& c,
                                                        const FinCategory& d) {
  if (c.objects.size() != d.objects.size() ||
      c.morphisms.size() != d.morphisms.size())
    return std::nullopt;
  for (const auto& f : enumerate_functors(c, d)) {
    std::vector<std::string> mimg;
    for (const auto& [m, fm] : f.m_map) mimg.push_back(fm);
    std::sort(mimg.begin(), mimg.end());
    mimg.erase(std::unique(mimg.begin(), mimg.end()), mimg.end());
    if (mimg.size() == d.morphisms.size()) return f;
  }
  return std::nullopt;
}

inline bool categories_isomorphic(const FinCategory& c, const FinCategory& d) {
  return find_category_isomorphism(c, d).has_value();
}

/// Disjoint union of categories; names prefixed "0." / "1." on clash,
/// matching graph coproducts.
inline FinCategory coproduct_categories(const FinCategory& a,
                                        const FinCategory& b) {
  bool clash = false;
  for (const auto& o : a.objects)
    if (b.has_object(o)) clash = true;
  for (const auto& m : a.morphisms)
    if (b.has_morphism(m)) clash = true;
  auto ln = [&](const std::string& x) { return clash ? "0." + x : x; };
  auto rn = [&](const std::string& x) { return clash ? "1." + x : x; };
  std::vector<std::string> objects;
  std::vector<MorphismSpec> ms;
  StrMap ids;
  CompTable comp;
  for (const auto& o : a.objects) objects.push_back(ln(o));
  for (const auto& o : b.objects) objects.push_back(rn(o));
  for (const auto& m : a.morphisms)
    ms.push_back({ln(m), ln(a.src.at(m)), ln(a.tgt.at(m))});
  for (const auto& m : b.morphisms)
    ms.push_back({rn(m), rn(b.src.at(m)), rn(b.tgt.at(m))});
  for (const auto& [o, i] : a.ids) ids[ln(o)] = ln(i);
  for (const auto& [o, i] : b.ids) ids[rn(o)] = rn(i);
  for (const auto& [p, v] : a.comp) comp[{ln(p.first), ln(p.second)}] = ln(v);
  for (const auto& [p, v] : b.comp) comp[{rn(p.first), rn(p.second)}] = rn(v);
  return make_category(a.name + "+" + b.name, objects, ms, std::move(ids),
                       std::move(comp));
}

// ---------------------------------------------------------------------
// Free categories.

/// Depth-first search for a directed cycle; returns its edge sequence.
inline std::optional<std::vector<std::string>> find_cycle(const FinGraph& g) {
  enum class Mark { White, Grey, Black };
  std::map<std::string, Mark> mark;
  for (const auto& v : g.vertices) mark[v] = Mark::White;
  std::vector<std::string> stack;  // edges along the current dfs path
  std::optional<std::vector<std::string>> found;

  auto dfs = [&](auto&& self, const std::string& v) -> bool {
    mark[v] = Mark::Grey;
    for (const auto& e : g.edges) {
      if (g.src.at(e) != v) continue;
      const std::string& w = g.tgt.at(e);
      if (mark[w] == Mark::Grey) {
        // unwind to the first edge leaving w
        std::vector<std::string> cyc;
        cyc.push_back(e);
        for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
          cyc.insert(cyc.begin(), *it);
          if (g.src.at(*it) == w) break;
        }
        found = cyc;
        return true;
      }
      if (mark[w] == Mark::White) {
        stack.push_back(e);
        if (self(self, w)) return true;
        stack.pop_back();
      }
    }
    mark[v] = Mark::Black;
    return false;
  };
  for (const auto& v : g.vertices)
    if (mark[v] == Mark::White && dfs(dfs, v)) return found;
  return std::nullopt;
}

struct PathEnumeration {
  std::vector<Path> paths;  // length-lex order
  bool truncated;           // true iff some length-max_len path extends
};

/// All paths of length <= max_len, one empty path per vertex included.
inline PathEnumeration free_paths(const FinGraph& g, std::size_t max_len) {
  PathEnumeration out{{}, false};
  std::vector<Path> frontier;
  for (const auto& v : g.vertices) frontier.push_back(Path{v, {}});
  out.paths = frontier;
  for (std::size_t len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<Path> next;
    for (const auto& p : frontier) {
      const std::string at = path_end(g, p);
      for (const auto& e : g.edges) {
        if (g.src.at(e) != at) continue;
        Path q = p;
        q.edges.push_back(e);
        next.push_back(std::move(q));
      }
    }
    out.paths.insert(out.paths.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  for (const auto& p : frontier) {
    const std::string at = path_end(g, p);
    for (const auto& e : g.edges)
      if (g.src.at(e) == at) {
        out.truncated = true;
        break;
      }
    if (out.truncated) break;
  }
  std::sort(out.paths.begin(), out.paths.end(), path_less);
  return out;
}

/// The free category on an acyclic graph: objects are vertices, morphisms
/// all paths named "id(v)" / "e1.e2...", composition is concatenation.
/// Cyclic input raises AcyclicityError with a witness cycle.
inline FinCategory free_category(const FinGraph& g) {
  if (auto cyc = find_cycle(g))
    throw AcyclicityError("free category on '" + g.name +
                              "' is infinite: directed cycle [" +
                              detail::join(*cyc, ", ") + "]",
                          *cyc);
  // longest simple path in a dag has < |V| edges
  std::size_t bound = g.vertices.empty() ? 0 : g.vertices.size() - 1;
  PathEnumeration pe = free_paths(g, bound);

  std::vector<MorphismSpec> ms;
  StrMap ids;
  for (const auto& p : pe.paths) {
    ms.push_back({path_name(p), p.start, path_end(g, p)});
    if (p.empty()) ids[p.start] = path_name(p);
  }
  CompTable comp;
  for (const auto& p : pe.paths)
    for (const auto& q : pe.paths) {
      if (path_end(g, p) != q.start) continue;
      comp[{path_name(p), path_name(q)}] = path_name(concat(g, p, q));
    }
  return make_category("F(" + g.name + ")", g.vertices, ms, std::move(ids),
                       std::move(comp));
}

// ---------------------------------------------------------------------
// The adjunction transpose.

/// A graph morphism G -> U(C) in its multiplicative form: the unique
/// extension to paths. This is the transpose bijection
/// Cat(F(G), C) = Gr(G, U(C)) in executable form; it stays finite even
/// when F(G) is not.
struct PathAssignment {
  FinGraph dom_graph;
  FinCategory cod;
  StrMap v_map;  // vertex -> object
  StrMap e_map;  // edge -> morphism

  std::string apply_vertex(const std::string& v) const { return v_map.at(v); }

  std::string apply_path(const Path& p) const {
    validate_path(dom_graph, p);
    if (p.empty()) return cod.ids.at(v_map.at(p.start));
    std::string acc = e_map.at(p.edges.front());
    for (std::size_t i = 1; i < p.edges.size(); ++i)
      acc = cod.compose(acc, e_map.at(p.edges[i]));
    return acc;
  }
};

inline PathAssignment transpose_to_functor(const GraphMorphism& phi,
                                           const FinCategory& c) {
  if (!(phi.cod == underlying_graph(c)))
    throw PreconditionError(
        "transpose_to_functor: codomain is not the underlying graph of the "
        "category");
  return PathAssignment{phi.dom, c, phi.v_map, phi.e_map};
}

/// The other direction of the transpose: restrict a functor out of a free
/// category to the generating graph.
inline GraphMorphism restrict_to_generators(const Functor& f,
                                            const FinGraph& g) {
  StrMap vm, em;
  for (const auto& v : g.vertices) vm[v] = f.o_map.at(v);
  for (const auto& e : g.edges) em[e] = f.m_map.at(e);
  return GraphMorphism{g, underlying_graph(f.cod), std::move(vm),
                       std::move(em)};
}

/// Materialize an assignment as an honest functor out of free_category(G);
/// only possible when the generating graph is acyclic.
inline Functor to_functor(const PathAssignment& pa) {
  FinCategory fc = free_category(pa.dom_graph);
  std::size_t bound =
      pa.dom_graph.vertices.empty() ? 0 : pa.dom_graph.vertices.size() - 1;
  StrMap om = pa.v_map, mm;
  for (const auto& p : free_paths(pa.dom_graph, bound).paths)
    mm[path_name(p)] = pa.apply_path(p);
  return make_functor(std::move(fc), pa.cod, std::move(om), std::move(mm));
}

}  // namespace fincat
