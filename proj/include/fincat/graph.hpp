// Finite directed multigraphs, graph morphisms, representable graphs,
// path graphs, hom-set enumeration and composable edge sequences.

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "fincat/error.hpp"
#include "fincat/util.hpp"

namespace fincat {

/// A finite directed multigraph. Vertex and edge identifiers are strings,
/// unique per sort, and kept in lexicographic order so that every
/// enumeration downstream is reproducible.
struct FinGraph {
  std::string name = "G";
  std::vector<std::string> vertices;
  std::vector<std::string> edges;
  StrMap src;
  StrMap tgt;

  bool has_vertex(const std::string& v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
  }
  bool has_edge(const std::string& e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
  }

  void add_vertex(const std::string& v) {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it != vertices.end() && *it == v)
      throw StructuralError("duplicate vertex '" + v + "' in graph '" + name +
                            "'");
    vertices.insert(it, v);
  }

  void add_edge(const std::string& e, const std::string& s,
                const std::string& t) {
    if (!has_vertex(s))
      throw StructuralError("edge '" + e + "': unknown source vertex '" + s +
                            "' in graph '" + name + "'");
    if (!has_vertex(t))
      throw StructuralError("edge '" + e + "': unknown target vertex '" + t +
                            "' in graph '" + name + "'");
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it != edges.end() && *it == e)
      throw StructuralError("duplicate edge '" + e + "' in graph '" + name +
                            "'");
    edges.insert(it, e);
    src[e] = s;
    tgt[e] = t;
  }

  std::vector<std::string> edges_from(const std::string& v) const {
    std::vector<std::string> out;
    for (const auto& e : edges)
      if (src.at(e) == v) out.push_back(e);
    return out;
  }

  std::vector<std::string> edges_between(const std::string& s,
                                         const std::string& t) const {
    std::vector<std::string> out;
    for (const auto& e : edges)
      if (src.at(e) == s && tgt.at(e) == t) out.push_back(e);
    return out;
  }

  friend bool operator==(const FinGraph& a, const FinGraph& b) {
    return a.vertices == b.vertices && a.edges == b.edges && a.src == b.src &&
           a.tgt == b.tgt;
  }
};

struct EdgeSpec {
  std::string id;
  std::string src;
  std::string tgt;
};

inline FinGraph make_graph(std::string name,
                           const std::vector<std::string>& vertices,
                           const std::vector<EdgeSpec>& edges) {
  FinGraph g;
  g.name = std::move(name);
  for (const auto& v : vertices) g.add_vertex(v);
  for (const auto& e : edges) g.add_edge(e.id, e.src, e.tgt);
  return g;
}

/// A morphism of graphs: vertex and edge maps commuting with src/tgt.
struct GraphMorphism {
  FinGraph dom;
  FinGraph cod;
  StrMap v_map;
  StrMap e_map;

  friend bool operator==(const GraphMorphism& a, const GraphMorphism& b) {
    return a.v_map == b.v_map && a.e_map == b.e_map && a.dom == b.dom &&
           a.cod == b.cod;
  }
};

inline GraphMorphism make_morphism(FinGraph dom, FinGraph cod, StrMap v_map,
                                   StrMap e_map) {
  GraphMorphism m{std::move(dom), std::move(cod), std::move(v_map),
                  std::move(e_map)};
  for (const auto& v : m.dom.vertices) {
    auto it = m.v_map.find(v);
    if (it == m.v_map.end())
      throw StructuralError("morphism: vertex '" + v + "' unmapped");
    if (!m.cod.has_vertex(it->second))
      throw StructuralError("morphism: vertex '" + v +
                            "' maps to unknown vertex '" + it->second + "'");
  }
  for (const auto& e : m.dom.edges) {
    auto it = m.e_map.find(e);
    if (it == m.e_map.end())
      throw StructuralError("morphism: edge '" + e + "' unmapped");
    if (!m.cod.has_edge(it->second))
      throw StructuralError("morphism: edge '" + e +
                            "' maps to unknown edge '" + it->second + "'");
    const std::string& img = it->second;
    if (m.v_map.at(m.dom.src.at(e)) != m.cod.src.at(img) ||
        m.v_map.at(m.dom.tgt.at(e)) != m.cod.tgt.at(img))
      throw StructuralError("morphism: edge '" + e +
                            "' does not commute with src/tgt");
  }
  return m;
}

inline GraphMorphism identity_morphism(const FinGraph& g) {
  StrMap vm, em;
  for (const auto& v : g.vertices) vm[v] = v;
  for (const auto& e : g.edges) em[e] = e;
  return GraphMorphism{g, g, std::move(vm), std::move(em)};
}

/// Diagrammatic composite: f first, then g. Requires f.cod == g.dom.
inline GraphMorphism compose(const GraphMorphism& f, const GraphMorphism& g) {
  if (!(f.cod == g.dom))
    throw PreconditionError("compose: codomain/domain mismatch");
  StrMap vm, em;
  for (const auto& [v, fv] : f.v_map) vm[v] = g.v_map.at(fv);
  for (const auto& [e, fe] : f.e_map) em[e] = g.e_map.at(fe);
  return GraphMorphism{f.dom, g.cod, std::move(vm), std::move(em)};
}

enum class Cell { Zero, One };

/// The two representable graphs: a point, and a single arrow a -> b.
inline FinGraph representable(Cell cell) {
  if (cell == Cell::Zero) return make_graph("r0", {"a"}, {});
  return make_graph("r1", {"a", "b"}, {{"e", "a", "b"}});
}

/// The path graph a0 -> a1 -> ... -> an, with edges e1..en.
inline FinGraph path_graph(std::size_t n) {
  FinGraph g;
  g.name = "path" + std::to_string(n);
  for (std::size_t i = 0; i <= n; ++i)
    g.add_vertex("a" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i)
    g.add_edge("e" + std::to_string(i), "a" + std::to_string(i - 1),
               "a" + std::to_string(i));
  return g;
}

/// Every graph morphism A -> B, by exhaustive search: vertex assignments
/// in lexicographic order, then compatible edge assignments. The empty
/// set is a legitimate result.
inline std::vector<GraphMorphism> hom_graphs(const FinGraph& a,
                                             const FinGraph& b) {
  std::vector<GraphMorphism> out;
  if (!a.vertices.empty() && b.vertices.empty()) return out;

  std::vector<std::size_t> vcounts(a.vertices.size(), b.vertices.size());
  detail::for_each_assignment(vcounts, [&](const std::vector<std::size_t>&
                                               vpick) {
    StrMap vm;
    for (std::size_t i = 0; i < a.vertices.size(); ++i)
      vm[a.vertices[i]] = b.vertices[vpick[i]];

    // Candidate images per edge; bail out early when one is empty.
    std::vector<std::vector<std::string>> cands;
    cands.reserve(a.edges.size());
    for (const auto& e : a.edges) {
      auto c = b.edges_between(vm.at(a.src.at(e)), vm.at(a.tgt.at(e)));
      if (c.empty()) return;
      cands.push_back(std::move(c));
    }
    std::vector<std::size_t> ecounts;
    for (const auto& c : cands) ecounts.push_back(c.size());
    detail::for_each_assignment(
        ecounts, [&](const std::vector<std::size_t>& epick) {
          StrMap em;
          for (std::size_t i = 0; i < a.edges.size(); ++i)
            em[a.edges[i]] = cands[i][epick[i]];
          out.push_back(GraphMorphism{a, b, vm, std::move(em)});
        });
  });
  return out;
}

/// All tuples (e1,...,en) of edges with tgt(e_i) = src(e_{i+1}).
inline std::vector<std::vector<std::string>> composable_sequences(
    std::size_t n, const FinGraph& g) {
  if (n == 0)
    throw PreconditionError("composable_sequences: n must be >= 1");
  std::vector<std::vector<std::string>> out;
  std::vector<std::string> cur;
  auto extend = [&](auto&& self, const std::string& at) -> void {
    if (cur.size() == n) {
      out.push_back(cur);
      return;
    }
    for (const auto& e : g.edges) {
      if (g.src.at(e) != at) continue;
      cur.push_back(e);
      self(self, g.tgt.at(e));
      cur.pop_back();
    }
  };
  for (const auto& e : g.edges) {
    cur.push_back(e);
    extend(extend, g.tgt.at(e));
    cur.pop_back();
  }
  return out;
}

/// Exhaustive isomorphism search. A vertex bijection extends to an edge
/// bijection iff the endpoint-pair multisets agree, so edges are matched
/// greedily within each endpoint group.
inline std::optional<GraphMorphism> find_graph_isomorphism(const FinGraph& a,
                                                           const FinGraph& b) {
  if (a.vertices.size() != b.vertices.size() ||
      a.edges.size() != b.edges.size())
    return std::nullopt;
  std::vector<std::size_t> perm(b.vertices.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  do {
    StrMap vm;
    for (std::size_t i = 0; i < a.vertices.size(); ++i)
      vm[a.vertices[i]] = b.vertices[perm[i]];
    // group A-edges and B-edges by (mapped) endpoints
    std::map<PairKey, std::vector<std::string>> ga, gb;
    for (const auto& e : a.edges)
      ga[{vm.at(a.src.at(e)), vm.at(a.tgt.at(e))}].push_back(e);
    for (const auto& e : b.edges)
      gb[{b.src.at(e), b.tgt.at(e)}].push_back(e);
    bool ok = ga.size() == gb.size();
    StrMap em;
    if (ok) {
      for (const auto& [k, as] : ga) {
        auto it = gb.find(k);
        if (it == gb.end() || it->second.size() != as.size()) {
          ok = false;
          break;
        }
        for (std::size_t i = 0; i < as.size(); ++i) em[as[i]] = it->second[i];
      }
    }
    if (ok) return GraphMorphism{a, b, std::move(vm), std::move(em)};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

inline bool graphs_isomorphic(const FinGraph& a, const FinGraph& b) {
  return find_graph_isomorphism(a, b).has_value();
}

}  // namespace fincat
