// Cellwise limits and colimits of finite graphs: (co)products,
// (co)equalizers, pushouts and pullbacks, each with its structure maps.

#pragma once

#include <string>
#include <vector>

#include "fincat/graph.hpp"
#include "fincat/util.hpp"

namespace fincat {

struct Coproduct {
  FinGraph graph;
  GraphMorphism in_left;
  GraphMorphism in_right;
};

struct Quotient {
  FinGraph graph;
  GraphMorphism q;
};

struct Pushout {
  FinGraph graph;
  GraphMorphism in_left;   // from f.cod
  GraphMorphism in_right;  // from g.cod
};

struct Product {
  FinGraph graph;
  GraphMorphism proj_left;
  GraphMorphism proj_right;
};

struct Pullback {
  FinGraph graph;
  GraphMorphism proj_left;   // to f.dom
  GraphMorphism proj_right;  // to g.dom
};

struct Equalizer {
  FinGraph graph;
  GraphMorphism include;
};

namespace detail {

inline bool names_disjoint(const std::vector<std::string>& a,
                           const std::vector<std::string>& b) {
  for (const auto& x : a)
    if (std::binary_search(b.begin(), b.end(), x)) return false;
  return true;
}

}  // namespace detail

/// Disjoint union. Cell names are kept when the two graphs do not clash;
/// otherwise every name is prefixed "0." / "1.".
inline Coproduct coproduct(const FinGraph& a, const FinGraph& b) {
  bool clash = !detail::names_disjoint(a.vertices, b.vertices) ||
               !detail::names_disjoint(a.edges, b.edges);
  auto lname = [&](const std::string& x) { return clash ? "0." + x : x; };
  auto rname = [&](const std::string& x) { return clash ? "1." + x : x; };

  FinGraph g;
  g.name = a.name + "+" + b.name;
  StrMap lv, le, rv, re;
  for (const auto& v : a.vertices) {
    g.add_vertex(lname(v));
    lv[v] = lname(v);
  }
  for (const auto& v : b.vertices) {
    g.add_vertex(rname(v));
    rv[v] = rname(v);
  }
  for (const auto& e : a.edges) {
    g.add_edge(lname(e), lv.at(a.src.at(e)), lv.at(a.tgt.at(e)));
    le[e] = lname(e);
  }
  for (const auto& e : b.edges) {
    g.add_edge(rname(e), rv.at(b.src.at(e)), rv.at(b.tgt.at(e)));
    re[e] = rname(e);
  }
  return Coproduct{g, GraphMorphism{a, g, std::move(lv), std::move(le)},
                   GraphMorphism{b, g, std::move(rv), std::move(re)}};
}

namespace detail {

// Quotient of a graph by generating pairs, cellwise. Each class is named
// by its lexicographically least member.
inline Quotient quotient_graph(const FinGraph& g,
                               const std::vector<PairKey>& vertex_pairs,
                               const std::vector<PairKey>& edge_pairs) {
  NamedUnionFind vuf, euf;
  for (const auto& v : g.vertices) vuf.add(v);
  for (const auto& e : g.edges) euf.add(e);
  for (const auto& [x, y] : vertex_pairs) vuf.unite(x, y);
  for (const auto& [x, y] : edge_pairs) {
    euf.unite(x, y);
    // identified edges force identified endpoints
    vuf.unite(g.src.at(x), g.src.at(y));
    vuf.unite(g.tgt.at(x), g.tgt.at(y));
  }
  FinGraph q;
  q.name = g.name + "/~";
  StrMap vm, em;
  for (const auto& v : g.vertices) {
    vm[v] = vuf.find(v);
    if (vm[v] == v) q.add_vertex(v);
  }
  for (const auto& e : g.edges) {
    em[e] = euf.find(e);
    if (em[e] == e) q.add_edge(e, vm.at(g.src.at(e)), vm.at(g.tgt.at(e)));
  }
  return Quotient{q, GraphMorphism{g, q, std::move(vm), std::move(em)}};
}

}  // namespace detail

/// Coequalizer of a parallel pair f, g : A => B, computed cellwise:
/// the quotient of B by f(x) ~ g(x) on both sorts.
inline Quotient coequalizer_graphs(const GraphMorphism& f,
                                   const GraphMorphism& g) {
  if (!(f.dom == g.dom) || !(f.cod == g.cod))
    throw PreconditionError("coequalizer: maps are not a parallel pair");
  std::vector<PairKey> vp, ep;
  for (const auto& v : f.dom.vertices)
    vp.push_back({f.v_map.at(v), g.v_map.at(v)});
  for (const auto& e : f.dom.edges)
    ep.push_back({f.e_map.at(e), g.e_map.at(e)});
  return detail::quotient_graph(f.cod, vp, ep);
}

/// Pushout of f : X -> A and g : X -> B over their common domain X:
/// coproduct then coequalize the two images of X.
inline Pushout pushout(const GraphMorphism& f, const GraphMorphism& g) {
  if (!(f.dom == g.dom))
    throw PreconditionError("pushout: maps do not share a domain");
  Coproduct cp = coproduct(f.cod, g.cod);
  std::vector<PairKey> vp, ep;
  for (const auto& v : f.dom.vertices)
    vp.push_back({cp.in_left.v_map.at(f.v_map.at(v)),
                  cp.in_right.v_map.at(g.v_map.at(v))});
  for (const auto& e : f.dom.edges)
    ep.push_back({cp.in_left.e_map.at(f.e_map.at(e)),
                  cp.in_right.e_map.at(g.e_map.at(e))});
  Quotient q = detail::quotient_graph(cp.graph, vp, ep);
  return Pushout{q.graph, compose(cp.in_left, q.q), compose(cp.in_right, q.q)};
}

/// Cellwise product; cells are pairs, named "(x,y)".
inline Product product(const FinGraph& a, const FinGraph& b) {
  FinGraph g;
  g.name = a.name + "x" + b.name;
  auto pname = [](const std::string& x, const std::string& y) {
    return "(" + x + "," + y + ")";
  };
  StrMap pl_v, pr_v, pl_e, pr_e;
  for (const auto& x : a.vertices)
    for (const auto& y : b.vertices) {
      g.add_vertex(pname(x, y));
      pl_v[pname(x, y)] = x;
      pr_v[pname(x, y)] = y;
    }
  for (const auto& e : a.edges)
    for (const auto& d : b.edges) {
      const std::string n = pname(e, d);
      g.add_edge(n, pname(a.src.at(e), b.src.at(d)),
                 pname(a.tgt.at(e), b.tgt.at(d)));
      pl_e[n] = e;
      pr_e[n] = d;
    }
  return Product{g, GraphMorphism{g, a, pl_v, pl_e},
                 GraphMorphism{g, b, pr_v, pr_e}};
}

/// Pullback of f : A -> C and g : B -> C: pairs of cells agreeing in C.
inline Pullback pullback(const GraphMorphism& f, const GraphMorphism& g) {
  if (!(f.cod == g.cod))
    throw PreconditionError("pullback: maps do not share a codomain");
  FinGraph p;
  p.name = f.dom.name + "x_" + g.dom.name;
  auto pname = [](const std::string& x, const std::string& y) {
    return "(" + x + "," + y + ")";
  };
  StrMap pl_v, pr_v, pl_e, pr_e;
  for (const auto& x : f.dom.vertices)
    for (const auto& y : g.dom.vertices)
      if (f.v_map.at(x) == g.v_map.at(y)) {
        p.add_vertex(pname(x, y));
        pl_v[pname(x, y)] = x;
        pr_v[pname(x, y)] = y;
      }
  for (const auto& e : f.dom.edges)
    for (const auto& d : g.dom.edges)
      if (f.e_map.at(e) == g.e_map.at(d)) {
        const std::string n = pname(e, d);
        p.add_edge(n, pname(f.dom.src.at(e), g.dom.src.at(d)),
                   pname(f.dom.tgt.at(e), g.dom.tgt.at(d)));
        pl_e[n] = e;
        pr_e[n] = d;
      }
  return Pullback{p, GraphMorphism{p, f.dom, pl_v, pl_e},
                  GraphMorphism{p, g.dom, pr_v, pr_e}};
}

/// Equalizer of a parallel pair: the subgraph of the domain where f = g.
/// Edges with equal images automatically have endpoints in the vertex part.
inline Equalizer equalizer(const GraphMorphism& f, const GraphMorphism& g) {
  if (!(f.dom == g.dom) || !(f.cod == g.cod))
    throw PreconditionError("equalizer: maps are not a parallel pair");
  FinGraph e;
  e.name = "eq(" + f.dom.name + ")";
  StrMap vm, em;
  for (const auto& v : f.dom.vertices)
    if (f.v_map.at(v) == g.v_map.at(v)) {
      e.add_vertex(v);
      vm[v] = v;
    }
  for (const auto& d : f.dom.edges)
    if (f.e_map.at(d) == g.e_map.at(d)) {
      e.add_edge(d, f.dom.src.at(d), f.dom.tgt.at(d));
      em[d] = d;
    }
  return Equalizer{e, GraphMorphism{e, f.dom, std::move(vm), std::move(em)}};
}

}  // namespace fincat
