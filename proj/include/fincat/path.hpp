// Paths over a finite graph: the morphisms of the free category.

#pragma once

#include <string>
#include <vector>

#include "fincat/error.hpp"
#include "fincat/graph.hpp"
#include "fincat/util.hpp"

namespace fincat {

/// A composable edge sequence with an explicit start vertex; an empty
/// sequence denotes the identity at `start`. Paths are read left to
/// right: the first edge is traversed first.
struct Path {
  std::string start;
  std::vector<std::string> edges;

  std::size_t length() const { return edges.size(); }
  bool empty() const { return edges.empty(); }

  friend bool operator==(const Path& a, const Path& b) {
    return a.start == b.start && a.edges == b.edges;
  }
};

inline void validate_path(const FinGraph& g, const Path& p) {
  if (!g.has_vertex(p.start))
    throw StructuralError("path: unknown start vertex '" + p.start + "'");
  std::string at = p.start;
  for (const auto& e : p.edges) {
    if (!g.has_edge(e))
      throw StructuralError("path: unknown edge '" + e + "'");
    if (g.src.at(e) != at)
      throw StructuralError("path: edge '" + e + "' does not continue from '" +
                            at + "'");
    at = g.tgt.at(e);
  }
}

inline std::string path_end(const FinGraph& g, const Path& p) {
  return p.edges.empty() ? p.start : g.tgt.at(p.edges.back());
}

inline Path concat(const FinGraph& g, const Path& p, const Path& q) {
  if (path_end(g, p) != q.start)
    throw PreconditionError("concat: paths are not composable");
  Path r{p.start, p.edges};
  r.edges.insert(r.edges.end(), q.edges.begin(), q.edges.end());
  return r;
}

/// Display / morphism-name form: "id(v)" for the empty path, otherwise
/// the edge names joined with '.'.
inline std::string path_name(const Path& p) {
  if (p.edges.empty()) return "id(" + p.start + ")";
  return detail::join(p.edges, ".");
}

// Internal key, collision-free even when edge names contain dots.
inline std::string path_key(const Path& p) {
  std::string k = p.start;
  for (const auto& e : p.edges) {
    k += '\x1f';
    k += e;
  }
  return k;
}

/// Length first, then start vertex, then the edge sequence: the order
/// that makes class representatives canonical normal forms.
inline bool path_less(const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.start != b.start) return a.start < b.start;
  return a.edges < b.edges;
}

}  // namespace fincat
