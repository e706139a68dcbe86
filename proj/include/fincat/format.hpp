// Line-based text formats: graphs, categories, models, presentations and
// spans of graph morphisms. '#' starts a comment; identifiers carry no
// whitespace and no '.', which is reserved for path expressions.

#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "fincat/category.hpp"
#include "fincat/error.hpp"
#include "fincat/graph.hpp"
#include "fincat/model.hpp"
#include "fincat/path.hpp"
#include "fincat/presentation.hpp"
#include "fincat/util.hpp"

namespace fincat {
namespace detail {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

inline std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t n = 0;
  while (std::getline(in, raw)) {
    ++n;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line{n, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] inline void parse_fail(const std::string& file, std::size_t line,
                                    const std::string& msg) {
  throw ParseError(file + ":" + std::to_string(line) + ": " + msg);
}

inline void check_identifier(const std::string& file, std::size_t line,
                             const std::string& id) {
  if (id.find('.') != std::string::npos)
    parse_fail(file, line, "identifier '" + id + "' may not contain '.'");
}

// Parses one `graph <name>` block starting at lines[i]; leaves i at the
// first line after the block.
inline FinGraph parse_graph_block(const std::string& file,
                                  const std::vector<Line>& lines,
                                  std::size_t& i) {
  if (i >= lines.size() || lines[i].tokens[0] != "graph" ||
      lines[i].tokens.size() != 2)
    parse_fail(file, i < lines.size() ? lines[i].number : 0,
               "expected 'graph <name>'");
  FinGraph g;
  g.name = lines[i].tokens[1];
  ++i;
  for (; i < lines.size(); ++i) {
    const auto& t = lines[i].tokens;
    try {
      if (t[0] == "vertex" && t.size() == 2) {
        check_identifier(file, lines[i].number, t[1]);
        g.add_vertex(t[1]);
      } else if (t[0] == "edge" && t.size() == 6 && t[2] == ":" &&
                 t[4] == "->") {
        check_identifier(file, lines[i].number, t[1]);
        g.add_edge(t[1], t[3], t[5]);
      } else if (t[0] == "vertex" || t[0] == "edge") {
        parse_fail(file, lines[i].number,
                   "malformed '" + t[0] + "' line; expected 'vertex <id>' or "
                   "'edge <id> : <src> -> <tgt>'");
      } else {
        break;  // start of the next section
      }
    } catch (const StructuralError& e) {
      parse_fail(file, lines[i].number, e.what());
    }
  }
  return g;
}

}  // namespace detail

// ---------------------------------------------------------------------
// Graphs.

inline FinGraph parse_graph(const std::string& text,
                            const std::string& file = "<graph>") {
  auto lines = detail::tokenize(text);
  if (lines.empty()) detail::parse_fail(file, 0, "empty graph file");
  std::size_t i = 0;
  FinGraph g = detail::parse_graph_block(file, lines, i);
  if (i < lines.size())
    detail::parse_fail(file, lines[i].number,
                       "unexpected line after graph block: '" +
                           lines[i].tokens[0] + "'");
  return g;
}

inline std::string write_graph(const FinGraph& g) {
  std::string out = "graph " + g.name + "\n";
  for (const auto& v : g.vertices) out += "vertex " + v + "\n";
  for (const auto& e : g.edges)
    out += "edge " + e + " : " + g.src.at(e) + " -> " + g.tgt.at(e) + "\n";
  return out;
}

/// Path expression over a graph: "id(<vertex>)" or edge names joined
/// with '.'.
inline Path parse_path_expr(const std::string& expr, const FinGraph& g,
                            const std::string& file = "<path>",
                            std::size_t line = 0) {
  if (expr.size() > 4 && expr.substr(0, 3) == "id(" && expr.back() == ')') {
    std::string v = expr.substr(3, expr.size() - 4);
    if (!g.has_vertex(v))
      detail::parse_fail(file, line, "unknown vertex '" + v + "' in path");
    return Path{v, {}};
  }
  std::vector<std::string> edges;
  std::string cur;
  for (char c : expr) {
    if (c == '.') {
      edges.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  edges.push_back(cur);
  for (const auto& e : edges)
    if (e.empty() || !g.has_edge(e))
      detail::parse_fail(file, line, "unknown edge '" + e + "' in path '" +
                                         expr + "'");
  Path p{g.src.at(edges.front()), edges};
  try {
    validate_path(g, p);
  } catch (const StructuralError& e) {
    detail::parse_fail(file, line, e.what());
  }
  return p;
}

// ---------------------------------------------------------------------
// Categories.

inline FinCategory parse_category(const std::string& text,
                                  const std::string& file = "<category>") {
  auto lines = detail::tokenize(text);
  if (lines.empty()) detail::parse_fail(file, 0, "empty category file");
  std::size_t i = 0;
  FinGraph g = detail::parse_graph_block(file, lines, i);
  StrMap ids;
  CompTable comp;
  for (; i < lines.size(); ++i) {
    const auto& t = lines[i].tokens;
    if (t[0] == "id" && t.size() == 4 && t[2] == "=") {
      if (!g.has_vertex(t[1]))
        detail::parse_fail(file, lines[i].number,
                           "id for unknown object '" + t[1] + "'");
      if (!g.has_edge(t[3]))
        detail::parse_fail(file, lines[i].number,
                           "id is unknown morphism '" + t[3] + "'");
      ids[t[1]] = t[3];
    } else if (t[0] == "comp" && t.size() == 6 && t[2] == "=" && t[4] == ".") {
      // comp <h> = <g> . <f>  means h = g after f
      const std::string &h = t[1], &gg = t[3], &f = t[5];
      for (const auto& m : {h, gg, f})
        if (!g.has_edge(m))
          detail::parse_fail(file, lines[i].number,
                             "unknown morphism '" + m + "' in comp line");
      comp[{f, gg}] = h;
    } else {
      detail::parse_fail(file, lines[i].number,
                         "expected 'id <obj> = <morph>' or "
                         "'comp <h> = <g> . <f>'");
    }
  }
  FinCategory c;
  c.name = g.name;
  c.objects = g.vertices;
  c.morphisms = g.edges;
  c.src = g.src;
  c.tgt = g.tgt;
  c.ids = std::move(ids);
  c.comp = std::move(comp);
  if (auto v = first_category_violation(c))
    throw ParseError(file + ": category law violated: " + describe(*v));
  return c;
}

inline std::string write_category(const FinCategory& c) {
  std::string out = "graph " + c.name + "\n";
  for (const auto& o : c.objects) out += "vertex " + o + "\n";
  for (const auto& m : c.morphisms)
    out += "edge " + m + " : " + c.src.at(m) + " -> " + c.tgt.at(m) + "\n";
  for (const auto& [o, i] : c.ids) out += "id " + o + " = " + i + "\n";
  for (const auto& [p, h] : c.comp)
    out += "comp " + h + " = " + p.second + " . " + p.first + "\n";
  return out;
}

// ---------------------------------------------------------------------
// Models.

inline ModelData parse_model(const std::string& text,
                             const std::string& file = "<model>") {
  auto lines = detail::tokenize(text);
  if (lines.empty()) detail::parse_fail(file, 0, "empty model file");
  std::size_t i = 0;
  ModelData m;
  m.carrier = detail::parse_graph_block(file, lines, i);
  StrMap inv;
  bool has_inv = false;
  for (; i < lines.size(); ++i) {
    const auto& t = lines[i].tokens;
    auto need_edge = [&](const std::string& e) {
      if (!m.carrier.has_edge(e))
        detail::parse_fail(file, lines[i].number,
                           "unknown edge '" + e + "'");
    };
    if (t[0] == "unit" && t.size() == 4 && t[2] == "=") {
      if (!m.carrier.has_vertex(t[1]))
        detail::parse_fail(file, lines[i].number,
                           "unit for unknown vertex '" + t[1] + "'");
      need_edge(t[3]);
      m.unit[t[1]] = t[3];
    } else if (t[0] == "comp" && t.size() == 6 && t[2] == "after" &&
               t[4] == "=") {
      // comp <g> after <f> = <h>  means g after f = h
      need_edge(t[1]);
      need_edge(t[3]);
      need_edge(t[5]);
      m.comp[{t[3], t[1]}] = t[5];
    } else if (t[0] == "inv" && t.size() == 4 && t[2] == "=") {
      need_edge(t[1]);
      need_edge(t[3]);
      inv[t[1]] = t[3];
      has_inv = true;
    } else {
      detail::parse_fail(file, lines[i].number,
                         "expected 'unit <vertex> = <edge>', "
                         "'comp <g> after <f> = <h>' or 'inv <f> = <g>'");
    }
  }
  if (has_inv) m.inv = std::move(inv);
  return m;
}

inline std::string write_model(const ModelData& m) {
  std::string out = write_graph(m.carrier);
  for (const auto& [v, e] : m.unit) out += "unit " + v + " = " + e + "\n";
  for (const auto& [p, h] : m.comp)
    out += "comp " + p.second + " after " + p.first + " = " + h + "\n";
  if (m.inv)
    for (const auto& [e, ie] : *m.inv) out += "inv " + e + " = " + ie + "\n";
  return out;
}

// ---------------------------------------------------------------------
// Presentations.

inline Presentation parse_presentation(
    const std::string& text, const std::string& file = "<presentation>") {
  auto lines = detail::tokenize(text);
  if (lines.empty()) detail::parse_fail(file, 0, "empty presentation file");
  std::size_t i = 0;
  Presentation p;
  p.name = file;
  p.relations = detail::parse_graph_block(file, lines, i);
  if (p.relations.name != "relations")
    detail::parse_fail(file, lines.front().number,
                       "first graph block must be named 'relations'");
  std::size_t gen_at = i;
  p.generators = detail::parse_graph_block(file, lines, i);
  if (p.generators.name != "generators")
    detail::parse_fail(file, lines[gen_at].number,
                       "second graph block must be named 'generators'");
  for (; i < lines.size(); ++i) {
    const auto& t = lines[i].tokens;
    if ((t[0] == "alpha" || t[0] == "beta") && t.size() == 4 && t[2] == "=") {
      PathMap& leg = t[0] == "alpha" ? p.alpha : p.beta;
      if (p.relations.has_vertex(t[1])) {
        if (!p.generators.has_vertex(t[3]))
          detail::parse_fail(file, lines[i].number,
                             "unknown generator vertex '" + t[3] + "'");
        leg.v_map[t[1]] = t[3];
      } else if (p.relations.has_edge(t[1])) {
        leg.e_map[t[1]] =
            parse_path_expr(t[3], p.generators, file, lines[i].number);
      } else {
        detail::parse_fail(file, lines[i].number,
                           "'" + t[1] + "' is not a relation cell");
      }
    } else {
      detail::parse_fail(file, lines[i].number,
                         "expected 'alpha <cell> = <value>' or "
                         "'beta <cell> = <value>'");
    }
  }
  try {
    validate(p);
  } catch (const StructuralError& e) {
    throw ParseError(file + ": " + e.what());
  }
  return p;
}

inline std::string write_presentation(const Presentation& p) {
  FinGraph h = p.relations;
  h.name = "relations";
  FinGraph g = p.generators;
  g.name = "generators";
  std::string out = write_graph(h) + write_graph(g);
  auto leg = [&](const std::string& which, const PathMap& pm) {
    std::string s;
    for (const auto& [v, gv] : pm.v_map)
      s += which + " " + v + " = " + gv + "\n";
    for (const auto& [e, path] : pm.e_map)
      s += which + " " + e + " = " + path_name(path) + "\n";
    return s;
  };
  return out + leg("alpha", p.alpha) + leg("beta", p.beta);
}

// ---------------------------------------------------------------------
// Spans of graph morphisms (input to the pushout command).

struct SpanFile {
  std::vector<FinGraph> graphs;
  std::vector<std::string> map_names;
  std::vector<GraphMorphism> maps;
};

inline SpanFile parse_span(const std::string& text,
                           const std::string& file = "<span>") {
  auto lines = detail::tokenize(text);
  if (lines.empty()) detail::parse_fail(file, 0, "empty span file");
  SpanFile sf;
  std::size_t i = 0;
  while (i < lines.size() && lines[i].tokens[0] == "graph")
    sf.graphs.push_back(detail::parse_graph_block(file, lines, i));
  auto graph_named = [&](const std::string& n,
                         std::size_t line) -> const FinGraph& {
    for (const auto& g : sf.graphs)
      if (g.name == n) return g;
    detail::parse_fail(file, line, "unknown graph '" + n + "'");
  };
  struct RawMap {
    std::size_t line;
    std::string name, dom, cod;
    StrMap vm, em;
  };
  std::vector<RawMap> raw;
  for (; i < lines.size(); ++i) {
    const auto& t = lines[i].tokens;
    if (t[0] == "map" && t.size() == 6 && t[2] == ":" && t[4] == "->") {
      raw.push_back({lines[i].number, t[1], t[3], t[5], {}, {}});
    } else if ((t[0] == "vmap" || t[0] == "emap") && t.size() == 5 &&
               t[3] == "=") {
      RawMap* rm = nullptr;
      for (auto& r : raw)
        if (r.name == t[1]) rm = &r;
      if (!rm)
        detail::parse_fail(file, lines[i].number,
                           "assignment before 'map " + t[1] + " : ...'");
      (t[0] == "vmap" ? rm->vm : rm->em)[t[2]] = t[4];
    } else {
      detail::parse_fail(file, lines[i].number,
                         "expected 'map <f> : <A> -> <B>', "
                         "'vmap <f> <x> = <y>' or 'emap <f> <x> = <y>'");
    }
  }
  for (auto& r : raw) {
    try {
      sf.maps.push_back(make_morphism(graph_named(r.dom, r.line),
                                      graph_named(r.cod, r.line), r.vm,
                                      r.em));
      sf.map_names.push_back(r.name);
    } catch (const StructuralError& e) {
      detail::parse_fail(file, r.line,
                         "map '" + r.name + "': " + e.what());
    }
  }
  return sf;
}

}  // namespace fincat
