// Finite presentations of models: a parallel pair of free maps in
// transposed form, evaluated by bounded congruence closure over the path
// universe of the (vertex-quotiented) generator graph. Also the section
// normalization of a presentation and the closure of presented models
// under finite coproducts and coequalizers.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fincat/category.hpp"
#include "fincat/error.hpp"
#include "fincat/graph.hpp"
#include "fincat/graph_limits.hpp"
#include "fincat/path.hpp"
#include "fincat/util.hpp"

namespace fincat {

/// One leg of a parallel pair F(H) -> F(G) in transposed form: a vertex
/// map H0 -> G0 and an edge map H1 -> paths over G. This stays finite
/// even when the free categories are not.
struct PathMap {
  StrMap v_map;                       // H-vertex -> G-vertex
  std::map<std::string, Path> e_map;  // H-edge -> path over G
};

struct Presentation {
  std::string name = "P";
  FinGraph relations;   // H
  FinGraph generators;  // G
  PathMap alpha;
  PathMap beta;
};

inline void validate_leg(const Presentation& p, const PathMap& leg,
                         const std::string& which) {
  for (const auto& v : p.relations.vertices) {
    auto it = leg.v_map.find(v);
    if (it == leg.v_map.end())
      throw StructuralError("presentation '" + p.name + "': " + which +
                            " missing on vertex '" + v + "'");
    if (!p.generators.has_vertex(it->second))
      throw StructuralError("presentation '" + p.name + "': " + which + "(" +
                            v + ") is not a generator vertex");
  }
  for (const auto& h : p.relations.edges) {
    auto it = leg.e_map.find(h);
    if (it == leg.e_map.end())
      throw StructuralError("presentation '" + p.name + "': " + which +
                            " missing on edge '" + h + "'");
    validate_path(p.generators, it->second);
    if (it->second.start != leg.v_map.at(p.relations.src.at(h)) ||
        path_end(p.generators, it->second) !=
            leg.v_map.at(p.relations.tgt.at(h)))
      throw StructuralError("presentation '" + p.name + "': " + which + "(" +
                            h + ") has incompatible endpoints");
  }
}

inline void validate(const Presentation& p) {
  validate_leg(p, p.alpha, "alpha");
  validate_leg(p, p.beta, "beta");
}

struct CoeqBounds {
  std::size_t max_path_len = 6;
  std::size_t max_morphisms = 256;
};

struct Saturation {
  bool finite = false;
  std::size_t bound = 0;
  std::string note;  // diagnostics when undecided
};

enum class WordVerdict { Equal, Distinct, Undecided };

inline std::string to_string(WordVerdict v) {
  switch (v) {
    case WordVerdict::Equal: return "equal";
    case WordVerdict::Distinct: return "distinct";
    default: return "undecided";
  }
}

namespace detail {

// hard guard against runaway path universes
constexpr std::size_t kPathUniverseCap = 500000;

}  // namespace detail

/// A bounded congruence: the partition of all paths of length <= bound
/// over a fixed graph, closed under one-sided composition within the
/// bound, with the length-lex least member of each class as its normal
/// form. `saturated` records whether the partition already determines
/// the full quotient.
struct Congruence {
  std::size_t bound = 0;
  std::vector<Path> paths;                        // length-lex order
  std::map<std::string, std::size_t> path_index;  // path_key -> index
  std::vector<std::size_t> class_id;       // path index -> class id
  std::vector<std::size_t> class_nf;       // class id -> nf path index
  std::vector<std::size_t> class_max_len;  // class id -> longest member
  bool saturated = false;

  std::size_t class_count() const { return class_nf.size(); }

  std::optional<std::size_t> index_of(const Path& p) const {
    auto it = path_index.find(path_key(p));
    if (it == path_index.end()) return std::nullopt;
    return it->second;
  }

  const Path& normal_form(std::size_t cls) const {
    return paths[class_nf[cls]];
  }

  bool touches_frontier(std::size_t cls) const {
    return class_max_len[cls] >= bound;
  }
};

/// The coequalizer of a presentation, evaluated at a bound: congruence
/// classes of bounded paths with length-lex normal forms. When
/// `saturation.finite` holds, the class/composition data is a genuine
/// finite category and the true coequalizer; otherwise the classes are
/// the state of knowledge at the bound.
struct PresentedCategory {
  Presentation source;
  CoeqBounds bounds;
  FinGraph quotient_graph;  // generators with vertices collapsed
  StrMap vertex_class;      // generator vertex -> class name
  Saturation saturation;
  Congruence cong;  // over the path universe of quotient_graph

  // presented structure (morphism names are normal forms)
  std::vector<std::string> objects;
  std::vector<std::string> morphisms;
  StrMap msrc, mtgt;
  StrMap ids;      // object -> "id(v)"
  CompTable comp;  // total iff finite

  // Rebases a path over the original generators into the quotient graph.
  Path rebase(const Path& p) const {
    validate_path(source.generators, p);
    return Path{vertex_class.at(p.start), p.edges};
  }

  // Normal form of an arbitrary-length path over the quotient graph;
  // works stepwise so it is total whenever the coequalizer is finite.
  std::optional<std::size_t> normalize(const Path& over_quotient) const {
    validate_path(quotient_graph, over_quotient);
    if (cong.class_id.size() != cong.paths.size() || cong.paths.empty())
      return std::nullopt;  // evaluation bailed out before classifying
    std::size_t cur = cong.class_nf[cong.class_id[*cong.index_of(
        Path{over_quotient.start, {}})]];
    for (const auto& e : over_quotient.edges) {
      Path step = cong.paths[cur];
      step.edges.push_back(e);
      auto idx = cong.index_of(step);
      if (!idx) return std::nullopt;  // fell off the bounded universe
      cur = cong.class_nf[cong.class_id[*idx]];
    }
    return cur;
  }

  /// Class name (= morphism name) of a path over the original
  /// generator graph; nullopt only when the bound was insufficient.
  std::optional<std::string> class_name_of(const Path& over_generators) const {
    auto nf = normalize(rebase(over_generators));
    if (!nf) return std::nullopt;
    return path_name(cong.paths[*nf]);
  }

  /// The presented category as a validated FinCategory; finite only.
  FinCategory to_category() const {
    if (!saturation.finite)
      throw UndecidedError("presented category '" + source.name +
                               "' is undecided at bound " +
                               std::to_string(saturation.bound) +
                               (saturation.note.empty()
                                    ? std::string()
                                    : ": " + saturation.note),
                           saturation.bound);
    std::vector<MorphismSpec> ms;
    for (const auto& m : morphisms) ms.push_back({m, msrc.at(m), mtgt.at(m)});
    return make_category(source.name, objects, ms, ids, comp);
  }
};

/// Evaluates a presentation at a bound.
///
/// Step 1: quotient the generator vertices by alpha(v) ~ beta(v).
/// Step 2: seed path relations alpha(h) ~ beta(h), rebased.
/// Step 3: close under one-sided composition within the bound, with
///         transitivity via union-find; representatives are length-lex
///         least.
/// Step 4: saturation. The result is Finite when every seed fits the
///         bound, every class normal form either is shorter than the
///         bound or admits no one-edge extension at all, every composite
///         of two normal forms stays within the bound, and the class
///         count stays under max_morphisms. Finite results carry a full
///         composition table and satisfy all category laws.
inline PresentedCategory coequalize(const Presentation& pres,
                                    CoeqBounds bounds) {
  if (bounds.max_path_len < 1 || bounds.max_morphisms < 1)
    throw PreconditionError("coequalize: bounds must be >= 1");
  validate(pres);
  const std::size_t L = bounds.max_path_len;

  PresentedCategory pc;
  pc.source = pres;
  pc.bounds = bounds;
  pc.saturation.bound = L;
  pc.cong.bound = L;

  // Step 1: vertex quotient, classes named by least member.
  detail::NamedUnionFind vuf;
  for (const auto& v : pres.generators.vertices) vuf.add(v);
  for (const auto& v : pres.relations.vertices)
    vuf.unite(pres.alpha.v_map.at(v), pres.beta.v_map.at(v));
  for (const auto& v : pres.generators.vertices)
    pc.vertex_class[v] = vuf.find(v);
  pc.quotient_graph.name = pres.generators.name + "/~";
  for (const auto& v : pres.generators.vertices)
    if (pc.vertex_class.at(v) == v) pc.quotient_graph.add_vertex(v);
  for (const auto& e : pres.generators.edges)
    pc.quotient_graph.add_edge(e,
                               pc.vertex_class.at(pres.generators.src.at(e)),
                               pc.vertex_class.at(pres.generators.tgt.at(e)));
  const FinGraph& gq = pc.quotient_graph;

  // Path universe, length-lex sorted.
  {
    PathEnumeration pe = free_paths(gq, L);
    if (pe.paths.size() > detail::kPathUniverseCap) {
      pc.saturation = {false, L,
                       "path universe exceeds " +
                           std::to_string(detail::kPathUniverseCap) +
                           " at this bound"};
      return pc;
    }
    pc.cong.paths = std::move(pe.paths);
  }
  for (std::size_t i = 0; i < pc.cong.paths.size(); ++i)
    pc.cong.path_index[path_key(pc.cong.paths[i])] = i;

  detail::UnionFind uf(pc.cong.paths.size());

  // Step 2: seeds.
  for (const auto& h : pres.relations.edges) {
    Path a = pc.rebase(pres.alpha.e_map.at(h));
    Path b = pc.rebase(pres.beta.e_map.at(h));
    if (a.length() > L || b.length() > L) {
      pc.saturation = {false, L,
                       "relation '" + h + "' exceeds the path bound"};
      return pc;
    }
    uf.unite(*pc.cong.index_of(a), *pc.cong.index_of(b));
  }

  // Step 3: closure under one-sided composition, to a fixpoint.
  // Since roots are minimal indices and paths are length-lex sorted, the
  // root of a class is already its normal form.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < pc.cong.paths.size(); ++i) {
      std::size_t r = uf.find(i);
      if (r == i) continue;
      const Path& p = pc.cong.paths[i];
      const Path& q = pc.cong.paths[r];
      // extend on the right by every edge leaving the common end
      if (p.length() + 1 <= L && q.length() + 1 <= L) {
        const std::string at = path_end(gq, p);
        for (const auto& e : gq.edges) {
          if (gq.src.at(e) != at) continue;
          Path pe = p, qe = q;
          pe.edges.push_back(e);
          qe.edges.push_back(e);
          changed |= uf.unite(*pc.cong.index_of(pe), *pc.cong.index_of(qe));
        }
        // and on the left by every edge entering the common start
        for (const auto& e : gq.edges) {
          if (gq.tgt.at(e) != p.start) continue;
          Path ep{gq.src.at(e), {e}};
          Path eq = ep;
          ep.edges.insert(ep.edges.end(), p.edges.begin(), p.edges.end());
          eq.edges.insert(eq.edges.end(), q.edges.begin(), q.edges.end());
          changed |= uf.unite(*pc.cong.index_of(ep), *pc.cong.index_of(eq));
        }
      }
    }
  }

  // Collect classes; roots are normal forms.
  std::map<std::size_t, std::size_t> root_to_class;
  pc.cong.class_id.resize(pc.cong.paths.size());
  for (std::size_t i = 0; i < pc.cong.paths.size(); ++i) {
    std::size_t r = uf.find(i);
    auto [it, fresh] = root_to_class.emplace(r, pc.cong.class_nf.size());
    if (fresh) {
      pc.cong.class_nf.push_back(r);
      pc.cong.class_max_len.push_back(0);
    }
    pc.cong.class_id[i] = it->second;
    pc.cong.class_max_len[it->second] =
        std::max(pc.cong.class_max_len[it->second], pc.cong.paths[i].length());
  }

  // Objects and morphism names exist in every outcome.
  pc.objects = gq.vertices;
  for (std::size_t c = 0; c < pc.cong.class_nf.size(); ++c) {
    const Path& nf = pc.cong.paths[pc.cong.class_nf[c]];
    const std::string name = path_name(nf);
    if (pc.msrc.count(name))
      throw StructuralError("coequalize: normal form name collision '" +
                            name + "'");
    pc.morphisms.push_back(name);
    pc.msrc[name] = nf.start;
    pc.mtgt[name] = path_end(gq, nf);
    if (nf.empty()) pc.ids[nf.start] = name;
  }
  std::sort(pc.morphisms.begin(), pc.morphisms.end());

  // Step 4: saturation.
  if (pc.cong.class_nf.size() > bounds.max_morphisms) {
    pc.saturation = {false, L,
                     std::to_string(pc.cong.class_nf.size()) +
                         " classes at the bound exceed max_morphisms " +
                         std::to_string(bounds.max_morphisms)};
    return pc;
  }
  for (std::size_t c = 0; c < pc.cong.class_nf.size(); ++c) {
    const Path& nf = pc.cong.paths[pc.cong.class_nf[c]];
    if (nf.length() < L) continue;
    // a frontier normal form is tolerable only when nothing extends it
    bool extends = false;
    const std::string end = path_end(gq, nf);
    for (const auto& e : gq.edges)
      if (gq.src.at(e) == end || gq.tgt.at(e) == nf.start) {
        extends = true;
        break;
      }
    if (extends) {
      pc.saturation = {false, L,
                       "class of '" + path_name(nf) +
                           "' touches the bound and still extends"};
      return pc;
    }
  }
  for (std::size_t c1 = 0; c1 < pc.cong.class_nf.size(); ++c1)
    for (std::size_t c2 = 0; c2 < pc.cong.class_nf.size(); ++c2) {
      const Path& p = pc.cong.paths[pc.cong.class_nf[c1]];
      const Path& q = pc.cong.paths[pc.cong.class_nf[c2]];
      if (path_end(gq, p) != q.start) continue;
      if (p.length() + q.length() > L) {
        pc.saturation = {false, L,
                         "composite '" + path_name(p) + "' . '" +
                             path_name(q) + "' exceeds the path bound"};
        pc.comp.clear();
        return pc;
      }
      Path pq = concat(gq, p, q);
      std::size_t cls = pc.cong.class_id[*pc.cong.index_of(pq)];
      pc.comp[{path_name(p), path_name(q)}] =
          path_name(pc.cong.normal_form(cls));
    }

  pc.saturation = {true, L, ""};
  pc.cong.saturated = true;
  // the finite result must be a lawful category; downgrade if not
  FinCategory candidate;
  {
    std::vector<MorphismSpec> ms;
    for (const auto& m : pc.morphisms)
      ms.push_back({m, pc.msrc.at(m), pc.mtgt.at(m)});
    candidate.name = pres.name;
    candidate.objects = pc.objects;
    std::sort(candidate.objects.begin(), candidate.objects.end());
    for (const auto& m : ms) {
      candidate.morphisms.push_back(m.id);
      candidate.src[m.id] = m.src;
      candidate.tgt[m.id] = m.tgt;
    }
    std::sort(candidate.morphisms.begin(), candidate.morphisms.end());
    candidate.ids = pc.ids;
    candidate.comp = pc.comp;
  }
  if (auto v = first_category_violation(candidate)) {
    pc.saturation = {false, L,
                     "bounded quotient is not a category: " + describe(*v)};
    pc.cong.saturated = false;
    pc.comp.clear();
  }
  return pc;
}

// ---------------------------------------------------------------------
// Section normalization.

/// The bounded underlying graph of the free category on g: one edge per
/// path of length <= max_len, named like the corresponding morphism.
inline FinGraph bounded_free_graph(const FinGraph& g, std::size_t max_len) {
  FinGraph out;
  out.name = "U(F(" + g.name + "))|" + std::to_string(max_len);
  for (const auto& v : g.vertices) out.add_vertex(v);
  for (const auto& p : free_paths(g, max_len).paths)
    out.add_edge(path_name(p), p.start, path_end(g, p));
  return out;
}

struct SectionedPresentation {
  Presentation pres;        // the original presentation
  Presentation normalized;  // generators quotiented by the vertex relation
  GraphMorphism r;          // generators -> generators/R0
  FinGraph bounded_free;    // bounded underlying graph of F(G/R0)
  GraphMorphism section;    // U(M) -> bounded_free, q-bar section
  GraphMorphism qbar;       // bounded_free -> U(M)
  std::map<std::string, Path> section_path;  // morphism -> chosen preimage
  PresentedCategory model;  // the (finite) coequalizer
  bool coequalizers_isomorphic;  // normalized vs original, verified
};

/// Quotients the generators by the vertex relation generated by
/// alpha(v) ~ beta(v), re-presents over the quotient, and constructs a
/// section of the quotient map: identity on vertices, length-lex least
/// preimage path on every morphism. Verifies q-bar . s = id exactly and
/// that the coequalizers before and after agree up to isomorphism.
inline SectionedPresentation section_normalize(const Presentation& pres,
                                               CoeqBounds bounds) {
  PresentedCategory pc = coequalize(pres, bounds);
  if (!pc.saturation.finite)
    throw UndecidedError("section_normalize: coequalizer of '" + pres.name +
                             "' is not finite at bound " +
                             std::to_string(bounds.max_path_len) + ": " +
                             pc.saturation.note,
                         pc.saturation.bound);
  SectionedPresentation out;
  out.pres = pres;
  out.model = pc;

  // r : G -> G/R0
  StrMap re;
  for (const auto& e : pres.generators.edges) re[e] = e;
  out.r = GraphMorphism{pres.generators, pc.quotient_graph, pc.vertex_class,
                        std::move(re)};

  // the re-based presentation (H, G/R0, r.alpha, r.beta)
  out.normalized.name = pres.name + "/R0";
  out.normalized.relations = pres.relations;
  out.normalized.generators = pc.quotient_graph;
  for (const auto& [v, gv] : pres.alpha.v_map)
    out.normalized.alpha.v_map[v] = pc.vertex_class.at(gv);
  for (const auto& [v, gv] : pres.beta.v_map)
    out.normalized.beta.v_map[v] = pc.vertex_class.at(gv);
  for (const auto& [h, path] : pres.alpha.e_map)
    out.normalized.alpha.e_map[h] = pc.rebase(path);
  for (const auto& [h, path] : pres.beta.e_map)
    out.normalized.beta.e_map[h] = pc.rebase(path);
  validate(out.normalized);

  // the quotient map acts through classes, so the two coequalizers must
  // agree; verified rather than assumed
  PresentedCategory after = coequalize(out.normalized, bounds);
  out.coequalizers_isomorphic =
      after.saturation.finite &&
      categories_isomorphic(pc.to_category(), after.to_category());

  out.bounded_free = bounded_free_graph(pc.quotient_graph,
                                        bounds.max_path_len);
  FinGraph um = underlying_graph(pc.to_category());

  StrMap sv, se;
  for (const auto& o : pc.objects) sv[o] = o;  // same vertex sets
  for (const auto& m : pc.morphisms) se[m] = m;  // least preimage by name
  out.section = make_morphism(um, out.bounded_free, sv, se);
  for (std::size_t c = 0; c < pc.cong.class_nf.size(); ++c) {
    const Path& nf = pc.cong.paths[pc.cong.class_nf[c]];
    out.section_path[path_name(nf)] = nf;
  }

  StrMap qv, qe;
  for (const auto& v : out.bounded_free.vertices) qv[v] = v;
  for (std::size_t i = 0; i < pc.cong.paths.size(); ++i)
    qe[path_name(pc.cong.paths[i])] =
        path_name(pc.cong.paths[pc.cong.class_nf[pc.cong.class_id[i]]]);
  out.qbar = make_morphism(out.bounded_free, um, std::move(qv),
                           std::move(qe));

  if (!(compose(out.section, out.qbar) == identity_morphism(um)))
    throw StructuralError("section_normalize: q-bar . s is not the identity");
  return out;
}

// ---------------------------------------------------------------------
// Stability of presented models under finite colimits.

/// Disjoint union of presentations: its coequalizer is the coproduct of
/// the two coequalizers.
inline Presentation coproduct_presentations(const Presentation& a,
                                            const Presentation& b) {
  validate(a);
  validate(b);
  Coproduct h = coproduct(a.relations, b.relations);
  Coproduct g = coproduct(a.generators, b.generators);
  Presentation out;
  out.name = a.name + "+" + b.name;
  out.relations = h.graph;
  out.generators = g.graph;
  auto splice = [&](const Presentation& p, const GraphMorphism& hin,
                    const GraphMorphism& gin, PathMap& alpha, PathMap& beta) {
    auto move_path = [&](const Path& path) {
      Path q{gin.v_map.at(path.start), {}};
      for (const auto& e : path.edges) q.edges.push_back(gin.e_map.at(e));
      return q;
    };
    for (const auto& [v, gv] : p.alpha.v_map)
      alpha.v_map[hin.v_map.at(v)] = gin.v_map.at(gv);
    for (const auto& [v, gv] : p.beta.v_map)
      beta.v_map[hin.v_map.at(v)] = gin.v_map.at(gv);
    for (const auto& [e, path] : p.alpha.e_map)
      alpha.e_map[hin.e_map.at(e)] = move_path(path);
    for (const auto& [e, path] : p.beta.e_map)
      beta.e_map[hin.e_map.at(e)] = move_path(path);
  };
  splice(a, h.in_left, g.in_left, out.alpha, out.beta);
  splice(b, h.in_right, g.in_right, out.alpha, out.beta);
  validate(out);
  return out;
}

/// A canonical presentation of a finite category: generators are its
/// underlying graph, relations identify each composite path of length
/// two with its table entry and each identity edge with the empty path.
inline Presentation presentation_of_category(const FinCategory& c) {
  Presentation p;
  p.name = "pres(" + c.name + ")";
  p.generators = underlying_graph(c);
  for (const auto& o : c.objects) {
    p.relations.add_vertex(o);
    p.alpha.v_map[o] = o;
    p.beta.v_map[o] = o;
  }
  for (const auto& [pair, fg] : c.comp) {
    const std::string h = "c:" + pair.first + ":" + pair.second;
    p.relations.add_edge(h, c.src.at(pair.first), c.tgt.at(pair.second));
    p.alpha.e_map[h] =
        Path{c.src.at(pair.first), {pair.first, pair.second}};
    p.beta.e_map[h] = Path{c.src.at(pair.first), {fg}};
  }
  for (const auto& o : c.objects) {
    const std::string h = "u:" + o;
    p.relations.add_edge(h, o, o);
    p.alpha.e_map[h] = Path{o, {c.ids.at(o)}};
    p.beta.e_map[h] = Path{o, {}};
  }
  validate(p);
  return p;
}

/// Coequalizer of two functors u, v : P => Q between finite categories,
/// computed directly: present Q canonically and add one relation per
/// P-cell identifying the two images.
inline PresentedCategory coequalize_functors(const Functor& u,
                                             const Functor& v,
                                             CoeqBounds bounds) {
  if (!(u.dom == v.dom) || !(u.cod == v.cod))
    throw PreconditionError("coequalize_functors: not a parallel pair");
  Presentation p = presentation_of_category(u.cod);
  p.name = "coeq(" + u.dom.name + "=>" + u.cod.name + ")";
  for (const auto& o : u.dom.objects) {
    const std::string hv = "p:" + o;
    p.relations.add_vertex(hv);
    p.alpha.v_map[hv] = u.o_map.at(o);
    p.beta.v_map[hv] = v.o_map.at(o);
  }
  for (const auto& m : u.dom.morphisms) {
    const std::string he = "p:" + m;
    p.relations.add_edge(he, "p:" + u.dom.src.at(m), "p:" + u.dom.tgt.at(m));
    p.alpha.e_map[he] = Path{u.o_map.at(u.dom.src.at(m)), {u.m_map.at(m)}};
    p.beta.e_map[he] = Path{v.o_map.at(u.dom.src.at(m)), {v.m_map.at(m)}};
  }
  validate(p);
  return coequalize(p, bounds);
}

/// The lifted presentation of the coequalizer of u, v : P => Q, built
/// from presentations of P and Q: a section for Q's quotient map turns
/// u and v into maps on P's generators, and the relation graph becomes
/// the disjoint union of P's generators with Q's relations.
inline Presentation coequalizer_of_presented(const Functor& u,
                                             const Functor& v,
                                             const Presentation& pP,
                                             const Presentation& pQ,
                                             CoeqBounds bounds) {
  if (!(u.dom == v.dom) || !(u.cod == v.cod))
    throw PreconditionError("coequalizer_of_presented: not a parallel pair");
  PresentedCategory P = coequalize(pP, bounds);
  if (!P.saturation.finite)
    throw UndecidedError("coequalizer_of_presented: '" + pP.name +
                             "' undecided: " + P.saturation.note,
                         P.saturation.bound);
  if (!(u.dom == P.to_category()))
    throw PreconditionError(
        "coequalizer_of_presented: functor domain is not the coequalizer "
        "of the first presentation");
  SectionedPresentation sq = section_normalize(pQ, bounds);
  if (!(u.cod == sq.model.to_category()))
    throw PreconditionError(
        "coequalizer_of_presented: functor codomain is not the coequalizer "
        "of the second presentation");

  // lift a functor P -> Q to generator-level data on pP.generators
  auto lift = [&](const Functor& w, const GraphMorphism& hin, PathMap& alpha) {
    for (const auto& gv : pP.generators.vertices)
      alpha.v_map[hin.v_map.at(gv)] = w.o_map.at(P.vertex_class.at(gv));
    for (const auto& ge : pP.generators.edges) {
      std::string cls = *P.class_name_of(Path{pP.generators.src.at(ge),
                                              {ge}});
      alpha.e_map[hin.e_map.at(ge)] = sq.section_path.at(w.m_map.at(cls));
    }
  };

  Coproduct h = coproduct(pP.generators, sq.normalized.relations);
  Presentation out;
  out.name = "coeq(" + pP.name + "=>" + pQ.name + ")";
  out.relations = h.graph;
  out.generators = sq.normalized.generators;  // J/R0
  lift(u, h.in_left, out.alpha);
  lift(v, h.in_left, out.beta);
  for (const auto& [kv, jv] : sq.normalized.alpha.v_map)
    out.alpha.v_map[h.in_right.v_map.at(kv)] = jv;
  for (const auto& [kv, jv] : sq.normalized.beta.v_map)
    out.beta.v_map[h.in_right.v_map.at(kv)] = jv;
  for (const auto& [ke, path] : sq.normalized.alpha.e_map)
    out.alpha.e_map[h.in_right.e_map.at(ke)] = path;
  for (const auto& [ke, path] : sq.normalized.beta.e_map)
    out.beta.e_map[h.in_right.e_map.at(ke)] = path;
  validate(out);
  return out;
}

/// Checks that the coequalizer of (id_F, f.p) : F => F is the retract M
/// itself, up to isomorphism. `f : M -> F` and `p : F -> M` must satisfy
/// p after f = id_M.
inline bool verify_retract_coequalizer(const Presentation& f_pres,
                                       const Functor& f, const Functor& p,
                                       CoeqBounds bounds) {
  if (!(f.cod == p.dom) || !(f.dom == p.cod))
    throw PreconditionError("verify_retract_coequalizer: f and p are not a "
                            "section/retraction pair");
  Functor pf = compose(f, p);  // M -> M
  Functor idm = identity_functor(f.dom);
  if (!(pf.o_map == idm.o_map && pf.m_map == idm.m_map)) {
    for (const auto& [o, im] : pf.o_map)
      if (im != o)
        throw PreconditionError(
            "verify_retract_coequalizer: p . f is not the identity, object "
            "witness '" + o + "' -> '" + im + "'");
    for (const auto& [m, im] : pf.m_map)
      if (im != m)
        throw PreconditionError(
            "verify_retract_coequalizer: p . f is not the identity, "
            "morphism witness '" + m + "' -> '" + im + "'");
  }
  PresentedCategory F = coequalize(f_pres, bounds);
  if (!F.saturation.finite)
    throw UndecidedError("verify_retract_coequalizer: '" + f_pres.name +
                             "' undecided: " + F.saturation.note,
                         F.saturation.bound);
  FinCategory fcat = F.to_category();
  Functor idf = identity_functor(fcat);
  Functor fp = compose(p, f);  // F -> F
  Presentation retract =
      coequalizer_of_presented(idf, fp, f_pres, f_pres, bounds);
  PresentedCategory R = coequalize(retract, bounds);
  if (!R.saturation.finite)
    throw UndecidedError("verify_retract_coequalizer: lifted coequalizer "
                             "undecided: " + R.saturation.note,
                         R.saturation.bound);
  return categories_isomorphic(R.to_category(), f.dom);
}

/// Word problem against an evaluated presentation. Paths are given over
/// the original generator graph. Finite coequalizers decide every query;
/// undecided ones answer Distinct only away from the bound frontier.
inline WordVerdict morphism_equal(const PresentedCategory& pc, const Path& p,
                                  const Path& q) {
  Path rp = pc.rebase(p);
  Path rq = pc.rebase(q);
  if (pc.saturation.finite) {
    auto np = pc.normalize(rp);
    auto nq = pc.normalize(rq);
    if (!np || !nq) return WordVerdict::Undecided;  // unreachable when finite
    return *np == *nq ? WordVerdict::Equal : WordVerdict::Distinct;
  }
  if (rp.length() > pc.bounds.max_path_len ||
      rq.length() > pc.bounds.max_path_len)
    return WordVerdict::Undecided;
  // an early bail-out (oversized universe, seed beyond the bound) leaves
  // no class data at all
  if (pc.cong.class_id.size() != pc.cong.paths.size() ||
      pc.cong.paths.empty())
    return WordVerdict::Undecided;
  std::size_t cp = pc.cong.class_id[*pc.cong.index_of(rp)];
  std::size_t cq = pc.cong.class_id[*pc.cong.index_of(rq)];
  if (cp == cq) return WordVerdict::Equal;
  if (pc.cong.touches_frontier(cp) || pc.cong.touches_frontier(cq))
    return WordVerdict::Undecided;
  return WordVerdict::Distinct;
}

}  // namespace fincat
