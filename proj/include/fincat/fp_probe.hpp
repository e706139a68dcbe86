// Chain-indexed systems of finite categories, truncated chain colimits,
// and the stabilization probe: the bounded, testable shadow of
// "the hom functor preserves filtered colimits".

#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "fincat/category.hpp"
#include "fincat/error.hpp"
#include "fincat/graph.hpp"
#include "fincat/presentation.hpp"
#include "fincat/util.hpp"

namespace fincat {

/// A chain X_0 -> X_1 -> ... of finite categories, lazily evaluated and
/// memoized up to a hard cap. Memoization sits behind one mutex so that
/// concurrent probes see identical stages.
class ChainSystem {
 public:
  using StageFn = std::function<FinCategory(std::size_t)>;
  using LinkFn = std::function<Functor(std::size_t)>;

  ChainSystem(std::string name, std::size_t cap, StageFn stage, LinkFn link)
      : name_(std::move(name)),
        cap_(cap),
        stage_fn_(std::move(stage)),
        link_fn_(std::move(link)),
        state_(std::make_shared<State>()) {}

  const std::string& name() const { return name_; }
  std::size_t cap() const { return cap_; }

  FinCategory stage(std::size_t i) const {
    if (i > cap_)
      throw PreconditionError("chain '" + name_ + "': stage " +
                              std::to_string(i) + " beyond cap " +
                              std::to_string(cap_));
    std::lock_guard<std::mutex> lock(state_->mu);
    auto it = state_->stages.find(i);
    if (it == state_->stages.end())
      it = state_->stages.emplace(i, stage_fn_(i)).first;
    return it->second;
  }

  /// The link stage(i) -> stage(i+1).
  Functor link(std::size_t i) const {
    if (i + 1 > cap_)
      throw PreconditionError("chain '" + name_ + "': link " +
                              std::to_string(i) + " beyond cap " +
                              std::to_string(cap_));
    std::lock_guard<std::mutex> lock(state_->mu);
    auto it = state_->links.find(i);
    if (it == state_->links.end()) {
      Functor f = link_fn_(i);
      it = state_->links.emplace(i, std::move(f)).first;
    }
    return it->second;
  }

  /// Composite link stage(i) -> stage(j), identity when i == j.
  Functor link_composite(std::size_t i, std::size_t j) const {
    Functor acc = identity_functor(stage(i));
    for (std::size_t k = i; k < j; ++k) acc = compose(acc, link(k));
    return acc;
  }

 private:
  struct State {
    std::mutex mu;
    std::map<std::size_t, FinCategory> stages;
    std::map<std::size_t, Functor> links;
  };
  std::string name_;
  std::size_t cap_;
  StageFn stage_fn_;
  LinkFn link_fn_;
  std::shared_ptr<State> state_;
};

/// stage(i) = discrete category on objects o0..oi, inclusion links.
inline ChainSystem discrete_inclusion_chain(std::size_t cap) {
  auto stage = [](std::size_t i) {
    std::vector<std::string> objs;
    for (std::size_t k = 0; k <= i; ++k)
      objs.push_back("o" + std::to_string(k));
    return discrete_category("D" + std::to_string(i), objs);
  };
  auto link = [stage](std::size_t i) {
    FinCategory d = stage(i), e = stage(i + 1);
    StrMap om, mm;
    for (const auto& o : d.objects) om[o] = o;
    for (const auto& m : d.morphisms) mm[m] = m;
    return make_functor(d, e, std::move(om), std::move(mm));
  };
  return ChainSystem("discrete-inclusion", cap, stage, link);
}

/// stage(0) = discrete on {a, b}, later stages a point; the first link
/// collapses.
inline ChainSystem collapse_chain(std::size_t cap) {
  auto stage = [](std::size_t i) {
    if (i == 0) return discrete_category("D0", {"a", "b"});
    return discrete_category("pt", {"x"});
  };
  auto link = [stage](std::size_t i) {
    FinCategory d = stage(i), e = stage(i + 1);
    StrMap om, mm;
    for (const auto& o : d.objects) om[o] = e.objects.front();
    for (const auto& m : d.morphisms) mm[m] = e.ids.at(e.objects.front());
    return make_functor(d, e, std::move(om), std::move(mm));
  };
  return ChainSystem("collapse", cap, stage, link);
}

inline ChainSystem constant_chain(const FinCategory& c, std::size_t cap) {
  auto stage = [c](std::size_t) { return c; };
  auto link = [c](std::size_t) { return identity_functor(c); };
  return ChainSystem("constant:" + c.name, cap, stage, link);
}

struct TruncatedColimit {
  FinCategory colimit;
  std::vector<Functor> cocone;  // stage(i) -> colimit, i = 0..n
};

/// Colimit of the finite chain stage(0) -> ... -> stage(n): the last
/// stage, with the composite links as cocone. Filtered colimits of
/// models are computed on underlying graphs, and for a finite chain the
/// graph-level colimit is the last stage cellwise.
inline TruncatedColimit chain_colimit_truncated(const ChainSystem& ch,
                                                std::size_t n) {
  TruncatedColimit out{ch.stage(n), {}};
  for (std::size_t i = 0; i <= n; ++i)
    out.cocone.push_back(ch.link_composite(i, n));
  return out;
}

struct StabilizationReport {
  std::string model;
  std::size_t probed_stages = 0;          // = cap
  std::vector<std::size_t> hom_counts;    // |Hom(M, stage(i))|, i = 0..cap
  // least origin stage of each hom element at the truncated colimit
  std::vector<std::pair<std::string, std::size_t>> factorization_stage;
  struct CoequalizedPair {
    std::string first, second;
    std::size_t found_at;   // stage where the pair is distinct
    std::size_t merged_at;  // least stage where the pushforwards agree
  };
  std::vector<CoequalizedPair> coequalization_stage;
  bool stable = false;
  std::size_t stable_stage = 0;  // meaningful when stable
  // second hom-computation route, when one applies (free models)
  std::optional<std::vector<std::size_t>> functor_route_counts;
};

inline std::string verdict_string(const StabilizationReport& r) {
  return r.stable ? "StableBy(" + std::to_string(r.stable_stage) + ")"
                  : "NotStabilizedWithin(" + std::to_string(r.probed_stages) +
                        ")";
}

namespace detail {

// Shared probe engine over an abstract hom computation. `Elem` values
// must be comparable for equality and printable through `key`.
template <typename Elem>
StabilizationReport run_probe(
    std::string model_name, std::size_t cap,
    const std::function<std::vector<Elem>(std::size_t)>& hom_at,
    const std::function<Elem(std::size_t, const Elem&)>& push,
    const std::function<std::string(const Elem&)>& key) {
  if (cap < 1) throw PreconditionError("probe: cap must be >= 1");
  StabilizationReport r;
  r.model = std::move(model_name);
  r.probed_stages = cap;

  std::vector<std::vector<Elem>> homs;
  for (std::size_t i = 0; i <= cap; ++i) homs.push_back(hom_at(i));
  for (const auto& h : homs) r.hom_counts.push_back(h.size());

  // stage-to-stage pushforwards and bijection flags
  std::vector<bool> bijective(cap, false);
  for (std::size_t i = 0; i < cap; ++i) {
    std::vector<Elem> img;
    for (const auto& e : homs[i]) img.push_back(push(i, e));
    bool inj = true;
    for (std::size_t a = 0; a < img.size() && inj; ++a)
      for (std::size_t b = a + 1; b < img.size() && inj; ++b)
        if (img[a] == img[b]) inj = false;
    bool surj = true;
    for (const auto& e : homs[i + 1]) {
      bool hit = false;
      for (const auto& x : img)
        if (x == e) {
          hit = true;
          break;
        }
      if (!hit) {
        surj = false;
        break;
      }
    }
    bijective[i] = inj && surj;
  }
  // least k with every map from stage k on a bijection; k = cap means
  // not even the last map settled, which is no evidence at all
  std::size_t k = cap;
  while (k > 0 && bijective[k - 1]) --k;
  r.stable = k < cap;
  r.stable_stage = r.stable ? k : 0;

  // factorization: least origin stage of every element of the truncated
  // colimit hom-set (the cap stage, by truncation semantics)
  for (const auto& target : homs[cap]) {
    std::size_t least = cap;
    for (std::size_t i = 0; i < cap; ++i) {
      bool hit = false;
      for (const auto& e : homs[i]) {
        Elem cur = e;
        for (std::size_t j = i; j < cap; ++j) cur = push(j, cur);
        if (cur == target) {
          hit = true;
          break;
        }
      }
      if (hit) {
        least = i;
        break;
      }
    }
    r.factorization_stage.push_back({key(target), least});
  }

  // coequalization: pairs distinct at some stage whose pushforwards meet
  for (std::size_t i = 0; i < cap; ++i)
    for (std::size_t a = 0; a < homs[i].size(); ++a)
      for (std::size_t b = a + 1; b < homs[i].size(); ++b) {
        Elem x = homs[i][a], y = homs[i][b];
        if (x == y) continue;
        for (std::size_t j = i; j < cap; ++j) {
          x = push(j, x);
          y = push(j, y);
          if (x == y) {
            r.coequalization_stage.push_back(
                {key(homs[i][a]), key(homs[i][b]), i, j + 1});
            break;
          }
        }
      }
  return r;
}

inline std::string functor_key(const Functor& f) {
  std::vector<std::string> parts;
  for (const auto& [o, io] : f.o_map) parts.push_back(o + "->" + io);
  for (const auto& [m, im] : f.m_map) parts.push_back(m + "->" + im);
  return join(parts, ";");
}

inline std::string graph_morphism_key(const GraphMorphism& f) {
  std::vector<std::string> parts;
  for (const auto& [v, iv] : f.v_map) parts.push_back(v + "->" + iv);
  for (const auto& [e, ie] : f.e_map) parts.push_back(e + "->" + ie);
  return join(parts, ";");
}

}  // namespace detail

/// Probes whether Hom(M, -) stabilizes along the chain, where M is the
/// finite coequalizer of the given presentation. Hom-sets are enumerated
/// by exhaustive functor search; verdict StableBy(k) means every
/// link-induced map from stage k on is a bijection.
inline StabilizationReport fp_stabilization_probe(const Presentation& pres,
                                                  CoeqBounds bounds,
                                                  const ChainSystem& ch,
                                                  std::size_t cap) {
  PresentedCategory pc = coequalize(pres, bounds);
  if (!pc.saturation.finite)
    throw PreconditionError("fp_stabilization_probe: presentation '" +
                            pres.name + "' is not finite at the bound: " +
                            pc.saturation.note);
  FinCategory m = pc.to_category();
  auto hom_at = std::function<std::vector<Functor>(std::size_t)>(
      [&](std::size_t i) { return enumerate_functors(m, ch.stage(i)); });
  auto push = std::function<Functor(std::size_t, const Functor&)>(
      [&](std::size_t i, const Functor& f) { return compose(f, ch.link(i)); });
  auto key = std::function<std::string(const Functor&)>(detail::functor_key);
  return detail::run_probe<Functor>("coeq(" + pres.name + ")",
                                    std::min(cap, ch.cap()), hom_at, push,
                                    key);
}

/// The same probe for a free model on a finite graph, with hom-sets
/// computed on underlying graphs through the adjunction. For acyclic
/// generators the functor-route counts are recorded alongside; the two
/// routes must agree stage by stage.
inline StabilizationReport free_model_fp_check(const FinGraph& g,
                                               const ChainSystem& ch,
                                               std::size_t cap) {
  std::size_t n = std::min(cap, ch.cap());
  auto hom_at = std::function<std::vector<GraphMorphism>(std::size_t)>(
      [&](std::size_t i) {
        return hom_graphs(g, underlying_graph(ch.stage(i)));
      });
  auto push = std::function<GraphMorphism(std::size_t, const GraphMorphism&)>(
      [&](std::size_t i, const GraphMorphism& f) {
        Functor l = ch.link(i);
        GraphMorphism ul{underlying_graph(l.dom), underlying_graph(l.cod),
                         l.o_map, l.m_map};
        return compose(f, ul);
      });
  auto key = std::function<std::string(const GraphMorphism&)>(
      detail::graph_morphism_key);
  StabilizationReport r =
      detail::run_probe<GraphMorphism>("F(" + g.name + ")", n, hom_at, push,
                                       key);
  if (!find_cycle(g)) {
    FinCategory fg = free_category(g);
    std::vector<std::size_t> counts;
    for (std::size_t i = 0; i <= n; ++i)
      counts.push_back(enumerate_functors(fg, ch.stage(i)).size());
    r.functor_route_counts = std::move(counts);
  }
  return r;
}

}  // namespace fincat
