#include <thread>

#include "doctest.h"

#include "fincat/fp_probe.hpp"
#include "fincat/verify.hpp"

using namespace fincat;
using namespace fincat::verify;

TEST_CASE("truncated chain colimits") {
  FinCategory z2 = cyclic_group_category(2, "z2");
  ChainSystem constant = constant_chain(z2, 5);
  TruncatedColimit tc = chain_colimit_truncated(constant, 3);
  CHECK(tc.colimit == z2);
  REQUIRE(tc.cocone.size() == 4);
  for (const auto& f : tc.cocone) CHECK(f == identity_functor(z2));

  ChainSystem incl = discrete_inclusion_chain(5);
  TruncatedColimit di = chain_colimit_truncated(incl, 3);
  CHECK(di.colimit.objects.size() == 4);
  // the cocone is the composite of the links
  CHECK(di.cocone[0].o_map.at("o0") == "o0");
  CHECK(di.cocone[0].dom.objects.size() == 1);

  ChainSystem coll = collapse_chain(5);
  CHECK(chain_colimit_truncated(coll, 0).colimit.objects.size() == 2);
  CHECK(chain_colimit_truncated(coll, 2).colimit.objects.size() == 1);
}

TEST_CASE("chain caps are enforced and stages memoized deterministically") {
  ChainSystem incl = discrete_inclusion_chain(3);
  CHECK_THROWS_AS(incl.stage(4), PreconditionError);
  CHECK(incl.stage(2) == incl.stage(2));
  CHECK(incl.link(1).dom == incl.stage(1));
  CHECK(incl.link(1).cod == incl.stage(2));
}

TEST_CASE("a growing hom never stabilizes") {
  Presentation f0 = free_presentation(representable(Cell::Zero), "f0");
  for (std::size_t cap : {1u, 4u, 9u}) {
    StabilizationReport r = fp_stabilization_probe(
        f0, CoeqBounds{2, 16}, discrete_inclusion_chain(cap), cap);
    CHECK_FALSE(r.stable);
    CHECK(r.probed_stages == cap);
    for (std::size_t i = 0; i <= cap; ++i) CHECK(r.hom_counts[i] == i + 1);
    // everything in the colimit hom set factors through some stage
    CHECK(r.factorization_stage.size() == cap + 1);
  }
}

TEST_CASE("the collapse chain coequalizes the two points at stage one") {
  Presentation f0 = free_presentation(representable(Cell::Zero), "f0");
  StabilizationReport r =
      fp_stabilization_probe(f0, CoeqBounds{2, 16}, collapse_chain(6), 6);
  CHECK(r.stable);
  CHECK(r.stable_stage == 1);
  REQUIRE(!r.coequalization_stage.empty());
  CHECK(r.coequalization_stage.front().found_at == 0);
  CHECK(r.coequalization_stage.front().merged_at == 1);
  // a stable verdict bounds every recorded stage
  for (const auto& [key, stage] : r.factorization_stage)
    CHECK(stage <= r.stable_stage);
  for (const auto& p : r.coequalization_stage)
    CHECK(p.merged_at <= r.stable_stage);
}

TEST_CASE("a constant chain is stable from the start") {
  Presentation z2 = z2_presentation();
  FinCategory z2cat = cyclic_group_category(2, "z2");
  StabilizationReport r = fp_stabilization_probe(
      z2, CoeqBounds{4, 64}, constant_chain(z2cat, 4), 4);
  CHECK(r.stable);
  CHECK(r.stable_stage == 0);
  for (auto n : r.hom_counts) CHECK(n == 2);  // identity and the collapse
}

TEST_CASE("free model probe computes hom sets on underlying graphs") {
  StabilizationReport r =
      free_model_fp_check(representable(Cell::Zero), collapse_chain(6), 6);
  CHECK(r.stable);
  CHECK(r.stable_stage == 1);
  CHECK(r.hom_counts.front() == 2);
  CHECK(r.hom_counts.back() == 1);

  StabilizationReport c = free_model_fp_check(
      representable(Cell::One),
      constant_chain(cyclic_group_category(2, "z2"), 4), 4);
  CHECK(c.stable);
  CHECK(c.stable_stage == 0);
  for (auto n : c.hom_counts) CHECK(n == 2);  // edges of U(z2)
}

TEST_CASE("the two hom routes agree on acyclic generators") {
  for (const auto& g :
       {representable(Cell::Zero), representable(Cell::One), path_graph(2)}) {
    StabilizationReport r =
        free_model_fp_check(g, discrete_inclusion_chain(4), 4);
    REQUIRE(r.functor_route_counts.has_value());
    CHECK(*r.functor_route_counts == r.hom_counts);
  }
}

TEST_CASE("naturality: pushing forward commutes with the transpose") {
  FinGraph g = path_graph(1);
  ChainSystem ch = constant_chain(cyclic_group_category(2, "z2"), 3);
  FinCategory fg = free_category(g);
  for (std::size_t i = 0; i < 3; ++i) {
    FinCategory stage = ch.stage(i);
    Functor link = ch.link(i);
    GraphMorphism ulink{underlying_graph(link.dom),
                        underlying_graph(link.cod), link.o_map, link.m_map};
    for (const auto& f : enumerate_functors(fg, stage)) {
      GraphMorphism restricted = restrict_to_generators(f, g);
      CHECK(compose(restricted, ulink) ==
            restrict_to_generators(compose(f, link), g));
    }
  }
}

TEST_CASE("concurrent probes over one chain see identical stages") {
  ChainSystem ch = discrete_inclusion_chain(8);
  FinGraph point = representable(Cell::Zero);
  StabilizationReport a, b;
  std::thread ta([&] { a = free_model_fp_check(point, ch, 8); });
  std::thread tb([&] { b = free_model_fp_check(point, ch, 8); });
  ta.join();
  tb.join();
  CHECK(a.hom_counts == b.hom_counts);
  CHECK(a.stable == b.stable);
  CHECK(a.hom_counts == free_model_fp_check(point, ch, 8).hom_counts);
}

TEST_CASE("monotone verdicts under larger caps") {
  Presentation f0 = free_presentation(representable(Cell::Zero), "f0");
  std::size_t previous = SIZE_MAX;
  for (std::size_t cap : {2u, 4u, 6u}) {
    StabilizationReport r =
        fp_stabilization_probe(f0, CoeqBounds{2, 16}, collapse_chain(cap),
                               cap);
    REQUIRE(r.stable);
    CHECK(r.stable_stage <= previous);
    previous = r.stable_stage;
  }
}
