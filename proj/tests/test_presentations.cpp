#include "doctest.h"

#include "fincat/presentation.hpp"
#include "fincat/verify.hpp"

using namespace fincat;
using namespace fincat::verify;

namespace {
const CoeqBounds kBounds{4, 64};
}

TEST_CASE("z2 coequalizes to one object and two morphisms") {
  PresentedCategory pc = coequalize(z2_presentation(), kBounds);
  REQUIRE(pc.saturation.finite);
  CHECK(pc.objects.size() == 1);
  CHECK(pc.morphisms.size() == 2);
  CHECK(pc.comp.at({"a", "a"}) == "id(v)");
  CHECK(pc.to_category().compose("a", "a") == "id(v)");
}

TEST_CASE("the commutative square identifies exactly one pair") {
  PresentedCategory pc = coequalize(square_presentation(), kBounds);
  REQUIRE(pc.saturation.finite);
  CHECK(pc.objects.size() == 4);
  CHECK(pc.morphisms.size() == 9);
  CHECK(*pc.class_name_of(Path{"a", {"f", "g"}}) ==
        *pc.class_name_of(Path{"a", {"h", "k"}}));
}

TEST_CASE("empty relations on a cyclic generator stay undecided") {
  Presentation p = free_presentation(single_loop_graph(), "freeloop");
  PresentedCategory pc = coequalize(p, kBounds);
  CHECK_FALSE(pc.saturation.finite);
  CHECK(pc.saturation.bound == 4);
  CHECK_THROWS_AS(pc.to_category(), UndecidedError);
}

TEST_CASE("word problem verdicts") {
  PresentedCategory z2 = coequalize(z2_presentation(), kBounds);
  CHECK(morphism_equal(z2, Path{"v", {"a", "a"}}, Path{"v", {}}) ==
        WordVerdict::Equal);
  CHECK(morphism_equal(z2, Path{"v", {"a"}}, Path{"v", {}}) ==
        WordVerdict::Distinct);
  CHECK(morphism_equal(z2, Path{"v", {"a"}}, Path{"v", {"a"}}) ==
        WordVerdict::Equal);
  // finite coequalizers decide words beyond the bound stepwise
  CHECK(morphism_equal(z2, Path{"v", {"a", "a", "a", "a", "a", "a", "a"}},
                       Path{"v", {"a"}}) == WordVerdict::Equal);

  PresentedCategory freeloop =
      coequalize(free_presentation(single_loop_graph(), "fl"), kBounds);
  CHECK(morphism_equal(freeloop, Path{"v", {"a", "a", "a", "a", "a"}},
                       Path{"v", {}}) == WordVerdict::Undecided);
  // frontier classes stay undecided, equal words are still equal
  CHECK(morphism_equal(freeloop, Path{"v", {"a"}}, Path{"v", {"a"}}) ==
        WordVerdict::Equal);
  CHECK(morphism_equal(freeloop, Path{"v", {"a", "a", "a", "a"}},
                       Path{"v", {}}) == WordVerdict::Undecided);
}

TEST_CASE("acyclic generators saturate exactly at the longest path") {
  // bound equal to the longest path suffices when nothing extends
  Presentation p = free_presentation(square_graph(), "freesq");
  PresentedCategory pc = coequalize(p, CoeqBounds{2, 64});
  REQUIRE(pc.saturation.finite);
  FinCategory direct = free_category(square_graph());
  CHECK(pc.to_category() == direct);

  PresentedCategory sq = coequalize(square_presentation(), CoeqBounds{2, 64});
  CHECK(sq.saturation.finite);
  CHECK(sq.morphisms.size() == 9);
}

TEST_CASE("engine classes match the congruence oracle") {
  for (const auto& p :
       {z2_presentation(), z3_presentation(), square_presentation(),
        merge_presentation(), loop_collapse_presentation()}) {
    PresentedCategory pc = coequalize(p, kBounds);
    CHECK(engine_classes(pc) == congruence_oracle(p, kBounds.max_path_len));
  }

  // two identified loops force closure on both sides
  Presentation twin;
  twin.name = "twin";
  twin.generators = two_loop_graph();
  twin.relations = make_graph("H", {"h0"}, {{"r", "h0", "h0"}});
  twin.alpha.v_map = {{"h0", "v"}};
  twin.beta.v_map = {{"h0", "v"}};
  twin.alpha.e_map = {{"r", Path{"v", {"u"}}}};
  twin.beta.e_map = {{"r", Path{"v", {"w"}}}};
  PresentedCategory tc = coequalize(twin, CoeqBounds{3, 64});
  CHECK(engine_classes(tc) == congruence_oracle(twin, 3));
  CHECK_FALSE(tc.saturation.finite);  // the free loop survives the quotient

  // a one-sided cancellation between two objects: alternation keeps the
  // quotient finite, with one idempotent loop f.e left over
  Presentation walk;
  walk.name = "walk";
  walk.generators = make_graph("G", {"x", "y"},
                               {{"e", "x", "y"}, {"f", "y", "x"}});
  walk.relations = make_graph("H", {"h0"}, {{"r", "h0", "h0"}});
  walk.alpha.v_map = {{"h0", "x"}};
  walk.beta.v_map = {{"h0", "x"}};
  walk.alpha.e_map = {{"r", Path{"x", {"e", "f"}}}};
  walk.beta.e_map = {{"r", Path{"x", {}}}};
  PresentedCategory wc = coequalize(walk, kBounds);
  CHECK(engine_classes(wc) == congruence_oracle(walk, kBounds.max_path_len));
  REQUIRE(wc.saturation.finite);
  CHECK(wc.morphisms.size() == 5);
  CHECK(wc.comp.at({"e", "f"}) == "id(x)");
  CHECK(wc.comp.at({"f.e", "f.e"}) == "f.e");

  // the same cancellation with both generators looping on one vertex is
  // the bicyclic monoid: genuinely infinite, so the bound must report
  // undecided while the bounded classes still agree with the oracle
  Presentation bicyclic;
  bicyclic.name = "bicyclic";
  bicyclic.generators = make_graph("G", {"v"},
                                   {{"e", "v", "v"}, {"f", "v", "v"}});
  bicyclic.relations = make_graph("H", {"h0"}, {{"r", "h0", "h0"}});
  bicyclic.alpha.v_map = {{"h0", "v"}};
  bicyclic.beta.v_map = {{"h0", "v"}};
  bicyclic.alpha.e_map = {{"r", Path{"v", {"e", "f"}}}};
  bicyclic.beta.e_map = {{"r", Path{"v", {}}}};
  PresentedCategory bc = coequalize(bicyclic, kBounds);
  CHECK(engine_classes(bc) ==
        congruence_oracle(bicyclic, kBounds.max_path_len));
  CHECK_FALSE(bc.saturation.finite);

  // parallel edges collapse onto one another
  Presentation par;
  par.name = "par";
  par.generators = parallel_pair_graph();
  par.relations = make_graph("H", {"h0", "h1"}, {{"r", "h0", "h1"}});
  par.alpha.v_map = {{"h0", "a"}, {"h1", "b"}};
  par.beta.v_map = {{"h0", "a"}, {"h1", "b"}};
  par.alpha.e_map = {{"r", Path{"a", {"e"}}}};
  par.beta.e_map = {{"r", Path{"a", {"f"}}}};
  PresentedCategory pp = coequalize(par, kBounds);
  CHECK(engine_classes(pp) == congruence_oracle(par, kBounds.max_path_len));
  REQUIRE(pp.saturation.finite);
  CHECK(pp.morphisms.size() == 3);  // two identities and the merged edge
}

TEST_CASE("normal forms are canonical and idempotent under composition") {
  PresentedCategory z3 = coequalize(z3_presentation(), kBounds);
  REQUIRE(z3.saturation.finite);
  for (const auto& m : z3.morphisms)
    CHECK(*z3.class_name_of(Path{z3.msrc.at(m), {}}) ==
          z3.ids.at(z3.msrc.at(m)));
  for (const auto& [pair, h] : z3.comp) {
    // composing normal forms and renormalizing is stable
    auto again = z3.comp.find({h, z3.ids.at(z3.mtgt.at(h))});
    REQUIRE(again != z3.comp.end());
    CHECK(again->second == h);
  }
}

TEST_CASE("vertex relations quotient objects") {
  PresentedCategory pc = coequalize(merge_presentation(), kBounds);
  REQUIRE(pc.saturation.finite);
  CHECK(pc.objects.size() == 1);
  CHECK(pc.morphisms.size() == 1);
  CHECK(pc.vertex_class.at("x") == pc.vertex_class.at("y"));
}

TEST_CASE("coequalizer universal property at desk scale") {
  // every coequalizing assignment factors uniquely through the quotient
  Presentation pres = z2_presentation();
  PresentedCategory pc = coequalize(pres, kBounds);
  FinCategory m = pc.to_category();
  for (const auto& x :
       {cyclic_group_category(2, "z2x"), cyclic_group_category(4, "z4"),
        idempotent_monoid_category(), terminal_category()}) {
    for (const auto& gm : hom_graphs(pres.generators, underlying_graph(x))) {
      PathAssignment g = transpose_to_functor(gm, x);
      bool coequalizes = true;
      for (const auto& h : pres.relations.edges)
        if (g.apply_path(pres.alpha.e_map.at(h)) !=
            g.apply_path(pres.beta.e_map.at(h)))
          coequalizes = false;
      std::size_t factorings = 0;
      for (const auto& f : enumerate_functors(m, x)) {
        bool matches = true;
        for (const auto& v : pres.generators.vertices)
          if (f.o_map.at(pc.vertex_class.at(v)) != g.v_map.at(v))
            matches = false;
        for (const auto& e : pres.generators.edges) {
          std::string cls = *pc.class_name_of(
              Path{pres.generators.src.at(e), {e}});
          if (f.m_map.at(cls) != g.e_map.at(e)) matches = false;
        }
        if (matches) ++factorings;
      }
      CHECK(factorings == (coequalizes ? 1 : 0));
    }
  }
}

TEST_CASE("section normalization on the merge example") {
  SectionedPresentation sp = section_normalize(merge_presentation(), kBounds);
  CHECK(sp.model.objects.size() == 1);
  CHECK(sp.normalized.generators.vertices.size() == 1);
  CHECK(sp.coequalizers_isomorphic);
  CHECK(compose(sp.section, sp.qbar) ==
        identity_morphism(underlying_graph(sp.model.to_category())));
}

TEST_CASE("discrete vertex relation leaves the generators untouched") {
  SectionedPresentation sp = section_normalize(z2_presentation(), kBounds);
  CHECK(sp.normalized.generators == z2_presentation().generators);
  CHECK(sp.section_path.at("id(v)").empty());
  CHECK(sp.section_path.at("a").edges == std::vector<std::string>{"a"});
  CHECK(sp.coequalizers_isomorphic);
}

TEST_CASE("section normalization refuses undecided coequalizers") {
  Presentation p = free_presentation(single_loop_graph(), "fl");
  CHECK_THROWS_AS(section_normalize(p, kBounds), UndecidedError);
}

TEST_CASE("coproducts of presentations") {
  Presentation p = coproduct_presentations(z2_presentation(),
                                           z2_presentation());
  PresentedCategory pc = coequalize(p, kBounds);
  REQUIRE(pc.saturation.finite);
  CHECK(pc.objects.size() == 2);
  CHECK(pc.morphisms.size() == 4);

  Presentation q =
      coproduct_presentations(square_presentation(), merge_presentation());
  PresentedCategory qc = coequalize(q, kBounds);
  REQUIRE(qc.saturation.finite);
  CHECK(qc.objects.size() == 5);
  CHECK(qc.morphisms.size() == 10);
}

TEST_CASE("presentation of a category round-trips through coequalize") {
  for (const auto& c :
       {cyclic_group_category(2, "z2"), idempotent_monoid_category(),
        free_category(path_graph(2))}) {
    Presentation p = presentation_of_category(c);
    PresentedCategory pc = coequalize(p, kBounds);
    REQUIRE(pc.saturation.finite);
    CHECK(categories_isomorphic(pc.to_category(), c));
  }
}

TEST_CASE("coequalizers of functors, direct route") {
  FinCategory d2 = discrete_category("d2", {"x", "y"});
  FinCategory pt = terminal_category();
  Functor to_x = make_functor(pt, d2, {{"*", "x"}}, {{"id(*)", "id(x)"}});
  Functor to_y = make_functor(pt, d2, {{"*", "y"}}, {{"id(*)", "id(y)"}});
  PresentedCategory pc = coequalize_functors(to_x, to_y, kBounds);
  REQUIRE(pc.saturation.finite);
  CHECK(pc.to_category().objects.size() == 1);

  // equal pair: the coequalizer is the codomain
  PresentedCategory same = coequalize_functors(to_x, to_x, kBounds);
  REQUIRE(same.saturation.finite);
  CHECK(categories_isomorphic(same.to_category(), d2));
}

TEST_CASE("engine and oracle agree on every single-relation presentation") {
  // exhaustive family: one relation identifying any two paths of length
  // <= 2 over each base graph; unequal endpoints exercise the vertex
  // quotient as well
  for (const auto& g :
       {two_loop_graph(), parallel_pair_graph(), path_graph(2)}) {
    auto paths = free_paths(g, 2).paths;
    for (const auto& p : paths)
      for (const auto& q : paths) {
        Presentation pres;
        pres.name = "one-rel";
        pres.generators = g;
        pres.relations = make_graph("H", {"w0", "w1"}, {{"r", "w0", "w1"}});
        pres.alpha.v_map = {{"w0", p.start}, {"w1", path_end(g, p)}};
        pres.beta.v_map = {{"w0", q.start}, {"w1", path_end(g, q)}};
        pres.alpha.e_map = {{"r", p}};
        pres.beta.e_map = {{"r", q}};
        PresentedCategory pc = coequalize(pres, CoeqBounds{3, 256});
        CHECK(engine_classes(pc) == congruence_oracle(pres, 3));
        if (pc.saturation.finite) {
          // the quotient really coequalizes the relation
          CHECK(*pc.class_name_of(p) == *pc.class_name_of(q));
          validate(pc.to_category());
        }
      }
  }
}

TEST_CASE("normal forms are the length-lex least members of their class") {
  for (const auto& p :
       {z2_presentation(), z3_presentation(), square_presentation()}) {
    PresentedCategory pc = coequalize(p, kBounds);
    const FinGraph& q = pc.quotient_graph;
    for (std::size_t i = 0; i < pc.cong.paths.size(); ++i) {
      const Path& nf = pc.cong.normal_form(pc.cong.class_id[i]);
      CHECK_FALSE(path_less(pc.cong.paths[i], nf));
      // classes refine endpoint equality
      CHECK(pc.cong.paths[i].start == nf.start);
      CHECK(path_end(q, pc.cong.paths[i]) == path_end(q, nf));
    }
  }
}

TEST_CASE("equal functors out of the point into z2 coequalize to z2") {
  Presentation pP = free_presentation(representable(Cell::Zero), "pt");
  Presentation pQ = z2_presentation();
  FinCategory p = coequalize(pP, kBounds).to_category();
  FinCategory q = coequalize(pQ, kBounds).to_category();
  Functor u = make_functor(p, q, {{"a", "v"}}, {{"id(a)", "id(v)"}});
  Presentation lifted = coequalizer_of_presented(u, u, pP, pQ, kBounds);
  PresentedCategory via = coequalize(lifted, kBounds);
  REQUIRE(via.saturation.finite);
  CHECK(categories_isomorphic(via.to_category(), q));
}

TEST_CASE("lifted coequalizer presentation agrees with the direct route") {
  Presentation pP = free_presentation(representable(Cell::Zero), "pt");
  Presentation pQ = free_presentation(make_graph("dd", {"x", "y"}, {}), "dd");
  FinCategory p = coequalize(pP, kBounds).to_category();
  FinCategory q = coequalize(pQ, kBounds).to_category();
  Functor u = make_functor(p, q, {{"a", "x"}}, {{"id(a)", "id(x)"}});
  Functor v = make_functor(p, q, {{"a", "y"}}, {{"id(a)", "id(y)"}});
  Presentation lifted = coequalizer_of_presented(u, v, pP, pQ, kBounds);
  PresentedCategory via = coequalize(lifted, kBounds);
  PresentedCategory direct = coequalize_functors(u, v, kBounds);
  REQUIRE(via.saturation.finite);
  REQUIRE(direct.saturation.finite);
  CHECK(categories_isomorphic(via.to_category(), direct.to_category()));
  CHECK(via.to_category().objects.size() == 1);
}

TEST_CASE("retract criterion") {
  Presentation fp = z2_presentation();
  FinCategory f = coequalize(fp, kBounds).to_category();
  Functor id = identity_functor(f);
  CHECK(verify_retract_coequalizer(fp, id, id, kBounds));

  FinCategory t = terminal_category();
  Functor into = make_functor(t, f, {{"*", "v"}}, {{"id(*)", "id(v)"}});
  Functor onto = make_functor(f, t, {{"v", "*"}},
                              {{"id(v)", "id(*)"}, {"a", "id(*)"}});
  CHECK(verify_retract_coequalizer(fp, into, onto, kBounds));

  // a section/retraction pair that is not one
  Presentation dd = free_presentation(make_graph("dd", {"x", "y"}, {}), "dd");
  FinCategory d = coequalize(dd, kBounds).to_category();
  Functor swap = make_functor(d, d, {{"x", "y"}, {"y", "x"}},
                              {{"id(x)", "id(y)"}, {"id(y)", "id(x)"}});
  CHECK_THROWS_AS(
      verify_retract_coequalizer(dd, swap, identity_functor(d), kBounds),
      PreconditionError);
}

TEST_CASE("class counts beyond max_morphisms are reported undecided") {
  PresentedCategory pc = coequalize(z2_presentation(), CoeqBounds{4, 1});
  CHECK_FALSE(pc.saturation.finite);
  CHECK(pc.saturation.note.find("2 classes") != std::string::npos);
  CHECK(pc.comp.empty());
}

TEST_CASE("seeds beyond the bound are reported undecided") {
  Presentation p = z2_presentation();
  p.alpha.e_map["r"] = Path{"v", {"a", "a", "a", "a", "a"}};
  PresentedCategory pc = coequalize(p, kBounds);
  CHECK_FALSE(pc.saturation.finite);
  CHECK(pc.saturation.note.find("exceeds") != std::string::npos);
  // no class data exists yet, so every word query must stay undecided
  CHECK(morphism_equal(pc, Path{"v", {"a"}}, Path{"v", {}}) ==
        WordVerdict::Undecided);
  PresentedCategory tight = coequalize(z2_presentation(), CoeqBounds{1, 64});
  CHECK_FALSE(tight.saturation.finite);
  CHECK(morphism_equal(tight, Path{"v", {"a"}}, Path{"v", {}}) ==
        WordVerdict::Undecided);
}

TEST_CASE("presentation validation") {
  Presentation p = z2_presentation();
  p.alpha.e_map["r"] = Path{"v", {}};
  CHECK_NOTHROW(validate(p));
  Presentation q = square_presentation();
  q.alpha.e_map["r"] = Path{"a", {"f"}};  // ends at b, not at beta(w1)=d
  CHECK_THROWS_AS(validate(q), StructuralError);
}
