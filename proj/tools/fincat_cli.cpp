// fincat command line: graphs, free categories, model checking,
// presentations and the stabilization probe, over the line-based text
// formats. Exit codes: 0 success/pass, 1 check failure, 2 undecided or
// bound exceeded, 3 input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fincat/category.hpp"
#include "fincat/error.hpp"
#include "fincat/format.hpp"
#include "fincat/fp_probe.hpp"
#include "fincat/graph.hpp"
#include "fincat/graph_limits.hpp"
#include "fincat/model.hpp"
#include "fincat/path.hpp"
#include "fincat/presentation.hpp"
#include "fincat/verify.hpp"

namespace {

using nlohmann::json;
using namespace fincat;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUndecided = 2;
constexpr int kInputError = 3;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Report {
  std::vector<std::string> lines;
  json j;
  int code = kOk;

  void say(const std::string& line) { lines.push_back(line); }
};

json graph_json(const FinGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges)
    edges.push_back({{"id", e}, {"src", g.src.at(e)}, {"tgt", g.tgt.at(e)}});
  return {{"name", g.name}, {"vertices", g.vertices}, {"edges", edges}};
}

json morphism_json(const GraphMorphism& m) {
  return {{"vertices", m.v_map}, {"edges", m.e_map}};
}

void print_graph_block(Report& r, const FinGraph& g) {
  std::istringstream in(write_graph(g));
  std::string line;
  while (std::getline(in, line)) r.say(line);
}

Theory parse_theory(const std::string& s) {
  if (s == "cat") return Theory::Category;
  if (s == "grpd") return Theory::Groupoid;
  throw ParseError("unknown theory '" + s + "' (expected cat or grpd)");
}

// ---------------------------------------------------------------------

Report cmd_free(const std::string& file) {
  Report r;
  r.j["command"] = "free";
  FinGraph g = parse_graph(slurp(file), file);
  try {
    FinCategory c = free_category(g);
    r.j["status"] = "finite";
    r.j["objects"] = c.objects;
    json ms = json::array();
    r.say("category " + c.name);
    r.say("objects (" + std::to_string(c.objects.size()) + "): " +
          detail::join(c.objects, " "));
    r.say("morphisms (" + std::to_string(c.morphisms.size()) + "):");
    for (const auto& m : c.morphisms) {
      r.say("  " + m + " : " + c.src.at(m) + " -> " + c.tgt.at(m));
      ms.push_back({{"id", m}, {"src", c.src.at(m)}, {"tgt", c.tgt.at(m)}});
    }
    r.j["morphisms"] = ms;
    json comp = json::array();
    for (const auto& [p, h] : c.comp) {
      comp.push_back({{"f", p.first}, {"g", p.second}, {"fg", h}});
      if (p.first == c.ids.at(c.src.at(p.first)) ||
          p.second == c.ids.at(c.src.at(p.second)))
        continue;  // identity composites are noise in the text report
      r.say("comp " + h + " = " + p.second + " . " + p.first);
    }
    r.j["comp"] = comp;
  } catch (const AcyclicityError& e) {
    r.j["status"] = "cyclic";
    r.j["cycle"] = e.cycle;
    r.say("free category on '" + g.name + "' is infinite");
    r.say("witness cycle: " + detail::join(e.cycle, " "));
    r.code = kUndecided;
  }
  return r;
}

Report cmd_check_model(const std::string& theory, const std::string& file) {
  Report r;
  r.j["command"] = "check-model";
  Theory t = parse_theory(theory);
  r.j["theory"] = theory;
  ModelData m = parse_model(slurp(file), file);
  CheckReport cr = check_model(m, t);
  r.j["passed"] = cr.passed;
  json vs = json::array();
  if (cr.passed) {
    r.say("passed");
  } else {
    for (const auto& v : cr.violations) {
      r.say("violation " + describe(v));
      vs.push_back({{"axiom", v.axiom}, {"witness", v.witness}});
    }
    r.code = kCheckFailed;
  }
  r.j["violations"] = vs;
  return r;
}

Report cmd_enumerate_models(const std::string& theory, std::uint64_t cap,
                            const std::string& file) {
  Report r;
  r.j["command"] = "enumerate-models";
  Theory t = parse_theory(theory);
  r.j["theory"] = theory;
  FinGraph g = parse_graph(slurp(file), file);
  auto models = enumerate_models(g, t, cap);
  r.j["count"] = models.size();
  r.say("models: " + std::to_string(models.size()));
  json ms = json::array();
  for (std::size_t i = 0; i < models.size(); ++i) {
    const ModelData& m = models[i];
    r.say("model " + std::to_string(i) + ":");
    json jm;
    jm["unit"] = m.unit;
    for (const auto& [v, e] : m.unit) r.say("  unit " + v + " = " + e);
    json comp = json::array();
    for (const auto& [p, h] : m.comp) {
      r.say("  comp " + p.second + " after " + p.first + " = " + h);
      comp.push_back({{"f", p.first}, {"g", p.second}, {"fg", h}});
    }
    jm["comp"] = comp;
    if (m.inv) {
      jm["inv"] = *m.inv;
      for (const auto& [e, ie] : *m.inv) r.say("  inv " + e + " = " + ie);
    }
    ms.push_back(jm);
  }
  r.j["models"] = ms;
  return r;
}

void describe_presented(Report& r, const PresentedCategory& pc) {
  r.j["objects"] = pc.objects;
  r.say("objects (" + std::to_string(pc.objects.size()) + "): " +
        detail::join(pc.objects, " "));
  r.say("morphisms (" + std::to_string(pc.morphisms.size()) + "):");
  json ms = json::array();
  for (const auto& m : pc.morphisms) {
    r.say("  " + m + " : " + pc.msrc.at(m) + " -> " + pc.mtgt.at(m));
    ms.push_back({{"id", m}, {"src", pc.msrc.at(m)}, {"tgt", pc.mtgt.at(m)}});
  }
  r.j["morphisms"] = ms;
}

Report cmd_coeq(std::size_t max_len, std::size_t max_morphisms,
                const std::string& file) {
  Report r;
  r.j["command"] = "coeq";
  Presentation p = parse_presentation(slurp(file), file);
  p.name = file;
  PresentedCategory pc = coequalize(p, CoeqBounds{max_len, max_morphisms});
  if (pc.saturation.finite) {
    r.j["status"] = "finite";
    r.say("status: finite");
    describe_presented(r, pc);
    json comp = json::array();
    for (const auto& [pair, h] : pc.comp) {
      comp.push_back({{"f", pair.first}, {"g", pair.second}, {"fg", h}});
      bool f_is_id = pc.ids.at(pc.msrc.at(pair.first)) == pair.first;
      bool g_is_id = pc.ids.at(pc.msrc.at(pair.second)) == pair.second;
      if (!f_is_id && !g_is_id)
        r.say("comp " + h + " = " + pair.second + " . " + pair.first);
    }
    r.j["comp"] = comp;
  } else {
    r.j["status"] = "undecided";
    r.j["bound"] = pc.saturation.bound;
    r.j["note"] = pc.saturation.note;
    r.j["classes_at_bound"] = pc.morphisms.size();
    r.say("status: undecided(bound=" + std::to_string(pc.saturation.bound) +
          ")");
    r.say("note: " + pc.saturation.note);
    r.say("classes at bound: " + std::to_string(pc.morphisms.size()));
    r.code = kUndecided;
  }
  return r;
}

Report cmd_word_eq(std::size_t max_len, std::size_t max_morphisms,
                   const std::string& file, const std::string& lhs,
                   const std::string& rhs) {
  Report r;
  r.j["command"] = "word-eq";
  Presentation p = parse_presentation(slurp(file), file);
  PresentedCategory pc = coequalize(p, CoeqBounds{max_len, max_morphisms});
  Path a = parse_path_expr(lhs, p.generators, file);
  Path b = parse_path_expr(rhs, p.generators, file);
  WordVerdict v = morphism_equal(pc, a, b);
  r.j["verdict"] = to_string(v);
  r.say(to_string(v));
  if (v == WordVerdict::Distinct) r.code = kCheckFailed;
  if (v == WordVerdict::Undecided) r.code = kUndecided;
  return r;
}

Report cmd_section_normalize(std::size_t max_len, std::size_t max_morphisms,
                             const std::string& file) {
  Report r;
  r.j["command"] = "section-normalize";
  Presentation p = parse_presentation(slurp(file), file);
  p.name = file;
  SectionedPresentation sp =
      section_normalize(p, CoeqBounds{max_len, max_morphisms});
  json classes = json::object();
  r.say("vertex classes:");
  for (const auto& [v, cls] : sp.model.vertex_class) {
    r.say("  " + v + " ~ " + cls);
    classes[v] = cls;
  }
  r.j["vertex_classes"] = classes;
  r.say("normalized presentation:");
  std::istringstream in(write_presentation(sp.normalized));
  for (std::string line; std::getline(in, line);) r.say("  " + line);
  r.j["normalized"] = write_presentation(sp.normalized);
  r.say("section:");
  json sec = json::object();
  for (const auto& [m, path] : sp.section_path) {
    r.say("  " + m + " -> " + path_name(path));
    sec[m] = path_name(path);
  }
  r.j["section"] = sec;
  bool qs = compose(sp.section, sp.qbar) ==
            identity_morphism(underlying_graph(sp.model.to_category()));
  r.say(std::string("q-bar . s = id: ") + (qs ? "ok" : "FAILED"));
  r.say(std::string("coequalizers isomorphic: ") +
        (sp.coequalizers_isomorphic ? "yes" : "NO"));
  r.j["section_identity"] = qs;
  r.j["coequalizers_isomorphic"] = sp.coequalizers_isomorphic;
  if (!qs || !sp.coequalizers_isomorphic) r.code = kCheckFailed;
  return r;
}

Report cmd_hom_count(const std::string& file_a, const std::string& file_b,
                     bool list) {
  Report r;
  r.j["command"] = "hom-count";
  FinGraph a = parse_graph(slurp(file_a), file_a);
  FinGraph b = parse_graph(slurp(file_b), file_b);
  auto hom = hom_graphs(a, b);
  r.j["count"] = hom.size();
  r.say("morphisms: " + std::to_string(hom.size()));
  json ms = json::array();
  if (list) {
    for (std::size_t i = 0; i < hom.size(); ++i) {
      std::vector<std::string> parts;
      for (const auto& [v, iv] : hom[i].v_map) parts.push_back(v + "->" + iv);
      for (const auto& [e, ie] : hom[i].e_map) parts.push_back(e + "->" + ie);
      r.say("  " + detail::join(parts, " "));
      ms.push_back(morphism_json(hom[i]));
    }
    r.j["morphisms"] = ms;
  }
  return r;
}

Report cmd_pushout(const std::string& file) {
  Report r;
  r.j["command"] = "pushout";
  SpanFile sf = parse_span(slurp(file), file);
  if (sf.maps.size() != 2)
    throw ParseError(file + ": pushout needs exactly two maps, found " +
                     std::to_string(sf.maps.size()));
  if (!(sf.maps[0].dom == sf.maps[1].dom))
    throw ParseError(file + ": the two maps do not share a domain");
  Pushout po = pushout(sf.maps[0], sf.maps[1]);
  po.graph.name = "pushout";
  print_graph_block(r, po.graph);
  r.j["graph"] = graph_json(po.graph);
  r.say("injection " + sf.map_names[0] + ".cod:");
  for (const auto& [v, iv] : po.in_left.v_map)
    r.say("  vertex " + v + " -> " + iv);
  for (const auto& [e, ie] : po.in_left.e_map)
    r.say("  edge " + e + " -> " + ie);
  r.say("injection " + sf.map_names[1] + ".cod:");
  for (const auto& [v, iv] : po.in_right.v_map)
    r.say("  vertex " + v + " -> " + iv);
  for (const auto& [e, ie] : po.in_right.e_map)
    r.say("  edge " + e + " -> " + ie);
  r.j["in_left"] = morphism_json(po.in_left);
  r.j["in_right"] = morphism_json(po.in_right);
  return r;
}

ChainSystem make_chain(const std::string& spec, std::size_t cap) {
  if (spec == "discrete-inclusion") return discrete_inclusion_chain(cap);
  if (spec == "collapse") return collapse_chain(cap);
  const std::string prefix = "constant:";
  if (spec.rfind(prefix, 0) == 0) {
    std::string file = spec.substr(prefix.size());
    return constant_chain(parse_category(slurp(file), file), cap);
  }
  throw ParseError("unknown chain '" + spec +
                   "' (expected discrete-inclusion, collapse or "
                   "constant:<categoryfile>)");
}

void describe_probe(Report& r, const StabilizationReport& sr) {
  r.j["model"] = sr.model;
  r.j["probed_stages"] = sr.probed_stages;
  r.j["hom_counts"] = sr.hom_counts;
  r.say("model: " + sr.model);
  std::vector<std::string> counts;
  for (auto n : sr.hom_counts) counts.push_back(std::to_string(n));
  r.say("hom counts by stage: " + detail::join(counts, " "));
  json coeqs = json::array();
  for (const auto& p : sr.coequalization_stage) {
    r.say("coequalized at stage " + std::to_string(p.merged_at) + ": pair " +
          "from stage " + std::to_string(p.found_at));
    coeqs.push_back({{"first", p.first},
                     {"second", p.second},
                     {"found_at", p.found_at},
                     {"merged_at", p.merged_at}});
  }
  r.j["coequalized_pairs"] = coeqs;
  json facts = json::array();
  for (const auto& [key, stage] : sr.factorization_stage)
    facts.push_back({{"element", key}, {"stage", stage}});
  r.j["factorization_stage"] = facts;
  if (sr.functor_route_counts) {
    r.j["functor_route_counts"] = *sr.functor_route_counts;
    r.say(std::string("hom routes agree: ") +
          (*sr.functor_route_counts == sr.hom_counts ? "yes" : "NO"));
  }
  r.say("verdict: " + verdict_string(sr));
  r.j["verdict"] = verdict_string(sr);
  if (!sr.stable) r.code = kUndecided;
}

Report cmd_fp_probe(std::size_t cap, std::size_t max_len,
                    std::size_t max_morphisms, const std::string& chain_spec,
                    const std::string& model_file,
                    const std::string& free_file) {
  Report r;
  r.j["command"] = "fp-probe";
  ChainSystem ch = make_chain(chain_spec, cap);
  r.j["chain"] = ch.name();
  if (!model_file.empty()) {
    Presentation p = parse_presentation(slurp(model_file), model_file);
    p.name = model_file;
    describe_probe(
        r, fp_stabilization_probe(p, CoeqBounds{max_len, max_morphisms}, ch,
                                  cap));
  } else if (!free_file.empty()) {
    FinGraph g = parse_graph(slurp(free_file), free_file);
    describe_probe(r, free_model_fp_check(g, ch, cap));
  } else {
    throw ParseError("fp-probe: provide --model or --free");
  }
  return r;
}

Report cmd_verify_suite() {
  Report r;
  r.j["command"] = "verify-suite";
  json results = json::array();
  int failures = 0;
  for (const auto& cr : fincat::verify::run_all()) {
    char line[512];
    std::snprintf(line, sizeof line, "%s  %2d %s — %s",
                  cr.passed ? "PASS" : "FAIL", cr.number, cr.name.c_str(),
                  cr.detail.c_str());
    r.say(line);
    results.push_back({{"number", cr.number},
                       {"name", cr.name},
                       {"passed", cr.passed},
                       {"detail", cr.detail}});
    if (!cr.passed) ++failures;
  }
  r.j["results"] = results;
  r.j["failures"] = failures;
  if (failures > 0) r.code = kCheckFailed;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite graphs, free categories, theory models and finite "
               "presentations"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit the report as JSON (format 1)");

  std::string file, file_b, theory = "cat", chain = "discrete-inclusion";
  std::string lhs, rhs, model_file, free_file;
  std::uint64_t cap = 1u << 20;
  std::size_t max_len = 6, max_morphisms = 256, probe_cap = 8;
  bool list = false;

  auto* c_free = app.add_subcommand("free", "free category on a graph");
  c_free->add_option("graph", file, "graph file")->required();

  auto* c_check = app.add_subcommand("check-model",
                                     "check model axioms (cat or grpd)");
  c_check->add_option("--theory", theory, "cat | grpd")->required();
  c_check->add_option("model", file, "model file")->required();

  auto* c_enum = app.add_subcommand("enumerate-models",
                                    "all models on a carrier graph");
  c_enum->add_option("--theory", theory, "cat | grpd")->required();
  c_enum->add_option("--cap", cap, "search space cap");
  c_enum->add_option("graph", file, "graph file")->required();

  auto* c_coeq = app.add_subcommand("coeq",
                                    "coequalizer of a presentation");
  c_coeq->add_option("--max-len", max_len, "path length bound");
  c_coeq->add_option("--max-morphisms", max_morphisms, "class count bound");
  c_coeq->add_option("presentation", file, "presentation file")->required();

  auto* c_sec = app.add_subcommand("section-normalize",
                                   "quotient generators and build a section");
  c_sec->add_option("--max-len", max_len, "path length bound");
  c_sec->add_option("--max-morphisms", max_morphisms, "class count bound");
  c_sec->add_option("presentation", file, "presentation file")->required();

  auto* c_word = app.add_subcommand("word-eq",
                                    "decide equality of two paths");
  c_word->add_option("--max-len", max_len, "path length bound");
  c_word->add_option("--max-morphisms", max_morphisms, "class count bound");
  c_word->add_option("presentation", file, "presentation file")->required();
  c_word->add_option("lhs", lhs, "first path")->required();
  c_word->add_option("rhs", rhs, "second path")->required();

  auto* c_hom = app.add_subcommand("hom-count",
                                   "count graph morphisms A -> B");
  c_hom->add_option("domain", file, "graph file A")->required();
  c_hom->add_option("codomain", file_b, "graph file B")->required();
  c_hom->add_flag("--list", list, "list every morphism");

  auto* c_push = app.add_subcommand("pushout", "pushout of a span");
  c_push->add_option("span", file, "span file")->required();

  auto* c_probe = app.add_subcommand("fp-probe",
                                     "hom stabilization along a chain");
  c_probe->add_option("--cap", probe_cap, "last probed stage");
  c_probe->add_option("--chain", chain,
                      "discrete-inclusion | collapse | constant:<file>");
  c_probe->add_option("--model", model_file, "presentation file");
  c_probe->add_option("--free", free_file, "graph file (free model probe)");
  c_probe->add_option("--max-len", max_len, "path length bound");
  c_probe->add_option("--max-morphisms", max_morphisms, "class count bound");

  auto* c_verify = app.add_subcommand("verify-suite",
                                      "run every acceptance check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  Report r;
  try {
    if (app.got_subcommand(c_free)) r = cmd_free(file);
    else if (app.got_subcommand(c_check)) r = cmd_check_model(theory, file);
    else if (app.got_subcommand(c_enum))
      r = cmd_enumerate_models(theory, cap, file);
    else if (app.got_subcommand(c_coeq))
      r = cmd_coeq(max_len, max_morphisms, file);
    else if (app.got_subcommand(c_sec))
      r = cmd_section_normalize(max_len, max_morphisms, file);
    else if (app.got_subcommand(c_word))
      r = cmd_word_eq(max_len, max_morphisms, file, lhs, rhs);
    else if (app.got_subcommand(c_hom)) r = cmd_hom_count(file, file_b, list);
    else if (app.got_subcommand(c_push)) r = cmd_pushout(file);
    else if (app.got_subcommand(c_probe))
      r = cmd_fp_probe(probe_cap, max_len, max_morphisms, chain, model_file,
                       free_file);
    else if (app.got_subcommand(c_verify)) r = cmd_verify_suite();
  } catch (const UndecidedError& e) {
    std::cerr << "undecided: " << e.what() << "\n";
    return kUndecided;
  } catch (const SearchSpaceError& e) {
    std::cerr << "search space too large: " << e.what() << "\n";
    return kUndecided;
  } catch (const AcyclicityError& e) {
    std::cerr << e.what() << "\n";
    return kUndecided;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }

  r.j["format"] = 1;
  r.j["exit"] = r.code;
  if (as_json) {
    std::cout << r.j.dump(2) << "\n";
  } else {
    for (const auto& line : r.lines) std::cout << line << "\n";
  }
  return r.code;
}
