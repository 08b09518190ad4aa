#include "tdorg_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include "tdorg/aux_graphs.hpp"
#include "tdorg/buried.hpp"
#include "tdorg/classify.hpp"
#include "tdorg/errors.hpp"
#include "tdorg/generators.hpp"
#include "tdorg/graph.hpp"
#include "tdorg/independence.hpp"
#include "tdorg/oracle.hpp"
#include "tdorg/representation.hpp"
#include "tdorg_cli/render.hpp"

namespace tdorg::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string input = "-";
  std::string rep;
  std::string output;
  std::string buried;
  std::string keep;
  std::string mode = "2dorg";
  bool normalized = false;
  bool report = false;
  bool count = false;
  bool all = false;
  bool json = false;
  bool collapse = false;
  int nu = 0;
  int nv = 0;
  std::uint64_t seed = 0;
  double p = 0.5;
};

class Session {
 public:
  Session(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err)
      : opt_(opt), in_(in), out_(out), err_(err) {}

  const Options& opt() const { return opt_; }
  std::ostream& err() { return err_; }

  std::string read(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>()};
    std::ifstream f(path, std::ios::binary);
    if (!f) throw PreconditionError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
  }

  BipartiteGraph graph() {
    auto parsed = parse_graph(read(opt_.input));
    if (parsed.duplicate_edges > 0) {
      err_ << "warning: " << parsed.duplicate_edges << " duplicate edge line(s) ignored\n";
    }
    if (!opt_.collapse) return std::move(parsed.graph);
    auto collapsed = collapse_twins(parsed.graph);
    const int removed = parsed.graph.vertex_count() - collapsed.graph.vertex_count();
    if (removed > 0) err_ << "note: collapsed " << removed << " twin vertex(es)\n";
    return std::move(collapsed.graph);
  }

  // Writes to -o when given, else to standard output.
  void emit(const std::string& text) {
    if (opt_.output.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(opt_.output, std::ios::binary);
    if (!f) throw PreconditionError("cannot write '" + opt_.output + "'");
    f << text;
  }

  void emit_json(const Json& j) { emit(j.dump(2) + "\n"); }

 private:
  const Options& opt_;
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
};

Json tokens(const std::vector<VertexRef>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(token(v));
  return a;
}

Json rep_json(const Representation& r) { return Json{{"x", tokens(r.order_x)}, {"y", tokens(r.order_y)}}; }

template <class T>
Json or_null(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

void require_twin_free(const BipartiteGraph& g) {
  if (auto twins = find_twins(g); !twins.empty()) {
    throw PreconditionError("twins " + token(twins.front().first) + " and " + token(twins.front().second) +
                            " (use --collapse-twins)");
  }
}

int cmd_recognize(Session& s) {
  const auto g = s.graph();
  const auto r = recognize(g);
  if (s.opt().json) {
    s.emit_json(Json{{"is_2dorg", r.is_2dorg},
                {"witness", r.witness ? Json(token(*r.witness)) : Json(nullptr)},
                {"g_star_only", r.g_star_only}});
  } else if (r.is_2dorg) {
    s.emit("2DORG\n");
  } else if (r.witness) {
    s.emit("NOT-2DORG invertible pair: " + token(*r.witness) + "\n");
  } else {
    s.emit("NOT-2DORG G* is not bipartite\n");
  }
  return r.is_2dorg ? kAffirmative : kNegative;
}

int not_2dorg(Session& s, const Recognition& r) {
  s.err() << "not a 2DORG";
  if (r.witness) s.err() << ": invertible pair " << token(*r.witness);
  s.err() << "\n";
  return kNegative;
}

int cmd_represent(Session& s) {
  const auto g = s.graph();
  require_twin_free(g);
  if (auto r = recognize(g); !r) return not_2dorg(s, r);
  std::vector<Representation> reps;
  if (s.opt().all) {
    const auto ig = build_independence_graph(g);
    for (const auto& f : enumerate_transitive_orientations(ig)) reps.push_back(representation_from_orientation(g, ig, f));
    std::sort(reps.begin(), reps.end());
  } else {
    reps.push_back(construct_normalized_representation(g));
  }
  if (s.opt().json) {
    Json a = Json::array();
    for (const auto& r : reps) a.push_back(rep_json(r));
    s.emit_json(Json{{"representations", a}});
    return kAffirmative;
  }
  std::string text;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (i > 0) text += "\n";
    text += format_representation(reps[i]);
  }
  s.emit(text);
  return kAffirmative;
}

int cmd_check(Session& s) {
  const auto g = s.graph();
  const auto rep = parse_representation(s.read(s.opt().rep), g);
  const bool real = realizes(g, rep);
  std::optional<NormalizationCheck> norm;
  if (s.opt().normalized) norm = real ? is_normalized(g, rep) : NormalizationCheck{};
  const bool ok = real && (!norm || norm->normalized);
  if (s.opt().json) {
    Json j{{"realizes", real}};
    if (norm) {
      j["normalized"] = norm->normalized;
      j["violation"] = norm->violation ? Json(describe(*norm->violation)) : Json(nullptr);
    }
    s.emit_json(j);
    return ok ? kAffirmative : kNegative;
  }
  std::string text = real ? "REALIZES\n" : "NOT-REALIZES\n";
  if (norm) {
    if (norm->normalized) {
      text += "NORMALIZED\n";
    } else if (norm->violation) {
      text += "NOT-NORMALIZED " + describe(*norm->violation) + "\n";
    } else {
      text += "NOT-NORMALIZED\n";
    }
  }
  s.emit(text);
  return ok ? kAffirmative : kNegative;
}

Json report_json(const ClassificationReport& r) {
  return Json{{"is_2dorg", r.recognition.is_2dorg},
              {"witness", r.recognition.witness ? Json(token(*r.recognition.witness)) : Json(nullptr)},
              {"connected", r.connected},
              {"twin_free", r.twin_free},
              {"chain_graph", r.chain_graph},
              {"nontrivial_g_components", r.nontrivial_g_components},
              {"nontrivial_gplus_components", or_null(r.nontrivial_gplus_components)},
              {"uniquely_representable", or_null(r.uniquely_representable)},
              {"normalized_representation_count", or_null(r.normalized_representation_count)},
              {"buried_subgraph", r.buried_subgraph ? tokens(*r.buried_subgraph) : Json(nullptr)}};
}

int cmd_unique(Session& s) {
  const auto g = s.graph();
  require_twin_free(g);
  if (auto r = recognize(g); !r) return not_2dorg(s, r);
  const bool unique = is_uniquely_representable(g);
  if (s.opt().json) {
    Json j{{"uniquely_representable", unique}};
    if (s.opt().report) j["report"] = report_json(classify(g));
    s.emit_json(j);
  } else {
    std::string text = unique ? "UNIQUE\n" : "NOT-UNIQUE\n";
    if (s.opt().report) text += format_report(classify(g));
    s.emit(text);
  }
  return unique ? kAffirmative : kNegative;
}

int cmd_count(Session& s) {
  const auto g = s.graph();
  require_twin_free(g);
  if (auto r = recognize(g); !r) return not_2dorg(s, r);
  const std::size_t n = count_normalized_representations(g);
  if (s.opt().json) {
    s.emit_json(Json{{"normalized_representation_count", n}});
  } else {
    s.emit(std::to_string(n) + "\n");
  }
  return kAffirmative;
}

std::string condition_lines(const BuriedCheck& c) {
  std::string text;
  for (int i = 0; i < 4; ++i) {
    const auto cond = static_cast<BuriedCondition>(i);
    text += std::string("condition (") + condition_letter(cond) + "): ";
    if (c.satisfied[i]) {
      text += "satisfied\n";
    } else {
      text += "violated";
      if (c.violated == cond) text += ": " + c.detail;
      text += "\n";
    }
  }
  return text;
}

Json condition_json(const BuriedCheck& c) {
  Json a = Json::array();
  for (int i = 0; i < 4; ++i) {
    const auto cond = static_cast<BuriedCondition>(i);
    Json e{{"condition", std::string(1, condition_letter(cond))}, {"satisfied", static_cast<bool>(c.satisfied[i])}};
    if (c.violated == cond) e["detail"] = c.detail;
    a.push_back(e);
  }
  return a;
}

std::string k_line(const char* name, Side side, const std::vector<int>& ids) {
  std::string text = std::string(name) + ":";
  for (int i : ids) text += " " + token(VertexRef{side, i});
  return text + "\n";
}

Json k_json(Side side, const std::vector<int>& ids) {
  Json a = Json::array();
  for (int i : ids) a.push_back(token(VertexRef{side, i}));
  return a;
}

int cmd_buried(Session& s) {
  const auto g = s.graph();
  const bool json = s.opt().json;

  if (s.opt().all) {
    const auto all = enumerate_buried_subgraphs(g);
    if (json) {
      Json a = Json::array();
      for (const auto& b : all) a.push_back(tokens(b));
      s.emit_json(Json{{"buried_subgraphs", a}});
    } else {
      std::string text;
      for (const auto& b : all) text += "B: " + format_vertex_set(b) + "\n";
      if (all.empty()) text = "NONE\n";
      s.emit(text);
    }
    return all.empty() ? kNegative : kAffirmative;
  }

  VertexSet b;
  if (!s.opt().buried.empty()) {
    b = parse_vertex_set(g, s.opt().buried);
  } else {
    require_twin_free(g);
    if (auto r = recognize(g); !r) return not_2dorg(s, r);
    const auto ex = find_buried_subgraph(g);
    if (!ex) {
      s.emit(json ? Json{{"buried", false}}.dump(2) + "\n" : std::string("NONE\n"));
      return kNegative;
    }
    b = ex->subgraph.vertices;
  }
  const auto check = is_buried_subgraph(g, b);
  std::optional<KSets> k;
  if (check && is_2dorg(g)) k = k_sets(g, b);
  if (json) {
    Json j{{"buried", check.buried}, {"vertices", tokens(b)}, {"conditions", condition_json(check)}};
    if (k) {
      j["k_u"] = k_json(Side::U, k->k_u);
      j["k_v"] = k_json(Side::V, k->k_v);
    }
    s.emit_json(j);
  } else {
    std::string text = "B: " + format_vertex_set(b) + "\n" + condition_lines(check);
    if (k) text += k_line("K_U", Side::U, k->k_u) + k_line("K_V", Side::V, k->k_v);
    text += check ? "BURIED\n" : "NOT-BURIED\n";
    s.emit(text);
  }
  return check ? kAffirmative : kNegative;
}

int cmd_substitute(Session& s) {
  const auto g = s.graph();
  if (s.opt().buried.empty() || s.opt().keep.empty()) throw CLI::ValidationError("substitute needs --buried and --keep");
  const auto b = parse_vertex_set(g, s.opt().buried);
  const auto& keep = s.opt().keep;
  const auto split = keep.find('v');
  const auto ku = parse_token(std::string_view(keep).substr(0, split));
  const auto kv = split == std::string::npos ? std::nullopt : parse_token(std::string_view(keep).substr(split));
  if (!ku || !kv || ku->side != Side::U || kv->side != Side::V) {
    throw PreconditionError("--keep expects u<i>v<j>, got '" + keep + "'");
  }
  if (ku->index >= g.u_count() || kv->index >= g.v_count()) throw PreconditionError("--keep is out of range");
  const auto e = g.find_edge(ku->index, kv->index);
  if (!e) throw PreconditionError("--keep " + keep + " is not an edge");
  s.emit(serialize_graph(substitute_buried(g, b, *e).graph));
  return kAffirmative;
}

int cmd_gplus(Session& s) {
  const auto g = s.graph();
  const auto aux = build_g_plus(g);
  if (s.opt().count) {
    s.emit(s.opt().json ? Json{{"nontrivial_components", aux.nontrivial_count()}}.dump(2) + "\n"
                        : std::to_string(aux.nontrivial_count()) + "\n");
    return kAffirmative;
  }
  Json a = Json::array();
  std::string text;
  for (std::size_t c = 0; c < aux.component_count(); ++c) {
    if (!aux.nontrivial(c) && !s.opt().all) continue;
    Json pairs = Json::array();
    text += "component " + std::to_string(c) + (aux.nontrivial(c) ? " non-trivial:" : " trivial:");
    for (std::size_t p : aux.members(c)) {
      text += " " + token(aux.pairs()[p]);
      pairs.push_back(token(aux.pairs()[p]));
    }
    text += "\n";
    a.push_back(Json{{"component", c},
                     {"nontrivial", aux.nontrivial(c)},
                     {"reversed", aux.reversed_component(c)},
                     {"pairs", pairs}});
  }
  if (s.opt().json) {
    s.emit_json(Json{{"components", a}});
  } else {
    s.emit(text);
  }
  return kAffirmative;
}

int cmd_iclasses(Session& s) {
  const auto g = s.graph();
  const auto ig = build_independence_graph(g);
  if (s.opt().count) {
    s.emit(s.opt().json ? Json{{"implication_classes", ig.class_count()}}.dump(2) + "\n"
                        : std::to_string(ig.class_count()) + "\n");
    return kAffirmative;
  }
  auto arc_token = [&](const IndependenceGraph::Arc& a) {
    return "(" + token(g.edge(a.first)) + "," + token(g.edge(a.second)) + ")";
  };
  Json a = Json::array();
  std::string text;
  for (std::size_t k = 0; k < ig.class_count(); ++k) {
    Json arcs = Json::array();
    text += "class " + std::to_string(k) + " reverse " + std::to_string(ig.reversal(k)) + ":";
    for (const auto& arc : ig.members(k)) {
      text += " " + arc_token(arc);
      arcs.push_back(arc_token(arc));
    }
    text += "\n";
    a.push_back(Json{{"class", k}, {"reverse", ig.reversal(k)}, {"arcs", arcs}});
  }
  if (s.opt().json) {
    s.emit_json(Json{{"classes", a}, {"separate", ig.classes_separate()}});
  } else {
    s.emit(text);
  }
  return kAffirmative;
}

int cmd_gen(Session& s) {
  const auto& o = s.opt();
  if (o.nu < 0 || o.nv < 0) throw CLI::ValidationError("--nu and --nv must be nonnegative");
  if (o.mode == "bipartite") {
    if (!o.rep.empty()) throw CLI::ValidationError("--rep is only available with --mode 2dorg");
    auto g = random_bipartite(o.nu, o.nv, o.p, o.seed);
    if (o.collapse) g = collapse_twins(g).graph;
    s.emit(serialize_graph(g));
    return kAffirmative;
  }
  if (o.mode != "2dorg") throw CLI::ValidationError("--mode must be 2dorg or bipartite");
  auto gen = random_2dorg(o.nu, o.nv, o.seed);
  BipartiteGraph g = gen.graph;
  Representation rep = gen.representation;
  if (o.collapse) {
    const auto collapsed = collapse_twins(gen.graph);
    // keep the first vertex of each twin class; the restricted orders realize the result
    std::vector<int> seen(static_cast<std::size_t>(collapsed.graph.vertex_count()), -1);
    for (int i = 0; i < gen.graph.vertex_count(); ++i) {
      int& slot = seen[static_cast<std::size_t>(collapsed.graph.id(collapsed.mapping[i]))];
      if (slot == -1) slot = i;
    }
    auto restrict = [&](const std::vector<VertexRef>& order) {
      std::vector<VertexRef> out;
      for (const auto& v : order) {
        const int i = gen.graph.id(v);
        const VertexRef to = collapsed.mapping[i];
        if (seen[static_cast<std::size_t>(collapsed.graph.id(to))] == i) out.push_back(to);
      }
      return out;
    };
    rep = Representation{restrict(gen.representation.order_x), restrict(gen.representation.order_y)};
    g = collapsed.graph;
  }
  if (!o.rep.empty()) {
    std::ofstream f(o.rep, std::ios::binary);
    if (!f) throw PreconditionError("cannot write '" + o.rep + "'");
    f << format_representation(rep);
  }
  s.emit(serialize_graph(g));
  return kAffirmative;
}

int cmd_render(Session& s) {
  const auto g = s.graph();
  Representation rep;
  if (!s.opt().rep.empty()) {
    rep = parse_representation(s.read(s.opt().rep), g);
    if (!realizes(g, rep)) throw PreconditionError("--rep does not realize the graph");
  } else {
    if (auto r = recognize(g); !r) {
      s.err() << "no representation available: ";
      return not_2dorg(s, r);
    }
    require_twin_free(g);
    rep = construct_normalized_representation(g);
  }
  s.emit(render_svg(g, rep));
  return kAffirmative;
}

int cmd_oracle(Session& s) {
  const auto g = s.graph();
  const auto r = verify_theorems(g);
  if (s.opt().json) {
    Json reps = Json::array();
    for (const auto& rep : r.representations) reps.push_back(rep_json(rep));
    Json buried = nullptr;
    if (r.buried_subgraphs) {
      buried = Json::array();
      for (const auto& b : *r.buried_subgraphs) buried.push_back(tokens(b));
    }
    Json verdicts = Json::array();
    for (const auto& v : r.verdicts) {
      verdicts.push_back(Json{{"name", v.name},
                              {"applicable", v.applicable},
                              {"passed", v.passed},
                              {"counterexample", v.counterexample.empty() ? Json(nullptr) : Json(v.counterexample)}});
    }
    s.emit_json(Json{{"count", r.count},
                {"representations", reps},
                {"buried_subgraphs", buried},
                {"verdicts", verdicts},
                {"all_passed", r.all_passed}});
  } else {
    s.emit(format_oracle_report(r));
  }
  return r.all_passed ? kAffirmative : kNegative;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Two-directional orthogonal ray graphs: recognition, representations, buried subgraphs", "tdorg"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  using Handler = std::function<int(Session&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;

  auto add = [&](const char* name, const char* description, Handler handler, bool takes_input = true) {
    CLI::App* sub = app.add_subcommand(name, description);
    if (takes_input) sub->add_option("FILE", opt.input, "graph file, or - for standard input")->required();
    sub->add_flag("--json", opt.json, "machine-readable output");
    sub->add_flag("--collapse-twins", opt.collapse, "merge twin vertices before running");
    sub->add_option("-o,--output", opt.output, "write the result to a file");
    commands.emplace_back(sub, std::move(handler));
    return sub;
  };

  add("recognize", "Decide 2DORG membership", cmd_recognize);
  add("represent", "Print a normalized representation", cmd_represent)
      ->add_flag("--all", opt.all, "print every normalized representation");
  {
    auto* c = add("check", "Validate a representation file", cmd_check);
    c->add_option("--rep", opt.rep, "representation file")->required();
    c->add_flag("--normalized", opt.normalized, "also check the normalization conditions");
  }
  add("unique", "Decide unique representability", cmd_unique)
      ->add_flag("--report", opt.report, "append the full classification report");
  add("count", "Count normalized representations", cmd_count);
  {
    auto* c = add("buried", "Find, check or enumerate buried subgraphs", cmd_buried);
    c->add_option("--buried", opt.buried, "vertex tokens of B to check, e.g. \"u1 v1 u2 v2\"");
    c->add_flag("--all", opt.all, "enumerate every buried subgraph");
  }
  {
    auto* c = add("substitute", "Replace a buried subgraph by one of its edges", cmd_substitute);
    c->add_option("--buried", opt.buried, "vertex tokens of B")->required();
    c->add_option("--keep", opt.keep, "edge of G[B] to keep, e.g. u1v1")->required();
  }
  {
    auto* c = add("gplus", "List the components of G+", cmd_gplus);
    c->add_flag("--all", opt.all, "include trivial components");
    c->add_flag("--count", opt.count, "print only the number of non-trivial components");
  }
  add("iclasses", "List the implication classes of I(G)", cmd_iclasses)
      ->add_flag("--count", opt.count, "print only the number of classes");
  {
    auto* c = add("gen", "Generate a random graph", cmd_gen, false);
    c->add_option("--nu", opt.nu, "vertices in U")->required();
    c->add_option("--nv", opt.nv, "vertices in V")->required();
    c->add_option("--seed", opt.seed, "random seed");
    c->add_option("--mode", opt.mode, "2dorg or bipartite")->check(CLI::IsMember({"2dorg", "bipartite"}));
    c->add_option("--p", opt.p, "edge probability for --mode bipartite")->check(CLI::Range(0.0, 1.0));
    c->add_option("--rep", opt.rep, "also write the witnessing representation (2dorg mode)");
  }
  add("render", "Draw the ray diagram as SVG", cmd_render)->add_option("--rep", opt.rep, "representation file");
  add("oracle", "Check every theorem against brute force", cmd_oracle);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kAffirmative;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kAffirmative;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  for (auto& [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    Session session(opt, in, out, err);
    try {
      return handler(session);
    } catch (const ParseError& e) {
      err << "parse error: " << e.what() << "\n";
      return kUsage;
    } catch (const CLI::Error& e) {
      err << "usage error: " << e.what() << "\n";
      return kUsage;
    } catch (const PreconditionError& e) {
      err << "error: " << e.what() << "\n";
      return kUsage;
    } catch (const GuardError& e) {
      err << "size guard: " << e.what() << "\n";
      return kGuard;
    } catch (const NotComparability& e) {
      err << "not a 2DORG: " << e.what() << "\n";
      return kNegative;
    } catch (const ConsistencyError& e) {
      err << "internal consistency failure: " << e.what() << "\n";
      return kInternal;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kUsage;
    }
  }
  return kUsage;
}

}  // namespace tdorg::cli
