// pautkit command-line entry point.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "pautkit/abstract.hpp"
#include "pautkit/characterize.hpp"
#include "pautkit/graphs.hpp"
#include "pautkit/green.hpp"
#include "pautkit/io.hpp"
#include "pautkit/paut.hpp"
#include "pautkit/recon.hpp"

using namespace pautkit;

namespace {

struct Options {
  std::string format = "graph6";
  int jobs = 1;
  int limit = 8;
  bool validate = false;
  bool pretty = false;
  bool digraph = false;
  bool directed = false;
  int k = 2;
  int generate = 0;
  int n = -1;
  std::string input = "-";
  std::string second;
};

/// A valid input that produced a negative answer.
struct Negative {
  json doc;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::vector<std::string> read_lines(const std::string& path) {
  std::istringstream in(read_source(path));
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

void emit(const Options& o, const json& doc) { std::cout << (o.pretty ? doc.dump(2) : doc.dump()) << "\n"; }

EnumerateOptions enum_opts(const Options& o) { return {.limit = o.limit, .jobs = o.jobs}; }

json graph_construction(const Options& o, const Graph& g) {
  if (o.format == "edgelist") return format_edgelist(g);
  if (o.format == "json") {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
    return {{"n", g.order()}, {"edges", edges}};
  }
  return format_graph6(g);
}

json digraph_construction(const Options& o, const ColoredDigraph& g) {
  if (o.format == "json") {
    json colors = json::array();
    for (int c = 0; c < g.num_colors(); ++c) {
      json arcs = json::array();
      for (auto [u, v] : g.arcs(c)) arcs.push_back({u + 1, v + 1});
      colors.push_back(arcs);
    }
    return {{"n", g.order()}, {"colors", colors}};
  }
  return format_edgelist(g);
}

LoadedInput load_input(const Options& o, const std::string& text) { return pautkit::load_input(text, o.directed); }

Graph need_graph(const LoadedInput& in) {
  if (!in.graph) throw UsageError("expected a simple graph (graph6 or single-color symmetric edge list)");
  return *in.graph;
}

/// Monoid from a dump, or PAut of a graph/digraph.
InverseSubmonoid load_monoid(const Options& o, const LoadedInput& in) {
  if (in.document) return monoid_from_json(*in.document);
  return enumerate_paut(*in.digraph, enum_opts(o));
}

InverseMonoid load_table(const LoadedInput& in) {
  if (!in.document) throw UsageError("expected a table JSON document");
  return InverseMonoid(table_from_json(*in.document));
}

int cmd_enumerate(const Options& o) {
  const auto in = load_input(o, read_source(o.input));
  if (!in.digraph) throw UsageError("expected a graph or edge-colored digraph");
  const auto s = enumerate_paut(*in.digraph, enum_opts(o));
  if (o.validate && in.digraph->order() <= 6 && !(s == enumerate_paut_by_filter(*in.digraph)))
    throw std::logic_error("enumeration disagrees with the filter oracle");
  std::cerr << "|PAut| = " << s.size() << "\n";
  if (o.pretty) {
    for (const auto& f : s) std::cout << format_cpn(f) << "\n";
    return 0;
  }
  emit(o, monoid_to_json(s));
  return 0;
}

int cmd_green(const Options& o) {
  const auto in = load_input(o, read_source(o.input));
  if (in.document && in.document->contains("table")) {
    const auto t = load_table(in);
    const auto gs = green_abs(t);
    std::cerr << gs.dclasses.size() << " D-classes\n";
    emit(o, eggbox_to_json(gs));
    return 0;
  }
  const auto s = load_monoid(o, in);
  auto gs = green_structure(s);
  if (in.graph)
    dclass_subgraph_correspondence(*in.graph, s, gs);
  else if (in.digraph)
    dclass_subgraph_correspondence(*in.digraph, s, gs);
  if (o.validate && dclass_order_definitional(s, gs) != gs.order)
    throw std::logic_error("D-order disagrees with its definition");
  const auto diagram = render_eggboxes(s, gs);
  if (o.pretty) {
    std::cout << diagram;
    return 0;
  }
  std::cerr << diagram;
  emit(o, eggbox_to_json(s, gs));
  return 0;
}

int cmd_check(const Options& o) {
  const auto in = load_input(o, read_source(o.input));
  const auto s = load_monoid(o, in);
  const auto report = o.digraph ? check_digraph_conditions(s, o.jobs) : check_graph_conditions(s, o.jobs);
  for (const auto& v : report.verdicts)
    std::cerr << v.name << ": " << (v.passed ? "pass" : "FAIL") << (v.detail.empty() ? "" : "  " + v.detail) << "\n";
  const auto doc = report_to_json(report, std::nullopt, report.passed() ? (o.digraph ? "digraph" : "graph") : "none");
  if (!report.passed()) throw Negative{doc};
  emit(o, doc);
  return 0;
}

int cmd_build(const Options& o) {
  const auto in = load_input(o, read_source(o.input));
  const auto s = load_monoid(o, in);
  try {
    if (o.digraph) {
      const auto g = build_colored_digraph(s, o.validate);
      emit(o, report_to_json(check_digraph_conditions(s, o.jobs), digraph_construction(o, g).dump(), "digraph"));
    } else {
      const auto g = build_graph(s, o.validate);
      auto c = graph_construction(o, g);
      emit(o, report_to_json(check_graph_conditions(s, o.jobs), c.is_string() ? c.get<std::string>() : c.dump(),
                             "graph"));
    }
  } catch (const ConditionsFailed& e) {
    std::cerr << e.what() << "\n";
    throw Negative{report_to_json(e.report(), std::nullopt, "none")};
  }
  return 0;
}

int cmd_realize(const Options& o) {
  const auto t = load_table(load_input(o, read_source(o.input)));
  const auto r = realize_abstract(t, o.validate, o.jobs);
  std::optional<std::string> construction;
  if (r.graph) {
    auto c = graph_construction(o, *r.graph);
    construction = c.is_string() ? c.get<std::string>() : c.dump();
  } else if (r.digraph) {
    auto c = digraph_construction(o, *r.digraph);
    construction = c.is_string() ? c.get<std::string>() : c.dump();
  }
  std::cerr << "theorem: " << r.theorem << "\n";
  auto doc = report_to_json(r.report, construction, r.theorem);
  if (r.theorem == "none") throw Negative{doc};
  emit(o, doc);
  return 0;
}

int cmd_munn(const Options& o) {
  const auto t = load_table(load_input(o, read_source(o.input)));
  RestrictedMunn rm;
  try {
    rm = restricted_munn(t);
  } catch (const NoZeroElement& e) {
    throw Negative{json{{"error", e.what()}}};
  }
  json actions = json::array();
  for (int s = 0; s < t.size(); ++s) {
    json entry = {{"element", s}};
    if (!t.table().names.empty()) entry["name"] = t.table().names[s];
    entry["action"] = format_cpn(rm.images[s]);
    actions.push_back(std::move(entry));
  }
  emit(o, json{{"atoms", rm.atoms}, {"fundamental", is_fundamental(t)}, {"actions", actions}});
  return 0;
}

int cmd_pautiso(const Options& o) {
  const auto a = need_graph(load_input(o, read_source(o.input)));
  const auto b = need_graph(load_input(o, read_source(o.second)));
  const bool iso = is_isomorphic(a, b).has_value();
  const bool comp = !iso && is_isomorphic(a, complement(b)).has_value();
  json doc = {{"isomorphic", iso || comp}, {"via", iso ? json("isomorphism") : comp ? json("complement") : json(nullptr)}};
  if (o.validate && a.order() <= 3) {
    const auto ta = InverseMonoid(to_table(enumerate_paut(a, enum_opts(o))));
    const auto tb = InverseMonoid(to_table(enumerate_paut(b, enum_opts(o))));
    if (monoid_isomorphism(ta, tb).has_value() != (iso || comp))
      throw std::logic_error("table isomorphism search disagrees");
  }
  if (!(iso || comp)) throw Negative{doc};
  emit(o, doc);
  return 0;
}

int cmd_deck(const Options& o) {
  const auto g = need_graph(load_input(o, read_source(o.input)));
  const auto d = deck(g);
  json cards = json::array();
  for (const auto& e : d.entries) cards.push_back({{"vertex", e.vertex + 1}, {"card", e.key}});
  emit(o, json{{"n", g.order()}, {"cards", cards}, {"multiset", d.keys()}});
  return 0;
}

int cmd_pautdeck(const Options& o) {
  const auto g = need_graph(load_input(o, read_source(o.input)));
  const auto s = enumerate_paut(g, enum_opts(o));
  const auto d = paut_deck(g, s, o.validate);
  json entries = json::array();
  for (const auto& e : d.entries) {
    const auto gs = green_structure(e.monoid);
    int h = 0;
    for (const auto& c : gs.dclasses) h = std::max(h, c.height);
    const auto card = induced(g, full_set(g.order()) & ~bit(e.vertex));
    entries.push_back({{"vertex", e.vertex + 1},
                       {"size", e.monoid.size()},
                       {"height", h},
                       {"rank_counts", e.monoid.rank_counts()},
                       {"card", canonical_key(card)},
                       {"class", iso_or_complement_key(card)}});
  }
  emit(o, json{{"n", g.order()}, {"size", s.size()}, {"entries", entries}});
  return 0;
}

std::vector<std::string> corpus_lines(const Options& o) {
  if (o.generate > 0) {
    if (o.generate > 7) throw UsageError("internal generation is limited to n <= 7");
    std::vector<std::string> out;
    for (const auto& g : graph_classes(o.generate)) out.push_back(format_graph6(g));
    return out;
  }
  return read_lines(o.input);
}

void emit_matches(const std::vector<CorpusMatch>& matches) {
  for (const auto& m : matches) {
    json rec = {{"seq", m.seq + 1}, {"graph6", m.graph6}};
    if (m.partner) {
      rec["witness"] = {{"partner_seq", *m.partner + 1}, {"partner_graph6", m.partner_graph6}};
    } else {
      json sets = json::array();
      for (const auto& s : m.sets) {
        json one = json::array();
        for (int v : s) one.push_back(v + 1);
        sets.push_back(one);
      }
      rec["witness"] = sets;
    }
    std::cout << rec.dump() << "\n";
  }
}

int cmd_pseudosim(const Options& o) {
  const auto lines = corpus_lines(o);
  const auto pred = o.k <= 2 ? CorpusPredicate::PseudoSimilar : CorpusPredicate::KSet;
  const auto matches = search_corpus(lines, pred, o.k, o.jobs);
  std::cerr << lines.size() << " graphs, " << matches.size() << " matches\n";
  emit_matches(matches);
  return 0;
}

int cmd_deckcex(const Options& o) {
  if (o.n >= 0) {
    if (o.n > 7) throw UsageError("exhaustive search is limited to n <= 7");
    json pairs = json::array();
    for (const auto& [a, b] : find_deck_counterexamples(o.n, o.jobs)) pairs.push_back({format_graph6(a), format_graph6(b)});
    std::cerr << pairs.size() << " pairs\n";
    emit(o, json{{"n", o.n}, {"pairs", pairs}});
    return 0;
  }
  const auto lines = corpus_lines(o);
  const auto matches = search_corpus(lines, CorpusPredicate::DeckCounterexample, 0, o.jobs);
  std::cerr << lines.size() << " graphs, " << matches.size() << " matches\n";
  emit_matches(matches);
  return 0;
}

int cmd_generate(const Options& o) {
  if (o.n < 0 || o.n > 7) throw UsageError("internal generation is limited to 0 <= n <= 7");
  for (const auto& g : graph_classes(o.n)) std::cout << format_graph6(g) << "\n";
  return 0;
}

int cmd_selftest(const Options& o) {
  struct Suite {
    std::string name;
    int cases = 0;
    int failures = 0;
  };
  std::vector<Suite> suites{{"enumeration-vs-filter"}, {"condition-U-vs-definition"}, {"graph-round-trip"},
                            {"paut-deck-entries"}};
  for (int n = 0; n <= 4; ++n)
    for (const auto& g : all_labeled_graphs(n)) {
      const auto d = ColoredDigraph::from_graph(g);
      const auto s = enumerate_paut(g, enum_opts(o));
      ++suites[0].cases;
      if (!(s == enumerate_paut_by_filter(d))) ++suites[0].failures;
      ++suites[1].cases;
      const auto u = check_condition_U(s), ud = check_condition_U_definitional(s);
      if (u.passed != ud.passed || u.witness != ud.witness) ++suites[1].failures;
      ++suites[2].cases;
      try {
        const auto h = build_graph(s, true);
        if (n >= 2 && !(h == g) && !(h == complement(g))) ++suites[2].failures;
      } catch (const std::exception&) {
        ++suites[2].failures;
      }
      ++suites[3].cases;
      try {
        paut_deck(g, s, true);
      } catch (const std::exception&) {
        ++suites[3].failures;
      }
    }
  json out = json::array();
  bool ok = true;
  for (const auto& s : suites) {
    std::cerr << s.name << ": " << s.cases - s.failures << "/" << s.cases << "\n";
    out.push_back({{"suite", s.name}, {"cases", s.cases}, {"failures", s.failures}});
    ok = ok && s.failures == 0;
  }
  json doc = {{"suites", out}, {"passed", ok}};
  if (!ok) throw Negative{doc};
  emit(o, doc);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial automorphism monoids of graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Encoding of constructed graphs")
      ->check(CLI::IsMember({"graph6", "edgelist", "json"}))
      ->envname("PAUTKIT_FORMAT");
  app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1, 256))->envname("PAUTKIT_JOBS");
  app.add_option("--limit", o.limit, "Soft cap on vertex count for enumeration")
      ->check(CLI::Range(0, kMaxPoints))
      ->envname("PAUTKIT_LIMIT");
  app.add_flag("--validate", o.validate, "Run oracle cross-checks")->envname("PAUTKIT_VALIDATE");
  app.add_flag("--directed", o.directed, "Read single-color edge lists as directed")->envname("PAUTKIT_DIRECTED");
  app.add_flag("--pretty", o.pretty, "Human-readable output")->envname("PAUTKIT_PRETTY");

  std::map<std::string, std::function<int(const Options&)>> handlers;
  auto sub = [&](const std::string& name, const std::string& help, auto handler) {
    auto* s = app.add_subcommand(name, help);
    handlers[name] = handler;
    return s;
  };
  sub("enumerate", "PAut of a graph or digraph", cmd_enumerate)->add_option("input", o.input, "Input file or -");
  sub("green", "Eggbox diagrams of the D-classes", cmd_green)->add_option("input", o.input, "Input file or -");
  {
    auto* s = sub("check", "Check the characterization conditions on a monoid dump", cmd_check);
    s->add_option("input", o.input, "Input file or -");
    s->add_flag("--digraph", o.digraph, "Use the edge-colored digraph conditions");
  }
  {
    auto* s = sub("build", "Construct the graph or digraph of a monoid dump", cmd_build);
    s->add_option("input", o.input, "Input file or -");
    s->add_flag("--digraph", o.digraph, "Construct an edge-colored digraph");
  }
  sub("realize", "Realize an abstract table as PAut of a graph or digraph", cmd_realize)
      ->add_option("input", o.input, "Input file or -");
  sub("munn", "Restricted Munn representation of a table", cmd_munn)->add_option("input", o.input, "Input file or -");
  {
    auto* s = sub("pautiso", "Decide whether two graphs have isomorphic PAut", cmd_pautiso);
    s->add_option("first", o.input, "First graph")->required();
    s->add_option("second", o.second, "Second graph")->required();
  }
  sub("deck", "Deck of a graph", cmd_deck)->add_option("input", o.input, "Input file or -");
  sub("pautdeck", "Deck of PAut of a graph", cmd_pautdeck)->add_option("input", o.input, "Input file or -");
  {
    auto* s = sub("pseudosim", "Search a graph6 stream for pseudo-similar vertices", cmd_pseudosim);
    s->add_option("input", o.input, "Input file or -");
    s->add_option("-k", o.k, "Size of mutually pseudo-similar sets")->check(CLI::Range(2, 64));
    s->add_option("--generate", o.generate, "Search all graphs on N vertices instead of reading input");
  }
  {
    auto* s = sub("deckcex", "Graphs with equal PAut decks but non-isomorphic PAut", cmd_deckcex);
    s->add_option("input", o.input, "graph6 stream (when -n is not given)");
    s->add_option("-n", o.n, "Exhaustive search over all graphs on n vertices");
    s->add_option("--generate", o.generate, "Stream all graphs on N vertices");
  }
  sub("generate", "All graphs on n vertices up to isomorphism, as graph6", cmd_generate)
      ->add_option("n", o.n, "Vertex count")
      ->required();
  sub("selftest", "Exhaustive oracle suites on graphs with at most 4 vertices", cmd_selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  const auto* chosen = app.get_subcommands().front();
  try {
    return handlers.at(chosen->get_name())(o);
  } catch (const Negative& neg) {
    emit(o, neg.doc);
    return 1;
  } catch (const std::logic_error& e) {
    // Invalid input surfaces as invalid_argument / domain_error / length_error.
    std::cerr << "error: " << e.what() << "\n";
    const bool input = dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::length_error*>(&e) ||
                       dynamic_cast<const std::domain_error*>(&e);
    return input ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
