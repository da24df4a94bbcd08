#include "tww/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "tww/engine.hpp"
#include "tww/errors.hpp"
#include "tww/generators.hpp"
#include "tww/io.hpp"
#include "tww/oracle.hpp"
#include "tww/verifier.hpp"

namespace tww {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

void emit_sequence(const std::string& path, const ContractionSequence& seq) {
  if (path.empty())
    write_sequence_json(std::cout, seq);
  else
    save_sequence(path, seq);
}

void emit_graph(const std::string& path, const PlaneGraph& g) {
  if (path.empty())
    write_graph_json(std::cout, g);
  else
    save_graph(path, g);
}

int cmd_synth(const std::string& input, const std::string& output, bool check_every_step, bool trace,
              const std::string& gplus_prefix) {
  const PlaneGraph g = load_graph(input);
  if (!has_embedding(g))
    throw std::invalid_argument("synth needs an embedded graph (file has no rotation system)");

  RunOptions opts;
  opts.check_each_step = check_every_step;
  if (trace) opts.trace = &std::cerr;
  const Synthesis syn = synthesize_planar(g, opts);

  const ReplayResult check = replay(g.n, g.edges, syn.seq);
  std::cerr << "synthesized " << syn.seq.steps.size() << " steps, replay width " << check.width << "\n";

  emit_sequence(output, syn.seq);
  if (!gplus_prefix.empty() && syn.used_pipeline) {
    save_graph(gplus_prefix + ".gplus.json", syn.gplus);
    save_sequence(gplus_prefix + ".gplus_seq.json", syn.full_seq);
  }
  return kExitPass;
}

int cmd_verify(const std::string& graph_path, const std::string& seq_path, int max_width, bool prefix) {
  const PlaneGraph g = load_graph(graph_path);
  const ContractionSequence seq = load_sequence(seq_path);

  ReplayOptions opts;
  opts.require_full = !prefix;
  const ReplayResult res = replay(g.n, g.edges, seq, opts);

  std::cout << "width " << res.width << (res.width <= max_width ? " <= " : " > ") << max_width << "\n";
  return res.width <= max_width ? kExitPass : kExitFail;
}

int cmd_exact(const std::string& graph_path, int cap, const std::string& output) {
  const PlaneGraph g = load_graph(graph_path);
  const ExactResult res = exact_twinwidth(g.n, g.edges, cap);
  std::cout << "exact twin-width " << res.width << "\n";
  if (!output.empty()) save_sequence(output, res.witness);
  return kExitPass;
}

int cmd_gen(const std::string& family, int n, int w, int h, double p, uint64_t seed,
            const std::string& output) {
  PlaneGraph g;
  if (family == "stacked")
    g = gen_stacked_triangulation(n, seed);
  else if (family == "grid")
    g = gen_grid(w, h);
  else if (family == "wheel")
    g = gen_wheel(n);
  else if (family == "cycle")
    g = gen_cycle(n);
  else if (family == "random")
    g = gen_random_planar(n, p, seed);
  else
    throw std::invalid_argument("unknown family " + family +
                                " (expected stacked, grid, wheel, cycle, or random)");
  emit_graph(output, g);
  return kExitPass;
}

int cmd_export(const std::string& graph_path, const std::string& seq_path, int steps,
               const std::string& output) {
  const PlaneGraph g = load_graph(graph_path);

  MatrixTrigraph t(g.n, g.edges);
  if (!seq_path.empty()) {
    const ContractionSequence seq = load_sequence(seq_path);
    if (seq.initial_count != g.n)
      throw std::invalid_argument("sequence vertex count does not match the graph");
    const int take = steps < 0 ? static_cast<int>(seq.steps.size()) : steps;
    if (take > static_cast<int>(seq.steps.size()))
      throw std::invalid_argument("--steps exceeds the sequence length");
    for (int i = 0; i < take; ++i) t.contract(seq.steps[i].a, seq.steps[i].b);
  }

  std::vector<int> vertices;
  std::vector<std::pair<int, int>> black, red;
  for (int v = 0; v < t.slot_bound(); ++v)
    if (t.alive(v)) vertices.push_back(v);
  for (size_t i = 0; i < vertices.size(); ++i)
    for (size_t j = i + 1; j < vertices.size(); ++j) {
      const char c = t.color(vertices[i], vertices[j]);
      if (c == 1) black.push_back({vertices[i], vertices[j]});
      if (c == 2) red.push_back({vertices[i], vertices[j]});
    }

  const std::string dot = to_dot(vertices, black, red);
  if (output.empty()) {
    std::cout << dot;
  } else {
    std::ofstream out(output);
    if (!out) throw std::invalid_argument("cannot write " + output);
    out << dot;
  }
  return kExitPass;
}

}  // namespace

int cli_main(const std::vector<std::string>& args) {
  CLI::App app{"twin-width toolkit for embedded planar graphs"};
  app.require_subcommand(1);

  std::string input, output, seq_path, gplus_prefix, family;
  bool check_every_step = false, trace = false, prefix = false;
  int max_width = 11, cap = 9, n = 0, gw = 0, gh = 0, steps = -1;
  double p = 0.2;
  uint64_t seed = 1;

  CLI::App* synth = app.add_subcommand("synth", "synthesize a contraction sequence of width at most 11");
  synth->add_option("graph", input, "graph JSON file")->required();
  synth->add_option("-o,--output", output, "sequence JSON destination (default stdout)");
  synth->add_flag("--check-splendid-every-step", check_every_step, "audit every intermediate state");
  synth->add_flag("--trace", trace, "log one line per engine step to stderr");
  synth->add_option("--emit-gplus", gplus_prefix, "also write <prefix>.gplus.json and <prefix>.gplus_seq.json");

  CLI::App* verify = app.add_subcommand("verify", "replay a sequence and test its width");
  verify->add_option("graph", input, "graph JSON file")->required();
  verify->add_option("sequence", seq_path, "sequence JSON file")->required();
  verify->add_option("-w,--max-width", max_width, "pass iff replay width is at most this (default 11)");
  verify->add_flag("--prefix", prefix, "accept a sequence that stops early");

  CLI::App* exact = app.add_subcommand("exact", "exact twin-width of a small graph");
  exact->add_option("graph", input, "graph JSON file")->required();
  exact->add_option("--cap", cap, "largest vertex count accepted (default 9)");
  exact->add_option("-o,--output", output, "witness sequence destination");

  CLI::App* gen = app.add_subcommand("gen", "generate an embedded planar graph");
  gen->add_option("family", family, "stacked | grid | wheel | cycle | random")->required();
  gen->add_option("-n,--vertices", n, "vertex count (stacked, wheel, cycle, random)");
  gen->add_option("--rows", gh, "grid rows");
  gen->add_option("--cols", gw, "grid columns");
  gen->add_option("-p,--delete-probability", p, "deletion probability per edge (random, default 0.2)");
  gen->add_option("--seed", seed, "PRNG seed (default 1)");
  gen->add_option("-o,--output", output, "graph JSON destination (default stdout)");

  CLI::App* exp = app.add_subcommand("export", "DOT text of a graph or a replayed trigraph snapshot");
  exp->add_option("graph", input, "graph JSON file")->required();
  exp->add_option("--sequence", seq_path, "sequence JSON file to replay");
  exp->add_option("--steps", steps, "how many steps of the sequence to apply (default all)");
  exp->add_option("-o,--output", output, "DOT destination (default stdout)");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (synth->parsed()) return cmd_synth(input, output, check_every_step, trace, gplus_prefix);
    if (verify->parsed()) return cmd_verify(input, seq_path, max_width, prefix);
    if (exact->parsed()) return cmd_exact(input, cap, output);
    if (gen->parsed()) return cmd_gen(family, n, gw, gh, p, seed, output);
    if (exp->parsed()) return cmd_export(input, seq_path, steps, output);
  } catch (const internal_error& e) {
    std::cerr << "internal invariant failure: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace tww
