#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "tww/cli.hpp"
#include "tww/io.hpp"

using namespace tww;

namespace {

const std::string kDir = "/tmp/tww_cli_test";

std::string path(const std::string& name) { return kDir + "/" + name; }

void write_file(const std::string& name, const std::string& text) {
  std::ofstream out(path(name));
  out << text;
}

int run_cli(const std::vector<std::string>& args) { return cli_main(args); }

const char* kK4 = R"({"n": 4,
  "edges": [[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]],
  "rotation": {"0": [1, 3, 2], "1": [0, 2, 3], "2": [0, 3, 1], "3": [0, 1, 2]},
  "outer_face": [0, 2, 1]})";

const char* kC5 = R"({"n": 5,
  "edges": [[0,1],[1,2],[2,3],[3,4],[0,4]],
  "rotation": {"0": [4, 1], "1": [0, 2], "2": [1, 3], "3": [2, 4], "4": [3, 0]}})";

const char* kAbstractK5 =
    R"({"n": 5, "edges": [[0,1],[0,2],[0,3],[0,4],[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]})";

}  // namespace

TEST_CASE("cli surface") {
  std::system(("mkdir -p " + kDir).c_str());
  write_file("k4.json", kK4);
  write_file("c5.json", kC5);
  write_file("k5.json", kAbstractK5);

  SUBCASE("gen writes a readable graph") {
    CHECK(run_cli({"gen", "grid", "--rows", "2", "--cols", "2", "-o", path("grid.json")}) == 0);
    const PlaneGraph g = load_graph(path("grid.json"));
    CHECK(g.n == 4);
    CHECK(g.edges.size() == 4);

    CHECK(run_cli({"gen", "stacked", "-n", "30", "--seed", "7", "-o", path("s30.json")}) == 0);
    CHECK(load_graph(path("s30.json")).edges.size() == 84);

    CHECK(run_cli({"gen", "random", "-n", "12", "-p", "0.4", "-o", path("r12.json")}) == 0);
    CHECK(load_graph(path("r12.json")).n == 12);

    CHECK(run_cli({"gen", "nosuch", "-n", "5"}) == 2);
    CHECK(run_cli({"gen", "stacked", "-n", "2"}) == 2);
  }

  SUBCASE("synth then verify") {
    CHECK(run_cli({"synth", path("k4.json"), "-o", path("k4_seq.json")}) == 0);
    const ContractionSequence seq = load_sequence(path("k4_seq.json"));
    CHECK(seq.initial_count == 4);
    CHECK(seq.steps.size() == 3);

    CHECK(run_cli({"verify", path("k4.json"), path("k4_seq.json")}) == 0);
    CHECK(run_cli({"verify", path("k4.json"), path("k4_seq.json"), "-w", "0"}) == 0);

    // a truncated copy is rejected unless --prefix allows it
    ContractionSequence cut = seq;
    cut.steps.pop_back();
    {
      std::ofstream out(path("k4_cut.json"));
      write_sequence_json(out, cut);
    }
    CHECK(run_cli({"verify", path("k4.json"), path("k4_cut.json")}) == 2);
    CHECK(run_cli({"verify", path("k4.json"), path("k4_cut.json"), "--prefix"}) == 0);
  }

  SUBCASE("synth audited end to end") {
    CHECK(run_cli({"gen", "stacked", "-n", "40", "--seed", "11", "-o", path("s40.json")}) == 0);
    CHECK(run_cli({"synth", path("s40.json"), "--check-splendid-every-step", "-o",
                   path("s40_seq.json")}) == 0);
    CHECK(run_cli({"verify", path("s40.json"), path("s40_seq.json")}) == 0);
  }

  SUBCASE("verify enforces the width bound") {
    CHECK(run_cli({"synth", path("c5.json"), "-o", path("c5_seq.json")}) == 0);
    CHECK(run_cli({"verify", path("c5.json"), path("c5_seq.json")}) == 0);
    // C5 needs width 2 somewhere, so a bound of 0 must fail
    CHECK(run_cli({"verify", path("c5.json"), path("c5_seq.json"), "--max-width", "0"}) == 1);
  }

  SUBCASE("exact accepts abstract graphs") {
    CHECK(run_cli({"exact", path("k5.json"), "-o", path("k5_wit.json")}) == 0);
    const ContractionSequence wit = load_sequence(path("k5_wit.json"));
    CHECK(wit.initial_count == 5);
    CHECK(wit.full());

    // synthesis needs the embedding
    CHECK(run_cli({"synth", path("k5.json")}) == 2);
    // and the solver refuses graphs above its cap
    CHECK(run_cli({"gen", "stacked", "-n", "12", "-o", path("s12.json")}) == 0);
    CHECK(run_cli({"exact", path("s12.json")}) == 2);
  }

  SUBCASE("emit-gplus leaves the augmentation behind") {
    write_file("path4.json",
               R"({"n": 4, "edges": [[0,1],[1,2],[2,3]],
                   "rotation": {"0": [1], "1": [0,2], "2": [1,3], "3": [2]}})");
    CHECK(run_cli({"synth", path("path4.json"), "-o", path("p4_seq.json"), "--emit-gplus",
                   path("p4")}) == 0);
    const PlaneGraph gplus = load_graph(path("p4.gplus.json"));
    CHECK(gplus.n >= 4);
    const ContractionSequence full = load_sequence(path("p4.gplus_seq.json"));
    CHECK(full.initial_count == gplus.n);
    CHECK(full.full());
    CHECK(run_cli({"verify", path("p4.gplus.json"), path("p4.gplus_seq.json")}) == 0);
  }

  SUBCASE("export plain and replayed") {
    CHECK(run_cli({"export", path("k4.json"), "-o", path("k4.dot")}) == 0);
    std::ifstream in(path("k4.dot"));
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str().find("graph") != std::string::npos);
    CHECK(ss.str().find("color=red") == std::string::npos);

    write_file("p4b.json",
               R"({"n": 4, "edges": [[0,1],[1,2],[2,3]],
                   "rotation": {"0": [1], "1": [0,2], "2": [1,3], "3": [2]}})");
    write_file("p4b_seq.json", R"({"n": 4, "steps": [{"a": 0, "b": 2, "result": 4}]})");
    CHECK(run_cli({"export", path("p4b.json"), "--sequence", path("p4b_seq.json"), "-o",
                   path("p4b.dot")}) == 0);
    std::ifstream in2(path("p4b.dot"));
    std::stringstream ss2;
    ss2 << in2.rdbuf();
    const std::string dot = ss2.str();
    // contracting the two neighbors of 1 turns exactly one edge red
    size_t reds = 0;
    for (size_t at = dot.find("[color=red]"); at != std::string::npos;
         at = dot.find("[color=red]", at + 1))
      ++reds;
    CHECK(reds == 1);

    CHECK(run_cli({"export", path("p4b.json"), "--sequence", path("p4b_seq.json"), "--steps",
                   "0", "-o", path("p4b0.dot")}) == 0);
  }

  SUBCASE("bad input handling") {
    write_file("broken.json", "{\"n\": 3,");
    CHECK(run_cli({"synth", path("broken.json")}) == 2);
    CHECK(run_cli({"verify", path("broken.json"), path("broken.json")}) == 2);
    CHECK(run_cli({"synth", path("missing_file.json")}) == 2);
    CHECK(run_cli({"frobnicate"}) == 2);
    CHECK(run_cli({}) == 2);
    CHECK(run_cli({"--help"}) == 0);
    CHECK(run_cli({"synth", "--help"}) == 0);

    // sequence against the wrong graph
    write_file("tiny.json", R"({"n": 2, "edges": [[0,1]]})");
    write_file("tiny_seq.json", R"({"n": 3, "steps": [{"a": 0, "b": 1, "result": 3}]})");
    CHECK(run_cli({"verify", path("tiny.json"), path("tiny_seq.json")}) == 2);
  }
}
