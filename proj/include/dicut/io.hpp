#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dicut/graph.hpp"

namespace dicut {

// DIMACS-style graph file:
//   c <comment>
//   p <edge|vert> <n> <m>
//   v <id> <weight>            (vert mode: exactly n lines, arbitrary ids)
//   a <tail> <head> [<weight>] (weight present iff edge mode)
// Edge-mode ids must already be dense in [0, n); vert-mode ids are remapped
// in order of their v lines.
struct ParsedGraph {
    WeightedDigraph graph;     // the instance the algorithms run on
    WeightedDigraph original;  // pre-lift weights (zero weights kept)
    std::vector<std::int64_t> labels;  // dense id -> file label
    bool lifted = false;               // vert mode, zero weights lifted
    bool zeroArcsDropped = false;      // edge mode, zero-weight arcs dropped
};

ParsedGraph parse_graph_text(const std::string& text, bool allowZeroWeights);
ParsedGraph parse_graph(const std::string& path, bool allowZeroWeights);

// Serializes the pre-lift graph with its file labels; parse(serialize(p))
// reproduces the graph exactly.
std::string serialize_graph(const ParsedGraph& parsed);

int label_to_id(const ParsedGraph& parsed, std::int64_t label);

// Entry point behind the dicut binary. Writes the result record (a single
// JSON object) or the bench CSV to `out`; diagnostics go to `err`.
// Exit codes: 0 success, 1 parse/usage error, 2 infeasible precondition.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct BenchSpec {
    std::vector<std::string> families;  // er, dag, cycle
    std::vector<int> sizes;
    std::vector<Rational> epsGrid;
    int trials = 10;
    std::string kind = "edge-global";
    std::uint64_t seed = 0;
    int threads = 1;
    Weight maxWeight = 16;
    bool timing = false;
};

void bench(const BenchSpec& spec, std::ostream& out);

}  // namespace dicut
