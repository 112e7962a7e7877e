#include "dicut/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "dicut/brute.hpp"
#include "dicut/global_cut.hpp"
#include "dicut/rooted_edge.hpp"
#include "dicut/rooted_vertex.hpp"
#include "dicut/weight_transform.hpp"

namespace dicut {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::int64_t kMaxVertices = std::int64_t{1} << 24;
constexpr std::int64_t kMaxArcs = std::int64_t{1} << 24;
constexpr Weight kMaxFileWeight = Weight{1} << 40;

[[noreturn]] void parse_fail(int line, const std::string& message) {
    fail(Err::ParseError, "line " + std::to_string(line) + ": " + message);
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::int64_t to_int(const std::string& tok, int line, const char* what) {
    try {
        std::size_t pos = 0;
        std::int64_t v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        parse_fail(line, std::string("expected ") + what + ", got '" + tok + "'");
    }
}

}  // namespace

ParsedGraph parse_graph_text(const std::string& text, bool allowZeroWeights) {
    std::istringstream in(text);
    std::string line;
    int lineNo = 0;

    bool sawHeader = false;
    bool edgeMode = true;
    std::int64_t n = 0, m = 0;
    std::vector<std::int64_t> labels;
    std::map<std::int64_t, int> labelToId;
    std::vector<Weight> vertexWeights;
    std::vector<WeightedDigraph::Arc> arcs;

    Weight minWeight = allowZeroWeights ? 0 : 1;

    auto vertex_id = [&](std::int64_t label, int no) -> int {
        if (edgeMode) {
            if (label < 0 || label >= n) parse_fail(no, "vertex id out of [0, n)");
            return static_cast<int>(label);
        }
        auto it = labelToId.find(label);
        if (it == labelToId.end()) parse_fail(no, "undeclared vertex id " + std::to_string(label));
        return it->second;
    };

    while (std::getline(in, line)) {
        ++lineNo;
        if (line.empty() || line[0] == 'c') continue;
        std::vector<std::string> tok = split_ws(line);
        if (tok.empty()) continue;
        if (tok[0] == "p") {
            if (sawHeader) parse_fail(lineNo, "duplicate header");
            if (tok.size() != 4) parse_fail(lineNo, "header must be 'p <edge|vert> <n> <m>'");
            if (tok[1] == "edge") edgeMode = true;
            else if (tok[1] == "vert") edgeMode = false;
            else parse_fail(lineNo, "mode must be 'edge' or 'vert'");
            n = to_int(tok[2], lineNo, "vertex count");
            m = to_int(tok[3], lineNo, "arc count");
            if (n < 0 || n > kMaxVertices) parse_fail(lineNo, "vertex count out of range");
            if (m < 0 || m > kMaxArcs) parse_fail(lineNo, "arc count out of range");
            sawHeader = true;
            if (edgeMode)
                for (std::int64_t v = 0; v < n; ++v) labels.push_back(v);
            continue;
        }
        if (!sawHeader) parse_fail(lineNo, "body before header");
        if (tok[0] == "v") {
            if (edgeMode) parse_fail(lineNo, "v line in edge mode");
            if (tok.size() != 3) parse_fail(lineNo, "vertex line must be 'v <id> <weight>'");
            std::int64_t label = to_int(tok[1], lineNo, "vertex id");
            Weight w = to_int(tok[2], lineNo, "vertex weight");
            if (labelToId.count(label)) parse_fail(lineNo, "duplicate vertex id");
            if (static_cast<std::int64_t>(labels.size()) >= n) parse_fail(lineNo, "more than n vertex lines");
            if (w < minWeight || w > kMaxFileWeight)
                fail(Err::WeightOutOfRange, "line " + std::to_string(lineNo) + ": vertex weight " +
                                                std::to_string(w));
            labelToId[label] = static_cast<int>(labels.size());
            labels.push_back(label);
            vertexWeights.push_back(w);
            continue;
        }
        if (tok[0] == "a") {
            std::size_t expect = edgeMode ? 4 : 3;
            if (tok.size() != expect)
                parse_fail(lineNo, edgeMode ? "arc line must be 'a <tail> <head> <weight>'"
                                            : "arc line must be 'a <tail> <head>'");
            if (!edgeMode && static_cast<std::int64_t>(labels.size()) != n)
                parse_fail(lineNo, "arcs must follow all vertex lines");
            std::int64_t tailLabel = to_int(tok[1], lineNo, "tail");
            std::int64_t headLabel = to_int(tok[2], lineNo, "head");
            if (tailLabel == headLabel)
                fail(Err::SelfLoop, "line " + std::to_string(lineNo) + ": self-loop at " +
                                        std::to_string(tailLabel));
            int tail = vertex_id(tailLabel, lineNo);
            int head = vertex_id(headLabel, lineNo);
            Weight w = 1;
            if (edgeMode) {
                w = to_int(tok[3], lineNo, "weight");
                if (w < minWeight || w > kMaxFileWeight)
                    fail(Err::WeightOutOfRange, "line " + std::to_string(lineNo) + ": edge weight " +
                                                    std::to_string(w));
            }
            if (static_cast<std::int64_t>(arcs.size()) >= m) parse_fail(lineNo, "more than m arc lines");
            arcs.push_back({tail, head, w});
            continue;
        }
        parse_fail(lineNo, "unknown record '" + tok[0] + "'");
    }
    if (!sawHeader) parse_fail(lineNo, "missing header");
    if (!edgeMode && static_cast<std::int64_t>(labels.size()) != n)
        parse_fail(lineNo, "fewer than n vertex lines");
    if (static_cast<std::int64_t>(arcs.size()) != m) parse_fail(lineNo, "fewer than m arc lines");

    // cut values must stay within 64 bits downstream
    Weight maxSeen = 1;
    for (const auto& a : arcs) maxSeen = std::max(maxSeen, a.weight);
    for (Weight w : vertexWeights) maxSeen = std::max(maxSeen, w);
    if (static_cast<Wide>(std::max(n, m)) * maxSeen > (Wide{1} << 62))
        fail(Err::WeightOutOfRange, "n*W and m*W must stay below 2^62");

    ParsedGraph out;
    out.labels = labels;
    if (edgeMode) {
        out.original = WeightedDigraph::edge_weighted(static_cast<int>(n), arcs, allowZeroWeights);
        if (allowZeroWeights) {
            std::vector<WeightedDigraph::Arc> keep;
            for (const auto& a : arcs)
                if (a.weight > 0) keep.push_back(a);
            out.zeroArcsDropped = keep.size() != arcs.size();
            out.graph = WeightedDigraph::edge_weighted(static_cast<int>(n), std::move(keep), false);
        } else {
            out.graph = out.original;
        }
    } else {
        out.original = WeightedDigraph::vertex_weighted(static_cast<int>(n), arcs, vertexWeights,
                                                        allowZeroWeights);
        bool hasZero = false;
        for (Weight w : vertexWeights) hasZero = hasZero || w == 0;
        if (allowZeroWeights && hasZero) {
            out.lifted = true;
            out.graph = WeightedDigraph::vertex_weighted(static_cast<int>(n), arcs,
                                                         lift_zero_weights(vertexWeights, n), false);
        } else {
            out.graph = out.original;
        }
    }
    return out;
}

ParsedGraph parse_graph(const std::string& path, bool allowZeroWeights) {
    std::ifstream in(path);
    if (!in) fail(Err::ParseError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph_text(buf.str(), allowZeroWeights);
}

std::string serialize_graph(const ParsedGraph& parsed) {
    const WeightedDigraph& g = parsed.original;
    std::ostringstream out;
    bool edgeMode = g.mode() == WeightMode::EdgeWeighted;
    out << "p " << (edgeMode ? "edge" : "vert") << ' ' << g.vertex_count() << ' ' << g.arc_count() << '\n';
    if (!edgeMode)
        for (int v = 0; v < g.vertex_count(); ++v)
            out << "v " << parsed.labels[static_cast<std::size_t>(v)] << ' ' << g.vertex_weight(v) << '\n';
    for (const auto& a : g.arcs()) {
        out << "a " << parsed.labels[static_cast<std::size_t>(a.tail)] << ' '
            << parsed.labels[static_cast<std::size_t>(a.head)];
        if (edgeMode) out << ' ' << a.weight;
        out << '\n';
    }
    return out.str();
}

int label_to_id(const ParsedGraph& parsed, std::int64_t label) {
    for (std::size_t i = 0; i < parsed.labels.size(); ++i)
        if (parsed.labels[i] == label) return static_cast<int>(i);
    fail(Err::BadArgument, "unknown vertex label " + std::to_string(label));
}

namespace {

Json labels_of(const ParsedGraph& parsed, const VertexSet& set) {
    Json arr = Json::array();
    for (int v : set.ids()) arr.push_back(parsed.labels[static_cast<std::size_t>(v)]);
    return arr;
}

Weight original_edge_cut_value(const ParsedGraph& parsed, const VertexSet& x) {
    const WeightedDigraph& g = parsed.original;
    std::vector<char> in = x.mask(g.vertex_count());
    Weight total = 0;
    for (const auto& a : g.arcs())
        if (in[static_cast<std::size_t>(a.tail)] && !in[static_cast<std::size_t>(a.head)]) total += a.weight;
    return total;
}

Weight original_vertex_set_weight(const ParsedGraph& parsed, const VertexSet& s) {
    Weight total = 0;
    for (int v : s.ids()) total += parsed.original.vertex_weight(v);
    return total;
}

// Re-validates the cut against the pre-lift graph and rewrites its value in
// the original weights before emission.
Json edge_cut_record(const ParsedGraph& parsed, const EdgeCut& cut) {
    EdgeCut checked = cut;
    checked.value = original_edge_cut_value(parsed, cut.x);
    validate_edge_cut(parsed.original, checked);
    Json sides;
    sides["X"] = labels_of(parsed, cut.x);
    sides["Y"] = labels_of(parsed, cut.y);
    Json out;
    out["value"] = checked.value;
    out["sides"] = sides;
    return out;
}

Json vertex_cut_record(const ParsedGraph& parsed, const VertexCut& cut) {
    VertexCut checked = cut;
    checked.value = original_vertex_set_weight(parsed, cut.s);
    validate_vertex_cut(parsed.original, checked);
    Json sides;
    sides["L"] = labels_of(parsed, cut.l);
    sides["S"] = labels_of(parsed, cut.s);
    sides["R"] = labels_of(parsed, cut.r);
    Json out;
    out["value"] = checked.value;
    out["sides"] = sides;
    return out;
}

struct CliOptions {
    std::string command;
    std::string path;
    std::string epsilon = "1/4";
    std::optional<std::int64_t> root;
    std::uint64_t seed = 0;
    int repeats = -1;
    bool allowZero = false;
    std::string injectPath;
    bool compactJson = false;
    std::string kind;
    // bench
    std::string families = "er,dag,cycle";
    std::string sizes;
    std::string epsGrid = "1/4";
    int trials = 10;
    int threads = 1;
    Weight maxw = 16;
    bool timing = false;
};

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case Err::ParseError:
        case Err::WeightOutOfRange:
        case Err::SelfLoop:
        case Err::BadArgument:
        case Err::BadNu:
        case Err::OutOfUniverse:
            return 1;
        default:
            return 2;
    }
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

EstimateContext load_injection(const std::string& path, const ParsedGraph& parsed, EstimateMode mode,
                               const VertexSet& forbidden) {
    std::ifstream in(path);
    if (!in) fail(Err::ParseError, "cannot open " + path);
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const std::exception& e) {
        fail(Err::ParseError, std::string("inject file: ") + e.what());
    }
    if (!doc.contains("optEstimate") || !doc.contains("volEstimate") || !doc.contains("terminals"))
        fail(Err::ParseError, "inject file needs optEstimate, volEstimate, terminals");
    std::vector<int> terms;
    for (const auto& t : doc["terminals"]) terms.push_back(label_to_id(parsed, t.get<std::int64_t>()));
    return make_injected_context(parsed.graph, mode, doc["optEstimate"].get<Weight>(),
                                 doc["volEstimate"].get<std::int64_t>(), VertexSet(terms), forbidden);
}

void emit(Json record, const CliOptions& opt, std::ostream& out) {
    if (opt.compactJson) out << record.dump() << '\n';
    else out << record.dump(2) << '\n';
}

int run_cut_command(const CliOptions& opt, std::ostream& out) {
    ParsedGraph parsed = parse_graph(opt.path, opt.allowZero);
    const WeightedDigraph& g = parsed.graph;
    Rational eps = parse_rational(opt.epsilon);
    int repeats = opt.repeats > 0 ? opt.repeats : default_repeats(g.arc_count(), g.max_weight());

    Json record;
    record["kind"] = opt.command;
    record["epsilon"] = to_string(eps);
    record["seed"] = opt.seed;
    RngStream rng(opt.seed);

    if (opt.command == "edge-rooted" || opt.command == "vertex-rooted") {
        if (!opt.root) fail(Err::BadArgument, "--root is required for rooted commands");
        int root = label_to_id(parsed, *opt.root);
        std::vector<Weight> trialValues;
        if (opt.command == "edge-rooted") {
            RootedObserver obs;
            obs.trialValues = &trialValues;
            EdgeCut cut;
            if (!opt.injectPath.empty()) {
                EstimateContext ctx =
                    load_injection(opt.injectPath, parsed, EstimateMode::Edge, VertexSet({root}));
                record["repeats"] = 1;
                cut = rooted_min_edge_cut_injected(g, root, eps, ctx, &obs);
            } else {
                record["repeats"] = repeats;
                cut = rooted_min_edge_cut(g, root, eps, rng, repeats, &obs);
            }
            record.update(edge_cut_record(parsed, cut));
            record["trialStats"] = Json{{"values", trialValues}};
        } else {
            std::vector<int> forb = g.in_neighbors(root);
            forb.push_back(root);
            RootedVertexObserver obs;
            obs.trialValues = &trialValues;
            VertexCut cut;
            if (!opt.injectPath.empty()) {
                EstimateContext ctx =
                    load_injection(opt.injectPath, parsed, EstimateMode::Vertex, VertexSet(forb));
                record["repeats"] = 1;
                cut = rooted_min_vertex_cut_injected(g, root, eps, ctx, &obs);
            } else {
                record["repeats"] = repeats;
                cut = rooted_min_vertex_cut(g, root, eps, rng, repeats, &obs);
            }
            record.update(vertex_cut_record(parsed, cut));
            if (parsed.lifted) record["liftedValue"] = cut.value;
            record["trialStats"] = Json{{"values", trialValues}};
        }
        emit(record, opt, out);
        return 0;
    }

    if (opt.command == "edge-global") {
        record["repeats"] = repeats;
        EdgeCut cut = global_min_edge_cut(g, eps, rng, repeats);
        record.update(edge_cut_record(parsed, cut));
        emit(record, opt, out);
        return 0;
    }

    if (opt.command == "vertex-global") {
        record["repeats"] = repeats;
        GlobalVertexCutStats stats;
        RootedVertexOracle oracle = make_builtin_rooted_oracle(eps, rng.derive(1), repeats);
        VertexCut cut = global_min_vertex_cut(g, eps, oracle, rng.derive(2), 8, &stats);
        record.update(vertex_cut_record(parsed, cut));
        if (parsed.lifted) record["liftedValue"] = cut.value;
        record["trialStats"] = Json{{"values", stats.runValues}};
        record["budgetStats"] =
            Json{{"queries", stats.runQueries}, {"queryEdges", stats.runQueryEdges}};
        emit(record, opt, out);
        return 0;
    }

    if (opt.command == "brute") {
        BruteKind kind;
        std::optional<int> root;
        if (opt.kind == "edge-global") kind = BruteKind::EdgeGlobal;
        else if (opt.kind == "edge-rooted") kind = BruteKind::EdgeRooted;
        else if (opt.kind == "vertex-global") kind = BruteKind::VertexGlobal;
        else if (opt.kind == "vertex-rooted") kind = BruteKind::VertexRooted;
        else fail(Err::BadArgument, "--kind must name one of the four cut problems");
        if (kind == BruteKind::EdgeRooted || kind == BruteKind::VertexRooted) {
            if (!opt.root) fail(Err::BadArgument, "--root is required for rooted kinds");
            root = label_to_id(parsed, *opt.root);
        }
        DistinguishedCut cut = brute_min_cut(g, kind, root);
        record["kind"] = "brute-" + opt.kind;
        if (cut.edge) record.update(edge_cut_record(parsed, *cut.edge));
        if (cut.vertex) record.update(vertex_cut_record(parsed, *cut.vertex));
        emit(record, opt, out);
        return 0;
    }

    fail(Err::BadArgument, "unknown command " + opt.command);
}

const char* kUsage =
    "usage: dicut <edge-global|edge-rooted|vertex-global|vertex-rooted|brute> <graph-file> [flags]\n"
    "       dicut bench --sizes <n,...> [flags]\n"
    "flags: --epsilon <p/q|decimal>  --root <id>  --seed <u64>  --repeats <k>\n"
    "       --allow-zero-weights  --inject <file>  --json  --kind <kind>\n"
    "bench: --families er,dag,cycle  --eps-grid <e,...>  --trials <k>  --threads <t>\n"
    "       --maxw <W>  --timing\n";

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliOptions opt;
    try {
        if (args.empty()) fail(Err::BadArgument, "missing command");
        opt.command = args[0];
        std::size_t i = 1;
        auto need_value = [&](const std::string& flag) -> std::string {
            if (i + 1 >= args.size()) fail(Err::BadArgument, flag + " needs a value");
            return args[++i];
        };
        for (; i < args.size(); ++i) {
            const std::string& a = args[i];
            if (a == "--epsilon") opt.epsilon = need_value(a);
            else if (a == "--root") opt.root = std::stoll(need_value(a));
            else if (a == "--seed") opt.seed = std::stoull(need_value(a));
            else if (a == "--repeats") opt.repeats = static_cast<int>(std::stoll(need_value(a)));
            else if (a == "--allow-zero-weights") opt.allowZero = true;
            else if (a == "--inject") opt.injectPath = need_value(a);
            else if (a == "--json") opt.compactJson = true;
            else if (a == "--kind") opt.kind = need_value(a);
            else if (a == "--families") opt.families = need_value(a);
            else if (a == "--sizes") opt.sizes = need_value(a);
            else if (a == "--eps-grid") opt.epsGrid = need_value(a);
            else if (a == "--trials") opt.trials = static_cast<int>(std::stoll(need_value(a)));
            else if (a == "--threads") opt.threads = static_cast<int>(std::stoll(need_value(a)));
            else if (a == "--maxw") opt.maxw = std::stoll(need_value(a));
            else if (a == "--timing") opt.timing = true;
            else if (a == "--help" || a == "-h") { out << kUsage; return 0; }
            else if (!a.empty() && a[0] == '-') fail(Err::BadArgument, "unknown flag " + a);
            else if (opt.path.empty()) opt.path = a;
            else fail(Err::BadArgument, "unexpected argument " + a);
        }

        if (opt.command == "bench") {
            BenchSpec spec;
            spec.families = split_list(opt.families);
            for (const std::string& s : split_list(opt.sizes)) spec.sizes.push_back(std::stoi(s));
            for (const std::string& e : split_list(opt.epsGrid)) spec.epsGrid.push_back(parse_rational(e));
            spec.trials = opt.trials;
            spec.kind = opt.kind.empty() ? "edge-global" : opt.kind;
            spec.seed = opt.seed;
            spec.threads = std::max(1, opt.threads);
            spec.maxWeight = opt.maxw;
            spec.timing = opt.timing;
            bench(spec, out);
            return 0;
        }

        if (opt.path.empty()) fail(Err::BadArgument, "missing graph file");
        return run_cut_command(opt, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n' << kUsage;
        return 1;
    }
}

}  // namespace dicut
