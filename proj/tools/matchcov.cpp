#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "matchcov/io.hpp"

namespace fs = std::filesystem;
using namespace mc;

namespace {

constexpr int kOk = 0, kRefused = 1, kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

MultiGraph load(const std::string& path) {
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return parse_graph_text(ss.str());
    }
    return read_graph_file(path);
}

template <class T>
std::string join(const std::vector<T>& xs, const char* sep = " ") {
    std::ostringstream out;
    for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? sep : "") << xs[i];
    return out.str();
}

std::string edge_list(const MultiGraph& g, const std::vector<EdgeId>& es) {
    std::ostringstream out;
    for (std::size_t i = 0; i < es.size(); ++i)
        out << (i ? " " : "") << es[i] << ":" << g.edge(es[i]).u << "-" << g.edge(es[i]).v;
    return out.str();
}

void emit_graph(const MultiGraph& g, const std::string& out, const std::string& comment) {
    if (out.empty() || out == "-") write_edgelist(std::cout, g, comment);
    else write_graph_file(out, g, comment);
}

int cmd_analyze(const std::string& path, bool json) {
    MultiGraph g = load(path);
    if (g.order() % 2) throw Error(Errc::ParseError, "line 1: odd order " + std::to_string(g.order()) + ", no perfect matching");
    auto ms = enumerate_pms(g);
    if (ms.count() == 0) throw Error(Errc::NoPerfectMatching, "graph has no perfect matching");
    auto cov = is_matching_covered(g);
    if (!cov.covered) throw Error(Errc::NotMatchingCovered, cov.reason);
    auto da = analyze(g, ms);
    if (json) {
        std::cout << to_json(g, ms, da).dump(2) << "\n";
        return kOk;
    }
    std::cout << "order " << g.order() << ", size " << g.size() << "\n";
    std::cout << "perfect matchings: " << ms.count() << "\n";
    std::cout << "solitary edges: " << edge_list(g, solitary_edges(ms)) << "\n";
    std::cout << "classes (a -> b: class a depends on class b):\n";
    for (std::size_t c = 0; c < da.classes.size(); ++c)
        std::cout << "  " << c << ": " << edge_list(g, da.classes[c]) << "\n";
    std::cout << "hasse:";
    for (auto [a, b] : da.poset_edges) std::cout << " " << a << "->" << b;
    std::cout << "\nminimal: " << join(da.minimal) << "\n";
    std::cout << "removable: " << join(da.removable) << "\n";
    std::cout << "solitary classes: " << join(da.solitary) << "\n";
    std::cout << "pattern: " << pattern_string(da.pattern) << "\n";
    std::cout << "epsilon: " << da.epsilon << "\n";
    return kOk;
}

int cmd_rgraph(const std::string& path, bool coloring, bool json) {
    MultiGraph g = load(path);
    auto res = certify_rgraph(g);
    std::optional<EdgeColoring> col;
    if (res.ok && coloring) col = r_edge_coloring(g, res.cert.r);
    if (json) {
        Json j = to_json(res);
        if (coloring && res.ok) j["coloring"] = col ? to_json(*col) : Json(nullptr);
        std::cout << j.dump(2) << "\n";
    } else if (res.ok) {
        std::cout << "r-graph: r = " << res.cert.r << ", min odd cut " << res.cert.min_odd_cut
                  << (res.cert.is_3ec ? ", 3-edge-connected" : ", not 3-edge-connected") << "\n";
        if (coloring) {
            if (!col) std::cout << "no " << res.cert.r << "-edge-colouring\n";
            else
                for (auto& cls : col->classes()) std::cout << "  colour: " << edge_list(g, cls) << "\n";
        }
    } else {
        std::cout << "refused: " << res.refusal << "\n";
        if (res.violating_shore) std::cout << "  odd shore: " << join(res.violating_shore->members()) << "\n";
        if (res.degree_anomaly) std::cout << "  vertex: " << *res.degree_anomaly << "\n";
    }
    if (!res.ok) return kRefused;
    return coloring && !col ? kRefused : kOk;
}

int cmd_decompose(const std::string& path, const std::string& pieces_dir, bool json) {
    MultiGraph g = load(path);
    auto t = decompose_2cuts(g);
    if (!pieces_dir.empty()) {
        fs::create_directories(pieces_dir);
        for (int id : t.leaf_ids())
            write_graph_file((fs::path(pieces_dir) / ("piece_" + std::to_string(id) + ".el")).string(), t.nodes[id].graph,
                             "leaf " + std::to_string(id) + " of the 2-cut decomposition");
    }
    if (json) {
        std::cout << to_json(t).dump(2) << "\n";
        return kOk;
    }
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        auto& nd = t.nodes[i];
        std::cout << "node " << i << " (parent " << nd.parent << "): order " << nd.graph.order() << ", size "
                  << nd.graph.size();
        if (nd.cut)
            std::cout << ", split on " << edge_list(nd.graph, nd.cut->edge_ids) << " into " << nd.child[0] << ", "
                      << nd.child[1];
        else
            std::cout << ", leaf";
        std::cout << "\n";
    }
    return kOk;
}

struct GenArgs {
    std::vector<int> k;
    int cap = 3, n = 0, t = 1, a = 0, b = 0, index = 1, r = 3;
    std::vector<int> steps;
    std::string trace, out;
};

int cmd_generate(const std::string& family, const GenArgs& p) {
    MultiGraph g;
    std::string note = family;
    auto multiplied = [&](Base base) {
        std::vector<int> ks = p.k;
        if (ks.empty()) ks.assign(base == Base::c4 ? 2 : 3, 1);
        return gen_multiplied(base, ks, p.cap);
    };
    if (family == "theta") g = multiplied(Base::theta);
    else if (family == "k4") g = multiplied(Base::k4);
    else if (family == "c6bar") g = multiplied(Base::c6bar);
    else if (family == "c4") g = multiplied(Base::c4);
    else if (family == "petersen") g = petersen();
    else if (family == "r8") g = r8();
    else if (family == "r10") g = r10();
    else if (family == "n10") g = n10();
    else if (family == "staircase1") {
        if (p.a && p.b) g = gen_staircase1_split(p.a, p.b, p.t);
        else g = gen_staircase1(p.n, p.t);
    } else if (family == "staircase3") g = gen_staircase3(p.a, p.b, p.t);
    else if (family == "S") g = gen_family_S(p.index);
    else if (family == "D") {
        DTrace tr;
        if (p.a) tr.a = p.a;
        if (p.b) tr.b = p.b;
        tr.steps = p.steps;
        g = gen_family_D(tr);
    } else if (family == "L") {
        auto tr = parse_ltrace(p.trace);
        g = gen_family_L(tr);
        note += " " + tr.str();
    } else if (family == "Lr") {
        auto tr = parse_ltrace(p.trace);
        g = gen_family_L_r(p.r, tr);
        note += " r=" + std::to_string(p.r) + " " + tr.str();
    } else {
        throw UsageError("unknown family '" + family + "'");
    }
    emit_graph(g, p.out, note);
    return kOk;
}

void print_matches(const std::vector<FamilyMatch>& ms) {
    std::vector<std::string> labels;
    for (auto& m : ms) labels.push_back(m.label());
    std::cout << (labels.empty() ? "none" : join(labels, ", "));
}

int cmd_classify(const std::string& path, bool json) {
    MultiGraph g = load(path);
    auto rep = classify(g);
    if (json) {
        std::cout << to_json(rep).dump(2) << "\n";
    } else {
        std::cout << "order " << g.order() << ", size " << g.size() << "\n";
        if (rep.rgraph.ok)
            std::cout << "r-graph: r = " << rep.rgraph.cert.r << (rep.three_ec ? ", 3-edge-connected" : ", has a 2-cut")
                      << "\n";
        else
            std::cout << "not an r-graph: " << rep.rgraph.refusal << "\n";
        if (!rep.structure_note.empty()) std::cout << "note: " << rep.structure_note << "\n";
        if (rep.analysis) {
            std::cout << "pattern: " << pattern_string(rep.pattern) << "\n";
            std::cout << "solitary edges: " << edge_list(g, rep.solitary) << "\n";
        }
        std::cout << "families: ";
        print_matches(rep.family_matches);
        std::cout << "\nrow: " << (rep.theorem_row ? *rep.theorem_row : "none") << "\n";
        if (!rep.row_consistent) std::cout << "warning: recognizers disagree with the row\n";
        for (auto& p : rep.pieces) {
            std::cout << "piece " << p.node << ": order " << p.graph.order() << ", pattern " << pattern_string(p.pattern)
                      << ", families ";
            print_matches(p.families);
            std::cout << "\n";
        }
        if (rep.derived_solitary)
            std::cout << "solitary edges from the split: " << edge_list(g, *rep.derived_solitary)
                      << (rep.derived_agrees ? "" : " (DISAGREES)") << "\n";
    }
    return rep.row_consistent && rep.derived_agrees ? kOk : kRefused;
}

struct VerifyArgs {
    std::string theorem, corpus_dir, witness_dir;
    std::vector<int> exhaustive, family;
    int shuffles = 5;
    unsigned seed = 1, threads = 0;
    bool json = false;
};

int cmd_verify(const VerifyArgs& a) {
    std::vector<Theorem> ts;
    if (a.theorem == "all") ts = all_theorems();
    else if (auto t = theorem_from_id(a.theorem)) ts = {*t};
    else {
        std::string ids;
        for (Theorem t : all_theorems()) ids += std::string(" ") + theorem_id(t);
        throw UsageError("unknown theorem '" + a.theorem + "'; known:" + ids + " all");
    }
    std::vector<MultiGraph> corpus;
    std::vector<std::string> names;
    if (!a.corpus_dir.empty()) {
        std::vector<fs::path> files;
        for (auto& e : fs::directory_iterator(a.corpus_dir))
            if (e.is_regular_file()) files.push_back(e.path());
        std::sort(files.begin(), files.end());
        for (auto& f : files) {
            try {
                corpus.push_back(read_graph_file(f.string()));
            } catch (const Error& e) {
                throw Error(Errc::ParseError, f.string() + ": " + e.what());
            }
            names.push_back(f.filename().string());
        }
    }
    if (!a.exhaustive.empty()) {
        if (a.exhaustive.size() != 2) throw UsageError("--exhaustive takes N R");
        for (auto& g : exhaustive_small_corpus(a.exhaustive[0], a.exhaustive[1])) {
            names.push_back("exhaustive#" + std::to_string(names.size()));
            corpus.push_back(g);
        }
    }
    if (!a.family.empty()) {
        if (a.family.size() != 2) throw UsageError("--family takes N T");
        for (auto& g : family_corpus(a.family[0], a.family[1])) {
            names.push_back("family#" + std::to_string(names.size()));
            corpus.push_back(g);
        }
    }
    if (corpus.empty()) throw UsageError("empty corpus: give --corpus, --exhaustive or --family");
    VerifyOptions opt{a.shuffles, a.seed, a.threads};
    bool clean = true;
    Json all = Json::array();
    for (Theorem t : ts) {
        auto rep = verify(t, corpus, opt);
        clean = clean && rep.violations.empty();
        if (a.json) all.push_back(to_json(rep));
        else
            std::cout << theorem_id(t) << ": checked " << rep.checked << ", applied " << rep.applied << ", skipped "
                      << rep.skipped << ", violations " << rep.violations.size() << "\n";
        for (auto& v : rep.violations) {
            if (!a.json) std::cout << "  VIOLATION (implementation bug) " << names[v.index] << ": " << v.message << "\n";
            if (!a.witness_dir.empty()) {
                fs::create_directories(a.witness_dir);
                write_graph_file((fs::path(a.witness_dir) / (std::string(theorem_id(t)) + "_" + std::to_string(v.index) + ".el")).string(),
                                 v.graph, std::string(theorem_id(t)) + ": " + v.message);
            }
        }
    }
    if (a.json) std::cout << all.dump(2) << "\n";
    return clean ? kOk : kRefused;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"matching covered graphs and r-graphs: dependence classes, solitary patterns, 2-cuts, families"};
    app.require_subcommand(1);

    std::string path = "-";
    bool json = false, coloring = false;
    std::string pieces_dir;

    auto* an = app.add_subcommand("analyze", "perfect matchings, dependence classes, poset, solitary pattern");
    an->add_option("graph", path, "graph file (edgelist-m or sparse6), '-' for stdin");
    an->add_flag("--json", json, "JSON output");

    auto* rg = app.add_subcommand("rgraph", "r-graph certificate or refusal");
    rg->add_option("graph", path, "graph file, '-' for stdin");
    rg->add_flag("--coloring", coloring, "also emit an r-edge-colouring");
    rg->add_flag("--json", json, "JSON output");

    auto* de = app.add_subcommand("decompose", "2-cut decomposition tree");
    de->add_option("graph", path, "graph file, '-' for stdin");
    de->add_option("--pieces-dir", pieces_dir, "write the leaves as edgelist files here");
    de->add_flag("--json", json, "JSON output");

    GenArgs ga;
    std::string family;
    auto* ge = app.add_subcommand("generate", "generate a family member as an edgelist");
    ge->add_option("family", family,
                   "theta k4 c6bar c4 petersen r8 r10 n10 staircase1 staircase3 S D L Lr")
        ->required();
    ge->add_option("--k", ga.k, "multipliers for theta/k4/c6bar/c4")->expected(1, 3);
    ge->add_option("--cap", ga.cap, "how many multipliers may exceed one");
    ge->add_option("--n", ga.n, "order (staircase1)");
    ge->add_option("--t", ga.t, "thickness");
    ge->add_option("--a", ga.a, "first ladder order");
    ge->add_option("--b", ga.b, "second ladder order");
    ge->add_option("--index", ga.index, "member of S, 1..5");
    ge->add_option("--steps", ga.steps, "splice vertices for D")->expected(1, -1);
    ge->add_option("--trace", ga.trace, "L trace, e.g. glue(K4:1:1:1,0,C2:3,0)");
    ge->add_option("--r", ga.r, "degree for Lr");
    ge->add_option("--out", ga.out, "output file (default stdout)");

    auto* cl = app.add_subcommand("classify", "classification report");
    cl->add_option("graph", path, "graph file, '-' for stdin");
    cl->add_flag("--json", json, "JSON output");

    VerifyArgs va;
    auto* ve = app.add_subcommand("verify", "check a theorem over a corpus; exit 0 iff no violations");
    ve->add_option("theorem", va.theorem, "theorem id or 'all'")->required();
    ve->add_option("--corpus", va.corpus_dir, "directory of graph files");
    ve->add_option("--exhaustive", va.exhaustive, "all connected r-regular multigraphs: N R")->expected(2);
    ve->add_option("--family", va.family, "generated family members: max order N, max thickness T")->expected(2);
    ve->add_option("--shuffles", va.shuffles, "shuffled decomposition runs per graph");
    ve->add_option("--seed", va.seed, "random seed");
    ve->add_option("--threads", va.threads, "worker threads (0: hardware)");
    ve->add_option("--witness-dir", va.witness_dir, "write violating graphs here");
    ve->add_flag("--json", va.json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*an) return cmd_analyze(path, json);
        if (*rg) return cmd_rgraph(path, coloring, json);
        if (*de) return cmd_decompose(path, pieces_dir, json);
        if (*ge) return cmd_generate(family, ga);
        if (*cl) return cmd_classify(path, json);
        if (*ve) return cmd_verify(va);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == Errc::ParseError ? kUsage : kRefused;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kRefused;
    }
    return kUsage;
}
