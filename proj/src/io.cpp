#include "matchcov/io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace mc {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
    throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + msg);
}

// strips comments; returns false on blank lines
bool content(std::string& s) {
    if (auto p = s.find('#'); p != std::string::npos) s.erase(p);
    return s.find_first_not_of(" \t\r") != std::string::npos;
}

bool read_ints(const std::string& s, long& a, long& b) {
    std::istringstream ss(s);
    std::string extra;
    return static_cast<bool>(ss >> a >> b) && !(ss >> extra);
}

}  // namespace

MultiGraph parse_edgelist(std::istream& in) {
    std::string line;
    int lineno = 0;
    long n = -1, m = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!content(line)) continue;
        if (!read_ints(line, n, m)) fail(lineno, "expected header \"n m\"");
        if (n < 0 || m < 0) fail(lineno, "negative count in header");
        break;
    }
    if (n < 0) fail(lineno + 1, "missing header \"n m\"");
    if (n > 4096) fail(lineno, "order too large");
    MultiGraph g(static_cast<int>(n));
    int header = lineno;
    while (std::getline(in, line)) {
        ++lineno;
        if (!content(line)) continue;
        long u, v;
        if (!read_ints(line, u, v)) fail(lineno, "expected edge \"u v\"");
        if (u < 0 || v < 0 || u >= n || v >= n) fail(lineno, "vertex out of range 0.." + std::to_string(n - 1));
        if (u == v) fail(lineno, "loop at vertex " + std::to_string(u));
        if (g.size() == m) fail(lineno, "more edges than the header's " + std::to_string(m));
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (g.size() != m)
        fail(header, "header announces " + std::to_string(m) + " edges, found " + std::to_string(g.size()));
    return g;
}

MultiGraph parse_edgelist(const std::string& text) {
    std::istringstream in(text);
    return parse_edgelist(in);
}

void write_edgelist(std::ostream& out, const MultiGraph& g, const std::string& comment) {
    if (!comment.empty()) {
        std::istringstream ss(comment);
        std::string l;
        while (std::getline(ss, l)) out << "# " << l << "\n";
    }
    out << g.order() << " " << g.size() << "\n";
    for (auto& e : g.edges()) out << e.u << " " << e.v << "\n";
}

std::string edgelist_string(const MultiGraph& g) {
    std::ostringstream out;
    write_edgelist(out, g);
    return out.str();
}

// ---- sparse6

namespace {

int bits_for(long n) {
    int k = 1;
    while ((1L << k) < n) ++k;
    return k;
}

}  // namespace

MultiGraph parse_sparse6(const std::string& raw) {
    std::string s = raw;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    const std::string header = ">>sparse6<<";
    if (s.rfind(header, 0) == 0) s = s.substr(header.size());
    if (s.empty() || s[0] != ':') fail(1, "sparse6 data must start with ':'");
    std::vector<int> data;
    for (std::size_t i = 1; i < s.size(); ++i) {
        int c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) fail(1, "invalid sparse6 byte at offset " + std::to_string(i));
        data.push_back(c - 63);
    }
    std::size_t pos = 0;
    long n;
    auto take = [&](int count) {
        long x = 0;
        for (int i = 0; i < count; ++i) {
            if (pos >= data.size()) fail(1, "truncated sparse6 size field");
            x = (x << 6) | data[pos++];
        }
        return x;
    };
    if (data.empty()) fail(1, "empty sparse6 data");
    if (data[0] < 63) {
        n = take(1);
    } else {
        ++pos;
        if (pos < data.size() && data[pos] == 63) {
            ++pos;
            n = take(6);
        } else {
            n = take(3);
        }
    }
    if (n > 4096) fail(1, "order too large");
    MultiGraph g(static_cast<int>(n));
    int k = bits_for(n);
    std::size_t total = (data.size() - pos) * 6, bit = 0;
    auto get = [&]() { std::size_t b = pos * 6 + bit++; return (data[b / 6] >> (5 - b % 6)) & 1; };
    long v = 0;
    while (bit + 1 + static_cast<std::size_t>(k) <= total) {
        int b = get();
        long x = 0;
        for (int i = 0; i < k; ++i) x = (x << 1) | get();
        if (b) ++v;
        if (x >= n || v >= n) break;
        if (x > v) v = x;
        else if (x == v) fail(1, "loop at vertex " + std::to_string(v));
        else g.add_edge(static_cast<int>(x), static_cast<int>(v));
    }
    return g;
}

std::string to_sparse6(const MultiGraph& g) {
    long n = g.order();
    int k = bits_for(n);
    std::vector<int> bits;
    auto enc = [&](long x) {
        for (int i = k - 1; i >= 0; --i) bits.push_back((x >> i) & 1);
    };
    std::vector<std::pair<int, int>> es;
    for (auto& e : g.edges()) es.emplace_back(std::max(e.u, e.v), std::min(e.u, e.v));
    std::sort(es.begin(), es.end());
    long cur = 0;
    for (auto [v, u] : es) {
        if (v == cur) {
            bits.push_back(0);
            enc(u);
        } else if (v == cur + 1) {
            cur = v;
            bits.push_back(1);
            enc(u);
        } else {
            cur = v;
            bits.push_back(1);
            enc(v);
            bits.push_back(0);
            enc(u);
        }
    }
    long pad = (6 - static_cast<long>(bits.size()) % 6) % 6;
    if (k < 6 && n == (1L << k) && pad >= k && cur < n - 1) bits.push_back(0);
    while (bits.size() % 6) bits.push_back(1);

    std::string out = ":";
    if (n <= 62) {
        out += static_cast<char>(n + 63);
    } else if (n <= 258047) {
        out += static_cast<char>(126);
        for (int i = 2; i >= 0; --i) out += static_cast<char>(((n >> (6 * i)) & 63) + 63);
    } else {
        out += static_cast<char>(126);
        out += static_cast<char>(126);
        for (int i = 5; i >= 0; --i) out += static_cast<char>(((n >> (6 * i)) & 63) + 63);
    }
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int c = 0;
        for (int j = 0; j < 6; ++j) c = (c << 1) | bits[i + j];
        out += static_cast<char>(c + 63);
    }
    return out;
}

MultiGraph parse_graph_text(const std::string& text) {
    auto p = text.find_first_not_of(" \t\r\n");
    if (p != std::string::npos && (text[p] == ':' || text.compare(p, 11, ">>sparse6<<") == 0))
        return parse_sparse6(text.substr(p));
    return parse_edgelist(text);
}

MultiGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_graph_text(ss.str());
}

void write_graph_file(const std::string& path, const MultiGraph& g, const std::string& comment) {
    std::ofstream out(path);
    if (!out) throw Error(Errc::ParseError, "cannot write " + path);
    write_edgelist(out, g, comment);
}

// ---- JSON

Json to_json(const MultiGraph& g) {
    Json edges = Json::array();
    for (auto& e : g.edges()) edges.push_back({e.u, e.v});
    return {{"order", g.order()}, {"size", g.size()}, {"edges", edges}};
}

Json to_json(const MultiGraph& g, const MatchingSet& ms, const DependenceAnalysis& da) {
    Json j;
    j["order"] = g.order();
    j["size"] = g.size();
    j["pm_count"] = ms.count();
    j["solitary_edges"] = solitary_edges(ms);
    j["classes"] = da.classes;
    Json hasse = Json::array();
    for (auto [a, b] : da.poset_edges) hasse.push_back({a, b});
    j["poset"] = {{"convention", "[a, b]: class a depends on class b"}, {"hasse", hasse}};
    j["minimal"] = da.minimal;
    j["removable"] = da.removable;
    j["solitary_classes"] = da.solitary;
    j["pattern"] = da.pattern;
    j["pattern_string"] = pattern_string(da.pattern);
    j["epsilon"] = da.epsilon;
    return j;
}

Json to_json(const RGraphResult& r) {
    Json j;
    j["ok"] = r.ok;
    if (r.ok) {
        j["r"] = r.cert.r;
        j["min_odd_cut"] = r.cert.min_odd_cut;
        j["three_edge_connected"] = r.cert.is_3ec;
    } else {
        j["refusal"] = r.refusal;
        if (r.violating_shore) j["violating_shore"] = r.violating_shore->members();
        if (r.degree_anomaly) j["degree_anomaly"] = *r.degree_anomaly;
    }
    return j;
}

Json to_json(const EdgeColoring& c) {
    return {{"r", c.r}, {"color_of", c.color_of}, {"classes", c.classes()}};
}

namespace {

std::string shore_hex(const VertexSet& x) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    std::size_t n = x.universe();
    for (std::size_t hi = (n + 3) / 4; hi-- > 0;) {
        int d = 0;
        for (int b = 3; b >= 0; --b) {
            std::size_t i = hi * 4 + static_cast<std::size_t>(b);
            d = (d << 1) | (i < n && x.test(i));
        }
        out += digits[d];
    }
    return "0x" + (out.empty() ? std::string("0") : out);
}

}  // namespace

Json to_json(const DecompositionTree& t) {
    Json nodes = Json::array();
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        auto& nd = t.nodes[i];
        Json j;
        j["id"] = i;
        j["parent"] = nd.parent;
        j["graph"] = to_json(nd.graph);
        if (nd.cut) {
            j["cut"] = {{"edges", nd.cut->edge_ids}, {"shore", nd.cut->shore.members()}, {"shore_hex", shore_hex(nd.cut->shore)}};
            j["children"] = {nd.child[0], nd.child[1]};
        } else {
            j["edgelist"] = edgelist_string(nd.graph);
        }
        if (nd.origin) {
            j["marker_edge"] = nd.origin->marker_edge;
            j["vertex_origin"] = nd.origin->vertex_origin;
            j["edge_origin"] = nd.origin->edge_origin;
        }
        nodes.push_back(j);
    }
    return {{"nodes", nodes}, {"leaves", t.leaf_ids()}};
}

Json to_json(const FamilyMatch& m) {
    return {{"family", family_name(m.family)}, {"params", m.params}, {"label", m.label()}};
}

Json to_json(const ClassificationReport& r) {
    Json j;
    j["rgraph"] = to_json(r.rgraph);
    j["three_edge_connected"] = r.three_ec;
    j["matching_covered"] = r.matching_covered;
    if (!r.structure_note.empty()) j["note"] = r.structure_note;
    if (r.analysis) {
        j["pattern"] = r.pattern;
        j["pattern_string"] = pattern_string(r.pattern);
        j["solitary_edges"] = r.solitary;
        j["epsilon"] = r.analysis->epsilon;
        j["class_count"] = r.analysis->classes.size();
    }
    Json fams = Json::array();
    for (auto& m : r.family_matches) fams.push_back(to_json(m));
    j["families"] = fams;
    j["row"] = r.theorem_row ? Json(*r.theorem_row) : Json(nullptr);
    j["row_consistent"] = r.row_consistent;
    if (r.decomposition) {
        j["decomposition"] = to_json(*r.decomposition);
        Json pieces = Json::array();
        for (auto& p : r.pieces) {
            Json pj;
            pj["node"] = p.node;
            pj["order"] = p.graph.order();
            pj["rgraph"] = to_json(p.rgraph);
            pj["pattern"] = p.pattern;
            Json pf = Json::array();
            for (auto& m : p.families) pf.push_back(to_json(m));
            pj["families"] = pf;
            pj["row"] = p.row ? Json(*p.row) : Json(nullptr);
            pieces.push_back(pj);
        }
        j["pieces"] = pieces;
    }
    if (r.derived_solitary) {
        j["derived_solitary_edges"] = *r.derived_solitary;
        j["derived_agrees"] = r.derived_agrees;
    }
    return j;
}

Json to_json(const VerifyReport& r) {
    Json v = Json::array();
    for (auto& x : r.violations) v.push_back({{"index", x.index}, {"message", x.message}, {"graph", to_json(x.graph)}});
    return {{"theorem", theorem_id(r.theorem)},
            {"checked", r.checked},
            {"applied", r.applied},
            {"skipped", r.skipped},
            {"violations", v}};
}

}  // namespace mc
