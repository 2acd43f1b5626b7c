#include "matchcov/families.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "matchcov/cuts.hpp"
#include "matchcov/dependence.hpp"
#include "matchcov/rgraph.hpp"

namespace mc {

MultiGraph theta() { return c2(3); }

MultiGraph c2(int m) {
    if (m < 1) throw Error(Errc::BadParams, "need at least one edge");
    MultiGraph g(2);
    for (int i = 0; i < m; ++i) g.add_edge(0, 1);
    return g;
}

MultiGraph k4() { return MultiGraph(4, {{0, 1}, {2, 3}, {0, 2}, {1, 3}, {0, 3}, {1, 2}}); }

MultiGraph c6bar() {
    return MultiGraph(6, {{0, 3}, {1, 2}, {4, 5}, {1, 4}, {0, 2}, {3, 5}, {2, 5}, {0, 1}, {3, 4}});
}

MultiGraph c4() { return MultiGraph(4, {{0, 1}, {2, 3}, {1, 2}, {3, 0}}); }

MultiGraph petersen() {
    MultiGraph g(10);
    for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
    for (int i = 0; i < 5; ++i) g.add_edge(i, i + 5);
    for (int i = 0; i < 5; ++i) g.add_edge(5 + i, 5 + (i + 2) % 5);
    return g;
}

// bicorn, labelled as usually drawn: triangles 012 and 345
MultiGraph r8() {
    return MultiGraph(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 6}, {2, 7}, {3, 4}, {3, 5}, {4, 5}, {4, 6}, {5, 7}, {6, 7}});
}

MultiGraph r10() {
    return MultiGraph(10, {{1, 2}, {2, 5}, {5, 6}, {6, 9}, {0, 9}, {0, 8}, {7, 8}, {4, 7}, {3, 4}, {1, 3}, {2, 3},
                           {4, 5}, {6, 7}, {8, 9}, {0, 1}});
}

MultiGraph n10() {
    return MultiGraph(10, {{0, 1}, {0, 2}, {1, 2}, {0, 8}, {8, 9}, {6, 9}, {1, 6}, {6, 7}, {2, 7}, {4, 9}, {3, 4},
                           {3, 5}, {5, 7}, {4, 5}, {3, 8}});
}

const char* base_name(Base b) {
    switch (b) {
        case Base::theta: return "theta";
        case Base::k4: return "K4";
        case Base::c6bar: return "C6bar";
        case Base::c4: return "C4";
    }
    return "?";
}

MultiGraph base_graph(Base b) {
    switch (b) {
        case Base::theta: return theta();
        case Base::k4: return k4();
        case Base::c6bar: return c6bar();
        case Base::c4: return c4();
    }
    return {};
}

std::vector<std::vector<EdgeId>> base_classes(Base b) {
    switch (b) {
        case Base::theta: return {{0}, {1}, {2}};
        case Base::k4: return {{0, 1}, {2, 3}, {4, 5}};
        case Base::c6bar: return {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}};
        case Base::c4: return {{0, 1}, {2, 3}};
    }
    return {};
}

MultiGraph gen_multiplied(Base b, const std::vector<int>& ks, int cap) {
    auto cls = base_classes(b);
    if (ks.size() != cls.size())
        throw Error(Errc::BadParams, std::string(base_name(b)) + " takes " + std::to_string(cls.size()) + " multipliers");
    int raised = 0;
    for (int k : ks) {
        if (k < 1) throw Error(Errc::BadParams, "multipliers must be positive");
        raised += k > 1;
    }
    if (raised > cap)
        throw Error(Errc::CapViolated, std::to_string(raised) + " multipliers exceed one, cap is " + std::to_string(cap));
    MultiGraph g = base_graph(b);
    for (std::size_t i = 0; i < cls.size(); ++i) g = multiply_matching(g, cls[i], ks[i]);
    return g;
}

Dumbbell gen_dumbbell(int k, int a, int b, int t) {
    if (k != 1 && k != 3) throw Error(Errc::BadParams, "bone length must be 1 or 3");
    if (a < 2 || b < 2 || a % 2 || b % 2) throw Error(Errc::BadLadder, "ladder orders must be even and at least 2");
    if (t < 1) throw Error(Errc::BadParams, "thickness must be positive");
    Dumbbell d;
    d.g = MultiGraph(a + b + k + 1);
    auto ladder = [&](int o, int order) {
        int rungs = order / 2;
        for (int i = 0; i < rungs; ++i) d.rung_matching.push_back(d.g.add_edge(o + 2 * i, o + 2 * i + 1));
        for (int i = 0; i + 1 < rungs; ++i) {
            d.g.add_edge(o + 2 * i, o + 2 * i + 2);
            d.g.add_edge(o + 2 * i + 1, o + 2 * i + 3);
        }
    };
    ladder(0, a);
    int u = a, x = a + k, o2 = a + k + 1;
    for (int i = 0; i < k; ++i) {
        EdgeId e = d.g.add_edge(u + i, u + i + 1);
        if (i % 2 == 0) d.rung_matching.push_back(e);
    }
    d.g.add_edge(u, 0);
    d.g.add_edge(u, 1);
    ladder(o2, b);
    d.g.add_edge(x, o2);
    d.g.add_edge(x, o2 + 1);
    std::sort(d.rung_matching.begin(), d.rung_matching.end());
    d.g = multiply_matching(d.g, d.rung_matching, t);
    d.sockets = {u, x};
    return d;
}

std::vector<MultiGraph> staircase_completions(int k, int a, int b, int t) {
    Dumbbell d = gen_dumbbell(k, a, b, t);
    std::vector<Vertex> deficit;
    for (int v = 0; v < d.g.order(); ++v) {
        int gap = t + 2 - d.g.degree(v);
        if (gap < 0 || gap > 1) throw Error(Errc::PreconditionUnmet, "unexpected dumbbell degree");
        if (gap) deficit.push_back(v);
    }
    std::vector<MultiGraph> out;
    std::vector<char> used(deficit.size(), 0);
    MultiGraph h = d.g;
    std::function<void()> rec = [&]() {
        std::size_t i = 0;
        while (i < deficit.size() && used[i]) ++i;
        if (i == deficit.size()) {
            if (is_k_connected(h, k == 1 ? 2 : 3)) out.push_back(h);
            return;
        }
        used[i] = 1;
        for (std::size_t j = i + 1; j < deficit.size(); ++j) {
            if (used[j]) continue;
            used[j] = 1;
            MultiGraph saved = h;
            h.add_edge(deficit[i], deficit[j]);
            rec();
            h = saved;
            used[j] = 0;
        }
        used[i] = 0;
    };
    rec();
    return out;
}

MultiGraph gen_staircase1_split(int a, int b, int t) {
    auto c = staircase_completions(1, a, b, t);
    if (c.empty()) throw Error(Errc::PreconditionUnmet, "no 2-connected completion");
    return c.front();
}

MultiGraph gen_staircase1(int n, int t) {
    if (n < 6 || n % 2) throw Error(Errc::BadOrder, "staircase order must be even and at least 6");
    return gen_staircase1_split(2, n - 4, t);
}

MultiGraph gen_staircase3(int a, int b, int t) {
    if (a > b) std::swap(a, b);
    auto c = staircase_completions(3, a, b, t);
    if (c.empty()) throw Error(Errc::PreconditionUnmet, "no 3-connected completion");
    return c.front();
}

std::vector<std::pair<int, int>> staircase3_params(int n) {
    std::vector<std::pair<int, int>> out;
    for (int a = 2; 2 * a <= n - 4; a += 2) out.emplace_back(a, n - 4 - a);
    return out;
}

MultiGraph gen_family_S(int index) {
    std::vector<std::pair<int, int>> hexagon{{4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 4}};
    auto with_hex = [&](int n, std::vector<std::pair<int, int>> es) {
        es.insert(es.end(), hexagon.begin(), hexagon.end());
        return MultiGraph(n, es);
    };
    switch (index) {
        case 1:  // tricorn
            return with_hex(10, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6}, {2, 7}, {3, 8}, {3, 9}});
        case 2:
            return with_hex(12, {{0, 1}, {0, 2}, {0, 3}, {1, 10}, {10, 4}, {1, 11}, {11, 5}, {10, 11}, {2, 6}, {2, 7},
                                 {3, 8}, {3, 9}});
        case 3:
            return with_hex(14, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 12}, {12, 6}, {2, 13}, {13, 7}, {12, 13},
                                 {3, 10}, {10, 8}, {3, 11}, {11, 9}, {10, 11}});
        case 4:
            return with_hex(16, {{0, 1}, {0, 2}, {0, 3}, {1, 14}, {14, 4}, {1, 15}, {15, 5}, {14, 15}, {2, 12}, {12, 6},
                                 {2, 13}, {13, 7}, {12, 13}, {3, 10}, {10, 8}, {3, 11}, {11, 9}, {10, 11}});
        case 5:  // 12-cycle 0-1-3-11-9-7-6-2-4-8-10-5 with six chords
            return MultiGraph(12, {{0, 1}, {1, 3}, {3, 11}, {11, 9}, {9, 7}, {7, 6}, {6, 2}, {2, 4}, {4, 8}, {8, 10},
                                   {10, 5}, {5, 0}, {8, 6}, {4, 10}, {0, 2}, {5, 11}, {1, 7}, {3, 9}});
        default: throw Error(Errc::BadIndex, "family S index must be 1..5");
    }
}

std::vector<Vertex> family_D_eligible(const MultiGraph& g, bool first_step) {
    auto da = analyze(g);
    std::vector<EdgeId> doubleton, singleton;
    for (int c : da.solitary) {
        auto& cls = da.classes[c];
        if (cls.size() == 2) doubleton.insert(doubleton.end(), cls.begin(), cls.end());
        if (cls.size() == 1) singleton.push_back(cls[0]);
    }
    std::vector<Vertex> out;
    if (first_step && singleton.size() != 1) return out;
    for (EdgeId e : doubleton)
        for (Vertex v : {g.edge(e).u, g.edge(e).v})
            if (!first_step || vertex_edge_distance(g, v, singleton[0]) == 2) out.push_back(v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

MultiGraph gen_family_D(const DTrace& t) {
    if (t.a + t.b + 4 < 12) throw Error(Errc::BadOrder, "base 3-staircase must have order 12 or more");
    if (t.steps.empty()) throw Error(Errc::BadParams, "trace needs at least one splice step");
    MultiGraph g = gen_staircase3(t.a, t.b, 1);
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        auto ok = family_D_eligible(g, i == 0);
        Vertex v = t.steps[i];
        if (!std::binary_search(ok.begin(), ok.end(), v))
            throw Error(Errc::IneligibleVertex, "vertex " + std::to_string(v) + " is not eligible at step " +
                                                    std::to_string(i));
        g = splice_k4(g, v);
    }
    return g;
}

bool is_family_D(const MultiGraph& g) {
    if (g.regular_degree() != 3 || g.order() > kEnumerationLimit || !is_k_connected(g, 3)) return false;
    return solitary_pattern(g) == SolitaryPattern{2};
}

// ---- family L

LTrace LTrace::leaf_c2(int m) {
    LTrace t;
    t.kind = Kind::c2;
    t.m = m;
    return t;
}

LTrace LTrace::leaf_k4(std::vector<int> mult) {
    if (mult.size() == 3) mult = {mult[0], mult[0], mult[1], mult[1], mult[2], mult[2]};
    if (mult.size() != 6) throw Error(Errc::BadParams, "K4 leaf takes 3 or 6 multiplicities");
    LTrace t;
    t.kind = Kind::k4;
    t.mult = std::move(mult);
    return t;
}

LTrace LTrace::join(LTrace l, EdgeId e1, LTrace r, EdgeId e2, bool crossed) {
    LTrace t;
    t.kind = Kind::glue;
    t.left = std::make_shared<LTrace>(std::move(l));
    t.right = std::make_shared<LTrace>(std::move(r));
    t.e1 = e1;
    t.e2 = e2;
    t.crossed = crossed;
    return t;
}

std::string LTrace::str() const {
    switch (kind) {
        case Kind::c2: return "C2:" + std::to_string(m);
        case Kind::k4: {
            std::string s = "K4";
            for (int k : mult) s += ":" + std::to_string(k);
            return s;
        }
        case Kind::glue:
            return std::string(crossed ? "xglue(" : "glue(") + left->str() + "," + std::to_string(e1) + "," +
                   right->str() + "," + std::to_string(e2) + ")";
    }
    return "";
}

namespace {

class TraceParser {
public:
    explicit TraceParser(const std::string& s) : s_(s) {}

    LTrace parse() {
        LTrace t = node();
        skip();
        if (p_ != s_.size()) fail("trailing input");
        return t;
    }

private:
    [[noreturn]] void fail(const std::string& what) {
        throw Error(Errc::ParseError, "trace position " + std::to_string(p_) + ": " + what);
    }
    void skip() {
        while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
    }
    bool eat(const std::string& tok) {
        skip();
        if (s_.compare(p_, tok.size(), tok) == 0) {
            p_ += tok.size();
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(std::string(1, c))) fail(std::string("expected '") + c + "'");
    }
    int number() {
        skip();
        std::size_t q = p_;
        while (q < s_.size() && std::isdigit(static_cast<unsigned char>(s_[q]))) ++q;
        if (q == p_) fail("expected a number");
        int v = std::stoi(s_.substr(p_, q - p_));
        p_ = q;
        return v;
    }
    LTrace node() {
        bool crossed = false;
        if (eat("xglue(")) crossed = true;
        else if (!eat("glue(")) {
            if (eat("C2:")) return LTrace::leaf_c2(number());
            if (eat("K4")) {
                std::vector<int> mult;
                while (eat(":")) mult.push_back(number());
                if (mult.size() != 3 && mult.size() != 6) fail("K4 leaf takes 3 or 6 multiplicities");
                return LTrace::leaf_k4(mult);
            }
            fail("expected glue(, xglue(, C2: or K4:");
        }
        LTrace l = node();
        expect(',');
        int e1 = number();
        expect(',');
        LTrace r = node();
        expect(',');
        int e2 = number();
        expect(')');
        return LTrace::join(std::move(l), e1, std::move(r), e2, crossed);
    }

    const std::string& s_;
    std::size_t p_ = 0;
};

constexpr std::pair<int, int> kK4Pairs[6] = {{0, 1}, {2, 3}, {0, 2}, {1, 3}, {0, 3}, {1, 2}};

MultiGraph k4_leaf(const std::vector<int>& mult) {
    MultiGraph g(4);
    for (int p = 0; p < 6; ++p)
        for (int i = 0; i < mult[p]; ++i) g.add_edge(kK4Pairs[p].first, kK4Pairs[p].second);
    return g;
}

bool k4_leaf_ok(const std::vector<int>& mult) {
    for (int k : mult)
        if (k < 1) return false;
    for (int p = 0; p < 6; p += 2)
        if (mult[p] == 1 && mult[p + 1] == 1) return true;
    return false;
}

bool in_half_class(const MultiGraph& g, EdgeId e) {
    if (e < 0 || e >= g.size()) return false;
    auto da = analyze(g);
    return static_cast<int>(da.classes[da.class_of[e]].size()) * 2 == g.order();
}

}  // namespace

LTrace parse_ltrace(const std::string& s) { return TraceParser(s).parse(); }

MultiGraph gen_family_L(const LTrace& t) {
    switch (t.kind) {
        case LTrace::Kind::c2:
            if (t.m < 2) throw Error(Errc::BadParams, "two-vertex leaf needs at least two edges");
            return c2(t.m);
        case LTrace::Kind::k4:
            if (!k4_leaf_ok(t.mult))
                throw Error(Errc::BadParams, "K4 leaf needs positive multiplicities and a perfect matching of simple edges");
            return k4_leaf(t.mult);
        case LTrace::Kind::glue: {
            MultiGraph g1 = gen_family_L(*t.left), g2 = gen_family_L(*t.right);
            if (!in_half_class(g1, t.e1)) throw Error(Errc::BadGlueEdge, "left edge is not in a half-order class");
            if (!in_half_class(g2, t.e2)) throw Error(Errc::BadGlueEdge, "right edge is not in a half-order class");
            return glue(g1, t.e1, g2, t.e2, t.crossed);
        }
    }
    return {};
}

MultiGraph gen_family_L_r(int r, const LTrace& t) {
    if (r < 3) throw Error(Errc::BadParams, "r must be at least 3");
    std::function<void(const LTrace&)> check = [&](const LTrace& n) {
        switch (n.kind) {
            case LTrace::Kind::c2:
                if (n.m != r) throw Error(Errc::BadParams, "two-vertex leaf must have r parallel edges");
                break;
            case LTrace::Kind::k4: {
                auto& k = n.mult;
                bool uniform = k[0] == k[1] && k[2] == k[3] && k[4] == k[5];
                bool one = k[0] == 1 || k[2] == 1 || k[4] == 1;
                if (!uniform || !one || k[0] + k[2] + k[4] != r)
                    throw Error(Errc::BadParams, "K4 leaf must be an r-regular member with a simple perfect matching");
                break;
            }
            case LTrace::Kind::glue:
                check(*n.left);
                check(*n.right);
                break;
        }
    };
    check(t);
    return gen_family_L(t);
}

namespace {

struct Rebuilt {
    LTrace trace;
    MultiGraph h;
    std::vector<Vertex> vmap;  // g vertex -> h vertex
    std::vector<EdgeId> emap;  // g edge -> h edge
};

std::optional<Rebuilt> rebuild(const MultiGraph& g) {
    int n = g.order();
    if (n == 2) {
        if (g.size() < 2) return std::nullopt;
        Rebuilt r{LTrace::leaf_c2(g.size()), c2(g.size()), {0, 1}, {}};
        for (EdgeId e = 0; e < g.size(); ++e) r.emap.push_back(e);
        return r;
    }
    if (n == 4) {
        std::vector<int> mult(6);
        for (int p = 0; p < 6; ++p) mult[p] = g.multiplicity(kK4Pairs[p].first, kK4Pairs[p].second);
        if (k4_leaf_ok(mult)) {
            Rebuilt r{LTrace::leaf_k4(mult), k4_leaf(mult), {0, 1, 2, 3}, {}};
            std::vector<int> start(6, 0), seen(6, 0);
            for (int p = 1; p < 6; ++p) start[p] = start[p - 1] + mult[p - 1];
            for (auto& e : g.edges())
                for (int p = 0; p < 6; ++p) {
                    auto [a, b] = kK4Pairs[p];
                    if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) r.emap.push_back(start[p] + seen[p]++);
                }
            return r;
        }
    }
    if (!is_matching_covered(g).covered) return std::nullopt;
    auto da = analyze(g);
    for (const Cut& c : find_even_2cuts(g)) {
        int k = da.class_of[c.edge_ids[0]];
        if (k != da.class_of[c.edge_ids[1]] || static_cast<int>(da.classes[k].size()) * 2 != n) continue;
        auto [a, b] = marked_components(g, c);
        auto ra = rebuild(a.graph), rb = rebuild(b.graph);
        if (!ra || !rb) return std::nullopt;
        EdgeId ea = ra->emap[a.marker_edge], eb = rb->emap[b.marker_edge];
        bool pa = ra->h.edge(ea).u == ra->vmap[a.graph.edge(a.marker_edge).u];
        bool pb = rb->h.edge(eb).u == rb->vmap[b.graph.edge(b.marker_edge).u];
        bool crossed = pa != pb;
        Rebuilt r;
        r.trace = LTrace::join(ra->trace, ea, rb->trace, eb, crossed);
        r.h = glue(ra->h, ea, rb->h, eb, crossed);
        int na = ra->h.order(), ma = ra->h.size() - 1, mb = rb->h.size() - 1;
        r.vmap.assign(static_cast<std::size_t>(n), -1);
        r.emap.assign(static_cast<std::size_t>(g.size()), -1);
        for (int i = 0; i < a.graph.order(); ++i) r.vmap[a.vertex_origin[i]] = ra->vmap[i];
        for (int i = 0; i < b.graph.order(); ++i) r.vmap[b.vertex_origin[i]] = na + rb->vmap[i];
        for (EdgeId i = 0; i < a.graph.size(); ++i)
            if (i != a.marker_edge) r.emap[a.edge_origin[i]] = ra->emap[i] - (ra->emap[i] > ea);
        for (EdgeId i = 0; i < b.graph.size(); ++i)
            if (i != b.marker_edge) r.emap[b.edge_origin[i]] = ma + rb->emap[i] - (rb->emap[i] > eb);
        r.emap[a.f] = ma + mb + (pa ? 0 : 1);
        r.emap[a.f_prime] = ma + mb + (pa ? 1 : 0);
        return r;
    }
    return std::nullopt;
}

}  // namespace

std::optional<LTrace> reconstruct_L_trace(const MultiGraph& g) {
    auto r = rebuild(g);
    if (!r) return std::nullopt;
    return r->trace;
}

// ---- recognition

const char* family_name(Family f) {
    switch (f) {
        case Family::theta_i: return "theta_i";
        case Family::k4_i: return "K4_i";
        case Family::c4_i: return "C4_i";
        case Family::c6bar_i: return "C6bar_i";
        case Family::r8: return "R8";
        case Family::r10: return "R10";
        case Family::n10: return "N10";
        case Family::staircase1: return "staircase1";
        case Family::staircase3: return "staircase3";
        case Family::family_S: return "S";
        case Family::family_D: return "D";
        case Family::family_L: return "L";
        case Family::family_L_r: return "L_r";
    }
    return "?";
}

int FamilyMatch::raised() const {
    int k = 0;
    for (int p : params) k += p > 1;
    return k;
}

std::string FamilyMatch::label() const {
    std::vector<std::string> names;
    switch (family) {
        case Family::staircase1: names = {"n", "t"}; break;
        case Family::staircase3: names = {"a", "b", "t"}; break;
        case Family::family_S: names = {"index"}; break;
        case Family::family_L_r: names = {"r"}; break;
        default: names.assign(params.size(), "k"); break;
    }
    std::string s = family_name(family);
    if (params.empty()) return s;
    s += "(";
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) s += ",";
        s += names[i] + "=" + std::to_string(params[i]);
    }
    return s + ")";
}

namespace {

using Bucket = std::vector<std::pair<std::string, FamilyMatch>>;

// nonincreasing compositions of r into `parts` positive integers
void compositions(int r, int parts, int maxpart, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (parts == 0) {
        if (r == 0) out.push_back(cur);
        return;
    }
    for (int k = std::min(maxpart, r - (parts - 1)); k >= 1; --k) {
        cur.push_back(k);
        compositions(r - k, parts - 1, k, cur, out);
        cur.pop_back();
    }
}

Bucket build_bucket(int n, int r) {
    Bucket b;
    auto add = [&](const MultiGraph& g, Family f, std::vector<int> params) {
        b.emplace_back(canonical_form(g), FamilyMatch{f, std::move(params)});
    };
    auto multiplied = [&](Base base, Family f, int order) {
        if (n != order) return;
        int parts = static_cast<int>(base_classes(base).size());
        std::vector<std::vector<int>> ks;
        std::vector<int> cur;
        compositions(r, parts, r, cur, ks);
        for (auto& k : ks) add(gen_multiplied(base, k, parts), f, k);
    };
    if (r < 2) return b;
    multiplied(Base::theta, Family::theta_i, 2);
    multiplied(Base::k4, Family::k4_i, 4);
    multiplied(Base::c4, Family::c4_i, 4);
    multiplied(Base::c6bar, Family::c6bar_i, 6);
    if (r == 3) {
        if (n == 8) add(r8(), Family::r8, {});
        if (n == 10) add(r10(), Family::r10, {});
        if (n == 10) add(n10(), Family::n10, {});
        for (int i = 1; i <= 5; ++i) {
            MultiGraph s = gen_family_S(i);
            if (s.order() == n) add(s, Family::family_S, {i});
        }
    }
    if (r >= 3 && n >= 6 && n % 2 == 0) {
        add(gen_staircase1(n, r - 2), Family::staircase1, {n, r - 2});
        for (auto [a, c] : staircase3_params(n)) add(gen_staircase3(a, c, r - 2), Family::staircase3, {a, c, r - 2});
    }
    return b;
}

std::shared_mutex g_cache_mutex;
std::map<std::pair<int, int>, Bucket> g_cache;

const Bucket& bucket(int n, int r) {
    {
        std::shared_lock lock(g_cache_mutex);
        auto it = g_cache.find({n, r});
        if (it != g_cache.end()) return it->second;
    }
    Bucket b = build_bucket(n, r);
    std::unique_lock lock(g_cache_mutex);
    return g_cache.emplace(std::make_pair(n, r), std::move(b)).first->second;
}

}  // namespace

std::vector<FamilyMatch> recognize(const MultiGraph& g) {
    if (g.order() > kCanonicalLimit)
        throw Error(Errc::TooLarge, "recognition is bounded to order " + std::to_string(kCanonicalLimit));
    std::vector<FamilyMatch> out;
    int r = g.regular_degree();
    if (r >= 2 && is_connected(g)) {
        std::string cf = canonical_form(g);
        for (auto& [form, m] : bucket(g.order(), r))
            if (form == cf) out.push_back(m);
    }
    if (r == 3 && is_family_D(g)) out.push_back({Family::family_D, {}});
    if (g.order() % 2 == 0 && !(g.order() == 2 && g.size() < 2) && is_matching_covered(g).covered) {
        auto da = analyze(g);
        if (da.epsilon * 2 == g.order()) {
            out.push_back({Family::family_L, {}});
            if (r >= 3) out.push_back({Family::family_L_r, {r}});
        }
    }
    return out;
}

bool in_multiplied_family(const std::vector<FamilyMatch>& ms, Family f, int i) {
    return std::any_of(ms.begin(), ms.end(), [&](const FamilyMatch& m) { return m.family == f && m.raised() <= i; });
}

bool has_family(const std::vector<FamilyMatch>& ms, Family f) {
    return std::any_of(ms.begin(), ms.end(), [&](const FamilyMatch& m) { return m.family == f; });
}

}  // namespace mc
