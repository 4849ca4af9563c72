#include "ramsey/hypergraph.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

namespace ramsey {

namespace {

std::uint64_t edge_mask(const Edge& e) {
    std::uint64_t m = 0;
    for (int v : e) m |= std::uint64_t{1} << v;
    return m;
}

void require(bool cond, const std::string& what) {
    if (!cond) throw std::invalid_argument(what);
}

}  // namespace

Hypergraph::Hypergraph(int uniformity, int vertex_count, std::vector<Edge> edges)
    : r_(uniformity), n_(vertex_count), edges_(std::move(edges)) {
    require(r_ >= 2, "uniformity must be at least 2");
    require(n_ >= 0, "vertex count must be non-negative");
    for (Edge& e : edges_) {
        std::sort(e.begin(), e.end());
        require(e.size() == static_cast<std::size_t>(r_), "edge arity differs from uniformity");
        require(std::adjacent_find(e.begin(), e.end()) == e.end(), "repeated vertex in edge");
        require(e.front() >= 0 && e.back() < n_, "vertex label out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    require(std::adjacent_find(edges_.begin(), edges_.end()) == edges_.end(), "duplicate edge");
}

bool Hypergraph::has_edge(const Edge& sorted_edge) const {
    return std::binary_search(edges_.begin(), edges_.end(), sorted_edge);
}

std::vector<int> Hypergraph::degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(n_), 0);
    for (const Edge& e : edges_)
        for (int v : e) ++deg[static_cast<std::size_t>(v)];
    return deg;
}

VertexSet Hypergraph::support() const {
    const std::vector<int> deg = degrees();
    VertexSet s;
    for (int v = 0; v < n_; ++v)
        if (deg[static_cast<std::size_t>(v)] > 0) s.push_back(v);
    return s;
}

// ---------------------------------------------------------------------------
// Parsing and serialization
// ---------------------------------------------------------------------------

namespace {

struct Segment {
    std::string text;
    int line;
};

// Splits the input on ';', tracking the line each segment starts on and
// dropping '#' comments.
std::vector<Segment> split_segments(const std::string& text) {
    std::vector<Segment> segs;
    std::string cur;
    int line = 1, cur_line = 1;
    bool in_comment = false;
    bool cur_started = false;
    for (char c : text) {
        if (c == '\n') {
            ++line;
            in_comment = false;
            continue;
        }
        if (in_comment) continue;
        if (c == '#') {
            in_comment = true;
            continue;
        }
        if (c == ';') {
            segs.push_back({cur, cur_started ? cur_line : line});
            cur.clear();
            cur_started = false;
            continue;
        }
        if (!cur_started && !std::isspace(static_cast<unsigned char>(c))) {
            cur_started = true;
            cur_line = line;
        }
        cur.push_back(c);
    }
    segs.push_back({cur, cur_started ? cur_line : line});
    return segs;
}

bool blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

int parse_int(const std::string& tok, int line, const std::string& what) {
    try {
        std::size_t pos = 0;
        const int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "expected integer for " + what + ", got '" + tok + "'");
    }
}

Hypergraph parse_text(const std::string& text) {
    const std::vector<Segment> segs = split_segments(text);
    std::size_t idx = 0;
    while (idx < segs.size() && blank(segs[idx].text)) ++idx;
    if (idx == segs.size()) throw ParseError(1, "empty input");

    const Segment& header = segs[idx];
    std::istringstream hs(header.text);
    std::string rtok, ntok;
    hs >> rtok >> ntok;
    std::string extra;
    if (hs >> extra || rtok.rfind("r=", 0) != 0 || ntok.rfind("n=", 0) != 0)
        throw ParseError(header.line, "malformed header, expected 'r=<int> n=<int>'");
    const int r = parse_int(rtok.substr(2), header.line, "r");
    const int n = parse_int(ntok.substr(2), header.line, "n");
    if (r < 2) throw ParseError(header.line, "uniformity r must be at least 2");
    if (n < 0) throw ParseError(header.line, "vertex count n must be non-negative");

    std::vector<Edge> edges;
    std::set<Edge> seen;
    for (++idx; idx < segs.size(); ++idx) {
        if (blank(segs[idx].text)) continue;
        std::istringstream es(segs[idx].text);
        Edge e;
        std::string tok;
        while (es >> tok) e.push_back(parse_int(tok, segs[idx].line, "vertex"));
        if (static_cast<int>(e.size()) != r)
            throw ParseError(segs[idx].line, "edge arity " + std::to_string(e.size()) +
                                                 " != " + std::to_string(r));
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw ParseError(segs[idx].line, "repeated vertex in edge");
        if (e.front() < 0 || e.back() >= n)
            throw ParseError(segs[idx].line, "vertex label " + std::to_string(e.back()) +
                                                 " >= n=" + std::to_string(n));
        if (!seen.insert(e).second) throw ParseError(segs[idx].line, "duplicate edge");
        edges.push_back(std::move(e));
    }
    return Hypergraph(r, n, std::move(edges));
}

Hypergraph parse_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(1, std::string("invalid JSON: ") + e.what());
    }
    try {
        const int r = j.at("r").get<int>();
        const int n = j.at("n").get<int>();
        std::vector<Edge> edges = j.at("edges").get<std::vector<Edge>>();
        return Hypergraph(r, n, std::move(edges));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(1, std::string("invalid JSON hypergraph: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(1, e.what());
    }
}

}  // namespace

Hypergraph parse_hypergraph(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') return parse_json(text);
        break;
    }
    return parse_text(text);
}

std::string serialize_hypergraph(const Hypergraph& h) {
    std::string out = "r=" + std::to_string(h.r()) + " n=" + std::to_string(h.n());
    if (h.edge_count() == 0) {
        out += ";";
        return out;
    }
    for (const Edge& e : h.edges()) {
        out += "; ";
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(e[i]);
        }
    }
    return out;
}

std::string serialize_hypergraph_json(const Hypergraph& h) {
    nlohmann::json j;
    j["r"] = h.r();
    j["n"] = h.n();
    j["edges"] = h.edges();
    return j.dump();
}

// ---------------------------------------------------------------------------
// Induced subgraphs, connectivity, cuts
// ---------------------------------------------------------------------------

Hypergraph induced(const Hypergraph& h, const VertexSet& w) {
    VertexSet ws = w;
    std::sort(ws.begin(), ws.end());
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
    if (!ws.empty() && (ws.front() < 0 || ws.back() >= h.n()))
        throw std::invalid_argument("vertex set out of range");
    std::vector<int> relabel(static_cast<std::size_t>(h.n()), -1);
    for (std::size_t i = 0; i < ws.size(); ++i) relabel[static_cast<std::size_t>(ws[i])] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (const Edge& e : h.edges()) {
        Edge img;
        img.reserve(e.size());
        for (int v : e) {
            if (relabel[static_cast<std::size_t>(v)] < 0) break;
            img.push_back(relabel[static_cast<std::size_t>(v)]);
        }
        if (img.size() == e.size()) edges.push_back(std::move(img));
    }
    return Hypergraph(h.r(), static_cast<int>(ws.size()), std::move(edges));
}

Hypergraph strip_isolated(const Hypergraph& h) { return induced(h, h.support()); }

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

bool is_connected(const Hypergraph& h) {
    if (h.n() == 0) return false;
    UnionFind uf(h.n());
    for (const Edge& e : h.edges())
        for (std::size_t i = 1; i < e.size(); ++i) uf.unite(e[0], e[i]);
    const int root = uf.find(0);
    for (int v = 1; v < h.n(); ++v)
        if (uf.find(v) != root) return false;
    return true;
}

bool is_vertex_cut(const Hypergraph& h, const VertexSet& s) {
    std::vector<char> removed(static_cast<std::size_t>(h.n()), 0);
    for (int v : s) {
        if (v < 0 || v >= h.n()) throw std::invalid_argument("cut vertex out of range");
        removed[static_cast<std::size_t>(v)] = 1;
    }
    VertexSet rest;
    for (int v = 0; v < h.n(); ++v)
        if (!removed[static_cast<std::size_t>(v)]) rest.push_back(v);
    if (rest.size() < 2) return true;
    return !is_connected(induced(h, rest));
}

// ---------------------------------------------------------------------------
// Colorings
// ---------------------------------------------------------------------------

namespace {

// Backtracking proper coloring of the pairwise co-occurrence graph with at
// most k colors, with canonical color introduction to kill color symmetry.
bool co_occurrence_colorable(const std::vector<std::vector<char>>& adj, int n, int k) {
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    // Order vertices by co-occurrence degree, densest first.
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(u)] += adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return deg[static_cast<std::size_t>(a)] > deg[static_cast<std::size_t>(b)]; });

    const auto rec = [&](auto&& self, int idx, int used) -> bool {
        if (idx == n) return true;
        const int v = order[static_cast<std::size_t>(idx)];
        const int limit = std::min(used + 1, k);
        for (int c = 0; c < limit; ++c) {
            bool ok = true;
            for (int u = 0; u < n && ok; ++u)
                if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] && color[static_cast<std::size_t>(u)] == c) ok = false;
            if (!ok) continue;
            color[static_cast<std::size_t>(v)] = c;
            if (self(self, idx + 1, std::max(used, c + 1))) return true;
            color[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

}  // namespace

bool is_strongly_r_partite(const Hypergraph& h) {
    const int n = h.n();
    if (n == 0) return true;
    std::vector<std::vector<char>> adj(static_cast<std::size_t>(n),
                                       std::vector<char>(static_cast<std::size_t>(n), 0));
    for (const Edge& e : h.edges())
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j) {
                adj[static_cast<std::size_t>(e[i])][static_cast<std::size_t>(e[j])] = 1;
                adj[static_cast<std::size_t>(e[j])][static_cast<std::size_t>(e[i])] = 1;
            }
    return co_occurrence_colorable(adj, n, h.r());
}

namespace {

// k-colorability where the only forbidden configuration is a monochromatic
// edge. Checks an edge as soon as its last vertex is assigned.
bool weakly_colorable(const Hypergraph& h, int k) {
    const int n = h.n();
    std::vector<std::vector<int>> at(static_cast<std::size_t>(n));
    for (int i = 0; i < h.edge_count(); ++i)
        for (int v : h.edge(i)) at[static_cast<std::size_t>(v)].push_back(i);
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    const auto rec = [&](auto&& self, int v, int used) -> bool {
        if (v == n) return true;
        const int limit = std::min(used + 1, k);
        for (int c = 0; c < limit; ++c) {
            bool ok = true;
            for (int ei : at[static_cast<std::size_t>(v)]) {
                bool mono = true;
                for (int u : h.edge(ei)) {
                    if (u == v) continue;
                    if (u > v || color[static_cast<std::size_t>(u)] != c) {
                        mono = false;
                        break;
                    }
                }
                if (mono) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            color[static_cast<std::size_t>(v)] = c;
            if (self(self, v + 1, std::max(used, c + 1))) return true;
            color[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

}  // namespace

int chromatic_number(const Hypergraph& h) {
    if (h.n() == 0) return 0;
    if (h.edge_count() == 0) return 1;
    for (int k = 2; k <= h.n(); ++k)
        if (weakly_colorable(h, k)) return k;
    return h.n();
}

// ---------------------------------------------------------------------------
// Canonical form
// ---------------------------------------------------------------------------

namespace {

// Iterated refinement of a vertex invariant. Each round a vertex's invariant
// becomes (old class, multiset of class profiles of its edges); the resulting
// classes depend only on the isomorphism type.
std::vector<int> invariant_classes(const Hypergraph& h) {
    const int n = h.n();
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<std::vector<std::vector<int>>, int>> profile(
            static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) profile[static_cast<std::size_t>(v)].second = v;
        for (int v = 0; v < n; ++v)
            profile[static_cast<std::size_t>(v)].first.push_back({color[static_cast<std::size_t>(v)]});
        for (const Edge& e : h.edges()) {
            std::vector<int> label;
            label.reserve(e.size());
            for (int v : e) label.push_back(color[static_cast<std::size_t>(v)]);
            std::sort(label.begin(), label.end());
            for (int v : e) profile[static_cast<std::size_t>(v)].first.push_back(label);
        }
        for (auto& pr : profile)
            std::sort(pr.first.begin() + 1, pr.first.end());

        std::vector<std::pair<std::vector<std::vector<int>>, int>> sorted = profile;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> next(static_cast<std::size_t>(n));
        int cls = 0;
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            if (i > 0 && sorted[i].first != sorted[i - 1].first) ++cls;
            next[static_cast<std::size_t>(sorted[i].second)] = cls;
        }
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

struct CanonicalSearch {
    const Hypergraph& h;
    int n;
    std::vector<std::uint32_t> emasks;          // bit v set iff vertex v in edge
    std::vector<std::vector<int>> edges_at;     // edges containing each vertex
    std::vector<int> vertex_class;
    std::vector<int> slot_class;                // required class of each slot
    std::vector<std::vector<char>> twin;        // swap is an automorphism
    std::vector<int> slot_of;                   // assigned slot per vertex, -1 if none
    std::vector<std::uint32_t> code;            // edge images found so far, flat
    std::vector<std::uint32_t> best;
    bool have_best = false;
    std::uint64_t nodes = 0;
    static constexpr std::uint64_t kBudget = 50'000'000;

    explicit CanonicalSearch(const Hypergraph& hg) : h(hg), n(hg.n()) {
        emasks.reserve(static_cast<std::size_t>(h.edge_count()));
        edges_at.assign(static_cast<std::size_t>(n), {});
        for (int i = 0; i < h.edge_count(); ++i) {
            std::uint32_t m = 0;
            for (int v : h.edge(i)) {
                m |= std::uint32_t{1} << v;
                edges_at[static_cast<std::size_t>(v)].push_back(i);
            }
            emasks.push_back(m);
        }
        vertex_class = invariant_classes(h);
        slot_class.assign(static_cast<std::size_t>(n), 0);
        std::vector<int> classes = vertex_class;
        std::sort(classes.begin(), classes.end());
        slot_class = classes;
        compute_twins();
        slot_of.assign(static_cast<std::size_t>(n), -1);
    }

    void compute_twins() {
        twin.assign(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
        std::set<Edge> edge_set(h.edges().begin(), h.edges().end());
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (vertex_class[static_cast<std::size_t>(u)] != vertex_class[static_cast<std::size_t>(v)]) continue;
                bool ok = true;
                for (const Edge& e : h.edges()) {
                    Edge img = e;
                    for (int& x : img) {
                        if (x == u)
                            x = v;
                        else if (x == v)
                            x = u;
                    }
                    std::sort(img.begin(), img.end());
                    if (!edge_set.count(img)) {
                        ok = false;
                        break;
                    }
                }
                twin[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = ok;
                twin[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = ok;
            }
    }

    // cmp_less: the code built so far is already strictly below the best.
    void dfs(int k, bool cmp_less) {
        if (++nodes > kBudget) throw std::runtime_error("canonical form: search budget exceeded");
        if (k == n) {
            if (!have_best || cmp_less) {
                best = code;
                have_best = true;
            }
            return;
        }
        std::vector<int> kept;
        for (int v = 0; v < n; ++v) {
            if (slot_of[static_cast<std::size_t>(v)] >= 0) continue;
            if (vertex_class[static_cast<std::size_t>(v)] != slot_class[static_cast<std::size_t>(k)]) continue;
            bool dup = false;
            for (int u : kept)
                if (twin[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) {
                    dup = true;
                    break;
                }
            if (dup) continue;
            kept.push_back(v);

            // Images of edges completed by assigning v to slot k, sorted; the
            // numeric order of slot masks is exactly colex order on the slots.
            std::vector<std::uint32_t> block;
            for (int ei : edges_at[static_cast<std::size_t>(v)]) {
                std::uint32_t img = std::uint32_t{1} << k;
                bool complete = true;
                for (int u : h.edge(ei)) {
                    if (u == v) continue;
                    const int s = slot_of[static_cast<std::size_t>(u)];
                    if (s < 0) {
                        complete = false;
                        break;
                    }
                    img |= std::uint32_t{1} << s;
                }
                if (complete) block.push_back(img);
            }
            std::sort(block.begin(), block.end());

            bool less = cmp_less, prune = false;
            if (have_best && !less) {
                for (std::size_t i = 0; i < block.size(); ++i) {
                    const std::uint32_t b = best[code.size() + i];
                    if (block[i] < b) {
                        less = true;
                        break;
                    }
                    if (block[i] > b) {
                        prune = true;
                        break;
                    }
                }
            }
            if (prune) continue;

            slot_of[static_cast<std::size_t>(v)] = k;
            const std::size_t mark = code.size();
            code.insert(code.end(), block.begin(), block.end());
            dfs(k + 1, less);
            code.resize(mark);
            slot_of[static_cast<std::size_t>(v)] = -1;
        }
    }
};

}  // namespace

std::string canonical_form(const Hypergraph& h, int max_vertices) {
    if (h.n() > max_vertices)
        throw std::invalid_argument("canonical form: vertex count " + std::to_string(h.n()) +
                                    " exceeds bound " + std::to_string(max_vertices));
    if (h.n() > 31) throw std::invalid_argument("canonical form: vertex count exceeds 31");
    if (h.edge_count() == 0)
        return serialize_hypergraph(h);

    CanonicalSearch search(h);
    search.dfs(0, false);

    std::vector<Edge> edges;
    edges.reserve(search.best.size());
    for (std::uint32_t m : search.best) {
        Edge e;
        for (int v = 0; v < h.n(); ++v)
            if (m & (std::uint32_t{1} << v)) e.push_back(v);
        edges.push_back(std::move(e));
    }
    return serialize_hypergraph(Hypergraph(h.r(), h.n(), std::move(edges)));
}

// ---------------------------------------------------------------------------
// Copy enumeration
// ---------------------------------------------------------------------------

namespace {

struct EmbeddingSearch {
    const Hypergraph& pattern;
    const Hypergraph& host;
    std::vector<int> order;                       // pattern vertices, most constrained first
    std::vector<std::vector<int>> check_edges;    // pattern edges completed at each position
    std::vector<int> pdeg, hdeg;
    std::unordered_set<std::uint64_t> host_edges;
    std::vector<int> image;                       // pattern vertex -> host vertex
    std::vector<char> used;
    std::set<std::vector<int>> found;             // deduped edge images
    std::map<std::uint64_t, int> host_edge_index;
    bool stop_at_first = false;
    bool found_any = false;

    EmbeddingSearch(const Hypergraph& p, const Hypergraph& h) : pattern(p), host(h) {
        pdeg = pattern.degrees();
        hdeg = host.degrees();
        for (int i = 0; i < host.edge_count(); ++i) {
            const std::uint64_t m = edge_mask(host.edge(i));
            host_edges.insert(m);
            host_edge_index.emplace(m, i);
        }
        plan_order();
        image.assign(static_cast<std::size_t>(pattern.n()), -1);
        used.assign(static_cast<std::size_t>(host.n()), 0);
    }

    void plan_order() {
        const int pn = pattern.n();
        std::vector<char> placed(static_cast<std::size_t>(pn), 0);
        for (int step = 0; step < pn; ++step) {
            int bestv = -1, best_touch = -1, best_deg = -1;
            for (int v = 0; v < pn; ++v) {
                if (placed[static_cast<std::size_t>(v)]) continue;
                int touch = 0;
                for (const Edge& e : pattern.edges()) {
                    if (std::find(e.begin(), e.end(), v) == e.end()) continue;
                    for (int u : e)
                        if (placed[static_cast<std::size_t>(u)]) {
                            ++touch;
                            break;
                        }
                }
                const int d = pdeg[static_cast<std::size_t>(v)];
                if (touch > best_touch || (touch == best_touch && d > best_deg)) {
                    bestv = v;
                    best_touch = touch;
                    best_deg = d;
                }
            }
            placed[static_cast<std::size_t>(bestv)] = 1;
            order.push_back(bestv);
        }
        check_edges.assign(static_cast<std::size_t>(pn), {});
        std::vector<int> pos(static_cast<std::size_t>(pn));
        for (int i = 0; i < pn; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
        for (int ei = 0; ei < pattern.edge_count(); ++ei) {
            int last = 0;
            for (int v : pattern.edge(ei)) last = std::max(last, pos[static_cast<std::size_t>(v)]);
            check_edges[static_cast<std::size_t>(last)].push_back(ei);
        }
    }

    bool dfs(int step) {
        if (step == pattern.n()) {
            std::vector<int> img;
            img.reserve(static_cast<std::size_t>(pattern.edge_count()));
            for (const Edge& e : pattern.edges()) {
                std::uint64_t m = 0;
                for (int v : e) m |= std::uint64_t{1} << image[static_cast<std::size_t>(v)];
                img.push_back(host_edge_index.at(m));
            }
            std::sort(img.begin(), img.end());
            found.insert(std::move(img));
            found_any = true;
            return stop_at_first;
        }
        const int pv = order[static_cast<std::size_t>(step)];
        for (int hv = 0; hv < host.n(); ++hv) {
            if (used[static_cast<std::size_t>(hv)]) continue;
            if (hdeg[static_cast<std::size_t>(hv)] < pdeg[static_cast<std::size_t>(pv)]) continue;
            image[static_cast<std::size_t>(pv)] = hv;
            bool ok = true;
            for (int ei : check_edges[static_cast<std::size_t>(step)]) {
                std::uint64_t m = 0;
                for (int v : pattern.edge(ei)) m |= std::uint64_t{1} << image[static_cast<std::size_t>(v)];
                if (!host_edges.count(m)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                used[static_cast<std::size_t>(hv)] = 1;
                if (dfs(step + 1)) return true;
                used[static_cast<std::size_t>(hv)] = 0;
            }
            image[static_cast<std::size_t>(pv)] = -1;
        }
        return false;
    }
};

}  // namespace

std::vector<Copy> copies_of(const Hypergraph& pattern, const Hypergraph& host) {
    if (pattern.r() != host.r()) throw std::invalid_argument("uniformity mismatch");
    if (host.n() > 63) throw std::invalid_argument("host too large for copy enumeration");
    const Hypergraph p = strip_isolated(pattern);
    std::vector<Copy> out;
    if (p.edge_count() == 0 || p.edge_count() > host.edge_count() || p.n() > host.n()) return out;
    EmbeddingSearch search(p, host);
    search.dfs(0);
    out.reserve(search.found.size());
    for (const auto& img : search.found) out.push_back(Copy{&host, img});
    return out;
}

bool contains_copy(const Hypergraph& pattern, const Hypergraph& host) {
    if (pattern.r() != host.r()) throw std::invalid_argument("uniformity mismatch");
    if (host.n() > 63) throw std::invalid_argument("host too large for copy enumeration");
    const Hypergraph p = strip_isolated(pattern);
    if (p.edge_count() == 0) return true;
    if (p.edge_count() > host.edge_count() || p.n() > host.n()) return false;
    EmbeddingSearch search(p, host);
    search.stop_at_first = true;
    search.dfs(0);
    return search.found_any;
}

Hypergraph complete_hypergraph(int r, int m) {
    std::vector<Edge> edges;
    if (m >= r) {
        Edge cur(static_cast<std::size_t>(r));
        const auto rec = [&](auto&& self, int idx, int next) -> void {
            if (idx == r) {
                edges.push_back(cur);
                return;
            }
            for (int v = next; v < m; ++v) {
                cur[static_cast<std::size_t>(idx)] = v;
                self(self, idx + 1, v + 1);
            }
        };
        rec(rec, 0, 0);
    }
    return Hypergraph(r, m, std::move(edges));
}

}  // namespace ramsey
