#include "ramsey/arrowing.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ramsey {

namespace {

struct BudgetHit {};

std::vector<Hypergraph> stripped_targets(const ArrowInstance& inst) {
    if (inst.targets.empty()) throw std::invalid_argument("arrowing needs at least one target");
    std::vector<Hypergraph> out;
    out.reserve(inst.targets.size());
    for (const Hypergraph& t : inst.targets) {
        if (t.r() != inst.host.r())
            throw std::invalid_argument("target uniformity differs from host");
        Hypergraph s = strip_isolated(t);
        if (s.edge_count() == 0)
            throw std::invalid_argument("arrowing targets must have at least one edge");
        out.push_back(std::move(s));
    }
    return out;
}

// Backtracking search for an edge coloring with no monochromatic target copy.
// A copy is live while none of its edges carries a foreign color; a live copy
// down to one uncolored edge forbids its own color on that edge; an edge with
// every color forbidden is a dead end. Decisions pick the uncolored edge in
// the most live copies (ties to the lowest edge index) and try colors in
// increasing order, so single-threaded runs are fully deterministic.
class ColoringSearch {
public:
    ColoringSearch(int num_edges, int num_colors, std::uint64_t budget)
        : s_(num_colors),
          budget_(budget),
          color_(static_cast<std::size_t>(num_edges), -1),
          forbidden_(static_cast<std::size_t>(num_edges), 0),
          live_deg_(static_cast<std::size_t>(num_edges), 0),
          clauses_at_(static_cast<std::size_t>(num_edges)) {}

    void add_copy(int color, std::vector<int> edges) {
        const int id = static_cast<int>(clause_color_.size());
        for (int e : edges) {
            clauses_at_[static_cast<std::size_t>(e)].push_back(id);
            ++live_deg_[static_cast<std::size_t>(e)];
        }
        open_.push_back(static_cast<int>(edges.size()));
        dead_.push_back(0);
        clause_color_.push_back(color);
        clause_edges_.push_back(std::move(edges));
    }

    // Pre-assignment used to break color symmetry; valid only when the caller
    // knows color permutations act on the instance.
    bool preassign(int edge, int color) { return assign(edge, color) && flush_forced(); }

    // Returns NotArrows with a witness if a valid coloring exists, Arrows if
    // none does; throws BudgetHit past the node budget.
    ArrowStatus run() {
        // Copies that start with a single edge forbid their color outright.
        for (std::size_t c = 0; c < clause_color_.size(); ++c)
            if (!dead_[c] && open_[c] == 1) {
                if (!forbid(sole_open_edge(static_cast<int>(c)), clause_color_[c])) return ArrowStatus::Arrows;
                if (!flush_forced()) return ArrowStatus::Arrows;
            }
        return dfs() ? ArrowStatus::NotArrows : ArrowStatus::Arrows;
    }

    const std::vector<int>& witness() const { return witness_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    struct Op {
        enum Kind { Assign, Kill, OpenDec, Forbid } kind;
        int a, b;
    };

    int sole_open_edge(int clause) const {
        for (int e : clause_edges_[static_cast<std::size_t>(clause)])
            if (color_[static_cast<std::size_t>(e)] < 0) return e;
        throw std::logic_error("no open edge in clause");
    }

    bool assign(int edge, int c) {
        color_[static_cast<std::size_t>(edge)] = c;
        trail_.push_back({Op::Assign, edge, 0});
        for (int cid : clauses_at_[static_cast<std::size_t>(edge)]) {
            if (dead_[static_cast<std::size_t>(cid)]) continue;
            if (clause_color_[static_cast<std::size_t>(cid)] != c) {
                dead_[static_cast<std::size_t>(cid)] = 1;
                trail_.push_back({Op::Kill, cid, 0});
                for (int e : clause_edges_[static_cast<std::size_t>(cid)])
                    --live_deg_[static_cast<std::size_t>(e)];
            } else {
                if (--open_[static_cast<std::size_t>(cid)] == 0) return false;  // monochromatic
                trail_.push_back({Op::OpenDec, cid, 0});
                if (open_[static_cast<std::size_t>(cid)] == 1)
                    if (!forbid(sole_open_edge(cid), c)) return false;
            }
        }
        return true;
    }

    bool forbid(int edge, int c) {
        const std::uint32_t bit = std::uint32_t{1} << c;
        if (color_[static_cast<std::size_t>(edge)] >= 0)
            return color_[static_cast<std::size_t>(edge)] != c;
        if (forbidden_[static_cast<std::size_t>(edge)] & bit) return true;
        forbidden_[static_cast<std::size_t>(edge)] |= bit;
        trail_.push_back({Op::Forbid, edge, c});
        const int banned = std::popcount(forbidden_[static_cast<std::size_t>(edge)]);
        if (banned == s_) return false;
        if (banned == s_ - 1) {
            int free_color = 0;
            while (forbidden_[static_cast<std::size_t>(edge)] & (std::uint32_t{1} << free_color)) ++free_color;
            forced_.push_back({edge, free_color});
        }
        return true;
    }

    bool flush_forced() {
        while (!forced_.empty()) {
            auto [e, c] = forced_.back();
            forced_.pop_back();
            if (color_[static_cast<std::size_t>(e)] >= 0) {
                if (color_[static_cast<std::size_t>(e)] != c) return false;
                continue;
            }
            if (!assign(e, c)) return false;
        }
        return true;
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            const Op op = trail_.back();
            trail_.pop_back();
            switch (op.kind) {
                case Op::Assign:
                    color_[static_cast<std::size_t>(op.a)] = -1;
                    break;
                case Op::Kill:
                    dead_[static_cast<std::size_t>(op.a)] = 0;
                    for (int e : clause_edges_[static_cast<std::size_t>(op.a)])
                        ++live_deg_[static_cast<std::size_t>(e)];
                    break;
                case Op::OpenDec:
                    ++open_[static_cast<std::size_t>(op.a)];
                    break;
                case Op::Forbid:
                    forbidden_[static_cast<std::size_t>(op.a)] &= ~(std::uint32_t{1} << op.b);
                    break;
            }
        }
    }

    bool dfs() {
        if (++nodes_ > budget_) throw BudgetHit{};
        int pick = -1, best_deg = 0;
        for (int e = 0; e < static_cast<int>(color_.size()); ++e)
            if (color_[static_cast<std::size_t>(e)] < 0 && live_deg_[static_cast<std::size_t>(e)] > best_deg) {
                pick = e;
                best_deg = live_deg_[static_cast<std::size_t>(e)];
            }
        if (pick < 0) {
            // No live copy touches an uncolored edge, so no constraint remains.
            witness_ = color_;
            for (int& c : witness_)
                if (c < 0) c = 0;
            return true;
        }
        for (int c = 0; c < s_; ++c) {
            if (forbidden_[static_cast<std::size_t>(pick)] & (std::uint32_t{1} << c)) continue;
            const std::size_t mark = trail_.size();
            forced_.clear();
            if (assign(pick, c) && flush_forced()) {
                if (dfs()) return true;
            }
            forced_.clear();
            undo_to(mark);
        }
        return false;
    }

    int s_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<int> color_;
    std::vector<std::uint32_t> forbidden_;
    std::vector<int> live_deg_;
    std::vector<std::vector<int>> clauses_at_;
    std::vector<std::vector<int>> clause_edges_;
    std::vector<int> clause_color_;
    std::vector<int> open_;
    std::vector<char> dead_;
    std::vector<std::pair<int, int>> forced_;
    std::vector<int> witness_;
    std::vector<Op> trail_;
};

ArrowResult arrows_core(const Hypergraph& host, const std::vector<Hypergraph>& targets,
                        std::uint64_t budget, std::uint64_t& nodes_out) {
    const int s = static_cast<int>(targets.size());
    ArrowResult res;

    std::vector<std::vector<Copy>> copies(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) {
        copies[static_cast<std::size_t>(i)] = copies_of(targets[static_cast<std::size_t>(i)], host);
        if (copies[static_cast<std::size_t>(i)].empty()) {
            // Color everything i: no copy of target i exists and every other
            // color class is empty.
            res.status = ArrowStatus::NotArrows;
            res.witness = ArrowWitness(static_cast<std::size_t>(host.edge_count()), i);
            return res;
        }
    }
    if (s == 1) {
        res.status = ArrowStatus::Arrows;
        return res;
    }

    ColoringSearch search(host.edge_count(), s, budget);
    for (int i = 0; i < s; ++i)
        for (const Copy& cp : copies[static_cast<std::size_t>(i)]) search.add_copy(i, cp.edge_indices);

    // Color symmetry: on a complete host with identical targets the first
    // edge's color can be fixed.
    const bool symmetric =
        std::all_of(targets.begin(), targets.end(), [&](const Hypergraph& t) { return t == targets.front(); });
    bool prefixed_ok = true;
    if (symmetric && host.edge_count() > 0) {
        std::int64_t full = 1;
        for (int i = 0; i < host.r(); ++i) full = full * (host.n() - i) / (i + 1);
        if (host.edge_count() == full) prefixed_ok = search.preassign(0, 0);
    }

    try {
        res.status = prefixed_ok ? search.run() : ArrowStatus::Arrows;
        if (res.status == ArrowStatus::NotArrows) res.witness = search.witness();
    } catch (const BudgetHit&) {
        res.status = ArrowStatus::Unknown;
    }
    res.nodes = search.nodes();
    nodes_out += search.nodes();
    return res;
}

}  // namespace

ArrowResult arrows(const ArrowInstance& inst, const SearchLimits& lim) {
    const std::vector<Hypergraph> targets = stripped_targets(inst);
    std::uint64_t nodes = 0;

    // Complete-core shortcut: if some complete subgraph of the host arrows,
    // the host arrows, since any coloring of the host restricts to it. Grow m
    // while the host still embeds a complete r-graph on m vertices and decide
    // each such core with a small budget.
    if (inst.host.edge_count() > 30 && targets.size() > 1) {
        int start = inst.host.r();
        for (const Hypergraph& t : targets) start = std::max(start, t.n());
        for (int m = start; m <= inst.host.n(); ++m) {
            const Hypergraph core = complete_hypergraph(inst.host.r(), m);
            if (core.edge_count() > 60) break;
            if (!contains_copy(core, inst.host)) break;
            const ArrowResult sub = arrows_core(core, targets, 200'000, nodes);
            if (sub.status == ArrowStatus::Arrows) {
                ArrowResult res;
                res.status = ArrowStatus::Arrows;
                res.nodes = nodes;
                return res;
            }
            if (sub.status == ArrowStatus::Unknown) break;
        }
    }

    ArrowResult res = arrows_core(inst.host, targets, lim.node_budget, nodes);
    res.nodes = nodes;
    return res;
}

bool verify_witness(const ArrowInstance& inst, const ArrowWitness& w) {
    if (static_cast<int>(w.size()) != inst.host.edge_count())
        throw std::invalid_argument("witness does not color every host edge");
    const int s = static_cast<int>(inst.targets.size());
    for (int c : w)
        if (c < 0 || c >= s) throw std::invalid_argument("witness color out of range");
    for (int i = 0; i < s; ++i) {
        for (const Copy& cp : copies_of(inst.targets[static_cast<std::size_t>(i)], inst.host)) {
            bool mono = true;
            for (int e : cp.edge_indices)
                if (w[static_cast<std::size_t>(e)] != i) {
                    mono = false;
                    break;
                }
            if (mono) return false;
        }
    }
    return true;
}

RamseyNumberOutcome ramsey_number(const std::vector<Hypergraph>& targets, int cap,
                                  const SearchLimits& lim) {
    if (targets.empty()) throw std::invalid_argument("ramsey number needs at least one target");
    const int r = targets.front().r();
    RamseyNumberOutcome out;
    ArrowWitness prev_witness;
    Hypergraph prev_host = complete_hypergraph(r, std::max(r - 1, 1));
    for (int m = std::max(r - 1, 1); m <= cap; ++m) {
        Hypergraph host = complete_hypergraph(r, m);
        const ArrowResult res = arrows(ArrowInstance{host, targets}, lim);
        out.nodes += res.nodes;
        if (res.status == ArrowStatus::Unknown) {
            out.status = RamseyNumberOutcome::Status::Unknown;
            out.stopped_at = m;
            return out;
        }
        if (res.status == ArrowStatus::Arrows) {
            out.status = RamseyNumberOutcome::Status::Found;
            out.result = RamseyNumberResult{m, std::move(prev_witness), std::move(prev_host)};
            return out;
        }
        prev_witness = *res.witness;
        prev_host = std::move(host);
    }
    out.status = RamseyNumberOutcome::Status::CapExceeded;
    out.stopped_at = cap;
    return out;
}

}  // namespace ramsey
