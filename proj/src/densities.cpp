#include "ramsey/densities.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace ramsey {

namespace {

// Subset enumeration over the support of a hypergraph. Maxima of all three
// density ratios over arbitrary subgraphs are attained at induced subgraphs
// (dropping edges on a fixed vertex set never raises them), and isolated
// vertices never raise a ratio, so vertex subsets of the support suffice.
struct SupportView {
    VertexSet verts;                      // original labels
    std::vector<std::uint64_t> emasks;    // edges as bitmasks over support positions
    int r;

    explicit SupportView(const Hypergraph& h) : r(h.r()) {
        verts = h.support();
        std::vector<int> pos(static_cast<std::size_t>(h.n()), -1);
        for (std::size_t i = 0; i < verts.size(); ++i)
            pos[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
        for (const Edge& e : h.edges()) {
            std::uint64_t m = 0;
            for (int v : e) m |= std::uint64_t{1} << pos[static_cast<std::size_t>(v)];
            emasks.push_back(m);
        }
    }

    int size() const { return static_cast<int>(verts.size()); }

    int edges_within(std::uint64_t wmask) const {
        int cnt = 0;
        for (std::uint64_t em : emasks)
            if ((em & ~wmask) == 0) ++cnt;
        return cnt;
    }

    VertexSet labels(std::uint64_t wmask) const {
        VertexSet out;
        for (int i = 0; i < size(); ++i)
            if (wmask & (std::uint64_t{1} << i)) out.push_back(verts[static_cast<std::size_t>(i)]);
        return out;
    }
};

VertexSet full_vertex_set(const Hypergraph& h) {
    VertexSet all(static_cast<std::size_t>(h.n()));
    for (int v = 0; v < h.n(); ++v) all[static_cast<std::size_t>(v)] = v;
    return all;
}

void check_enumerable(const Hypergraph& h) {
    if (static_cast<int>(h.support().size()) > 24)
        throw std::invalid_argument("density search: support exceeds 24 vertices");
}

Rational mr_value(const Hypergraph& f);

// Maximum of (e(J)-1)/(v(J)-r) over induced subgraphs with more than r
// vertices, tracking the attaining subset. Callers guarantee e(f) >= 2, which
// forces the support to span more than r vertices.
std::pair<Rational, std::uint64_t> mr_ratio_max(const SupportView& sv) {
    std::optional<Rational> best;
    std::uint64_t best_mask = 0;
    const int m = sv.size();
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << m); ++w) {
        const int vcnt = std::popcount(w);
        if (vcnt <= sv.r) continue;
        const int ecnt = sv.edges_within(w);
        const Rational ratio(ecnt - 1, vcnt - sv.r);
        if (!best || ratio > *best || (ratio == *best && vcnt > std::popcount(best_mask))) {
            best = ratio;
            best_mask = w;
        }
    }
    return {*best, best_mask};
}

// Largest maximum r-density among proper subgraphs of f, honoring the
// edgeless/single-edge conventions of the definition. Assumes e(f) >= 2.
// The maximum over proper subgraphs is attained either at a proper induced
// subgraph or at the spanning subgraph missing one edge.
Rational proper_mr_max(const Hypergraph& f) {
    const SupportView sv(f);
    Rational best(1, f.r());  // a single-edge proper subgraph always exists
    if (f.edge_count() >= 3 && f.n() > f.r())
        best = std::max(best, Rational(f.edge_count() - 2, f.n() - f.r()));
    const int m = sv.size();
    const std::uint64_t all = (std::uint64_t{1} << m) - 1;
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << m); ++w) {
        if (w == all && m == f.n()) continue;  // that is f itself, not proper
        const int vcnt = std::popcount(w);
        if (vcnt <= sv.r) continue;
        const int ecnt = sv.edges_within(w);
        if (ecnt >= 2) best = std::max(best, Rational(ecnt - 1, vcnt - sv.r));
    }
    return best;
}

Rational mr_value(const Hypergraph& f) {
    if (f.edge_count() == 0) return Rational(0);
    if (f.edge_count() == 1) return Rational(1, f.r());
    return mr_ratio_max(SupportView(f)).first;
}

// Maximum of e(J)/(v(J)-r+inv) over induced subgraphs with at least one edge,
// where inv is the reciprocal of the second hypergraph's maximum r-density.
std::pair<Rational, std::uint64_t> asym_ratio_max(const SupportView& sv, const Rational& inv) {
    std::optional<Rational> best;
    std::uint64_t best_mask = 0;
    const int m = sv.size();
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << m); ++w) {
        const int vcnt = std::popcount(w);
        if (vcnt < sv.r) continue;
        const int ecnt = sv.edges_within(w);
        if (ecnt < 1) continue;
        const Rational ratio = Rational(ecnt) / (Rational(vcnt - sv.r) + inv);
        if (!best || ratio > *best || (ratio == *best && vcnt > std::popcount(best_mask))) {
            best = ratio;
            best_mask = w;
        }
    }
    if (!best) throw std::invalid_argument("asymmetric density requires at least one edge");
    return {*best, best_mask};
}

void check_asym_preconditions(const Rational& mt, const Rational& mf) {
    if (!(mt >= mf && mf > Rational(0)))
        throw std::invalid_argument("asymmetric density requires m_r(T) >= m_r(F) > 0, got m_r(T)=" +
                                    mt.str() + ", m_r(F)=" + mf.str());
}

bool strictly_f_balanced_with_inv(const Hypergraph& t, const Rational& inv) {
    const SupportView sv(t);
    const int vt = t.n(), et = t.edge_count();
    if (vt < sv.r || et < 1) return false;
    const Rational whole = Rational(et) / (Rational(vt - sv.r) + inv);
    Rational proper(0);
    if (et >= 2) proper = std::max(proper, Rational(et - 1) / (Rational(vt - sv.r) + inv));
    const int m = sv.size();
    const std::uint64_t all = (std::uint64_t{1} << m) - 1;
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << m); ++w) {
        if (w == all && m == vt) continue;
        const int vcnt = std::popcount(w);
        if (vcnt < sv.r) continue;
        const int ecnt = sv.edges_within(w);
        if (ecnt < 1) continue;
        proper = std::max(proper, Rational(ecnt) / (Rational(vcnt - sv.r) + inv));
    }
    return whole > proper;
}

}  // namespace

DensityReport max_density(const Hypergraph& f) {
    check_enumerable(f);
    if (f.edge_count() == 0) return {Rational(0), {}, false};
    const SupportView sv(f);
    const int m = sv.size();
    std::optional<Rational> best;
    std::uint64_t best_mask = 0;
    for (std::uint64_t w = 1; w < (std::uint64_t{1} << m); ++w) {
        const Rational ratio(sv.edges_within(w), std::popcount(w));
        if (!best || ratio > *best ||
            (ratio == *best && std::popcount(w) > std::popcount(best_mask))) {
            best = ratio;
            best_mask = w;
        }
    }
    DensityReport rep;
    rep.value = *best;
    const std::uint64_t all = (std::uint64_t{1} << m) - 1;
    rep.maximizer = (best_mask == all && m == f.n()) ? full_vertex_set(f) : sv.labels(best_mask);

    const Rational whole(f.edge_count(), f.n());
    Rational proper(0);
    if (f.edge_count() >= 1) proper = std::max(proper, Rational(f.edge_count() - 1, f.n()));
    for (std::uint64_t w = 1; w < (std::uint64_t{1} << m); ++w) {
        if (w == all && m == f.n()) continue;
        proper = std::max(proper, Rational(sv.edges_within(w), std::popcount(w)));
    }
    rep.unique_at_whole = whole == rep.value && whole > proper;
    return rep;
}

DensityReport max_r_density(const Hypergraph& f) {
    check_enumerable(f);
    if (f.edge_count() == 0) return {Rational(0), {}, false};
    if (f.edge_count() == 1)
        return {Rational(1, f.r()), VertexSet(f.edge(0)), f.n() == f.r()};
    const SupportView sv(f);
    auto [value, mask] = mr_ratio_max(sv);
    DensityReport rep;
    rep.value = value;
    const std::uint64_t all = (std::uint64_t{1} << sv.size()) - 1;
    rep.maximizer = (mask == all && sv.size() == f.n()) ? full_vertex_set(f) : sv.labels(mask);
    if (f.n() > f.r()) {
        const Rational whole(f.edge_count() - 1, f.n() - f.r());
        rep.unique_at_whole = whole == value && whole > proper_mr_max(f);
    }
    return rep;
}

DensityReport asym_density(const Hypergraph& t, const Hypergraph& f) {
    check_enumerable(t);
    const Rational mt = mr_value(t), mf = mr_value(f);
    check_asym_preconditions(mt, mf);
    const Rational inv = mf.reciprocal();
    const SupportView sv(t);
    auto [value, mask] = asym_ratio_max(sv, inv);
    DensityReport rep;
    rep.value = value;
    const std::uint64_t all = (std::uint64_t{1} << sv.size()) - 1;
    rep.maximizer = (mask == all && sv.size() == t.n()) ? full_vertex_set(t) : sv.labels(mask);
    rep.unique_at_whole = strictly_f_balanced_with_inv(t, inv);
    return rep;
}

bool is_strictly_r_balanced(const Hypergraph& f) {
    if (f.edge_count() == 0)
        throw std::invalid_argument("strict balance requires at least one edge");
    check_enumerable(f);
    if (f.edge_count() == 1) return f.n() == f.r();
    return mr_value(f) > proper_mr_max(f);
}

bool is_strictly_f_balanced(const Hypergraph& t, const Hypergraph& f) {
    check_enumerable(t);
    const Rational mt = mr_value(t), mf = mr_value(f);
    check_asym_preconditions(mt, mf);
    if (mt == mf) return is_strictly_r_balanced(t);
    return strictly_f_balanced_with_inv(t, mf.reciprocal());
}

// ---------------------------------------------------------------------------
// Hearts
// ---------------------------------------------------------------------------

namespace {

// Enumerates k-subsets of [0, m) in lexicographic order.
template <typename Fn>
bool for_each_combination(int m, int k, Fn&& fn) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    const auto rec = [&](auto&& self, int at, int next) -> bool {
        if (at == k) return fn(idx);
        for (int v = next; v < m; ++v) {
            idx[static_cast<std::size_t>(at)] = v;
            if (self(self, at + 1, v + 1)) return true;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

Hypergraph subgraph_from(const Hypergraph& g, const VertexSet& verts,
                         const std::vector<Edge>& chosen) {
    std::vector<int> relabel(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < verts.size(); ++i)
        relabel[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (const Edge& e : chosen) {
        Edge img;
        for (int v : e) img.push_back(relabel[static_cast<std::size_t>(v)]);
        std::sort(img.begin(), img.end());
        edges.push_back(std::move(img));
    }
    return Hypergraph(g.r(), static_cast<int>(verts.size()), std::move(edges));
}

bool covers(const std::vector<Edge>& chosen, const VertexSet& verts) {
    std::vector<char> hit(static_cast<std::size_t>(verts.back() + 1), 0);
    for (const Edge& e : chosen)
        for (int v : e) hit[static_cast<std::size_t>(v)] = 1;
    return std::all_of(verts.begin(), verts.end(),
                       [&](int v) { return hit[static_cast<std::size_t>(v)] != 0; });
}

// Searches subgraphs of g, smallest (v, e) first, for one accepted by `take`.
// For a strictly balanced candidate the defining ratio is attained at the
// whole subgraph, which pins the edge count for each vertex count; only those
// (v, e) pairs are enumerated.
template <typename EdgeCountFn, typename TakeFn>
std::optional<Hypergraph> minimal_subgraph(const Hypergraph& g, EdgeCountFn&& required_edges,
                                           TakeFn&& take) {
    const Hypergraph core = strip_isolated(g);
    const int m = core.n();
    for (int vp = g.r(); vp <= m; ++vp) {
        const std::optional<int> ep = required_edges(vp);
        if (!ep || *ep < 1) continue;
        std::optional<Hypergraph> found;
        for_each_combination(m, vp, [&](const std::vector<int>& widx) {
            VertexSet w(widx.begin(), widx.end());
            std::vector<Edge> avail;
            for (const Edge& e : core.edges())
                if (std::includes(w.begin(), w.end(), e.begin(), e.end())) avail.push_back(e);
            if (static_cast<int>(avail.size()) < *ep) return false;
            return for_each_combination(static_cast<int>(avail.size()), *ep,
                                        [&](const std::vector<int>& eidx) {
                                            std::vector<Edge> chosen;
                                            for (int i : eidx)
                                                chosen.push_back(avail[static_cast<std::size_t>(i)]);
                                            if (!covers(chosen, w)) return false;
                                            Hypergraph cand = subgraph_from(core, w, chosen);
                                            if (!take(cand)) return false;
                                            found = std::move(cand);
                                            return true;
                                        });
        });
        if (found) return found;
    }
    return std::nullopt;
}

Hypergraph minimal_strictly_balanced(const Hypergraph& g, const Rational& target) {
    const int r = g.r();
    if (target == Rational(1, r)) {
        // A lone edge is the smallest strictly balanced subgraph of this density.
        Edge e(static_cast<std::size_t>(r));
        std::iota(e.begin(), e.end(), 0);
        return Hypergraph(r, r, {e});
    }
    auto required = [&](int vp) -> std::optional<int> {
        const Rational ec = target * Rational(vp - r) + Rational(1);
        if (!ec.is_integer() || ec.num() < 2) return std::nullopt;
        return static_cast<int>(ec.num());
    };
    auto take = [&](const Hypergraph& cand) {
        return mr_value(cand) == target && is_strictly_r_balanced(cand);
    };
    std::optional<Hypergraph> found = minimal_subgraph(g, required, take);
    if (!found) throw std::runtime_error("internal error: no strictly balanced subgraph found");
    return *found;
}

Hypergraph minimal_strictly_fprime_balanced(const Hypergraph& t, const Rational& asym_target,
                                            const Rational& mf) {
    const int r = t.r();
    const Rational inv = mf.reciprocal();
    auto required = [&](int vp) -> std::optional<int> {
        const Rational ec = asym_target * (Rational(vp - r) + inv);
        if (!ec.is_integer() || ec.num() < 1) return std::nullopt;
        return static_cast<int>(ec.num());
    };
    auto take = [&](const Hypergraph& cand) {
        if (mr_value(cand) <= mf) return false;
        const SupportView sv(cand);
        if (asym_ratio_max(sv, inv).first != asym_target) return false;
        return strictly_f_balanced_with_inv(cand, inv);
    };
    std::optional<Hypergraph> found = minimal_subgraph(t, required, take);
    if (!found) throw std::runtime_error("internal error: no strictly balanced companion found");
    return *found;
}

}  // namespace

Heart find_heart(const Hypergraph& t, const Hypergraph& f) {
    check_enumerable(t);
    check_enumerable(f);
    const Rational mt = mr_value(t), mf = mr_value(f);
    check_asym_preconditions(mt, mf);
    Hypergraph f_prime = minimal_strictly_balanced(f, mf);
    if (mt == mf) return {minimal_strictly_balanced(t, mt), std::move(f_prime)};
    const Rational target = asym_ratio_max(SupportView(t), mf.reciprocal()).first;
    return {minimal_strictly_fprime_balanced(t, target, mf), std::move(f_prime)};
}

ThresholdExponents threshold_exponents(const std::vector<Hypergraph>& qs, int sources) {
    const int t = static_cast<int>(qs.size());
    if (!(sources >= 2 && sources < t))
        throw std::invalid_argument("need 2 <= sources < number of targets");
    std::vector<Rational> mr(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) {
        mr[static_cast<std::size_t>(i)] = mr_value(qs[static_cast<std::size_t>(i)]);
        if (!(mr[static_cast<std::size_t>(i)] > Rational(0)))
            throw std::invalid_argument("target " + std::to_string(i + 1) +
                                        " has zero maximum r-density");
        if (i > 0 && mr[static_cast<std::size_t>(i)] > mr[static_cast<std::size_t>(i - 1)])
            throw std::invalid_argument(
                "targets must be sorted by non-increasing maximum r-density");
    }
    ThresholdExponents out;
    out.appearance_density = Rational(0);
    for (const Hypergraph& q : qs)
        out.appearance_density = std::max(out.appearance_density, max_density(q).value);
    out.arrowing_source_index = 0;
    std::optional<Rational> sigma;
    for (int i = 0; i < sources; ++i) {
        const Rational v =
            asym_density(qs[static_cast<std::size_t>(i)], qs[static_cast<std::size_t>(sources)])
                .value;
        if (!sigma || v < *sigma) {
            sigma = v;
            out.arrowing_source_index = i;
        }
    }
    out.arrowing_density = *sigma;
    out.governing_density = std::max(out.appearance_density, out.arrowing_density);
    return out;
}

}  // namespace ramsey
