// Test-only oracles: literal, brute-force evaluations of the defining
// formulas, kept independent of the reductions used by the library.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "ramsey/hypergraph.hpp"
#include "ramsey/rational.hpp"

namespace oracles {

using ramsey::Edge;
using ramsey::Hypergraph;
using ramsey::Rational;

struct TestRng {
    std::uint64_t state;
    explicit TestRng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    int below(int k) { return static_cast<int>(next() % static_cast<std::uint64_t>(k)); }
};

inline Hypergraph random_hypergraph(TestRng& rng, int r, int n, int percent) {
    std::vector<Edge> edges;
    Edge cur(static_cast<std::size_t>(r));
    const auto rec = [&](auto&& self, int idx, int next) -> void {
        if (idx == r) {
            if (rng.below(100) < percent) edges.push_back(cur);
            return;
        }
        for (int v = next; v < n; ++v) {
            cur[static_cast<std::size_t>(idx)] = v;
            self(self, idx + 1, v + 1);
        }
    };
    rec(rec, 0, 0);
    return Hypergraph(r, n, std::move(edges));
}

inline std::int64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t out = 1;
    for (int i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
    return out;
}

// Visits every subgraph (W, E') of h: any vertex subset together with any
// subset of the edges inside it.
template <typename Fn>
void for_each_subgraph(const Hypergraph& h, Fn&& fn) {
    const int n = h.n();
    for (std::uint32_t w = 0; w < (std::uint32_t{1} << n); ++w) {
        std::vector<int> inside;
        for (int i = 0; i < h.edge_count(); ++i) {
            bool ok = true;
            for (int v : h.edge(i))
                if (!(w & (std::uint32_t{1} << v))) {
                    ok = false;
                    break;
                }
            if (ok) inside.push_back(i);
        }
        const int m = static_cast<int>(inside.size());
        for (std::uint32_t sel = 0; sel < (std::uint32_t{1} << m); ++sel)
            fn(std::popcount(w), std::popcount(sel));
    }
}

inline Rational max_density_oracle(const Hypergraph& h) {
    Rational best(0);
    for_each_subgraph(h, [&](int v, int e) {
        if (v >= 1) best = std::max(best, Rational(e, v));
    });
    return best;
}

inline Rational max_r_density_oracle(const Hypergraph& h) {
    if (h.edge_count() == 0) return Rational(0);
    if (h.edge_count() == 1) return Rational(1, h.r());
    std::optional<Rational> best;
    for_each_subgraph(h, [&](int v, int e) {
        if (v > h.r()) {
            const Rational ratio(e - 1, v - h.r());
            if (!best || ratio > *best) best = ratio;
        }
    });
    return *best;
}

inline Rational asym_density_oracle(const Hypergraph& t, const Hypergraph& f) {
    const Rational inv = max_r_density_oracle(f).reciprocal();
    std::optional<Rational> best;
    for_each_subgraph(t, [&](int v, int e) {
        if (v >= t.r()) {
            const Rational ratio = Rational(e) / (Rational(v - t.r()) + inv);
            if (!best || ratio > *best) best = ratio;
        }
    });
    return *best;
}

// Strong r-partiteness by enumerating every assignment of vertices to r classes.
inline bool strongly_r_partite_oracle(const Hypergraph& h) {
    const int n = h.n(), r = h.r();
    std::vector<int> cls(static_cast<std::size_t>(n), 0);
    const auto ok = [&]() {
        for (const Edge& e : h.edges()) {
            std::vector<int> seen;
            for (int v : e) seen.push_back(cls[static_cast<std::size_t>(v)]);
            std::sort(seen.begin(), seen.end());
            if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
        }
        return true;
    };
    const auto rec = [&](auto&& self, int v) -> bool {
        if (v == n) return ok();
        for (int c = 0; c < r; ++c) {
            cls[static_cast<std::size_t>(v)] = c;
            if (self(self, v + 1)) return true;
        }
        return false;
    };
    return rec(rec, 0);
}

inline int chromatic_number_oracle(const Hypergraph& h) {
    const int n = h.n();
    if (n == 0) return 0;
    std::vector<int> cls(static_cast<std::size_t>(n), 0);
    const auto ok = [&]() {
        for (const Edge& e : h.edges()) {
            bool mono = true;
            for (int v : e)
                if (cls[static_cast<std::size_t>(v)] != cls[static_cast<std::size_t>(e[0])]) {
                    mono = false;
                    break;
                }
            if (mono) return false;
        }
        return true;
    };
    for (int k = 1; k <= n; ++k) {
        const auto rec = [&](auto&& self, int v) -> bool {
            if (v == n) return ok();
            for (int c = 0; c < k; ++c) {
                cls[static_cast<std::size_t>(v)] = c;
                if (self(self, v + 1)) return true;
            }
            return false;
        };
        if (rec(rec, 0)) return k;
    }
    return n;
}

// Full enumeration of all s^e colorings; Arrows iff none avoids every
// monochromatic target copy.
inline bool arrows_oracle(const Hypergraph& host, const std::vector<Hypergraph>& targets,
                          std::vector<int>* witness_out = nullptr) {
    const int e = host.edge_count();
    const int s = static_cast<int>(targets.size());
    std::vector<std::vector<std::vector<int>>> copies(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i)
        for (const ramsey::Copy& c : ramsey::copies_of(targets[static_cast<std::size_t>(i)], host))
            copies[static_cast<std::size_t>(i)].push_back(c.edge_indices);

    std::vector<int> coloring(static_cast<std::size_t>(e), 0);
    while (true) {
        bool valid = true;
        for (int i = 0; i < s && valid; ++i)
            for (const auto& cp : copies[static_cast<std::size_t>(i)]) {
                bool mono = true;
                for (int ei : cp)
                    if (coloring[static_cast<std::size_t>(ei)] != i) {
                        mono = false;
                        break;
                    }
                if (mono) {
                    valid = false;
                    break;
                }
            }
        if (valid) {
            if (witness_out) *witness_out = coloring;
            return false;
        }
        int pos = e - 1;
        while (pos >= 0 && coloring[static_cast<std::size_t>(pos)] == s - 1) {
            coloring[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) return true;
        ++coloring[static_cast<std::size_t>(pos)];
    }
}

}  // namespace oracles
