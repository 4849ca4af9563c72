#include "ramsey/containment.hpp"

#include <algorithm>
#include <map>

#include "ramsey/families.hpp"

namespace ramsey {

namespace {

std::vector<int> parts_of(const std::vector<int>& assignment, int source) {
    std::vector<int> part;
    for (std::size_t j = 0; j < assignment.size(); ++j)
        if (assignment[j] == source) part.push_back(static_cast<int>(j));
    return part;
}

}  // namespace

namespace {

// Memoized arrowing answers for one source against target sub-tuples, with
// monotone inference: arrowing a tuple implies arrowing any sub-tuple (view a
// coloring of the sub-tuple as one of the full tuple with empty classes), so
// a recorded NotArrows transfers to every super-tuple and a recorded Arrows
// to every sub-tuple.
class TupleMemo {
public:
    struct Entry {
        std::vector<std::string> keys;         // in part order
        std::vector<std::string> sorted_keys;  // multiset view
        ArrowResult result;
    };

    const Entry* find_exact(const std::vector<std::string>& keys) const {
        for (const Entry& e : entries_)
            if (e.keys == keys) return &e;
        return nullptr;
    }

    // An entry whose tuple is a sub-multiset of `sorted` and does not arrow.
    const Entry* refuting_subtuple(const std::vector<std::string>& sorted) const {
        for (const Entry& e : entries_)
            if (e.result.status == ArrowStatus::NotArrows &&
                std::includes(sorted.begin(), sorted.end(), e.sorted_keys.begin(),
                              e.sorted_keys.end()))
                return &e;
        return nullptr;
    }

    bool arrows_supertuple(const std::vector<std::string>& sorted) const {
        for (const Entry& e : entries_)
            if (e.result.status == ArrowStatus::Arrows &&
                std::includes(e.sorted_keys.begin(), e.sorted_keys.end(), sorted.begin(),
                              sorted.end()))
                return true;
        return false;
    }

    const Entry& add(std::vector<std::string> keys, ArrowResult result) {
        Entry e;
        e.sorted_keys = keys;
        std::sort(e.sorted_keys.begin(), e.sorted_keys.end());
        e.keys = std::move(keys);
        e.result = std::move(result);
        entries_.push_back(std::move(e));
        return entries_.back();
    }

private:
    std::vector<Entry> entries_;
};

// Recolors a witness for a sub-tuple into one for a super-tuple by matching
// positions with equal canonical keys; unmatched positions get empty classes.
ArrowWitness remap_witness(const ArrowWitness& w, const std::vector<std::string>& from_keys,
                           const std::vector<std::string>& to_keys) {
    std::vector<int> phi(from_keys.size(), -1);
    std::vector<char> used(to_keys.size(), 0);
    for (std::size_t a = 0; a < from_keys.size(); ++a)
        for (std::size_t b = 0; b < to_keys.size(); ++b)
            if (!used[b] && to_keys[b] == from_keys[a]) {
                phi[a] = static_cast<int>(b);
                used[b] = 1;
                break;
            }
    ArrowWitness out(w.size());
    for (std::size_t e = 0; e < w.size(); ++e) out[e] = phi[static_cast<std::size_t>(w[e])];
    return out;
}

}  // namespace

PartitionOutcome partition_condition(const std::vector<Hypergraph>& fs,
                                     const std::vector<Hypergraph>& qs,
                                     const SearchLimits& lim) {
    if (fs.empty() || qs.empty())
        throw std::invalid_argument("partition condition needs nonempty tuples");
    const int r = fs.front().r();
    for (const Hypergraph& g : fs)
        if (g.r() != r) throw std::invalid_argument("uniformity mismatch among sources");
    for (const Hypergraph& q : qs) {
        if (q.r() != r) throw std::invalid_argument("uniformity mismatch among targets");
        if (strip_isolated(q).edge_count() == 0)
            throw std::invalid_argument("targets must have at least one edge");
    }
    const int s = static_cast<int>(fs.size());
    const int t = static_cast<int>(qs.size());

    // Identical sources share arrowing results.
    std::vector<int> rep(static_cast<std::size_t>(s), 0);
    for (int i = 0; i < s; ++i) {
        rep[static_cast<std::size_t>(i)] = i;
        for (int j = 0; j < i; ++j)
            if (fs[static_cast<std::size_t>(j)] == fs[static_cast<std::size_t>(i)]) {
                rep[static_cast<std::size_t>(i)] = j;
                break;
            }
    }
    std::vector<std::string> qkey(static_cast<std::size_t>(t));
    for (int j = 0; j < t; ++j)
        qkey[static_cast<std::size_t>(j)] = canonical_form(qs[static_cast<std::size_t>(j)]);

    // A source with no copy of a target cannot arrow any tuple containing it:
    // coloring every edge with that target's color is already valid.
    std::vector<std::vector<char>> occurs(static_cast<std::size_t>(s),
                                          std::vector<char>(static_cast<std::size_t>(t), 0));
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < t; ++j)
            occurs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                rep[static_cast<std::size_t>(i)] != i
                    ? occurs[static_cast<std::size_t>(rep[static_cast<std::size_t>(i)])]
                             [static_cast<std::size_t>(j)]
                    : static_cast<char>(
                          contains_copy(qs[static_cast<std::size_t>(j)], fs[static_cast<std::size_t>(i)]));

    std::map<int, TupleMemo> memo;
    const auto arrow_part = [&](int i, const std::vector<int>& part) -> ArrowResult {
        std::vector<std::string> keys;
        keys.reserve(part.size());
        for (int j : part) keys.push_back(qkey[static_cast<std::size_t>(j)]);
        TupleMemo& m = memo[rep[static_cast<std::size_t>(i)]];
        if (const TupleMemo::Entry* hit = m.find_exact(keys)) return hit->result;
        std::vector<std::string> sorted = keys;
        std::sort(sorted.begin(), sorted.end());
        if (const TupleMemo::Entry* sub = m.refuting_subtuple(sorted)) {
            ArrowResult res;
            res.status = ArrowStatus::NotArrows;
            res.witness = remap_witness(*sub->result.witness, sub->keys, keys);
            return m.add(std::move(keys), std::move(res)).result;
        }
        if (m.arrows_supertuple(sorted)) {
            ArrowResult res;
            res.status = ArrowStatus::Arrows;
            return m.add(std::move(keys), std::move(res)).result;
        }
        std::vector<Hypergraph> tup;
        tup.reserve(part.size());
        for (int j : part) tup.push_back(qs[static_cast<std::size_t>(j)]);
        ArrowResult res = arrows(ArrowInstance{fs[static_cast<std::size_t>(i)], std::move(tup)}, lim);
        return m.add(std::move(keys), std::move(res)).result;
    };

    // All assignments, cheapest shape first: a part with many targets needs a
    // many-color search, so assignments are ordered by largest part size with
    // the lexicographic order breaking ties. The first certificate in this
    // order is returned.
    std::vector<std::vector<int>> assignments;
    {
        std::vector<int> a(static_cast<std::size_t>(t), 0);
        while (true) {
            assignments.push_back(a);
            int pos = t - 1;
            while (pos >= 0 && a[static_cast<std::size_t>(pos)] == s - 1) {
                a[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++a[static_cast<std::size_t>(pos)];
        }
        const auto max_part = [&](const std::vector<int>& asg) {
            std::vector<int> cnt(static_cast<std::size_t>(s), 0);
            for (int i : asg) ++cnt[static_cast<std::size_t>(i)];
            return *std::max_element(cnt.begin(), cnt.end());
        };
        std::stable_sort(assignments.begin(), assignments.end(),
                         [&](const std::vector<int>& a1, const std::vector<int>& a2) {
                             return max_part(a1) < max_part(a2);
                         });
    }

    PartitionOutcome out;
    for (const std::vector<int>& assignment : assignments) {
        bool unknown_here = false;
        std::optional<AssignmentRefutation> refut;

        // Parts with fewer targets are decided first; they refute cheaply.
        std::vector<std::pair<std::size_t, int>> by_size;
        for (int i = 0; i < s; ++i) {
            const std::size_t size = parts_of(assignment, i).size();
            if (size > 0) by_size.emplace_back(size, i);
        }
        std::stable_sort(by_size.begin(), by_size.end());

        for (const auto& [size, i] : by_size) {
            const std::vector<int> part = parts_of(assignment, i);
            int missing = -1;
            for (int j : part)
                if (!occurs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
                    missing = j;
                    break;
                }
            if (missing >= 0) {
                const int pos = static_cast<int>(std::find(part.begin(), part.end(), missing) -
                                                 part.begin());
                refut = AssignmentRefutation{
                    assignment, i,
                    ArrowWitness(static_cast<std::size_t>(
                                     fs[static_cast<std::size_t>(i)].edge_count()),
                                 pos)};
                break;
            }
            const ArrowResult res = arrow_part(i, part);
            if (res.status == ArrowStatus::Unknown) {
                unknown_here = true;
                break;
            }
            if (res.status == ArrowStatus::NotArrows) {
                refut = AssignmentRefutation{assignment, i, *res.witness};
                break;
            }
        }
        if (unknown_here) {
            ++out.unknown_assignments;
        } else if (refut) {
            out.refutations.push_back(std::move(*refut));
        } else {
            out.status = PartitionStatus::Found;
            out.certificate = PartitionCertificate{assignment};
            return out;
        }
    }
    out.status = out.unknown_assignments > 0 ? PartitionStatus::Unknown : PartitionStatus::None;
    return out;
}

ContainmentVerdict containment_decision(const std::vector<Hypergraph>& fs,
                                        const std::vector<Hypergraph>& qs,
                                        const SearchLimits& lim) {
    std::string violators;
    for (std::size_t j = 0; j < qs.size(); ++j) {
        const ClassReport rep = family_membership(qs[j]);
        if (!rep.in_xr && !rep.in_yr) {
            if (!violators.empty()) violators += ", ";
            violators += "Q" + std::to_string(j + 1);
        }
    }
    if (!violators.empty())
        throw std::invalid_argument(
            "targets outside the supported families (not non-trivially connected, not pairwise "
            "covered): " +
            violators);
    PartitionOutcome po = partition_condition(fs, qs, lim);
    ContainmentVerdict v;
    v.status = po.status;
    v.holds = po.status == PartitionStatus::Found;
    v.certificate = std::move(po.certificate);
    v.refutations = std::move(po.refutations);
    return v;
}

EquivalenceResult equivalence_decision(const std::vector<Hypergraph>& fs,
                                       const std::vector<Hypergraph>& qs) {
    const auto check = [](const std::vector<Hypergraph>& tup, const std::string& side) {
        for (std::size_t i = 0; i < tup.size(); ++i) {
            const ClassReport rep = family_membership(tup[i]);
            if (!rep.in_xr && !rep.in_yr)
                throw std::invalid_argument(side + std::to_string(i + 1) +
                                            " lies outside the supported families");
            if (tup[i].edge_count() < 2)
                throw std::invalid_argument(side + std::to_string(i + 1) +
                                            " must have at least two edges");
        }
    };
    check(fs, "F");
    check(qs, "Q");
    EquivalenceResult out;
    if (fs.size() != qs.size()) return out;

    const auto keyed = [](const std::vector<Hypergraph>& tup) {
        std::vector<std::pair<std::string, int>> keys;
        for (std::size_t i = 0; i < tup.size(); ++i)
            keys.emplace_back(canonical_form(tup[i]), static_cast<int>(i));
        std::sort(keys.begin(), keys.end());
        return keys;
    };
    const auto fk = keyed(fs), qk = keyed(qs);
    for (std::size_t i = 0; i < fk.size(); ++i)
        if (fk[i].first != qk[i].first) return out;
    out.equivalent = true;
    out.mapping.assign(fs.size(), -1);
    for (std::size_t i = 0; i < fk.size(); ++i)
        out.mapping[static_cast<std::size_t>(fk[i].second)] = qk[i].second;
    return out;
}

SeparationReport verify_clique_separation(SeparationItem item, int r, int k, int l,
                                          int ramsey_cap, const SearchLimits& lim) {
    if (!(k > l && l >= r))
        throw std::invalid_argument("clique separation requires k > l >= r");
    const auto K = [&](int m) { return complete_hypergraph(r, m); };
    SeparationReport rep;
    rep.item = item;
    rep.r = r;
    rep.k = k;
    rep.l = l;
    switch (item) {
        case SeparationItem::I: {
            const RamseyNumberOutcome rn = ramsey_number({K(k), K(k)}, ramsey_cap, lim);
            rep.ramsey_nodes = rn.nodes;
            if (rn.status == RamseyNumberOutcome::Status::Unknown)
                throw UnknownError("arrowing budget exhausted while computing the Ramsey number");
            if (rn.status == RamseyNumberOutcome::Status::CapExceeded)
                throw std::invalid_argument("Ramsey number not found within cap " +
                                            std::to_string(ramsey_cap));
            rep.q = rn.result->value - 1;
            rep.fs = {K(rep.q), K(l)};
            rep.qs = {K(k), K(k)};
            break;
        }
        case SeparationItem::II:
            rep.fs = {K(k - 1), K(k - 1), K(l)};
            rep.qs = {K(k), K(l)};
            break;
        case SeparationItem::III:
            rep.fs = {K(k + 1), K(k - 1), K(l)};
            rep.qs = {K(k), K(k), K(l)};
            break;
    }
    rep.verdict = containment_decision(rep.fs, rep.qs, lim);
    rep.separation_certified = rep.verdict.status == PartitionStatus::None;
    return rep;
}

}  // namespace ramsey
