// Certificate search. Strict SP/SC get dedicated placement procedures;
// every other class runs pruned exact backtracking over witness orders
// under a node budget. A certified result always passes the matching
// verifier; refuted means the search space was exhausted.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "corelect/domains.hpp"

namespace corelect {

struct RecognitionResult {
    enum class Outcome { Certified, Refuted, Unknown };
    Outcome outcome = Outcome::Unknown;
    std::optional<DomainCertificate> certificate;
    std::uint64_t nodes = 0;          // placement attempts across all searches
    std::uint64_t search_space = 0;   // number of candidate orders, when it fits 64 bits
    std::optional<std::vector<int>> removed_candidates; // r-STC refutation witness
};

inline constexpr std::uint64_t kDefaultSearchBudget = 5'000'000;

namespace detail {

inline std::uint64_t factorial_or_zero(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) {
        if (f > UINT64_MAX / static_cast<std::uint64_t>(i)) return 0;
        f *= static_cast<std::uint64_t>(i);
    }
    return f;
}

enum class SearchStatus { Found, Exhausted, Budget };

// Depth-first enumeration of permutations in ascending item order, so the
// first certificate found is deterministic. `chk` prunes prefixes; the
// full order at the first accepting leaf lands in `found`.
template <typename Checker>
SearchStatus dfs_orders(Checker& chk, int total, std::vector<int>& order,
                        std::vector<bool>& used, std::uint64_t& nodes,
                        std::uint64_t budget, std::vector<int>& found) {
    if (static_cast<int>(order.size()) == total) {
        found = order;
        return SearchStatus::Found;
    }
    for (int item = 0; item < total; ++item) {
        if (used[item]) continue;
        if (nodes >= budget) return SearchStatus::Budget;
        ++nodes;
        if (!chk.can_push(item)) continue;
        chk.push(item);
        used[item] = true;
        order.push_back(item);
        SearchStatus st = dfs_orders(chk, total, order, used, nodes, budget, found);
        order.pop_back();
        used[item] = false;
        chk.pop(item);
        if (st != SearchStatus::Exhausted) return st;
    }
    return SearchStatus::Exhausted;
}

template <typename Checker, typename Wrap>
RecognitionResult run_order_search(int total, Checker& chk, std::uint64_t budget,
                                   std::uint64_t& nodes, Wrap&& wrap) {
    std::vector<int> order, found;
    std::vector<bool> used(total, false);
    RecognitionResult res;
    res.search_space = factorial_or_zero(total);
    SearchStatus st = dfs_orders(chk, total, order, used, nodes, budget, found);
    res.nodes = nodes;
    switch (st) {
        case SearchStatus::Found:
            res.outcome = RecognitionResult::Outcome::Certified;
            res.certificate = wrap(found);
            break;
        case SearchStatus::Exhausted:
            res.outcome = RecognitionResult::Outcome::Refuted;
            break;
        case SearchStatus::Budget:
            res.outcome = RecognitionResult::Outcome::Unknown;
            break;
    }
    return res;
}

// --- prefix checkers, one per searched domain ------------------------------

struct SpPrefix {
    const Election& e;
    std::vector<std::optional<int>> stop; // singleton top per voter
    std::vector<std::vector<int>> toppers; // voters whose singleton top is c
    std::vector<int> seq;

    explicit SpPrefix(const Election& el) : e(el) {
        stop.resize(e.n());
        toppers.resize(e.m());
        for (int v = 0; v < e.n(); ++v) {
            stop[v] = singleton_top(e.voters[v]);
            if (stop[v]) toppers[*stop[v]].push_back(v);
        }
    }

    bool triple_ok(int a, int b, int c) const {
        for (int v : toppers[a])
            if (!e.voters[v].strictly_prefers(b, c)) return false;
        for (int v : toppers[c])
            if (!e.voters[v].strictly_prefers(b, a)) return false;
        return true;
    }

    bool can_push(int cand) const {
        int p = static_cast<int>(seq.size());
        for (int pa = 0; pa < p; ++pa)
            for (int pb = pa + 1; pb < p; ++pb)
                if (!triple_ok(seq[pa], seq[pb], cand)) return false;
        return true;
    }
    void push(int cand) { seq.push_back(cand); }
    void pop(int) { seq.pop_back(); }
};

struct StpPrefix {
    const Election& e;
    std::vector<bool> topc;
    std::vector<std::vector<int>> toppers;
    std::vector<int> seq;

    explicit StpPrefix(const Election& el) : e(el), topc(top_candidate_mask(el)) {
        toppers.resize(e.m());
        for (int v = 0; v < e.n(); ++v)
            if (auto t = singleton_top(e.voters[v])) toppers[*t].push_back(v);
    }

    bool triple_ok(int a, int b, int c) const {
        if (!topc[b]) return true;
        for (int v : toppers[a])
            if (!e.voters[v].strictly_prefers(b, c)) return false;
        for (int v : toppers[c])
            if (!e.voters[v].strictly_prefers(b, a)) return false;
        return true;
    }
    bool can_push(int cand) const {
        int p = static_cast<int>(seq.size());
        for (int pa = 0; pa < p; ++pa)
            for (int pb = pa + 1; pb < p; ++pb)
                if (!triple_ok(seq[pa], seq[pb], cand)) return false;
        return true;
    }
    void push(int cand) { seq.push_back(cand); }
    void pop(int) { seq.pop_back(); }
};

struct ScPrefix {
    const Election& e;
    std::vector<int> seq;

    explicit ScPrefix(const Election& el) : e(el) {}

    bool can_push(int z) const {
        const WeakRanking& rz = e.voters[z];
        int p = static_cast<int>(seq.size());
        for (int px = 0; px < p; ++px)
            for (int py = px + 1; py < p; ++py) {
                const WeakRanking& rx = e.voters[seq[px]];
                const WeakRanking& ry = e.voters[seq[py]];
                for (int a = 0; a < e.m(); ++a)
                    for (int b = 0; b < e.m(); ++b)
                        if (a != b && ry.strictly_prefers(a, b) &&
                            rx.strictly_prefers(b, a) && !rz.strictly_prefers(a, b))
                            return false;
            }
        return true;
    }
    void push(int v) { seq.push_back(v); }
    void pop(int) { seq.pop_back(); }
};

struct StcPrefix {
    const Election& e;
    std::vector<int> seq;

    explicit StcPrefix(const Election& el) : e(el) {}

    bool can_push(int z) const {
        const WeakRanking& rz = e.voters[z];
        int p = static_cast<int>(seq.size());
        for (int px = 0; px < p; ++px)
            for (int py = px + 1; py < p; ++py) {
                const WeakRanking& rx = e.voters[seq[px]];
                const WeakRanking& ry = e.voters[seq[py]];
                for (int a = 0; a < e.m(); ++a)
                    if (beats_top(rx, ry, a) && !top_beats(rz, ry, a)) return false;
            }
        return true;
    }
    void push(int v) { seq.push_back(v); }
    void pop(int) { seq.pop_back(); }
};

struct SscPrefix {
    const Election& e;
    // seen[p][q]: a placed voter approves p and not q.
    // cross[p][q]: some placed p-not-q voter precedes a placed q-not-p voter.
    std::vector<std::vector<bool>> seen, cross;
    std::vector<int> seq;

    explicit SscPrefix(const Election& el)
        : e(el),
          seen(el.m(), std::vector<bool>(el.m(), false)),
          cross(el.m(), std::vector<bool>(el.m(), false)) {}

    bool can_push(int v) const {
        for (int p = 0; p < e.m(); ++p) {
            if (!approves(e, v, p)) continue;
            for (int q = 0; q < e.m(); ++q) {
                if (p == q || approves(e, v, q)) continue;
                // v is a p-not-q voter; if a q-not-p voter is already placed,
                // the pattern q-not-p before p-not-q appears.
                if (seen[q][p] && cross[p][q]) return false;
            }
        }
        return true;
    }
    void push(int v) {
        for (int p = 0; p < e.m(); ++p) {
            if (!approves(e, v, p)) continue;
            for (int q = 0; q < e.m(); ++q) {
                if (p == q || approves(e, v, q)) continue;
                if (seen[q][p]) cross[q][p] = true;
            }
        }
        for (int p = 0; p < e.m(); ++p) {
            if (!approves(e, v, p)) continue;
            for (int q = 0; q < e.m(); ++q)
                if (p != q && !approves(e, v, q)) seen[p][q] = true;
        }
        seq.push_back(v);
        snapshots.push_back({seen, cross});
    }
    void pop(int) {
        seq.pop_back();
        snapshots.pop_back();
        if (snapshots.empty()) {
            for (auto& row : seen) std::fill(row.begin(), row.end(), false);
            for (auto& row : cross) std::fill(row.begin(), row.end(), false);
        } else {
            seen = snapshots.back().first;
            cross = snapshots.back().second;
        }
    }

    std::vector<std::pair<std::vector<std::vector<bool>>, std::vector<std::vector<bool>>>> snapshots;
};

// Right-open interval pruning shared by VI (order voters) and CI (order
// candidates): per constrained set, approvals inside the prefix must be
// contiguous and still open at the right end unless complete.
struct IntervalPrefix {
    enum class State : unsigned char { Untouched, Open, Closed };
    int sets;                       // number of constrained sets
    std::vector<int> set_size;      // |A_s|
    std::vector<State> state;
    std::vector<int> placed_count;
    std::vector<std::vector<int>> membership; // item -> sets containing it
    std::vector<std::vector<int>> item_outside; // item -> sets not containing it
    std::vector<std::vector<std::pair<int, State>>> undo;

    IntervalPrefix(int n_items, int n_sets, const std::vector<std::vector<bool>>& in_set)
        : sets(n_sets), set_size(n_sets, 0), state(n_sets, State::Untouched),
          placed_count(n_sets, 0), membership(n_items), item_outside(n_items) {
        for (int s = 0; s < n_sets; ++s)
            for (int it = 0; it < n_items; ++it)
                if (in_set[s][it]) {
                    ++set_size[s];
                    membership[it].push_back(s);
                } else {
                    item_outside[it].push_back(s);
                }
    }

    bool can_push(int item) const {
        for (int s : membership[item])
            if (state[s] == State::Closed) return false;
        for (int s : item_outside[item])
            if (state[s] == State::Open && placed_count[s] < set_size[s]) return false;
        return true;
    }
    void push(int item) {
        undo.emplace_back();
        auto& log = undo.back();
        for (int s : membership[item]) {
            if (state[s] == State::Untouched) {
                log.emplace_back(s, state[s]);
                state[s] = State::Open;
            }
            ++placed_count[s];
        }
        for (int s : item_outside[item])
            if (state[s] == State::Open) {
                log.emplace_back(s, state[s]);
                state[s] = State::Closed;
            }
    }
    void pop(int item) {
        for (int s : membership[item]) --placed_count[s];
        for (auto it = undo.back().rbegin(); it != undo.back().rend(); ++it)
            state[it->first] = it->second;
        undo.pop_back();
    }
};

struct ViPrefix {
    IntervalPrefix core;
    explicit ViPrefix(const Election& e) : core(build(e)) {}
    static IntervalPrefix build(const Election& e) {
        std::vector<std::vector<bool>> in_set(e.m(), std::vector<bool>(e.n(), false));
        for (int c = 0; c < e.m(); ++c)
            for (int v = 0; v < e.n(); ++v)
                if (approves(e, v, c)) in_set[c][v] = true;
        return IntervalPrefix(e.n(), e.m(), in_set);
    }
    bool can_push(int v) const { return core.can_push(v); }
    void push(int v) { core.push(v); }
    void pop(int v) { core.pop(v); }
};

struct CiPrefix {
    IntervalPrefix core;
    explicit CiPrefix(const Election& e) : core(build(e)) {}
    static IntervalPrefix build(const Election& e) {
        std::vector<std::vector<bool>> in_set(e.n(), std::vector<bool>(e.m(), false));
        for (int v = 0; v < e.n(); ++v)
            for (int c = 0; c < e.m(); ++c)
                if (approves(e, v, c)) in_set[v][c] = true;
        return IntervalPrefix(e.m(), e.n(), in_set);
    }
    bool can_push(int c) const { return core.can_push(c); }
    void push(int c) { core.push(c); }
    void pop(int c) { core.pop(c); }
};

// Mixed-order prefixes for LC and well-orderedness. Items 0..n-1 are
// voters, n..n+m-1 candidates.
struct LcPrefix {
    const Election& e;
    std::vector<int> voters_placed, cands_placed;

    explicit LcPrefix(const Election& el) : e(el) {}

    bool voter_ok(int j) const {
        // j is the latest voter: check (i earlier, a before b) quadruples
        for (int i : voters_placed)
            for (std::size_t pa = 0; pa < cands_placed.size(); ++pa)
                for (std::size_t pb = pa + 1; pb < cands_placed.size(); ++pb) {
                    int a = cands_placed[pa], b = cands_placed[pb];
                    if (approves(e, j, a) && approves(e, i, b) && !approves(e, i, a))
                        return false;
                }
        return true;
    }
    bool cand_ok(int b) const {
        for (std::size_t pi = 0; pi < voters_placed.size(); ++pi)
            for (std::size_t pj = pi + 1; pj < voters_placed.size(); ++pj) {
                int i = voters_placed[pi], j = voters_placed[pj];
                for (int a : cands_placed)
                    if (approves(e, j, a) && approves(e, i, b) && !approves(e, i, a))
                        return false;
            }
        return true;
    }
    bool can_push(int item) const {
        return item < e.n() ? voter_ok(item) : cand_ok(item - e.n());
    }
    void push(int item) {
        if (item < e.n()) voters_placed.push_back(item);
        else cands_placed.push_back(item - e.n());
    }
    void pop(int item) {
        if (item < e.n()) voters_placed.pop_back();
        else cands_placed.pop_back();
    }
};

struct WellOrderedPrefix {
    const Election& e;
    std::vector<int> voters_placed, cands_placed;

    explicit WellOrderedPrefix(const Election& el) : e(el) {}

    bool premise(int j, int a, int b) const {
        const WeakRanking& rj = e.voters[j];
        return rj.indifferent(a, b) && !rj.in_bottom(a) && !rj.in_bottom(b);
    }
    bool can_push(int item) const {
        if (item < e.n()) {
            int j = item;
            for (int i : voters_placed)
                for (std::size_t pa = 0; pa < cands_placed.size(); ++pa)
                    for (std::size_t pb = pa + 1; pb < cands_placed.size(); ++pb) {
                        int a = cands_placed[pa], b = cands_placed[pb];
                        if (premise(j, a, b) && !e.voters[i].weakly_prefers(a, b))
                            return false;
                    }
        } else {
            int b = item - e.n();
            for (std::size_t pi = 0; pi < voters_placed.size(); ++pi)
                for (std::size_t pj = pi + 1; pj < voters_placed.size(); ++pj) {
                    int i = voters_placed[pi], j = voters_placed[pj];
                    for (int a : cands_placed)
                        if (premise(j, a, b) && !e.voters[i].weakly_prefers(a, b))
                            return false;
                }
        }
        return true;
    }
    void push(int item) {
        if (item < e.n()) voters_placed.push_back(item);
        else cands_placed.push_back(item - e.n());
    }
    void pop(int item) {
        if (item < e.n()) voters_placed.pop_back();
        else cands_placed.pop_back();
    }
};

struct TmPrefix {
    const Election& e;
    std::vector<bool> topc;
    std::vector<int> seq;

    explicit TmPrefix(const Election& el) : e(el), topc(top_candidate_mask(el)) {}

    bool assignment_ok(int a, int b, int c) const {
        for (int i = 0; i < e.n(); ++i) {
            if (e.voters[i].in_top(a)) {
                for (int j = 0; j < e.n(); ++j)
                    if (e.voters[j].in_top(b) && !tm_conclusion_holds(e, a, b, c, i, j))
                        return false;
            }
        }
        if (topc[a] && topc[b] && topc[c]) {
            for (int i = 0; i < e.n(); ++i) {
                const WeakRanking& ri = e.voters[i];
                if (!(ri.weakly_prefers(a, b) && ri.weakly_prefers(a, c))) continue;
                for (int j = 0; j < e.n(); ++j) {
                    const WeakRanking& rj = e.voters[j];
                    if (rj.weakly_prefers(b, a) && rj.weakly_prefers(b, c) &&
                        !tm_conclusion_holds(e, a, b, c, i, j))
                        return false;
                }
            }
        }
        return true;
    }
    bool can_push(int cand) const {
        int p = static_cast<int>(seq.size());
        for (int pa = 0; pa < p; ++pa)
            for (int pb = pa + 1; pb < p; ++pb) {
                int x = seq[pa], y = seq[pb];
                if (!assignment_ok(x, y, cand)) return false;
                if (!assignment_ok(cand, y, x)) return false;
            }
        return true;
    }
    void push(int cand) { seq.push_back(cand); }
    void pop(int) { seq.pop_back(); }
};

// Outside-in placement for strict single-peaked recognition: each voter's
// worst remaining candidate must occupy an end of the remaining axis.
struct SpPlacement {
    const Election& e;
    SpPrefix triples;
    std::vector<int> axis;
    std::vector<bool> placed;
    std::uint64_t& nodes;
    std::uint64_t budget;
    bool budget_hit = false;

    SpPlacement(const Election& el, std::uint64_t& node_counter, std::uint64_t b)
        : e(el), triples(el), axis(el.m(), -1), placed(el.m(), false),
          nodes(node_counter), budget(b) {}

    std::vector<int> worst_remaining() const {
        std::vector<bool> in_l(e.m(), false);
        for (const auto& r : e.voters) {
            for (auto cls = r.classes.rbegin(); cls != r.classes.rend(); ++cls) {
                int worst = -1;
                for (int c : *cls)
                    if (!placed[c]) { worst = c; break; }
                if (worst != -1) { in_l[worst] = true; break; }
            }
        }
        std::vector<int> l;
        for (int c = 0; c < e.m(); ++c)
            if (in_l[c]) l.push_back(c);
        return l;
    }

    bool triples_ok(int cand, int pos) const {
        // check every SP triple completed by placing cand at pos
        for (int p1 = 0; p1 < e.m(); ++p1) {
            if (axis[p1] == -1 && p1 != pos) continue;
            for (int p2 = p1 + 1; p2 < e.m(); ++p2) {
                if (axis[p2] == -1 && p2 != pos) continue;
                for (int p3 = p2 + 1; p3 < e.m(); ++p3) {
                    if (axis[p3] == -1 && p3 != pos) continue;
                    if (p1 != pos && p2 != pos && p3 != pos) continue;
                    int a = p1 == pos ? cand : axis[p1];
                    int b = p2 == pos ? cand : axis[p2];
                    int c = p3 == pos ? cand : axis[p3];
                    if (!triples.triple_ok(a, b, c)) return false;
                }
            }
        }
        return true;
    }

    bool place(int cand, int pos) {
        ++nodes;
        if (nodes >= budget) { budget_hit = true; return false; }
        if (!triples_ok(cand, pos)) return false;
        axis[pos] = cand;
        placed[cand] = true;
        return true;
    }
    void unplace(int cand, int pos) {
        axis[pos] = -1;
        placed[cand] = false;
    }

    bool solve(int left, int right) {
        if (budget_hit) return false;
        if (left > right) return true;
        std::vector<int> l = worst_remaining();
        if (static_cast<int>(l.size()) > 2) return false;
        if (left == right) {
            int last = -1;
            for (int c = 0; c < e.m(); ++c)
                if (!placed[c]) { last = c; break; }
            if (place(last, left)) {
                if (solve(left + 1, right)) return true;
                unplace(last, left);
            }
            return false;
        }
        if (l.size() == 1) {
            for (int pos : {left, right}) {
                if (place(l[0], pos)) {
                    bool ok = pos == left ? solve(left + 1, right) : solve(left, right - 1);
                    if (ok) return true;
                    unplace(l[0], pos);
                }
                if (budget_hit) return false;
            }
            return false;
        }
        for (int swap = 0; swap < 2; ++swap) {
            int cl = swap ? l[1] : l[0];
            int cr = swap ? l[0] : l[1];
            if (place(cl, left)) {
                if (place(cr, right)) {
                    if (solve(left + 1, right - 1)) return true;
                    unplace(cr, right);
                }
                unplace(cl, left);
            }
            if (budget_hit) return false;
        }
        return false;
    }
};

// Polynomial strict single-crossing recognition: with the true leftmost
// voter fixed, disagreement sets along a single-crossing order are nested,
// so sorting by disagreement count and checking the chain is complete.
inline std::optional<VoterOrder> recognize_sc_strict(const Election& e) {
    const int n = e.n(), m = e.m();
    const int pairs = m * (m - 1) / 2;
    auto pair_index = [m](int a, int b) { return a * m + b; };
    (void)pairs;
    for (int lead = 0; lead < n; ++lead) {
        const WeakRanking& rl = e.voters[lead];
        std::vector<std::vector<bool>> dis(n, std::vector<bool>(m * m, false));
        std::vector<int> count(n, 0);
        for (int v = 0; v < n; ++v)
            for (int a = 0; a < m; ++a)
                for (int b = a + 1; b < m; ++b)
                    if (rl.strictly_prefers(a, b) != e.voters[v].strictly_prefers(a, b)) {
                        dis[v][pair_index(a, b)] = true;
                        ++count[v];
                    }
        std::vector<int> order(n);
        for (int v = 0; v < n; ++v) order[v] = v;
        std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
            if (count[x] != count[y]) return count[x] < count[y];
            return x < y;
        });
        bool chain = order[0] == lead || count[order[0]] == 0;
        for (int p = 0; chain && p + 1 < n; ++p) {
            for (int q = 0; q < m * m; ++q)
                if (dis[order[p]][q] && !dis[order[p + 1]][q]) { chain = false; break; }
        }
        if (chain) return VoterOrder{order};
    }
    return std::nullopt;
}

} // namespace detail

// Forward declaration; defined below with the interval-to-LC construction.
inline MixedOrder lc_from_interval(const Election& e, DomainId interval_domain,
                                   const DomainCertificate& cert);

inline RecognitionResult recognize(const Election& e, DomainId domain,
                                   std::uint64_t budget = kDefaultSearchBudget);

namespace detail {

inline RecognitionResult certified(DomainCertificate cert, std::uint64_t nodes,
                                   std::uint64_t space = 0) {
    RecognitionResult r;
    r.outcome = RecognitionResult::Outcome::Certified;
    r.certificate = std::move(cert);
    r.nodes = nodes;
    r.search_space = space;
    return r;
}

inline RecognitionResult recognize_sp_impl(const Election& e, std::uint64_t budget,
                                           std::uint64_t& nodes) {
    if (e.m() <= 2) {
        CandidateOrder axis;
        for (int c = 0; c < e.m(); ++c) axis.order.push_back(c);
        return certified(axis, nodes);
    }
    if (e.is_strict()) {
        SpPlacement pl(e, nodes, budget);
        if (pl.solve(0, e.m() - 1)) return certified(CandidateOrder{pl.axis}, nodes);
        RecognitionResult r;
        r.outcome = pl.budget_hit ? RecognitionResult::Outcome::Unknown
                                  : RecognitionResult::Outcome::Refuted;
        r.nodes = nodes;
        return r;
    }
    SpPrefix chk(e);
    return run_order_search(e.m(), chk, budget, nodes, [](const std::vector<int>& o) {
        return DomainCertificate(CandidateOrder{o});
    });
}

inline RecognitionResult recognize_sc_impl(const Election& e, std::uint64_t budget,
                                           std::uint64_t& nodes) {
    if (e.is_strict()) {
        auto order = recognize_sc_strict(e);
        RecognitionResult r;
        r.nodes = nodes;
        if (order) {
            r.outcome = RecognitionResult::Outcome::Certified;
            r.certificate = *order;
        } else {
            r.outcome = RecognitionResult::Outcome::Refuted;
        }
        return r;
    }
    ScPrefix chk(e);
    return run_order_search(e.n(), chk, budget, nodes, [](const std::vector<int>& o) {
        return DomainCertificate(VoterOrder{o});
    });
}

inline RecognitionResult recognize_lc_impl(const Election& e, std::uint64_t budget,
                                           std::uint64_t& nodes) {
    // Interval fast paths: a VI or CI witness converts to an LC order.
    {
        ViPrefix chk(e);
        auto r = run_order_search(e.n(), chk, budget, nodes, [](const std::vector<int>& o) {
            return DomainCertificate(VoterOrder{o});
        });
        if (r.outcome == RecognitionResult::Outcome::Certified)
            return certified(lc_from_interval(e, DomainId::VI, *r.certificate), nodes);
    }
    {
        CiPrefix chk(e);
        auto r = run_order_search(e.m(), chk, budget, nodes, [](const std::vector<int>& o) {
            return DomainCertificate(CandidateOrder{o});
        });
        if (r.outcome == RecognitionResult::Outcome::Certified)
            return certified(lc_from_interval(e, DomainId::CI, *r.certificate), nodes);
    }
    LcPrefix chk(e);
    auto wrap = [&e](const std::vector<int>& o) {
        MixedOrder mo;
        for (int item : o) {
            if (item < e.n()) mo.order.push_back(MixedItem{false, item});
            else mo.order.push_back(MixedItem{true, item - e.n()});
        }
        return DomainCertificate(mo);
    };
    return run_order_search(e.n() + e.m(), chk, budget, nodes, wrap);
}

inline RecognitionResult recognize_stc_impl(const Election& e, std::uint64_t budget,
                                            std::uint64_t& nodes) {
    StcPrefix chk(e);
    return run_order_search(e.n(), chk, budget, nodes, [](const std::vector<int>& o) {
        return DomainCertificate(VoterOrder{o});
    });
}

// SP and SC certificates convert to single-top-crossing voter orders: an
// SC order is itself STC, and an SP axis orders voters by the axis
// position of their top choice.
inline VoterOrder stc_order_from_sp_axis(const Election& e, const CandidateOrder& axis) {
    std::vector<int> pos(e.m(), 0);
    for (int p = 0; p < e.m(); ++p) pos[axis.order[p]] = p;
    std::vector<int> order(e.n());
    for (int v = 0; v < e.n(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        int px = pos[e.voters[x].top_class().front()];
        int py = pos[e.voters[y].top_class().front()];
        if (px != py) return px < py;
        return x < y;
    });
    return VoterOrder{order};
}

inline RecognitionResult recognize_rstc_impl(const Election& e, std::uint64_t budget,
                                             std::uint64_t& nodes) {
    // Sufficient condition: SP or SC certified implies r-STC, since both
    // classes are preserved under candidate removal and imply STC.
    if (e.is_strict()) {
        auto sp = recognize_sp_impl(e, budget, nodes);
        if (sp.outcome == RecognitionResult::Outcome::Certified) {
            VoterOrder vo = stc_order_from_sp_axis(e, std::get<CandidateOrder>(*sp.certificate));
            if (!verify_stc(e, vo)) return certified(vo, nodes);
        }
        if (nodes < budget) {
            auto sc = recognize_sc_impl(e, budget, nodes);
            if (sc.outcome == RecognitionResult::Outcome::Certified) {
                VoterOrder vo = std::get<VoterOrder>(*sc.certificate);
                if (!verify_stc(e, vo)) return certified(vo, nodes);
            }
        }
    }
    RecognitionResult res;
    res.nodes = nodes;
    if (e.m() > 15) {
        res.outcome = RecognitionResult::Outcome::Unknown;
        return res;
    }
    // Exhaustive subinstance sweep: every candidate subset must be STC.
    std::optional<VoterOrder> full_cert;
    for (std::uint32_t mask = 1; mask < (1u << e.m()); ++mask) {
        std::vector<int> keep;
        for (int c = 0; c < e.m(); ++c)
            if (mask & (1u << c)) keep.push_back(c);
        Election sub = induce_candidates(e, keep);
        auto r = recognize_stc_impl(sub, budget, nodes);
        if (r.outcome == RecognitionResult::Outcome::Unknown) {
            res.outcome = RecognitionResult::Outcome::Unknown;
            res.nodes = nodes;
            return res;
        }
        if (r.outcome == RecognitionResult::Outcome::Refuted) {
            res.outcome = RecognitionResult::Outcome::Refuted;
            std::vector<int> removed;
            for (int c = 0; c < e.m(); ++c)
                if (!(mask & (1u << c))) removed.push_back(c);
            res.removed_candidates = removed;
            res.nodes = nodes;
            return res;
        }
        if (mask + 1 == (1u << e.m()))
            full_cert = std::get<VoterOrder>(*r.certificate);
    }
    res.outcome = RecognitionResult::Outcome::Certified;
    res.certificate = *full_cert;
    res.nodes = nodes;
    return res;
}

} // namespace detail

inline RecognitionResult recognize(const Election& e, DomainId domain, std::uint64_t budget) {
    e.validate();
    std::uint64_t nodes = 0;
    switch (domain) {
        case DomainId::SP:
            return detail::recognize_sp_impl(e, budget, nodes);
        case DomainId::SC:
            return detail::recognize_sc_impl(e, budget, nodes);
        case DomainId::Euclid1D:
            throw InputError("recognize: 1D-Euclidean recognition is out of scope; "
                             "verify a supplied embedding instead");
        case DomainId::VI: {
            detail::ViPrefix chk(e);
            return detail::run_order_search(e.n(), chk, budget, nodes,
                                            [](const std::vector<int>& o) {
                                                return DomainCertificate(VoterOrder{o});
                                            });
        }
        case DomainId::CI: {
            detail::CiPrefix chk(e);
            return detail::run_order_search(e.m(), chk, budget, nodes,
                                            [](const std::vector<int>& o) {
                                                return DomainCertificate(CandidateOrder{o});
                                            });
        }
        case DomainId::LC:
            return detail::recognize_lc_impl(e, budget, nodes);
        case DomainId::SSC: {
            detail::SscPrefix chk(e);
            return detail::run_order_search(e.n(), chk, budget, nodes,
                                            [](const std::vector<int>& o) {
                                                return DomainCertificate(VoterOrder{o});
                                            });
        }
        case DomainId::STP: {
            detail::StpPrefix chk(e);
            return detail::run_order_search(e.m(), chk, budget, nodes,
                                            [](const std::vector<int>& o) {
                                                return DomainCertificate(CandidateOrder{o});
                                            });
        }
        case DomainId::STC:
            return detail::recognize_stc_impl(e, budget, nodes);
        case DomainId::RSTC:
            return detail::recognize_rstc_impl(e, budget, nodes);
        case DomainId::TM: {
            detail::TmPrefix chk(e);
            return detail::run_order_search(e.m(), chk, budget, nodes,
                                            [](const std::vector<int>& o) {
                                                return DomainCertificate(CandidateOrder{o});
                                            });
        }
        case DomainId::WellOrdered: {
            detail::WellOrderedPrefix chk(e);
            auto wrap = [&e](const std::vector<int>& o) {
                MixedOrder mo;
                for (int item : o)
                    mo.order.push_back(item < e.n() ? MixedItem{false, item}
                                                    : MixedItem{true, item - e.n()});
                return DomainCertificate(mo);
            };
            return detail::run_order_search(e.n() + e.m(), chk, budget, nodes, wrap);
        }
    }
    throw InputError("recognize: unknown domain");
}

// Builds a linearly-consistent mixed order from a voter-interval or
// candidate-interval witness: candidates attach to their first approver
// along the voter order (VI), voters attach to their first approved
// candidate along the axis (CI). Unapproved candidates go last.
inline MixedOrder lc_from_interval(const Election& e, DomainId interval_domain,
                                   const DomainCertificate& cert) {
    if (interval_domain != DomainId::VI && interval_domain != DomainId::CI)
        throw InputError("lc_from_interval: expected VI or CI");
    if (auto v = verify(e, interval_domain, cert))
        throw InputError("lc_from_interval: certificate fails its verifier");
    MixedOrder out;
    if (interval_domain == DomainId::VI) {
        const auto& order = std::get<VoterOrder>(cert).order;
        std::vector<int> first_approver(e.m(), e.n()); // position, n = never
        for (int p = 0; p < e.n(); ++p)
            for (int c = 0; c < e.m(); ++c)
                if (first_approver[c] == e.n() && detail::approves(e, order[p], c))
                    first_approver[c] = p;
        for (int p = 0; p < e.n(); ++p) {
            for (int c = 0; c < e.m(); ++c)
                if (first_approver[c] == p) out.order.push_back(MixedItem{true, c});
            out.order.push_back(MixedItem{false, order[p]});
        }
        for (int c = 0; c < e.m(); ++c)
            if (first_approver[c] == e.n()) out.order.push_back(MixedItem{true, c});
    } else {
        const auto& axis = std::get<CandidateOrder>(cert).order;
        std::vector<int> first_approved(e.n(), e.m());
        for (int p = 0; p < e.m(); ++p)
            for (int v = 0; v < e.n(); ++v)
                if (first_approved[v] == e.m() && detail::approves(e, v, axis[p]))
                    first_approved[v] = p;
        for (int p = 0; p < e.m(); ++p) {
            for (int v = 0; v < e.n(); ++v)
                if (first_approved[v] == p) out.order.push_back(MixedItem{false, v});
            out.order.push_back(MixedItem{true, axis[p]});
        }
    }
    return out;
}

// Builds a single-top-peaked candidate axis from a single-top-crossing
// voter order: for each top candidate a and rival b, the voters preferring
// b to a sit entirely on one side of a's first topper, which pins the
// relative order of a and b; the partial order is completed canonically.
inline CandidateOrder stp_order_from_stc(const Election& e, const VoterOrder& vo) {
    if (!e.is_strict()) throw InputError("stp_order_from_stc: requires strict preferences");
    if (auto v = verify_stc(e, vo))
        throw InputError("stp_order_from_stc: order fails the STC verifier");
    const auto& order = vo.order;
    std::vector<int> pos_of_voter(e.n(), 0);
    for (int p = 0; p < e.n(); ++p) pos_of_voter[order[p]] = p;

    std::vector<int> first_topper_pos(e.m(), -1);
    for (int p = 0; p < e.n(); ++p) {
        int t = e.voters[order[p]].top_class().front();
        if (first_topper_pos[t] == -1) first_topper_pos[t] = p;
    }

    // before[a][b]: a must precede b on the axis
    std::vector<std::vector<bool>> before(e.m(), std::vector<bool>(e.m(), false));
    for (int a = 0; a < e.m(); ++a) {
        if (first_topper_pos[a] == -1) continue;
        int ia = first_topper_pos[a];
        for (int b = 0; b < e.m(); ++b) {
            if (a == b) continue;
            bool any_earlier = false, any_later = false;
            for (int v = 0; v < e.n(); ++v)
                if (e.voters[v].strictly_prefers(b, a)) {
                    if (pos_of_voter[v] < ia) any_earlier = true;
                    else any_later = true;
                }
            if (!any_earlier && !any_later) continue;
            if (any_earlier && any_later)
                throw InvariantError("stp_order_from_stc: preferrers split around the topper");
            if (any_earlier) before[b][a] = true;
            else before[a][b] = true;
        }
    }

    // canonical topological completion
    std::vector<int> indeg(e.m(), 0);
    for (int a = 0; a < e.m(); ++a)
        for (int b = 0; b < e.m(); ++b)
            if (before[a][b]) ++indeg[b];
    CandidateOrder axis;
    std::vector<bool> done(e.m(), false);
    for (int step = 0; step < e.m(); ++step) {
        int pick = -1;
        for (int c = 0; c < e.m(); ++c)
            if (!done[c] && indeg[c] == 0) { pick = c; break; }
        if (pick == -1)
            throw InvariantError("stp_order_from_stc: constraint cycle");
        done[pick] = true;
        axis.order.push_back(pick);
        for (int b = 0; b < e.m(); ++b)
            if (before[pick][b]) --indeg[b];
    }
    return axis;
}

// A single-top-crossing voter order via the cheapest certifier that
// applies: a single-crossing witness, a peak axis converted through
// stp_order_from_stc's inverse construction, or the direct search.
inline std::optional<VoterOrder> find_stc_witness(const Election& e,
                                                  std::uint64_t budget = kDefaultSearchBudget) {
    using O = RecognitionResult::Outcome;
    if (e.is_strict()) {
        if (auto sc = recognize(e, DomainId::SC, budget); sc.outcome == O::Certified)
            return std::get<VoterOrder>(*sc.certificate);
        if (auto sp = recognize(e, DomainId::SP, budget); sp.outcome == O::Certified) {
            VoterOrder vo =
                detail::stc_order_from_sp_axis(e, std::get<CandidateOrder>(*sp.certificate));
            if (!verify_stc(e, vo)) return vo;
        }
    }
    if (auto stc = recognize(e, DomainId::STC, budget); stc.outcome == O::Certified)
        return std::get<VoterOrder>(*stc.certificate);
    return std::nullopt;
}

enum class EquivalencePair { StpTm, StpStc };

struct EquivalenceReport {
    enum class Verdict { Agree, Disagree, Inconclusive };
    Verdict verdict = Verdict::Inconclusive;
    RecognitionResult left;  // STP
    RecognitionResult right; // TM or STC
};

// Runs both recognizers of an equivalent pair and compares their
// certified/refuted outcomes; budget exhaustion yields Inconclusive.
inline EquivalenceReport equivalence_check(const Election& e, EquivalencePair pair,
                                           std::uint64_t budget = kDefaultSearchBudget) {
    if (!e.is_strict())
        throw InputError("equivalence_check: requires strict preferences");
    EquivalenceReport rep;
    rep.left = recognize(e, DomainId::STP, budget);
    rep.right = recognize(e, pair == EquivalencePair::StpTm ? DomainId::TM : DomainId::STC, budget);
    using O = RecognitionResult::Outcome;
    if (rep.left.outcome == O::Unknown || rep.right.outcome == O::Unknown) {
        rep.verdict = EquivalenceReport::Verdict::Inconclusive;
    } else {
        rep.verdict = rep.left.outcome == rep.right.outcome
                          ? EquivalenceReport::Verdict::Agree
                          : EquivalenceReport::Verdict::Disagree;
    }
    return rep;
}

} // namespace corelect
