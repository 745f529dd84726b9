// Voting rules: Monroe, STV, PAV and the method of equal shares as
// comparison baselines, plus the two-phase pipeline that elects
// core-stable committees on certified domains (a representative phase
// building an exact fractional committee, then a median phase that
// discretizes it).

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "corelect/domains.hpp"
#include "corelect/election.hpp"
#include "corelect/recognize.hpp"

namespace corelect {

// Default gates for the exact optimizers; they are baselines where
// exactness matters more than scale.
struct ExactSolverLimits {
    int max_m = 20;
    int max_k = 10;
};

// --- Monroe -----------------------------------------------------------------

struct MonroeResult {
    Committee committee;
    std::vector<int> assignment; // voter -> assigned committee member
    std::int64_t value = 0;      // sum of assigned positions
};

namespace detail {

// Standard O(n^3) assignment with potentials; cost[i][j] are small ints.
inline std::int64_t hungarian(const std::vector<std::vector<int>>& cost,
                              std::vector<int>& row_of_col) {
    const int n = static_cast<int>(cost.size());
    const std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
    std::vector<std::int64_t> u(n + 1, 0), v(n + 1, 0), minv(n + 1, 0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::fill(minv.begin(), minv.end(), inf);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            int i0 = p[j0], j1 = 0;
            std::int64_t delta = inf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                std::int64_t cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) { minv[j] = cur; way[j] = j0; }
                if (minv[j] < delta) { delta = minv[j]; j1 = j; }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) { u[p[j]] += delta; v[j] -= delta; }
                else minv[j] -= delta;
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }
    row_of_col.assign(n, -1);
    std::int64_t total = 0;
    for (int j = 1; j <= n; ++j) {
        row_of_col[j - 1] = p[j] - 1;
        total += cost[p[j] - 1][j - 1];
    }
    return total;
}

template <typename Fn>
void for_each_committee(int m, int k, Fn&& fn) {
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        fn(pick);
        int i = k - 1;
        while (i >= 0 && pick[i] == m - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

} // namespace detail

// Exact Monroe optimum: enumerate committees in canonical order, solve the
// balanced assignment by min-cost matching, keep the first minimum.
inline MonroeResult monroe(const Election& e, ExactSolverLimits limits = {}) {
    e.validate();
    if (!e.is_strict()) throw InputError("monroe: requires strict preferences");
    if (e.n() % e.k != 0)
        throw InputError("monroe: n/k must be integral; expand_election first");
    if (e.m() > limits.max_m || e.k > limits.max_k)
        throw InputError("monroe: instance exceeds the exact-solver gate");
    const int per = e.n() / e.k;
    MonroeResult best;
    best.value = std::numeric_limits<std::int64_t>::max();
    std::vector<std::vector<int>> cost(e.n(), std::vector<int>(e.n()));
    detail::for_each_committee(e.m(), e.k, [&](const std::vector<int>& w) {
        // relaxed bound: ignore the balance constraint
        std::int64_t relaxed = 0;
        for (int v = 0; v < e.n(); ++v) {
            int m0 = std::numeric_limits<int>::max();
            for (int c : w) m0 = std::min(m0, e.voters[v].class_of[c] + 1);
            relaxed += m0;
        }
        if (relaxed >= best.value) return;
        for (int v = 0; v < e.n(); ++v)
            for (int slot = 0; slot < e.n(); ++slot)
                cost[v][slot] = e.voters[v].class_of[w[slot / per]] + 1;
        std::vector<int> row_of_col;
        std::int64_t value = detail::hungarian(cost, row_of_col);
        if (value < best.value) {
            best.value = value;
            best.committee = w;
            best.assignment.assign(e.n(), -1);
            for (int slot = 0; slot < e.n(); ++slot)
                best.assignment[row_of_col[slot]] = w[slot / per];
        }
    });
    return best;
}

// --- STV --------------------------------------------------------------------

struct StvEvent {
    enum class Kind { Elected, Eliminated };
    Kind kind = Kind::Eliminated;
    int candidate = -1;
    std::int64_t top_votes = 0;
};

struct StvResult {
    Committee committee;
    std::vector<int> elected_in_order;
    std::vector<StvEvent> trace;
    std::int64_t quota = 0;
};

// Sequential quota-and-transfer: the quota floor(n/(k+1))+1 is fixed for
// the whole run; electing a candidate deactivates exactly quota of its
// supporters, lowest voter indices first.
inline StvResult stv(const Election& e) {
    e.validate();
    if (!e.is_strict()) throw InputError("stv: requires strict preferences");
    StvResult res;
    res.quota = e.n() / (e.k + 1) + 1;
    std::vector<bool> removed(e.m(), false), active(e.n(), true);
    auto top_alive = [&](int v) {
        for (const auto& cls : e.voters[v].classes)
            if (!removed[cls[0]]) return cls[0];
        return -1;
    };
    while (static_cast<int>(res.elected_in_order.size()) < e.k) {
        std::vector<std::int64_t> count(e.m(), 0);
        bool any_alive = false;
        for (int c = 0; c < e.m(); ++c) any_alive = any_alive || !removed[c];
        if (!any_alive) break;
        for (int v = 0; v < e.n(); ++v) {
            if (!active[v]) continue;
            int t = top_alive(v);
            if (t >= 0) ++count[t];
        }
        int winner = -1;
        for (int c = 0; c < e.m(); ++c)
            if (!removed[c] && count[c] >= res.quota) { winner = c; break; }
        if (winner >= 0) {
            res.trace.push_back({StvEvent::Kind::Elected, winner, count[winner]});
            res.elected_in_order.push_back(winner);
            std::int64_t left = res.quota;
            for (int v = 0; v < e.n() && left > 0; ++v)
                if (active[v] && top_alive(v) == winner) {
                    active[v] = false;
                    --left;
                }
            removed[winner] = true;
            continue;
        }
        int loser = -1;
        for (int c = 0; c < e.m(); ++c) {
            if (removed[c]) continue;
            if (loser == -1 || count[c] < count[loser]) loser = c;
        }
        res.trace.push_back({StvEvent::Kind::Eliminated, loser, count[loser]});
        removed[loser] = true;
    }
    res.committee = make_committee(res.elected_in_order);
    return res;
}

// --- PAV --------------------------------------------------------------------

struct PavResult {
    Committee committee;
    Rat score;
};

// Exact optimum over size-k committees with a submodular pruning bound;
// ties resolve to the canonically first committee.
inline PavResult pav(const Election& e, ExactSolverLimits limits = {}) {
    e.validate();
    if (!e.is_approval()) throw InputError("pav: requires approval preferences");
    if (e.m() > limits.max_m || e.k > limits.max_k)
        throw InputError("pav: instance exceeds the exact-solver gate");
    std::vector<std::vector<int>> approvers(e.m());
    for (int v = 0; v < e.n(); ++v)
        for (int c : e.voters[v].top_class()) approvers[c].push_back(v);

    PavResult best;
    best.score = Rat(-1);
    std::vector<int> chosen;
    std::vector<int> hits(e.n(), 0);
    Rat score;

    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(chosen.size()) == e.k) {
            if (score > best.score) {
                best.score = score;
                best.committee = chosen;
            }
            return;
        }
        int need = e.k - static_cast<int>(chosen.size());
        if (e.m() - next < need) return;
        // marginals only shrink as the set grows, so the top `need`
        // current marginals bound every completion
        std::vector<Rat> gains;
        for (int c = next; c < e.m(); ++c) {
            Rat g;
            for (int v : approvers[c]) g += Rat(1, hits[v] + 1);
            gains.push_back(g);
        }
        std::vector<Rat> sorted = gains;
        std::sort(sorted.begin(), sorted.end(), [](const Rat& a, const Rat& b) { return b < a; });
        Rat bound = score;
        for (int i = 0; i < need; ++i) bound += sorted[i];
        if (!(bound > best.score)) return;
        for (int c = next; c < e.m(); ++c) {
            if (e.m() - c < need) break;
            const Rat& g = gains[c - next];
            chosen.push_back(c);
            for (int v : approvers[c]) ++hits[v];
            score += g;
            rec(c + 1);
            score -= g;
            for (int v : approvers[c]) --hits[v];
            chosen.pop_back();
        }
    };
    rec(0);
    return best;
}

// --- Method of equal shares ---------------------------------------------------

struct EqualSharesRound {
    int candidate = -1;
    Rat rho;
};

struct EqualSharesResult {
    Committee committee;
    std::vector<int> elected_in_order;
    std::vector<EqualSharesRound> rounds;
    std::vector<Rat> final_budgets;
    bool complete = false; // exactly k members elected
};

// Every voter starts with one dollar, a seat costs n/k; per round the
// affordable candidate with the lowest per-voter payment wins. No
// completion phase: the committee may end up smaller than k.
inline EqualSharesResult equal_shares(const Election& e) {
    e.validate();
    if (!e.is_approval()) throw InputError("equal_shares: requires approval preferences");
    const Rat price(e.n(), e.k);
    std::vector<Rat> budget(e.n(), Rat(1));
    std::vector<bool> elected(e.m(), false);
    std::vector<std::vector<int>> approvers(e.m());
    for (int v = 0; v < e.n(); ++v)
        for (int c : e.voters[v].top_class()) approvers[c].push_back(v);

    EqualSharesResult res;
    while (true) {
        int best_c = -1;
        Rat best_rho;
        for (int c = 0; c < e.m(); ++c) {
            if (elected[c] || approvers[c].empty()) continue;
            std::vector<Rat> b;
            Rat total;
            for (int v : approvers[c]) {
                b.push_back(budget[v]);
                total += budget[v];
            }
            if (total < price) continue;
            std::sort(b.begin(), b.end());
            // lowest rho with sum(min(b_i, rho)) = price: walk the budgets
            // in ascending order, capping ever more of them; total >= price
            // guarantees the walk terminates with a valid rho
            Rat prefix;
            const int s = static_cast<int>(b.size());
            Rat rho;
            for (int t = 0; t < s; ++t) {
                Rat cand = (price - prefix) / Rat(s - t);
                if (!(cand > b[t])) { rho = cand; break; }
                prefix += b[t];
            }
            if (best_c == -1 || rho < best_rho) {
                best_c = c;
                best_rho = rho;
            }
        }
        if (best_c == -1) break;
        elected[best_c] = true;
        for (int v : approvers[best_c])
            budget[v] -= budget[v] < best_rho ? budget[v] : best_rho;
        res.elected_in_order.push_back(best_c);
        res.rounds.push_back({best_c, best_rho});
    }
    res.committee = make_committee(res.elected_in_order);
    res.final_budgets = std::move(budget);
    res.complete = static_cast<int>(res.committee.size()) == e.k;
    return res;
}

// --- representative phase and median phase -----------------------------------

// Processing order for the representative phase: a voter sequence plus a
// candidate tie-break rank (from the mixed order's candidate part, or
// canonical when only a voter order is given).
struct SelectionOrder {
    std::vector<int> voters;
    std::vector<int> candidate_rank;

    static SelectionOrder from_mixed(const Election& e, const MixedOrder& mo) {
        SelectionOrder o;
        o.voters = mo.voter_part();
        check_permutation(o.voters, e.n(), "selection order (voters)");
        std::vector<int> cpart = mo.candidate_part();
        check_permutation(cpart, e.m(), "selection order (candidates)");
        o.candidate_rank.assign(e.m(), 0);
        for (int p = 0; p < e.m(); ++p) o.candidate_rank[cpart[p]] = p;
        return o;
    }
    static SelectionOrder from_voters(const Election& e, const VoterOrder& vo) {
        SelectionOrder o;
        o.voters = vo.order;
        check_permutation(o.voters, e.n(), "selection order (voters)");
        o.candidate_rank.resize(e.m());
        for (int c = 0; c < e.m(); ++c) o.candidate_rank[c] = c;
        return o;
    }
};

struct RepresentativeAssignment {
    std::vector<int> representative; // voter index -> candidate
    std::vector<int> units;          // candidate -> voters represented
    FractionalCommittee fractional;  // units * k/n per candidate
    SelectionOrder order;
};

// Each voter hands a k/n probability portion to her best not-yet-elected
// candidate, ties broken by the candidate part of the order.
inline RepresentativeAssignment best_representative(const Election& e,
                                                    const SelectionOrder& order) {
    e.validate();
    if (e.n() % e.k != 0)
        throw InputError("best_representative: n/k must be integral; expand_election first");
    const int full = e.n() / e.k;
    RepresentativeAssignment out;
    out.order = order;
    out.representative.assign(e.n(), -1);
    out.units.assign(e.m(), 0);
    for (int v : order.voters) {
        const WeakRanking& r = e.voters[v];
        int pick = -1;
        for (int c = 0; c < e.m(); ++c) {
            if (out.units[c] >= full) continue;
            if (pick == -1 || r.class_of[c] < r.class_of[pick] ||
                (r.class_of[c] == r.class_of[pick] &&
                 order.candidate_rank[c] < order.candidate_rank[pick]))
                pick = c;
        }
        if (pick == -1) throw InvariantError("best_representative: no unelected candidate");
        out.representative[v] = pick;
        ++out.units[pick];
    }
    out.fractional.mass.resize(e.m());
    for (int c = 0; c < e.m(); ++c)
        out.fractional.mass[c] = Rat(static_cast<std::int64_t>(out.units[c]) * e.k, e.n());
    return out;
}

struct MedianRuleResult {
    Committee committee;
    std::vector<int> median_voters;
    bool distinct = false; // k distinct candidates elected
};

// Standalone median phase: the top choice of every (q-1)*n/k+1-th voter
// along the order; duplicates collapse.
inline MedianRuleResult median_rule(const Election& e, const VoterOrder& vo) {
    e.validate();
    check_permutation(vo.order, e.n(), "median_rule order");
    if (e.n() % e.k != 0)
        throw InputError("median_rule: n/k must be integral; expand_election first");
    const int step = e.n() / e.k;
    MedianRuleResult res;
    std::vector<int> picks;
    for (int q = 0; q < e.k; ++q) {
        int voter = vo.order[q * step];
        res.median_voters.push_back(voter);
        picks.push_back(e.voters[voter].top_class().front());
    }
    res.committee = make_committee(picks);
    res.distinct = static_cast<int>(res.committee.size()) == e.k;
    return res;
}

struct CommitteeCoreResult {
    Committee committee;
    Committee fully_elected;          // the phase-one certainties
    Committee median_picks;           // phase-two additions
    Committee filler;                 // canonical completion for orphaned seats
    RepresentativeAssignment phase1;
    std::vector<int> surviving_voters; // induced order after removal
    std::vector<int> anchor_voters;    // survivors still holding an approved pick
    std::vector<int> median_voters;    // voter indices, in the induced order
    int expansion = 1;
    Election election; // the election the result refers to (possibly expanded)
};

namespace detail {

inline CommitteeCoreResult committee_core_integral(const Election& e,
                                                   const SelectionOrder& order) {
    CommitteeCoreResult res;
    res.election = e;
    res.phase1 = best_representative(e, order);
    const int full = e.n() / e.k;
    std::vector<bool> in_w1(e.m(), false);
    std::vector<int> w1;
    for (int c = 0; c < e.m(); ++c)
        if (res.phase1.units[c] == full) {
            in_w1[c] = true;
            w1.push_back(c);
        }
    for (int v : order.voters)
        if (!in_w1[res.phase1.representative[v]]) res.surviving_voters.push_back(v);

    // A surviving voter whose representative fell into her bottom class has
    // run out of acceptable candidates: her portion sits on an arbitrary
    // leftover and she must not anchor a median block, or the block's seat
    // is wasted on a candidate nobody wants (with strict preferences this
    // never triggers once any seat remains open).
    for (int v : res.surviving_voters) {
        const WeakRanking& r = e.voters[v];
        int rep = res.phase1.representative[v];
        if (r.class_count() == 1 || !r.in_bottom(rep)) res.anchor_voters.push_back(v);
    }

    const int k2 = e.k - static_cast<int>(w1.size());

    // With strict preferences the median phase needs the residual election
    // (winning candidates removed) to stay single-top-crossing under the
    // phase-2 order. An induced single-crossing order qualifies as is;
    // other orders are re-certified and the survivors resorted when the
    // induced order fails.
    if (e.is_strict() && k2 >= 2 && res.anchor_voters.size() > 1) {
        std::vector<int> remaining;
        for (int c = 0; c < e.m(); ++c)
            if (!in_w1[c]) remaining.push_back(c);
        Election residual_all = induce_candidates(e, remaining);
        Election residual;
        residual.candidates = residual_all.candidates;
        residual.k = k2;
        for (int v : res.anchor_voters) {
            residual.voters.push_back(residual_all.voters[v]);
            residual.voter_ids.push_back(residual_all.voter_ids[v]);
        }
        std::vector<int> induced(residual.n());
        for (int i = 0; i < residual.n(); ++i) induced[i] = i;
        if (verify_stc(residual, VoterOrder{induced})) {
            auto witness = find_stc_witness(residual);
            if (!witness)
                throw InvariantError(
                    "committee_core: residual election lost its crossing structure and no "
                    "replacement order was found; the instance is not recursively covered");
            std::vector<int> resorted;
            for (int p : witness->order) resorted.push_back(res.anchor_voters[p]);
            res.anchor_voters = std::move(resorted);
        }
    }
    std::vector<int> w2;
    for (int q = 0; q < k2 && q * full < static_cast<int>(res.anchor_voters.size()); ++q) {
        int voter = res.anchor_voters[static_cast<std::size_t>(q) * full];
        res.median_voters.push_back(voter);
        w2.push_back(res.phase1.representative[voter]);
    }
    res.fully_elected = make_committee(w1);
    res.median_picks = make_committee(w2);
    if (res.median_picks.size() != w2.size())
        throw InvariantError(
            "committee_core: duplicate median picks; the supplied order does not certify "
            "a covered domain");
    std::vector<int> all = w1;
    all.insert(all.end(), w2.begin(), w2.end());
    res.committee = make_committee(all);
    if (static_cast<int>(res.committee.size()) != static_cast<int>(w1.size() + w2.size()))
        throw InvariantError(
            "committee_core: median picks collide with fully elected candidates");
    for (int c = 0; c < e.m() && static_cast<int>(res.committee.size()) < e.k; ++c)
        if (!committee_contains(res.committee, c)) {
            res.filler.push_back(c);
            res.committee.insert(std::lower_bound(res.committee.begin(), res.committee.end(), c),
                                 c);
        }
    if (static_cast<int>(res.committee.size()) != e.k)
        throw InvariantError("committee_core: could not assemble k distinct members");
    return res;
}

} // namespace detail

// Two-phase pipeline: representative phase, keep fully elected candidates,
// then the median phase on the surviving voters picks their
// representatives. The order must certify LC (approval) or come from an
// STC-style voter order (strict).
inline CommitteeCoreResult committee_core(const Election& e, const SelectionOrder& order,
                                          bool auto_expand = false) {
    e.validate();
    if (e.n() % e.k != 0) {
        if (!auto_expand)
            throw InputError("committee_core: n/k must be integral; "
                             "expand_election first or pass auto_expand");
        Election ex = expand_election(e);
        SelectionOrder lifted;
        lifted.candidate_rank = order.candidate_rank;
        for (int v : order.voters)
            for (int t = 0; t < e.k; ++t) lifted.voters.push_back(v * e.k + t);
        CommitteeCoreResult res = detail::committee_core_integral(ex, lifted);
        res.expansion = e.k;
        return res;
    }
    return detail::committee_core_integral(e, order);
}

} // namespace corelect
