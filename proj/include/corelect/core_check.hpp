// Exact core-membership checking under the lexicographic extension,
// discrete-deviation checking against fractional committees, and the
// polynomial local-stability checker for the max extension.

#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "corelect/election.hpp"

namespace corelect {

enum class ThresholdMode { Exact, Ceil };

// A coalition S and deviation T certifying a core violation. Exact mode
// requires |T|*n <= k*|S|, ceil mode (|T|-1)*n < k*|S|; all arithmetic
// stays in integers.
struct BlockingWitness {
    std::vector<int> coalition; // voter indices, ascending
    std::vector<int> deviation; // candidate indices, ascending
    ThresholdMode mode = ThresholdMode::Exact;
};

struct CoreVerdict {
    bool in_core = true;
    std::optional<BlockingWitness> witness;
    int max_deviation_size = 0; // largest |T| examined
};

inline bool threshold_met(ThresholdMode mode, std::int64_t t, std::int64_t s,
                          std::int64_t n, std::int64_t k) {
    if (s == 0) return false;
    if (mode == ThresholdMode::Exact) return t * n <= k * s;
    return (t - 1) * n < k * s;
}

namespace detail {

// Ascending-size, then lexicographic enumeration of candidate subsets.
// Calls fn(T) for every subset with 1 <= |T| <= max_size; fn returns true
// to stop early.
template <typename Fn>
bool for_each_subset_by_size(int m, int max_size, Fn&& fn) {
    std::vector<int> pick;
    for (int size = 1; size <= max_size; ++size) {
        pick.assign(size, 0);
        for (int i = 0; i < size; ++i) pick[i] = i;
        if (size > m) break;
        while (true) {
            if (fn(pick)) return true;
            int i = size - 1;
            while (i >= 0 && pick[i] == m - size + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return false;
}

// Per-voter comparison of a small deviation set T against a fixed
// committee W, with precomputed state so the T-enumeration loop stays
// hot. Approval profiles over at most 64 candidates compare approval
// counts through bitmask popcounts; everything else walks the classes.
class LexAgainstFixed {
public:
    LexAgainstFixed(const Election& e, const Committee& w) : e_(e) {
        w_size_ = static_cast<int>(w.size());
        approval_fast_ = e.m() <= 64 && e.is_approval();
        if (approval_fast_) {
            approved_.assign(e.n(), 0);
            w_top_.assign(e.n(), 0);
            for (int i = 0; i < e.n(); ++i) {
                for (int c : e.voters[i].top_class())
                    approved_[i] |= std::uint64_t{1} << c;
                for (int c : w)
                    if (e.voters[i].in_top(c)) ++w_top_[i];
            }
            return;
        }
        w_counts_.resize(e.n());
        for (int i = 0; i < e.n(); ++i) {
            const WeakRanking& r = e.voters[i];
            w_counts_[i].assign(r.class_count(), 0);
            for (int c : w) ++w_counts_[i][r.class_of[c]];
        }
        scratch_.assign(e.m() + 1, 0);
    }

    void begin_deviation(const std::vector<int>& t) {
        t_ = &t;
        if (approval_fast_) {
            t_mask_ = 0;
            for (int c : t) t_mask_ |= std::uint64_t{1} << c;
        }
    }

    // true iff voter strictly lex-prefers the current T to W
    bool prefers(int voter) {
        if (approval_fast_) {
            int t_top = std::popcount(t_mask_ & approved_[voter]);
            if (t_top != w_top_[voter]) return t_top > w_top_[voter];
            return static_cast<int>(t_->size()) > w_size_;
        }
        const WeakRanking& r = e_.voters[voter];
        const auto& wc = w_counts_[voter];
        for (int c : *t_) ++scratch_[r.class_of[c]];
        bool result = false;
        for (int j = 0; j < r.class_count(); ++j) {
            if (scratch_[j] != wc[j]) {
                result = scratch_[j] > wc[j];
                break;
            }
        }
        for (int c : *t_) --scratch_[r.class_of[c]];
        return result;
    }

private:
    const Election& e_;
    bool approval_fast_ = false;
    int w_size_ = 0;
    std::vector<std::uint64_t> approved_;
    std::vector<int> w_top_;
    std::uint64_t t_mask_ = 0;
    const std::vector<int>* t_ = nullptr;
    std::vector<std::vector<int>> w_counts_;
    std::vector<int> scratch_;
};

// Same role for fractional targets: voter strictly lex-prefers the
// indicator of T to p.
class FracAgainstFixed {
public:
    FracAgainstFixed(const Election& e, const FractionalCommittee& p) : e_(e) {
        p_class_.resize(e.n());
        for (int i = 0; i < e.n(); ++i) {
            const WeakRanking& r = e.voters[i];
            p_class_[i].resize(r.class_count());
            for (int j = 0; j < r.class_count(); ++j) {
                Rat s;
                for (int c : r.classes[j]) s += p.mass[c];
                p_class_[i][j] = s;
            }
        }
        scratch_.assign(e.m() + 1, 0);
    }

    void begin_deviation(const std::vector<int>& t) { t_ = &t; }

    bool prefers(int voter) {
        const WeakRanking& r = e_.voters[voter];
        for (int c : *t_) ++scratch_[r.class_of[c]];
        bool result = false;
        for (int j = 0; j < r.class_count(); ++j) {
            Rat tj(scratch_[j]);
            if (tj != p_class_[voter][j]) {
                result = tj > p_class_[voter][j];
                break;
            }
        }
        for (int c : *t_) --scratch_[r.class_of[c]];
        return result;
    }

private:
    const Election& e_;
    std::vector<std::vector<Rat>> p_class_;
    std::vector<int> scratch_;
    const std::vector<int>* t_ = nullptr;
};

template <typename Pref>
CoreVerdict scan_deviations(const Election& e, Pref& pref, ThresholdMode mode, int max_t) {
    CoreVerdict verdict;
    verdict.max_deviation_size = max_t;
    std::vector<int> supporters;
    for_each_subset_by_size(e.m(), max_t, [&](const std::vector<int>& t) {
        pref.begin_deviation(t);
        int s = 0;
        for (int i = 0; i < e.n(); ++i)
            if (pref.prefers(i)) ++s;
        if (!threshold_met(mode, static_cast<int>(t.size()), s, e.n(), e.k))
            return false;
        supporters.clear();
        for (int i = 0; i < e.n(); ++i)
            if (pref.prefers(i)) supporters.push_back(i);
        verdict.in_core = false;
        verdict.witness = BlockingWitness{supporters, t, mode};
        return true;
    });
    return verdict;
}

} // namespace detail

// Enumerates deviations T by ascending size, then canonical set order, and
// reports the first (S(T), T) meeting the mode's threshold. Exact when
// max_t covers k (the default).
inline CoreVerdict check_core(const Election& e, const Committee& w,
                              ThresholdMode mode = ThresholdMode::Exact,
                              int max_t = -1) {
    e.validate();
    for (int c : w)
        if (c < 0 || c >= e.m()) throw InputError("check_core: unknown committee member");
    if (max_t < 0) max_t = e.k;
    max_t = std::min(max_t, e.k);
    detail::LexAgainstFixed pref(e, w);
    return detail::scan_deviations(e, pref, mode, max_t);
}

// Necessary-condition check for the fractional core: only discrete
// deviations (indicator committees) are enumerated. A violation refutes
// fractional core membership; an in-core verdict certifies the discrete
// condition only.
inline CoreVerdict check_fractional_deviation(const Election& e,
                                              const FractionalCommittee& p,
                                              ThresholdMode mode = ThresholdMode::Exact,
                                              int max_t = -1) {
    e.validate();
    p.validate();
    if (static_cast<int>(p.mass.size()) != e.m())
        throw InputError("check_fractional_deviation: wrong candidate count");
    if (max_t < 0) max_t = e.k;
    max_t = std::min(max_t, e.k);
    detail::FracAgainstFixed pref(e, p);
    return detail::scan_deviations(e, pref, mode, max_t);
}

// Re-validation of a reported witness, independent of the search path.
inline bool validate_witness(const Election& e, const Committee& w,
                             const BlockingWitness& bw) {
    if (bw.coalition.empty() || bw.deviation.empty()) return false;
    if (!threshold_met(bw.mode, static_cast<int>(bw.deviation.size()),
                       static_cast<int>(bw.coalition.size()), e.n(), e.k))
        return false;
    for (int i : bw.coalition)
        if (lex_compare(e, i, bw.deviation, w) != LexOrdering::FirstStrictlyPreferred)
            return false;
    return true;
}

inline bool validate_fractional_witness(const Election& e, const FractionalCommittee& p,
                                        const BlockingWitness& bw) {
    if (bw.coalition.empty() || bw.deviation.empty()) return false;
    if (!threshold_met(bw.mode, static_cast<int>(bw.deviation.size()),
                       static_cast<int>(bw.coalition.size()), e.n(), e.k))
        return false;
    FractionalCommittee ind = FractionalCommittee::indicator(bw.deviation, e.m());
    for (int i : bw.coalition)
        if (lex_compare_fractional(e, i, ind, p) != LexOrdering::FirstStrictlyPreferred)
            return false;
    return true;
}

struct LocalStabilityVerdict {
    bool stable = true;
    int candidate = -1;          // violating candidate, canonical-first
    std::vector<int> coalition;  // voters strictly preferring it to all of W
    std::int64_t quota = 0;
};

// Local stability: some c outside W preferred to every member of W by at
// least `quota` voters. O(n*m*k); quota defaults to ceil(n/k).
inline LocalStabilityVerdict check_local_stability(const Election& e, const Committee& w,
                                                   std::int64_t quota = -1) {
    e.validate();
    for (int c : w)
        if (c < 0 || c >= e.m()) throw InputError("check_local_stability: unknown committee member");
    if (quota < 0) quota = (e.n() + e.k - 1) / e.k;
    LocalStabilityVerdict v;
    v.quota = quota;
    for (int c = 0; c < e.m(); ++c) {
        if (committee_contains(w, c)) continue;
        std::vector<int> supporters;
        for (int i = 0; i < e.n(); ++i) {
            const WeakRanking& r = e.voters[i];
            bool beats_all = true;
            for (int wc : w)
                if (!r.strictly_prefers(c, wc)) { beats_all = false; break; }
            if (beats_all) supporters.push_back(i);
        }
        if (static_cast<std::int64_t>(supporters.size()) >= quota) {
            v.stable = false;
            v.candidate = c;
            v.coalition = std::move(supporters);
            return v;
        }
    }
    return v;
}

namespace detail {

// Max-extension comparison against a fixed committee: voter prefers T iff
// her best-ranked member of T sits strictly above her best of W.
class MaxAgainstFixed {
public:
    MaxAgainstFixed(const Election& e, const Committee& w) : e_(e) {
        best_w_.assign(e.n(), 0);
        for (int i = 0; i < e.n(); ++i) {
            const WeakRanking& r = e.voters[i];
            int best = r.class_count(); // sentinel below every class
            for (int c : w) best = std::min(best, r.class_of[c]);
            best_w_[i] = best;
        }
    }

    void begin_deviation(const std::vector<int>& t) { t_ = &t; }

    bool prefers(int voter) {
        const WeakRanking& r = e_.voters[voter];
        int best = r.class_count();
        for (int c : *t_) best = std::min(best, r.class_of[c]);
        return best < best_w_[voter];
    }

private:
    const Election& e_;
    std::vector<int> best_w_;
    const std::vector<int>* t_ = nullptr;
};

} // namespace detail

// Brute-force core check under the max extension.
inline CoreVerdict check_core_max(const Election& e, const Committee& w,
                                  ThresholdMode mode = ThresholdMode::Exact,
                                  int max_t = -1) {
    e.validate();
    for (int c : w)
        if (c < 0 || c >= e.m()) throw InputError("check_core_max: unknown committee member");
    if (max_t < 0) max_t = e.k;
    max_t = std::min(max_t, e.k);
    detail::MaxAgainstFixed pref(e, w);
    return detail::scan_deviations(e, pref, mode, max_t);
}

inline bool validate_max_witness(const Election& e, const Committee& w,
                                 const BlockingWitness& bw) {
    if (bw.coalition.empty() || bw.deviation.empty()) return false;
    if (!threshold_met(bw.mode, static_cast<int>(bw.deviation.size()),
                       static_cast<int>(bw.coalition.size()), e.n(), e.k))
        return false;
    for (int i : bw.coalition) {
        const WeakRanking& r = e.voters[i];
        int bt = r.class_count(), bw_ = r.class_count();
        for (int c : bw.deviation) bt = std::min(bt, r.class_of[c]);
        for (int c : w) bw_ = std::min(bw_, r.class_of[c]);
        if (!(bt < bw_)) return false;
    }
    return true;
}

// Per-committee deviation finding with a small size bound; used to give
// evidence of core emptiness where full committee enumeration is
// infeasible.
inline std::vector<std::pair<Committee, CoreVerdict>> find_empty_core_evidence(
    const Election& e, const std::vector<Committee>& committees, int max_t) {
    std::vector<std::pair<Committee, CoreVerdict>> out;
    out.reserve(committees.size());
    for (const auto& w : committees)
        out.emplace_back(w, check_core(e, w, ThresholdMode::Exact, max_t));
    return out;
}

} // namespace corelect
