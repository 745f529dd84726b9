// Core election model: weak rankings, committees, fractional committees
// and the per-voter lexicographic committee comparison used everywhere else.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "corelect/rational.hpp"

namespace corelect {

// Thrown on invalid caller input (unknown names, malformed files, broken
// preconditions). The CLI maps this to exit code 1.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a postcondition the algorithms guarantee for certified
// inputs is observed to fail, which signals an invalid certificate.
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

// A weak order over candidates, stored as indifference classes from best
// to worst. `class_of[c]` is the 0-based class index of candidate c.
struct WeakRanking {
    std::vector<std::vector<int>> classes;
    std::vector<int> class_of;

    int class_count() const { return static_cast<int>(classes.size()); }

    static WeakRanking from_classes(std::vector<std::vector<int>> classes, int m) {
        WeakRanking r;
        r.class_of.assign(m, -1);
        for (std::size_t j = 0; j < classes.size(); ++j) {
            if (classes[j].empty())
                throw InputError("weak ranking: empty indifference class");
            std::sort(classes[j].begin(), classes[j].end());
            for (int c : classes[j]) {
                if (c < 0 || c >= m)
                    throw InputError("weak ranking: candidate index out of range");
                if (r.class_of[c] != -1)
                    throw InputError("weak ranking: duplicate candidate");
                r.class_of[c] = static_cast<int>(j);
            }
        }
        for (int c = 0; c < m; ++c)
            if (r.class_of[c] == -1)
                throw InputError("weak ranking: candidate missing from all classes");
        r.classes = std::move(classes);
        return r;
    }

    bool strictly_prefers(int a, int b) const { return class_of[a] < class_of[b]; }
    bool weakly_prefers(int a, int b) const { return class_of[a] <= class_of[b]; }
    bool indifferent(int a, int b) const { return class_of[a] == class_of[b]; }

    const std::vector<int>& top_class() const { return classes.front(); }
    const std::vector<int>& bottom_class() const { return classes.back(); }
    bool in_top(int c) const { return class_of[c] == 0; }
    bool in_bottom(int c) const { return class_of[c] == class_count() - 1; }

    bool operator==(const WeakRanking& o) const { return classes == o.classes; }
};

struct Election {
    std::vector<std::string> candidates; // declaration order is canonical
    std::vector<std::string> voter_ids;  // defaults to "1".."n"
    std::vector<WeakRanking> voters;
    int k = 1;

    int m() const { return static_cast<int>(candidates.size()); }
    int n() const { return static_cast<int>(voters.size()); }

    bool is_approval() const {
        for (const auto& v : voters)
            if (v.class_count() > 2) return false;
        return true;
    }
    bool is_strict() const {
        for (const auto& v : voters)
            if (v.class_count() != m()) return false;
        return true;
    }

    int candidate_index(const std::string& name) const {
        for (int c = 0; c < m(); ++c)
            if (candidates[c] == name) return c;
        throw InputError("unknown candidate: " + name);
    }

    void validate() const {
        if (m() < 1) throw InputError("election: no candidates");
        if (n() < 1) throw InputError("election: no voters");
        if (k < 1 || k > m()) throw InputError("election: k out of range");
        if (voter_ids.size() != voters.size())
            throw InputError("election: voter id count mismatch");
        for (const auto& v : voters)
            if (static_cast<int>(v.class_of.size()) != m())
                throw InputError("election: ranking over wrong candidate set");
    }

    bool operator==(const Election& o) const {
        return candidates == o.candidates && voter_ids == o.voter_ids &&
               voters == o.voters && k == o.k;
    }
};

// A (possibly partial) committee as a canonically sorted set of candidate
// indices. Rules other than equal shares produce exactly k members.
using Committee = std::vector<int>;

inline Committee make_committee(std::vector<int> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return members;
}

inline bool committee_contains(const Committee& w, int c) {
    return std::binary_search(w.begin(), w.end(), c);
}

struct FractionalCommittee {
    std::vector<Rat> mass; // one entry per candidate, each in [0,1]

    Rat size() const {
        Rat s;
        for (const auto& x : mass) s += x;
        return s;
    }

    static FractionalCommittee indicator(const Committee& w, int m) {
        FractionalCommittee p;
        p.mass.assign(m, Rat(0));
        for (int c : w) p.mass[c] = Rat(1);
        return p;
    }

    void validate() const {
        for (const auto& x : mass)
            if (x < Rat(0) || x > Rat(1))
                throw InputError("fractional committee: mass outside [0,1]");
    }
};

enum class LexOrdering {
    FirstStrictlyPreferred,
    SecondStrictlyPreferred,
    Equivalent,
};

inline LexOrdering flip(LexOrdering v) {
    switch (v) {
        case LexOrdering::FirstStrictlyPreferred: return LexOrdering::SecondStrictlyPreferred;
        case LexOrdering::SecondStrictlyPreferred: return LexOrdering::FirstStrictlyPreferred;
        default: return LexOrdering::Equivalent;
    }
}

// 1-based position of `candidate` in voter's weak ranking.
inline int position_of(const Election& e, int voter, int candidate) {
    if (voter < 0 || voter >= e.n()) throw InputError("position_of: unknown voter");
    if (candidate < 0 || candidate >= e.m()) throw InputError("position_of: unknown candidate");
    return e.voters[voter].class_of[candidate] + 1;
}

// Lexicographic committee comparison for one voter: the first indifference
// class whose intersection sizes differ decides.
inline LexOrdering lex_compare(const Election& e, int voter,
                               const Committee& a, const Committee& b) {
    if (voter < 0 || voter >= e.n()) throw InputError("lex_compare: unknown voter");
    const WeakRanking& r = e.voters[voter];
    const int d = r.class_count();
    std::vector<int> ca(d, 0), cb(d, 0);
    for (int c : a) {
        if (c < 0 || c >= e.m()) throw InputError("lex_compare: unknown candidate");
        ++ca[r.class_of[c]];
    }
    for (int c : b) {
        if (c < 0 || c >= e.m()) throw InputError("lex_compare: unknown candidate");
        ++cb[r.class_of[c]];
    }
    for (int j = 0; j < d; ++j) {
        if (ca[j] > cb[j]) return LexOrdering::FirstStrictlyPreferred;
        if (ca[j] < cb[j]) return LexOrdering::SecondStrictlyPreferred;
    }
    return LexOrdering::Equivalent;
}

// Fractional variant: class masses compared exactly, first difference decides.
inline LexOrdering lex_compare_fractional(const Election& e, int voter,
                                          const FractionalCommittee& p,
                                          const FractionalCommittee& q) {
    if (voter < 0 || voter >= e.n()) throw InputError("lex_compare_fractional: unknown voter");
    if (static_cast<int>(p.mass.size()) != e.m() || static_cast<int>(q.mass.size()) != e.m())
        throw InputError("lex_compare_fractional: wrong candidate count");
    const WeakRanking& r = e.voters[voter];
    for (const auto& cls : r.classes) {
        Rat mp, mq;
        for (int c : cls) { mp += p.mass[c]; mq += q.mass[c]; }
        if (mp > mq) return LexOrdering::FirstStrictlyPreferred;
        if (mp < mq) return LexOrdering::SecondStrictlyPreferred;
    }
    return LexOrdering::Equivalent;
}

// Induced subelection on a candidate subset: kept candidates retain their
// relative declaration order, rankings are restricted, empty classes drop.
inline Election induce_candidates(const Election& e, const std::vector<int>& keep) {
    Election out;
    std::vector<int> remap(e.m(), -1);
    for (int c : keep) {
        if (c < 0 || c >= e.m() || remap[c] == 0)
            throw InputError("induce_candidates: bad candidate subset");
        remap[c] = 0;
    }
    int next = 0;
    for (int c = 0; c < e.m(); ++c)
        if (remap[c] == 0) {
            remap[c] = next++;
            out.candidates.push_back(e.candidates[c]);
        }
    if (next == 0) throw InputError("induce_candidates: empty candidate set");
    out.k = std::min(e.k, next);
    out.voter_ids = e.voter_ids;
    for (const auto& v : e.voters) {
        std::vector<std::vector<int>> classes;
        for (const auto& cls : v.classes) {
            std::vector<int> kept;
            for (int c : cls)
                if (remap[c] >= 0) kept.push_back(remap[c]);
            if (!kept.empty()) classes.push_back(std::move(kept));
        }
        out.voters.push_back(WeakRanking::from_classes(std::move(classes), next));
    }
    return out;
}

// Replicates every voter k times, copies adjacent, so that n/k becomes
// integral. Voter i's copies land at indices i*k .. i*k+k-1.
inline Election expand_election(const Election& e) {
    Election out;
    out.candidates = e.candidates;
    out.k = e.k;
    out.voters.reserve(static_cast<std::size_t>(e.n()) * e.k);
    out.voter_ids.reserve(out.voters.capacity());
    for (int i = 0; i < e.n(); ++i) {
        for (int t = 0; t < e.k; ++t) {
            out.voters.push_back(e.voters[i]);
            out.voter_ids.push_back(e.voter_ids[i] + (e.k > 1 ? "_" + std::to_string(t + 1) : ""));
        }
    }
    return out;
}

} // namespace corelect
