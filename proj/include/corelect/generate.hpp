// Deterministic instance generators for restricted domains and the
// parameterized family with two universal top candidates over cloned
// Condorcet cycles (the empty-core construction).
//
// Determinism is language-independent: the only randomness source is the
// splitmix-style sequence
//   state += 0x9E3779B97F4A7C15
//   z = state; z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
//   z ^= z >> 27; z *= 0x94D049BB133111EB; z ^= z >> 31
// with `below(b) = next() % b`.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "corelect/domains.hpp"
#include "corelect/election.hpp"

namespace corelect {

struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

enum class GeneratorModel { Euclid1D, ViIntervals, CiIntervals, ImpartialStrict };

inline const char* model_name(GeneratorModel m) {
    switch (m) {
        case GeneratorModel::Euclid1D: return "euclid1d";
        case GeneratorModel::ViIntervals: return "vi-intervals";
        case GeneratorModel::CiIntervals: return "ci-intervals";
        case GeneratorModel::ImpartialStrict: return "impartial-strict";
    }
    return "?";
}

inline GeneratorModel model_from_name(const std::string& s) {
    if (s == "euclid1d") return GeneratorModel::Euclid1D;
    if (s == "vi-intervals") return GeneratorModel::ViIntervals;
    if (s == "ci-intervals") return GeneratorModel::CiIntervals;
    if (s == "impartial-strict") return GeneratorModel::ImpartialStrict;
    throw InputError("unknown generator model: " + s);
}

struct GeneratorSpec {
    GeneratorModel model = GeneratorModel::Euclid1D;
    int n = 1, m = 1, k = 1;
    std::uint64_t seed = 0;
};

struct GeneratedElection {
    Election election;
    std::map<DomainId, DomainCertificate> certificates;
};

namespace detail {

inline std::vector<std::string> numbered_names(const char* stem, int count) {
    std::vector<std::string> names;
    for (int i = 1; i <= count; ++i) names.push_back(stem + std::to_string(i));
    return names;
}

inline void default_ids(Election& e) {
    e.voter_ids.clear();
    for (int i = 1; i <= static_cast<int>(e.voters.size()); ++i)
        e.voter_ids.push_back(std::to_string(i));
}

inline GeneratedElection generate_euclid1d(const GeneratorSpec& spec) {
    SplitMix64 rng(spec.seed);
    const int n = spec.n, m = spec.m;
    const std::uint64_t spread = 4ull * (n + m);

    // candidates on distinct even integers, voters on half-odd rationals:
    // midpoints of candidate pairs are integers, so no voter is ever
    // equidistant to two candidates and every ranking is strict
    std::vector<std::uint64_t> cand_slots;
    std::vector<bool> used(spread, false);
    while (static_cast<int>(cand_slots.size()) < m) {
        std::uint64_t s = rng.below(spread);
        if (used[s]) continue;
        used[s] = true;
        cand_slots.push_back(s);
    }
    Embedding emb;
    for (std::uint64_t s : cand_slots) emb.candidate_coord.push_back(Rat(2 * static_cast<std::int64_t>(s)));
    for (int v = 0; v < n; ++v) {
        std::int64_t t = static_cast<std::int64_t>(rng.below(2 * spread));
        emb.voter_coord.push_back(Rat(2 * t + 1, 2));
    }

    GeneratedElection out;
    out.election.candidates = numbered_names("c", m);
    out.election.k = spec.k;
    for (int v = 0; v < n; ++v) {
        std::vector<int> order(m);
        for (int c = 0; c < m; ++c) order[c] = c;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            Rat da = emb.candidate_coord[a] - emb.voter_coord[v];
            if (da < Rat(0)) da = -da;
            Rat db = emb.candidate_coord[b] - emb.voter_coord[v];
            if (db < Rat(0)) db = -db;
            if (da != db) return da < db;
            // equidistant candidates break toward the smaller coordinate
            if (emb.candidate_coord[a] != emb.candidate_coord[b])
                return emb.candidate_coord[a] < emb.candidate_coord[b];
            return a < b;
        });
        std::vector<std::vector<int>> classes;
        for (int c : order) classes.push_back({c});
        out.election.voters.push_back(WeakRanking::from_classes(std::move(classes), m));
    }
    default_ids(out.election);

    std::vector<int> axis(m);
    for (int c = 0; c < m; ++c) axis[c] = c;
    std::sort(axis.begin(), axis.end(), [&](int a, int b) {
        if (emb.candidate_coord[a] != emb.candidate_coord[b])
            return emb.candidate_coord[a] < emb.candidate_coord[b];
        return a < b;
    });
    std::vector<int> vorder(n);
    for (int v = 0; v < n; ++v) vorder[v] = v;
    std::stable_sort(vorder.begin(), vorder.end(), [&](int a, int b) {
        if (emb.voter_coord[a] != emb.voter_coord[b]) return emb.voter_coord[a] < emb.voter_coord[b];
        return a < b;
    });
    out.certificates.emplace(DomainId::Euclid1D, emb);
    out.certificates.emplace(DomainId::SP, CandidateOrder{axis});
    out.certificates.emplace(DomainId::SC, VoterOrder{vorder});
    return out;
}

inline GeneratedElection generate_vi(const GeneratorSpec& spec) {
    SplitMix64 rng(spec.seed);
    const int n = spec.n, m = spec.m;
    std::vector<std::pair<int, int>> iv(m);
    for (int c = 0; c < m; ++c) {
        int l = static_cast<int>(rng.below(n));
        int r = l + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - l)));
        iv[c] = {l, r};
    }
    // widen an interval over any uncovered voter so every voter approves
    // at least one candidate and the interval structure survives
    for (int v = 0; v < n; ++v) {
        bool covered = false;
        for (int c = 0; c < m; ++c)
            if (iv[c].first <= v && v <= iv[c].second) covered = true;
        if (!covered) {
            auto& [l, r] = iv[v % m];
            l = std::min(l, v);
            r = std::max(r, v);
        }
    }
    GeneratedElection out;
    out.election.candidates = numbered_names("c", m);
    out.election.k = spec.k;
    for (int v = 0; v < n; ++v) {
        std::vector<int> top, rest;
        for (int c = 0; c < m; ++c)
            (iv[c].first <= v && v <= iv[c].second ? top : rest).push_back(c);
        std::vector<std::vector<int>> classes{top};
        if (!rest.empty()) classes.push_back(rest);
        out.election.voters.push_back(WeakRanking::from_classes(std::move(classes), m));
    }
    default_ids(out.election);
    std::vector<int> vorder(n);
    for (int v = 0; v < n; ++v) vorder[v] = v;
    out.certificates.emplace(DomainId::VI, VoterOrder{vorder});
    return out;
}

inline GeneratedElection generate_ci(const GeneratorSpec& spec) {
    SplitMix64 rng(spec.seed);
    const int n = spec.n, m = spec.m;
    GeneratedElection out;
    out.election.candidates = numbered_names("c", m);
    out.election.k = spec.k;
    for (int v = 0; v < n; ++v) {
        int l = static_cast<int>(rng.below(m));
        int r = l + static_cast<int>(rng.below(static_cast<std::uint64_t>(m - l)));
        std::vector<int> top, rest;
        for (int c = 0; c < m; ++c) (l <= c && c <= r ? top : rest).push_back(c);
        std::vector<std::vector<int>> classes{top};
        if (!rest.empty()) classes.push_back(rest);
        out.election.voters.push_back(WeakRanking::from_classes(std::move(classes), m));
    }
    default_ids(out.election);
    std::vector<int> corder(m);
    for (int c = 0; c < m; ++c) corder[c] = c;
    out.certificates.emplace(DomainId::CI, CandidateOrder{corder});
    return out;
}

inline GeneratedElection generate_impartial_strict(const GeneratorSpec& spec) {
    SplitMix64 rng(spec.seed);
    GeneratedElection out;
    out.election.candidates = numbered_names("c", spec.m);
    out.election.k = spec.k;
    for (int v = 0; v < spec.n; ++v) {
        std::vector<int> perm(spec.m);
        for (int c = 0; c < spec.m; ++c) perm[c] = c;
        for (int i = spec.m - 1; i > 0; --i) {
            int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i + 1)));
            std::swap(perm[i], perm[j]);
        }
        std::vector<std::vector<int>> classes;
        for (int c : perm) classes.push_back({c});
        out.election.voters.push_back(WeakRanking::from_classes(std::move(classes), spec.m));
    }
    default_ids(out.election);
    return out;
}

} // namespace detail

inline GeneratedElection generate(const GeneratorSpec& spec) {
    if (spec.n < 1 || spec.m < 1) throw InputError("generate: n and m must be positive");
    if (spec.k < 1 || spec.k > spec.m) throw InputError("generate: k out of range");
    GeneratedElection out;
    switch (spec.model) {
        case GeneratorModel::Euclid1D: out = detail::generate_euclid1d(spec); break;
        case GeneratorModel::ViIntervals: out = detail::generate_vi(spec); break;
        case GeneratorModel::CiIntervals: out = detail::generate_ci(spec); break;
        case GeneratorModel::ImpartialStrict: out = detail::generate_impartial_strict(spec); break;
    }
    out.election.validate();
    return out;
}

// 6r voters over 6r+2 candidates with k = 7: six clone blocks of an
// r-cycle between two universally top-ranked candidates. Single-top-
// crossing under the natural voter order, yet no committee is in the core
// once 2r-2 >= 12r/7, i.e. r >= 7.
inline Election tm_empty_core_family(int r) {
    if (r < 2) throw InputError("tm_empty_core_family: r must be at least 2");
    Election e;
    e.k = 7;
    e.candidates = {"g", "h"};
    const char* stems[6] = {"a", "b", "c", "d", "e", "f"};
    for (const char* s : stems)
        for (int i = 1; i <= r; ++i) e.candidates.push_back(s + std::to_string(i));
    auto block = [&](int stem, int rot) {
        // candidate indices of clone block `stem` in rotation `rot`
        std::vector<int> idx;
        for (int i = 0; i < r; ++i) idx.push_back(2 + stem * r + (rot + i) % r);
        return idx;
    };
    const int g = 0, h = 1;
    // block orders per voter group; groups 0..2 top g, groups 3..5 top h
    const int group_blocks[6][6] = {
        {0, 1, 2, 3, 4, 5}, // A B C D E F
        {1, 2, 0, 4, 5, 3}, // B C A E F D
        {2, 0, 1, 5, 3, 4}, // C A B F D E
        {3, 4, 5, 0, 1, 2}, // D E F A B C
        {4, 5, 3, 1, 2, 0}, // E F D B C A
        {5, 3, 4, 2, 0, 1}, // F D E C A B
    };
    for (int grp = 0; grp < 6; ++grp) {
        for (int rot = 0; rot < r; ++rot) {
            std::vector<std::vector<int>> classes;
            classes.push_back({grp < 3 ? g : h});
            for (int b = 0; b < 6; ++b)
                for (int c : block(group_blocks[grp][b], rot)) classes.push_back({c});
            classes.push_back({grp < 3 ? h : g});
            e.voters.push_back(WeakRanking::from_classes(std::move(classes), e.m()));
        }
    }
    detail::default_ids(e);
    e.validate();
    return e;
}

} // namespace corelect
