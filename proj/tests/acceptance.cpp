// Acceptance suite: every criterion runs at its stated tolerance and
// prints one PASS/FAIL line. The binary exits non-zero if any criterion
// fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "corelect/cli.hpp"
#include "corelect/core_check.hpp"
#include "corelect/fixtures.hpp"
#include "corelect/generate.hpp"
#include "corelect/io.hpp"
#include "corelect/recognize.hpp"
#include "corelect/rules.hpp"

using namespace corelect;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("%s criterion %2d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string joined(const Election& e, const Committee& w) {
    std::string s;
    for (int c : w) s += (s.empty() ? "" : ",") + e.candidates[c];
    return s;
}

// --- criterion 1: Monroe walkthrough -----------------------------------------

void criterion_1() {
    auto t0 = std::chrono::steady_clock::now();
    Election e = fixture("monroe-ex1").election;
    auto res = monroe(e);
    bool committee_ok = joined(e, res.committee) == "b,d";
    auto core = check_core(e, res.committee, ThresholdMode::Exact);
    bool witness_ok = !core.in_core && core.witness &&
                      joined(e, core.witness->deviation) == "c" &&
                      core.witness->coalition == std::vector<int>{1, 2};
    double secs = seconds_since(t0);
    std::ostringstream ss;
    ss << "Monroe elects {b,d}, blocked by S={2,3}, T={c} (" << secs << " s)";
    report(1, committee_ok && witness_ok && secs < 1.0, ss.str());
}

// --- criterion 2: STV walkthrough ---------------------------------------------

void criterion_2() {
    auto t0 = std::chrono::steady_clock::now();
    Election e = fixture("stv-ex2").election;
    auto res = stv(e);
    bool committee_ok = joined(e, res.committee) == "d,e";
    bool trace_ok =
        res.trace.size() == 4 && res.trace[0].kind == StvEvent::Kind::Eliminated &&
        e.candidates[res.trace[0].candidate] == "c" &&
        res.trace[1].kind == StvEvent::Kind::Elected &&
        e.candidates[res.trace[1].candidate] == "d" && res.trace[1].top_votes == 21 &&
        res.trace[2].kind == StvEvent::Kind::Eliminated &&
        e.candidates[res.trace[2].candidate] == "b" &&
        res.trace[3].kind == StvEvent::Kind::Elected &&
        e.candidates[res.trace[3].candidate] == "e" && res.trace[3].top_votes == 21;
    auto core = check_core(e, res.committee, ThresholdMode::Exact);
    bool witness_ok = !core.in_core && core.witness &&
                      joined(e, core.witness->deviation) == "c" &&
                      core.witness->coalition.size() >= 30;
    double secs = seconds_since(t0);
    std::ostringstream ss;
    ss << "STV elects {d,e} with the four-event trace, blocked by {c} with "
       << (core.witness ? core.witness->coalition.size() : 0) << " voters (" << secs << " s)";
    report(2, committee_ok && trace_ok && witness_ok && secs < 1.0, ss.str());
}

// --- criterion 3: PAV walkthrough ---------------------------------------------

void criterion_3() {
    auto t0 = std::chrono::steady_clock::now();
    Election e = fixture("pav-ex3").election;
    auto res = pav(e);
    bool committee_ok = joined(e, res.committee) == "b1,b2,b3,b4,d1,d2,d3,d4";
    bool score_ok = res.score == Rat(25, 4);
    auto ceil = check_core(e, res.committee, ThresholdMode::Ceil);
    bool ceil_ok = !ceil.in_core && ceil.witness &&
                   joined(e, ceil.witness->deviation) == "a,b1,b2,b3,b4,c";
    auto exact = check_core(e, res.committee, ThresholdMode::Exact);
    double secs = seconds_since(t0);
    std::ostringstream ss;
    ss << "PAV elects the b/d block at 25/4; ceil-mode witness {a,b1..b4,c}; exact-mode verdict "
       << (exact.in_core ? "in_core" : "violated")
       << " (stated witness misses the literal size bound) (" << secs << " s)";
    report(3, committee_ok && score_ok && ceil_ok && exact.in_core && secs < 1.0, ss.str());
}

// --- criterion 4: equal-shares walkthrough --------------------------------------

void criterion_4() {
    auto t0 = std::chrono::steady_clock::now();
    Election e = fixture("rulex-ex4").election;
    auto res = equal_shares(e);
    Committee expected = cli::parse_committee_arg(e, "a1,a2,a3,a4,b1,b2,b3,b4,e1,e2,x1,x2,y1,y2");
    bool committee_ok = res.committee == expected && res.committee.size() == 14;
    bool rho_ok = res.rounds.size() == 14;
    for (int i = 0; i < 8 && rho_ok; ++i) {
        rho_ok = res.rounds[i].rho == Rat(3, 32);
        char stem = e.candidates[res.rounds[i].candidate][0];
        rho_ok = rho_ok && (stem == 'a' || stem == 'b');
    }
    if (rho_ok)
        rho_ok = res.rounds[8].rho == Rat(1, 8) && res.rounds[9].rho == Rat(1, 8) &&
                 e.candidates[res.rounds[8].candidate] == "e1" &&
                 e.candidates[res.rounds[9].candidate] == "e2";
    auto core = check_core(e, res.committee, ThresholdMode::Exact);
    bool witness_ok = !core.in_core && core.witness && core.witness->coalition.size() == 42 &&
                      core.witness->deviation.size() == 14 &&
                      validate_witness(e, res.committee, *core.witness);
    double secs = seconds_since(t0);
    std::ostringstream ss;
    ss << "equal shares elects the 14 stated members (rho 3/32 then 1/8), blocked by all 42 "
          "voters and a 14-candidate set ("
       << secs << " s)";
    report(4, committee_ok && rho_ok && witness_ok && secs < 5.0, ss.str());
}

// --- criteria 5 and 6: pipeline property suites ---------------------------------

struct SuiteInstance {
    Election election;
    SelectionOrder order;
    bool lc_family = false; // approval families carry an LC mixed order
};

SuiteInstance make_approval_instance(GeneratorModel model, std::uint64_t seed) {
    SplitMix64 rng(seed);
    GeneratorSpec spec;
    spec.model = model;
    spec.k = 1 + static_cast<int>(rng.below(4));
    int reps = 1 + static_cast<int>(rng.below(12 / spec.k));
    spec.n = spec.k * reps;
    spec.m = std::max(spec.k, 2 + static_cast<int>(rng.below(7)));
    spec.seed = rng.next();
    auto gen = generate(spec);
    SuiteInstance inst;
    inst.election = gen.election;
    inst.lc_family = true;
    DomainId d = model == GeneratorModel::ViIntervals ? DomainId::VI : DomainId::CI;
    MixedOrder lc = lc_from_interval(gen.election, d, gen.certificates.at(d));
    inst.order = SelectionOrder::from_mixed(gen.election, lc);
    return inst;
}

SuiteInstance make_strict_instance(bool via_axis, std::uint64_t seed) {
    SplitMix64 rng(seed);
    GeneratorSpec spec;
    spec.model = GeneratorModel::Euclid1D;
    spec.k = 1 + static_cast<int>(rng.below(4));
    int reps = 1 + static_cast<int>(rng.below(12 / spec.k));
    spec.n = spec.k * reps;
    spec.m = std::max(spec.k, 2 + static_cast<int>(rng.below(7)));
    spec.seed = rng.next();
    auto gen = generate(spec);
    SuiteInstance inst;
    inst.election = gen.election;
    if (via_axis) {
        // the peak family feeds the pipeline through the axis-derived order
        VoterOrder vo = detail::stc_order_from_sp_axis(
            gen.election, std::get<CandidateOrder>(gen.certificates.at(DomainId::SP)));
        inst.order = SelectionOrder::from_voters(gen.election, vo);
    } else {
        inst.order = SelectionOrder::from_voters(
            gen.election, std::get<VoterOrder>(gen.certificates.at(DomainId::SC)));
    }
    return inst;
}

void criteria_5_and_6() {
    auto t0 = std::chrono::steady_clock::now();
    int size_fail = 0, core_fail = 0;
    int obs2_fail = 0, obs3_literal_fail = 0, obs3_anchored_fail = 0;
    int lemma5_fail = 0, frac_fail = 0;
    int total = 0;

    auto run_instance = [&](const SuiteInstance& inst) {
        ++total;
        const Election& e = inst.election;
        CommitteeCoreResult res = committee_core(e, inst.order);
        if (static_cast<int>(res.committee.size()) != e.k) ++size_fail;
        if (!check_core(e, res.committee, ThresholdMode::Exact).in_core) ++core_fail;

        const auto& phase1 = res.phase1;
        Rat total_mass;
        for (int c = 0; c < e.m(); ++c) {
            if (phase1.fractional.mass[c] !=
                Rat(static_cast<std::int64_t>(phase1.units[c]) * e.k, e.n()))
                ++obs2_fail;
            total_mass += phase1.fractional.mass[c];
        }
        if (total_mass != Rat(e.k)) ++obs2_fail;

        if (inst.lc_family) {
            // the literal claim quantifies over all surviving voters; it is
            // refuted whenever a survivor's approval set was exhausted, so
            // the restriction to survivors holding an approved pick is
            // tracked alongside (see the decisions notes and README)
            int prev = -1;
            bool literal = false;
            for (int v : res.surviving_voters) {
                int rank = inst.order.candidate_rank[phase1.representative[v]];
                if (rank < prev) literal = true;
                prev = std::max(prev, rank);
            }
            if (literal) ++obs3_literal_fail;
            prev = -1;
            bool anchored = false;
            for (int v : res.anchor_voters) {
                int rank = inst.order.candidate_rank[phase1.representative[v]];
                if (rank < prev) anchored = true;
                prev = std::max(prev, rank);
            }
            if (anchored) ++obs3_anchored_fail;
            for (int v = 0; v < e.n(); ++v) {
                int hits = 0;
                Rat top_mass;
                for (int c : e.voters[v].top_class()) {
                    if (committee_contains(res.committee, c)) ++hits;
                    top_mass += phase1.fractional.mass[c];
                }
                if (!(Rat(hits + 1) > top_mass)) ++lemma5_fail;
            }
        }
        if (!check_fractional_deviation(e, phase1.fractional, ThresholdMode::Exact).in_core)
            ++frac_fail;
    };

    for (std::uint64_t i = 0; i < 200; ++i) {
        run_instance(make_approval_instance(GeneratorModel::ViIntervals, 1000 + i));
        run_instance(make_approval_instance(GeneratorModel::CiIntervals, 2000 + i));
        // third approval family: linearly consistent certificates over a
        // mixed stream of interval instances
        run_instance(make_approval_instance(
            i % 2 ? GeneratorModel::ViIntervals : GeneratorModel::CiIntervals, 3000 + i));
        run_instance(make_strict_instance(true, 4000 + i));
        run_instance(make_strict_instance(false, 5000 + i));
    }
    double secs = seconds_since(t0);
    {
        std::ostringstream ss;
        ss << total << " certified instances: every committee has exactly k members and passes "
              "the exact core check ("
           << size_fail << " size / " << core_fail << " core failures, " << secs << " s)";
        report(5, size_fail == 0 && core_fail == 0 && secs < 600.0, ss.str());
    }
    {
        // The literal monotonicity observation is refuted by LC instances
        // with exhausted approval sets (a documented gap in its source);
        // the criterion is reported as stated, with the provable
        // anchored-voter restriction shown alongside.
        std::ostringstream ss;
        ss << "fractional phase: unit masses and total k (" << obs2_fail
           << " fails), literal representative monotonicity (" << obs3_literal_fail
           << " instances violate it; anchored restriction: " << obs3_anchored_fail
           << "), top-mass bound (" << lemma5_fail << "), no discrete blocking deviation ("
           << frac_fail << ")";
        report(6,
               obs2_fail == 0 && obs3_literal_fail == 0 && obs3_anchored_fail == 0 &&
                   lemma5_fail == 0 && frac_fail == 0,
               ss.str());
    }
}

// --- criterion 7: equivalence suites --------------------------------------------

Election strict_from_ranks(const std::vector<std::vector<int>>& rankings, int m) {
    Election e;
    for (int c = 0; c < m; ++c) e.candidates.push_back(std::string(1, static_cast<char>('a' + c)));
    e.k = 1;
    for (std::size_t v = 0; v < rankings.size(); ++v) {
        std::vector<std::vector<int>> classes;
        for (int c : rankings[v]) classes.push_back({c});
        e.voters.push_back(WeakRanking::from_classes(std::move(classes), m));
        e.voter_ids.push_back(std::to_string(v + 1));
    }
    return e;
}

void criterion_7() {
    auto t0 = std::chrono::steady_clock::now();
    int disagreements = 0, inconclusive = 0, lc_failures = 0;

    // exhaustive sweep over all strict 3-voter, 3-candidate profiles
    std::vector<std::vector<int>> perms;
    std::vector<int> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    for (const auto& r1 : perms)
        for (const auto& r2 : perms)
            for (const auto& r3 : perms) {
                Election e = strict_from_ranks({r1, r2, r3}, 3);
                for (auto pair : {EquivalencePair::StpTm, EquivalencePair::StpStc}) {
                    auto rep = equivalence_check(e, pair);
                    if (rep.verdict == EquivalenceReport::Verdict::Disagree) ++disagreements;
                    if (rep.verdict == EquivalenceReport::Verdict::Inconclusive) ++inconclusive;
                }
            }

    // 500 random strict profiles with n <= 5, m <= 5
    SplitMix64 rng(775577);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 1 + static_cast<int>(rng.below(5));
        int m = 2 + static_cast<int>(rng.below(4));
        std::vector<std::vector<int>> rankings(n);
        for (auto& r : rankings) {
            r.resize(m);
            for (int c = 0; c < m; ++c) r[c] = c;
            for (int i = m - 1; i > 0; --i)
                std::swap(r[i], r[rng.below(static_cast<std::uint64_t>(i + 1))]);
        }
        Election e = strict_from_ranks(rankings, m);
        for (auto pair : {EquivalencePair::StpTm, EquivalencePair::StpStc}) {
            auto rep = equivalence_check(e, pair);
            if (rep.verdict == EquivalenceReport::Verdict::Disagree) ++disagreements;
            if (rep.verdict == EquivalenceReport::Verdict::Inconclusive) ++inconclusive;
        }
    }

    // interval-to-LC construction on 200 + 200 random certified instances
    for (std::uint64_t i = 0; i < 200; ++i) {
        for (GeneratorModel model : {GeneratorModel::ViIntervals, GeneratorModel::CiIntervals}) {
            SplitMix64 seed_rng(9000 + i * 2 + (model == GeneratorModel::CiIntervals));
            GeneratorSpec spec;
            spec.model = model;
            spec.n = 2 + static_cast<int>(seed_rng.below(10));
            spec.m = 2 + static_cast<int>(seed_rng.below(7));
            spec.k = 1 + static_cast<int>(seed_rng.below(static_cast<std::uint64_t>(spec.m)));
            spec.seed = seed_rng.next();
            auto gen = generate(spec);
            DomainId d = model == GeneratorModel::ViIntervals ? DomainId::VI : DomainId::CI;
            MixedOrder lc = lc_from_interval(gen.election, d, gen.certificates.at(d));
            if (verify(gen.election, DomainId::LC, lc)) ++lc_failures;
        }
    }

    double secs = seconds_since(t0);
    std::ostringstream ss;
    ss << "recognizer equivalences agree on 216 exhaustive + 500 random strict profiles, and "
          "400 interval witnesses convert to valid LC orders ("
       << disagreements << " disagreements, " << inconclusive << " inconclusive, " << lc_failures
       << " LC failures, " << secs << " s)";
    report(7, disagreements == 0 && inconclusive == 0 && lc_failures == 0, ss.str());
}

// --- criterion 8: the SSC-but-not-LC profile -------------------------------------

void criterion_8() {
    auto t0 = std::chrono::steady_clock::now();
    Election e = fixture("ssc-not-lc").election;
    auto lc = recognize(e, DomainId::LC);
    auto ssc = recognize(e, DomainId::SSC);
    double secs = seconds_since(t0);
    bool ok = lc.outcome == RecognitionResult::Outcome::Refuted && lc.search_space == 720 &&
              ssc.outcome == RecognitionResult::Outcome::Certified &&
              !verify(e, DomainId::SSC, *ssc.certificate) && secs < 1.0;
    std::ostringstream ss;
    ss << "LC refuted after exhausting the 720 mixed orders, SSC certified (" << secs << " s)";
    report(8, ok, ss.str());
}

// --- criterion 9: empty-core evidence at r = 7 ------------------------------------

void criterion_9() {
    auto t0 = std::chrono::steady_clock::now();
    Election e = tm_empty_core_family(7);
    std::vector<int> natural(e.n());
    for (int i = 0; i < e.n(); ++i) natural[i] = i;
    bool stc_ok = !verify(e, DomainId::STC, VoterOrder{natural}).has_value();

    std::vector<Committee> sample;
    sample.push_back(cli::parse_committee_arg(e, "g,h,a1,a2,b1,b2,c1"));
    sample.push_back(cli::parse_committee_arg(e, "g,h,a1,a2,a3,b1,c1"));
    sample.push_back(cli::parse_committee_arg(e, "g,h,d1,d2,e1,e2,f1"));
    sample.push_back(cli::parse_committee_arg(e, "a1,a2,a3,a4,a5,a6,a7"));
    sample.push_back(cli::parse_committee_arg(e, "g,a1,b1,c1,d1,e1,f1"));
    SplitMix64 rng(20210707);
    while (sample.size() < 1005) {
        std::vector<int> pool(e.m());
        for (int c = 0; c < e.m(); ++c) pool[c] = c;
        for (int j = 0; j < e.k; ++j)
            std::swap(pool[j], pool[j + rng.below(static_cast<std::uint64_t>(e.m() - j))]);
        sample.push_back(make_committee({pool.begin(), pool.begin() + e.k}));
    }
    auto evidence = find_empty_core_evidence(e, sample, 2);
    int unblocked = 0, invalid = 0;
    for (const auto& [w, verdict] : evidence) {
        if (verdict.in_core) ++unblocked;
        else if (!validate_witness(e, w, *verdict.witness)) ++invalid;
    }

    std::vector<int> keep;
    for (int c = 0; c < e.m(); ++c)
        if (e.candidates[c] != "g" && e.candidates[c] != "h") keep.push_back(c);
    Election sub = induce_candidates(e, keep);
    std::vector<int> sub_natural(sub.n());
    for (int i = 0; i < sub.n(); ++i) sub_natural[i] = i;
    bool subinstance_fails = verify(sub, DomainId::STC, VoterOrder{sub_natural}).has_value();

    double secs = seconds_since(t0);
    std::ostringstream ss;
    ss << "r=7 family: STC holds, every one of " << evidence.size()
       << " committees has a validated blocking witness with |T| <= 2, and dropping {g,h} "
          "breaks STC ("
       << unblocked << " unblocked, " << invalid << " invalid, " << secs << " s)";
    report(9, stc_ok && unblocked == 0 && invalid == 0 && subinstance_fails && secs < 600.0,
           ss.str());
}

// --- criterion 10: local stability vs max-extension core --------------------------

void criterion_10() {
    auto t0 = std::chrono::steady_clock::now();
    long long compared = 0;
    int disagreements = 0;

    auto check_instance = [&](Election& e, bool full_equivalence) {
        for (int k = 1; k <= e.m(); ++k) {
            e.k = k;
            std::vector<int> members;
            std::function<void(int)> rec = [&](int next) {
                if (static_cast<int>(members.size()) == k) {
                    ++compared;
                    auto ls = check_local_stability(e, members);
                    auto size1 = check_core_max(e, members, ThresholdMode::Exact, 1);
                    if (ls.stable != size1.in_core) ++disagreements;
                    if (full_equivalence) {
                        auto full = check_core_max(e, members, ThresholdMode::Exact);
                        if (ls.stable != full.in_core) ++disagreements;
                    }
                    return;
                }
                for (int c = next; c < e.m(); ++c) {
                    members.push_back(c);
                    rec(c + 1);
                    members.pop_back();
                }
            };
            rec(0);
        }
    };

    // exhaustive strict profiles at n = m = 3, full committee sweep, with
    // the whole-committee equivalence checked as well
    std::vector<std::vector<int>> perms;
    std::vector<int> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    for (const auto& r1 : perms)
        for (const auto& r2 : perms)
            for (const auto& r3 : perms) {
                Election e = strict_from_ranks({r1, r2, r3}, 3);
                check_instance(e, true);
            }

    // seeded random weak-order profiles up to n = 6, m = 5 (the full
    // profile space at these sizes is astronomically large; coverage works
    // through a fixed 20000-instance sample)
    SplitMix64 rng(1010);
    for (int trial = 0; trial < 20000; ++trial) {
        int n = 1 + static_cast<int>(rng.below(6));
        int m = 2 + static_cast<int>(rng.below(4));
        Election e;
        for (int c = 0; c < m; ++c) e.candidates.push_back(std::string(1, static_cast<char>('a' + c)));
        e.k = 1;
        for (int v = 0; v < n; ++v) {
            std::vector<int> perm(m);
            for (int c = 0; c < m; ++c) perm[c] = c;
            for (int i = m - 1; i > 0; --i)
                std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i + 1))]);
            std::vector<std::vector<int>> classes;
            std::size_t at = 0;
            while (at < perm.size()) {
                std::size_t take = 1 + rng.below(perm.size() - at);
                classes.emplace_back(perm.begin() + at, perm.begin() + at + take);
                at += take;
            }
            e.voters.push_back(WeakRanking::from_classes(std::move(classes), m));
            e.voter_ids.push_back(std::to_string(v + 1));
        }
        check_instance(e, false);
    }

    double secs = seconds_since(t0);
    std::ostringstream ss;
    ss << "local stability at quota ceil(n/k) matches the max-extension deviation check on "
       << compared << " (instance, committee) pairs (" << disagreements << " disagreements, "
       << secs << " s)";
    report(10, disagreements == 0 && secs < 300.0, ss.str());
}

// --- criterion 11: standalone median rule ------------------------------------------

void criterion_11() {
    auto t0 = std::chrono::steady_clock::now();
    int distinct = 0, failures_here = 0;
    for (std::uint64_t i = 0; i < 300; ++i) {
        SplitMix64 rng(7000 + i);
        GeneratorSpec spec;
        spec.model = GeneratorModel::Euclid1D;
        spec.k = 1 + static_cast<int>(rng.below(4));
        int reps = 1 + static_cast<int>(rng.below(12 / spec.k));
        spec.n = spec.k * reps;
        spec.m = std::max(spec.k, 2 + static_cast<int>(rng.below(7)));
        spec.seed = rng.next();
        auto gen = generate(spec);
        const auto& vo = std::get<VoterOrder>(gen.certificates.at(DomainId::SC));
        auto res = median_rule(gen.election, vo);
        if (!res.distinct) continue;
        ++distinct;
        if (!check_core(gen.election, res.committee, ThresholdMode::Exact).in_core)
            ++failures_here;
    }
    double secs = seconds_since(t0);
    std::ostringstream ss;
    ss << "median rule returned k distinct candidates on " << distinct
       << "/300 crossing-certified instances; every such committee is in the core ("
       << failures_here << " failures, " << secs << " s)";
    report(11, failures_here == 0 && distinct > 0, ss.str());
}

// --- criterion 12: parser round-trip and fuzz ---------------------------------------

void criterion_12() {
    auto t0 = std::chrono::steady_clock::now();
    int roundtrip_failures = 0;
    SplitMix64 rng(31415926);
    for (int trial = 0; trial < 10000; ++trial) {
        GeneratorSpec spec;
        spec.model = static_cast<GeneratorModel>(rng.below(4));
        spec.n = 1 + static_cast<int>(rng.below(12));
        spec.m = 1 + static_cast<int>(rng.below(9));
        spec.k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(spec.m)));
        spec.seed = rng.next();
        Election e = generate(spec).election;
        std::string text = serialize_election(e);
        try {
            Election back = parse_election(text);
            if (!(back == e) || serialize_election(back) != text) ++roundtrip_failures;
        } catch (const std::exception&) {
            ++roundtrip_failures;
        }
    }

    int crash_like = 0, mutations = 0;
    std::string base = serialize_election(fixture("stv-ex2").election);
    for (int trial = 0; trial < 3000; ++trial) {
        std::string text = base;
        int edits = 1 + static_cast<int>(rng.below(6));
        for (int i = 0; i < edits; ++i) {
            std::size_t pos = rng.below(text.size());
            switch (rng.below(3)) {
                case 0: text[pos] = static_cast<char>(' ' + rng.below(95)); break;
                case 1: text.erase(pos, 1 + rng.below(3)); break;
                default:
                    text.insert(pos, 1, static_cast<char>(' ' + rng.below(95)));
                    break;
            }
        }
        ++mutations;
        try {
            parse_election(text);
        } catch (const InputError&) {
            // structured rejection is the expected failure mode
        } catch (const std::exception&) {
            ++crash_like;
        }
    }
    double secs = seconds_since(t0);
    std::ostringstream ss;
    ss << "10000 generated elections round-trip byte-identically (" << roundtrip_failures
       << " failures); " << mutations << " mutated inputs all handled with structured errors ("
       << crash_like << " unexpected exceptions, " << secs << " s)";
    report(12, roundtrip_failures == 0 && crash_like == 0, ss.str());
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criteria_5_and_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    if (failures == 0) std::printf("all criteria passed\n");
    else std::printf("%d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
