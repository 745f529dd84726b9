// Command-line surface. Every subcommand prints one JSON result document
// on stdout: {version, command, input_digest, outcome, timings}. Exit
// codes: 0 success, 1 input/validation error (JSON error object), 2 a
// reproduce assertion failed.

#pragma once

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "corelect/core_check.hpp"
#include "corelect/fixtures.hpp"
#include "corelect/generate.hpp"
#include "corelect/io.hpp"
#include "corelect/recognize.hpp"
#include "corelect/rules.hpp"

namespace corelect::cli {

using nlohmann::json;

// --- JSON helpers -----------------------------------------------------------

inline json names_json(const Election& e, const std::vector<int>& candidates) {
    json a = json::array();
    for (int c : candidates) a.push_back(e.candidates[c]);
    return a;
}

inline json voter_ids_json(const Election& e, const std::vector<int>& voters) {
    json a = json::array();
    for (int v : voters) a.push_back(e.voter_ids[v]);
    return a;
}

inline json certificate_json(const Election& e, DomainId domain, const DomainCertificate& cert) {
    json out;
    out["domain"] = domain_name(domain);
    if (const auto* vo = std::get_if<VoterOrder>(&cert)) {
        out["kind"] = "voter-order";
        out["order"] = voter_ids_json(e, vo->order);
    } else if (const auto* co = std::get_if<CandidateOrder>(&cert)) {
        out["kind"] = "candidate-order";
        out["order"] = names_json(e, co->order);
    } else if (const auto* mo = std::get_if<MixedOrder>(&cert)) {
        out["kind"] = "mixed-order";
        json a = json::array();
        for (const auto& item : mo->order)
            a.push_back((item.is_candidate ? "c:" + e.candidates[item.index]
                                           : "v:" + e.voter_ids[item.index]));
        out["order"] = a;
    } else if (const auto* emb = std::get_if<Embedding>(&cert)) {
        out["kind"] = "embedding";
        json voters = json::object(), candidates = json::object();
        for (int v = 0; v < e.n(); ++v) voters[e.voter_ids[v]] = emb->voter_coord[v].str();
        for (int c = 0; c < e.m(); ++c) candidates[e.candidates[c]] = emb->candidate_coord[c].str();
        out["voters"] = voters;
        out["candidates"] = candidates;
    }
    return out;
}

inline DomainCertificate certificate_from_json(const Election& e, const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    auto voter_index = [&](const std::string& id) {
        for (int v = 0; v < e.n(); ++v)
            if (e.voter_ids[v] == id) return v;
        throw InputError("certificate refers to unknown voter id '" + id + "'");
    };
    if (kind == "voter-order") {
        VoterOrder vo;
        for (const auto& id : j.at("order")) vo.order.push_back(voter_index(id.get<std::string>()));
        return vo;
    }
    if (kind == "candidate-order") {
        CandidateOrder co;
        for (const auto& name : j.at("order"))
            co.order.push_back(e.candidate_index(name.get<std::string>()));
        return co;
    }
    if (kind == "mixed-order") {
        MixedOrder mo;
        for (const auto& entry : j.at("order")) {
            std::string s = entry.get<std::string>();
            if (s.rfind("v:", 0) == 0)
                mo.order.push_back(MixedItem{false, voter_index(s.substr(2))});
            else if (s.rfind("c:", 0) == 0)
                mo.order.push_back(MixedItem{true, e.candidate_index(s.substr(2))});
            else
                throw InputError("mixed-order entries must start with 'v:' or 'c:'");
        }
        return mo;
    }
    if (kind == "embedding") {
        Embedding emb;
        emb.voter_coord.resize(e.n());
        emb.candidate_coord.resize(e.m());
        auto parse_rat = [](const std::string& s) {
            auto slash = s.find('/');
            if (slash == std::string::npos) return Rat(std::stoll(s));
            return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
        };
        for (auto it = j.at("voters").begin(); it != j.at("voters").end(); ++it)
            emb.voter_coord[voter_index(it.key())] = parse_rat(it.value().get<std::string>());
        for (auto it = j.at("candidates").begin(); it != j.at("candidates").end(); ++it)
            emb.candidate_coord[e.candidate_index(it.key())] =
                parse_rat(it.value().get<std::string>());
        return emb;
    }
    throw InputError("unknown certificate kind: " + kind);
}

inline json violation_json(const Election& e, const Violation& v) {
    json items = json::array();
    for (const auto& it : v.items) {
        json o;
        o["role"] = it.role;
        if (it.is_candidate) o["candidate"] = e.candidates[it.index];
        else o["voter"] = e.voter_ids[it.index];
        items.push_back(o);
    }
    json out;
    out["domain"] = domain_name(v.domain);
    out["tuple"] = items;
    return out;
}

inline json witness_json(const Election& e, const BlockingWitness& w) {
    json out;
    out["S"] = voter_ids_json(e, w.coalition);
    out["T"] = names_json(e, w.deviation);
    out["mode"] = w.mode == ThresholdMode::Exact ? "exact" : "ceil";
    return out;
}

inline json core_verdict_json(const Election& e, const CoreVerdict& v) {
    json out;
    out["verdict"] = v.in_core ? "in_core" : "violated";
    out["max_t"] = v.max_deviation_size;
    if (v.witness) out["witness"] = witness_json(e, *v.witness);
    return out;
}

// --- input loading ----------------------------------------------------------

struct LoadedInput {
    Election election;
    std::string text;                                    // as parsed/serialized
    std::map<DomainId, DomainCertificate> certificates;  // fixtures carry these
};

inline bool file_exists(const std::string& path) {
    std::ifstream f(path);
    return f.good();
}

inline std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

inline bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// `--input` accepts a file path (native format, or preflib by .soc/.toc/
// .cat extension) or a fixture name, optionally prefixed "fixture:".
inline LoadedInput load_input(const std::string& spec, int preflib_k) {
    LoadedInput in;
    std::string name = spec;
    if (name.rfind("fixture:", 0) == 0) name = name.substr(8);
    if (spec.rfind("fixture:", 0) != 0 && file_exists(spec)) {
        in.text = read_file(spec);
        if (ends_with(spec, ".soc"))
            in.election = import_preflib(in.text, PreflibKind::Soc, preflib_k);
        else if (ends_with(spec, ".toc"))
            in.election = import_preflib(in.text, PreflibKind::Toc, preflib_k);
        else if (ends_with(spec, ".cat"))
            in.election = import_preflib(in.text, PreflibKind::Cat, preflib_k);
        else
            in.election = parse_election(in.text);
        return in;
    }
    Fixture f = fixture(name);
    in.election = f.election;
    in.certificates = f.certificates;
    in.text = serialize_election(f.election);
    return in;
}

inline Committee parse_committee_arg(const Election& e, const std::string& arg) {
    std::vector<int> members;
    std::string cur;
    std::istringstream ss(arg);
    while (std::getline(ss, cur, ',')) {
        cur = detail::trim(cur);
        if (cur.empty()) continue;
        members.push_back(e.candidate_index(cur));
    }
    if (members.empty()) throw InputError("empty committee argument");
    return make_committee(std::move(members));
}

// --- order resolution for the pipeline rules ----------------------------------

struct ResolvedOrder {
    SelectionOrder order;
    DomainId domain = DomainId::LC;
    DomainCertificate certificate;
};

// `--order-from auto`: approval profiles search for a linearly consistent
// mixed order; strict profiles take a single-crossing or single-peaked
// witness (both convert to single-top-crossing voter orders) or fall back
// to the direct search.
inline ResolvedOrder resolve_order_auto(const Election& e, std::uint64_t budget) {
    ResolvedOrder out;
    if (e.is_approval() && !e.is_strict()) {
        auto lc = recognize(e, DomainId::LC, budget);
        if (lc.outcome != RecognitionResult::Outcome::Certified)
            throw InputError("order resolution: no linearly consistent order found "
                             "(profile outside the covered approval domains)");
        out.domain = DomainId::LC;
        out.certificate = *lc.certificate;
        out.order = SelectionOrder::from_mixed(e, std::get<MixedOrder>(*lc.certificate));
        return out;
    }
    if (e.is_strict()) {
        auto sc = recognize(e, DomainId::SC, budget);
        if (sc.outcome == RecognitionResult::Outcome::Certified) {
            out.domain = DomainId::SC;
            out.certificate = *sc.certificate;
            out.order = SelectionOrder::from_voters(e, std::get<VoterOrder>(*sc.certificate));
            return out;
        }
        auto sp = recognize(e, DomainId::SP, budget);
        if (sp.outcome == RecognitionResult::Outcome::Certified) {
            VoterOrder vo = detail::stc_order_from_sp_axis(
                e, std::get<CandidateOrder>(*sp.certificate));
            out.domain = DomainId::STC;
            out.certificate = vo;
            out.order = SelectionOrder::from_voters(e, vo);
            return out;
        }
        auto stc = recognize(e, DomainId::STC, budget);
        if (stc.outcome == RecognitionResult::Outcome::Certified) {
            out.domain = DomainId::STC;
            out.certificate = *stc.certificate;
            out.order = SelectionOrder::from_voters(e, std::get<VoterOrder>(*stc.certificate));
            return out;
        }
        throw InputError("order resolution: no crossing-style order found "
                         "(profile outside the covered strict domains)");
    }
    throw InputError("order resolution: profile is neither approval nor strict");
}

inline ResolvedOrder resolve_order_file(const Election& e, const std::string& path) {
    json j = json::parse(read_file(path));
    ResolvedOrder out;
    out.domain = domain_from_name(j.at("domain").get<std::string>());
    out.certificate = certificate_from_json(e, j);
    if (const auto* mo = std::get_if<MixedOrder>(&out.certificate))
        out.order = SelectionOrder::from_mixed(e, *mo);
    else if (const auto* vo = std::get_if<VoterOrder>(&out.certificate))
        out.order = SelectionOrder::from_voters(e, *vo);
    else
        throw InputError("order file must hold a voter or mixed order");
    return out;
}

// --- command implementations -------------------------------------------------

struct Emitter {
    std::ostream& out;
    bool pretty = false;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    int finish(json doc, int code = 0) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        doc["timings"] = {{"total_ms", ms}};
        out << (pretty ? doc.dump(2) : doc.dump()) << '\n';
        return code;
    }
};

inline json base_doc(const std::string& command, const std::string& input_text) {
    json doc;
    doc["version"] = "v1";
    doc["command"] = command;
    std::ostringstream digest;
    digest << "fnv1a64:" << std::hex << fnv1a64(input_text);
    doc["input_digest"] = digest.str();
    return doc;
}

inline int cmd_elect(Emitter& em, const std::string& rule, const std::string& input,
                     const std::string& order_from, const std::string& order_file,
                     bool auto_expand, std::uint64_t budget, int preflib_k) {
    LoadedInput in = load_input(input, preflib_k);
    const Election& e = in.election;
    json doc = base_doc("elect", in.text);
    doc["rule"] = rule;
    json outcome;
    if (rule == "monroe") {
        Election work = e;
        int expansion = 1;
        if (e.n() % e.k != 0 && auto_expand) {
            work = expand_election(e);
            expansion = e.k;
        }
        auto res = monroe(work);
        outcome["committee"] = names_json(work, res.committee);
        outcome["value"] = res.value;
        outcome["expansion"] = expansion;
        json assign = json::object();
        for (int v = 0; v < work.n(); ++v)
            assign[work.voter_ids[v]] = work.candidates[res.assignment[v]];
        outcome["assignment"] = assign;
    } else if (rule == "stv") {
        auto res = stv(e);
        outcome["committee"] = names_json(e, res.committee);
        outcome["quota"] = res.quota;
        json trace = json::array();
        for (const auto& ev : res.trace)
            trace.push_back({{"action", ev.kind == StvEvent::Kind::Elected ? "elected" : "eliminated"},
                             {"candidate", e.candidates[ev.candidate]},
                             {"top_votes", ev.top_votes}});
        outcome["trace"] = trace;
    } else if (rule == "pav") {
        auto res = pav(e);
        outcome["committee"] = names_json(e, res.committee);
        outcome["score"] = res.score.str();
    } else if (rule == "equal-shares") {
        auto res = equal_shares(e);
        outcome["committee"] = names_json(e, res.committee);
        outcome["complete"] = res.complete;
        json rounds = json::array();
        for (const auto& r : res.rounds)
            rounds.push_back({{"candidate", e.candidates[r.candidate]}, {"rho", r.rho.str()}});
        outcome["rounds"] = rounds;
    } else if (rule == "committee-core" || rule == "median") {
        ResolvedOrder resolved = order_from == "file" ? resolve_order_file(e, order_file)
                                                      : resolve_order_auto(e, budget);
        outcome["certificate"] = certificate_json(e, resolved.domain, resolved.certificate);
        if (rule == "median") {
            Election work = e;
            std::vector<int> order = resolved.order.voters;
            if (e.n() % e.k != 0) {
                if (!auto_expand)
                    throw InputError("median: n/k must be integral; pass --auto-expand");
                work = expand_election(e);
                order.clear();
                for (int v : resolved.order.voters)
                    for (int t = 0; t < e.k; ++t) order.push_back(v * e.k + t);
                outcome["expansion"] = e.k;
            }
            auto res = median_rule(work, VoterOrder{order});
            outcome["committee"] = names_json(work, res.committee);
            outcome["median_voters"] = voter_ids_json(work, res.median_voters);
            outcome["distinct"] = res.distinct;
        } else {
            auto res = committee_core(e, resolved.order, auto_expand);
            const Election& we = res.election;
            outcome["committee"] = names_json(we, res.committee);
            outcome["fully_elected"] = names_json(we, res.fully_elected);
            outcome["median_picks"] = names_json(we, res.median_picks);
            if (!res.filler.empty()) outcome["filler"] = names_json(we, res.filler);
            outcome["median_voters"] = voter_ids_json(we, res.median_voters);
            outcome["expansion"] = res.expansion;
            json reps = json::object(), mass = json::object();
            for (int v = 0; v < we.n(); ++v)
                reps[we.voter_ids[v]] = we.candidates[res.phase1.representative[v]];
            for (int c = 0; c < we.m(); ++c)
                mass[we.candidates[c]] = res.phase1.fractional.mass[c].str();
            outcome["representatives"] = reps;
            outcome["fractional"] = mass;
        }
    } else {
        throw InputError("unknown rule: " + rule);
    }
    doc["outcome"] = outcome;
    return em.finish(doc);
}

inline int cmd_check_core(Emitter& em, const std::string& input, const std::string& committee_arg,
                          const std::string& mode_arg, int max_t, const std::string& extension,
                          int preflib_k) {
    LoadedInput in = load_input(input, preflib_k);
    const Election& e = in.election;
    Committee w = parse_committee_arg(e, committee_arg);
    ThresholdMode mode = mode_arg == "ceil" ? ThresholdMode::Ceil : ThresholdMode::Exact;
    json doc = base_doc("check-core", in.text);
    CoreVerdict v = extension == "max" ? check_core_max(e, w, mode, max_t)
                                       : check_core(e, w, mode, max_t);
    doc["outcome"] = core_verdict_json(e, v);
    doc["outcome"]["extension"] = extension;
    doc["outcome"]["mode"] = mode_arg;
    return em.finish(doc);
}

inline int cmd_check_local_stability(Emitter& em, const std::string& input,
                                     const std::string& committee_arg, std::int64_t quota,
                                     int preflib_k) {
    LoadedInput in = load_input(input, preflib_k);
    const Election& e = in.election;
    Committee w = parse_committee_arg(e, committee_arg);
    auto v = check_local_stability(e, w, quota);
    json doc = base_doc("check-local-stability", in.text);
    json outcome;
    outcome["verdict"] = v.stable ? "stable" : "violated";
    outcome["quota"] = v.quota;
    if (!v.stable) {
        outcome["candidate"] = e.candidates[v.candidate];
        outcome["S"] = voter_ids_json(e, v.coalition);
    }
    doc["outcome"] = outcome;
    return em.finish(doc);
}

inline int cmd_recognize(Emitter& em, const std::string& domain_arg, const std::string& input,
                         std::uint64_t budget, int preflib_k) {
    LoadedInput in = load_input(input, preflib_k);
    const Election& e = in.election;
    DomainId domain = domain_from_name(domain_arg);
    auto res = recognize(e, domain, budget);
    json doc = base_doc("recognize", in.text);
    json outcome;
    switch (res.outcome) {
        case RecognitionResult::Outcome::Certified: outcome["outcome"] = "certified"; break;
        case RecognitionResult::Outcome::Refuted: outcome["outcome"] = "refuted"; break;
        case RecognitionResult::Outcome::Unknown: outcome["outcome"] = "unknown"; break;
    }
    outcome["nodes"] = res.nodes;
    if (res.search_space > 0) outcome["search_space"] = res.search_space;
    if (res.certificate) outcome["certificate"] = certificate_json(e, domain, *res.certificate);
    if (res.removed_candidates)
        outcome["removed_candidates"] = names_json(e, *res.removed_candidates);
    doc["outcome"] = outcome;
    return em.finish(doc);
}

inline int cmd_generate(Emitter& em, const std::string& model, int n, int m, int k,
                        std::uint64_t seed, const std::string& out_path) {
    GeneratorSpec spec;
    spec.model = model_from_name(model);
    spec.n = n;
    spec.m = m;
    spec.k = k;
    spec.seed = seed;
    auto gen = generate(spec);
    std::string text = serialize_election(gen.election);
    json doc = base_doc("generate", text);
    json outcome;
    outcome["election"] = text;
    json certs = json::array();
    for (const auto& [domain, cert] : gen.certificates)
        certs.push_back(certificate_json(gen.election, domain, cert));
    outcome["certificates"] = certs;
    doc["outcome"] = outcome;
    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw InputError("cannot write: " + out_path);
        f << text;
    }
    return em.finish(doc);
}

// --- reproduce ---------------------------------------------------------------

struct CheckList {
    json checks = json::array();
    bool all_pass = true;

    void add(const std::string& name, bool pass, const std::string& expected,
             const std::string& actual) {
        checks.push_back({{"name", name}, {"pass", pass}, {"expected", expected}, {"actual", actual}});
        all_pass = all_pass && pass;
    }
    void add(const std::string& name, bool pass) {
        checks.push_back({{"name", name}, {"pass", pass}});
        all_pass = all_pass && pass;
    }
};

inline std::string joined(const Election& e, const Committee& w) {
    std::string s;
    for (int c : w) s += (s.empty() ? "" : ",") + e.candidates[c];
    return s;
}

inline void reproduce_monroe_ex1(CheckList& ck) {
    Fixture f = fixture("monroe-ex1");
    const Election& e = f.election;
    auto res = monroe(e);
    ck.add("monroe committee", joined(e, res.committee) == "b,d", "b,d", joined(e, res.committee));
    ck.add("monroe value", res.value == 6, "6", std::to_string(res.value));
    auto core = check_core(e, res.committee, ThresholdMode::Exact);
    bool witness_ok = !core.in_core && core.witness &&
                      joined(e, core.witness->deviation) == "c" &&
                      core.witness->coalition == std::vector<int>{1, 2};
    ck.add("core violation S={2,3}, T={c}", witness_ok);
    ck.add("embedding verifies",
           !verify(e, DomainId::Euclid1D, f.certificates.at(DomainId::Euclid1D)).has_value());
    auto cc = committee_core(
        e, SelectionOrder::from_voters(e, std::get<VoterOrder>(f.certificates.at(DomainId::SC))));
    ck.add("pipeline committee", joined(e, cc.committee) == "b,c", "b,c", joined(e, cc.committee));
    ck.add("pipeline committee in core",
           check_core(e, cc.committee, ThresholdMode::Exact).in_core);
}

inline void reproduce_stv_ex2(CheckList& ck) {
    Fixture f = fixture("stv-ex2");
    const Election& e = f.election;
    auto res = stv(e);
    ck.add("stv committee", joined(e, res.committee) == "d,e", "d,e", joined(e, res.committee));
    ck.add("quota", res.quota == 21, "21", std::to_string(res.quota));
    bool trace_ok = res.trace.size() == 4 &&
                    res.trace[0].kind == StvEvent::Kind::Eliminated &&
                    e.candidates[res.trace[0].candidate] == "c" &&
                    res.trace[1].kind == StvEvent::Kind::Elected &&
                    e.candidates[res.trace[1].candidate] == "d" && res.trace[1].top_votes == 21 &&
                    res.trace[2].kind == StvEvent::Kind::Eliminated &&
                    e.candidates[res.trace[2].candidate] == "b" &&
                    res.trace[3].kind == StvEvent::Kind::Elected &&
                    e.candidates[res.trace[3].candidate] == "e" && res.trace[3].top_votes == 21;
    ck.add("four-event trace", trace_ok);
    auto core = check_core(e, res.committee, ThresholdMode::Exact);
    ck.add("core violation by {c} with 30 voters",
           !core.in_core && core.witness && joined(e, core.witness->deviation) == "c" &&
               core.witness->coalition.size() >= 30);
}

inline void reproduce_pav_ex3(CheckList& ck) {
    Fixture f = fixture("pav-ex3");
    const Election& e = f.election;
    auto res = pav(e);
    ck.add("pav committee", joined(e, res.committee) == "b1,b2,b3,b4,d1,d2,d3,d4",
           "b1,b2,b3,b4,d1,d2,d3,d4", joined(e, res.committee));
    ck.add("pav score 25/4", res.score == Rat(25, 4), "25/4", res.score.str());
    auto ceil = check_core(e, res.committee, ThresholdMode::Ceil);
    ck.add("ceil-mode violation by {a,b1..b4,c}",
           !ceil.in_core && ceil.witness &&
               joined(e, ceil.witness->deviation) == "a,b1,b2,b3,b4,c");
    // under the literal size bound the stated witness does not qualify;
    // the exact-mode verdict is recorded as part of the reproduction
    auto exact = check_core(e, res.committee, ThresholdMode::Exact);
    ck.add("exact-mode verdict recorded (in core)", exact.in_core);
}

inline void reproduce_rulex_ex4(CheckList& ck) {
    Fixture f = fixture("rulex-ex4");
    const Election& e = f.election;
    auto res = equal_shares(e);
    std::string expect = "a1,a2,a3,a4,b1,b2,b3,b4,e1,e2,x1,x2,y1,y2";
    Committee expected_committee = parse_committee_arg(e, expect);
    ck.add("equal-shares committee", res.committee == expected_committee, expect,
           joined(e, res.committee));
    bool rho_ok = res.rounds.size() == 14;
    for (int i = 0; i < 8 && rho_ok; ++i) rho_ok = res.rounds[i].rho == Rat(3, 32);
    if (rho_ok)
        rho_ok = res.rounds[8].rho == Rat(1, 8) && res.rounds[9].rho == Rat(1, 8) &&
                 e.candidates[res.rounds[8].candidate] == "e1" &&
                 e.candidates[res.rounds[9].candidate] == "e2";
    ck.add("rho trace 3/32 then 1/8", rho_ok);
    auto core = check_core(e, res.committee, ThresholdMode::Exact);
    ck.add("core violation by all 42 voters and a 14-candidate set",
           !core.in_core && core.witness && core.witness->coalition.size() == 42 &&
               core.witness->deviation.size() == 14);
}

inline void reproduce_ssc_not_lc(CheckList& ck) {
    Fixture f = fixture("ssc-not-lc");
    const Election& e = f.election;
    auto lc = recognize(e, DomainId::LC);
    ck.add("LC refuted over all 720 mixed orders",
           lc.outcome == RecognitionResult::Outcome::Refuted && lc.search_space == 720);
    auto ssc = recognize(e, DomainId::SSC);
    ck.add("SSC certified", ssc.outcome == RecognitionResult::Outcome::Certified &&
                                !verify(e, DomainId::SSC, *ssc.certificate).has_value());
}

inline void reproduce_tm_empty_core_r7(CheckList& ck) {
    Fixture f = fixture("tm-empty-core-r7");
    const Election& e = f.election;
    VoterOrder natural = std::get<VoterOrder>(f.certificates.at(DomainId::STC));
    ck.add("family is single-top-crossing", !verify(e, DomainId::STC, natural).has_value());

    std::vector<Committee> sample;
    sample.push_back(parse_committee_arg(e, "g,h,a1,a2,b1,b2,c1"));
    sample.push_back(parse_committee_arg(e, "a1,a2,a3,a4,a5,a6,a7")); // omits g entirely
    SplitMix64 rng(20210707);
    for (int i = 0; i < 25; ++i) {
        std::vector<int> pool(e.m());
        for (int c = 0; c < e.m(); ++c) pool[c] = c;
        for (int j = 0; j < e.k; ++j)
            std::swap(pool[j], pool[j + rng.below(static_cast<std::uint64_t>(e.m() - j))]);
        sample.push_back(make_committee({pool.begin(), pool.begin() + e.k}));
    }
    auto evidence = find_empty_core_evidence(e, sample, 2);
    bool all_blocked = true;
    for (const auto& [w, verdict] : evidence)
        all_blocked = all_blocked && !verdict.in_core && verdict.witness &&
                      validate_witness(e, w, *verdict.witness);
    ck.add("every sampled committee has a small blocking witness", all_blocked);

    std::vector<int> keep;
    for (int c = 0; c < e.m(); ++c)
        if (e.candidates[c] != "g" && e.candidates[c] != "h") keep.push_back(c);
    Election sub = induce_candidates(e, keep);
    std::vector<int> order(sub.n());
    for (int i = 0; i < sub.n(); ++i) order[i] = i;
    ck.add("a candidate-subset subinstance fails the crossing check",
           verify(sub, DomainId::STC, VoterOrder{order}).has_value());
}

inline int cmd_reproduce(Emitter& em, const std::string& example) {
    Fixture f = fixture(example); // validates the name
    json doc = base_doc("reproduce", serialize_election(f.election));
    doc["example"] = example;
    CheckList ck;
    if (example == "monroe-ex1") reproduce_monroe_ex1(ck);
    else if (example == "stv-ex2") reproduce_stv_ex2(ck);
    else if (example == "pav-ex3") reproduce_pav_ex3(ck);
    else if (example == "rulex-ex4") reproduce_rulex_ex4(ck);
    else if (example == "ssc-not-lc") reproduce_ssc_not_lc(ck);
    else if (example == "tm-empty-core-r7") reproduce_tm_empty_core_r7(ck);
    doc["outcome"] = {{"checks", ck.checks}, {"pass", ck.all_pass}};
    return em.finish(doc, ck.all_pass ? 0 : 2);
}

// --- entry point --------------------------------------------------------------

inline int run_cli(std::vector<std::string> args, std::ostream& out) {
    CLI::App app{"committee elections: core-stable committees on restricted domains"};
    app.require_subcommand(1);
    bool pretty = false;
    int threads = 1;
    app.add_flag("--pretty", pretty, "indent the JSON result");
    app.add_option("--threads", threads, "max worker threads (results are thread-count independent)");
    app.fallthrough();

    std::string rule, input, order_from = "auto", order_file, committee_arg;
    std::string mode = "exact", extension = "lex", domain, model, example, out_path;
    bool auto_expand = false;
    int max_t = -1, n = 1, m = 1, k = 1, preflib_k = 1;
    std::int64_t quota = -1;
    std::uint64_t budget = kDefaultSearchBudget, seed = 0;

    auto* elect = app.add_subcommand("elect", "run a voting rule");
    elect->add_option("--rule", rule, "monroe|stv|pav|equal-shares|committee-core|median")
        ->required();
    elect->add_option("--input", input, "election file, preflib file, or fixture name")->required();
    elect->add_option("--order-from", order_from, "auto|file (pipeline rules)");
    elect->add_option("--order-file", order_file, "certificate JSON for --order-from file");
    elect->add_flag("--auto-expand", auto_expand, "replicate voters k times when k does not divide n");
    elect->add_option("--budget", budget, "search budget for --order-from auto");
    elect->add_option("--k", preflib_k, "committee size for preflib inputs");

    auto* check = app.add_subcommand("check-core", "exact core membership of a committee");
    check->add_option("--input", input)->required();
    check->add_option("--committee", committee_arg, "comma-separated candidate names")->required();
    check->add_option("--mode", mode, "exact|ceil");
    check->add_option("--max-t", max_t, "bound on deviation size (default k)");
    check->add_option("--extension", extension, "lex|max");
    check->add_option("--k", preflib_k, "committee size for preflib inputs");

    auto* local = app.add_subcommand("check-local-stability", "local stability of a committee");
    local->add_option("--input", input)->required();
    local->add_option("--committee", committee_arg)->required();
    local->add_option("--quota", quota, "default ceil(n/k)");
    local->add_option("--k", preflib_k, "committee size for preflib inputs");

    auto* rec = app.add_subcommand("recognize", "search for a domain certificate");
    rec->add_option("--domain", domain, "SP|SC|VI|CI|LC|SSC|STP|STC|RSTC|TM|WELL_ORDERED")
        ->required();
    rec->add_option("--input", input)->required();
    rec->add_option("--budget", budget, "node budget for the search");
    rec->add_option("--k", preflib_k, "committee size for preflib inputs");

    auto* gen = app.add_subcommand("generate", "deterministic instance generator");
    gen->add_option("--model", model, "euclid1d|vi-intervals|ci-intervals|impartial-strict")
        ->required();
    gen->add_option("--n", n)->required();
    gen->add_option("--m", m)->required();
    gen->add_option("--k", k)->required();
    gen->add_option("--seed", seed)->required();
    gen->add_option("--out", out_path, "also write the election text to a file");

    auto* rep = app.add_subcommand("reproduce", "replay a named example end to end");
    rep->add_option("--example", example, "monroe-ex1|stv-ex2|pav-ex3|rulex-ex4|ssc-not-lc|tm-empty-core-r7")
        ->required();

    for (CLI::App* sub : {elect, check, local, rec, gen, rep}) sub->fallthrough();

    std::vector<const char*> argv;
    std::string prog = "corelect";
    argv.push_back(prog.c_str());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& err) {
        if (err.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        json doc;
        doc["version"] = "v1";
        doc["error"] = err.what();
        out << doc.dump() << '\n';
        return 1;
    }

    Emitter em{out, pretty};
    try {
        if (elect->parsed())
            return cmd_elect(em, rule, input, order_from, order_file, auto_expand, budget,
                             preflib_k);
        if (check->parsed())
            return cmd_check_core(em, input, committee_arg, mode, max_t, extension, preflib_k);
        if (local->parsed())
            return cmd_check_local_stability(em, input, committee_arg, quota, preflib_k);
        if (rec->parsed()) return cmd_recognize(em, domain, input, budget, preflib_k);
        if (gen->parsed()) return cmd_generate(em, model, n, m, k, seed, out_path);
        if (rep->parsed()) return cmd_reproduce(em, example);
    } catch (const std::exception& ex) {
        json doc;
        doc["version"] = "v1";
        doc["error"] = ex.what();
        out << (pretty ? doc.dump(2) : doc.dump()) << '\n';
        return 1;
    }
    return 1;
}

} // namespace corelect::cli
