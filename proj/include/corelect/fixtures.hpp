// Named fixture instances with their witness certificates: the worked
// examples for Monroe, STV, PAV and equal shares, the approval profile
// separating SSC from LC, and the empty-core family at r = 7.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "corelect/domains.hpp"
#include "corelect/generate.hpp"

namespace corelect {

struct Fixture {
    std::string name;
    Election election;
    std::map<DomainId, DomainCertificate> certificates;
};

namespace detail {

inline WeakRanking strict_row(const Election& e, const std::vector<const char*>& names) {
    std::vector<std::vector<int>> classes;
    for (const char* n : names) classes.push_back({e.candidate_index(n)});
    return WeakRanking::from_classes(std::move(classes), e.m());
}

inline WeakRanking approval_row(const Election& e, const std::vector<const char*>& approved) {
    std::vector<int> top, rest;
    for (const char* n : approved) top.push_back(e.candidate_index(n));
    for (int c = 0; c < e.m(); ++c)
        if (std::find(top.begin(), top.end(), c) == top.end()) rest.push_back(c);
    std::vector<std::vector<int>> classes{top};
    if (!rest.empty()) classes.push_back(rest);
    return WeakRanking::from_classes(std::move(classes), e.m());
}

inline std::vector<int> iota_order(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

inline Fixture fixture_monroe_ex1() {
    Fixture f;
    f.name = "monroe-ex1";
    Election& e = f.election;
    e.candidates = {"a", "b", "c", "d", "e"};
    e.k = 2;
    e.voters = {
        strict_row(e, {"b", "a", "c", "d", "e"}),
        strict_row(e, {"c", "b", "d", "a", "e"}),
        strict_row(e, {"c", "d", "b", "e", "a"}),
        strict_row(e, {"d", "e", "c", "b", "a"}),
    };
    default_ids(e);
    Embedding emb;
    emb.candidate_coord = {Rat(0), Rat(3), Rat(6), Rat(9), Rat(12)};
    emb.voter_coord = {Rat(2), Rat(5), Rat(7), Rat(10)};
    f.certificates.emplace(DomainId::Euclid1D, emb);
    f.certificates.emplace(DomainId::SP, CandidateOrder{iota_order(5)});
    f.certificates.emplace(DomainId::SC, VoterOrder{iota_order(4)});
    f.certificates.emplace(DomainId::STC, VoterOrder{iota_order(4)});
    return f;
}

inline Fixture fixture_stv_ex2() {
    Fixture f;
    f.name = "stv-ex2";
    Election& e = f.election;
    e.candidates = {"a", "b", "c", "d", "e"};
    e.k = 2;
    struct Group { int size; std::vector<const char*> ranking; };
    const std::vector<Group> groups = {
        {18, {"a", "b", "c", "d", "e"}},
        {7, {"b", "c", "d", "e", "a"}},
        {5, {"c", "d", "e", "b", "a"}},
        {16, {"d", "e", "c", "b", "a"}},
        {14, {"e", "d", "c", "b", "a"}},
    };
    Embedding emb;
    emb.candidate_coord = {Rat(0), Rat(8), Rat(12), Rat(14), Rat(15)};
    for (std::size_t gi = 0; gi < groups.size(); ++gi)
        for (int i = 0; i < groups[gi].size; ++i) {
            e.voters.push_back(strict_row(e, groups[gi].ranking));
            emb.voter_coord.push_back(emb.candidate_coord[gi]);
        }
    default_ids(e);
    f.certificates.emplace(DomainId::Euclid1D, emb);
    f.certificates.emplace(DomainId::SP, CandidateOrder{iota_order(5)});
    f.certificates.emplace(DomainId::SC, VoterOrder{iota_order(60)});
    f.certificates.emplace(DomainId::STC, VoterOrder{iota_order(60)});
    return f;
}

inline Fixture fixture_pav_ex3() {
    Fixture f;
    f.name = "pav-ex3";
    Election& e = f.election;
    e.candidates = {"a", "b1", "b2", "b3", "b4", "c", "d1", "d2", "d3", "d4"};
    e.k = 8;
    e.voters = {
        approval_row(e, {"b1", "b2", "b3", "b4", "a"}),
        approval_row(e, {"b1", "b2", "b3", "b4", "c"}),
        approval_row(e, {"d1", "d2", "d3", "d4"}),
    };
    default_ids(e);
    f.certificates.emplace(DomainId::VI, VoterOrder{iota_order(3)});
    f.certificates.emplace(DomainId::CI, CandidateOrder{iota_order(10)});
    return f;
}

inline Fixture fixture_rulex_ex4() {
    Fixture f;
    f.name = "rulex-ex4";
    Election& e = f.election;
    // declaration order puts the narrow outer candidates before the wide
    // middle ones so that payment ties resolve the way the walkthrough
    // elects them
    e.candidates = {"x1", "x2", "y1", "y2", "a1", "a2", "a3", "a4",
                    "b1", "b2", "b3", "b4", "e1", "e2",
                    "c1", "c2", "c3", "d1", "d2", "d3"};
    e.k = 14;
    struct Group { int size; std::vector<const char*> approved; };
    const std::vector<Group> groups = {
        {1, {"c1", "c2", "c3", "x1", "x2"}},
        {8, {"c1", "c2", "c3", "x1", "x2", "a1", "a2", "a3", "a4"}},
        {12, {"c1", "c2", "c3", "a1", "a2", "a3", "a4", "b1", "b2", "b3", "b4", "e1", "e2"}},
        {12, {"d1", "d2", "d3", "b1", "b2", "b3", "b4", "a1", "a2", "a3", "a4", "e1", "e2"}},
        {8, {"d1", "d2", "d3", "y1", "y2", "b1", "b2", "b3", "b4"}},
        {1, {"d1", "d2", "d3", "y1", "y2"}},
    };
    for (const auto& g : groups)
        for (int i = 0; i < g.size; ++i) e.voters.push_back(approval_row(e, g.approved));
    default_ids(e);
    f.certificates.emplace(DomainId::VI, VoterOrder{iota_order(42)});
    CandidateOrder ci;
    for (const char* n : {"x1", "x2", "c1", "c2", "c3", "a1", "a2", "a3", "a4",
                          "e1", "e2", "b1", "b2", "b3", "b4", "d1", "d2", "d3", "y1", "y2"})
        ci.order.push_back(e.candidate_index(n));
    f.certificates.emplace(DomainId::CI, ci);
    return f;
}

inline Fixture fixture_ssc_not_lc() {
    Fixture f;
    f.name = "ssc-not-lc";
    Election& e = f.election;
    e.candidates = {"a", "b", "c"};
    e.k = 1;
    e.voters = {
        approval_row(e, {"a", "c"}),
        approval_row(e, {"a", "b"}),
        approval_row(e, {"b", "c"}),
    };
    default_ids(e);
    f.certificates.emplace(DomainId::SSC, VoterOrder{iota_order(3)});
    return f;
}

inline Fixture fixture_tm_empty_core_r7() {
    Fixture f;
    f.name = "tm-empty-core-r7";
    f.election = tm_empty_core_family(7);
    f.certificates.emplace(DomainId::STC, VoterOrder{iota_order(42)});
    return f;
}

} // namespace detail

inline std::vector<std::string> fixture_names() {
    return {"monroe-ex1", "stv-ex2", "pav-ex3", "rulex-ex4", "ssc-not-lc", "tm-empty-core-r7"};
}

inline Fixture fixture(const std::string& name) {
    if (name == "monroe-ex1") return detail::fixture_monroe_ex1();
    if (name == "stv-ex2") return detail::fixture_stv_ex2();
    if (name == "pav-ex3") return detail::fixture_pav_ex3();
    if (name == "rulex-ex4") return detail::fixture_rulex_ex4();
    if (name == "ssc-not-lc") return detail::fixture_ssc_not_lc();
    if (name == "tm-empty-core-r7") return detail::fixture_tm_empty_core_r7();
    throw InputError("unknown fixture: " + name);
}

} // namespace corelect
