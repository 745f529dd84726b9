#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "corelect/election.hpp"
#include "helpers.hpp"

using namespace corelect;
using testutil::approval_election;
using testutil::committee;
using testutil::line_example;
using testutil::strict_election;

TEST_CASE("position_of follows the weak ranking") {
    Election e = line_example();
    REQUIRE(position_of(e, 0, e.candidate_index("c")) == 3);
    REQUIRE(position_of(e, 0, e.candidate_index("b")) == 1);
    REQUIRE(position_of(e, 3, e.candidate_index("d")) == 1);

    Election ap = approval_election({"a", "b", "c"}, {{"a", "b"}}, 1);
    REQUIRE(position_of(ap, 0, ap.candidate_index("c")) == 2);
    REQUIRE(position_of(ap, 0, ap.candidate_index("a")) == 1);

    REQUIRE_THROWS_AS(position_of(e, 9, 0), InputError);
    REQUIRE_THROWS_AS(position_of(e, 0, 99), InputError);
}

TEST_CASE("lex_compare decides by the first differing class") {
    Election e = line_example();
    // middle voter prefers {c} to {b,d}
    REQUIRE(lex_compare(e, 1, committee(e, {"c"}), committee(e, {"b", "d"})) ==
            LexOrdering::FirstStrictlyPreferred);
    REQUIRE(lex_compare(e, 1, committee(e, {"b", "d"}), committee(e, {"c"})) ==
            LexOrdering::SecondStrictlyPreferred);
    for (int v = 0; v < e.n(); ++v)
        REQUIRE(lex_compare(e, v, committee(e, {"b", "d"}), committee(e, {"b", "d"})) ==
                LexOrdering::Equivalent);

    // approval voter counts approved members: 5 approved beats 4
    Election ap = approval_election(
        {"a", "b1", "b2", "b3", "b4", "c", "d1", "d2", "d3", "d4"},
        {{"b1", "b2", "b3", "b4", "a"}, {"b1", "b2", "b3", "b4", "c"}, {"d1", "d2", "d3", "d4"}},
        8);
    REQUIRE(lex_compare(ap, 0, committee(ap, {"a", "b1", "b2", "b3", "b4", "c"}),
                        committee(ap, {"b1", "b2", "b3", "b4", "d1", "d2", "d3", "d4"})) ==
            LexOrdering::FirstStrictlyPreferred);
}

TEST_CASE("lex_compare is antisymmetric and respects top-class counts") {
    std::mt19937_64 rng(20240819);
    for (int trial = 0; trial < 200; ++trial) {
        int m = 2 + static_cast<int>(rng() % 4);
        int n = 1 + static_cast<int>(rng() % 4);
        std::vector<std::vector<std::string>> rankings(n);
        std::vector<std::string> names;
        for (int c = 0; c < m; ++c) names.push_back("c" + std::to_string(c + 1));
        for (auto& r : rankings) {
            r = names;
            std::shuffle(r.begin(), r.end(), rng);
        }
        Election e = strict_election(names, rankings, 1 + static_cast<int>(rng() % m));
        Committee a, b;
        for (int c = 0; c < m; ++c) {
            if (rng() % 2) a.push_back(c);
            if (rng() % 2) b.push_back(c);
        }
        for (int v = 0; v < n; ++v) {
            LexOrdering ab = lex_compare(e, v, a, b);
            REQUIRE(lex_compare(e, v, b, a) == flip(ab));
            int ta = 0, tb = 0;
            for (int c : a) ta += e.voters[v].in_top(c) ? 1 : 0;
            for (int c : b) tb += e.voters[v].in_top(c) ? 1 : 0;
            if (ta > tb) REQUIRE(ab == LexOrdering::FirstStrictlyPreferred);
        }
    }
}

TEST_CASE("fractional comparison agrees with set comparison on indicators") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int m = 2 + static_cast<int>(rng() % 4); // exhaustive committees for m <= 5
        int n = 1 + static_cast<int>(rng() % 3);
        std::vector<std::string> names;
        for (int c = 0; c < m; ++c) names.push_back("c" + std::to_string(c + 1));
        std::vector<std::vector<std::string>> rankings(n, names);
        for (auto& r : rankings) std::shuffle(r.begin(), r.end(), rng);
        Election e = strict_election(names, rankings, 1);
        for (unsigned sa = 0; sa < (1u << m); ++sa)
            for (unsigned sb = 0; sb < (1u << m); ++sb) {
                Committee a, b;
                for (int c = 0; c < m; ++c) {
                    if (sa & (1u << c)) a.push_back(c);
                    if (sb & (1u << c)) b.push_back(c);
                }
                auto pa = FractionalCommittee::indicator(a, m);
                auto pb = FractionalCommittee::indicator(b, m);
                for (int v = 0; v < n; ++v)
                    REQUIRE(lex_compare_fractional(e, v, pa, pb) == lex_compare(e, v, a, b));
            }
    }
}

TEST_CASE("fractional comparison on the line example's phase-one output") {
    Election e = line_example();
    FractionalCommittee p;
    p.mass.assign(5, Rat(0));
    p.mass[e.candidate_index("b")] = Rat(1, 2);
    p.mass[e.candidate_index("c")] = Rat(1);
    p.mass[e.candidate_index("d")] = Rat(1, 2);
    auto ind_c = FractionalCommittee::indicator(committee(e, {"c"}), 5);
    // voter 2: class 1 mass 1 vs 1, class 2 mass 1/2 vs 0 -> p wins
    REQUIRE(lex_compare_fractional(e, 1, p, ind_c) == LexOrdering::FirstStrictlyPreferred);
    REQUIRE(lex_compare_fractional(e, 1, p, p) == LexOrdering::Equivalent);
}

TEST_CASE("expand_election replicates voters adjacently") {
    Election ap = approval_election(
        {"a", "b1", "b2", "b3", "b4", "c", "d1", "d2", "d3", "d4"},
        {{"b1", "b2", "b3", "b4", "a"}, {"b1", "b2", "b3", "b4", "c"}, {"d1", "d2", "d3", "d4"}},
        8);
    Election ex = expand_election(ap);
    REQUIRE(ex.n() == 24);
    REQUIRE(ex.n() % ex.k == 0);
    for (int i = 0; i < ap.n(); ++i)
        for (int t = 0; t < ap.k; ++t)
            REQUIRE(ex.voters[i * ap.k + t] == ap.voters[i]);

    Election single = approval_election({"a", "b"}, {{"a"}}, 1);
    REQUIRE(expand_election(single) == single);
}

TEST_CASE("weak ranking construction validates its input") {
    REQUIRE_THROWS_AS(WeakRanking::from_classes({{0}, {0, 1}}, 2), InputError);
    REQUIRE_THROWS_AS(WeakRanking::from_classes({{0}}, 2), InputError);
    REQUIRE_THROWS_AS(WeakRanking::from_classes({{0}, {}}, 1), InputError);
    Election e;
    e.candidates = {"a"};
    e.k = 2;
    e.voters.push_back(WeakRanking::from_classes({{0}}, 1));
    e.voter_ids.push_back("1");
    REQUIRE_THROWS_AS(e.validate(), InputError);
}

TEST_CASE("induced subelection restricts rankings") {
    Election e = line_example();
    Election sub = induce_candidates(e, {e.candidate_index("b"), e.candidate_index("d")});
    REQUIRE(sub.m() == 2);
    REQUIRE(sub.candidates == std::vector<std::string>{"b", "d"});
    // voter 4 ranked d above b
    REQUIRE(sub.voters[3].strictly_prefers(sub.candidate_index("d"), sub.candidate_index("b")));
    REQUIRE(sub.voters[0].strictly_prefers(sub.candidate_index("b"), sub.candidate_index("d")));
}
