// Preference-domain certificates, verifiers and recognizers.
//
// Verifiers check a supplied witness order or embedding against the
// quantified domain condition and report the first violating tuple under
// a fixed scan order. Recognizers search for a certificate: polynomial
// procedures for strict SP/SC, pruned exact backtracking elsewhere, with
// an explicit node budget so refuted/certified answers are exact and
// `unknown` is only a budget artifact.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "corelect/election.hpp"

namespace corelect {

enum class DomainId { SP, SC, Euclid1D, VI, CI, LC, SSC, STP, STC, RSTC, TM, WellOrdered };

inline const char* domain_name(DomainId d) {
    switch (d) {
        case DomainId::SP: return "SP";
        case DomainId::SC: return "SC";
        case DomainId::Euclid1D: return "EUCLID1D";
        case DomainId::VI: return "VI";
        case DomainId::CI: return "CI";
        case DomainId::LC: return "LC";
        case DomainId::SSC: return "SSC";
        case DomainId::STP: return "STP";
        case DomainId::STC: return "STC";
        case DomainId::RSTC: return "RSTC";
        case DomainId::TM: return "TM";
        case DomainId::WellOrdered: return "WELL_ORDERED";
    }
    return "?";
}

inline DomainId domain_from_name(const std::string& s) {
    static const std::map<std::string, DomainId> table = {
        {"SP", DomainId::SP}, {"SC", DomainId::SC}, {"EUCLID1D", DomainId::Euclid1D},
        {"VI", DomainId::VI}, {"CI", DomainId::CI}, {"LC", DomainId::LC},
        {"SSC", DomainId::SSC}, {"STP", DomainId::STP}, {"STC", DomainId::STC},
        {"RSTC", DomainId::RSTC}, {"TM", DomainId::TM}, {"WELL_ORDERED", DomainId::WellOrdered},
    };
    std::string up;
    for (char c : s) up.push_back(c == '-' ? '_' : static_cast<char>(std::toupper(c)));
    auto it = table.find(up);
    if (it == table.end()) throw InputError("unknown domain: " + s);
    return it->second;
}

// --- certificates ---------------------------------------------------------

struct VoterOrder {
    std::vector<int> order; // permutation of voter indices, first = greatest
};

struct CandidateOrder {
    std::vector<int> order; // permutation of candidate indices
};

struct MixedItem {
    bool is_candidate = false;
    int index = 0;
    bool operator==(const MixedItem&) const = default;
};

struct MixedOrder {
    std::vector<MixedItem> order; // permutation of voters and candidates

    std::vector<int> voter_part() const {
        std::vector<int> v;
        for (const auto& it : order)
            if (!it.is_candidate) v.push_back(it.index);
        return v;
    }
    std::vector<int> candidate_part() const {
        std::vector<int> c;
        for (const auto& it : order)
            if (it.is_candidate) c.push_back(it.index);
        return c;
    }
};

struct Embedding {
    std::vector<Rat> voter_coord;
    std::vector<Rat> candidate_coord;
};

using DomainCertificate = std::variant<VoterOrder, CandidateOrder, MixedOrder, Embedding>;

inline void check_permutation(const std::vector<int>& order, int size, const char* what) {
    if (static_cast<int>(order.size()) != size)
        throw InputError(std::string(what) + ": order has wrong length");
    std::vector<bool> seen(size, false);
    for (int x : order) {
        if (x < 0 || x >= size || seen[x])
            throw InputError(std::string(what) + ": not a permutation");
        seen[x] = true;
    }
}

// Lifts a certificate across expand_election: copies of voter i occupy
// indices i*k .. i*k+k-1 and stay adjacent.
inline VoterOrder lift_voter_order(const VoterOrder& vo, int k) {
    VoterOrder out;
    for (int v : vo.order)
        for (int t = 0; t < k; ++t) out.order.push_back(v * k + t);
    return out;
}

inline MixedOrder lift_mixed_order(const MixedOrder& mo, int k) {
    MixedOrder out;
    for (const auto& it : mo.order) {
        if (it.is_candidate) {
            out.order.push_back(it);
        } else {
            for (int t = 0; t < k; ++t)
                out.order.push_back(MixedItem{false, it.index * k + t});
        }
    }
    return out;
}

// --- verification ---------------------------------------------------------

struct ViolationItem {
    std::string role;
    bool is_candidate = false;
    int index = 0;
};

struct Violation {
    DomainId domain = DomainId::SP;
    std::vector<ViolationItem> items;
};

namespace detail {

inline ViolationItem vit(const char* role, int voter) { return {role, false, voter}; }
inline ViolationItem cit(const char* role, int cand) { return {role, true, cand}; }

inline std::optional<int> singleton_top(const WeakRanking& r) {
    if (r.top_class().size() == 1) return r.top_class()[0];
    return std::nullopt;
}

// a strictly above every member of y's top class
inline bool beats_top(const WeakRanking& x, const WeakRanking& y, int a) {
    for (int t : y.top_class())
        if (!x.strictly_prefers(a, t)) return false;
    return true;
}

// every member of y's top class strictly above a
inline bool top_beats(const WeakRanking& z, const WeakRanking& y, int a) {
    for (int t : y.top_class())
        if (!z.strictly_prefers(t, a)) return false;
    return true;
}

inline std::vector<bool> top_candidate_mask(const Election& e) {
    std::vector<bool> top(e.m(), false);
    for (const auto& v : e.voters)
        for (int c : v.top_class()) top[c] = true;
    return top;
}

inline bool approves(const Election& e, int voter, int cand) {
    return e.voters[voter].in_top(cand);
}

// Shared condition of both top-monotonicity bullets for a concrete
// assignment (a, b, c, i, j): b weakly above c for i when c is a top
// choice of i or j, strictly otherwise.
inline bool tm_conclusion_holds(const Election& e, int a, int b, int c, int i, int j) {
    (void)a;
    const WeakRanking& ri = e.voters[i];
    bool c_topped = ri.in_top(c) || e.voters[j].in_top(c);
    return c_topped ? ri.weakly_prefers(b, c) : ri.strictly_prefers(b, c);
}

} // namespace detail

inline std::optional<Violation> verify_sp(const Election& e, const CandidateOrder& axis) {
    check_permutation(axis.order, e.m(), "SP certificate");
    std::vector<std::optional<int>> stop(e.n());
    for (int v = 0; v < e.n(); ++v) stop[v] = detail::singleton_top(e.voters[v]);
    const auto& o = axis.order;
    for (int pa = 0; pa < e.m(); ++pa)
        for (int pb = pa + 1; pb < e.m(); ++pb)
            for (int pc = pb + 1; pc < e.m(); ++pc) {
                int a = o[pa], b = o[pb], c = o[pc];
                for (int v = 0; v < e.n(); ++v) {
                    if (stop[v] == a && !e.voters[v].strictly_prefers(b, c))
                        return Violation{DomainId::SP,
                                         {detail::cit("a", a), detail::cit("b", b),
                                          detail::cit("c", c), detail::vit("i", v)}};
                    if (stop[v] == c && !e.voters[v].strictly_prefers(b, a))
                        return Violation{DomainId::SP,
                                         {detail::cit("a", a), detail::cit("b", b),
                                          detail::cit("c", c), detail::vit("i", v)}};
                }
            }
    return std::nullopt;
}

inline std::optional<Violation> verify_sc(const Election& e, const VoterOrder& vo) {
    check_permutation(vo.order, e.n(), "SC certificate");
    const auto& o = vo.order;
    for (int a = 0; a < e.m(); ++a)
        for (int b = 0; b < e.m(); ++b) {
            if (a == b) continue;
            // pattern along the order: b>a then a>b then not(a>b)
            int first_x = -1, first_y = -1;
            for (int p = 0; p < e.n(); ++p) {
                const WeakRanking& r = e.voters[o[p]];
                if (first_x == -1) {
                    if (r.strictly_prefers(b, a)) first_x = p;
                } else if (first_y == -1) {
                    if (r.strictly_prefers(a, b)) first_y = p;
                } else if (!r.strictly_prefers(a, b)) {
                    return Violation{DomainId::SC,
                                     {detail::cit("a", a), detail::cit("b", b),
                                      detail::vit("x", o[first_x]), detail::vit("y", o[first_y]),
                                      detail::vit("z", o[p])}};
                }
            }
        }
    return std::nullopt;
}

inline std::optional<Violation> verify_euclid1d(const Election& e, const Embedding& emb) {
    if (static_cast<int>(emb.voter_coord.size()) != e.n() ||
        static_cast<int>(emb.candidate_coord.size()) != e.m())
        throw InputError("EUCLID1D certificate: coordinate count mismatch");
    auto dist = [&](int v, int c) {
        Rat d = emb.candidate_coord[c] - emb.voter_coord[v];
        return d < Rat(0) ? -d : d;
    };
    for (int v = 0; v < e.n(); ++v)
        for (int a = 0; a < e.m(); ++a)
            for (int b = a + 1; b < e.m(); ++b) {
                Rat da = dist(v, a), db = dist(v, b);
                const WeakRanking& r = e.voters[v];
                bool ok = (da < db)   ? r.strictly_prefers(a, b)
                          : (db < da) ? r.strictly_prefers(b, a)
                                      : r.indifferent(a, b);
                if (!ok)
                    return Violation{DomainId::Euclid1D,
                                     {detail::vit("i", v), detail::cit("a", a), detail::cit("b", b)}};
            }
    return std::nullopt;
}

inline std::optional<Violation> verify_vi(const Election& e, const VoterOrder& vo) {
    check_permutation(vo.order, e.n(), "VI certificate");
    const auto& o = vo.order;
    for (int c = 0; c < e.m(); ++c) {
        int first = -1, last = -1;
        for (int p = 0; p < e.n(); ++p)
            if (detail::approves(e, o[p], c)) {
                if (first == -1) first = p;
                last = p;
            }
        for (int p = first + 1; p < last && first != -1; ++p)
            if (!detail::approves(e, o[p], c))
                return Violation{DomainId::VI,
                                 {detail::vit("v1", o[first]), detail::vit("v2", o[p]),
                                  detail::vit("v3", o[last]), detail::cit("c", c)}};
    }
    return std::nullopt;
}

inline std::optional<Violation> verify_ci(const Election& e, const CandidateOrder& co) {
    check_permutation(co.order, e.m(), "CI certificate");
    const auto& o = co.order;
    for (int v = 0; v < e.n(); ++v) {
        int first = -1, last = -1;
        for (int p = 0; p < e.m(); ++p)
            if (detail::approves(e, v, o[p])) {
                if (first == -1) first = p;
                last = p;
            }
        for (int p = first + 1; p < last && first != -1; ++p)
            if (!detail::approves(e, v, o[p]))
                return Violation{DomainId::CI,
                                 {detail::vit("i", v), detail::cit("a", o[first]),
                                  detail::cit("b", o[p]), detail::cit("c", o[last])}};
    }
    return std::nullopt;
}

inline std::optional<Violation> verify_lc(const Election& e, const MixedOrder& mo) {
    std::vector<int> vorder = mo.voter_part();
    std::vector<int> corder = mo.candidate_part();
    check_permutation(vorder, e.n(), "LC certificate (voters)");
    check_permutation(corder, e.m(), "LC certificate (candidates)");
    for (int pi = 0; pi < e.n(); ++pi)
        for (int pj = pi + 1; pj < e.n(); ++pj) {
            int i = vorder[pi], j = vorder[pj];
            for (int pa = 0; pa < e.m(); ++pa)
                for (int pb = pa + 1; pb < e.m(); ++pb) {
                    int a = corder[pa], b = corder[pb];
                    if (detail::approves(e, j, a) && detail::approves(e, i, b) &&
                        !detail::approves(e, i, a))
                        return Violation{DomainId::LC,
                                         {detail::vit("i", i), detail::vit("j", j),
                                          detail::cit("a", a), detail::cit("b", b)}};
                }
        }
    return std::nullopt;
}

inline std::optional<Violation> verify_ssc(const Election& e, const VoterOrder& vo) {
    check_permutation(vo.order, e.n(), "SSC certificate");
    const auto& o = vo.order;
    for (int a = 0; a < e.m(); ++a)
        for (int b = a + 1; b < e.m(); ++b) {
            int minA = -1, maxA = -1, minB = -1, maxB = -1;
            for (int p = 0; p < e.n(); ++p) {
                bool pa = detail::approves(e, o[p], a), pb = detail::approves(e, o[p], b);
                if (pa && !pb) { if (minA == -1) minA = p; maxA = p; }
                if (pb && !pa) { if (minB == -1) minB = p; maxB = p; }
            }
            if (minA == -1 || minB == -1) continue;
            bool a_before_b = maxA < minB, b_before_a = maxB < minA;
            if (!a_before_b && !b_before_a)
                return Violation{DomainId::SSC,
                                 {detail::cit("a", a), detail::cit("b", b),
                                  detail::vit("a_not_b_first", o[minA]),
                                  detail::vit("a_not_b_last", o[maxA]),
                                  detail::vit("b_not_a_first", o[minB]),
                                  detail::vit("b_not_a_last", o[maxB])}};
        }
    return std::nullopt;
}

inline std::optional<Violation> verify_stp(const Election& e, const CandidateOrder& axis) {
    check_permutation(axis.order, e.m(), "STP certificate");
    std::vector<bool> topc = detail::top_candidate_mask(e);
    std::vector<std::optional<int>> stop(e.n());
    for (int v = 0; v < e.n(); ++v) stop[v] = detail::singleton_top(e.voters[v]);
    const auto& o = axis.order;
    for (int pa = 0; pa < e.m(); ++pa)
        for (int pb = pa + 1; pb < e.m(); ++pb) {
            if (!topc[o[pb]]) continue;
            for (int pc = pb + 1; pc < e.m(); ++pc) {
                int a = o[pa], b = o[pb], c = o[pc];
                for (int v = 0; v < e.n(); ++v) {
                    if (stop[v] == a && !e.voters[v].strictly_prefers(b, c))
                        return Violation{DomainId::STP,
                                         {detail::cit("a", a), detail::cit("b", b),
                                          detail::cit("c", c), detail::vit("i", v)}};
                    if (stop[v] == c && !e.voters[v].strictly_prefers(b, a))
                        return Violation{DomainId::STP,
                                         {detail::cit("a", a), detail::cit("b", b),
                                          detail::cit("c", c), detail::vit("i", v)}};
                }
            }
        }
    return std::nullopt;
}

inline std::optional<Violation> verify_stc(const Election& e, const VoterOrder& vo) {
    check_permutation(vo.order, e.n(), "STC certificate");
    const auto& o = vo.order;
    for (int a = 0; a < e.m(); ++a)
        for (int py = 0; py < e.n(); ++py) {
            const WeakRanking& ry = e.voters[o[py]];
            int first_x = -1;
            for (int p = 0; p < py; ++p)
                if (detail::beats_top(e.voters[o[p]], ry, a)) { first_x = p; break; }
            if (first_x == -1) continue;
            for (int pz = py + 1; pz < e.n(); ++pz)
                if (!detail::top_beats(e.voters[o[pz]], ry, a))
                    return Violation{DomainId::STC,
                                     {detail::cit("a", a), detail::vit("x", o[first_x]),
                                      detail::vit("y", o[py]), detail::vit("z", o[pz])}};
        }
    return std::nullopt;
}

inline std::optional<Violation> verify_tm(const Election& e, const CandidateOrder& axis) {
    check_permutation(axis.order, e.m(), "TM certificate");
    std::vector<bool> topc = detail::top_candidate_mask(e);
    const auto& o = axis.order;
    auto check_assignment = [&](int a, int b, int c, int bullet) -> std::optional<Violation> {
        if (bullet == 1) {
            for (int i = 0; i < e.n(); ++i) {
                if (!e.voters[i].in_top(a)) continue;
                for (int j = 0; j < e.n(); ++j) {
                    if (!e.voters[j].in_top(b)) continue;
                    if (!detail::tm_conclusion_holds(e, a, b, c, i, j))
                        return Violation{DomainId::TM,
                                         {detail::cit("a", a), detail::cit("b", b), detail::cit("c", c),
                                          detail::vit("i", i), detail::vit("j", j)}};
                }
            }
        } else {
            if (!(topc[a] && topc[b] && topc[c])) return std::nullopt;
            for (int i = 0; i < e.n(); ++i) {
                const WeakRanking& ri = e.voters[i];
                if (!(ri.weakly_prefers(a, b) && ri.weakly_prefers(a, c))) continue;
                for (int j = 0; j < e.n(); ++j) {
                    const WeakRanking& rj = e.voters[j];
                    if (!(rj.weakly_prefers(b, a) && rj.weakly_prefers(b, c))) continue;
                    if (!detail::tm_conclusion_holds(e, a, b, c, i, j))
                        return Violation{DomainId::TM,
                                         {detail::cit("a", a), detail::cit("b", b), detail::cit("c", c),
                                          detail::vit("i", i), detail::vit("j", j)}};
                }
            }
        }
        return std::nullopt;
    };
    for (int p1 = 0; p1 < e.m(); ++p1)
        for (int p2 = p1 + 1; p2 < e.m(); ++p2)
            for (int p3 = p2 + 1; p3 < e.m(); ++p3) {
                int x = o[p1], y = o[p2], z = o[p3];
                for (int bullet : {1, 2}) {
                    if (auto v = check_assignment(x, y, z, bullet)) return v;
                    if (auto v = check_assignment(z, y, x, bullet)) return v;
                }
            }
    return std::nullopt;
}

inline std::optional<Violation> verify_well_ordered(const Election& e, const MixedOrder& mo) {
    std::vector<int> vorder = mo.voter_part();
    std::vector<int> corder = mo.candidate_part();
    check_permutation(vorder, e.n(), "WELL_ORDERED certificate (voters)");
    check_permutation(corder, e.m(), "WELL_ORDERED certificate (candidates)");
    for (int pi = 0; pi < e.n(); ++pi)
        for (int pj = pi + 1; pj < e.n(); ++pj) {
            int i = vorder[pi], j = vorder[pj];
            const WeakRanking& rj = e.voters[j];
            for (int pa = 0; pa < e.m(); ++pa)
                for (int pb = pa + 1; pb < e.m(); ++pb) {
                    int a = corder[pa], b = corder[pb];
                    if (rj.indifferent(a, b) && !rj.in_bottom(a) && !rj.in_bottom(b) &&
                        !e.voters[i].weakly_prefers(a, b))
                        return Violation{DomainId::WellOrdered,
                                         {detail::vit("i", i), detail::vit("j", j),
                                          detail::cit("a", a), detail::cit("b", b)}};
                }
        }
    return std::nullopt;
}

// Dispatching verifier; the certificate kind must match the domain.
inline std::optional<Violation> verify(const Election& e, DomainId domain,
                                       const DomainCertificate& cert) {
    e.validate();
    auto wrong = [&]() -> InputError {
        return InputError(std::string("verify: certificate kind does not match domain ") +
                          domain_name(domain));
    };
    switch (domain) {
        case DomainId::SP:
            if (auto* c = std::get_if<CandidateOrder>(&cert)) return verify_sp(e, *c);
            throw wrong();
        case DomainId::SC:
            if (auto* c = std::get_if<VoterOrder>(&cert)) return verify_sc(e, *c);
            throw wrong();
        case DomainId::Euclid1D:
            if (auto* c = std::get_if<Embedding>(&cert)) return verify_euclid1d(e, *c);
            throw wrong();
        case DomainId::VI:
            if (auto* c = std::get_if<VoterOrder>(&cert)) return verify_vi(e, *c);
            throw wrong();
        case DomainId::CI:
            if (auto* c = std::get_if<CandidateOrder>(&cert)) return verify_ci(e, *c);
            throw wrong();
        case DomainId::LC:
            if (auto* c = std::get_if<MixedOrder>(&cert)) return verify_lc(e, *c);
            throw wrong();
        case DomainId::SSC:
            if (auto* c = std::get_if<VoterOrder>(&cert)) return verify_ssc(e, *c);
            throw wrong();
        case DomainId::STP:
            if (auto* c = std::get_if<CandidateOrder>(&cert)) return verify_stp(e, *c);
            throw wrong();
        case DomainId::STC:
            if (auto* c = std::get_if<VoterOrder>(&cert)) return verify_stc(e, *c);
            throw wrong();
        case DomainId::RSTC:
            throw InputError("verify: r-STC has no single-certificate verifier; use recognize");
        case DomainId::TM:
            if (auto* c = std::get_if<CandidateOrder>(&cert)) return verify_tm(e, *c);
            throw wrong();
        case DomainId::WellOrdered:
            if (auto* c = std::get_if<MixedOrder>(&cert)) return verify_well_ordered(e, *c);
            throw wrong();
    }
    throw InputError("verify: unknown domain");
}

} // namespace corelect
