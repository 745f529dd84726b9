// Shared builders for hand-written test elections.

#pragma once

#include <string>
#include <vector>

#include "corelect/election.hpp"

namespace testutil {

inline corelect::Election strict_election(std::vector<std::string> candidates,
                                          const std::vector<std::vector<std::string>>& rankings,
                                          int k) {
    corelect::Election e;
    e.candidates = std::move(candidates);
    e.k = k;
    int m = e.m();
    for (std::size_t i = 0; i < rankings.size(); ++i) {
        std::vector<std::vector<int>> classes;
        for (const auto& name : rankings[i])
            classes.push_back({e.candidate_index(name)});
        e.voters.push_back(corelect::WeakRanking::from_classes(std::move(classes), m));
        e.voter_ids.push_back(std::to_string(i + 1));
    }
    e.validate();
    return e;
}

inline corelect::Election approval_election(std::vector<std::string> candidates,
                                            const std::vector<std::vector<std::string>>& approvals,
                                            int k) {
    corelect::Election e;
    e.candidates = std::move(candidates);
    e.k = k;
    int m = e.m();
    for (std::size_t i = 0; i < approvals.size(); ++i) {
        std::vector<int> top;
        for (const auto& name : approvals[i]) top.push_back(e.candidate_index(name));
        std::vector<int> rest;
        for (int c = 0; c < m; ++c)
            if (std::find(top.begin(), top.end(), c) == top.end()) rest.push_back(c);
        std::vector<std::vector<int>> classes{top};
        if (!rest.empty()) classes.push_back(rest);
        e.voters.push_back(corelect::WeakRanking::from_classes(std::move(classes), m));
        e.voter_ids.push_back(std::to_string(i + 1));
    }
    e.validate();
    return e;
}

inline corelect::Election grouped_strict(std::vector<std::string> candidates,
                                         const std::vector<std::pair<int, std::vector<std::string>>>& groups,
                                         int k) {
    std::vector<std::vector<std::string>> rankings;
    for (const auto& [count, ranking] : groups)
        for (int i = 0; i < count; ++i) rankings.push_back(ranking);
    return strict_election(std::move(candidates), rankings, k);
}

// The running 1D example: five candidates on a line, four voters, k = 2.
inline corelect::Election line_example() {
    return strict_election({"a", "b", "c", "d", "e"},
                           {{"b", "a", "c", "d", "e"},
                            {"c", "b", "d", "a", "e"},
                            {"c", "d", "b", "e", "a"},
                            {"d", "e", "c", "b", "a"}},
                           2);
}

inline corelect::Committee committee(const corelect::Election& e,
                                     const std::vector<std::string>& names) {
    std::vector<int> idx;
    for (const auto& n : names) idx.push_back(e.candidate_index(n));
    return corelect::make_committee(std::move(idx));
}

} // namespace testutil
