// Election text format and PrefLib-style import.
//
// Native format, one statement per line, `#` starts a comment:
//   election <n> <m> <k>
//   candidates <name> ...          (m names, declaration order is canonical)
//   voter <id>: g1 > g2 > ...      (each g is a comma-separated tied class)
// Candidates missing from a ranking form one implicit final tied class; a
// single group is the approval shorthand. Names match [A-Za-z0-9_]+.

#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "corelect/election.hpp"

namespace corelect {

namespace detail {

inline bool valid_token(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

inline std::string trim(std::string s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    std::size_t e = s.find_last_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(trim(cur));
    return parts;
}

[[noreturn]] inline void parse_fail(int line, const std::string& msg) {
    throw InputError("line " + std::to_string(line) + ": " + msg);
}

} // namespace detail

inline Election parse_election(const std::string& text) {
    Election e;
    int declared_n = -1, declared_m = -1;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    int stage = 0; // 0 header, 1 candidates, 2 voters
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string keyword;
        ls >> keyword;
        if (stage == 0) {
            if (keyword != "election") detail::parse_fail(lineno, "expected 'election <n> <m> <k>'");
            if (!(ls >> declared_n >> declared_m >> e.k))
                detail::parse_fail(lineno, "malformed election header");
            if (declared_n < 1 || declared_m < 1)
                detail::parse_fail(lineno, "n and m must be positive");
            if (e.k < 1 || e.k > declared_m)
                detail::parse_fail(lineno, "k must satisfy 1 <= k <= m");
            stage = 1;
            continue;
        }
        if (stage == 1) {
            if (keyword != "candidates") detail::parse_fail(lineno, "expected 'candidates ...'");
            std::string name;
            while (ls >> name) {
                if (!detail::valid_token(name))
                    detail::parse_fail(lineno, "invalid candidate name '" + name + "'");
                for (const auto& other : e.candidates)
                    if (other == name)
                        detail::parse_fail(lineno, "duplicate candidate '" + name + "'");
                e.candidates.push_back(name);
            }
            if (e.m() != declared_m)
                detail::parse_fail(lineno,
                                   "expected " + std::to_string(declared_m) + " candidate names");
            stage = 2;
            continue;
        }
        if (keyword != "voter") detail::parse_fail(lineno, "expected 'voter <id>: ...'");
        std::string rest = detail::trim(line.substr(keyword.size()));
        auto colon = rest.find(':');
        if (colon == std::string::npos) detail::parse_fail(lineno, "missing ':' in voter line");
        std::string id = detail::trim(rest.substr(0, colon));
        if (!detail::valid_token(id)) detail::parse_fail(lineno, "invalid voter id '" + id + "'");
        for (const auto& other : e.voter_ids)
            if (other == id) detail::parse_fail(lineno, "duplicate voter id '" + id + "'");
        std::string body = detail::trim(rest.substr(colon + 1));
        std::vector<std::vector<int>> classes;
        std::vector<bool> listed(e.candidates.size(), false);
        if (!body.empty()) {
            for (const auto& group : detail::split(body, '>')) {
                if (group.empty()) detail::parse_fail(lineno, "empty preference class");
                std::vector<int> cls;
                for (const auto& name : detail::split(group, ',')) {
                    if (name.empty()) detail::parse_fail(lineno, "empty candidate name in class");
                    int idx = -1;
                    for (int c = 0; c < static_cast<int>(e.candidates.size()); ++c)
                        if (e.candidates[c] == name) idx = c;
                    if (idx < 0) detail::parse_fail(lineno, "unknown candidate '" + name + "'");
                    if (listed[idx])
                        detail::parse_fail(lineno, "duplicate candidate '" + name + "' in ranking");
                    listed[idx] = true;
                    cls.push_back(idx);
                }
                classes.push_back(std::move(cls));
            }
        }
        std::vector<int> unlisted;
        for (int c = 0; c < static_cast<int>(e.candidates.size()); ++c)
            if (!listed[c]) unlisted.push_back(c);
        if (!unlisted.empty()) classes.push_back(std::move(unlisted));
        if (classes.empty()) detail::parse_fail(lineno, "voter ranks no candidates");
        e.voter_ids.push_back(id);
        e.voters.push_back(
            WeakRanking::from_classes(std::move(classes), static_cast<int>(e.candidates.size())));
    }
    if (stage == 0) throw InputError("empty election file");
    if (e.n() != declared_n)
        throw InputError("declared " + std::to_string(declared_n) + " voters, found " +
                         std::to_string(e.n()));
    e.validate();
    return e;
}

inline std::string serialize_election(const Election& e) {
    std::ostringstream out;
    out << "election " << e.n() << ' ' << e.m() << ' ' << e.k << '\n';
    out << "candidates";
    for (const auto& c : e.candidates) out << ' ' << c;
    out << '\n';
    for (int v = 0; v < e.n(); ++v) {
        out << "voter " << e.voter_ids[v] << ':';
        const auto& classes = e.voters[v].classes;
        for (std::size_t j = 0; j < classes.size(); ++j) {
            out << (j == 0 ? " " : " > ");
            for (std::size_t i = 0; i < classes[j].size(); ++i)
                out << (i ? "," : "") << e.candidates[classes[j][i]];
        }
        out << '\n';
    }
    return out.str();
}

enum class PreflibKind { Soc, Toc, Cat };

inline PreflibKind preflib_kind_from_name(const std::string& s) {
    if (s == "soc") return PreflibKind::Soc;
    if (s == "toc") return PreflibKind::Toc;
    if (s == "cat") return PreflibKind::Cat;
    throw InputError("unsupported preflib kind: " + s);
}

// PrefLib-style reader: `# NUMBER ALTERNATIVES`, `# NUMBER VOTERS` and
// `# ALTERNATIVE NAME i` metadata, then `<count>: <ranking>` data lines
// whose multiplicities expand to individual voters. soc lines are strict
// orders, toc lines may tie alternatives in braces, cat lines approve
// their first group.
inline Election import_preflib(const std::string& text, PreflibKind kind, int k = 1) {
    int m = -1, declared_voters = -1;
    std::vector<std::string> names;
    struct Row {
        int count;
        std::vector<std::vector<int>> groups;
        int line;
    };
    std::vector<Row> rows;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    auto upper = [](std::string s) {
        for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        return s;
    };
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = detail::trim(raw);
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::string meta = detail::trim(line.substr(1));
            auto colon = meta.find(':');
            if (colon == std::string::npos) continue;
            std::string key = upper(detail::trim(meta.substr(0, colon)));
            std::string value = detail::trim(meta.substr(colon + 1));
            if (key == "NUMBER ALTERNATIVES") {
                m = std::stoi(value);
                names.assign(m, "");
            } else if (key == "NUMBER VOTERS") {
                declared_voters = std::stoi(value);
            } else if (key.rfind("ALTERNATIVE NAME", 0) == 0) {
                int idx = std::stoi(key.substr(std::string("ALTERNATIVE NAME").size()));
                if (m > 0 && idx >= 1 && idx <= m) names[idx - 1] = value;
            }
            continue;
        }
        auto colon = line.find(':');
        if (colon == std::string::npos) detail::parse_fail(lineno, "expected '<count>: <ranking>'");
        int count = 0;
        try {
            count = std::stoi(detail::trim(line.substr(0, colon)));
        } catch (const std::exception&) {
            detail::parse_fail(lineno, "bad multiplicity");
        }
        if (count < 1) detail::parse_fail(lineno, "multiplicity must be positive");
        Row row{count, {}, lineno};
        std::string body = detail::trim(line.substr(colon + 1));
        std::vector<int> group;
        bool in_braces = false;
        std::string tok;
        auto flush_token = [&]() {
            if (tok.empty()) return;
            int idx = 0;
            try {
                idx = std::stoi(tok);
            } catch (const std::exception&) {
                detail::parse_fail(lineno, "bad alternative '" + tok + "'");
            }
            group.push_back(idx);
            tok.clear();
        };
        for (char c : body) {
            if (c == '{') {
                if (in_braces) detail::parse_fail(lineno, "nested braces");
                in_braces = true;
            } else if (c == '}') {
                if (!in_braces) detail::parse_fail(lineno, "unmatched '}'");
                in_braces = false;
            } else if (c == ',') {
                flush_token();
                if (!in_braces) {
                    if (!group.empty()) row.groups.push_back(group);
                    group.clear();
                }
            } else if (!std::isspace(static_cast<unsigned char>(c))) {
                tok.push_back(c);
            }
        }
        if (in_braces) detail::parse_fail(lineno, "unterminated brace group");
        flush_token();
        if (!group.empty()) row.groups.push_back(group);
        if (row.groups.empty()) detail::parse_fail(lineno, "empty ranking");
        rows.push_back(std::move(row));
    }
    if (m < 1) throw InputError("preflib: missing '# NUMBER ALTERNATIVES'");

    Election e;
    for (int c = 0; c < m; ++c) {
        std::string candidate = names[c];
        if (!detail::valid_token(candidate)) candidate = "c" + std::to_string(c + 1);
        for (const auto& other : e.candidates)
            if (other == candidate) candidate = "c" + std::to_string(c + 1);
        e.candidates.push_back(candidate);
    }
    if (k < 1 || k > m) throw InputError("preflib: k out of range for " + std::to_string(m) +
                                         " alternatives");
    e.k = k;
    for (const auto& row : rows) {
        std::vector<std::vector<int>> classes;
        std::vector<bool> listed(m, false);
        auto add_group = [&](const std::vector<int>& group) {
            std::vector<int> cls;
            for (int idx : group) {
                if (idx < 1 || idx > m)
                    detail::parse_fail(row.line, "alternative index out of range");
                if (listed[idx - 1]) detail::parse_fail(row.line, "duplicate alternative");
                listed[idx - 1] = true;
                cls.push_back(idx - 1);
            }
            classes.push_back(std::move(cls));
        };
        if (kind == PreflibKind::Soc) {
            for (const auto& g : row.groups) {
                if (g.size() != 1)
                    detail::parse_fail(row.line, "soc rows must be strict orders");
                add_group(g);
            }
        } else if (kind == PreflibKind::Toc) {
            for (const auto& g : row.groups) add_group(g);
        } else {
            add_group(row.groups.front());
        }
        std::vector<int> unlisted;
        for (int c = 0; c < m; ++c)
            if (!listed[c]) unlisted.push_back(c);
        if (!unlisted.empty()) classes.push_back(std::move(unlisted));
        WeakRanking ranking = WeakRanking::from_classes(std::move(classes), m);
        for (int copy = 0; copy < row.count; ++copy) {
            e.voters.push_back(ranking);
            e.voter_ids.push_back(std::to_string(e.voters.size()));
        }
    }
    if (declared_voters >= 0 && declared_voters != e.n())
        throw InputError("preflib: declared " + std::to_string(declared_voters) +
                         " voters, found " + std::to_string(e.n()));
    if (e.n() < 1) throw InputError("preflib: no voters");
    e.validate();
    return e;
}

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace corelect
