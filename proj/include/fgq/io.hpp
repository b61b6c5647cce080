#pragma once

#include <string>
#include <vector>

#include "fgq/endo.hpp"
#include "fgq/quandle.hpp"
#include "fgq/report.hpp"
#include "fgq/word.hpp"

namespace fgq {

/// Endo interchange format: {"rank": 2, "images": ["a^2 b a^-2", ...]}.
inline jsonval endo_to_json(const Endo& e) {
    jsonval j;
    j["rank"] = e.rank();
    jsonval images = jsonval::array();
    for (const Word& w : e.images())
        images.push_back(to_string(w));
    j["images"] = std::move(images);
    return j;
}

inline Endo endo_from_json(const jsonval& j) {
    int rank = j.at("rank").get<int>();
    std::vector<Word> images;
    for (const auto& s : j.at("images"))
        images.push_back(parse_word(s.get<std::string>(), rank));
    if (static_cast<int>(images.size()) != rank)
        throw error("endo JSON: expected " + std::to_string(rank) + " images, got " +
                    std::to_string(images.size()));
    return Endo(std::move(images));
}

/// Quandle table format: {"n": 3, "table": [[0,2,1],[2,1,0],[1,0,2]]}.
inline jsonval quandle_to_json(const FiniteQuandle& q) {
    jsonval j;
    j["n"] = q.size();
    j["table"] = q.table();
    return j;
}

inline FiniteQuandle quandle_from_json(const jsonval& j) {
    auto table = j.at("table").get<std::vector<std::vector<int>>>();
    if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(table.size()))
        throw error("quandle JSON: 'n' does not match the table size");
    return FiniteQuandle(std::move(table));
}

/// Group format: {"n": 4, "mul": [[...]], "inv": [...], "id": 0};
/// "inv" and "id" are optional and rederived when absent.
inline jsonval group_to_json(const FiniteGroup& g) {
    jsonval j;
    j["n"] = g.size();
    j["mul"] = g.table();
    std::vector<int> inv(static_cast<std::size_t>(g.size()));
    for (int x = 0; x < g.size(); ++x)
        inv[static_cast<std::size_t>(x)] = g.inverse(x);
    j["inv"] = inv;
    j["id"] = g.identity();
    return j;
}

inline FiniteGroup group_from_json(const jsonval& j) {
    auto table = j.at("mul").get<std::vector<std::vector<int>>>();
    if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(table.size()))
        throw error("group JSON: 'n' does not match the table size");
    FiniteGroup g(std::move(table));
    if (j.contains("id") && j.at("id").get<int>() != g.identity())
        throw error("group JSON: declared identity disagrees with the table");
    if (j.contains("inv")) {
        auto inv = j.at("inv").get<std::vector<int>>();
        if (static_cast<int>(inv.size()) != g.size())
            throw error("group JSON: inverse table has wrong size");
        for (int x = 0; x < g.size(); ++x)
            if (inv[static_cast<std::size_t>(x)] != g.inverse(x))
                throw error("group JSON: declared inverses disagree with the table");
    }
    return g;
}

}  // namespace fgq
