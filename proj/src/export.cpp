#include "quandle/export.hpp"

#include "quandle/analysis.hpp"

#include <json.hpp>

#include <algorithm>

namespace quandle {

std::string rep_to_string(const CayleyTable::Rep& rep, const std::vector<GeneratorId>& names) {
    std::string out = names[static_cast<size_t>(rep.base)].name;
    if (!rep.word.empty()) {
        out += "^";
        out += word_to_string(rep.word, names);
    }
    return out;
}

std::string table_to_json(const CayleyTable& t, const std::vector<GeneratorId>& names) {
    nlohmann::json doc;
    doc["size"] = t.size();
    nlohmann::json gens = nlohmann::json::array();
    for (const GeneratorId& g : names) {
        gens.push_back(g.name);
    }
    doc["generators"] = std::move(gens);
    nlohmann::json action = nlohmann::json::array();
    for (int v = 0; v < t.size(); ++v) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < t.num_generators; ++j) {
            row.push_back(t.act(v, j));
        }
        action.push_back(std::move(row));
    }
    doc["action"] = std::move(action);
    nlohmann::json reps = nlohmann::json::array();
    for (const CayleyTable::Rep& rep : t.reps) {
        reps.push_back({{"base", names[static_cast<size_t>(rep.base)].name},
                        {"word", word_to_string(rep.word, names)}});
    }
    doc["reps"] = std::move(reps);
    nlohmann::json comps = nlohmann::json::array();
    for (const std::vector<int>& members : components(t).members) {
        comps.push_back(members);
    }
    doc["components"] = std::move(comps);
    return doc.dump(2) + "\n";
}

std::string table_to_dot(const CayleyTable& t, const std::vector<GeneratorId>& names) {
    std::string out = "graph quandle {\n  node [shape=circle];\n";
    std::vector<char> is_seed(static_cast<size_t>(t.size()), 0);
    for (int sv : t.seed) is_seed[static_cast<size_t>(sv)] = 1;
    for (int v = 0; v < t.size(); ++v) {
        out += "  " + std::to_string(v) + " [label=\"" +
               rep_to_string(t.reps[static_cast<size_t>(v)], names) + "\"";
        if (is_seed[static_cast<size_t>(v)]) {
            out += ", shape=doublecircle";
        }
        out += "];\n";
    }
    for (int v = 0; v < t.size(); ++v) {
        for (int j = 0; j < t.num_generators; ++j) {
            const int u = t.act(v, j);
            if (u < v) continue; // one edge per unordered pair, loops kept
            out += "  " + std::to_string(v) + " -- " + std::to_string(u) + " [label=\"" +
                   names[static_cast<size_t>(j)].name + "\"];\n";
        }
    }
    out += "}\n";
    return out;
}

} // namespace quandle
