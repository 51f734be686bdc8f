#include "quandle/presentation.hpp"

namespace quandle {

int Presentation::find_generator(const std::string& name) const {
    for (const GeneratorId& g : generators) {
        if (g.name == name) return g.index;
    }
    return -1;
}

std::string relation_to_string(const Relation& r, const std::vector<GeneratorId>& names) {
    std::string out = names[static_cast<size_t>(r.lhs_base)].name;
    if (!r.word.empty()) {
        out += "^(";
        for (size_t i = 0; i < r.word.letters.size(); ++i) {
            if (i > 0) out += ' ';
            out += names[static_cast<size_t>(r.word.letters[i])].name;
        }
        out += ")";
    }
    out += " = ";
    out += names[static_cast<size_t>(r.rhs_base)].name;
    return out;
}

std::string serialize_presentation(const Presentation& p) {
    std::string out = "gens:";
    for (const GeneratorId& g : p.generators) {
        out += ' ';
        out += g.name;
    }
    out += ";\nrels:\n";
    for (const Relation& r : p.relations) {
        out += "  ";
        out += relation_to_string(r, p.generators);
        out += ";\n";
    }
    return out;
}

} // namespace quandle
