#pragma once

#include "quandle/word.hpp"

#include <string>
#include <vector>

namespace quandle {

/// A defining relation in normal form: generator[lhs_base] ^ word = generator[rhs_base].
struct Relation {
    int lhs_base = 0;
    Word word;
    int rhs_base = 0;

    Relation() = default;
    Relation(int lhs, Word w, int rhs) : lhs_base(lhs), word(std::move(w)), rhs_base(rhs) {}

    friend bool operator==(const Relation&, const Relation&) = default;
};

/// An involutory quandle presentation: generators plus relations in
/// normal form. Relations may only reference declared generators.
struct Presentation {
    std::vector<GeneratorId> generators;
    std::vector<Relation> relations;

    int num_generators() const { return static_cast<int>(generators.size()); }

    /// Index of a generator by name, or -1.
    int find_generator(const std::string& name) const;

    friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Renders a presentation in the textual grammar accepted by
/// parse_presentation; parse(serialize(p)) == p.
std::string serialize_presentation(const Presentation& p);

/// Renders one relation, e.g. "c^(a b) = c".
std::string relation_to_string(const Relation& r, const std::vector<GeneratorId>& names);

} // namespace quandle
