#pragma once

#include <string>
#include <vector>

namespace quandle {

/// A generator of a presentation: dense index plus display name.
struct GeneratorId {
    int index = 0;
    std::string name;

    friend bool operator==(const GeneratorId&, const GeneratorId&) = default;
};

/// A word in the generators, acting on quandle elements from the left
/// letter first. Every generator is an involution, so the inverse of a
/// word is its reversal and adjacent equal letters cancel.
struct Word {
    std::vector<int> letters;

    Word() = default;
    explicit Word(std::vector<int> ls) : letters(std::move(ls)) {}

    bool empty() const { return letters.empty(); }
    int size() const { return static_cast<int>(letters.size()); }

    friend bool operator==(const Word&, const Word&) = default;
};

/// Cancels adjacent equal letters until none remain. Idempotent.
Word normalize_word(const Word& w);

/// Reversal; in the involutory setting this is the inverse word.
Word reversed(const Word& w);

/// Concatenation (no normalization).
Word concat(const Word& a, const Word& b);

/// w repeated m times; negative m means reversed(w) repeated |m| times.
Word word_pow(const Word& w, int m);

/// True if no two adjacent letters are equal.
bool is_normalized(const Word& w);

/// Renders letters through a name table. Single-letter names are
/// concatenated; if any name has several letters a "." separator is used.
std::string word_to_string(const Word& w, const std::vector<GeneratorId>& names);

} // namespace quandle
