#include "quandle/word.hpp"

#include <algorithm>

namespace quandle {

Word normalize_word(const Word& w) {
    std::vector<int> stack;
    stack.reserve(w.letters.size());
    for (int g : w.letters) {
        if (!stack.empty() && stack.back() == g) {
            stack.pop_back();
        } else {
            stack.push_back(g);
        }
    }
    return Word(std::move(stack));
}

Word reversed(const Word& w) {
    std::vector<int> ls(w.letters.rbegin(), w.letters.rend());
    return Word(std::move(ls));
}

Word concat(const Word& a, const Word& b) {
    std::vector<int> ls;
    ls.reserve(a.letters.size() + b.letters.size());
    ls.insert(ls.end(), a.letters.begin(), a.letters.end());
    ls.insert(ls.end(), b.letters.begin(), b.letters.end());
    return Word(std::move(ls));
}

Word word_pow(const Word& w, int m) {
    const Word base = m < 0 ? reversed(w) : w;
    const int reps = m < 0 ? -m : m;
    std::vector<int> ls;
    ls.reserve(base.letters.size() * static_cast<size_t>(reps));
    for (int i = 0; i < reps; ++i) {
        ls.insert(ls.end(), base.letters.begin(), base.letters.end());
    }
    return Word(std::move(ls));
}

bool is_normalized(const Word& w) {
    for (size_t i = 1; i < w.letters.size(); ++i) {
        if (w.letters[i] == w.letters[i - 1]) return false;
    }
    return true;
}

std::string word_to_string(const Word& w, const std::vector<GeneratorId>& names) {
    const bool dotted = std::any_of(names.begin(), names.end(), [](const GeneratorId& g) {
        return g.name.size() > 1;
    });
    std::string out;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (dotted && i > 0) out += '.';
        out += names[static_cast<size_t>(w.letters[i])].name;
    }
    return out;
}

} // namespace quandle
