#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quandle/word.hpp"
#include "test_support.hpp"

#include <random>

using namespace quandle;

namespace {

Word w(std::initializer_list<int> ls) {
    return Word(std::vector<int>(ls));
}

} // namespace

TEST_CASE("normalize cancels adjacent duplicate letters") {
    // a b b a -> empty
    CHECK(normalize_word(w({0, 1, 1, 0})) == Word{});
    // a b a b is already normalized
    CHECK(normalize_word(w({0, 1, 0, 1})) == w({0, 1, 0, 1}));
    // a c c a b -> b (nested cancellation)
    CHECK(normalize_word(w({0, 2, 2, 0, 1})) == w({1}));
}

TEST_CASE("normalize is idempotent and length-nonincreasing") {
    std::mt19937 rng(20240811);
    for (int i = 0; i < 500; ++i) {
        const Word word = testing::random_word(rng, 4, 24);
        const Word once = normalize_word(word);
        CHECK(is_normalized(once));
        CHECK(once.size() <= word.size());
        CHECK(normalize_word(once) == once);
    }
}

TEST_CASE("word followed by its reversal normalizes away") {
    std::mt19937 rng(7);
    for (int i = 0; i < 500; ++i) {
        const Word word = testing::random_word(rng, 3, 20);
        CHECK(normalize_word(concat(word, reversed(word))) == Word{});
    }
}

TEST_CASE("negative powers reverse the word") {
    const Word ba = w({1, 0});
    CHECK(word_pow(ba, -1) == w({0, 1}));
    CHECK(word_pow(ba, 2) == w({1, 0, 1, 0}));
    CHECK(word_pow(ba, -2) == w({0, 1, 0, 1}));
    CHECK(word_pow(ba, 0) == Word{});
}

TEST_CASE("word rendering uses separators only for long names") {
    const std::vector<GeneratorId> simple = {{0, "a"}, {1, "b"}};
    CHECK(word_to_string(w({0, 1, 0}), simple) == "aba");
    const std::vector<GeneratorId> arcs = {{0, "x1"}, {1, "x10"}};
    CHECK(word_to_string(w({0, 1}), arcs) == "x1.x10");
}
