#pragma once

#include "quandle/presentation.hpp"
#include "quandle/word.hpp"

#include <array>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace quandle {

/// Parse failure with 1-based source location.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, int line, int column)
        : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " +
                             std::to_string(column)),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Expression tree for relation sides before flattening.
/// Leaf: a generator. Exp: base ^ exponent. Concat: juxtaposition
/// (left-to-right action). Power: a parenthesized word raised to a
/// signed integer; a negative power of a word is the positive power of
/// its reversal, every letter being an involution.
struct ExprNode {
    enum class Kind { Leaf, Exp, Concat, Power };

    Kind kind = Kind::Leaf;
    int gen = -1;                                     // Leaf
    std::vector<std::unique_ptr<ExprNode>> children;  // Exp: [base, exponent]; Concat: parts; Power: [node]
    int count = 0;                                    // Power

    static std::unique_ptr<ExprNode> leaf(int g);
    static std::unique_ptr<ExprNode> exp(std::unique_ptr<ExprNode> base,
                                         std::unique_ptr<ExprNode> exponent);
    static std::unique_ptr<ExprNode> concat(std::vector<std::unique_ptr<ExprNode>> parts);
    static std::unique_ptr<ExprNode> power(std::unique_ptr<ExprNode> node, int count);
};

/// A planar diagram code: one 4-tuple of arc labels per crossing,
/// counterclockwise from the incoming under-arc. Every arc label must
/// appear exactly twice across the code.
struct PdCode {
    std::vector<std::array<int, 4>> crossings;
};

/// Flattens an element expression to canonical base ^ word form via the
/// re-association rule (a^u)^(b^v) = a^(u v-reversed b v).
/// The word is normalized. Throws std::invalid_argument if the
/// expression does not denote an element (its leftmost leaf must be a
/// generator; a bare integer power denotes a word).
std::pair<int, Word> flatten(const ExprNode& e);

/// Flattens an expression used as an exponent to the word it acts by.
Word flatten_word(const ExprNode& e);

/// Combines two flattened sides into one normal-form relation:
/// b1^w1 = b2^w2 becomes b1^(w1 reversed(w2)) = b2.
Relation flatten_equation(const ExprNode& lhs, const ExprNode& rhs);

/// Parses the presentation grammar:
///   file  := "gens:" name+ ";" "rels:" (equation ";")*
///   equation := expr "=" expr
///   expr  := term+
///   term  := primary ("^" (primary | integer))*
///   primary := name | "(" expr ")"
/// Integer exponents require a parenthesized base. Whitespace is free;
/// "#" starts a comment to end of line.
Presentation parse_presentation(const std::string& text);

/// Parses comma-separated "X(i,j,k,l)" tuples and validates that each
/// arc label occurs exactly twice.
PdCode parse_pd(const std::string& text);

} // namespace quandle
