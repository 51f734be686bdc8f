#include "quandle/parser.hpp"

#include <cctype>
#include <map>
#include <optional>

namespace quandle {

std::unique_ptr<ExprNode> ExprNode::leaf(int g) {
    auto n = std::make_unique<ExprNode>();
    n->kind = Kind::Leaf;
    n->gen = g;
    return n;
}

std::unique_ptr<ExprNode> ExprNode::exp(std::unique_ptr<ExprNode> base,
                                        std::unique_ptr<ExprNode> exponent) {
    auto n = std::make_unique<ExprNode>();
    n->kind = Kind::Exp;
    n->children.push_back(std::move(base));
    n->children.push_back(std::move(exponent));
    return n;
}

std::unique_ptr<ExprNode> ExprNode::concat(std::vector<std::unique_ptr<ExprNode>> parts) {
    auto n = std::make_unique<ExprNode>();
    n->kind = Kind::Concat;
    n->children = std::move(parts);
    return n;
}

std::unique_ptr<ExprNode> ExprNode::power(std::unique_ptr<ExprNode> node, int count) {
    auto n = std::make_unique<ExprNode>();
    n->kind = Kind::Power;
    n->children.push_back(std::move(node));
    n->count = count;
    return n;
}

Word flatten_word(const ExprNode& e) {
    switch (e.kind) {
    case ExprNode::Kind::Leaf:
        return Word({e.gen});
    case ExprNode::Kind::Concat: {
        Word out;
        for (const auto& child : e.children) {
            out = concat(out, flatten_word(*child));
        }
        return out;
    }
    case ExprNode::Kind::Power:
        return word_pow(flatten_word(*e.children[0]), e.count);
    case ExprNode::Kind::Exp: {
        // The element b^v acts by reversed(v) b v.
        auto [base, v] = flatten(e);
        Word out = reversed(v);
        out.letters.push_back(base);
        out.letters.insert(out.letters.end(), v.letters.begin(), v.letters.end());
        return out;
    }
    }
    throw std::invalid_argument("flatten_word: malformed expression");
}

std::pair<int, Word> flatten(const ExprNode& e) {
    switch (e.kind) {
    case ExprNode::Kind::Leaf:
        return {e.gen, Word{}};
    case ExprNode::Kind::Exp: {
        auto [base, w] = flatten(*e.children[0]);
        return {base, normalize_word(concat(w, flatten_word(*e.children[1])))};
    }
    case ExprNode::Kind::Concat: {
        if (e.children.empty()) {
            throw std::invalid_argument("flatten: empty expression has no base generator");
        }
        auto [base, w] = flatten(*e.children[0]);
        for (size_t i = 1; i < e.children.size(); ++i) {
            w = concat(w, flatten_word(*e.children[i]));
        }
        return {base, normalize_word(w)};
    }
    case ExprNode::Kind::Power:
        throw std::invalid_argument(
            "flatten: an integer power denotes a word, not an element");
    }
    throw std::invalid_argument("flatten: malformed expression");
}

Relation flatten_equation(const ExprNode& lhs, const ExprNode& rhs) {
    auto [lb, lw] = flatten(lhs);
    auto [rb, rw] = flatten(rhs);
    return Relation(lb, normalize_word(concat(lw, reversed(rw))), rb);
}

namespace {

struct Token {
    enum class Kind { Name, Integer, Caret, LParen, RParen, Equals, Semi, Colon, End };
    Kind kind;
    std::string text;
    long long value = 0;
    int line = 1;
    int column = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, current_.line, current_.column);
    }

private:
    void advance() {
        skip_space();
        current_.line = line_;
        current_.column = column_;
        if (pos_ >= text_.size()) {
            current_.kind = Token::Kind::End;
            current_.text = "<end>";
            return;
        }
        const char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                bump();
            }
            current_.kind = Token::Kind::Name;
            current_.text = text_.substr(start, pos_ - start);
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '-' && pos_ + 1 < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
            size_t start = pos_;
            if (c == '-') bump();
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                bump();
            }
            current_.kind = Token::Kind::Integer;
            current_.text = text_.substr(start, pos_ - start);
            current_.value = std::stoll(current_.text);
            return;
        }
        bump();
        switch (c) {
        case '^': current_.kind = Token::Kind::Caret; break;
        case '(': current_.kind = Token::Kind::LParen; break;
        case ')': current_.kind = Token::Kind::RParen; break;
        case '=': current_.kind = Token::Kind::Equals; break;
        case ';': current_.kind = Token::Kind::Semi; break;
        case ':': current_.kind = Token::Kind::Colon; break;
        default:
            throw ParseError(std::string("unexpected character '") + c + "'", current_.line,
                             current_.column);
        }
        current_.text = std::string(1, c);
    }

    void skip_space() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') bump();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                bump();
            } else {
                break;
            }
        }
    }

    void bump() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
    Token current_;
};

class PresentationParser {
public:
    explicit PresentationParser(const std::string& text) : lex_(text) {}

    Presentation parse() {
        expect_keyword("gens");
        expect(Token::Kind::Colon, "':'");
        while (lex_.peek().kind == Token::Kind::Name) {
            Token t = lex_.take();
            if (gen_index_.count(t.text)) {
                throw ParseError("duplicate generator '" + t.text + "'", t.line, t.column);
            }
            const int idx = static_cast<int>(result_.generators.size());
            gen_index_[t.text] = idx;
            result_.generators.push_back({idx, t.text});
        }
        if (result_.generators.empty()) {
            lex_.fail("expected at least one generator name");
        }
        expect(Token::Kind::Semi, "';'");
        expect_keyword("rels");
        expect(Token::Kind::Colon, "':'");
        while (true) {
            // tolerate empty statements, e.g. "rels: ;"
            while (lex_.peek().kind == Token::Kind::Semi) lex_.take();
            if (lex_.peek().kind == Token::Kind::End) break;
            auto lhs = parse_expr();
            expect(Token::Kind::Equals, "'='");
            auto rhs = parse_expr();
            expect(Token::Kind::Semi, "';'");
            result_.relations.push_back(flatten_equation(*lhs, *rhs));
        }
        return std::move(result_);
    }

    std::unique_ptr<ExprNode> parse_expr() {
        std::vector<std::unique_ptr<ExprNode>> parts;
        parts.push_back(parse_term());
        while (starts_term()) {
            parts.push_back(parse_term());
        }
        if (parts.size() == 1) return std::move(parts[0]);
        return ExprNode::concat(std::move(parts));
    }

private:
    bool starts_term() const {
        const auto k = lex_.peek().kind;
        return k == Token::Kind::Name || k == Token::Kind::LParen;
    }

    std::unique_ptr<ExprNode> parse_term() {
        bool parenthesized = false;
        auto node = parse_primary(&parenthesized);
        while (lex_.peek().kind == Token::Kind::Caret) {
            lex_.take();
            if (lex_.peek().kind == Token::Kind::Integer) {
                Token t = lex_.take();
                if (!parenthesized) {
                    throw ParseError("integer exponent requires a parenthesized base", t.line,
                                     t.column);
                }
                node = ExprNode::power(std::move(node), static_cast<int>(t.value));
            } else {
                bool ignored = false;
                node = ExprNode::exp(std::move(node), parse_primary(&ignored));
            }
            parenthesized = false;
        }
        return node;
    }

    std::unique_ptr<ExprNode> parse_primary(bool* parenthesized) {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::Name) {
            Token name = lex_.take();
            auto it = gen_index_.find(name.text);
            if (it == gen_index_.end()) {
                throw ParseError("undeclared generator '" + name.text + "'", name.line,
                                 name.column);
            }
            *parenthesized = false;
            return ExprNode::leaf(it->second);
        }
        if (t.kind == Token::Kind::LParen) {
            lex_.take();
            auto inner = parse_expr();
            expect(Token::Kind::RParen, "')'");
            *parenthesized = true;
            return inner;
        }
        lex_.fail("expected a generator name or '('");
    }

    void expect(Token::Kind kind, const std::string& what) {
        if (lex_.peek().kind != kind) {
            lex_.fail("expected " + what + ", got '" + lex_.peek().text + "'");
        }
        lex_.take();
    }

    void expect_keyword(const std::string& kw) {
        if (lex_.peek().kind != Token::Kind::Name || lex_.peek().text != kw) {
            lex_.fail("expected '" + kw + "'");
        }
        lex_.take();
    }

    Lexer lex_;
    Presentation result_;
    std::map<std::string, int> gen_index_;
};

} // namespace

Presentation parse_presentation(const std::string& text) {
    PresentationParser parser(text);
    return parser.parse();
}

PdCode parse_pd(const std::string& text) {
    PdCode code;
    size_t pos = 0;
    int line = 1, column = 1;
    auto bump = [&](size_t n) {
        for (size_t i = 0; i < n && pos < text.size(); ++i) {
            if (text[pos] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
            ++pos;
        }
    };
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) bump(1);
    };
    auto expect_char = [&](char c) {
        skip_space();
        if (pos >= text.size() || text[pos] != c) {
            throw ParseError(std::string("expected '") + c + "'", line, column);
        }
        bump(1);
    };
    auto read_int = [&]() -> int {
        skip_space();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) bump(1);
        if (start == pos) {
            throw ParseError("expected a positive integer arc label", line, column);
        }
        return std::stoi(text.substr(start, pos - start));
    };

    skip_space();
    while (pos < text.size()) {
        skip_space();
        if (pos >= text.size()) break;
        if (text[pos] != 'X' && text[pos] != 'x') {
            throw ParseError("expected crossing 'X(i,j,k,l)'", line, column);
        }
        bump(1);
        expect_char('(');
        std::array<int, 4> c{};
        for (int i = 0; i < 4; ++i) {
            c[static_cast<size_t>(i)] = read_int();
            if (i < 3) expect_char(',');
        }
        expect_char(')');
        code.crossings.push_back(c);
        skip_space();
        if (pos < text.size()) {
            expect_char(',');
        }
    }

    std::map<int, int> label_count;
    for (const auto& c : code.crossings) {
        for (int label : c) ++label_count[label];
    }
    for (const auto& [label, count] : label_count) {
        if (count != 2) {
            throw ParseError("arc label " + std::to_string(label) + " appears " +
                                 std::to_string(count) + " times, expected exactly 2",
                             1, 1);
        }
    }
    return code;
}

} // namespace quandle
