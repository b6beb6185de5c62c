#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace kummersum {

// Canonical power rule used everywhere (catalog terms, ^ operator, pow()).
// exp(p*log(x)) rather than a platform pow keeps the golden tables stable
// across libm implementations. Non-finite results flow back unmasked.
inline double pow_real(double base, double exponent) {
    return std::exp(exponent * std::log(base));
}

enum class TokenKind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma };

struct Token {
    TokenKind kind;
    std::string_view text;
    std::size_t pos;  // byte offset into the source
};

// Maximal-munch lexer. Whitespace is skipped; any unrecognized byte raises
// LexError with its offset. Numbers are decimal literals with optional
// fraction and exponent; they must start with a digit.
std::vector<Token> tokenize(std::string_view text);

// Immutable expression tree over the single variable n.
//
// Grammar (precedence low to high: +,- < *,/ < unary - < ^, with ^
// right-associative):
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | base ('^' factor)?
//   base   := number | 'n' | ident '(' expr (',' expr)* ')' | '(' expr ')'
//
// Functions: log (natural), log2, log10, sqrt, exp, loglog, pow(x,y).
// There is no implicit multiplication. Tree depth is capped at 64.
class Expr {
public:
    static Expr parse(std::string_view text);

    double eval(double n) const;

    // Minimal-parenthesis rendering; reparsing gives an evaluation-equivalent tree.
    std::string to_string() const;

    int depth() const;
    bool references_n() const;

private:
    enum class Op : std::uint8_t { Const, Var, Neg, Add, Sub, Mul, Div, Pow,
                                   FnLog, FnLog2, FnLog10, FnSqrt, FnExp, FnLogLog, FnPow };
    struct Node {
        Op op;
        double value;  // Const only
        int lhs;       // child index, -1 if unused
        int rhs;
    };

    std::vector<Node> nodes_;
    int root_ = -1;

    double eval_node(int idx, double n) const;
    void print_node(int idx, int parent_level, bool right_of_pow, std::string& out) const;
    int node_depth(int idx) const;

    friend class Parser;
};

}  // namespace kummersum
