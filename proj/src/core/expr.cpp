#include "core/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>

#include "core/errors.hpp"

namespace kummersum {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return ident_start(c) || std::isdigit(static_cast<unsigned char>(c)); }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

constexpr std::size_t kMaxSource = 64 * 1024;
constexpr int kMaxDepth = 64;

struct FunctionInfo {
    std::string_view name;
    int arity;
};

constexpr std::array<FunctionInfo, 7> kFunctions = {{
    {"log", 1}, {"log2", 1}, {"log10", 1}, {"sqrt", 1}, {"exp", 1}, {"loglog", 1}, {"pow", 2},
}};

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
    if (text.size() > kMaxSource)
        throw LexError(kMaxSource, "input longer than 64 KiB");
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') { ++i; continue; }
        std::size_t start = i;
        if (digit(c)) {
            ++i;
            while (i < text.size() && digit(text[i])) ++i;
            if (i < text.size() && text[i] == '.') {
                ++i;
                if (i >= text.size() || !digit(text[i]))
                    throw LexError(i, "digit after decimal point");
                while (i < text.size() && digit(text[i])) ++i;
            }
            if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
                std::size_t mark = i;
                ++i;
                if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
                if (i < text.size() && digit(text[i])) {
                    while (i < text.size() && digit(text[i])) ++i;
                } else {
                    i = mark;  // 'e' belongs to a following ident, not this number
                }
            }
            out.push_back({TokenKind::Number, text.substr(start, i - start), start});
            continue;
        }
        if (ident_start(c)) {
            ++i;
            while (i < text.size() && ident_char(text[i])) ++i;
            out.push_back({TokenKind::Ident, text.substr(start, i - start), start});
            continue;
        }
        TokenKind kind;
        switch (c) {
            case '+': kind = TokenKind::Plus; break;
            case '-': kind = TokenKind::Minus; break;
            case '*': kind = TokenKind::Star; break;
            case '/': kind = TokenKind::Slash; break;
            case '^': kind = TokenKind::Caret; break;
            case '(': kind = TokenKind::LParen; break;
            case ')': kind = TokenKind::RParen; break;
            case ',': kind = TokenKind::Comma; break;
            default:
                throw LexError(i, std::string("unrecognized byte '") + c + "'");
        }
        out.push_back({kind, text.substr(i, 1), i});
        ++i;
    }
    return out;
}

class Parser {
public:
    Parser(std::string_view text) : text_(text), tokens_(tokenize(text)) {}

    Expr run() {
        Expr e;
        e.root_ = parse_expr(e, 0);
        if (pos_ < tokens_.size())
            throw ParseError(tokens_[pos_].pos, "end of input");
        if (e.root_ < 0) throw ParseError(text_.size(), "an expression");
        return e;
    }

private:
    std::string_view text_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;

    using Op = Expr::Op;

    bool at(TokenKind k) const { return pos_ < tokens_.size() && tokens_[pos_].kind == k; }
    const Token& peek() const {
        static Token eof{TokenKind::Number, {}, 0};
        if (pos_ < tokens_.size()) return tokens_[pos_];
        eof.pos = text_.size();
        return eof;
    }
    Token take() { return tokens_[pos_++]; }

    void guard(int depth) {
        if (depth > kMaxDepth)
            throw ParseError(peek().pos, "shallower nesting (depth limit 64)");
    }

    int make_node(Expr& e, Op op, double value, int lhs, int rhs) {
        e.nodes_.push_back({op, value, lhs, rhs});
        return static_cast<int>(e.nodes_.size()) - 1;
    }

    bool is_const(const Expr& e, int idx) const { return e.nodes_[idx].op == Op::Const; }

    // Literal-literal operations fold at parse time when the result is finite;
    // everything else is left untouched so evaluation order stays predictable.
    int make_binary(Expr& e, Op op, int lhs, int rhs) {
        if (is_const(e, lhs) && is_const(e, rhs)) {
            double a = e.nodes_[lhs].value, b = e.nodes_[rhs].value, v = 0.0;
            switch (op) {
                case Op::Add: v = a + b; break;
                case Op::Sub: v = a - b; break;
                case Op::Mul: v = a * b; break;
                case Op::Div: v = a / b; break;
                case Op::Pow: v = pow_real(a, b); break;
                default: v = 0.0; break;
            }
            if (std::isfinite(v)) {
                e.nodes_[lhs] = {Op::Const, v, -1, -1};
                return lhs;
            }
        }
        return make_node(e, op, 0.0, lhs, rhs);
    }

    int parse_expr(Expr& e, int depth) {
        guard(depth);
        int lhs = parse_term(e, depth + 1);
        while (at(TokenKind::Plus) || at(TokenKind::Minus)) {
            bool plus = take().kind == TokenKind::Plus;
            int rhs = parse_term(e, depth + 1);
            lhs = make_binary(e, plus ? Op::Add : Op::Sub, lhs, rhs);
        }
        return lhs;
    }

    int parse_term(Expr& e, int depth) {
        guard(depth);
        int lhs = parse_factor(e, depth + 1);
        while (at(TokenKind::Star) || at(TokenKind::Slash)) {
            bool mul = take().kind == TokenKind::Star;
            int rhs = parse_factor(e, depth + 1);
            lhs = make_binary(e, mul ? Op::Mul : Op::Div, lhs, rhs);
        }
        return lhs;
    }

    int parse_factor(Expr& e, int depth) {
        guard(depth);
        if (at(TokenKind::Minus)) {
            take();
            int child = parse_factor(e, depth + 1);
            return make_node(e, Op::Neg, 0.0, child, -1);
        }
        int base = parse_base(e, depth + 1);
        if (at(TokenKind::Caret)) {
            take();
            int expo = parse_factor(e, depth + 1);  // right-associative
            return make_binary(e, Op::Pow, base, expo);
        }
        return base;
    }

    int parse_base(Expr& e, int depth) {
        guard(depth);
        if (at(TokenKind::Number)) {
            Token t = take();
            double v = 0.0;
            auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
            if (ec != std::errc() || p != t.text.data() + t.text.size())
                throw ParseError(t.pos, "a valid number literal");
            if (!std::isfinite(v)) throw ParseError(t.pos, "a finite number literal");
            return make_node(e, Op::Const, v, -1, -1);
        }
        if (at(TokenKind::LParen)) {
            take();
            int inner = parse_expr(e, depth + 1);
            if (!at(TokenKind::RParen)) throw ParseError(peek().pos, "')'");
            take();
            return inner;
        }
        if (at(TokenKind::Ident)) {
            Token t = take();
            if (t.text == "n" && !at(TokenKind::LParen))
                return make_node(e, Op::Var, 0.0, -1, -1);
            if (!at(TokenKind::LParen))
                throw ParseError(peek().pos, "'(' after function name");
            const FunctionInfo* fn = nullptr;
            for (const auto& f : kFunctions)
                if (f.name == t.text) { fn = &f; break; }
            if (!fn) throw UnknownFunctionError(std::string(t.text));
            take();  // '('
            std::vector<int> args;
            if (at(TokenKind::RParen))
                throw ParseError(peek().pos, "an argument");
            args.push_back(parse_expr(e, depth + 1));
            while (at(TokenKind::Comma)) {
                take();
                args.push_back(parse_expr(e, depth + 1));
            }
            if (!at(TokenKind::RParen)) throw ParseError(peek().pos, "')' or ','");
            take();
            if (static_cast<int>(args.size()) != fn->arity)
                throw ArityError(std::string(t.text), fn->arity, static_cast<int>(args.size()));
            Op op;
            if (t.text == "log") op = Op::FnLog;
            else if (t.text == "log2") op = Op::FnLog2;
            else if (t.text == "log10") op = Op::FnLog10;
            else if (t.text == "sqrt") op = Op::FnSqrt;
            else if (t.text == "exp") op = Op::FnExp;
            else if (t.text == "loglog") op = Op::FnLogLog;
            else op = Op::FnPow;
            return make_node(e, op, 0.0, args[0], args.size() > 1 ? args[1] : -1);
        }
        throw ParseError(peek().pos, "a number, 'n', a function call, or '('");
    }
};

Expr Expr::parse(std::string_view text) {
    Parser p(text);
    Expr e = p.run();
    if (e.depth() > kMaxDepth)
        throw ParseError(0, "shallower nesting (depth limit 64)");
    return e;
}

double Expr::eval(double n) const { return eval_node(root_, n); }

double Expr::eval_node(int idx, double n) const {
    const Node& nd = nodes_[idx];
    switch (nd.op) {
        case Op::Const: return nd.value;
        case Op::Var: return n;
        case Op::Neg: return -eval_node(nd.lhs, n);
        case Op::Add: return eval_node(nd.lhs, n) + eval_node(nd.rhs, n);
        case Op::Sub: return eval_node(nd.lhs, n) - eval_node(nd.rhs, n);
        case Op::Mul: return eval_node(nd.lhs, n) * eval_node(nd.rhs, n);
        case Op::Div: return eval_node(nd.lhs, n) / eval_node(nd.rhs, n);
        case Op::Pow: return pow_real(eval_node(nd.lhs, n), eval_node(nd.rhs, n));
        case Op::FnLog: return std::log(eval_node(nd.lhs, n));
        case Op::FnLog2: return std::log2(eval_node(nd.lhs, n));
        case Op::FnLog10: return std::log10(eval_node(nd.lhs, n));
        case Op::FnSqrt: return std::sqrt(eval_node(nd.lhs, n));
        case Op::FnExp: return std::exp(eval_node(nd.lhs, n));
        case Op::FnLogLog: return std::log(std::log(eval_node(nd.lhs, n)));
        case Op::FnPow: return pow_real(eval_node(nd.lhs, n), eval_node(nd.rhs, n));
    }
    return 0.0;
}

int Expr::depth() const { return node_depth(root_); }

int Expr::node_depth(int idx) const {
    if (idx < 0) return 0;
    const Node& nd = nodes_[idx];
    int l = nd.lhs >= 0 ? node_depth(nd.lhs) : 0;
    int r = nd.rhs >= 0 ? node_depth(nd.rhs) : 0;
    return 1 + (l > r ? l : r);
}

bool Expr::references_n() const {
    for (const Node& nd : nodes_)
        if (nd.op == Op::Var) return true;
    return false;
}

// Print levels: add/sub 1, mul/div 2, unary minus 3, pow 4, atoms 5.
// Children at a lower level than the context get parentheses, so the
// reparsed tree evaluates identically (FP ops are order-sensitive).
void Expr::print_node(int idx, int /*parent_level*/, bool /*right_of_pow*/, std::string& out) const {
    const Node& nd = nodes_[idx];
    auto level = [this](int i) -> int {
        switch (nodes_[i].op) {
            case Op::Add: case Op::Sub: return 1;
            case Op::Mul: case Op::Div: return 2;
            case Op::Neg: return 3;
            case Op::Pow: return 4;
            case Op::Const:
                return std::signbit(nodes_[i].value) ? 3 : 5;
            default: return 5;
        }
    };
    auto emit_child = [&](int child, int min_level, bool as_pow_rhs) {
        bool parens = level(child) < min_level;
        if (parens) out += '(';
        print_node(child, min_level, as_pow_rhs, out);
        if (parens) out += ')';
    };
    switch (nd.op) {
        case Op::Const: {
            char buf[32];
            auto [p, ec] = std::to_chars(buf, buf + sizeof buf, nd.value);
            out.append(buf, p);
            return;
        }
        case Op::Var: out += 'n'; return;
        case Op::Neg:
            out += '-';
            emit_child(nd.lhs, 3, false);
            return;
        case Op::Add:
            emit_child(nd.lhs, 1, false);
            out += '+';
            emit_child(nd.rhs, 2, false);
            return;
        case Op::Sub:
            emit_child(nd.lhs, 1, false);
            out += '-';
            emit_child(nd.rhs, 2, false);
            return;
        case Op::Mul:
            emit_child(nd.lhs, 2, false);
            out += '*';
            emit_child(nd.rhs, 3, false);
            return;
        case Op::Div:
            emit_child(nd.lhs, 2, false);
            out += '/';
            emit_child(nd.rhs, 3, false);
            return;
        case Op::Pow:
            emit_child(nd.lhs, 5, false);  // any compound lhs gets parens
            out += '^';
            emit_child(nd.rhs, 4, true);   // right-associative: pow rhs stays bare
            return;
        case Op::FnLog: case Op::FnLog2: case Op::FnLog10:
        case Op::FnSqrt: case Op::FnExp: case Op::FnLogLog: case Op::FnPow: {
            const char* name = nd.op == Op::FnLog ? "log"
                             : nd.op == Op::FnLog2 ? "log2"
                             : nd.op == Op::FnLog10 ? "log10"
                             : nd.op == Op::FnSqrt ? "sqrt"
                             : nd.op == Op::FnExp ? "exp"
                             : nd.op == Op::FnLogLog ? "loglog" : "pow";
            out += name;
            out += '(';
            print_node(nd.lhs, 0, false, out);
            if (nd.rhs >= 0) {
                out += ',';
                print_node(nd.rhs, 0, false, out);
            }
            out += ')';
            return;
        }
    }
}

std::string Expr::to_string() const {
    std::string out;
    print_node(root_, 0, false, out);
    return out;
}

}  // namespace kummersum
