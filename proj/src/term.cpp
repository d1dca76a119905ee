#include "creals/term.hpp"

#include <cstddef>
#include <utility>

#include "creals/elemfn.hpp"
#include "creals/errors.hpp"

namespace creals {

TermPtr t_const(const Rat& q) {
    auto t = std::make_shared<Term>();
    t->kind = Term::Kind::Constant;
    t->value = q;
    return t;
}

TermPtr t_var(std::string name) {
    auto t = std::make_shared<Term>();
    t->kind = Term::Kind::Variable;
    t->name = std::move(name);
    return t;
}

namespace {
TermPtr t_binary(Term::Kind k, TermPtr a, TermPtr b) {
    auto t = std::make_shared<Term>();
    t->kind = k;
    t->lhs = std::move(a);
    t->rhs = std::move(b);
    return t;
}
TermPtr t_unary(Term::Kind k, TermPtr a) {
    auto t = std::make_shared<Term>();
    t->kind = k;
    t->lhs = std::move(a);
    return t;
}
}  // namespace

TermPtr t_add(TermPtr a, TermPtr b) { return t_binary(Term::Kind::Add, std::move(a), std::move(b)); }
TermPtr t_sub(TermPtr a, TermPtr b) { return t_binary(Term::Kind::Sub, std::move(a), std::move(b)); }
TermPtr t_mul(TermPtr a, TermPtr b) { return t_binary(Term::Kind::Mul, std::move(a), std::move(b)); }
TermPtr t_exp2(TermPtr a) { return t_unary(Term::Kind::Exp2, std::move(a)); }
TermPtr t_sqrt(TermPtr a) { return t_unary(Term::Kind::Sqrt, std::move(a)); }

bool term_equal(const TermPtr& a, const TermPtr& b) {
    if (a == b) return true;
    if (!a || !b || a->kind != b->kind) return false;
    switch (a->kind) {
        case Term::Kind::Constant: return a->value == b->value;
        case Term::Kind::Variable: return a->name == b->name;
        case Term::Kind::Exp2:
        case Term::Kind::Sqrt: return term_equal(a->lhs, b->lhs);
        default:
            return term_equal(a->lhs, b->lhs) && term_equal(a->rhs, b->rhs);
    }
}

void collect_vars(const TermPtr& t, std::set<std::string>& out) {
    if (!t) return;
    if (t->kind == Term::Kind::Variable) out.insert(t->name);
    collect_vars(t->lhs, out);
    collect_vars(t->rhs, out);
}

namespace {

std::string rat_str(const Rat& q) {
    std::string s = q.get_num().get_str();
    if (q.get_den() != 1) s += "/" + q.get_den().get_str();
    return s;
}

// Binding strength: additive 1, multiplicative 2, atoms 3. A child rendered
// in a context demanding at least `need` gets parentheses when looser.
int term_prec(const Term& t) {
    switch (t.kind) {
        case Term::Kind::Add:
        case Term::Kind::Sub: return 1;
        case Term::Kind::Mul: return 2;
        default: return 3;
    }
}

void render(const TermPtr& t, int need, std::string& out) {
    int prec = term_prec(*t);
    if (prec < need) {
        out += "(";
        render(t, 1, out);
        out += ")";
        return;
    }
    switch (t->kind) {
        case Term::Kind::Constant:
            out += rat_str(t->value);
            break;
        case Term::Kind::Variable:
            out += t->name;
            break;
        case Term::Kind::Add:
        case Term::Kind::Sub:
            render(t->lhs, 1, out);
            out += t->kind == Term::Kind::Add ? " + " : " - ";
            render(t->rhs, 2, out);
            break;
        case Term::Kind::Mul:
            render(t->lhs, 2, out);
            out += " * ";
            render(t->rhs, 3, out);
            break;
        case Term::Kind::Exp2:
            out += "exp(";
            render(t->lhs, 1, out);
            out += ")";
            break;
        case Term::Kind::Sqrt:
            out += "sqrt(";
            render(t->lhs, 1, out);
            out += ")";
            break;
    }
}

}  // namespace

std::string to_string(const TermPtr& t) {
    std::string out;
    render(t, 1, out);
    return out;
}

CauchyReal eval_term(const TermPtr& t, const Env& env) {
    switch (t->kind) {
        case Term::Kind::Constant:
            return from_rational(t->value);
        case Term::Kind::Variable: {
            auto it = env.find(t->name);
            if (it == env.end()) {
                throw UnboundVariableError("unbound variable '" + t->name + "'");
            }
            return it->second;
        }
        case Term::Kind::Add:
            return add(eval_term(t->lhs, env), eval_term(t->rhs, env));
        case Term::Kind::Sub:
            return sub(eval_term(t->lhs, env), eval_term(t->rhs, env));
        case Term::Kind::Mul:
            return mul(eval_term(t->lhs, env), eval_term(t->rhs, env));
        case Term::Kind::Exp2:
            return exp2(eval_term(t->lhs, env));
        case Term::Kind::Sqrt:
            return sqrt(eval_term(t->lhs, env));
    }
    throw EvalError("corrupt term");
}

std::optional<Rat> eval_exact_term(const TermPtr& t, const RatEnv& env) {
    switch (t->kind) {
        case Term::Kind::Constant:
            return t->value;
        case Term::Kind::Variable: {
            auto it = env.find(t->name);
            if (it == env.end()) {
                throw UnboundVariableError("unbound variable '" + t->name + "'");
            }
            return it->second;
        }
        case Term::Kind::Add: {
            auto a = eval_exact_term(t->lhs, env);
            auto b = eval_exact_term(t->rhs, env);
            if (!a || !b) return std::nullopt;
            return Rat(*a + *b);
        }
        case Term::Kind::Sub: {
            auto a = eval_exact_term(t->lhs, env);
            auto b = eval_exact_term(t->rhs, env);
            if (!a || !b) return std::nullopt;
            return Rat(*a - *b);
        }
        case Term::Kind::Mul: {
            auto a = eval_exact_term(t->lhs, env);
            auto b = eval_exact_term(t->rhs, env);
            if (!a || !b) return std::nullopt;
            return Rat(*a * *b);
        }
        case Term::Kind::Exp2: {
            auto a = eval_exact_term(t->lhs, env);
            if (!a || a->get_den() != 1) return std::nullopt;
            Int e = a->get_num();
            if (e >= 0) return Rat(ipow(Int(2), e.get_ui()));
            return make_rat(Int(1), ipow(Int(2), Int(-e).get_ui()));
        }
        case Term::Kind::Sqrt: {
            auto a = eval_exact_term(t->lhs, env);
            if (!a || *a < 0) return std::nullopt;
            Int rn = isqrt(a->get_num());
            Int rd = isqrt(a->get_den());
            if (rn * rn != a->get_num() || rd * rd != a->get_den()) {
                return std::nullopt;
            }
            return make_rat(rn, rd);
        }
    }
    throw EvalError("corrupt term");
}

FormulaPtr f_atom(Literal lit) {
    auto f = std::make_shared<Formula>();
    f->kind = Formula::Kind::Atom;
    f->atom = std::move(lit);
    return f;
}

namespace {
FormulaPtr f_binary(Formula::Kind k, FormulaPtr a, FormulaPtr b) {
    auto f = std::make_shared<Formula>();
    f->kind = k;
    f->lhs = std::move(a);
    f->rhs = std::move(b);
    return f;
}
}  // namespace

FormulaPtr f_and(FormulaPtr a, FormulaPtr b) { return f_binary(Formula::Kind::And, std::move(a), std::move(b)); }
FormulaPtr f_or(FormulaPtr a, FormulaPtr b) { return f_binary(Formula::Kind::Or, std::move(a), std::move(b)); }

FormulaPtr f_not(FormulaPtr a) {
    auto f = std::make_shared<Formula>();
    f->kind = Formula::Kind::Not;
    f->lhs = std::move(a);
    return f;
}

namespace {

// Formula precedence: or 1, and 2, not 3, atoms 4.
int formula_prec(const Formula& f) {
    switch (f.kind) {
        case Formula::Kind::Or: return 1;
        case Formula::Kind::And: return 2;
        case Formula::Kind::Not: return 3;
        case Formula::Kind::Atom: return 4;
    }
    return 4;
}

void render_formula(const FormulaPtr& f, int need, std::string& out) {
    int prec = formula_prec(*f);
    if (prec < need) {
        out += "(";
        render_formula(f, 1, out);
        out += ")";
        return;
    }
    switch (f->kind) {
        case Formula::Kind::Atom:
            out += to_string(f->atom.term);
            out += f->atom.is_equality ? " = 0" : " > 0";
            break;
        case Formula::Kind::Or:
            render_formula(f->lhs, 1, out);
            out += " or ";
            render_formula(f->rhs, 2, out);
            break;
        case Formula::Kind::And:
            render_formula(f->lhs, 2, out);
            out += " and ";
            render_formula(f->rhs, 3, out);
            break;
        case Formula::Kind::Not:
            out += "not ";
            render_formula(f->lhs, 3, out);
            break;
    }
}

}  // namespace

std::string to_string(const FormulaPtr& f) {
    std::string out;
    render_formula(f, 1, out);
    return out;
}

std::string to_string(const A2Sentence& s) {
    std::string out;
    if (!s.universals.empty()) {
        out += "forall";
        for (const auto& v : s.universals) out += " " + v;
        out += " ";
    }
    if (!s.existentials.empty()) {
        out += "exists";
        for (const auto& v : s.existentials) out += " " + v;
        out += " ";
    }
    out += "(" + to_string(s.matrix) + ")";
    return out;
}

// ---------------------------------------------------------------------------
// Lexer and recursive-descent parser.

namespace {

struct Token {
    enum class Kind { Ident, Integer, Punct, End };
    Kind kind;
    std::string text;
    std::size_t pos;
};

bool is_ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (is_digit(c)) {
            while (i < src.size() && is_digit(src[i])) ++i;
            toks.push_back({Token::Kind::Integer, src.substr(start, i - start), start});
        } else if (is_ident_start(c)) {
            while (i < src.size() && is_ident_char(src[i])) ++i;
            toks.push_back({Token::Kind::Ident, src.substr(start, i - start), start});
        } else if (std::string("+-*/()=<>,").find(c) != std::string::npos) {
            ++i;
            toks.push_back({Token::Kind::Punct, std::string(1, c), start});
        } else {
            throw ParseError("unexpected character '" + std::string(1, c) + "'", start);
        }
    }
    toks.push_back({Token::Kind::End, "", src.size()});
    return toks;
}

bool is_reserved(const std::string& word) {
    return word == "exp" || word == "sqrt" || word == "forall" ||
           word == "exists" || word == "and" || word == "or" || word == "not";
}

class Parser {
public:
    explicit Parser(const std::string& src) : toks_(lex(src)) {}

    TermPtr full_term() {
        TermPtr t = expr();
        expect_end();
        return t;
    }

    A2Sentence sentence() {
        A2Sentence s;
        if (peek_ident("forall")) {
            ++i_;
            s.universals = var_list();
        }
        if (peek_ident("exists")) {
            ++i_;
            s.existentials = var_list();
        }
        expect_punct("(");
        s.matrix = formula_or();
        expect_punct(")");
        expect_end();
        return s;
    }

private:
    std::vector<Token> toks_;
    std::size_t i_ = 0;

    const Token& cur() const { return toks_[i_]; }

    [[noreturn]] void fail(const std::string& what) const {
        std::string got = cur().kind == Token::Kind::End
                              ? "end of input"
                              : "'" + cur().text + "'";
        throw ParseError("expected " + what + ", got " + got, cur().pos);
    }

    bool peek_punct(const std::string& p) const {
        return cur().kind == Token::Kind::Punct && cur().text == p;
    }
    bool peek_ident(const std::string& w) const {
        return cur().kind == Token::Kind::Ident && cur().text == w;
    }
    void expect_punct(const std::string& p) {
        if (!peek_punct(p)) fail("'" + p + "'");
        ++i_;
    }
    void expect_end() {
        if (cur().kind != Token::Kind::End) fail("end of input");
    }

    std::vector<std::string> var_list() {
        std::vector<std::string> vars;
        while (true) {
            if (peek_punct(",")) {
                ++i_;
                continue;
            }
            if (cur().kind != Token::Kind::Ident || is_reserved(cur().text)) break;
            vars.push_back(cur().text);
            ++i_;
        }
        if (vars.empty()) fail("a variable name");
        return vars;
    }

    Rat rational(bool negative) {
        if (cur().kind != Token::Kind::Integer) fail("a number");
        Int num(cur().text, 10);
        ++i_;
        Int den(1);
        if (peek_punct("/")) {
            ++i_;
            if (cur().kind != Token::Kind::Integer) fail("a denominator");
            den = Int(cur().text, 10);
            if (den == 0) throw ParseError("zero denominator", cur().pos);
            ++i_;
        }
        if (negative) num = -num;
        return make_rat(num, den);
    }

    TermPtr factor() {
        if (peek_punct("-")) {
            ++i_;
            return t_const(rational(true));
        }
        if (cur().kind == Token::Kind::Integer) {
            return t_const(rational(false));
        }
        if (peek_punct("(")) {
            ++i_;
            TermPtr t = expr();
            expect_punct(")");
            return t;
        }
        if (cur().kind == Token::Kind::Ident) {
            const std::string word = cur().text;
            if (word == "exp" || word == "sqrt") {
                ++i_;
                expect_punct("(");
                TermPtr arg = expr();
                expect_punct(")");
                return word == "exp" ? t_exp2(arg) : t_sqrt(arg);
            }
            if (is_reserved(word)) fail("a term");
            ++i_;
            return t_var(word);
        }
        fail("a term");
    }

    TermPtr term() {
        TermPtr t = factor();
        while (peek_punct("*")) {
            ++i_;
            t = t_mul(t, factor());
        }
        return t;
    }

    TermPtr expr() {
        TermPtr t = term();
        while (peek_punct("+") || peek_punct("-")) {
            bool plus = cur().text == "+";
            ++i_;
            TermPtr r = term();
            t = plus ? t_add(t, r) : t_sub(t, r);
        }
        return t;
    }

    // l - r, except that subtracting a literal zero keeps l itself so that
    // "t = 0" normalizes to the term t and printing is a fixed point.
    static TermPtr sub_normalized(TermPtr l, TermPtr r) {
        if (r->kind == Term::Kind::Constant && r->value == 0) return l;
        return t_sub(std::move(l), std::move(r));
    }

    Literal literal() {
        TermPtr l = expr();
        if (peek_punct("=")) {
            ++i_;
            return {true, sub_normalized(l, expr())};
        }
        if (peek_punct(">")) {
            ++i_;
            return {false, sub_normalized(l, expr())};
        }
        if (peek_punct("<")) {
            ++i_;
            return {false, sub_normalized(expr(), l)};
        }
        fail("a comparison ('=', '>' or '<')");
    }

    FormulaPtr formula_atom() {
        if (peek_punct("(")) {
            // Either a parenthesized term starting a literal or a
            // parenthesized subformula; try the literal reading first and
            // backtrack on failure.
            std::size_t save = i_;
            try {
                return f_atom(literal());
            } catch (const ParseError&) {
                i_ = save;
            }
            expect_punct("(");
            FormulaPtr f = formula_or();
            expect_punct(")");
            return f;
        }
        return f_atom(literal());
    }

    FormulaPtr formula_not() {
        if (peek_ident("not")) {
            ++i_;
            return f_not(formula_not());
        }
        return formula_atom();
    }

    FormulaPtr formula_and() {
        FormulaPtr f = formula_not();
        while (peek_ident("and")) {
            ++i_;
            f = f_and(f, formula_not());
        }
        return f;
    }

    FormulaPtr formula_or() {
        FormulaPtr f = formula_and();
        while (peek_ident("or")) {
            ++i_;
            f = f_or(f, formula_and());
        }
        return f;
    }
};

void collect_formula_vars(const FormulaPtr& f, std::set<std::string>& out) {
    if (!f) return;
    if (f->kind == Formula::Kind::Atom) {
        collect_vars(f->atom.term, out);
        return;
    }
    collect_formula_vars(f->lhs, out);
    collect_formula_vars(f->rhs, out);
}

}  // namespace

TermPtr parse_term(const std::string& src) {
    return Parser(src).full_term();
}

A2Sentence parse_sentence(const std::string& src) {
    A2Sentence s = Parser(src).sentence();
    std::set<std::string> bound;
    for (const auto& v : s.universals) {
        if (!bound.insert(v).second) {
            throw ParseError("duplicate quantified variable '" + v + "'", 0);
        }
    }
    for (const auto& v : s.existentials) {
        if (!bound.insert(v).second) {
            throw ParseError("duplicate quantified variable '" + v + "'", 0);
        }
    }
    std::set<std::string> used;
    collect_formula_vars(s.matrix, used);
    for (const auto& v : used) {
        if (bound.find(v) == bound.end()) {
            throw UnboundVariableError("variable '" + v + "' is not quantified");
        }
    }
    return s;
}

}  // namespace creals
