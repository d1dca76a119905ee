#ifndef CREALS_TERM_HPP
#define CREALS_TERM_HPP

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "creals/cauchy.hpp"
#include "creals/intops.hpp"

namespace creals {

/// Term in the language of ordered exponential rings: rational constants,
/// variables, +, -, *, base-2 exponentiation, and square root as derived
/// sugar. Immutable, shared subtrees.
struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
    enum class Kind { Constant, Variable, Add, Sub, Mul, Exp2, Sqrt };
    Kind kind;
    Rat value;         // Constant
    std::string name;  // Variable
    TermPtr lhs;       // left operand; sole operand of Exp2/Sqrt
    TermPtr rhs;       // right operand of Add/Sub/Mul
};

TermPtr t_const(const Rat& q);
TermPtr t_var(std::string name);
TermPtr t_add(TermPtr a, TermPtr b);
TermPtr t_sub(TermPtr a, TermPtr b);
TermPtr t_mul(TermPtr a, TermPtr b);
TermPtr t_exp2(TermPtr a);
TermPtr t_sqrt(TermPtr a);

/// Structural equality.
bool term_equal(const TermPtr& a, const TermPtr& b);

/// Insert every variable name occurring in t into out.
void collect_vars(const TermPtr& t, std::set<std::string>& out);

/// Render with the fewest parentheses that re-parse to the same tree.
std::string to_string(const TermPtr& t);

using Env = std::map<std::string, CauchyReal>;
using RatEnv = std::map<std::string, Rat>;

/// Structural evaluation over the computable-real operations. sqrt searches
/// its apartness witness internally. Throws UnboundVariableError for a
/// variable missing from env; sqrt propagates NegativeInputError and
/// InvalidWitnessError.
CauchyReal eval_term(const TermPtr& t, const Env& env);

/// Exact rational evaluation where the term structure allows one: ring
/// operations always, exp only at integer arguments, sqrt only of perfect
/// squares. Returns nullopt as soon as a subterm falls outside that fragment
/// (including sqrt of a negative rational). Throws UnboundVariableError for a
/// variable missing from env.
std::optional<Rat> eval_exact_term(const TermPtr& t, const RatEnv& env);

/// Atomic statement in normalized polarity: term = 0 or term > 0.
struct Literal {
    bool is_equality;  // true: term = 0; false: term > 0
    TermPtr term;
};

/// Quantifier-free formula over literals.
struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
    enum class Kind { Atom, And, Or, Not };
    Kind kind;
    Literal atom;   // Atom
    FormulaPtr lhs; // left operand; sole operand of Not
    FormulaPtr rhs; // right operand of And/Or
};

FormulaPtr f_atom(Literal lit);
FormulaPtr f_and(FormulaPtr a, FormulaPtr b);
FormulaPtr f_or(FormulaPtr a, FormulaPtr b);
FormulaPtr f_not(FormulaPtr a);

std::string to_string(const FormulaPtr& f);

/// Prenex forall-exists sentence: universals, then existentials, then a
/// quantifier-free matrix whose free variables are exactly covered by the
/// quantified ones.
struct A2Sentence {
    std::vector<std::string> universals;
    std::vector<std::string> existentials;
    FormulaPtr matrix;
};

std::string to_string(const A2Sentence& s);

/// Parse a closed or open term. Grammar (whitespace-insensitive):
///   expr     := term (('+' | '-') term)*
///   term     := factor ('*' factor)*
///   factor   := 'exp' '(' expr ')' | 'sqrt' '(' expr ')' | '(' expr ')'
///             | rational | variable
///   rational := ['-'] integer ['/' positive-integer]
/// Throws ParseError with the offending position.
TermPtr parse_term(const std::string& src);

/// Parse a prenex sentence:
///   sentence := ['forall' vars] ['exists' vars] '(' formula ')'
///   formula  := disjunction of conjunctions of (possibly negated) literals;
///               'not' binds tightest, then 'and', then 'or'; parentheses
///               group subformulas
///   literal  := expr ('=' | '>' | '<') expr
/// Comparisons normalize to t = 0 / t > 0 form. Throws ParseError for syntax
/// and UnboundVariableError if the matrix uses an unquantified variable.
A2Sentence parse_sentence(const std::string& src);

}  // namespace creals

#endif
