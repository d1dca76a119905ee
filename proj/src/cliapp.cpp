#include "creals/cliapp.hpp"

#include <cstddef>
#include <exception>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "creals/cauchy.hpp"
#include "creals/check.hpp"
#include "creals/elemfn.hpp"
#include "creals/errors.hpp"
#include "creals/intops.hpp"
#include "creals/poly.hpp"
#include "creals/term.hpp"

namespace creals {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUnknown = 2;

/// Fixed-point decimal with exactly `digits` places, truncated toward zero.
/// `x` must already be representable in that many places for the string to
/// be exact; callers pass either an exact value (truncating is the contract)
/// or a prepared multiple of 10^-digits.
std::string format_decimal(const Rat& x, unsigned digits) {
    Int scale = ipow(Int(10), digits);
    Rat scaled(x * scale);
    Int t;
    Int num = scaled.get_num();
    Int den = scaled.get_den();
    mpz_tdiv_q(t.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    bool neg = t < 0;
    Int mag = neg ? Int(-t) : t;
    Int ip = mag / scale;
    Int fp = mag % scale;
    std::string s = neg ? "-" : "";
    s += ip.get_str();
    if (digits > 0) {
        std::string frac = fp.get_str();
        s += "." + std::string(digits - frac.size(), '0') + frac;
    }
    return s;
}

/// Decimal d with the guarantee |d - value| <= 10^-digits. Exact values
/// truncate directly; otherwise an approximant at index 2*10^(digits+1) is
/// truncated and, when the truncation residue plus the approximation error
/// could cross the bound, nudged one last-place unit toward the approximant.
std::string decimal_with_bound(const CauchyReal& x, unsigned digits) {
    Int scale = ipow(Int(10), digits);
    if (x.exact()) return format_decimal(*x.exact(), digits);
    Rat ulp = make_rat(Int(1), scale);
    Int n = Int(20) * scale;
    Rat q = x.approx(n);
    Rat scaled(q * scale);
    Int t;
    Int num = scaled.get_num();
    Int den = scaled.get_den();
    mpz_tdiv_q(t.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Rat d0 = make_rat(t, scale);
    Rat r(q - d0);
    if (r < 0) r = -r;
    if (Rat(r + make_rat(Int(1), n)) > ulp) t += (q >= d0 ? 1 : -1);
    return format_decimal(make_rat(t, scale), digits);
}

/// Parse one polynomial coefficient: a rational literal like -2 or 3/4.
Rat parse_coefficient(const std::string& token) {
    TermPtr t = parse_term(token);
    if (t->kind != Term::Kind::Constant) {
        throw ParseError("coefficient must be a rational literal", 0);
    }
    return t->value;
}

std::string bindings_text(const std::vector<std::string>& names,
                          const std::vector<Rat>& vals) {
    std::ostringstream os;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (i) os << ", ";
        os << names[i] << " = " << vals[i].get_str();
    }
    return os.str();
}

nlohmann::json bindings_json(const std::vector<std::string>& names,
                             const std::vector<Rat>& vals) {
    nlohmann::json j = nlohmann::json::object();
    for (std::size_t i = 0; i < vals.size(); ++i) {
        j[names[i]] = vals[i].get_str();
    }
    return j;
}

nlohmann::json certificate_json(const CompareResult& r) {
    return nlohmann::json{{"m", r.m.get_str()},
                          {"k", r.k.get_str()},
                          {"sep_index", r.sep_index.get_str()},
                          {"left_approx", r.left_at_n.get_str()},
                          {"right_approx", r.right_at_n.get_str()}};
}

CauchyReal eval_closed(const std::string& src, const char* who) {
    TermPtr t = parse_term(src);
    std::set<std::string> vars;
    collect_vars(t, vars);
    if (!vars.empty()) {
        throw UnboundVariableError(std::string(who) +
                                   ": expression must be closed, found '" +
                                   *vars.begin() + "'");
    }
    return eval_term(t, {});
}

int cmd_eval(const std::string& expr, unsigned digits, bool json,
             std::ostream& out) {
    TermPtr t = parse_term(expr);
    std::set<std::string> vars;
    collect_vars(t, vars);
    if (!vars.empty()) {
        throw UnboundVariableError("eval: expression must be closed, found '" +
                                   *vars.begin() + "'");
    }
    CauchyReal v = eval_term(t, {});
    std::string dec = decimal_with_bound(v, digits);
    std::string bound = "1e-" + std::to_string(digits);
    if (json) {
        nlohmann::json j{{"command", "eval"},
                         {"expression", to_string(t)},
                         {"value", dec},
                         {"bound", bound}};
        if (v.exact()) j["exact"] = v.exact()->get_str();
        out << j.dump() << "\n";
    } else {
        out << dec << " ± " << bound << "\n";
    }
    return kExitOk;
}

int cmd_floor(const std::string& expr, unsigned fuel, bool json,
              std::ostream& out) {
    CauchyReal v = eval_closed(expr, "floor");
    std::optional<Int> f = floor(v, fuel);
    if (json) {
        nlohmann::json j{{"command", "floor"}, {"expression", expr}};
        if (f) {
            j["floor"] = f->get_str();
        } else {
            j["result"] = "unknown";
            j["fuel"] = fuel;
        }
        out << j.dump() << "\n";
        return f ? kExitOk : kExitUnknown;
    }
    if (!f) {
        out << "unknown (no decision at fuel " << fuel << ")\n";
        return kExitUnknown;
    }
    out << f->get_str() << "\n";
    return kExitOk;
}

int cmd_compare(const std::string& left, const std::string& right,
                unsigned fuel, bool json, std::ostream& out) {
    CauchyReal a = eval_closed(left, "compare");
    CauchyReal b = eval_closed(right, "compare");
    CompareResult r = compare(a, b, fuel);
    const char* name = r.is_less() ? "less" : r.is_greater() ? "greater"
                                                             : "unknown";
    if (json) {
        nlohmann::json j{{"command", "compare"},
                         {"left", left},
                         {"right", right},
                         {"result", name}};
        if (r.is_unknown()) {
            j["fuel"] = fuel;
        } else {
            j["certificate"] = certificate_json(r);
        }
        out << j.dump() << "\n";
        return r.is_unknown() ? kExitUnknown : kExitOk;
    }
    if (r.is_unknown()) {
        out << "unknown (no separation at fuel " << fuel << ")\n";
        return kExitUnknown;
    }
    out << name << " (certificate: m=" << r.m.get_str()
        << ", k=" << r.k.get_str() << ")\n";
    return kExitOk;
}

int cmd_root(const std::string& coeffs, unsigned digits, unsigned fuel,
             bool json, std::ostream& out) {
    std::vector<Rat> cs;
    std::istringstream is(coeffs);
    std::string token;
    while (is >> token) cs.push_back(parse_coefficient(token));
    Polynomial p = polynomial_from_rationals(cs);
    CauchyReal root = root_odd(p, fuel);
    std::string dec = decimal_with_bound(root, digits);
    std::string bound = "1e-" + std::to_string(digits);
    if (json) {
        nlohmann::json cj = nlohmann::json::array();
        for (const Rat& c : cs) cj.push_back(c.get_str());
        nlohmann::json j{{"command", "root"},
                         {"coefficients", cj},
                         {"value", dec},
                         {"bound", bound}};
        out << j.dump() << "\n";
    } else {
        out << dec << " ± " << bound << "\n";
    }
    return kExitOk;
}

const char* verdict_name(Verdict::Kind k) {
    switch (k) {
        case Verdict::Kind::Refuted:
            return "refuted";
        case Verdict::Kind::WitnessFound:
            return "witnesses found";
        case Verdict::Kind::Unknown:
            return "unknown";
    }
    return "unknown";
}

int cmd_check(const std::string& src, unsigned budget, std::size_t samples,
              bool json, std::ostream& out) {
    A2Sentence s = parse_sentence(src);
    Verdict v = check_sentence(s, budget, samples);
    int code = v.kind == Verdict::Kind::Unknown ? kExitUnknown : kExitOk;
    if (json) {
        nlohmann::json js = nlohmann::json::array();
        for (const SampleReport& r : v.samples) {
            nlohmann::json eq = nlohmann::json::array();
            for (const EqEvidence& e : r.cert.zero_certs) {
                eq.push_back({{"exact", e.exact},
                              {"index", e.index.get_str()},
                              {"value", e.value.get_str()}});
            }
            nlohmann::json pos = nlohmann::json::array();
            for (const CompareResult& c : r.cert.pos_certs) {
                pos.push_back(certificate_json(c));
            }
            js.push_back({{"outer", bindings_json(s.universals, r.outer)},
                          {"certified", r.certified},
                          {"conjunct", r.cert.conjunct},
                          {"witness",
                           bindings_json(s.existentials, r.cert.witness)},
                          {"zoom_rounds", r.zoom_rounds},
                          {"equalities", eq},
                          {"inequalities", pos}});
        }
        nlohmann::json j{{"command", "check"},
                         {"sentence", to_string(s)},
                         {"verdict", verdict_name(v.kind)},
                         {"note", v.note},
                         {"semantics", verdict_semantics(v.kind)},
                         {"budget", budget},
                         {"samples_requested", samples},
                         {"samples", js}};
        if (v.kind == Verdict::Kind::Refuted) {
            j["counterexample"] =
                bindings_json(s.universals, v.counterexample);
        }
        out << j.dump() << "\n";
        return code;
    }
    out << "verdict: " << verdict_name(v.kind) << "\n";
    if (v.kind == Verdict::Kind::Refuted) {
        out << "counterexample: "
            << bindings_text(s.universals, v.counterexample) << "\n";
    } else {
        if (!v.note.empty()) out << v.note << "\n";
        if (v.kind == Verdict::Kind::WitnessFound &&
            !s.existentials.empty()) {
            for (const SampleReport& r : v.samples) {
                out << "  ";
                if (!r.outer.empty()) {
                    out << bindings_text(s.universals, r.outer) << "  ->  ";
                }
                out << bindings_text(s.existentials, r.cert.witness);
                if (r.zoom_rounds > 0) {
                    out << "  (zoomed " << r.zoom_rounds << " rounds)";
                }
                out << "\n";
            }
        }
    }
    out << verdict_semantics(v.kind) << "\n";
    return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Exact real arithmetic calculator and sentence checker"};
    app.require_subcommand(1);

    std::string eval_expr;
    unsigned eval_digits = 6;
    bool eval_json = false;
    CLI::App* eval_cmd = app.add_subcommand(
        "eval", "Evaluate a closed expression to a guaranteed decimal");
    eval_cmd->add_option("expression", eval_expr, "Closed expression")
        ->required();
    eval_cmd->add_option("--digits", eval_digits,
                         "Guaranteed decimal places (default 6)");
    eval_cmd->add_flag("--json", eval_json, "Machine-readable output");

    std::string floor_expr;
    unsigned floor_fuel = 30;
    bool floor_json = false;
    CLI::App* floor_cmd = app.add_subcommand(
        "floor", "Integer part of a closed expression");
    floor_cmd->add_option("expression", floor_expr, "Closed expression")
        ->required();
    floor_cmd->add_option("--fuel", floor_fuel,
                          "Probe depth before giving up (default 30)");
    floor_cmd->add_flag("--json", floor_json, "Machine-readable output");

    std::string cmp_left, cmp_right;
    unsigned cmp_fuel = 30;
    bool cmp_json = false;
    CLI::App* cmp_cmd = app.add_subcommand(
        "compare", "Order two closed expressions with a certificate");
    cmp_cmd->add_option("left", cmp_left, "Left expression")->required();
    cmp_cmd->add_option("right", cmp_right, "Right expression")->required();
    cmp_cmd->add_option("--fuel", cmp_fuel,
                        "Probe depth before giving up (default 30)");
    cmp_cmd->add_flag("--json", cmp_json, "Machine-readable output");

    std::string root_coeffs;
    unsigned root_digits = 6;
    unsigned root_fuel = 60;
    bool root_json = false;
    CLI::App* root_cmd = app.add_subcommand(
        "root", "Find a root of an odd-degree polynomial");
    root_cmd
        ->add_option("--coeffs", root_coeffs,
                     "Space-separated rational coefficients, constant first")
        ->required();
    root_cmd->add_option("--digits", root_digits,
                         "Guaranteed decimal places (default 6)");
    root_cmd->add_option("--fuel", root_fuel,
                         "Sign-decision probe depth (default 60)");
    root_cmd->add_flag("--json", root_json, "Machine-readable output");

    std::string check_src;
    unsigned check_budget = 20;
    std::size_t check_samples = 20;
    bool check_json = false;
    CLI::App* check_cmd = app.add_subcommand(
        "check", "Search for evidence about a forall-exists sentence");
    check_cmd->add_option("sentence", check_src, "Sentence to check")
        ->required();
    check_cmd->add_option("--budget", check_budget,
                          "Certification budget (default 20)");
    check_cmd->add_option("--samples", check_samples,
                          "Universal sample count (default 20)");
    check_cmd->add_flag("--json", check_json, "Machine-readable output");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("creal");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitError;
    }

    try {
        if (app.got_subcommand(eval_cmd)) {
            return cmd_eval(eval_expr, eval_digits, eval_json, out);
        }
        if (app.got_subcommand(floor_cmd)) {
            return cmd_floor(floor_expr, floor_fuel, floor_json, out);
        }
        if (app.got_subcommand(cmp_cmd)) {
            return cmd_compare(cmp_left, cmp_right, cmp_fuel, cmp_json, out);
        }
        if (app.got_subcommand(root_cmd)) {
            return cmd_root(root_coeffs, root_digits, root_fuel, root_json,
                            out);
        }
        if (app.got_subcommand(check_cmd)) {
            return cmd_check(check_src, check_budget, check_samples,
                             check_json, out);
        }
    } catch (const FuelExhaustedError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUnknown;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    err << "error: no command\n";
    return kExitError;
}

}  // namespace creals
