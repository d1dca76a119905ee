#include "creals/check.hpp"

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "creals/box.hpp"
#include "creals/enumerate.hpp"
#include "creals/errors.hpp"

namespace creals {

namespace {

/// Direct witness search scans this many small rationals per existential
/// coordinate, and at most this many tuples, before box refinement starts.
constexpr std::size_t kDirectWitnessPool = 48;
constexpr std::size_t kDirectTupleCap = 4096;

Rat abs_rat(const Rat& q) { return q < 0 ? Rat(-q) : q; }

Env real_env_from(const RatEnv& env) {
    Env out;
    for (const auto& [name, q] : env) out.emplace(name, from_rational(q));
    return out;
}

struct CertParts {
    std::vector<EqEvidence> zeros;
    std::vector<CompareResult> pos;
};

/// Certify every literal of one disjunct at an exact rational assignment,
/// or report failure. Evaluation errors (square root of a negative value,
/// or of a value not separable from zero) disqualify the assignment.
std::optional<CertParts> certify_conjunct(const Conjunct& cj, const RatEnv& env,
                                          unsigned budget,
                                          const Int& cert_index,
                                          const Rat& cert_margin,
                                          const Rat& zero_threshold) {
    CertParts parts;
    std::optional<Env> renv;
    auto reals = [&]() -> const Env& {
        if (!renv) renv = real_env_from(env);
        return *renv;
    };
    for (const TermPtr& t : cj.zeros) {
        std::optional<Rat> ex = eval_exact_term(t, env);
        if (ex) {
            if (!(abs_rat(*ex) < zero_threshold)) return std::nullopt;
            parts.zeros.push_back(EqEvidence{true, Int(0), *ex});
            continue;
        }
        Rat v;
        try {
            v = eval_term(t, reals()).approx(cert_index);
        } catch (const NegativeInputError&) {
            return std::nullopt;
        } catch (const InvalidWitnessError&) {
            return std::nullopt;
        }
        if (!(abs_rat(v) < cert_margin)) return std::nullopt;
        parts.zeros.push_back(EqEvidence{false, cert_index, v});
    }
    for (const TermPtr& t : cj.positives) {
        try {
            CompareResult r = compare(CauchyReal(), eval_term(t, reals()), budget);
            if (!r.is_less()) return std::nullopt;
            parts.pos.push_back(std::move(r));
        } catch (const NegativeInputError&) {
            return std::nullopt;
        } catch (const InvalidWitnessError&) {
            return std::nullopt;
        }
    }
    return parts;
}

/// True when exact evaluation already falsifies some literal of the
/// disjunct: an equality with a provably nonzero value, or a positivity
/// claim with a value at or below zero. Literals that exact evaluation
/// cannot settle contribute nothing.
bool conjunct_exactly_false(const Conjunct& cj, const RatEnv& env) {
    for (const TermPtr& t : cj.zeros) {
        std::optional<Rat> v = eval_exact_term(t, env);
        if (v && *v != 0) return true;
    }
    for (const TermPtr& t : cj.positives) {
        std::optional<Rat> v = eval_exact_term(t, env);
        if (v && *v <= 0) return true;
    }
    return false;
}

std::string tuple_str(const std::vector<std::string>& names,
                      const std::vector<Rat>& vals) {
    if (vals.empty()) return "(no universal variables)";
    std::ostringstream os;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (i) os << ", ";
        os << names[i] << " = " << vals[i].get_str();
    }
    return os.str();
}

}  // namespace

std::string verdict_semantics(Verdict::Kind kind) {
    switch (kind) {
        case Verdict::Kind::Refuted:
            return "refuted: an exact rational counterexample falsifies the "
                   "sentence outright";
        case Verdict::Kind::WitnessFound:
            return "witnesses found: every sampled assignment of the "
                   "universal variables got a certified witness; this is "
                   "evidence, not a proof, for the universal part";
        case Verdict::Kind::Unknown:
            return "unknown: the search budget ran out before a refutation "
                   "or full witness coverage";
    }
    return "";
}

Verdict check_sentence(const A2Sentence& s, unsigned budget,
                       std::size_t samples) {
    if (budget < 1) {
        throw std::invalid_argument("check_sentence: budget must be at least 1");
    }
    if (samples < 1) {
        throw std::invalid_argument("check_sentence: samples must be at least 1");
    }
    Dnf dnf = to_dnf(s.matrix);
    const std::size_t m_u = s.universals.size();
    const std::size_t m_e = s.existentials.size();
    const Int cert_index = ipow(Int(2), budget + 2);
    const Rat cert_margin = make_rat(Int(3), cert_index);
    const Rat zero_threshold = make_rat(Int(1), ipow(Int(2), budget));

    const std::vector<Rat> outer_pool = first_rationals(samples);
    const std::vector<Rat> witness_pool = first_rationals(kDirectWitnessPool);

    Verdict verdict;
    bool refuted = false;
    bool uncertified = false;

    for_each_index_tuple(
        m_u, samples - 1, samples,
        [&](const std::vector<std::size_t>& oidx) -> bool {
            RatEnv outer_env;
            std::vector<Rat> outer_vals;
            outer_vals.reserve(m_u);
            for (std::size_t i = 0; i < m_u; ++i) {
                outer_env[s.universals[i]] = outer_pool[oidx[i]];
                outer_vals.push_back(outer_pool[oidx[i]]);
            }

            // A counterexample is only ever claimed from exact evaluation,
            // and only when there is no existential quantifier to satisfy.
            if (m_e == 0 && !dnf.empty()) {
                bool all_false = true;
                for (const Conjunct& cj : dnf) {
                    if (!conjunct_exactly_false(cj, outer_env)) {
                        all_false = false;
                        break;
                    }
                }
                if (all_false) {
                    refuted = true;
                    verdict.counterexample = outer_vals;
                    verdict.note = "exact counterexample: " +
                                   tuple_str(s.universals, outer_vals);
                    return true;
                }
            }

            SampleReport report;
            report.outer = outer_vals;
            for (std::size_t c = 0; c < dnf.size() && !report.certified; ++c) {
                const Conjunct& cj = dnf[c];

                // Stage 1: direct search over small-rational witness tuples.
                for_each_index_tuple(
                    m_e, witness_pool.size() - 1, kDirectTupleCap,
                    [&](const std::vector<std::size_t>& widx) -> bool {
                        RatEnv env = outer_env;
                        std::vector<Rat> wvals;
                        wvals.reserve(m_e);
                        for (std::size_t i = 0; i < m_e; ++i) {
                            env[s.existentials[i]] = witness_pool[widx[i]];
                            wvals.push_back(witness_pool[widx[i]]);
                        }
                        auto parts =
                            certify_conjunct(cj, env, budget, cert_index,
                                             cert_margin, zero_threshold);
                        if (!parts) return false;
                        report.certified = true;
                        report.cert = WitnessCert{c, std::move(wvals),
                                                  std::move(parts->pos),
                                                  std::move(parts->zeros)};
                        return true;
                    });
                if (report.certified || m_e == 0 || cj.zeros.empty()) continue;

                // Stage 2: refine a box around the existential variables with
                // tightening tolerances; a round that finds nothing keeps the
                // box for the next, tighter round.
                Box box;
                box.sides.assign(m_e, {Rat(-16), Rat(16)});
                unsigned zoom_rounds = 0;
                std::vector<Rat> final_point;
                bool final_found = false;
                for (unsigned k = 1; k <= budget; ++k) {
                    RefineOutcome out =
                        refine_box(cj.zeros, outer_env, s.existentials, box, k);
                    if (out.box) {
                        box = std::move(*out.box);
                        ++zoom_rounds;
                        if (k == budget) {
                            final_found = true;
                            final_point = std::move(out.point);
                        }
                    }
                }
                if (!final_found) continue;
                RatEnv env = outer_env;
                for (std::size_t i = 0; i < m_e; ++i) {
                    env[s.existentials[i]] = final_point[i];
                }
                auto parts = certify_conjunct(cj, env, budget, cert_index,
                                              cert_margin, zero_threshold);
                if (parts) {
                    report.certified = true;
                    report.cert = WitnessCert{c, std::move(final_point),
                                              std::move(parts->pos),
                                              std::move(parts->zeros)};
                    report.zoom_rounds = zoom_rounds;
                }
            }

            bool ok = report.certified;
            verdict.samples.push_back(std::move(report));
            if (!ok) {
                uncertified = true;
                verdict.note =
                    "no certified witness within budget for sample " +
                    tuple_str(s.universals, verdict.samples.back().outer);
                return true;  // stop at the first uncertifiable sample
            }
            return false;
        });

    if (refuted) {
        verdict.kind = Verdict::Kind::Refuted;
    } else if (uncertified) {
        verdict.kind = Verdict::Kind::Unknown;
    } else {
        verdict.kind = Verdict::Kind::WitnessFound;
        verdict.note = "certified witnesses for all " +
                       std::to_string(verdict.samples.size()) +
                       " sampled assignments";
    }
    return verdict;
}

}  // namespace creals
