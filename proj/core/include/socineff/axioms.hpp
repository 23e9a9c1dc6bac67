#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "socineff/context.hpp"
#include "socineff/errors.hpp"
#include "socineff/extended.hpp"
#include "socineff/frontier.hpp"
#include "socineff/inefficiency.hpp"
#include "socineff/scalar.hpp"

namespace socineff {

// ---------------------------------------------------------------------------
// Variants and axioms
// ---------------------------------------------------------------------------

enum class VariantId { Ihat, Zero, Weighted, Squared, Radical, Dimension, Exponential, Shifted };

enum class Axiom {
    ParetoMonotonicity,
    Anonymity,
    ExpectedInefficiency,
    Iia,
    Iip,
    PopulationSizeStability,
    Feasibility,
};

inline constexpr std::array<VariantId, 8> kAllVariants = {
    VariantId::Ihat,     VariantId::Zero,      VariantId::Weighted,    VariantId::Squared,
    VariantId::Radical,  VariantId::Dimension, VariantId::Exponential, VariantId::Shifted};

inline constexpr std::array<Axiom, 7> kAllAxioms = {
    Axiom::ParetoMonotonicity, Axiom::Anonymity, Axiom::ExpectedInefficiency,
    Axiom::Iia,                Axiom::Iip,       Axiom::PopulationSizeStability,
    Axiom::Feasibility};

inline const char* variant_name(VariantId v) {
    switch (v) {
        case VariantId::Ihat: return "ihat";
        case VariantId::Zero: return "zero";
        case VariantId::Weighted: return "weighted";
        case VariantId::Squared: return "squared";
        case VariantId::Radical: return "radical";
        case VariantId::Dimension: return "dimension";
        case VariantId::Exponential: return "exponential";
        case VariantId::Shifted: return "shifted";
    }
    return "?";
}

inline std::optional<VariantId> variant_from_name(const std::string& name) {
    for (VariantId v : kAllVariants)
        if (name == variant_name(v)) return v;
    return std::nullopt;
}

inline const char* axiom_name(Axiom a) {
    switch (a) {
        case Axiom::ParetoMonotonicity: return "ParetoMonotonicity";
        case Axiom::Anonymity: return "Anonymity";
        case Axiom::ExpectedInefficiency: return "ExpectedInefficiency";
        case Axiom::Iia: return "IIA";
        case Axiom::Iip: return "IIP";
        case Axiom::PopulationSizeStability: return "PopulationSizeStability";
        case Axiom::Feasibility: return "Feasibility";
    }
    return "?";
}

/// The single axiom each non-baseline variant is built to violate.
inline std::optional<Axiom> designated_failure(VariantId v) {
    switch (v) {
        case VariantId::Ihat: return std::nullopt;
        case VariantId::Zero: return Axiom::ParetoMonotonicity;
        case VariantId::Weighted: return Axiom::Anonymity;
        case VariantId::Squared: return Axiom::ExpectedInefficiency;
        case VariantId::Radical: return Axiom::Iia;
        case VariantId::Dimension: return Axiom::Iip;
        case VariantId::Exponential: return Axiom::PopulationSizeStability;
        case VariantId::Shifted: return Axiom::Feasibility;
    }
    return std::nullopt;
}

/// Product of the distinct prime factors; rad(1) = 1.
inline std::uint64_t rad(std::uint64_t m) {
    if (m == 0) throw PreconditionViolated("rad(0) undefined");
    std::uint64_t out = 1;
    for (std::uint64_t p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            out *= p;
            while (m % p == 0) m /= p;
        }
    return out * (m > 1 ? m : 1);
}

// ---------------------------------------------------------------------------
// Variant evaluation
// ---------------------------------------------------------------------------

namespace detail {

template <class T>
Extended<T> square_ext(const Extended<T>& v) {
    if (v.is_finite()) return Extended<T>(v.finite() * v.finite());
    return Extended<T>::pos_inf();
}

/// Sum of per-individual normalized utilities weighted by 2^{-i}, scaled so
/// the weights sum to one (constant 1/(1 - 2^{-n}); the sign-corrected form of
/// the published normalizer, which is negative).
template <class T>
Extended<T> weighted_value(const Context<T>& c, const FrontierSummary<T>& f, const Lottery<T>& x) {
    const std::size_t n = c.n_individuals();
    Extended<T> total(NumericTraits<T>::zero());
    T w = T(1) / T(2);
    T weight_sum = NumericTraits<T>::zero();
    for (std::size_t i = 0; i < n; ++i) {
        total = total + w * normalized_utility(c, f, i, x);
        weight_sum += w;
        w /= T(2);
    }
    return (T(1) / weight_sum) * total;
}

/// Average of squared normalized shortfalls ((u_max - u) / diameter)^2.
template <class T>
Extended<T> squared_value(const Context<T>& c, const FrontierSummary<T>& f, const Lottery<T>& x) {
    const std::size_t n = c.n_individuals();
    Extended<T> total(NumericTraits<T>::zero());
    for (std::size_t i = 0; i < n; ++i)
        total = total + square_ext(Extended<T>::ratio(f.u_max[i] - expected_utility(c, i, x),
                                                      f.u_max[i] - f.u_min[i]));
    return (T(1) / T(static_cast<long>(n))) * total;
}

/// Sum of normalized utilities divided by the frontier dimension.
template <class T>
Extended<T> dimension_value(const Context<T>& c, const FrontierSummary<T>& f, const Lottery<T>& x) {
    if (f.dimension == 0) throw DegenerateDimension();
    Extended<T> total(NumericTraits<T>::zero());
    for (std::size_t i = 0; i < c.n_individuals(); ++i)
        total = total + normalized_utility(c, f, i, x);
    return (T(1) / T(static_cast<long>(f.dimension))) * total;
}

/// max over pure alternatives of a finite-or--inf value function.
template <class T, class F>
T max_over_pure(const Context<T>& c, F&& value) {
    std::optional<T> best;
    for (std::size_t a = 0; a < c.n_alternatives(); ++a) {
        Extended<T> v = value(c.point(a));
        if (!v.is_finite()) continue;
        if (!best || v.finite() > *best) best = v.finite();
    }
    if (!best) throw NumericalBreakdown("no pure alternative has a finite value");
    return *best;
}

template <class T, class F>
T min_over_pure(const Context<T>& c, F&& value) {
    std::optional<T> best;
    for (std::size_t a = 0; a < c.n_alternatives(); ++a) {
        Extended<T> v = value(c.point(a));
        if (!v.is_finite()) continue;
        if (!best || v.finite() < *best) best = v.finite();
    }
    if (!best) throw NumericalBreakdown("no pure alternative has a finite value");
    return *best;
}

}  // namespace detail

template <class T>
Extended<T> eval_variant(VariantId id, const Context<T>& c, const FrontierSummary<T>& f,
                         const Lottery<T>& x) {
    switch (id) {
        case VariantId::Zero:
            return Extended<T>(NumericTraits<T>::zero());
        case VariantId::Ihat:
            return ihat(c, f, x).value;
        case VariantId::Weighted: {
            auto value = [&](const Lottery<T>& y) { return detail::weighted_value(c, f, y); };
            return Extended<T>(detail::max_over_pure(c, value)) - value(x);
        }
        case VariantId::Squared: {
            auto value = [&](const Lottery<T>& y) { return detail::squared_value(c, f, y); };
            return value(x) - Extended<T>(detail::min_over_pure(c, value));
        }
        case VariantId::Radical:
            return T(static_cast<long>(rad(c.n_alternatives()))) * ihat(c, f, x).value;
        case VariantId::Dimension: {
            auto value = [&](const Lottery<T>& y) { return detail::dimension_value(c, f, y); };
            return Extended<T>(detail::max_over_pure(c, value)) - value(x);
        }
        case VariantId::Exponential: {
            T factor = T(1);
            for (std::size_t i = 0; i < c.n_individuals(); ++i) factor *= T(2);
            return factor * ihat(c, f, x).value;
        }
        case VariantId::Shifted:
            return Extended<T>(T(1)) + ihat(c, f, x).value;
    }
    throw PreconditionViolated("unknown variant");
}

template <class T>
Extended<T> eval_variant(VariantId id, const Context<T>& c, const Lottery<T>& x) {
    return eval_variant(id, c, frontier_summary(c), x);
}

// ---------------------------------------------------------------------------
// Fixture and random-context generators
// ---------------------------------------------------------------------------

/// Indicator fixture: alternatives {0} ∪ G for G ⊆ {1..n}, |G| ≠ 1; individual
/// i values alternative "i" at 1 and everything else at 0.
inline Context<Rat> make_chat(std::size_t n, const std::vector<std::size_t>& G) {
    if (G.size() == 1) throw InvalidFixture("singleton G is excluded");
    if (n < G.size()) throw InvalidFixture("need n >= |G|");
    std::vector<std::string> names = {"0"};
    std::vector<bool> seen(n + 1, false);
    for (std::size_t g : G) {
        if (g < 1 || g > n) throw InvalidFixture("G must be a subset of {1..n}");
        if (seen[g]) throw InvalidFixture("duplicate element in G");
        seen[g] = true;
        names.push_back(std::to_string(g));
    }
    std::vector<std::vector<Rat>> u(n, std::vector<Rat>(names.size(), Rat(0)));
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t k = 0; k < G.size(); ++k)
            if (G[k] == i) u[i - 1][k + 1] = Rat(1);
    return Context<Rat>(std::move(names), std::move(u));
}

/// Deterministic context with rational entries p/q in [0,1], q <= 1000.
inline Context<Rat> random_context(std::size_t n, std::size_t m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> qdist(1, 1000);
    std::vector<std::string> names;
    for (std::size_t a = 0; a < m; ++a) names.push_back("a" + std::to_string(a));
    std::vector<std::vector<Rat>> u(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < m; ++a) {
            long q = qdist(rng);
            long p = std::uniform_int_distribution<long>(0, q)(rng);
            u[i].push_back(Rat(p) / q);
        }
    return Context<Rat>(std::move(names), std::move(u));
}

/// Deterministic random lottery over m alternatives with rational weights.
inline Lottery<Rat> random_lottery(std::size_t m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(0, 1000);
    std::vector<Rat> raw;
    Rat total(0);
    for (std::size_t a = 0; a < m; ++a) {
        raw.push_back(Rat(dist(rng) + 1));
        total += raw.back();
    }
    std::vector<std::pair<std::size_t, Rat>> atoms;
    for (std::size_t a = 0; a < m; ++a) atoms.emplace_back(a, raw[a] / total);
    return Lottery<Rat>(m, std::move(atoms));
}

// ---------------------------------------------------------------------------
// Battery
// ---------------------------------------------------------------------------

struct MonotonicityInstance {
    Context<Rat> c;
    Lottery<Rat> x, y;  // x weakly dominates y
    bool strict;
};

struct AnonymityInstance {
    Context<Rat> c;
    std::vector<std::size_t> perm;
    Lottery<Rat> x;
};

struct LinearityInstance {
    Context<Rat> c;
    Lottery<Rat> x, y;
    Rat alpha;
};

struct IiaInstance {
    Context<Rat> big;
    std::vector<std::size_t> keep;  // sorted alternative indices of big
    Lottery<Rat> x, y;              // over restrict(big, keep)
};

struct IipInstance {
    Context<Rat> c, d, dprime;  // d and dprime share shape
    Lottery<Rat> x, xprime;     // over c
    Lottery<Rat> y;             // over d / dprime
};

struct PopStabilityInstance {
    Context<Rat> c;
    std::size_t k;
    Lottery<Rat> x, xprime;
};

struct FeasibilityInstance {
    Context<Rat> c;
};

struct AxiomBattery {
    std::vector<MonotonicityInstance> monotonicity;
    std::vector<AnonymityInstance> anonymity;
    std::vector<LinearityInstance> linearity;
    std::vector<IiaInstance> iia;
    std::vector<IipInstance> iip;
    std::vector<PopStabilityInstance> pop_stability;
    std::vector<FeasibilityInstance> feasibility;
};

struct AxiomReport {
    Axiom axiom;
    bool pass = true;
    std::optional<std::size_t> failing_instance;
    std::string detail;  // values observed at the first failing instance
};

AxiomBattery default_battery(std::uint64_t seed = 20240817);
AxiomReport check_axiom(VariantId id, Axiom axiom, const AxiomBattery& battery);

struct IndependenceCell {
    VariantId variant;
    Axiom axiom;
    bool pass;
};

std::vector<IndependenceCell> independence_matrix(const AxiomBattery& battery);

// ---------------------------------------------------------------------------
// Implementation
// ---------------------------------------------------------------------------

namespace detail {

/// a - b unless it is inf - inf (values here are never -inf).
inline std::optional<ExtendedRat> difference(const ExtendedRat& a, const ExtendedRat& b) {
    if (a.is_pos_inf() && b.is_pos_inf()) return std::nullopt;
    return a - b;
}

inline AxiomReport fail_report(Axiom axiom, std::size_t index, std::string detail) {
    AxiomReport r;
    r.axiom = axiom;
    r.pass = false;
    r.failing_instance = index;
    r.detail = std::move(detail);
    return r;
}

}  // namespace detail

inline AxiomReport check_axiom(VariantId id, Axiom axiom, const AxiomBattery& battery) {
    AxiomReport report;
    report.axiom = axiom;

    switch (axiom) {
        case Axiom::ParetoMonotonicity: {
            for (std::size_t k = 0; k < battery.monotonicity.size(); ++k) {
                const auto& inst = battery.monotonicity[k];
                bool strict_seen = false;
                for (std::size_t i = 0; i < inst.c.n_individuals(); ++i) {
                    Rat ex = expected_utility(inst.c, i, inst.x);
                    Rat ey = expected_utility(inst.c, i, inst.y);
                    if (ex < ey) throw PreconditionViolated("x does not weakly dominate y");
                    if (ex > ey) strict_seen = true;
                }
                if (strict_seen != inst.strict)
                    throw PreconditionViolated("strictness flag does not match the instance");
                auto f = frontier_summary(inst.c);
                ExtendedRat ix = eval_variant(id, inst.c, f, inst.x);
                ExtendedRat iy = eval_variant(id, inst.c, f, inst.y);
                bool ok;
                if (!inst.strict) {
                    ok = ix <= iy;
                } else if (ix < iy) {
                    ok = true;
                } else if (ix.is_pos_inf() && iy.is_pos_inf()) {
                    // clause (ii): a finite-inefficiency lottery weakly above x
                    auto w = dominating_lottery(inst.c, inst.x);
                    ok = w.has_value() && !eval_variant(id, inst.c, f, *w).is_pos_inf();
                } else {
                    ok = false;
                }
                if (!ok)
                    return detail::fail_report(axiom, k,
                                               "I(x)=" + ix.str() + " I(y)=" + iy.str() +
                                                   (inst.strict ? " (strict)" : " (weak)"));
            }
            break;
        }

        case Axiom::Anonymity: {
            for (std::size_t k = 0; k < battery.anonymity.size(); ++k) {
                const auto& inst = battery.anonymity[k];
                ExtendedRat a = eval_variant(id, inst.c, inst.x);
                ExtendedRat b = eval_variant(id, permute_individuals(inst.c, inst.perm), inst.x);
                if (a != b)
                    return detail::fail_report(axiom, k, "I=" + a.str() + " permuted=" + b.str());
            }
            break;
        }

        case Axiom::ExpectedInefficiency: {
            for (std::size_t k = 0; k < battery.linearity.size(); ++k) {
                const auto& inst = battery.linearity[k];
                auto f = frontier_summary(inst.c);
                ExtendedRat lhs = eval_variant(
                    id, inst.c, f, Lottery<Rat>::mix(inst.alpha, inst.x, inst.y));
                ExtendedRat rhs = inst.alpha * eval_variant(id, inst.c, f, inst.x) +
                                  (Rat(1) - inst.alpha) * eval_variant(id, inst.c, f, inst.y);
                if (lhs != rhs)
                    return detail::fail_report(
                        axiom, k, "I(mix)=" + lhs.str() + " expected=" + rhs.str());
            }
            break;
        }

        case Axiom::Iia: {
            for (std::size_t k = 0; k < battery.iia.size(); ++k) {
                const auto& inst = battery.iia[k];
                Context<Rat> small = restrict(inst.big, inst.keep);
                if (ideal_point_profile(small) != ideal_point_profile(inst.big))
                    throw PreconditionViolated("restriction changes the ideal point");
                if (minimal_expectations_profile(small) != minimal_expectations_profile(inst.big))
                    throw PreconditionViolated("restriction changes the point of minimal expectations");
                auto fs = frontier_summary(small);
                auto fb = frontier_summary(inst.big);
                auto lhs = detail::difference(eval_variant(id, small, fs, inst.x),
                                              eval_variant(id, small, fs, inst.y));
                auto bx = lift_lottery(inst.x, inst.keep, inst.big.n_alternatives());
                auto by = lift_lottery(inst.y, inst.keep, inst.big.n_alternatives());
                auto rhs = detail::difference(eval_variant(id, inst.big, fb, bx),
                                              eval_variant(id, inst.big, fb, by));
                if (lhs && rhs && *lhs != *rhs)
                    return detail::fail_report(
                        axiom, k, "restricted diff=" + lhs->str() + " full diff=" + rhs->str());
            }
            break;
        }

        case Axiom::Iip: {
            for (std::size_t k = 0; k < battery.iip.size(); ++k) {
                const auto& inst = battery.iip[k];
                if (inst.d.n_alternatives() != inst.dprime.n_alternatives() ||
                    inst.d.n_individuals() != inst.dprime.n_individuals())
                    throw PreconditionViolated("D and D' must share shape");
                auto evaluate = [&](const Context<Rat>& d) {
                    Context<Rat> cd = compose(inst.c, d);
                    auto f = frontier_summary(cd);
                    return detail::difference(
                        eval_variant(id, cd, f, product_lottery<Rat>({inst.x, inst.y})),
                        eval_variant(id, cd, f, product_lottery<Rat>({inst.xprime, inst.y})));
                };
                auto lhs = evaluate(inst.d);
                auto rhs = evaluate(inst.dprime);
                if (lhs && rhs && *lhs != *rhs)
                    return detail::fail_report(axiom, k,
                                               "diff with D=" + lhs->str() +
                                                   " diff with D'=" + rhs->str());
            }
            break;
        }

        case Axiom::PopulationSizeStability: {
            for (std::size_t k = 0; k < battery.pop_stability.size(); ++k) {
                const auto& inst = battery.pop_stability[k];
                Context<Rat> ck = self_compose(inst.c, inst.k);
                auto f = frontier_summary(ck);
                auto diag = [&](const Lottery<Rat>& x) {
                    return product_lottery<Rat>(std::vector<Lottery<Rat>>(inst.k, x));
                };
                auto lhs = detail::difference(eval_variant(id, ck, f, diag(inst.x)),
                                              eval_variant(id, ck, f, diag(inst.xprime)));
                auto fc = frontier_summary(inst.c);
                auto rhs = detail::difference(eval_variant(id, inst.c, fc, inst.x),
                                              eval_variant(id, inst.c, fc, inst.xprime));
                if (lhs && rhs && *lhs != *rhs)
                    return detail::fail_report(axiom, k,
                                               "composed diff=" + lhs->str() +
                                                   " base diff=" + rhs->str());
            }
            break;
        }

        case Axiom::Feasibility: {
            for (std::size_t k = 0; k < battery.feasibility.size(); ++k) {
                const auto& inst = battery.feasibility[k];
                auto f = frontier_summary(inst.c);
                std::optional<ExtendedRat> best;
                for (std::size_t a = 0; a < inst.c.n_alternatives(); ++a) {
                    ExtendedRat v = eval_variant(id, inst.c, f, inst.c.point(a));
                    if (!best || v < *best) best = v;
                }
                if (!best || *best != ExtendedRat(Rat(0)))
                    return detail::fail_report(axiom, k, "min over pure = " + best->str());
            }
            break;
        }
    }
    return report;
}

inline std::vector<IndependenceCell> independence_matrix(const AxiomBattery& battery) {
    std::vector<IndependenceCell> cells;
    for (VariantId v : kAllVariants)
        for (Axiom a : kAllAxioms)
            cells.push_back({v, a, check_axiom(v, a, battery).pass});
    return cells;
}

inline AxiomBattery default_battery(std::uint64_t seed) {
    AxiomBattery b;
    std::mt19937_64 rng(seed);

    const Context<Rat> arrow = make_context<Rat>(
        {"x", "y", "z"},
        {{Rat(1), Rat(9) / 10, Rat(0)}, {Rat(1), Rat(9) / 10, Rat(0)}, {Rat(1) / 2, Rat(1), Rat(0)}});
    const Context<Rat> chat2 = make_chat(2, {1, 2});
    const Context<Rat> chat3 = make_chat(3, {1, 2, 3});
    const Context<Rat> chat3_partial = make_chat(3, {1, 3});
    // Two concerned individuals plus one who is indifferent across the
    // frontier but strictly hurt by alternative c (so c has infinite
    // inefficiency while the frontier dimension stays 2).
    const Context<Rat> semi = make_context<Rat>(
        {"a", "b", "c"}, {{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}, {Rat(1), Rat(1), Rat(0)}});

    // Deterministic random pool, filtered to frontier dimension >= 2 so every
    // variant (including the per-dimension one) is well defined on it.
    std::vector<Context<Rat>> pool = {arrow, chat2, chat3, chat3_partial, semi};
    std::uint64_t sub = seed;
    while (pool.size() < 9) {
        std::size_t n = 2 + static_cast<std::size_t>(rng() % 2);
        std::size_t m = 2 + static_cast<std::size_t>(rng() % 3);
        Context<Rat> c = random_context(n, m, ++sub);
        if (frontier_summary(c).dimension >= 2) pool.push_back(c);
    }

    auto point = [](const Context<Rat>& c, std::size_t a) { return c.point(a); };

    // -- Pareto monotonicity ------------------------------------------------
    const Lottery<Rat> chat2_mix(3, {{1, Rat(1) / 2}, {2, Rat(1) / 2}});
    b.monotonicity.push_back({chat2, chat2_mix, point(chat2, 0), true});  // the ZERO breaker
    b.monotonicity.push_back({arrow, point(arrow, 0), point(arrow, 2), true});
    b.monotonicity.push_back({arrow, point(arrow, 1), point(arrow, 1), false});
    // infinite-on-both-sides pair exercising clause (ii)
    b.monotonicity.push_back(
        {semi, Lottery<Rat>(3, {{0, Rat(1) / 2}, {2, Rat(1) / 2}}), point(semi, 2), true});
    for (const auto& c : pool) {
        // weakly dominated pure points paired with a dominating lottery
        auto f = frontier_summary(c);
        for (std::size_t a = 0; a < c.n_alternatives(); ++a) {
            auto w = dominating_lottery(c, c.point(a));
            if (!w) continue;
            bool strict = false;
            for (std::size_t i = 0; i < c.n_individuals(); ++i)
                if (expected_utility(c, i, *w) > c.utility(i, a)) strict = true;
            b.monotonicity.push_back({c, *w, c.point(a), strict});
            break;
        }
    }

    // -- Anonymity ----------------------------------------------------------
    b.anonymity.push_back({chat2, {1, 0}, point(chat2, 1)});  // the WEIGHTED breaker
    b.anonymity.push_back({arrow, {2, 0, 1}, point(arrow, 1)});
    b.anonymity.push_back({chat3, {1, 2, 0}, random_lottery(4, seed + 11)});
    b.anonymity.push_back({semi, {2, 1, 0}, point(semi, 2)});
    for (std::size_t k = 5; k < 8; ++k) {
        const auto& c = pool[k];
        std::vector<std::size_t> perm(c.n_individuals());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        b.anonymity.push_back({c, perm, random_lottery(c.n_alternatives(), seed + 13 + k)});
    }

    // -- Expected inefficiency ----------------------------------------------
    b.linearity.push_back({chat2, point(chat2, 1), point(chat2, 2), Rat(1) / 2});  // SQUARED breaker
    b.linearity.push_back({arrow, point(arrow, 0), point(arrow, 1), Rat(1) / 4});
    b.linearity.push_back({arrow, point(arrow, 0), point(arrow, 2), Rat(9) / 10});
    b.linearity.push_back({semi, point(semi, 0), point(semi, 2), Rat(1) / 3});  // infinite side
    b.linearity.push_back({chat3, random_lottery(4, seed + 21), random_lottery(4, seed + 22),
                           Rat(2) / 7});
    b.linearity.push_back({pool[5], point(pool[5], 0),
                           random_lottery(pool[5].n_alternatives(), seed + 23), Rat(0)});
    b.linearity.push_back({pool[6], random_lottery(pool[6].n_alternatives(), seed + 24),
                           point(pool[6], 0), Rat(1)});

    // -- IIA ----------------------------------------------------------------
    // the RADICAL breaker: |X| drops from 3 (rad 3) to 2 (rad 2)
    b.iia.push_back({arrow, {0, 1}, Lottery<Rat>::point(2, 0), Lottery<Rat>::point(2, 1)});
    {
        // append a column that is a convex combination of existing columns:
        // the utility polytope, and hence both reference points, is unchanged
        auto padded = [&](const Context<Rat>& c, const Rat& theta) {
            std::vector<std::string> names = c.alternative_names();
            names.push_back("pad");
            std::vector<std::vector<Rat>> u;
            for (std::size_t i = 0; i < c.n_individuals(); ++i) {
                u.push_back(c.row(i));
                u[i].push_back(theta * c.utility(i, 0) + (Rat(1) - theta) * c.utility(i, 1));
            }
            return Context<Rat>(names, u);
        };
        for (std::size_t k : {std::size_t{1}, std::size_t{5}, std::size_t{6}}) {
            const auto& base = pool[k];
            std::vector<std::size_t> keep(base.n_alternatives());
            for (std::size_t a = 0; a < keep.size(); ++a) keep[a] = a;
            b.iia.push_back({padded(base, Rat(1) / 3), keep,
                             random_lottery(base.n_alternatives(), seed + 31 + k),
                             Lottery<Rat>::point(base.n_alternatives(), 0)});
        }
    }

    // -- IIP ----------------------------------------------------------------
    const Context<Rat> flat2 = make_context<Rat>({"p", "q"}, {{Rat(0), Rat(0)}, {Rat(0), Rat(0)}});
    const Context<Rat> ident2 =
        make_context<Rat>({"p", "q"}, {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
    // the DIMENSION breaker: composing with a dimension-0 versus dimension-2 factor
    b.iip.push_back({chat2, flat2, ident2, point(chat2, 1), point(chat2, 0),
                     Lottery<Rat>::point(2, 0)});
    b.iip.push_back({arrow, ident2, make_context<Rat>({"p", "q"}, {{Rat(3), Rat(1)}, {Rat(0), Rat(2)}}),
                     point(arrow, 1), point(arrow, 2), Lottery<Rat>(2, {{0, Rat(1) / 3}, {1, Rat(2) / 3}})});
    b.iip.push_back({pool[5], ident2, flat2, random_lottery(pool[5].n_alternatives(), seed + 41),
                     random_lottery(pool[5].n_alternatives(), seed + 42), Lottery<Rat>::point(2, 1)});

    // -- Population-size stability -------------------------------------------
    b.pop_stability.push_back({chat2, 2, point(chat2, 1), point(chat2, 0)});  // EXPONENTIAL breaker
    b.pop_stability.push_back({arrow, 3, point(arrow, 1), point(arrow, 0)});
    b.pop_stability.push_back({chat2, 1, chat2_mix, point(chat2, 2)});
    b.pop_stability.push_back({semi, 2, point(semi, 0), point(semi, 2)});
    b.pop_stability.push_back(
        {pool[6], 2, random_lottery(pool[6].n_alternatives(), seed + 51), point(pool[6], 0)});

    // -- Feasibility ---------------------------------------------------------
    for (const auto& c : pool) b.feasibility.push_back({c});

    return b;
}

}  // namespace socineff
