#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "socineff/context.hpp"
#include "socineff/errors.hpp"
#include "socineff/lp.hpp"
#include "socineff/scalar.hpp"

namespace socineff {

namespace detail {

template <class T>
T efficiency_slack(const Context<T>& c) {
    if constexpr (NumericTraits<T>::is_exact) {
        return T(0);
    } else {
        T scale = 0.0;
        for (std::size_t i = 0; i < c.n_individuals(); ++i)
            for (std::size_t a = 0; a < c.n_alternatives(); ++a)
                scale = std::max(scale, std::fabs(c.utility(i, a)));
        return 1e-9 * (1.0 + scale);
    }
}

/// LP over lotteries y: maximize total slack sum_i (EU_i(y) - EU_i(x))
/// subject to y weakly dominating x. Optimum 0 iff x is efficient; otherwise
/// the optimizer is itself an efficient lottery strictly dominating x.
template <class T>
LpResult<T> dominance_lp(const Context<T>& c, const Lottery<T>& x) {
    const std::size_t n = c.n_individuals();
    const std::size_t m = c.n_alternatives();
    if (x.domain() != m) throw DimensionMismatch("lottery domain does not match context");
    // Variables: lambda_a (m), d_i (n). Constraints:
    //   sum_a lambda_a u_i(a) - d_i = EU_i(x)   for each i
    //   sum_a lambda_a = 1
    std::vector<std::vector<T>> A(n + 1, std::vector<T>(m + n, NumericTraits<T>::zero()));
    std::vector<T> b(n + 1, NumericTraits<T>::zero());
    std::vector<T> obj(m + n, NumericTraits<T>::zero());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t a = 0; a < m; ++a) A[i][a] = c.utility(i, a);
        A[i][m + i] = T(-1);
        b[i] = expected_utility(c, i, x);
        obj[m + i] = T(1);
    }
    for (std::size_t a = 0; a < m; ++a) A[n][a] = T(1);
    b[n] = T(1);
    LpResult<T> r = lp_maximize(A, b, obj);
    if (r.status != LpStatus::Optimal)
        throw NumericalBreakdown("dominance LP failed to reach an optimum");
    return r;
}

}  // namespace detail

template <class T>
bool is_efficient(const Context<T>& c, const Lottery<T>& x) {
    return detail::dominance_lp(c, x).value <= detail::efficiency_slack(c);
}

/// If x is dominated, returns an efficient lottery strictly dominating it.
template <class T>
std::optional<Lottery<T>> dominating_lottery(const Context<T>& c, const Lottery<T>& x) {
    LpResult<T> r = detail::dominance_lp(c, x);
    if (r.value <= detail::efficiency_slack(c)) return std::nullopt;
    std::vector<std::pair<std::size_t, T>> atoms;
    for (std::size_t a = 0; a < c.n_alternatives(); ++a)
        if (!NumericTraits<T>::is_zero(r.solution[a])) atoms.emplace_back(a, r.solution[a]);
    return Lottery<T>(c.n_alternatives(), std::move(atoms));
}

/// Independent efficiency check by vertex enumeration instead of simplex.
/// Guardrail: at most 8 alternatives and 5 individuals.
template <class T>
bool brute_force_is_efficient(const Context<T>& c, const Lottery<T>& x) {
    const std::size_t m = c.n_alternatives();
    const std::size_t n = c.n_individuals();
    if (m > 8 || n > 5)
        throw GuardrailExceeded("brute-force efficiency check limited to 8 alternatives, 5 individuals");
    if (x.domain() != m) throw DimensionMismatch("lottery domain does not match context");
    const std::vector<T> target = utility_profile(c, x);
    const T slack = detail::efficiency_slack(c);

    // Any dominating lottery can be pushed to a vertex of the dominating
    // polytope: a support S with |S| - 1 extra tight equality rows among the
    // individuals' constraints. Enumerate those square systems and test the
    // resulting candidate points.
    for (std::size_t support = 1; support < (std::size_t{1} << m); ++support) {
        std::vector<std::size_t> cols;
        for (std::size_t a = 0; a < m; ++a)
            if (support >> a & 1) cols.push_back(a);
        const std::size_t s = cols.size();
        if (s > n + 1) continue;
        for (std::size_t tight = 0; tight < (std::size_t{1} << n); ++tight) {
            std::vector<std::size_t> rows;
            for (std::size_t i = 0; i < n; ++i)
                if (tight >> i & 1) rows.push_back(i);
            if (rows.size() != s - 1) continue;
            // Square system: sum lambda = 1 and EU_i(lambda) = EU_i(x) on rows.
            std::vector<std::vector<T>> M(s, std::vector<T>(s + 1, NumericTraits<T>::zero()));
            for (std::size_t k = 0; k < s; ++k) M[0][k] = T(1);
            M[0][s] = T(1);
            for (std::size_t r = 0; r + 1 < s; ++r) {
                for (std::size_t k = 0; k < s; ++k) M[r + 1][k] = c.utility(rows[r], cols[k]);
                M[r + 1][s] = target[rows[r]];
            }
            // Gaussian elimination; skip singular systems.
            bool singular = false;
            for (std::size_t col = 0; col < s && !singular; ++col) {
                std::size_t piv = col;
                if constexpr (NumericTraits<T>::is_exact) {
                    while (piv < s && M[piv][col] == NumericTraits<T>::zero()) ++piv;
                } else {
                    for (std::size_t r = col + 1; r < s; ++r)
                        if (std::fabs(convert_to_double(M[r][col])) >
                            std::fabs(convert_to_double(M[piv][col])))
                            piv = r;
                }
                if (piv >= s || NumericTraits<T>::is_zero(M[piv][col])) {
                    singular = true;
                    break;
                }
                std::swap(M[col], M[piv]);
                for (std::size_t r = 0; r < s; ++r) {
                    if (r == col || NumericTraits<T>::is_zero(M[r][col])) continue;
                    const T f = M[r][col] / M[col][col];
                    for (std::size_t k = col; k <= s; ++k) M[r][k] -= f * M[col][k];
                }
            }
            if (singular) continue;
            std::vector<std::pair<std::size_t, T>> atoms;
            bool valid = true;
            T total = NumericTraits<T>::zero();
            for (std::size_t k = 0; k < s && valid; ++k) {
                T v = M[k][s] / M[k][k];
                if (v < -NumericTraits<T>::lottery_sum_slack()) valid = false;
                if (v < NumericTraits<T>::zero()) v = NumericTraits<T>::zero();
                total += v;
                atoms.emplace_back(cols[k], v);
            }
            if (!valid || NumericTraits<T>::is_zero(total)) continue;
            for (auto& [a, w] : atoms) w /= total;
            // Weak dominance with some strict coordinate?
            bool weak = true, strict = false;
            for (std::size_t i = 0; i < n && weak; ++i) {
                T eu = NumericTraits<T>::zero();
                for (const auto& [a, w] : atoms) eu += w * c.utility(i, a);
                if (eu < target[i] - slack) weak = false;
                if (eu > target[i] + slack) strict = true;
            }
            if (weak && strict) return false;
        }
    }
    return true;
}

/// Per-individual utility range over the Pareto frontier, plus the efficient
/// pure alternatives. The frontier maximum for i is her best alternative
/// overall; the frontier minimum is attained at an efficient pure alternative.
template <class T>
struct FrontierSummary {
    std::vector<std::size_t> efficient_pure;
    std::vector<T> u_max;
    std::vector<T> u_min;
    std::size_t dimension = 0;  // number of individuals not indifferent across the frontier

    bool is_concerned(std::size_t i) const {
        return !NumericTraits<T>::nearly_equal(u_max[i], u_min[i]);
    }
};

template <class T>
FrontierSummary<T> frontier_summary(const Context<T>& c) {
    FrontierSummary<T> s;
    for (std::size_t a = 0; a < c.n_alternatives(); ++a)
        if (is_efficient(c, c.point(a))) s.efficient_pure.push_back(a);
    if (s.efficient_pure.empty())
        throw NumericalBreakdown("no efficient pure alternative found");  // impossible for valid input
    for (std::size_t i = 0; i < c.n_individuals(); ++i) {
        T hi = c.utility(i, 0);
        for (std::size_t a = 1; a < c.n_alternatives(); ++a)
            if (c.utility(i, a) > hi) hi = c.utility(i, a);
        T lo = c.utility(i, s.efficient_pure[0]);
        for (std::size_t a : s.efficient_pure)
            if (c.utility(i, a) < lo) lo = c.utility(i, a);
        s.u_max.push_back(hi);
        s.u_min.push_back(lo);
    }
    for (std::size_t i = 0; i < c.n_individuals(); ++i)
        if (s.is_concerned(i)) ++s.dimension;
    return s;
}

/// Per-individual maximum utility over all pure alternatives.
template <class T>
std::vector<T> ideal_point_profile(const Context<T>& c) {
    std::vector<T> out;
    out.reserve(c.n_individuals());
    for (std::size_t i = 0; i < c.n_individuals(); ++i) {
        T hi = c.utility(i, 0);
        for (std::size_t a = 1; a < c.n_alternatives(); ++a)
            if (c.utility(i, a) > hi) hi = c.utility(i, a);
        out.push_back(hi);
    }
    return out;
}

/// Per-individual minimum utility over the Pareto frontier.
template <class T>
std::vector<T> minimal_expectations_profile(const Context<T>& c) {
    return frontier_summary(c).u_min;
}

}  // namespace socineff
