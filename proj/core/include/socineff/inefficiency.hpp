#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "socineff/context.hpp"
#include "socineff/extended.hpp"
#include "socineff/frontier.hpp"
#include "socineff/scalar.hpp"

namespace socineff {

/// One individual's utility rescaled to her frontier range:
///   (EU_i(x) - u_min_i) / (u_max_i - u_min_i)
/// under the extended conventions (0/0 = 0, negative/0 = -inf). A +inf result
/// cannot occur because u_max is the individual's global maximum.
template <class T>
Extended<T> normalized_utility(const Context<T>& c, const FrontierSummary<T>& f, std::size_t i,
                               const Lottery<T>& x) {
    return Extended<T>::ratio(expected_utility(c, i, x) - f.u_min[i], f.u_max[i] - f.u_min[i]);
}

/// V(C,x): the average of the normalized utilities; -inf if any term is -inf.
template <class T>
Extended<T> social_value(const Context<T>& c, const FrontierSummary<T>& f, const Lottery<T>& x) {
    const std::size_t n = c.n_individuals();
    Extended<T> total(NumericTraits<T>::zero());
    for (std::size_t i = 0; i < n; ++i) total = total + normalized_utility(c, f, i, x);
    return (T(1) / T(static_cast<long>(n))) * total;
}

template <class T>
Extended<T> social_value(const Context<T>& c, const Lottery<T>& x) {
    return social_value(c, frontier_summary(c), x);
}

template <class T>
struct InefficiencyResult {
    Extended<T> value;        // v_max - v_of_x; >= 0, possibly +inf
    Extended<T> v_of_x;       // V(C, x)
    T v_max;                  // max over pure alternatives of V; always finite
    std::size_t argmax_pure;  // alternative attaining v_max
    std::optional<std::size_t> infinite_witness;  // frontier-indifferent individual below her level
};

/// Maximum social value over pure alternatives (which is also the maximum over
/// all lotteries, since V is affine where finite and -inf elsewhere).
template <class T>
std::pair<T, std::size_t> max_social_value(const Context<T>& c, const FrontierSummary<T>& f) {
    std::optional<T> best;
    std::size_t arg = 0;
    for (std::size_t a = 0; a < c.n_alternatives(); ++a) {
        Extended<T> v = social_value(c, f, c.point(a));
        if (!v.is_finite()) continue;
        if (!best || v.finite() > *best) {
            best = v.finite();
            arg = a;
        }
    }
    if (!best) throw NumericalBreakdown("no alternative has finite social value");  // impossible
    return {*best, arg};
}

template <class T>
InefficiencyResult<T> ihat(const Context<T>& c, const FrontierSummary<T>& f, const Lottery<T>& x) {
    InefficiencyResult<T> r;
    r.v_of_x = social_value(c, f, x);
    auto [vmax, arg] = max_social_value(c, f);
    r.v_max = vmax;
    r.argmax_pure = arg;
    r.value = Extended<T>(r.v_max) - r.v_of_x;
    if (r.v_of_x.is_neg_inf())
        for (std::size_t i = 0; i < c.n_individuals(); ++i) {
            if (f.is_concerned(i)) continue;
            if (normalized_utility(c, f, i, x).is_neg_inf()) {
                r.infinite_witness = i;
                break;
            }
        }
    return r;
}

template <class T>
InefficiencyResult<T> ihat(const Context<T>& c, const Lottery<T>& x) {
    return ihat(c, frontier_summary(c), x);
}

/// Direct test of the infinite-inefficiency condition: some individual who is
/// indifferent across the frontier strictly prefers her frontier level to x.
template <class T>
bool is_infinite(const Context<T>& c, const FrontierSummary<T>& f, const Lottery<T>& x) {
    for (std::size_t i = 0; i < c.n_individuals(); ++i) {
        if (f.is_concerned(i)) continue;
        const T eu = expected_utility(c, i, x);
        if (eu < f.u_min[i] && !NumericTraits<T>::nearly_equal(eu, f.u_min[i])) return true;
    }
    return false;
}

template <class T>
bool is_infinite(const Context<T>& c, const Lottery<T>& x) {
    return is_infinite(c, frontier_summary(c), x);
}

}  // namespace socineff
