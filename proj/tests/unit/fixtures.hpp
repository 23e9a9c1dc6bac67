#pragma once

#include <string>
#include <vector>

#include "socineff/context.hpp"
#include "socineff/scalar.hpp"

namespace socineff::test {

/// Three alternatives, three individuals; x is everyone's compromise, z is bad
/// for everyone, and removing z should change nothing.
template <class T>
Context<T> arrow_context() {
    auto q = [](long num, long den) { return T(num) / T(den); };
    return make_context<T>({"x", "y", "z"},
                           {{T(1), q(9, 10), T(0)},
                            {T(1), q(9, 10), T(0)},
                            {q(1, 2), T(1), T(0)}});
}

/// Two matchings under opposed rankings: the first is the unique efficient one
/// and both individuals are indifferent across the frontier.
template <class T>
Context<T> opposed_2x2_context() {
    return make_context<T>({"M1", "M2"}, {{T(1), T(0)}, {T(1), T(0)}});
}

}  // namespace socineff::test
