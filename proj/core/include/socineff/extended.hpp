#pragma once

#include <compare>
#include <stdexcept>
#include <string>

#include "socineff/scalar.hpp"

namespace socineff {

/// Scalar extended with +inf/-inf under the conventions used by the
/// normalized welfare calculus:
///   negative/0 = -inf,  0/0 = 0,  inf * 0 = 0,  inf * a = inf for a > 0,
///   finite + (-inf) = -inf.
/// Adding +inf and -inf is a program error (std::logic_error), never a value.
template <class T>
class Extended {
  public:
    Extended() : value_(NumericTraits<T>::zero()) {}
    Extended(T v) : value_(std::move(v)) {}  // NOLINT: implicit by design

    static Extended pos_inf() {
        Extended e;
        e.kind_ = Kind::PosInf;
        return e;
    }
    static Extended neg_inf() {
        Extended e;
        e.kind_ = Kind::NegInf;
        return e;
    }

    /// num/den with the divide-by-zero conventions above.
    static Extended ratio(const T& num, const T& den) {
        if (!NumericTraits<T>::is_zero(den)) return Extended(num / den);
        if (NumericTraits<T>::is_zero(num)) return Extended(NumericTraits<T>::zero());
        return num < NumericTraits<T>::zero() ? neg_inf() : pos_inf();
    }

    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }

    /// Finite value; throws if infinite.
    const T& finite() const {
        if (!is_finite()) throw std::logic_error("Extended: value is infinite");
        return value_;
    }

    friend Extended operator+(const Extended& a, const Extended& b) {
        if (a.is_finite() && b.is_finite()) return Extended(a.value_ + b.value_);
        if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf()))
            throw std::logic_error("Extended: inf + (-inf)");
        return a.is_finite() ? b : a;
    }

    friend Extended operator-(const Extended& a, const Extended& b) { return a + (-b); }

    Extended operator-() const {
        switch (kind_) {
            case Kind::PosInf: return neg_inf();
            case Kind::NegInf: return pos_inf();
            default: return Extended(-value_);
        }
    }

    /// Scale by a finite factor; inf * 0 = 0.
    friend Extended operator*(const T& a, const Extended& b) {
        if (b.is_finite()) return Extended(a * b.value_);
        if (NumericTraits<T>::is_zero(a)) return Extended(NumericTraits<T>::zero());
        const bool flip = a < NumericTraits<T>::zero();
        return (b.is_pos_inf() != flip) ? pos_inf() : neg_inf();
    }

    friend bool operator==(const Extended& a, const Extended& b) {
        if (a.kind_ != b.kind_) return false;
        return !a.is_finite() || NumericTraits<T>::nearly_equal(a.value_, b.value_);
    }
    friend bool operator!=(const Extended& a, const Extended& b) { return !(a == b); }
    friend bool operator<(const Extended& a, const Extended& b) {
        if (a.kind_ == b.kind_) return a.is_finite() && a.value_ < b.value_;
        if (a.is_neg_inf() || b.is_pos_inf()) return true;
        return false;
    }
    friend bool operator<=(const Extended& a, const Extended& b) { return a < b || a == b; }
    friend bool operator>(const Extended& a, const Extended& b) { return b < a; }
    friend bool operator>=(const Extended& a, const Extended& b) { return b <= a; }

    std::string str() const {
        if (is_pos_inf()) return "inf";
        if (is_neg_inf()) return "-inf";
        return format_scalar(value_);
    }

  private:
    enum class Kind { Finite, PosInf, NegInf };
    Kind kind_ = Kind::Finite;
    T value_;
};

using ExtendedRat = Extended<Rat>;

}  // namespace socineff
