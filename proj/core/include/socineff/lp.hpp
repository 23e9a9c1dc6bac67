#pragma once

#include <cstddef>
#include <vector>

#include "socineff/errors.hpp"
#include "socineff/scalar.hpp"

namespace socineff {

enum class LpStatus { Optimal, Infeasible, Unbounded };

template <class T>
struct LpResult {
    LpStatus status;
    T value;                  // objective at optimum (valid iff Optimal)
    std::vector<T> solution;  // primal point (valid iff Optimal)
};

namespace detail {

template <class T>
bool lp_positive(const T& v) {
    return v > NumericTraits<T>::zero() && !NumericTraits<T>::is_zero(v);
}

/// Dense tableau simplex with Bland's rule (exact with Rat; pivot tolerance
/// 1e-9 with double). rows_[i] has width() + 1 entries, the last being the RHS.
template <class T>
class Tableau {
  public:
    Tableau(std::size_t width, std::vector<std::vector<T>> rows, std::vector<std::size_t> basis)
        : width_(width), rows_(std::move(rows)), basis_(std::move(basis)) {}

    std::size_t height() const { return rows_.size(); }
    std::size_t width() const { return width_; }
    const std::vector<std::size_t>& basis() const { return basis_; }
    const T& rhs(std::size_t i) const { return rows_[i].back(); }
    const T& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }

    /// Maximizes objective `cost` (indexed by column, cost.size() == width())
    /// from the current basic feasible point. Only columns < limit may enter.
    /// Returns false iff unbounded. On return `obj` holds the final reduced
    /// cost row with the negated objective value in its last slot.
    bool maximize(const std::vector<T>& cost, std::size_t limit, std::vector<T>& obj) {
        obj.assign(width() + 1, NumericTraits<T>::zero());
        for (std::size_t j = 0; j < width(); ++j) obj[j] = cost[j];
        for (std::size_t i = 0; i < height(); ++i)
            if (!NumericTraits<T>::is_zero(cost[basis_[i]]))
                axpy(obj, -cost[basis_[i]], rows_[i]);
        while (true) {
            std::size_t enter = limit;
            for (std::size_t j = 0; j < limit; ++j)
                if (lp_positive(obj[j])) {
                    enter = j;
                    break;
                }
            if (enter == limit) return true;
            std::size_t leave = height();
            for (std::size_t i = 0; i < height(); ++i) {
                if (!lp_positive(rows_[i][enter])) continue;
                if (leave == height()) {
                    leave = i;
                    continue;
                }
                const T lhs = rhs(i) * rows_[leave][enter];
                const T rhs_ = rhs(leave) * rows_[i][enter];
                if (lhs < rhs_ || (!NumericTraits<T>::is_zero(lhs - rhs_) ? false
                                                                          : basis_[i] < basis_[leave]))
                    leave = i;
            }
            if (leave == height()) return false;
            pivot(leave, enter);
            axpy(obj, -obj[enter], rows_[leave]);
        }
    }

    /// Makes column j basic in row r.
    void pivot(std::size_t r, std::size_t j) {
        const T p = rows_[r][j];
        if (NumericTraits<T>::is_zero(p)) throw NumericalBreakdown("pivot on (near-)zero entry");
        for (auto& v : rows_[r]) v /= p;
        rows_[r][j] = T(1);
        for (std::size_t i = 0; i < height(); ++i) {
            if (i == r || NumericTraits<T>::is_zero(rows_[i][j])) continue;
            axpy(rows_[i], -rows_[i][j], rows_[r]);
            rows_[i][j] = NumericTraits<T>::zero();
        }
        basis_[r] = j;
    }

    /// Removes row r (used for redundant constraints after phase one).
    void drop_row(std::size_t r) {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    }

  private:
    static void axpy(std::vector<T>& y, const T& a, const std::vector<T>& x) {
        for (std::size_t k = 0; k < y.size(); ++k) y[k] += a * x[k];
    }

    std::size_t width_;
    std::vector<std::vector<T>> rows_;
    std::vector<std::size_t> basis_;
};

}  // namespace detail

/// Solves  max c.x  subject to  A x = b,  x >= 0  by two-phase simplex.
/// A is m x n (dense), b any sign. Exact with T = Rat.
template <class T>
LpResult<T> lp_maximize(const std::vector<std::vector<T>>& A, const std::vector<T>& b,
                        const std::vector<T>& c) {
    const std::size_t m = A.size();
    const std::size_t n = c.size();
    if (b.size() != m) throw DimensionMismatch("lp_maximize: |b| != rows of A");
    for (const auto& row : A)
        if (row.size() != n) throw DimensionMismatch("lp_maximize: row of A has wrong length");

    // Phase-one tableau: columns [x (n) | artificials (m) | rhs], rhs >= 0.
    std::vector<std::vector<T>> rows(m);
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        rows[i].assign(n + m + 1, NumericTraits<T>::zero());
        const bool flip = b[i] < NumericTraits<T>::zero();
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = flip ? -A[i][j] : A[i][j];
        rows[i][n + i] = T(1);
        rows[i][n + m] = flip ? -b[i] : b[i];
        basis[i] = n + i;
    }
    detail::Tableau<T> tab(n + m, std::move(rows), std::move(basis));

    std::vector<T> phase1(n + m, NumericTraits<T>::zero());
    for (std::size_t j = n; j < n + m; ++j) phase1[j] = T(-1);
    std::vector<T> obj;
    tab.maximize(phase1, n + m, obj);  // bounded by construction
    if (detail::lp_positive(obj.back()))  // -value > 0  =>  sum of artificials > 0
        return {LpStatus::Infeasible, NumericTraits<T>::zero(), {}};

    // Drive remaining artificials out of the basis; drop redundant rows.
    for (std::size_t i = tab.height(); i-- > 0;) {
        if (tab.basis()[i] < n) continue;
        std::size_t j = 0;
        while (j < n && NumericTraits<T>::is_zero(tab.at(i, j))) ++j;
        if (j < n)
            tab.pivot(i, j);
        else
            tab.drop_row(i);
    }

    std::vector<T> phase2(n + m, NumericTraits<T>::zero());
    for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
    if (!tab.maximize(phase2, n, obj))
        return {LpStatus::Unbounded, NumericTraits<T>::zero(), {}};

    std::vector<T> x(n, NumericTraits<T>::zero());
    for (std::size_t i = 0; i < tab.height(); ++i)
        if (tab.basis()[i] < n) x[tab.basis()[i]] = tab.rhs(i);
    return {LpStatus::Optimal, -obj.back(), std::move(x)};
}

}  // namespace socineff
