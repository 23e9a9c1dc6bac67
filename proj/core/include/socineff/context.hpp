#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "socineff/errors.hpp"
#include "socineff/scalar.hpp"

namespace socineff {

inline constexpr std::size_t kDefaultComposeCap = 4096;

/// Finitely supported probability distribution over the alternatives of a
/// context with `domain` alternatives. Weights are kept sorted by index with
/// zero atoms dropped.
template <class T>
class Lottery {
  public:
    Lottery(std::size_t domain, std::vector<std::pair<std::size_t, T>> weights)
        : domain_(domain) {
        std::map<std::size_t, T> merged;
        T sum = NumericTraits<T>::zero();
        for (auto& [index, w] : weights) {
            if (index >= domain_)
                throw IndexOutOfRange("lottery atom index " + std::to_string(index) +
                                      " out of range for domain " + std::to_string(domain_));
            if (w < NumericTraits<T>::zero())
                throw InvalidLottery("negative probability at index " + std::to_string(index));
            sum += w;
            auto [it, inserted] = merged.emplace(index, w);
            if (!inserted) it->second += w;
        }
        const T one = T(1);
        const T slack = NumericTraits<T>::lottery_sum_slack();
        if (sum < one - slack || sum > one + slack)
            throw InvalidLottery("probabilities sum to " + format_scalar(sum) + ", expected 1");
        for (auto& [index, w] : merged)
            if (!NumericTraits<T>::is_zero(w)) weights_.emplace_back(index, w);
    }

    static Lottery point(std::size_t domain, std::size_t index) {
        return Lottery(domain, {{index, T(1)}});
    }

    /// alpha * a + (1 - alpha) * b.
    static Lottery mix(const T& alpha, const Lottery& a, const Lottery& b) {
        if (a.domain() != b.domain()) throw FactorMismatch("mixing lotteries over different domains");
        if (alpha < NumericTraits<T>::zero() || alpha > T(1))
            throw InvalidLottery("mixing weight outside [0,1]");
        std::vector<std::pair<std::size_t, T>> atoms;
        for (const auto& [index, w] : a.weights()) atoms.emplace_back(index, alpha * w);
        for (const auto& [index, w] : b.weights()) atoms.emplace_back(index, (T(1) - alpha) * w);
        return Lottery(a.domain(), std::move(atoms));
    }

    std::size_t domain() const { return domain_; }
    const std::vector<std::pair<std::size_t, T>>& weights() const { return weights_; }

    T probability_of(std::size_t index) const {
        for (const auto& [i, w] : weights_)
            if (i == index) return w;
        return NumericTraits<T>::zero();
    }

    friend bool operator==(const Lottery& a, const Lottery& b) {
        return a.domain_ == b.domain_ && a.weights_ == b.weights_;
    }

  private:
    std::size_t domain_;
    std::vector<std::pair<std::size_t, T>> weights_;
};

/// A finite set of named alternatives together with one vNM utility row per
/// individual. Immutable after construction.
template <class T>
class Context {
  public:
    Context(std::vector<std::string> names, std::vector<std::vector<T>> utilities)
        : names_(std::move(names)), utilities_(std::move(utilities)) {
        if (names_.empty()) throw EmptyAlternatives();
        std::unordered_set<std::string> seen;
        for (const auto& name : names_)
            if (!seen.insert(name).second) throw DuplicateName(name);
        for (const auto& row : utilities_)
            if (row.size() != names_.size()) throw RaggedMatrix();
        for (std::size_t a = 0; a < names_.size(); ++a) name_index_[names_[a]] = a;
    }

    std::size_t n_alternatives() const { return names_.size(); }
    std::size_t n_individuals() const { return utilities_.size(); }
    const std::vector<std::string>& alternative_names() const { return names_; }
    const std::string& name_of(std::size_t a) const { return names_.at(a); }

    std::size_t index_of(const std::string& name) const {
        auto it = name_index_.find(name);
        if (it == name_index_.end()) throw UnknownAlternative(name);
        return it->second;
    }
    bool has_alternative(const std::string& name) const { return name_index_.count(name) > 0; }

    const T& utility(std::size_t individual, std::size_t alternative) const {
        if (individual >= n_individuals())
            throw IndexOutOfRange("individual index " + std::to_string(individual));
        if (alternative >= n_alternatives())
            throw IndexOutOfRange("alternative index " + std::to_string(alternative));
        return utilities_[individual][alternative];
    }
    const std::vector<T>& row(std::size_t individual) const { return utilities_.at(individual); }

    Lottery<T> point(std::size_t alternative) const {
        return Lottery<T>::point(n_alternatives(), alternative);
    }

    friend bool operator==(const Context& a, const Context& b) {
        return a.names_ == b.names_ && a.utilities_ == b.utilities_;
    }

  private:
    std::vector<std::string> names_;
    std::vector<std::vector<T>> utilities_;
    std::unordered_map<std::string, std::size_t> name_index_;
};

template <class T>
Context<T> make_context(std::vector<std::string> names, std::vector<std::vector<T>> utilities) {
    return Context<T>(std::move(names), std::move(utilities));
}

/// Expected utility of individual i under lottery x; exact in exact mode.
template <class T>
T expected_utility(const Context<T>& c, std::size_t i, const Lottery<T>& x) {
    if (i >= c.n_individuals()) throw IndexOutOfRange("individual index " + std::to_string(i));
    if (x.domain() != c.n_alternatives())
        throw IndexOutOfRange("lottery domain does not match context");
    T total = NumericTraits<T>::zero();
    for (const auto& [a, w] : x.weights()) total += w * c.utility(i, a);
    return total;
}

template <class T>
std::vector<T> utility_profile(const Context<T>& c, const Lottery<T>& x) {
    std::vector<T> profile;
    profile.reserve(c.n_individuals());
    for (std::size_t i = 0; i < c.n_individuals(); ++i)
        profile.push_back(expected_utility(c, i, x));
    return profile;
}

/// Side-by-side composition: alternatives are ordered pairs (row-major over
/// (a1, a2)), individuals are concatenated, and each individual's utility
/// depends only on her own factor's coordinate.
template <class T>
Context<T> compose(const Context<T>& c1, const Context<T>& c2,
                   std::size_t cap = kDefaultComposeCap) {
    const std::size_t m1 = c1.n_alternatives();
    const std::size_t m2 = c2.n_alternatives();
    if (m1 > cap / m2) throw SizeLimitExceeded(m1 * m2, cap);

    std::vector<std::string> names;
    names.reserve(m1 * m2);
    for (std::size_t a1 = 0; a1 < m1; ++a1)
        for (std::size_t a2 = 0; a2 < m2; ++a2)
            names.push_back(c1.name_of(a1) + "\xE2\x8A\x97" + c2.name_of(a2));  // U+2297

    std::vector<std::vector<T>> utilities;
    utilities.reserve(c1.n_individuals() + c2.n_individuals());
    for (std::size_t i = 0; i < c1.n_individuals(); ++i) {
        std::vector<T> row;
        row.reserve(m1 * m2);
        for (std::size_t a1 = 0; a1 < m1; ++a1)
            for (std::size_t a2 = 0; a2 < m2; ++a2) row.push_back(c1.utility(i, a1));
        utilities.push_back(std::move(row));
    }
    for (std::size_t j = 0; j < c2.n_individuals(); ++j) {
        std::vector<T> row;
        row.reserve(m1 * m2);
        for (std::size_t a1 = 0; a1 < m1; ++a1)
            for (std::size_t a2 = 0; a2 < m2; ++a2) row.push_back(c2.utility(j, a2));
        utilities.push_back(std::move(row));
    }
    return Context<T>(std::move(names), std::move(utilities));
}

/// Left-associated k-fold self-composition; k = 1 returns c unchanged.
template <class T>
Context<T> self_compose(const Context<T>& c, std::size_t k,
                        std::size_t cap = kDefaultComposeCap) {
    if (k == 0) throw IndexOutOfRange("self_compose requires k >= 1");
    Context<T> result = c;
    for (std::size_t j = 1; j < k; ++j) result = compose(result, c, cap);
    return result;
}

/// Independent product distribution over the product alternative set.
/// `parts` must align, in order, with the factors of the composed context.
template <class T>
Lottery<T> product_lottery(const std::vector<Lottery<T>>& parts) {
    if (parts.empty()) throw FactorMismatch("product of zero lotteries");
    std::vector<std::pair<std::size_t, T>> atoms = {{0, T(1)}};
    std::size_t domain = 1;
    for (const auto& part : parts) {
        std::vector<std::pair<std::size_t, T>> next;
        next.reserve(atoms.size() * part.weights().size());
        for (const auto& [prefix, wp] : atoms)
            for (const auto& [a, wa] : part.weights())
                next.emplace_back(prefix * part.domain() + a, wp * wa);
        atoms = std::move(next);
        domain *= part.domain();
    }
    return Lottery<T>(domain, std::move(atoms));
}

template <class T>
Context<T> permute_individuals(const Context<T>& c, const std::vector<std::size_t>& pi) {
    const std::size_t n = c.n_individuals();
    std::vector<bool> hit(n, false);
    if (pi.size() != n) throw NotAPermutation();
    for (std::size_t v : pi) {
        if (v >= n || hit[v]) throw NotAPermutation();
        hit[v] = true;
    }
    std::vector<std::vector<T>> utilities;
    utilities.reserve(n);
    for (std::size_t i = 0; i < n; ++i) utilities.push_back(c.row(pi[i]));
    return Context<T>(c.alternative_names(), std::move(utilities));
}

/// Keeps the given alternatives (by index), preserving column order.
template <class T>
Context<T> restrict(const Context<T>& c, const std::vector<std::size_t>& keep) {
    if (keep.empty()) throw EmptySubset();
    std::vector<bool> kept(c.n_alternatives(), false);
    for (std::size_t a : keep) {
        if (a >= c.n_alternatives())
            throw UnknownAlternative("index " + std::to_string(a));
        kept[a] = true;
    }
    std::vector<std::string> names;
    std::vector<std::size_t> columns;
    for (std::size_t a = 0; a < c.n_alternatives(); ++a)
        if (kept[a]) {
            names.push_back(c.name_of(a));
            columns.push_back(a);
        }
    std::vector<std::vector<T>> utilities;
    utilities.reserve(c.n_individuals());
    for (std::size_t i = 0; i < c.n_individuals(); ++i) {
        std::vector<T> row;
        row.reserve(columns.size());
        for (std::size_t a : columns) row.push_back(c.utility(i, a));
        utilities.push_back(std::move(row));
    }
    return Context<T>(std::move(names), std::move(utilities));
}

template <class T>
Context<T> restrict_by_name(const Context<T>& c, const std::vector<std::string>& keep) {
    std::vector<std::size_t> indices;
    indices.reserve(keep.size());
    for (const auto& name : keep) indices.push_back(c.index_of(name));
    return restrict(c, indices);
}

/// Applies a total injective renaming to the alternative names; utilities unchanged.
template <class T>
Context<T> rename_alternatives(const Context<T>& c,
                               const std::unordered_map<std::string, std::string>& mapping) {
    std::vector<std::string> names;
    names.reserve(c.n_alternatives());
    std::unordered_set<std::string> images;
    for (const auto& name : c.alternative_names()) {
        auto it = mapping.find(name);
        if (it == mapping.end()) throw MissingName(name);
        if (!images.insert(it->second).second) throw NotInjective(it->second);
        names.push_back(it->second);
    }
    std::vector<std::vector<T>> utilities;
    utilities.reserve(c.n_individuals());
    for (std::size_t i = 0; i < c.n_individuals(); ++i) utilities.push_back(c.row(i));
    return Context<T>(std::move(names), std::move(utilities));
}

/// Embeds a lottery over restrict(c, keep) back into c.
template <class T>
Lottery<T> lift_lottery(const Lottery<T>& x, const std::vector<std::size_t>& keep,
                        std::size_t full_domain) {
    std::vector<std::size_t> columns;
    std::vector<bool> kept(full_domain, false);
    for (std::size_t a : keep) kept[a] = true;
    for (std::size_t a = 0; a < full_domain; ++a)
        if (kept[a]) columns.push_back(a);
    std::vector<std::pair<std::size_t, T>> atoms;
    for (const auto& [a, w] : x.weights()) atoms.emplace_back(columns.at(a), w);
    return Lottery<T>(full_domain, std::move(atoms));
}

}  // namespace socineff
