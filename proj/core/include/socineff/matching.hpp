#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <string>
#include <vector>

#include "socineff/context.hpp"
#include "socineff/errors.hpp"
#include "socineff/extended.hpp"
#include "socineff/scalar.hpp"

namespace socineff {

/// Assignment individual -> object index; always a bijection.
using Matching = std::vector<std::size_t>;

/// n individuals, n objects, strict per-individual utilities over objects.
template <class T>
class AllocationProblem {
  public:
    AllocationProblem(std::vector<std::string> object_names,
                      std::vector<std::vector<T>> utilities)
        : names_(std::move(object_names)), utilities_(std::move(utilities)) {
        const std::size_t n = names_.size();
        if (n == 0) throw EmptyAlternatives();
        {
            std::vector<std::string> sorted = names_;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                throw DuplicateName(*std::adjacent_find(sorted.begin(), sorted.end()));
        }
        if (utilities_.size() != n) throw RaggedMatrix();
        for (const auto& row : utilities_)
            if (row.size() != n) throw RaggedMatrix();
        // strict preferences: reject ties within a row
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<T> sorted = utilities_[i];
            std::sort(sorted.begin(), sorted.end());
            for (std::size_t j = 0; j + 1 < n; ++j)
                if (NumericTraits<T>::nearly_equal(sorted[j], sorted[j + 1]))
                    throw TiedUtilities(i);
        }
        // ranking_[i] lists objects from most to least preferred
        ranking_.assign(n, {});
        for (std::size_t i = 0; i < n; ++i) {
            ranking_[i].resize(n);
            std::iota(ranking_[i].begin(), ranking_[i].end(), std::size_t{0});
            std::sort(ranking_[i].begin(), ranking_[i].end(),
                      [&](std::size_t a, std::size_t b) { return utilities_[i][a] > utilities_[i][b]; });
        }
    }

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& object_names() const { return names_; }
    const std::string& name_of(std::size_t o) const { return names_.at(o); }
    const T& utility(std::size_t i, std::size_t o) const { return utilities_.at(i).at(o); }
    /// Objects of individual i from most to least preferred.
    const std::vector<std::size_t>& ranking(std::size_t i) const { return ranking_.at(i); }
    bool prefers(std::size_t i, std::size_t a, std::size_t b) const {
        return utilities_.at(i).at(a) > utilities_.at(i).at(b);
    }

  private:
    std::vector<std::string> names_;
    std::vector<std::vector<T>> utilities_;
    std::vector<std::vector<std::size_t>> ranking_;
};

/// Distribution over matchings; entries distinct and sorted, probabilities sum
/// to one (exactly in exact mode).
template <class T>
class MatchingLottery {
  public:
    MatchingLottery(std::size_t n, std::vector<std::pair<Matching, T>> entries) : n_(n) {
        std::map<Matching, T> merged;
        T sum = NumericTraits<T>::zero();
        for (auto& [m, p] : entries) {
            if (m.size() != n_) throw DimensionMismatch("matching has wrong size");
            if (p < NumericTraits<T>::zero()) throw InvalidLottery("negative matching probability");
            sum += p;
            auto [it, inserted] = merged.emplace(m, p);
            if (!inserted) it->second += p;
        }
        const T slack = NumericTraits<T>::lottery_sum_slack();
        if (sum < T(1) - slack || sum > T(1) + slack)
            throw InvalidLottery("matching probabilities sum to " + format_scalar(sum));
        for (auto& [m, p] : merged)
            if (!NumericTraits<T>::is_zero(p)) entries_.emplace_back(m, p);
    }

    static MatchingLottery point(Matching m) {
        const std::size_t n = m.size();
        return MatchingLottery(n, {{std::move(m), T(1)}});
    }

    std::size_t n() const { return n_; }
    const std::vector<std::pair<Matching, T>>& entries() const { return entries_; }

    friend bool operator==(const MatchingLottery& a, const MatchingLottery& b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

  private:
    std::size_t n_;
    std::vector<std::pair<Matching, T>> entries_;
};

namespace detail {

inline std::uint64_t factorial_checked(std::size_t n, std::size_t cap, const char* what) {
    if (n > cap) throw GuardrailExceeded(what);
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace detail

/// All n! matchings in lexicographic order.
inline std::vector<Matching> all_matchings(std::size_t n) {
    Matching m(n);
    std::iota(m.begin(), m.end(), std::size_t{0});
    std::vector<Matching> out;
    do out.push_back(m);
    while (std::next_permutation(m.begin(), m.end()));
    return out;
}

/// One alternative per matching; individual i values a matching by her object.
template <class T>
Context<T> induced_context(const AllocationProblem<T>& p) {
    const std::size_t n = p.size();
    detail::factorial_checked(n, 7, "induced context limited to 7 individuals");
    std::vector<std::string> names;
    std::vector<Matching> matchings = all_matchings(n);
    for (const auto& m : matchings) {
        std::string name = p.name_of(m[0]);
        for (std::size_t i = 1; i < n; ++i) name += "|" + p.name_of(m[i]);
        names.push_back(std::move(name));
    }
    std::vector<std::vector<T>> u(n);
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& m : matchings) u[i].push_back(p.utility(i, m[i]));
    return Context<T>(std::move(names), std::move(u));
}

/// Greedy assignment: each individual in `order` takes her favorite remaining object.
template <class T>
Matching serial_dictatorship(const AllocationProblem<T>& p, const std::vector<std::size_t>& order) {
    const std::size_t n = p.size();
    std::vector<bool> hit(n, false);
    if (order.size() != n) throw NotAPermutation();
    for (std::size_t v : order) {
        if (v >= n || hit[v]) throw NotAPermutation();
        hit[v] = true;
    }
    Matching m(n);
    std::vector<bool> taken(n, false);
    for (std::size_t i : order)
        for (std::size_t o : p.ranking(i))
            if (!taken[o]) {
                m[i] = o;
                taken[o] = true;
                break;
            }
    return m;
}

/// Exact RSD distribution: uniform over all n! dictator orders.
template <class T>
MatchingLottery<T> rsd_exact(const AllocationProblem<T>& p) {
    const std::size_t n = p.size();
    const std::uint64_t total =
        detail::factorial_checked(n, 8, "exact RSD limited to 8 individuals");
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::map<Matching, std::uint64_t> counts;
    do ++counts[serial_dictatorship(p, order)];
    while (std::next_permutation(order.begin(), order.end()));
    std::vector<std::pair<Matching, T>> entries;
    for (const auto& [m, cnt] : counts)
        entries.emplace_back(m, T(static_cast<long>(cnt)) / T(static_cast<long>(total)));
    return MatchingLottery<T>(n, std::move(entries));
}

/// Monte Carlo RSD estimate; byte-deterministic given the seed.
template <class T>
MatchingLottery<T> rsd_sample(const AllocationProblem<T>& p, std::size_t trials,
                              std::uint64_t seed) {
    if (trials == 0) throw PreconditionViolated("trials must be >= 1");
    const std::size_t n = p.size();
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> order(n);
    std::map<Matching, std::uint64_t> counts;
    for (std::size_t t = 0; t < trials; ++t) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        for (std::size_t i = n; i > 1; --i)
            std::swap(order[i - 1], order[rng() % i]);  // Fisher-Yates
        ++counts[serial_dictatorship(p, order)];
    }
    std::vector<std::pair<Matching, T>> entries;
    for (const auto& [m, cnt] : counts)
        entries.emplace_back(m, T(static_cast<long>(cnt)) / T(static_cast<long>(trials)));
    return MatchingLottery<T>(n, std::move(entries));
}

/// Maximum-cardinality bipartite matching in O(E sqrt(V)).
/// Returns pairs (left, right).
inline std::vector<std::pair<std::size_t, std::size_t>> hopcroft_karp(
    std::size_t n_left, std::size_t n_right,
    const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::vector<std::vector<std::size_t>> adj(n_left);
    for (const auto& [l, r] : edges) {
        if (l >= n_left || r >= n_right) throw IndexOutOfRange("edge endpoint out of range");
        adj[l].push_back(r);
    }
    constexpr std::size_t kFree = static_cast<std::size_t>(-1);
    std::vector<std::size_t> match_l(n_left, kFree), match_r(n_right, kFree);
    std::vector<std::size_t> dist(n_left);

    auto bfs = [&]() {
        std::queue<std::size_t> q;
        bool found = false;
        for (std::size_t l = 0; l < n_left; ++l) {
            dist[l] = match_l[l] == kFree ? 0 : kFree;
            if (match_l[l] == kFree) q.push(l);
        }
        while (!q.empty()) {
            std::size_t l = q.front();
            q.pop();
            for (std::size_t r : adj[l]) {
                std::size_t l2 = match_r[r];
                if (l2 == kFree)
                    found = true;
                else if (dist[l2] == kFree) {
                    dist[l2] = dist[l] + 1;
                    q.push(l2);
                }
            }
        }
        return found;
    };
    std::function<bool(std::size_t)> dfs = [&](std::size_t l) {
        for (std::size_t r : adj[l]) {
            std::size_t l2 = match_r[r];
            if (l2 == kFree || (dist[l2] == dist[l] + 1 && dfs(l2))) {
                match_l[l] = r;
                match_r[r] = l;
                return true;
            }
        }
        dist[l] = kFree;
        return false;
    };
    while (bfs())
        for (std::size_t l = 0; l < n_left; ++l)
            if (match_l[l] == kFree) dfs(l);

    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t l = 0; l < n_left; ++l)
        if (match_l[l] != kFree) out.emplace_back(l, match_l[l]);
    return out;
}

/// Can the individuals other than i_hat all be matched to objects they
/// strictly prefer to o (excluding o itself)?
template <class T>
bool test_min_pareto(const AllocationProblem<T>& p, std::size_t i_hat, std::size_t o) {
    const std::size_t n = p.size();
    if (i_hat >= n || o >= n) throw IndexOutOfRange("test_min_pareto index out of range");
    // left = individuals != i_hat (compacted), right = objects != o (compacted)
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == i_hat) continue;
        const std::size_t l = i < i_hat ? i : i - 1;
        for (std::size_t op = 0; op < n; ++op) {
            if (op == o) continue;
            if (p.prefers(i, op, o)) edges.emplace_back(l, op < o ? op : op - 1);
        }
    }
    return hopcroft_karp(n - 1, n - 1, edges).size() == n - 1;
}

/// Object least preferred by i_hat over all ex-post Pareto efficient
/// matchings, found in polynomial time.
template <class T>
std::size_t find_min_pareto_match(const AllocationProblem<T>& p, std::size_t i_hat) {
    const auto& ranking = p.ranking(i_hat);
    for (std::size_t k = ranking.size(); k-- > 0;)
        if (test_min_pareto(p, i_hat, ranking[k])) return ranking[k];
    throw NumericalBreakdown("no admissible object found");  // unreachable: the favorite passes
}

/// Ex-post Pareto efficiency via acyclicity of the strict-envy digraph: with
/// strict preferences, any Pareto improvement decomposes into strictly
/// improving trading cycles.
template <class T>
bool is_expost_pareto_efficient(const AllocationProblem<T>& p, const Matching& m) {
    const std::size_t n = p.size();
    if (m.size() != n) throw DimensionMismatch("matching has wrong size");
    // arc i -> k iff i strictly prefers k's object to her own
    std::vector<int> state(n, 0);  // 0 unvisited, 1 on stack, 2 done
    std::function<bool(std::size_t)> has_cycle = [&](std::size_t i) {
        state[i] = 1;
        for (std::size_t k = 0; k < n; ++k) {
            if (k == i || !p.prefers(i, m[k], m[i])) continue;
            if (state[k] == 1 || (state[k] == 0 && has_cycle(k))) return true;
        }
        state[i] = 2;
        return false;
    };
    for (std::size_t i = 0; i < n; ++i)
        if (state[i] == 0 && has_cycle(i)) return false;
    return true;
}

/// Independent check by direct domination over all n! matchings.
template <class T>
bool brute_force_is_expost_pareto_efficient(const AllocationProblem<T>& p, const Matching& m) {
    detail::factorial_checked(p.size(), 7, "brute-force matching domination limited to 7");
    for (const auto& other : all_matchings(p.size())) {
        bool weak = true, strict = false;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p.prefers(i, m[i], other[i])) weak = false;
            if (p.prefers(i, other[i], m[i])) strict = true;
        }
        if (weak && strict) return false;
    }
    return true;
}

template <class T>
struct AllocationRanges {
    std::vector<T> u_min;  // utility of the least preferred object received in any PO matching
    std::vector<T> u_max;  // utility of the favorite object

    bool is_concerned(std::size_t i) const {
        return !NumericTraits<T>::nearly_equal(u_max[i], u_min[i]);
    }
};

template <class T>
AllocationRanges<T> allocation_frontier_ranges(const AllocationProblem<T>& p) {
    AllocationRanges<T> r;
    for (std::size_t i = 0; i < p.size(); ++i) {
        r.u_max.push_back(p.utility(i, p.ranking(i).front()));
        r.u_min.push_back(p.utility(i, find_min_pareto_match(p, i)));
    }
    return r;
}

namespace detail {

/// Maximum-weight perfect matching (Hungarian method on negated weights).
template <class T>
std::pair<Matching, T> assignment_maximize(const std::vector<std::vector<T>>& weight) {
    const std::size_t n = weight.size();
    // cost = -weight, minimized; potentials over rows/columns, O(n^3)
    T big = T(1);
    for (const auto& row : weight)
        for (const auto& w : row) {
            T a = w < NumericTraits<T>::zero() ? -w : w;
            if (a + T(1) > big) big = a + T(1);
        }
    const T INF = big * T(static_cast<long>(n + 1)) + T(1);
    std::vector<T> u(n + 1, NumericTraits<T>::zero()), v(n + 1, NumericTraits<T>::zero());
    std::vector<std::size_t> way(n + 1, 0), link(n + 1, n);  // link[col] = row matched to col
    for (std::size_t i = 0; i < n; ++i) {
        link[n] = i;
        std::size_t j0 = n;
        std::vector<T> minv(n + 1, INF);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            std::size_t i0 = link[j0], j1 = n;
            T delta = INF;
            for (std::size_t j = 0; j < n; ++j) {
                if (used[j]) continue;
                T cur = -weight[i0][j] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[link[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (link[j0] != n);
        do {
            std::size_t j1 = way[j0];
            link[j0] = link[j1];
            j0 = j1;
        } while (j0 != n);
    }
    Matching m(n);
    T total = NumericTraits<T>::zero();
    for (std::size_t j = 0; j < n; ++j) {
        m[link[j]] = j;
        total += weight[link[j]][j];
    }
    return {std::move(m), total};
}

template <class T>
Extended<T> matching_social_value(const AllocationProblem<T>& p, const AllocationRanges<T>& r,
                                  const Matching& m) {
    Extended<T> total(NumericTraits<T>::zero());
    for (std::size_t i = 0; i < p.size(); ++i)
        total = total + Extended<T>::ratio(p.utility(i, m[i]) - r.u_min[i],
                                           r.u_max[i] - r.u_min[i]);
    return (T(1) / T(static_cast<long>(p.size()))) * total;
}

}  // namespace detail

/// Matching maximizing V and the (always finite) maximum value. A
/// frontier-indifferent individual must receive her favorite object in any
/// finite-value matching, so those pairs are forced and the Hungarian method
/// runs on the remaining all-finite normalized weights.
template <class T>
std::pair<Matching, T> max_value_matching(const AllocationProblem<T>& p) {
    const std::size_t n = p.size();
    const AllocationRanges<T> r = allocation_frontier_ranges(p);
    constexpr std::size_t kFree = static_cast<std::size_t>(-1);
    Matching forced(n, kFree);
    std::vector<bool> object_taken(n, false);
    std::vector<std::size_t> free_individuals, free_objects;
    for (std::size_t i = 0; i < n; ++i)
        if (!r.is_concerned(i)) {
            std::size_t fav = p.ranking(i).front();
            if (object_taken[fav])
                throw NumericalBreakdown("two frontier-indifferent individuals share a favorite");
            forced[i] = fav;
            object_taken[fav] = true;
        } else {
            free_individuals.push_back(i);
        }
    for (std::size_t o = 0; o < n; ++o)
        if (!object_taken[o]) free_objects.push_back(o);

    T total = NumericTraits<T>::zero();
    if (!free_individuals.empty()) {
        std::vector<std::vector<T>> weight(free_individuals.size(),
                                           std::vector<T>(free_objects.size()));
        for (std::size_t a = 0; a < free_individuals.size(); ++a)
            for (std::size_t bcol = 0; bcol < free_objects.size(); ++bcol) {
                std::size_t i = free_individuals[a], o = free_objects[bcol];
                weight[a][bcol] = (p.utility(i, o) - r.u_min[i]) / (r.u_max[i] - r.u_min[i]);
            }
        auto [sub, value] = detail::assignment_maximize(weight);
        for (std::size_t a = 0; a < free_individuals.size(); ++a)
            forced[free_individuals[a]] = free_objects[sub[a]];
        total = value;
    }
    return {std::move(forced), total / T(static_cast<long>(n))};
}

/// v_max minus the expected social value of the outcome distribution.
template <class T>
Extended<T> allocation_inefficiency(const AllocationProblem<T>& p,
                                    const MatchingLottery<T>& outcome) {
    const AllocationRanges<T> r = allocation_frontier_ranges(p);
    const T v_max = max_value_matching(p).second;
    Extended<T> expected(NumericTraits<T>::zero());
    for (const auto& [m, prob] : outcome.entries())
        expected = expected + prob * detail::matching_social_value(p, r, m);
    return Extended<T>(v_max) - expected;
}

/// Shared-ranking profile where every individual ranks object 1 above 2 above
/// ... above n, with utilities tuned so RSD's measured inefficiency stays low.
template <class T>
AllocationProblem<T> lower_bound_instance(std::size_t n, const T& eps) {
    if (!(eps > NumericTraits<T>::zero()) || !(T(static_cast<long>(n)) * eps < T(1)))
        throw InvalidEpsilon("need 0 < eps < 1/n");
    std::vector<std::string> names;
    for (std::size_t j = 1; j <= n; ++j) names.push_back(std::to_string(j));
    std::vector<std::vector<T>> u(n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            u[i - 1].push_back(j <= i ? T(1) - T(static_cast<long>(j - 1)) * eps
                                      : T(static_cast<long>(n - j)) / T(static_cast<long>(n)) * eps);
    AllocationProblem<T> p(std::move(names), std::move(u));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (p.ranking(i)[j] != j)
                throw NumericalBreakdown("instance rankings are not the shared order");
    return p;
}

/// Unit-range instance with all values in [0,eps) or (1-eps,1]; each row has
/// exactly one 0 and one 1, all values distinct.
inline AllocationProblem<Rat> ur_eps_instance(std::size_t n, const Rat& eps, std::uint64_t seed) {
    if (!(eps > 0) || !(eps < Rat(1) / 2)) throw InvalidEpsilon("need 0 < eps < 1/2");
    if (n < 2) throw PreconditionViolated("need n >= 2");
    std::mt19937_64 rng(seed);
    const long kGrain = 1'000'003;  // prime denominator keeps draws distinct with high probability
    std::vector<std::string> names;
    for (std::size_t j = 0; j < n; ++j) names.push_back("o" + std::to_string(j));
    std::vector<std::vector<Rat>> u(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i) {
        // random nonempty proper subset marked high, drawn by size then shuffle
        std::vector<std::size_t> objs(n);
        std::iota(objs.begin(), objs.end(), std::size_t{0});
        for (std::size_t k = n; k > 1; --k) std::swap(objs[k - 1], objs[rng() % k]);
        const std::size_t high_count = 1 + rng() % (n - 1);
        std::vector<Rat> draws;
        auto fresh_fraction = [&]() {  // in (0,1), distinct within the row
            while (true) {
                Rat v = Rat(static_cast<long>(1 + rng() % (kGrain - 1))) / kGrain;
                if (std::find(draws.begin(), draws.end(), v) == draws.end()) {
                    draws.push_back(v);
                    return v;
                }
            }
        };
        for (std::size_t k = 0; k < n; ++k) {
            const bool high = k < high_count;
            Rat value;
            if (k == 0)
                value = Rat(1);  // the unique 1 (first high slot)
            else if (k == high_count)
                value = Rat(0);  // the unique 0 (first low slot)
            else if (high)
                value = Rat(1) - eps * fresh_fraction();
            else
                value = eps * fresh_fraction();
            u[i][objs[k]] = value;
        }
    }
    return AllocationProblem<Rat>(std::move(names), std::move(u));
}

/// Uniform-random strict utilities in [0,1] with denominator-kGrain rationals.
inline AllocationProblem<Rat> random_allocation(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const long kGrain = 1'000'003;
    std::vector<std::string> names;
    for (std::size_t j = 0; j < n; ++j) names.push_back("o" + std::to_string(j));
    std::vector<std::vector<Rat>> u(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rat> row;
        while (row.size() < n) {
            Rat v = Rat(static_cast<long>(rng() % kGrain)) / kGrain;
            if (std::find(row.begin(), row.end(), v) == row.end()) row.push_back(v);
        }
        u[i] = std::move(row);
    }
    return AllocationProblem<Rat>(std::move(names), std::move(u));
}

template <class U>
AllocationProblem<double> to_double(const AllocationProblem<U>& p) {
    std::vector<std::vector<double>> u(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j)
            u[i].push_back(convert_to_double(p.utility(i, j)));
    return AllocationProblem<double>(p.object_names(), std::move(u));
}

}  // namespace socineff
