// End-to-end acceptance suite: one pass/fail line per criterion.
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "socineff/axioms.hpp"
#include "socineff/experiments.hpp"
#include "socineff/inefficiency.hpp"
#include "socineff/matching.hpp"

namespace {

using namespace socineff;
using Clock = std::chrono::steady_clock;

int g_failures = 0;

void report(int number, const std::string& label, bool pass, double seconds,
            const std::string& note = "") {
    std::cout << "criterion " << number << " (" << label << "): " << (pass ? "PASS" : "FAIL")
              << " [" << seconds << "s]";
    if (!note.empty()) std::cout << " - " << note;
    std::cout << std::endl;
    if (!pass) ++g_failures;
}

template <class F>
void run(int number, const std::string& label, F&& body) {
    auto t0 = Clock::now();
    bool pass = false;
    std::string note;
    try {
        pass = body(note);
    } catch (const std::exception& e) {
        note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    report(number, label, pass, secs, note);
}

Context<Rat> arrow() {
    return make_context<Rat>({"x", "y", "z"}, {{Rat(1), Rat(9) / 10, Rat(0)},
                                               {Rat(1), Rat(9) / 10, Rat(0)},
                                               {Rat(1) / 2, Rat(1), Rat(0)}});
}

// --- criterion 1: worked three-alternative example + dominated-alternative deletion ---
bool c1(std::string& note) {
    auto c = arrow();
    if (!(ihat(c, c.point(0)).value == ExtendedRat(Rat(0)))) return false;
    if (!(ihat(c, c.point(1)).value == ExtendedRat(Rat(1) / 3))) return false;
    if (!(ihat(c, c.point(2)).value == ExtendedRat(Rat(7)))) return false;
    auto cut = restrict_by_name(c, {"x", "y"});
    if (!(ihat(cut, cut.point(0)).value == ExtendedRat(Rat(0)))) return false;
    if (!(ihat(cut, cut.point(1)).value == ExtendedRat(Rat(1) / 3))) return false;
    note = "values 0, 1/3, 7; unchanged after dropping the dominated alternative";
    return true;
}

// --- criterion 2: LP efficiency test vs vertex-enumeration brute force ---
bool c2(std::string& note) {
    std::mt19937_64 master(9001);
    std::size_t checked = 0;
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + master() % 3;
        const std::size_t m = 1 + master() % 5;
        auto c = random_context(n, m, master());
        std::vector<Lottery<Rat>> points;
        for (std::size_t a = 0; a < m; ++a) points.push_back(c.point(a));
        for (int k = 0; k < 20; ++k) points.push_back(random_lottery(m, master()));
        for (const auto& x : points) {
            ++checked;
            if (is_efficient(c, x) != brute_force_is_efficient(c, x)) {
                note = "disagreement at trial " + std::to_string(t);
                return false;
            }
        }
    }
    note = std::to_string(checked) + " points, zero disagreements";
    return true;
}

// --- criterion 3: 8x7 independence matrix with replayable counterexamples ---
bool c3(std::string& note) {
    auto battery = default_battery();
    for (const auto& cell : independence_matrix(battery)) {
        auto expected_fail = designated_failure(cell.variant);
        const bool should_pass = !(expected_fail && *expected_fail == cell.axiom);
        if (cell.pass != should_pass) {
            note = std::string(variant_name(cell.variant)) + "/" + axiom_name(cell.axiom) +
                   " unexpected verdict";
            return false;
        }
    }
    // the squared variant's mixture counterexample must replay from the stored instance
    auto sq = check_axiom(VariantId::Squared, Axiom::ExpectedInefficiency, battery);
    if (sq.pass || !sq.failing_instance) {
        note = "squared variant lacks a replayable mixture counterexample";
        return false;
    }
    const auto& li = battery.linearity[*sq.failing_instance];
    auto f = frontier_summary(li.c);
    auto lhs = eval_variant(VariantId::Squared, li.c, f, Lottery<Rat>::mix(li.alpha, li.x, li.y));
    auto rhs = li.alpha * eval_variant(VariantId::Squared, li.c, f, li.x) +
               (Rat(1) - li.alpha) * eval_variant(VariantId::Squared, li.c, f, li.y);
    if (lhs == rhs) {
        note = "stored squared counterexample does not replay";
        return false;
    }
    note = "56 cells match the designated pattern; squared counterexample replays";
    return true;
}

std::vector<Context<Rat>> battery_pool() {
    auto battery = default_battery();
    std::vector<Context<Rat>> pool;
    for (const auto& inst : battery.feasibility) pool.push_back(inst.c);
    return pool;
}

std::vector<Lottery<Rat>> probe_points(const Context<Rat>& c, std::uint64_t seed) {
    std::vector<Lottery<Rat>> pts;
    for (std::size_t a = 0; a < c.n_alternatives(); ++a) pts.push_back(c.point(a));
    for (int k = 0; k < 3; ++k) pts.push_back(random_lottery(c.n_alternatives(), seed + k));
    return pts;
}

// --- criterion 4: structural identities, exact equality ---
bool c4(std::string& note) {
    auto pool = battery_pool();
    std::mt19937_64 rng(777);

    for (std::size_t k = 0; k < pool.size(); ++k) {
        const auto& c = pool[k];
        // positive affine rescaling per individual leaves every value unchanged
        std::vector<std::vector<Rat>> rows;
        for (std::size_t i = 0; i < c.n_individuals(); ++i) {
            const Rat a = Rat(static_cast<long>(2 + i)), b = Rat(static_cast<long>(i)) - 3;
            std::vector<Rat> row;
            for (std::size_t j = 0; j < c.n_alternatives(); ++j)
                row.push_back(a * c.utility(i, j) + b);
            rows.push_back(std::move(row));
        }
        auto scaled = make_context<Rat>(c.alternative_names(), rows);
        for (const auto& x : probe_points(c, 100 + k))
            if (!(ihat(c, x).value == ihat(scaled, x).value)) {
                note = "affine invariance broken";
                return false;
            }

        // permutation of individuals
        std::vector<std::size_t> perm(c.n_individuals());
        std::iota(perm.begin(), perm.end(), 0);
        for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
        auto shuffled = permute_individuals(c, perm);
        for (const auto& x : probe_points(c, 200 + k))
            if (!(ihat(c, x).value == ihat(shuffled, x).value)) {
                note = "anonymity broken";
                return false;
            }

        // mixing is linear wherever no infinity is involved, infinite together otherwise
        auto pts = probe_points(c, 300 + k);
        auto f = frontier_summary(c);
        for (std::size_t a = 0; a + 1 < pts.size(); ++a) {
            const Rat alpha = Rat(1 + static_cast<long>(a % 3)) / 4;
            auto lhs = ihat(c, f, Lottery<Rat>::mix(alpha, pts[a], pts[a + 1])).value;
            auto ix = ihat(c, f, pts[a]).value, iy = ihat(c, f, pts[a + 1]).value;
            if (ix.is_pos_inf() || iy.is_pos_inf()) {
                if (!lhs.is_pos_inf()) {
                    note = "mixture of an infinite point must stay infinite";
                    return false;
                }
            } else if (!(lhs == alpha * ix + (Rat(1) - alpha) * iy)) {
                note = "linearity broken";
                return false;
            }
        }
    }

    // composition additivity over pairs of pool contexts
    for (std::size_t k = 0; k + 1 < pool.size(); k += 2) {
        const auto& c1x = pool[k];
        const auto& c2x = pool[k + 1];
        if (c1x.n_alternatives() * c2x.n_alternatives() > 64) continue;
        auto big = compose(c1x, c2x);
        const Rat n1 = static_cast<long>(c1x.n_individuals());
        const Rat n2 = static_cast<long>(c2x.n_individuals());
        auto xs = probe_points(c1x, 400 + k);
        auto ys = probe_points(c2x, 500 + k);
        for (std::size_t t = 0; t < std::min(xs.size(), ys.size()); ++t) {
            auto joint = product_lottery<Rat>({xs[t], ys[t]});
            auto lhs = ihat(big, joint).value;
            auto rhs = (n1 / (n1 + n2)) * ihat(c1x, xs[t]).value +
                       (n2 / (n1 + n2)) * ihat(c2x, ys[t]).value;
            if (!(lhs == rhs)) {
                note = "composition additivity broken";
                return false;
            }
        }
    }

    // k-fold replication with independent copies of the same lottery
    for (std::size_t k = 0; k < pool.size(); ++k) {
        const auto& c = pool[k];
        for (std::size_t reps = 2; reps <= 3; ++reps) {
            if (c.n_alternatives() > 4 && reps == 3) continue;
            auto rep = self_compose(c, reps, 4096);
            for (const auto& x : probe_points(c, 600 + k)) {
                auto diag = product_lottery<Rat>(std::vector<Lottery<Rat>>(reps, x));
                if (!(ihat(rep, diag).value == ihat(c, x).value)) {
                    note = "population replication broken";
                    return false;
                }
            }
        }
    }
    note = "affine, anonymity, linearity, composition, replication identities all exact";
    return true;
}

// --- criterion 5: value is infinite iff an indifferent individual sits below the frontier ---
bool c5(std::string& note) {
    std::size_t infinite_seen = 0, checked = 0;
    auto pool = battery_pool();
    std::mt19937_64 master(4242);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 1 + master() % 3;
        const std::size_t m = 2 + master() % 4;
        pool.push_back(random_context(n, m, master()));
    }

    // constructed positive case: two individuals with opposed rankings over two objects
    AllocationProblem<Rat> opposed({"a", "b"}, {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
    pool.push_back(induced_context(opposed));

    for (std::size_t k = 0; k < pool.size(); ++k) {
        const auto& c = pool[k];
        auto f = frontier_summary(c);
        for (const auto& x : probe_points(c, 700 + k)) {
            bool below = false;
            for (std::size_t i = 0; i < c.n_individuals() && !below; ++i)
                if (!f.is_concerned(i) && expected_utility(c, i, x) < f.u_min[i]) below = true;
            const bool inf = ihat(c, f, x).value.is_pos_inf();
            ++checked;
            if (inf != below) {
                note = "characterization mismatch";
                return false;
            }
            if (inf) ++infinite_seen;
        }
    }
    if (infinite_seen == 0) {
        note = "no infinite case exercised";
        return false;
    }
    note = std::to_string(checked) + " points, " + std::to_string(infinite_seen) +
           " infinite, characterization exact";
    return true;
}

// integer-ranking helpers for the matching criteria ------------------------

AllocationProblem<Rat> problem_from_rankings(const std::vector<std::vector<std::size_t>>& ranks) {
    const std::size_t n = ranks.size();
    std::vector<std::string> names;
    for (std::size_t o = 0; o < n; ++o) names.push_back("o" + std::to_string(o));
    std::vector<std::vector<Rat>> rows(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t pos = 0; pos < n; ++pos)
            rows[i][ranks[i][pos]] = Rat(static_cast<long>(n - pos));
    return AllocationProblem<Rat>(names, rows);
}

// position of object o in individual i's ranking (0 = favorite)
std::vector<std::vector<std::size_t>> positions(const std::vector<std::vector<std::size_t>>& ranks) {
    const std::size_t n = ranks.size();
    std::vector<std::vector<std::size_t>> pos(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < n; ++p) pos[i][ranks[i][p]] = p;
    return pos;
}

bool envy_acyclic(const std::vector<std::vector<std::size_t>>& pos, const Matching& m) {
    const std::size_t n = m.size();
    std::vector<int> color(n, 0);
    std::vector<std::size_t> stack;
    for (std::size_t s = 0; s < n; ++s) {
        if (color[s]) continue;
        stack.push_back(s);
        while (!stack.empty()) {
            std::size_t v = stack.back();
            if (color[v] == 0) {
                color[v] = 1;
                for (std::size_t w = 0; w < n; ++w) {
                    if (w == v || pos[v][m[w]] >= pos[v][m[v]]) continue;
                    if (color[w] == 1) return false;
                    if (color[w] == 0) stack.push_back(w);
                }
            } else {
                if (color[v] == 1) color[v] = 2;
                stack.pop_back();
            }
        }
    }
    return true;
}

bool dominates(const std::vector<std::vector<std::size_t>>& pos, const Matching& a,
               const Matching& b) {
    bool strict = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (pos[i][a[i]] > pos[i][b[i]]) return false;
        if (pos[i][a[i]] < pos[i][b[i]]) strict = true;
    }
    return strict;
}

// worst object each individual can receive across PO matchings, by exhaustive enumeration
std::vector<std::size_t> brute_worst_objects(const std::vector<std::vector<std::size_t>>& ranks,
                                             bool po_by_domination) {
    const auto pos = positions(ranks);
    const std::size_t n = ranks.size();
    auto all = all_matchings(n);
    std::vector<std::size_t> worst(n, 0);
    std::vector<bool> seen(n, false);
    for (const auto& m : all) {
        bool po;
        if (po_by_domination) {
            po = true;
            for (const auto& other : all)
                if (dominates(pos, other, m)) {
                    po = false;
                    break;
                }
        } else {
            po = envy_acyclic(pos, m);
        }
        if (!po) continue;
        for (std::size_t i = 0; i < n; ++i)
            if (!seen[i] || pos[i][m[i]] > pos[i][worst[i]]) {
                worst[i] = m[i];
                seen[i] = true;
            }
    }
    return worst;
}

// --- criterion 6: polynomial search equals exhaustive search over PO matchings ---
bool c6(std::string& note) {
    std::size_t profiles = 0;
    // exhaustive over ranking profiles at n <= 4; individual 0 fixed to the identity
    // ranking, which is without loss by relabeling objects
    for (std::size_t n = 2; n <= 4; ++n) {
        std::vector<std::size_t> identity(n);
        std::iota(identity.begin(), identity.end(), 0);
        std::vector<std::vector<std::size_t>> perms;
        {
            auto p = identity;
            do perms.push_back(p);
            while (std::next_permutation(p.begin(), p.end()));
        }
        std::vector<std::size_t> pick(n - 1, 0);
        while (true) {
            std::vector<std::vector<std::size_t>> ranks{identity};
            for (std::size_t i = 0; i + 1 < n; ++i) ranks.push_back(perms[pick[i]]);
            auto p = problem_from_rankings(ranks);
            auto worst = brute_worst_objects(ranks, /*po_by_domination=*/true);
            for (std::size_t i = 0; i < n; ++i)
                if (find_min_pareto_match(p, i) != worst[i]) {
                    note = "mismatch at n=" + std::to_string(n);
                    return false;
                }
            ++profiles;
            std::size_t d = 0;
            while (d + 1 < n && ++pick[d] == perms.size()) pick[d++] = 0;
            if (d + 1 == n) break;
        }
    }
    // random profiles at n in {5,6,7}; the enumeration filter uses envy-cycle
    // acyclicity, itself validated against domination in criterion 7
    std::mt19937_64 rng(31337);
    for (std::size_t n = 5; n <= 7; ++n) {
        for (int t = 0; t < 500; ++t) {
            std::vector<std::vector<std::size_t>> ranks;
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<std::size_t> r(n);
                std::iota(r.begin(), r.end(), 0);
                for (std::size_t j = n; j > 1; --j) std::swap(r[j - 1], r[rng() % j]);
                ranks.push_back(std::move(r));
            }
            auto p = problem_from_rankings(ranks);
            auto worst = brute_worst_objects(ranks, n <= 5);
            for (std::size_t i = 0; i < n; ++i)
                if (find_min_pareto_match(p, i) != worst[i]) {
                    note = "mismatch at random n=" + std::to_string(n);
                    return false;
                }
            ++profiles;
        }
    }
    note = std::to_string(profiles) + " ranking profiles, full agreement";
    return true;
}

std::size_t factorial(std::size_t n) {
    std::size_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
}

// --- criterion 7: PO matchings = efficient pure points of the induced context ---
bool c7(std::string& note) {
    std::mt19937_64 rng(555);
    std::size_t compared = 0;
    for (std::size_t n = 2; n <= 5; ++n) {
        const int trials = n <= 3 ? 30 : 12;
        for (int t = 0; t < trials; ++t) {
            auto p = random_allocation(n, rng());
            auto ctx = induced_context(p);
            auto f = frontier_summary(ctx);
            std::vector<bool> efficient(factorial(n), false);
            for (std::size_t a : f.efficient_pure) efficient[a] = true;
            auto all = all_matchings(n);
            for (std::size_t a = 0; a < all.size(); ++a) {
                const bool po = is_expost_pareto_efficient(p, all[a]);
                const bool po_brute = brute_force_is_expost_pareto_efficient(p, all[a]);
                if (po != po_brute || po != efficient[a]) {
                    note = "disagreement at n=" + std::to_string(n);
                    return false;
                }
                ++compared;
            }
        }
    }
    note = std::to_string(compared) + " matchings, three-way agreement";
    return true;
}

// --- criterion 8: measured RSD inefficiency never exceeds ln 2 ---
bool c8(std::string& note) {
    const Rat eps = Rat(1) / 10000;
    std::vector<std::size_t> ns{2, 3, 4, 5, 6, 7, 8};
    const std::size_t instances_per_n = 1500;  // 10500 total
    // throws on any ceiling violation
    auto rows = upper_bound_sweep(ns, eps, instances_per_n, /*trials=*/600, /*seed=*/20260824);
    double max_seen = 0;
    for (const auto& r : rows) max_seen = std::max(max_seen, r.value_num);
    std::ostringstream os;
    os << ns.size() * instances_per_n << " instances, max measured " << max_seen << " <= ln 2";
    note = os.str();
    return rows.size() == ns.size();
}

// --- criterion 9: lower-bound curve vs independent oracle + frozen fixtures ---
bool c9(std::string& note) {
    const Rat eps = Rat(1) / 10000;
    auto rows = lower_bound_curve({2, 3, 4, 5, 6, 7}, eps);
    const std::vector<std::string> frozen{"0",           "44993/270000", "39991/160000",
                                          "37489/125000", "35987/108000", "6997/19600"};
    for (std::size_t k = 0; k < rows.size(); ++k)
        if (rows[k].value != frozen[k]) {
            note = "regression fixture mismatch at n=" + std::to_string(rows[k].n);
            return false;
        }
    // independent oracle: the same number through the induced context
    for (std::size_t n = 2; n <= 5; ++n) {
        auto p = lower_bound_instance<Rat>(n, eps);
        auto outcome = rsd_exact(p);
        auto ctx = induced_context(p);
        auto all = all_matchings(n);
        std::vector<std::pair<std::size_t, Rat>> weights;
        for (const auto& [m, prob] : outcome.entries()) {
            auto it = std::lower_bound(all.begin(), all.end(), m);
            weights.emplace_back(static_cast<std::size_t>(it - all.begin()), prob);
        }
        Lottery<Rat> x(all.size(), weights);
        auto direct = allocation_inefficiency(p, outcome);
        auto oracle = ihat(ctx, x).value;
        if (!(direct == oracle)) {
            note = "oracle mismatch at n=" + std::to_string(n);
            return false;
        }
    }
    note = "curve matches frozen fixtures; induced-context oracle agrees exactly (n<=5)";
    return true;
}

// --- criterion 10: seeded runs are byte-identical ---
bool c10(std::string& note) {
    const Rat eps = Rat(1) / 10000;
    auto a = sweep_csv(upper_bound_sweep({2, 3, 6}, eps, 4, 200, 99, /*exact_limit=*/4));
    auto b = sweep_csv(upper_bound_sweep({2, 3, 6}, eps, 4, 200, 99, /*exact_limit=*/4));
    if (a != b) {
        note = "sweep CSV differs between runs";
        return false;
    }
    auto p = to_double(random_allocation(6, 2024));
    auto l1 = rsd_sample(p, 500, 7);
    auto l2 = rsd_sample(p, 500, 7);
    if (!(l1.entries() == l2.entries())) {
        note = "sampled RSD distribution differs between runs";
        return false;
    }
    if (!(random_context(3, 4, 11) == random_context(3, 4, 11))) {
        note = "random context differs between runs";
        return false;
    }
    note = "CSV, sampled RSD, and generators byte-stable under fixed seeds";
    return true;
}

}  // namespace

int main() {
    run(1, "worked example and deletion invariance", c1);
    run(2, "frontier oracle equivalence", c2);
    run(3, "axiom independence matrix", c3);
    run(4, "structural identities", c4);
    run(5, "infinite-value characterization", c5);
    run(6, "least-preferred-object search", c6);
    run(7, "PO matchings vs induced frontier", c7);
    run(8, "RSD upper bound sweep", c8);
    run(9, "lower-bound curve fixtures", c9);
    run(10, "seeded determinism", c10);
    std::cout << (g_failures == 0 ? "all criteria passed" : std::to_string(g_failures) + " criteria failed")
              << std::endl;
    return g_failures == 0 ? 0 : 1;
}
