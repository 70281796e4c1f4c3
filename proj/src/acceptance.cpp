#include "odun/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "odun/characters.hpp"
#include "odun/forest.hpp"
#include "odun/foulkes.hpp"
#include "odun/odun_characters.hpp"
#include "odun/orbit_oracle.hpp"
#include "odun/plethysm.hpp"
#include "odun/power_sum.hpp"
#include "odun/schur.hpp"
#include "odun/serialize.hpp"
#include "odun/transformation.hpp"

namespace odun {

namespace {

class Checker {
public:
    explicit Checker(CriterionResult& result) : result_(result) {}

    bool operator()(bool ok, const std::string& what) {
        ++result_.checks;
        if (!ok) result_.failures.push_back(what);
        return ok;
    }

private:
    CriterionResult& result_;
};

std::string str(const Partition& p) { return "(" + to_string(p) + ")"; }

SchurPolynomial h(int k) { return SchurPolynomial::complete(k); }

// Theorem expansion against the plethysm engine.
void theorem_expansion(Checker& check) {
    for (int n = 3; n <= 8; ++n) {
        const SchurPolynomial engine = plethysm(h(2), multiply(h(1), h(n - 1)));
        check(theorem1_expansion(n) == engine, "n=" + std::to_string(n) + ": closed form differs from h_2[h_1 h_{n-1}]");
    }
}

void foulkes_m2(Checker& check) {
    for (int n = 3; n <= 7; ++n) {
        const ComparisonReport report = foulkes_compare(2, n);
        const std::string tag = "n=" + std::to_string(n) + ": ";
        for (const ComparisonRow& row : report.rows) {
            if (row.lambda.length() < 3) continue;
            check(row.lhs >= row.rhs, tag + str(row.lambda) + " lhs " + row.lhs.get_str() + " < rhs " + row.rhs.get_str());
        }
        const Partition flagged{2 * n - 2, 2};
        const auto it = std::find_if(report.rows.begin(), report.rows.end(),
                                     [&](const ComparisonRow& r) { return r.lambda == flagged; });
        check(it != report.rows.end() && it->lhs == 2 && it->rhs == 3, tag + str(flagged) + " is not (2,3)");
        check(report.exceptions.size() == 1 && report.exceptions.front().lambda == flagged,
              tag + "expected exactly one two-row exception " + str(flagged));
    }
}

void closed_forms(Checker& check) {
    for (int n = 1; n <= 8; ++n) {
        const std::string tag = "n=" + std::to_string(n) + ": ";
        check(plethysm(h(n), h(2)) == littlewood_hn_h2(n), tag + "h_n[h_2] differs from the even-shape sum");
        check(plethysm(h(n), SchurPolynomial::elementary(2)) == littlewood_hn_e2(n),
              tag + "h_n[e_2] differs from the even-column sum");
        const SchurPolynomial p2 = power_plethysm(2, h(n));
        check(p2 == p2_hn(n), tag + "p_2[h_n] differs from the alternating two-row sum");
    }
    for (int k = 1; k <= 5; ++k) {
        for (int n = 1; n <= 5; ++n) {
            check(power_plethysm(k, h(n)) == chen_pk_hn(k, n),
                  "k=" + std::to_string(k) + " n=" + std::to_string(n) + ": p_k[h_n] differs from the tabloid sum");
        }
    }
}

void hook_length_formula(Checker& check) {
    for (int n = 1; n <= 7; ++n) {
        for (const RootedForest& tau : enumerate_forests(n)) {
            const std::string tag = "forest \"" + tau.code() + "\": ";
            const BigInt dim = dim_odun(tau);
            if (n <= 6) {
                const BigInt stab = stabilizer_bruteforce(nilpotent_from_forest(tau)).order;
                check(dim * stab == factorial(n), tag + "n!/|Stab| = " + BigInt(factorial(n) / stab).get_str() +
                                                      ", formula " + dim.get_str());
            }
            check(dim == dim_rep(frobenius_forest(tau), n), tag + "formula disagrees with dim_rep(F_tau)");
        }
    }
}

void master_formula(Checker& check) {
    for (int n = 1; n <= 6; ++n) {
        for (const LoopAugmentedForest& f : enumerate_loop_augmented(n, true)) {
            const std::string tag = "sigma=" + str(f.sigma_type) + " forest=\"" + f.forest.code() + "\": ";
            const PartialTransformation map = from_block_form(f);
            const auto [nu, tau] = split_block(map);
            check(nu == f.sigma_type && tau == f.forest, tag + "block decomposition does not round-trip");
            const OdunCharacter exact = frobenius_loop(f, CharacterMode::exact);
            check(exact.character == perm_character_decompose(map), tag + "exact mode differs from the orbit oracle");
            const std::size_t orbit_size = orbit(map).size();
            const BigInt dim = dim_loop(f);
            check(dim == orbit_size, tag + "dim_loop " + dim.get_str() + " != orbit size " + std::to_string(orbit_size));
            const BigInt published = dim_loop_as_published(f);
            check(published == orbit_size, tag + "published closed form gives " + published.get_str() + ", orbit size " +
                                               std::to_string(orbit_size));
        }
    }
}

// Blossoming forests on at most five vertices, as drawn.
const std::map<int, std::set<std::string>>& blossoming_inventory() {
    static const std::map<int, std::set<std::string>> inventory = [] {
        const std::map<int, std::vector<std::string>> drawn = {
            {1, {"()"}},
            {2, {"(())"}},
            {3, {"((()))", "(())()"}},
            {4, {"(((())))", "((()))()", "((())())", "(())(())"}},
            {5,
             {"((((()))))", "(((())))()", "(((())()))", "((())(()))", "((())())()", "(((()))())", "((()))(())",
              "(())(())()"}}};
        std::map<int, std::set<std::string>> out;
        for (const auto& [n, codes] : drawn) {
            for (const std::string& c : codes) out[n].insert(parse_forest(c).code());
        }
        return out;
    }();
    return inventory;
}

void sign_machinery(Checker& check) {
    for (int n = 2; n <= 10; ++n) {
        long count = 0;
        for (const RootedForest& f : enumerate_forests(n)) count += is_blossoming(f);
        check(count == (1L << (n - 2)), "n=" + std::to_string(n) + ": " + std::to_string(count) +
                                             " blossoming forests, expected " + std::to_string(1L << (n - 2)));
    }
    for (const auto& [n, expected] : blossoming_inventory()) {
        std::set<std::string> found;
        for (const RootedForest& f : enumerate_forests(n)) {
            if (is_blossoming(f)) found.insert(f.code());
        }
        check(found == expected, "n=" + std::to_string(n) + ": blossoming forests differ from the drawn inventory");
    }
    for (int n = 1; n <= 7; ++n) {
        for (const RootedForest& f : enumerate_forests(n)) {
            const BigInt sign = frobenius_forest(f).coefficient(rectangle(1, n));
            check((sign == 1) == is_blossoming(f) && sign <= 1,
                  "forest \"" + f.code() + "\": blossoming=" + std::to_string(is_blossoming(f)) + " but sign multiplicity " +
                      sign.get_str());
        }
    }
    for (int n = 2; n <= 12; ++n) {
        const SignCensus census = sign_census(n, CharacterMode::paper);
        const BigInt expected = ipow(2, n - 1) - 1;
        check(census.total == expected, "n=" + std::to_string(n) + ": paper-mode census total " + census.total.get_str() +
                                            ", expected " + expected.get_str());
    }
}

void discrepancy_report(Checker& check) {
    const std::vector<ModeDiscrepancy> found = mode_discrepancies(6);
    check(!found.empty(), "no discrepancies between the modes were reported");
    Json report = Json::array();
    for (const ModeDiscrepancy& d : found) {
        const std::string tag = "sigma=" + str(d.source.sigma_type) + " forest=\"" + d.source.forest.code() + "\": ";
        const SchurPolynomial oracle = perm_character_decompose(from_block_form(d.source));
        check(oracle == d.exact && oracle != d.paper, tag + "oracle does not side with exact mode");
        Json entry = to_json(d.source);
        entry["paper"] = to_json(d.paper);
        entry["exact"] = to_json(d.exact);
        report.push_back(std::move(entry));
    }
    check(report.size() == found.size() && !report.dump().empty(), "structured report could not be generated");
    // The smallest case: two loops, no forest.
    const auto two_loops = LoopAugmentedForest::with_loops(2, RootedForest());
    const bool listed = std::any_of(found.begin(), found.end(), [&](const ModeDiscrepancy& d) { return d.source == two_loops; });
    check(listed, "two fixed points (paper s_(1,1), exact s_(2)) not listed");
}

void semigroup_layer(Checker& check) {
    for (int n = 1; n <= 6; ++n) {
        for (Monoid which : {Monoid::partial, Monoid::full}) {
            const BigInt formula = idempotent_count(n, which);
            const BigInt brute = count_idempotents_exhaustive(n, which);
            check(formula == brute, std::string(which == Monoid::partial ? "P_" : "T_") + std::to_string(n) + ": formula " +
                                        formula.get_str() + ", enumeration " + brute.get_str());
        }
    }
    const StandardForm small = standardize_idempotent(parse_map("3,0,3"));
    check(block_descriptor(small.blocks, small.zero_rank) == "c2+z1", "3x3 example: standard form is not c2+z1");
    check(transposition_product(small.transpositions) == "(2,3)(1,3)", "3x3 example: witness is not (2,3)(1,3)");
    check(to_string(small.standard) == "1,1,0", "3x3 example: standard map is not 1,1,0");

    const StandardForm big = standardize_idempotent(parse_map("7,2,0,2,5,2,7"));
    const std::vector<std::pair<int, int>> sweep = {{1, 2}, {2, 4}, {3, 6}, {4, 5}, {5, 7}, {6, 7}};
    check(big.transpositions.size() >= sweep.size() &&
              std::equal(sweep.begin(), sweep.end(), big.transpositions.begin()),
          "7x7 example: sweep is not (1,2),(2,4),(3,6),(4,5),(5,7),(6,7)");
    check(block_descriptor(big.sweep_blocks, big.zero_rank) == "c3+c1+c2+z1", "7x7 example: sweep does not end at c3+c1+c2+z1");
    check(block_descriptor(big.blocks, big.zero_rank) == "c3+c2+c1+z1", "7x7 example: sorted form is not c3+c2+c1+z1");
    check(to_string(big.standard) == "1,1,1,4,4,6,0", "7x7 example: standard map is not c3+c2+c1+z1");

    for (int n = 1; n <= 5; ++n) {
        for_each_partial_map(n, [&](const std::vector<int>& images) {
            const PartialTransformation e(images);
            if (!e.is_idempotent()) return;
            const WreathDecomposition w = stabilizer_of_idempotent(e);
            const BigInt brute = stabilizer_bruteforce(e).order;
            check(w.order == brute, "e=" + to_string(e) + ": wreath order " + w.order.get_str() + ", brute force " +
                                        brute.get_str());
        });
    }
}

void counting_formulas(Checker& check) {
    for (int n = 1; n <= 7; ++n) {
        const std::vector<BigInt> forests = count_nilpotent_by_roots(n);
        const std::vector<BigInt> looped = count_loop_augmented_by_roots(n);
        BigInt total = 0;
        for (int k = 1; k <= n; ++k) {
            const std::string tag = "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": ";
            check(forests[k] == count_labeled(n, k), tag + "labeled forests " + forests[k].get_str() + ", formula " +
                                                         count_labeled(n, k).get_str());
            check(looped[k] == count_loop_augmented(n, k), tag + "loop-augmented " + looped[k].get_str() + ", formula " +
                                                               count_loop_augmented(n, k).get_str());
            total += looped[k];
        }
        check(forests[0] == 0 && looped[0] == 0, "n=" + std::to_string(n) + ": a rootless forest was enumerated");
        if (n >= 2) {
            const BigInt closed = count_loop_augmented_total(n);
            check(total == closed, "n=" + std::to_string(n) + ": " + total.get_str() +
                                       " loop-augmented forests enumerated, 2n^(n-3) = " + closed.get_str());
        }
    }
}

SchurPolynomial random_homogeneous(std::mt19937& rng, int degree, int max_terms) {
    const std::vector<Partition> shapes = partitions_of(degree);
    std::uniform_int_distribution<std::size_t> pick(0, shapes.size() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> count(1, max_terms);
    SchurPolynomial f;
    const int terms = count(rng);
    for (int t = 0; t < terms; ++t) f.add_term(shapes[pick(rng)], coeff(rng));
    if (f.is_zero()) f.add_term(shapes[pick(rng)], 1);
    return f;
}

void algebra_properties(Checker& check) {
    std::mt19937 rng(20240601);
    std::uniform_int_distribution<int> degree(1, 8);
    for (int trial = 0; trial < 40; ++trial) {
        const SchurPolynomial f = random_homogeneous(rng, degree(rng), 3);
        const SchurPolynomial g = random_homogeneous(rng, degree(rng), 3);
        check(multiply(f, g) == multiply(g, f), "fg != gf for f=" + to_string(f) + ", g=" + to_string(g));
    }
    std::uniform_int_distribution<int> small(1, 4);
    for (int trial = 0; trial < 25; ++trial) {
        const SchurPolynomial f = random_homogeneous(rng, small(rng), 3);
        const SchurPolynomial g = random_homogeneous(rng, small(rng), 3);
        const SchurPolynomial k = random_homogeneous(rng, small(rng), 3);
        check(multiply(multiply(f, g), k) == multiply(f, multiply(g, k)), "(fg)h != f(gh) for f=" + to_string(f) +
                                                                              ", g=" + to_string(g) + ", h=" + to_string(k));
    }
    std::vector<Partition> shapes;
    for (int w = 0; w <= 6; ++w) {
        for (const Partition& p : partitions_of(w)) shapes.push_back(p);
    }
    for (const Partition& lambda : shapes) {
        for (const Partition& mu : shapes) {
            check(skew_expand(stacked_shape(lambda, mu)) == schur_product(lambda, mu),
                  "s_" + str(lambda) + " s_" + str(mu) + " differs from the skew expansion of the stacked shape");
        }
    }
    for (int d = 0; d <= 8; ++d) {
        for (const Partition& lambda : partitions_of(d)) {
            const SchurPolynomial s = SchurPolynomial::schur(lambda);
            check(power_to_schur(schur_to_power(s)) == s, "round trip fails for s_" + str(lambda));
        }
    }
    for (int trial = 0; trial < 20; ++trial) {
        const SchurPolynomial f = random_homogeneous(rng, degree(rng), 6) + random_homogeneous(rng, degree(rng), 6);
        check(power_to_schur(schur_to_power(f)) == f, "round trip fails for " + to_string(f));
    }
    for (int n = 0; n <= 7; ++n) {
        const std::vector<Partition> classes = partitions_of(n);
        for (const Partition& mu : classes) {
            for (const Partition& nu : classes) {
                BigInt sum = 0;
                for (const Partition& lambda : classes) sum += char_value(lambda, mu) * char_value(lambda, nu);
                const BigInt expected = mu == nu ? centralizer_order(mu) : BigInt(0);
                check(sum == expected, "column orthogonality fails for " + str(mu) + ", " + str(nu));
            }
        }
    }
}

struct Criterion {
    std::string title;
    double budget_seconds;
    std::function<void(Checker&)> run;
};

const std::map<int, Criterion>& registry() {
    static const std::map<int, Criterion> criteria = {
        {1, {"closed form of h_2[h_1 h_{n-1}] matches the engine, n=3..8", 60, theorem_expansion}},
        {2, {"h_n[h_1 h_1] >= h_2[h_1 h_{n-1}] on shapes with >= 3 parts, (2n-2,2) gives (2,3), n=3..7", 300, foulkes_m2}},
        {3, {"plethysm matches Littlewood (n<=8), Chen (k,n<=5) and p_2[h_n] (n<=8)", 60, closed_forms}},
        {4, {"forest dimension formula matches brute-force stabilizers (n<=6) and dim_rep(F_tau) (n<=7)", 120,
             hook_length_formula}},
        {5, {"exact-mode characters and dimensions match the orbit oracle for all block forms, n<=6", 300,
             master_formula}},
        {6, {"blossoming counts and inventory, blossoming <=> sign, paper-mode census totals", 120, sign_machinery}},
        {7, {"paper/exact mode discrepancies are reported and oracle-confirmed, n<=6", 120, discrepancy_report}},
        {8, {"idempotent counts, standardization examples, stabilizer orders", 180, semigroup_layer}},
        {9, {"labeled and loop-augmented forest counts match exhaustive enumeration, n<=7", 120, counting_formulas}},
        {10, {"multiplication laws, skew/product agreement, s<->p round trip, orthogonality", 120, algebra_properties}},
    };
    return criteria;
}

}  // namespace

std::vector<int> criterion_ids() {
    std::vector<int> ids;
    for (const auto& [id, c] : registry()) ids.push_back(id);
    return ids;
}

std::string criterion_title(int id) {
    auto it = registry().find(id);
    if (it == registry().end()) throw std::out_of_range("no acceptance criterion " + std::to_string(id));
    return it->second.title;
}

CriterionResult run_criterion(int id) {
    auto it = registry().find(id);
    if (it == registry().end()) throw std::out_of_range("no acceptance criterion " + std::to_string(id));
    CriterionResult result;
    result.id = id;
    result.title = it->second.title;
    result.budget_seconds = it->second.budget_seconds;
    Checker check(result);
    const auto start = std::chrono::steady_clock::now();
    try {
        it->second.run(check);
    } catch (const std::exception& e) {
        check(false, std::string("exception: ") + e.what());
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check(result.seconds <= result.budget_seconds, "exceeded the time budget");
    result.passed = result.failures.empty();
    return result;
}

std::string format_result(const CriterionResult& r, bool with_timing, std::size_t max_failures) {
    std::ostringstream out;
    out << "criterion " << r.id << ' ' << (r.passed ? "PASS" : "FAIL") << "  " << r.title << " (" << r.checks << " checks";
    if (!r.failures.empty()) out << ", " << r.failures.size() << " failed";
    out << ")";
    if (with_timing) out << " [" << r.seconds << " s of " << r.budget_seconds << " s]";
    out << '\n';
    for (std::size_t i = 0; i < r.failures.size() && i < max_failures; ++i) out << "    " << r.failures[i] << '\n';
    if (r.failures.size() > max_failures) out << "    ... " << r.failures.size() - max_failures << " more\n";
    return out.str();
}

}  // namespace odun
