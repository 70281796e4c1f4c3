#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "odun/acceptance.hpp"
#include "odun/expression.hpp"
#include "odun/forest.hpp"
#include "odun/foulkes.hpp"
#include "odun/odun_characters.hpp"
#include "odun/orbit_oracle.hpp"
#include "odun/plethysm.hpp"
#include "odun/power_sum.hpp"
#include "odun/schur.hpp"
#include "odun/serialize.hpp"
#include "odun/transformation.hpp"

namespace {

using namespace odun;

// Raised for invalid command-line input; mapped to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { json, csv, text };

void emit(Format format, const Json& json, const std::string& csv, const std::string& text) {
    switch (format) {
        case Format::json: std::cout << json.dump(2) << '\n'; break;
        case Format::csv: std::cout << csv; break;
        case Format::text: std::cout << text; break;
    }
}

std::string csv_terms(const SchurPolynomial& f) {
    std::ostringstream out;
    out << "partition,coeff\n";
    for (const auto& [lambda, c] : f.terms()) out << '"' << to_string(lambda) << "\"," << c.get_str() << '\n';
    return out.str();
}

void emit_polynomial(Format format, const SchurPolynomial& f) {
    emit(format, to_json(f), csv_terms(f), to_string(f) + '\n');
}

LoopAugmentedForest loop_forest(const std::string& forest, int loops, const std::string& sigma) {
    const RootedForest tau = parse_forest(forest);
    if (sigma.empty()) return LoopAugmentedForest::with_loops(loops, tau);
    const Partition nu = parse_partition(sigma);
    if (loops != 0 && loops != nu.weight()) throw UsageError("--loops must equal the weight of --sigma");
    return LoopAugmentedForest::block_form(nu, tau);
}

PartialTransformation small_map(const std::string& text) {
    const PartialTransformation f = parse_map(text);
    if (f.size() > kOracleCap) throw UsageError("brute force supports maps on at most " + std::to_string(kOracleCap) + " points");
    return f;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact symmetric functions, forest characters and the Foulkes-variant harness"};
    app.require_subcommand(1);
    app.fallthrough();
    Format format = Format::text;
    const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"text", Format::text}};
    app.add_option("--format", format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->default_str("text");

    std::vector<std::string> factors;
    auto* mult = app.add_subcommand("mult", "Multiply expressions in the Schur basis");
    mult->add_option("expr", factors, "Expressions such as \"s[2,1]\" or \"h[2]*e[1]\"")->required();

    std::string skew;
    auto* expand = app.add_subcommand("expand-skew", "Schur expansion of a skew shape");
    expand->add_option("shape", skew, "Skew shape \"lambda/mu\", e.g. \"4,3,2,2/2,2,1\"")->required();

    std::string outer, inner;
    bool power_basis = false;
    auto* pleth = app.add_subcommand("plethysm", "Plethysm outer[inner]");
    pleth->add_option("--outer", outer, "Outer expression")->required();
    pleth->add_option("--inner", inner, "Inner expression")->required();
    pleth->add_flag("--power", power_basis, "Print the result in the power-sum basis");

    std::string forest, sigma;
    int loops = 0;
    std::string mode_text = "exact";
    auto* fchar = app.add_subcommand("forest-char", "Frobenius characteristic of a (loop-augmented) forest");
    fchar->add_option("--forest", forest, "Forest string, e.g. \"(()())()\"")->required();
    fchar->add_option("--loops", loops, "Number of loops")->check(CLI::NonNegativeNumber);
    fchar->add_option("--sigma", sigma, "Cycle type of the permutation block");
    fchar->add_option("--mode", mode_text, "paper|exact")->check(CLI::IsMember({"paper", "exact"}));

    auto* dim = app.add_subcommand("dim", "Dimension of the orbit module of a (loop-augmented) forest");
    dim->add_option("--forest", forest, "Forest string")->required();
    dim->add_option("--loops", loops, "Number of loops")->check(CLI::NonNegativeNumber);
    dim->add_option("--sigma", sigma, "Cycle type of the permutation block");

    int n = 0;
    std::string census_mode = "paper";
    auto* census = app.add_subcommand("sign-census", "Count loop-augmented forests affording the sign character");
    census->add_option("--n", n, "Number of vertices")->required()->check(CLI::Range(1, 12));
    census->add_option("--mode", census_mode, "paper|exact")->check(CLI::IsMember({"paper", "exact"}));

    std::string map_text;
    auto* idem = app.add_subcommand("idem-std", "Standard form of an idempotent partial map");
    idem->add_option("--map", map_text, "Images of 1..n, 0 = undefined, e.g. \"3,0,3\"")->required();

    std::string what = "char";
    auto* oracle = app.add_subcommand("oracle", "Brute-force conjugation orbit, permutation character or stabilizer");
    oracle->add_option("--map", map_text, "Images of 1..n, 0 = undefined")->required();
    oracle->add_option("--what", what, "orbit|char|stab")->check(CLI::IsMember({"orbit", "char", "stab"}));

    int m = 0;
    bool timing = false;
    auto* foulkes = app.add_subcommand("foulkes", "Compare h_n[h_1 h_{m-1}] with h_m[h_1 h_{n-1}]");
    foulkes->add_option("--m", m, "m >= 2")->required();
    foulkes->add_option("--n", n, "n >= m")->required();
    foulkes->add_flag("--timing", timing, "Include wall-clock time");

    std::vector<int> only;
    auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
    verify->add_option("--only", only, "Criterion ids to run (default: all)")->check(CLI::Range(1, 10));
    verify->add_flag("--timing", timing, "Include wall-clock time");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*mult) {
            SchurPolynomial product = SchurPolynomial::one();
            for (const std::string& f : factors) product = multiply(product, parse_expression(f));
            emit_polynomial(format, product);
        } else if (*expand) {
            emit_polynomial(format, skew_expand(parse_skew(skew)));
        } else if (*pleth) {
            const SchurPolynomial result = plethysm(parse_expression(outer), parse_expression(inner));
            if (power_basis) {
                const PowerSumPolynomial p = schur_to_power(result);
                std::ostringstream csv;
                csv << "partition,coeff\n";
                for (const auto& [mu, c] : p.terms()) csv << '"' << to_string(mu) << "\"," << to_string(c) << '\n';
                emit(format, to_json(p), csv.str(), to_string(p) + '\n');
            } else {
                emit_polynomial(format, result);
            }
        } else if (*fchar) {
            const OdunCharacter c = frobenius_loop(loop_forest(forest, loops, sigma), parse_mode(mode_text));
            Json json = to_json(c.source);
            json["mode"] = to_string(c.mode);
            json["character"] = to_json(c.character);
            json["dim"] = json_integer(c.dim);
            emit(format, json, csv_terms(c.character), to_string(c.character) + "\ndim " + c.dim.get_str() + '\n');
        } else if (*dim) {
            const LoopAugmentedForest f = loop_forest(forest, loops, sigma);
            const BigInt d = dim_loop(f);
            const BigInt published = dim_loop_as_published(f);
            Json json = to_json(f);
            json["dim"] = json_integer(d);
            json["published_formula"] = json_integer(published);
            std::ostringstream csv;
            csv << "dim,published_formula\n" << d.get_str() << ',' << published.get_str() << '\n';
            std::string text = d.get_str() + '\n';
            if (published != d) text += "published closed form gives " + published.get_str() + '\n';
            emit(format, json, csv.str(), text);
        } else if (*census) {
            const SignCensus result = sign_census(n, parse_mode(census_mode));
            emit(format, to_json(result), to_csv(result), to_text(result));
        } else if (*idem) {
            const PartialTransformation e = parse_map(map_text);
            if (!e.is_idempotent()) throw UsageError("map " + to_string(e) + " is not idempotent");
            const StandardForm st = standardize_idempotent(e);
            const WreathDecomposition w = stabilizer_of_idempotent(e);
            Json json = to_json(st);
            json["stabilizer_order"] = json_integer(w.order);
            if (!w.note.empty()) json["note"] = w.note;
            std::ostringstream csv;
            csv << "standard_form,witness,map,stabilizer_order\n"
                << block_descriptor(st.blocks, st.zero_rank) << ",\"" << transposition_product(st.transpositions) << "\",\""
                << to_string(st.standard) << "\"," << w.order.get_str() << '\n';
            std::ostringstream text;
            text << block_descriptor(st.blocks, st.zero_rank) << '\n'
                 << "witness " << transposition_product(st.transpositions) << '\n'
                 << "map " << to_string(st.standard) << '\n'
                 << "stabilizer order " << w.order.get_str() << '\n';
            if (!w.note.empty()) text << "note: " << w.note << '\n';
            emit(format, json, csv.str(), text.str());
        } else if (*oracle) {
            const PartialTransformation f = small_map(map_text);
            if (what == "char") {
                emit_polynomial(format, perm_character_decompose(f));
            } else if (what == "orbit") {
                const std::vector<PartialTransformation> points = orbit(f);
                Json maps = Json::array();
                std::string lines;
                for (const PartialTransformation& g : points) {
                    maps.push_back(to_string(g));
                    lines += to_string(g) + '\n';
                }
                emit(format, Json{{"map", to_string(f)}, {"size", points.size()}, {"orbit", std::move(maps)}},
                     "map\n" + lines, "orbit size " + std::to_string(points.size()) + '\n' + lines);
            } else {
                const BruteForceStabilizer stab = stabilizer_bruteforce(f);
                Json elements = Json::array();
                std::string lines;
                for (const Permutation& p : stab.elements) {
                    elements.push_back(to_cycle_string(p));
                    lines += to_cycle_string(p) + '\n';
                }
                emit(format, Json{{"map", to_string(f)}, {"order", json_integer(stab.order)}, {"elements", std::move(elements)}},
                     "element\n" + lines, "stabilizer order " + stab.order.get_str() + '\n' + lines);
            }
        } else if (*foulkes) {
            const ComparisonReport report = foulkes_compare(m, n, timing);
            emit(format, to_json(report), to_csv(report), to_text(report));
        } else if (*verify) {
            if (only.empty()) only = criterion_ids();
            Json results = Json::array();
            std::ostringstream csv, text;
            csv << "criterion,verdict,checks,failed" << (timing ? ",seconds" : "") << '\n';
            bool all = true;
            for (int id : only) {
                const CriterionResult r = run_criterion(id);
                all = all && r.passed;
                Json entry{{"criterion", r.id}, {"title", r.title}, {"passed", r.passed}, {"checks", r.checks},
                           {"failures", r.failures}};
                if (timing) entry["seconds"] = r.seconds;
                results.push_back(std::move(entry));
                csv << r.id << ',' << (r.passed ? "PASS" : "FAIL") << ',' << r.checks << ',' << r.failures.size();
                if (timing) csv << ',' << r.seconds;
                csv << '\n';
                text << format_result(r, timing);
            }
            emit(format, results, csv.str(), text.str());
            return all ? 0 : 1;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "assertion failed: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
