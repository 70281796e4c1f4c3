#include "odun/serialize.hpp"

#include <sstream>

namespace odun {

Json json_integer(const BigInt& v) {
    if (fits_int64(v)) return to_int64(v);
    return v.get_str();
}

Json json_partition(const Partition& lambda) {
    Json out = Json::array();
    for (int p : lambda.parts()) out.push_back(p);
    return out;
}

Json to_json(const SchurPolynomial& f) {
    Json terms = Json::array();
    for (const auto& [lambda, c] : f.terms()) {
        terms.push_back({{"partition", json_partition(lambda)}, {"coeff", json_integer(c)}});
    }
    return {{"basis", "schur"}, {"terms", std::move(terms)}};
}

Json to_json(const PowerSumPolynomial& f) {
    Json terms = Json::array();
    for (const auto& [lambda, c] : f.terms()) {
        Json coeff = {{"num", json_integer(c.get_num())}, {"den", json_integer(c.get_den())}};
        terms.push_back({{"partition", json_partition(lambda)}, {"coeff", std::move(coeff)}});
    }
    return {{"basis", "power"}, {"terms", std::move(terms)}};
}

Json to_json(const LoopAugmentedForest& f) {
    return {{"loops", f.loops}, {"sigma", json_partition(f.sigma_type)}, {"forest", f.forest.code()}};
}

Json to_json(const SignCensus& census) {
    Json per_k = Json::array();
    for (const BigInt& c : census.per_k) per_k.push_back(json_integer(c));
    Json other = Json::array();
    for (const BigInt& c : census.other_per_k) other.push_back(json_integer(c));
    Json discrepancies = Json::array();
    for (const SignDiscrepancy& d : census.discrepancies) {
        Json entry = to_json(d.source);
        entry["paper_sign"] = json_integer(d.paper_sign);
        entry["exact_sign"] = json_integer(d.exact_sign);
        discrepancies.push_back(std::move(entry));
    }
    const std::string other_mode = census.mode == CharacterMode::paper ? "exact" : "paper";
    return {{"n", census.n},
            {"mode", to_string(census.mode)},
            {"per_k", std::move(per_k)},
            {"total", json_integer(census.total)},
            {"discrepancies", std::move(discrepancies)},
            {"k_n_minus_1", json_integer(census.k_n_minus_1)},
            {"k_n", json_integer(census.k_n)},
            {"other_mode", {{"mode", other_mode}, {"per_k", std::move(other)}, {"total", json_integer(census.other_total)}}}};
}

std::string to_csv(const SignCensus& census) {
    std::ostringstream out;
    out << "k," << to_string(census.mode) << ',' << (census.mode == CharacterMode::paper ? "exact" : "paper") << '\n';
    for (std::size_t k = 0; k < census.per_k.size(); ++k) {
        out << k << ',' << census.per_k[k].get_str() << ',' << census.other_per_k[k].get_str() << '\n';
    }
    out << "total," << census.total.get_str() << ',' << census.other_total.get_str() << '\n';
    return out.str();
}

std::string to_text(const SignCensus& census) {
    std::ostringstream out;
    const std::string other = census.mode == CharacterMode::paper ? "exact" : "paper";
    out << "sign census n=" << census.n << " mode=" << to_string(census.mode) << '\n';
    for (std::size_t k = 0; k < census.per_k.size(); ++k) {
        out << "  k=" << k << ": " << census.per_k[k].get_str() << "  (" << other << ": " << census.other_per_k[k].get_str()
            << ")\n";
    }
    out << "  total (k <= n-2): " << census.total.get_str() << "  (" << other << ": " << census.other_total.get_str()
        << ")\n";
    out << "  k=n-1: " << census.k_n_minus_1.get_str() << "  k=n: " << census.k_n.get_str() << '\n';
    out << "  discrepancies: " << census.discrepancies.size() << '\n';
    for (const SignDiscrepancy& d : census.discrepancies) {
        out << "    loops=" << d.source.loops << " forest=\"" << d.source.forest.code() << "\" paper=" << d.paper_sign.get_str()
            << " exact=" << d.exact_sign.get_str() << '\n';
    }
    return out.str();
}

namespace {

Json row_json(const ComparisonRow& row) {
    return {{"lambda", json_partition(row.lambda)},
            {"lhs", json_integer(row.lhs)},
            {"rhs", json_integer(row.rhs)},
            {"verdict", to_string(row.verdict)}};
}

}  // namespace

Json to_json(const ComparisonReport& report) {
    Json rows = Json::array();
    for (const ComparisonRow& row : report.rows) rows.push_back(row_json(row));
    Json exceptions = Json::array();
    for (const ComparisonRow& row : report.exceptions) exceptions.push_back(row_json(row));
    Json out = {{"m", report.m},
                {"n", report.n},
                {"rows", std::move(rows)},
                {"exceptions", std::move(exceptions)},
                {"all_pass", report.all_pass}};
    if (report.seconds) out["seconds"] = *report.seconds;
    return out;
}

std::string to_csv(const ComparisonReport& report) {
    std::ostringstream out;
    out << "lambda,lhs,rhs,verdict\n";
    for (const ComparisonRow& row : report.rows) {
        out << '"' << to_string(row.lambda) << "\"," << row.lhs.get_str() << ',' << row.rhs.get_str() << ','
            << to_string(row.verdict) << '\n';
    }
    return out.str();
}

std::string to_text(const ComparisonReport& report) {
    std::ostringstream out;
    out << "h_" << report.n << "[h_1 h_" << report.m - 1 << "] vs h_" << report.m << "[h_1 h_" << report.n - 1 << "]\n";
    for (const ComparisonRow& row : report.rows) {
        out << "  (" << to_string(row.lambda) << ")  " << row.lhs.get_str() << "  " << row.rhs.get_str() << "  "
            << to_string(row.verdict) << '\n';
    }
    out << "shapes with >= 3 parts: " << (report.all_pass ? "all PASS" : "some FAIL") << '\n';
    for (const ComparisonRow& row : report.exceptions) {
        out << "exception: (" << to_string(row.lambda) << ") lhs=" << row.lhs.get_str() << " rhs=" << row.rhs.get_str()
            << '\n';
    }
    if (report.seconds) out << "elapsed: " << *report.seconds << " s\n";
    return out.str();
}

Json to_json(const StandardForm& form) {
    Json blocks = Json::array();
    for (int b : form.blocks) blocks.push_back(b);
    Json sweep = Json::array();
    for (int b : form.sweep_blocks) sweep.push_back(b);
    return {{"standard_form", block_descriptor(form.blocks, form.zero_rank)},
            {"before_sort", block_descriptor(form.sweep_blocks, form.zero_rank)},
            {"witness", transposition_product(form.transpositions)},
            {"witness_cycles", to_cycle_string(form.witness)},
            {"map", to_string(form.standard)},
            {"blocks", std::move(blocks)},
            {"zero_rank", form.zero_rank}};
}

}  // namespace odun
