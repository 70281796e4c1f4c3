#pragma once

#include <json.hpp>
#include <string>

#include "odun/foulkes.hpp"
#include "odun/odun_characters.hpp"
#include "odun/power_sum.hpp"
#include "odun/schur.hpp"
#include "odun/transformation.hpp"

namespace odun {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json json_integer(const BigInt& v);
Json json_partition(const Partition& lambda);

/// {"basis":"schur","terms":[{"partition":[4,2],"coeff":3},...]}
Json to_json(const SchurPolynomial& f);
/// {"basis":"power","terms":[{"partition":[2,1],"coeff":{"num":1,"den":2}},...]}
Json to_json(const PowerSumPolynomial& f);

/// {"loops":k,"sigma":[...],"forest":"..."}
Json to_json(const LoopAugmentedForest& f);

/// {"n":..,"mode":..,"per_k":[..],"total":..,"discrepancies":[..]} plus the
/// boundary counts and the other mode's counts.
Json to_json(const SignCensus& census);
std::string to_csv(const SignCensus& census);
std::string to_text(const SignCensus& census);

Json to_json(const ComparisonReport& report);
/// Columns lambda,lhs,rhs,verdict.
std::string to_csv(const ComparisonReport& report);
std::string to_text(const ComparisonReport& report);

Json to_json(const StandardForm& form);

}  // namespace odun
