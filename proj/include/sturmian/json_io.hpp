#pragma once

#include "sturmian/exponent.hpp"
#include "sturmian/oracle.hpp"

#include <json.hpp>

namespace sturmian {

using json = nlohmann::ordered_json;

// integers travel as decimal strings; plain JSON integers are accepted on input
Integer integer_from_json(const json& j, const char* what);
json integer_list(const std::vector<Integer>& xs);
std::vector<Integer> integer_list_from_json(const json& j, const char* what);
std::string fraction_str(const Rational& x);

json slope_to_json(const SlopeSpec& spec);
// {"preperiod":[...],"period":[...],"horizon":K}; horizon may be omitted for finite lists
SlopeSpec slope_from_json(const json& j);

json digits_to_json(const InterceptDigits& d);
json degenerate_to_json(const DegenerateIntercept& d);
json digit_report_to_json(const DigitReport& r);

json cf_to_json(const CFExpansion& cf);
json convergents_to_json(const std::vector<ConvergentPair>& cs);
json verify_to_json(const VerifyReport& r);
json nu_to_json(const NuRow& row);
json strong_to_json(const StrongReport& rep);
json estimate_to_json(const ExponentEstimate& est);
json liouville_to_json(const LiouvilleReport& rep);

}  // namespace sturmian
