#include "sturmian/json_io.hpp"

namespace sturmian {

Integer integer_from_json(const json& j, const char* what) {
  if (j.is_string()) return parse_integer(j.get<std::string>());
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  fail_input(std::string(what) + ": expected an integer or a decimal string");
}

json integer_list(const std::vector<Integer>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(to_dec(x));
  return out;
}

std::vector<Integer> integer_list_from_json(const json& j, const char* what) {
  if (!j.is_array()) fail_input(std::string(what) + ": expected an array");
  std::vector<Integer> out;
  for (const auto& x : j) out.push_back(integer_from_json(x, what));
  return out;
}

std::string fraction_str(const Rational& x) {
  Rational y = x;
  y.canonicalize();
  return to_dec(y.get_num()) + "/" + to_dec(y.get_den());
}

json slope_to_json(const SlopeSpec& spec) {
  return json{{"preperiod", integer_list(spec.preperiod)},
              {"period", integer_list(spec.period)},
              {"horizon", spec.horizon}};
}

SlopeSpec slope_from_json(const json& j) {
  if (!j.is_object()) fail_input("slope: expected an object");
  SlopeSpec spec;
  if (j.contains("preperiod")) spec.preperiod = integer_list_from_json(j["preperiod"], "slope.preperiod");
  if (j.contains("period")) spec.period = integer_list_from_json(j["period"], "slope.period");
  if (j.contains("horizon")) {
    if (!j["horizon"].is_number_integer()) fail_input("slope.horizon: expected an integer");
    spec.horizon = j["horizon"].get<int>();
  } else if (spec.period.empty()) {
    spec.horizon = static_cast<int>(spec.preperiod.size());
  } else {
    fail_input("slope.horizon is required for a periodic slope");
  }
  spec.validate();
  return spec;
}

json digits_to_json(const InterceptDigits& d) {
  return json{{"digits", integer_list(d.b)}, {"terminating", d.terminating}};
}

json degenerate_to_json(const DegenerateIntercept& d) {
  return json{{"m", to_dec(d.m)},
              {"p", to_dec(d.p)},
              {"l", d.l},
              {"b", digits_to_json(d.b)},
              {"b_prime", digits_to_json(d.b_prime)},
              {"lower", d.l % 2 != 0 ? "b" : "b_prime"},
              {"upper", d.l % 2 != 0 ? "b_prime" : "b"}};
}

json digit_report_to_json(const DigitReport& r) {
  json out{{"valid", r.valid}, {"checked", r.checked}};
  if (r.first_violation) {
    out["firstViolation"] = *r.first_violation;
    out["reason"] = r.reason;
  }
  out["forbiddenTailShape"] = r.forbidden_tail_shape;
  if (r.forbidden_tail_start) out["forbiddenTailStart"] = *r.forbidden_tail_start;
  out["tailConditionUnverifiable"] = r.tail_condition_unverifiable;
  return out;
}

json cf_to_json(const CFExpansion& cf) {
  json terms = json::array(), prov = json::array();
  for (const auto& t : cf.terms) {
    terms.push_back(to_dec(t.value));
    prov.push_back(json{{"term", to_dec(t.value)},
                        {"family", t.tag.str()},
                        {"k", t.tag.k},
                        {"shape", t.shape}});
  }
  return json{{"K", cf.K}, {"head", to_dec(cf.full.head)}, {"terms", terms}, {"provenance", prov}};
}

json convergents_to_json(const std::vector<ConvergentPair>& cs) {
  json out = json::array();
  for (const auto& c : cs)
    out.push_back(json{{"j", c.j}, {"P", to_dec(c.P)}, {"Q", to_dec(c.Q)}, {"family", c.tag.str()}});
  return out;
}

json verify_to_json(const VerifyReport& r) {
  return json{{"N", std::to_string(r.N)},
              {"certifiedPrefix", integer_list(r.certified)},
              {"pipeline", integer_list(r.pipeline)},
              {"compared", r.compared},
              {"matches", r.matches},
              {"firstMismatchIndex", r.first_mismatch}};
}

json nu_to_json(const NuRow& row) {
  return json{{"k", row.k},
              {"nu1", fraction_str(row.nu[0])},
              {"nu2", fraction_str(row.nu[1])},
              {"nu3", fraction_str(row.nu[2])},
              {"nu4", fraction_str(row.nu[3])}};
}

json strong_to_json(const StrongReport& rep) {
  json records = json::array();
  for (const auto& r : rep.records) {
    json x{{"family", r.tag.str()}, {"k", r.tag.k}, {"accepted", r.accepted}, {"condition", r.condition},
           {"height", to_dec(r.height)}};
    if (r.accepted) {
      x["mu"] = fraction_str(r.mu);
      x["E"] = to_dec(r.error);
    }
    records.push_back(std::move(x));
  }
  json seq = json::array();
  for (const auto& e : rep.sequence) {
    json labels = json::array();
    for (const auto& l : e.labels) labels.push_back(l.str());
    seq.push_back(std::move(labels));
  }
  return json{{"window", {rep.k_lo, rep.k_hi}}, {"records", records}, {"sequence", seq}};
}

json estimate_to_json(const ExponentEstimate& est) {
  json out{{"K", est.K}, {"window", {est.window_lo, est.K}}};
  const char* names[4] = {"nu1", "nu2", "nu3", "nu4"};
  json trailing = json::object(), full = json::object();
  for (int j = 0; j < 4; ++j) {
    trailing[names[j]] = est.present[j] ? json(fraction_str(est.nu[j])) : json(nullptr);
    full[names[j]] = fraction_str(est.nu_full[j]);
  }
  trailing["mu"] = fraction_str(est.mu);
  full["mu"] = fraction_str(est.mu_full);
  out["trailing"] = trailing;
  out["fullRange"] = full;
  out["caveat"] = est.caveat;
  return out;
}

json liouville_to_json(const LiouvilleReport& rep) {
  json w = json::array();
  for (const auto& x : rep.witnesses)
    w.push_back(json{{"k", x.k}, {"a", to_dec(x.a)}, {"nu4_km2", fraction_str(x.nu4_km2)},
                     {"nu3_km1", fraction_str(x.nu3_km1)}});
  return json{{"periodic", rep.periodic}, {"verdict", rep.verdict}, {"maxA", to_dec(rep.max_a)}, {"witnesses", w}};
}

}  // namespace sturmian
