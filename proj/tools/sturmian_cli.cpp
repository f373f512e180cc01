#include "sturmian/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace sturmian;

namespace {

struct RunConfig {
  std::string command;
  json raw;
  SlopeSpec slope;
  int K = 0;
  Integer base = 2;
  bool upper = false;
  std::string format = "json";
};

enum class InterceptKind { Characteristic, Digits, Degenerate, Sigma };

struct Intercept {
  InterceptKind kind = InterceptKind::Characteristic;
  InterceptDigits digits;
  Integer m, p;
  LinearForm sigma;
};

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidInput: return 2;
    case ErrorKind::Horizon: return 3;
    case ErrorKind::Internal: return 4;
  }
  return 4;
}

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidInput: return "invalid";
    case ErrorKind::Horizon: return "horizon";
    case ErrorKind::Internal: return "internal";
  }
  return "internal";
}

void diagnose(const char* kind, const std::string& msg, std::optional<long> index = std::nullopt) {
  json d{{"error", kind}, {"message", msg}};
  if (index) d["index"] = *index;
  std::cerr << d.dump() << "\n";
}

int read_int(const json& j, const char* key, int fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number_integer()) fail_input(std::string(key) + ": expected an integer");
  return j[key].get<int>();
}

SlopeSpec slope_of(const json& cfg) {
  if (cfg.contains("a")) return SlopeSpec::finite(integer_list_from_json(cfg["a"], "a"));
  if (!cfg.contains("slope")) fail_input("config needs \"a\" or \"slope\"");
  const json& s = cfg["slope"];
  if (s.is_string()) {
    if (s.get<std::string>() == "golden") return SlopeSpec::golden(read_int(cfg, "horizon", 20));
    fail_input("unknown slope name");
  }
  json copy = s;
  if (!copy.contains("horizon") && copy.contains("period") && !copy["period"].empty())
    copy["horizon"] = read_int(cfg, "horizon", 20);
  return slope_from_json(copy);
}

Intercept intercept_of(const json& cfg) {
  Intercept out;
  if (!cfg.contains("intercept")) return out;
  const json& j = cfg["intercept"];
  if (j.is_string()) {
    if (j.get<std::string>() != "characteristic") fail_input("unknown intercept name");
    return out;
  }
  if (!j.is_object()) fail_input("intercept: expected a string or an object");
  int forms = j.contains("digits") + (j.contains("m") || j.contains("p")) + j.contains("sigma") +
              j.contains("sigma_symbolic");
  if (forms != 1) fail_input("intercept: exactly one of digits, {m,p}, sigma, sigma_symbolic");
  if (j.contains("digits")) {
    out.kind = InterceptKind::Digits;
    out.digits.b = integer_list_from_json(j["digits"], "intercept.digits");
    out.digits.terminating = j.value("terminating", false);
  } else if (j.contains("sigma")) {
    out.kind = InterceptKind::Sigma;
    if (!j["sigma"].is_string()) fail_input("intercept.sigma: expected a rational string \"p/q\"");
    out.sigma = {0, parse_rational(j["sigma"].get<std::string>())};
  } else if (j.contains("sigma_symbolic")) {
    out.kind = InterceptKind::Sigma;
    const json& s = j["sigma_symbolic"];
    if (!s.is_object() || !s.contains("u") || !s.contains("v")) fail_input("intercept.sigma_symbolic needs u and v");
    auto rat = [](const json& x, const char* what) {
      if (x.is_string()) return parse_rational(x.get<std::string>());
      return Rational(integer_from_json(x, what));
    };
    out.sigma = {rat(s["u"], "sigma_symbolic.u"), rat(s["v"], "sigma_symbolic.v")};
  } else {
    if (!j.contains("m") || !j.contains("p")) fail_input("degenerate intercept needs both m and p");
    out.kind = InterceptKind::Degenerate;
    out.m = integer_from_json(j["m"], "intercept.m");
    out.p = integer_from_json(j["p"], "intercept.p");
  }
  return out;
}

// slope tables carry a few levels past K so look-ahead rules stay inside the data
ConvergentTable table_for(const RunConfig& rc) {
  SlopeSpec s = rc.slope;
  if (s.periodic()) s = s.with_horizon(rc.K + 8);
  return build_table(s);
}

NumberSpec number_spec(const RunConfig& rc, const ConvergentTable& table) {
  Intercept ic = intercept_of(rc.raw);
  switch (ic.kind) {
    case InterceptKind::Characteristic:
      return NumberSpec::characteristic(rc.base, table);
    case InterceptKind::Digits:
      return NumberSpec::from_digits(rc.base, table, ic.digits);
    case InterceptKind::Degenerate:
      return NumberSpec::degenerate(rc.base, table, ic.m, ic.p, rc.upper);
    case InterceptKind::Sigma: {
      EncodeResult enc = encode_real(ic.sigma, table);
      if (enc.ambiguous) return NumberSpec::degenerate(rc.base, table, enc.ambiguous->m, enc.ambiguous->p, rc.upper);
      return NumberSpec::from_digits(rc.base, table, *enc.digits);
    }
  }
  fail_internal("unreachable intercept kind");
}

std::string binary_word(const Word& w) {
  std::string out;
  std::uint64_t n = w.size();
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((n >> (8 * i)) & 0xff));
  for (std::size_t i = 0; i < w.size(); i += 8) {
    unsigned char byte = 0;
    for (std::size_t j = 0; j < 8 && i + j < w.size(); ++j)
      if (w[i + j]) byte |= static_cast<unsigned char>(0x80u >> j);
    out.push_back(static_cast<char>(byte));
  }
  return out;
}

void emit(const RunConfig& rc, const json& payload, const std::string& text) {
  if (rc.format == "json") {
    std::cout << payload.dump(2) << "\n";
  } else if (rc.format == "text") {
    std::cout << text << "\n";
  } else {
    fail_input("--format " + rc.format + " is not available for " + rc.command);
  }
}

std::string join(const std::vector<Integer>& xs) {
  std::string out;
  for (const auto& x : xs) {
    if (!out.empty()) out += ' ';
    out += to_dec(x);
  }
  return out;
}

void cmd_word(const RunConfig& rc) {
  ConvergentTable table = table_for(rc);
  NumberSpec spec = number_spec(rc, table);
  const WordSystem& ws = spec.words;
  std::uint64_t L = static_cast<std::uint64_t>(read_int(rc.raw, "length", 64));
  if (L < 1) fail_input("length must be positive");
  Word w;
  std::string source = "limit";
  if (L <= ws.letters_available()) {
    for (std::uint64_t n = 1; n <= L; ++n) w.push_back(ws.letter_at(n));
  } else {
    int k = ws.horizon();
    if (ws.q(k) < L) fail_horizon("length exceeds q_K; raise the horizon");
    w = ws.v_word(k).prefix(L);
    source = "V_" + std::to_string(k);
  }
  if (rc.format == "rle") {
    std::cout << w.rle() << "\n";
  } else if (rc.format == "bin") {
    std::cout << binary_word(w);
  } else {
    emit(rc, json{{"length", std::to_string(L)}, {"source", source}, {"letters", w.str()}, {"rle", w.rle()}}, w.str());
  }
}

void cmd_ostrowski_int(const RunConfig& rc) {
  ConvergentTable table = table_for(rc);
  if (rc.raw.contains("n")) {
    Integer n = integer_from_json(rc.raw["n"], "n");
    if (n < 1) fail_input("n must be positive");
    IntegerDigits d = encode_integer(n, table);
    emit(rc, json{{"n", to_dec(n)}, {"digits", integer_list(d.d)}}, join(d.d));
  } else if (rc.raw.contains("int_digits")) {
    IntegerDigits d{integer_list_from_json(rc.raw["int_digits"], "int_digits")};
    Integer n = decode_integer(d, table);
    emit(rc, json{{"n", to_dec(n)}, {"digits", integer_list(d.d)}}, to_dec(n));
  } else {
    fail_input("ostrowski-int needs \"n\" or \"int_digits\"");
  }
}

void cmd_ostrowski_real(const RunConfig& rc) {
  ConvergentTable table = table_for(rc);
  Intercept ic = intercept_of(rc.raw);
  json out;
  std::string text;
  switch (ic.kind) {
    case InterceptKind::Characteristic:
      out = json{{"digits", json::array()}, {"terminating", true}};
      text = "0";
      break;
    case InterceptKind::Sigma: {
      EncodeResult enc = encode_real(ic.sigma, table);
      out["sigma"] = json{{"u", to_dec(ic.sigma.u)}, {"v", to_dec(ic.sigma.v)}};
      if (enc.ambiguous) {
        out["ambiguous"] = degenerate_to_json(*enc.ambiguous);
        text = "ambiguous m=" + to_dec(enc.ambiguous->m) + " p=" + to_dec(enc.ambiguous->p);
      } else {
        out["digits"] = integer_list(enc.digits->b);
        out["terminating"] = enc.digits->terminating;
        text = join(enc.digits->b);
      }
      break;
    }
    case InterceptKind::Digits: {
      DigitReport rep = validate_real_digits(ic.digits, table);
      out["report"] = digit_report_to_json(rep);
      if (rep.valid) {
        int level = std::min<int>(table.horizon() - 1,
                                  ic.digits.terminating ? table.horizon() - 1 : static_cast<int>(ic.digits.b.size()));
        level = std::max(level, 1);
        Interval iv = decode_real(ic.digits, table, level);
        out["enclosure"] = json{{"lower", fraction_str(iv.lower)}, {"upper", fraction_str(iv.upper)}, {"level", level}};
        text = fraction_str(iv.lower) + " " + fraction_str(iv.upper);
      } else {
        fail_input("invalid digit at index " + std::to_string(*rep.first_violation) + ": " + rep.reason,
                   *rep.first_violation);
      }
      break;
    }
    case InterceptKind::Degenerate: {
      DegenerateIntercept d = degenerate_expansions(ic.m, ic.p, table);
      out = degenerate_to_json(d);
      text = join(d.b.b) + "\n" + join(d.b_prime.b);
      break;
    }
  }
  emit(rc, out, text);
}

CFExpansion expansion(const RunConfig& rc, const NumberSpec& spec) {
  if (rc.K < 4) fail_input("K must be at least 4");
  return cf_expansion(spec, std::min(rc.K, spec.horizon() - 1));
}

std::vector<Integer> values(const std::vector<Term>& terms) {
  std::vector<Integer> out;
  for (const auto& t : terms) out.push_back(t.value);
  return out;
}

bool all_zero(const WordSystem& ws) {
  for (const auto& d : ws.digits().b)
    if (d != 0) return false;
  return ws.digits().terminating;
}

std::vector<Integer> boehmer_list(const ConvergentTable& table, const Integer& base, int count) {
  std::vector<Integer> out;
  for (int k = 1; k <= count; ++k) out.push_back(boehmer_term(table, base, k));
  return out;
}

void cmd_cf(const RunConfig& rc) {
  ConvergentTable table = table_for(rc);
  NumberSpec spec = number_spec(rc, table);
  CFExpansion cf = expansion(rc, spec);
  json out = cf_to_json(cf);
  if (rc.raw.value("boehmer", false)) {
    if (!all_zero(spec.words)) fail_input("Böhmer mode needs the characteristic intercept");
    std::vector<Integer> a = boehmer_list(table, rc.base, static_cast<int>(cf.terms.size()));
    out["boehmer"] = integer_list(a);
    out["boehmerMatches"] = (a == values(cf.terms));
    if (a != values(cf.terms)) fail_internal("pipeline disagrees with the closed form A_k");
  }
  emit(rc, out, join(values(cf.terms)));
}

void cmd_convergents(const RunConfig& rc) {
  ConvergentTable table = table_for(rc);
  NumberSpec spec = number_spec(rc, table);
  CFExpansion cf = expansion(rc, spec);
  std::vector<ConvergentPair> cs = convergents(rc.base, cf.terms);
  json out = convergents_to_json(cs);
  std::string text;
  for (const auto& c : cs) {
    Rational r(c.P, c.Q);
    r.canonicalize();
    text += fraction_str(r) + " " + c.tag.str() + "\n";
  }
  if (!text.empty()) text.pop_back();
  emit(rc, json{{"K", cf.K}, {"convergents", out}}, text);
}

void cmd_exponent(const RunConfig& rc) {
  ConvergentTable table = table_for(rc);
  NumberSpec spec = number_spec(rc, table);
  const WordSystem& ws = spec.words;
  int K = std::min(rc.K, ws.horizon() - 2);
  if (K < 2) fail_horizon("exponent report needs digits through K+2 with K >= 2");
  json out;
  json nu = json::array();
  for (const auto& row : nu_table(ws, K)) nu.push_back(nu_to_json(row));
  out["nu"] = nu;
  int lo = first_valid_level(ws, 1), hi = ws.horizon() - 4;
  if (lo <= hi)
    out["strong"] = strong_to_json(strong_convergents(ws, lo, hi));
  else
    out["strong"] = json{{"window", nullptr}, {"reason", "no level with t_{k-1} >= 1 inside the horizon"}};
  ExponentEstimate est = exponent_estimate(ws, K);
  out["estimate"] = estimate_to_json(est);
  out["window"] = {est.window_lo, est.K};
  out["liouville"] = liouville_to_json(liouville_flag(ws, K));
  emit(rc, out, fraction_str(est.mu) + " ~ " + std::to_string(est.mu.get_d()));
}

void cmd_verify(const RunConfig& rc) {
  ConvergentTable table = table_for(rc);
  NumberSpec spec = number_spec(rc, table);
  if (rc.K < 4) fail_input("K must be at least 4");
  int want = read_int(rc.raw, "terms", 10);
  VerifyReport r = verify_expansion(spec, std::min(rc.K, spec.horizon() - 1), static_cast<std::size_t>(want));
  emit(rc, verify_to_json(r), r.matches ? "match" : "mismatch");
}

void cmd_boehmer(const RunConfig& rc) {
  ConvergentTable table = table_for(rc);
  NumberSpec spec = number_spec(rc, table);
  if (!all_zero(spec.words)) fail_input("boehmer needs the characteristic intercept");
  if (rc.K < 4) fail_input("K must be at least 4");
  std::vector<Integer> a = boehmer_list(table, rc.base, std::min(rc.K, table.horizon()));
  emit(rc, json{{"terms", integer_list(a)}}, join(a));
}

json load_config(const std::string& path, const std::string& inline_json) {
  if (!inline_json.empty()) return json::parse(inline_json);
  if (path.empty()) fail_input("--config or --json is required");
  if (path == "-") return json::parse(std::cin);
  std::ifstream in(path);
  if (!in) fail_input("cannot open config " + path);
  return json::parse(in);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sturmian words, Ostrowski numeration and continued fractions of Sturmian numbers"};
  app.require_subcommand(1);
  std::string config_path, inline_json, format = "json";
  std::optional<int> horizon;
  std::optional<std::string> base;
  app.add_option("--config", config_path, "JSON config file, or - for stdin");
  app.add_option("--json", inline_json, "inline JSON config");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text", "rle", "bin"}));
  app.add_option("--horizon", horizon, "analysis level K");
  app.add_option("--base", base, "base b >= 2");
  const std::vector<std::string> commands = {"word", "ostrowski-int", "ostrowski-real", "cf",
                                             "convergents", "exponent", "verify", "boehmer"};
  app.fallthrough();
  for (const auto& c : commands) app.add_subcommand(c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    diagnose("invalid", e.what());
    return 2;
  }

  try {
    RunConfig rc;
    rc.command = app.get_subcommands().front()->get_name();
    rc.format = format;
    rc.raw = load_config(config_path, inline_json);
    if (!rc.raw.is_object()) fail_input("config must be a JSON object");
    rc.slope = slope_of(rc.raw);
    rc.K = horizon ? *horizon : read_int(rc.raw, "K", rc.slope.horizon);
    if (rc.K < 1) fail_input("horizon must be positive");
    if (!rc.slope.periodic() && rc.K > rc.slope.horizon) fail_horizon("horizon exceeds the finite slope");
    if (base)
      rc.base = parse_integer(*base);
    else if (rc.raw.contains("base"))
      rc.base = integer_from_json(rc.raw["base"], "base");
    if (rc.base < 2) fail_input("base must be at least 2");
    rc.upper = rc.raw.value("upper", false);
    if (rc.format == "rle" || rc.format == "bin") {
      if (rc.command != "word") fail_input("--format " + rc.format + " only applies to word");
    }

    if (rc.command == "word") cmd_word(rc);
    else if (rc.command == "ostrowski-int") cmd_ostrowski_int(rc);
    else if (rc.command == "ostrowski-real") cmd_ostrowski_real(rc);
    else if (rc.command == "cf") cmd_cf(rc);
    else if (rc.command == "convergents") cmd_convergents(rc);
    else if (rc.command == "exponent") cmd_exponent(rc);
    else if (rc.command == "verify") cmd_verify(rc);
    else cmd_boehmer(rc);
  } catch (const Error& e) {
    diagnose(kind_name(e.kind()), e.what(), e.index());
    return exit_code(e.kind());
  } catch (const json::exception& e) {
    diagnose("invalid", std::string("config: ") + e.what());
    return 2;
  } catch (const std::exception& e) {
    diagnose("internal", e.what());
    return 4;
  }
  return 0;
}
