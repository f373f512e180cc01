#include "sturmian/ostrowski.hpp"

namespace sturmian {

IntegerDigits encode_integer(const Integer& n, const ConvergentTable& table) {
  if (n < 0) fail_input("integer must be nonnegative");
  IntegerDigits out;
  if (n == 0) return out;
  int K = table.horizon();
  if (n >= table.q(K)) fail_horizon("N = " + n.get_str() + " is not below q_K = " + table.q(K).get_str());
  int top = 0;
  while (top + 1 <= K && table.q(top + 1) <= n) ++top;
  out.d.assign(top + 1, 0);
  Integer rest = n;
  for (int j = top; j >= 0; --j) {
    Integer d = rest / table.q(j);
    out.d[j] = d;
    rest -= d * table.q(j);
  }
  // q_0 = q_1 when a_1 = 1 lets the greedy put weight on d_1; move it up
  if (table.a(1) == 1 && out.d[0] != 0) fail_internal("greedy produced d_1 > 0 with a_1 = 1");
  return out;
}

std::optional<RuleViolation> check_digit_rules(const std::vector<Integer>& digits, const ConvergentTable& table) {
  int n = static_cast<int>(digits.size());
  if (n > table.horizon()) return RuleViolation{table.horizon() + 1, "digit beyond slope horizon"};
  for (int k = 1; k <= n; ++k) {
    const Integer& x = digits[k - 1];
    if (x < 0) return RuleViolation{k, "negative digit"};
    if (k == 1 && x > table.a(1) - 1) return RuleViolation{1, "b_1 exceeds a_1 - 1"};
    if (x > table.a(k)) return RuleViolation{k, "digit exceeds a_" + std::to_string(k)};
  }
  for (int k = 1; k < n; ++k) {
    if (digits[k] == table.a(k + 1) && digits[k - 1] != 0)
      return RuleViolation{k, "digit must be 0 because the next digit equals a_" + std::to_string(k + 1)};
  }
  return std::nullopt;
}

Integer decode_integer(const IntegerDigits& digits, const ConvergentTable& table) {
  if (auto v = check_digit_rules(digits.d, table)) fail_input("invalid digit at index " + std::to_string(v->index) + ": " + v->reason, v->index);
  Integer n = 0;
  for (std::size_t j = 0; j < digits.d.size(); ++j) n += digits.d[j] * table.q(static_cast<int>(j));
  return n;
}

Integer InterceptDigits::digit(int k) const {
  if (k < 1) fail_internal("digit index must be positive");
  if (static_cast<std::size_t>(k) <= b.size()) return b[k - 1];
  if (terminating) return 0;
  fail_horizon("digit b_" + std::to_string(k) + " is beyond the supplied prefix");
}

DigitReport validate_real_digits(const InterceptDigits& digits, const ConvergentTable& table) {
  DigitReport r;
  int n = std::min<int>(static_cast<int>(digits.b.size()), table.horizon());
  r.checked = n;
  std::vector<Integer> head(digits.b.begin(), digits.b.begin() + n);
  if (auto v = check_digit_rules(head, table)) {
    r.valid = false;
    r.first_violation = v->index;
    r.reason = v->reason;
  }
  if (digits.terminating) {
    r.tail_condition_unverifiable = false;
    return r;
  }
  // longest suffix alternating a_j, 0, a_{j+2}, 0, ...
  for (int start = 1; start + 3 <= n; ++start) {
    bool match = true;
    for (int k = start; k <= n && match; ++k) {
      bool full = (k - start) % 2 == 0;
      match = full ? digits.b[k - 1] == table.a(k) : digits.b[k - 1] == 0;
    }
    if (match) {
      r.forbidden_tail_shape = true;
      r.forbidden_tail_start = start;
      break;
    }
  }
  return r;
}

LinearForm partial_sum(const InterceptDigits& digits, const ConvergentTable& table, int n) {
  LinearForm s{0, 0};
  for (int k = 1; k <= n; ++k) {
    Integer d = digits.digit(k);
    if (d != 0) s = s + theta_k_form(table, k - 1) * Rational(d);
  }
  return s;
}

Interval decode_real(const InterceptDigits& digits, const ConvergentTable& table, int level) {
  int K = table.horizon();
  if (level < 1 || level > K - 1) fail_horizon("decode level must lie in [1, K-1]");
  if (auto v = check_digit_rules(std::vector<Integer>(digits.b.begin(), digits.b.begin() + std::min<std::size_t>(digits.b.size(), level)), table))
    fail_input("invalid digit at index " + std::to_string(v->index) + ": " + v->reason, v->index);
  Interval iv = enclose(partial_sum(digits, table, level), theta_enclosure(table, K - 1));
  bool exact_tail = digits.terminating && static_cast<std::size_t>(level) >= digits.b.size();
  if (!exact_tail) {
    Rational tail(1, table.q(level));
    iv.lower -= tail;
    iv.upper += tail;
  }
  return iv;
}

DegenerateIntercept degenerate_expansions(const Integer& m, const Integer& p, const ConvergentTable& table) {
  if (m < 1) fail_input("degenerate intercept needs m >= 1");
  int K = table.horizon();
  DegenerateIntercept out;
  out.m = m;
  out.p = p;
  if (m == 1) {
    if (p != 0) fail_input("m = 1 requires p = 0 (rho = p must lie in [0,1))");
    out.l = 0;
    out.b.b.assign(K, 0);
    out.b_prime.b.assign(K, 0);
    out.b.b[0] = table.a(1) - 1;
    for (int k = 2; k <= K; ++k) {
      if (k % 2 == 1) out.b.b[k - 1] = table.a(k);
      else out.b_prime.b[k - 1] = table.a(k);
    }
    return out;
  }
  Integer mm1 = m - 1;
  if (certified_ceil(table, {Rational(mm1), 0}) != p)
    fail_input("p must equal ceil((m-1) theta) for rho in [0,1)");
  int l = 0;
  while (!(table.q(l) < m && m <= table.q(l + 1))) {
    ++l;
    if (l + 1 > K) fail_horizon("m exceeds q_K");
  }
  if (l + 2 > K) fail_horizon("degenerate expansion needs horizon >= l + 2");
  out.l = l;
  IntegerDigits head = encode_integer(table.q(l + 1) - m, table);
  out.b.b.assign(K, 0);
  for (std::size_t j = 0; j < head.d.size(); ++j) out.b.b[j] = head.d[j];
  for (int k = l + 2; k <= K; ++k)
    if ((k - l) % 2 == 1) out.b.b[k - 1] = table.a(k);
  out.b_prime.b.assign(K, 0);
  for (int k = 1; k <= l; ++k) out.b_prime.b[k - 1] = out.b.b[k - 1];
  out.b_prime.b[l] = out.b.b[l] + 1;
  out.b_prime.b[l + 1] = table.a(l + 2) - 1;
  for (int k = l + 3; k <= K; ++k)
    if ((k - l) % 2 == 0) out.b_prime.b[k - 1] = table.a(k);
  return out;
}

namespace {

// floor of num/den for a positive linear form den, flagging num = n*den exactly
struct RatioFloor {
  Integer value;
  bool exact_integer = false;
};

std::optional<RatioFloor> floor_ratio(const LinearForm& num, const LinearForm& den, const ConvergentTable& table) {
  for (int level = 0; level + 1 <= table.horizon(); ++level) {
    ThetaEnclosure th = theta_enclosure(table, level);
    Interval n = enclose(num, th), d = enclose(den, th);
    if (d.lower <= 0) continue;
    Rational ends[4] = {n.lower / d.lower, n.lower / d.upper, n.upper / d.lower, n.upper / d.upper};
    Rational lo = ends[0], hi = ends[0];
    for (auto& e : ends) {
      if (e < lo) lo = e;
      if (e > hi) hi = e;
    }
    Integer c0 = ceil_q(lo), c1 = floor_q(hi);
    if (c1 - c0 <= 2)
      for (Integer c = c0; c <= c1; ++c)
        if ((num - den * Rational(c)).is_zero()) return RatioFloor{c, true};
    Integer f = floor_q(lo);
    if (hi <= f + 1) return RatioFloor{f, false};
  }
  return std::nullopt;
}

}  // namespace

EncodeResult encode_real(const LinearForm& sigma, const ConvergentTable& table, int count) {
  int K = table.horizon();
  if (K < 3) fail_horizon("encode_real needs horizon >= 3");
  LinearForm theta{1, 0};
  if (certified_sign(table, sigma + theta) < 0 || certified_sign(table, LinearForm{-1, 1} - sigma) < 0)
    fail_input("sigma must lie in [-theta, 1-theta]");

  auto degenerate_from = [&](const LinearForm& s) -> EncodeResult {
    if (s.u.get_den() != 1 || s.v.get_den() != 1 || s.u > -1) fail_internal("ambiguous expansion outside the degenerate family");
    Integer m = -s.u.get_num();
    Integer p = s.v.get_num();
    // sigma = 1 - theta is rho = 1, the same word as rho = 0
    if (m == 1 && p == 1) p = 0;
    return {std::nullopt, degenerate_expansions(m, p, table)};
  };

  InterceptDigits out;
  LinearForm x = sigma;
  int limit = count > 0 ? count : K - 1;
  if (limit > K - 1) fail_horizon("at most K-1 digits can be extracted");
  for (int k = 0; k < limit; ++k) {
    if (x.is_zero()) {
      out.terminating = true;
      return {out, std::nullopt};
    }
    Rational s = (k % 2 == 0) ? 1 : -1;
    LinearForm y = x * s;
    LinearForm g = theta_k_form(table, k) * s;
    LinearForm g1 = theta_k_form(table, k + 1) * (-s);
    std::optional<RatioFloor> z = floor_ratio(y - g1, g, table);
    if (!z) {
      if (count > 0 || k == 0) fail_horizon("digit b_" + std::to_string(k + 1) + " not certified within slope horizon " + std::to_string(K));
      break;
    }
    if (z->exact_integer) return degenerate_from(sigma);
    Integer digit = z->value + 1;
    if (digit < 0) digit = 0;
    out.b.push_back(digit);
    x = x - theta_k_form(table, k) * Rational(digit);
  }
  if (x.is_zero()) out.terminating = true;
  if (auto v = check_digit_rules(out.b, table)) fail_internal("greedy digits break rule at index " + std::to_string(v->index));
  return {out, std::nullopt};
}

}  // namespace sturmian
