#pragma once

#include "sturmian/slope.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sturmian {

// N = sum d_j q_{j-1}; d[0] holds d_1
struct IntegerDigits {
  std::vector<Integer> d;
};

IntegerDigits encode_integer(const Integer& n, const ConvergentTable& table);
Integer decode_integer(const IntegerDigits& digits, const ConvergentTable& table);

// first index (1-based) breaking the numeration rules, with the reason
struct RuleViolation {
  long index;
  std::string reason;
};
std::optional<RuleViolation> check_digit_rules(const std::vector<Integer>& digits, const ConvergentTable& table);

// Ostrowski digits b_1, b_2, ... of sigma = rho - theta; b[0] holds b_1
struct InterceptDigits {
  std::vector<Integer> b;
  // true when every digit past the stored ones is zero
  bool terminating = false;

  // b_k, or zero past the end of a terminating sequence
  Integer digit(int k) const;
  bool known(int k) const { return terminating || (k >= 1 && static_cast<std::size_t>(k) <= b.size()); }
  static InterceptDigits zeros() { return {{}, true}; }
};

struct DigitReport {
  bool valid = true;
  std::optional<long> first_violation;
  std::string reason;
  // number of leading digits checked against the table
  int checked = 0;
  // the stored prefix ends in the pattern a_j, 0, a_{j+2}, 0, ... over at least four places
  bool forbidden_tail_shape = false;
  std::optional<long> forbidden_tail_start;
  // the condition that infinitely many b_k < a_k cannot be decided from a prefix
  bool tail_condition_unverifiable = true;
};

DigitReport validate_real_digits(const InterceptDigits& digits, const ConvergentTable& table);

// exact sum_{k <= n} b_k theta_{k-1}
LinearForm partial_sum(const InterceptDigits& digits, const ConvergentTable& table, int n);

// enclosure of sigma from the first `level` digits plus the tail bound |theta_{level-1}|
Interval decode_real(const InterceptDigits& digits, const ConvergentTable& table, int level);

struct DegenerateIntercept {
  Integer m;
  Integer p;
  int l = 0;
  // b (first closed form) and b' (second closed form)
  InterceptDigits b;
  InterceptDigits b_prime;

  // stream whose limit word is s (floors) and s' (ceilings)
  const InterceptDigits& lower() const { return l % 2 != 0 ? b : b_prime; }
  const InterceptDigits& upper() const { return l % 2 != 0 ? b_prime : b; }
};

DegenerateIntercept degenerate_expansions(const Integer& m, const Integer& p, const ConvergentTable& table);

struct EncodeResult {
  // set when the expansion is unique
  std::optional<InterceptDigits> digits;
  // set when sigma lies in Z theta + Z with two admissible expansions
  std::optional<DegenerateIntercept> ambiguous;
};

// greedy extraction of the digits of sigma = u theta + v; with count <= 0 it returns every digit
// the slope horizon certifies, otherwise exactly `count` digits or a horizon error
EncodeResult encode_real(const LinearForm& sigma, const ConvergentTable& table, int count = 0);

}  // namespace sturmian
