#pragma once

#include "sturmian/cfrac.hpp"

#include <vector>

namespace sturmian {

struct XiEnclosure {
  Rational lower;
  Rational upper;
  std::uint64_t digits_used = 0;

  Interval interval() const { return {lower, upper}; }
};

// lower = (b-1) sum_{n <= N} s_n b^{-n}, upper = lower + b^{-N}
XiEnclosure truncate_xi(const NumberSpec& spec, std::uint64_t N);
XiEnclosure truncate_xi(const LetterSource& word, const Integer& base, std::uint64_t N);

// [a_0; a_1, ..., a_n] with a_n >= 2 unless the expansion is [0] or [0; 1]
std::vector<Integer> cf_of_rational(const Rational& x);
Rational cf_value(const std::vector<Integer>& cf);

// quotients shared by every real of the enclosure; a_0 first
std::vector<Integer> certified_cf_prefix(const Interval& enclosure);

struct Fraction {
  Integer p, q;
};
// reduced convergents p_n/q_n of [a_0; a_1, ..., a_n], n >= 1
std::vector<Fraction> cf_convergents(const std::vector<Integer>& cf);

enum class Verdict { Yes, No, Inconclusive };
const char* verdict_name(Verdict v);

Verdict legendre_check(const Integer& P, const Integer& Q, const Interval& enclosure);

// -log_b |xi - P/Q| lies in [lower, upper]
struct ExponentBracket {
  Integer lower;
  Integer upper;
};
ExponentBracket empirical_exponent(const Integer& P, const Integer& Q, const Interval& enclosure, const Integer& base);

// floating estimate of log |xi - P/Q| / log Q from the enclosure midpoint, for screening only
double approximate_exponent(const Integer& P, const Integer& Q, const Interval& enclosure);

struct CertifiedPrefix {
  XiEnclosure enclosure;
  std::vector<Integer> quotients;  // a_0 first
};

// doubles N from 4 q_level until at least `want` quotients appear on two consecutive rounds
CertifiedPrefix certified_prefix_for(const NumberSpec& spec, std::size_t want, int level = 2);

struct VerifyReport {
  std::uint64_t N = 0;
  std::vector<Integer> certified;
  std::vector<Integer> pipeline;
  bool matches = false;
  long first_mismatch = -1;
  std::size_t compared = 0;
};

// pipeline partial quotients against the oracle prefix on their overlap
VerifyReport verify_expansion(const NumberSpec& spec, int K, std::size_t want);

}  // namespace sturmian
