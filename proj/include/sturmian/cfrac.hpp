#pragma once

#include "sturmian/words.hpp"

#include <array>
#include <string>
#include <vector>

namespace sturmian {

struct NumberSpec {
  Integer base;
  WordSystem words;

  NumberSpec(Integer b, WordSystem ws);
  static NumberSpec from_digits(Integer b, const ConvergentTable& table, InterceptDigits digits);
  // rho = -(m-1) theta + p; upper selects s' (ceilings) over s
  static NumberSpec degenerate(Integer b, const ConvergentTable& table, const Integer& m, const Integer& p, bool upper);
  static NumberSpec characteristic(Integer b, const ConvergentTable& table);

  int horizon() const { return words.horizon(); }
};

struct RawTerms {
  int k = 0;
  Integer c, d, e, f;
};

RawTerms raw_terms(const NumberSpec& spec, int k);
// (b^{q_k} - b^{q_{k-2}}) / (b^{q_{k-1}} - 1) for the characteristic word
Integer boehmer_term(const ConvergentTable& table, const Integer& base, int k);

// the fraction a partial quotient stands for: (1)_k, (2)_k - (1)_k, (2)_k, (3)_k, (4)_k
enum class Family { One, TwoMinusOne, Two, Three, Four };
std::string family_name(Family f);

struct FamilyTag {
  Family family = Family::Four;
  int k = -1;

  std::string str() const;
  bool operator==(const FamilyTag& o) const { return family == o.family && k == o.k; }
};

enum class Stage { Raw, Cleaned, Final };

struct Term {
  Integer value;
  FamilyTag tag;
  // raw positions covered, inclusive; raw position of term i at level k is 5k + i
  std::size_t first = 0;
  std::size_t last = 0;
  // which merge shape produced the term, e.g. "c", "e+c+1"
  std::string shape;
};

struct TermStream {
  Stage stage = Stage::Raw;
  Integer head = 0;
  std::vector<Term> terms;
};

TermStream alpha_stream(const NumberSpec& spec, int K);
TermStream apply_rule_i(const TermStream& raw);
TermStream apply_rule_ii(const TermStream& cleaned);

using Matrix2 = std::array<Integer, 4>;  // row-major
Matrix2 stream_matrix(const Integer& base, const TermStream& s);
Matrix2 term_product(const std::vector<Integer>& terms);

struct CFExpansion {
  int K = 0;
  TermStream raw, cleaned, full;
  // terms of `full` whose raw window ends before level K-1
  std::vector<Term> terms;
};

// full pipeline on levels 0..K; needs digits and partial quotients through K+1
CFExpansion cf_expansion(const NumberSpec& spec, int K);

struct ConvergentPair {
  Integer P, Q;
  int j = 0;
  FamilyTag tag;
};

std::vector<ConvergentPair> convergents(const Integer& base, const std::vector<Term>& terms);

struct FamilyFraction {
  FamilyTag tag;
  Integer num, den;
  Integer height;
};

// numerator and denominator from the words R_k, T_k, M_k, V_k read in base b
FamilyFraction family_fraction(const NumberSpec& spec, Family family, int k);
// same, but also defined for (1)_k with r_{k+1} < r_k, where only the formal pair is meaningful
FamilyFraction family_fraction_formal(const NumberSpec& spec, Family family, int k);

struct RecurrenceReport {
  int k = 0;
  // (1)_k, (2)_k - (1)_k, (2)_k, (3)_k, (4)_k
  std::array<bool, 5> holds{};
  bool negative_branch = false;
  bool all() const { return holds[0] && holds[1] && holds[2] && holds[3] && holds[4]; }
};

RecurrenceReport recurrence_check(const NumberSpec& spec, int k);

}  // namespace sturmian
