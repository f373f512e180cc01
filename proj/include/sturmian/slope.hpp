#pragma once

#include "sturmian/numeric.hpp"

#include <vector>

namespace sturmian {

// theta = [0; a_1, a_2, ...] given as a preperiod followed by a repeating period
struct SlopeSpec {
  std::vector<Integer> preperiod;
  std::vector<Integer> period;
  int horizon = 0;

  bool periodic() const { return !period.empty(); }
  // a_k for k >= 1
  Integer partial_quotient(int k) const;
  void validate() const;
  SlopeSpec with_horizon(int k) const;

  static SlopeSpec finite(std::vector<Integer> a);
  static SlopeSpec finite(std::initializer_list<long> a);
  static SlopeSpec eventually_periodic(std::vector<Integer> pre, std::vector<Integer> per, int horizon);
  static SlopeSpec golden(int horizon);
};

class ConvergentTable {
public:
  explicit ConvergentTable(const SlopeSpec& spec);

  const SlopeSpec& spec() const { return spec_; }
  int horizon() const { return spec_.horizon; }

  // valid for 1 <= k <= K
  const Integer& a(int k) const;
  // valid for -1 <= k <= K
  const Integer& p(int k) const;
  const Integer& q(int k) const;

  // a deeper table for the same slope; finite specs cannot grow past their data
  ConvergentTable extended(int horizon) const;

private:
  SlopeSpec spec_;
  std::vector<Integer> a_;
  std::vector<Integer> p_;
  std::vector<Integer> q_;
};

ConvergentTable build_table(const SlopeSpec& spec);

struct ThetaEnclosure {
  Rational lower;
  Rational upper;
  int level = 0;

  Rational width() const { return upper - lower; }
};

// theta lies strictly between p_level/q_level and p_{level+1}/q_{level+1}
ThetaEnclosure theta_enclosure(const ConvergentTable& table, int level);

// open interval around theta_k = q_k theta - p_k
ThetaEnclosure theta_k_enclosure(const ConvergentTable& table, int k, int level);

// open interval around u*theta + v (degenerates to a point when u = 0)
Interval enclose(const LinearForm& x, const ThetaEnclosure& theta);

// exact theta_k as a linear form
LinearForm theta_k_form(const ConvergentTable& table, int k);

// floor (or ceiling) of u*theta + v, refining through every level of the table
Integer certified_floor(const ConvergentTable& table, const LinearForm& x);
Integer certified_ceil(const ConvergentTable& table, const LinearForm& x);

// sign of u*theta + v; zero only when u = v = 0
int certified_sign(const ConvergentTable& table, const LinearForm& x);

}  // namespace sturmian
