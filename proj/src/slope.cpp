#include "sturmian/slope.hpp"

namespace sturmian {

Integer SlopeSpec::partial_quotient(int k) const {
  if (k < 1) fail_internal("partial quotient index must be positive");
  std::size_t s = preperiod.size();
  if (static_cast<std::size_t>(k) <= s) return preperiod[k - 1];
  if (period.empty()) fail_horizon("a_" + std::to_string(k) + " is beyond the supplied partial quotients");
  return period[(k - s - 1) % period.size()];
}

void SlopeSpec::validate() const {
  if (horizon < 1) fail_input("horizon must be positive");
  for (std::size_t i = 0; i < preperiod.size(); ++i)
    if (preperiod[i] < 1) fail_input("partial quotient a_" + std::to_string(i + 1) + " must be >= 1", i + 1);
  for (std::size_t i = 0; i < period.size(); ++i)
    if (period[i] < 1) fail_input("period entry " + std::to_string(i) + " must be >= 1");
  if (period.empty() && static_cast<std::size_t>(horizon) > preperiod.size())
    fail_horizon("horizon " + std::to_string(horizon) + " exceeds the " + std::to_string(preperiod.size()) +
                 " supplied partial quotients");
}

SlopeSpec SlopeSpec::with_horizon(int k) const {
  SlopeSpec s = *this;
  s.horizon = k;
  return s;
}

SlopeSpec SlopeSpec::finite(std::vector<Integer> a) {
  SlopeSpec s;
  s.horizon = static_cast<int>(a.size());
  s.preperiod = std::move(a);
  return s;
}

SlopeSpec SlopeSpec::finite(std::initializer_list<long> a) {
  std::vector<Integer> v;
  for (long x : a) v.emplace_back(x);
  return finite(std::move(v));
}

SlopeSpec SlopeSpec::eventually_periodic(std::vector<Integer> pre, std::vector<Integer> per, int horizon) {
  SlopeSpec s;
  s.preperiod = std::move(pre);
  s.period = std::move(per);
  s.horizon = horizon;
  return s;
}

SlopeSpec SlopeSpec::golden(int horizon) { return eventually_periodic({}, {Integer(1)}, horizon); }

ConvergentTable::ConvergentTable(const SlopeSpec& spec) : spec_(spec) {
  spec_.validate();
  int K = spec_.horizon;
  a_.resize(K + 1);
  p_.resize(K + 2);
  q_.resize(K + 2);
  // index shift: p_[k+1] holds p_k
  p_[0] = 1;
  q_[0] = 0;
  p_[1] = 0;
  q_[1] = 1;
  for (int k = 1; k <= K; ++k) {
    a_[k] = spec_.partial_quotient(k);
    p_[k + 1] = a_[k] * p_[k] + p_[k - 1];
    q_[k + 1] = a_[k] * q_[k] + q_[k - 1];
  }
}

const Integer& ConvergentTable::a(int k) const {
  if (k < 1 || k > horizon()) fail_horizon("a_" + std::to_string(k) + " outside table horizon " + std::to_string(horizon()));
  return a_[k];
}

const Integer& ConvergentTable::p(int k) const {
  if (k < -1 || k > horizon()) fail_horizon("p_" + std::to_string(k) + " outside table horizon " + std::to_string(horizon()));
  return p_[k + 1];
}

const Integer& ConvergentTable::q(int k) const {
  if (k < -1 || k > horizon()) fail_horizon("q_" + std::to_string(k) + " outside table horizon " + std::to_string(horizon()));
  return q_[k + 1];
}

ConvergentTable ConvergentTable::extended(int horizon) const {
  if (horizon <= this->horizon()) return *this;
  return ConvergentTable(spec_.with_horizon(horizon));
}

ConvergentTable build_table(const SlopeSpec& spec) { return ConvergentTable(spec); }

ThetaEnclosure theta_enclosure(const ConvergentTable& table, int level) {
  if (level < 0 || level + 1 > table.horizon())
    fail_horizon("enclosure level " + std::to_string(level) + " needs horizon " + std::to_string(level + 1));
  Rational x(table.p(level), table.q(level));
  Rational y(table.p(level + 1), table.q(level + 1));
  x.canonicalize();
  y.canonicalize();
  if (level % 2 == 0) return {x, y, level};
  return {y, x, level};
}

Interval enclose(const LinearForm& x, const ThetaEnclosure& theta) {
  Rational a = x.u * theta.lower + x.v;
  Rational b = x.u * theta.upper + x.v;
  if (a <= b) return {a, b};
  return {b, a};
}

LinearForm theta_k_form(const ConvergentTable& table, int k) {
  return {Rational(table.q(k)), Rational(-table.p(k))};
}

ThetaEnclosure theta_k_enclosure(const ConvergentTable& table, int k, int level) {
  if (level <= k) fail_horizon("theta_k enclosure needs level > k");
  Interval iv = enclose(theta_k_form(table, k), theta_enclosure(table, level));
  bool negative = k % 2 != 0;
  if ((negative && iv.upper >= 0) || (!negative && iv.lower <= 0)) fail_internal("theta_k enclosure does not separate sign");
  return {iv.lower, iv.upper, level};
}

namespace {

// open interval (lo, hi) of x; returns floor if certified
std::optional<Integer> floor_of_open(const Interval& iv) {
  Integer f = floor_q(iv.lower);
  if (ceil_q(iv.upper) - 1 == f) return f;
  return std::nullopt;
}

}  // namespace

Integer certified_floor(const ConvergentTable& table, const LinearForm& x) {
  if (x.u == 0) return floor_q(x.v);
  for (int level = 0; level + 1 <= table.horizon(); ++level) {
    if (auto f = floor_of_open(enclose(x, theta_enclosure(table, level)))) return *f;
  }
  fail_horizon("floor not certified within slope horizon " + std::to_string(table.horizon()));
}

Integer certified_ceil(const ConvergentTable& table, const LinearForm& x) {
  if (x.u == 0) return ceil_q(x.v);
  return -certified_floor(table, -x);
}

int certified_sign(const ConvergentTable& table, const LinearForm& x) {
  if (x.u == 0) return sgn(x.v);
  for (int level = 0; level + 1 <= table.horizon(); ++level) {
    Interval iv = enclose(x, theta_enclosure(table, level));
    if (iv.lower >= 0) return 1;
    if (iv.upper <= 0) return -1;
  }
  fail_horizon("sign not certified within slope horizon " + std::to_string(table.horizon()));
}

}  // namespace sturmian
