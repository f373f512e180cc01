#pragma once

#include "sturmian/cfrac.hpp"

#include <array>
#include <string>
#include <vector>

namespace sturmian {

struct NuRow {
  int k = 0;
  // nu_k(1) .. nu_k(4)
  std::array<Rational, 4> nu;
};

// rows 0..K; needs t, r, q through K+2
std::vector<NuRow> nu_table(const WordSystem& ws, int K);
NuRow nu_row(const WordSystem& ws, int k);

struct StrongConvergentRecord {
  FamilyTag tag;
  bool accepted = false;
  std::string condition;
  Rational mu;    // assigned exponent when accepted
  Integer error;  // predicted -log_b |xi - (j)_k| when accepted
  Integer height;
};

// verdict for one family member; needs digits through k+3
StrongConvergentRecord classify(const WordSystem& ws, Family family, int k);

// each entry lists the labels that name one strong convergent after the replacement rules
struct StrongEntry {
  std::vector<FamilyTag> labels;
};

struct StrongReport {
  int k_lo = 0, k_hi = 0;
  std::vector<StrongConvergentRecord> records;
  std::vector<StrongEntry> sequence;
};

// window k_lo..k_hi; every k needs t_{k-1} >= 1 and digits through k+4
StrongReport strong_convergents(const WordSystem& ws, int k_lo, int k_hi);
// first level at or after `from` where t_{k-1} >= 1 holds from then on within the horizon
int first_valid_level(const WordSystem& ws, int from);

struct ExponentEstimate {
  int K = 0;
  int window_lo = 0;  // trailing window [window_lo, K]
  std::array<bool, 4> present{};
  std::array<Rational, 4> nu;       // trailing-window maxima
  std::array<Rational, 4> nu_full;  // maxima over [0, K]
  Rational mu, mu_full;
  std::string caveat;
};

ExponentEstimate exponent_estimate(const WordSystem& ws, int K);

struct LiouvilleWitness {
  int k = 0;
  Integer a;
  Rational nu4_km2;  // nu_{k-2}(4)
  Rational nu3_km1;  // nu_{k-1}(3)
};

struct LiouvilleReport {
  bool periodic = false;
  std::string verdict;
  Integer max_a;
  std::vector<LiouvilleWitness> witnesses;
};

LiouvilleReport liouville_flag(const WordSystem& ws, int K);

struct ExtremalIntercept {
  InterceptDigits digits;
  std::vector<int> spikes;  // k_j, with b_{k_j + 1} = a_{k_j + 1}
  std::vector<int> limsup_classes;  // residues mod the period realising the limsup of q_k/q_{k-1}
};

ExtremalIntercept extremal_intercept(const ConvergentTable& table, int K);

}  // namespace sturmian
