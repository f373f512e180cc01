#pragma once

#include "sturmian/ostrowski.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace sturmian {

// packed binary word
class Word {
public:
  Word() = default;
  explicit Word(std::string_view bits);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  int operator[](std::size_t i) const { return bits_[i] ? 1 : 0; }
  bool operator==(const Word& o) const { return bits_ == o.bits_; }

  void push_back(int bit) { bits_.push_back(bit != 0); }
  Word& operator+=(const Word& o);
  Word operator+(const Word& o) const;
  Word power(std::uint64_t n) const;
  Word prefix(std::size_t n) const;
  Word suffix(std::size_t n) const;
  Word reversed() const;
  bool starts_with(const Word& p) const;

  std::string str() const;
  // "1 0^4 1 0^4"
  std::string rle() const;
  // base-b integer with digits (b-1) for 1 and 0 for 0
  Integer value(const Integer& base) const;

private:
  std::vector<bool> bits_;
};

Word rle_parse(std::string_view text);

// 1-based letter lookup
using LetterSource = std::function<int(std::uint64_t)>;

constexpr std::uint64_t kDefaultCap = std::uint64_t(1) << 20;

class WordSystem {
public:
  WordSystem(ConvergentTable table, InterceptDigits digits, std::uint64_t cap = kDefaultCap);

  const ConvergentTable& table() const { return table_; }
  const InterceptDigits& digits() const { return digits_; }
  // largest level usable: limited by slope horizon and supplied digits
  int horizon() const { return horizon_; }
  std::uint64_t cap() const { return cap_; }

  const Integer& q(int k) const { return table_.q(k); }
  const Integer& t(int k) const;
  Integer r(int k) const { return q(k) - t(k); }
  Integer a(int k) const { return table_.a(k); }
  Integer b(int k) const { return digits_.digit(k); }

  // letter n (1-based) of V_k, 1 <= n <= q_k
  int v_letter(int k, std::uint64_t n) const;
  // letter n (1-based) of M_k
  int m_letter(int k, std::uint64_t n) const;
  // letter n of the limit word lim V_k
  int letter_at(std::uint64_t n) const;
  std::uint64_t letters_available() const;

  Word standard_word(int k) const;
  Word v_word(int k) const;
  Word t_word(int k) const;
  Word r_word(int k) const;

private:
  std::uint64_t q64(int k) const;
  void check_cap(const Integer& len) const;
  int descend(int k, std::uint64_t n, bool standard) const;

  ConvergentTable table_;
  InterceptDigits digits_;
  std::uint64_t cap_;
  int horizon_ = 0;
  std::vector<Integer> t_;
  // q_k, a_k, b_k as machine integers while q_k stays below 2^62
  std::vector<std::uint64_t> q_small_, a_small_, b_small_;
};

// s_n = floor(n theta + rho) - floor((n-1) theta + rho), rho = theta + sigma; ceilings when upper
int floor_letter(const ConvergentTable& table, const InterceptDigits& digits, std::uint64_t n, bool upper);
// rho = -(m-1) theta + p
int floor_letter_degenerate(const ConvergentTable& table, const Integer& m, const Integer& p, std::uint64_t n, bool upper);

// digits b*_1..b*_K located by matching conjugates of M_k against the word
InterceptDigits formal_intercept(const LetterSource& word, const ConvergentTable& table, int K);

struct CommonPrefix {
  std::uint64_t length = 0;
  Word word;  // empty when above the cap
  bool materialized = false;
};
// longest common prefix of V_{k+1}V_k and V_kV_{k+1}
CommonPrefix common_prefix_w(const WordSystem& ws, int k);
// closed form q_{k+1} + q_k - t_{k+1} - 2
Integer common_prefix_length_formula(const WordSystem& ws, int k);

struct PrefixCheck {
  bool direct = false;     // letter comparison
  bool criterion = false;  // digit-pattern test
};
PrefixCheck is_prefix(const WordSystem& ws, int k);

struct RepetitionData {
  Word u;
  Integer a_tilde;
  int case_id = 0;  // 1: a-b >= 2, 2: a-b = 1, 3: a = b
  bool verified = false;
  // length of the q_k-periodic run after U, and the length predicted by the decomposition
  std::uint64_t run = 0;
  std::uint64_t predicted_run = 0;
};
RepetitionData repetition(const WordSystem& ws, int k);
// number of pairs (suffix U of M_k M_{k+1}, exponent in {a_{k+1}, a_{k+1}+1}) with s = U M_k^e M_{k-1} M_k^- ...
int repetition_decompositions(const WordSystem& ws, int k);

struct ComplexityResult {
  bool window_ok = false;
  std::uint64_t required_length = 0;
  std::uint64_t count = 0;
};
ComplexityResult complexity_count(const LetterSource& word, std::uint64_t length, std::uint64_t n, const ConvergentTable& table);

}  // namespace sturmian
