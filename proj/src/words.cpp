#include "sturmian/words.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <unordered_set>

namespace sturmian {

Word::Word(std::string_view bits) {
  for (char c : bits) {
    if (c != '0' && c != '1') fail_input("word letters must be 0 or 1");
    bits_.push_back(c == '1');
  }
}

Word& Word::operator+=(const Word& o) {
  bits_.insert(bits_.end(), o.bits_.begin(), o.bits_.end());
  return *this;
}

Word Word::operator+(const Word& o) const {
  Word w = *this;
  w += o;
  return w;
}

Word Word::power(std::uint64_t n) const {
  Word w;
  w.bits_.reserve(bits_.size() * n);
  for (std::uint64_t i = 0; i < n; ++i) w += *this;
  return w;
}

Word Word::prefix(std::size_t n) const {
  Word w;
  w.bits_.assign(bits_.begin(), bits_.begin() + std::min(n, bits_.size()));
  return w;
}

Word Word::suffix(std::size_t n) const {
  n = std::min(n, bits_.size());
  Word w;
  w.bits_.assign(bits_.end() - n, bits_.end());
  return w;
}

Word Word::reversed() const {
  Word w = *this;
  std::reverse(w.bits_.begin(), w.bits_.end());
  return w;
}

bool Word::starts_with(const Word& p) const {
  return p.size() <= size() && std::equal(p.bits_.begin(), p.bits_.end(), bits_.begin());
}

std::string Word::str() const {
  std::string s;
  s.reserve(bits_.size());
  for (bool b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

std::string Word::rle() const {
  std::ostringstream out;
  std::size_t i = 0;
  while (i < bits_.size()) {
    std::size_t j = i;
    while (j < bits_.size() && bits_[j] == bits_[i]) ++j;
    if (i > 0) out << ' ';
    out << (bits_[i] ? '1' : '0');
    if (j - i > 1) out << '^' << (j - i);
    i = j;
  }
  return out.str();
}

namespace {

Integer value_range(const std::vector<bool>& bits, std::size_t lo, std::size_t hi, const Integer& base) {
  if (hi - lo <= 64) {
    Integer v = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      v *= base;
      if (bits[i]) v += base - 1;
    }
    return v;
  }
  std::size_t mid = lo + (hi - lo) / 2;
  return value_range(bits, lo, mid, base) * ipow(base, hi - mid) + value_range(bits, mid, hi, base);
}

}  // namespace

Integer Word::value(const Integer& base) const {
  if (bits_.empty()) return 0;
  return value_range(bits_, 0, bits_.size(), base);
}

Word rle_parse(std::string_view text) {
  Word w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok.empty() || (tok[0] != '0' && tok[0] != '1')) fail_input("bad run-length token '" + tok + "'");
    std::uint64_t count = 1;
    if (tok.size() > 1) {
      if (tok[1] != '^') fail_input("bad run-length token '" + tok + "'");
      count = std::stoull(tok.substr(2));
    }
    for (std::uint64_t i = 0; i < count; ++i) w.push_back(tok[0] - '0');
  }
  return w;
}

WordSystem::WordSystem(ConvergentTable table, InterceptDigits digits, std::uint64_t cap)
    : table_(std::move(table)), digits_(std::move(digits)), cap_(cap) {
  horizon_ = table_.horizon();
  if (!digits_.terminating) horizon_ = std::min<int>(horizon_, static_cast<int>(digits_.b.size()));
  std::vector<Integer> head;
  for (int k = 1; k <= horizon_; ++k) head.push_back(digits_.digit(k));
  if (auto v = check_digit_rules(head, table_))
    fail_input("invalid digit at index " + std::to_string(v->index) + ": " + v->reason, v->index);
  t_.assign(horizon_ + 1, 0);
  for (int k = 1; k <= horizon_; ++k) t_[k] = t_[k - 1] + head[k - 1] * table_.q(k - 1);
  for (int k = 0; k <= horizon_; ++k)
    if (table_.q(k) - t_[k] < 1) fail_internal("r_k < 1 at k = " + std::to_string(k));
  const Integer limit = Integer(1) << 62;
  for (int k = -1; k <= horizon_ && table_.q(k) < limit; ++k) {
    q_small_.push_back(table_.q(k).get_ui());
    a_small_.push_back(k >= 1 ? table_.a(k).get_ui() : 0);
    b_small_.push_back(k >= 1 ? head[k - 1].get_ui() : 0);
  }
}

const Integer& WordSystem::t(int k) const {
  if (k < 0 || k > horizon_) fail_horizon("t_" + std::to_string(k) + " outside word horizon " + std::to_string(horizon_));
  return t_[k];
}

std::uint64_t WordSystem::q64(int k) const {
  if (k + 1 >= static_cast<int>(q_small_.size())) fail_horizon("q_" + std::to_string(k) + " too large for letter access");
  return q_small_[k + 1];
}

int WordSystem::descend(int k, std::uint64_t n, bool standard) const {
  if (k > horizon_) fail_horizon("level " + std::to_string(k) + " beyond word horizon " + std::to_string(horizon_));
  if (n < 1 || n > q64(k)) fail_internal("letter index outside word");
  while (k >= 2) {
    std::uint64_t q1 = q_small_[k], q2 = q_small_[k - 1];
    std::uint64_t b = standard ? 0 : b_small_[k + 1];
    std::uint64_t head = (a_small_[k + 1] - b) * q1;
    if (n <= head) {
      n = (n - 1) % q1 + 1;
      k -= 1;
      continue;
    }
    n -= head;
    if (n <= q2) {
      k -= 2;
      continue;
    }
    n -= q2;
    n = (n - 1) % q1 + 1;
    k -= 1;
  }
  if (k == 1) {
    std::uint64_t b = standard ? 0 : b_small_[2];
    return n == a_small_[2] - b ? 1 : 0;
  }
  if (k == 0) return 0;
  return 1;
}

int WordSystem::v_letter(int k, std::uint64_t n) const { return descend(k, n, false); }
int WordSystem::m_letter(int k, std::uint64_t n) const { return descend(k, n, true); }

std::uint64_t WordSystem::letters_available() const {
  if (horizon_ + 1 >= static_cast<int>(q_small_.size())) return std::numeric_limits<std::uint64_t>::max();
  return q_small_[horizon_ + 1] - 1;
}

int WordSystem::letter_at(std::uint64_t n) const {
  if (n < 1) fail_input("letter index is 1-based");
  for (int k = 0; k <= horizon_; ++k) {
    if (k + 1 >= static_cast<int>(q_small_.size())) break;
    if (q_small_[k + 1] > n) return descend(k, n, false);
  }
  fail_horizon("letter " + std::to_string(n) + " needs q_K > n; word horizon is " + std::to_string(horizon_));
}

void WordSystem::check_cap(const Integer& len) const {
  if (len > cap_) fail_horizon("word of length " + len.get_str() + " exceeds materialization cap " + std::to_string(cap_));
}

Word WordSystem::standard_word(int k) const {
  if (k < 0 || k > horizon_) fail_horizon("standard word level outside horizon");
  check_cap(q(k));
  Word prev("1"), cur("0");
  for (int j = 1; j <= k; ++j) {
    std::uint64_t e = a(j).get_ui();
    Word next = (j == 1) ? cur.power(e - 1) + prev : cur.power(e) + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Word WordSystem::v_word(int k) const {
  if (k < -1 || k > horizon_) fail_horizon("V_k level outside horizon");
  if (k == -1) return Word("1");
  check_cap(q(k));
  Word prev("1"), cur("0");
  for (int j = 1; j <= k; ++j) {
    std::uint64_t aj = a(j).get_ui(), bj = b(j).get_ui();
    Word next = (j == 1) ? cur.power(aj - bj - 1) + prev + cur.power(bj) : cur.power(aj - bj) + prev + cur.power(bj);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Word WordSystem::t_word(int k) const { return standard_word(k).prefix(t(k).get_ui()); }
Word WordSystem::r_word(int k) const { return standard_word(k).suffix(r(k).get_ui()); }

namespace {

Integer floor_or_ceil(const ConvergentTable& table, const LinearForm& x, bool upper) {
  return upper ? certified_ceil(table, x) : certified_floor(table, x);
}

// floor/ceiling of x + tau with |tau| < delta
Integer floor_with_tail(const ConvergentTable& table, const LinearForm& x, const Rational& delta, bool upper) {
  ThetaEnclosure th = theta_enclosure(table, table.horizon() - 1);
  Interval iv = enclose(x, th);
  Rational lo = iv.lower - delta, hi = iv.upper + delta;
  if (upper) {
    Integer c = floor_q(lo) + 1;
    if (hi <= c) return c;
  } else {
    Integer f = ceil_q(hi) - 1;
    if (lo >= f) return f;
  }
  fail_horizon("floor-formula letter not certified; intercept may lie in Z theta + Z or the horizon is too short");
}

}  // namespace

int floor_letter(const ConvergentTable& table, const InterceptDigits& digits, std::uint64_t n, bool upper) {
  if (n < 1) fail_input("letter index is 1-based");
  if (digits.terminating) {
    int len = static_cast<int>(digits.b.size());
    if (len > table.horizon()) fail_horizon("digits extend past slope horizon");
    LinearForm sigma = partial_sum(digits, table, len);
    LinearForm x1{sigma.u + Rational(Integer(n) + 1), sigma.v};
    LinearForm x0{sigma.u + Rational(Integer(n)), sigma.v};
    return static_cast<int>(Integer(floor_or_ceil(table, x1, upper) - floor_or_ceil(table, x0, upper)).get_si());
  }
  int L = std::min<int>(static_cast<int>(digits.b.size()), table.horizon() - 1);
  if (L < 1) fail_horizon("no digits available");
  LinearForm sigma = partial_sum(digits, table, L);
  Rational delta(1, table.q(L));
  LinearForm x1{sigma.u + Rational(Integer(n) + 1), sigma.v};
  LinearForm x0{sigma.u + Rational(Integer(n)), sigma.v};
  return static_cast<int>(Integer(floor_with_tail(table, x1, delta, upper) - floor_with_tail(table, x0, delta, upper)).get_si());
}

int floor_letter_degenerate(const ConvergentTable& table, const Integer& m, const Integer& p, std::uint64_t n, bool upper) {
  if (n < 1) fail_input("letter index is 1-based");
  Integer c = Integer(n) - m + 1;
  LinearForm x1{Rational(c), Rational(p)};
  LinearForm x0{Rational(c - 1), Rational(p)};
  return static_cast<int>(Integer(floor_or_ceil(table, x1, upper) - floor_or_ceil(table, x0, upper)).get_si());
}

InterceptDigits formal_intercept(const LetterSource& word, const ConvergentTable& table, int K) {
  if (K < 1 || K > table.horizon()) fail_horizon("formal intercept level outside slope horizon");
  WordSystem standard(table, InterceptDigits::zeros());
  if (standard.horizon() < K) fail_horizon("slope horizon too short");
  std::uint64_t qK = to_u64(table.q(K), "q_K");
  std::vector<int> s(qK);
  for (std::uint64_t i = 0; i + 1 < qK; ++i) s[i] = word(i + 1);

  auto matches = [&](int k, std::uint64_t q, std::uint64_t t) {
    for (std::uint64_t i = 0; i + 1 < q; ++i)
      if (s[i] != standard.m_letter(k, (t + i) % q + 1)) return false;
    return true;
  };

  InterceptDigits out;
  std::uint64_t t_prev = 0;
  for (int k = 1; k <= K; ++k) {
    std::uint64_t q = to_u64(table.q(k), "q_k"), q_prev = to_u64(table.q(k - 1), "q_k");
    std::vector<std::uint64_t> found;
    if (q <= 4096) {
      for (std::uint64_t t = 0; t < q; ++t)
        if (matches(k, q, t)) found.push_back(t);
    } else {
      std::uint64_t amax = to_u64(table.a(k), "a_k");
      for (std::uint64_t bb = 0; bb <= amax; ++bb) {
        std::uint64_t t = t_prev + bb * q_prev;
        if (t < q && matches(k, q, t)) found.push_back(t);
      }
    }
    if (found.empty()) fail_input("no conjugate of M_" + std::to_string(k) + " matches the word", k);
    if (found.size() > 1) fail_input("several conjugates of M_" + std::to_string(k) + " match the word", k);
    std::uint64_t t = found[0];
    if (t < t_prev || (t - t_prev) % q_prev != 0) fail_input("conjugate offsets are not nested at level " + std::to_string(k), k);
    out.b.emplace_back(static_cast<unsigned long>((t - t_prev) / q_prev));
    t_prev = t;
  }
  return out;
}

CommonPrefix common_prefix_w(const WordSystem& ws, int k) {
  if (k < 0 || k + 1 > ws.horizon()) fail_horizon("common prefix needs level k+1 within horizon");
  std::uint64_t qk = to_u64(ws.q(k), "q_k"), qk1 = to_u64(ws.q(k + 1), "q_k");
  auto x = [&](std::uint64_t i) { return i <= qk1 ? ws.v_letter(k + 1, i) : ws.v_letter(k, i - qk1); };
  auto y = [&](std::uint64_t i) { return i <= qk ? ws.v_letter(k, i) : ws.v_letter(k + 1, i - qk); };
  CommonPrefix out;
  std::uint64_t total = qk + qk1;
  while (out.length < total && x(out.length + 1) == y(out.length + 1)) ++out.length;
  if (out.length <= ws.cap()) {
    for (std::uint64_t i = 1; i <= out.length; ++i) out.word.push_back(x(i));
    out.materialized = true;
  }
  return out;
}

Integer common_prefix_length_formula(const WordSystem& ws, int k) {
  return ws.q(k + 1) + ws.q(k) - ws.t(k + 1) - 2;
}

PrefixCheck is_prefix(const WordSystem& ws, int k) {
  if (k < 0 || k + 1 > ws.horizon()) fail_horizon("prefix test needs level k+1 within horizon");
  PrefixCheck out;
  std::uint64_t qk = to_u64(ws.q(k), "q_k");
  out.direct = true;
  for (std::uint64_t i = 1; i <= qk && out.direct; ++i) out.direct = ws.v_letter(k, i) == ws.v_letter(k + 1, i);
  // extremal pattern: b_{k+1} = a_{k+1}, b_k = 0, b_{k-1} = a_{k-1}, ... with a_1 - 1 in place of a_1
  bool extremal = true;
  for (int j = k + 1; j >= 1 && extremal; --j) {
    bool full = (k + 1 - j) % 2 == 0;
    Integer want = full ? (j == 1 ? ws.a(1) - 1 : ws.a(j)) : Integer(0);
    extremal = ws.b(j) == want;
  }
  out.criterion = !extremal;
  return out;
}

RepetitionData repetition(const WordSystem& ws, int k) {
  if (k < 1) fail_input("repetition data needs k >= 1");
  if (k + 4 > ws.horizon()) fail_horizon("repetition data reads digits through k+4");
  RepetitionData out;
  Integer gap2 = ws.a(k + 2) - ws.b(k + 2);
  std::uint64_t rk = to_u64(ws.r(k), "r_k"), rk1 = to_u64(ws.r(k + 1), "r_k");
  std::uint64_t tk = to_u64(ws.t(k), "t_k"), tk1 = to_u64(ws.t(k + 1), "t_k");
  std::uint64_t qk = to_u64(ws.q(k), "q_k"), qk1 = to_u64(ws.q(k + 1), "q_k"), qkm = to_u64(ws.q(k - 1), "q_k");
  std::function<int(std::uint64_t)> u_letter;
  std::uint64_t ulen;
  if (gap2 >= 2) {
    out.case_id = 1;
    out.a_tilde = ws.a(k + 1);
  } else if (gap2 == 1) {
    out.case_id = 2;
    out.a_tilde = ws.a(k + 1) + (ws.b(k + 3) < ws.a(k + 3) ? 1 : 0);
  } else {
    out.case_id = 3;
    bool bump = (ws.a(k + 2) == 1 && ws.a(k + 3) - ws.b(k + 3) >= 2) ||
                (ws.a(k + 2) == 1 && ws.a(k + 3) == 1 && ws.b(k + 3) == 0 && ws.a(k + 4) == ws.b(k + 4));
    out.a_tilde = ws.a(k + 1) + (bump ? 1 : 0);
  }
  if (out.case_id != 3) {
    ulen = rk1;
    u_letter = [&, tk1](std::uint64_t i) { return ws.m_letter(k + 1, tk1 + i); };
  } else {
    ulen = rk + qk1;
    u_letter = [&, tk, rk](std::uint64_t i) { return i <= rk ? ws.m_letter(k, tk + i) : ws.m_letter(k + 1, i - rk); };
  }
  if (ulen <= ws.cap())
    for (std::uint64_t i = 1; i <= ulen; ++i) out.u.push_back(u_letter(i));

  bool ok = ulen >= 1 && ulen <= qk + qk1;
  // U is a suffix of M_k M_{k+1}
  std::uint64_t total = qk + qk1;
  for (std::uint64_t i = 1; i <= ulen && ok; ++i) {
    std::uint64_t pos = total - ulen + i;
    int c = pos <= qk ? ws.m_letter(k, pos) : ws.m_letter(k + 1, pos - qk);
    ok = c == u_letter(i);
  }
  for (std::uint64_t i = 1; i <= ulen && ok; ++i) ok = ws.letter_at(i) == u_letter(i);
  out.predicted_run = (out.a_tilde.get_ui() + 1) * qk + qkm - 2;
  std::uint64_t run = 0;
  while (run <= out.predicted_run && ws.letter_at(ulen + run + 1) == ws.m_letter(k, run % qk + 1)) ++run;
  out.run = run;
  out.verified = ok && run == out.predicted_run;
  return out;
}

int repetition_decompositions(const WordSystem& ws, int k) {
  if (k < 1 || k + 3 > ws.horizon()) fail_horizon("repetition scan needs 1 <= k and k+3 within horizon");
  std::uint64_t qk = to_u64(ws.q(k), "q_k"), qk1 = to_u64(ws.q(k + 1), "q_k"), qkm = to_u64(ws.q(k - 1), "q_k");
  std::uint64_t total = qk + qk1;
  auto mm = [&](std::uint64_t pos) { return pos <= qk ? ws.m_letter(k, pos) : ws.m_letter(k + 1, pos - qk); };
  int count = 0;
  for (std::uint64_t ulen = 1; ulen <= total; ++ulen) {
    bool ok = true;
    for (std::uint64_t i = 1; i <= ulen && ok; ++i) ok = ws.letter_at(i) == mm(total - ulen + i);
    if (!ok) continue;
    for (std::uint64_t e = ws.a(k + 1).get_ui(); e <= ws.a(k + 1).get_ui() + 1; ++e) {
      // M_k^e M_{k-1} M_k^-
      std::uint64_t len = e * qk + qkm + qk - 1;
      bool match = true;
      for (std::uint64_t i = 1; i <= len && match; ++i) {
        int c;
        if (i <= e * qk) c = ws.m_letter(k, (i - 1) % qk + 1);
        else if (i <= e * qk + qkm) c = ws.m_letter(k - 1, i - e * qk);
        else c = ws.m_letter(k, i - e * qk - qkm);
        match = ws.letter_at(ulen + i) == c;
      }
      if (match) ++count;
    }
  }
  return count;
}

ComplexityResult complexity_count(const LetterSource& word, std::uint64_t length, std::uint64_t n, const ConvergentTable& table) {
  ComplexityResult out;
  if (n == 0) {
    out.count = 1;
    out.window_ok = true;
    return out;
  }
  int j = 0;
  while (j <= table.horizon() && table.q(j) <= n) ++j;
  if (j > table.horizon()) fail_horizon("no q_j exceeds n within the slope horizon");
  out.required_length = to_u64(table.q(j), "q_j") + n;
  out.window_ok = length >= out.required_length;
  if (length < n) return out;
  std::vector<char> s(length);
  for (std::uint64_t i = 0; i < length; ++i) s[i] = static_cast<char>('0' + word(i + 1));
  std::set<std::string> seen;
  for (std::uint64_t i = 0; i + n <= length; ++i) seen.emplace(s.data() + i, n);
  out.count = seen.size();
  return out;
}

}  // namespace sturmian
