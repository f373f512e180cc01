#include "sturmian/cfrac.hpp"

#include <algorithm>

namespace sturmian {

NumberSpec::NumberSpec(Integer b, WordSystem ws) : base(std::move(b)), words(std::move(ws)) {
  if (base < 2) fail_input("base must be at least 2");
}

NumberSpec NumberSpec::from_digits(Integer b, const ConvergentTable& table, InterceptDigits digits) {
  return NumberSpec(std::move(b), WordSystem(table, std::move(digits)));
}

NumberSpec NumberSpec::degenerate(Integer b, const ConvergentTable& table, const Integer& m, const Integer& p, bool upper) {
  DegenerateIntercept d = degenerate_expansions(m, p, table);
  return from_digits(std::move(b), table, upper ? d.upper() : d.lower());
}

NumberSpec NumberSpec::characteristic(Integer b, const ConvergentTable& table) {
  return from_digits(std::move(b), table, InterceptDigits::zeros());
}

namespace {

// (b^{n x} - 1) / (b^x - 1) = 1 + b^x + ... + b^{(n-1)x}
Integer geometric(const Integer& base, const Integer& x, const Integer& n) {
  if (n <= 0) return 0;
  Integer bx = ipow(base, x);
  Integer num = ipow(base, x * n) - 1;
  return num / (bx - 1);
}

std::size_t raw_index(int k, int i) { return 5 * static_cast<std::size_t>(k) + i; }

int level_of(std::size_t raw) { return static_cast<int>(raw / 5); }

}  // namespace

RawTerms raw_terms(const NumberSpec& spec, int k) {
  const WordSystem& ws = spec.words;
  if (k < 0 || k + 1 > ws.horizon()) fail_horizon("raw terms at level " + std::to_string(k) + " need digits through k+1");
  const Integer& b = spec.base;
  RawTerms row;
  row.k = k;
  Integer gap = ws.a(k + 1) - ws.b(k + 1);
  if (gap == 0) {
    if (k == 0) fail_input("b_1 must be below a_1", 1);
    row.c = -ipow(b, ws.r(k - 1));
  } else {
    row.c = ipow(b, ws.r(k) + ws.q(k - 1)) * geometric(b, ws.q(k), gap - 1);
  }
  row.d = ipow(b, ws.t(k)) - 1;
  row.e = ipow(b, ws.r(k)) - 1;
  row.f = ipow(b, ws.t(k)) * geometric(b, ws.q(k), ws.b(k + 1));
  return row;
}

Integer boehmer_term(const ConvergentTable& table, const Integer& base, int k) {
  if (k < 1) fail_input("Boehmer terms start at k = 1");
  Integer num = ipow(base, table.q(k)) - ipow(base, table.q(k - 2));
  Integer den = ipow(base, table.q(k - 1)) - 1;
  if (num % den != 0) fail_internal("Boehmer quotient is not an integer");
  return num / den;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::One: return "1";
    case Family::TwoMinusOne: return "2-1";
    case Family::Two: return "2";
    case Family::Three: return "3";
    case Family::Four: return "4";
  }
  return "?";
}

std::string FamilyTag::str() const {
  if (family == Family::TwoMinusOne) return "(2)_" + std::to_string(k) + "-(1)_" + std::to_string(k);
  return "(" + family_name(family) + ")_" + std::to_string(k);
}

TermStream alpha_stream(const NumberSpec& spec, int K) {
  TermStream s;
  s.stage = Stage::Raw;
  static const Family fam[5] = {Family::One, Family::TwoMinusOne, Family::Two, Family::Three, Family::Four};
  static const char* names[5] = {"c", "d", "1", "e", "f"};
  for (int k = 0; k <= K; ++k) {
    RawTerms row = raw_terms(spec, k);
    const Integer* vals[5] = {&row.c, &row.d, nullptr, &row.e, &row.f};
    for (int i = 0; i < 5; ++i) {
      Term t;
      t.value = vals[i] ? *vals[i] : Integer(1);
      t.tag = {fam[i], k};
      t.first = t.last = raw_index(k, i);
      t.shape = i == 2 ? std::string("1") : names[i] + std::to_string(k);
      s.terms.push_back(std::move(t));
    }
  }
  return s;
}

TermStream apply_rule_i(const TermStream& raw) {
  if (raw.stage != Stage::Raw) fail_internal("rule (i) expects the raw stream");
  TermStream out;
  out.stage = Stage::Cleaned;
  out.head = raw.head;
  const auto& t = raw.terms;
  std::size_t i = 0;
  while (i < t.size()) {
    bool is_c = t[i].first % 5 == 0 && t[i].first == t[i].last;
    if (is_c && t[i].value < 0) fail_internal("consecutive negative c terms at level " + std::to_string(level_of(t[i].first) - 1));
    if (is_c && i + 8 < t.size() && t[i + 5].value < 0) {
      Term m;
      m.value = t[i].value + 1 + t[i + 8].value;
      m.tag = {Family::Three, level_of(t[i + 5].first)};
      m.first = t[i].first;
      m.last = t[i + 8].last;
      m.shape = t[i].shape + "+1+" + t[i + 8].shape;
      std::vector<Integer> window;
      for (std::size_t j = i; j <= i + 8; ++j) window.push_back(t[j].value);
      if (term_product(window) != term_product({m.value})) fail_internal("rule (i) changed the stream value");
      out.terms.push_back(std::move(m));
      i += 9;
      continue;
    }
    out.terms.push_back(t[i]);
    ++i;
  }
  return out;
}

TermStream apply_rule_ii(const TermStream& cleaned) {
  if (cleaned.stage != Stage::Cleaned) fail_internal("rule (ii) expects the cleaned stream");
  TermStream out;
  out.stage = Stage::Final;
  out.head = cleaned.head;
  const auto& t = cleaned.terms;
  std::size_t i = 0;
  auto absorb = [](Term& x, const Term& y) {
    x.value += y.value;
    x.tag = y.tag;
    x.last = y.last;
    if (y.value != 0) x.shape = x.shape.empty() ? y.shape : x.shape + "+" + y.shape;
  };
  while (i < t.size()) {
    if (t[i].value == 0 && i + 1 < t.size()) {
      if (out.terms.empty()) {
        // fold into the integer part
        out.head += t[i + 1].value;
      } else {
        absorb(out.terms.back(), t[i + 1]);
      }
      i += 2;
      continue;
    }
    if (t[i].value == 0) break;  // trailing zero; nothing follows to fold with
    if (out.terms.empty() && out.head != 0) fail_internal("nonzero integer part after head folding");
    out.terms.push_back(t[i]);
    ++i;
  }
  if (out.head != 0) fail_internal("stream folds to a nonzero integer part");
  for (const auto& x : out.terms)
    if (x.value < 1) fail_internal("partial quotient below 1 survives rewriting at raw position " + std::to_string(x.first));
  return out;
}

Matrix2 term_product(const std::vector<Integer>& terms) {
  Matrix2 m{1, 0, 0, 1};
  for (const auto& a : terms) {
    Matrix2 n{m[0] * a + m[1], m[0], m[2] * a + m[3], m[2]};
    m = n;
  }
  return m;
}

Matrix2 stream_matrix(const Integer& base, const TermStream& s) {
  std::vector<Integer> v;
  v.reserve(s.terms.size() + 1);
  if (s.head != 0) fail_internal("stream has a nonzero integer part");
  for (const auto& t : s.terms) v.push_back(t.value);
  Matrix2 p = term_product(v);
  Integer b1 = base - 1;
  return Matrix2{b1 * p[2], b1 * p[3], b1 * p[0], b1 * p[1]};
}

CFExpansion cf_expansion(const NumberSpec& spec, int K) {
  if (K < 2) fail_input("cf expansion needs K >= 2");
  CFExpansion out;
  out.K = K;
  out.raw = alpha_stream(spec, K);
  out.cleaned = apply_rule_i(out.raw);
  out.full = apply_rule_ii(out.cleaned);
  std::size_t cutoff = raw_index(K - 1, 0);
  for (const auto& t : out.full.terms) {
    if (t.last >= cutoff) break;
    out.terms.push_back(t);
  }
  return out;
}

std::vector<ConvergentPair> convergents(const Integer& base, const std::vector<Term>& terms) {
  std::vector<ConvergentPair> out;
  Integer b1 = base - 1;
  Integer P2 = b1, Q2 = 0, P1 = 0, Q1 = b1;
  int j = 0;
  for (const auto& t : terms) {
    Integer P = t.value * P1 + P2, Q = t.value * Q1 + Q2;
    ++j;
    out.push_back({P, Q, j, t.tag});
    P2 = P1;
    Q2 = Q1;
    P1 = P;
    Q1 = Q;
  }
  return out;
}

namespace {

FamilyFraction build_fraction(const NumberSpec& spec, Family family, int k, bool formal) {
  const WordSystem& ws = spec.words;
  const Integer& b = spec.base;
  FamilyFraction f;
  f.tag = {family, k};
  if (k == -1) {
    if (family == Family::Four) {
      f.num = 0;
      f.den = b - 1;
      f.height = 1;
      return f;
    }
    if (family == Family::Three) {
      f.num = b - 1;
      f.den = 0;
      f.height = 0;
      return f;
    }
    fail_input("only (3)_{-1} and (4)_{-1} exist at level -1");
  }
  if (k < 0) fail_input("family level must be >= -1");
  auto val = [&](const Word& w) { return w.value(b); };
  auto R = [&](int j) { return val(ws.r_word(j)); };
  auto T = [&](int j) { return val(ws.t_word(j)); };
  auto one = [&](FamilyFraction& x) {
    if (!formal && ws.r(k + 1) <= ws.r(k)) fail_input("(1)_k is meaningful only when a_{k+1} > b_{k+1}");
    x.num = R(k + 1) - R(k);
    x.den = ipow(b, ws.r(k + 1)) - ipow(b, ws.r(k));
    x.height = ws.r(k + 1);
  };
  auto two = [&](FamilyFraction& x) {
    Integer rk1 = ws.r(k + 1);
    x.num = R(k + 1) * ipow(b, ws.t(k)) + T(k);
    x.den = ipow(b, rk1 + ws.t(k)) - 1;
    x.height = rk1 + ws.t(k);
  };
  switch (family) {
    case Family::One:
      one(f);
      break;
    case Family::Two:
      two(f);
      break;
    case Family::TwoMinusOne: {
      FamilyFraction a, c;
      one(a);
      two(c);
      f.num = c.num - a.num;
      f.den = c.den - a.den;
      f.height = c.height;
      break;
    }
    case Family::Three: {
      Integer r1 = R(k + 1);
      Integer mk = val(ws.standard_word(k));
      f.num = r1 * ipow(b, ws.q(k)) + mk - r1;
      f.den = ipow(b, ws.r(k + 1)) * (ipow(b, ws.q(k)) - 1);
      f.height = ws.r(k + 1) + ws.q(k);
      break;
    }
    case Family::Four:
      f.num = val(ws.v_word(k + 1));
      f.den = ipow(b, ws.q(k + 1)) - 1;
      f.height = ws.q(k + 1);
      break;
  }
  return f;
}

bool pair_identity(const Integer& alpha, const FamilyFraction& prev, const FamilyFraction& prev2, const FamilyFraction& cur) {
  return cur.num == alpha * prev.num + prev2.num && cur.den == alpha * prev.den + prev2.den;
}

}  // namespace

FamilyFraction family_fraction(const NumberSpec& spec, Family family, int k) { return build_fraction(spec, family, k, false); }
FamilyFraction family_fraction_formal(const NumberSpec& spec, Family family, int k) { return build_fraction(spec, family, k, true); }

RecurrenceReport recurrence_check(const NumberSpec& spec, int k) {
  RecurrenceReport rep;
  rep.k = k;
  RawTerms row = raw_terms(spec, k);
  rep.negative_branch = row.c < 0;
  auto F = [&](Family fam, int j) { return family_fraction_formal(spec, fam, j); };
  FamilyFraction four_prev = F(Family::Four, k - 1), three_prev = F(Family::Three, k - 1);
  FamilyFraction one = F(Family::One, k), tmo = F(Family::TwoMinusOne, k), two = F(Family::Two, k);
  FamilyFraction three = F(Family::Three, k), four = F(Family::Four, k);
  rep.holds[0] = pair_identity(row.c, four_prev, three_prev, one);
  rep.holds[1] = pair_identity(row.d, one, four_prev, tmo);
  rep.holds[2] = pair_identity(1, tmo, one, two);
  rep.holds[3] = pair_identity(row.e, two, tmo, three);
  rep.holds[4] = pair_identity(row.f, three, two, four);
  return rep;
}

}  // namespace sturmian
