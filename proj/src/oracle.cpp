#include "sturmian/oracle.hpp"

#include <cmath>

namespace sturmian {

XiEnclosure truncate_xi(const LetterSource& word, const Integer& base, std::uint64_t N) {
  if (base < 2) fail_input("base must be at least 2");
  Word w;
  for (std::uint64_t n = 1; n <= N; ++n) w.push_back(word(n));
  XiEnclosure out;
  Integer scale = ipow(base, N);
  out.lower = Rational(w.value(base), scale);
  out.lower.canonicalize();
  out.upper = out.lower + Rational(1, scale);
  out.upper.canonicalize();
  out.digits_used = N;
  return out;
}

XiEnclosure truncate_xi(const NumberSpec& spec, std::uint64_t N) {
  if (N >= spec.words.letters_available() + 1) fail_horizon("truncation length " + std::to_string(N) + " needs a deeper word horizon");
  return truncate_xi([&](std::uint64_t n) { return spec.words.letter_at(n); }, spec.base, N);
}

std::vector<Integer> cf_of_rational(const Rational& x) {
  Rational c = x;
  c.canonicalize();
  Integer p = c.get_num(), q = c.get_den();
  std::vector<Integer> out;
  Integer a;
  mpz_fdiv_q(a.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  out.push_back(a);
  p -= a * q;
  while (p != 0) {
    // x = p/q in (0,1): next quotient is floor(q/p)
    Integer t = q / p;
    out.push_back(t);
    Integer r = q - t * p;
    q = p;
    p = r;
  }
  return out;
}

Rational cf_value(const std::vector<Integer>& cf) {
  if (cf.empty()) fail_input("empty continued fraction");
  Rational v = cf.back();
  for (std::size_t i = cf.size() - 1; i-- > 0;) v = Rational(cf[i]) + 1 / v;
  v.canonicalize();
  return v;
}

std::vector<Integer> certified_cf_prefix(const Interval& enclosure) {
  if (enclosure.lower > enclosure.upper) fail_input("enclosure endpoints out of order");
  std::vector<Integer> a = cf_of_rational(enclosure.lower), b = cf_of_rational(enclosure.upper);
  std::size_t n = 0;
  while (n < a.size() && n < b.size() && a[n] == b[n]) ++n;
  if (n > 0) --n;
  if (n <= 1) fail_horizon("enclosure too wide to certify any partial quotient");
  return std::vector<Integer>(a.begin(), a.begin() + n);
}

std::vector<Fraction> cf_convergents(const std::vector<Integer>& cf) {
  std::vector<Fraction> out;
  Integer p2 = 1, q2 = 0, p1 = cf.empty() ? Integer(0) : cf[0], q1 = 1;
  for (std::size_t i = 1; i < cf.size(); ++i) {
    Integer p = cf[i] * p1 + p2, q = cf[i] * q1 + q2;
    out.push_back({p, q});
    p2 = p1;
    q2 = q1;
    p1 = p;
    q1 = q;
  }
  return out;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

Verdict legendre_check(const Integer& P, const Integer& Q, const Interval& enclosure) {
  if (Q < 1) fail_input("denominator must be positive");
  Rational x(P, Q);
  x.canonicalize();
  Integer q = x.get_den();
  Rational qq = Rational(q * q);
  if (enclosure.width() >= 1 / (4 * qq)) return Verdict::Inconclusive;
  Rational d_lo = abs(enclosure.lower - x), d_hi = abs(enclosure.upper - x);
  Rational worst = d_lo > d_hi ? d_lo : d_hi;
  Rational best = enclosure.contains(x) ? Rational(0) : (d_lo < d_hi ? d_lo : d_hi);
  if (worst < 1 / (2 * qq)) return Verdict::Yes;
  if (best > 1 / qq) return Verdict::No;
  return Verdict::Inconclusive;
}

namespace {

// largest e with base^e * d <= 1, for 0 < d < 1
Integer floor_neglog(const Rational& d, const Integer& base) {
  Integer e = 0;
  Rational cur = d;
  Rational b(base);
  // coarse step using bit sizes
  std::size_t bits_b = mpz_sizeinbase(base.get_mpz_t(), 2);
  long long diff = static_cast<long long>(mpz_sizeinbase(d.get_den_mpz_t(), 2)) - static_cast<long long>(mpz_sizeinbase(d.get_num_mpz_t(), 2));
  if (diff > 2) {
    long long step = (diff - 2) / static_cast<long long>(bits_b);
    if (step > 0) {
      cur *= Rational(ipow(base, static_cast<unsigned long>(step)));
      e += static_cast<long>(step);
    }
  }
  while (cur * b <= 1) {
    cur *= b;
    ++e;
  }
  return e;
}

}  // namespace

ExponentBracket empirical_exponent(const Integer& P, const Integer& Q, const Interval& enclosure, const Integer& base) {
  Rational x(P, Q);
  x.canonicalize();
  if (enclosure.contains(x)) fail_horizon("enclosure contains the fraction; raise N");
  Rational d_lo = abs(enclosure.lower - x), d_hi = abs(enclosure.upper - x);
  Rational dmin = d_lo < d_hi ? d_lo : d_hi, dmax = d_lo < d_hi ? d_hi : d_lo;
  if (dmax >= 1) fail_input("fraction is at distance >= 1");
  ExponentBracket out;
  out.lower = floor_neglog(dmax, base);
  Integer f = floor_neglog(dmin, base);
  // smallest e with base^e * dmin >= 1
  out.upper = (Rational(ipow(base, f)) * dmin == 1) ? f : f + 1;
  return out;
}

namespace {

double log_abs(const Rational& x) {
  long en, ed;
  double mn = mpz_get_d_2exp(&en, x.get_num_mpz_t());
  double md = mpz_get_d_2exp(&ed, x.get_den_mpz_t());
  return std::log(std::fabs(mn)) - std::log(md) + (en - ed) * std::log(2.0);
}

}  // namespace

double approximate_exponent(const Integer& P, const Integer& Q, const Interval& enclosure) {
  Rational x(P, Q);
  x.canonicalize();
  Rational mid = (enclosure.lower + enclosure.upper) / 2;
  Rational d = mid - x;
  if (d == 0) return INFINITY;
  return -log_abs(d) / log_abs(Rational(x.get_den()));
}

CertifiedPrefix certified_prefix_for(const NumberSpec& spec, std::size_t want, int level) {
  std::uint64_t N = 4 * to_u64(spec.words.q(std::min(level, spec.horizon())), "q_level");
  if (N < 16) N = 16;
  std::uint64_t available = spec.words.letters_available();
  CertifiedPrefix best;
  int confirmations = 0;
  while (true) {
    if (N > available) N = available;
    XiEnclosure enc = truncate_xi(spec, N);
    std::vector<Integer> pre;
    try {
      pre = certified_cf_prefix(enc.interval());
    } catch (const Error&) {
      pre.clear();
    }
    if (pre.size() >= want + 1) {
      ++confirmations;
      best = {enc, pre};
      if (confirmations >= 2) return best;
    } else {
      confirmations = 0;
    }
    if (N == available) {
      if (confirmations >= 1) return best;
      fail_horizon("word horizon exhausted before " + std::to_string(want) + " partial quotients were certified");
    }
    N *= 2;
  }
}

VerifyReport verify_expansion(const NumberSpec& spec, int K, std::size_t want) {
  VerifyReport rep;
  CFExpansion cf = cf_expansion(spec, K);
  CertifiedPrefix pre = certified_prefix_for(spec, want);
  rep.N = pre.enclosure.digits_used;
  rep.certified = pre.quotients;
  for (const auto& t : cf.terms) rep.pipeline.push_back(t.value);
  rep.matches = pre.quotients[0] == 0;
  std::size_t overlap = std::min(rep.pipeline.size(), rep.certified.size() - 1);
  rep.compared = overlap;
  for (std::size_t i = 0; i < overlap && rep.matches; ++i) {
    if (rep.pipeline[i] != rep.certified[i + 1]) {
      rep.matches = false;
      rep.first_mismatch = static_cast<long>(i);
    }
  }
  if (overlap < want) rep.matches = false;
  return rep;
}

}  // namespace sturmian
