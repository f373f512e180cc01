#include "sturmian/exponent.hpp"

#include <algorithm>
#include <map>

namespace sturmian {

NuRow nu_row(const WordSystem& ws, int k) {
  if (k < 0 || k + 2 > ws.horizon()) fail_horizon("nu_k needs digits through k+2");
  NuRow row;
  row.k = k;
  Integer t = ws.t(k), r = ws.r(k), r1 = ws.r(k + 1), r2 = ws.r(k + 2);
  Integer q = ws.q(k), q1 = ws.q(k + 1);
  row.nu[0] = 2 + Rational(t, r1);
  row.nu[1] = 2 + Rational(r, r1 + t);
  row.nu[2] = 1 + Rational(q1, r1 + q);
  row.nu[3] = 1 + Rational(r2, q1);
  for (auto& x : row.nu) x.canonicalize();
  return row;
}

std::vector<NuRow> nu_table(const WordSystem& ws, int K) {
  std::vector<NuRow> out;
  for (int k = 0; k <= K; ++k) out.push_back(nu_row(ws, k));
  return out;
}

StrongConvergentRecord classify(const WordSystem& ws, Family family, int k) {
  if (k < 1 || k + 3 > ws.horizon()) fail_horizon("classification needs 1 <= k and digits through k+3");
  auto gap = [&](int j) { return Integer(ws.a(j) - ws.b(j)); };
  auto a = [&](int j) { return ws.a(j); };
  auto b = [&](int j) { return ws.b(j); };
  auto nu = [&](int j, int idx) { return nu_row(ws, j).nu[idx - 1]; };
  StrongConvergentRecord rec;
  rec.tag = {family, k};
  auto accept = [&](const char* cond, Rational mu, Integer E) {
    rec.accepted = true;
    rec.condition = cond;
    rec.mu = mu;
    rec.error = E;
  };
  Integer rk = ws.r(k), rk1 = ws.r(k + 1), rk2 = ws.r(k + 2), tk = ws.t(k);
  Integer qk = ws.q(k), qk1 = ws.q(k + 1);
  switch (family) {
    case Family::One:
      rec.height = rk1;
      if (gap(k + 1) >= 1 && gap(k + 2) >= 1)
        accept("a_{k+1}-b_{k+1}>=1, a_{k+2}-b_{k+2}>=1", nu(k, 1), 2 * rk1 + tk);
      else if (b(k) >= 1 && a(k + 1) == 1 && b(k + 1) == 0 && gap(k + 2) == 0)
        accept("b_k>=1, a_{k+1}=1, b_{k+1}=0, a_{k+2}=b_{k+2}", nu(k - 1, 3), rk1 + qk);
      else
        rec.condition = gap(k + 1) == 0 ? "a_{k+1}=b_{k+1}: not meaningful" : "no condition holds";
      break;
    case Family::Two:
      rec.height = rk1 + tk;
      if (gap(k + 2) >= 1 && b(k + 1) >= 1)
        accept("a_{k+2}-b_{k+2}>=1, b_{k+1}>=1", nu(k, 2), 2 * (rk1 + tk) + rk);
      else if (gap(k + 2) >= 1 && b(k + 1) == 0 && gap(k + 3) >= 1)
        accept("a_{k+2}-b_{k+2}>=1, b_{k+1}=0, a_{k+3}-b_{k+3}>=1", nu(k, 4), rk2 + qk1);
      else if (gap(k + 2) >= 1 && b(k + 1) == 0 && gap(k + 3) == 0)
        accept("a_{k+2}-b_{k+2}>=1, b_{k+1}=0, a_{k+3}=b_{k+3}", nu(k + 2, 2), rk2 + 2 * qk1);
      else
        rec.condition = "no condition holds";
      break;
    case Family::Three:
      rec.height = rk1 + qk;
      if (b(k + 1) >= 1 && gap(k + 2) >= 2)
        accept("b_{k+1}>=1, a_{k+2}-b_{k+2}>=2", nu(k, 3), rk1 + qk1 + qk);
      else if (gap(k + 2) == 1 && gap(k + 3) >= 1)
        accept("a_{k+2}-b_{k+2}=1, a_{k+3}-b_{k+3}>=1", nu(k + 1, 1), rk1 + qk1 + 2 * qk);
      else if (b(k + 1) >= 1 && a(k + 2) == 1 && b(k + 2) == 0 && gap(k + 3) == 0)
        accept("b_{k+1}>=1, a_{k+2}=1, b_{k+2}=0, a_{k+3}=b_{k+3}", nu(k, 3), rk1 + qk1 + qk);
      else
        rec.condition = "no condition holds";
      break;
    case Family::Four:
      rec.height = qk1;
      if (gap(k + 2) >= 2 && gap(k + 3) >= 1)
        accept("a_{k+2}-b_{k+2}>=2, a_{k+3}-b_{k+3}>=1", nu(k, 4), rk2 + qk1);
      else if (b(k + 1) == 0 && gap(k + 2) == 1 && gap(k + 3) >= 1)
        accept("b_{k+1}=0, a_{k+2}-b_{k+2}=1, a_{k+3}-b_{k+3}>=1", nu(k, 4), rk2 + qk1);
      else if (gap(k + 3) == 0)
        accept("a_{k+3}=b_{k+3}", 1 + nu(k, 4), rk2 + 2 * qk1);
      else
        rec.condition = "no condition holds";
      break;
    case Family::TwoMinusOne:
      fail_input("(2)_k - (1)_k is never a strong convergent candidate");
  }
  return rec;
}

int first_valid_level(const WordSystem& ws, int from) {
  int k = std::max(from, 1);
  while (k <= ws.horizon() && ws.t(k - 1) < 1) ++k;
  return k;
}

namespace {

using Seq = std::vector<StrongEntry>;

long find_label(const Seq& s, FamilyTag tag) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (const auto& l : s[i].labels)
      if (l == tag) return static_cast<long>(i);
  return -1;
}

// replace entries [from, to] by `with` when both ends are present and unmerged
void replace_span(Seq& s, FamilyTag from, FamilyTag to, const std::vector<StrongEntry>& with) {
  long i = find_label(s, from), j = find_label(s, to);
  if (i < 0 || j < 0 || j < i) return;
  if (s[i].labels.size() != 1 || s[j].labels.size() != 1) fail_internal("replacement rules overlap at " + from.str());
  s.erase(s.begin() + i, s.begin() + j + 1);
  s.insert(s.begin() + i, with.begin(), with.end());
}

}  // namespace

StrongReport strong_convergents(const WordSystem& ws, int k_lo, int k_hi) {
  if (k_lo < 1 || k_hi < k_lo) fail_input("empty classification window");
  if (k_hi + 4 > ws.horizon()) fail_horizon("classification window needs digits through k+4");
  for (int k = k_lo; k <= k_hi; ++k)
    if (ws.t(k - 1) < 1) fail_input("window level " + std::to_string(k) + " has t_{k-1} = 0", k);
  StrongReport rep;
  rep.k_lo = k_lo;
  rep.k_hi = k_hi;
  const Family fams[4] = {Family::One, Family::Two, Family::Three, Family::Four};
  Seq seq;
  for (int k = k_lo; k <= k_hi; ++k)
    for (Family f : fams) {
      rep.records.push_back(classify(ws, f, k));
      seq.push_back({{FamilyTag{f, k}}});
    }
  auto gap = [&](int j) { return Integer(ws.a(j) - ws.b(j)); };
  using F = Family;
  for (int k = k_lo; k <= k_hi; ++k) {
    if (gap(k + 2) == 0) {
      if (ws.b(k) >= 1)
        replace_span(seq, {F::Four, k - 1}, {F::Two, k + 1}, {{{{F::Four, k - 1}, {F::Two, k + 1}}}});
      else
        replace_span(seq, {F::Two, k - 1}, {F::Two, k + 1}, {{{{F::Two, k - 1}, {F::Four, k - 1}, {F::Two, k + 1}}}});
    } else if (gap(k + 2) == 1 && gap(k + 3) >= 1) {
      if (ws.b(k + 1) >= 1)
        replace_span(seq, {F::Three, k}, {F::One, k + 1}, {{{{F::Three, k}, {F::One, k + 1}}}});
      else
        replace_span(seq, {F::Two, k}, {F::One, k + 1},
                     {StrongEntry{{{F::Two, k}, {F::Four, k}}}, StrongEntry{{{F::Three, k}, {F::One, k + 1}}}});
    } else if (gap(k + 2) >= 2 && gap(k + 3) >= 1 && ws.b(k + 1) == 0) {
      replace_span(seq, {F::Two, k}, {F::Four, k}, {{{{F::Two, k}, {F::Four, k}}}});
    }
  }
  rep.sequence = std::move(seq);
  return rep;
}

ExponentEstimate exponent_estimate(const WordSystem& ws, int K) {
  if (K < 2) fail_input("estimate needs K >= 2");
  std::vector<NuRow> rows = nu_table(ws, K);
  ExponentEstimate est;
  est.K = K;
  est.window_lo = K / 2;
  auto gap = [&](int j) { return Integer(ws.a(j) - ws.b(j)); };
  std::array<bool, 4> full_present{};
  for (const auto& row : rows) {
    int k = row.k;
    std::array<bool, 4> use = {gap(k + 1) >= 1 && gap(k + 2) >= 1, gap(k + 2) >= 1, true, true};
    for (int j = 0; j < 4; ++j) {
      if (!use[j]) continue;
      if (!full_present[j] || row.nu[j] > est.nu_full[j]) est.nu_full[j] = row.nu[j];
      full_present[j] = true;
      if (k >= est.window_lo && (!est.present[j] || row.nu[j] > est.nu[j])) {
        est.nu[j] = row.nu[j];
        est.present[j] = true;
      }
    }
  }
  bool first = true;
  for (int j = 0; j < 4; ++j)
    if (est.present[j] && (first || est.nu[j] > est.mu)) {
      est.mu = est.nu[j];
      first = false;
    }
  first = true;
  for (int j = 0; j < 4; ++j)
    if (full_present[j] && (first || est.nu_full[j] > est.mu_full)) {
      est.mu_full = est.nu_full[j];
      first = false;
    }
  est.caveat = "finite-horizon maxima approximate limsup values from below; not a limit";
  return est;
}

LiouvilleReport liouville_flag(const WordSystem& ws, int K) {
  LiouvilleReport rep;
  const ConvergentTable& table = ws.table();
  rep.periodic = table.spec().periodic();
  int top = std::min(K, table.horizon());
  for (int k = 1; k <= top; ++k)
    if (table.a(k) > rep.max_a) rep.max_a = table.a(k);
  if (rep.periodic) {
    rep.verdict = "not Liouville: periodic slope has bounded partial quotients";
    return rep;
  }
  rep.verdict = "undetermined at finite horizon";
  for (int k = 2; k <= top && k + 2 <= ws.horizon(); ++k) {
    LiouvilleWitness w;
    w.k = k;
    w.a = table.a(k);
    w.nu4_km2 = nu_row(ws, k - 2).nu[3];
    w.nu3_km1 = nu_row(ws, k - 1).nu[2];
    rep.witnesses.push_back(std::move(w));
  }
  return rep;
}

ExtremalIntercept extremal_intercept(const ConvergentTable& table, int K) {
  const SlopeSpec& spec = table.spec();
  if (!spec.periodic()) fail_input("extremal intercept needs a periodic slope");
  if (K < 5) fail_horizon("extremal intercept needs K >= 5");
  ConvergentTable tab = table.extended(K);
  int s = static_cast<int>(spec.preperiod.size());
  int P = static_cast<int>(spec.period.size());
  // ratios q_k/q_{k-1} far out, one per residue class
  int far = std::max(K, s + 1) + 8 * P + 16;
  ConvergentTable deep = table.extended(far + P);
  auto cls = [&](int k) { return ((k - s - 1) % P + P) % P; };
  std::map<int, Rational> ratio;
  for (int k = far; k < far + P; ++k) {
    Rational r(deep.q(k), deep.q(k - 1));
    r.canonicalize();
    ratio[cls(k)] = r;
  }
  Rational best = ratio.begin()->second;
  for (auto& [c, r] : ratio)
    if (r > best) best = r;
  ExtremalIntercept out;
  for (auto& [c, r] : ratio)
    if ((best - r) / best < Rational(1, 1000000)) out.limsup_classes.push_back(c);
  auto in_set = [&](int k) {
    return k > s && std::find(out.limsup_classes.begin(), out.limsup_classes.end(), cls(k)) != out.limsup_classes.end();
  };
  std::vector<Integer> b(K, 0);
  auto t_at = [&](int k) {
    Integer acc = 0;
    for (int i = 1; i <= k; ++i) acc += b[i - 1] * tab.q(i - 1);
    return acc;
  };
  int j = 0;
  int k = 3;
  while (k + 1 <= K) {
    bool ok = in_set(k);
    if (ok && j >= 1) {
      Integer rk = tab.q(k) - t_at(k);
      // r_k >= (j_next - 1) q_k / j_next with j_next = j + 1
      ok = rk * (j + 1) >= Integer(j) * tab.q(k);
    }
    if (ok) {
      b[k] = tab.a(k + 1);
      out.spikes.push_back(k);
      ++j;
      k += 3;
      continue;
    }
    ++k;
  }
  if (out.spikes.size() < 2) fail_horizon("horizon too small to place two spikes");
  out.digits.b = std::move(b);
  out.digits.terminating = false;
  return out;
}

}  // namespace sturmian
