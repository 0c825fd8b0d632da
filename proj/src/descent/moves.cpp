#include "zc/descent.hpp"

namespace zc::descent {

namespace {

void require_dS(int dS) {
  if (dS < 1 || dS > 3) throw InvalidInput("dS must be 1, 2 or 3, got " + std::to_string(dS));
}

// Smallest l + 1 for which O(l + 1) is very ample.
long very_ample_from(int dS) { return dS == 3 ? 1 : (dS == 2 ? 2 : 3); }
// Smallest l for which O(l) is generated by sections.
long generated_from(int dS) { return dS == 1 ? 2 : 1; }
long vb_l_from(int dS) { return dS == 3 ? 0 : 1; }

std::string str(long v) { return std::to_string(v); }

void fail(const Move& m, const std::string& why) { throw PreconditionFailed(m.str(), why); }

void check_target(const DelPezzo& S, const Move& m) {
  long s = 0;
  bool any = false;
  for (const auto& [b, k] : m.combo) {
    if (k < 0) fail(m, "target coefficients must be nonnegative");
    if (k == 0) continue;
    any = true;
    if (b == "x4" && S.dS != 3) fail(m, "x4 targets exist only on cubic surfaces");
    s += k * S.degree_of(b);
  }
  if (!any) fail(m, "empty target");
  if (s != m.s) fail(m, "deg(target) = " + str(s) + " != s = " + str(m.s));
  if (S.dS == 1 && m.combo.size() != 1) fail(m, "dS = 1 only subtracts s*h");
}

}  // namespace

long h0(int dS, long l) {
  require_dS(dS);
  if (l < 0) throw InvalidInput("h0 needs l >= 0");
  return 1 + dS * (l * l + l) / 2;
}

long genus(int dS, long l) {
  require_dS(dS);
  if (l < 1) throw InvalidInput("genus needs l >= 1");
  return 1 + dS * l * (l - 1) / 2;
}

std::map<std::string, long> witness_for(const DelPezzo& S, const CycleState& st, const Move& m) {
  (void)st;
  switch (m.kind) {
    case MoveKind::Complement: return {{"h0_l1", h0(S.dS, m.l + 1)}, {"H2", (m.l + 1) * (m.l + 1) * S.dS}};
    case MoveKind::VariantComplement:
      return {{"h0_l", h0(S.dS, m.l)}, {"h0_l1", h0(S.dS, m.l + 1)}, {"h0_1", h0(S.dS, 1)}};
    case MoveKind::VBSubtract: return {{"h0_l", h0(S.dS, m.l)}, {"h0_l1", h0(S.dS, m.l + 1)}};
    case MoveKind::CurveRR: return {{"h0_l", h0(S.dS, m.l)}, {"genus", genus(S.dS, m.l)}};
    case MoveKind::EntryRR: return {{"gamma", (m.degree - st.abstract_degree) / S.dS}};
    case MoveKind::InvolutionFlip:
    case MoveKind::AddBasis: return {};
  }
  return {};
}

CycleState apply_move(const DelPezzo& S, const CycleState& st, const Move& m) {
  S.validate();
  const long d = st.unknown_degree;
  const int eps = st.sign;
  CycleState next = st;
  if (m.kind == MoveKind::EntryRR) {
    if (!st.abstract) fail(m, "EntryRR applies to an abstract class only");
    if (m.degree < 0) fail(m, "degree >= 0");
    long diff = m.degree - st.abstract_degree;
    if (diff % S.dS != 0) fail(m, "degree = total mod dS");
    if (diff < 0) fail(m, "gamma >= 0");
    return CycleState{1, m.degree, {{"h", -diff / S.dS}}, false, 0};
  }
  if (st.abstract) fail(m, "abstract class needs EntryRR first");

  switch (m.kind) {
    case MoveKind::Complement: {
      if (m.l + 1 < very_ample_from(S.dS))
        fail(m, "O(l+1) very ample: l+1 >= " + str(very_ample_from(S.dS)));
      long bound = h0(S.dS, m.l + 1) - 2;
      if (d > bound) fail(m, "d <= h0(l+1) - 2: " + str(d) + " > " + str(bound));
      long sq = (m.l + 1) * (m.l + 1);
      next.sign = -eps;
      next.unknown_degree = sq * S.dS - d;
      next.coeffs["h"] += eps * sq;
      break;
    }
    case MoveKind::VariantComplement: {
      if (m.l < generated_from(S.dS)) fail(m, "O(l) generated by sections: l >= " + str(generated_from(S.dS)));
      long a = h0(S.dS, m.l), b = h0(S.dS, m.l + 1), one = h0(S.dS, 1);
      if (a < d + 1) fail(m, "h0(l) >= d + 1: " + str(a) + " < " + str(d + 1));
      if (!(b - d > one)) fail(m, "h0(l+1) - d > h0(1): " + str(b - d) + " <= " + str(one));
      long k = m.l * (m.l + 1);
      next.sign = -eps;
      next.unknown_degree = k * S.dS - d;
      next.coeffs["h"] += eps * k;
      break;
    }
    case MoveKind::VBSubtract: {
      if (m.l < vb_l_from(S.dS)) fail(m, "l >= " + str(vb_l_from(S.dS)));
      if (m.s < 1) fail(m, "s >= 1");
      check_target(S, m);
      long a = h0(S.dS, m.l), b = h0(S.dS, m.l + 1);
      if (!(a < d)) fail(m, "h0(l) < d: " + str(a) + " >= " + str(d));
      if (b - d < 2 * m.s) fail(m, "h0(l+1) - d >= 2s: " + str(b - d) + " < " + str(2 * m.s));
      if (d < m.s) fail(m, "d >= s");
      next.unknown_degree = d - m.s;
      for (const auto& [sym, k] : m.combo) next.coeffs[sym] += eps * k;
      break;
    }
    case MoveKind::InvolutionFlip:
      if (S.dS != 2) fail(m, "involution exists only for dS = 2");
      next.sign = -eps;
      next.coeffs["h"] += eps * d;
      break;
    case MoveKind::CurveRR: {
      if (m.l < very_ample_from(S.dS)) fail(m, "smooth curve in |O(l)|: l >= " + str(very_ample_from(S.dS)));
      long participating = d;
      for (const auto& [sym, k] : m.combo) {
        long deg = S.degree_of(sym);
        if (sym != "h" && k != 0) participating += deg;
      }
      long room = h0(S.dS, m.l) - 2;
      if (participating > room)
        fail(m, "participating degree <= h0(l) - 2: " + str(participating) + " > " + str(room));
      long nd = eps * d + S.degree_of(m.combo);
      long g = genus(S.dS, m.l);
      if (nd < g) fail(m, "degree >= genus: " + str(nd) + " < " + str(g));
      next.sign = 1;
      next.unknown_degree = nd;
      for (const auto& [sym, k] : m.combo) next.coeffs[sym] -= k;
      break;
    }
    case MoveKind::AddBasis: {
      bool any = false;
      for (const auto& [sym, k] : m.combo) {
        if (k < 0) fail(m, "AddBasis coefficients must be nonnegative");
        any = any || k > 0;
      }
      if (!any) fail(m, "empty combination");
      next.unknown_degree = d + S.degree_of(m.combo);
      for (const auto& [sym, k] : m.combo) next.coeffs[sym] -= eps * k;
      break;
    }
    case MoveKind::EntryRR: break;
  }
  for (auto it = next.coeffs.begin(); it != next.coeffs.end();) it = it->second == 0 ? next.coeffs.erase(it) : std::next(it);
  return next;
}

}  // namespace zc::descent
