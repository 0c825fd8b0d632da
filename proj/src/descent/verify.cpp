// Certificate checker. Deliberately shares no rule code with moves.cpp: h0
// and genus are recomputed by summation and every side condition is restated.
#include "zc/descent.hpp"

namespace zc::descent {

namespace {

long rr_h0(int dS, long l) {
  long sum = 0;
  for (long k = 1; k <= l; ++k) sum += k;
  return 1 + dS * sum;
}

long rr_genus(int dS, long l) {
  long sum = 0;
  for (long k = 1; k < l; ++k) sum += k;
  return 1 + dS * sum;
}

struct Reject {
  std::string reason;
};

long basis_degree(const DelPezzo& S, const std::string& b) {
  if (b == "h") return S.dS;
  if (b == "x4" && S.with_x4 && S.dS == 3) return 4;
  throw Reject{"unknown basis cycle " + b};
}

long combo_degree(const DelPezzo& S, const Combo& c) {
  long d = 0;
  for (const auto& [b, k] : c) d += k * basis_degree(S, b);
  return d;
}

void expect_witness(const Move& m, const std::string& key, long value) {
  auto it = m.witness.find(key);
  if (it == m.witness.end()) throw Reject{"witness " + key + " missing"};
  if (it->second != value)
    throw Reject{"witness " + key + " = " + std::to_string(it->second) + " but recomputed " + std::to_string(value)};
}

void require(bool cond, const std::string& inequality) {
  if (!cond) throw Reject{inequality + " violated"};
}

long total_of(const DelPezzo& S, const CycleState& st) {
  if (st.abstract) return st.abstract_degree;
  return st.sign * st.unknown_degree + combo_degree(S, st.coeffs);
}

CycleState step(const DelPezzo& S, const CycleState& st, const Move& m) {
  const int dS = S.dS;
  const long d = st.unknown_degree;
  CycleState out = st;
  if (m.kind == MoveKind::EntryRR) {
    require(st.abstract, "EntryRR on abstract class");
    long diff = m.degree - st.abstract_degree;
    require(m.degree >= 0, "degree >= 0");
    require(diff % dS == 0, "degree = total (mod dS)");
    long gamma = diff / dS;
    expect_witness(m, "gamma", gamma);
    require(gamma >= 0, "gamma >= 0");
    out = CycleState{};
    out.unknown_degree = m.degree;
    out.coeffs["h"] = -gamma;
    return out;
  }
  require(!st.abstract, "state is concrete");
  require(d >= 0, "unknown degree >= 0");
  switch (m.kind) {
    case MoveKind::Complement: {
      long need = dS == 3 ? 1 : dS == 2 ? 2 : 3;
      require(m.l >= 0 && m.l + 1 >= need, "l+1 >= " + std::to_string(need) + " (very ample)");
      long hl1 = rr_h0(dS, m.l + 1);
      expect_witness(m, "h0_l1", hl1);
      expect_witness(m, "H2", (m.l + 1) * (m.l + 1) * dS);
      require(d <= hl1 - 2, "d <= h0(l+1) - 2 [" + std::to_string(d) + " <= " + std::to_string(hl1 - 2) + "]");
      out.sign = -st.sign;
      out.unknown_degree = (m.l + 1) * (m.l + 1) * dS - d;
      out.coeffs["h"] += st.sign * (m.l + 1) * (m.l + 1);
      break;
    }
    case MoveKind::VariantComplement: {
      long need = dS == 1 ? 2 : 1;
      require(m.l >= need, "l >= " + std::to_string(need) + " (generated by sections)");
      long hl = rr_h0(dS, m.l), hl1 = rr_h0(dS, m.l + 1), h1 = rr_h0(dS, 1);
      expect_witness(m, "h0_l", hl);
      expect_witness(m, "h0_l1", hl1);
      expect_witness(m, "h0_1", h1);
      require(hl >= d + 1, "h0(l) >= d + 1 [" + std::to_string(hl) + " >= " + std::to_string(d + 1) + "]");
      require(hl1 - d > h1, "h0(l+1) - d > h0(1) [" + std::to_string(hl1 - d) + " > " + std::to_string(h1) + "]");
      out.sign = -st.sign;
      out.unknown_degree = m.l * (m.l + 1) * dS - d;
      out.coeffs["h"] += st.sign * m.l * (m.l + 1);
      break;
    }
    case MoveKind::VBSubtract: {
      require(m.l >= (dS == 3 ? 0 : 1), "l within range for dS");
      for (const auto& [b, k] : m.combo) require(k >= 0, "target coefficients >= 0");
      if (dS != 3)
        for (const auto& [b, k] : m.combo) require(b == "h", "target is a multiple of h for dS != 3");
      require(m.s >= 1, "s >= 1");
      require(combo_degree(S, m.combo) == m.s, "deg(target) = s");
      long hl = rr_h0(dS, m.l), hl1 = rr_h0(dS, m.l + 1);
      expect_witness(m, "h0_l", hl);
      expect_witness(m, "h0_l1", hl1);
      require(hl < d, "h0(l) < d [" + std::to_string(hl) + " < " + std::to_string(d) + "]");
      require(hl1 - d >= 2 * m.s,
              "h0(l+1) - d >= 2s [" + std::to_string(hl1 - d) + " >= " + std::to_string(2 * m.s) + "]");
      require(d >= m.s, "d >= s");
      out.unknown_degree = d - m.s;
      for (const auto& [b, k] : m.combo) out.coeffs[b] += st.sign * k;
      break;
    }
    case MoveKind::InvolutionFlip:
      require(dS == 2, "dS = 2 (anticanonical double cover)");
      out.sign = -st.sign;
      out.coeffs["h"] += st.sign * d;
      break;
    case MoveKind::CurveRR: {
      long need = dS == 3 ? 1 : dS == 2 ? 2 : 3;
      require(m.l >= need, "l >= " + std::to_string(need) + " (smooth curve in |O(l)|)");
      long hl = rr_h0(dS, m.l), g = rr_genus(dS, m.l);
      expect_witness(m, "h0_l", hl);
      expect_witness(m, "genus", g);
      long support = d;
      for (const auto& [b, k] : m.combo)
        if (b != "h" && k != 0) support += basis_degree(S, b);
      require(support <= hl - 2, "participating degree <= h0(l) - 2 [" + std::to_string(support) +
                                     " <= " + std::to_string(hl - 2) + "]");
      long nd = st.sign * d + combo_degree(S, m.combo);
      require(nd >= g, "degree >= genus [" + std::to_string(nd) + " >= " + std::to_string(g) + "]");
      out.sign = 1;
      out.unknown_degree = nd;
      for (const auto& [b, k] : m.combo) out.coeffs[b] -= k;
      break;
    }
    case MoveKind::AddBasis: {
      long deg = 0;
      for (const auto& [b, k] : m.combo) {
        require(k >= 0, "AddBasis coefficients >= 0");
        deg += k * basis_degree(S, b);
      }
      require(deg > 0, "AddBasis adds a positive degree");
      out.unknown_degree = d + deg;
      for (const auto& [b, k] : m.combo) out.coeffs[b] -= st.sign * k;
      break;
    }
    case MoveKind::EntryRR: break;
  }
  return out;
}

}  // namespace

VerifyReport verify_certificate(const Certificate& c) {
  VerifyReport r;
  const DelPezzo& S = c.surface;
  if (S.dS < 1 || S.dS > 3 || (S.with_x4 && S.dS != 3)) return {false, 0, "invalid surface"};
  CycleState st = c.initial;
  long total = 0;
  try {
    total = total_of(S, st);
  } catch (const Reject& e) {
    return {false, 0, e.reason};
  }
  for (std::size_t i = 0; i < c.moves.size(); ++i) {
    try {
      st = step(S, st, c.moves[i]);
      for (const auto& [b, k] : st.coeffs) (void)basis_degree(S, b);
      if (total_of(S, st) != total) throw Reject{"degree conservation"};
    } catch (const Reject& e) {
      return {false, static_cast<int>(i), c.moves[i].str() + ": " + e.reason};
    }
  }
  if (!(st == c.final_state)) return {false, static_cast<int>(c.moves.size()), "final state mismatch"};
  return r;
}

}  // namespace zc::descent
