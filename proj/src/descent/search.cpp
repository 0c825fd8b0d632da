#include <deque>
#include <set>

#include "zc/descent.hpp"

namespace zc::descent {

namespace {

Goal make_goal(std::string name, std::string description, std::function<bool(const CycleState&)> accepts,
               std::function<bool(long)> admits = {}) {
  return Goal{std::move(name), std::move(description), std::move(accepts), std::move(admits)};
}

}  // namespace

Goal goal_by_name(const std::string& name) {
  auto concrete = [](auto pred) { return [pred](const CycleState& st) { return !st.abstract && pred(st); }; };
  auto bound = [&](long b, int sign) {
    return concrete([b, sign](const CycleState& st) { return st.unknown_degree <= b && (sign == 0 || st.sign == sign); });
  };
  if (name == "cubic") return make_goal(name, "unknown degree <= 18", bound(18, 0));
  if (name == "cubic-positive") return make_goal(name, "positive sign, unknown degree <= 18", bound(18, 1));
  if (name == "cubic-negative") return make_goal(name, "negative sign, unknown degree <= 18", bound(18, -1));
  if (name == "x4") return make_goal(name, "unknown degree <= 4", bound(4, 0));
  if (name == "x4-positive") return make_goal(name, "positive sign, unknown degree <= 4", bound(4, 1));
  if (name == "coray")
    return make_goal(name, "unknown degree in {1, 4} (start degree prime to 3)",
                     concrete([](const CycleState& st) { return st.unknown_degree == 1 || st.unknown_degree == 4; }),
                     [](long d) { return d % 3 != 0; });
  if (name == "dp2") return make_goal(name, "positive sign, unknown degree <= 13", bound(13, 1));
  if (name == "dp2-refined")
    return make_goal(name, "positive sign, unknown degree in {13, 12} or <= 7", concrete([](const CycleState& st) {
              long d = st.unknown_degree;
              return st.sign == 1 && (d == 13 || d == 12 || d <= 7);
            }));
  if (name == "dp1") return make_goal(name, "positive sign, unknown degree <= 15", bound(15, 1));
  if (name == "dp1-refined")
    return make_goal(name, "unknown degree in {15, 7} or <= 4", concrete([](const CycleState& st) {
              long d = st.unknown_degree;
              return d == 15 || d == 7 || d <= 4;
            }));
  throw InvalidInput("unknown goal '" + name + "'");
}

std::string default_goal_name(const DelPezzo& S) {
  if (S.dS == 3) return S.with_x4 ? "x4" : "cubic";
  return S.dS == 2 ? "dp2" : "dp1";
}

namespace {

long min_complement_l(int dS) { return dS == 3 ? 0 : (dS == 2 ? 1 : 2); }
long min_variant_l(int dS) { return dS == 1 ? 2 : 1; }
long min_curve_l(int dS) { return dS == 3 ? 1 : (dS == 2 ? 2 : 3); }

// Candidate moves at a state in the fixed search order.
std::vector<Move> candidates(const DelPezzo& S, const CycleState& st, long dmax, long lmax) {
  std::vector<Move> out;
  const int dS = S.dS;
  const long d = st.unknown_degree;

  // VBSubtract: the only usable l has h0(l) < d <= h0(l+1).
  long l0 = -1;
  for (long l = 0; h0(dS, l) < d; ++l) l0 = l;
  if (l0 >= (dS == 3 ? 0 : 1)) {
    long room = (h0(dS, l0 + 1) - d) / 2;
    std::vector<std::pair<long, Combo>> targets;
    for (long k = 1; k * dS <= room; ++k) targets.push_back({k * dS, {{"h", k}}});
    if (S.with_x4)
      for (long a = 1; 4 * a <= room; ++a)
        for (long k = 0; 4 * a + 3 * k <= room; ++k) {
          Combo c{{"x4", a}};
          if (k > 0) c["h"] = k;
          targets.push_back({4 * a + 3 * k, c});
        }
    std::stable_sort(targets.begin(), targets.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& [s, c] : targets)
      if (s <= d) out.push_back(Move::vb_subtract(l0, s, c));
  }

  for (long l = min_complement_l(dS); l <= lmax && (l + 1) * (l + 1) * dS - d <= dmax; ++l)
    if (d <= h0(dS, l + 1) - 2) out.push_back(Move::complement(l));

  for (long l = min_variant_l(dS); l <= lmax && l * (l + 1) * dS - d <= dmax; ++l)
    if (h0(dS, l) >= d + 1 && h0(dS, l + 1) - d > h0(dS, 1)) out.push_back(Move::variant_complement(l));

  if (dS == 2) out.push_back(Move::involution_flip());

  // Riemann-Roch on a curve, used to turn a negative sign positive.
  if (st.sign == -1) {
    std::vector<long> x4_options{0};
    if (S.with_x4) x4_options = {0, -1, 1, -2, 2};
    for (long l = min_curve_l(dS); l <= lmax && genus(dS, l) <= dmax; ++l)
      for (long b : x4_options) {
        long participating = d + (b != 0 ? 4 : 0);
        if (participating > h0(dS, l) - 2) continue;
        long base = -d + 4 * b;
        long g = genus(dS, l);
        long a = g - base <= 0 ? -((base - g) / dS) : (g - base + dS - 1) / dS;
        Combo c;
        if (a != 0) c["h"] = a;
        if (b != 0) c["x4"] = b;
        if (base + a * dS <= dmax) out.push_back(Move::curve_rr(l, c));
      }
  }

  for (long k = 1; d + k * dS <= dmax; ++k) out.push_back(Move::add_basis({{"h", k}}));
  if (S.with_x4)
    for (long a = 1; a <= 2; ++a)
      for (long k = 0; d + 4 * a + k * dS <= dmax; ++k) {
        Combo c{{"x4", a}};
        if (k > 0) c["h"] = k;
        out.push_back(Move::add_basis(c));
      }
  return out;
}

Move with_witness(const DelPezzo& S, const CycleState& st, Move m) {
  m.witness = witness_for(S, st, m);
  return m;
}

}  // namespace

SearchResult find_certificate(const DelPezzo& S, const CycleState& initial, const Goal& goal,
                              const SearchLimits& limits) {
  S.validate();
  SearchResult result;
  Certificate cert{S, initial, {}, initial};
  CycleState start = initial;
  if (initial.abstract) {
    long d = std::max(initial.abstract_degree, 0L);
    while ((d - initial.abstract_degree) % S.dS != 0) ++d;
    Move entry = with_witness(S, initial, Move::entry_rr(d));
    start = apply_move(S, initial, entry);
    cert.moves.push_back(entry);
  }
  if (start.unknown_degree < 0) throw InvalidInput("start degree must be nonnegative");
  if (goal.accepts(start)) {
    cert.final_state = start;
    result.certificate = cert;
    return result;
  }
  const long dmax = std::max(start.unknown_degree, limits.degree_floor) + limits.degree_margin;
  const long lmax = start.unknown_degree + limits.l_margin;

  struct Node {
    CycleState state;
    long parent;
    Move move;
  };
  std::vector<Node> nodes{{start, -1, Move{}}};
  std::set<std::pair<int, long>> seen{{start.sign, start.unknown_degree}};
  std::deque<long> queue{0};
  while (!queue.empty()) {
    long idx = queue.front();
    queue.pop_front();
    ++result.explored;
    const CycleState cur = nodes[static_cast<std::size_t>(idx)].state;
    for (auto& m : candidates(S, cur, dmax, lmax)) {
      CycleState next;
      try {
        next = apply_move(S, cur, m);
      } catch (const PreconditionFailed&) {
        continue;
      }
      if (next.unknown_degree < 0 || next.unknown_degree > dmax) continue;
      if (!seen.insert({next.sign, next.unknown_degree}).second) continue;
      nodes.push_back({next, idx, with_witness(S, cur, m)});
      long ni = static_cast<long>(nodes.size()) - 1;
      if (goal.accepts(next)) {
        std::vector<Move> path;
        for (long i = ni; nodes[static_cast<std::size_t>(i)].parent >= 0; i = nodes[static_cast<std::size_t>(i)].parent)
          path.push_back(nodes[static_cast<std::size_t>(i)].move);
        cert.moves.insert(cert.moves.end(), path.rbegin(), path.rend());
        cert.final_state = next;
        result.certificate = cert;
        return result;
      }
      queue.push_back(ni);
    }
  }
  for (const auto& [sign, d] : seen) result.frontier.push_back(sign * d);
  return result;
}

std::vector<Move> induction_step(const DelPezzo& S, const CycleState& st) {
  if (S.dS != 3) throw InvalidInput("induction_step is the cubic-surface strategy (dS = 3)");
  const long d = st.unknown_degree;
  if (st.abstract || d < 20) throw InvalidInput("induction_step needs a concrete state of degree >= 20");
  long l = 0;
  while (!(h0(3, l) < d && d <= h0(3, l + 1))) ++l;
  std::vector<Move> moves;
  CycleState cur = st;
  auto push = [&](Move m) {
    m = with_witness(S, cur, m);
    cur = apply_move(S, cur, m);
    moves.push_back(m);
  };
  if (d <= h0(3, l + 1) - 2) {
    long sq = (l + 1) * (l + 1) * 3;
    if (sq - d < d)
      push(Move::complement(l));
    else
      push(Move::vb_subtract(l, 3, {{"h", 1}}));
  } else {
    // d = h0(l+1) or h0(l+1) - 1: add h, then subtract 2h one level up.
    push(Move::add_basis({{"h", 1}}));
    push(Move::vb_subtract(l + 1, 6, {{"h", 2}}));
  }
  return moves;
}

}  // namespace zc::descent
