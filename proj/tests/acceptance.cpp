// Acceptance gate: one PASS/FAIL line per criterion on stdout, details on stderr.
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>

#include "oracles.hpp"
#include "zc/chow.hpp"
#include "zc/descent.hpp"
#include "zc/points.hpp"

using namespace zc;
using namespace zc::testing;
using namespace zc::descent;

namespace {

// Pinned limits.
constexpr double kSuiteSeconds = 10.0;      // criterion 2
constexpr double kGeometrySeconds = 30.0;   // criterion 8
constexpr long kCeiling = 200;
constexpr int kVietaInstances = 1000;
constexpr int kWeierstrassPoints = 10;
constexpr int kPsiSplitInstances = 100;
constexpr int kPencilSamples = 200;
constexpr int kPsiPairs = 50;
constexpr std::size_t kPsiDistinct = 20;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Check {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) note = what;
    ok = ok && cond;
  }
};

// Every admitted row found, verified and accepted by `accept`.
bool suite_ok(const SuiteReport& rep, const std::function<bool(const SuiteRow&)>& accept, std::string& why) {
  for (const auto& row : rep.rows) {
    if (row.skipped) continue;
    if (!row.found || !row.verified || !accept(row)) {
      why = rep.goal + ": start " + std::to_string(row.start) + (row.found ? " ends at " + std::to_string(row.final_degree) : " not found");
      return false;
    }
  }
  return true;
}

Check criterion1() {
  Check c;
  const std::pair<std::array<long, 2>, long> table[] = {{{3, 2}, 10}, {{3, 3}, 19}, {{3, 4}, 31},
                                                        {{2, 2}, 7},  {{2, 3}, 13}, {{1, 5}, 16}};
  for (const auto& [arg, want] : table)
    c.require(h0(static_cast<int>(arg[0]), arg[1]) == want,
              "h0(" + std::to_string(arg[0]) + "," + std::to_string(arg[1]) + ")");
  c.require(h0(3, 4) - 3 == 28, "28 = h0(3,4) - 3");
  return c;
}

Check criterion2() {
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  std::string why;
  auto cubic = prove_bound_suite({3, false}, goal_by_name("cubic"), kCeiling);
  c.require(suite_ok(cubic, [](const SuiteRow& r) { return r.final_degree <= 18; }, why), why);
  auto x4 = prove_bound_suite({3, true}, goal_by_name("x4"), kCeiling);
  c.require(suite_ok(x4, [](const SuiteRow& r) { return r.final_degree <= 4; }, why), why);
  double t = seconds_since(t0);
  c.require(t < kSuiteSeconds, "runtime " + std::to_string(t) + " s");
  std::cerr << "criterion 2: cubic max " << cubic.to_json()["max_final_degree"] << ", x4 max "
            << x4.to_json()["max_final_degree"] << ", " << t << " s\n";

  // Sign report for dS = 3 without x4: both signs reachable below 18.
  auto pos = prove_bound_suite({3, false}, goal_by_name("cubic-positive"), kCeiling);
  auto neg = prove_bound_suite({3, false}, goal_by_name("cubic-negative"), kCeiling);
  std::cerr << "info: cubic-positive all_ok=" << pos.all_ok() << " cubic-negative all_ok=" << neg.all_ok() << "\n";
  return c;
}

Check criterion3() {
  Check c;
  std::string why;
  auto rep = prove_bound_suite({3, false}, goal_by_name("coray"), 17);
  c.require(suite_ok(rep, [](const SuiteRow& r) { return r.final_degree == 1 || r.final_degree == 4; }, why), why);
  long covered = 0;
  for (const auto& r : rep.rows) covered += !r.skipped;
  c.require(covered == 12, "expected 12 degrees prime to 3");

  std::ifstream in(std::string(ZC_GOLDEN_DIR) + "/coray_d10.json");
  c.require(in.good(), "golden file missing");
  if (!in.good()) return c;
  Json golden = Json::parse(in);
  auto res = find_certificate({3, false}, CycleState::entry(10), goal_by_name("coray"));
  c.require(res.certificate && res.certificate->to_json() == golden, "d = 10 chain differs from golden");
  Certificate g = Certificate::from_json(golden);
  c.require(verify_certificate(g).ok, "golden chain does not verify");
  // 9h / 7h steps: after AddBasis(2h) and Complement with H = O(3) the state is 7h - z'.
  CycleState st = apply_move({3, false}, CycleState::entry(10), g.moves.at(0));
  st = apply_move({3, false}, st, g.moves.at(1));
  c.require(g.moves.at(1).witness.at("H2") == 27 && st.coeff("h") == 7 && st.unknown_degree == 11, "9h/7h step");
  return c;
}

Check criterion4() {
  Check c;
  std::string why;
  DelPezzo S{2, false};
  auto main = prove_bound_suite(S, goal_by_name("dp2"), kCeiling);
  c.require(suite_ok(main, [](const SuiteRow& r) { return r.final_degree <= 13; }, why), why);
  auto refined = prove_bound_suite(S, goal_by_name("dp2-refined"), kCeiling);
  c.require(suite_ok(refined,
                     [](const SuiteRow& r) { return r.final_degree == 13 || r.final_degree == 12 || r.final_degree <= 7; },
                     why),
            why);
  auto t13 = replay_threshold(S, goal_by_name("dp2"), 13, kCeiling);
  auto t12 = replay_threshold(S, goal_by_name("dp2"), 12, kCeiling, true);
  c.require(t13.ok, "threshold 13 replay");
  c.require(t12.ok, "threshold 12 (even) replay");
  std::cerr << "criterion 4: " << t13.to_json().dump() << "\n             " << t12.to_json().dump() << "\n";
  return c;
}

Check criterion5() {
  Check c;
  std::string why;
  DelPezzo S{1, false};
  auto main = prove_bound_suite(S, goal_by_name("dp1"), kCeiling);
  c.require(suite_ok(main, [](const SuiteRow& r) { return r.final_degree <= 15; }, why), why);
  auto refined = prove_bound_suite(S, goal_by_name("dp1-refined"), kCeiling);
  c.require(suite_ok(refined,
                     [](const SuiteRow& r) { return r.final_degree == 15 || r.final_degree == 7 || r.final_degree <= 4; },
                     why),
            why);
  auto t15 = replay_threshold(S, goal_by_name("dp1"), 15, kCeiling);
  c.require(t15.ok, "threshold 15 replay");
  std::cerr << "criterion 5: " << t15.to_json().dump() << "\n";
  return c;
}

Check criterion6() {
  Check c;
  Json j = chow_report(CurveDegrees{6, 6, 6});
  c.require(j["deg_D2"] == 216, "deg_D2");
  c.require(j["deg_D2_prime"] == 72, "deg_D2_prime");
  c.require(j["strict_inequality"] == true, "strict inequality");
  return c;
}

Check criterion7() {
  Check c;
  Rng rng(7);
  auto pair = [&] {
    for (;;) {
      std::array<Rational, 2> p{Rational(rand_int(rng, -40, 40)), Rational(rand_int(rng, -40, 40))};
      if (!p[0].is_zero() || !p[1].is_zero()) return p;
    }
  };
  auto prop = [](const std::array<Rational, 2>& a, const std::array<Rational, 2>& b) { return a[0] * b[1] == a[1] * b[0]; };
  int diag = 0, off = 0;
  for (int i = 0; i < kPencilSamples; ++i) {
    PencilSolution s = pencil_condition_solve(standard_skew_lines(), pair());
    diag += s.diagonal && s.rank == 2;
  }
  while (off < kPencilSamples) {
    auto u = pair(), v = pair(), w = pair();
    if (prop(u, v) && prop(u, w)) continue;
    c.require(pencil_rank(u, v, w) == 3, "off-diagonal sample of rank != 3");
    ++off;
  }
  c.require(diag == kPencilSamples, "diagonal samples");
  return c;
}

Check criterion8() {
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  Rng rng(8);

  int vieta = 0;
  while (vieta < kVietaInstances) {
    auto x = rand_point_coords(rng), y = rand_point_coords(rng);
    if (proportional(x, y)) continue;
    auto S = rand_cubic_through(rng, {x, y});
    if (!S) continue;
    auto oracle = vieta_third_point(*S, x, y);
    if (!oracle) continue;
    try {
      ProjPoint z = third_point(*S, ProjPoint::rational(x), ProjPoint::rational(y));
      c.require(proportional(z.rational_coords(), *oracle), "third_point vs Vieta");
    } catch (const GeometryError&) {
      continue;
    }
    ++vieta;
  }

  // y^2 = x^3 - x: O and the three 2-torsion points, then points over Q(sqrt(x^3 - x)).
  const Rational a(-1);
  CubicForm W = weierstrass_surface(rng, a, Rational(0));
  const EtaleAlgebra Q = EtaleAlgebra::rationals();
  int weier = 0;
  auto check_point = [&](const AlgElement& x, const AlgElement& y, bool origin) {
    const EtaleAlgebra& A = x.parent();
    Coords coords = origin ? Coords{AlgElement::zero(A), AlgElement::one(A), AlgElement::zero(A), AlgElement::zero(A)}
                           : Coords{x, y, AlgElement::one(A), AlgElement::zero(A)};
    ProjPoint P(coords);
    PlanePencil pencil{axis_in_plane_x3(rng, coords)};
    c.require(tangent_residual(W, pencil, P) == ProjPoint(weierstrass_minus_two(a, x, y, origin)), "tangent vs -2P");
    ++weier;
  };
  for (auto [x, y, origin] : {std::tuple{0L, 1L, true}, {-1L, 0L, false}, {0L, 0L, false}, {1L, 0L, false}})
    check_point(AlgElement(Q, Rational(x)), AlgElement(Q, Rational(y)), origin);
  for (long x = 2; weier < kWeierstrassPoints; ++x) {
    EtaleAlgebra A(Poly({Rational(-(x * x * x - x)), Rational(0), Rational(1)}));
    check_point(AlgElement(A, Rational(x)), AlgElement::generator(A), false);
  }

  // Lines through three collinear rational points of S split the algebra completely.
  int psi = 0;
  while (psi < kPsiSplitInstances) {
    auto p = rand_point_coords(rng, 3), q = rand_point_coords(rng, 3);
    if (proportional(p, q)) continue;
    Rational k = rand_nonzero(rng, 3);
    std::array<Rational, 4> r;
    for (std::size_t i = 0; i < 4; ++i) r[i] = p[i] + k * q[i];
    if (proportional(p, r) || proportional(q, r)) continue;
    auto S = rand_cubic_through(rng, {p, q, r});
    if (!S) continue;
    auto ax = rand_point_coords(rng), bx = rand_point_coords(rng);
    if (proportional(ax, bx)) continue;
    PlanePencil pencil{Line(ProjPoint::rational(ax), ProjPoint::rational(bx))};
    Line Wp(ProjPoint::rational(p), ProjPoint::rational(q));
    try {
      auto out = psi_minus_one(*S, pencil, Wp);
      auto delta = delta_point(*S, Wp);
      if (delta.algebra.degree() != 3) continue;
      std::size_t compared = 0;
      for (const auto& comp : out.components)
        for (const auto& root : rational_roots(comp.algebra.modulus())) {
          ProjPoint x = delta.point().specialize(root);
          c.require(comp.point.specialize(root) == tangent_residual(*S, pencil, x), "psi vs componentwise");
          ++compared;
        }
      c.require(compared == 3, "split scheme has 3 rational points");
    } catch (const GeometryError&) {
      continue;
    }
    ++psi;
  }
  double t = seconds_since(t0);
  c.require(t < kGeometrySeconds, "runtime " + std::to_string(t) + " s");
  std::cerr << "criterion 8: " << vieta << " Vieta, " << weier << " Weierstrass, " << psi << " psi instances, " << t
            << " s\n";
  return c;
}

CubicForm form(std::initializer_list<std::pair<Exponent, long>> terms) {
  std::map<Exponent, Rational> m;
  for (const auto& [e, v] : terms) m[e] += Rational(v);
  return CubicForm(m);
}

Check criterion9() {
  Check c;
  const CubicForm surfaces[] = {
      CubicForm::fermat(),
      form({{{0, 2, 1, 0}, 1}, {{3, 0, 0, 0}, -1}, {{1, 0, 2, 0}, 1}, {{0, 0, 0, 3}, 1}, {{0, 1, 1, 1}, 2}}),
      form({{{3, 0, 0, 0}, 1}, {{0, 3, 0, 0}, 1}, {{0, 0, 3, 0}, 2}, {{0, 0, 0, 3}, -2}, {{1, 1, 1, 0}, 1},
            {{0, 1, 2, 0}, -1}}),
  };
  Rng rng(9);
  for (std::size_t s = 0; s < 3; ++s) {
    const CubicForm& S = surfaces[s];
    c.require(!enumerate_rational(S, 2, 1).empty(), "surface " + std::to_string(s) + " has no small rational point");
    std::set<std::string> distinct;
    for (int i = 0; i < kPsiPairs; ++i) {
      auto a = rand_point_coords(rng, 4), b = rand_point_coords(rng, 4), p = rand_point_coords(rng, 4),
           q = rand_point_coords(rng, 4);
      if (proportional(a, b) || proportional(p, q)) continue;
      try {
        auto out = psi_minus_one(S, PlanePencil{Line(ProjPoint::rational(a), ProjPoint::rational(b))},
                                 Line(ProjPoint::rational(p), ProjPoint::rational(q)));
        bool valid = true;
        std::string key;
        for (const auto& comp : out.components) {
          valid = valid && on_surface(S, comp.point);
          key += canonical_key(comp.point.normalized()) + "|";
        }
        if (valid) distinct.insert(key);
      } catch (const GeometryError&) {
      }
    }
    std::cerr << "criterion 9: surface " << s << ": " << distinct.size() << " distinct outputs of " << kPsiPairs
              << " pairs\n";
    c.require(distinct.size() >= kPsiDistinct, "surface " + std::to_string(s) + " has too few distinct outputs");
  }
  return c;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Check()>> criteria[] = {
      {"Riemann-Roch table", criterion1},
      {"descent suite, cubic (<= 18) and with x4 (<= 4), under 10 s", criterion2},
      {"Coray reproduction and golden d = 10 chain", criterion3},
      {"descent suite, dP2 (<= 13, refined, thresholds 13 and 12 even)", criterion4},
      {"descent suite, dP1 (<= 15, refined, threshold 15)", criterion5},
      {"Chow degrees 216 > 72", criterion6},
      {"pencil condition ranks", criterion7},
      {"geometry oracle equivalence", criterion8},
      {"psi productivity on 3 surfaces", criterion9},
  };
  bool all = true, fragments = true;
  int n = 0;
  for (const auto& [name, run] : criteria) {
    ++n;
    Check c;
    try {
      c = run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.note = std::string("exception: ") + e.what();
    }
    all = all && c.ok;
    if (n >= 6) fragments = fragments && c.ok;
    std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << n << ": " << name;
    if (!c.ok) std::cout << " [" << c.note << "]";
    std::cout << std::endl;
  }
  // Criterion 10 is a scope statement: full dominance and non-stable-rationality
  // are not machine-checked; their implementable fragments are criteria 6-9.
  std::cout << (fragments ? "PASS" : "FAIL")
            << " criterion 10: out-of-scope claims reduced to their fragments (criteria 6-9)" << std::endl;
  all = all && fragments;
  return all ? 0 : 1;
}
