#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zc/error.hpp"
#include "zc/json_io.hpp"

namespace zc::descent {

/// Integer combination of basis cycles, keyed by symbol ("h", "x4").
using Combo = std::map<std::string, long>;

/// del Pezzo surface of degree dS with its available basis cycles: h of
/// degree dS, and x4 of degree 4 when enabled (cubic surfaces only).
struct DelPezzo {
  int dS = 3;
  bool with_x4 = false;

  /// Throws InvalidInput for dS outside {1,2,3} or x4 on dS != 3.
  void validate() const;
  std::vector<std::string> basis() const;
  /// Throws InvalidInput for an unknown symbol.
  long degree_of(const std::string& symbol) const;
  long degree_of(const Combo& c) const;
  Json to_json() const;
  static DelPezzo from_json(const Json& j);
};

/// z = sign * z' + sum coeffs[b] * b, with z' effective of degree unknown_degree.
/// An abstract state stands for an arbitrary class of degree abstract_degree
/// before the entry move has been applied.
struct CycleState {
  int sign = 1;
  long unknown_degree = 0;
  Combo coeffs;
  bool abstract = false;
  long abstract_degree = 0;

  static CycleState entry(long degree) { return CycleState{1, degree, {}, false, 0}; }
  static CycleState abstract_class(long degree) { return CycleState{1, 0, {}, true, degree}; }

  /// sign * unknown_degree + sum coeffs[b] * deg b (abstract_degree if abstract).
  long total(const DelPezzo& S) const;
  long coeff(const std::string& b) const;

  Json to_json(const DelPezzo& S) const;
  static CycleState from_json(const Json& j);
  /// Equal up to zero coefficients.
  friend bool operator==(const CycleState& a, const CycleState& b);
};

enum class MoveKind { Complement, VariantComplement, VBSubtract, InvolutionFlip, CurveRR, AddBasis, EntryRR };

std::string to_string(MoveKind k);
MoveKind move_kind_from_string(const std::string& s);

struct Move {
  MoveKind kind = MoveKind::AddBasis;
  long l = 0;
  long s = 0;
  /// VBSubtract target, CurveRR and AddBasis combination.
  Combo combo;
  /// EntryRR: degree of the effective cycle z + gamma h.
  long degree = 0;
  /// Evaluated h0 / genus values supporting the side conditions.
  std::map<std::string, long> witness;

  static Move complement(long l) { return {MoveKind::Complement, l, 0, {}, 0, {}}; }
  static Move variant_complement(long l) { return {MoveKind::VariantComplement, l, 0, {}, 0, {}}; }
  static Move vb_subtract(long l, long s, Combo target) { return {MoveKind::VBSubtract, l, s, std::move(target), 0, {}}; }
  static Move involution_flip() { return {MoveKind::InvolutionFlip, 0, 0, {}, 0, {}}; }
  static Move curve_rr(long l, Combo combo) { return {MoveKind::CurveRR, l, 0, std::move(combo), 0, {}}; }
  static Move add_basis(Combo combo) { return {MoveKind::AddBasis, 0, 0, std::move(combo), 0, {}}; }
  static Move entry_rr(long degree) { return {MoveKind::EntryRR, 0, 0, {}, degree, {}}; }

  Json to_json() const;
  static Move from_json(const Json& j);
  std::string str() const;
};

/// A move whose side condition does not hold. `inequality` names it.
class PreconditionFailed : public Error {
 public:
  PreconditionFailed(std::string move, std::string inequality)
      : Error("PreconditionFailed", move + ": " + inequality), move_(std::move(move)), inequality_(std::move(inequality)) {}
  const std::string& move() const { return move_; }
  const std::string& inequality() const { return inequality_; }

 private:
  std::string move_;
  std::string inequality_;
};

/// 1 + dS (l^2 + l) / 2.
long h0(int dS, long l);
/// Arithmetic genus of a member of |O_S(l)|: 1 + dS l (l - 1) / 2.
long genus(int dS, long l);

/// Side conditions of `m` at `st`, filled in as a witness map.
std::map<std::string, long> witness_for(const DelPezzo& S, const CycleState& st, const Move& m);
/// Checks the side conditions and returns the new state; throws PreconditionFailed.
CycleState apply_move(const DelPezzo& S, const CycleState& st, const Move& m);

struct Certificate {
  DelPezzo surface;
  CycleState initial;
  std::vector<Move> moves;
  CycleState final_state;

  Json to_json() const;
  static Certificate from_json(const Json& j);
};

struct VerifyReport {
  bool ok = true;
  /// Index of the offending move; moves.size() for a final-state mismatch.
  int step = -1;
  std::string reason;
  Json to_json() const;
};

/// Replays the certificate with an independent recomputation of h0 and genus.
VerifyReport verify_certificate(const Certificate& c);

struct Goal {
  std::string name;
  std::string description;
  std::function<bool(const CycleState&)> accepts;
  /// Start degrees the goal is meant for; empty means all.
  std::function<bool(long)> admits;
};

/// Named goals: cubic, cubic-positive, cubic-negative, x4, x4-positive, coray, dp2, dp2-refined,
/// dp1, dp1-refined. Throws InvalidInput for an unknown name.
Goal goal_by_name(const std::string& name);
/// The main bound for the surface: cubic/x4 for dS 3, dp2, dp1.
std::string default_goal_name(const DelPezzo& S);

struct SearchLimits {
  /// Largest unknown degree explored is max(start, floor) + margin.
  long degree_floor = 30;
  long degree_margin = 16;
  /// Move parameter l ranges up to start + l_margin.
  long l_margin = 4;
};

struct SearchResult {
  std::optional<Certificate> certificate;
  /// Number of (sign, degree) states expanded.
  long explored = 0;
  /// Degrees in the frontier when the search gave up (NotFound).
  std::vector<long> frontier;
};

/// Breadth-first search from `initial` (abstract states first take an
/// EntryRR move to `initial.abstract_degree` rounded up to a valid degree).
/// Move order per state: VBSubtract, Complement, VariantComplement,
/// InvolutionFlip, CurveRR, AddBasis.
SearchResult find_certificate(const DelPezzo& S, const CycleState& initial, const Goal& goal,
                              const SearchLimits& limits = {});

/// One step of the cubic-surface induction for unknown degree >= 20: a move
/// list that strictly lowers the unknown degree.
std::vector<Move> induction_step(const DelPezzo& S, const CycleState& st);

struct SuiteRow {
  long start = 0;
  /// The goal does not admit this start degree (e.g. coray on multiples of 3).
  bool skipped = false;
  bool found = false;
  bool verified = false;
  int final_sign = 0;
  long final_degree = 0;
  std::size_t length = 0;
};

struct SuiteReport {
  DelPezzo surface;
  std::string goal;
  long ceiling = 0;
  std::vector<SuiteRow> rows;
  bool all_ok() const;
  Json to_json() const;
};

/// Certificates for every admitted start degree 1..ceiling (rows in order; computed on
/// up to `threads` worker threads, 0 meaning hardware concurrency).
SuiteReport prove_bound_suite(const DelPezzo& S, const Goal& goal, long ceiling, unsigned threads = 0);

/// Effectivity threshold replay: for every class degree T in [threshold,
/// ceiling] (even T only in even_only mode) and every entry degree D >= T with
/// D = T mod dS up to the ceiling, a positive-sign certificate is found and
/// the final h coefficient (T - final degree) / dS is nonnegative. With x4 the
/// final basis part must instead have degree >= genus(dS, 2) and fit on a
/// curve of |O(2)|.
struct ThresholdReport {
  DelPezzo surface;
  std::string goal;
  long threshold = 0;
  bool even_only = false;
  long ceiling = 0;
  long cases = 0;
  bool ok = true;
  /// First failing (T, D) if any.
  std::optional<std::pair<long, long>> failure;
  /// Same replay at threshold - 1: whether all classes of that degree pass too.
  bool below_threshold_passes = false;
  Json to_json() const;
};

ThresholdReport replay_threshold(const DelPezzo& S, const Goal& goal, long threshold, long ceiling,
                                 bool even_only = false);

}  // namespace zc::descent
