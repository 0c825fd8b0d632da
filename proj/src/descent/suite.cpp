#include <algorithm>
#include <atomic>
#include <thread>

#include "zc/descent.hpp"

namespace zc::descent {

bool SuiteReport::all_ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const SuiteRow& r) { return r.skipped || (r.found && r.verified); });
}

Json SuiteReport::to_json() const {
  Json j;
  j["surface"] = surface.to_json();
  j["goal"] = goal;
  j["ceiling"] = ceiling;
  j["all_ok"] = all_ok();
  long worst = 0;
  Json rs = Json::array();
  for (const auto& r : rows) {
    Json row;
    row["start"] = r.start;
    if (r.skipped) {
      row["skipped"] = true;
      rs.push_back(row);
      continue;
    }
    row["found"] = r.found;
    row["verified"] = r.verified;
    if (r.found) {
      row["final_sign"] = r.final_sign;
      row["final_degree"] = r.final_degree;
      row["length"] = r.length;
      worst = std::max(worst, r.final_degree);
    }
    rs.push_back(row);
  }
  j["max_final_degree"] = worst;
  j["rows"] = rs;
  return j;
}

namespace {

unsigned worker_count(unsigned threads, std::size_t jobs) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(jobs, 1)));
}

template <class F>
void parallel_for(std::size_t n, unsigned threads, F f) {
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) f(i);
  };
  unsigned k = worker_count(threads, n);
  if (k <= 1) {
    work();
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < k; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
}

}  // namespace

SuiteReport prove_bound_suite(const DelPezzo& S, const Goal& goal, long ceiling, unsigned threads) {
  S.validate();
  if (ceiling < 1) throw InvalidInput("ceiling must be >= 1");
  SuiteReport rep{S, goal.name, ceiling, std::vector<SuiteRow>(static_cast<std::size_t>(ceiling))};
  parallel_for(rep.rows.size(), threads, [&](std::size_t i) {
    SuiteRow& row = rep.rows[i];
    row.start = static_cast<long>(i) + 1;
    if (goal.admits && !goal.admits(row.start)) {
      row.skipped = true;
      return;
    }
    auto res = find_certificate(S, CycleState::entry(row.start), goal);
    if (!res.certificate) return;
    row.found = true;
    row.verified = verify_certificate(*res.certificate).ok;
    row.final_sign = res.certificate->final_state.sign;
    row.final_degree = res.certificate->final_state.unknown_degree;
    row.length = res.certificate->moves.size();
  });
  return rep;
}

Json ThresholdReport::to_json() const {
  Json j;
  j["surface"] = surface.to_json();
  j["goal"] = goal;
  j["threshold"] = threshold;
  j["even_only"] = even_only;
  j["ceiling"] = ceiling;
  j["cases"] = cases;
  j["ok"] = ok;
  if (failure) j["failure"] = {{"class_degree", failure->first}, {"entry_degree", failure->second}};
  else j["failure"] = nullptr;
  j["below_threshold_passes"] = below_threshold_passes;
  return j;
}

namespace {

struct Sweep {
  long cases = 0;
  std::optional<std::pair<long, long>> failure;
};

// Every class degree T in [lo, hi], entry degree D >= max(T, 0), D = T mod dS.
Sweep sweep(const DelPezzo& S, const Goal& goal, long lo, long hi, long ceiling, bool even_only,
            std::map<long, std::optional<Certificate>>& cache) {
  Sweep out;
  for (long T = lo; T <= hi; ++T) {
    if (even_only && T % 2 != 0) continue;
    long D = std::max(T, 0L);
    while ((D - T) % S.dS != 0) ++D;
    for (; D <= ceiling; D += S.dS) {
      ++out.cases;
      auto it = cache.find(D);
      if (it == cache.end())
        it = cache.emplace(D, find_certificate(S, CycleState::entry(D), goal).certificate).first;
      bool good = false;
      if (it->second) {
        Certificate c = *it->second;
        // Prefix the entry move so the chain starts at the abstract class of degree T.
        CycleState start = CycleState::abstract_class(T);
        Move entry = Move::entry_rr(D);
        entry.witness = witness_for(S, start, entry);
        CycleState shift = apply_move(S, start, entry);
        Certificate full{S, start, {entry}, shift};
        for (const Move& m : c.moves) {
          try {
            full.final_state = apply_move(S, full.final_state, m);
          } catch (const PreconditionFailed&) {
            full.final_state.abstract = true;
            break;
          }
          full.moves.push_back(m);
        }
        const CycleState& f = full.final_state;
        if (!f.abstract && f.sign == 1 && verify_certificate(full).ok) {
          if (S.with_x4) {
            long basis_part = T - f.unknown_degree;
            good = basis_part >= genus(S.dS, 2) && 4 <= h0(S.dS, 2) - 2;
          } else {
            good = f.coeff("h") >= 0 && f.coeffs.size() <= 1;
          }
        }
      }
      if (!good) {
        out.failure = std::make_pair(T, D);
        return out;
      }
    }
  }
  return out;
}

}  // namespace

ThresholdReport replay_threshold(const DelPezzo& S, const Goal& goal, long threshold, long ceiling,
                                 bool even_only) {
  S.validate();
  if (ceiling < threshold) throw InvalidInput("ceiling must be >= threshold");
  std::map<long, std::optional<Certificate>> cache;
  ThresholdReport rep{S, goal.name, threshold, even_only, ceiling, 0, true, std::nullopt, false};
  Sweep main = sweep(S, goal, threshold, ceiling, ceiling, even_only, cache);
  rep.cases = main.cases;
  rep.ok = !main.failure;
  rep.failure = main.failure;
  long below = threshold - 1;
  if (even_only && below % 2 != 0) --below;
  rep.below_threshold_passes = !sweep(S, goal, below, below, ceiling, false, cache).failure;
  return rep;
}

}  // namespace zc::descent
