#pragma once

// Property sweep over enumerated algebras: for each algebra and formation,
// compute the normalisers and check intravariance (both criteria), the
// cover/avoid property and agreement of the two normality criteria on every
// maximal subalgebra.

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "lieform/enumerate.hpp"
#include "lieform/io.hpp"

namespace lieform {

enum class Property {
  NotIntravariant,        // a normaliser failed to be intravariant
  CoverAvoid,             // a normaliser failed to cover/avoid some factor
  CriteriaDisagree,       // normality criteria disagree on a maximal subalgebra
  IntravarianceCriteria,  // linear and extension criteria disagree
  NoCriticalDescent,      // L ∉ F without a critical maximal subalgebra
  NotInFormation,         // a returned normaliser is not in F
};

inline const char* to_string(Property p) {
  switch (p) {
    case Property::NotIntravariant: return "not-intravariant";
    case Property::CoverAvoid: return "cover-avoid";
    case Property::CriteriaDisagree: return "criteria-disagree";
    case Property::IntravarianceCriteria: return "intravariance-criteria";
    case Property::NoCriticalDescent: return "no-critical-descent";
    case Property::NotInFormation: return "not-in-formation";
  }
  return "unknown";
}

struct SweepViolation {
  Property property;
  std::string tag;
  Json counterexample;
};

struct AlgebraCheck {
  std::size_t normalisers = 0;
  std::size_t maximals = 0;
  std::vector<SweepViolation> violations;
};

template <FieldElement K>
AlgebraCheck check_algebra(const LieAlgebra<K>& L, const Formation<K>& F, const std::string& tag = {}) {
  AlgebraCheck out;
  auto record = [&](Property p, const std::optional<Subspace<K>>& u, const std::optional<Matrix<K>>& d,
                    const std::string& detail) {
    out.violations.push_back({p, tag, counterexample_json(to_string(p), F.name, L, u, d, detail)});
  };
  const auto cs = chief_series(L);
  for (const auto& m : maximal_subalgebras(L)) {
    ++out.maximals;
    try {
      classify_maximal(L, m.space(), F, cs);
    } catch (const CriteriaDisagree& e) {
      record(Property::CriteriaDisagree, m.space(), std::nullopt, e.what());
    }
  }
  std::vector<NormaliserResult<K>> normalisers;
  try {
    normalisers = f_normalisers(L, F);
  } catch (const NoCriticalDescent& e) {
    record(Property::NoCriticalDescent, std::nullopt, std::nullopt, e.what());
    return out;
  } catch (const CriteriaDisagree& e) {
    record(Property::CriteriaDisagree, std::nullopt, std::nullopt, e.what());
    return out;
  }
  for (const auto& [v, chain] : normalisers) {
    ++out.normalisers;
    if (!is_member(F, L, v)) record(Property::NotInFormation, v, std::nullopt, "normaliser outside the formation");
    const bool linear = is_intravariant_linear(L, v);
    const auto bad = extension_counterexample(L, v);
    if (linear != !bad.has_value())
      record(Property::IntravarianceCriteria, v, bad, linear ? "linear holds, extension fails" : "extension holds, linear fails");
    if (!linear || bad) record(Property::NotIntravariant, v, bad, "normaliser is not intravariant");
    if (!cover_avoid_check(L, v, F, cs).passed()) record(Property::CoverAvoid, v, std::nullopt, "cover/avoid fails");
  }
  return out;
}

/// LIEFORM_THREADS if set and positive, else the hardware concurrency.
inline std::size_t worker_count() {
  if (const char* env = std::getenv("LIEFORM_THREADS")) {
    long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<std::size_t>(n);
  }
  auto hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

/// Runs fn(i) for i in [0, n) on `threads` workers. The first exception is
/// rethrown after all workers stop.
inline void parallel_for(std::size_t n, std::size_t threads, const std::function<void(std::size_t)>& fn) {
  threads = std::max<std::size_t>(1, std::min(threads, n));
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (std::size_t i; !failed && (i = next++) < n;) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
}

struct SweepSummary {
  std::size_t algebras = 0;
  std::size_t normalisers = 0;
  std::size_t maximals = 0;
  std::vector<SweepViolation> violations;  // in stream order
};

inline SweepSummary run_sweep(const EnumerationBudget& budget, const Formation<ModP>& F, std::size_t threads) {
  auto universe = enumerate_soluble(budget);
  std::vector<AlgebraCheck> checks(universe.size());
  parallel_for(universe.size(), threads,
               [&](std::size_t i) { checks[i] = check_algebra(universe[i].algebra, F, universe[i].tag); });
  SweepSummary summary;
  summary.algebras = universe.size();
  for (auto& c : checks) {
    summary.normalisers += c.normalisers;
    summary.maximals += c.maximals;
    for (auto& v : c.violations) summary.violations.push_back(std::move(v));
  }
  return summary;
}

}  // namespace lieform
