#pragma once

// Request/report layer behind the fano_degree command: runs the requested
// methods, cross-checks them, and renders the result as text or JSON.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <future>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "fano/bott.hpp"
#include "fano/errors.hpp"
#include "fano/poly_oracle.hpp"
#include "fano/weights.hpp"

namespace fano {

enum class Method { bott, dm, vdw, all };
enum class WeightStrategy { sequential, random };

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::bott: return "bott";
    case Method::dm: return "dm";
    case Method::vdw: return "vdw";
    case Method::all: return "all";
  }
  return "?";
}

inline std::string_view to_string(WeightStrategy s) {
  return s == WeightStrategy::sequential ? "sequential" : "random";
}

/// Process exit codes; a stable contract.
enum class ExitCode : int { ok = 0, failure = 1, invalid_parameters = 2, hypothesis_violation = 3, disagreement = 4 };

/// Methods or trials returned different values.
class Disagreement : public InternalError {
 public:
  using InternalError::InternalError;
};

struct ComputeRequest {
  long long k = 0;
  long long d = 0;
  long long n = 0;
  Method method = Method::all;
  WeightStrategy weight_strategy = WeightStrategy::sequential;
  std::optional<std::vector<BigInt>> weights;  // overrides the strategy for the first trial
  std::uint64_t seed = 1;
  std::int64_t range_bound = 1000;
  unsigned trials = 4;
  unsigned threads = 1;
  bool force_hypothesis = false;
  bool json = false;
};

struct ComputeReport {
  ComputeRequest request;
  long long delta = 0;
  std::string degree;
  std::map<std::string, std::string> per_method_results;
  bool trials_agreed = true;
  std::map<std::string, std::int64_t> elapsed_ms;
  bool hypothesis_forced = false;  // override was needed, not merely given
};

namespace detail {

inline unsigned checked_param(long long v, std::string_view name) {
  if (v < 0 || v > 100000)
    throw InvalidArgument(std::string(name) + " = " + std::to_string(v) + " is out of range");
  return static_cast<unsigned>(v);
}

template <class F>
std::pair<BigInt, std::int64_t> timed(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  BigInt value = f();
  const auto stop = std::chrono::steady_clock::now();
  return {std::move(value), std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count()};
}

inline bool is_line_count_instance(const ProblemInstance& p) { return p.k() == 1 && p.d() + 3 == 2 * p.n(); }

}  // namespace detail

/// Weight vectors for each trial: the explicit or strategy-chosen vector
/// first, then random vectors with seeds seed+1, seed+2, ...
inline std::vector<WeightVector> trial_weights(const ComputeRequest& req, unsigned n_plus_1) {
  if (req.trials < 1) throw InvalidArgument("trials must be at least 1");
  const std::int64_t bound = std::max<std::int64_t>(req.range_bound, 2 * static_cast<std::int64_t>(n_plus_1));
  std::vector<WeightVector> out;
  out.reserve(req.trials);
  if (req.weights)
    out.push_back(validate(WeightVector(*req.weights), n_plus_1));
  else if (req.weight_strategy == WeightStrategy::sequential)
    out.push_back(sequential_weights(n_plus_1));
  else
    out.push_back(random_weights(n_plus_1, req.seed, bound));
  for (unsigned t = 1; t < req.trials; ++t) out.push_back(random_weights(n_plus_1, req.seed + t, bound));
  return out;
}

/// Runs the requested method(s). Throws InvalidArgument (including
/// NegativeDelta and DistinctnessViolation), HypothesisViolation, or
/// Disagreement; see exit_code_for.
inline ComputeReport run(const ComputeRequest& req) {
  if (req.threads < 1) throw InvalidArgument("threads must be at least 1");
  const ProblemInstance p(detail::checked_param(req.k, "k"), detail::checked_param(req.d, "d"),
                          detail::checked_param(req.n, "n"));
  p.require_computable(req.force_hypothesis);

  const bool line_case = detail::is_line_count_instance(p);
  if (req.method == Method::vdw && !line_case)
    throw InvalidArgument("the vdw method needs k = 1 and d = 2n-3");

  const bool want_bott = req.method == Method::bott || req.method == Method::all;
  const bool want_dm = req.method == Method::dm || req.method == Method::all;
  const bool want_vdw = req.method == Method::vdw || (req.method == Method::all && line_case);

  ComputeReport rep;
  rep.request = req;
  rep.delta = p.delta();
  rep.hypothesis_forced = !p.hypothesis_holds();

  const std::vector<WeightVector> weights = want_bott ? trial_weights(req, p.n() + 1) : std::vector<WeightVector>{};

  std::future<std::pair<BigInt, std::int64_t>> dm_task, vdw_task;
  if (want_dm) dm_task = std::async(std::launch::async, [&p] { return detail::timed([&] { return dm_degree(p); }); });
  if (want_vdw)
    vdw_task = std::async(std::launch::async, [&p] { return detail::timed([&] { return vdw_lines(p.n()); }); });

  if (want_bott) {
    const BottOptions opts{req.threads, req.force_hypothesis};
    std::vector<BigInt> per_trial;
    auto [first, ms] = detail::timed([&] {
      for (const auto& w : weights) per_trial.push_back(fano_degree_bott(p, w, opts));
      return per_trial.front();
    });
    rep.trials_agreed =
        std::all_of(per_trial.begin(), per_trial.end(), [&](const BigInt& v) { return v == per_trial.front(); });
    rep.per_method_results["bott"] = first.get_str();
    rep.elapsed_ms["bott"] = ms;
    if (!rep.trials_agreed) {
      std::ostringstream msg;
      msg << "residue sum depends on the weights:";
      for (std::size_t t = 0; t < weights.size(); ++t)
        msg << "\n  " << weights[t].to_string() << " -> " << per_trial[t].get_str();
      throw Disagreement(msg.str());
    }
  }
  if (want_dm) {
    auto [value, ms] = dm_task.get();
    rep.per_method_results["dm"] = value.get_str();
    rep.elapsed_ms["dm"] = ms;
  }
  if (want_vdw) {
    auto [value, ms] = vdw_task.get();
    rep.per_method_results["vdw"] = value.get_str();
    rep.elapsed_ms["vdw"] = ms;
  }

  rep.degree = rep.per_method_results.begin()->second;
  for (const auto& [method, value] : rep.per_method_results) {
    if (value != rep.degree) {
      std::ostringstream msg;
      msg << "methods disagree for (k, d, n) = (" << p.k() << ", " << p.d() << ", " << p.n() << "):";
      for (const auto& [m, v] : rep.per_method_results) msg << ' ' << m << '=' << v;
      throw Disagreement(msg.str());
    }
  }
  return rep;
}

inline ExitCode exit_code_for(const std::exception_ptr& error) {
  try {
    std::rethrow_exception(error);
  } catch (const InvalidArgument&) {
    return ExitCode::invalid_parameters;
  } catch (const HypothesisViolation&) {
    return ExitCode::hypothesis_violation;
  } catch (const InternalError&) {
    return ExitCode::disagreement;
  } catch (...) {
    return ExitCode::failure;
  }
}

inline constexpr std::string_view kForcedHypothesisNote =
    "formula value, Fano-scheme interpretation not guaranteed";

/// One JSON object, newline-terminated, fixed key order. Big integers are
/// always strings.
inline std::string render_json(const ComputeReport& rep) {
  nlohmann::ordered_json j;
  j["k"] = rep.request.k;
  j["d"] = rep.request.d;
  j["n"] = rep.request.n;
  j["delta"] = rep.delta;
  j["degree"] = rep.degree;
  j["method"] = to_string(rep.request.method);
  j["per_method_results"] = rep.per_method_results;
  j["trials"] = rep.request.trials;
  j["trials_agreed"] = rep.trials_agreed;
  j["elapsed_ms"] = rep.elapsed_ms;
  if (rep.hypothesis_forced) j["note"] = kForcedHypothesisNote;
  return j.dump() + "\n";
}

inline std::string render_text(const ComputeReport& rep) {
  std::ostringstream os;
  os << "k = " << rep.request.k << ", d = " << rep.request.d << ", n = " << rep.request.n << ", delta = " << rep.delta
     << "\n";
  os << "degree: " << rep.degree << "\n";
  for (const auto& [method, value] : rep.per_method_results)
    os << "  " << method << ": " << value << " (" << rep.elapsed_ms.at(method) << " ms)\n";
  if (rep.per_method_results.contains("bott"))
    os << "  trials: " << rep.request.trials << ", agreed: " << (rep.trials_agreed ? "yes" : "no") << "\n";
  if (rep.hypothesis_forced) os << "note: " << kForcedHypothesisNote << "\n";
  return os.str();
}

}  // namespace fano
