// fano_degree: degree of the Fano scheme of k-planes on a general degree-d
// hypersurface in P^n, by localization and by two coefficient oracles.

#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"

#include "fano/report.hpp"

namespace {

std::vector<fano::BigInt> parse_weight_list(const std::string& text) {
  std::vector<fano::BigInt> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    fano::BigInt v;
    if (item.empty() || v.set_str(item, 10) != 0)
      throw fano::InvalidArgument("cannot parse weight '" + item + "'");
    out.push_back(v);
  }
  return out;
}

unsigned default_threads() {
  if (const char* env = std::getenv("FANO_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    std::cerr << "fano_degree: ignoring FANO_THREADS='" << env << "'\n";
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree of the Fano scheme F_k(X) of a general degree-d hypersurface X in P^n"};

  fano::ComputeRequest req;
  std::string weights;
  unsigned threads = 0;

  app.add_option("--k", req.k, "dimension of the linear subspaces")->required();
  app.add_option("--d", req.d, "degree of the hypersurface")->required();
  app.add_option("--n", req.n, "dimension of the ambient projective space")->required();
  const std::map<std::string, fano::Method> methods{
      {"bott", fano::Method::bott}, {"dm", fano::Method::dm}, {"vdw", fano::Method::vdw}, {"all", fano::Method::all}};
  const std::map<std::string, fano::WeightStrategy> strategies{{"sequential", fano::WeightStrategy::sequential},
                                                               {"random", fano::WeightStrategy::random}};
  std::string method = "all";
  std::string strategy = "sequential";

  app.add_option("--method", method, "bott, dm, vdw, or all")
      ->check(CLI::IsMember(methods, CLI::ignore_case))
      ->capture_default_str();
  app.add_option("--weights", weights, "comma-separated distinct integer weights h_1..h_{n+1}");
  app.add_option("--weight-strategy", strategy, "sequential or random")
      ->check(CLI::IsMember(strategies, CLI::ignore_case))
      ->capture_default_str();
  app.add_option("--seed", req.seed, "seed for random weights")->capture_default_str();
  app.add_option("--range", req.range_bound, "random weights are drawn from [-range, range]")
      ->capture_default_str();
  app.add_option("--trials", req.trials, "number of weight vectors for the localization sum")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  auto* threads_opt = app.add_option("--threads", threads, "worker threads (default: $FANO_THREADS or all cores)")
                          ->check(CLI::PositiveNumber);
  app.add_flag("--force-hypothesis", req.force_hypothesis, "evaluate even when d = 2 and n < 2k+1");
  app.add_flag("--json", req.json, "print one JSON object instead of text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(fano::ExitCode::invalid_parameters);
  }

  req.method = methods.at(CLI::detail::to_lower(method));
  req.weight_strategy = strategies.at(CLI::detail::to_lower(strategy));
  req.threads = threads_opt->count() > 0 ? threads : default_threads();

  try {
    if (!weights.empty()) req.weights = parse_weight_list(weights);
    const fano::ComputeReport rep = fano::run(req);
    std::cout << (req.json ? fano::render_json(rep) : fano::render_text(rep));
    return static_cast<int>(fano::ExitCode::ok);
  } catch (const std::exception& e) {
    std::cerr << "fano_degree: " << e.what() << "\n";
    return static_cast<int>(fano::exit_code_for(std::current_exception()));
  }
}
