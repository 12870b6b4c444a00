#include "cli/run_config.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace hardy::cli {

std::vector<std::size_t> n_values(const RunConfig& config) {
  if (config.n) {
    if (config.n_start || config.n_stop) throw UsageError("--n cannot be combined with --n-start/--n-stop");
    if (*config.n == 0) throw UsageError("--n must be positive");
    return {*config.n};
  }
  if (!config.n_start || !config.n_stop) throw UsageError("give --n or both --n-start and --n-stop");
  const std::size_t start = *config.n_start;
  const std::size_t stop = *config.n_stop;
  if (start == 0) throw UsageError("--n-start must be positive");
  if (stop < start) throw UsageError("empty range: --n-stop is below --n-start");
  if (stop > kMaxOrder) throw UsageError("--n-stop exceeds " + std::to_string(kMaxOrder));

  std::vector<std::size_t> out;
  if (config.grid == Grid::linear) {
    if (config.step == 0) throw UsageError("--step must be positive");
    for (std::size_t n = start; n <= stop; n += config.step) out.push_back(n);
    return out;
  }
  if (!(config.ratio > 1.0) || !std::isfinite(config.ratio)) throw UsageError("--ratio must exceed 1");
  double x = static_cast<double>(start);
  std::size_t n = start;
  while (n <= stop) {
    out.push_back(n);
    x *= config.ratio;
    n = std::max(n + 1, static_cast<std::size_t>(std::llround(x)));
  }
  if (out.back() != stop) out.push_back(stop);
  return out;
}

std::vector<Kind> kinds(KindSelection selection) {
  switch (selection) {
    case KindSelection::discrete:
      return {Kind::discrete};
    case KindSelection::continuous:
      return {Kind::continuous};
    case KindSelection::both:
      break;
  }
  return {Kind::continuous, Kind::discrete};
}

unsigned effective_threads(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

}  // namespace hardy::cli
