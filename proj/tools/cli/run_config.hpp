#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hardy/hardy.hpp"

namespace hardy::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Bad flag values that CLI11 cannot catch on its own; maps to kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Grid { linear, geometric };
enum class Format { csv, json };
enum class KindSelection { discrete, continuous, both };

struct RunConfig {
  std::string command;

  std::optional<std::size_t> n;
  std::optional<std::size_t> n_start;
  std::optional<std::size_t> n_stop;
  Grid grid = Grid::linear;
  std::size_t step = 1;
  double ratio = 10.0;

  KindSelection kind = KindSelection::both;
  double tol = 1e-12;
  Format format = Format::csv;
  std::uint64_t seed = 20240611;
  std::string out;
  unsigned threads = 0;

  // exact
  std::string what;
  std::optional<std::size_t> index;
  std::optional<std::size_t> upto;

  // verify
  std::size_t max_m = 300;
  std::vector<std::string> only;
  std::string inject_fault;
};

/// The n values selected by --n or by --n-start/--n-stop with the chosen grid,
/// ascending and without duplicates. Throws UsageError on an empty or
/// malformed range.
std::vector<std::size_t> n_values(const RunConfig& config);

std::vector<Kind> kinds(KindSelection selection);

/// 0 means one per hardware thread.
unsigned effective_threads(unsigned requested);

}  // namespace hardy::cli
