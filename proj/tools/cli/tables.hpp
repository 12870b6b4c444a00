#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "cli/run_config.hpp"
#include "hardy/exact.hpp"
#include "hardy/hardy.hpp"

namespace hardy::cli {

/// 17 significant digits, enough to round-trip a double.
std::string format_real(double x);

/// Runs job(0) .. job(count-1) on up to `threads` workers. The first exception
/// thrown by any job is rethrown after all workers stop.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& job);

/// One record per (n, kind), ordered by n and then by the order of `kinds`.
std::vector<HardyRecord> compute_records(const std::vector<std::size_t>& ns, const std::vector<Kind>& kinds,
                                         double tol, unsigned threads);

inline const char* const kRecordHeader = "n,kind,constant,thm_lower,thm_upper,lambda_min,m_used,iterations,tol";
void write_records(std::ostream& os, const std::vector<HardyRecord>& records, Format format);

struct AsymptoticsRow {
  std::size_t n = 0;
  double continuous_gap = 0.0;  ///< 4 - c_n
  double discrete_gap = 0.0;    ///< 4 - d_n
};

inline const char* const kAsymptoticsHeader =
    "n,four_minus_c,four_minus_d,ln_n,ln2_n,four_minus_c_times_ln_n,four_minus_c_times_ln2_n,"
    "four_minus_d_times_ln_n,four_minus_d_times_ln2_n";
std::vector<AsymptoticsRow> compute_asymptotics(const std::vector<std::size_t>& ns, double tol, unsigned threads);
void write_asymptotics(std::ostream& os, const std::vector<AsymptoticsRow>& rows, Format format);

inline const char* const kExactHeader = "index,value,approx";
/// Rows `from` .. `to` of the table.
void write_exact(std::ostream& os, const exact::SequenceTable& table, std::size_t from, std::size_t to,
                 Format format);

}  // namespace hardy::cli
