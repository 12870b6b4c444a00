#include "cli/tables.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

#include "json.hpp"

namespace hardy::cli {

namespace {

using nlohmann::json;

json optional_real(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

std::string csv_optional(const std::optional<double>& x) { return x ? format_real(*x) : "NA"; }

}  // namespace

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& job) {
  const std::size_t workers = std::min<std::size_t>(std::max(1U, threads), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count && !failed; i = next++) {
      try {
        job(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::vector<HardyRecord> compute_records(const std::vector<std::size_t>& ns, const std::vector<Kind>& kinds,
                                         double tol, unsigned threads) {
  std::vector<HardyRecord> records(ns.size() * kinds.size());
  EigenOptions options;
  options.tol = tol;
  parallel_for(records.size(), threads, [&](std::size_t i) {
    records[i] = hardy_constant(ns[i / kinds.size()], kinds[i % kinds.size()], options);
  });
  return records;
}

void write_records(std::ostream& os, const std::vector<HardyRecord>& records, Format format) {
  if (format == Format::json) {
    json rows = json::array();
    for (const auto& r : records) {
      rows.push_back({{"n", r.n},
                      {"kind", std::string(to_string(r.kind))},
                      {"constant", r.constant},
                      {"thm_lower", optional_real(r.thm_lower)},
                      {"thm_upper", optional_real(r.thm_upper)},
                      {"lambda_min", r.lambda_min},
                      {"m_used", r.m_used},
                      {"iterations", r.iterations},
                      {"tol", r.tol}});
    }
    os << rows.dump(2) << '\n';
    return;
  }
  os << kRecordHeader << '\n';
  for (const auto& r : records) {
    os << r.n << ',' << to_string(r.kind) << ',' << format_real(r.constant) << ',' << csv_optional(r.thm_lower)
       << ',' << csv_optional(r.thm_upper) << ',' << format_real(r.lambda_min) << ',' << r.m_used << ','
       << r.iterations << ',' << format_real(r.tol) << '\n';
  }
}

std::vector<AsymptoticsRow> compute_asymptotics(const std::vector<std::size_t>& ns, double tol, unsigned threads) {
  const auto records = compute_records(ns, {Kind::continuous, Kind::discrete}, tol, threads);
  std::vector<AsymptoticsRow> rows(ns.size());
  for (std::size_t i = 0; i < ns.size(); ++i) {
    rows[i] = {ns[i], 4.0 - records[2 * i].constant, 4.0 - records[2 * i + 1].constant};
  }
  return rows;
}

void write_asymptotics(std::ostream& os, const std::vector<AsymptoticsRow>& rows, Format format) {
  json out = json::array();
  if (format == Format::csv) os << kAsymptoticsHeader << '\n';
  for (const auto& r : rows) {
    const double ln = std::log(static_cast<double>(r.n));
    const double ln2 = ln * ln;
    const std::vector<double> cols{r.continuous_gap,      r.discrete_gap,      ln, ln2, r.continuous_gap * ln,
                                   r.continuous_gap * ln2, r.discrete_gap * ln, r.discrete_gap * ln2};
    if (format == Format::json) {
      json row = {{"n", r.n}};
      static const char* const names[] = {"four_minus_c",
                                          "four_minus_d",
                                          "ln_n",
                                          "ln2_n",
                                          "four_minus_c_times_ln_n",
                                          "four_minus_c_times_ln2_n",
                                          "four_minus_d_times_ln_n",
                                          "four_minus_d_times_ln2_n"};
      for (std::size_t c = 0; c < cols.size(); ++c) row[names[c]] = cols[c];
      out.push_back(std::move(row));
      continue;
    }
    os << r.n;
    for (double c : cols) os << ',' << format_real(c);
    os << '\n';
  }
  if (format == Format::json) os << out.dump(2) << '\n';
}

void write_exact(std::ostream& os, const exact::SequenceTable& table, std::size_t from, std::size_t to,
                 Format format) {
  json out = json::array();
  if (format == Format::csv) os << kExactHeader << '\n';
  for (std::size_t i = from; i <= to; ++i) {
    const BigRational& v = table.at(i);
    if (format == Format::json) {
      out.push_back({{"index", i}, {"value", v.to_string()}, {"approx", v.to_double()}});
    } else {
      os << i << ',' << v.to_string() << ',' << format_real(v.to_double()) << '\n';
    }
  }
  if (format == Format::json) os << out.dump(2) << '\n';
}

}  // namespace hardy::cli
