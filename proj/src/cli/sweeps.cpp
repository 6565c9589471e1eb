#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <ostream>
#include <thread>

#include "stripepow/cli.hpp"
#include "stripepow/io.hpp"
#include "stripepow/kernels.hpp"
#include "stripepow/power.hpp"
#include "stripepow/stripe.hpp"

namespace stripepow::cli {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Each index is handled by exactly one worker and results land in their own
// slot, so output does not depend on the thread count.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& fn) {
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = next++; i < count; i = next++) fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  pool.clear();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

double max_abs_difference(const DenseRealMatrix& approx, const DenseIntMatrix& exact) {
  double worst = 0.0;
  auto a = approx.row_major();
  auto e = exact.row_major();
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = std::abs(a[k] - e[k].get_d());
    if (!(d <= worst)) worst = d;
  }
  return worst;
}

// Rounds a closed-form result and compares it with the exact reference.
void judge_closed(ReportCase& c, const DenseRealMatrix& closed, const DenseIntMatrix& exact,
                  double tol) {
  c.max_abs_residual = max_abs_difference(closed, exact);
  try {
    c.exact_match = round_to_int(closed, tol) == exact;
    c.status = c.exact_match ? "ok" : "mismatch";
  } catch (const RoundingFailure&) {
    c.exact_match = false;
    c.status = "rounding-failure";
  }
}

}  // namespace

std::size_t threads_from_env() {
  const char* env = std::getenv("STRIPEPOW_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1) return 1;
  return static_cast<std::size_t>(v);
}

void RunReport::finalize() {
  pass = std::all_of(cases.begin(), cases.end(), [](const ReportCase& c) { return c.exact_match; });
}

void write_report(std::ostream& out, const RunReport& report) {
  io::JsonWriter w(out);
  w.begin_object();
  w.key("cases").begin_array();
  for (const auto& c : report.cases) {
    w.begin_object();
    w.field("n", static_cast<std::uint64_t>(c.n));
    w.field("m", c.m);
    w.field("method", c.method);
    w.field("status", c.status);
    w.key("max_abs_residual");
    if (std::isfinite(c.max_abs_residual)) w.value(c.max_abs_residual); else w.null();
    w.field("exact_match", c.exact_match);
    w.field("wall_time", c.wall_time);
    w.end_object();
  }
  w.end_array();
  if (!report.skipped.empty()) {
    w.key("skipped").begin_array();
    for (const auto& s : report.skipped) {
      w.begin_object();
      w.field("n", static_cast<std::uint64_t>(s.n));
      w.field("m", s.m);
      w.field("method", s.method);
      w.field("status", s.status);
      w.end_object();
    }
    w.end_array();
  }
  w.field("pass", report.pass);
  w.field("tool_version", report.tool_version);
  if (!report.isa.empty()) w.field("isa", report.isa);
  w.end_object();
  out << '\n';
}

RunReport verify_sweep(const VerifyOptions& opts) {
  if (opts.n_max < 3) throw std::invalid_argument("verify: n_max must be >= 3");
  if (opts.m_max < 0) throw std::invalid_argument("verify: m_max must be >= 0");
  if (!(opts.tolerance > 0.0 && opts.tolerance < 0.5))
    throw std::invalid_argument("verify: tolerance must lie in (0, 0.5)");

  RunReport report;
  report.isa = kernels::active().name;
  for (std::size_t n = 3; n <= opts.n_max; n += 3)
    for (std::int64_t m = 0; m <= opts.m_max; ++m) report.cases.push_back({n, m, "closed", "", 0.0, false, 0.0});

  const std::size_t last = report.cases.size() - 1;
  parallel_for(report.cases.size(), opts.threads, [&](std::size_t idx) {
    ReportCase& c = report.cases[idx];
    const auto t0 = Clock::now();
    const StripeMatrix s = make_stripe(c.n, 3);
    DenseRealMatrix closed = matrix_power_closed(c.n, c.m);
    if (opts.inject_fault && idx == last) closed(1, 1) += 1.0;
    const DenseIntMatrix blocked = matrix_power_blocked(s, c.m);
    const DenseIntMatrix dense = dense_pow_binary(to_dense(s), c.m);
    judge_closed(c, closed, dense, opts.tolerance);
    if (!(blocked == dense)) {
      c.exact_match = false;
      c.status = "mismatch";
    }
    c.wall_time = seconds_since(t0);
  });
  report.finalize();
  return report;
}

RunReport bench(const BenchOptions& opts) {
  if (opts.orders.empty()) throw std::invalid_argument("bench: at least one order is required");
  if (opts.m < 0) throw std::invalid_argument("bench: m must be >= 0");
  if (opts.repeat < 1) throw std::invalid_argument("bench: repeat must be >= 1");
  for (std::size_t n : opts.orders)
    if (n < 3) throw std::invalid_argument("bench: every order must be >= 3");

  RunReport report;
  report.isa = kernels::active().name;

  // Minimum wall time over the repeats; the last result is kept.
  auto timed = [&](auto&& fn) {
    double best = std::numeric_limits<double>::infinity();
    decltype(fn()) result{};
    for (std::size_t r = 0; r < opts.repeat; ++r) {
      const auto t0 = Clock::now();
      result = fn();
      best = std::min(best, seconds_since(t0));
    }
    return std::pair{std::move(result), best};
  };

  for (std::size_t n : opts.orders) {
    const StripeMatrix s = make_stripe(n, 3);
    auto [dense, t_dense] = timed([&] { return dense_pow_binary(to_dense(s), opts.m); });
    auto [blocked, t_blocked] = timed([&] { return matrix_power_blocked(s, opts.m); });

    if (n % 3 == 0) {
      auto [closed, t_closed] = timed([&] { return matrix_power_closed(n, opts.m); });
      ReportCase c{n, opts.m, "closed", "", 0.0, false, t_closed};
      judge_closed(c, closed, dense, opts.tolerance);
      report.cases.push_back(c);
    } else {
      report.skipped.push_back({n, opts.m, "closed", "skipped: n not multiple of 3"});
    }
    const bool agree = blocked == dense;
    report.cases.push_back({n, opts.m, "blocked", agree ? "ok" : "mismatch", 0.0, agree, t_blocked});
    report.cases.push_back({n, opts.m, "dense", agree ? "ok" : "mismatch", 0.0, agree, t_dense});
  }
  report.finalize();
  return report;
}

}  // namespace stripepow::cli
