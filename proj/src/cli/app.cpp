#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "stripepow/chebyshev.hpp"
#include "stripepow/cli.hpp"
#include "stripepow/io.hpp"
#include "stripepow/power.hpp"
#include "stripepow/spectral.hpp"
#include "stripepow/stripe.hpp"

namespace stripepow::cli {
namespace {

std::size_t to_order(long long v, const char* what) {
  if (v < 1) throw std::invalid_argument(std::string(what) + " must be >= 1");
  return static_cast<std::size_t>(v);
}

std::int64_t to_exponent(long long v) {
  if (v < 0) throw std::invalid_argument("m must be >= 0 (negative powers are not supported)");
  return static_cast<std::int64_t>(v);
}

void require_multiple_of_3(std::size_t n) {
  if (n < 3 || n % 3 != 0)
    throw std::invalid_argument("n = " + std::to_string(n) + " must be a positive multiple of 3");
}

struct PowerArgs {
  long long n = 0, m = 0, d = 3;
  std::string method = "closed";
  std::string format = "csv";
  bool exact = false;
  double tol = 1e-6;
};

int cmd_power(const PowerArgs& a, std::ostream& out) {
  const std::size_t n = to_order(a.n, "n");
  const std::size_t d = to_order(a.d, "d");
  const std::int64_t m = to_exponent(a.m);
  const io::Format fmt = io::parse_format(a.format);

  auto emit = [&](const auto& matrix) {
    if (fmt == io::Format::json)
      io::write_matrix_json(out, m, a.method, matrix);
    else
      io::write_matrix_csv(out, matrix);
  };

  if (a.method == "closed") {
    if (d != 3) throw std::invalid_argument("the closed form requires stride d = 3");
    require_multiple_of_3(n);
    const DenseRealMatrix closed = matrix_power_closed(n, m);
    if (a.exact)
      emit(round_to_int(closed, a.tol));
    else
      emit(closed);
  } else if (a.method == "blocked") {
    emit(matrix_power_blocked(make_stripe(n, d), m));
  } else if (a.method == "oracle") {
    emit(dense_pow_binary(to_dense(make_stripe(n, d)), m));
  } else {
    throw std::invalid_argument("unknown method '" + a.method + "'");
  }
  return kExitOk;
}

int cmd_eig(long long n_arg, const std::string& format, std::ostream& out) {
  const std::size_t n = to_order(n_arg, "n");
  require_multiple_of_3(n);
  const io::Format fmt = io::parse_format(format);
  const Spectrum s = eigenvalues(n);
  if (fmt == io::Format::csv) {
    out << "k,lambda,multiplicity,h_canonical,h_paper\n";
    for (std::size_t k = 0; k < s.block_order; ++k)
      out << k + 1 << ',' << io::format_real(s.lambdas[k]) << ',' << s.multiplicity << ','
          << io::format_real(s.h_canonical[k]) << ',' << io::format_real(s.h_paper[k]) << '\n';
    return kExitOk;
  }
  io::JsonWriter w(out);
  auto list = [&](const char* key, const std::vector<double>& v) {
    w.key(key).begin_array();
    for (double x : v) w.value(x);
    w.end_array();
  };
  w.begin_object();
  w.field("n", static_cast<std::uint64_t>(n));
  list("lambdas", s.lambdas);
  w.field("multiplicity", static_cast<std::uint64_t>(s.multiplicity));
  list("h_canonical", s.h_canonical);
  list("h_paper", s.h_paper);
  w.end_object();
  out << '\n';
  return kExitOk;
}

struct EntryArgs {
  long long n = 0, m = 0, i = 0, j = 0;
  std::string format = "json";
  double tol = 1e-6;
};

int cmd_entry(const EntryArgs& a, std::ostream& out) {
  const std::size_t n = to_order(a.n, "n");
  require_multiple_of_3(n);
  const std::int64_t m = to_exponent(a.m);
  if (a.i < 1 || a.j < 1 || static_cast<std::size_t>(a.i) > n || static_cast<std::size_t>(a.j) > n)
    throw std::invalid_argument("indices must lie in [1, " + std::to_string(n) + "]");
  const auto i = static_cast<std::size_t>(a.i);
  const auto j = static_cast<std::size_t>(a.j);
  const io::Format fmt = io::parse_format(a.format);
  if (!(a.tol > 0.0 && a.tol < 0.5)) throw std::invalid_argument("tol must lie in (0, 0.5)");

  const double value = entry_power_canonical(PowerQuery{n, m, i, j});
  const BigInt oracle = matrix_power_blocked(make_stripe(n, 3), m)(i, j);
  const double nearest = std::nearbyint(value);
  const bool match = std::isfinite(value) && std::abs(value - nearest) <= a.tol &&
                     BigInt(nearest) == oracle;

  if (fmt == io::Format::csv) {
    out << "n,m,i,j,value,oracle,oracle_match\n"
        << n << ',' << m << ',' << i << ',' << j << ',' << io::format_real(value) << ','
        << oracle.get_str() << ',' << (match ? "true" : "false") << '\n';
  } else {
    io::JsonWriter w(out);
    w.begin_object();
    w.field("n", static_cast<std::uint64_t>(n));
    w.field("m", m);
    w.field("i", static_cast<std::uint64_t>(i));
    w.field("j", static_cast<std::uint64_t>(j));
    w.field("value", value);
    w.field("oracle", oracle.get_str());
    w.field("oracle_match", match);
    w.end_object();
    out << '\n';
  }
  return match ? kExitOk : kExitFailure;
}

int cmd_charpoly(long long n_arg, double lambda, const std::string& format, std::ostream& out) {
  const std::size_t n = to_order(n_arg, "n");
  require_multiple_of_3(n);
  const io::Format fmt = io::parse_format(format);
  const double cheb = charpoly_value(n, lambda);
  const double det = dense_det_shifted(make_stripe(n, 3), lambda);
  const double rel = std::abs(cheb - det) / std::max(1.0, std::abs(cheb));
  if (fmt == io::Format::csv) {
    out << "n,lambda,charpoly,det,rel_diff\n"
        << n << ',' << io::format_real(lambda) << ',' << io::format_real(cheb) << ','
        << io::format_real(det) << ',' << io::format_real(rel) << '\n';
  } else {
    io::JsonWriter w(out);
    w.begin_object();
    w.field("n", static_cast<std::uint64_t>(n));
    w.field("lambda", lambda);
    w.field("charpoly", cheb);
    w.field("det", det);
    w.field("rel_diff", rel);
    w.end_object();
    out << '\n';
  }
  return kExitOk;
}

int emit_report(const RunReport& report, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    write_report(out, report);
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open report file '" + out_path + "'");
    write_report(f, report);
    std::size_t matched = 0;
    for (const auto& c : report.cases) matched += c.exact_match ? 1 : 0;
    out << (report.pass ? "PASS" : "FAIL") << ' ' << matched << '/' << report.cases.size()
        << " cases matched; report written to " << out_path << '\n';
  }
  return report.pass ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integer powers of symmetric (0,1) stride-banded matrices. Indices are 1-based."};
  app.name(args.empty() ? "stripepow" : args.front());
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  PowerArgs power;
  auto* power_cmd = app.add_subcommand("power", "Print the full matrix H^m");
  power_cmd->add_option("--n", power.n, "Matrix order")->required();
  power_cmd->add_option("--m", power.m, "Exponent (>= 0)")->required();
  power_cmd->add_option("--d", power.d, "Stride (blocked/oracle only)")->capture_default_str();
  power_cmd->add_option("--method", power.method, "closed | blocked | oracle")
      ->check(CLI::IsMember({"closed", "blocked", "oracle"}))
      ->capture_default_str();
  power_cmd->add_option("--format", power.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  power_cmd->add_flag("--exact", power.exact, "Round the closed form to exact integers");
  power_cmd->add_option("--tol", power.tol, "Rounding tolerance for --exact")->capture_default_str();

  long long eig_n = 0;
  std::string eig_format = "json";
  auto* eig_cmd = app.add_subcommand("eig", "Print eigenvalues and normalization constants");
  eig_cmd->add_option("--n", eig_n, "Matrix order (multiple of 3)")->required();
  eig_cmd->add_option("--format", eig_format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  EntryArgs entry;
  auto* entry_cmd = app.add_subcommand("entry", "Print one closed-form entry with an oracle check");
  entry_cmd->add_option("--n", entry.n, "Matrix order (multiple of 3)")->required();
  entry_cmd->add_option("--m", entry.m, "Exponent (>= 0)")->required();
  entry_cmd->add_option("--i", entry.i, "Row index (1-based)")->required();
  entry_cmd->add_option("--j", entry.j, "Column index (1-based)")->required();
  entry_cmd->add_option("--format", entry.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  entry_cmd->add_option("--tol", entry.tol, "Rounding tolerance")->capture_default_str();

  long long v_nmax = 30, v_mmax = 16;
  VerifyOptions verify;
  std::string verify_out;
  auto* verify_cmd = app.add_subcommand("verify", "Closed form vs blocked vs dense oracle sweep");
  verify_cmd->add_option("--n-max", v_nmax, "Largest order (n = 3, 6, ...)")->capture_default_str();
  verify_cmd->add_option("--m-max", v_mmax, "Largest exponent")->capture_default_str();
  verify_cmd->add_option("--tol,--tolerance", verify.tolerance, "Rounding tolerance")
      ->capture_default_str();
  verify_cmd->add_option("--out", verify_out, "Report path (stdout when omitted)");
  verify_cmd->add_flag("--inject-fault", verify.inject_fault,
                       "Test hook: perturb one closed-form entry");

  std::vector<long long> bench_orders;
  long long bench_m = 8, bench_repeat = 1;
  std::string bench_out;
  auto* bench_cmd = app.add_subcommand("bench", "Time the closed, blocked and dense paths");
  bench_cmd->add_option("--n", bench_orders, "Orders, comma separated")->required()->delimiter(',');
  bench_cmd->add_option("--m", bench_m, "Exponent")->capture_default_str();
  bench_cmd->add_option("--repeat", bench_repeat, "Repetitions per method")->capture_default_str();
  bench_cmd->add_option("--out", bench_out, "Report path (stdout when omitted)");

  double cp_lambda = 0.0;
  long long cp_n = 0;
  std::string cp_format = "json";
  auto* cp_cmd = app.add_subcommand("charpoly", "Characteristic polynomial: Chebyshev vs elimination");
  cp_cmd->add_option("--n", cp_n, "Matrix order (multiple of 3)")->required();
  cp_cmd->add_option("--lambda", cp_lambda, "Evaluation point")->required();
  cp_cmd->add_option("--format", cp_format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  try {
    std::vector<std::string> rev(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(rev.begin(), rev.end());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and --version
      return app.exit(e, out, err);
    }
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*power_cmd) return cmd_power(power, out);
    if (*eig_cmd) return cmd_eig(eig_n, eig_format, out);
    if (*entry_cmd) return cmd_entry(entry, out);
    if (*cp_cmd) return cmd_charpoly(cp_n, cp_lambda, cp_format, out);
    if (*verify_cmd) {
      verify.n_max = to_order(v_nmax, "n-max");
      verify.m_max = to_exponent(v_mmax);
      verify.threads = threads_from_env();
      return emit_report(verify_sweep(verify), verify_out, out);
    }
    if (*bench_cmd) {
      BenchOptions b;
      for (long long n : bench_orders) b.orders.push_back(to_order(n, "n"));
      b.m = to_exponent(bench_m);
      if (bench_repeat < 1) throw std::invalid_argument("repeat must be >= 1");
      b.repeat = static_cast<std::size_t>(bench_repeat);
      return emit_report(bench(b), bench_out, out);
    }
  } catch (const RoundingFailure& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace stripepow::cli
