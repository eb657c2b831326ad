#ifndef FIBPART_CLI_HPP
#define FIBPART_CLI_HPP

// Command-line front end. `run` executes an already-parsed configuration;
// `cli_main` parses argv with CLI11 and maps failures to exit codes:
//   0 success, 1 domain/precision/resource error, 2 usage error, 3 verify mismatch.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fibpart/asymptotics.hpp"
#include "fibpart/bigfib.hpp"
#include "fibpart/errors.hpp"
#include "fibpart/numeric.hpp"
#include "fibpart/oracle.hpp"
#include "fibpart/partition_count.hpp"
#include "fibpart/summatory.hpp"

namespace fibpart {

enum class Command { Fib, Zeck, R, A, Mean, BAvg, RatioSeries, Bounds, Verify, OracleDump };
enum class OutputFormat { Default, Text, Json, Csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMismatch = 3;

struct CliConfig {
  Command command = Command::Fib;
  int depth = 27;
  unsigned digits = kDefaultDigits;
  std::uint64_t limit = 100000;
  OutputFormat format = OutputFormat::Default;
  std::optional<std::string> output_path;
};

/// Usage-level failure: malformed positional argument and the like.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline BigNat positional(const std::vector<std::string>& args, const char* what) {
  if (args.size() != 1) throw UsageError(std::string("expected exactly one argument <") + what + ">");
  try {
    return parse_natural(args[0]);
  } catch (const ValidationError& e) {
    throw UsageError(e.what());
  }
}

inline std::uint64_t positional_u64(const std::vector<std::string>& args, const char* what) {
  const BigNat v = positional(args, what);
  if (v > std::numeric_limits<std::uint64_t>::max()) throw UsageError(std::string("<") + what + "> is too large");
  return v.convert_to<std::uint64_t>();
}

inline std::string quoted(const BigInt& x) { return "\"" + x.str() + "\""; }

inline void write_samples_csv(const std::vector<Sample>& rows, const char* column, unsigned digits, std::ostream& out) {
  out << "H," << column << '\n';
  for (const auto& s : rows) out << s.h << ',' << to_decimal(s.value, digits) << '\n';
}

inline int dispatch(const CliConfig& cfg, const std::vector<std::string>& args, std::ostream& out) {
  const bool json = cfg.format == OutputFormat::Json;
  switch (cfg.command) {
    case Command::Fib: {
      const BigNat m = positional(args, "m");
      if (m > 10'000'000) detail::domain_fail("fib: index too large");
      const int idx = m.convert_to<int>();
      const BigNat f = fib(idx);
      if (json) out << "{\"m\":" << idx << ",\"F\":" << quoted(f) << "}\n";
      else out << f << '\n';
      return kExitOk;
    }
    case Command::Zeck: {
      out << to_json(zeckendorf_encode(positional(args, "n"))) << '\n';
      return kExitOk;
    }
    case Command::R: {
      const BigNat h = positional(args, "H");
      const BigNat r = r_exact(h);
      if (json) out << "{\"H\":" << quoted(h) << ",\"R\":" << quoted(r) << "}\n";
      else out << r << '\n';
      return kExitOk;
    }
    case Command::A: {
      const BigNat h = positional(args, "H");
      const BigNat a = a_exact(h);
      if (json) out << "{\"H\":" << quoted(h) << ",\"A\":" << quoted(a) << "}\n";
      else out << a << '\n';
      return kExitOk;
    }
    case Command::Mean: {
      const BigNat h = positional(args, "H");
      const Rational m = mean(h);
      if (json) {
        PrecisionScope scope(cfg.digits);
        out << "{\"H\":" << quoted(h) << ",\"numerator\":" << quoted(numerator(m))
            << ",\"denominator\":" << quoted(denominator(m)) << ",\"value\":\""
            << to_decimal(to_real(m), cfg.digits) << "\"}\n";
      } else {
        out << m << '\n';
      }
      return kExitOk;
    }
    case Command::BAvg: {
      const std::uint64_t h = positional_u64(args, "H");
      if (cfg.format == OutputFormat::Csv) {
        write_samples_csv(b_log_series(h, cfg.digits), "value", cfg.digits, out);
        return kExitOk;
      }
      const Real b = b_log_average(h, cfg.digits);
      if (json) out << "{\"H\":" << h << ",\"B\":\"" << to_decimal(b, cfg.digits) << "\"}\n";
      else out << to_decimal(b, cfg.digits) << '\n';
      return kExitOk;
    }
    case Command::RatioSeries: {
      write_samples_csv(ratio_series(cfg.limit, cfg.digits), "ratio", cfg.digits, out);
      return kExitOk;
    }
    case Command::OracleDump: {
      write_oracle_csv(build_oracle(cfg.limit), out);
      return kExitOk;
    }
    case Command::Bounds: {
      if (cfg.digits < kMinDigits) detail::domain_fail("bounds: digits must be >= 15");
      const Subdivision sub = subdivide(cfg.depth, cfg.digits);
      if (cfg.format == OutputFormat::Csv) {
        write_subdivision_csv(sub, out);
        return kExitOk;
      }
      const BoundsReport rep = bounds_from(sub);
      if (cfg.format == OutputFormat::Text) {
        out << "depth " << rep.depth << ", " << rep.endpoint_count << " subintervals, " << rep.digits << " digits\n"
            << to_decimal(rep.c1_lower, rep.digits) << " < c1 < " << to_decimal(rep.c1_upper, rep.digits) << '\n'
            << to_decimal(rep.c2_lower, rep.digits) << " < c2 < " << to_decimal(rep.c2_upper, rep.digits) << '\n'
            << "min L at pattern " << rep.argmin_pattern.to_json() << ", max U at pattern "
            << rep.argmax_pattern.to_json() << '\n';
      } else {
        write_bounds_json(rep, out);
      }
      return kExitOk;
    }
    case Command::Verify: {
      const auto mismatches = verify_formulas(cfg.limit);
      if (json) {
        out << "{\"limit\":" << cfg.limit << ",\"mismatches\":[";
        for (std::size_t i = 0; i < mismatches.size(); ++i) {
          const auto& m = mismatches[i];
          out << (i ? "," : "") << "{\"H\":" << m.h << ",\"function\":\"" << m.function
              << "\",\"expected\":" << quoted(m.expected) << ",\"actual\":" << quoted(m.actual) << '}';
        }
        out << "]}\n";
      } else if (mismatches.empty()) {
        out << "ok: r_exact, r_robbins, a_exact, a_recursive agree with the oracle for 0 <= H <= " << cfg.limit
            << '\n';
      } else {
        for (const auto& m : mismatches) {
          out << "mismatch H=" << m.h << ' ' << m.function << " expected " << m.expected << " got " << m.actual
              << '\n';
        }
      }
      return mismatches.empty() ? kExitOk : kExitMismatch;
    }
  }
  return kExitUsage;
}

}  // namespace detail

/// Runs one command. Domain, validation, precision and resource errors are
/// reported on `err` with exit status 1; malformed arguments with status 2.
inline int run(const CliConfig& cfg, const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.output_path) {
      std::ofstream file(*cfg.output_path);
      if (!file) {
        err << "error: cannot open " << *cfg.output_path << " for writing\n";
        return kExitDomain;
      }
      return detail::dispatch(cfg, args, file);
    }
    return detail::dispatch(cfg, args, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << '\n';
  } catch (const PrecisionError& e) {
    err << "precision error: " << e.what() << '\n';
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
  }
  return kExitDomain;
}

/// Parses `argv` (program name first) and runs the selected command.
inline int cli_main(std::vector<std::string> argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fibonacci partitions: R(H), A(H) and the asymptotic constants c1, c2", "fibpart"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  std::string format;
  std::string output;
  app.add_option("--depth", cfg.depth, "Largest Zeckendorf offset in the bounds subdivision")
      ->check(CLI::Range(2, 60))
      ->capture_default_str();
  app.add_option("--digits", cfg.digits, "Working precision in significant decimal digits")
      ->check(CLI::Range(kMinDigits, 100000U))
      ->envname("FIBPART_DIGITS")
      ->capture_default_str();
  app.add_option("--limit", cfg.limit, "Upper end of the H range for verify, ratio-series and oracle-dump")
      ->capture_default_str();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("-o,--output", output, "Write output to this file instead of stdout");

  std::vector<std::string> pos;
  struct Sub {
    const char* name;
    const char* help;
    Command cmd;
    const char* arg;  // positional name or nullptr
  };
  const Sub subs[] = {
      {"fib", "Fibonacci number F_m", Command::Fib, "m"},
      {"zeck", "Zeckendorf expansion of n as a JSON index array", Command::Zeck, "n"},
      {"r", "Number of partitions of H into distinct Fibonacci numbers", Command::R, "H"},
      {"a", "Summatory function A(H) = R(0) + ... + R(H)", Command::A, "H"},
      {"mean", "Mean value A(H)/H as an exact fraction", Command::Mean, "H"},
      {"bavg", "Logarithmic average B(H)", Command::BAvg, "H"},
      {"ratio-series", "CSV of A(H)/H^lambda for 1 <= H <= limit", Command::RatioSeries, nullptr},
      {"bounds", "Enclosures of c1 and c2 (JSON report; csv gives the per-subinterval table)", Command::Bounds,
       nullptr},
      {"verify", "Check every formula against the brute-force oracle up to --limit", Command::Verify, nullptr},
      {"oracle-dump", "CSV n,R,A from the brute-force oracle up to --limit", Command::OracleDump, nullptr},
  };
  for (const auto& s : subs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    const Command cmd = s.cmd;
    sub->callback([&cfg, cmd] { cfg.command = cmd; });
    if (s.arg) sub->add_option(s.arg, pos, "Decimal integer")->required()->expected(1);
  }

  try {
    std::vector<std::string> reversed(argv.rbegin(), argv.rend() - (argv.empty() ? 0 : 1));
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  if (format == "text") cfg.format = OutputFormat::Text;
  else if (format == "json") cfg.format = OutputFormat::Json;
  else if (format == "csv") cfg.format = OutputFormat::Csv;
  if (!output.empty()) cfg.output_path = output;
  return run(cfg, pos, out, err);
}

}  // namespace fibpart

#endif  // FIBPART_CLI_HPP
