#include "cqi/cli.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cqi/error.hpp"
#include "cqi/families.hpp"
#include "cqi/report.hpp"

namespace cqi {

namespace {

struct CommonFlags {
  bool oracle = false;
  std::uint64_t cap_end = kDefaultEndomorphismCap;
  std::uint64_t cap_enum = kDefaultEnumerationCap;
  std::string format = "json";
  std::string out_path;
  bool timestamps = false;
};

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void stamp(Json& j, const CommonFlags& flags) {
  if (flags.timestamps) j["generated_at"] = utc_now();
}

// Writes to --out when given, otherwise to out.
void emit(const std::string& text, const CommonFlags& flags, std::ostream& out) {
  if (flags.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(flags.out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + flags.out_path);
  file << text;
  if (!file) throw std::runtime_error("cannot write " + flags.out_path);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string csv_escape(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

int cmd_analyze(const std::string& text, const CommonFlags& flags, std::ostream& out) {
  const AnalyzeReport r = analyze(parse_group_spec(text));
  if (flags.format == "csv") {
    std::ostringstream os;
    os << "p,signature,homocyclic\n";
    for (const auto& c : r.components)
      os << c.p << ',' << c.signature << ',' << (c.homocyclic ? "true" : "false") << '\n';
    emit(os.str(), flags, out);
  } else {
    Json j = to_json(r);
    stamp(j, flags);
    emit(dump(j), flags, out);
  }
  return kExitOk;
}

int cmd_count(const std::string& text, const CommonFlags& flags, std::ostream& out) {
  const CountReport r = count(parse_group_spec(text));
  if (flags.format == "csv") {
    emit(count_csv_header() + "\n" + to_csv_row(r) + "\n", flags, out);
  } else {
    Json j = to_json(r);
    stamp(j, flags);
    emit(dump(j), flags, out);
  }
  return kExitOk;
}

int cmd_verify(const std::string& text, const CommonFlags& flags, std::ostream& out, std::ostream& err) {
  VerifyOptions options;
  options.enumeration_cap = flags.cap_enum;
  options.endomorphism_cap = flags.cap_end;
  options.force_oracle = flags.oracle;
  const VerifyReport r = verify(parse_group_spec(text), options);
  for (const auto& c : r.checks)
    if (c.status == CheckStatus::Skipped) err << "warning: check " << c.name << " skipped: " << c.note << '\n';
  if (flags.format == "csv") {
    std::ostringstream os;
    os << "check,status,expected,actual\n";
    for (const auto& c : r.checks)
      os << c.name << ',' << to_string(c.status) << ',' << csv_escape(c.expected) << ',' << csv_escape(c.actual)
         << '\n';
    emit(os.str(), flags, out);
  } else {
    Json j = to_json(r);
    stamp(j, flags);
    emit(dump(j), flags, out);
  }
  if (!r.passed) return kExitMismatch;
  if (r.required_skipped) return kExitCap;
  return kExitOk;
}

int cmd_perm(unsigned n, const CommonFlags& flags, std::ostream& out) {
  const TripleIdentityReport r = verify_triple_identity(n);
  if (flags.format == "csv") {
    std::ostringstream os;
    os << "n,brute,closed,classes,y_size,equal\n"
       << r.n << ',' << to_decimal(r.brute) << ',' << to_decimal(r.closed) << ',' << to_decimal(r.classes) << ','
       << to_decimal(r.y_size) << ',' << (r.equal ? "true" : "false") << '\n';
    emit(os.str(), flags, out);
  } else {
    Json j = to_json(r);
    stamp(j, flags);
    emit(dump(j), flags, out);
  }
  return r.equal ? kExitOk : kExitMismatch;
}

struct SweepConfig {
  std::uint64_t max_order = 0;
  std::vector<std::uint64_t> primes;
  std::vector<std::string> modes;
};

int cmd_sweep(const SweepConfig& config, const CommonFlags& flags, std::ostream& out, std::ostream& err) {
  if (config.max_order < 2) throw Error(ErrorCode::OutOfRange, "--max-order must be at least 2");
  std::vector<std::uint64_t> primes = config.primes;
  if (primes.empty())
    for (std::uint64_t q = 2; q <= config.max_order; ++q)
      if (is_prime(q)) primes.push_back(q);
  for (std::uint64_t p : primes)
    if (!is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  const std::set<std::string> modes(config.modes.begin(), config.modes.end());
  CountFields fields{modes.count("classes") > 0, modes.count("subgroups") > 0, modes.count("cqi") > 0};
  const bool with_verify = modes.count("verify") > 0;

  std::vector<PrimePowerSignature> sigs;
  for (std::uint64_t p : primes) {
    auto part = signatures_up_to_order(p, config.max_order);
    sigs.insert(sigs.end(), part.begin(), part.end());
  }
  std::stable_sort(sigs.begin(), sigs.end(), [](const PrimePowerSignature& a, const PrimePowerSignature& b) {
    const BigInt oa = big_pow(a.prime(), a.total_exponent()), ob = big_pow(b.prime(), b.total_exponent());
    if (oa != ob) return oa < ob;
    if (a.prime() != b.prime()) return a.prime() < b.prime();
    return std::lexicographical_compare(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end());
  });

  VerifyOptions vo;
  vo.enumeration_cap = flags.cap_enum;
  vo.endomorphism_cap = flags.cap_end;
  vo.force_oracle = flags.oracle;
  bool mismatch = false, required_skipped = false;

  std::ostringstream csv;
  Json rows = Json::array();
  csv << count_csv_header() << (with_verify ? ",verified" : "") << '\n';
  for (const auto& sig : sigs) {
    const GroupSpec spec = sig;
    const CountReport r = count(spec, fields);
    std::string verified;
    Json row = to_json(r);
    if (with_verify) {
      const VerifyReport v = verify(spec, vo);
      for (const auto& c : v.checks)
        if (c.status == CheckStatus::Skipped)
          err << "warning: " << r.spec << ": check " << c.name << " skipped: " << c.note << '\n';
      mismatch = mismatch || !v.passed;
      required_skipped = required_skipped || v.required_skipped;
      verified = v.passed ? "true" : "false";
      row["verified"] = v.passed;
    }
    csv << to_csv_row(r) << (with_verify ? "," + verified : "") << '\n';
    rows.push_back(std::move(row));
  }

  if (flags.format == "csv") {
    emit(csv.str(), flags, out);
  } else {
    Json j = {{"max_order", config.max_order}, {"primes", primes}, {"rows", rows}};
    stamp(j, flags);
    emit(dump(j), flags, out);
  }
  if (mismatch) return kExitMismatch;
  if (required_skipped) return kExitCap;
  return kExitOk;
}

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_flag("--oracle", flags.oracle, "Require the brute-force cross-check");
  cmd->add_option("--cap-end", flags.cap_end, "Largest endomorphism space searched")->check(CLI::PositiveNumber);
  cmd->add_option("--cap-enum", flags.cap_enum, "Largest group or profile space enumerated")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", flags.out_path, "Write the report to this file");
  cmd->add_flag("--timestamps", flags.timestamps, "Add a generation time to JSON output");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclic-quasi-injectivity of finite abelian groups", "cqi"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string spec_text;
  unsigned perm_n = 0;
  SweepConfig sweep{0, {}, {"classes", "subgroups", "cqi"}};

  auto* analyze_cmd = app.add_subcommand("analyze", "CRT decomposition and homocyclic verdicts");
  auto* count_cmd = app.add_subcommand("count", "Closed-form counts of X(G) and X(G)/~");
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check the formulas against enumeration");
  for (auto* cmd : {analyze_cmd, count_cmd, verify_cmd}) {
    cmd->add_option("spec", spec_text, "Group spec, e.g. Z(6)+Z(12) or {\"p\":2,\"parts\":[[2,1],[5,1]]}")
        ->required();
    add_common(cmd, flags);
  }
  auto* perm_cmd = app.add_subcommand("perm", "Max-jump sum identity for S_n");
  perm_cmd->add_option("n", perm_n, "Permutation length")->required()->check(CLI::PositiveNumber);
  add_common(perm_cmd, flags);
  auto* sweep_cmd = app.add_subcommand("sweep", "Counts for every p-group up to an order");
  sweep_cmd->add_option("--max-order", sweep.max_order, "Largest group order")->required();
  sweep_cmd->add_option("--primes", sweep.primes, "Primes to sweep (default: all up to max order)")
      ->delimiter(',');
  sweep_cmd->add_option("--modes", sweep.modes, "Subset of classes,subgroups,cqi,verify")
      ->delimiter(',')
      ->check(CLI::IsMember({"classes", "subgroups", "cqi", "verify"}));
  add_common(sweep_cmd, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(spec_text, flags, out);
    if (*count_cmd) return cmd_count(spec_text, flags, out);
    if (*verify_cmd) return cmd_verify(spec_text, flags, out, err);
    if (*perm_cmd) return cmd_perm(perm_n, flags, out);
    if (*sweep_cmd) return cmd_sweep(sweep, flags, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::CapExceeded || e.code() == ErrorCode::TooLarge ? kExitCap : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cqi
