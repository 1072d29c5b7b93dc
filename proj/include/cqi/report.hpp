#pragma once

// Report objects behind the CLI commands and their JSON / CSV forms.
// JSON objects use sorted keys; integers that do not fit in 64 bits are
// emitted as decimal strings.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cqi/bigint.hpp"
#include "cqi/counting.hpp"
#include "cqi/permstat.hpp"
#include "cqi/spec_text.hpp"

namespace cqi {

using Json = nlohmann::json;

Json big_to_json(const BigInt& v);

struct ComponentVerdict {
  std::uint64_t p = 0;
  std::string signature;
  bool homocyclic = false;
};

struct AnalyzeReport {
  std::string spec;
  std::vector<ComponentVerdict> components;
  bool cqi = true;
};

AnalyzeReport analyze(const GroupSpec& spec);

struct CountReport {
  std::string spec;
  std::optional<std::uint64_t> p;
  std::optional<BigInt> classes;
  // X(G)/~ has no meaning once several primes divide |G|.
  bool classes_undefined = false;
  std::optional<BigInt> subgroups;
  std::optional<bool> cqi;
  std::string method;
  Json terms = Json::object();
};

struct CountFields {
  bool classes = true;
  bool subgroups = true;
  bool cqi = true;
};

CountReport count(const GroupSpec& spec, const CountFields& fields = {});

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  Json expected;
  Json actual;
  std::string note;
};

struct VerifyOptions {
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
  std::uint64_t endomorphism_cap = kDefaultEndomorphismCap;
  // The brute-force cross-check is required rather than best-effort.
  bool force_oracle = false;
};

struct VerifyReport {
  std::string spec;
  std::vector<CheckResult> checks;
  bool passed = true;            // no check failed
  bool required_skipped = false; // a forced oracle check hit a cap
};

VerifyReport verify(const GroupSpec& spec, const VerifyOptions& options = {});

Json to_json(const AnalyzeReport& r);
Json to_json(const CountReport& r);
Json to_json(const CheckResult& r);
Json to_json(const VerifyReport& r);
Json to_json(const TripleIdentityReport& r);

std::string to_string(CheckStatus s);

// "spec,p,classes,subgroups,cqi"; optional fields become empty cells and an
// undefined class count prints as "undefined".
std::string count_csv_header();
std::string to_csv_row(const CountReport& r);

}  // namespace cqi
