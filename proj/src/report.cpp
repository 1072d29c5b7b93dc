#include "cqi/report.hpp"

#include <functional>
#include <sstream>

#include "cqi/composite_oracle.hpp"
#include "cqi/error.hpp"
#include "cqi/extension.hpp"

namespace cqi {

namespace {

CheckResult compare(std::string name, const BigInt& expected, const BigInt& actual) {
  CheckResult c;
  c.name = std::move(name);
  c.expected = big_to_json(expected);
  c.actual = big_to_json(actual);
  c.status = expected == actual ? CheckStatus::Pass : CheckStatus::Fail;
  return c;
}

CheckResult skipped(std::string name, std::string note) {
  CheckResult c;
  c.name = std::move(name);
  c.status = CheckStatus::Skipped;
  c.note = std::move(note);
  return c;
}

bool fits_cap(const BigInt& size, std::uint64_t cap) { return size <= big_from_u64(cap); }

// Cap failures from the enumerators are reported as skips; everything else propagates.
void run_capped(std::vector<CheckResult>& out, const std::string& name,
                const std::function<void(std::vector<CheckResult>&)>& body) {
  try {
    body(out);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CapExceeded && e.code() != ErrorCode::OutOfRange) throw;
    out.push_back(skipped(name, e.what()));
  }
}

void verify_primary(const PrimePowerSignature& sig, const VerifyOptions& options, const std::string& prefix,
                    VerifyReport& report) {
  auto& checks = report.checks;
  const BigInt classes = count_classes_closed_form(sig).total();
  const BigInt subgroups = count_subgroups_closed_form(sig).total();

  run_capped(checks, prefix + "classes_closed_vs_Y", [&](auto& out) {
    const auto y = enumerate_Y(sig, options.enumeration_cap);
    out.push_back(compare(prefix + "classes_closed_vs_Y", classes, big_from_u64(y.size())));
    out.push_back(compare(prefix + "fiber_sum_vs_closed", subgroups, fiber_sum(y, sig.prime())));
  });

  run_capped(checks, prefix + "conditions_agree", [&](auto& out) {
    std::uint64_t mismatches = 0;
    for_each_candidate_profile(sig, options.enumeration_cap, [&](std::span<const unsigned> flat) {
      const auto delta = DeltaProfile::from_flat(flat, sig);
      const bool c1 = condition1(flat, sig);
      if (c1 != condition2(delta, sig) || c1 != condition3(delta, sig)) ++mismatches;
    });
    out.push_back(compare(prefix + "conditions_agree", 0, big_from_u64(mismatches)));
  });

  run_capped(checks, prefix + "partition_Y1_Y2_Y3_Y4", [&](auto& out) {
    const PartitionCounts pc = partition_counts(sig, options.enumeration_cap);
    BigInt sum = big_from_u64(pc.y1 + pc.y2 + pc.y3);
    sum -= big_from_u64(pc.y4);
    out.push_back(compare(prefix + "partition_Y1_Y2_Y3_Y4", big_from_u64(pc.y), sum));
  });

  const bool enumerable = fits_cap(big_pow(sig.prime(), sig.total_exponent()), options.enumeration_cap);
  const bool oracle_fits = enumerable && fits_cap(sig.endomorphism_count(), options.endomorphism_cap);
  if (!enumerable) {
    checks.push_back(skipped(prefix + "enumeration", "group order exceeds enumeration cap"));
  } else {
    run_capped(checks, prefix + "enumeration", [&](auto& out) {
      EnumerationOptions eo;
      eo.enumeration_cap = options.enumeration_cap;
      eo.endomorphism_cap = options.endomorphism_cap;
      eo.verify_with_oracle = oracle_fits;
      const EnumerationCount ec = count_X_enumeration(PrimePowerGroup(sig), eo);
      out.push_back(compare(prefix + "classes_closed_vs_enumerated", classes, big_from_u64(ec.classes)));
      out.push_back(compare(prefix + "subgroups_closed_vs_enumerated", subgroups, big_from_u64(ec.subgroups)));
      out.push_back(compare(prefix + "cyclic_census_vs_enumerated", count_cyclic_subgroups(sig),
                            big_from_u64(ec.cyclic_subgroups)));
      if (oracle_fits) {
        out.push_back(compare(prefix + "oracle_subgroups", subgroups, big_from_u64(*ec.oracle_subgroups)));
        out.push_back(compare(prefix + "oracle_classes", classes, big_from_u64(*ec.oracle_classes)));
        out.push_back(compare(prefix + "oracle_disagreements", 0, big_from_u64(ec.disagreements)));
        out.push_back(compare(prefix + "profile_invariance", 0, big_from_u64(ec.split_profiles)));
      }
    });
  }
  if (!oracle_fits) {
    checks.push_back(skipped(prefix + "oracle", "group order or endomorphism space exceeds cap"));
    if (options.force_oracle) report.required_skipped = true;
  }
}

void verify_composite(const CompositeGroupSpec& spec, const VerifyOptions& options, VerifyReport& report) {
  for (const auto& [p, sig] : crt_decompose(spec))
    verify_primary(sig, options, "p=" + std::to_string(p) + ".", report);

  const CompositeCount cc = count_X_composite(spec);
  const CqiVerdict verdict = is_cyclic_quasi_injective(spec);
  if (!fits_cap(spec.order(), options.enumeration_cap)) {
    report.checks.push_back(skipped("composite_oracle", "group order exceeds enumeration cap"));
    if (options.force_oracle) report.required_skipped = true;
    return;
  }
  const BruteForceX brute = brute_force_X(spec, options.enumeration_cap);
  report.checks.push_back(compare("composite_count_vs_bruteforce", cc.total, big_from_u64(brute.members)));
  CheckResult c;
  c.name = "cqi_vs_bruteforce";
  c.expected = verdict.cqi;
  c.actual = brute.members == 0;
  c.status = verdict.cqi == (brute.members == 0) ? CheckStatus::Pass : CheckStatus::Fail;
  report.checks.push_back(std::move(c));
}

}  // namespace

Json big_to_json(const BigInt& v) {
  if (auto small = to_u64(v)) return *small;
  return to_decimal(v);
}

AnalyzeReport analyze(const GroupSpec& spec) {
  AnalyzeReport r;
  r.spec = spec_to_string(spec);
  if (const auto* sig = std::get_if<PrimePowerSignature>(&spec)) {
    r.components.push_back({sig->prime(), sig->to_string(), sig->is_homocyclic()});
    r.cqi = sig->is_homocyclic();
    return r;
  }
  const auto& composite = std::get<CompositeGroupSpec>(spec);
  const CqiVerdict v = is_cyclic_quasi_injective(composite);
  for (const auto& [p, sig] : crt_decompose(composite))
    r.components.push_back({p, sig.to_string(), sig.is_homocyclic()});
  r.cqi = v.cqi;
  return r;
}

CountReport count(const GroupSpec& spec, const CountFields& fields) {
  CountReport r;
  r.spec = spec_to_string(spec);
  if (const auto* sig = std::get_if<PrimePowerSignature>(&spec)) {
    r.p = sig->prime();
    r.method = "closed_form";
    if (fields.classes) {
      const ClassCountTerms s = count_classes_closed_form(*sig);
      r.classes = s.total();
      r.terms["S1"] = big_to_json(s.s1);
      r.terms["S2"] = big_to_json(s.s2);
      r.terms["S3"] = big_to_json(s.s3);
    }
    if (fields.subgroups) {
      const SubgroupCountTerms t = count_subgroups_closed_form(*sig);
      r.subgroups = t.total();
      r.terms["T1"] = big_to_json(t.t1);
      r.terms["T2"] = big_to_json(t.t2);
      r.terms["T3"] = big_to_json(t.t3);
    }
    if (fields.cqi) r.cqi = sig->is_homocyclic();
    return r;
  }

  const auto& composite = std::get<CompositeGroupSpec>(spec);
  const auto components = crt_decompose(composite);
  r.method = "inclusion_exclusion";
  if (components.size() == 1) r.p = components.begin()->first;
  if (fields.classes) {
    // X(G)/~ is only defined for p-groups.
    if (components.empty())
      r.classes = BigInt(0);
    else if (components.size() == 1)
      r.classes = count_classes_closed_form(components.begin()->second).total();
    else
      r.classes_undefined = true;
  }
  if (fields.subgroups) {
    const CompositeCount cc = count_X_composite(composite);
    r.subgroups = cc.total;
    Json subsets = Json::array();
    for (const SubsetTerm& t : cc.subsets)
      subsets.push_back({{"primes", t.primes}, {"sign", t.sign}, {"value", big_to_json(t.value)}});
    r.terms["subsets"] = std::move(subsets);
  }
  if (fields.cqi) r.cqi = is_cyclic_quasi_injective(composite).cqi;
  return r;
}

VerifyReport verify(const GroupSpec& spec, const VerifyOptions& options) {
  VerifyReport r;
  r.spec = spec_to_string(spec);
  if (const auto* sig = std::get_if<PrimePowerSignature>(&spec))
    verify_primary(*sig, options, "", r);
  else
    verify_composite(std::get<CompositeGroupSpec>(spec), options, r);
  for (const CheckResult& c : r.checks)
    if (c.status == CheckStatus::Fail) r.passed = false;
  return r;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "unknown";
}

Json to_json(const AnalyzeReport& r) {
  Json components = Json::array();
  for (const auto& c : r.components)
    components.push_back({{"p", c.p}, {"signature", c.signature}, {"homocyclic", c.homocyclic}});
  return {{"spec", r.spec}, {"components", components}, {"cqi", r.cqi}};
}

Json to_json(const CountReport& r) {
  Json j = {{"spec", r.spec}, {"method", r.method}, {"terms", r.terms}};
  if (r.p) j["p"] = *r.p;
  if (r.classes)
    j["classes"] = big_to_json(*r.classes);
  else if (r.classes_undefined)
    j["classes"] = "undefined";
  if (r.subgroups) j["subgroups"] = big_to_json(*r.subgroups);
  if (r.cqi) j["cqi"] = *r.cqi;
  return j;
}

Json to_json(const CheckResult& r) {
  Json j = {{"name", r.name}, {"status", to_string(r.status)}};
  if (!r.expected.is_null()) j["expected"] = r.expected;
  if (!r.actual.is_null()) j["actual"] = r.actual;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json to_json(const VerifyReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"spec", r.spec}, {"checks", checks}, {"passed", r.passed}};
}

Json to_json(const TripleIdentityReport& r) {
  return {{"n", r.n},
          {"brute", big_to_json(r.brute)},
          {"closed", big_to_json(r.closed)},
          {"classes", big_to_json(r.classes)},
          {"y_size", big_to_json(r.y_size)},
          {"equal", r.equal}};
}

std::string count_csv_header() { return "spec,p,classes,subgroups,cqi"; }

std::string to_csv_row(const CountReport& r) {
  std::ostringstream os;
  os << r.spec << ',';
  if (r.p) os << *r.p;
  os << ',';
  if (r.classes)
    os << to_decimal(*r.classes);
  else if (r.classes_undefined)
    os << "undefined";
  os << ',';
  if (r.subgroups) os << to_decimal(*r.subgroups);
  os << ',';
  if (r.cqi) os << (*r.cqi ? "true" : "false");
  return os.str();
}

}  // namespace cqi
