#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "calab/error.hpp"
#include "calab/experiments.hpp"
#include "calab/groups.hpp"
#include "calab/rule_io.hpp"
#include "calab/transport.hpp"
#include "format.hpp"

namespace calab::cli {

using nlohmann::json;

namespace {

struct Common {
  std::string rule;
  std::string out;
  std::string format = "json";
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> budget;
};

void add_output(CLI::App* cmd, Common& common) {
  cmd->add_option("--out", common.out, "Write the report to this file instead of standard output");
  cmd->add_option("--format", common.format, "Report format")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
}

void add_rule(CLI::App* cmd, Common& common) {
  cmd->add_option("--rule", common.rule, "Rule file, or one of identity, shift, rule150w, zero, eca:N")->required();
}

std::string render(const json& doc, const std::string& format) {
  if (format == "csv") return to_csv(doc);
  if (format == "table") return to_table(doc);
  return doc.dump(2) + "\n";
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::budget_exceeded:
    case Errc::inverse_bound_exceeded:
    case Errc::dimension_bound:
      return kRefused;
    case Errc::parse_error:
    case Errc::schema_error:
    case Errc::invalid_argument:
      return kUsage;
    default:
      return kFail;
  }
}

int verdict_code(const std::string& verdict) { return verdict == "fail" ? kFail : kPass; }

std::vector<std::int64_t> resolve_moduli(const std::vector<std::int64_t>& moduli, std::optional<std::int64_t> max_n) {
  if (max_n) return example7_moduli(*max_n);
  return moduli;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cellular automata over groups: deciders, transports and reproductions", "calab"};
  app.require_subcommand(1);
  Common common;

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Decide injectivity, surjectivity, pre-injectivity, post-surjectivity");
  add_rule(analyze, common);
  add_output(analyze, common);
  analyze->add_option("--seed", common.seed, "Seed for the sampled correction check")->capture_default_str();
  analyze->add_option("--budget", common.budget, "Configuration budget for rules over a finite group");
  std::int64_t max_radius = kDefaultInverseRadius;
  analyze->add_option("--max-radius", max_radius, "Largest inverse radius searched")->capture_default_str();

  // quotient-scan
  auto* scan = app.add_subcommand("quotient-scan", "Flags of the automata induced on Z/mZ");
  add_rule(scan, common);
  add_output(scan, common);
  scan->add_option("--budget", common.budget, "Exhaustive-enumeration budget per modulus");
  std::vector<std::int64_t> moduli;
  std::optional<std::int64_t> scan_max_n;
  auto* moduli_opt = scan->add_option("--moduli", moduli, "Comma-separated increasing moduli")->delimiter(',');
  auto* max_n_opt = scan->add_option("--max-n", scan_max_n, "Scan the moduli 3n+1 for n = 1..N");
  moduli_opt->excludes(max_n_opt);
  max_n_opt->excludes(moduli_opt);
  std::string lemma = "none";
  scan->add_option("--lemma", lemma, "Also check a limit lemma along the scan")
      ->check(CLI::IsMember({"none", "preinjective-limit", "openness"}))
      ->capture_default_str();

  // reproduce-example7
  auto* example = app.add_subcommand("reproduce-example7", "The circulant example end to end");
  add_output(example, common);
  std::int64_t example_max_n = 32;
  example->add_option("--max-n", example_max_n, "Largest n checked")->capture_default_str()->check(CLI::PositiveNumber);

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification sweep");
  add_output(verify, common);
  std::string suite;
  auto names = suite_names();
  names.emplace_back("all");
  verify->add_option("--suite", suite, "Suite to run")->required()->check(CLI::IsMember(names));
  verify->add_option("--seed", common.seed, "Seed for sampled instances")->capture_default_str();
  verify->add_option("--budget", common.budget, "Exhaustive-enumeration budget for quotient scans");

  // transport
  auto* transport = app.add_subcommand("transport", "Move a rule to another universe");
  transport->require_subcommand(1);
  auto* quotient = transport->add_subcommand("quotient", "Rule induced on Z/mZ");
  add_rule(quotient, common);
  add_output(quotient, common);
  std::int64_t modulus = 0;
  quotient->add_option("--modulus", modulus, "Modulus m")->required()->check(CLI::PositiveNumber);
  auto* block = transport->add_subcommand("block", "Rule conjugate under block packing");
  add_rule(block, common);
  add_output(block, common);
  std::int64_t block_size = 0;
  block->add_option("--block", block_size, "Block length m")->required()->check(CLI::PositiveNumber);
  auto* inverse = transport->add_subcommand("inverse", "Smallest-radius inverse rule");
  add_rule(inverse, common);
  add_output(inverse, common);
  inverse->add_option("--max-radius", max_radius, "Largest inverse radius searched")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    json doc;
    int code = kPass;

    if (*analyze) {
      const RuleFile file = resolve_rule(common.rule);
      if (file.cyclic_group) {
        const auto report =
            analyze_finite(file.rule, make_cyclic(*file.cyclic_group), common.budget.value_or(kDefaultFiniteBudget));
        doc = to_json(report);
        doc["rule"] = rule_to_json(file.rule, file.cyclic_group);
      } else {
        OneDimOptions options;
        options.max_radius = max_radius;
        options.seed = common.seed;
        doc = to_json(analyze_onedim(file.rule, options));
      }
    } else if (*scan) {
      if (moduli.empty() && !scan_max_n) {
        err << "usage error: quotient-scan needs --moduli or --max-n\n";
        return kUsage;
      }
      const RuleFile file = resolve_rule(common.rule);
      const auto list = resolve_moduli(moduli, scan_max_n);
      const std::uint64_t budget = common.budget.value_or(kDefaultScanBudget);
      if (lemma == "preinjective-limit") {
        const auto report = verify_preinjective_limit(file.rule, list, budget);
        doc = report.to_json();
        code = verdict_code(report.verdict);
      } else if (lemma == "openness") {
        const auto report = verify_postsurjective_openness(file.rule, list, budget);
        doc = report.to_json();
        code = verdict_code(report.verdict);
      } else {
        const ScanReport report = quotient_scan(file.rule, list, budget);
        ExperimentReport wrapped;
        wrapped.experiment = "quotient_scan";
        wrapped.params = {{"rule", rule_to_json(file.rule)}, {"moduli", list}, {"budget", budget},
                          {"source", to_json(report.source)}};
        for (const auto& entry : report.entries) wrapped.entries.push_back(to_json(entry));
        wrapped.verdict = "info";
        doc = wrapped.to_json();
      }
    } else if (*example) {
      const auto report = reproduce_example7(example_max_n);
      doc = report.to_json();
      code = verdict_code(report.verdict);
    } else if (*verify) {
      SweepOptions options;
      options.seed = common.seed;
      options.budget = common.budget.value_or(kDefaultScanBudget);
      const auto reports = run_suite(suite, options);
      if (reports.size() == 1) {
        doc = reports.front().to_json();
        code = verdict_code(reports.front().verdict);
      } else {
        ExperimentReport combined;
        combined.experiment = "verify";
        combined.params = {{"suite", suite}, {"seed", options.seed}, {"budget", options.budget}};
        for (const auto& r : reports) {
          combined.entries.push_back(r.to_json());
          if (r.verdict == "fail") combined.verdict = "fail";
        }
        doc = combined.to_json();
        code = verdict_code(combined.verdict);
      }
    } else if (*quotient) {
      const RuleFile file = resolve_rule(common.rule);
      doc = rule_to_json(induce_quotient_ca(file.rule, CyclicQuotientMapZ(modulus)), modulus);
    } else if (*block) {
      const RuleFile file = resolve_rule(common.rule);
      doc = rule_to_json(block_recode_ca(file.rule, block_size).rule);
    } else if (*inverse) {
      const RuleFile file = resolve_rule(common.rule);
      doc = rule_to_json(find_inverse_rule(file.rule, max_radius));
    }

    const std::string text = render(doc, common.format);
    if (common.out.empty()) {
      out << text;
    } else {
      std::ofstream file(common.out);
      if (!file || !(file << text)) {
        err << "error: cannot write " << common.out << "\n";
        return kUsage;
      }
    }
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFail;
  }
}

}  // namespace calab::cli
