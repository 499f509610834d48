#include "unc/cli/prover.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

#include "unc/criteria/basic.hpp"
#include "unc/criteria/closure.hpp"
#include "unc/criteria/weight_decreasing.hpp"
#include "unc/ctrs/ctrs.hpp"
#include "unc/trs/rewrite.hpp"

namespace unc {

namespace {

const std::set<std::string, std::less<>> kMethods = {"sno", "omega", "pcl", "scl", "wd",
                                                     "rr",  "cp",    "sc",  "dc"};

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

std::string indent(const std::string& text, const std::string& prefix) {
  std::string out;
  for (const std::string& line : lines_of(text)) out += prefix + line + "\n";
  return out;
}

Verdict from_report(const CriterionReport& report) {
  if (report.holds) return UncProof{"", lines_of(to_string(report)), {}};
  return Undecided{report.criterion + " fails" +
                   (report.failure.empty() ? "" : ": " + report.failure)};
}

Verdict run_method(const MethodSpec& method, const Trs& trs, const StrategyConfig& config,
                   const Budget& budget) {
  const std::string& m = method.name;
  if (m == "sno") {
    if (strongly_non_overlapping(trs))
      return UncProof{"", {"the conditional linearization has no critical pairs"}, {}};
    return Undecided{"strongly overlapping"};
  }
  if (m == "omega") {
    if (non_omega_overlapping(trs)) return UncProof{"", {"no left-hand sides overlap over rational terms"}, {}};
    return Undecided{"omega-overlapping"};
  }
  if (m == "rr") {
    std::vector<std::string> details;
    for (std::size_t i = 0; i < trs.size(); ++i) {
      auto step = first_redex(trs, trs[i].rhs);
      if (!step) return Undecided{"right-hand side of rule " + std::to_string(i + 1) + " is normal"};
      details.push_back("rhs of rule " + std::to_string(i + 1) + " reducible by rule " +
                        std::to_string(step->rule + 1) + " at " + to_string(step->position));
    }
    return UncProof{"", std::move(details), {}};
  }
  if (m == "cp") {
    if (auto cex = disprove_search(trs, budget.conversion_depth, budget.size_cap, budget))
      return NotUncProof{"", std::move(*cex), {}};
    return Undecided{"no counterexample within bounds"};
  }
  if (m == "pcl") return from_report(parallel_closed_check(conditional_linearize(trs), budget));
  if (m == "scl") {
    if (!trs.right_linear()) return Undecided{"not right-linear"};
    return from_report(strongly_closed_check(conditional_linearize(trs), budget));
  }
  if (m == "wd") return from_report(weight_decreasing_unc(trs, budget));
  if (m == "sc" || m == "dc") {
    ConfluencePredicate predicate =
        m == "sc" ? strongly_closed_predicate() : development_closed_predicate();
    std::size_t rounds = method.rounds ? method.rounds : config.rounds;
    CompletionResult result = unc_complete(trs, predicate, rounds, budget);
    if (auto* proof = std::get_if<UncProof>(&result.verdict))
      proof->details.insert(proof->details.begin(),
                            "UNC after round " + std::to_string(result.rounds));
    return result.verdict;
  }
  throw std::invalid_argument("unknown method '" + m + "'");
}

/// Rule indices in traces and added-rule conversions translated from the
/// method's system to the full system.
struct Translation {
  const Component& component;
  const Reversal* reversal;

  Trace operator()(const Trace& trace) const {
    Trace t = reversal ? restore_trace(*reversal, trace) : trace;
    return lift_trace(component, t);
  }
};

std::string added_section(const std::vector<AddedRule>& added, const Translation& translate) {
  if (added.empty()) return "";
  std::string out = "added rules:\n";
  for (const AddedRule& a : added) {
    out += "  " + to_string(a.rule) + "   [round " + std::to_string(a.round) + "]\n";
    out += indent(to_string(translate(a.conversion)), "    ");
  }
  return out;
}

struct ComponentOutcome {
  Verdict verdict;
  std::string certificate;
};

ComponentOutcome prove_component(const Trs& full, const Component& component,
                                 const StrategyConfig& config, const Budget& budget) {
  std::vector<std::string> tried;
  for (const MethodSpec& method : config.methods) {
    const std::string tag = to_string(method);
    Reversal reversal;
    const Trs* target = &component.system;
    Verdict verdict = Undecided{"timeout"};
    try {
      if (budget.expired()) throw TimeoutError();
      if (method.reversed) {
        reversal = reverse_rules(component.system);
        target = &reversal.system;
      }
      verdict = run_method(method, *target, config, budget);
    } catch (const TimeoutError&) {
      verdict = Undecided{"timeout"};
    } catch (const std::length_error& e) {
      verdict = Undecided{e.what()};
    }
    const Translation translate{component, method.reversed ? &reversal : nullptr};
    std::string reversed_section;
    if (method.reversed) reversed_section = "reversed system:\n" + indent(to_string(reversal.system), "  ");

    if (auto* proof = std::get_if<UncProof>(&verdict)) {
      proof->method = tag;
      std::string cert = "method: " + tag + "\n" + reversed_section +
                         added_section(proof->added, translate);
      if (!proof->details.empty()) {
        cert += "details:\n";
        for (const std::string& d : proof->details) cert += "  " + d + "\n";
      }
      return {std::move(verdict), cert};
    }
    if (auto* refutation = std::get_if<NotUncProof>(&verdict)) {
      refutation->method = tag;
      Counterexample& cex = refutation->witness;
      cex.conversion = translate(cex.conversion);
      if (!validate_counterexample(full, cex)) {
        tried.push_back(tag + ": counterexample failed validation");
        continue;
      }
      std::string cert = "method: " + tag + "\n" + reversed_section +
                         added_section(refutation->added, translate) + "witness:\n  " +
                         to_string(cex.left) + "\n  " + to_string(cex.right) + "\n" +
                         "found by: " + cex.route + "\n" + "conversion:\n" +
                         indent(to_string(cex.conversion), "  ");
      return {std::move(verdict), cert};
    }
    const std::string reason = std::get<Undecided>(verdict).reason;
    tried.push_back(tag + ": " + reason);
    if (reason == "timeout") break;
  }
  std::string cert = "tried:\n";
  for (const std::string& t : tried) cert += "  " + t + "\n";
  const bool timed_out = !tried.empty() && tried.back().ends_with(": timeout");
  return {Undecided{timed_out ? "timeout" : "no method succeeded"}, cert};
}

}  // namespace

MethodSpec parse_method(std::string_view tag) {
  MethodSpec spec;
  std::string_view rest = tag;
  if (rest.starts_with("rev+")) {
    spec.reversed = true;
    rest.remove_prefix(4);
  }
  if (auto slash = rest.find('/'); slash != std::string_view::npos) {
    std::string_view digits = rest.substr(slash + 1);
    rest = rest.substr(0, slash);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
      throw std::invalid_argument("bad round count in '" + std::string(tag) + "'");
    spec.rounds = std::stoul(std::string(digits));
    if (spec.rounds == 0) throw std::invalid_argument("round count must be positive");
    if (rest != "sc" && rest != "dc")
      throw std::invalid_argument("round counts apply to sc and dc only: '" + std::string(tag) + "'");
  }
  if (!kMethods.count(rest)) throw std::invalid_argument("unknown method '" + std::string(tag) + "'");
  spec.name = std::string(rest);
  return spec;
}

std::string to_string(const MethodSpec& method) {
  std::string out = (method.reversed ? "rev+" : "") + method.name;
  if (method.rounds) out += "/" + std::to_string(method.rounds);
  return out;
}

std::vector<MethodSpec> StrategyConfig::default_methods() {
  std::vector<MethodSpec> out;
  for (const char* tag : {"sno", "omega", "rr", "cp", "pcl", "scl", "wd", "rev+sc/3", "rev+dc/3"})
    out.push_back(parse_method(tag));
  return out;
}

std::string answer(const Verdict& verdict) {
  if (std::holds_alternative<UncProof>(verdict)) return "YES";
  if (std::holds_alternative<NotUncProof>(verdict)) return "NO";
  return "MAYBE";
}

ProofOutcome prove_unc(const Trs& trs, const StrategyConfig& config) {
  Budget budget = config.budget;
  auto span = std::chrono::duration_cast<std::chrono::steady_clock::duration>(
      std::chrono::duration<double>(config.timeout_seconds));
  budget.deadline = std::min(budget.deadline, std::chrono::steady_clock::now() + span);

  const std::vector<Component> components = direct_sum_decompose(trs);
  if (components.empty()) return {UncProof{"none", {"no rules"}, {}}, "method: none\n"};

  std::string certificate;
  std::vector<std::string> methods;
  std::vector<std::string> pending;
  for (std::size_t c = 0; c < components.size(); ++c) {
    const Component& component = components[c];
    ComponentOutcome outcome = prove_component(trs, component, config, budget);
    std::string header;
    if (components.size() > 1) {
      header = "component " + std::to_string(c + 1) + " of " + std::to_string(components.size()) +
               " (rules";
      for (std::size_t r : component.rules) header += " " + std::to_string(r + 1);
      header += "):\n";
    }
    std::string section = header + (header.empty() ? outcome.certificate : indent(outcome.certificate, "  "));
    if (std::holds_alternative<NotUncProof>(outcome.verdict))
      return {std::move(outcome.verdict), section};
    certificate += section;
    if (auto* proof = std::get_if<UncProof>(&outcome.verdict)) methods.push_back(proof->method);
    else pending.push_back(std::get<Undecided>(outcome.verdict).reason);
  }
  if (!pending.empty()) {
    bool timeout = std::find(pending.begin(), pending.end(), "timeout") != pending.end();
    return {Undecided{timeout ? "timeout" : "no method succeeded"}, certificate};
  }
  std::string joined;
  for (const std::string& m : methods) joined += (joined.empty() ? "" : ", ") + m;
  return {UncProof{joined, {}, {}}, certificate};
}

ProofOutcome prove_unc(const ProblemFile& problem, const StrategyConfig& config) {
  return prove_unc(problem.trs(), config);
}

}  // namespace unc
