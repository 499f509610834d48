#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "unc/term/substitution.hpp"
#include "unc/term/term.hpp"
#include "unc/trs/trs.hpp"

namespace unc {

/// One ↔ step. A forward step contracts an instance of rule `rule` at
/// `position`; a backward step expands one.
struct TraceStep {
  Position position;
  std::size_t rule = 0;
  bool forward = true;
  Term result;
};

/// A conversion start ↔ … ↔ end recorded step by step.
class Trace {
 public:
  explicit Trace(Term start) : start_(std::move(start)) {}

  const Term& start() const { return start_; }
  const Term& end() const { return steps_.empty() ? start_ : steps_.back().result; }
  const std::vector<TraceStep>& steps() const { return steps_; }
  std::size_t length() const { return steps_.size(); }
  bool forward_only() const;

  void push(TraceStep step) { steps_.push_back(std::move(step)); }
  /// Appends `rest`, whose start must equal end().
  void append(const Trace& rest);

  Trace reversed() const;
  Trace instantiated(const Substitution& sigma) const;
  /// Places every term of the trace at position `at` inside `context`.
  Trace embedded(const Term& context, const Position& at) const;

 private:
  Term start_;
  std::vector<TraceStep> steps_;
};

/// Whether every step of `trace` is a valid R-step.
bool replay(const Trs& trs, const Trace& trace);

/// Replaces steps using rules with index ≥ base.size() by the conversions in
/// `added` (one per added rule, each over `base`), yielding a trace over base.
Trace expand_trace(const Trace& trace, std::size_t base_size, const std::vector<Trace>& added);

std::string to_string(const Trace& trace);

}  // namespace unc
