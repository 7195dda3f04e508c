#pragma once

#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dvr {

/// Pass count for one checked property.
struct Tally {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  std::optional<std::string> counterexample;

  bool ok() const { return passed == total; }

  /// Counts one trial; `describe` is only invoked for the first failure.
  template <class Describe>
  bool record(bool holds, Describe&& describe) {
    ++total;
    if (holds) {
      ++passed;
    } else if (!counterexample) {
      counterexample = describe();
    }
    return holds;
  }
};

/// Outcome of a randomized axiom check.
///
/// Renders one line per axiom: "axiom=<name> pass=<k>/<n>", followed by
/// " counterexample=<a>,<b>" when the axiom failed.
struct CheckReport {
  std::deque<Tally> tallies;  // add() hands out references that must stay valid

  Tally& add(std::string name) {
    tallies.emplace_back().name = std::move(name);
    return tallies.back();
  }

  const Tally* find(const std::string& name) const {
    for (const auto& t : tallies)
      if (t.name == name) return &t;
    return nullptr;
  }

  bool ok() const {
    for (const auto& t : tallies)
      if (!t.ok()) return false;
    return true;
  }

  std::vector<std::string> lines() const {
    std::vector<std::string> out;
    for (const auto& t : tallies) {
      std::string line = "axiom=" + t.name + " pass=" + std::to_string(t.passed) + "/" + std::to_string(t.total);
      if (t.counterexample) line += " counterexample=" + *t.counterexample;
      out.push_back(std::move(line));
    }
    return out;
  }

  std::string render() const {
    std::string out;
    for (const auto& l : lines()) out += l + "\n";
    return out;
  }
};

enum class ClauseStatus { pass, fail_literal };

inline const char* to_string(ClauseStatus s) { return s == ClauseStatus::pass ? "PASS" : "FAIL-LITERAL"; }

struct ClauseResult {
  std::string id;
  ClauseStatus status = ClauseStatus::pass;
  std::optional<std::string> witness;
};

/// Per-clause verdicts: "clause=<id> status=PASS|FAIL-LITERAL [witness=<x>]".
struct StatusReport {
  std::vector<ClauseResult> clauses;

  const ClauseResult* find(const std::string& id) const {
    for (const auto& c : clauses)
      if (c.id == id) return &c;
    return nullptr;
  }

  bool all_pass() const {
    for (const auto& c : clauses)
      if (c.status != ClauseStatus::pass) return false;
    return true;
  }

  std::vector<std::string> lines() const {
    std::vector<std::string> out;
    for (const auto& c : clauses) {
      std::string line = "clause=" + c.id + " status=" + to_string(c.status);
      if (c.witness) line += " witness=" + *c.witness;
      out.push_back(std::move(line));
    }
    return out;
  }

  std::string render() const {
    std::string out;
    for (const auto& l : lines()) out += l + "\n";
    return out;
  }
};

}  // namespace dvr
