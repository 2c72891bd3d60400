#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <vector>

namespace qgkit {

struct Violation {
  std::vector<std::uint64_t> witness;
  std::string detail;
};

// Outcome of one axiom (or identity) over every configuration it was evaluated on.
struct CheckResult {
  std::string tag;
  std::uint64_t evaluated = 0;
  std::vector<Violation> violations;

  void pass() { ++evaluated; }
  void fail(std::vector<std::uint64_t> witness, std::string detail = {}) {
    ++evaluated;
    violations.push_back({std::move(witness), std::move(detail)});
  }
  // Records a single evaluation.
  void expect(bool ok, std::vector<std::uint64_t> witness, std::string detail = {}) {
    if (ok) {
      pass();
    } else {
      fail(std::move(witness), std::move(detail));
    }
  }
  bool passed() const { return violations.empty(); }
};

// Ordered collection of checks. Checks keep the order in which they were
// first declared so that rendered reports are stable.
class StructureReport {
 public:
  StructureReport() = default;
  explicit StructureReport(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  // Finds or appends the check with this tag. References stay valid for
  // the lifetime of the report.
  CheckResult& check(const std::string& tag);
  const CheckResult* find(const std::string& tag) const;

  const std::deque<CheckResult>& checks() const { return checks_; }

  bool passed() const;
  std::uint64_t violation_count() const;
  bool failed(const std::string& tag) const;

  // Folds the checks of another report into this one, tag by tag.
  void merge(const StructureReport& other);

 private:
  std::string name_;
  std::deque<CheckResult> checks_;
};

}  // namespace qgkit
