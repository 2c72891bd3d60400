#include "qgkit/report.hpp"

#include <algorithm>

#include "qgkit/error.hpp"

namespace qgkit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ProductDomainMismatch: return "ProductDomainMismatch";
    case ErrorCode::InvalidStructure: return "InvalidStructure";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::InvalidAction: return "InvalidAction";
    case ErrorCode::NotSurjective: return "NotSurjective";
    case ErrorCode::EmptyBase: return "EmptyBase";
    case ErrorCode::CompositionMismatch: return "CompositionMismatch";
    case ErrorCode::BaseMismatch: return "BaseMismatch";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::ActionInvalid: return "ActionInvalid";
    case ErrorCode::InvalidMatchedPair: return "InvalidMatchedPair";
    case ErrorCode::ObjectMapNotIdentity: return "ObjectMapNotIdentity";
    case ErrorCode::NotExact: return "NotExact";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::NotWhq: return "NotWhq";
    case ErrorCode::InvalidMorphism: return "InvalidMorphism";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::RangeError: return "RangeError";
  }
  return "Unknown";
}

CheckResult& StructureReport::check(const std::string& tag) {
  auto it = std::find_if(checks_.begin(), checks_.end(),
                         [&](const CheckResult& c) { return c.tag == tag; });
  if (it != checks_.end()) return *it;
  checks_.push_back(CheckResult{tag, 0, {}});
  return checks_.back();
}

const CheckResult* StructureReport::find(const std::string& tag) const {
  auto it = std::find_if(checks_.begin(), checks_.end(),
                         [&](const CheckResult& c) { return c.tag == tag; });
  return it == checks_.end() ? nullptr : &*it;
}

bool StructureReport::passed() const {
  return std::all_of(checks_.begin(), checks_.end(),
                     [](const CheckResult& c) { return c.passed(); });
}

std::uint64_t StructureReport::violation_count() const {
  std::uint64_t n = 0;
  for (const auto& c : checks_) n += c.violations.size();
  return n;
}

bool StructureReport::failed(const std::string& tag) const {
  const CheckResult* c = find(tag);
  return c != nullptr && !c->passed();
}

void StructureReport::merge(const StructureReport& other) {
  for (const auto& c : other.checks()) {
    CheckResult& mine = check(c.tag);
    mine.evaluated += c.evaluated;
    mine.violations.insert(mine.violations.end(), c.violations.begin(), c.violations.end());
  }
}

}  // namespace qgkit
