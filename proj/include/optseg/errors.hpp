#pragma once

#include <stdexcept>
#include <string>

namespace optseg {

/// An index or segment refers to positions outside its sequence or graph.
struct RangeError : std::out_of_range {
  explicit RangeError(const std::string& what) : std::out_of_range(what) {}
};

/// A caller violated an operation's contract (invalid segmentation, missing
/// provenance, non-dominating solution set, ...).
struct ContractError : std::logic_error {
  explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

/// No segmentation exists under the requested bounds.
struct InfeasibleError : std::runtime_error {
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

/// A parameter lies outside an operation's supported range.
struct DomainError : std::domain_error {
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A root bracket shows no sign change.
struct BracketError : std::runtime_error {
  explicit BracketError(const std::string& what) : std::runtime_error(what) {}
};

/// An instance file does not parse or violates its invariants.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace optseg
