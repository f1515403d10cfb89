#pragma once

#include <string>
#include <vector>

#include "oppa/errors.hpp"
#include "oppa/model.hpp"

namespace oppa {

/// Parse output plus any non-fatal findings (unknown nested keys,
/// deduplicated list entries).
template <typename T>
struct Parsed {
    T value;
    std::vector<Issue> warnings;
};

/// Reads a catalog document. Throws ParseError (`syntax-error` with
/// line/column, or `schema-error`) and SemanticError wrapping the failing
/// ValidationReport when the structure parses but the framework is invalid.
Parsed<ReferenceFramework> parse_catalog(const std::string& document);

/// Schema layer only: no validate_framework gate. The `validate` CLI path
/// uses this so broken frameworks still produce an issue list.
Parsed<ReferenceFramework> parse_catalog_unchecked(const std::string& document);

/// Canonical emission: elements and links sorted, stable key order, one
/// byte encoding per framework. Throws Error `framework-invalid`.
std::string emit_catalog(const ReferenceFramework& framework);

Parsed<MethodDefinition> parse_method(const std::string& document);
std::string emit_method(const MethodDefinition& method);

Parsed<ObservationSet> parse_observations(const std::string& document);
std::string emit_observations(const ObservationSet& observations);

}  // namespace oppa
