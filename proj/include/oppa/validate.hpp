#pragma once

#include "oppa/model.hpp"

namespace oppa {

/// Structural check of the four-layer graph. Never throws: every problem
/// becomes a coded issue (`duplicate-id`, `dangling-link`, `duplicate-link`,
/// `orphan-objective`, `orphan-principle`, `orphan-practice`,
/// `orphan-indicator`, `bad-id`, `empty-name`). Issues come back in
/// canonical order (code, then subject).
ValidationReport validate_framework(const ReferenceFramework& framework);

/// Checks a method against a framework that already passed
/// validate_framework (throws Error `framework-invalid` otherwise).
/// Errors: `empty-objectives`, `unknown-objective`, `unknown-principle`,
/// `unknown-practice`, `bad-id`. Warnings: `unsupported-principle` for an
/// adopted principle none of whose linked objectives is adopted,
/// `unsupported-practice` analogously.
ValidationReport validate_method(const ReferenceFramework& framework,
                                 const MethodDefinition& method);

/// Checks an observation set against a valid framework (throws
/// `framework-invalid` otherwise). Errors: `unknown-indicator`,
/// `duplicate-observation`. With a method supplied, warns
/// `unlinked-observation` for observed indicators reachable from no
/// adopted practice.
ValidationReport validate_observations(const ReferenceFramework& framework,
                                       const ObservationSet& observations,
                                       const MethodDefinition* method = nullptr);

}  // namespace oppa
