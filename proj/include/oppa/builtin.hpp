#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oppa/model.hpp"

namespace oppa {

/// The shipped reference catalog: objectives derived from the agile
/// manifesto's four values, principles from its twelve principles, the
/// practice canon of the mainstream agile methods, and indicators in all
/// five categories. Always passes validate_framework.
ReferenceFramework builtin_reference();

/// A shipped method definition plus a note on the public description it
/// was curated from.
struct CorpusEntry {
    MethodDefinition method;
    std::string provenance;
};

/// Shipped corpus: xp, scrum and fdd mapped onto builtin_reference() ids.
/// Each entry validates against the built-in catalog with zero errors.
std::vector<CorpusEntry> corpus();

/// Looks up a corpus entry by method id.
std::optional<CorpusEntry> find_corpus_entry(const std::string& id);

}  // namespace oppa
