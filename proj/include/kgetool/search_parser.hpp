#pragma once

#include <string>
#include <variant>
#include <vector>

#include "kgetool/kg.hpp"

namespace kgetool {

/// Every well-formed KG.search expression found in a model response, in order
/// of occurrence. Never empty; an empty parse is a FormatError outcome.
struct ParsedSearches {
    std::vector<RelationPath> searches;
    std::string raw_text;
};

/// Produced exactly when zero well-formed KG.search expressions were found.
struct FormatError {
    std::string raw_text;
    std::string reason;
};

using ParseOutcome = std::variant<ParsedSearches, FormatError>;

inline bool is_format_error(const ParseOutcome& o) {
    return std::holds_alternative<FormatError>(o);
}

/// Scans free text for expressions of the grammar
///   KG.search( Start = <token> , Path = [ <token> (, <token>)* ] )
/// Tokens are bare words or single/double-quoted strings; whitespace between
/// grammar elements is ignored; the Start/Path keywords match
/// case-insensitively. Surrounding prose is skipped; a truncated expression is
/// skipped rather than fatal.
ParseOutcome parse_kg_search(const std::string& text);

/// Canonical DSL rendering: KG.search(Start=<t>, Path=[<t1>, <t2>]).
/// Tokens needing it are quoted; re-parsing yields an equal RelationPath.
std::string render_kg_search(const RelationPath& path);

}  // namespace kgetool
