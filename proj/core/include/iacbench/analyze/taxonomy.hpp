#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "iacbench/analyze/tvlog.hpp"

namespace iacbench::analyze {

enum class Dim1Category { Syntax, Schema, Runtime, Intent };
enum class Dim2Pattern { FactualIncorrectness, StructuralDeficit, ContextualReasoningFailure, Incompleteness };

const char* to_string(Dim1Category c);
const char* to_string(Dim2Pattern p);

struct TaxonomyLabel {
    std::string code; // stable machine id, e.g. "arg_unsupported"
    Dim1Category category = Dim1Category::Schema;
    std::string subcategory;
    std::string atomic_label;
    Dim2Pattern dim2 = Dim2Pattern::ContextualReasoningFailure;
};

// The atomic-label table with its fixed label-to-pattern mapping. Ships as a
// data table (data/dim2_map.csv) so taxonomy revisions are data changes; the
// built-in copy keeps the toolkit usable without the file. A loaded table
// replaces the built-in one process-wide.
const std::vector<TaxonomyLabel>& taxonomy_table();
void load_taxonomy_table(const std::filesystem::path& csv_path);
std::string taxonomy_table_csv();

const TaxonomyLabel& label_by_code(const std::string& code);

enum class Attribution { Deprecated, NeverDocumented };

// NeverDocumented renders as "hallucinated": an element absent from every
// changelog entry was fabricated rather than remembered stale.
const char* to_string(Attribution a);

struct ErrorRecord {
    AtomicError error;
    TaxonomyLabel label;
    std::optional<Attribution> attribution; // unsupported-element errors only
    bool flagged_for_review = false;
    std::string manual_override; // free-form human correction, blank by default
};

// Total classification: assigns the Dim-1 triple from message patterns and
// Dim-2 from the fixed mapping; unclassifiable messages get (Schema, Unknown)
// with ContextualReasoningFailure, flagged for review.
ErrorRecord classify(const AtomicError& error);

// True for the three unsupported-element labels that feed changelog
// attribution (arguments, blocks, resources).
bool is_unsupported_element(const ErrorRecord& record);

} // namespace iacbench::analyze
