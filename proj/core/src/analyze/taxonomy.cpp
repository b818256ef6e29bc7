#include "iacbench/analyze/taxonomy.hpp"

#include <map>

#include "iacbench/common/csv.hpp"
#include "iacbench/common/errors.hpp"
#include "iacbench/common/fs.hpp"

namespace iacbench::analyze {

namespace {

Dim1Category category_from_string(const std::string& s) {
    if (s == "Syntax") return Dim1Category::Syntax;
    if (s == "Schema") return Dim1Category::Schema;
    if (s == "Runtime") return Dim1Category::Runtime;
    if (s == "Intent") return Dim1Category::Intent;
    throw ParseError("taxonomy: unknown category " + s);
}

Dim2Pattern dim2_from_string(const std::string& s) {
    if (s == "Factual Incorrectness") return Dim2Pattern::FactualIncorrectness;
    if (s == "Structural Deficit") return Dim2Pattern::StructuralDeficit;
    if (s == "Contextual Reasoning Failure") return Dim2Pattern::ContextualReasoningFailure;
    if (s == "Incompleteness") return Dim2Pattern::Incompleteness;
    throw ParseError("taxonomy: unknown dim2 pattern " + s);
}

std::vector<TaxonomyLabel> builtin_table() {
    using C = Dim1Category;
    using P = Dim2Pattern;
    return {
        {"syntax_language", C::Syntax, "Terraform language error", "Breaks basic syntax rules or structure", P::StructuralDeficit},
        {"syntax_format", C::Syntax, "Format error", "Uses invalid names or formatting", P::StructuralDeficit},
        {"arg_unsupported", C::Schema, "Argument error", "Uses an argument that is not allowed", P::FactualIncorrectness},
        {"arg_missing", C::Schema, "Argument error", "Leaves out a required argument", P::Incompleteness},
        {"arg_bad_value", C::Schema, "Argument error", "Assigns a wrong or unsupported value", P::FactualIncorrectness},
        {"arg_reserved", C::Schema, "Argument error", "Uses a reserved word as an argument name", P::FactualIncorrectness},
        {"arg_conflict", C::Schema, "Argument error", "Combines arguments that conflict", P::ContextualReasoningFailure},
        {"arg_duplicate", C::Schema, "Argument error", "Repeats the same argument twice", P::ContextualReasoningFailure},
        {"attr_missing", C::Schema, "Attribute error", "Refers to an attribute that does not exist", P::FactualIncorrectness},
        {"attr_misuse", C::Schema, "Attribute error", "Uses an attribute in the wrong way", P::ContextualReasoningFailure},
        {"block_unsupported", C::Schema, "Block error", "Adds a block type that is not supported", P::FactualIncorrectness},
        {"block_missing", C::Schema, "Block error", "Misses blocks that are required", P::Incompleteness},
        {"block_toomany", C::Schema, "Block error", "Adds more blocks than allowed", P::ContextualReasoningFailure},
        {"res_unknown_type", C::Schema, "Resource error", "Uses a resource type that does not exist", P::FactualIncorrectness},
        {"res_invalid_ref", C::Schema, "Resource error", "Refers to a resource that is invalid or missing", P::FactualIncorrectness},
        {"res_duplicate", C::Schema, "Resource error", "Declares the same resource more than once", P::ContextualReasoningFailure},
        {"env_file", C::Runtime, "Environment error", "Refers to a file that cannot be found", P::ContextualReasoningFailure},
        {"prov_unconfigured", C::Runtime, "Provider error", "Refers to a provider that is not configured", P::Incompleteness},
        {"prov_duplicate", C::Runtime, "Provider error", "Configures the same provider multiple times", P::ContextualReasoningFailure},
        {"version_invalid", C::Runtime, "Version error", "Uses an invalid or unsupported version range", P::FactualIncorrectness},
        {"intent_missing_resource", C::Intent, "Misaligned resource", "Fails to include a necessary resource", P::Incompleteness},
        {"intent_wrong_resource", C::Intent, "Misaligned resource", "Uses a resource that does not match the intent", P::ContextualReasoningFailure},
        {"intent_deprecated_resource", C::Intent, "Misaligned resource", "Uses a resource that is outdated or deprecated", P::FactualIncorrectness},
        {"intent_misconfiguration", C::Intent, "Misconfiguration", "Uses correct resources but misconfigured them", P::ContextualReasoningFailure},
        {"unknown", C::Schema, "Unknown", "Unclassified error", P::ContextualReasoningFailure},
    };
}

std::vector<TaxonomyLabel>& mutable_table() {
    static std::vector<TaxonomyLabel> table = builtin_table();
    return table;
}

// Ordered message-pattern rules; the first rule whose substrings all occur in
// the stanza wins.
struct PatternRule {
    std::vector<std::string> needles;
    const char* code;
};

const std::vector<PatternRule>& pattern_rules() {
    static const std::vector<PatternRule> rules = {
        // file-lookup failures carry "Invalid value for ... parameter" text
        // and must win over the generic bad-value rule
        {{"no file exists"}, "env_file"},
        {{"File not found"}, "env_file"},
        {{"Unsupported argument"}, "arg_unsupported"},
        {{"argument named", "is not expected here"}, "arg_unsupported"},
        {{"Missing required argument"}, "arg_missing"},
        {{"Invalid value for"}, "arg_bad_value"},
        {{"Unsupported value"}, "arg_bad_value"},
        {{"reserved argument name"}, "arg_reserved"},
        {{"is a reserved"}, "arg_reserved"},
        {{"Conflicting configuration arguments"}, "arg_conflict"},
        {{"conflicts with"}, "arg_conflict"},
        {{"Duplicate argument"}, "arg_duplicate"},
        {{"Unsupported attribute"}, "attr_missing"},
        {{"does not have attribute"}, "attr_missing"},
        {{"Invalid attribute usage"}, "attr_misuse"},
        {{"attribute is used in the wrong way"}, "attr_misuse"},
        {{"Blocks of type", "are not expected here"}, "block_unsupported"},
        {{"Insufficient", "blocks"}, "block_missing"},
        {{"block is required"}, "block_missing"},
        {{"Too many", "blocks"}, "block_toomany"},
        {{"Invalid resource type"}, "res_unknown_type"},
        {{"does not support resource type"}, "res_unknown_type"},
        {{"Reference to undeclared resource"}, "res_invalid_ref"},
        {{"invalid or missing resource"}, "res_invalid_ref"},
        {{"Duplicate resource", "configuration"}, "res_duplicate"},
        {{"Provider configuration not present"}, "prov_unconfigured"},
        {{"provider", "has not been declared"}, "prov_unconfigured"},
        {{"Duplicate provider configuration"}, "prov_duplicate"},
        {{"Invalid version constraint"}, "version_invalid"},
        {{"Unsupported Terraform Core version"}, "version_invalid"},
        {{"Invalid expression"}, "syntax_language"},
        {{"Invalid block definition"}, "syntax_language"},
        {{"Unclosed configuration block"}, "syntax_language"},
        {{"Invalid character"}, "syntax_language"},
        {{"Invalid name"}, "syntax_format"},
        {{"Invalid identifier"}, "syntax_format"},
    };
    return rules;
}

} // namespace

const char* to_string(Dim1Category c) {
    switch (c) {
    case Dim1Category::Syntax:
        return "Syntax";
    case Dim1Category::Schema:
        return "Schema";
    case Dim1Category::Runtime:
        return "Runtime";
    case Dim1Category::Intent:
        return "Intent";
    }
    return "?";
}

const char* to_string(Dim2Pattern p) {
    switch (p) {
    case Dim2Pattern::FactualIncorrectness:
        return "Factual Incorrectness";
    case Dim2Pattern::StructuralDeficit:
        return "Structural Deficit";
    case Dim2Pattern::ContextualReasoningFailure:
        return "Contextual Reasoning Failure";
    case Dim2Pattern::Incompleteness:
        return "Incompleteness";
    }
    return "?";
}

const char* to_string(Attribution a) {
    return a == Attribution::Deprecated ? "deprecated" : "hallucinated";
}

const std::vector<TaxonomyLabel>& taxonomy_table() { return mutable_table(); }

void load_taxonomy_table(const std::filesystem::path& csv_path) {
    auto rows = csv::parse(fs::read_file(csv_path));
    if (rows.empty()) throw ParseError("taxonomy: empty table " + csv_path.string());
    std::vector<TaxonomyLabel> table;
    for (std::size_t i = 1; i < rows.size(); ++i) { // skip header
        const auto& row = rows[i];
        if (row.size() == 1 && row[0].empty()) continue;
        if (row.size() != 5) {
            throw ParseError("taxonomy: row " + std::to_string(i + 1) + " needs 5 columns");
        }
        table.push_back({row[0], category_from_string(row[1]), row[2], row[3], dim2_from_string(row[4])});
    }
    mutable_table() = std::move(table);
}

std::string taxonomy_table_csv() {
    std::string out = "code,category,subcategory,atomic_label,dim2\n";
    for (const auto& label : taxonomy_table()) {
        out += csv::join_row({label.code, to_string(label.category), label.subcategory,
                              label.atomic_label, to_string(label.dim2)});
    }
    return out;
}

const TaxonomyLabel& label_by_code(const std::string& code) {
    for (const auto& label : taxonomy_table()) {
        if (label.code == code) return label;
    }
    throw NotFoundError("taxonomy: unknown label code " + code);
}

ErrorRecord classify(const AtomicError& error) {
    ErrorRecord record;
    record.error = error;
    for (const auto& rule : pattern_rules()) {
        bool all = true;
        for (const auto& needle : rule.needles) {
            if (error.raw_message.find(needle) == std::string::npos) {
                all = false;
                break;
            }
        }
        if (all) {
            record.label = label_by_code(rule.code);
            return record;
        }
    }
    record.label = label_by_code("unknown");
    record.flagged_for_review = true;
    return record;
}

bool is_unsupported_element(const ErrorRecord& record) {
    return record.label.code == "arg_unsupported" || record.label.code == "block_unsupported" ||
           record.label.code == "res_unknown_type";
}

} // namespace iacbench::analyze
