#include "iacbench/analyze/intent.hpp"

#include <algorithm>

namespace iacbench::analyze {

namespace {

// first quoted token after `key`
std::string quoted_after(const std::string& s, const std::string& key) {
    std::size_t pos = s.find(key);
    if (pos == std::string::npos) return {};
    std::size_t open = s.find('"', pos + key.size());
    if (open == std::string::npos) return {};
    std::size_t close = s.find('"', open + 1);
    if (close == std::string::npos) return {};
    return s.substr(open + 1, close - open - 1);
}

} // namespace

std::vector<std::string> declared_resource_types(const std::string& script_hcl) {
    std::vector<std::string> types;
    std::size_t pos = 0;
    while ((pos = script_hcl.find("resource \"", pos)) != std::string::npos) {
        std::size_t open = pos + 10;
        std::size_t close = script_hcl.find('"', open);
        if (close == std::string::npos) break;
        std::string type = script_hcl.substr(open, close - open);
        if (std::find(types.begin(), types.end(), type) == types.end()) types.push_back(type);
        pos = close;
    }
    return types;
}

ErrorRecord classify_intent_failure(const std::string& script_id, const std::string& script_hcl,
                                    const std::string& policy_log, const ChangelogIndex* changelog,
                                    const text::YearMonth& cutoff) {
    ErrorRecord record;
    record.error.script_id = script_id;
    record.error.raw_message = policy_log;
    record.error.summary = "intent validation failed";

    auto declared = declared_resource_types(script_hcl);
    auto has_type = [&](const std::string& type) {
        return std::find(declared.begin(), declared.end(), type) != declared.end();
    };

    std::string missing = quoted_after(policy_log, "missing resource");
    if (!missing.empty() && !has_type(missing)) {
        record.label = label_by_code("intent_missing_resource");
        record.error.element = ErrorElement{ElementKind::Resource, missing, missing};
        return record;
    }

    std::string expected = quoted_after(policy_log, "expected resource");
    if (!expected.empty() && !has_type(expected) && !declared.empty()) {
        record.label = label_by_code("intent_wrong_resource");
        record.error.element = ErrorElement{ElementKind::Resource, expected, expected};
        return record;
    }

    if (changelog) {
        for (const auto& type : declared) {
            ErrorElement element{ElementKind::Resource, type, type};
            if (attribute_element(*changelog, element, cutoff) == Attribution::Deprecated) {
                record.label = label_by_code("intent_deprecated_resource");
                record.error.element = element;
                return record;
            }
        }
    }

    record.label = label_by_code("intent_misconfiguration");
    return record;
}

} // namespace iacbench::analyze
