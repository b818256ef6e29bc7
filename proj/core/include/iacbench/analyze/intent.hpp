#pragma once

#include <string>
#include <vector>

#include "iacbench/analyze/changelog.hpp"
#include "iacbench/analyze/taxonomy.hpp"

namespace iacbench::analyze {

// Resource types declared in a Terraform script (`resource "<type>" ...`).
std::vector<std::string> declared_resource_types(const std::string& script_hcl);

// Rule-assisted intent-failure coding. The rules fire in order:
//   1. the policy log names a missing resource type absent from the script
//   2. the policy log names an expected type while the script declares others
//   3. a declared resource has a deprecation entry at or before the cutoff
//   4. otherwise: misconfiguration
// The record's manual_override field stays blank for human correction.
ErrorRecord classify_intent_failure(const std::string& script_id, const std::string& script_hcl,
                                    const std::string& policy_log, const ChangelogIndex* changelog,
                                    const text::YearMonth& cutoff);

} // namespace iacbench::analyze
