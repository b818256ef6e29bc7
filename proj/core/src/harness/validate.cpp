#include "iacbench/harness/validate.hpp"

#include <nlohmann/json.hpp>

#include "iacbench/common/errors.hpp"
#include "iacbench/common/fs.hpp"
#include "iacbench/common/subprocess.hpp"

namespace iacbench::harness {

namespace {

std::vector<std::string> with_env(const ExternalTools& tools, std::vector<std::string> argv) {
    if (tools.plugin_cache_dir.empty()) return argv;
    std::vector<std::string> wrapped = {"env",
                                        "TF_PLUGIN_CACHE_DIR=" + tools.plugin_cache_dir.string()};
    wrapped.insert(wrapped.end(), argv.begin(), argv.end());
    return wrapped;
}

StageResult run_tool(const ExternalTools& tools, const std::filesystem::path& dir,
                     std::vector<std::string> argv, const std::string& label) {
    auto result = proc::run_command(with_env(tools, std::move(argv)), dir, tools.timeout);
    StageResult stage;
    stage.log = "$ " + label + "\n" + result.output;
    if (result.timed_out) {
        stage.log += "\n[timeout after " + std::to_string(tools.timeout.count()) + " ms]\n";
        stage.pass = false;
        return stage;
    }
    stage.pass = result.exit_code == 0;
    return stage;
}

void require_binary(const std::string& binary) {
    if (!proc::command_exists(binary)) {
        throw EnvironmentError("required binary not found: " + binary);
    }
}

} // namespace

StageResult technical_validate_external(const std::filesystem::path& script_dir,
                                        const ExternalTools& tools) {
    require_binary(tools.terraform_bin);
    if (!tools.endpoint_override_file.empty()) {
        fs::write_file(script_dir / "_endpoint_override.tf",
                       fs::read_file(tools.endpoint_override_file));
    }
    if (!tools.plugin_cache_dir.empty()) {
        std::filesystem::create_directories(tools.plugin_cache_dir);
    }

    StageResult init = run_tool(tools, script_dir,
                                {tools.terraform_bin, "init", "-no-color", "-input=false"},
                                tools.terraform_bin + " init");
    if (!init.pass) return init;

    StageResult plan = run_tool(
        tools, script_dir,
        {tools.terraform_bin, "plan", "-no-color", "-input=false", "-out=tfplan.bin"},
        tools.terraform_bin + " plan");
    plan.log = init.log + "\n" + plan.log;
    return plan;
}

StageResult technical_validate_stub(const std::filesystem::path& script_dir) {
    StageResult result;
    std::filesystem::path script = script_dir / "main.tf";
    if (!std::filesystem::exists(script)) {
        result.log = "stub-tv: main.tf missing";
        return result;
    }
    std::string content = fs::read_file(script);
    result.pass = !content.empty();
    result.log = result.pass ? "stub-tv: main.tf non-empty, pass"
                             : "stub-tv: main.tf empty, fail";
    return result;
}

StageResult intent_validate_external(const std::filesystem::path& script_dir,
                                     const std::filesystem::path& policy_path,
                                     const ExternalTools& tools) {
    if (!std::filesystem::exists(script_dir / "tfplan.bin")) {
        throw Error("intent_validate: no plan representation; technical validation must pass first");
    }
    require_binary(tools.policy_eval_bin);
    if (policy_path.empty() || !std::filesystem::exists(policy_path)) {
        StageResult result;
        result.pass = false;
        result.log = "intent-validation error: policy file missing: " + policy_path.string();
        return result;
    }

    StageResult show = run_tool(tools, script_dir,
                                {tools.terraform_bin, "show", "-json", "tfplan.bin"},
                                tools.terraform_bin + " show -json");
    if (!show.pass) return show;
    // run_tool prefixes the command line; strip it to recover the plan JSON
    std::string plan_json = show.log.substr(show.log.find('\n') + 1);
    fs::write_file(script_dir / "plan.json", plan_json);

    StageResult eval = run_tool(tools, script_dir,
                                {tools.policy_eval_bin, "eval", "--format", "json", "--data",
                                 policy_path.string(), "--input",
                                 (script_dir / "plan.json").string(), tools.policy_decision},
                                tools.policy_eval_bin + " eval");
    if (!eval.pass) {
        eval.log += "\nintent-validation error: policy evaluation failed";
        return eval;
    }
    std::string eval_output = eval.log.substr(eval.log.find('\n') + 1);
    nlohmann::json output = nlohmann::json::parse(eval_output, nullptr, false);
    bool allowed = false;
    if (!output.is_discarded()) {
        try {
            allowed = output.at("result").at(0).at("expressions").at(0).at("value").get<bool>();
        } catch (...) {
            allowed = false;
        }
    }
    eval.pass = allowed;
    if (!allowed) eval.log += "\npolicy decision: deny";
    return eval;
}

StageResult intent_validate_stub(const std::filesystem::path& script_dir, const std::string& marker) {
    StageResult result;
    std::filesystem::path script = script_dir / "main.tf";
    if (!std::filesystem::exists(script)) {
        result.log = "stub-iv: main.tf missing";
        return result;
    }
    std::string content = fs::read_file(script);
    result.pass = !marker.empty() && content.find(marker) != std::string::npos;
    result.log = result.pass ? "stub-iv: marker \"" + marker + "\" found, pass"
                             : "stub-iv: marker \"" + marker + "\" absent, fail";
    return result;
}

} // namespace iacbench::harness
