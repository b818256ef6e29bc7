#include "iacbench/providers/generation.hpp"

#include <filesystem>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "iacbench/common/errors.hpp"
#include "iacbench/common/fs.hpp"

namespace iacbench::providers {

namespace {

// Extracts the "PROMPT-<digits>" marker used by fixture prompt sets.
std::string prompt_marker(const std::string& prompt) {
    const std::string key = "PROMPT-";
    std::size_t pos = prompt.find(key);
    if (pos == std::string::npos) return {};
    std::size_t end = pos + key.size();
    while (end < prompt.size() && std::isdigit(static_cast<unsigned char>(prompt[end]))) ++end;
    if (end == pos + key.size()) return {};
    return prompt.substr(pos, end - pos);
}

} // namespace

std::string ScriptedProvider::generate(const std::string& prompt, double) {
    std::string marker = prompt_marker(prompt);
    if (marker.empty()) {
        throw ProviderError("scripted provider: prompt carries no PROMPT-<id> marker");
    }
    std::filesystem::path path = std::filesystem::path(dir_) / (marker + ".txt");
    if (!std::filesystem::exists(path)) {
        throw ProviderError("scripted provider: no response file " + path.string());
    }
    return fs::read_file(path);
}

HttpGenerationProvider::HttpGenerationProvider(std::string base_url, std::string model)
    : base_url_(std::move(base_url)), model_(std::move(model)) {}

std::string HttpGenerationProvider::generate(const std::string& prompt, double temperature) {
    httplib::Client client(base_url_);
    client.set_read_timeout(300, 0);

    nlohmann::json request;
    request["prompt"] = prompt;
    request["temperature"] = temperature;
    request["model"] = model_;
    auto response = client.Post("/generate", request.dump(), "application/json");
    if (!response) throw ProviderError("generation provider unreachable: " + base_url_);
    if (response->status != 200) {
        throw ProviderError("generation provider returned HTTP " + std::to_string(response->status));
    }
    nlohmann::json body = nlohmann::json::parse(response->body, nullptr, false);
    if (body.is_discarded() || !body.contains("text") || !body["text"].is_string()) {
        throw ProviderError("generation provider returned malformed body");
    }
    return body["text"].get<std::string>();
}

std::shared_ptr<GenerationProvider> make_generation_provider(const std::string& config) {
    if (config == "echo") return std::make_shared<EchoProvider>();
    if (config.rfind("fixed:", 0) == 0) return std::make_shared<FixedProvider>(config.substr(6));
    if (config.rfind("scripted:", 0) == 0) {
        return std::make_shared<ScriptedProvider>(config.substr(9));
    }
    if (config.rfind("http:", 0) == 0) {
        std::string rest = config.substr(5);
        auto at = rest.rfind('@');
        if (at == std::string::npos) {
            throw ConfigError("http generation provider needs \"http:<url>@<model>\"");
        }
        return std::make_shared<HttpGenerationProvider>(rest.substr(0, at), rest.substr(at + 1));
    }
    throw ConfigError("unknown generation provider config: " + config);
}

} // namespace iacbench::providers
