#pragma once

#include <functional>
#include <memory>
#include <string>

namespace iacbench::providers {

// Text-generation provider. Experiments run at temperature 0.0 throughout.
class GenerationProvider {
public:
    virtual ~GenerationProvider() = default;

    virtual std::string model_id() const = 0;
    virtual std::string generate(const std::string& prompt, double temperature) = 0;
};

// Echoes the prompt back; the plumbing stub.
class EchoProvider final : public GenerationProvider {
public:
    std::string model_id() const override { return "stub-echo"; }
    std::string generate(const std::string& prompt, double) override { return prompt; }
};

// Returns one fixed reply for every prompt.
class FixedProvider final : public GenerationProvider {
public:
    explicit FixedProvider(std::string reply) : reply_(std::move(reply)) {}
    std::string model_id() const override { return "stub-fixed"; }
    std::string generate(const std::string&, double) override { return reply_; }

private:
    std::string reply_;
};

// Delegates to a callback; used by tests for fault injection.
class CallbackProvider final : public GenerationProvider {
public:
    using Fn = std::function<std::string(const std::string&, double)>;
    explicit CallbackProvider(Fn fn, std::string id = "stub-callback")
        : fn_(std::move(fn)), id_(std::move(id)) {}
    std::string model_id() const override { return id_; }
    std::string generate(const std::string& prompt, double temperature) override {
        return fn_(prompt, temperature);
    }

private:
    Fn fn_;
    std::string id_;
};

// Scripted provider for offline fixture runs: replies are files in a
// directory, selected by a "PROMPT-<id>" marker found in the prompt text.
// Missing marker or missing file raises ProviderError.
class ScriptedProvider final : public GenerationProvider {
public:
    explicit ScriptedProvider(std::string response_dir) : dir_(std::move(response_dir)) {}
    std::string model_id() const override { return "stub-scripted"; }
    std::string generate(const std::string& prompt, double temperature) override;

private:
    std::string dir_;
};

// HTTP provider: POST {base_url}/generate with
// {"prompt": ..., "temperature": ..., "model": ...} expecting {"text": ...}.
class HttpGenerationProvider final : public GenerationProvider {
public:
    HttpGenerationProvider(std::string base_url, std::string model);
    std::string model_id() const override { return model_; }
    std::string generate(const std::string& prompt, double temperature) override;

private:
    std::string base_url_;
    std::string model_;
};

// Config strings: "echo", "fixed:<reply>", "scripted:<dir>",
// "http:<url>@<model>".
std::shared_ptr<GenerationProvider> make_generation_provider(const std::string& config);

} // namespace iacbench::providers
