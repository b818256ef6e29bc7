#include "iacbench/providers/embedding.hpp"

#include <cmath>
#include <cstdint>

#define CPPHTTPLIB_NO_EXCEPTIONS 0
#include <httplib.h>
#include <nlohmann/json.hpp>

#include "iacbench/common/errors.hpp"
#include "iacbench/common/text.hpp"

namespace iacbench::providers {

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace

HashedBowEmbedder::HashedBowEmbedder(std::size_t dimension) : dimension_(dimension) {
    if (dimension_ == 0) throw ProviderError("HashedBowEmbedder: dimension must be positive");
}

std::string HashedBowEmbedder::id() const {
    return "hashed-bow-" + std::to_string(dimension_);
}

std::vector<std::vector<double>> HashedBowEmbedder::embed(const std::vector<std::string>& texts) {
    std::vector<std::vector<double>> result;
    result.reserve(texts.size());
    for (const auto& text : texts) {
        std::vector<double> v(dimension_, 0.0);
        auto tokens = text::word_tokens(text);
        for (const auto& token : tokens) {
            v[fnv1a(token) % dimension_] += 1.0;
        }
        double norm_sq = 0.0;
        for (double x : v) norm_sq += x * x;
        if (norm_sq == 0.0) {
            v[0] = 1.0; // tokenless text maps to a fixed basis vector
        } else {
            double inv = 1.0 / std::sqrt(norm_sq);
            for (double& x : v) x *= inv;
        }
        result.push_back(std::move(v));
    }
    return result;
}

HttpEmbeddingProvider::HttpEmbeddingProvider(std::string base_url, std::size_t dimension)
    : base_url_(std::move(base_url)), dimension_(dimension) {
    if (dimension_ == 0) throw ProviderError("HttpEmbeddingProvider: dimension must be positive");
}

std::vector<std::vector<double>> HttpEmbeddingProvider::embed(const std::vector<std::string>& texts) {
    httplib::Client client(base_url_);
    client.set_read_timeout(60, 0);

    nlohmann::json request;
    request["texts"] = texts;
    auto response = client.Post("/embed", request.dump(), "application/json");
    if (!response) {
        throw ProviderError("embedding provider unreachable: " + base_url_);
    }
    if (response->status != 200) {
        throw ProviderError("embedding provider returned HTTP " + std::to_string(response->status));
    }
    nlohmann::json body = nlohmann::json::parse(response->body, nullptr, false);
    if (body.is_discarded() || !body.contains("vectors") || !body["vectors"].is_array()) {
        throw ProviderError("embedding provider returned malformed body");
    }
    if (body.contains("dimension") && body["dimension"].get<std::size_t>() != dimension_) {
        throw ProviderError("embedding provider dimension mismatch: declared " +
                            std::to_string(dimension_) + ", got " +
                            std::to_string(body["dimension"].get<std::size_t>()));
    }
    std::vector<std::vector<double>> vectors;
    vectors.reserve(body["vectors"].size());
    for (const auto& row : body["vectors"]) {
        std::vector<double> v = row.get<std::vector<double>>();
        if (v.size() != dimension_) {
            throw ProviderError("embedding provider returned vector of wrong dimension");
        }
        vectors.push_back(std::move(v));
    }
    return vectors;
}

std::shared_ptr<EmbeddingProvider> make_embedding_provider(const std::string& config) {
    if (config == "test") return std::make_shared<HashedBowEmbedder>();
    if (config.rfind("test:", 0) == 0) {
        return std::make_shared<HashedBowEmbedder>(std::stoul(config.substr(5)));
    }
    if (config.rfind("http:", 0) == 0) {
        std::string rest = config.substr(5);
        auto at = rest.rfind('@');
        if (at == std::string::npos) {
            throw ConfigError("http embedding provider needs \"http:<url>@<dim>\"");
        }
        return std::make_shared<HttpEmbeddingProvider>(rest.substr(0, at),
                                                       std::stoul(rest.substr(at + 1)));
    }
    throw ConfigError("unknown embedding provider config: " + config);
}

} // namespace iacbench::providers
