#pragma once

#include <memory>
#include <string>
#include <vector>

namespace iacbench::providers {

// Contract: deterministic for identical input within one index lifetime,
// output length equals input length, every vector has the declared dimension.
class EmbeddingProvider {
public:
    virtual ~EmbeddingProvider() = default;

    virtual std::size_t dimension() const = 0;
    virtual std::string id() const = 0;
    virtual std::vector<std::vector<double>> embed(const std::vector<std::string>& texts) = 0;
};

// Deterministic test embedder: hashed bag-of-words over lowercased word
// tokens, unit-normalized. Texts without tokens map to a fixed basis vector.
class HashedBowEmbedder final : public EmbeddingProvider {
public:
    explicit HashedBowEmbedder(std::size_t dimension = 768);

    std::size_t dimension() const override { return dimension_; }
    std::string id() const override;
    std::vector<std::vector<double>> embed(const std::vector<std::string>& texts) override;

private:
    std::size_t dimension_;
};

// HTTP provider: POST {base_url}/embed with {"texts": [...]}, expecting
// {"dimension": d, "vectors": [[...], ...]}. The declared dimension is fixed
// at construction and validated against every response.
class HttpEmbeddingProvider final : public EmbeddingProvider {
public:
    HttpEmbeddingProvider(std::string base_url, std::size_t dimension);

    std::size_t dimension() const override { return dimension_; }
    std::string id() const override { return "http:" + base_url_; }
    std::vector<std::vector<double>> embed(const std::vector<std::string>& texts) override;

private:
    std::string base_url_;
    std::size_t dimension_;
};

// Selects a provider from a config string: "test" or "test:<dim>" for the
// built-in deterministic embedder, "http:<url>@<dim>" for the HTTP provider.
std::shared_ptr<EmbeddingProvider> make_embedding_provider(const std::string& config);

} // namespace iacbench::providers
