#pragma once

#include <stdexcept>
#include <string>

namespace iacbench {

// Base class for all domain errors raised by the toolkit.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text (JSON, Markdown, logs). Message names the offending path.
class ParseError : public Error {
public:
    using Error::Error;
};

// Structurally valid input that violates a schema invariant (duplicate names,
// missing resource name, bad cardinality).
class SchemaError : public Error {
public:
    using Error::Error;
};

// A documentation page that cannot be ingested (no resource heading, empty file).
class IngestError : public Error {
public:
    using Error::Error;
};

// Lookup of a resource/node/prompt that does not exist.
class NotFoundError : public Error {
public:
    using Error::Error;
};

// Invalid or incomplete configuration (missing store, bad mode, unknown strategy).
class ConfigError : public Error {
public:
    using Error::Error;
};

// Embedding/summarization/generation provider failed or broke its contract.
class ProviderError : public Error {
public:
    using Error::Error;
};

// Vector index construction failure (carries the failed batch in the message).
class IndexError : public Error {
public:
    using Error::Error;
};

// Two outcome sets that cannot be paired (mismatched prompt ids).
class PairingError : public Error {
public:
    using Error::Error;
};

// Filesystem/subprocess failure.
class IoError : public Error {
public:
    using Error::Error;
};

// Required external binary missing or not runnable.
class EnvironmentError : public Error {
public:
    using Error::Error;
};

} // namespace iacbench
