#pragma once

#include <stdexcept>
#include <string>

namespace stancelab {

// Malformed input data (bad line, bad field, duplicate id, ...).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid configuration: bad flag values, broken lexicon files, missing inputs.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// A pipeline stage was asked to run before its upstream stage.
class MissingArtifactError : public std::runtime_error {
public:
    MissingArtifactError(std::string stage, const std::string& artifact)
        : std::runtime_error("missing artifact '" + artifact +
                             "' - run the '" + stage + "' stage first"),
          stage_(std::move(stage)) {}

    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

// Anything else that violates a documented precondition.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace stancelab
