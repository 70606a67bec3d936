#pragma once

#include <stdexcept>
#include <string>

namespace kgetool {

// Malformed input files, unparseable rows, bad annotations.
class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid configuration or precondition violations at API boundaries.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Remote endpoint failures that survived the retry budget.
class TransportError : public std::runtime_error {
  public:
    explicit TransportError(const std::string& what) : std::runtime_error(what) {}
};

// Replay store was asked for a request it has never seen.
class ReplayMissError : public std::runtime_error {
  public:
    explicit ReplayMissError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kgetool
