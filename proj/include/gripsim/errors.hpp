#pragma once

#include <stdexcept>
#include <string>

namespace gripsim {

// Invalid argument to a physics/geometry operation (out of documented range).
class DomainError : public std::runtime_error {
  public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input (CSV/config); carries a 1-based line number when known.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, long line = -1)
        : std::runtime_error(line >= 0 ? what + " (line " + std::to_string(line) + ")" : what),
          line_(line) {}
    long line() const { return line_; }

  private:
    long line_;
};

// Structurally valid input that cannot form a usable calibration (e.g. a grid hole).
class IngestError : public std::runtime_error {
  public:
    explicit IngestError(const std::string& what) : std::runtime_error(what) {}
};

// A requested target is unreachable within the model (inverse has no solution).
class InfeasibleError : public std::runtime_error {
  public:
    explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

// Internal solver invariant violated; indicates a bug, not bad user input.
class EngineError : public std::runtime_error {
  public:
    explicit EngineError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gripsim
