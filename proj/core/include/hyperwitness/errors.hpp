#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hyperwitness {

// Base for all domain errors. `code()` is stable and machine-readable; the
// CLI maps it into structured JSON error output.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct RegisterConflict : Error {
    explicit RegisterConflict(const std::string& m) : Error("RegisterConflict", m) {}
};

struct InvalidSubsystem : Error {
    explicit InvalidSubsystem(const std::string& m) : Error("InvalidSubsystem", m) {}
};

struct InvalidDensityMatrix : Error {
    explicit InvalidDensityMatrix(const std::string& m) : Error("InvalidDensityMatrix", m) {}
};

struct InvalidProbability : Error {
    explicit InvalidProbability(const std::string& m) : Error("InvalidProbability", m) {}
};

struct InvalidIndex : Error {
    explicit InvalidIndex(const std::string& m) : Error("InvalidIndex", m) {}
};

struct InvalidParameter : Error {
    explicit InvalidParameter(const std::string& m) : Error("InvalidParameter", m) {}
};

struct NumericalInconsistency : Error {
    explicit NumericalInconsistency(const std::string& m) : Error("NumericalInconsistency", m) {}
};

struct UnsupportedBasis : Error {
    explicit UnsupportedBasis(const std::string& m) : Error("UnsupportedBasis", m) {}
};

struct NoThreshold : Error {
    explicit NoThreshold(const std::string& m) : Error("NoThreshold", m) {}
};

struct EmptyData : Error {
    explicit EmptyData(const std::string& m) : Error("EmptyData", m) {}
};

struct FitError : Error {
    explicit FitError(const std::string& m) : Error("FitError", m) {}
};

// Parse failures carry a human-readable location ("entries[3].ops").
class ParseError : public Error {
public:
    ParseError(std::string location, const std::string& message)
        : Error("ParseError", location + ": " + message), location_(std::move(location)) {}

    const std::string& location() const noexcept { return location_; }

private:
    std::string location_;
};

// Raised when a witness expansion needs table entries that are absent.
class MissingEntries : public Error {
public:
    explicit MissingEntries(std::vector<std::vector<int>> keys)
        : Error("MissingEntries", describe(keys)), keys_(std::move(keys)) {}

    const std::vector<std::vector<int>>& keys() const noexcept { return keys_; }

private:
    static std::string describe(const std::vector<std::vector<int>>& keys) {
        std::string s = "missing table entries:";
        for (const auto& k : keys) {
            s += " {";
            for (size_t i = 0; i < k.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(k[i]);
            }
            s += "}";
        }
        return s;
    }

    std::vector<std::vector<int>> keys_;
};

}  // namespace hyperwitness
