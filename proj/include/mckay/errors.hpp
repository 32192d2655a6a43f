#ifndef MCKAY_ERRORS_HPP
#define MCKAY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mckay {

// A (type, Frobenius) configuration rejected by the exclusion table.
// `reason` names the matching table row; the CLI maps this to exit code 2.
class ExcludedError : public std::runtime_error {
public:
    ExcludedError(std::string config, std::string row)
        : std::runtime_error("excluded: " + config + " [" + row + "]"),
          config_(std::move(config)), row_(std::move(row)) {}
    const std::string& config() const { return config_; }
    const std::string& row() const { return row_; }

private:
    std::string config_, row_;
};

// Valid input, but outside what this implementation supports (twisted Borel
// models, bad-prime B-level with nontrivial center, scale bounds, ...).
// The CLI maps this to exit code 3.
class UnsupportedError : public std::runtime_error {
public:
    explicit UnsupportedError(const std::string& what)
        : std::runtime_error(what) {}
};

} // namespace mckay

#endif
