#pragma once

#include <stdexcept>
#include <string>

namespace aggsim {

/// Problem with a config file: unknown key, missing key, bad value,
/// or a violated parameter invariant.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key, int line, const std::string& what)
        : std::runtime_error(format(key, line, what)),
          key_(std::move(key)),
          line_(line) {}

    explicit ConfigError(const std::string& what)
        : std::runtime_error(what) {}

    const std::string& key() const { return key_; }
    int line() const { return line_; }  // 0 when not tied to a source line

private:
    static std::string format(const std::string& key, int line, const std::string& what) {
        std::string msg = "config error";
        if (!key.empty()) msg += " [" + key + "]";
        if (line > 0) msg += " (line " + std::to_string(line) + ")";
        msg += ": " + what;
        return msg;
    }

    std::string key_;
    int line_ = 0;
};

/// A numerical routine failed to reach its requested tolerance.
class NumericError : public std::runtime_error {
public:
    NumericError(const std::string& what, double achieved_tolerance)
        : std::runtime_error(what + " (achieved tolerance " +
                             std::to_string(achieved_tolerance) + ")"),
          achieved_(achieved_tolerance) {}

    double achieved_tolerance() const { return achieved_; }

private:
    double achieved_;
};

/// A request would need an unreasonable amount of memory or work.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Failure writing an output file.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace aggsim
