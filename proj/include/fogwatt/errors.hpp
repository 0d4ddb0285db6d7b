#ifndef FOGWATT_ERRORS_HPP
#define FOGWATT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fogwatt {

/// Malformed config document (not parseable at all).
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A well-formed input violates a model invariant (bad profile values,
/// disabled layer, invalid assignment, ...).
class ValidationError : public std::runtime_error {
  public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Offered load exceeds a device's capacity. Carries the offending device
/// so callers can report or skip the infeasible placement.
class OverloadError : public std::runtime_error {
  public:
    OverloadError(std::string device, double offered, double capacity,
                  const std::string& msg)
        : std::runtime_error(msg),
          device_(std::move(device)),
          offered_(offered),
          capacity_(capacity) {}

    const std::string& device() const { return device_; }
    double offered() const { return offered_; }
    double capacity() const { return capacity_; }

  private:
    std::string device_;
    double offered_;
    double capacity_;
};

/// Filesystem / stream failure.
class IoError : public std::runtime_error {
  public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace fogwatt

#endif
