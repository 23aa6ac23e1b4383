#pragma once

#include <stdexcept>
#include <string>

namespace echosim {

// Input left the mathematical domain of a map (superluminal regime,
// negative radicand, closed gate for a branch-cut argument, ...).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A parameter collapse makes the requested map undefined (alpha0 = 0 under
// the accelerating-frame map; callers must switch to the Lorentz limit).
class DegenerateError : public std::runtime_error {
 public:
  explicit DegenerateError(const std::string& what) : std::runtime_error(what) {}
};

// The outgoing wavefront never reaches the target worldline.
class NoInterceptError : public std::runtime_error {
 public:
  explicit NoInterceptError(const std::string& what) : std::runtime_error(what) {}
};

// Complex log/power branch left the principal sheet.
class BranchError : public std::runtime_error {
 public:
  explicit BranchError(const std::string& what) : std::runtime_error(what) {}
};

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace echosim
