#pragma once

#include <stdexcept>
#include <string>

namespace mzeta {

// Argument outside the supported domain (s <= 1, alpha <= 0, non-integrable
// factor lists, malformed configuration, ...).
class domain_error : public std::domain_error {
 public:
  explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// The requested tolerance could not be met within the configured limits.
class accuracy_error : public std::runtime_error {
 public:
  explicit accuracy_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mzeta
