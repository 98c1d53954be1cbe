#pragma once

#include <stdexcept>
#include <string>

namespace lz {

// Bad user-supplied parameters (negative sweep rate, empty grid, ...).
class validation_error : public std::invalid_argument {
 public:
  explicit validation_error(const std::string& what) : std::invalid_argument(what) {}
};

// A caller broke an internal contract (e.g. non-traceless generator).
class contract_error : public std::logic_error {
 public:
  explicit contract_error(const std::string& what) : std::logic_error(what) {}
};

// A grid cannot resolve the requested integrand.
class resolution_error : public std::runtime_error {
 public:
  explicit resolution_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lz
