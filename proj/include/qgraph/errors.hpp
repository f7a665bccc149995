#pragma once

#include <stdexcept>
#include <string>

namespace qgraph {

/// Malformed or out-of-contract input.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// A size cap was exceeded (dense materialization, closure dimension, ...).
class ResourceLimit : public std::runtime_error {
 public:
  explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qgraph
