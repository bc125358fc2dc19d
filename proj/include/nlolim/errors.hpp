#pragma once

#include <stdexcept>
#include <string>

namespace nlolim {

// Error categories mapped to CLI exit codes (config 2, solver 3, io 4).
struct config_error : std::runtime_error {
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

struct solver_error : std::runtime_error {
  explicit solver_error(const std::string& what) : std::runtime_error(what) {}
};

struct io_error : std::runtime_error {
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nlolim
