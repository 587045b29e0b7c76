#pragma once

#include <stdexcept>
#include <string>

namespace polycensus {

enum class Errc {
  bad_input,
  self_loop,
  mismatched_adjacency,
  disconnected,
  too_small,
  invalid_graph,
  not_separating,
  size_mismatch,
  not_simple,
  not_polyhedral,
  not_triangle,
  cap_exceeded,
  out_of_oracle_range,
  range_too_small,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

}  // namespace polycensus
