#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace swgen {

enum class Errc {
  invalid_size,
  index,
  loop_insert,
  duplicate_edge,
  not_connected,
  walk_length,
  pair,
  parameter,
  parity,
  overfull,
  degenerate_density,
  domain,
  insufficient_data,
  dimension,
  format,
  io,
};

inline std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_size: return "invalid-size";
    case Errc::index: return "index";
    case Errc::loop_insert: return "loop-insert";
    case Errc::duplicate_edge: return "duplicate-edge";
    case Errc::not_connected: return "not-connected";
    case Errc::walk_length: return "walk-length";
    case Errc::pair: return "pair";
    case Errc::parameter: return "parameter";
    case Errc::parity: return "parity";
    case Errc::overfull: return "overfull";
    case Errc::degenerate_density: return "degenerate-density";
    case Errc::domain: return "domain";
    case Errc::insufficient_data: return "insufficient-data";
    case Errc::dimension: return "dimension";
    case Errc::format: return "format";
    case Errc::io: return "io";
  }
  return "unknown";
}

/// Every failure raised by the library carries one of the codes above; the
/// message is a single line suitable for a CLI diagnostic.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + " error: " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace swgen
