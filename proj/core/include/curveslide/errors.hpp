#pragma once

#include <stdexcept>
#include <string>

namespace curveslide {

enum class Errc {
  // triangulation construction
  duplicate_slot,
  self_gluing,
  folded_triangle,
  multiple_punctures,
  bad_count,
  invalid_slot,
  // colorings
  length_mismatch,
  not_admissible,
  // curve systems
  not_normal,
  // slides
  band_not_maximal,
  peripheral_present,
  // reduction oracles
  cap_too_small,
  not_torus_fixture,
  // io
  parse_error,
  // broken internal invariant; indicates a bug, not bad input
  internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace curveslide
