#pragma once

// Strict JSON (de)serialization of surface models.  The schema is exactly:
//
// {
//   "name": str,
//   "curves": [{"name": str}, ...],
//   "gram": [["p/q", ...], ...],
//   "boundary": {curve: "p/q", ...},
//   "polarization": {curve: "p/q", ...},
//   "points": [{"name": str, "host": str,
//               "sing": {"r": int, "a": int, "b": int},
//               "boundary_local": "p/q",
//               "negative_support": {curve: "p/q", ...}}, ...]
// }
//
// Rationals are "p/q" strings (plain integers also accepted on input);
// unknown fields are rejected with their path.

#include "deltacert/surface.hpp"

#include <string>

namespace deltacert {

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Parse and validate; throws IoError (schema) or ModelError (semantics).
LogDelPezzo surface_from_json(const std::string& json_text);

// Serialize with deterministic key order and canonical "p/q" rationals.
std::string surface_to_json(const LogDelPezzo& surface);

// File helpers.
LogDelPezzo load_surface(const std::string& path);
void save_surface(const LogDelPezzo& surface, const std::string& path);

} // namespace deltacert
