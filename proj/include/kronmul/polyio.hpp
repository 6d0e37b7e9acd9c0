#pragma once

// Plain-text polynomial files:
//
//   <modulus>
//   <length L>
//   c_0 c_1 ... c_{L-1}
//
// All values decimal; coefficients are whitespace separated (any mix of
// spaces and newlines), constant term first.

#include <filesystem>
#include <iosfwd>

#include "kronmul/modpoly.hpp"

namespace kronmul {

/// Throws ParseError on malformed input, including unreduced coefficients.
ModPoly read_poly(std::istream& in);
ModPoly read_poly_file(const std::filesystem::path& path);

void write_poly(std::ostream& out, const ModPoly& p);
void write_poly_file(const std::filesystem::path& path, const ModPoly& p);

}  // namespace kronmul
