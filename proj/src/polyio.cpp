#include "kronmul/polyio.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "kronmul/error.hpp"

namespace kronmul {

namespace {

std::uint64_t parse_word(const std::string& token, const char* what) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw ParseError(std::string("invalid ") + what + " '" + token + "'");
  return value;
}

}  // namespace

ModPoly read_poly(std::istream& in) {
  std::string token;
  if (!(in >> token)) throw ParseError("missing modulus");
  const std::uint64_t modulus = parse_word(token, "modulus");
  if (modulus < 2) throw ParseError("modulus must be >= 2");
  if (!(in >> token)) throw ParseError("missing length");
  const std::uint64_t length = parse_word(token, "length");
  if (length == 0) throw ParseError("length must be >= 1");

  std::vector<std::uint64_t> coeffs;
  coeffs.reserve(length);
  for (std::uint64_t i = 0; i < length; ++i) {
    if (!(in >> token)) {
      throw ParseError("expected " + std::to_string(length) + " coefficients, found " + std::to_string(i));
    }
    const std::uint64_t c = parse_word(token, "coefficient");
    if (c >= modulus) throw ParseError("coefficient " + token + " is not reduced mod " + std::to_string(modulus));
    coeffs.push_back(c);
  }
  if (in >> token) throw ParseError("trailing data after " + std::to_string(length) + " coefficients: '" + token + "'");
  return ModPoly(std::move(coeffs), modulus);
}

ModPoly read_poly_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  try {
    return read_poly(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_poly(std::ostream& out, const ModPoly& p) {
  out << p.modulus() << '\n' << p.size() << '\n';
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i != 0) out << ' ';
    out << p.coeffs()[i];
  }
  out << '\n';
}

void write_poly_file(const std::filesystem::path& path, const ModPoly& p) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  write_poly(out, p);
  if (!out.flush()) throw Error("write failed: " + path.string());
}

}  // namespace kronmul
