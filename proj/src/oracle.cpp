#include "kronmul/oracle.hpp"

#include <algorithm>
#include <string>

#include "kronmul/error.hpp"

namespace kronmul {

CoeffVec schoolbook_z(const CoeffVec& f, const CoeffVec& g) {
  const auto fc = f.to_vector();
  const auto gc = g.to_vector();
  std::vector<BigNat> h(fc.size() + gc.size() - 1);
  for (std::size_t i = 0; i < fc.size(); ++i) {
    if (fc[i].is_zero()) continue;
    for (std::size_t j = 0; j < gc.size(); ++j) h[i + j] = add(h[i + j], mul_classical(fc[i], gc[j]));
  }
  std::size_t width = 1;
  for (const auto& c : h) width = std::max(width, c.bit_length());
  return CoeffVec(h, width);
}

ModPoly schoolbook_mod(const ModPoly& f, const ModPoly& g) {
  if (f.modulus() != g.modulus()) throw PreconditionError("modulus mismatch");
  const unsigned __int128 n = f.modulus();
  std::vector<std::uint64_t> h(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      const unsigned __int128 prod = static_cast<unsigned __int128>(f.coeffs()[i]) * g.coeffs()[j] % n;
      h[i + j] = static_cast<std::uint64_t>((h[i + j] + prod) % n);
    }
  }
  return ModPoly(std::move(h), f.modulus());
}

}  // namespace kronmul
