#pragma once

// Brute-force reference products. Nothing here shares code with the packing
// paths, so a bug in one cannot hide in the other.

#include "kronmul/bipoly.hpp"
#include "kronmul/modpoly.hpp"
#include "kronmul/pack.hpp"
#include "kronmul/rings.hpp"

namespace kronmul {

/// h_k = sum_{i+j=k} f_i g_j with BigNat arithmetic.
CoeffVec schoolbook_z(const CoeffVec& f, const CoeffVec& g);

/// Word-modular convolution. Throws PreconditionError on modulus mismatch.
ModPoly schoolbook_mod(const ModPoly& f, const ModPoly& g);

/// Double convolution over (x, y). Factor shapes may differ.
template <CoefficientRing R>
BiPoly<typename R::value_type> schoolbook_bivar(const BiPoly<typename R::value_type>& f,
                                                const BiPoly<typename R::value_type>& g, const R& ring) {
  BiPoly<typename R::value_type> h(f.lx() + g.lx() - 1, f.ly() + g.ly() - 1, ring.zero());
  for (std::size_t fj = 0; fj < f.ly(); ++fj) {
    for (std::size_t fi = 0; fi < f.lx(); ++fi) {
      for (std::size_t gj = 0; gj < g.ly(); ++gj) {
        for (std::size_t gi = 0; gi < g.lx(); ++gi) {
          auto& dst = h.at(fi + gi, fj + gj);
          dst = ring.add(dst, ring.mul(f.at(fi, fj), g.at(gi, gj)));
        }
      }
    }
  }
  return h;
}

}  // namespace kronmul
