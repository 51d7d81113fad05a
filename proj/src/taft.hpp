#pragma once

#include "mha.hpp"

namespace mhd {

// the q-deformed pair built from the Laurent algebra B = <c, c⁻¹, X>
// with cX = λXc, X^m = 0, Δ(c) = c⊗c, Δ(X) = c^i⊗X + X⊗1, and its
// dual A spanned by ω_{p,l} (p ∈ Z, 0 <= l < m);
// λ^i must be a primitive m-th root of unity
struct TaftParams {
  std::int64_t m = 2;
  std::int64_t i = 1;
  Field field{};
  Scalar lambda;

  TaftParams(std::int64_t m_, std::int64_t i_, const Field& F, const Scalar& l);
  // picks the first λ in the canonical field enumeration with λ^i of order m
  static TaftParams resolve(std::int64_t m, std::int64_t i, const Field& F);
};

// B: basis label (k, l) for c^k X^l, unital, full comultiplication
MhaPresentation taft_b(const TaftParams& T);

// A: basis label (p, l) for ω_{p,l}, nonunital, covered slices only
MhaPresentation taft_a(const TaftParams& T);

// <ω_{p,l}, c^k X^j> = [p=k][l=j] and the induced actions
PairedSystem taft_pairing(const TaftParams& T);

}  // namespace mhd
