#pragma once

#include "group.hpp"
#include "mha.hpp"

namespace mhd {

// pointwise functions on G with the delta-function basis
MhaPresentation kg_functions(const Group& G, const Field& F);

// the group algebra of G
MhaPresentation kg_algebra(const Group& G, const Field& F);

// <δ_p, q> = [p=q] and the four induced actions
PairedSystem group_pairing(const Group& G, const Field& F);

}  // namespace mhd
