#include "group_instance.hpp"

#include <set>

namespace mhd {

MhaPresentation kg_functions(const Group& G, const Field& F) {
  MhaPresentation P;
  P.name = "K(" + G.str() + ")";
  P.field = F;
  P.arity = 1;
  P.unital = false;
  P.mul = [G, F](const Label& a, const Label& b) {
    LinComb r(F);
    if (a[0] == b[0]) r.add(a, Scalar::one(F));
    return r;
  };
  P.counit = [G, F](const Label& a) {
    return a[0] == G.id() ? Scalar::one(F) : Scalar::zero(F);
  };
  P.antipode = [G, F](const Label& a) { return LinComb::basis(F, {G.inv(a[0])}); };
  P.antipode_inv = P.antipode;
  P.slice = [G, F](Can v, const Label& x, const Label& c) {
    // Δ(δ_p) = Σ_{uv=p} δ_u ⊗ δ_v; the cover pins one leg
    std::int64_t p = x[0], q = c[0];
    LinComb r(F);
    switch (v) {
      case Can::C1:
      case Can::C4:
        r.add({G.op(p, G.inv(q)), q}, Scalar::one(F));
        break;
      case Can::C2:
      case Can::C3:
        r.add({q, G.op(G.inv(q), p)}, Scalar::one(F));
        break;
    }
    return r;
  };
  if (G.finite()) {
    P.full_delta = [G, F](const Label& x) {
      LinComb r(F);
      for (std::int64_t u : G.elements(0))
        r.add({u, G.op(G.inv(u), x[0])}, Scalar::one(F));
      return r;
    };
  }
  P.local_unit = [F](const std::vector<Label>& ls) {
    LinComb r(F);
    std::set<std::int64_t> seen;
    for (const auto& l : ls)
      if (seen.insert(l[0]).second) r.add(l, Scalar::one(F));
    return r;
  };
  P.window_labels = [G](std::int64_t w) {
    std::vector<Label> out;
    for (std::int64_t g : G.elements(w)) out.push_back({g});
    return out;
  };
  P.diag_right = P.window_labels;
  P.diag_left = P.window_labels;
  P.label_str = [G](const Label& l) { return "d[" + G.name(l[0]) + "]"; };
  return P;
}

MhaPresentation kg_algebra(const Group& G, const Field& F) {
  MhaPresentation P;
  P.name = "K[" + G.str() + "]";
  P.field = F;
  P.arity = 1;
  P.unital = true;
  P.unit = {G.id()};
  P.mul = [G, F](const Label& a, const Label& b) {
    return LinComb::basis(F, {G.op(a[0], b[0])});
  };
  P.counit = [F](const Label&) { return Scalar::one(F); };
  P.antipode = [G, F](const Label& a) { return LinComb::basis(F, {G.inv(a[0])}); };
  P.antipode_inv = P.antipode;
  P.full_delta = [F](const Label& x) {
    LinComb r(F);
    r.add({x[0], x[0]}, Scalar::one(F));
    return r;
  };
  P.slice = make_slice_from_delta(F, 1, P.mul, P.full_delta);
  P.local_unit = [F, P](const std::vector<Label>&) { return LinComb::basis(F, P.unit); };
  P.window_labels = [G](std::int64_t w) {
    std::vector<Label> out;
    for (std::int64_t g : G.elements(w)) out.push_back({g});
    return out;
  };
  P.label_str = [G](const Label& l) { return "[" + G.name(l[0]) + "]"; };
  return P;
}

PairedSystem group_pairing(const Group& G, const Field& F) {
  PairedSystem S;
  S.A = kg_functions(G, F);
  S.B = kg_algebra(G, F);
  S.pair = [F](const Label& a, const Label& b) {
    return a[0] == b[0] ? Scalar::one(F) : Scalar::zero(F);
  };
  // q ▸ δ_p = δ_{pq⁻¹}
  S.act_ba = [G, F](const Label& b, const Label& a) {
    return LinComb::basis(F, {G.op(a[0], G.inv(b[0]))});
  };
  // δ_p ▸ q = [p=q] q
  S.act_ab = [F](const Label& a, const Label& b) {
    LinComb r(F);
    if (a[0] == b[0]) r.add(b, Scalar::one(F));
    return r;
  };
  // δ_p ◂ q = δ_{q⁻¹p}
  S.ract_ab = [G, F](const Label& a, const Label& b) {
    return LinComb::basis(F, {G.op(G.inv(b[0]), a[0])});
  };
  // q ◂ δ_p = [p=q] q
  S.ract_ba = [F](const Label& b, const Label& a) {
    LinComb r(F);
    if (a[0] == b[0]) r.add(b, Scalar::one(F));
    return r;
  };
  return S;
}

}  // namespace mhd
