#include "mha.hpp"

namespace mhd {

std::function<LinComb(Can, const Label&, const Label&)> make_slice_from_delta(
    const Field& F, std::size_t arity,
    std::function<LinComb(const Label&, const Label&)> mul,
    std::function<LinComb(const Label&)> full_delta) {
  return [F, arity, mul, full_delta](Can v, const Label& x, const Label& c) {
    LinComb r(F);
    for (const auto& [l, co] : full_delta(x)) {
      auto [u, w] = split(l, arity);
      switch (v) {
        case Can::C1:
          r += tensor(LinComb::basis(F, u), mul(w, c)).scaled(co);
          break;
        case Can::C2:
          r += tensor(mul(c, u), LinComb::basis(F, w)).scaled(co);
          break;
        case Can::C3:
          r += tensor(mul(u, c), LinComb::basis(F, w)).scaled(co);
          break;
        case Can::C4:
          r += tensor(LinComb::basis(F, u), mul(c, w)).scaled(co);
          break;
      }
    }
    return r;
  };
}

Scalar MhaPresentation::counit_l(const LinComb& x) const {
  Scalar s = Scalar::zero(field);
  for (const auto& [l, c] : x.terms()) s += counit(l) * c;
  return s;
}

LinComb MhaPresentation::delta_n(const LinComb& x, std::size_t legs) const {
  if (legs == 1) return x;
  LinComb t = delta_l(x);
  for (std::size_t k = 3; k <= legs; ++k) {
    LinComb next(field);
    for (const auto& [l, c] : t.terms()) {
      auto [h, rest] = split(l, arity);
      next += tensor(delta_l(basis(h)), LinComb::basis(field, rest)).scaled(c);
    }
    t = next;
  }
  return t;
}

LinComb slice_at(const MhaPresentation& P, Can v, const LinComb& t, std::size_t legs,
                 std::size_t k, const LinComb& cover) {
  LinComb r(P.field);
  for (const auto& [l, c] : t.terms()) {
    Label pre(l.begin(), l.begin() + k * P.arity);
    Label leg(l.begin() + k * P.arity, l.begin() + (k + 1) * P.arity);
    Label post(l.begin() + (k + 1) * P.arity, l.end());
    LinComb inner = P.slice_l(v, P.basis(leg), cover);
    for (const auto& [il, ic] : inner.terms()) r.add(cat(pre, cat(il, post)), c * ic);
  }
  (void)legs;
  return r;
}

LinComb delta_mul_left(const MhaPresentation& P, const LinComb& x, const LinComb& t) {
  LinComb r(P.field);
  for (const auto& [l, c] : t.terms()) {
    auto [u, v] = split(l, P.arity);
    LinComb s = P.slice_l(Can::C3, x, P.basis(u));  // Σ x1·u ⊗ x2
    for (const auto& [sl, sc] : s.terms()) {
      auto [p, q] = split(sl, P.arity);
      r += tensor(LinComb::basis(P.field, p), P.mul(q, v)).scaled(c * sc);
    }
  }
  return r;
}

LinComb delta_mul_right(const MhaPresentation& P, const LinComb& t, const LinComb& x) {
  LinComb r(P.field);
  for (const auto& [l, c] : t.terms()) {
    auto [u, v] = split(l, P.arity);
    LinComb s = P.slice_l(Can::C4, x, P.basis(v));  // Σ x1 ⊗ v·x2
    for (const auto& [sl, sc] : s.terms()) {
      auto [p, q] = split(sl, P.arity);
      r += tensor(P.mul(u, p), LinComb::basis(P.field, q)).scaled(c * sc);
    }
  }
  return r;
}

namespace {

LinComb map_leg(const MhaPresentation& P, const LinComb& t, int which,
                const std::function<LinComb(const LinComb&)>& f) {
  LinComb r(P.field);
  for (const auto& [l, c] : t.terms()) {
    auto [a, b] = split(l, P.arity);
    if (which == 1)
      r += tensor(f(P.basis(a)), LinComb::basis(P.field, b)).scaled(c);
    else
      r += tensor(LinComb::basis(P.field, a), f(P.basis(b))).scaled(c);
  }
  return r;
}

}  // namespace

LinComb peel_r_csi(const MhaPresentation& P, const LinComb& x, const LinComb& c) {
  LinComb t = P.slice_l(Can::C1, x, P.antipode_l(c));
  return map_leg(P, t, 2, [&](const LinComb& y) { return P.antipode_inv_l(y); });
}

LinComb peel_r_sc(const MhaPresentation& P, const LinComb& x, const LinComb& c) {
  LinComb t = P.slice_l(Can::C4, x, P.antipode_inv_l(c));
  return map_leg(P, t, 2, [&](const LinComb& y) { return P.antipode_l(y); });
}

LinComb peel_l_wsi(const MhaPresentation& P, const LinComb& x, const LinComb& w) {
  LinComb t = P.slice_l(Can::C3, x, P.antipode_l(w));
  return map_leg(P, t, 1, [&](const LinComb& y) { return P.antipode_inv_l(y); });
}

LinComb peel_r_ws(const MhaPresentation& P, const LinComb& x, const LinComb& w) {
  LinComb t = P.slice_l(Can::C1, x, P.antipode_inv_l(w));
  return map_leg(P, t, 2, [&](const LinComb& y) { return P.antipode_l(y); });
}

LinComb adjoint_si(const MhaPresentation& P, const LinComb& x, const LinComb& w) {
  return fold_mul(peel_l_wsi(P, x, w), P.arity, P.mul, /*reversed=*/true);
}

LinComb adjoint_s(const MhaPresentation& P, const LinComb& x, const LinComb& w) {
  LinComb r(P.field);
  for (const auto& [l, c] : P.delta_l(x)) {
    auto [u, v] = split(l, P.arity);
    r += P.mul_l(P.basis(u), P.mul_l(w, P.antipode(v))).scaled(c);
  }
  return r;
}

LinComb gal1_inv(const MhaPresentation& P, const LinComb& t) {
  LinComb r(P.field);
  for (const auto& [l, c] : t.terms()) {
    auto [a, b] = split(l, P.arity);
    r += peel_r_sc(P, P.basis(a), P.basis(b)).scaled(c);
  }
  return r;
}

LinComb gal3_inv(const MhaPresentation& P, const LinComb& t) {
  // (x⊗y) ↦ Σ x·S(y1) ⊗ y2, inverting (x⊗y) ↦ (x⊗1)Δ(y)
  LinComb r(P.field);
  for (const auto& [l, c] : t.terms()) {
    auto [a, b] = split(l, P.arity);
    LinComb s = P.slice_l(Can::C3, P.basis(b), P.antipode_inv_l(P.basis(a)));
    for (const auto& [sl, sc] : s.terms()) {
      auto [p, q] = split(sl, P.arity);
      r += tensor(P.antipode_l(P.basis(p)), LinComb::basis(P.field, q)).scaled(c * sc);
    }
  }
  return r;
}

LinComb act_ba_on_cover(const PairedSystem& S, const LinComb& b, const LinComb& a,
                        const LinComb& cover) {
  LinComb t = S.A.slice_l(Can::C3, a, cover);
  return contract(t, S.A.arity, 2, b, [&](const Label& leg, const Label& lb) {
    return S.pair(leg, lb);
  });
}

LinComb ract_ab_on_cover(const PairedSystem& S, const LinComb& a, const LinComb& b,
                         const LinComb& cover) {
  LinComb t = S.A.slice_l(Can::C1, a, cover);
  return contract(t, S.A.arity, 1, b, [&](const Label& leg, const Label& lb) {
    return S.pair(leg, lb);
  });
}

LinComb act_ab_on_cover(const PairedSystem& S, const LinComb& a, const LinComb& b,
                        const LinComb& cover) {
  LinComb t = S.B.slice_l(Can::C3, b, cover);
  return contract(t, S.B.arity, 2, a, [&](const Label& leg, const Label& la) {
    return S.pair(la, leg);
  });
}

LinComb ract_ba_on_cover(const PairedSystem& S, const LinComb& b, const LinComb& a,
                         const LinComb& cover) {
  LinComb t = S.B.slice_l(Can::C1, b, cover);
  return contract(t, S.B.arity, 1, a, [&](const Label& leg, const Label& la) {
    return S.pair(la, leg);
  });
}

}  // namespace mhd
