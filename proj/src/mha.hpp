#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lincomb.hpp"

namespace mhd {

// the four covered comultiplication slices:
//   C1: Δ(x)(1⊗c)   C2: (c⊗1)Δ(x)   C3: Δ(x)(c⊗1)   C4: (1⊗c)Δ(x)
enum class Can { C1, C2, C3, C4 };

// a multiplier Hopf algebra given by structure maps on basis labels;
// Δ is only reachable through the covered slices unless full_delta is set
struct MhaPresentation {
  std::string name;
  Field field{};
  std::size_t arity = 1;
  bool unital = false;
  Label unit;

  std::function<LinComb(const Label&, const Label&)> mul;
  std::function<Scalar(const Label&)> counit;
  std::function<LinComb(const Label&)> antipode;
  std::function<LinComb(const Label&)> antipode_inv;
  std::function<LinComb(Can, const Label&, const Label&)> slice;  // (variant, x, cover)
  std::function<LinComb(const Label&)> full_delta;                // optional
  std::function<LinComb(const std::vector<Label>&)> local_unit;   // unit on the span
  std::function<std::vector<Label>(std::int64_t)> window_labels;
  std::function<std::vector<Label>(std::int64_t)> diag_right;  // e with x·e projecting
  std::function<std::vector<Label>(std::int64_t)> diag_left;   // e with e·x projecting
  std::function<std::string(const Label&)> label_str;

  LinComb zero() const { return LinComb(field); }
  LinComb basis(const Label& l) const { return LinComb::basis(field, l); }
  LinComb unit_el() const { return basis(unit); }
  LinComb mul_l(const LinComb& x, const LinComb& y) const { return lift2(x, y, mul); }
  LinComb antipode_l(const LinComb& x) const { return lift1(x, antipode); }
  LinComb antipode_inv_l(const LinComb& x) const { return lift1(x, antipode_inv); }
  Scalar counit_l(const LinComb& x) const;
  LinComb slice_l(Can v, const LinComb& x, const LinComb& c) const {
    return lift2(x, c, [&](const Label& a, const Label& b) { return slice(v, a, b); });
  }
  LinComb delta_l(const LinComb& x) const { return lift1(x, full_delta); }
  // Δ^(legs-1) as a legs-fold tensor; needs full_delta
  LinComb delta_n(const LinComb& x, std::size_t legs) const;
  std::string show(const LinComb& x) const { return x.str(label_str); }
};

// builds the four slices out of a full comultiplication (unital case)
std::function<LinComb(Can, const Label&, const Label&)> make_slice_from_delta(
    const Field& F, std::size_t arity,
    std::function<LinComb(const Label&, const Label&)> mul,
    std::function<LinComb(const Label&)> full_delta);

// engine helpers built from slices and antipodes

// applies a slice to leg k (0-based) of an n-leg tensor
LinComb slice_at(const MhaPresentation& P, Can v, const LinComb& t, std::size_t legs,
                 std::size_t k, const LinComb& cover);

// Δ(x)·t and t·Δ(x) for tensors t whose legs already cover the product
LinComb delta_mul_left(const MhaPresentation& P, const LinComb& x, const LinComb& t);
LinComb delta_mul_right(const MhaPresentation& P, const LinComb& t, const LinComb& x);

// Σ x1 ⊗ c·S⁻¹(x2)
LinComb peel_r_csi(const MhaPresentation& P, const LinComb& x, const LinComb& c);
// Σ x1 ⊗ S(x2)·c
LinComb peel_r_sc(const MhaPresentation& P, const LinComb& x, const LinComb& c);
// Σ w·S⁻¹(x1) ⊗ x2
LinComb peel_l_wsi(const MhaPresentation& P, const LinComb& x, const LinComb& w);
// Σ x1 ⊗ w·S(x2)
LinComb peel_r_ws(const MhaPresentation& P, const LinComb& x, const LinComb& w);

// Σ x2·w·S⁻¹(x1)
LinComb adjoint_si(const MhaPresentation& P, const LinComb& x, const LinComb& w);
// Σ x1·w·S(x2); needs full_delta
LinComb adjoint_s(const MhaPresentation& P, const LinComb& x, const LinComb& w);

// inverses of the two Galois maps, as covered compositions:
//   gal1(x⊗y) = Δ(x)(1⊗y)  has inverse  Σ x1 ⊗ S(x2)·y
//   gal3(x⊗y) = (x⊗1)Δ(y)  has inverse  Σ x·S(y1) ⊗ y2
LinComb gal1_inv(const MhaPresentation& P, const LinComb& t);
LinComb gal3_inv(const MhaPresentation& P, const LinComb& t);

// a dual pairing between two presentations together with the four
// actions it induces; actions are given in closed form per instance
struct PairedSystem {
  MhaPresentation A, B;
  std::function<Scalar(const Label&, const Label&)> pair;     // <a, b>
  std::function<LinComb(const Label&, const Label&)> act_ba;  // b ▸ a, args (b, a)
  std::function<LinComb(const Label&, const Label&)> act_ab;  // a ▸ b, args (a, b)
  std::function<LinComb(const Label&, const Label&)> ract_ab;  // a ◂ b, args (a, b)
  std::function<LinComb(const Label&, const Label&)> ract_ba;  // b ◂ a, args (b, a)

  Scalar pair_l(const LinComb& a, const LinComb& b) const { return pair_all(a, b, pair); }
  LinComb act_ba_l(const LinComb& b, const LinComb& a) const { return lift2(b, a, act_ba); }
  LinComb act_ab_l(const LinComb& a, const LinComb& b) const { return lift2(a, b, act_ab); }
  LinComb ract_ab_l(const LinComb& a, const LinComb& b) const { return lift2(a, b, ract_ab); }
  LinComb ract_ba_l(const LinComb& b, const LinComb& a) const { return lift2(b, a, ract_ba); }
};

// the defining slice contractions the closed-form actions must satisfy:
//   (b▸a)·a' = (ι⊗<·,b>) C3_A(a, a')      (a◂b)·a' = (<·,b>⊗ι) C1_A(a, a')
//   (a▸b)·b' = (ι⊗<a,·>) C3_B(b, b')      (b◂a)·b' = (<a,·>⊗ι) C1_B(b, b')
LinComb act_ba_on_cover(const PairedSystem& S, const LinComb& b, const LinComb& a,
                        const LinComb& cover);
LinComb ract_ab_on_cover(const PairedSystem& S, const LinComb& a, const LinComb& b,
                         const LinComb& cover);
LinComb act_ab_on_cover(const PairedSystem& S, const LinComb& a, const LinComb& b,
                        const LinComb& cover);
LinComb ract_ba_on_cover(const PairedSystem& S, const LinComb& b, const LinComb& a,
                         const LinComb& cover);

}  // namespace mhd
