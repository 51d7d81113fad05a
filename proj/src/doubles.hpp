#pragma once

#include <memory>

#include "mha.hpp"

namespace mhd {

// ways to sabotage the construction, exercised by the negative controls
enum class Corrupt {
  None,
  DropAntipodeInAction,  // drop the inverse-antipode conjugation in the action
  DeltaNotCop,           // double coproduct keeps the plain A legs
  SwapCoactionB,         // coaction feeds the B legs in the wrong order
  TrivialBraiding,       // actions collapse through the counit
};

// the double D = A >< B and the companion algebra H = A # B built on a
// pairing; labels of both are the concatenation A-label ++ B-label.
// B must carry a full comultiplication and a unit; A only needs slices.
struct DoubleSystem {
  std::shared_ptr<const PairedSystem> S;
  Corrupt corrupt = Corrupt::None;
  MhaPresentation D;

  explicit DoubleSystem(PairedSystem sys, Corrupt mode = Corrupt::None);

  const MhaPresentation& A() const { return S->A; }
  const MhaPresentation& B() const { return S->B; }
  std::size_t arity() const { return S->A.arity + S->B.arity; }
  const Field& field() const { return S->A.field; }

  LinComb pack(const LinComb& a, const LinComb& b) const { return tensor(a, b); }
  std::string show_h(const LinComb& x) const;

  // twists B⊗A -> A⊗B and their inverses
  LinComb twist_t(const LinComb& t) const;
  LinComb twist_t_inv(const LinComb& t) const;
  LinComb twist_r(const LinComb& t) const;
  LinComb twist_r_inv(const LinComb& t) const;

  // product routed through the twists; cross-check for D.mul
  LinComb dd_mul_twist(const LinComb& x, const LinComb& y) const;
  // antipode through the three-leg peel; cross-check for D.antipode
  LinComb dd_antipode_alt(const LinComb& x) const;

  LinComb hd_mul(const LinComb& x, const LinComb& y) const;
  LinComb hd_action(const LinComb& d, const LinComb& h) const;

  // coaction Γ of D on H, one entry point per cover position:
  //   Γ(h)(1⊗hc)    (dc⊗1)Γ(h)    Γ(h)(dc⊗1)
  LinComb coaction_hcov(const LinComb& h, const LinComb& hc) const;
  LinComb coaction_lcov(const LinComb& dc, const LinComb& h) const;
  LinComb coaction_rcov(const LinComb& h, const LinComb& dc) const;

  // restricted module and comodule structures on the two factors
  LinComb act_on_a(const LinComb& d, const LinComb& a) const;
  LinComb act_on_b(const LinComb& d, const LinComb& b) const;
  LinComb coact_a_rcov(const LinComb& a, const LinComb& dc) const;
  LinComb coact_a_lcov(const LinComb& dc, const LinComb& a) const;
  LinComb coact_b_rcov(const LinComb& b, const LinComb& dc) const;
  LinComb coact_b_lcov(const LinComb& dc, const LinComb& b) const;

  // product rebuilt from the restricted structures; must match hd_mul
  LinComb braided_mul(const LinComb& x, const LinComb& y) const;

  // projector window Σ e⊗1_B over A.diag_right(w)
  LinComb window_unit(std::int64_t w) const;

  // smallest window element u with apply(u, x) = x for every listed x;
  // widens until the check passes, throws RegularityError if it never does
  LinComb action_local_unit(
      const std::function<LinComb(const LinComb&, const LinComb&)>& apply,
      const std::vector<LinComb>& xs) const;
  LinComb hd_local_unit(const std::vector<LinComb>& hs) const;
};

}  // namespace mhd
