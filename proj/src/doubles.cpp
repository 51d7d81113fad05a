#include "doubles.hpp"

#include <algorithm>
#include <cstdlib>

#include "errors.hpp"

namespace mhd {

namespace {

// u ▸ a ◂ S⁻¹(w), the sandwich appearing in the twist and the product
LinComb sandwich(const PairedSystem& S, const Label& u, const LinComb& a, const Label& w) {
  return S.act_ba_l(S.B.basis(u), S.ract_ab_l(a, S.B.antipode_inv(w)));
}

LinComb dd_mul_basis(const PairedSystem& S, const Label& x, const Label& y) {
  auto [a, b] = split(x, S.A.arity);
  auto [a2, b2] = split(y, S.A.arity);
  LinComb out(S.A.field);
  for (const auto& [t3, c] : S.B.delta_n(S.B.basis(b), 3)) {
    auto [u, rest] = split(t3, S.B.arity);
    auto [v, w] = split(rest, S.B.arity);
    LinComb mid = sandwich(S, u, S.A.basis(a2), w);
    out += tensor(S.A.mul_l(S.A.basis(a), mid), S.B.mul(v, b2)).scaled(c);
  }
  return out;
}

// the four covered slices of Δ_D(a><b) = Σ (a2><b1) ⊗ (a1><b2); with cop
// off the A legs keep their plain order (the corrupted variant)
LinComb dd_slice(const PairedSystem& S, bool cop, Can v, const Label& x, const Label& cv) {
  const auto& A = S.A;
  const auto& B = S.B;
  auto [a, b] = split(x, A.arity);
  auto [a2, b2] = split(cv, A.arity);
  LinComb out(A.field);

  if (v == Can::C1 || v == Can::C3) {
    for (const auto& [t4, c] : B.delta_n(B.basis(b), 4)) {
      auto [b1, r1] = split(t4, B.arity);
      auto [bm, r2] = split(r1, B.arity);
      auto [b3, b4] = split(r2, B.arity);
      LinComb ap(A.field), bs1(A.field), bs2(A.field);
      if (v == Can::C1) {
        LinComb y = sandwich(S, bm, A.basis(a2), b4);
        ap = cop ? flip(A.slice_l(Can::C3, A.basis(a), y), A.arity)
                 : A.slice_l(Can::C1, A.basis(a), y);
        bs1 = B.basis(b1);
        bs2 = B.mul(b3, b2);
      } else {
        LinComb y = sandwich(S, b1, A.basis(a2), b3);
        ap = cop ? flip(A.slice_l(Can::C1, A.basis(a), y), A.arity)
                 : A.slice_l(Can::C3, A.basis(a), y);
        bs1 = B.mul(bm, b2);
        bs2 = B.basis(b4);
      }
      for (const auto& [l, c2] : ap) {
        auto [g, h] = split(l, A.arity);
        out += tensor(tensor(A.basis(g), bs1), tensor(A.basis(h), bs2)).scaled(c * c2);
      }
    }
    return out;
  }

  // C2 and C4: the cover's B part is comultiplied twice, x's B part once
  for (const auto& [tb, cb] : B.delta_n(B.basis(b), 2)) {
    auto [u, w] = split(tb, B.arity);
    for (const auto& [tc, cc] : B.delta_n(B.basis(b2), 3)) {
      auto [s, r1] = split(tc, B.arity);
      auto [m, t0] = split(r1, B.arity);
      Scalar coef = cb * cc;
      if (v == Can::C2) {
        LinComb inner = cop ? A.slice_l(Can::C4, S.act_ba(s, a), A.basis(a2))
                            : A.slice_l(Can::C2, S.ract_ab_l(A.basis(a), B.antipode_inv(t0)),
                                        A.basis(a2));
        for (const auto& [l, c2] : inner) {
          auto [l1, l2] = split(l, A.arity);
          LinComb s1(A.field), s2(A.field);
          if (cop) {
            s1 = tensor(A.basis(l2), B.mul(m, u));
            s2 = tensor(S.act_ba_l(B.antipode_inv(t0), A.basis(l1)), B.basis(w));
          } else {
            s1 = tensor(A.basis(l1), B.mul(m, u));
            s2 = tensor(S.ract_ab_l(A.basis(l2), B.basis(s)), B.basis(w));
          }
          out += tensor(s1, s2).scaled(coef * c2);
        }
      } else {
        LinComb inner = cop ? A.slice_l(Can::C2, S.ract_ab_l(A.basis(a), B.antipode_inv(t0)),
                                        A.basis(a2))
                            : A.slice_l(Can::C4, S.act_ba(s, a), A.basis(a2));
        for (const auto& [l, c2] : inner) {
          auto [l1, l2] = split(l, A.arity);
          LinComb s1(A.field), s2(A.field);
          if (cop) {
            s1 = tensor(S.ract_ab_l(A.basis(l2), B.basis(s)), B.basis(u));
            s2 = tensor(A.basis(l1), B.mul(m, w));
          } else {
            s1 = tensor(S.act_ba_l(B.antipode_inv(t0), A.basis(l1)), B.basis(u));
            s2 = tensor(A.basis(l2), B.mul(m, w));
          }
          out += tensor(s1, s2).scaled(coef * c2);
        }
      }
    }
  }
  return out;
}

}  // namespace

DoubleSystem::DoubleSystem(PairedSystem sys, Corrupt mode)
    : S(std::make_shared<const PairedSystem>(std::move(sys))), corrupt(mode) {
  if (!S->B.full_delta)
    throw ConfigError("double construction needs a full comultiplication on the B factor");
  if (!S->B.unital) throw ConfigError("double construction needs a unital B factor");

  auto sp = S;
  bool cop = corrupt != Corrupt::DeltaNotCop;

  D.name = sp->A.name + "><" + sp->B.name;
  D.field = sp->A.field;
  D.arity = sp->A.arity + sp->B.arity;
  if (sp->A.unital && sp->B.unital) {
    D.unital = true;
    D.unit = cat(sp->A.unit, sp->B.unit);
  }

  D.mul = [sp](const Label& x, const Label& y) { return dd_mul_basis(*sp, x, y); };
  D.counit = [sp](const Label& x) {
    auto [a, b] = split(x, sp->A.arity);
    return sp->A.counit(a) * sp->B.counit(b);
  };
  D.antipode = [sp](const Label& x) {
    auto [a, b] = split(x, sp->A.arity);
    LinComb sa = sp->A.antipode_inv(a);
    LinComb out(sp->A.field);
    for (const auto& [lb, cb] : sp->B.antipode(b)) {
      for (const auto& [t3, c3] : sp->B.delta_n(sp->B.basis(lb), 3)) {
        auto [u, rest] = split(t3, sp->B.arity);
        auto [v, w] = split(rest, sp->B.arity);
        out += tensor(sandwich(*sp, u, sa, w), sp->B.basis(v)).scaled(cb * c3);
      }
    }
    return out;
  };
  D.antipode_inv = [sp](const Label& x) {
    auto [a, b] = split(x, sp->A.arity);
    LinComb out(sp->A.field);
    for (const auto& [t3, c] : sp->B.delta_n(sp->B.basis(b), 3)) {
      auto [u, rest] = split(t3, sp->B.arity);
      auto [v, w] = split(rest, sp->B.arity);
      LinComb mid = sp->ract_ab_l(sp->act_ba_l(sp->B.antipode_inv(u), sp->A.basis(a)),
                                  sp->B.basis(w));
      out += tensor(sp->A.antipode_l(mid), sp->B.antipode_inv(v)).scaled(c);
    }
    return out;
  };
  D.slice = [sp, cop](Can v, const Label& x, const Label& cv) {
    return dd_slice(*sp, cop, v, x, cv);
  };
  if (sp->A.full_delta && sp->B.full_delta) {
    std::size_t na = sp->A.arity;
    D.full_delta = [sp, cop, na](const Label& x) {
      auto [a, b] = split(x, na);
      LinComb da = sp->A.delta_l(sp->A.basis(a));
      if (cop) da = flip(da, na);
      LinComb db = sp->B.delta_l(sp->B.basis(b));
      LinComb out(sp->A.field);
      for (const auto& [la, ca] : da) {
        auto [a1, a2] = split(la, na);
        for (const auto& [lb, cb] : db) {
          auto [b1, b2] = split(lb, sp->B.arity);
          out.add(cat(cat(a1, b1), cat(a2, b2)), ca * cb);
        }
      }
      return out;
    };
  }
  D.window_labels = [sp](std::int64_t w) {
    std::vector<Label> out;
    for (const auto& a : sp->A.window_labels(w))
      for (const auto& b : sp->B.window_labels(w)) out.push_back(cat(a, b));
    return out;
  };
  D.diag_right = [sp](std::int64_t w) {
    std::vector<Label> out;
    for (const auto& e : sp->A.diag_right(w)) out.push_back(cat(e, sp->B.unit));
    return out;
  };
  D.diag_left = [sp](std::int64_t w) {
    std::vector<Label> out;
    for (const auto& e : sp->A.diag_left(w)) out.push_back(cat(e, sp->B.unit));
    return out;
  };
  D.local_unit = [sp, mul = D.mul](const std::vector<Label>& span) {
    std::int64_t w = 1;
    for (const auto& l : span)
      for (auto e : l) w = std::max<std::int64_t>(w, std::abs(e) + 1);
    for (int tries = 0; tries < 6; ++tries, w += 4) {
      LinComb u(sp->A.field);
      for (const auto& e : sp->A.diag_right(w))
        u += LinComb::basis(sp->A.field, cat(e, sp->B.unit));
      bool ok = true;
      for (const auto& l : span) {
        LinComb x = LinComb::basis(sp->A.field, l);
        if (lift2(u, x, mul) != x || lift2(x, u, mul) != x) {
          ok = false;
          break;
        }
      }
      if (ok) return u;
    }
    throw RegularityError("no local unit found for the requested span in " + sp->A.name +
                          "><" + sp->B.name);
  };
  D.label_str = [sp](const Label& x) {
    auto [a, b] = split(x, sp->A.arity);
    return "(" + sp->A.label_str(a) + " >< " + sp->B.label_str(b) + ")";
  };
}

std::string DoubleSystem::show_h(const LinComb& x) const {
  auto sp = S;
  return x.str([sp](const Label& l) {
    auto [a, b] = split(l, sp->A.arity);
    return "(" + sp->A.label_str(a) + " # " + sp->B.label_str(b) + ")";
  });
}

LinComb DoubleSystem::twist_t(const LinComb& t) const {
  const auto& S_ = *S;
  LinComb out(field());
  for (const auto& [l, c] : t) {
    auto [lb, la] = split(l, S_.B.arity);
    for (const auto& [t3, c3] : S_.B.delta_n(S_.B.basis(lb), 3)) {
      auto [u, rest] = split(t3, S_.B.arity);
      auto [v, w] = split(rest, S_.B.arity);
      out += tensor(sandwich(S_, u, S_.A.basis(la), w), S_.B.basis(v)).scaled(c * c3);
    }
  }
  return out;
}

LinComb DoubleSystem::twist_t_inv(const LinComb& t) const {
  const auto& S_ = *S;
  LinComb out(field());
  for (const auto& [l, c] : t) {
    auto [la, lb] = split(l, S_.A.arity);
    for (const auto& [t3, c3] : S_.B.delta_n(S_.B.basis(lb), 3)) {
      auto [u, rest] = split(t3, S_.B.arity);
      auto [v, w] = split(rest, S_.B.arity);
      LinComb mid = S_.ract_ab_l(S_.act_ba_l(S_.B.antipode_inv(u), S_.A.basis(la)),
                                 S_.B.basis(w));
      out += tensor(S_.B.basis(v), mid).scaled(c * c3);
    }
  }
  return out;
}

LinComb DoubleSystem::twist_r(const LinComb& t) const {
  const auto& S_ = *S;
  LinComb out(field());
  for (const auto& [l, c] : t) {
    auto [lb, la] = split(l, S_.B.arity);
    for (const auto& [t2, c2] : S_.B.delta_n(S_.B.basis(lb), 2)) {
      auto [u, v] = split(t2, S_.B.arity);
      out += tensor(S_.act_ba(u, la), S_.B.basis(v)).scaled(c * c2);
    }
  }
  return out;
}

LinComb DoubleSystem::twist_r_inv(const LinComb& t) const {
  const auto& S_ = *S;
  LinComb out(field());
  for (const auto& [l, c] : t) {
    auto [la, lb] = split(l, S_.A.arity);
    for (const auto& [t2, c2] : S_.B.delta_n(S_.B.basis(lb), 2)) {
      auto [u, v] = split(t2, S_.B.arity);
      out += tensor(S_.B.basis(v), S_.act_ba_l(S_.B.antipode_inv(u), S_.A.basis(la)))
                 .scaled(c * c2);
    }
  }
  return out;
}

LinComb DoubleSystem::dd_mul_twist(const LinComb& x, const LinComb& y) const {
  const auto& S_ = *S;
  return lift2(x, y, [&](const Label& lx, const Label& ly) {
    auto [a, b] = split(lx, S_.A.arity);
    auto [a2, b2] = split(ly, S_.A.arity);
    LinComb out(field());
    for (const auto& [l, c] : twist_t_inv(tensor(S_.A.basis(a), S_.B.basis(b)))) {
      auto [lb, la] = split(l, S_.B.arity);
      for (const auto& [l2, c2] : twist_t(tensor(S_.B.basis(lb), S_.A.mul(la, a2)))) {
        auto [pa, pb] = split(l2, S_.A.arity);
        out += tensor(S_.A.basis(pa), S_.B.mul(pb, b2)).scaled(c * c2);
      }
    }
    return out;
  });
}

LinComb DoubleSystem::dd_antipode_alt(const LinComb& x) const {
  const auto& S_ = *S;
  return lift1(x, [&](const Label& lx) {
    auto [a, b] = split(lx, S_.A.arity);
    LinComb out(field());
    for (const auto& [t3, c] : S_.B.delta_n(S_.B.basis(b), 3)) {
      auto [u, rest] = split(t3, S_.B.arity);
      auto [v, w] = split(rest, S_.B.arity);
      LinComb mid = S_.ract_ab_l(S_.act_ba_l(S_.B.antipode_inv(u), S_.A.basis(a)),
                                 S_.B.basis(w));
      out += tensor(S_.A.antipode_inv_l(mid), S_.B.antipode(v)).scaled(c);
    }
    return out;
  });
}

LinComb DoubleSystem::hd_mul(const LinComb& x, const LinComb& y) const {
  const auto& S_ = *S;
  return lift2(x, y, [&](const Label& lx, const Label& ly) {
    auto [a, b] = split(lx, S_.A.arity);
    auto [a2, b2] = split(ly, S_.A.arity);
    LinComb out(field());
    for (const auto& [t2, c] : S_.B.delta_n(S_.B.basis(b), 2)) {
      auto [u, v] = split(t2, S_.B.arity);
      out += tensor(S_.A.mul_l(S_.A.basis(a), S_.act_ba(u, a2)), S_.B.mul(v, b2)).scaled(c);
    }
    return out;
  });
}

LinComb DoubleSystem::hd_action(const LinComb& d, const LinComb& h) const {
  const auto& S_ = *S;
  if (corrupt == Corrupt::TrivialBraiding) return h.scaled(D.counit_l(d));
  return lift2(d, h, [&](const Label& ld, const Label& lh) {
    auto [a, b] = split(ld, S_.A.arity);
    auto [a2, b2] = split(lh, S_.A.arity);
    LinComb out(field());
    for (const auto& [t3, c] : S_.B.delta_n(S_.B.basis(b), 3)) {
      auto [u, rest] = split(t3, S_.B.arity);
      auto [v, w0] = split(rest, S_.B.arity);
      LinComb wacts = S_.act_ba(u, a2);
      LinComb bcore = S_.B.mul_l(S_.B.mul(v, b2), S_.B.antipode(w0));
      for (const auto& [m, cm] : bcore) {
        for (const auto& [t2, c2] : S_.B.delta_n(S_.B.basis(m), 2)) {
          auto [z, bfin] = split(t2, S_.B.arity);
          LinComb xa = S_.ract_ab_l(S_.A.basis(a), S_.B.antipode_inv(z));
          LinComb aslot = corrupt == Corrupt::DropAntipodeInAction
                              ? S_.A.mul_l(xa, wacts)
                              : adjoint_si(S_.A, xa, wacts);
          out += tensor(aslot, S_.B.basis(bfin)).scaled(c * cm * c2);
        }
      }
    }
    return out;
  });
}

LinComb DoubleSystem::coaction_hcov(const LinComb& h, const LinComb& hc) const {
  const auto& S_ = *S;
  const auto& A_ = S_.A;
  const auto& B_ = S_.B;
  bool sw = corrupt == Corrupt::SwapCoactionB;
  return lift2(h, hc, [&](const Label& lh, const Label& lc) {
    auto [a, b] = split(lh, A_.arity);
    auto [a2, b2] = split(lc, A_.arity);
    LinComb out(field());
    for (const auto& [t3, c] : B_.delta_n(B_.basis(b), 3)) {
      auto [b1, rest] = split(t3, B_.arity);
      auto [bm, b3] = split(rest, B_.arity);
      const Label& dleg = sw ? b3 : b1;
      const Label& actleg = sw ? b1 : bm;
      const Label& mulleg = sw ? bm : b3;
      LinComb ap = flip(A_.slice_l(Can::C3, A_.basis(a), S_.act_ba(actleg, a2)), A_.arity);
      LinComb bs2 = B_.mul(mulleg, b2);
      for (const auto& [l, c2] : ap) {
        auto [p, q] = split(l, A_.arity);
        out += tensor(tensor(A_.basis(p), B_.basis(dleg)), tensor(A_.basis(q), bs2))
                   .scaled(c * c2);
      }
    }
    return out;
  });
}

LinComb DoubleSystem::coaction_lcov(const LinComb& dc, const LinComb& h) const {
  const auto& S_ = *S;
  const auto& A_ = S_.A;
  const auto& B_ = S_.B;
  bool sw = corrupt == Corrupt::SwapCoactionB;
  return lift2(dc, h, [&](const Label& lc, const Label& lh) {
    auto [a2, b2] = split(lc, A_.arity);
    auto [a, b] = split(lh, A_.arity);
    LinComb out(field());
    for (const auto& [tb, cb] : B_.delta_n(B_.basis(b), 2)) {
      auto [b1, bh] = split(tb, B_.arity);
      const Label& dleg = sw ? bh : b1;
      const Label& hleg = sw ? b1 : bh;
      for (const auto& [tc, cc] : B_.delta_n(B_.basis(b2), 3)) {
        auto [s, r1] = split(tc, B_.arity);
        auto [m, t0] = split(r1, B_.arity);
        LinComb inner = A_.slice_l(Can::C4, S_.act_ba(s, a), A_.basis(a2));
        for (const auto& [l, c2] : inner) {
          auto [p, r] = split(l, A_.arity);
          out += tensor(tensor(A_.basis(r), B_.mul(m, dleg)),
                        tensor(S_.act_ba_l(B_.antipode_inv(t0), A_.basis(p)), B_.basis(hleg)))
                     .scaled(cb * cc * c2);
        }
      }
    }
    return out;
  });
}

LinComb DoubleSystem::coaction_rcov(const LinComb& h, const LinComb& dc) const {
  const auto& S_ = *S;
  const auto& A_ = S_.A;
  const auto& B_ = S_.B;
  bool sw = corrupt == Corrupt::SwapCoactionB;
  return lift2(h, dc, [&](const Label& lh, const Label& lc) {
    auto [a, b] = split(lh, A_.arity);
    auto [a2, b2] = split(lc, A_.arity);
    LinComb out(field());
    for (const auto& [t4, c] : B_.delta_n(B_.basis(b), 4)) {
      auto [b1, r1] = split(t4, B_.arity);
      auto [bm, r2] = split(r1, B_.arity);
      auto [b3, b4] = split(r2, B_.arity);
      const Label& actleg = sw ? bm : b1;
      const Label& mulleg = sw ? b3 : bm;
      const Label& sleg = sw ? b4 : b3;
      const Label& hleg = sw ? b1 : b4;
      LinComb y = sandwich(S_, actleg, A_.basis(a2), sleg);
      LinComb ap = flip(A_.slice_l(Can::C1, A_.basis(a), y), A_.arity);
      LinComb bs1 = B_.mul(mulleg, b2);
      for (const auto& [l, c2] : ap) {
        auto [p, q] = split(l, A_.arity);
        out += tensor(tensor(A_.basis(p), bs1), tensor(A_.basis(q), B_.basis(hleg)))
                   .scaled(c * c2);
      }
    }
    return out;
  });
}

LinComb DoubleSystem::act_on_a(const LinComb& d, const LinComb& a) const {
  const auto& S_ = *S;
  if (corrupt == Corrupt::TrivialBraiding) return a.scaled(D.counit_l(d));
  return lift2(d, a, [&](const Label& ld, const Label& la) {
    auto [da, db] = split(ld, S_.A.arity);
    return adjoint_si(S_.A, S_.A.basis(da), S_.act_ba(db, la));
  });
}

LinComb DoubleSystem::act_on_b(const LinComb& d, const LinComb& b) const {
  const auto& S_ = *S;
  if (corrupt == Corrupt::TrivialBraiding) return b.scaled(D.counit_l(d));
  return lift2(d, b, [&](const Label& ld, const Label& lb) {
    auto [da, db] = split(ld, S_.A.arity);
    LinComb adj = adjoint_s(S_.B, S_.B.basis(db), S_.B.basis(lb));
    return S_.ract_ba_l(adj, S_.A.antipode_inv(da));
  });
}

LinComb DoubleSystem::coact_a_rcov(const LinComb& a, const LinComb& dc) const {
  const auto& S_ = *S;
  return lift2(a, dc, [&](const Label& la, const Label& lc) {
    auto [a2, b2] = split(lc, S_.A.arity);
    LinComb out(field());
    for (const auto& [l, c] : flip(S_.A.slice(Can::C1, la, a2), S_.A.arity)) {
      auto [g, h] = split(l, S_.A.arity);
      out += tensor(tensor(S_.A.basis(g), S_.B.basis(b2)), S_.A.basis(h)).scaled(c);
    }
    return out;
  });
}

LinComb DoubleSystem::coact_a_lcov(const LinComb& dc, const LinComb& a) const {
  const auto& S_ = *S;
  return lift2(dc, a, [&](const Label& lc, const Label& la) {
    auto [a2, b2] = split(lc, S_.A.arity);
    LinComb out(field());
    for (const auto& [tc, cc] : S_.B.delta_n(S_.B.basis(b2), 3)) {
      auto [s, r1] = split(tc, S_.B.arity);
      auto [m, t0] = split(r1, S_.B.arity);
      LinComb inner = S_.A.slice_l(Can::C4, S_.act_ba(s, la), S_.A.basis(a2));
      for (const auto& [l, c2] : inner) {
        auto [p, r] = split(l, S_.A.arity);
        out += tensor(tensor(S_.A.basis(r), S_.B.basis(m)),
                      S_.act_ba_l(S_.B.antipode_inv(t0), S_.A.basis(p)))
                   .scaled(cc * c2);
      }
    }
    return out;
  });
}

LinComb DoubleSystem::coact_b_rcov(const LinComb& b, const LinComb& dc) const {
  const auto& S_ = *S;
  return lift2(b, dc, [&](const Label& lb, const Label& lc) {
    auto [a2, b2] = split(lc, S_.A.arity);
    LinComb out(field());
    for (const auto& [t4, c] : S_.B.delta_n(S_.B.basis(lb), 4)) {
      auto [u1, r1] = split(t4, S_.B.arity);
      auto [u2, r2] = split(r1, S_.B.arity);
      auto [u3, v] = split(r2, S_.B.arity);
      LinComb mid = sandwich(S_, u1, S_.A.basis(a2), u3);
      out += tensor(tensor(mid, S_.B.mul(u2, b2)), S_.B.basis(v)).scaled(c);
    }
    return out;
  });
}

LinComb DoubleSystem::coact_b_lcov(const LinComb& dc, const LinComb& b) const {
  const auto& S_ = *S;
  return lift2(dc, b, [&](const Label& lc, const Label& lb) {
    auto [a2, b2] = split(lc, S_.A.arity);
    LinComb out(field());
    for (const auto& [t2, c] : S_.B.delta_n(S_.B.basis(lb), 2)) {
      auto [u, v] = split(t2, S_.B.arity);
      out += tensor(tensor(S_.A.basis(a2), S_.B.mul(b2, u)), S_.B.basis(v)).scaled(c);
    }
    return out;
  });
}

LinComb DoubleSystem::braided_mul(const LinComb& x, const LinComb& y) const {
  const auto& S_ = *S;
  return lift2(x, y, [&](const Label& lx, const Label& ly) {
    auto [a, b] = split(lx, S_.A.arity);
    auto [a2, b2] = split(ly, S_.A.arity);
    LinComb ael = S_.A.basis(a2);
    LinComb u = action_local_unit(
        [this](const LinComb& d, const LinComb& t) { return act_on_a(d, t); }, {ael});
    LinComb out(field());
    for (const auto& [l, c] : coact_b_rcov(S_.B.basis(b), u)) {
      auto [ld, v] = split(l, arity());
      LinComb left = S_.A.mul_l(S_.A.basis(a), act_on_a(LinComb::basis(field(), ld), ael));
      out += tensor(left, S_.B.mul(v, b2)).scaled(c);
    }
    return out;
  });
}

LinComb DoubleSystem::window_unit(std::int64_t w) const {
  LinComb u(field());
  for (const auto& e : S->A.diag_right(w)) u += LinComb::basis(field(), cat(e, S->B.unit));
  return u;
}

LinComb DoubleSystem::action_local_unit(
    const std::function<LinComb(const LinComb&, const LinComb&)>& apply,
    const std::vector<LinComb>& xs) const {
  std::int64_t w = 1;
  for (const auto& x : xs)
    for (const auto& [l, c] : x.terms())
      for (auto e : l) w = std::max<std::int64_t>(w, std::abs(e) + 1);
  for (int tries = 0; tries < 6; ++tries, w += 4) {
    LinComb u = window_unit(w);
    bool ok = true;
    for (const auto& x : xs) {
      if (apply(u, x) != x) {
        ok = false;
        break;
      }
    }
    if (ok) return u;
  }
  throw RegularityError("no acting local unit found in " + D.name);
}

LinComb DoubleSystem::hd_local_unit(const std::vector<LinComb>& hs) const {
  return action_local_unit(
      [this](const LinComb& d, const LinComb& h) { return hd_action(d, h); }, hs);
}

}  // namespace mhd
