#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "group_instance.hpp"

using namespace mhd;

namespace {

const Field F = Field::rationals();

// two-leg componentwise product
[[maybe_unused]] LinComb tprod(const MhaPresentation& P, const LinComb& s, const LinComb& t) {
  return lift2(s, t, [&](const Label& x, const Label& y) {
    auto [x1, x2] = split(x, P.arity);
    auto [y1, y2] = split(y, P.arity);
    return tensor(P.mul(x1, y1), P.mul(x2, y2));
  });
}

Scalar eps_fold(const MhaPresentation& P, const LinComb& t, int which, const Label& keep) {
  // coefficient of `keep` after applying ε to one leg
  Scalar s = Scalar::zero(P.field);
  for (const auto& [l, c] : t.terms()) {
    auto [a, b] = split(l, P.arity);
    const Label& e = which == 1 ? a : b;
    const Label& k = which == 1 ? b : a;
    if (k == keep) s += P.counit(e) * c;
  }
  return s;
}

}  // namespace

TEST_CASE("function algebra structure") {
  Group G = Group::zn(3);
  auto A = kg_functions(G, F);
  CHECK(A.mul_l(A.basis({1}), A.basis({1})) == A.basis({1}));
  CHECK(A.mul_l(A.basis({1}), A.basis({2})).zero());
  CHECK(A.counit({0}).is_one());
  CHECK(A.counit({1}).is_zero());
  CHECK(A.antipode_l(A.basis({1})) == A.basis({2}));
  CHECK(A.slice(Can::C1, {1}, {2}) == LinComb::basis(F, {2, 2}));
  LinComb u = A.local_unit({{0}, {2}, {0}});
  for (auto l : {Label{0}, Label{2}}) {
    CHECK(A.mul_l(u, A.basis(l)) == A.basis(l));
    CHECK(A.mul_l(A.basis(l), u) == A.basis(l));
  }
}

TEST_CASE("slices agree with the full comultiplication on finite groups") {
  for (auto G : {Group::zn(4), Group::sym(3)}) {
    auto A = kg_functions(G, F);
    auto ref = make_slice_from_delta(F, 1, A.mul, A.full_delta);
    for (auto x : A.window_labels(0))
      for (auto c : A.window_labels(0))
        for (auto v : {Can::C1, Can::C2, Can::C3, Can::C4})
          CHECK(A.slice(v, x, c) == ref(v, x, c));
  }
}

TEST_CASE("covered coassociativity and counit") {
  for (auto G : {Group::zn(4), Group::sym(3)}) {
    auto A = kg_functions(G, F);
    for (auto x : A.window_labels(0))
      for (auto c : A.window_labels(0)) {
        LinComb xc = A.mul_l(A.basis(x), A.basis(c));
        CHECK(eps_fold(A, A.slice(Can::C1, x, c), 1, c) ==
              (xc.zero() ? Scalar::zero(F) : Scalar::one(F)));
        // (c'⊗1⊗1)(Δ⊗ι)(Δ(x)(1⊗c)) == (ι⊗Δ)((c'⊗1)Δ(x))(1⊗1⊗c)
        for (auto cp : A.window_labels(0)) {
          LinComb lhs = slice_at(A, Can::C2, A.slice_l(Can::C1, A.basis(x), A.basis(c)),
                                 2, 0, A.basis(cp));
          LinComb rhs = slice_at(A, Can::C1, A.slice_l(Can::C2, A.basis(x), A.basis(cp)),
                                 2, 1, A.basis(c));
          CHECK(lhs == rhs);
        }
      }
  }
}

TEST_CASE("three-leg expansion pins both covers") {
  Group G = Group::zn(3);
  auto A = kg_functions(G, F);
  LinComb t = slice_at(A, Can::C1, A.slice_l(Can::C1, A.basis({0}), A.basis({2})), 2, 0,
                       A.basis({1}));
  CHECK(t == LinComb::basis(F, {0, 1, 2}));
}

TEST_CASE("group algebra structure") {
  Group G = Group::sym(3);
  auto B = kg_algebra(G, F);
  CHECK(B.unital);
  CHECK(B.delta_n(B.basis({3}), 3) == LinComb::basis(F, {3, 3, 3}));
  CHECK(B.counit_l(B.basis({4})).is_one());
  for (auto x : B.window_labels(0)) {
    CHECK(B.mul_l(B.unit_el(), B.basis(x)) == B.basis(x));
    CHECK(B.mul_l(B.basis(x), B.antipode(x)).terms().count({G.id()}) == 1);
  }
}

TEST_CASE("delta respects products through covers") {
  Group G = Group::sym(3);
  auto A = kg_functions(G, F);
  for (auto x : A.window_labels(0))
    for (auto y : A.window_labels(0))
      for (auto c : A.window_labels(0)) {
        LinComb lhs = A.slice_l(Can::C1, A.mul_l(A.basis(x), A.basis(y)), A.basis(c));
        LinComb rhs = delta_mul_left(A, A.basis(x), A.slice_l(Can::C1, A.basis(y), A.basis(c)));
        CHECK(lhs == rhs);
        LinComb lhs2 = A.slice_l(Can::C2, A.mul_l(A.basis(x), A.basis(y)), A.basis(c));
        LinComb rhs2 = delta_mul_right(A, A.slice_l(Can::C2, A.basis(x), A.basis(c)),
                                       A.basis(y));
        CHECK(lhs2 == rhs2);
      }
}

TEST_CASE("peels and adjoints match the full comultiplication") {
  Group G = Group::sym(3);
  auto A = kg_functions(G, F);
  for (auto xl : A.window_labels(0))
    for (auto cl : A.window_labels(0)) {
      LinComb x = A.basis(xl), c = A.basis(cl);
      LinComb d = A.delta_l(x);
      LinComb csi(F), sc(F), wsi(F), ws(F), adj(F);
      for (const auto& [l, co] : d.terms()) {
        auto [u, v] = split(l, 1);
        csi += tensor(LinComb::basis(F, u),
                      A.mul_l(c, A.antipode_inv(v))).scaled(co);
        sc += tensor(LinComb::basis(F, u), A.mul_l(A.antipode(v), c)).scaled(co);
        wsi += tensor(A.mul_l(c, A.antipode_inv(u)), LinComb::basis(F, v)).scaled(co);
        ws += tensor(LinComb::basis(F, u), A.mul_l(c, A.antipode(v))).scaled(co);
        adj += A.mul_l(LinComb::basis(F, v),
                       A.mul_l(c, A.antipode_inv(u))).scaled(co);
      }
      CHECK(peel_r_csi(A, x, c) == csi);
      CHECK(peel_r_sc(A, x, c) == sc);
      CHECK(peel_l_wsi(A, x, c) == wsi);
      CHECK(peel_r_ws(A, x, c) == ws);
      CHECK(adjoint_si(A, x, c) == adj);
      CHECK(adjoint_s(A, x, c) ==
            fold_mul(ws, 1, A.mul));  // Σ x1·(c·S(x2)) with mul folded
    }
}

TEST_CASE("galois map inverses") {
  Group G = Group::zn(4);
  auto A = kg_functions(G, F);
  auto gal1 = [&](const LinComb& t) {
    LinComb r(F);
    for (const auto& [l, c] : t.terms()) {
      auto [a, b] = split(l, 1);
      r += A.slice_l(Can::C1, A.basis(a), LinComb::basis(F, b)).scaled(c);
    }
    return r;
  };
  auto gal3 = [&](const LinComb& t) {
    // (a⊗b) ↦ (a⊗1)Δ(b)
    LinComb r(F);
    for (const auto& [l, c] : t.terms()) {
      auto [a, b] = split(l, 1);
      r += A.slice_l(Can::C2, A.basis(b), A.basis(a)).scaled(c);
    }
    return r;
  };
  for (auto a : A.window_labels(0))
    for (auto b : A.window_labels(0)) {
      LinComb t = tensor(A.basis(a), A.basis(b));
      CHECK(gal1(gal1_inv(A, t)) == t);
      CHECK(gal1_inv(A, gal1(t)) == t);
      CHECK(gal3(gal3_inv(A, t)) == t);
      CHECK(gal3_inv(A, gal3(t)) == t);
    }
}

TEST_CASE("pairing axioms against the group algebra") {
  Group G = Group::sym(3);
  auto S = group_pairing(G, F);
  for (auto a : S.A.window_labels(0))
    for (auto b : S.B.window_labels(0)) {
      // <S(a), b> = <a, S(b)>
      CHECK(S.pair_l(S.A.antipode(a), S.B.basis(b)) ==
            S.pair_l(S.A.basis(a), S.B.antipode(b)));
      // <a, 1> = ε(a), <sum over a> not needed; unit side:
      CHECK(S.pair_l(S.A.basis(a), S.B.unit_el()) == S.A.counit(a));
      for (auto a2 : S.A.window_labels(0)) {
        // <aa', b> = <a, b1><a', b2>
        Scalar lhs = S.pair_l(S.A.mul(a, a2), S.B.basis(b));
        Scalar rhs = Scalar::zero(F);
        for (const auto& [l, c] : S.B.delta_l(S.B.basis(b))) {
          auto [b1, b2] = split(l, 1);
          rhs += S.pair(a, b1) * S.pair(a2, b2) * c;
        }
        CHECK(lhs == rhs);
      }
      for (auto b2 : S.B.window_labels(0)) {
        // <a, bb'> = <b'▸a, b>
        Scalar lhs = S.pair_l(S.A.basis(a), S.B.mul(b, b2));
        Scalar rhs = S.pair_l(S.act_ba(b2, a), S.B.basis(b));
        CHECK(lhs == rhs);
      }
    }
}

TEST_CASE("closed actions satisfy their defining contractions") {
  Group G = Group::sym(3);
  auto S = group_pairing(G, F);
  for (auto a : S.A.window_labels(0))
    for (auto b : S.B.window_labels(0))
      for (auto cv : S.A.window_labels(0)) {
        LinComb cover = S.A.basis(cv);
        CHECK(S.A.mul_l(S.act_ba(b, a), cover) ==
              act_ba_on_cover(S, S.B.basis(b), S.A.basis(a), cover));
        CHECK(S.A.mul_l(S.ract_ab(a, b), cover) ==
              ract_ab_on_cover(S, S.A.basis(a), S.B.basis(b), cover));
      }
  for (auto a : S.A.window_labels(0))
    for (auto b : S.B.window_labels(0))
      for (auto cv : S.B.window_labels(0)) {
        LinComb cover = S.B.basis(cv);
        CHECK(S.B.mul_l(S.act_ab(a, b), cover) ==
              act_ab_on_cover(S, S.A.basis(a), S.B.basis(b), cover));
        CHECK(S.B.mul_l(S.ract_ba(b, a), cover) ==
              ract_ba_on_cover(S, S.B.basis(b), S.A.basis(a), cover));
      }
}

TEST_CASE("infinite cyclic group stays finitary") {
  Group G = Group::integers();
  auto S = group_pairing(G, F);
  CHECK(S.A.mul_l(S.A.basis({5}), S.A.basis({5})) == S.A.basis({5}));
  CHECK(S.act_ba({3}, {5}) == S.A.basis({2}));
  CHECK(S.A.slice(Can::C1, {7}, {2}) == LinComb::basis(F, {5, 2}));
  LinComb u = S.A.local_unit({{-3}, {9}});
  CHECK(u.size() == 2);
  CHECK(S.A.mul_l(u, S.A.basis({9})) == S.A.basis({9}));
}
