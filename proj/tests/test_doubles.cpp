#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "doubles.hpp"
#include "group_instance.hpp"
#include "taft.hpp"

using namespace mhd;

namespace {

const Field F = Field::rationals();

Label dl(std::int64_t g, std::int64_t h) { return {g, h}; }

// closed forms on K(G) >< K[G], all products written in G
struct GroupOracle {
  Group G;
  Field f;

  LinComb dd(const Label& x, const Label& y) const {
    if (x[0] != G.op(G.op(x[1], y[0]), G.inv(x[1]))) return LinComb(f);
    return LinComb::basis(f, dl(x[0], G.op(x[1], y[1])));
  }
  LinComb s_dd(const Label& x) const {
    auto hi = G.inv(x[1]);
    return LinComb::basis(f, dl(G.op(G.op(hi, G.inv(x[0])), x[1]), hi));
  }
  LinComb hd(const Label& x, const Label& y) const {
    if (x[0] != G.op(y[0], G.inv(x[1]))) return LinComb(f);
    return LinComb::basis(f, dl(x[0], G.op(x[1], y[1])));
  }
  LinComb hdact(const Label& d, const Label& h) const {
    auto conj = G.op(G.op(d[1], h[1]), G.inv(d[1]));
    if (G.inv(d[0]) != conj) return LinComb(f);
    return LinComb::basis(f, dl(G.op(h[0], G.inv(d[1])), conj));
  }
};

std::vector<Label> double_labels(const Group& G, std::int64_t w) {
  std::vector<Label> out;
  for (auto g : G.elements(w))
    for (auto h : G.elements(w)) out.push_back(dl(g, h));
  return out;
}

}  // namespace

TEST_CASE("double product, counit and antipode match the group closed forms") {
  for (auto G : {Group::zn(4), Group::sym(3)}) {
    DoubleSystem DS(group_pairing(G, F));
    GroupOracle O{G, F};
    auto labels = double_labels(G, 0);
    for (const auto& x : labels) {
      CHECK(DS.D.antipode(x) == O.s_dd(x));
      CHECK(DS.dd_antipode_alt(DS.D.basis(x)) == O.s_dd(x));
      CHECK(DS.D.antipode_inv_l(DS.D.antipode(x)) == DS.D.basis(x));
      CHECK(DS.D.counit(x) == (x[0] == G.id() ? Scalar::one(F) : Scalar::zero(F)));
      for (const auto& y : labels) {
        CHECK(DS.D.mul(x, y) == O.dd(x, y));
        CHECK(DS.dd_mul_twist(DS.D.basis(x), DS.D.basis(y)) == O.dd(x, y));
      }
    }
  }
}

TEST_CASE("double slices agree with the full comultiplication on finite groups") {
  for (auto G : {Group::zn(3), Group::sym(3)}) {
    DoubleSystem DS(group_pairing(G, F));
    auto ref = make_slice_from_delta(F, 2, DS.D.mul, DS.D.full_delta);
    auto labels = double_labels(G, 0);
    for (const auto& x : labels)
      for (const auto& c : labels)
        for (auto v : {Can::C1, Can::C2, Can::C3, Can::C4})
          CHECK(DS.D.slice(v, x, c) == ref(v, x, c));
  }
}

TEST_CASE("double slices on the integers hit the shifted closed forms") {
  DoubleSystem DS(group_pairing(Group::integers(), F));
  for (std::int64_t g = -2; g <= 2; ++g)
    for (std::int64_t h = -2; h <= 2; ++h)
      for (std::int64_t p = -2; p <= 2; ++p)
        for (std::int64_t q = -2; q <= 2; ++q) {
          Label x = dl(g, h), c = dl(p, q);
          LinComb lo = LinComb::basis(F, cat(dl(g - p, h), dl(p, h + q)));
          LinComb hi = LinComb::basis(F, cat(dl(p, q + h), dl(g - p, h)));
          CHECK(DS.D.slice(Can::C1, x, c) == lo);
          CHECK(DS.D.slice(Can::C2, x, c) == hi);
          CHECK(DS.D.slice(Can::C3, x, c) == flip(lo, 2));
          CHECK(DS.D.slice(Can::C4, x, c) == flip(hi, 2));
        }
}

TEST_CASE("covered coassociativity holds in the double") {
  std::mt19937_64 rng(11);
  for (auto G : {Group::zn(3), Group::sym(3)}) {
    DoubleSystem DS(group_pairing(G, F));
    auto labels = double_labels(G, 0);
    for (int k = 0; k < 60; ++k) {
      const auto& x = labels[rng() % labels.size()];
      const auto& c = labels[rng() % labels.size()];
      const auto& c2 = labels[rng() % labels.size()];
      LinComb lhs = slice_at(DS.D, Can::C2, DS.D.slice(Can::C1, x, c), 2, 0, DS.D.basis(c2));
      LinComb rhs = slice_at(DS.D, Can::C1, DS.D.slice(Can::C2, x, c2), 2, 1, DS.D.basis(c));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("twist maps invert each other") {
  std::mt19937_64 rng(12);
  for (auto G : {Group::sym(3), Group::integers()}) {
    DoubleSystem DS(group_pairing(G, F));
    auto els = G.elements(6);
    for (int k = 0; k < 80; ++k) {
      LinComb a = DS.A().basis({els[rng() % els.size()]});
      LinComb b = DS.B().basis({els[rng() % els.size()]});
      CHECK(DS.twist_t(DS.twist_t_inv(tensor(a, b))) == tensor(a, b));
      CHECK(DS.twist_t_inv(DS.twist_t(tensor(b, a))) == tensor(b, a));
      CHECK(DS.twist_r(DS.twist_r_inv(tensor(a, b))) == tensor(a, b));
      CHECK(DS.twist_r_inv(DS.twist_r(tensor(b, a))) == tensor(b, a));
    }
  }
}

TEST_CASE("companion product and action match the group closed forms") {
  Group G = Group::sym(3);
  DoubleSystem DS(group_pairing(G, F));
  GroupOracle O{G, F};
  auto labels = double_labels(G, 0);
  for (const auto& x : labels)
    for (const auto& y : labels) {
      CHECK(DS.hd_mul(DS.D.basis(x), DS.D.basis(y)) == O.hd(x, y));
      CHECK(DS.hd_action(DS.D.basis(x), DS.D.basis(y)) == O.hdact(x, y));
    }
}

TEST_CASE("the action respects the double product") {
  std::mt19937_64 rng(13);
  for (auto G : {Group::zn(3), Group::sym(3)}) {
    DoubleSystem DS(group_pairing(G, F));
    auto labels = double_labels(G, 0);
    for (int k = 0; k < 120; ++k) {
      LinComb d1 = DS.D.basis(labels[rng() % labels.size()]);
      LinComb d2 = DS.D.basis(labels[rng() % labels.size()]);
      LinComb h = DS.D.basis(labels[rng() % labels.size()]);
      CHECK(DS.hd_action(DS.D.mul_l(d1, d2), h) == DS.hd_action(d1, DS.hd_action(d2, h)));
    }
    for (int k = 0; k < 20; ++k) {
      LinComb h = DS.D.basis(labels[rng() % labels.size()]);
      CHECK(DS.hd_action(DS.hd_local_unit({h}), h) == h);
    }
  }
}

TEST_CASE("coaction slices match the group closed forms") {
  Group G = Group::sym(3);
  DoubleSystem DS(group_pairing(G, F));
  auto labels = double_labels(G, 0);
  auto mul = [&](std::int64_t a, std::int64_t b) { return G.op(a, b); };
  auto inv = [&](std::int64_t a) { return G.inv(a); };
  for (const auto& h : labels) {
    std::int64_t p = h[0], q = h[1];
    for (const auto& c : labels) {
      // Γ(δp#q)(1 ⊗ (δp'#q')) pins the H leg
      std::int64_t p2 = c[0], q2 = c[1];
      LinComb want = LinComb::basis(
          F, cat(dl(mul(mul(q, inv(p2)), p), q), dl(mul(p2, inv(q)), mul(q, q2))));
      CHECK(DS.coaction_hcov(DS.D.basis(h), DS.D.basis(c)) == want);

      // Γ(δp#q)((δg><h')⊗1) pins the double leg on the right
      std::int64_t g = c[0], h2 = c[1];
      LinComb wr = LinComb::basis(F, cat(dl(mul(mul(q, g), inv(q)), mul(q, h2)),
                                         dl(mul(p, mul(q, mul(inv(g), inv(q)))), q)));
      CHECK(DS.coaction_rcov(DS.D.basis(h), DS.D.basis(c)) == wr);

      // ((δg><h')⊗1)Γ(δp#q) pins it on the left
      LinComb wl = LinComb::basis(
          F, cat(dl(g, mul(h2, q)), dl(mul(p, mul(inv(h2), mul(inv(g), h2))), q)));
      CHECK(DS.coaction_lcov(DS.D.basis(c), DS.D.basis(h)) == wl);

      // folding the counit through the coaction recovers the product
      LinComb fold(F);
      for (const auto& [l, co] : DS.coaction_hcov(DS.D.basis(h), DS.D.basis(c))) {
        auto [d, k] = split(l, 2);
        fold += LinComb::basis(F, k).scaled(co * DS.D.counit(d));
      }
      CHECK(fold == DS.hd_mul(DS.D.basis(h), DS.D.basis(c)));
    }
  }
}

TEST_CASE("restricted actions and coactions match the group closed forms") {
  Group G = Group::sym(3);
  DoubleSystem DS(group_pairing(G, F));
  auto labels = double_labels(G, 0);
  for (const auto& d : labels) {
    std::int64_t g = d[0], h = d[1];
    for (auto p : G.elements(0)) {
      LinComb wa = g == G.id() ? DS.A().basis({G.op(p, G.inv(h))}) : DS.A().zero();
      CHECK(DS.act_on_a(DS.D.basis(d), DS.A().basis({p})) == wa);
      auto conj = G.op(G.op(h, p), G.inv(h));
      LinComb wb = G.inv(g) == conj ? DS.B().basis({conj}) : DS.B().zero();
      CHECK(DS.act_on_b(DS.D.basis(d), DS.B().basis({p})) == wb);
      CHECK(DS.coact_a_rcov(DS.A().basis({p}), DS.D.basis(d)) ==
            tensor(DS.D.basis(d), DS.A().basis({G.op(p, G.inv(g))})));
      CHECK(DS.coact_b_rcov(DS.B().basis({p}), DS.D.basis(d)) ==
            tensor(tensor(DS.A().basis({G.op(G.op(p, g), G.inv(p))}),
                          DS.B().basis({G.op(p, h)})),
                   DS.B().basis({p})));
    }
  }
}

TEST_CASE("the braided product rebuilds the companion product") {
  Group G = Group::sym(3);
  DoubleSystem DS(group_pairing(G, F));
  auto labels = double_labels(G, 0);
  for (const auto& x : labels)
    for (const auto& y : labels)
      CHECK(DS.braided_mul(DS.D.basis(x), DS.D.basis(y)) ==
            DS.hd_mul(DS.D.basis(x), DS.D.basis(y)));
}

TEST_CASE("braided commutativity through the coaction") {
  std::mt19937_64 rng(14);
  Group G = Group::sym(3);
  DoubleSystem DS(group_pairing(G, F));
  auto labels = double_labels(G, 0);
  for (int k = 0; k < 100; ++k) {
    LinComb y = DS.D.basis(labels[rng() % labels.size()]);
    LinComb x = DS.D.basis(labels[rng() % labels.size()]);
    LinComb u = DS.hd_local_unit({x});
    LinComb rhs(F);
    for (const auto& [l, c] : DS.coaction_rcov(y, u)) {
      auto [d, y0] = split(l, 2);
      rhs += DS.hd_mul(DS.hd_action(DS.D.basis(d), x), DS.D.basis(y0)).scaled(c);
    }
    CHECK(DS.hd_mul(y, x) == rhs);
  }
}

TEST_CASE("compatibility of action and coaction on random group samples") {
  std::mt19937_64 rng(15);
  Group G = Group::sym(3);
  DoubleSystem DS(group_pairing(G, F));
  auto labels = double_labels(G, 0);
  int nonzero = 0;
  for (int k = 0; k < 60; ++k) {
    Label a = labels[rng() % labels.size()];
    LinComb v = DS.D.basis(labels[rng() % labels.size()]);
    Label c = labels[rng() % labels.size()];
    LinComb lhs(F), rhs(F);
    for (const auto& [l, co] : DS.D.slice(Can::C1, a, c)) {
      auto [d1, e] = split(l, 2);
      lhs += DS.coaction_rcov(DS.hd_action(DS.D.basis(d1), v), DS.D.basis(e)).scaled(co);
    }
    for (const auto& [l, co] : DS.coaction_rcov(v, DS.D.basis(c))) {
      auto [g, w] = split(l, 2);
      for (const auto& [l2, c2] : DS.D.slice(Can::C3, a, g)) {
        auto [h1, h2] = split(l2, 2);
        rhs += tensor(DS.D.basis(h1), DS.hd_action(DS.D.basis(h2), DS.D.basis(w)))
                   .scaled(co * c2);
      }
    }
    CHECK(lhs == rhs);
    if (lhs.size() > 0) ++nonzero;
  }
  CHECK(nonzero > 0);
}

TEST_CASE("corrupted constructions break the identities they target") {
  Group G = Group::sym(3);
  auto P = group_pairing(G, F);
  DoubleSystem honest(P);
  auto labels = double_labels(G, 0);

  DoubleSystem broken_act(P, Corrupt::DropAntipodeInAction);
  bool act_differs = false;
  for (const auto& x : labels)
    for (const auto& y : labels)
      if (broken_act.hd_action(honest.D.basis(x), honest.D.basis(y)) !=
          honest.hd_action(honest.D.basis(x), honest.D.basis(y)))
        act_differs = true;
  CHECK(act_differs);

  DoubleSystem broken_cop(P, Corrupt::DeltaNotCop);
  bool slice_differs = false;
  for (const auto& x : labels)
    for (const auto& c : labels)
      if (broken_cop.D.slice(Can::C1, x, c) != honest.D.slice(Can::C1, x, c))
        slice_differs = true;
  CHECK(slice_differs);

  // the corrupted coproduct still has to satisfy coassociativity on its own
  auto ref = make_slice_from_delta(F, 2, broken_cop.D.mul, broken_cop.D.full_delta);
  for (const auto& x : labels)
    for (const auto& c : labels)
      for (auto v : {Can::C1, Can::C2, Can::C3, Can::C4})
        CHECK(broken_cop.D.slice(v, x, c) == ref(v, x, c));
}

TEST_CASE("double routes agree on the q-deformed pair") {
  std::mt19937_64 rng(16);
  for (auto T : {TaftParams::resolve(2, 1, Field::rationals()),
                 TaftParams::resolve(3, 1, Field::prime(7))}) {
    DoubleSystem DS(taft_pairing(T));
    auto wa = DS.A().window_labels(3);
    auto wb = DS.B().window_labels(3);
    auto pick = [&]() { return cat(wa[rng() % wa.size()], wb[rng() % wb.size()]); };

    for (int k = 0; k < 25; ++k) {
      LinComb x = DS.D.basis(pick()), y = DS.D.basis(pick());
      CHECK(DS.dd_mul_twist(x, y) == DS.D.mul_l(x, y));
      CHECK(DS.D.counit_l(DS.D.mul_l(x, y)) == DS.D.counit_l(x) * DS.D.counit_l(y));
    }
    for (int k = 0; k < 20; ++k) {
      LinComb x = DS.D.basis(pick());
      CHECK(DS.D.antipode_l(x) == DS.dd_antipode_alt(x));
      CHECK(DS.D.antipode_inv_l(DS.D.antipode_l(x)) == x);
    }
    for (int k = 0; k < 15; ++k) {
      Label x = pick(), c = pick(), c2 = pick();
      LinComb lhs = slice_at(DS.D, Can::C2, DS.D.slice(Can::C1, x, c), 2, 0, DS.D.basis(c2));
      LinComb rhs = slice_at(DS.D, Can::C1, DS.D.slice(Can::C2, x, c2), 2, 1, DS.D.basis(c));
      CHECK(lhs == rhs);
    }
    for (int k = 0; k < 15; ++k) {
      LinComb x = DS.D.basis(pick()), y = DS.D.basis(pick()), z = DS.D.basis(pick());
      CHECK(DS.hd_mul(DS.hd_mul(x, y), z) == DS.hd_mul(x, DS.hd_mul(y, z)));
      CHECK(DS.hd_action(DS.D.mul_l(x, y), z) == DS.hd_action(x, DS.hd_action(y, z)));
    }
    for (int k = 0; k < 12; ++k) {
      LinComb x = DS.D.basis(pick()), y = DS.D.basis(pick());
      CHECK(DS.braided_mul(x, y) == DS.hd_mul(x, y));
    }
    for (int k = 0; k < 10; ++k) {
      LinComb tw = tensor(DS.B().basis(wb[rng() % wb.size()]),
                          DS.A().basis(wa[rng() % wa.size()]));
      CHECK(DS.twist_t_inv(DS.twist_t(tw)) == tw);
      CHECK(DS.twist_r_inv(DS.twist_r(tw)) == tw);
    }
  }
}

TEST_CASE("twist slices on the q-deformed double line up with the full route") {
  // m = 2 over the rationals is small enough to spot-check the coaction
  // compatibility equation exactly
  std::mt19937_64 rng(17);
  DoubleSystem DS(taft_pairing(TaftParams::resolve(2, 1, Field::rationals())));
  auto wa = DS.A().window_labels(2);
  auto wb = DS.B().window_labels(2);
  auto pick = [&]() { return cat(wa[rng() % wa.size()], wb[rng() % wb.size()]); };
  for (int k = 0; k < 8; ++k) {
    Label a = pick();
    LinComb v = DS.D.basis(pick());
    Label c = pick();
    LinComb lhs(DS.field()), rhs(DS.field());
    for (const auto& [l, co] : DS.D.slice(Can::C1, a, c)) {
      auto [d1, e] = split(l, 4);
      lhs += DS.coaction_rcov(DS.hd_action(DS.D.basis(d1), v), DS.D.basis(e)).scaled(co);
    }
    for (const auto& [l, co] : DS.coaction_rcov(v, DS.D.basis(c))) {
      auto [g, w] = split(l, 4);
      for (const auto& [l2, c2] : DS.D.slice(Can::C3, a, g)) {
        auto [h1, h2] = split(l2, 4);
        rhs += tensor(DS.D.basis(h1), DS.hd_action(DS.D.basis(h2), DS.D.basis(w)))
                   .scaled(co * c2);
      }
    }
    CHECK(lhs == rhs);
  }
}
