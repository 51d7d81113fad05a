#include "verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <random>
#include <tuple>
#include <utility>

#include "errors.hpp"
#include "group.hpp"
#include "group_instance.hpp"
#include "taft.hpp"

namespace mhd {
namespace {

Field parse_field(const std::string& s) {
  if (s.empty() || s == "rational") return Field::rationals();
  if (s.rfind("fq:", 0) == 0) {
    std::int64_t q = 0;
    try {
      q = std::stoll(s.substr(3));
    } catch (const std::exception&) {
      throw ConfigError("bad field: " + s);
    }
    if (q < 2) throw ConfigError("field characteristic must be at least 2");
    return Field::prime(static_cast<std::uint64_t>(q));
  }
  throw ConfigError("unknown field: " + s);
}

std::string raw_label(const Label& l) {
  std::string s = "[";
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(l[i]);
  }
  return s + "]";
}

std::string raw_terms(const LinComb& x) { return x.str(raw_label); }

struct Built {
  DoubleSystem DS;
  bool is_group = false;
  bool exhaustive = false;
  Group G{};
  std::int64_t window = 8;
  std::int64_t count = 300;     // randomized tuples per check
  std::int64_t rt_count = 1000; // round trip samples
  std::uint64_t seed = 1;
  std::vector<Label> pa, pb, pd;
  Label a0, b0, d0;
  std::int64_t taft_m = 0, taft_i = 0;
  std::string lambda_str;

  explicit Built(DoubleSystem ds) : DS(std::move(ds)) {}
};

Label counital_anchor(const MhaPresentation& P, const std::vector<Label>& pool) {
  for (const auto& l : pool)
    if (P.counit(l) != Scalar::zero(P.field)) return l;
  return pool.front();
}

// the double's product and slices are costly to derive, so cache them by label
void memoize_presentation(MhaPresentation& P) {
  auto mc = std::make_shared<std::map<std::pair<Label, Label>, LinComb>>();
  auto inner_mul = P.mul;
  P.mul = [mc, inner_mul](const Label& x, const Label& y) {
    auto key = std::make_pair(x, y);
    auto it = mc->find(key);
    if (it == mc->end()) it = mc->emplace(key, inner_mul(x, y)).first;
    return it->second;
  };
  auto sc = std::make_shared<std::map<std::tuple<int, Label, Label>, LinComb>>();
  auto inner_slice = P.slice;
  P.slice = [sc, inner_slice](Can v, const Label& x, const Label& c) {
    auto key = std::make_tuple(static_cast<int>(v), x, c);
    auto it = sc->find(key);
    if (it == sc->end()) it = sc->emplace(key, inner_slice(v, x, c)).first;
    return it->second;
  };
  auto wrap1 = [](std::function<LinComb(const Label&)> inner) {
    auto cache = std::make_shared<std::map<Label, LinComb>>();
    return [cache, inner](const Label& x) {
      auto it = cache->find(x);
      if (it == cache->end()) it = cache->emplace(x, inner(x)).first;
      return it->second;
    };
  };
  P.antipode = wrap1(P.antipode);
  P.antipode_inv = wrap1(P.antipode_inv);
  if (P.full_delta) P.full_delta = wrap1(P.full_delta);
}

Built build(const RunConfig& cfg) {
  const Field F = parse_field(cfg.field);
  const Corrupt mode = parse_corrupt(cfg.corrupt);
  if (cfg.window < 1) throw ConfigError("window must be positive");
  if (cfg.instance == "group") {
    Group G = Group::parse(cfg.group);
    Built bi(DoubleSystem(group_pairing(G, F), mode));
    memoize_presentation(bi.DS.D);
    bi.is_group = true;
    bi.G = G;
    bi.exhaustive = G.finite() && G.order <= 6 && cfg.samples <= 0;
    bi.window = cfg.window;
    if (cfg.samples > 0) bi.count = cfg.samples;
    bi.rt_count = cfg.samples > 0 ? cfg.samples : 1000;
    bi.seed = cfg.seed;
    const std::int64_t w = G.finite() ? 0 : cfg.window;
    bi.pa = bi.DS.A().window_labels(w);
    bi.pb = bi.DS.B().window_labels(w);
    bi.pd = bi.DS.D.window_labels(w);
    bi.a0 = counital_anchor(bi.DS.A(), bi.pa);
    bi.b0 = bi.DS.B().unit;
    bi.d0 = cat(bi.a0, bi.b0);
    return bi;
  }
  if (cfg.instance == "qtaft") {
    TaftParams T = cfg.taft_lambda.empty()
                       ? TaftParams::resolve(cfg.taft_m, cfg.taft_i, F)
                       : TaftParams(cfg.taft_m, cfg.taft_i, F,
                                    Scalar::parse(F, cfg.taft_lambda));
    Built bi(DoubleSystem(taft_pairing(T), mode));
    memoize_presentation(bi.DS.D);
    bi.window = cfg.window;
    if (cfg.samples > 0) {
      bi.count = cfg.samples;
      bi.rt_count = cfg.samples;
    } else {
      bi.count = 150;
    }
    bi.seed = cfg.seed;
    bi.pa = bi.DS.A().window_labels(cfg.window);
    bi.pb = bi.DS.B().window_labels(cfg.window);
    bi.pd = bi.DS.D.window_labels(cfg.window);
    bi.a0 = counital_anchor(bi.DS.A(), bi.pa);
    bi.b0 = bi.DS.B().unit;
    bi.d0 = cat(bi.a0, bi.b0);
    bi.taft_m = T.m;
    bi.taft_i = T.i;
    bi.lambda_str = T.lambda.str();
    return bi;
  }
  throw ConfigError("unknown instance: " + cfg.instance);
}

std::uint64_t mix_seed(std::uint64_t seed, const std::string& name) {
  std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ull;
  for (unsigned char ch : name) h = (h ^ ch) * 0x100000001b3ull;
  return h ? h : 1;
}

using Tuple = std::vector<Label>;

std::vector<Tuple> make_plan(const Built& bi, const std::string& check,
                             const std::vector<const std::vector<Label>*>& pools,
                             const Tuple& anchor, std::int64_t count) {
  std::vector<Tuple> out;
  if (bi.exhaustive) {
    std::vector<std::size_t> idx(pools.size(), 0);
    bool done = false;
    while (!done) {
      Tuple t;
      t.reserve(pools.size());
      for (std::size_t j = 0; j < pools.size(); ++j) t.push_back((*pools[j])[idx[j]]);
      out.push_back(std::move(t));
      done = true;
      for (std::size_t j = pools.size(); j-- > 0;) {
        if (++idx[j] < pools[j]->size()) {
          done = false;
          break;
        }
        idx[j] = 0;
      }
    }
    return out;
  }
  std::mt19937_64 rng(mix_seed(bi.seed, check));
  out.push_back(anchor);
  for (std::int64_t n = 1; n < count; ++n) {
    Tuple t;
    t.reserve(pools.size());
    for (const auto* p : pools)
      t.push_back((*p)[static_cast<std::size_t>(rng() % p->size())]);
    out.push_back(std::move(t));
  }
  return out;
}

struct Ctx {
  Field F;
  CheckReport rep;
  bool cur = false;
  std::string cur_inputs;

  Ctx(const Field& f, std::string name) : F(f) { rep.name = std::move(name); }

  void begin(std::string inputs) {
    ++rep.samples;
    cur = false;
    cur_inputs = std::move(inputs);
  }
  void end() {
    if (cur) ++rep.active;
  }
  void record_fail(const std::string& l, const std::string& r) {
    rep.pass = false;
    ++rep.failure_count;
    if (rep.failures.size() < 3) rep.failures.push_back({cur_inputs, l, r});
  }
  template <class Sh>
  void eq(const LinComb& l, const LinComb& r, Sh&& sh) {
    if (l.size() || r.size()) cur = true;
    if (!(l == r)) record_fail(sh(l), sh(r));
  }
  void eq_scalar(const Scalar& l, const Scalar& r) {
    const Scalar z = Scalar::zero(F);
    if (l != z || r != z) cur = true;
    if (!(l == r)) record_fail(l.str(), r.str());
  }
};

struct Memo {
  const DoubleSystem& DS;
  std::map<std::pair<Label, Label>, LinComb> dd_, hd_, act_, braid_, hcov_;
  std::map<std::pair<Label, Label>, LinComb> lcov_, rcov_, carcov_, cbrcov_, aona_,
      aonb_;
  std::map<Label, LinComb> aunit_, bunit_, hdunit_;

  explicit Memo(const DoubleSystem& ds) : DS(ds) {}

  template <class F>
  const LinComb& get(std::map<std::pair<Label, Label>, LinComb>& m, const Label& x,
                     const Label& y, F&& f) {
    auto key = std::make_pair(x, y);
    auto it = m.find(key);
    if (it == m.end()) it = m.emplace(key, f(x, y)).first;
    return it->second;
  }
  const LinComb& dd(const Label& x, const Label& y) {
    return get(dd_, x, y, [&](const Label& a, const Label& b) { return DS.D.mul(a, b); });
  }
  const LinComb& hd(const Label& x, const Label& y) {
    return get(hd_, x, y, [&](const Label& a, const Label& b) {
      return DS.hd_mul(DS.D.basis(a), DS.D.basis(b));
    });
  }
  const LinComb& act(const Label& d, const Label& h) {
    return get(act_, d, h, [&](const Label& a, const Label& b) {
      return DS.hd_action(DS.D.basis(a), DS.D.basis(b));
    });
  }
  const LinComb& braid(const Label& x, const Label& y) {
    return get(braid_, x, y, [&](const Label& a, const Label& b) {
      return DS.braided_mul(DS.D.basis(a), DS.D.basis(b));
    });
  }
  const LinComb& hcov(const Label& h, const Label& h2) {
    return get(hcov_, h, h2, [&](const Label& a, const Label& b) {
      return DS.coaction_hcov(DS.D.basis(a), DS.D.basis(b));
    });
  }
  const LinComb& lcov(const Label& dc, const Label& h) {
    return get(lcov_, dc, h, [&](const Label& a, const Label& b) {
      return DS.coaction_lcov(DS.D.basis(a), DS.D.basis(b));
    });
  }
  const LinComb& rcov(const Label& h, const Label& dc) {
    return get(rcov_, h, dc, [&](const Label& a, const Label& b) {
      return DS.coaction_rcov(DS.D.basis(a), DS.D.basis(b));
    });
  }
  const LinComb& carcov(const Label& a, const Label& dc) {
    return get(carcov_, a, dc, [&](const Label& x, const Label& y) {
      return DS.coact_a_rcov(DS.A().basis(x), DS.D.basis(y));
    });
  }
  const LinComb& cbrcov(const Label& b, const Label& dc) {
    return get(cbrcov_, b, dc, [&](const Label& x, const Label& y) {
      return DS.coact_b_rcov(DS.B().basis(x), DS.D.basis(y));
    });
  }
  const LinComb& aona(const Label& d, const Label& a) {
    return get(aona_, d, a, [&](const Label& x, const Label& y) {
      return DS.act_on_a(DS.D.basis(x), DS.A().basis(y));
    });
  }
  const LinComb& aonb(const Label& d, const Label& b) {
    return get(aonb_, d, b, [&](const Label& x, const Label& y) {
      return DS.act_on_b(DS.D.basis(x), DS.B().basis(y));
    });
  }

  LinComb dd_ll(const LinComb& x, const LinComb& y) {
    LinComb out(DS.field());
    for (const auto& [xl, cx] : x.terms())
      for (const auto& [yl, cy] : y.terms()) out += dd(xl, yl).scaled(cx * cy);
    return out;
  }
  LinComb hd_ll(const LinComb& x, const LinComb& y) {
    LinComb out(DS.field());
    for (const auto& [xl, cx] : x.terms())
      for (const auto& [yl, cy] : y.terms()) out += hd(xl, yl).scaled(cx * cy);
    return out;
  }
  LinComb act_ll(const LinComb& d, const LinComb& h) {
    LinComb out(DS.field());
    for (const auto& [dl, cd] : d.terms())
      for (const auto& [hl, ch] : h.terms()) out += act(dl, hl).scaled(cd * ch);
    return out;
  }
  LinComb lcov_ll(const LinComb& dc, const LinComb& h) {
    LinComb out(DS.field());
    for (const auto& [dl, cd] : dc.terms())
      for (const auto& [hl, ch] : h.terms()) out += lcov(dl, hl).scaled(cd * ch);
    return out;
  }
  LinComb rcov_ll(const LinComb& h, const LinComb& dc) {
    LinComb out(DS.field());
    for (const auto& [hl, ch] : h.terms())
      for (const auto& [dl, cd] : dc.terms()) out += rcov(hl, dl).scaled(ch * cd);
    return out;
  }
  LinComb carcov_ll(const LinComb& a, const LinComb& dc) {
    LinComb out(DS.field());
    for (const auto& [al, ca] : a.terms())
      for (const auto& [dl, cd] : dc.terms()) out += carcov(al, dl).scaled(ca * cd);
    return out;
  }
  LinComb cbrcov_ll(const LinComb& b, const LinComb& dc) {
    LinComb out(DS.field());
    for (const auto& [bl, cb] : b.terms())
      for (const auto& [dl, cd] : dc.terms()) out += cbrcov(bl, dl).scaled(cb * cd);
    return out;
  }

  const LinComb& aunit(const Label& xa) {
    auto it = aunit_.find(xa);
    if (it == aunit_.end())
      it = aunit_
               .emplace(xa, DS.action_local_unit(
                                [this](const LinComb& d, const LinComb& a) {
                                  return DS.act_on_a(d, a);
                                },
                                {DS.A().basis(xa)}))
               .first;
    return it->second;
  }
  const LinComb& bunit(const Label& xb) {
    auto it = bunit_.find(xb);
    if (it == bunit_.end())
      it = bunit_
               .emplace(xb, DS.action_local_unit(
                                [this](const LinComb& d, const LinComb& b) {
                                  return DS.act_on_b(d, b);
                                },
                                {DS.B().basis(xb)}))
               .first;
    return it->second;
  }
  const LinComb& hdunit(const Label& h) {
    auto it = hdunit_.find(h);
    if (it == hdunit_.end())
      it = hdunit_.emplace(h, DS.hd_local_unit({DS.D.basis(h)})).first;
    return it->second;
  }
};

std::int64_t label_window(std::initializer_list<const Label*> ls) {
  std::int64_t w = 1;
  for (const auto* l : ls)
    for (auto e : *l) w = std::max<std::int64_t>(w, std::llabs(e) + 2);
  return w;
}

std::string h_str(const DoubleSystem& DS, const LinComb& x) { return DS.show_h(x); }

// Hopf axioms checked through the covered interface, on any presentation
void axiom_block(const MhaPresentation& P, const std::vector<Tuple>& plan, Ctx& c) {
  const Field F = P.field;
  auto sh = [&P](const LinComb& x) { return P.show(x); };
  std::map<std::pair<Label, Label>, LinComb> c1cache, c2cache, mulcache;
  auto cached = [](std::map<std::pair<Label, Label>, LinComb>& m, const Label& x,
                   const Label& y,
                   const std::function<LinComb(const Label&, const Label&)>& f)
      -> const LinComb& {
    auto key = std::make_pair(x, y);
    auto it = m.find(key);
    if (it == m.end()) it = m.emplace(key, f(x, y)).first;
    return it->second;
  };
  auto C1 = [&](const Label& x, const Label& y) -> const LinComb& {
    return cached(c1cache, x, y,
                  [&P](const Label& a, const Label& b) { return P.slice(Can::C1, a, b); });
  };
  auto C2 = [&](const Label& x, const Label& y) -> const LinComb& {
    return cached(c2cache, x, y,
                  [&P](const Label& a, const Label& b) { return P.slice(Can::C2, a, b); });
  };
  auto MUL = [&](const Label& x, const Label& y) -> const LinComb& {
    return cached(mulcache, x, y,
                  [&P](const Label& a, const Label& b) { return P.mul(a, b); });
  };
  for (const auto& t : plan) {
    const Label &x = t[0], &y = t[1], &z = t[2];
    c.begin("x=" + P.label_str(x) + " y=" + P.label_str(y) + " z=" + P.label_str(z));
    c.eq(P.mul_l(MUL(x, y), P.basis(z)), P.mul_l(P.basis(x), MUL(y, z)), sh);
    c.eq_scalar(P.counit_l(MUL(x, y)), P.counit(x) * P.counit(y));
    c.eq(P.antipode_l(MUL(x, y)), P.mul_l(P.antipode(y), P.antipode(x)), sh);
    c.eq(P.antipode_inv_l(P.antipode(x)), P.basis(x), sh);
    c.eq(P.antipode_l(P.antipode_inv(x)), P.basis(x), sh);
    if (P.unital) {
      c.eq(P.mul(P.unit, x), P.basis(x), sh);
      c.eq(P.mul(x, P.unit), P.basis(x), sh);
    } else if (P.local_unit) {
      LinComb e = P.local_unit({x});
      c.eq(P.mul_l(e, P.basis(x)), P.basis(x), sh);
      c.eq(P.mul_l(P.basis(x), e), P.basis(x), sh);
    }
    // coassociativity through covered slices
    c.eq(slice_at(P, Can::C2, C1(x, y), 2, 0, P.basis(z)),
         slice_at(P, Can::C1, C2(x, z), 2, 1, P.basis(y)), raw_terms);
    // the counit collapses either covered leg
    {
      LinComb f1(F), f2(F);
      for (const auto& [l, cf] : C1(x, y)) {
        auto [u, v] = split(l, P.arity);
        f1 += P.basis(u).scaled(P.counit(v) * cf);
      }
      c.eq(f1, P.basis(x).scaled(P.counit(y)), sh);
      for (const auto& [l, cf] : C2(x, y)) {
        auto [u, v] = split(l, P.arity);
        f2 += P.basis(v).scaled(P.counit(u) * cf);
      }
      c.eq(f2, P.basis(x).scaled(P.counit(y)), sh);
    }
    // folding the antipode over a covered slice recovers the counit, twice over
    {
      LinComb s1(F);
      for (const auto& [l, cf] : C1(x, y)) {
        auto [u, v] = split(l, P.arity);
        s1 += P.mul_l(P.antipode(u), P.basis(v)).scaled(cf);
      }
      c.eq(s1, P.basis(y).scaled(P.counit(x)), sh);
      c.eq(fold_mul(peel_r_sc(P, P.basis(x), P.basis(y)), P.arity, P.mul),
           P.basis(y).scaled(P.counit(x)), sh);
    }
    // comultiplication respects the product
    c.eq(P.slice_l(Can::C1, MUL(x, y), P.basis(z)),
         delta_mul_left(P, P.basis(x), C1(y, z)), raw_terms);
    c.eq(P.slice_l(Can::C2, MUL(x, y), P.basis(z)),
         delta_mul_right(P, C2(x, z), P.basis(y)), raw_terms);
    // both Galois maps invert
    c.eq(gal1_inv(P, C1(x, y)), tensor(P.basis(x), P.basis(y)), raw_terms);
    c.eq(gal3_inv(P, C2(y, x)), tensor(P.basis(x), P.basis(y)), raw_terms);
    // slices against the full comultiplication where one exists
    if (P.full_delta) {
      LinComb r1(F), r2(F);
      for (const auto& [l, cf] : P.full_delta(x)) {
        auto [u, v] = split(l, P.arity);
        r1 += tensor(P.basis(u), P.mul(v, y)).scaled(cf);
        r2 += tensor(P.mul(y, u), P.basis(v)).scaled(cf);
      }
      c.eq(r1, C1(x, y), raw_terms);
      c.eq(r2, C2(x, y), raw_terms);
    }
    c.end();
  }
}

CheckReport run_axioms(const Built& bi, const MhaPresentation& P,
                       const std::vector<Label>& pool, const Label& anchor,
                       const std::string& name) {
  Ctx c(P.field, name);
  auto plan = make_plan(bi, name, {&pool, &pool, &pool}, {anchor, anchor, anchor},
                        bi.count);
  axiom_block(P, plan, c);
  return c.rep;
}

CheckReport run_pairing(const Built& bi, Memo&) {
  const PairedSystem& S = *bi.DS.S;
  const Field F = S.A.field;
  Ctx c(F, "pairing_duality");
  auto plan = make_plan(bi, c.rep.name, {&bi.pa, &bi.pa, &bi.pb, &bi.pb},
                        {bi.a0, bi.a0, bi.b0, bi.b0}, bi.count);
  auto shA = [&S](const LinComb& x) { return S.A.show(x); };
  auto shB = [&S](const LinComb& x) { return S.B.show(x); };
  auto pair2 = [&](const LinComb& t, const Label& b, const Label& b2) {
    Scalar s = Scalar::zero(F);
    for (const auto& [l, cf] : t) {
      auto [u, v] = split(l, S.A.arity);
      s += S.pair(u, b) * S.pair(v, b2) * cf;
    }
    return s;
  };
  for (const auto& t : plan) {
    const Label &a = t[0], &a2 = t[1], &b = t[2], &b2 = t[3];
    c.begin("a=" + S.A.label_str(a) + " a'=" + S.A.label_str(a2) +
            " b=" + S.B.label_str(b) + " b'=" + S.B.label_str(b2));
    // the product on one side dualizes the comultiplication on the other
    c.eq_scalar(S.pair_l(S.A.basis(a), S.B.mul(b, b2)),
                S.pair_l(S.ract_ab(a, b), S.B.basis(b2)));
    c.eq_scalar(S.pair_l(S.A.basis(a), S.B.mul(b, b2)),
                S.pair_l(S.act_ba(b2, a), S.B.basis(b)));
    {
      Scalar rhs = Scalar::zero(F);
      for (const auto& [l, cf] : S.B.delta_l(S.B.basis(b))) {
        auto [u, v] = split(l, S.B.arity);
        rhs += S.pair(a, u) * S.pair(a2, v) * cf;
      }
      c.eq_scalar(S.pair_l(S.A.mul(a, a2), S.B.basis(b)), rhs);
    }
    // antipodes are adjoint
    c.eq_scalar(S.pair_l(S.A.antipode(a), S.B.basis(b)),
                S.pair_l(S.A.basis(a), S.B.antipode(b)));
    c.eq_scalar(S.pair_l(S.A.antipode_inv(a), S.B.basis(b)),
                S.pair_l(S.A.basis(a), S.B.antipode_inv(b)));
    // the unit pairs as the counit
    c.eq_scalar(S.pair_l(S.A.basis(a), S.B.unit_el()), S.A.counit(a));
    // the closed-form actions satisfy their defining contractions
    c.eq(S.A.mul_l(S.act_ba(b, a), S.A.basis(a2)),
         act_ba_on_cover(S, S.B.basis(b), S.A.basis(a), S.A.basis(a2)), shA);
    c.eq(S.A.mul_l(S.ract_ab(a, b), S.A.basis(a2)),
         ract_ab_on_cover(S, S.A.basis(a), S.B.basis(b), S.A.basis(a2)), shA);
    c.eq(S.B.mul_l(S.act_ab(a, b), S.B.basis(b2)),
         act_ab_on_cover(S, S.A.basis(a), S.B.basis(b), S.B.basis(b2)), shB);
    c.eq(S.B.mul_l(S.ract_ba(b, a), S.B.basis(b2)),
         ract_ba_on_cover(S, S.B.basis(b), S.A.basis(a), S.B.basis(b2)), shB);
    // every covered slice pairs to the matching comultiplication pattern
    {
      Scalar r1 = Scalar::zero(F), r2 = r1, r3 = r1, r4 = r1;
      for (const auto& [l, cf] : S.B.delta_l(S.B.basis(b2))) {
        auto [u, v] = split(l, S.B.arity);
        r1 += S.pair_l(S.A.basis(a), S.B.mul(b, u)) * S.pair(a2, v) * cf;
        r4 += S.pair(a2, u) * S.pair_l(S.A.basis(a), S.B.mul(b, v)) * cf;
      }
      for (const auto& [l, cf] : S.B.delta_l(S.B.basis(b))) {
        auto [u, v] = split(l, S.B.arity);
        r2 += S.pair(a2, u) * S.pair_l(S.A.basis(a), S.B.mul(v, b2)) * cf;
        r3 += S.pair(a2, v) * S.pair_l(S.A.basis(a), S.B.mul(u, b2)) * cf;
      }
      c.eq_scalar(pair2(S.A.slice(Can::C1, a, a2), b, b2), r1);
      c.eq_scalar(pair2(S.A.slice(Can::C2, a, a2), b, b2), r2);
      c.eq_scalar(pair2(S.A.slice(Can::C3, a, a2), b, b2), r3);
      c.eq_scalar(pair2(S.A.slice(Can::C4, a, a2), b, b2), r4);
    }
    c.end();
  }
  return c.rep;
}

CheckReport run_round_trips(const Built& bi, Memo&) {
  const DoubleSystem& DS = bi.DS;
  const MhaPresentation &A = DS.A(), &B = DS.B();
  Ctx c(A.field, "round_trips");
  std::vector<Tuple> plan;
  {
    std::mt19937_64 rng(mix_seed(bi.seed, c.rep.name));
    plan.push_back({bi.a0, bi.a0, bi.b0, bi.b0});
    for (std::int64_t n = 1; n < bi.rt_count; ++n)
      plan.push_back({bi.pa[rng() % bi.pa.size()], bi.pa[rng() % bi.pa.size()],
                      bi.pb[rng() % bi.pb.size()], bi.pb[rng() % bi.pb.size()]});
  }
  auto fwd1 = [](const MhaPresentation& P, const LinComb& t) {
    LinComb r(P.field);
    for (const auto& [l, cf] : t) {
      auto [u, v] = split(l, P.arity);
      r += P.slice(Can::C1, u, v).scaled(cf);
    }
    return r;
  };
  auto fwd2 = [](const MhaPresentation& P, const LinComb& t) {
    // (x⊗y) ↦ (x⊗1)Δ(y)
    LinComb r(P.field);
    for (const auto& [l, cf] : t) {
      auto [u, v] = split(l, P.arity);
      r += P.slice(Can::C2, v, u).scaled(cf);
    }
    return r;
  };
  for (const auto& t : plan) {
    const Label &a = t[0], &a2 = t[1], &b = t[2], &b2 = t[3];
    c.begin("a=" + A.label_str(a) + " a'=" + A.label_str(a2) + " b=" + B.label_str(b) +
            " b'=" + B.label_str(b2));
    for (int side = 0; side < 2; ++side) {
      const MhaPresentation& P = side == 0 ? A : B;
      const Label &x = side == 0 ? a : b, &y = side == 0 ? a2 : b2;
      LinComb xy = tensor(P.basis(x), P.basis(y));
      LinComb g1 = fwd1(P, xy), g2 = fwd2(P, xy);
      c.eq(gal1_inv(P, g1), xy, raw_terms);
      c.eq(fwd1(P, gal1_inv(P, g1)), g1, raw_terms);
      c.eq(gal3_inv(P, g2), xy, raw_terms);
      c.eq(fwd2(P, gal3_inv(P, g2)), g2, raw_terms);
    }
    LinComb ba = tensor(B.basis(b), A.basis(a));
    LinComb ab = tensor(A.basis(a), B.basis(b));
    c.eq(DS.twist_t_inv(DS.twist_t(ba)), ba, raw_terms);
    c.eq(DS.twist_t(DS.twist_t_inv(ab)), ab, raw_terms);
    c.eq(DS.twist_r_inv(DS.twist_r(ba)), ba, raw_terms);
    c.eq(DS.twist_r(DS.twist_r_inv(ab)), ab, raw_terms);
    c.end();
  }
  return c.rep;
}

CheckReport run_dd_consistency(const Built& bi, Memo& mm) {
  const DoubleSystem& DS = bi.DS;
  const MhaPresentation& D = DS.D;
  const Field F = D.field;
  Ctx c(F, "dd_consistency");
  auto plan = make_plan(bi, c.rep.name, {&bi.pd, &bi.pd}, {bi.d0, bi.d0}, bi.count);
  auto sh = [&D](const LinComb& x) { return D.show(x); };
  for (const auto& t : plan) {
    const Label &x = t[0], &y = t[1];
    c.begin("x=" + D.label_str(x) + " y=" + D.label_str(y));
    c.eq(mm.dd(x, y), DS.dd_mul_twist(D.basis(x), D.basis(y)), sh);
    c.eq(D.antipode(x), DS.dd_antipode_alt(D.basis(x)), sh);
    c.eq(D.antipode_inv_l(D.antipode(x)), D.basis(x), sh);
    c.eq(D.antipode_l(D.antipode_inv(x)), D.basis(x), sh);
    if (D.full_delta) {
      LinComb r1(F), r2(F), r3(F), r4(F);
      for (const auto& [l, cf] : D.full_delta(x)) {
        auto [u, v] = split(l, D.arity);
        r1 += tensor(D.basis(u), mm.dd(v, y)).scaled(cf);
        r2 += tensor(mm.dd(y, u), D.basis(v)).scaled(cf);
        r3 += tensor(mm.dd(u, y), D.basis(v)).scaled(cf);
        r4 += tensor(D.basis(u), mm.dd(y, v)).scaled(cf);
      }
      c.eq(r1, D.slice(Can::C1, x, y), raw_terms);
      c.eq(r2, D.slice(Can::C2, x, y), raw_terms);
      c.eq(r3, D.slice(Can::C3, x, y), raw_terms);
      c.eq(r4, D.slice(Can::C4, x, y), raw_terms);
    }
    c.end();
  }
  return c.rep;
}

CheckReport run_hd_assoc(const Built& bi, Memo& mm) {
  const DoubleSystem& DS = bi.DS;
  const MhaPresentation& D = DS.D;
  Ctx c(D.field, "hd_associativity");
  auto plan =
      make_plan(bi, c.rep.name, {&bi.pd, &bi.pd, &bi.pd}, {bi.d0, bi.d0, bi.d0}, bi.count);
  auto shh = [&DS](const LinComb& v) { return h_str(DS, v); };
  std::size_t probe = 0;
  for (const auto& t : plan) {
    const Label &x = t[0], &y = t[1], &z = t[2];
    c.begin("x=" + h_str(DS, D.basis(x)) + " y=" + h_str(DS, D.basis(y)) +
            " z=" + h_str(DS, D.basis(z)));
    c.eq(mm.hd_ll(mm.hd(x, y), D.basis(z)), mm.hd_ll(D.basis(x), mm.hd(y, z)), shh);
    // left and right local units exist on the span of each element
    if (probe < 24) {
      ++probe;
      LinComb lu = DS.action_local_unit(
          [&](const LinComb& u, const LinComb& h) { return DS.hd_mul(u, h); },
          {D.basis(x)});
      c.eq(DS.hd_mul(lu, D.basis(x)), D.basis(x), shh);
      LinComb ru = DS.action_local_unit(
          [&](const LinComb& u, const LinComb& h) { return DS.hd_mul(h, u); },
          {D.basis(x)});
      c.eq(DS.hd_mul(D.basis(x), ru), D.basis(x), shh);
    }
    c.end();
  }
  return c.rep;
}

CheckReport run_module(const Built& bi, Memo& mm) {
  const DoubleSystem& DS = bi.DS;
  const MhaPresentation& D = DS.D;
  Ctx c(D.field, "module");
  auto plan =
      make_plan(bi, c.rep.name, {&bi.pd, &bi.pd, &bi.pd}, {bi.d0, bi.d0, bi.d0}, bi.count);
  auto shh = [&DS](const LinComb& v) { return h_str(DS, v); };
  std::size_t probe = 0;
  for (const auto& t : plan) {
    const Label &d1 = t[0], &d2 = t[1], &h = t[2];
    c.begin("d=" + D.label_str(d1) + " d'=" + D.label_str(d2) +
            " h=" + h_str(DS, D.basis(h)));
    c.eq(mm.act_ll(mm.dd(d1, d2), D.basis(h)), mm.act_ll(D.basis(d1), mm.act(d2, h)),
         shh);
    if (probe < 24) {
      ++probe;
      c.eq(mm.act_ll(mm.hdunit(h), D.basis(h)), D.basis(h), shh);
    }
    c.end();
  }
  return c.rep;
}

CheckReport run_module_algebra(const Built& bi, Memo& mm) {
  const DoubleSystem& DS = bi.DS;
  const MhaPresentation& D = DS.D;
  const Field F = D.field;
  Ctx c(F, "module_algebra");
  auto plan =
      make_plan(bi, c.rep.name, {&bi.pd, &bi.pd, &bi.pd}, {bi.d0, bi.d0, bi.d0}, bi.count);
  auto shh = [&DS](const LinComb& v) { return h_str(DS, v); };
  for (const auto& t : plan) {
    const Label &d = t[0], &h = t[1], &h2 = t[2];
    c.begin("d=" + D.label_str(d) + " h=" + h_str(DS, D.basis(h)) +
            " h'=" + h_str(DS, D.basis(h2)));
    LinComb lhs = mm.act_ll(D.basis(d), mm.hd(h, h2));
    auto rhs_at = [&](std::int64_t w) {
      LinComb out(F);
      for (const auto& [l, cf] :
           D.slice_l(Can::C2, D.basis(d), DS.window_unit(w))) {
        auto [l1, l2] = split(l, D.arity);
        out += mm.hd_ll(mm.act(l1, h), mm.act(l2, h2)).scaled(cf);
      }
      return out;
    };
    const std::int64_t w0 = label_window({&d, &h, &h2});
    LinComb prev = rhs_at(w0);
    bool stable = false;
    for (int k = 1; k <= 4 && !stable; ++k) {
      LinComb curv = rhs_at(w0 + 4 * k);
      if (curv == prev) stable = true;
      else prev = std::move(curv);
    }
    if (!stable) {
      c.record_fail(shh(prev), "window evaluation kept changing");
      c.end();
      continue;
    }
    c.eq(lhs, prev, shh);
    if (D.full_delta) {
      LinComb ref(F);
      for (const auto& [l, cf] : D.full_delta(d)) {
        auto [l1, l2] = split(l, D.arity);
        ref += mm.hd_ll(mm.act(l1, h), mm.act(l2, h2)).scaled(cf);
      }
      c.eq(lhs, ref, shh);
    }
    c.end();
  }
  return c.rep;
}

CheckReport run_comodule(const Built& bi, Memo& mm) {
  const DoubleSystem& DS = bi.DS;
  const MhaPresentation& D = DS.D;
  const Field F = D.field;
  Ctx c(F, "comodule_algebra");
  auto plan =
      make_plan(bi, c.rep.name, {&bi.pd, &bi.pd, &bi.pd}, {bi.d0, bi.d0, bi.d0}, bi.count);
  auto shh = [&DS](const LinComb& v) { return h_str(DS, v); };
  for (const auto& t : plan) {
    const Label &h = t[0], &h2 = t[1], &dp = t[2];
    c.begin("h=" + h_str(DS, D.basis(h)) + " h'=" + h_str(DS, D.basis(h2)) +
            " d=" + D.label_str(dp));
    // the counit folds the coaction back onto the product
    {
      LinComb fold(F);
      for (const auto& [l, cf] : mm.hcov(h, h2)) {
        auto [dl, hl] = split(l, D.arity);
        fold += D.basis(hl).scaled(D.counit(dl) * cf);
      }
      c.eq(fold, mm.hd(h, h2), shh);
    }
    // coassociativity, cover on the outer algebra leg
    {
      LinComb X(F), Y(F);
      for (const auto& [l, cf] : mm.hcov(h, h2)) {
        auto [dl, hl] = split(l, D.arity);
        X += tensor(D.slice_l(Can::C2, D.basis(dl), D.basis(dp)), D.basis(hl)).scaled(cf);
      }
      for (const auto& [l, cf] : mm.lcov(dp, h)) {
        auto [g, k] = split(l, D.arity);
        Y += tensor(D.basis(g), mm.hcov(k, h2)).scaled(cf);
      }
      c.eq(X, Y, raw_terms);
    }
    // coassociativity with window covers on both outer legs
    {
      const std::int64_t w0 = label_window({&h, &h2, &dp});
      for (std::int64_t w : {w0, w0 + 4}) {
        LinComb u = DS.window_unit(w);
        LinComb X2(F), Y2(F);
        for (const auto& [l, cf] : mm.hcov(h, h2)) {
          auto [dl, hl] = split(l, D.arity);
          for (const auto& [l2, cf2] :
               D.slice_l(Can::C4, D.basis(dl), D.basis(dp))) {
            auto [m1, m2] = split(l2, D.arity);
            X2 += tensor(tensor(D.mul_l(u, D.basis(m1)), D.basis(m2)), D.basis(hl))
                      .scaled(cf * cf2);
          }
        }
        for (const auto& [l, cf] : mm.lcov_ll(u, D.basis(h))) {
          auto [g, k] = split(l, D.arity);
          for (const auto& [l2, cf2] : mm.hcov(k, h2)) {
            auto [e, f] = split(l2, D.arity);
            Y2 += tensor(tensor(D.basis(g), D.mul(dp, e)), D.basis(f)).scaled(cf * cf2);
          }
        }
        c.eq(X2, Y2, raw_terms);
      }
    }
    // the coaction respects the product
    {
      LinComb lm = mm.lcov_ll(D.basis(dp), mm.hd(h, h2));
      LinComb rm(F);
      for (const auto& [l, cf] : mm.lcov(dp, h)) {
        auto [e, f] = split(l, D.arity);
        for (const auto& [l2, cf2] : mm.lcov(e, h2)) {
          auto [g, k] = split(l2, D.arity);
          rm += tensor(D.basis(g), mm.hd(f, k)).scaled(cf * cf2);
        }
      }
      c.eq(lm, rm, raw_terms);
    }
    c.end();
  }
  return c.rep;
}

CheckReport run_yd(const Built& bi, Memo& mm) {
  const DoubleSystem& DS = bi.DS;
  const MhaPresentation& D = DS.D;
  const Field F = D.field;
  Ctx c(F, "yd_compatibility");
  auto plan =
      make_plan(bi, c.rep.name, {&bi.pd, &bi.pd, &bi.pd}, {bi.d0, bi.d0, bi.d0}, bi.count);
  for (const auto& t : plan) {
    const Label &d = t[0], &v = t[1], &dp = t[2];
    c.begin("d=" + D.label_str(d) + " h=" + h_str(DS, D.basis(v)) +
            " d'=" + D.label_str(dp));
    LinComb lhs(F);
    for (const auto& [l, cf] : D.slice_l(Can::C1, D.basis(d), D.basis(dp))) {
      auto [d1, e] = split(l, D.arity);
      lhs += mm.rcov_ll(mm.act(d1, v), D.basis(e)).scaled(cf);
    }
    LinComb rhs(F);
    for (const auto& [l, cf] : mm.rcov(v, dp)) {
      auto [g, w] = split(l, D.arity);
      for (const auto& [l2, cf2] : D.slice_l(Can::C3, D.basis(d), D.basis(g))) {
        auto [h1, h2] = split(l2, D.arity);
        rhs += tensor(D.basis(h1), mm.act(h2, w)).scaled(cf * cf2);
      }
    }
    c.eq(lhs, rhs, raw_terms);
    c.end();
  }
  return c.rep;
}

CheckReport run_braided_comm(const Built& bi, Memo& mm) {
  const DoubleSystem& DS = bi.DS;
  const MhaPresentation& D = DS.D;
  Ctx c(D.field, "braided_commutativity");
  auto plan = make_plan(bi, c.rep.name, {&bi.pd, &bi.pd}, {bi.d0, bi.d0}, bi.count);
  auto shh = [&DS](const LinComb& v) { return h_str(DS, v); };
  for (const auto& t : plan) {
    const Label &y = t[0], &x = t[1];
    c.begin("y=" + h_str(DS, D.basis(y)) + " x=" + h_str(DS, D.basis(x)));
    LinComb rhs(D.field);
    for (const auto& [l, cf] : mm.rcov_ll(D.basis(y), mm.hdunit(x))) {
      auto [dl, y0] = split(l, D.arity);
      rhs += mm.hd_ll(mm.act(dl, x), D.basis(y0)).scaled(cf);
    }
    c.eq(mm.hd(y, x), rhs, shh);
    c.end();
  }
  return c.rep;
}

CheckReport run_braided_fact(const Built& bi, Memo& mm) {
  const DoubleSystem& DS = bi.DS;
  const MhaPresentation &A = DS.A(), &B = DS.B(), &D = DS.D;
  const Field F = D.field;
  Ctx c(F, "braided_factorization");
  auto plan =
      make_plan(bi, c.rep.name, {&bi.pd, &bi.pd, &bi.pd}, {bi.d0, bi.d0, bi.d0}, bi.count);
  auto shh = [&DS](const LinComb& v) { return h_str(DS, v); };
  auto shA = [&A](const LinComb& v) { return A.show(v); };
  auto shB = [&B](const LinComb& v) { return B.show(v); };
  for (const auto& t : plan) {
    const Label &x = t[0], &y = t[1], &dp = t[2];
    c.begin("x=" + h_str(DS, D.basis(x)) + " y=" + h_str(DS, D.basis(y)) +
            " d=" + D.label_str(dp));
    // the product rebuilt from the two factors matches the direct one
    c.eq(mm.braid(x, y), mm.hd(x, y), shh);
    auto [xa, xb] = split(x, A.arity);
    auto [ya, yb] = split(y, A.arity);
    // acting legwise through the comultiplication matches the module action
    {
      auto codiag_at = [&](std::int64_t w) {
        LinComb out(F);
        for (const auto& [l, cf] :
             D.slice_l(Can::C2, D.basis(dp), DS.window_unit(w))) {
          auto [l1, l2] = split(l, D.arity);
          out += tensor(mm.aona(l1, xa), mm.aonb(l2, xb)).scaled(cf);
        }
        return out;
      };
      const std::int64_t w0 = label_window({&dp, &x});
      LinComb prev = codiag_at(w0);
      bool stable = false;
      for (int k = 1; k <= 4 && !stable; ++k) {
        LinComb curv = codiag_at(w0 + 4 * k);
        if (curv == prev) stable = true;
        else prev = std::move(curv);
      }
      if (stable) c.eq(prev, mm.act(dp, x), shh);
      else c.record_fail(shh(prev), "window evaluation kept changing");
    }
    // compatibility of action and coaction restricted to either factor
    {
      LinComb lhsA(F);
      for (const auto& [l, cf] : D.slice_l(Can::C1, D.basis(y), D.basis(dp))) {
        auto [d1, e] = split(l, D.arity);
        lhsA += mm.carcov_ll(mm.aona(d1, xa), D.basis(e)).scaled(cf);
      }
      LinComb rhsA(F);
      for (const auto& [l, cf] : mm.carcov(xa, dp)) {
        auto [g, w] = split(l, D.arity);
        for (const auto& [l2, cf2] : D.slice_l(Can::C3, D.basis(y), D.basis(g))) {
          auto [h1, h2] = split(l2, D.arity);
          rhsA += tensor(D.basis(h1), mm.aona(h2, w)).scaled(cf * cf2);
        }
      }
      c.eq(lhsA, rhsA, raw_terms);
      LinComb lhsB(F);
      for (const auto& [l, cf] : D.slice_l(Can::C1, D.basis(y), D.basis(dp))) {
        auto [d1, e] = split(l, D.arity);
        lhsB += mm.cbrcov_ll(mm.aonb(d1, xb), D.basis(e)).scaled(cf);
      }
      LinComb rhsB(F);
      for (const auto& [l, cf] : mm.cbrcov(xb, dp)) {
        auto [g, w] = split(l, D.arity);
        for (const auto& [l2, cf2] : D.slice_l(Can::C3, D.basis(y), D.basis(g))) {
          auto [h1, h2] = split(l2, D.arity);
          rhsB += tensor(D.basis(h1), mm.aonb(h2, w)).scaled(cf * cf2);
        }
      }
      c.eq(lhsB, rhsB, raw_terms);
    }
    // braided commutativity inside each factor
    {
      LinComb rA(F);
      for (const auto& [l, cf] : mm.carcov_ll(A.basis(ya), mm.aunit(xa))) {
        auto [dl, y0] = split(l, D.arity);
        rA += A.mul_l(mm.aona(dl, xa), A.basis(y0)).scaled(cf);
      }
      c.eq(A.mul(ya, xa), rA, shA);
      LinComb rB(F);
      for (const auto& [l, cf] : mm.cbrcov_ll(B.basis(yb), mm.bunit(xb))) {
        auto [dl, y0] = split(l, D.arity);
        rB += B.mul_l(mm.aonb(dl, xb), B.basis(y0)).scaled(cf);
      }
      c.eq(B.mul(yb, xb), rB, shB);
    }
    c.end();
  }
  return c.rep;
}

CheckReport run_closed_forms(const Built& bi, Memo& mm) {
  const DoubleSystem& DS = bi.DS;
  const MhaPresentation &A = DS.A(), &B = DS.B(), &D = DS.D;
  const Field F = D.field;
  const Group& G = bi.G;
  Ctx c(F, "closed_form_regressions");
  auto plan = make_plan(bi, c.rep.name, {&bi.pd, &bi.pd}, {bi.d0, bi.d0}, bi.count);
  auto sh = [&D](const LinComb& v) { return D.show(v); };
  auto shh = [&DS](const LinComb& v) { return h_str(DS, v); };
  const Scalar one = Scalar::one(F), zero = Scalar::zero(F);
  std::int64_t n_all = 0, n_hd_short = 0, n_act_alt = 0, n_acta_r1 = 0, n_acta_r2 = 0;
  for (const auto& t : plan) {
    const Label &xl = t[0], &yl = t[1];
    const std::int64_t g = xl[0], q = xl[1], p = yl[0], r = yl[1];
    c.begin("x=" + D.label_str(xl) + " y=" + D.label_str(yl));
    ++n_all;
    // double product, antipode, counit
    {
      LinComb oracle =
          g == G.op(G.op(q, p), G.inv(q)) ? D.basis({g, G.op(q, r)}) : D.zero();
      c.eq(mm.dd(xl, yl), oracle, sh);
      c.eq(D.antipode(xl), D.basis({G.op(G.inv(q), G.op(G.inv(g), q)), G.inv(q)}), sh);
      c.eq_scalar(D.counit(xl), g == G.id() ? one : zero);
    }
    // companion product carries a support factor
    {
      LinComb oracle =
          g == G.op(p, G.inv(q)) ? D.basis({g, G.op(q, r)}) : D.zero();
      c.eq(mm.hd(xl, yl), oracle, shh);
      LinComb shorthand = D.basis({G.op(p, G.inv(q)), G.op(q, r)});
      if (!(mm.hd(xl, yl) == shorthand)) ++n_hd_short;
    }
    // module action: the support condition is a conjugated group element
    {
      const std::int64_t conj = G.op(G.op(q, r), G.inv(q));
      LinComb oracle =
          G.inv(g) == conj ? D.basis({G.op(p, G.inv(q)), conj}) : D.zero();
      c.eq(mm.act(xl, yl), oracle, shh);
      LinComb alt = g == conj ? D.basis({G.op(p, G.inv(q)), conj}) : D.zero();
      if (!(mm.act(xl, yl) == alt)) ++n_act_alt;
    }
    // the three coaction covers
    {
      // Γ(x)(1⊗y), reading x = (p0, q0) as the acted element
      const std::int64_t p0 = g, q0 = q, p1 = p, q1 = r;
      LinComb hcov_oracle =
          tensor(D.basis({G.op(q0, G.op(G.inv(p1), p0)), q0}),
                 D.basis({G.op(p1, G.inv(q0)), G.op(q0, q1)}));
      c.eq(mm.hcov(xl, yl), hcov_oracle, raw_terms);
      LinComb rcov_oracle =
          tensor(D.basis({G.op(G.op(q0, p1), G.inv(q0)), G.op(q0, q1)}),
                 D.basis({G.op(p0, G.op(G.op(q0, G.inv(p1)), G.inv(q0))), q0}));
      c.eq(DS.coaction_rcov(D.basis(xl), D.basis(yl)), rcov_oracle, raw_terms);
      LinComb lcov_oracle =
          tensor(D.basis({p0, G.op(q0, q1)}),
                 D.basis({G.op(p1, G.op(G.inv(q0), G.op(G.inv(p0), q0))), q1}));
      c.eq(DS.coaction_lcov(D.basis(xl), D.basis(yl)), lcov_oracle, raw_terms);
    }
    // restricted actions and coactions on the two factors
    {
      LinComb acta_oracle = g == G.id() ? A.basis({G.op(p, G.inv(q))}) : A.zero();
      c.eq(DS.act_on_a(D.basis(xl), A.basis({p})), acta_oracle, [&](const LinComb& v) {
        return A.show(v);
      });
      LinComb r1v = g == G.id() ? A.basis({G.op(G.inv(q), p)}) : A.zero();
      if (!(DS.act_on_a(D.basis(xl), A.basis({p})) == r1v)) ++n_acta_r1;
      LinComb r2v = A.basis({G.op(p, G.inv(q))});
      if (!(DS.act_on_a(D.basis(xl), A.basis({p})) == r2v)) ++n_acta_r2;
      const std::int64_t conj = G.op(G.op(q, r), G.inv(q));
      LinComb actb_oracle = G.inv(g) == conj ? B.basis({conj}) : B.zero();
      c.eq(DS.act_on_b(D.basis(xl), B.basis({r})), actb_oracle, [&](const LinComb& v) {
        return B.show(v);
      });
      c.eq(DS.coact_a_rcov(A.basis({p}), D.basis(xl)),
           tensor(D.basis(xl), A.basis({G.op(p, G.inv(g))})), raw_terms);
      c.eq(DS.coact_b_rcov(B.basis({r}), D.basis(xl)),
           tensor(D.basis({G.op(G.op(r, g), G.inv(r)), G.op(r, q)}), B.basis({r})),
           raw_terms);
    }
    c.end();
  }
  auto frac = [&](std::int64_t n) {
    return std::to_string(n) + "/" + std::to_string(n_all);
  };
  c.rep.notes.push_back(
      "companion product: the bare form without the support factor disagreed on " +
      frac(n_hd_short) + " samples; the bracketed closed form verified exactly");
  c.rep.notes.push_back(
      "module action: the conjugated support reading verified exactly; the "
      "unconjugated reading disagreed on " +
      frac(n_act_alt) + " samples");
  c.rep.notes.push_back(
      "function-factor action: left-translate reading disagreed on " + frac(n_acta_r1) +
      ", unconditional reading on " + frac(n_acta_r2) +
      "; the verified form carries the identity-support factor with a right "
      "translate");
  return c.rep;
}

CheckReport run_taft_relations(const Built& bi, Memo&) {
  const DoubleSystem& DS = bi.DS;
  const MhaPresentation &A = DS.A(), &B = DS.B();
  const Field F = DS.field();
  Ctx c(F, "taft_heisenberg_relations");
  auto shh = [&DS](const LinComb& v) { return h_str(DS, v); };
  const std::int64_t w = bi.window, ii = bi.taft_i;
  const Scalar lam = Scalar::parse(F, bi.lambda_str);
  const std::int64_t bound = w - std::llabs(ii);
  if (bound < 1) {
    c.rep.pass = false;
    c.rep.notes.push_back("window too small for the chosen generator power");
    return c.rep;
  }
  LinComb Ec(F), Ex(F), Y(F), Dd(F);
  for (std::int64_t s = -w; s <= w; ++s) {
    Ec += tensor(A.basis({s, 0}), B.basis({ii, 0}));
    Ex += tensor(A.basis({s, 0}), B.basis({0, 1}));
    Y += tensor(A.basis({s, 1}), B.unit_el()).scaled(lam.pow(s));
    Dd += tensor(A.basis({s, 0}), B.unit_el()).scaled(lam.pow(s));
  }
  auto restrict_a = [&](const LinComb& t, std::int64_t bnd) {
    LinComb r(F);
    for (const auto& [l, cf] : t.terms())
      if (std::llabs(l[0]) <= bnd) r.add(l, cf);
    return r;
  };
  // translations of the point masses under the window realizations of the
  // grouplike and the skew primitive
  for (std::int64_t p = -bound; p <= bound; ++p) {
    c.begin("p=" + std::to_string(p));
    LinComb hp = tensor(A.basis({p, 0}), B.unit_el());
    c.eq(DS.hd_mul(Ec, hp), tensor(A.basis({p - ii, 0}), B.basis({ii, 0})), shh);
    c.eq(DS.hd_mul(Ex, hp), tensor(A.basis({p - ii, 0}), B.basis({0, 1})), shh);
    c.end();
  }
  // relations against the weighted series, compared on the stable interior
  {
    c.begin("series, window=" + std::to_string(w));
    LinComb r2(F), r4(F);
    for (std::int64_t s = -w; s <= w; ++s) {
      r2 += tensor(A.basis({s, 1}), B.basis({ii, 0})).scaled(lam.pow(s));
      r4 += tensor(A.basis({s, 1}), B.basis({0, 1})).scaled(lam.pow(s));
    }
    LinComb lhs2 = restrict_a(DS.hd_mul(Ec, Y), bound);
    c.eq(lhs2, restrict_a(r2, bound), shh);
    c.eq(restrict_a(DS.hd_mul(Ex, Y), bound), restrict_a(r4 + Dd, bound), shh);
    if (lhs2.size() == 0) {
      c.rep.pass = false;
      c.rep.notes.push_back("interior of the window comparison came out empty");
    }
    c.end();
  }
  return c.rep;
}

CheckReport dispatch(const std::string& n, const Built& bi, Memo& mm) {
  if (n == "hopf_axioms_a") return run_axioms(bi, bi.DS.A(), bi.pa, bi.a0, n);
  if (n == "hopf_axioms_b") return run_axioms(bi, bi.DS.B(), bi.pb, bi.b0, n);
  if (n == "hopf_axioms_dd") return run_axioms(bi, bi.DS.D, bi.pd, bi.d0, n);
  if (n == "pairing_duality") return run_pairing(bi, mm);
  if (n == "round_trips") return run_round_trips(bi, mm);
  if (n == "dd_consistency") return run_dd_consistency(bi, mm);
  if (n == "hd_associativity") return run_hd_assoc(bi, mm);
  if (n == "module") return run_module(bi, mm);
  if (n == "module_algebra") return run_module_algebra(bi, mm);
  if (n == "comodule_algebra") return run_comodule(bi, mm);
  if (n == "yd_compatibility") return run_yd(bi, mm);
  if (n == "braided_commutativity") return run_braided_comm(bi, mm);
  if (n == "braided_factorization") return run_braided_fact(bi, mm);
  if (n == "closed_form_regressions") return run_closed_forms(bi, mm);
  if (n == "taft_heisenberg_relations") return run_taft_relations(bi, mm);
  throw ConfigError("unknown check: " + n);
}

}  // namespace

std::vector<std::string> suite_names(const std::string& instance) {
  std::vector<std::string> v = {
      "hopf_axioms_a",  "hopf_axioms_b",    "hopf_axioms_dd",
      "pairing_duality", "round_trips",     "dd_consistency",
      "hd_associativity", "module",         "module_algebra",
      "comodule_algebra", "yd_compatibility", "braided_commutativity",
      "braided_factorization"};
  if (instance == "qtaft") v.push_back("taft_heisenberg_relations");
  else v.push_back("closed_form_regressions");
  return v;
}

Corrupt parse_corrupt(const std::string& name) {
  if (name.empty() || name == "none") return Corrupt::None;
  if (name == "drop_antipode") return Corrupt::DropAntipodeInAction;
  if (name == "delta_not_cop") return Corrupt::DeltaNotCop;
  if (name == "swap_coaction_b") return Corrupt::SwapCoactionB;
  if (name == "trivial_braiding") return Corrupt::TrivialBraiding;
  throw ConfigError("unknown corruption: " + name);
}

void validate(const RunConfig& cfg) {
  Built bi = build(cfg);
  (void)bi;
  const std::vector<std::string> known = suite_names(cfg.instance);
  for (const auto& n : cfg.suite)
    if (std::find(known.begin(), known.end(), n) == known.end())
      throw ConfigError("unknown check: " + n);
}

SuiteResult run_suite(const RunConfig& cfg) {
  Built bi = build(cfg);
  Memo mm(bi.DS);
  const std::vector<std::string> known = suite_names(cfg.instance);
  std::vector<std::string> names = cfg.suite.empty() ? known : cfg.suite;
  for (const auto& n : names)
    if (std::find(known.begin(), known.end(), n) == known.end())
      throw ConfigError("unknown check: " + n);
  SuiteResult out;
  out.exhaustive = bi.exhaustive;
  out.resolved_lambda = bi.lambda_str;
  for (const auto& n : names) {
    CheckReport rep;
    try {
      rep = dispatch(n, bi, mm);
    } catch (const Error& e) {
      rep.name = n;
      rep.pass = false;
      ++rep.failure_count;
      rep.notes.push_back(std::string("aborted: ") + e.what());
    }
    out.all_pass = out.all_pass && rep.pass;
    out.checks.push_back(std::move(rep));
  }
  return out;
}

}  // namespace mhd
