#include "taft.hpp"

#include <set>

namespace mhd {

namespace {

bool order_is(const Scalar& x, std::int64_t m) {
  if (x.is_zero() || !x.pow(m).is_one()) return false;
  for (std::int64_t d = 1; d < m; ++d)
    if (m % d == 0 && x.pow(d).is_one()) return false;
  return true;
}

std::string power_str(std::int64_t k, std::int64_t l) {
  if (k == 0 && l == 0) return "1";
  std::string s;
  if (k != 0) s += "c^" + std::to_string(k);
  if (l > 0) s += (l == 1 ? std::string("X") : "X^" + std::to_string(l));
  return s;
}

}  // namespace

TaftParams::TaftParams(std::int64_t m_, std::int64_t i_, const Field& F, const Scalar& l)
    : m(m_), i(i_), field(F), lambda(l) {
  if (m < 1) throw ConfigError("taft m must be >= 1");
  if (i < 1) throw ConfigError("taft i must be >= 1");
  if (!order_is(lambda.pow(i), m))
    throw ConfigError("lambda^i must be a primitive root of unity of order " +
                      std::to_string(m));
}

TaftParams TaftParams::resolve(std::int64_t m, std::int64_t i, const Field& F) {
  if (m < 1) throw ConfigError("taft m must be >= 1");
  if (i < 1) throw ConfigError("taft i must be >= 1");
  std::vector<Scalar> candidates;
  if (F.p == 0) {
    candidates.push_back(Scalar::one(F));
    candidates.push_back(Scalar(F, -1));
  } else {
    for (std::uint64_t c = 1; c < F.p; ++c)
      candidates.push_back(Scalar(F, static_cast<std::int64_t>(c)));
  }
  for (const auto& l : candidates)
    if (order_is(l.pow(i), m)) return TaftParams(m, i, F, l);
  throw ConfigError("no lambda in " + F.str() + " with lambda^" + std::to_string(i) +
                    " of order " + std::to_string(m));
}

MhaPresentation taft_b(const TaftParams& T) {
  const Field F = T.field;
  const Scalar lam = T.lambda;
  const Scalar q = lam.pow(-T.i);
  const std::int64_t m = T.m, i = T.i;

  MhaPresentation P;
  P.name = "B(q-taft m=" + std::to_string(m) + ",i=" + std::to_string(i) + ")";
  P.field = F;
  P.arity = 2;
  P.unital = true;
  P.unit = {0, 0};
  P.mul = [F, lam, m](const Label& a, const Label& b) {
    LinComb r(F);
    if (a[1] + b[1] < m)
      r.add({a[0] + b[0], a[1] + b[1]}, lam.pow(-a[1] * b[0]));
    return r;
  };
  P.counit = [F](const Label& a) {
    return a[1] == 0 ? Scalar::one(F) : Scalar::zero(F);
  };
  P.antipode = [F, lam, i](const Label& a) {
    std::int64_t k = a[0], l = a[1];
    Scalar c = Scalar(F, l % 2 ? -1 : 1) * lam.pow(k * l + i * l * (l - 1) / 2);
    LinComb r(F);
    r.add({-k - i * l, l}, c);
    return r;
  };
  P.antipode_inv = [F, lam, i](const Label& a) {
    std::int64_t k = a[0], l = a[1];
    Scalar c = Scalar(F, l % 2 ? -1 : 1) * lam.pow(k * l + i * l * (l + 1) / 2);
    LinComb r(F);
    r.add({-k - i * l, l}, c);
    return r;
  };
  P.full_delta = [F, q, i](const Label& a) {
    std::int64_t k = a[0], l = a[1];
    LinComb r(F);
    for (std::int64_t t = 0; t <= l; ++t)
      r.add({k + i * t, l - t, k, t}, qbinom(q, l, t));
    return r;
  };
  P.slice = make_slice_from_delta(F, 2, P.mul, P.full_delta);
  P.local_unit = [F](const std::vector<Label>&) { return LinComb::basis(F, {0, 0}); };
  P.window_labels = [m](std::int64_t w) {
    std::vector<Label> out;
    for (std::int64_t k = -w; k <= w; ++k)
      for (std::int64_t l = 0; l < m; ++l) out.push_back({k, l});
    return out;
  };
  P.label_str = [](const Label& a) { return power_str(a[0], a[1]); };
  return P;
}

MhaPresentation taft_a(const TaftParams& T) {
  const Field F = T.field;
  const Scalar lam = T.lambda;
  const Scalar q = lam.pow(-T.i);
  const std::int64_t m = T.m, i = T.i;

  MhaPresentation P;
  P.name = "A(q-taft m=" + std::to_string(m) + ",i=" + std::to_string(i) + ")";
  P.field = F;
  P.arity = 2;
  P.unital = false;
  P.mul = [F, q, m, i](const Label& a, const Label& b) {
    // ω_{p,u} ω_{k,l} = [p-k = il] (u+l choose u)_q ω_{k,u+l}
    std::int64_t p = a[0], u = a[1], k = b[0], l = b[1];
    LinComb r(F);
    if (p - k == i * l && u + l < m) r.add({k, u + l}, qbinom(q, u + l, u));
    return r;
  };
  P.counit = [F](const Label& a) {
    return a[0] == 0 && a[1] == 0 ? Scalar::one(F) : Scalar::zero(F);
  };
  P.antipode = [F, lam, i](const Label& a) {
    std::int64_t p = a[0], l = a[1];
    Scalar c = Scalar(F, l % 2 ? -1 : 1) * lam.pow(-l * p - i * l * (l + 1) / 2);
    LinComb r(F);
    r.add({-p - i * l, l}, c);
    return r;
  };
  P.antipode_inv = [F, lam, i](const Label& a) {
    std::int64_t p = a[0], l = a[1];
    Scalar c = Scalar(F, l % 2 ? -1 : 1) * lam.pow(i * l - l * p - i * l * (l + 1) / 2);
    LinComb r(F);
    r.add({-p - i * l, l}, c);
    return r;
  };
  // Δ(ω_{p,l}) = Σ_{t,b} λ^{-(l-t)b} ω_{p-b,l-t} ⊗ ω_{b,t}; a cover pins b
  P.slice = [F, lam, q, m, i](Can v, const Label& x, const Label& cv) {
    std::int64_t p = x[0], l = x[1], K = cv[0], J = cv[1];
    LinComb r(F);
    for (std::int64_t t = 0; t <= l; ++t) {
      std::int64_t b = 0;
      switch (v) {
        case Can::C1: {
          b = K + i * J;
          if (J + t >= m) continue;
          Scalar c = lam.pow(-(l - t) * b) * qbinom(q, J + t, t);
          r.add({p - b, l - t, K, J + t}, c);
          break;
        }
        case Can::C2: {
          b = p - K + i * (l - t);
          if (l - t + J >= m) continue;
          Scalar c = lam.pow(-(l - t) * b) * qbinom(q, l - t + J, J);
          r.add({K - i * (l - t), l - t + J, b, t}, c);
          break;
        }
        case Can::C3: {
          b = p - K - i * J;
          if (J + l - t >= m) continue;
          Scalar c = lam.pow(-(l - t) * b) * qbinom(q, J + l - t, l - t);
          r.add({K, J + l - t, b, t}, c);
          break;
        }
        case Can::C4: {
          b = K - i * t;
          if (t + J >= m) continue;
          Scalar c = lam.pow(-(l - t) * b) * qbinom(q, t + J, J);
          r.add({p - b, l - t, b, t + J}, c);
          break;
        }
      }
    }
    return r;
  };
  P.local_unit = [F, i](const std::vector<Label>& ls) {
    LinComb r(F);
    std::set<std::int64_t> seen;
    for (const auto& l : ls) {
      for (std::int64_t p : {l[0], l[0] + i * l[1]})
        if (seen.insert(p).second) r.add({p, 0}, Scalar::one(F));
    }
    return r;
  };
  P.window_labels = [m](std::int64_t w) {
    std::vector<Label> out;
    for (std::int64_t p = -w; p <= w; ++p)
      for (std::int64_t l = 0; l < m; ++l) out.push_back({p, l});
    return out;
  };
  P.diag_right = [](std::int64_t w) {
    std::vector<Label> out;
    for (std::int64_t k = -w; k <= w; ++k) out.push_back({k, 0});
    return out;
  };
  P.diag_left = P.diag_right;
  P.label_str = [](const Label& a) {
    return "w[" + std::to_string(a[0]) + "," + std::to_string(a[1]) + "]";
  };
  return P;
}

PairedSystem taft_pairing(const TaftParams& T) {
  const Field F = T.field;
  const Scalar lam = T.lambda;
  const Scalar q = lam.pow(-T.i);
  const std::int64_t m = T.m, i = T.i;

  PairedSystem S;
  S.A = taft_a(T);
  S.B = taft_b(T);
  S.pair = [F](const Label& a, const Label& b) {
    return a[0] == b[0] && a[1] == b[1] ? Scalar::one(F) : Scalar::zero(F);
  };
  // c^k X^j ▸ ω_{p,l} = [j<=l] λ^{-(l-j)k} ω_{p-k,l-j}
  S.act_ba = [F, lam](const Label& b, const Label& a) {
    std::int64_t k = b[0], j = b[1], p = a[0], l = a[1];
    LinComb r(F);
    if (j <= l) r.add({p - k, l - j}, lam.pow(-(l - j) * k));
    return r;
  };
  // ω_{p,j} ▸ c^k X^l = [p=k][j<=l] (l choose j)_q c^{k+ij} X^{l-j}
  S.act_ab = [F, q, i](const Label& a, const Label& b) {
    std::int64_t p = a[0], j = a[1], k = b[0], l = b[1];
    LinComb r(F);
    if (p == k && j <= l) r.add({k + i * j, l - j}, qbinom(q, l, j));
    return r;
  };
  // ω_{p,l} ◂ c^k X^j = [j<=l] λ^{-j(p-k)} ω_{p-k,l-j}
  S.ract_ab = [F, lam](const Label& a, const Label& b) {
    std::int64_t p = a[0], l = a[1], k = b[0], j = b[1];
    LinComb r(F);
    if (j <= l) r.add({p - k, l - j}, lam.pow(-j * (p - k)));
    return r;
  };
  // c^k X^l ◂ ω_{p,j} = [j<=l][p = k+i(l-j)] (l choose j)_q c^k X^{l-j}
  S.ract_ba = [F, q, i](const Label& b, const Label& a) {
    std::int64_t k = b[0], l = b[1], p = a[0], j = a[1];
    LinComb r(F);
    if (j <= l && p == k + i * (l - j)) r.add({k, l - j}, qbinom(q, l, j));
    return r;
  };
  (void)m;
  return S;
}

}  // namespace mhd
