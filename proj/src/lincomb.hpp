#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace mhd {

// basis labels are flat integer tuples; tensor legs are concatenated
using Label = std::vector<std::int64_t>;

inline Label cat(const Label& a, const Label& b) {
  Label r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

inline std::pair<Label, Label> split(const Label& l, std::size_t arity1) {
  return {Label(l.begin(), l.begin() + arity1), Label(l.begin() + arity1, l.end())};
}

class LinComb {
 public:
  explicit LinComb(const Field& f) : f_(f) {}
  static LinComb basis(const Field& f, const Label& l) {
    LinComb x(f);
    x.add(l, Scalar::one(f));
    return x;
  }

  const Field& field() const { return f_; }
  const std::map<Label, Scalar>& terms() const { return t_; }
  // iterate a LinComb directly in range-for; unlike `f(x).terms()`, a
  // temporary used as the range expression outlives the loop
  auto begin() const { return t_.begin(); }
  auto end() const { return t_.end(); }
  bool zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }

  void add(const Label& l, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = t_.find(l);
    if (it == t_.end()) {
      t_.emplace(l, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [l, c] : o.t_) add(l, c);
    return *this;
  }
  LinComb operator+(const LinComb& o) const {
    LinComb r = *this;
    r += o;
    return r;
  }
  LinComb operator-(const LinComb& o) const { return *this + o.scaled(Scalar(f_, -1)); }
  LinComb scaled(const Scalar& s) const {
    LinComb r(f_);
    for (const auto& [l, c] : t_) r.add(l, c * s);
    return r;
  }

  bool operator==(const LinComb& o) const { return f_ == o.f_ && t_ == o.t_; }
  bool operator!=(const LinComb& o) const { return !(*this == o); }

  std::string str(const std::function<std::string(const Label&)>& name) const;

 private:
  Field f_;
  std::map<Label, Scalar> t_;
};

// f : Label -> LinComb, extended linearly
template <class F>
LinComb lift1(const LinComb& x, F&& f) {
  LinComb r(x.field());
  for (const auto& [l, c] : x.terms()) r += f(l).scaled(c);
  return r;
}

// f : Label x Label -> LinComb, extended bilinearly
template <class F>
LinComb lift2(const LinComb& x, const LinComb& y, F&& f) {
  LinComb r(x.field());
  for (const auto& [lx, cx] : x.terms())
    for (const auto& [ly, cy] : y.terms()) r += f(lx, ly).scaled(cx * cy);
  return r;
}

// p : Label x Label -> Scalar, extended bilinearly
template <class P>
Scalar pair_all(const LinComb& x, const LinComb& y, P&& p) {
  Scalar s = Scalar::zero(x.field());
  for (const auto& [lx, cx] : x.terms())
    for (const auto& [ly, cy] : y.terms()) s += p(lx, ly) * cx * cy;
  return s;
}

inline LinComb tensor(const LinComb& x, const LinComb& y) {
  return lift2(x, y, [&](const Label& a, const Label& b) {
    return LinComb::basis(x.field(), cat(a, b));
  });
}

inline LinComb flip(const LinComb& t, std::size_t arity1) {
  LinComb r(t.field());
  for (const auto& [l, c] : t.terms()) {
    auto [a, b] = split(l, arity1);
    r.add(cat(b, a), c);
  }
  return r;
}

// pairs leg 1 (or 2) of a two-leg tensor against y; pfun(leg_label, y_label)
template <class P>
LinComb contract(const LinComb& t, std::size_t arity1, int which_leg, const LinComb& y,
                 P&& pfun) {
  LinComb r(t.field());
  for (const auto& [l, c] : t.terms()) {
    auto [a, b] = split(l, arity1);
    const Label& leg = which_leg == 1 ? a : b;
    const Label& keep = which_leg == 1 ? b : a;
    for (const auto& [ly, cy] : y.terms()) r.add(keep, c * cy * pfun(leg, ly));
  }
  return r;
}

// multiplies the two legs of a tensor together; mul(l, r) basis-level
template <class M>
LinComb fold_mul(const LinComb& t, std::size_t arity1, M&& mul, bool reversed = false) {
  LinComb r(t.field());
  for (const auto& [l, c] : t.terms()) {
    auto [a, b] = split(l, arity1);
    r += (reversed ? mul(b, a) : mul(a, b)).scaled(c);
  }
  return r;
}

}  // namespace mhd
