#include "group.hpp"

#include <numeric>

namespace mhd {

namespace {

std::int64_t factorial(std::int64_t n) {
  std::int64_t f = 1;
  for (std::int64_t j = 2; j <= n; ++j) f *= j;
  return f;
}

// factorial-base decode; index 0 is the identity
std::vector<int> perm_of(std::int64_t idx, std::int64_t n) {
  std::vector<int> avail(n);
  std::iota(avail.begin(), avail.end(), 0);
  std::vector<int> per;
  per.reserve(n);
  for (std::int64_t i = 0; i < n; ++i) {
    std::int64_t f = factorial(n - 1 - i);
    std::int64_t d = idx / f;
    idx %= f;
    per.push_back(avail[d]);
    avail.erase(avail.begin() + d);
  }
  return per;
}

std::int64_t index_of(const std::vector<int>& per) {
  std::int64_t n = static_cast<std::int64_t>(per.size());
  std::int64_t idx = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    int smaller = 0;
    for (std::int64_t j = i + 1; j < n; ++j)
      if (per[j] < per[i]) ++smaller;
    idx += smaller * factorial(n - 1 - i);
  }
  return idx;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

Group Group::zn(std::int64_t n) {
  if (n < 1) throw ConfigError("zn needs n >= 1");
  return Group{Kind::Zn, n, n};
}

Group Group::sym(std::int64_t n) {
  if (n < 1 || n > 8) throw ConfigError("sym supports 1 <= n <= 8");
  return Group{Kind::Sym, factorial(n), n};
}

Group Group::dihedral(std::int64_t m) {
  if (m < 1) throw ConfigError("dihedral needs m >= 1");
  return Group{Kind::Dihedral, 2 * m, m};
}

Group Group::integers() { return Group{Kind::Z, 0, 0}; }

Group Group::parse(const std::string& s) {
  if (s == "z") return integers();
  auto colon = s.find(':');
  if (colon != std::string::npos) {
    std::string head = s.substr(0, colon);
    std::int64_t n = 0;
    try {
      n = std::stoll(s.substr(colon + 1));
    } catch (...) {
      throw ConfigError("bad group parameter in '" + s + "'");
    }
    if (head == "zn") return zn(n);
    if (head == "sym") return sym(n);
    if (head == "dihedral") return dihedral(n);
  }
  throw ConfigError("unknown group '" + s + "' (want zn:<n>, sym:<n>, dihedral:<m>, z)");
}

bool Group::abelian() const {
  switch (kind) {
    case Kind::Zn:
    case Kind::Z:
      return true;
    case Kind::Sym:
      return param <= 2;
    case Kind::Dihedral:
      return param <= 2;
  }
  return false;
}

std::int64_t Group::op(std::int64_t a, std::int64_t b) const {
  switch (kind) {
    case Kind::Zn:
      return mod(a + b, param);
    case Kind::Z:
      return a + b;
    case Kind::Sym: {
      auto pa = perm_of(a, param), pb = perm_of(b, param);
      std::vector<int> pc(param);
      for (std::int64_t i = 0; i < param; ++i) pc[i] = pa[pb[i]];
      return index_of(pc);
    }
    case Kind::Dihedral: {
      // label x + m*s for r^x s^s; (x,s)(y,t) = (x + (-1)^s y, s^t)
      std::int64_t x = a % param, s = a / param;
      std::int64_t y = b % param, t = b / param;
      std::int64_t z = mod(s ? x - y : x + y, param);
      return z + param * (s ^ t);
    }
  }
  throw Error(1, "bad group kind");
}

std::int64_t Group::inv(std::int64_t a) const {
  switch (kind) {
    case Kind::Zn:
      return mod(-a, param);
    case Kind::Z:
      return -a;
    case Kind::Sym: {
      auto pa = perm_of(a, param);
      std::vector<int> pi(param);
      for (std::int64_t i = 0; i < param; ++i) pi[pa[i]] = static_cast<int>(i);
      return index_of(pi);
    }
    case Kind::Dihedral: {
      std::int64_t x = a % param, s = a / param;
      return (s ? x : mod(-x, param)) + param * s;
    }
  }
  throw Error(1, "bad group kind");
}

std::vector<std::int64_t> Group::elements(std::int64_t window) const {
  std::vector<std::int64_t> out;
  if (finite()) {
    out.resize(order);
    std::iota(out.begin(), out.end(), 0);
  } else {
    for (std::int64_t k = -window; k <= window; ++k) out.push_back(k);
  }
  return out;
}

std::string Group::name(std::int64_t g) const {
  switch (kind) {
    case Kind::Zn:
    case Kind::Z:
      return std::to_string(g);
    case Kind::Sym: {
      auto p = perm_of(g, param);
      std::string s = "(";
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(p[i]);
      }
      return s + ")";
    }
    case Kind::Dihedral: {
      std::int64_t x = g % param, s = g / param;
      std::string out = "r" + std::to_string(x);
      if (s) out += "s";
      return out;
    }
  }
  return "?";
}

std::string Group::str() const {
  switch (kind) {
    case Kind::Zn:
      return "Z" + std::to_string(param);
    case Kind::Sym:
      return "S" + std::to_string(param);
    case Kind::Dihedral:
      return "D" + std::to_string(param);
    case Kind::Z:
      return "Z";
  }
  return "?";
}

}  // namespace mhd
