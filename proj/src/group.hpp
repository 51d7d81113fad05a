#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace mhd {

// finite groups are enumerated 0..order-1 with 0 the identity;
// the integers use their own value as the label
struct Group {
  enum class Kind { Zn, Sym, Dihedral, Z };
  Kind kind = Kind::Zn;
  std::int64_t order = 1;  // 0 for Z
  std::int64_t param = 1;  // Zn: n, Sym: n, Dihedral: m (order 2m)

  static Group zn(std::int64_t n);
  static Group sym(std::int64_t n);
  static Group dihedral(std::int64_t m);
  static Group integers();
  static Group parse(const std::string& s);  // "zn:6", "sym:3", "dihedral:4", "z"

  bool finite() const { return kind != Kind::Z; }
  bool abelian() const;
  std::int64_t id() const { return 0; }
  std::int64_t op(std::int64_t a, std::int64_t b) const;
  std::int64_t inv(std::int64_t a) const;
  std::vector<std::int64_t> elements(std::int64_t window) const;
  std::string name(std::int64_t g) const;
  std::string str() const;
};

}  // namespace mhd
