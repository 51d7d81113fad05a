#include "lincomb.hpp"

namespace mhd {

std::string LinComb::str(const std::function<std::string(const Label&)>& name) const {
  if (t_.empty()) return "0";
  std::string out;
  for (const auto& [l, c] : t_) {
    if (!out.empty()) out += " + ";
    if (!c.is_one()) out += "(" + c.str() + ")*";
    out += name(l);
  }
  return out;
}

}  // namespace mhd
