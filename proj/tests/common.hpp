#pragma once

#include <string>

#include "dx/corresp.hpp"
#include "dx/silting.hpp"
#include "dx/smc.hpp"
#include "dx/subcat.hpp"
#include "dx/verify.hpp"

namespace dxtest {

inline dx::Quiver quiver_file(const std::string& name) { return dx::load_quiver(std::string(DX_DATA_DIR) + "/" + name); }

inline dx::Window window(const std::string& file, int d, std::uint64_t seed = 1) {
  return dx::Window{dx::knit_indecomposables(quiver_file(file)), d, seed, 4};
}

inline dx::Summand S(const dx::IndTable& t, const std::string& name, int shift = 0) {
  const int i = t.find(name);
  if (i < 0) throw std::runtime_error("no module " + name);
  return {i, shift};
}

// Subcategory from a literal such as "P2,I1@1".
inline dx::Subcat sub(const dx::IndTable& t, const std::string& lit) {
  if (lit.empty()) return {};
  auto x = dx::parse_wobj(t, lit);
  return dx::Subcat(x.s.begin(), x.s.end());
}

inline dx::SiltObj silt(const dx::IndTable& t, const std::string& lit) {
  auto x = dx::parse_wobj(t, lit).s;
  std::sort(x.begin(), x.end());
  return x;
}

}  // namespace dxtest
