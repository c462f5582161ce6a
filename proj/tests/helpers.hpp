// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "sigop/momentum_rep.hpp"

namespace sigop::test {

inline double max_abs(const std::vector<cplx>& v) {
  double m = 0.0;
  for (const cplx& z : v) m = std::max(m, std::abs(z));
  return m;
}

template <class T>
double max_abs(const T& a) {
  return std::max(max_abs(a.plus), max_abs(a.minus));
}

template <class T>
double max_diff(const T& a, const T& b) {
  double m = 0.0;
  for (int s : {1, -1})
    for (std::size_t i = 0; i < a.branch(s).size(); ++i) m = std::max(m, std::abs(a.branch(s)[i] - b.branch(s)[i]));
  return m;
}

inline PacketSpec ell_packet(double center, double width, cplx wp, cplx wm) {
  PacketSpec p;
  p.center = center;
  p.width = width;
  p.weight_plus = wp;
  p.weight_minus = wm;
  return p;
}

inline PacketSpec alpha_packet(double center, double width, cplx wp, cplx wm) {
  PacketSpec p = ell_packet(center, width, wp, wm);
  p.space = ProfileSpace::alpha;
  return p;
}

}  // namespace sigop::test
