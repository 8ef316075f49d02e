#pragma once

#include <optional>
#include <string>

#include "ncx/linalg.hpp"

namespace ncx {

// The boxed entry of a 2×2 matrix; there are exactly four quasideterminants,
// one per box.
struct BoxPos {
  int row = 1; // 1 or 2
  int col = 1; // 1 or 2

  friend bool operator==(const BoxPos& a, const BoxPos& b) {
    return a.row == b.row && a.col == b.col;
  }
  std::string str() const {
    return "(" + std::to_string(row) + "," + std::to_string(col) + ")";
  }
};

// |M|_{rc} = m_{rc} − m_{rc'}·(m_{r'c'})⁻¹·m_{r'c} where r', c' are the other
// row and column. Partial: the diagonally opposite entry m_{r'c'} is the one
// inverted, so the quasideterminant is undefined when it is zero. nullopt
// signals exactly that case.
template <DivisionRing S>
std::optional<S> try_quasidet(const Mat2<S>& m, BoxPos pos) {
  const int r = pos.row, c = pos.col;
  const int ro = r == 1 ? 2 : 1, co = c == 1 ? 2 : 1;
  const S& opposite = m.at(ro, co);
  if (opposite.is_zero()) return std::nullopt;
  return m.at(r, c) - m.at(r, co) * opposite.inverse() * m.at(ro, c);
}

template <DivisionRing S>
S quasidet(const Mat2<S>& m, BoxPos pos) {
  auto v = try_quasidet(m, pos);
  if (!v) {
    const int ro = pos.row == 1 ? 2 : 1, co = pos.col == 1 ? 2 : 1;
    throw Undefined("quasidet", "box " + pos.str(),
                    "opposite entry (" + std::to_string(ro) + "," + std::to_string(co) +
                        ") of " + m.str() + " is zero");
  }
  return *v;
}

} // namespace ncx
