#pragma once

// Graded pieces A_u = H^0(P^1, O(D(u))) of the section ring over P^1.

#include <cstddef>
#include <utility>
#include <vector>

#include "ppdiv/poldiv.hpp"

namespace ppdiv {

/// max(0, deg floor(E) + 1).
Integer h0_P1(const RationalDivisor& E);

/// dim A_u; zero outside the weight cone. Throws NotP1.
Integer weight_dimension(const PolyhedralDivisor& D, const ZVector& u);

struct HilbertEntry {
  ZVector weight;
  Integer dimension;
};

/// weight_dimension at every lattice point of the box, lexicographic order.
/// A coordinate range with lo > hi makes the box empty.
std::vector<HilbertEntry> hilbert_table(const PolyhedralDivisor& D, const std::vector<std::pair<Integer, Integer>>& box);

}  // namespace ppdiv
