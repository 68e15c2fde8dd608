#pragma once

// The Arnoux-Yoccoz family. For g >= 3, alpha is the root in (0, 1) of
// x^g + ... + x - 1. The boundary circle of a Moebius band (circumference 2)
// is cut into blocks alpha, alpha, alpha^2, alpha^2, ..., alpha^g, alpha^g and
// equal neighbours are swapped. Scaling by 1/2 and rotating by 1/2 gives the
// map induced on the lifted core curve of the orientation double cover.

#include "ietsaf/iet.hpp"

namespace ietsaf {

NumberField ay_alpha(int g);
AlgNum ay_alpha_value(const NumberField& field);

Iet ay_boundary_involution(int g);
Iet ay_lift(int g);

// Same construction with blocks placed in `block_order` (a permutation of 1..g).
// ay_lift(g) uses 1, 2, ..., g; other orders serve as negative controls.
Iet ay_lift_with_order(int g, std::span<const int> block_order);

/// x^g - x^(g-1) - ... - x - 1, whose root above 1 is 1/alpha.
IntPoly ay_stretch_minpoly(int g);

/// Rotation amount (1 + alpha^g) / 2 carrying the base point of the scaled
/// lift to the base point of the induced map.
AlgNum ay_conjugating_rotation(const NumberField& field, int g);

/// The induced map on [0, alpha) equals the lift scaled by alpha, after
/// conjugating by the circle rotation above:
///   first_return(T, alpha) == scale(R_c o T o R_-c, alpha).
bool self_similarity_holds(const Iet& lift, const AlgNum& alpha, const AlgNum& c, long cap = kDefaultReturnCap);
bool ay_self_similarity_check(int g);

struct AySystem {
  int g;
  NumberField field;
  Iet boundary_involution;
  Iet lift;
  IntPoly stretch_minpoly;
};

AySystem ay_system(int g);

}  // namespace ietsaf
