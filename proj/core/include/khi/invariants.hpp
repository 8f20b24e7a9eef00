// Concordance-type invariants: equivariant Lee classes in the involutive
// Bar-Natan homology, their H-divisibilities, the induced pair of s-type
// invariants, and the tower-based shortcut on the reduced theory.
#pragma once

#include "khi/complex.hpp"
#include "khi/homology.hpp"

namespace khi {

struct LeeData {
    State s0 = 0;            // oriented (Seifert) resolution
    std::vector<int> color;  // 0 -> label X, 1 -> label X + h, per circle
    int r = 0;               // Seifert circles
    int w = 0;               // writhe
};

// 2-coloring of the Seifert circles; throws if the Seifert graph fails to be
// bipartite (it never does for a checkerboard-colorable diagram)
LeeData lee_labels(const Diagram& D);

// the Lee cycle expanded into generators of C at the oriented resolution in
// the given cone copy; flip == true uses the opposite coloring
Column lee_cycle(const Complex& C, const Diagram& D, const LeeData& L, int copy,
                 bool flip);

// Lee cycle invariant under the chain involution of C (tries both colorings;
// throws if neither survives)
Column equivariant_lee_cycle(const Complex& C, const Diagram& D, const LeeData& L,
                             int copy);

struct SPair {
    int s_lower = 0, s_upper = 0;  // the two s-type invariants
    int d_lower = 0, d_upper = 0;  // underlying H-divisibilities
};

// divisibility method on the unreduced involutive Bar-Natan homology
SPair equivariant_s(const Diagram& D, ConeMode mode, int cap = default_crossing_cap);

// tower method on the reduced involutive Bar-Natan homology; throws
// "tower structure violated" unless the free part is exactly one tower in
// homological degree 0 and one in degree 1
SPair tower_s(const Diagram& D, ConeMode mode, int cap = default_crossing_cap);

// the classical s over (F2[H], H), from the plain (non-involutive) complex
int s_classic(const Diagram& D, int cap = default_crossing_cap);

// duality pairing of two chains supported on a common state; skips the
// pointed circle when reduced == true
Poly pairing_value(const Complex& C, const Column& a, const Column& b, bool reduced);

// recomputes the pair by both methods and checks they agree; returns it
SPair cross_validate(const Diagram& D, ConeMode mode, int cap = default_crossing_cap);

}  // namespace khi
