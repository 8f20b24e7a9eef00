// Chain complexes: the cube of resolutions over a chosen coefficient ring,
// its involutive mapping cone, reduced and coreduced variants, and the
// degree-zero splitting map kappa.
#pragma once

#include "khi/coeffs.hpp"
#include "khi/diagram.hpp"

#include <cstdint>
#include <vector>

namespace khi {

enum class Theory { kh, bn, bn1 };  // (F2, 0), (F2[H], H), (F2, 1)
Ring theory_ring(Theory t);

enum class Variant { unreduced, reduced, coreduced };
enum class ConeMode { tau, sigma_tau };

// thrown when a diagram exceeds the crossing cap (CLI exit code 3)
struct ResourceCap : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// sparse column vector over F2[H]
using Column = std::vector<std::pair<long, Poly>>;

struct GenRef {
    State s = 0;
    uint64_t x_mask = 0;  // bit c set <-> circle c of D(s) carries X
    int copy = 0;         // 0 = original summand, 1 = Q-shifted summand
};

struct Complex {
    Ring ring = Ring::F2_h0;
    bool graded = true;  // false over (F2, h=1)
    bool involutive = false;
    Variant variant = Variant::unreduced;
    ConeMode cone_mode = ConeMode::tau;
    int n = 0;  // crossings of the underlying diagram

    long n_gens = 0;
    std::vector<int> deg_i, deg_q;  // per generator; deg_q meaningless if !graded
    std::vector<GenRef> gen_info;
    std::vector<Column> d;  // differential, one column per generator

    // lookup; -1 if the generator is not present in this variant
    long index_of(State s, uint64_t x_mask, int copy) const;

    int i_min = 0, i_max = 0;

    // implementation details needed by index_of and the involution action
    std::vector<long> offset0, offset1;    // per state
    std::vector<int> circle_count;         // per state
    std::vector<int> pointed_circle;       // per state; -1 without basepoint
};

// default crossing cap; beyond it the state cube is declined
inline constexpr int default_crossing_cap = 20;

Complex build_ckh(const Diagram& D, Ring ring, Variant variant,
                  int cap = default_crossing_cap);
Complex build_involutive(const Diagram& D, Ring ring, ConeMode mode, Variant variant,
                         int cap = default_crossing_cap);

// image of a single generator under the chain involution (tau relabeling,
// with the sigma twist applied on every circle in sigma_tau mode); stays in
// the same copy
Column involution_image(const Complex& C, const Diagram& D, long gen);

// kappa: defined on the coreduced representatives (1 on the pointed circle)
// of an unreduced involutive complex; swaps the basepoint letter to X while
// turning k+1 X-circles back to 1 against a coefficient h^k.  Returns one
// column per generator (empty off the domain).  Satisfies d kappa + kappa d
// = f, with f the block of d mapping coreduced representatives into the
// reduced subcomplex.
std::vector<Column> kappa_map(const Complex& C);

// checks d^2 = 0 and, in the graded case, homogeneity of d; throws on breach
void verify_complex(const Complex& C);

}  // namespace khi
