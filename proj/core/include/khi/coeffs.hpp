// Coefficient rings of characteristic 2 and the Frobenius algebra
// A = R[X]/(X(X+h)) with structure maps, the automorphism sigma and the
// duality pairing.
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace khi {

// (R, h) variants: (F2, 0), (F2, 1), (F2[H], H).
enum class Ring { F2_h0, F2_h1, F2H_hH };

bool ring_graded(Ring r);        // true unless h = 1
bool ring_h_invertible(Ring r);  // true only for F2_h1
std::string ring_name(Ring r);

// Element of F2[H], dense bit-packed: bit k <-> H^k.  deg(H) = -2 in the
// graded ring; the two F2 variants only ever hold the constants 0 and 1.
struct Poly {
    uint64_t bits = 0;

    Poly() = default;
    explicit Poly(uint64_t b) : bits(b) {}
    static Poly zero() { return Poly{}; }
    static Poly one() { return Poly{1}; }
    static Poly monomial(unsigned k);

    bool is_zero() const { return bits == 0; }
    bool is_one() const { return bits == 1; }
    bool is_monomial() const { return bits != 0 && (bits & (bits - 1)) == 0; }

    int degree() const;  // H-degree of the leading term; -1 for zero

    friend Poly operator+(Poly a, Poly b) { return Poly{a.bits ^ b.bits}; }
    friend Poly operator*(Poly a, Poly b);
    Poly& operator+=(Poly o) { bits ^= o.bits; return *this; }
    friend bool operator==(Poly a, Poly b) { return a.bits == b.bits; }
    friend bool operator!=(Poly a, Poly b) { return a.bits != b.bits; }
    friend bool operator<(Poly a, Poly b) { return a.bits < b.bits; }  // arbitrary total order

    // quotient of Euclidean division by b (b != 0)
    Poly div(Poly b) const;
    Poly mod(Poly b) const;

    std::string str() const;  // e.g. "1 + H^2"
};

// h as an element of R
Poly ring_h(Ring r);

// largest k with H^k | p; throws on zero input
unsigned poly_valuation(Poly p);

// Algebra letters and elements.  A basis word over {1, X} is stored as a bit
// mask (bit i set <-> circle i carries X); an element is a Poly-linear
// combination of words of a common length.
enum class Letter : uint8_t { One = 0, X = 1 };

struct AlgElem {
    int len = 0;
    std::map<uint64_t, Poly> terms;  // word mask -> coefficient, no zeros

    static AlgElem zero(int len) { return AlgElem{len, {}}; }
    static AlgElem word(int len, uint64_t mask, Poly c = Poly::one());

    void add(uint64_t mask, Poly c);
    bool operator==(const AlgElem& o) const { return len == o.len && terms == o.terms; }
};

// m on single letters, bilinear: X*X = h*X, X*1 = X, 1*1 = 1
AlgElem alg_multiply(Letter x, Letter y, Ring ring);
// Delta(X) = X@X, Delta(1) = 1@X + X@1 + h*(1@1)
AlgElem alg_comultiply(Letter x, Ring ring);
// sigma: 1 -> 1, X -> X + h, extended multiplicatively and linearly
AlgElem alg_sigma(const AlgElem& e, Ring ring);
// <x,y> = eps(x*y): <1,1> = 0, <1,X> = <X,1> = 1, <X,X> = h
Poly alg_pair(Letter x, Letter y, Ring ring);

}  // namespace khi
