#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "khi/coeffs.hpp"

using namespace khi;

namespace {

// naive convolution oracle for F2[H] multiplication
Poly slow_mul(Poly a, Poly b) {
    uint64_t r = 0;
    for (int i = 0; i < 32; ++i)
        for (int j = 0; j < 32; ++j)
            if ((a.bits >> i & 1) && (b.bits >> j & 1)) r ^= uint64_t{1} << (i + j);
    return Poly{r};
}

const Ring all_rings[] = {Ring::F2_h0, Ring::F2_h1, Ring::F2H_hH};
const Letter letters[] = {Letter::One, Letter::X};

// multiply two single letters and reduce to an AlgElem of length 1
AlgElem mul(Letter a, Letter b, Ring r) { return alg_multiply(a, b, r); }

}  // namespace

TEST_CASE("polynomial arithmetic matches the naive oracle") {
    for (uint64_t a = 0; a < 64; ++a)
        for (uint64_t b = 0; b < 64; ++b) {
            CHECK(Poly{a} * Poly{b} == slow_mul(Poly{a}, Poly{b}));
            CHECK((Poly{a} + Poly{b}).bits == (a ^ b));
        }
}

TEST_CASE("euclidean division: a = q*b + r with deg r < deg b") {
    for (uint64_t a = 0; a < 256; ++a)
        for (uint64_t b = 1; b < 256; ++b) {
            Poly q = Poly{a}.div(Poly{b}), r = Poly{a}.mod(Poly{b});
            CHECK(q * Poly{b} + r == Poly{a});
            CHECK(r.degree() < Poly{b}.degree());
        }
    CHECK_THROWS_WITH(Poly::one().div(Poly::zero()), "Poly: division by zero");
}

TEST_CASE("valuation") {
    CHECK(poly_valuation(Poly::one()) == 0);
    CHECK(poly_valuation(Poly::monomial(5)) == 5);
    CHECK(poly_valuation(Poly::monomial(3) + Poly::monomial(7)) == 3);
    CHECK_THROWS_WITH(poly_valuation(Poly::zero()), "valuation of zero");
}

TEST_CASE("poly printing") {
    CHECK(Poly::zero().str() == "0");
    CHECK(Poly::one().str() == "1");
    CHECK((Poly::one() + Poly::monomial(1) + Poly::monomial(3)).str() == "1 + H + H^3");
}

TEST_CASE("multiplication table") {
    for (Ring r : all_rings) {
        Poly h = ring_h(r);
        CHECK(mul(Letter::One, Letter::One, r) == AlgElem::word(1, 0));
        CHECK(mul(Letter::One, Letter::X, r) == AlgElem::word(1, 1));
        CHECK(mul(Letter::X, Letter::One, r) == AlgElem::word(1, 1));
        CHECK(mul(Letter::X, Letter::X, r) == AlgElem::word(1, 1, h));  // X^2 = hX
    }
}

TEST_CASE("comultiplication table") {
    for (Ring r : all_rings) {
        AlgElem dX = alg_comultiply(Letter::X, r);
        CHECK(dX == AlgElem::word(2, 0b11));
        AlgElem d1 = alg_comultiply(Letter::One, r);
        AlgElem want = AlgElem::zero(2);
        want.add(0b01, Poly::one());
        want.add(0b10, Poly::one());
        want.add(0b00, ring_h(r));
        CHECK(d1 == want);
    }
}

TEST_CASE("Frobenius identity: Delta(xy) = (x . 1) Delta(y) twisted") {
    // Delta o m = (m @ id) o (id @ Delta) on pairs of letters
    for (Ring r : all_rings)
        for (Letter x : letters)
            for (Letter y : letters) {
                // lhs: Delta(x*y), an element of A@A
                AlgElem xy = mul(x, y, r);
                AlgElem lhs = AlgElem::zero(2);
                for (auto& [m, c] : xy.terms) {
                    AlgElem d = alg_comultiply(m ? Letter::X : Letter::One, r);
                    for (auto& [dm, dc] : d.terms) lhs.add(dm, c * dc);
                }
                // rhs: multiply x into the first tensor factor of Delta(y)
                AlgElem dy = alg_comultiply(y, r);
                AlgElem rhs = AlgElem::zero(2);
                for (auto& [dm, dc] : dy.terms) {
                    AlgElem p = mul(x, (dm & 1) ? Letter::X : Letter::One, r);
                    for (auto& [pm, pc] : p.terms) rhs.add((dm & ~uint64_t{1}) | pm, dc * pc);
                }
                CHECK(lhs == rhs);
            }
}

TEST_CASE("sigma is a self-inverse algebra automorphism") {
    for (Ring r : all_rings) {
        // on words of length up to 3 with poly coefficients
        for (uint64_t mask = 0; mask < 8; ++mask) {
            AlgElem e = AlgElem::word(3, mask, Poly::one() + ring_h(r));
            CHECK(alg_sigma(alg_sigma(e, r), r) == e);
        }
        // sigma(X)*sigma(X) = sigma(X*X) in length 1
        AlgElem sx = alg_sigma(AlgElem::word(1, 1), r);
        AlgElem lhs = AlgElem::zero(1);
        for (auto& [m1, c1] : sx.terms)
            for (auto& [m2, c2] : sx.terms) {
                AlgElem p = mul(m1 ? Letter::X : Letter::One, m2 ? Letter::X : Letter::One, r);
                for (auto& [pm, pc] : p.terms) lhs.add(pm, c1 * c2 * pc);
            }
        AlgElem x2 = mul(Letter::X, Letter::X, r);
        AlgElem rhs = AlgElem::zero(1);
        for (auto& [m, c] : x2.terms) {
            AlgElem s = alg_sigma(AlgElem::word(1, m, c), r);
            for (auto& [sm, sc] : s.terms) rhs.add(sm, sc);
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("sigma fixes 1 and sends X to X + h") {
    for (Ring r : all_rings) {
        CHECK(alg_sigma(AlgElem::word(1, 0), r) == AlgElem::word(1, 0));
        AlgElem want = AlgElem::word(1, 1);
        want.add(0, ring_h(r));
        CHECK(alg_sigma(AlgElem::word(1, 1), r) == want);
    }
}

TEST_CASE("pairing table and symmetry") {
    for (Ring r : all_rings) {
        CHECK(alg_pair(Letter::One, Letter::One, r) == Poly::zero());
        CHECK(alg_pair(Letter::One, Letter::X, r) == Poly::one());
        CHECK(alg_pair(Letter::X, Letter::One, r) == Poly::one());
        CHECK(alg_pair(Letter::X, Letter::X, r) == ring_h(r));
    }
}

TEST_CASE("ring helpers") {
    CHECK(ring_graded(Ring::F2_h0));
    CHECK(ring_graded(Ring::F2H_hH));
    CHECK(!ring_graded(Ring::F2_h1));
    CHECK(ring_h_invertible(Ring::F2_h1));
    CHECK(!ring_h_invertible(Ring::F2H_hH));
    CHECK(ring_h(Ring::F2_h0).is_zero());
    CHECK(ring_h(Ring::F2_h1).is_one());
    CHECK(ring_h(Ring::F2H_hH) == Poly::monomial(1));
}
