#include "khi/coeffs.hpp"

#include <bit>
#include <sstream>

namespace khi {

bool ring_graded(Ring r) { return r != Ring::F2_h1; }
bool ring_h_invertible(Ring r) { return r == Ring::F2_h1; }

std::string ring_name(Ring r) {
    switch (r) {
        case Ring::F2_h0: return "F2";
        case Ring::F2_h1: return "F2[h=1]";
        case Ring::F2H_hH: return "F2[H]";
    }
    return "?";
}

Poly ring_h(Ring r) {
    switch (r) {
        case Ring::F2_h0: return Poly::zero();
        case Ring::F2_h1: return Poly::one();
        case Ring::F2H_hH: return Poly::monomial(1);
    }
    return Poly::zero();
}

Poly Poly::monomial(unsigned k) {
    if (k >= 64) throw std::overflow_error("Poly: H-exponent out of range");
    return Poly{uint64_t{1} << k};
}

int Poly::degree() const {
    if (bits == 0) return -1;
    return 63 - std::countl_zero(bits);
}

Poly operator*(Poly a, Poly b) {
    // carry-less multiplication
    if (a.bits == 0 || b.bits == 0) return Poly::zero();
    if (a.degree() + b.degree() >= 64) throw std::overflow_error("Poly: product overflows");
    uint64_t r = 0, x = a.bits, y = b.bits;
    while (y) {
        int k = std::countr_zero(y);
        r ^= x << k;
        y &= y - 1;
    }
    return Poly{r};
}

Poly Poly::div(Poly b) const {
    if (b.is_zero()) throw std::domain_error("Poly: division by zero");
    uint64_t rem = bits, q = 0;
    int db = b.degree();
    while (rem != 0) {
        int dr = 63 - std::countl_zero(rem);
        if (dr < db) break;
        q ^= uint64_t{1} << (dr - db);
        rem ^= b.bits << (dr - db);
    }
    return Poly{q};
}

Poly Poly::mod(Poly b) const { return *this + div(b) * b; }

std::string Poly::str() const {
    if (bits == 0) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < 64; ++k) {
        if (!(bits >> k & 1)) continue;
        if (!first) os << " + ";
        first = false;
        if (k == 0) os << "1";
        else if (k == 1) os << "H";
        else os << "H^" << k;
    }
    return os.str();
}

unsigned poly_valuation(Poly p) {
    if (p.is_zero()) throw std::domain_error("valuation of zero");
    return std::countr_zero(p.bits);
}

AlgElem AlgElem::word(int len, uint64_t mask, Poly c) {
    AlgElem e{len, {}};
    if (!c.is_zero()) e.terms[mask] = c;
    return e;
}

void AlgElem::add(uint64_t mask, Poly c) {
    if (c.is_zero()) return;
    auto it = terms.find(mask);
    if (it == terms.end()) {
        terms[mask] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

AlgElem alg_multiply(Letter x, Letter y, Ring ring) {
    AlgElem e = AlgElem::zero(1);
    if (x == Letter::One && y == Letter::One) {
        e.add(0, Poly::one());
    } else if (x == Letter::X && y == Letter::X) {
        e.add(1, ring_h(ring));  // X^2 = hX
    } else {
        e.add(1, Poly::one());
    }
    return e;
}

AlgElem alg_comultiply(Letter x, Ring ring) {
    AlgElem e = AlgElem::zero(2);
    if (x == Letter::X) {
        e.add(0b11, Poly::one());
    } else {
        e.add(0b01, Poly::one());
        e.add(0b10, Poly::one());
        e.add(0b00, ring_h(ring));
    }
    return e;
}

AlgElem alg_sigma(const AlgElem& e, Ring ring) {
    // substitute X -> X + h on every letter: a word with X-set S expands to
    // the sum over T <= S of h^{|S\T|} times the word with X-set T
    Poly h = ring_h(ring);
    AlgElem out = AlgElem::zero(e.len);
    for (auto& [mask, c] : e.terms) {
        // iterate over submasks of mask
        uint64_t sub = mask;
        while (true) {
            Poly hp = Poly::one();
            int dropped = std::popcount(mask & ~sub);
            for (int k = 0; k < dropped; ++k) hp = hp * h;
            out.add(sub, c * hp);
            if (sub == 0) break;
            sub = (sub - 1) & mask;
        }
    }
    return out;
}

Poly alg_pair(Letter x, Letter y, Ring ring) {
    if (x == Letter::One && y == Letter::One) return Poly::zero();
    if (x == Letter::X && y == Letter::X) return ring_h(ring);
    return Poly::one();
}

}  // namespace khi
