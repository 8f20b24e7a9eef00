#include "khi/complex.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace khi {

Ring theory_ring(Theory t) {
    switch (t) {
        case Theory::kh: return Ring::F2_h0;
        case Theory::bn: return Ring::F2H_hH;
        case Theory::bn1: return Ring::F2_h1;
    }
    return Ring::F2_h0;
}

namespace {

struct Pairs {
    std::pair<int, int> a, b;
};

Pairs smoothing_pairs(const Crossing& c, int bit) {
    bool seifert = (c.sign > 0) == (bit == 0);
    if (seifert) return {{c.o_in, c.u_out}, {c.u_in, c.o_out}};
    return {{c.o_in, c.u_in}, {c.u_out, c.o_out}};
}

// local generator index of a circle-label mask within one state block
long local_index(const Complex& C, State s, uint64_t mask) {
    int p = C.pointed_circle[s];
    if (C.variant == Variant::unreduced) return (long)mask;
    // drop the pointed bit from the mask
    uint64_t low = mask & ((uint64_t{1} << p) - 1);
    uint64_t high = (mask >> (p + 1)) << p;
    return (long)(low | high);
}

bool in_variant(const Complex& C, State s, uint64_t mask) {
    if (C.variant == Variant::unreduced) return true;
    int p = C.pointed_circle[s];
    bool pointed_x = mask >> p & 1;
    return C.variant == Variant::reduced ? pointed_x : !pointed_x;
}

}  // namespace

long Complex::index_of(State s, uint64_t x_mask, int copy) const {
    if (!in_variant(*this, s, x_mask)) return -1;
    long base = copy == 0 ? offset0[s] : offset1[s];
    return base + local_index(*this, s, x_mask);
}

namespace {

// shared construction; cone == false ignores mode
Complex build(const Diagram& Din, Ring ring, Variant variant, ConeMode mode,
              bool cone, int cap) {
    Diagram D = Din;
    validate_or_throw(D);
    int n = D.n_crossings();
    if (n > cap)
        throw ResourceCap("crossing cap exceeded: " + std::to_string(n) + " > " +
                          std::to_string(cap));
    if (variant != Variant::unreduced && D.basepoint == -1)
        throw std::runtime_error("reduced and coreduced variants need a basepoint");
    if (cone && mode == ConeMode::sigma_tau && variant != Variant::unreduced)
        throw std::runtime_error("sigma-tau cone only exists unreduced");

    Complex C;
    C.ring = ring;
    C.graded = ring_graded(ring);
    C.involutive = cone;
    C.variant = variant;
    C.cone_mode = mode;
    C.n = n;

    long n_states = 1L << n;
    std::vector<ResolvedDiagram> res((size_t)n_states);
    C.offset0.assign((size_t)n_states, 0);
    C.offset1.assign((size_t)n_states, 0);
    C.circle_count.assign((size_t)n_states, 0);
    C.pointed_circle.assign((size_t)n_states, -1);

    long total = 0;
    for (State s = 0; s < (State)n_states; ++s) {
        res[s] = resolve_state(D, s);
        C.circle_count[s] = res[s].circle_count;
        if (D.basepoint != -1)
            C.pointed_circle[s] = res[s].circle_of_edge[D.basepoint];
        C.offset0[s] = total;
        int r = res[s].circle_count;
        total += variant == Variant::unreduced ? (1L << r) : (1L << (r - 1));
    }
    long half = total;
    if (cone) {
        for (State s = 0; s < (State)n_states; ++s) C.offset1[s] = C.offset0[s] + half;
        total *= 2;
    }
    C.n_gens = total;

    int n_minus = D.n_minus(), n_plus = D.n_plus();
    int jshift = variant == Variant::reduced ? 1 : variant == Variant::coreduced ? -1 : 0;

    C.deg_i.assign(total, 0);
    C.deg_q.assign(total, 0);
    C.gen_info.resize(total);
    C.d.assign(total, {});

    // representative edge per circle, per state (filled as states are used)
    auto reps = [&](State s) {
        std::vector<int> rep(res[s].circle_count, -1);
        for (int e = 0; e < D.n_edges; ++e)
            if (rep[res[s].circle_of_edge[e]] == -1) rep[res[s].circle_of_edge[e]] = e;
        return rep;
    };

    Poly h = ring_h(ring);
    int copies = cone ? 2 : 1;

    for (State s = 0; s < (State)n_states; ++s) {
        int r = res[s].circle_count;
        int weight = std::popcount(s);
        std::vector<int> rep = reps(s);
        long n_local = variant == Variant::unreduced ? (1L << r) : (1L << (r - 1));

        // enumerate the masks present in this variant in local-index order
        std::vector<uint64_t> masks(n_local);
        {
            long li = 0;
            for (uint64_t m = 0; m < (uint64_t{1} << r); ++m)
                if (in_variant(C, s, m)) masks[li++] = m;
        }

        for (int copy = 0; copy < copies; ++copy) {
            long base = copy == 0 ? C.offset0[s] : C.offset1[s];
            for (long li = 0; li < n_local; ++li) {
                uint64_t m = masks[li];
                long g = base + li;
                C.gen_info[g] = {s, m, copy};
                C.deg_i[g] = weight - n_minus + copy;
                C.deg_q[g] =
                    (r - 2 * std::popcount(m)) + weight + n_plus - 2 * n_minus + jshift;
            }
        }

        // cube differential out of this state
        for (int c = 0; c < n; ++c) {
            if (s >> c & 1) continue;
            State s2 = s | (State{1} << c);
            Pairs pr = smoothing_pairs(D.crossings[c], 0);
            int a = res[s].circle_of_edge[pr.a.first];
            int b = res[s].circle_of_edge[pr.b.first];
            auto& B = res[s2];
            // transport of untouched circles
            std::vector<int> cmap(r, -1);
            for (int k = 0; k < r; ++k)
                if (k != a && k != b) cmap[k] = B.circle_of_edge[rep[k]];

            for (long li = 0; li < n_local; ++li) {
                uint64_t m = masks[li];
                uint64_t carried = 0;
                for (int k = 0; k < r; ++k)
                    if (k != a && k != b && (m >> k & 1)) carried |= uint64_t{1} << cmap[k];

                AlgElem out = AlgElem::zero(0);
                uint64_t target_bits[2] = {0, 0};
                if (a != b) {  // merge
                    int tgt = B.circle_of_edge[pr.a.first];
                    target_bits[0] = uint64_t{1} << tgt;
                    out = alg_multiply((m >> a & 1) ? Letter::X : Letter::One,
                                       (m >> b & 1) ? Letter::X : Letter::One, ring);
                } else {  // split: the two edges of one old strand end up on
                          // the two child circles
                    int t1 = B.circle_of_edge[pr.a.first];
                    int t2 = B.circle_of_edge[pr.a.second];
                    target_bits[0] = uint64_t{1} << t1;
                    target_bits[1] = uint64_t{1} << t2;
                    out = alg_comultiply((m >> a & 1) ? Letter::X : Letter::One, ring);
                }
                for (auto& [letters, coef] : out.terms) {
                    uint64_t m2 = carried;
                    if (letters & 1) m2 |= target_bits[0];
                    if (letters & 2) m2 |= target_bits[1];
                    long row_local = C.index_of(s2, m2, 0);
                    if (row_local < 0) continue;  // projected away in a quotient
                    for (int copy = 0; copy < copies; ++copy) {
                        long g = (copy == 0 ? C.offset0[s] : C.offset1[s]) + li;
                        long row = row_local + (copy == 0 ? 0 : half);
                        C.d[g].push_back({row, coef});
                    }
                }
            }
        }
    }

    // combine duplicate rows (cancellation over characteristic 2 polynomials)
    auto normalize = [](Column& col) {
        std::sort(col.begin(), col.end(),
                  [](auto& x, auto& y) { return x.first < y.first; });
        Column out;
        for (auto& [row, c] : col) {
            if (!out.empty() && out.back().first == row) out.back().second += c;
            else out.push_back({row, c});
        }
        std::erase_if(out, [](auto& rc) { return rc.second.is_zero(); });
        col = std::move(out);
    };

    if (cone) {
        // connecting map Q(1 + T) from copy 0 into copy 1
        for (State s = 0; s < (State)n_states; ++s) {
            long n_local =
                variant == Variant::unreduced ? (1L << res[s].circle_count)
                                              : (1L << (res[s].circle_count - 1));
            for (long li = 0; li < n_local; ++li) {
                long g = C.offset0[s] + li;
                C.d[g].push_back({g + half, Poly::one()});
                Column img = involution_image(C, D, g);
                for (auto& [row, coef] : img) C.d[g].push_back({row + half, coef});
            }
        }
    }
    for (auto& col : C.d) normalize(col);

    C.i_min = -n_minus;
    C.i_max = n_plus + (cone ? 1 : 0);
    return C;
}

}  // namespace

Complex build_ckh(const Diagram& D, Ring ring, Variant variant, int cap) {
    return build(D, ring, variant, ConeMode::tau, false, cap);
}

Complex build_involutive(const Diagram& D, Ring ring, ConeMode mode, Variant variant,
                         int cap) {
    return build(D, ring, variant, mode, true, cap);
}

Column involution_image(const Complex& C, const Diagram& D, long gen) {
    const GenRef& g = C.gen_info[gen];
    TauAction ta = tau_action(D, g.s);
    uint64_t m2 = 0;
    for (int k = 0; k < C.circle_count[g.s]; ++k)
        if (g.x_mask >> k & 1) m2 |= uint64_t{1} << ta.circle_map[k];

    Column out;
    // the relevant symmetry is tau for strong inversions and sigma-tau for
    // 2-periodic diagrams; a cone records its choice in cone_mode
    bool sigma = C.involutive ? C.cone_mode == ConeMode::sigma_tau
                              : D.mode == Mode::periodic_2;
    if (!sigma) {
        long row = C.index_of(ta.s_image, m2, g.copy);
        if (row >= 0) out.push_back({row, Poly::one()});
        return out;
    }
    // sigma twist: every X becomes X + h
    Poly h = ring_h(C.ring);
    uint64_t sub = m2;
    while (true) {
        Poly coef = Poly::one();
        for (int k = 0; k < std::popcount(m2 & ~sub); ++k) coef = coef * h;
        if (!coef.is_zero()) {
            long row = C.index_of(ta.s_image, sub, g.copy);
            if (row >= 0) out.push_back({row, coef});
        }
        if (sub == 0) break;
        sub = (sub - 1) & m2;
    }
    return out;
}

std::vector<Column> kappa_map(const Complex& C) {
    if (C.variant != Variant::unreduced)
        throw std::runtime_error("kappa is defined on the unreduced complex");
    std::vector<Column> K(C.n_gens);
    Poly h = ring_h(C.ring);
    for (long g = 0; g < C.n_gens; ++g) {
        const GenRef& gr = C.gen_info[g];
        int p = C.pointed_circle[gr.s];
        if (p < 0) throw std::runtime_error("kappa needs a basepoint");
        if (gr.x_mask >> p & 1) continue;  // domain: 1 on the pointed circle
        // pick k+1 X-circles to clear, set X on the pointed circle, weight h^k
        uint64_t xs = gr.x_mask;
        for (uint64_t sub = xs;; sub = (sub - 1) & xs) {
            int k = std::popcount(sub) - 1;
            if (k >= 0) {
                Poly coef = Poly::one();
                for (int t = 0; t < k; ++t) coef = coef * h;
                if (!coef.is_zero()) {
                    uint64_t m2 = (xs & ~sub) | (uint64_t{1} << p);
                    long row = C.index_of(gr.s, m2, gr.copy);
                    K[g].push_back({row, coef});
                }
            }
            if (sub == 0) break;
        }
        std::sort(K[g].begin(), K[g].end());
    }
    return K;
}

void verify_complex(const Complex& C) {
    // grading of the differential
    for (long g = 0; g < C.n_gens; ++g)
        for (auto& [row, coef] : C.d[g]) {
            if (C.deg_i[row] != C.deg_i[g] + 1)
                throw std::runtime_error("differential breaks the homological grading");
            if (C.graded) {
                // deg H = -2, so an entry H^k lands 2k higher in q
                int rise = C.deg_q[row] - C.deg_q[g];
                if (rise < 0 || rise % 2 != 0 || !coef.is_monomial() ||
                    coef != Poly::monomial(rise / 2))
                    throw std::runtime_error("differential breaks the quantum grading");
            }
        }
    // d^2 = 0
    for (long g = 0; g < C.n_gens; ++g) {
        std::vector<std::pair<long, Poly>> acc;
        for (auto& [mid, c1] : C.d[g])
            for (auto& [row, c2] : C.d[mid]) acc.push_back({row, c1 * c2});
        std::sort(acc.begin(), acc.end(),
                  [](auto& x, auto& y) { return x.first < y.first; });
        Poly run = Poly::zero();
        for (size_t k = 0; k < acc.size(); ++k) {
            run += acc[k].second;
            if (k + 1 == acc.size() || acc[k + 1].first != acc[k].first) {
                if (!run.is_zero()) throw std::runtime_error("d^2 != 0");
                run = Poly::zero();
            }
        }
    }
}

}  // namespace khi
