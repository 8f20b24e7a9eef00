#include "khi/invariants.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace khi {

LeeData lee_labels(const Diagram& D) {
    SeifertData sd = seifert_resolution(D);
    LeeData L;
    L.s0 = sd.seifert_state;
    L.r = sd.r;
    L.w = sd.w;
    L.color.assign(sd.r, -1);
    // BFS 2-coloring of the Seifert graph, component by component
    std::vector<std::vector<int>> adj(sd.r);
    for (auto& [a, b] : sd.seifert_graph) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (int s = 0; s < sd.r; ++s) {
        if (L.color[s] != -1) continue;
        L.color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : adj[v]) {
                if (L.color[u] == -1) {
                    L.color[u] = 1 - L.color[v];
                    stack.push_back(u);
                } else if (L.color[u] == L.color[v]) {
                    throw std::runtime_error("Seifert graph is not bipartite");
                }
            }
        }
    }
    return L;
}

Column lee_cycle(const Complex& C, const Diagram& D, const LeeData& L, int copy,
                 bool flip) {
    // product over circles of X (color 0) or X + h (color 1); expanding the
    // X + h factors walks over subsets of the color-1 circles
    Poly h = ring_h(C.ring);
    uint64_t ones = 0, xs = 0;
    for (int c = 0; c < L.r; ++c) {
        int col = L.color[c] ^ (flip ? 1 : 0);
        if (col == 0) xs |= uint64_t{1} << c;
        else ones |= uint64_t{1} << c;
    }
    std::map<long, Poly> acc;
    uint64_t sub = ones;
    while (true) {
        // circles in `sub` keep their X from the (X + h) factor
        Poly coef = Poly::one();
        for (int k = 0; k < std::popcount(ones & ~sub); ++k) coef = coef * h;
        if (!coef.is_zero()) {
            long g = C.index_of(L.s0, xs | sub, copy);
            if (g >= 0) acc[g] += coef;
        }
        if (sub == 0) break;
        sub = (sub - 1) & ones;
    }
    Column out;
    for (auto& [g, c] : acc)
        if (!c.is_zero()) out.push_back({g, c});
    return out;
}

namespace {

bool columns_equal(Column a, Column b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

// image of a chain under the complex involution
Column involution_image_chain(const Complex& C, const Diagram& D, const Column& z) {
    std::map<long, Poly> acc;
    for (auto& [g, c] : z)
        for (auto& [row, e] : involution_image(C, D, g)) acc[row] += c * e;
    Column out;
    for (auto& [g, c] : acc)
        if (!c.is_zero()) out.push_back({g, c});
    return out;
}

}  // namespace

Column equivariant_lee_cycle(const Complex& C, const Diagram& D, const LeeData& L,
                             int copy) {
    for (bool flip : {false, true}) {
        Column z = lee_cycle(C, D, L, copy, flip);
        if (columns_equal(involution_image_chain(C, D, z), z)) return z;
    }
    throw std::runtime_error("no equivariant Lee cycle");
}

SPair equivariant_s(const Diagram& D, ConeMode mode, int cap) {
    Complex C = build_involutive(D, Ring::F2H_hH, mode, Variant::unreduced, cap);
    LeeData L = lee_labels(D);
    HomologySolver H(C);
    Column lower = equivariant_lee_cycle(C, D, L, 0);
    Column upper = equivariant_lee_cycle(C, D, L, 1);
    SPair out;
    out.d_lower = H.divisibility(0, lower);
    out.d_upper = H.divisibility(1, upper);
    int base = L.w - L.r + 1;
    out.s_lower = 2 * out.d_lower + base;
    out.s_upper = 2 * out.d_upper + base;
    return out;
}

SPair tower_s(const Diagram& D, ConeMode mode, int cap) {
    Complex C = build_involutive(D, Ring::F2H_hH, mode, Variant::reduced, cap);
    HomologySolver H(C);
    const GradedModule& M = H.module();
    if (M.free_part.size() != 2 || M.free_part[0].i != 0 || M.free_part[1].i != 1)
        throw std::runtime_error("tower structure violated");
    SPair out;
    out.s_lower = M.free_part[0].q;
    out.s_upper = M.free_part[1].q;
    out.d_lower = out.d_upper = 0;  // not meaningful for this method
    return out;
}

int s_classic(const Diagram& D, int cap) {
    Complex C = build_ckh(D, Ring::F2H_hH, Variant::unreduced, cap);
    LeeData L = lee_labels(D);
    HomologySolver H(C);
    Column z = lee_cycle(C, D, L, 0, false);
    int d = H.divisibility(0, z);
    return 2 * d + L.w - L.r + 1;
}

Poly pairing_value(const Complex& C, const Column& a, const Column& b, bool reduced) {
    Poly total = Poly::zero();
    for (auto& [g1, c1] : a)
        for (auto& [g2, c2] : b) {
            const GenRef& r1 = C.gen_info[g1];
            const GenRef& r2 = C.gen_info[g2];
            if (r1.s != r2.s) continue;  // pairing is statewise
            Poly term = c1 * c2;
            int p = C.pointed_circle[r1.s];
            for (int c = 0; c < C.circle_count[r1.s] && !term.is_zero(); ++c) {
                if (reduced && c == p) continue;
                term = term * alg_pair((r1.x_mask >> c & 1) ? Letter::X : Letter::One,
                                       (r2.x_mask >> c & 1) ? Letter::X : Letter::One,
                                       C.ring);
            }
            total += term;
        }
    return total;
}

SPair cross_validate(const Diagram& D, ConeMode mode, int cap) {
    SPair a = equivariant_s(D, mode, cap);
    SPair b = tower_s(D, mode, cap);
    if (a.s_lower != b.s_lower || a.s_upper != b.s_upper)
        throw std::runtime_error("method disagreement for the s pair");
    return a;
}

}  // namespace khi
