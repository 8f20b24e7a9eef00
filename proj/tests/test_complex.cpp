#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "khi/complex.hpp"

#include <map>

using namespace khi;

namespace {

Column apply_d(const Complex& C, const Column& z) {
    std::map<long, Poly> acc;
    for (auto& [g, c] : z)
        for (auto& [row, e] : C.d[g]) acc[row] += c * e;
    Column out;
    for (auto& [g, c] : acc)
        if (!c.is_zero()) out.push_back({g, c});
    return out;
}

Column apply_T(const Complex& C, const Diagram& D, const Column& z) {
    std::map<long, Poly> acc;
    for (auto& [g, c] : z)
        for (auto& [row, e] : involution_image(C, D, g)) acc[row] += c * e;
    Column out;
    for (auto& [g, c] : acc)
        if (!c.is_zero()) out.push_back({g, c});
    return out;
}

bool col_eq(Column a, Column b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

}  // namespace

TEST_CASE("cube complex of the unknot") {
    Diagram D = build_named("unknot");
    Complex C = build_ckh(D, Ring::F2_h0, Variant::unreduced);
    CHECK(C.n_gens == 2);  // one circle, letters 1 and X
    CHECK(C.deg_i[0] == 0);
    CHECK_NOTHROW(verify_complex(C));
    Complex R = build_ckh(D, Ring::F2_h0, Variant::reduced);
    CHECK(R.n_gens == 1);
    CHECK(R.deg_q[0] == 0);  // deg X = -1, reduced shift +1
}

TEST_CASE("verify_complex passes on every variant of a trefoil") {
    Diagram D = build_named("3_1");
    for (Ring ring : {Ring::F2_h0, Ring::F2H_hH, Ring::F2_h1})
        for (Variant v : {Variant::unreduced, Variant::reduced, Variant::coreduced}) {
            verify_complex(build_ckh(D, ring, v));
            verify_complex(build_involutive(D, ring, ConeMode::tau, v));
        }
}

TEST_CASE("cone doubles the generator count") {
    Diagram D = build_named("4_1");
    Complex P = build_ckh(D, Ring::F2H_hH, Variant::unreduced);
    Complex C = build_involutive(D, Ring::F2H_hH, ConeMode::tau, Variant::unreduced);
    CHECK(C.n_gens == 2 * P.n_gens);
    // the shifted copy sits one homological degree up, same quantum degree
    for (long g = 0; g < C.n_gens; ++g) {
        const GenRef& r = C.gen_info[g];
        long mate = C.index_of(r.s, r.x_mask, 1 - r.copy);
        REQUIRE(mate >= 0);
        int di = C.deg_i[g] - C.deg_i[mate];
        int dq = C.deg_q[g] - C.deg_q[mate];
        CHECK(di == (r.copy ? 1 : -1));
        CHECK(dq == 0);
    }
}

TEST_CASE("index_of inverts the generator table") {
    Diagram D = build_named("5_2a");
    Complex C = build_involutive(D, Ring::F2_h0, ConeMode::tau, Variant::reduced);
    for (long g = 0; g < C.n_gens; ++g) {
        const GenRef& r = C.gen_info[g];
        CHECK(C.index_of(r.s, r.x_mask, r.copy) == g);
    }
}

TEST_CASE("chain involution squares to the identity and commutes with d") {
    for (auto name : {"3_1", "4_1", "hopf_periodic"}) {
        Diagram D = build_named(name);
        Complex P = build_ckh(D, Ring::F2H_hH, Variant::unreduced);
        for (long g = 0; g < P.n_gens; ++g) {
            Column tg = involution_image(P, D, g);
            CHECK(col_eq(apply_T(P, D, tg), Column{{g, Poly::one()}}));
            CHECK(col_eq(apply_d(P, tg), apply_T(P, D, apply_d(P, {{g, Poly::one()}}))));
        }
    }
}

TEST_CASE("bigraded dimension count of the short exact sequence") {
    for (auto name : {"3_1", "5_2a", "6_2a"}) {
        Diagram D = build_named(name);
        Complex C = build_involutive(D, Ring::F2H_hH, ConeMode::tau, Variant::unreduced);
        Complex R = build_involutive(D, Ring::F2H_hH, ConeMode::tau, Variant::reduced);
        Complex Q = build_involutive(D, Ring::F2H_hH, ConeMode::tau, Variant::coreduced);
        std::map<std::pair<int, int>, long> whole, split;
        for (long g = 0; g < C.n_gens; ++g) whole[{C.deg_i[g], C.deg_q[g]}]++;
        for (long g = 0; g < R.n_gens; ++g) split[{R.deg_i[g], R.deg_q[g] - 1}]++;
        for (long g = 0; g < Q.n_gens; ++g) split[{Q.deg_i[g], Q.deg_q[g] + 1}]++;
        CHECK(whole == split);
    }
}

TEST_CASE("kappa satisfies d kappa + kappa d = f") {
    for (auto name : {"3_1", "4_1"}) {
        Diagram D = build_named(name);
        Complex C = build_involutive(D, Ring::F2H_hH, ConeMode::tau, Variant::unreduced);
        std::vector<Column> kap = kappa_map(C);
        for (long g = 0; g < C.n_gens; ++g) {
            int p = C.pointed_circle[C.gen_info[g].s];
            if (C.gen_info[g].x_mask >> p & 1) continue;  // not a coreduced rep
            Column dg = apply_d(C, {{g, Poly::one()}});
            Column f_part;
            std::map<long, Poly> acc;
            for (auto& [row, c] : dg) {
                int rp = C.pointed_circle[C.gen_info[row].s];
                if (C.gen_info[row].x_mask >> rp & 1) {
                    f_part.push_back({row, c});
                } else {
                    for (auto& [r2, e] : kap[row]) acc[r2] += c * e;
                }
            }
            for (auto& [row, c] : apply_d(C, kap[g])) acc[row] += c;
            Column lhs;
            for (auto& [row, c] : acc)
                if (!c.is_zero()) lhs.push_back({row, c});
            CHECK(col_eq(lhs, f_part));
        }
    }
}

TEST_CASE("fault injection: a corrupted differential fails verification") {
    Diagram D = build_named("3_1");
    Complex C = build_ckh(D, Ring::F2_h0, Variant::unreduced);
    REQUIRE(C.n_gens > 2);
    // redirect one entry to a wrong row in the right homological degree
    for (long g = 0; g < C.n_gens; ++g) {
        if (C.d[g].empty()) continue;
        long row = C.d[g].front().first;
        long other = -1;
        for (long h = 0; h < C.n_gens; ++h)
            if (h != row && C.deg_i[h] == C.deg_i[row] && C.deg_q[h] == C.deg_q[row]) {
                other = h;
                break;
            }
        if (other < 0) continue;
        C.d[g].front().first = other;
        break;
    }
    CHECK_THROWS_WITH(verify_complex(C), "d^2 != 0");
}

TEST_CASE("resource cap and variant preconditions") {
    Diagram D = build_named("3_1");
    CHECK_THROWS_AS(build_ckh(D, Ring::F2_h0, Variant::unreduced, 2), ResourceCap);
    Diagram H = build_named("hopf_periodic");  // no basepoint
    CHECK_THROWS_WITH(build_ckh(H, Ring::F2_h0, Variant::reduced),
                      "reduced and coreduced variants need a basepoint");
    CHECK_THROWS_WITH(
        build_involutive(D, Ring::F2_h0, ConeMode::sigma_tau, Variant::reduced),
        "sigma-tau cone only exists unreduced");
}

TEST_CASE("sigma-tau cone of the periodic Hopf link verifies") {
    Diagram D = build_named("hopf_periodic");
    Complex C =
        build_involutive(D, Ring::F2H_hH, ConeMode::sigma_tau, Variant::unreduced);
    verify_complex(C);
    CHECK(C.n_gens > 0);
}
