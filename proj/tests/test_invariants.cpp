#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "khi/invariants.hpp"

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

}  // namespace

TEST_CASE("Seifert data of small knots") {
    LeeData L = lee_labels(build_named("3_1"));
    CHECK(L.w == 3);
    CHECK(L.r == 2);
    LeeData M = lee_labels(build_named("m9_46"));
    CHECK(M.w == 3);
    CHECK(M.r == 8);
}

TEST_CASE("the equivariant Lee cycle is a cycle") {
    for (auto name : {"unknot", "3_1", "4_1", "m9_46"}) {
        Diagram D = build_named(name);
        Complex C = build_involutive(D, Ring::F2_h1, ConeMode::tau, Variant::unreduced);
        LeeData L = lee_labels(D);
        Column z = equivariant_lee_cycle(C, D, L, 0);
        CHECK(!z.empty());
        CHECK(apply_d(C, z).empty());
    }
}

TEST_CASE("s of the unknot and positive torus knots") {
    CHECK(s_classic(build_named("unknot")) == 0);
    SPair u = equivariant_s(build_named("unknot"), ConeMode::tau);
    CHECK(u.s_lower == 0);
    CHECK(u.s_upper == 0);
    CHECK(equivariant_s(build_named("torus2_3"), ConeMode::tau).s_lower == 2);
    CHECK(equivariant_s(build_named("torus2_5"), ConeMode::tau).s_upper == 4);
    CHECK(s_classic(build_named("torus2_7")) == 6);
}

TEST_CASE("the exotic pair detector: m9_46") {
    SPair p = cross_validate(build_named("m9_46"), ConeMode::tau);
    CHECK(p.s_lower == 0);
    CHECK(p.s_upper == 2);
    CHECK(p.d_lower == 2);
    CHECK(p.d_upper == 3);
    CHECK(s_classic(build_named("m9_46")) == 0);
}

TEST_CASE("mirror symmetry of the s pair") {
    for (auto name : {"3_1", "5_2a", "m9_46"}) {
        Diagram D = build_named(name);
        Diagram Dm = mirror(D);
        SPair p = equivariant_s(D, ConeMode::tau);
        SPair pm = equivariant_s(Dm, ConeMode::tau);
        CHECK(pm.s_lower == -p.s_upper);
        CHECK(pm.s_upper == -p.s_lower);
        LeeData L = lee_labels(D);
        CHECK(p.d_lower + pm.d_upper == L.r - 1);
        CHECK(p.d_upper + pm.d_lower == L.r - 1);
    }
}

TEST_CASE("both s methods agree on the corpus samples") {
    for (auto name : {"unknot", "3_1", "4_1", "6_1a", "7_4b"}) {
        SPair p = cross_validate(build_named(name), ConeMode::tau);
        CHECK(p.s_upper - p.s_lower >= 0);
        CHECK(p.s_upper - p.s_lower <= 2 * (p.d_upper - p.d_lower));
    }
}

TEST_CASE("total dimension at h = 1 counts components") {
    // involutive homology at h = 1 has dimension 2^(|L|+1)
    for (auto [name, comps] : std::vector<std::pair<const char*, int>>{
             {"unknot", 1}, {"3_1", 1}, {"hopf_periodic", 2}}) {
        Diagram D = build_named(name);
        ConeMode mode =
            D.mode == Mode::periodic_2 ? ConeMode::sigma_tau : ConeMode::tau;
        Complex C = build_involutive(D, Ring::F2_h1, mode, Variant::unreduced);
        HomologySolver S(C);
        CHECK(S.module().total_free() == (1L << (comps + 1)));
    }
}

TEST_CASE("Lee self-pairing detects the h-power law") {
    for (auto name : {"unknot", "3_1", "m9_46"}) {
        Diagram D = build_named(name);
        LeeData L = lee_labels(D);
        Complex CH = build_ckh(D, Ring::F2H_hH, Variant::unreduced);
        Column z = lee_cycle(CH, D, L, 0, false);
        // <z, z> = H^r unreduced, H^(r-1) with the pointed circle dropped
        CHECK(pairing_value(CH, z, z, false) == Poly::monomial(L.r));
        CHECK(pairing_value(CH, z, z, true) == Poly::monomial(L.r - 1));
    }
}

TEST_CASE("kink and mirror move families preserve the invariants") {
    struct Pair {
        const char *a, *b;
    };
    for (auto [a, b] : {Pair{"unknot", "unknot_r2"},
                        Pair{"3_1", "3_1_kinks_pos"},
                        Pair{"unknot", "unknot_axis_kink_pos"}}) {
        SPair pa = equivariant_s(build_named(a), ConeMode::tau);
        SPair pb = equivariant_s(build_named(b), ConeMode::tau);
        CHECK(pa.s_lower == pb.s_lower);
        CHECK(pa.s_upper == pb.s_upper);
    }
}

TEST_CASE("connected sums obey the subadditivity bounds") {
    SPair t = equivariant_s(build_named("3_1"), ConeMode::tau);
    SPair tt = equivariant_s(build_named("3_1#3_1"), ConeMode::tau);
    CHECK(tt.s_lower >= 2 * t.s_lower);
    CHECK(tt.s_upper <= 2 * t.s_upper);
    CHECK(tt.s_lower == 4);
    CHECK(tt.s_upper == 4);
}
