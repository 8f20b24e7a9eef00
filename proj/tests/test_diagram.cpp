#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "khi/diagram.hpp"

using namespace khi;

TEST_CASE("unknot validates") {
    Diagram D = build_named("unknot");
    CHECK(D.n_edges == 1);
    CHECK(D.n_crossings() == 0);
    CHECK(D.n_components() == 1);
    CHECK(resolve_state(D, 0).circle_count == 1);
}

TEST_CASE("minimal unknot file parses") {
    Diagram D = parse_diagram("mode strong\nsucc e0 e0\ntau e0\nbase e0\n");
    CHECK(D.n_edges == 1);
    CHECK(D.basepoint == 0);
}

TEST_CASE("two-bridge builder: trefoil") {
    Diagram D = two_bridge({3});
    CHECK(D.n_crossings() == 3);
    CHECK(D.n_edges == 6);
    CHECK(D.n_components() == 1);
    // all three crossings share a sign in the twist region
    CHECK(abs(D.writhe()) == 3);
    auto offs = find_involutions(D, Mode::strong_inversion);
    CHECK(!offs.empty());
    install_involution(D, offs.front(), Mode::strong_inversion);
    CHECK(validate(D).empty());
    CHECK(D.basepoint != -1);
    CHECK(D.tau[D.basepoint] == D.basepoint);
}

TEST_CASE("two-bridge builder: figure eight is amphichiral in writhe") {
    Diagram D = two_bridge({2, 2});
    CHECK(D.n_crossings() == 4);
    CHECK(D.n_components() == 1);
    CHECK(D.writhe() == 0);
}

TEST_CASE("pretzel builder") {
    Diagram D = pretzel({-3, 3, -3});
    CHECK(D.n_crossings() == 9);
    CHECK(D.n_components() == 1);
    auto offs = find_involutions(D, Mode::strong_inversion);
    CHECK(!offs.empty());
}

TEST_CASE("circle count changes by one under a single resolution flip") {
    for (auto name : {"3_1", "4_1", "m9_46"}) {
        Diagram D = build_named(name);
        int n = D.n_crossings();
        for (State s = 0; s < (State{1} << n); ++s) {
            int c0 = resolve_state(D, s).circle_count;
            for (int b = 0; b < n; ++b) {
                int c1 = resolve_state(D, s ^ (State{1} << b)).circle_count;
                CHECK(abs(c0 - c1) == 1);
            }
        }
    }
}

TEST_CASE("seifert resolution of the standard trefoil") {
    Diagram D = two_bridge({3});
    SeifertData sd = seifert_resolution(D);
    CHECK(sd.r == 2);
    CHECK(sd.n_plus + sd.n_minus == 3);
    CHECK(sd.seifert_graph.size() == 3);
    // every crossing joins the two distinct Seifert circles
    for (auto& [a, b] : sd.seifert_graph) CHECK(a != b);
}

TEST_CASE("oriented resolution has one circle per Seifert circuit (figure eight)") {
    Diagram D = two_bridge({2, 2});
    SeifertData sd = seifert_resolution(D);
    CHECK(sd.r == 3);
}

TEST_CASE("tau action is an involution on states") {
    for (auto name : {"3_1", "4_1", "hopf_periodic"}) {
        Diagram D = build_named(name);
        int n = D.n_crossings();
        for (State s = 0; s < (State{1} << n); ++s) {
            TauAction t = tau_action(D, s);
            CHECK(tau_action(D, t.s_image).s_image == s);
            // circle map is a bijection
            std::vector<int> seen(t.circle_map.size(), 0);
            for (int c : t.circle_map) {
                REQUIRE(c >= 0);
                REQUIRE(c < (int)seen.size());
                ++seen[c];
            }
            for (int k : seen) CHECK(k == 1);
        }
    }
}

TEST_CASE("tau preserves the Seifert state") {
    for (auto name : {"3_1", "4_1", "6_3", "m9_46"}) {
        Diagram D = build_named(name);
        CHECK(tau_action(D, seifert_state(D)).s_image == seifert_state(D));
    }
}

TEST_CASE("mirror flips signs and stays valid") {
    Diagram D = build_named("3_1");
    Diagram M = mirror(D);
    CHECK(M.writhe() == -D.writhe());
    CHECK(M.n_crossings() == D.n_crossings());
    CHECK(validate(M).empty());
}

TEST_CASE("serialize / parse round trip stabilizes") {
    for (auto name : {"3_1", "4_1", "7_6a", "m9_46", "hopf_periodic", "unknot"}) {
        Diagram D = build_named(name);
        std::string s1 = serialize_diagram(D);
        Diagram D2 = parse_diagram(s1);
        std::string s2 = serialize_diagram(D2);
        Diagram D3 = parse_diagram(s2);
        CHECK(serialize_diagram(D3) == s2);
        CHECK(D2.n_edges == D.n_edges);
        CHECK(D2.n_crossings() == D.n_crossings());
        // crossing order is preserved, so resolutions must agree statewise
        for (State s = 0; s < (State{1} << std::min(D.n_crossings(), 6)); ++s)
            CHECK(resolve_state(D2, s).circle_count == resolve_state(D, s).circle_count);
    }
}

TEST_CASE("sign flip is rejected with the contract message") {
    Diagram D = build_named("hopf_periodic");
    D.crossings[0].sign = -1;
    auto v = validate(D);
    REQUIRE(!v.empty());
    CHECK(v.front().what == "involution must preserve crossing sign");
}

TEST_CASE("fixed edges are rejected in periodic mode") {
    Diagram D = build_named("unknot");
    D.mode = Mode::periodic_2;
    D.basepoint = -1;
    auto v = validate(D);
    REQUIRE(!v.empty());
    CHECK(v.front().what == "fixed edges forbidden in periodic mode");
}

TEST_CASE("basepoint must sit on the axis") {
    Diagram D = build_named("3_1");
    for (int e = 0; e < D.n_edges; ++e)
        if (D.tau[e] != e) {
            D.basepoint = e;
            break;
        }
    auto v = validate(D);
    REQUIRE(!v.empty());
    CHECK(v.front().what == "basepoint must be a fixed (on-axis) edge");
}

TEST_CASE("parser reports line numbers") {
    CHECK_THROWS_WITH(parse_diagram("mode strong\nbogus x y\n"),
                      "line 2: unknown declaration 'bogus'");
    CHECK_THROWS_WITH(parse_diagram("succ a a\ntau a\n"), "missing 'mode' declaration");
}

TEST_CASE("axis kink variants validate") {
    for (auto name : {"unknot_axis_kink_pos", "unknot_axis_kink_neg", "unknot_r2",
                      "3_1_axis_kink_pos", "3_1_kinks_pos", "3_1_kinks_neg"}) {
        Diagram D = build_named(name);
        CHECK(validate(D).empty());
        CHECK(D.n_components() == 1);
    }
    CHECK(build_named("unknot_axis_kink_pos").writhe() == 1);
    CHECK(build_named("unknot_axis_kink_neg").writhe() == -1);
    CHECK(build_named("unknot_r2").writhe() == 0);
    CHECK(build_named("3_1_kinks_pos").n_crossings() == 5);
}

TEST_CASE("connected sum on the axis") {
    Diagram S = build_named("3_1#3_1");
    CHECK(S.n_crossings() == 6);
    CHECK(S.n_components() == 1);
    CHECK(validate(S).empty());
    CHECK(S.basepoint != -1);
    Diagram B = build_named("m9_46#3_1");
    CHECK(B.n_crossings() == 12);
    CHECK(B.n_components() == 1);
}

TEST_CASE("disjoint union") {
    Diagram U2 = build_named("unknot_x2");
    CHECK(U2.n_components() == 2);
    CHECK(resolve_state(U2, 0).circle_count == 2);
}

TEST_CASE("corpus validates wholesale") {
    for (auto& name : corpus_names()) {
        Diagram D = build_named(name);
        CHECK(validate(D).empty());
    }
}
