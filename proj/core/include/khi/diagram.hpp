// Involutive link diagrams: data model, validation, resolutions, Seifert
// data, mirror / union / connected-sum constructions and the bundled corpus.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace khi {

enum class Mode { strong_inversion, periodic_2 };

struct Crossing {
    int sign = +1;  // +1 or -1
    // incident edge ids by role
    int u_in = -1, u_out = -1, o_in = -1, o_out = -1;
};

struct Diagram {
    Mode mode = Mode::strong_inversion;
    int n_edges = 0;
    std::vector<Crossing> crossings;
    std::vector<int> succ;  // oriented successor edge per edge
    std::vector<int> tau;   // edge involution (tau[e] == e marks an on-axis edge)
    int basepoint = -1;     // optional; must be a fixed edge
    std::vector<std::string> edge_names;  // parser-facing labels

    int n_crossings() const { return (int)crossings.size(); }
    int n_plus() const;
    int n_minus() const;
    int writhe() const { return n_plus() - n_minus(); }
    int n_components() const;

    // crossing involution induced by the edge involution; filled by validate()
    std::vector<int> cr_tau;
};

// one resolution bit per crossing; bit c set <-> 1-smoothing at c
using State = uint32_t;

struct ResolvedDiagram {
    int circle_count = 0;
    std::vector<int> circle_of_edge;  // edge -> circle index (0-based, by min edge)
};

struct SeifertData {
    ResolvedDiagram circles;
    std::vector<std::pair<int, int>> seifert_graph;  // circle pair per crossing
    int r = 0, w = 0, n_plus = 0, n_minus = 0;
    State seifert_state = 0;
};

struct Violation {
    std::string what;
};

// Empty list iff the diagram is a valid involutive diagram in its mode.
// On success fills D.cr_tau.
std::vector<Violation> validate(Diagram& D);
void validate_or_throw(Diagram& D);

ResolvedDiagram resolve_state(const Diagram& D, State s);
SeifertData seifert_resolution(const Diagram& D);
State seifert_state(const Diagram& D);

// s' = s o iota together with the circle bijection D(s) -> D(s')
struct TauAction {
    State s_image;
    std::vector<int> circle_map;  // circle of D(s) -> circle of D(s')
};
TauAction tau_action(const Diagram& D, State s);

Diagram mirror(const Diagram& D);

enum class CombineKind { disjoint_union, connected_sum_on_axis };
Diagram combine(const Diagram& D1, const Diagram& D2, CombineKind kind);

// .sik text format
Diagram parse_diagram(const std::string& text);
std::string serialize_diagram(const Diagram& D);

// All edge involutions tau(k) = c - k (along the traversal of a knot
// diagram) that pass validation in the given mode; returns the list of
// valid offsets c.  Used to locate the symmetries of a candidate diagram.
std::vector<int> find_involutions(Diagram& D, Mode mode);

// Install the involution tau(k) = offset - k on a knot diagram whose edges
// are indexed along the traversal, pick a fixed edge as basepoint, validate.
void install_involution(Diagram& D, int offset, Mode mode);

// Builders.  Both produce oriented knot diagrams with edges indexed along
// the traversal and no involution installed (tau = identity placeholder).
//
// Standard alternating 2-bridge diagram of the continued fraction
// [a1, a2, ...] (all ai > 0).
Diagram two_bridge(const std::vector<int>& cf);
// Pretzel diagram P(p1, ..., pk), pi odd (signs allowed).
Diagram pretzel(const std::vector<int>& p);

// Bundled corpus: unknot, torus2(k)+/-, 3_1 ... 7_7b, m9_46, hopf_periodic,
// and the move-related pairs used by the structural tests.
Diagram build_named(const std::string& name);
std::vector<std::string> corpus_names();

}  // namespace khi
