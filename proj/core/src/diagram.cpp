#include "khi/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace khi {

int Diagram::n_plus() const {
    int k = 0;
    for (auto& c : crossings) k += c.sign > 0;
    return k;
}

int Diagram::n_minus() const {
    int k = 0;
    for (auto& c : crossings) k += c.sign < 0;
    return k;
}

int Diagram::n_components() const {
    std::vector<char> seen(n_edges, 0);
    int comps = 0;
    for (int e = 0; e < n_edges; ++e) {
        if (seen[e]) continue;
        ++comps;
        for (int f = e; !seen[f]; f = succ[f]) seen[f] = 1;
    }
    return comps;
}

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int a) { while (p[a] != a) a = p[a] = p[p[a]]; return a; }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

// the two edge pairs glued by the given resolution bit
struct Pairs {
    std::pair<int, int> a, b;
};

Pairs smoothing_pairs(const Crossing& c, int bit) {
    bool seifert = (c.sign > 0) == (bit == 0);
    if (seifert) return {{c.o_in, c.u_out}, {c.u_in, c.o_out}};
    return {{c.o_in, c.u_in}, {c.u_out, c.o_out}};
}

}  // namespace

std::vector<Violation> validate(Diagram& D) {
    std::vector<Violation> out;
    auto bad = [&](const std::string& s) { out.push_back({s}); };

    int n = D.n_edges;
    if ((int)D.succ.size() != n || (int)D.tau.size() != n) {
        bad("edge table sizes inconsistent");
        return out;
    }
    for (auto& c : D.crossings) {
        for (int e : {c.u_in, c.u_out, c.o_in, c.o_out})
            if (e < 0 || e >= n) {
                bad("crossing references unknown edge");
                return out;
            }
        if (c.sign != 1 && c.sign != -1) bad("crossing sign must be + or -");
    }

    // every edge is the in-strand of exactly one crossing and the out-strand
    // of exactly one, or belongs to a crossing-free loop
    std::vector<int> in_at(n, -1), out_at(n, -1);
    std::vector<int> in_role(n, -1), out_role(n, -1);  // 0 = under, 1 = over
    for (int ci = 0; ci < (int)D.crossings.size(); ++ci) {
        auto& c = D.crossings[ci];
        auto set_in = [&](int e, int role) {
            if (in_at[e] != -1) bad("edge enters two crossings");
            in_at[e] = ci;
            in_role[e] = role;
        };
        auto set_out = [&](int e, int role) {
            if (out_at[e] != -1) bad("edge leaves two crossings");
            out_at[e] = ci;
            out_role[e] = role;
        };
        set_in(c.u_in, 0);
        set_in(c.o_in, 1);
        set_out(c.u_out, 0);
        set_out(c.o_out, 1);
    }
    if (!out.empty()) return out;
    for (int e = 0; e < n; ++e) {
        if ((in_at[e] == -1) != (out_at[e] == -1)) bad("edge has a loose end");
        if (in_at[e] == -1) {
            if (D.succ[e] != e) bad("crossing-free edge must close up on itself");
        } else {
            auto& c = D.crossings[in_at[e]];
            int want = in_role[e] == 0 ? c.u_out : c.o_out;
            if (D.succ[e] != want) bad("successor relation contradicts a crossing");
        }
    }
    if (!out.empty()) return out;

    // tau is a self-inverse bijection
    for (int e = 0; e < n; ++e) {
        if (D.tau[e] < 0 || D.tau[e] >= n) {
            bad("involution not defined on every edge");
            return out;
        }
    }
    for (int e = 0; e < n; ++e)
        if (D.tau[D.tau[e]] != e) bad("involution is not self-inverse");
    if (!out.empty()) return out;

    bool strong = D.mode == Mode::strong_inversion;

    // orientation behaviour per component
    for (int e = 0; e < n; ++e) {
        int lhs = D.tau[D.succ[e]];
        if (strong) {
            // tau o succ = pred o tau
            if (D.succ[lhs] != D.tau[e])
                bad("involution must reverse orientation (strong inversion)");
        } else {
            if (lhs != D.succ[D.tau[e]])
                bad("involution must preserve orientation (periodic mode)");
        }
    }
    if (!out.empty()) return out;

    if (!strong) {
        for (int e = 0; e < n; ++e)
            if (D.tau[e] == e) {
                bad("fixed edges forbidden in periodic mode");
                break;
            }
    }
    if (!out.empty()) return out;

    // induced crossing involution
    D.cr_tau.assign(D.crossings.size(), -1);
    for (int ci = 0; ci < (int)D.crossings.size(); ++ci) {
        auto& c = D.crossings[ci];
        int cj, err = 0;
        if (strong) {
            // over and under swap, in and out swap
            cj = out_at[D.tau[c.u_in]];
            if (cj == -1 || D.crossings[cj].o_out != D.tau[c.u_in] ||
                D.crossings[cj].o_in != D.tau[c.u_out] ||
                D.crossings[cj].u_out != D.tau[c.o_in] ||
                D.crossings[cj].u_in != D.tau[c.o_out])
                err = 1;
        } else {
            cj = in_at[D.tau[c.u_in]];
            if (cj == -1 || D.crossings[cj].u_in != D.tau[c.u_in] ||
                D.crossings[cj].u_out != D.tau[c.u_out] ||
                D.crossings[cj].o_in != D.tau[c.o_in] ||
                D.crossings[cj].o_out != D.tau[c.o_out])
                err = 1;
        }
        if (err) {
            bad("involution does not map crossings to crossings");
            return out;
        }
        if (D.crossings[cj].sign != c.sign) {
            bad("involution must preserve crossing sign");
            return out;
        }
        D.cr_tau[ci] = cj;
    }
    for (int ci = 0; ci < (int)D.crossings.size(); ++ci)
        if (D.cr_tau[D.cr_tau[ci]] != ci) bad("crossing involution is not self-inverse");

    if (D.basepoint != -1) {
        if (D.basepoint < 0 || D.basepoint >= n || D.tau[D.basepoint] != D.basepoint)
            bad("basepoint must be a fixed (on-axis) edge");
    }
    if (D.n_crossings() > 31) bad("crossing count exceeds representation limit");
    return out;
}

void validate_or_throw(Diagram& D) {
    auto v = validate(D);
    if (!v.empty()) throw std::runtime_error("invalid diagram: " + v.front().what);
}

ResolvedDiagram resolve_state(const Diagram& D, State s) {
    UnionFind uf(D.n_edges);
    for (int ci = 0; ci < (int)D.crossings.size(); ++ci) {
        Pairs p = smoothing_pairs(D.crossings[ci], s >> ci & 1);
        uf.unite(p.a.first, p.a.second);
        uf.unite(p.b.first, p.b.second);
    }
    ResolvedDiagram r;
    r.circle_of_edge.assign(D.n_edges, -1);
    for (int e = 0; e < D.n_edges; ++e) {
        int root = uf.find(e);
        if (r.circle_of_edge[root] == -1) r.circle_of_edge[root] = r.circle_count++;
        r.circle_of_edge[e] = r.circle_of_edge[root];
    }
    return r;
}

State seifert_state(const Diagram& D) {
    State s = 0;
    for (int ci = 0; ci < (int)D.crossings.size(); ++ci)
        if (D.crossings[ci].sign < 0) s |= State{1} << ci;
    return s;
}

SeifertData seifert_resolution(const Diagram& D) {
    SeifertData sd;
    sd.seifert_state = seifert_state(D);
    sd.circles = resolve_state(D, sd.seifert_state);
    sd.r = sd.circles.circle_count;
    sd.n_plus = D.n_plus();
    sd.n_minus = D.n_minus();
    sd.w = sd.n_plus - sd.n_minus;
    for (auto& c : D.crossings)
        sd.seifert_graph.push_back({sd.circles.circle_of_edge[c.o_in],
                                    sd.circles.circle_of_edge[c.u_in]});
    return sd;
}

TauAction tau_action(const Diagram& D, State s) {
    if (D.cr_tau.empty() && !D.crossings.empty())
        throw std::logic_error("tau_action: diagram not validated");
    TauAction ta;
    ta.s_image = 0;
    for (int ci = 0; ci < (int)D.crossings.size(); ++ci)
        if (s >> D.cr_tau[ci] & 1) ta.s_image |= State{1} << ci;
    ResolvedDiagram a = resolve_state(D, s), b = resolve_state(D, ta.s_image);
    ta.circle_map.assign(a.circle_count, -1);
    for (int e = 0; e < D.n_edges; ++e) {
        int ca = a.circle_of_edge[e], cb = b.circle_of_edge[D.tau[e]];
        if (ta.circle_map[ca] == -1) ta.circle_map[ca] = cb;
        else if (ta.circle_map[ca] != cb)
            throw std::logic_error("tau_action: circle bijection ill-defined");
    }
    return ta;
}

Diagram mirror(const Diagram& D) {
    Diagram M = D;
    M.cr_tau.clear();
    for (auto& c : M.crossings) {
        std::swap(c.u_in, c.o_in);
        std::swap(c.u_out, c.o_out);
        c.sign = -c.sign;
    }
    validate_or_throw(M);
    return M;
}

Diagram combine(const Diagram& D1, const Diagram& D2, CombineKind kind) {
    if (D1.mode != Mode::strong_inversion || D2.mode != Mode::strong_inversion)
        throw std::runtime_error("combine requires strong_inversion diagrams");
    // append D2 with shifted edge ids
    Diagram R = D1;
    R.cr_tau.clear();
    int off = D1.n_edges;
    R.n_edges += D2.n_edges;
    for (auto c : D2.crossings) {
        c.u_in += off; c.u_out += off; c.o_in += off; c.o_out += off;
        R.crossings.push_back(c);
    }
    for (int e = 0; e < D2.n_edges; ++e) {
        R.succ.push_back(D2.succ[e] + off);
        R.tau.push_back(D2.tau[e] + off);
    }
    R.edge_names.resize(R.n_edges);
    for (int e = 0; e < R.n_edges; ++e) R.edge_names[e] = "e" + std::to_string(e);

    if (kind == CombineKind::connected_sum_on_axis) {
        int e1 = D1.basepoint, e2 = D2.basepoint == -1 ? -1 : D2.basepoint + off;
        if (e1 == -1 || e2 == -1)
            throw std::runtime_error("connected sum requires basepoints on both diagrams");
        // splice: e1 keeps its tail and takes over the head of e2, and vice
        // versa; both remain on the axis
        auto swap_head = [&](int a, int b) {
            // head of x = the crossing slot where x is an in-strand
            int ha = -1, hb = -1, ra = 0, rb = 0;
            for (int ci = 0; ci < (int)R.crossings.size(); ++ci) {
                auto& c = R.crossings[ci];
                if (c.u_in == a) { ha = ci; ra = 0; }
                if (c.o_in == a) { ha = ci; ra = 1; }
                if (c.u_in == b) { hb = ci; rb = 0; }
                if (c.o_in == b) { hb = ci; rb = 1; }
            }
            if (ha == -1 || hb == -1)
                throw std::runtime_error("connected sum with a crossing-free summand");
            (ra ? R.crossings[ha].o_in : R.crossings[ha].u_in) = b;
            (rb ? R.crossings[hb].o_in : R.crossings[hb].u_in) = a;
        };
        swap_head(e1, e2);
        // rebuild successors from the crossings
        for (int e = 0; e < R.n_edges; ++e) R.succ[e] = e;
        for (auto& c : R.crossings) {
            R.succ[c.u_in] = c.u_out;
            R.succ[c.o_in] = c.o_out;
        }
        // the spliced edges each run half above, half below the axis and are
        // exchanged by the half-turn; the two surviving on-axis edges are the
        // unused fixed edges of the summands
        R.tau[e1] = e2;
        R.tau[e2] = e1;
        R.basepoint = -1;
        for (int e = 0; e < D1.n_edges; ++e)
            if (R.tau[e] == e) {
                R.basepoint = e;
                break;
            }
        if (R.basepoint == -1)
            throw std::runtime_error("connected sum consumed the only on-axis edge");
    } else {
        R.basepoint = D1.basepoint;
    }
    validate_or_throw(R);
    return R;
}

// ---------------------------------------------------------------------------
// .sik parsing / serialization

namespace {

[[noreturn]] void syntax_error(int line, const std::string& msg) {
    throw std::runtime_error("line " + std::to_string(line) + ": " + msg);
}

}  // namespace

Diagram parse_diagram(const std::string& text) {
    Diagram D;
    std::map<std::string, int> ids;
    auto intern = [&](const std::string& tok) {
        auto it = ids.find(tok);
        if (it != ids.end()) return it->second;
        int id = (int)ids.size();
        ids[tok] = id;
        D.edge_names.push_back(tok);
        return id;
    };

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool mode_seen = false;
    std::vector<std::pair<int, int>> tau_pairs;
    std::vector<std::pair<int, int>> succ_pairs;
    std::string base_tok;
    int base_line = 0;

    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "mode") {
            std::string m;
            if (!(ls >> m)) syntax_error(lineno, "mode needs an argument");
            if (m == "strong") D.mode = Mode::strong_inversion;
            else if (m == "periodic") D.mode = Mode::periodic_2;
            else syntax_error(lineno, "mode must be strong or periodic");
            mode_seen = true;
        } else if (kw == "x") {
            std::string id, sgn, u, o;
            if (!(ls >> id >> sgn >> u >> o)) syntax_error(lineno, "malformed crossing");
            Crossing c;
            if (sgn == "+") c.sign = 1;
            else if (sgn == "-") c.sign = -1;
            else syntax_error(lineno, "crossing sign must be + or -");
            auto ends = [&](const std::string& spec, const char* tag) {
                if (spec.substr(0, 2) != std::string(tag) + ":")
                    syntax_error(lineno, std::string("expected ") + tag + ":<in>,<out>");
                auto body = spec.substr(2);
                auto comma = body.find(',');
                if (comma == std::string::npos)
                    syntax_error(lineno, "expected <in>,<out>");
                return std::pair{intern(body.substr(0, comma)), intern(body.substr(comma + 1))};
            };
            std::tie(c.u_in, c.u_out) = ends(u, "u");
            std::tie(c.o_in, c.o_out) = ends(o, "o");
            D.crossings.push_back(c);
        } else if (kw == "succ") {
            std::string a, b;
            if (!(ls >> a >> b)) syntax_error(lineno, "succ needs two edges");
            succ_pairs.push_back({intern(a), intern(b)});
        } else if (kw == "tau") {
            std::string a, b;
            if (!(ls >> a)) syntax_error(lineno, "tau needs an edge");
            int ia = intern(a);
            int ib = (ls >> b) ? intern(b) : ia;
            tau_pairs.push_back({ia, ib});
        } else if (kw == "base") {
            if (!(ls >> base_tok)) syntax_error(lineno, "base needs an edge");
            base_line = lineno;
            intern(base_tok);
        } else {
            syntax_error(lineno, "unknown declaration '" + kw + "'");
        }
    }
    if (!mode_seen) throw std::runtime_error("missing 'mode' declaration");

    D.n_edges = (int)ids.size();
    D.succ.assign(D.n_edges, -1);
    for (auto& c : D.crossings) {
        D.succ[c.u_in] = c.u_out;
        D.succ[c.o_in] = c.o_out;
    }
    for (auto& [a, b] : succ_pairs) D.succ[a] = b;
    for (int e = 0; e < D.n_edges; ++e)
        if (D.succ[e] == -1) D.succ[e] = e;  // crossing-free loop
    D.tau.assign(D.n_edges, -1);
    for (auto& [a, b] : tau_pairs) { D.tau[a] = b; D.tau[b] = a; }
    if (!base_tok.empty()) D.basepoint = ids[base_tok];

    validate_or_throw(D);
    return D;
}

std::string serialize_diagram(const Diagram& D) {
    std::ostringstream os;
    os << "mode " << (D.mode == Mode::strong_inversion ? "strong" : "periodic") << "\n";
    auto nm = [&](int e) {
        return e < (int)D.edge_names.size() && !D.edge_names[e].empty()
                   ? D.edge_names[e]
                   : "e" + std::to_string(e);
    };
    for (int ci = 0; ci < (int)D.crossings.size(); ++ci) {
        auto& c = D.crossings[ci];
        os << "x c" << ci << " " << (c.sign > 0 ? "+" : "-") << " u:" << nm(c.u_in)
           << "," << nm(c.u_out) << " o:" << nm(c.o_in) << "," << nm(c.o_out) << "\n";
    }
    for (int e = 0; e < D.n_edges; ++e)
        if (D.succ[e] == e) os << "succ " << nm(e) << " " << nm(e) << "\n";
    for (int e = 0; e < D.n_edges; ++e) {
        if (D.tau[e] == e) os << "tau " << nm(e) << "\n";
        else if (D.tau[e] > e) os << "tau " << nm(e) << " " << nm(D.tau[e]) << "\n";
    }
    if (D.basepoint != -1) os << "base " << nm(D.basepoint) << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// involution search on a knot diagram with edges indexed along the traversal

void install_involution(Diagram& D, int offset, Mode mode) {
    int n = D.n_edges;
    D.mode = mode;
    D.tau.assign(n, -1);
    for (int e = 0; e < n; ++e) D.tau[e] = ((offset - e) % n + n) % n;
    D.basepoint = -1;
    if (mode == Mode::strong_inversion)
        for (int e = 0; e < n; ++e)
            if (D.tau[e] == e) { D.basepoint = e; break; }
    validate_or_throw(D);
}

std::vector<int> find_involutions(Diagram& D, Mode mode) {
    std::vector<int> found;
    Diagram T = D;
    for (int c = 0; c < D.n_edges; ++c) {
        T.mode = mode;
        T.tau.assign(D.n_edges, -1);
        for (int e = 0; e < D.n_edges; ++e)
            T.tau[e] = ((c - e) % D.n_edges + D.n_edges) % D.n_edges;
        T.basepoint = -1;
        if (validate(T).empty()) found.push_back(c);
    }
    return found;
}

// ---------------------------------------------------------------------------
// tangle builders

namespace {

// unoriented 4-valent diagram under construction
struct ProtoCrossing {
    // slot indices 0..3 in counterclockwise planar order; the strand through
    // slots (over0, over2) passes over the one through the other two slots
    int over_parity;  // slots over_parity and over_parity+2 form the over strand
};

struct Proto {
    std::vector<ProtoCrossing> crossings;
    // arc endpoints: each completed arc connects two (crossing, slot) ends
    struct End { int cross = -1, slot = -1; };
    struct Arc { End e0, e1; int n_ends = 0; };
    std::vector<Arc> arcs;

    int new_arc() {
        arcs.push_back({});
        return (int)arcs.size() - 1;
    }
    void attach(int arc, int cross, int slot) {
        Arc& a = arcs[arc];
        if (a.n_ends == 0) a.e0 = {cross, slot};
        else if (a.n_ends == 1) a.e1 = {cross, slot};
        else throw std::logic_error("arc already closed");
        ++a.n_ends;
    }
};

// loose ends of the tangle being built: arc ids at the four corners
struct TangleEnds {
    int nw, ne, sw, se;
};

// append |a| crossings twisting the NE/SE ends (horizontal twist region to
// the right); a > 0 and a < 0 give the two chiralities
void twist_right(Proto& P, TangleEnds& t, int a) {
    for (int k = 0; k < std::abs(a); ++k) {
        int ci = (int)P.crossings.size();
        // ccw slots: 0 = NE, 1 = NW, 2 = SW, 3 = SE of the new crossing
        // incoming arcs attach on the west side, new loose ends on the east
        P.crossings.push_back({a > 0 ? 1 : 0});
        P.attach(t.ne, ci, 1);
        P.attach(t.se, ci, 2);
        t.ne = P.new_arc();
        t.se = P.new_arc();
        P.attach(t.ne, ci, 0);
        P.attach(t.se, ci, 3);
    }
}

// append |a| crossings twisting the SW/SE ends (vertical region at the bottom)
void twist_bottom(Proto& P, TangleEnds& t, int a) {
    for (int k = 0; k < std::abs(a); ++k) {
        int ci = (int)P.crossings.size();
        // ccw slots: 0 = NE, 1 = NW, 2 = SW, 3 = SE; incoming arcs attach on
        // the north side, new loose ends on the south
        P.crossings.push_back({a > 0 ? 1 : 0});
        P.attach(t.sw, ci, 1);
        P.attach(t.se, ci, 0);
        t.sw = P.new_arc();
        t.se = P.new_arc();
        P.attach(t.sw, ci, 2);
        P.attach(t.se, ci, 3);
    }
}

// merge two loose arcs into one; arc a survives, arc b is retired
void splice(Proto& P, int a, int b) {
    if (a == b) throw std::logic_error("splice would close a free loop");
    auto &A = P.arcs[a], &B = P.arcs[b];
    if (A.n_ends > 1 || B.n_ends > 1) throw std::logic_error("splice of closed arc");
    if (B.n_ends == 1) {
        if (A.n_ends == 0) A.e0 = B.e0;
        else A.e1 = B.e0;
        ++A.n_ends;
    }
    B.n_ends = 2;
    B.e0 = {-2, -2};  // mark dead
}

// Convert a closed proto-diagram (all arcs have two crossing ends) into an
// oriented Diagram with edges indexed along the traversal.
Diagram orient_proto(const Proto& P) {
    // live arcs
    std::vector<int> live;
    std::vector<int> arc_index(P.arcs.size(), -1);
    for (int i = 0; i < (int)P.arcs.size(); ++i) {
        if (P.arcs[i].e0.cross == -2) continue;
        if (P.arcs[i].n_ends != 2) throw std::logic_error("open arc at closure");
        arc_index[i] = (int)live.size();
        live.push_back(i);
    }
    int n_arcs = (int)live.size();
    // (crossing, slot) -> live arc
    std::vector<std::array<int, 4>> at(P.crossings.size(), {-1, -1, -1, -1});
    for (int li = 0; li < n_arcs; ++li) {
        auto& a = P.arcs[live[li]];
        at[a.e0.cross][a.e0.slot] = li;
        at[a.e1.cross][a.e1.slot] = li;
    }
    for (auto& s : at)
        for (int v : s)
            if (v == -1) throw std::logic_error("crossing slot left open");

    // traverse: walk arcs, crossing through to the opposite slot
    std::vector<int> order(n_arcs, -1);   // live arc -> edge index
    std::vector<int> head_cross(n_arcs), head_slot(n_arcs);
    int next_edge = 0;
    int cur = 0;
    // direction: pick e1 of arc 0 as its head
    Proto::End head = P.arcs[live[0]].e1;
    while (order[cur] == -1) {
        order[cur] = next_edge++;
        head_cross[cur] = head.cross;
        head_slot[cur] = head.slot;
        int opp = head.slot ^ 2;  // strand continues through the crossing
        int nxt = at[head.cross][opp];
        auto& na = P.arcs[live[nxt]];
        // head of next arc = its other end
        if (na.e0.cross == head.cross && na.e0.slot == opp) head = na.e1;
        else head = na.e0;
        cur = nxt;
    }
    if (next_edge != n_arcs)
        throw std::logic_error("builder produced a multi-component diagram");

    Diagram D;
    D.n_edges = n_arcs;
    D.succ.assign(n_arcs, -1);
    for (int e = 0; e < n_arcs; ++e) D.succ[e] = (e + 1) % n_arcs;
    D.tau.assign(n_arcs, -1);
    for (int e = 0; e < n_arcs; ++e) D.tau[e] = e;  // placeholder
    D.edge_names.resize(n_arcs);
    for (int e = 0; e < n_arcs; ++e) D.edge_names[e] = "e" + std::to_string(e);

    for (int ci = 0; ci < (int)P.crossings.size(); ++ci) {
        int op = P.crossings[ci].over_parity;
        // the incoming slot of each strand is the one some arc's head sits on
        int o_in_slot = -1, u_in_slot = -1;
        for (int s : {op, op ^ 2}) {
            int a = at[ci][s];
            if (head_cross[a] == ci && head_slot[a] == s) o_in_slot = s;
        }
        for (int s : {op ^ 1, (op ^ 1) ^ 2}) {
            int a = at[ci][s];
            if (head_cross[a] == ci && head_slot[a] == s) u_in_slot = s;
        }
        if (o_in_slot == -1 || u_in_slot == -1)
            throw std::logic_error("orientation trace failed at a crossing");
        Crossing c;
        c.o_in = order[at[ci][o_in_slot]];
        c.o_out = order[at[ci][o_in_slot ^ 2]];
        c.u_in = order[at[ci][u_in_slot]];
        c.u_out = order[at[ci][u_in_slot ^ 2]];
        // positive iff the under-in slot is the ccw successor of the over-in
        c.sign = ((o_in_slot + 1) & 3) == u_in_slot ? +1 : -1;
        D.crossings.push_back(c);
    }
    return D;
}

}  // namespace

Diagram two_bridge(const std::vector<int>& cf) {
    Proto P;
    TangleEnds t{P.new_arc(), P.new_arc(), P.new_arc(), P.new_arc()};
    // 0-tangle: NW--NE and SW--SE
    splice(P, t.nw, t.ne);
    t.ne = t.nw;
    splice(P, t.sw, t.se);
    t.se = t.sw;
    for (size_t k = 0; k < cf.size(); ++k) {
        if (k % 2 == 0) twist_right(P, t, cf[k]);
        else twist_bottom(P, t, cf[k]);
    }
    // the built fraction ends in a horizontal twist for odd-length words and
    // a vertical one for even length; close with the matching closure so the
    // last twist region is knotted into the closure rather than cancelled
    if (cf.size() % 2 == 1) {
        splice(P, t.nw, t.ne);  // numerator closure
        splice(P, t.sw, t.se);
    } else {
        splice(P, t.nw, t.sw);  // denominator closure
        splice(P, t.ne, t.se);
    }
    return orient_proto(P);
}

Diagram pretzel(const std::vector<int>& p) {
    Proto P;
    int k = (int)p.size();
    std::vector<int> tl(k), tr(k), bl(k), br(k);
    for (int i = 0; i < k; ++i) {
        tl[i] = P.new_arc();
        tr[i] = P.new_arc();
        TangleEnds t{tl[i], tr[i], tl[i], tr[i]};
        t.sw = tl[i];
        t.se = tr[i];
        twist_bottom(P, t, p[i]);
        bl[i] = t.sw;
        br[i] = t.se;
        if (p[i] == 0) throw std::runtime_error("pretzel: zero tangle not supported");
    }
    for (int i = 0; i + 1 < k; ++i) {
        splice(P, tr[i], tl[i + 1]);
        splice(P, br[i], bl[i + 1]);
    }
    splice(P, tl[0], tr[k - 1]);
    splice(P, bl[0], br[k - 1]);
    return orient_proto(P);
}

}  // namespace khi
