#include "khi/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace khi {

int GradedModule::dim_free(int i, int q) const {
    int k = 0;
    for (auto& t : free_part) k += (t.i == i && t.q == q);
    return k;
}

namespace {

// dst + u * src for sorted sparse columns (characteristic 2)
Column axpy(const Column& dst, Poly u, const Column& src) {
    Column out;
    out.reserve(dst.size() + src.size());
    size_t a = 0, b = 0;
    while (a < dst.size() || b < src.size()) {
        if (b == src.size() || (a < dst.size() && dst[a].first < src[b].first)) {
            out.push_back(dst[a++]);
        } else if (a == dst.size() || src[b].first < dst[a].first) {
            Poly c = u * src[b].second;
            if (!c.is_zero()) out.push_back({src[b].first, c});
            ++b;
        } else {
            Poly c = dst[a].second + u * src[b].second;
            if (!c.is_zero()) out.push_back({dst[a].first, c});
            ++a;
            ++b;
        }
    }
    return out;
}

Poly exact_div(Poly a, Poly b) {
    Poly q = a.div(b);
    if (q * b != a) throw std::runtime_error("homology: non-exact division");
    return q;
}

}  // namespace

std::vector<Poly> snf(std::vector<std::vector<Poly>> M) {
    size_t R = M.size(), Cn = R ? M[0].size() : 0;
    std::vector<Poly> diag;
    size_t t = 0;
    while (t < R && t < Cn) {
        int best_deg = -1;
        size_t br = t, bc = t;
        for (size_t r = t; r < R; ++r)
            for (size_t c = t; c < Cn; ++c)
                if (!M[r][c].is_zero() && (best_deg < 0 || M[r][c].degree() < best_deg)) {
                    best_deg = M[r][c].degree();
                    br = r;
                    bc = c;
                }
        if (best_deg < 0) break;
        std::swap(M[t], M[br]);
        for (size_t r = 0; r < R; ++r) std::swap(M[r][t], M[r][bc]);

        bool again = false;
        for (size_t r = t + 1; r < R && !again; ++r) {
            if (M[r][t].is_zero()) continue;
            Poly q = M[r][t].div(M[t][t]);
            for (size_t c = t; c < Cn; ++c) M[r][c] += q * M[t][c];
            if (!M[r][t].is_zero()) again = true;  // remainder of smaller degree
        }
        if (again) continue;
        for (size_t c = t + 1; c < Cn && !again; ++c) {
            if (M[t][c].is_zero()) continue;
            Poly q = M[t][c].div(M[t][t]);
            for (size_t r = t; r < R; ++r) M[r][c] += q * M[r][t];
            if (!M[t][c].is_zero()) again = true;
        }
        if (again) continue;
        for (size_t r = t + 1; r < R && !again; ++r)
            for (size_t c = t + 1; c < Cn && !again; ++c)
                if (!M[r][c].mod(M[t][t]).is_zero()) {
                    for (size_t cc = t; cc < Cn; ++cc) M[t][cc] += M[r][cc];
                    again = true;  // pull the obstruction into the pivot row
                }
        if (again) continue;
        diag.push_back(M[t][t]);
        ++t;
    }
    return diag;
}

HomologySolver::HomologySolver(const Complex& C) : C_(&C) {
    module_.graded = C.graded;

    for (long g = 0; g < C.n_gens; ++g) {
        Block& b = blocks_[C.deg_i[g]];
        b.local[g] = (int)b.gens.size();
        b.gens.push_back(g);
    }

    struct Prov {
        int deg, row;
    };
    std::vector<std::pair<Tower, Prov>> frees;
    std::vector<std::pair<TorsionPiece, Prov>> tors;

    for (auto& [deg, b] : blocks_) {
        auto next = blocks_.find(deg + 1);
        auto prev = blocks_.find(deg - 1);

        // ---- kernel of d restricted to this degree, by column echelon
        struct EchCol {
            Column m;  // image part, rows local to degree deg+1
            Column t;  // tracked combination, rows local to degree deg
        };
        std::vector<EchCol> cols(b.gens.size());
        for (size_t j = 0; j < b.gens.size(); ++j) {
            cols[j].t = {{(long)j, Poly::one()}};
            for (auto& [row, c] : C.d[b.gens[j]])
                cols[j].m.push_back({next->second.local.at(row), c});
            std::sort(cols[j].m.begin(), cols[j].m.end());
        }
        std::vector<int> pivot_of_row(
            next != blocks_.end() ? next->second.gens.size() : 0, -1);
        std::vector<Column> kernel_raw;
        for (size_t j0 = 0; j0 < cols.size(); ++j0) {
            size_t j = j0;
            while (true) {
                if (cols[j].m.empty()) {
                    kernel_raw.push_back(cols[j].t);
                    break;
                }
                long r = cols[j].m.front().first;
                int p = pivot_of_row[r];
                if (p < 0) {
                    pivot_of_row[r] = (int)j;
                    break;
                }
                Poly e = cols[j].m.front().second;
                Poly pe = cols[(size_t)p].m.front().second;
                if (poly_valuation(pe) <= poly_valuation(e)) {
                    Poly u = exact_div(e, pe);
                    cols[j].m = axpy(cols[j].m, u, cols[(size_t)p].m);
                    cols[j].t = axpy(cols[j].t, u, cols[(size_t)p].t);
                } else {
                    std::swap(cols[j], cols[(size_t)p]);  // displaced column
                }                                         // keeps reducing as j
            }
        }

        // ---- echelonize the kernel basis (minimal valuation at each pivot)
        b.kernel.clear();
        std::map<long, int> kpivot;  // local row -> kernel column
        for (Column v : kernel_raw) {
            while (true) {
                if (v.empty())
                    throw std::runtime_error("homology: dependent kernel basis");
                long r = v.front().first;
                auto it = kpivot.find(r);
                if (it == kpivot.end()) {
                    kpivot[r] = (int)b.kernel.size();
                    b.kernel.push_back(std::move(v));
                    break;
                }
                Column& pc = b.kernel[it->second];
                if (poly_valuation(pc.front().second) <=
                    poly_valuation(v.front().second)) {
                    v = axpy(v, exact_div(v.front().second, pc.front().second), pc);
                } else {
                    std::swap(v, pc);  // new minimal-valuation pivot; reduce the
                }                      // displaced vector on the next rounds
            }
        }
        size_t K = b.kernel.size();
        b.kernel_pivot.assign(K, -1);
        for (auto& [row, col] : kpivot) b.kernel_pivot[col] = (int)row;

        std::vector<int> rowq(K, 0);
        if (C.graded)
            for (size_t k = 0; k < K; ++k) {
                auto& [lr, coef] = b.kernel[k].front();
                rowq[k] = C.deg_q[b.gens[lr]] - 2 * (int)poly_valuation(coef);
            }

        // ---- incoming image in kernel coordinates
        std::vector<std::vector<std::pair<int, Poly>>> Y;
        std::vector<int> colq;  // quantum degree of each image vector
        if (prev != blocks_.end()) {
            for (long g : prev->second.gens) {
                if (C.d[g].empty()) continue;
                Column a;
                for (auto& [row, c] : C.d[g]) a.push_back({b.local.at(row), c});
                std::sort(a.begin(), a.end());
                std::vector<std::pair<int, Poly>> y;
                while (!a.empty()) {
                    long r = a.front().first;
                    auto it = kpivot.find(r);
                    if (it == kpivot.end())
                        throw std::runtime_error("homology: image escapes the kernel");
                    Poly u =
                        exact_div(a.front().second, b.kernel[it->second].front().second);
                    a = axpy(a, u, b.kernel[it->second]);
                    y.push_back({it->second, u});
                }
                if (!y.empty()) {
                    Y.push_back(std::move(y));
                    colq.push_back(C.graded ? C.deg_q[g] : 0);
                }
            }
        }

        // ---- Smith reduction of the relation matrix, row ops tracked.
        // Homogeneity makes every entry a monomial whose exponent is fixed
        // by its slot: entry (r, c) is a bit times H^{(rowq[r] - colq[c])/2}.
        // Min-exponent pivoting therefore reduces to F2 elimination on a bit
        // matrix, processed stratum by stratum in increasing exponent; all
        // row operations (tracked for class coordinates) stay legal because
        // cleared rows always have quantum degree >= the pivot row's.
        size_t NC = Y.size();
        size_t words = (NC + 63) / 64;
        std::vector<std::vector<uint64_t>> B(K, std::vector<uint64_t>(words, 0));
        for (size_t c = 0; c < NC; ++c)
            for (auto& [row, u] : Y[c])
                if (!u.is_zero()) B[row][c >> 6] ^= uint64_t{1} << (c & 63);

        std::map<int, std::vector<int>> rows_by_q;
        for (size_t r = 0; r < K; ++r) rows_by_q[rowq[r]].push_back((int)r);
        int vmax = 0;
        if (C.graded && !rowq.empty() && !colq.empty())
            vmax = (*std::max_element(rowq.begin(), rowq.end()) -
                    *std::min_element(colq.begin(), colq.end())) / 2;

        std::vector<char> row_done(K, 0), col_done(NC, 0);
        b.row_class.assign(K, 1);  // free until proven otherwise
        b.row_target.assign(K, -1);
        b.ops.clear();

        size_t cols_left = NC;
        for (int v = 0; v <= vmax && cols_left; ++v) {
            bool progressed = true;
            while (progressed && cols_left) {
                progressed = false;
                for (size_t c = 0; c < NC; ++c) {
                    if (col_done[c]) continue;
                    auto it = rows_by_q.find(colq[c] + 2 * v);
                    if (it == rows_by_q.end()) continue;
                    int piv = -1;
                    for (int r : it->second)
                        if (!row_done[r] && (B[r][c >> 6] >> (c & 63) & 1)) {
                            piv = r;
                            break;
                        }
                    if (piv < 0) continue;
                    for (size_t r = 0; r < K; ++r) {
                        if ((int)r == piv || row_done[r] ||
                            !(B[r][c >> 6] >> (c & 63) & 1))
                            continue;
                        const uint64_t* src = B[piv].data();
                        uint64_t* dst = B[r].data();
                        for (size_t w = 0; w < words; ++w) dst[w] ^= src[w];
                        b.ops.push_back({0, (int)r, piv,
                                         Poly::monomial((unsigned)((rowq[r] - rowq[piv]) / 2))});
                    }
                    row_done[piv] = 1;
                    col_done[c] = 1;
                    --cols_left;
                    progressed = true;
                    if (v == 0) {
                        b.row_class[piv] = -1;  // unit relation: row dies
                    } else {
                        b.row_class[piv] = 0;
                        tors.push_back({{deg, rowq[piv], v}, {deg, piv}});
                    }
                }
            }
        }
        for (size_t r = 0; r < K; ++r)
            if (!row_done[r]) frees.push_back({{deg, rowq[r]}, {deg, (int)r}});
    }

    // ---- assemble, sorted, with back references from rows to summands
    std::sort(frees.begin(), frees.end(), [](auto& a, auto& b) {
        return std::tie(a.first.i, a.first.q) < std::tie(b.first.i, b.first.q);
    });
    std::sort(tors.begin(), tors.end(), [](auto& a, auto& b) {
        return std::tie(a.first.i, a.first.q, a.first.k) <
               std::tie(b.first.i, b.first.q, b.first.k);
    });
    for (size_t k = 0; k < frees.size(); ++k) {
        module_.free_part.push_back(frees[k].first);
        blocks_[frees[k].second.deg].row_target[frees[k].second.row] = (int)k;
    }
    for (size_t k = 0; k < tors.size(); ++k) {
        module_.torsion.push_back(tors[k].first);
        blocks_[tors[k].second.deg].row_target[tors[k].second.row] = (int)k;
    }
}

HomologySolver::ClassCoords HomologySolver::class_coordinates(int i,
                                                              const Column& z) const {
    auto bit = blocks_.find(i);
    if (bit == blocks_.end()) throw std::runtime_error("no generators in this degree");
    const Block& b = bit->second;

    // z must be a cycle
    std::map<long, Poly> dz;
    for (auto& [g, c] : z)
        for (auto& [row, e] : C_->d[g]) dz[row] += c * e;
    for (auto& [row, e] : dz)
        if (!e.is_zero()) throw std::runtime_error("class of a non-cycle requested");

    Column a;
    for (auto& [g, c] : z)
        if (!c.is_zero()) a.push_back({b.local.at(g), c});
    std::sort(a.begin(), a.end());

    std::map<long, int> kpivot;
    for (size_t k = 0; k < b.kernel.size(); ++k) kpivot[b.kernel_pivot[k]] = (int)k;
    std::vector<Poly> y(b.kernel.size());
    while (!a.empty()) {
        long r = a.front().first;
        auto it = kpivot.find(r);
        if (it == kpivot.end()) throw std::runtime_error("cycle escapes the kernel");
        Poly u = exact_div(a.front().second, b.kernel[it->second].front().second);
        a = axpy(a, u, b.kernel[it->second]);
        y[it->second] += u;
    }
    for (auto& op : b.ops) {
        if (op.kind == 0) y[op.i] += op.u * y[op.j];
        else std::swap(y[op.i], y[op.j]);
    }
    ClassCoords out;
    for (size_t r = 0; r < y.size(); ++r) {
        if (y[r].is_zero()) continue;
        if (b.row_class[r] == 1) {
            out.free_coords.push_back({b.row_target[r], y[r]});
        } else if (b.row_class[r] == 0) {
            int k = module_.torsion[b.row_target[r]].k;
            Poly rem = y[r].mod(Poly::monomial((unsigned)k));
            if (!rem.is_zero()) out.torsion_coords.push_back({b.row_target[r], rem});
        }
    }
    return out;
}

int HomologySolver::divisibility(int i, const Column& z) const {
    ClassCoords cc = class_coordinates(i, z);
    int best = -1;
    for (auto& [idx, coef] : cc.free_coords) {
        int v = (int)poly_valuation(coef);
        if (best < 0 || v < best) best = v;
    }
    if (best < 0) throw std::runtime_error("class is torsion");
    return best;
}

}  // namespace khi
