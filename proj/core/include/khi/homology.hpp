// Homology of the cube complexes over F2 and F2[H]: graded towers and
// torsion via Smith reduction, plus coordinates and H-divisibility of cycle
// classes (needed for the concordance invariants).
#pragma once

#include "khi/complex.hpp"

#include <map>
#include <vector>

namespace khi {

struct Tower {
    int i = 0, q = 0;  // a free R summand in bidegree (i, q)
};
struct TorsionPiece {
    int i = 0, q = 0;
    int k = 1;  // R/(H^k), generator in bidegree (i, q)
};

struct GradedModule {
    bool graded = true;
    std::vector<Tower> free_part;       // sorted by (i, q)
    std::vector<TorsionPiece> torsion;  // sorted by (i, q, k); empty over a field
    long total_free() const { return (long)free_part.size(); }
    // dimension of the free part in a fixed bidegree
    int dim_free(int i, int q) const;
};

// general-purpose Smith normal form over F2[H] (Euclidean by degree);
// returns the diagonal entries of the reduced matrix
std::vector<Poly> snf(std::vector<std::vector<Poly>> M);

// Homology of C with enough state retained to locate classes afterwards.
class HomologySolver {
  public:
    explicit HomologySolver(const Complex& C);

    const GradedModule& module() const { return module_; }

    struct ClassCoords {
        // coordinates on the free towers (index into module().free_part)
        std::vector<std::pair<int, Poly>> free_coords;
        // coordinates on the torsion pieces (index into module().torsion)
        std::vector<std::pair<int, Poly>> torsion_coords;
    };

    // z: a cycle, sparse in global generator indices, homogeneous of
    // homological degree i; throws if z is not a cycle or not in the span
    ClassCoords class_coordinates(int i, const Column& z) const;

    // largest k with [z] in H^k * (H / torsion); throws "class is torsion"
    // when the free coordinates all vanish
    int divisibility(int i, const Column& z) const;

  private:
    struct RowOp {  // replayed on coordinate vectors
        int kind;   // 0: y[i] += u * y[j]; 1: swap
        int i, j;
        Poly u;
    };
    struct Block {  // one homological degree
        std::vector<long> gens;            // global ids
        std::map<long, int> local;         // global -> local row
        std::vector<Column> kernel;        // echelon kernel basis (local rows)
        std::vector<int> kernel_pivot;     // pivot row per kernel column
        std::vector<RowOp> ops;            // Smith row transforms
        std::vector<int> row_class;        // -1 killed, -2 free, >=0 torsion idx
        std::vector<int> row_target;       // index into module free/torsion lists
    };
    std::map<int, Block> blocks_;
    GradedModule module_;
    const Complex* C_;
};

}  // namespace khi
