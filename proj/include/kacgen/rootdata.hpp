// Affine Dynkin diagram data for the relative root system of each supported type.
#pragma once

#include "kacgen/core_types.hpp"

#include <string>
#include <vector>

namespace kacgen {

enum class Arrow { None, ToJ, ToI, Both };

struct Edge {
    int i;
    int j;
    int multiplicity;
    Arrow arrow;
};

// Display layout: a chain of nodes joined by bond tokens plus off-chain nodes.
// Bond tokens: "-", "=>", "<=", "<=>", "≡>"; arrows point at the short side.
struct Branch {
    int node;
    std::vector<int> attached_to;
};

struct Layout {
    std::vector<int> chain;
    std::vector<std::string> bonds;  // bonds[k] joins chain[k] and chain[k+1]
    std::vector<Branch> branches;
};

using RationalVector = std::vector<Rational>;

// Per-node data indexed by node number 0..n; node 0 is the affine node.
struct AffineDiagram {
    TypeTag tag;
    int n;  // number of simple roots of the relative root system
    std::vector<int> marks_b;
    std::vector<int> marks_c;
    std::vector<int> orbit_size;  // the affine node carries 1
    std::vector<Edge> edges;
    Layout layout;

    int node_count() const { return n + 1; }
};

// Simple roots, highest root and coweights mu_k (k >= 1) as exact vectors in the
// coordinates of the fixed-point space of the twist. Entry 0 of simple_roots and
// coweights is empty.
struct CoweightTable {
    int dim;
    std::vector<RationalVector> simple_roots;
    std::vector<RationalVector> coweights;
    RationalVector highest_root;
};

struct KacPoint {
    std::vector<Rational> barycentric;  // per node, sums to 1
};

struct KacPointResult {
    KacPoint point;
    std::int64_t m;
};

// Throws UnsupportedType below the diagram rank bound.
AffineDiagram diagram_for(const TypeTag& tag);
CoweightTable coweight_table(const TypeTag& tag);

Rational pairing(const RationalVector& a, const RationalVector& b);

// m = f * sum s_g b_g and x_g = (f/m) s_g b_g. Throws AllZeroLabels.
KacPointResult kac_point(const std::vector<std::int64_t>& labels, const TypeTag& tag);

// Alcove vertex v_g = |g| / (b_g f) * mu_g, with v_0 the origin.
RationalVector alcove_vertex(const AffineDiagram& diagram, const CoweightTable& table, int node);
// sum x_g v_g
RationalVector point_coordinates(const KacPoint& point, const AffineDiagram& diagram,
                                 const CoweightTable& table);

}  // namespace kacgen
