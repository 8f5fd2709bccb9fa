// Explicit generator matrices, lifts of elliptic classes, the twist and element orders.
#pragma once

#include "kacgen/core_types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kacgen {

// Dense square matrix over the Gaussian integers, 0-based storage.
class GaussMatrix {
public:
    GaussMatrix() = default;
    explicit GaussMatrix(int n);
    static GaussMatrix identity(int n);
    static GaussMatrix antidiagonal(int n);
    static GaussMatrix diagonal(const std::vector<GaussInt>& entries);

    int size() const noexcept { return n_; }
    // 1-based access, matching the entrywise generator definitions.
    GaussInt& operator()(int i, int j) { return a_[index(i, j)]; }
    const GaussInt& operator()(int i, int j) const { return a_[index(i, j)]; }

    GaussMatrix operator*(const GaussMatrix& o) const;
    GaussMatrix operator-() const;
    bool operator==(const GaussMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }
    bool operator!=(const GaussMatrix& o) const { return !(*this == o); }
    GaussMatrix transpose() const;

    bool is_identity() const;
    // Scalar multiple of the identity.
    bool is_scalar() const;
    // Exactly one nonzero entry per row and column, each a unit.
    bool is_monomial() const;
    // Row index (1-based) of the nonzero entry in column j of a monomial matrix.
    int column_support(int j) const;
    GaussMatrix monomial_inverse() const;
    GaussInt monomial_det() const;
    std::string to_string() const;

private:
    std::size_t index(int i, int j) const;
    int n_ = 0;
    std::vector<GaussInt> a_;
};

int matrix_dimension(const TypeTag& tag);

struct LiftMatrix {
    GaussMatrix matrix;
    TypeTag tag;
    std::optional<Partition> partition;
};

// twisted: the element stands for matrix ⋊ theta.
struct TwistedElement {
    LiftMatrix lift;
    bool twisted;
};

enum class GeneratorKind { S, T, TEll, STilde, J };

// Throws IndexOutOfRange or UnsupportedType when (kind, k) does not exist for the tag.
LiftMatrix generator(const TypeTag& tag, GeneratorKind kind, int k = 0);

// Throws InadmissiblePartition.
TwistedElement lift(const TypeTag& tag, const Partition& p);
// The factor c_nu of the lift (before the trailing J for twisted types), nu 1-based.
GaussMatrix lift_block(const TypeTag& tag, const Partition& p, int nu);

// The pinned involution on the group. Throws UnsupportedType for untwisted tags.
GaussMatrix apply_theta(const TypeTag& tag, const GaussMatrix& g);
// The involution on the Lie algebra of gl_N realizations: -J X^T J^{-1} (2A), J X J (2D).
GaussMatrix apply_theta_algebra(const TypeTag& tag, const GaussMatrix& x);

// Symmetric bilinear or symplectic form defining the group.
GaussMatrix defining_form(const TypeTag& tag);
// Empty when g lies in the realized group, else the failed condition.
std::optional<std::string> membership_failure(const TypeTag& tag, const GaussMatrix& g);
bool is_member(const TypeTag& tag, const GaussMatrix& g);

// Group elements that generate a subgroup covering the Weyl group, for random conjugations.
std::vector<GaussMatrix> group_generators(const TypeTag& tag);

// (g ⋊ theta)^k = P_k ⋊ theta^k with P_1 = g and P_{k+1} = P_k * theta^k(g).
GaussMatrix twisted_power(const TypeTag& tag, const GaussMatrix& g, int k);

// Least k >= 1 with e^k the identity in the realized group (twisted powers for twisted elements).
std::int64_t group_order(const TwistedElement& e);
// Order of the element in the realization carrying its invariant: the group order,
// except for 2A where powers are taken modulo the centre (the order of Ad(n) ∘ theta).
std::int64_t element_order(const TwistedElement& e);
// Iteration cap used by the order routines.
std::int64_t order_cap(const TypeTag& tag);

}  // namespace kacgen
