// Characteristic polynomials of lifts: closed forms, an exact matrix oracle,
// recovery of the partition for 2A, and the 2A torus-element consistency check.
#pragma once

#include "kacgen/core_types.hpp"
#include "kacgen/lifts.hpp"

#include <string>
#include <vector>

namespace kacgen {

enum class Representation { Standard, StandardTimesJ, Adjoint };

std::string representation_name(Representation rep);

struct CharPolyResult {
    FactoredPoly factored;
    IntPoly expanded;
    std::int64_t m;
    Representation rep;
};

// t^m - 1 for even sign parity, t^m + 1 for odd.
IntPoly cyclic_block_charpoly(std::int64_t m, bool odd_parity);

// Order of the element used for root bookkeeping and by the diagram pipeline:
// A: 2l (l even) or l (l odd); B, D, 2A, 2D: 2 lcm; C: 4 lcm.
std::int64_t canonical_m(const TypeTag& tag, const Partition& p);

Representation representation_for(const TypeTag& tag);

// Throws InadmissiblePartition.
CharPolyResult formula_charpoly(const TypeTag& tag, const Partition& p);

// Exact characteristic polynomial of the lift computed from its matrix:
// the N x N matrix (A, B, C, D), n J (2D), X -> Ad(n) theta(X) on sl_l (2A).
// Throws NonRealCoefficient.
CharPolyResult matrix_oracle_charpoly(const TwistedElement& e);

// Same operator on gl_l instead of sl_l (2A only).
IntPoly twoA_gl_charpoly(const TwistedElement& e);

// Division-free characteristic polynomial det(t I - A) over the Gaussian integers.
// Returns ascending coefficients.
std::vector<GaussInt> berkowitz_charpoly(const std::vector<std::vector<GaussInt>>& a);

struct Recovery {
    FactoredPoly p;       // (1/(t+1)) prod (t^{l_nu} + 1)
    Partition partition;  // the odd parts l_nu
};

// Root-removal recovery of p and the partition from a 2A adjoint polynomial.
// Throws RecoveryStuck.
Recovery recover_p(const CharPolyResult& q);

enum class TwoAVariant { EvenEll, OddEll };

struct TwoACheckDetail {
    bool block_ok = false;
    bool dense_ok = false;
    bool permutation_ok = false;
    std::string message;
};

// Builds Ad(d) o theta from the torus exponents and compares its characteristic
// polynomial with the closed form twice: through the invariant block decomposition
// and through a dense determinant over the cyclotomic integers.
// Throws MismatchDetected with the first difference.
bool twoA_sigma_charpoly_check(const Partition& p, TwoAVariant variant);
TwoACheckDetail twoA_sigma_charpoly_detail(const Partition& p, TwoAVariant variant);

}  // namespace kacgen
