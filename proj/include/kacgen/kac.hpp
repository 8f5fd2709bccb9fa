// Sigma lists, Kac labels, torus exponents, diagram rendering and verification.
#pragma once

#include "kacgen/core_types.hpp"
#include "kacgen/rootdata.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kacgen {

// Weakly decreasing exponents read off the characteristic polynomial. For 2A with even
// rank the entries are odd and count powers of a square root of xi; for A the list is
// the full symmetric list and contains negatives.
struct SigmaList {
    TypeTag tag;
    Partition partition;
    std::int64_t m;
    std::vector<std::int64_t> values;
};

// Diagonal exponents of the torus element in the standard representation, mirrored.
// Entries are exponents of a primitive root of order `modulus`.
struct TorusExponents {
    std::vector<std::int64_t> exponents;
    std::int64_t modulus;
};

struct KacDiagram {
    TypeTag tag;
    std::optional<Partition> partition;
    std::int64_t m;                    // canonical order of the element
    std::vector<std::int64_t> labels;  // per node 0..n, normalized when `normalized`
    std::int64_t label_gcd = 1;        // raw labels = labels * label_gcd
    bool normalized = true;

    std::vector<std::int64_t> raw_labels() const;
    bool operator==(const KacDiagram& o) const;
};

enum class Format { Ascii, Json };

// Throws InadmissiblePartition, NonIntegerEntry.
SigmaList sigma_list(const TypeTag& tag, const Partition& p);
// Labels before gcd normalization; f * sum s b = m holds for these. Throws NegativeLabel.
std::vector<std::int64_t> unnormalized_labels(const TypeTag& tag, const SigmaList& s);
KacDiagram kac_labels(const TypeTag& tag, const SigmaList& s);
// sigma_list followed by kac_labels.
KacDiagram kac_diagram(const TypeTag& tag, const Partition& p);
TorusExponents torus_exponents(const TypeTag& tag, const SigmaList& s);
// The cocharacter lambda with d = lambda(xi), in the coweight table coordinates.
RationalVector lambda_coordinates(const TypeTag& tag, const SigmaList& s);

std::string render(const KacDiagram& d, Format format);
// Throws ParseError on malformed input.
KacDiagram parse(const std::string& text, Format format);

struct VerifyReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};
VerifyReport verify_diagram(const KacDiagram& d);

}  // namespace kacgen
