// Verification campaigns shared by the command-line tool and the acceptance tests.
// Each campaign returns one result per case in a deterministic order.
#pragma once

#include "kacgen/core_types.hpp"
#include "kacgen/kac.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kacgen {

struct CaseResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CampaignReport {
    std::string name;
    std::vector<CaseResult> cases;
    double seconds = 0;

    bool ok() const;
    std::size_t failures() const;
};

// Worked examples with labels listed in layout chain order, then branch nodes.
struct Golden {
    Family family;
    int rank;
    std::vector<int> partition;
    std::vector<std::int64_t> chain;
    std::vector<std::int64_t> branches;
};

const std::vector<Golden>& golden_diagrams();
std::vector<std::int64_t> chain_labels(const KacDiagram& d);
std::vector<std::int64_t> branch_labels(const KacDiagram& d);

std::vector<Family> all_families();
std::vector<Family> nontrivial_families();  // B, C, D, 2A, 2D
std::vector<Family> untwisted_families();   // A, B, C, D

// KACGEN_MAX_RANK when set to a positive integer, else the fallback.
int env_max_rank(int fallback);

CampaignReport examples_campaign();
// Expanded characteristic polynomials pairwise distinct per tag.
CampaignReport psi_injectivity_campaign(const std::vector<Family>& families, int max_rank);
// Normalized Kac diagrams pairwise distinct per tag.
CampaignReport zeta_injectivity_campaign(const std::vector<Family>& families, int max_rank);
// Closed form against the matrix oracle; 2A (adjoint) capped separately.
CampaignReport oracle_campaign(const std::vector<Family>& families, int max_rank, int max_twoA_rank);
// recover_p undoes formula_charpoly on odd-part partitions of 3..max_l.
CampaignReport recovery_campaign(int max_l);
// Block and dense checks of the 2A torus element.
CampaignReport twoA_check_campaign(int max_l);
// Class counts, lift bijection, agreement of the two ellipticity predicates, regular ellipticity.
CampaignReport weyl_campaign(const std::vector<Family>& families, int max_rank);
// element_order of the lift equals the canonical order.
CampaignReport orders_campaign(const std::vector<Family>& families, int max_rank);
// Brute-force rationality; max_rank per family.
CampaignReport rationality_campaign(const std::vector<std::pair<Family, int>>& caps);
// f sum s b = m and the coweight identity for lambda, before normalization.
CampaignReport structural_campaign(const std::vector<Family>& families, int max_rank);

}  // namespace kacgen
