#pragma once

#include "folia/foliation_local.hpp"
#include "folia/vector_field.hpp"

#include <span>
#include <utility>
#include <vector>

namespace folia {

struct BlowupResult {
    VectorField strict;
    unsigned ell;              // power of u_j divided out
    std::size_t divisor_var;   // 0-based index of u_j
    CaseTag case_tag;
    bool divisor_invariant;    // strict component along u_j vanishes on {u_j = 0}
};

// Pullback to chart j (0-based) before removing the common power of u_j.
VectorField pullback_chart(const VectorField& f, const CenterLocal& c, std::size_t chart);

BlowupResult strict_transform(const VectorField& f, const CenterLocal& c, std::size_t chart);

// Curve {u_z = 0 for z in zero_vars, u_k = psi_k for each shift}; each psi_k
// may only involve variables that are neither zeroed nor shifted.
struct BranchData {
    std::vector<std::size_t> zero_vars;
    std::vector<std::pair<std::size_t, MultiPoly>> shifts;
};

// Coordinates v_k = u_k - psi_k, so the branch becomes a coordinate subspace.
VectorField recenter_on_branch(const VectorField& fs, const BranchData& branch);

// Relabel coordinates: new coordinate perm[i] is old coordinate i.
VectorField permute_coordinates(const VectorField& f, std::span<const std::size_t> perm);

}  // namespace folia
