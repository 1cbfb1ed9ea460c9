#pragma once

#include "folia/linalg.hpp"
#include "folia/vector_field.hpp"

#include <cstdint>
#include <vector>

namespace folia {

struct Multiplicities {
    std::vector<Order> per_component;  // raw orders along W
    unsigned m_min;                    // over all components
    unsigned m_prime;                  // over the first d components
};

enum class CaseTag { TypeI, TypeII, TypeIII, Dicritical };
const char* to_string(CaseTag tag);

struct Classification {
    CaseTag tag;
    unsigned m_min;
    unsigned m_prime;
    unsigned ell;         // power of the divisor equation removed by the strict transform
    unsigned ell_kernel;  // argument fed to the kernel functions
    std::vector<MultiPoly> g;  // G_2..G_d in chart-1 coordinates
    bool all_g_nonzero;
};

struct NormalizedField {
    VectorField field;
    RationalMatrix a;  // w = A z
    unsigned attempts;  // 0 when the input already had the generic orders
};

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

// Throws NotSingularAlongCenter if some component does not vanish on W.
void assert_singular_along(const VectorField& f, const CenterLocal& c);

Multiplicities multiplicities(const VectorField& f, const CenterLocal& c);

// Block-lower-triangular linear change w = A z after which the first d
// components have order m_prime and the others order m_min.
NormalizedField normalize_linear(const VectorField& f, const CenterLocal& c, std::uint64_t seed);

// [dP_i/dz_j] for i, j < d restricted to W.
PolyMatrix jacobian_block(const VectorField& f, const CenterLocal& c);

// c_1..c_d with det(lambda I - A) = lambda^d + c_1 lambda^(d-1) + ... + c_d.
std::vector<MultiPoly> characteristic_coefficients(const PolyMatrix& a);

// True iff the restricted linear part has a nonzero eigenvalue.
bool is_elementary(const VectorField& f, const CenterLocal& c);

Classification classify_center(const VectorField& f, const CenterLocal& c);

}  // namespace folia
