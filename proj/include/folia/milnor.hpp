#pragma once

#include "folia/foliation_local.hpp"
#include "folia/multipoly.hpp"
#include "folia/vector_field.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace folia {

struct MilnorResult {
    unsigned mu;
    unsigned stabilized_at;          // truncation degree D with dim_D = dim_{D+1}
    std::vector<unsigned> dims;      // dim Q[z]/(I + m^(D+1)) for D = 0, 1, ...
};

// Local algebra dimension at the origin of the ideal generated by the
// components, by truncated Macaulay matrices over Q. Certified once all
// monomials of one degree reduce into the truncated ideal.
MilnorResult local_milnor(std::span<const MultiPoly> components, unsigned max_degree);

// Perturbation Y with prescribed orders along the center such that F + tY,
// t a trailing parameter variable, keeps the projective degree.
struct DeformationSpec {
    VectorField base;
    VectorField perturbation;  // Y, in the base's variables
    VectorField deformed;      // F + t Y with t as the last variable
    std::vector<unsigned> target_orders;
    Classification deformed_class;
    bool special;  // TypeI with every G_j nonzero
    unsigned attempts;
};

DeformationSpec build_deformation(const VectorField& f, const CenterLocal& c, const Classification& cls,
                                  std::uint64_t seed);

// F + t Y evaluated at a rational t.
VectorField specialize(const DeformationSpec& spec, const Rational& t);

}  // namespace folia
