#include "folia/vector_field.hpp"

#include "folia/errors.hpp"

#include <algorithm>

namespace folia {

VectorField::VectorField(std::vector<MultiPoly> components, int projective_degree, std::size_t num_params,
                         std::string chart_label)
    : components_(std::move(components)),
      projective_degree_(projective_degree),
      num_params_(num_params),
      chart_label_(std::move(chart_label)) {
    if (components_.empty()) throw DimensionMismatch("a vector field needs at least one component");
    for (const auto& p : components_)
        if (p.num_vars() != num_vars())
            throw DimensionMismatch("every component must live in n + params variables");
}

void validate_center(const VectorField& f, const CenterLocal& c) {
    if (c.n != f.n()) throw DimensionMismatch("center dimension differs from field dimension");
    if (c.d < 2 || c.d > c.n) throw IndexOutOfRange("center codimension must lie in 2..n");
}

std::vector<MultiPoly> chart_substitution(std::size_t num_vars, std::size_t d, std::size_t j) {
    if (j >= d) throw ChartOutOfRange("chart index must lie in 1..d");
    std::vector<MultiPoly> images;
    images.reserve(num_vars);
    const MultiPoly uj = MultiPoly::variable(num_vars, j);
    for (std::size_t i = 0; i < num_vars; ++i) {
        if (i < d && i != j)
            images.push_back(uj * MultiPoly::variable(num_vars, i));
        else
            images.push_back(MultiPoly::variable(num_vars, i));
    }
    return images;
}

int projective_degree_of(const std::vector<MultiPoly>& components) {
    const std::size_t n = components.size();
    int top = -1;
    for (const auto& p : components) top = std::max(top, p.degree_in_first(n));
    if (top <= 0) return 0;
    // Restrict each component to its part of degree `top` in the coordinates.
    std::vector<MultiPoly> lead;
    for (const auto& p : components) lead.push_back(p.homogeneous_part_in_first(n, static_cast<unsigned>(top)));
    // Radial iff z_j * L_i == z_i * L_j for all pairs.
    const std::size_t m = components.front().num_vars();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            MultiPoly lhs = MultiPoly::variable(m, j) * lead[i];
            MultiPoly rhs = MultiPoly::variable(m, i) * lead[j];
            if (!(lhs == rhs)) return top;
        }
    return top - 1;
}

}  // namespace folia
