#pragma once

#include "folia/multipoly.hpp"

#include <string>
#include <vector>

namespace folia {

// Polynomial vector field sum_i P_i d/dz_i in an affine chart of P^n.
// Trailing parameter variables (e.g. a deformation parameter t) may follow
// the n coordinates; they are constants for every geometric operation.
class VectorField {
public:
    VectorField() = default;
    VectorField(std::vector<MultiPoly> components, int projective_degree, std::size_t num_params = 0,
                std::string chart_label = {});

    std::size_t n() const noexcept { return components_.size(); }
    std::size_t num_params() const noexcept { return num_params_; }
    std::size_t num_vars() const noexcept { return n() + num_params_; }
    int projective_degree() const noexcept { return projective_degree_; }
    const std::string& chart_label() const noexcept { return chart_label_; }
    const std::vector<MultiPoly>& components() const noexcept { return components_; }
    const MultiPoly& operator[](std::size_t i) const { return components_.at(i); }

    friend bool operator==(const VectorField& a, const VectorField& b) {
        return a.components_ == b.components_ && a.num_params_ == b.num_params_;
    }

private:
    std::vector<MultiPoly> components_;
    int projective_degree_ = 0;
    std::size_t num_params_ = 0;
    std::string chart_label_;
};

// Center W = {z1 = ... = zd = 0} inside an n-dimensional chart.
struct CenterLocal {
    std::size_t n;
    std::size_t d;
};

void validate_center(const VectorField& f, const CenterLocal& c);

// Images of z under the blow-up chart j (0-based, j < d):
// z_j = u_j, z_i = u_j u_i (i < d, i != j), z_i = u_i otherwise.
std::vector<MultiPoly> chart_substitution(std::size_t num_vars, std::size_t d, std::size_t j);

// Projective degree read from the top homogeneous part in the n coordinates:
// a radial top part g*(z1,...,zn) lowers the count by one.
int projective_degree_of(const std::vector<MultiPoly>& components);

}  // namespace folia
