#pragma once

#include <string>
#include <vector>

namespace bsl {

// Tensor (c, alpha) integration box: c on a logarithmic lattice (trapezoid in
// log c, which absorbs one dc/c factor), alpha uniform.
struct QuadSpec {
    double c_min = 0.0;
    double c_max = 0.0;
    double alpha_min = 0.0;
    double alpha_max = 0.0;
    int n_c = 0;
    int n_alpha = 0;

    bool same_ranges(const QuadSpec& o, double rel = 1e-12) const;
    std::string id() const;
};

void validate_quad_spec(const QuadSpec& q, int min_nodes = 2);

// Nodes and weights for integrals over the group with measure dc dalpha / c^3:
// c_weights already contain the full c-measure factor, alpha_weights the
// d(alpha) trapezoid coefficients.
struct GroupQuadrature {
    QuadSpec spec;
    std::vector<double> c_nodes;
    std::vector<double> c_weights;
    std::vector<double> alpha_nodes;
    std::vector<double> alpha_weights;

    double total_measure() const;
};

GroupQuadrature make_group_quadrature(const QuadSpec& spec);

// Plain trapezoid weights for n nodes spanning [a, b].
std::vector<double> trapezoid_weights(double a, double b, int n);
std::vector<double> linspace(double a, double b, int n);

}  // namespace bsl
