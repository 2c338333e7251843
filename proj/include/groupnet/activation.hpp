#pragma once

#include <functional>
#include <string>
#include <vector>

#include "groupnet/domain.hpp"
#include "groupnet/hom.hpp"

namespace gn {

/// Real embedding an activation reads a point through: sum of x_j / m_j on a
/// finite group, the raw coordinate sum on a window, the angle sum
/// 2 pi x_j / R on a torus grid. Window coordinates may lie outside the
/// window (map images are not clipped).
double embed_scalar(const Domain& domain, const std::vector<Coord>& p);

/// Activation psi evaluated on points of a target domain. Table-backed
/// activations index the domain's elements directly and are total on it.
struct Activation {
    std::string name;
    std::function<cplx(const Domain&, const std::vector<Coord>&)> rule;
    std::vector<cplx> table;  // non-empty for table-backed activations
    bool bounded = true;
    bool nonconstant = true;
    bool requires_order = false;
    bool nonnegative = false;

    cplx eval(const Domain& domain, const std::vector<Coord>& p) const;
    /// Throws invalid-configuration errors (order-requiring psi on an
    /// unordered domain, table size mismatch).
    void check_applicable(const Domain& domain) const;
};

Activation make_logistic();
Activation make_tanh();
/// Real part of the all-ones character: cos of the embedding angle.
Activation make_cos_character();
Activation make_delta0();
Activation make_relu();
Activation make_leaky_relu(double slope = 0.01);
Activation make_table_activation(std::string name, std::vector<cplx> values);
/// Uniform [0, 1] table over a finite-domain's points, redrawn until
/// non-constant.
Activation make_random_table(const Domain& domain, Rng& rng);

Activation make_activation(const std::string& spec, const Domain& domain,
                           std::uint64_t seed);

}  // namespace gn
