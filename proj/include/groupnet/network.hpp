#pragma once

#include <Eigen/Dense>

#include "groupnet/activation.hpp"
#include "groupnet/domain.hpp"
#include "groupnet/hom.hpp"

namespace gn {

/// Relative singular-value threshold shared by all rank decisions.
inline constexpr double kRankTolerance = 1e-9;

struct NetworkTerm {
    cplx alpha;
    AnyMap map;
};

/// F(x) = sum_i alpha_i psi(map_i(x)); an empty term list is the zero
/// function. Activation values are read on the maps' target domain.
struct GroupNetwork {
    Domain domain;
    Domain target_domain;
    Activation activation;
    std::vector<NetworkTerm> terms;

    cplx eval(const std::vector<Coord>& x) const;
    std::vector<cplx> eval_table() const;
};

/// Column matrix of psi(map(x)) over the domain's points (rows) for a list
/// of family members (columns).
struct Dictionary {
    Domain domain;
    Domain target_domain;
    FamilySpec family;
    Activation activation;
    Eigen::MatrixXcd columns;
    std::vector<AnyMap> maps;
    bool exhaustive = false;  // true when the maps cover the whole family
};

/// Enumerates the family when it fits in n_terms, samples otherwise.
Dictionary build_dictionary(const Domain& domain, const FamilySpec& family,
                            const Activation& activation, std::size_t n_terms,
                            Rng& rng);

Eigen::VectorXcd dictionary_column(const Domain& domain,
                                   const Domain& target_domain,
                                   const Activation& activation,
                                   const AnyMap& map);

struct FitReport {
    Eigen::VectorXcd coefficients;
    double l2_error = 0.0;
    double lp_error = 0.0;
    double sup_error = 0.0;
    double p = 2.0;
    Eigen::Index rank = 0;
    double tolerance = kRankTolerance;
};

/// Haar-weighted least squares with a minimum-norm solution on
/// rank-deficient dictionaries; the reported Lp and sup errors are those of
/// the fitted network.
FitReport fit_coefficients(const Dictionary& dict, const Eigen::VectorXcd& target,
                           double p = 2.0);

GroupNetwork network_from_fit(const Dictionary& dict, const Eigen::VectorXcd& coeffs);

struct GreedyReport {
    GroupNetwork network;
    std::vector<double> residuals;  // L2 residual after each added term
    bool stalled = false;
};

/// Orthogonal matching pursuit over a sampled candidate pool (or the whole
/// family when it is small); all coefficients are refit after each added
/// column, so the residual sequence is non-increasing.
GreedyReport greedy_select(const Domain& domain, const FamilySpec& family,
                           const Activation& activation,
                           const Eigen::VectorXcd& target,
                           std::size_t max_terms, Rng& rng,
                           std::size_t pool_size = 64, double stop_tol = 1e-10);

double lp_error(const Domain& domain, const std::vector<cplx>& f,
                const std::vector<cplx>& g, double p);
double sup_error(const std::vector<cplx>& f, const std::vector<cplx>& g);

}  // namespace gn
