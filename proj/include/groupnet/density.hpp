#pragma once

#include <optional>
#include <string>

#include "groupnet/network.hpp"

namespace gn {

/// Incremental orthonormal span tracker for streaming dictionary columns;
/// shares the relative rank tolerance with the SVD path.
class SpanTracker {
public:
    SpanTracker(std::size_t ambient, double tol = kRankTolerance);

    /// Returns true when the column enlarged the span.
    bool add(const Eigen::VectorXcd& column);
    std::size_t rank() const { return basis_.size(); }
    bool full() const { return basis_.size() == ambient_; }

    /// Orthonormal basis of the orthogonal complement of the span.
    std::vector<Eigen::VectorXcd> complement() const;

private:
    std::size_t ambient_;
    double tol_;
    std::vector<Eigen::VectorXcd> basis_;
};

/// Basis of measures mu with sum_x column(x) mu(x) = 0 for every column:
/// the null space of the transposed column matrix.
std::vector<Eigen::VectorXcd> annihilator_basis(const Eigen::MatrixXcd& columns,
                                                double tol = kRankTolerance);

std::vector<SignedMeasure> annihilator(const Dictionary& dict);

struct DensityReport {
    std::string group_spec;
    std::string family_spec;
    std::string activation_name;
    std::size_t n_terms = 0;
    std::size_t rank = 0;
    std::size_t ambient = 0;
    bool dense = false;
    /// Rank from a sampled (non-exhaustive) family is only a lower bound;
    /// negative verdicts are definitive for exhaustive families only.
    bool lower_bound = false;
    double tolerance = kRankTolerance;
    std::uint64_t seed = 0;
    std::optional<std::string> error;
    std::vector<Eigen::VectorXcd> annihilator_vectors;
};

DensityReport density_rank(const Domain& domain, const Activation& activation,
                           const FamilySpec& family, std::uint64_t budget,
                           Rng& rng);

struct DiscriminationResult {
    bool discriminatory = false;
    bool exhaustive = false;
    std::optional<SignedMeasure> witness;
};

/// Trivial annihilator over the family dictionary; on failure the witness is
/// a concrete nonzero annihilating measure (w.r.t. the sampled subfamily
/// when the family is not exhaustively enumerable).
DiscriminationResult is_discriminatory(const Domain& domain,
                                       const Activation& activation,
                                       const FamilySpec& family);

struct SweepCell {
    std::string group;
    std::string family;
    std::string activation;
};

std::vector<DensityReport> density_map(const std::vector<std::string>& group_specs,
                                       const std::vector<std::string>& activation_specs,
                                       const std::vector<std::string>& family_specs,
                                       std::size_t n_terms, std::uint64_t seed);

struct CounterexampleWitness {
    std::vector<Coord> moduli;
    std::vector<cplx> activation_table;
    std::string family_spec;
    SignedMeasure witness;
    double max_pairing = 0.0;  // max |sum psi(phi(x)) mu(x)| over the family
};

/// Searches bounded non-constant table activations that fail to be
/// discriminatory w.r.t. the given exhaustive families, over all group
/// presentations of order <= max_order. Every witness is re-verified by
/// direct pairing against each enumerated map.
std::vector<CounterexampleWitness> counterexample_search(
    std::uint64_t max_order, const std::vector<FamilySpec>& families, Rng& rng,
    std::size_t trials);

}  // namespace gn
