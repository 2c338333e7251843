#include "groupnet/density.hpp"

#include <cmath>

#include "groupnet/specs.hpp"
#include "groupnet/util.hpp"

namespace gn {

namespace {
// Visit limit for exhaustive family streaming; larger families fall back to
// sampled (lower-bound) rank estimation.
constexpr std::uint64_t kExhaustiveVisitCap = 1ull << 22;
}  // namespace

SpanTracker::SpanTracker(std::size_t ambient, double tol)
    : ambient_(ambient), tol_(tol) {}

bool SpanTracker::add(const Eigen::VectorXcd& column) {
    if (full()) return false;
    const double norm0 = column.norm();
    if (norm0 <= 0.0) return false;
    Eigen::VectorXcd v = column;
    // Two Gram-Schmidt passes keep the basis orthonormal to roundoff.
    for (int pass = 0; pass < 2; ++pass)
        for (const Eigen::VectorXcd& b : basis_) v -= b.dot(v) * b;
    if (v.norm() <= tol_ * norm0) return false;
    basis_.push_back(v / v.norm());
    return true;
}

std::vector<Eigen::VectorXcd> SpanTracker::complement() const {
    const Eigen::Index n = static_cast<Eigen::Index>(ambient_);
    std::vector<Eigen::VectorXcd> out;
    SpanTracker scratch(ambient_, 0.5);  // coarse tolerance: exact unit vectors
    scratch.basis_ = basis_;
    for (Eigen::Index j = 0; j < n && scratch.basis_.size() < ambient_; ++j) {
        Eigen::VectorXcd e = Eigen::VectorXcd::Zero(n);
        e[j] = 1.0;
        Eigen::VectorXcd v = e;
        for (int pass = 0; pass < 2; ++pass)
            for (const Eigen::VectorXcd& b : scratch.basis_) v -= b.dot(v) * b;
        if (v.norm() > 1e-6) {
            v /= v.norm();
            scratch.basis_.push_back(v);
            out.push_back(std::move(v));
        }
    }
    return out;
}

std::vector<Eigen::VectorXcd> annihilator_basis(const Eigen::MatrixXcd& columns,
                                                double tol) {
    const Eigen::Index n = columns.rows();
    std::vector<Eigen::VectorXcd> out;
    if (columns.cols() == 0 || columns.norm() == 0.0) {
        for (Eigen::Index j = 0; j < n; ++j) {
            Eigen::VectorXcd e = Eigen::VectorXcd::Zero(n);
            e[j] = 1.0;
            out.push_back(std::move(e));
        }
        return out;
    }
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(columns, Eigen::ComputeFullU);
    svd.setThreshold(tol);
    const Eigen::Index r = svd.rank();
    // mu^T D = 0 iff conj(mu) is orthogonal to the column span.
    for (Eigen::Index j = r; j < n; ++j)
        out.push_back(svd.matrixU().col(j).conjugate());
    return out;
}

std::vector<SignedMeasure> annihilator(const Dictionary& dict) {
    if (!dict.domain.is_group() || dict.domain.kind() != DomainKind::finite)
        throw std::invalid_argument("annihilator measures require a finite group domain");
    std::vector<SignedMeasure> out;
    for (const Eigen::VectorXcd& v : annihilator_basis(dict.columns)) {
        std::vector<cplx> mass(v.data(), v.data() + v.size());
        out.push_back(SignedMeasure(dict.domain.group(), std::move(mass)).normalized());
    }
    return out;
}

DensityReport density_rank(const Domain& domain, const Activation& activation,
                           const FamilySpec& family, std::uint64_t budget,
                           Rng& rng) {
    DensityReport report;
    report.group_spec = domain.spec_string();
    report.family_spec = family.spec_string();
    report.activation_name = activation.name;
    report.ambient = domain.size();
    report.seed = family.seed;

    const Domain target = family_target_domain(domain, family);
    activation.check_applicable(target);

    const std::uint64_t cost = family_enumeration_cost(domain, family);
    const bool exhaustive = !family.shared_map && cost <= kExhaustiveVisitCap;
    SpanTracker span(domain.size());
    std::size_t visited = 0;
    if (exhaustive) {
        visit_family(domain, family, [&](const AnyMap& m) {
            span.add(dictionary_column(domain, target, activation, m));
            ++visited;
            return !span.full();
        });
    } else if (family.shared_map) {
        // One shared map for every term: the span is a single column.
        span.add(dictionary_column(domain, target, activation,
                                   sample_map(domain, family, rng)));
        visited = 1;
    } else {
        for (std::uint64_t i = 0; i < budget && !span.full(); ++i) {
            span.add(dictionary_column(domain, target, activation,
                                       sample_map(domain, family, rng)));
            ++visited;
        }
    }
    report.n_terms = visited;
    report.rank = span.rank();
    report.dense = span.full();
    report.lower_bound = !exhaustive && !report.dense;
    if (!report.dense)
        for (Eigen::VectorXcd& v : span.complement())
            report.annihilator_vectors.push_back(v.conjugate());
    return report;
}

DiscriminationResult is_discriminatory(const Domain& domain,
                                       const Activation& activation,
                                       const FamilySpec& family) {
    if (domain.kind() != DomainKind::finite)
        throw std::invalid_argument("is_discriminatory is defined over finite groups");
    Rng rng(family.seed);
    DensityReport report = density_rank(domain, activation, family,
                                        family.budget, rng);
    DiscriminationResult result;
    result.exhaustive = !report.lower_bound || report.dense;
    result.discriminatory = report.dense;
    if (!report.dense && !report.annihilator_vectors.empty()) {
        const Eigen::VectorXcd& v = report.annihilator_vectors.front();
        std::vector<cplx> mass(v.data(), v.data() + v.size());
        result.witness =
            SignedMeasure(domain.group(), std::move(mass)).normalized();
    }
    return result;
}

std::vector<DensityReport> density_map(const std::vector<std::string>& group_specs,
                                       const std::vector<std::string>& activation_specs,
                                       const std::vector<std::string>& family_specs,
                                       std::size_t n_terms, std::uint64_t seed) {
    std::vector<DensityReport> out;
    std::uint64_t cell = 0;
    for (const std::string& gspec : group_specs)
        for (const std::string& aspec : activation_specs)
            for (const std::string& fspec : family_specs) {
                const std::uint64_t sd = cell_seed(seed, cell++);
                DensityReport report;
                report.group_spec = gspec;
                report.family_spec = fspec;
                report.activation_name = aspec;
                report.seed = sd;
                try {
                    Domain domain = parse_domain(gspec);
                    FamilySpec family = parse_family(fspec);
                    family.seed = sd;
                    Activation act = make_activation(aspec, family_target_domain(domain, family), sd);
                    Rng rng(sd);
                    report = density_rank(domain, act, family, n_terms, rng);
                    report.seed = sd;
                } catch (const std::exception& e) {
                    report.error = e.what();  // recorded in-row, sweep continues
                }
                out.push_back(std::move(report));
            }
    return out;
}

std::vector<CounterexampleWitness> counterexample_search(
    std::uint64_t max_order, const std::vector<FamilySpec>& families, Rng& rng,
    std::size_t trials) {
    std::vector<CounterexampleWitness> out;
    if (trials == 0) return out;
    for (const std::vector<Coord>& moduli : enumerate_moduli_lists(max_order)) {
        Domain domain = Domain::finite(FiniteAbelianGroup(moduli));
        for (std::size_t trial = 0; trial < trials; ++trial) {
            Activation act = make_random_table(domain, rng);
            for (const FamilySpec& family : families) {
                if (family_enumeration_cost(domain, family) > kExhaustiveVisitCap)
                    continue;
                Rng cell_rng(rng());
                DensityReport report =
                    density_rank(domain, act, family, family.budget, cell_rng);
                if (report.dense || report.annihilator_vectors.empty()) continue;
                const Eigen::VectorXcd& v = report.annihilator_vectors.front();
                std::vector<cplx> mass(v.data(), v.data() + v.size());
                SignedMeasure witness =
                    SignedMeasure(domain.group(), std::move(mass)).normalized();
                // Re-verify by direct pairing against every family member.
                double max_pairing = 0.0;
                const Domain target = family_target_domain(domain, family);
                visit_family(domain, family, [&](const AnyMap& m) {
                    cplx pairing = 0.0;
                    for (std::size_t i = 0; i < domain.size(); ++i)
                        pairing += act.eval(target, apply_map(m, domain.point(i))) *
                                   witness.mass[i];
                    max_pairing = std::max(max_pairing, std::abs(pairing));
                    return true;
                });
                out.push_back({moduli, act.table, family.spec_string(), witness,
                               max_pairing});
            }
        }
    }
    return out;
}

}  // namespace gn
