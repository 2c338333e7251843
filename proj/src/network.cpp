#include "groupnet/network.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gn {

cplx GroupNetwork::eval(const std::vector<Coord>& x) const {
    cplx acc = 0.0;
    for (const NetworkTerm& term : terms)
        acc += term.alpha * activation.eval(target_domain, apply_map(term.map, x));
    return acc;
}

std::vector<cplx> GroupNetwork::eval_table() const {
    std::vector<cplx> out(domain.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = eval(domain.point(i));
    return out;
}

Eigen::VectorXcd dictionary_column(const Domain& domain,
                                   const Domain& target_domain,
                                   const Activation& activation,
                                   const AnyMap& map) {
    Eigen::VectorXcd col(static_cast<Eigen::Index>(domain.size()));
    for (std::size_t i = 0; i < domain.size(); ++i)
        col[static_cast<Eigen::Index>(i)] =
            activation.eval(target_domain, apply_map(map, domain.point(i)));
    return col;
}

Dictionary build_dictionary(const Domain& domain, const FamilySpec& family,
                            const Activation& activation, std::size_t n_terms,
                            Rng& rng) {
    Dictionary dict{domain, family_target_domain(domain, family), family,
                    activation, {}, {}, false};
    activation.check_applicable(dict.target_domain);
    if (n_terms == 0) throw std::invalid_argument("dictionary needs n_terms >= 1");

    const std::uint64_t cost = family_enumeration_cost(domain, family);
    if (cost <= n_terms && cost <= family.budget) {
        FamilySpec full = family;
        full.budget = std::max<std::uint64_t>(full.budget, cost);
        dict.maps = enumerate_family(domain, full);
        dict.exhaustive = true;
    } else if (family.shared_map) {
        // Shared-map mode: one map drawn for every term; the span collapses
        // to a single column direction.
        AnyMap shared = sample_map(domain, family, rng);
        dict.maps.assign(n_terms, shared);
    } else {
        dict.maps.reserve(n_terms);
        for (std::size_t i = 0; i < n_terms; ++i)
            dict.maps.push_back(sample_map(domain, family, rng));
    }

    dict.columns.resize(static_cast<Eigen::Index>(domain.size()),
                        static_cast<Eigen::Index>(dict.maps.size()));
    for (std::size_t c = 0; c < dict.maps.size(); ++c)
        dict.columns.col(static_cast<Eigen::Index>(c)) =
            dictionary_column(domain, dict.target_domain, activation, dict.maps[c]);
    return dict;
}

namespace {
double weighted_lp(const Domain& domain, const Eigen::VectorXcd& r, double p) {
    if (p == std::numeric_limits<double>::infinity())
        return r.size() == 0 ? 0.0 : r.cwiseAbs().maxCoeff();
    const double w = domain.point_weight();
    double acc = 0.0;
    for (Eigen::Index i = 0; i < r.size(); ++i)
        acc += std::pow(std::abs(r[i]), p) * w;
    return std::pow(acc, 1.0 / p);
}
}  // namespace

FitReport fit_coefficients(const Dictionary& dict, const Eigen::VectorXcd& target,
                           double p) {
    if (target.size() != dict.columns.rows())
        throw std::invalid_argument("target length does not match the dictionary domain");
    if (p < 1.0) throw std::invalid_argument("Lp exponent must be >= 1");
    // Uniform Haar weights: the weighted L2 argmin equals the unweighted one.
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(
        dict.columns, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(kRankTolerance);
    FitReport report;
    report.coefficients = svd.solve(target);
    report.rank = svd.rank();
    report.p = p;
    Eigen::VectorXcd residual = dict.columns * report.coefficients - target;
    report.l2_error = weighted_lp(dict.domain, residual, 2.0);
    report.lp_error = weighted_lp(dict.domain, residual, p);
    report.sup_error =
        residual.size() == 0 ? 0.0 : residual.cwiseAbs().maxCoeff();
    return report;
}

GroupNetwork network_from_fit(const Dictionary& dict, const Eigen::VectorXcd& coeffs) {
    if (coeffs.size() != static_cast<Eigen::Index>(dict.maps.size()))
        throw std::invalid_argument("coefficient count does not match dictionary terms");
    GroupNetwork net{dict.domain, dict.target_domain, dict.activation, {}};
    for (std::size_t i = 0; i < dict.maps.size(); ++i)
        net.terms.push_back({coeffs[static_cast<Eigen::Index>(i)], dict.maps[i]});
    return net;
}

GreedyReport greedy_select(const Domain& domain, const FamilySpec& family,
                           const Activation& activation,
                           const Eigen::VectorXcd& target,
                           std::size_t max_terms, Rng& rng,
                           std::size_t pool_size, double stop_tol) {
    activation.check_applicable(family_target_domain(domain, family));
    Dictionary selected{domain, family_target_domain(domain, family), family,
                        activation, {}, {}, false};
    selected.columns.resize(static_cast<Eigen::Index>(domain.size()), 0);

    const std::uint64_t cost = family_enumeration_cost(domain, family);
    std::vector<AnyMap> full_pool;
    if (!family.shared_map && cost <= pool_size && cost <= family.budget)
        full_pool = enumerate_family(domain, family);

    std::vector<double> residuals;
    bool stalled = false;
    Eigen::VectorXcd residual = target;
    Eigen::VectorXcd coeffs;
    double best = residual.norm();
    for (std::size_t step = 0; step < max_terms; ++step) {
        if (best * std::sqrt(domain.point_weight()) < stop_tol) break;
        // Candidate pool: the one shared map in shared-map mode, the full
        // family when small, a fresh sample otherwise.
        std::vector<AnyMap> pool = full_pool;
        if (family.shared_map)
            pool.assign(1, selected.maps.empty() ? sample_map(domain, family, rng)
                                                 : selected.maps.front());
        else if (pool.empty())
            for (std::size_t i = 0; i < pool_size; ++i)
                pool.push_back(sample_map(domain, family, rng));
        double best_score = -1.0;
        std::size_t best_idx = pool.size();
        std::vector<Eigen::VectorXcd> cols(pool.size());
        for (std::size_t i = 0; i < pool.size(); ++i) {
            cols[i] = dictionary_column(domain, selected.target_domain,
                                        activation, pool[i]);
            double norm = cols[i].norm();
            if (norm < 1e-14) continue;
            double score = std::abs(cols[i].dot(residual)) / norm;
            if (score > best_score) {
                best_score = score;
                best_idx = i;
            }
        }
        if (best_idx == pool.size()) break;
        selected.maps.push_back(pool[best_idx]);
        selected.columns.conservativeResize(Eigen::NoChange,
                                            selected.columns.cols() + 1);
        selected.columns.col(selected.columns.cols() - 1) = cols[best_idx];
        FitReport fit = fit_coefficients(selected, target, 2.0);
        coeffs = fit.coefficients;
        residual = selected.columns * coeffs - target;
        double l2 = fit.l2_error;
        if (!residuals.empty() &&
            l2 > residuals.back() - 1e-14 * (1.0 + residuals.back()))
            stalled = true;
        residuals.push_back(l2);
        best = residual.norm();
    }
    return GreedyReport{
        network_from_fit(selected, coeffs.size() ? coeffs : Eigen::VectorXcd(0)),
        std::move(residuals), stalled};
}

double lp_error(const Domain& domain, const std::vector<cplx>& f,
                const std::vector<cplx>& g, double p) {
    if (f.size() != g.size() || f.size() != domain.size())
        throw std::invalid_argument("lp_error requires tables over the same domain");
    if (p < 1.0) throw std::invalid_argument("Lp exponent must be >= 1");
    Eigen::VectorXcd r(static_cast<Eigen::Index>(f.size()));
    for (std::size_t i = 0; i < f.size(); ++i)
        r[static_cast<Eigen::Index>(i)] = f[i] - g[i];
    return weighted_lp(domain, r, p);
}

double sup_error(const std::vector<cplx>& f, const std::vector<cplx>& g) {
    if (f.size() != g.size())
        throw std::invalid_argument("sup_error requires tables of equal length");
    double m = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        m = std::max(m, std::abs(f[i] - g[i]));
    return m;
}

}  // namespace gn
