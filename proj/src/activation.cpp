#include "groupnet/activation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gn {

double embed_scalar(const Domain& domain, const std::vector<Coord>& p) {
    double s = 0.0;
    switch (domain.kind()) {
        case DomainKind::finite:
            for (std::size_t j = 0; j < p.size(); ++j)
                s += static_cast<double>(p[j]) /
                     static_cast<double>(domain.group().moduli()[j]);
            break;
        case DomainKind::torus_grid:
            for (Coord c : p)
                s += 2.0 * std::numbers::pi * static_cast<double>(c) /
                     static_cast<double>(domain.resolution());
            break;
        case DomainKind::lattice_window:
            for (Coord c : p) s += static_cast<double>(c);
            break;
    }
    return s;
}

cplx Activation::eval(const Domain& domain, const std::vector<Coord>& p) const {
    if (!table.empty()) {
        if (domain.is_group()) {
            const FiniteAbelianGroup& g = domain.group();
            return table[g.index_of(g.reduce(p))];
        }
        // Window tables are total on the window only; out-of-window lookups
        // throw from index_of_point.
        return table[domain.index_of_point(p)];
    }
    return rule(domain, p);
}

void Activation::check_applicable(const Domain& domain) const {
    if (requires_order && !domain.ordered())
        throw std::invalid_argument("activation '" + name +
                                    "' requires an ordered (window) domain");
    if (!table.empty() && domain.size() != table.size())
        throw std::invalid_argument("activation table size does not match domain");
}

Activation make_logistic() {
    Activation a;
    a.name = "logistic";
    a.nonnegative = true;
    a.rule = [](const Domain& d, const std::vector<Coord>& p) -> cplx {
        return 1.0 / (1.0 + std::exp(-embed_scalar(d, p)));
    };
    return a;
}

Activation make_tanh() {
    Activation a;
    a.name = "tanh";
    a.rule = [](const Domain& d, const std::vector<Coord>& p) -> cplx {
        return std::tanh(embed_scalar(d, p));
    };
    return a;
}

Activation make_cos_character() {
    Activation a;
    a.name = "cos";
    a.rule = [](const Domain& d, const std::vector<Coord>& p) -> cplx {
        double angle = embed_scalar(d, p);
        if (d.kind() == DomainKind::finite) angle *= 2.0 * std::numbers::pi;
        return std::cos(angle);
    };
    return a;
}

Activation make_delta0() {
    Activation a;
    a.name = "delta0";
    a.nonnegative = true;
    a.rule = [](const Domain& d, const std::vector<Coord>& p) -> cplx {
        std::vector<Coord> q = p;
        if (d.is_group()) q = d.group().reduce(std::move(q));
        for (Coord c : q)
            if (c != 0) return 0.0;
        return 1.0;
    };
    return a;
}

namespace {
Activation make_relu_impl(std::string name, double neg_slope) {
    Activation a;
    a.name = std::move(name);
    a.requires_order = true;
    a.bounded = false;  // bounded on any fixed window, unbounded on Z^d
    a.nonnegative = neg_slope >= 0.0;
    a.rule = [neg_slope](const Domain& d, const std::vector<Coord>& p) -> cplx {
        const std::vector<Coord> zero(p.size(), 0);
        if (lex_less(zero, p)) return embed_scalar(d, p);
        return neg_slope * embed_scalar(d, p);
    };
    return a;
}
}  // namespace

Activation make_relu() { return make_relu_impl("relu", 0.0); }

Activation make_leaky_relu(double slope) {
    return make_relu_impl("leaky-relu", slope);
}

Activation make_table_activation(std::string name, std::vector<cplx> values) {
    Activation a;
    a.name = std::move(name);
    a.table = std::move(values);
    bool constant = true;
    for (const cplx& v : a.table)
        if (std::abs(v - a.table.front()) > 0.0) constant = false;
    a.nonconstant = !constant;
    return a;
}

Activation make_random_table(const Domain& domain, Rng& rng) {
    if (!domain.is_group())
        throw std::invalid_argument("random table activations require a group domain");
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<cplx> values(domain.size());
    do {
        for (cplx& v : values) v = unif(rng);
    } while (domain.size() > 1 &&
             [&] {
                 for (const cplx& v : values)
                     if (std::abs(v - values.front()) > 1e-3) return false;
                 return true;
             }());
    return make_table_activation("random", std::move(values));
}

Activation make_activation(const std::string& spec, const Domain& domain,
                           std::uint64_t seed) {
    if (spec == "logistic") return make_logistic();
    if (spec == "tanh") return make_tanh();
    if (spec == "cos") return make_cos_character();
    if (spec == "delta0") return make_delta0();
    if (spec == "relu") return make_relu();
    if (spec == "leaky-relu") return make_leaky_relu();
    if (spec == "random") {
        Rng rng(seed);
        return make_random_table(domain, rng);
    }
    throw std::invalid_argument("unknown activation spec: " + spec);
}

}  // namespace gn
