#include "groupnet/fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gn {

Character::Character(FiniteAbelianGroup g, Element coords)
    : group(std::move(g)), dual_coords(group.reduce(std::move(coords))) {}

cplx Character::eval(const Element& x) const {
    return character_eval(group, dual_coords, x);
}

cplx character_eval(const FiniteAbelianGroup& g, const Element& dual_coords,
                    const Element& x) {
    if (dual_coords.size() != g.num_factors() || x.size() != g.num_factors())
        throw std::invalid_argument("character/element dimension mismatch");
    double phase = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j)
        phase += static_cast<double>(dual_coords[j] % g.moduli()[j]) *
                 static_cast<double>(x[j] % g.moduli()[j]) /
                 static_cast<double>(g.moduli()[j]);
    return std::polar(1.0, 2.0 * std::numbers::pi * phase);
}

Table fourier_transform(const FiniteAbelianGroup& g, const Table& f) {
    if (f.size() != g.order())
        throw std::invalid_argument("function table size does not match group order");
    const double w = g.point_weight();
    Table out(g.order());
    for (std::uint64_t c = 0; c < g.order(); ++c) {
        Element dual = g.element_at(c);
        cplx acc = 0.0;
        for (std::uint64_t x = 0; x < g.order(); ++x)
            acc += f[x] * std::conj(character_eval(g, dual, g.element_at(x)));
        out[c] = acc * w;
    }
    return out;
}

Table inverse_fourier(const FiniteAbelianGroup& g, const Table& spectrum) {
    if (spectrum.size() != g.order())
        throw std::invalid_argument("spectrum size does not match group order");
    // Counting measure on the dual, scaled by 1 / (|G| w) for an exact
    // round trip in either Haar mode.
    const double scale =
        1.0 / (static_cast<double>(g.order()) * g.point_weight());
    Table out(g.order());
    for (std::uint64_t x = 0; x < g.order(); ++x) {
        Element ex = g.element_at(x);
        cplx acc = 0.0;
        for (std::uint64_t c = 0; c < g.order(); ++c)
            acc += spectrum[c] * character_eval(g, g.element_at(c), ex);
        out[x] = acc * scale;
    }
    return out;
}

Table convolve(const FiniteAbelianGroup& g, const Table& f, const Table& h) {
    if (f.size() != g.order() || h.size() != g.order())
        throw std::invalid_argument("table size does not match group order");
    const double w = g.point_weight();
    Table out(g.order());
    for (std::uint64_t x = 0; x < g.order(); ++x) {
        Element ex = g.element_at(x);
        cplx acc = 0.0;
        for (std::uint64_t y = 0; y < g.order(); ++y) {
            Element ey = g.element_at(y);
            acc += f[g.index_of(g.sub(ex, ey))] * h[y];
        }
        out[x] = acc * w;
    }
    return out;
}

namespace {
SignedMeasure pushforward_impl(const SignedMeasure& sigma,
                               const FiniteAbelianGroup& source,
                               const FiniteAbelianGroup& target,
                               const std::function<Element(const Element&)>& phi) {
    if (!sigma.group.same_presentation(source))
        throw std::invalid_argument("pushforward: measure does not live on the map source");
    std::vector<cplx> mass(target.order(), 0.0);
    for (std::uint64_t x = 0; x < sigma.mass.size(); ++x)
        mass[target.index_of(phi(sigma.group.element_at(x)))] += sigma.mass[x];
    return SignedMeasure(target, std::move(mass));
}
}  // namespace

SignedMeasure pushforward(const SignedMeasure& sigma, const Homomorphism& phi) {
    return pushforward_impl(sigma, phi.source(), phi.target(),
                            [&](const Element& x) { return phi.apply(x); });
}

SignedMeasure pushforward(const SignedMeasure& sigma, const AffineMap& phi) {
    return pushforward_impl(sigma, phi.hom.source(), phi.hom.target(),
                            [&](const Element& x) { return phi.apply(x); });
}

Table measure_fourier(const SignedMeasure& sigma) {
    const FiniteAbelianGroup& g = sigma.group;
    Table out(g.order());
    for (std::uint64_t c = 0; c < g.order(); ++c) {
        Element dual = g.element_at(c);
        cplx acc = 0.0;
        for (std::uint64_t x = 0; x < g.order(); ++x)
            acc += sigma.mass[x] * std::conj(character_eval(g, dual, g.element_at(x)));
        out[c] = acc;
    }
    return out;
}

bool verify_double_dual(const FiniteAbelianGroup& g, std::uint64_t budget,
                        double tol) {
    const std::uint64_t n = g.order();
    if (n > budget)
        throw resource_error("double-dual check exceeds the exhaustive budget");
    // chars[a][b] = chi_a(b); rows are dual elements, columns group elements.
    std::vector<Table> chars(n, Table(n));
    for (std::uint64_t a = 0; a < n; ++a) {
        Element ea = g.element_at(a);
        for (std::uint64_t b = 0; b < n; ++b)
            chars[a][b] = character_eval(g, ea, g.element_at(b));
    }
    // For each x, the evaluation functional c -> chi_c(x) must match exactly
    // one double-dual character d -> (c -> chi_hat_d(c) = chars[d][c]).
    std::vector<std::uint64_t> image(n);
    std::vector<char> hit(n, 0);
    for (std::uint64_t x = 0; x < n; ++x) {
        std::uint64_t match = n;
        for (std::uint64_t d = 0; d < n; ++d) {
            bool ok = true;
            for (std::uint64_t c = 0; c < n && ok; ++c)
                ok = std::abs(chars[c][x] - chars[d][c]) <= tol;
            if (ok) {
                if (match != n) return false;  // evaluation map not well defined
                match = d;
            }
        }
        if (match == n) return false;  // not surjective onto characters of the dual
        if (hit[match]) return false;  // not injective
        hit[match] = 1;
        image[x] = match;
    }
    // Homomorphism property of the evaluation map.
    for (std::uint64_t x = 0; x < n; ++x)
        for (std::uint64_t y = 0; y < n; ++y) {
            Element sum = g.add(g.element_at(x), g.element_at(y));
            Element im_sum = g.add(g.element_at(image[x]), g.element_at(image[y]));
            if (image[g.index_of(sum)] != g.index_of(im_sum)) return false;
        }
    return true;
}

}  // namespace gn
