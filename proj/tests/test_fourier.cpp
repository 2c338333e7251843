#include <doctest.h>

#include <cmath>
#include <random>

#include "groupnet/fourier.hpp"

using namespace gn;

namespace {
Table random_table(const FiniteAbelianGroup& g, Rng& rng) {
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    Table t(g.order());
    for (cplx& v : t) v = cplx(unif(rng), unif(rng));
    return t;
}

double max_abs_diff(const Table& a, const Table& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}
}  // namespace

TEST_CASE("character values") {
    FiniteAbelianGroup z4 = make_group({4});
    CHECK(std::abs(character_eval(z4, {1}, {1}) - cplx(0, 1)) < 1e-12);
    CHECK(std::abs(character_eval(z4, {0}, {3}) - cplx(1, 0)) < 1e-12);
    FiniteAbelianGroup g = make_group({2, 3});
    cplx expected = std::polar(1.0, 2.0 * M_PI * (1.0 / 2.0 + 2.0 / 3.0));
    CHECK(std::abs(character_eval(g, {1, 1}, {1, 2}) - expected) < 1e-12);
    CHECK_THROWS_AS(character_eval(g, {1}, {1, 2}), std::invalid_argument);
}

TEST_CASE("characters are multiplicative unit-modulus functions") {
    FiniteAbelianGroup g = make_group({3, 4});
    for (std::uint64_t c = 0; c < g.order(); ++c) {
        Character chi(g, g.element_at(c));
        for (std::uint64_t x = 0; x < g.order(); ++x) {
            Element ex = g.element_at(x);
            CHECK(std::abs(std::abs(chi.eval(ex)) - 1.0) < 1e-12);
            for (std::uint64_t y = 0; y < g.order(); ++y) {
                Element ey = g.element_at(y);
                CHECK(std::abs(chi.eval(g.add(ex, ey)) -
                               chi.eval(ex) * chi.eval(ey)) < 1e-12);
            }
        }
    }
}

TEST_CASE("fourier transform examples") {
    FiniteAbelianGroup z5 = make_group({5}, HaarMode::counting);
    Table delta(5, 0.0);
    delta[0] = 1.0;
    Table spectrum = fourier_transform(z5, delta);
    for (const cplx& v : spectrum) CHECK(std::abs(v - 1.0) < 1e-12);

    Table ones(5, 1.0);
    spectrum = fourier_transform(z5, ones);
    CHECK(std::abs(spectrum[0] - 5.0) < 1e-12);
    for (std::size_t c = 1; c < 5; ++c) CHECK(std::abs(spectrum[c]) < 1e-12);
}

TEST_CASE("round trip in both Haar modes") {
    Rng rng(17);
    for (HaarMode mode : {HaarMode::counting, HaarMode::probability}) {
        FiniteAbelianGroup g = make_group({12}, mode);
        Table f = random_table(g, rng);
        CHECK(max_abs_diff(inverse_fourier(g, fourier_transform(g, f)), f) <
              1e-12);
    }
}

TEST_CASE("convolution identities and theorem") {
    FiniteAbelianGroup z8 = make_group({8}, HaarMode::counting);
    Rng rng(23);
    Table f = random_table(z8, rng);
    Table delta(8, 0.0);
    delta[0] = 1.0;
    CHECK(max_abs_diff(convolve(z8, f, delta), f) < 1e-12);

    Table da(8, 0.0), db(8, 0.0), dab(8, 0.0);
    da[2] = 1.0;
    db[5] = 1.0;
    dab[(2 + 5) % 8] = 1.0;
    CHECK(max_abs_diff(convolve(z8, da, db), dab) < 1e-12);

    for (int rep = 0; rep < 20; ++rep) {
        Table a = random_table(z8, rng), b = random_table(z8, rng);
        Table lhs = fourier_transform(z8, convolve(z8, a, b));
        Table fa = fourier_transform(z8, a), fb = fourier_transform(z8, b);
        Table rhs(8);
        for (std::size_t i = 0; i < 8; ++i) rhs[i] = fa[i] * fb[i];
        CHECK(max_abs_diff(lhs, rhs) < 1e-10);
    }
}

TEST_CASE("plancherel with probability Haar") {
    Rng rng(31);
    for (const auto& moduli : {std::vector<Coord>{7}, {2, 6}, {3, 3}}) {
        FiniteAbelianGroup g = make_group(moduli);
        Table f = random_table(g, rng);
        double space_side = 0.0;
        for (const cplx& v : f) space_side += std::norm(v) * g.point_weight();
        double dual_side = 0.0;
        for (const cplx& v : fourier_transform(g, f)) dual_side += std::norm(v);
        CHECK(std::abs(space_side - dual_side) < 1e-10 * (1.0 + space_side));
    }
}

TEST_CASE("pushforward") {
    FiniteAbelianGroup z4 = make_group({4});
    Homomorphism mult2(z4, z4, {{2}});
    SignedMeasure d1(z4, {0.0, 1.0, 0.0, 0.0});
    SignedMeasure pushed = pushforward(d1, mult2);
    CHECK(pushed.mass == std::vector<cplx>{0.0, 0.0, 1.0, 0.0});

    Rng rng(7);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    std::vector<cplx> mass(4);
    for (cplx& v : mass) v = unif(rng);
    SignedMeasure sigma(z4, mass);
    SignedMeasure same = pushforward(sigma, Homomorphism::identity(z4));
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(std::abs(same.mass[i] - sigma.mass[i]) < 1e-15);

    SignedMeasure uniform(z4, {1.0, 1.0, 1.0, 1.0});
    SignedMeasure folded = pushforward(uniform, mult2);
    CHECK(folded.mass == std::vector<cplx>{2.0, 0.0, 2.0, 0.0});
    CHECK(std::abs(folded.total_mass() - uniform.total_mass()) < 1e-12);
    CHECK(folded.total_variation() <= uniform.total_variation() + 1e-12);
}

TEST_CASE("pushforward spectrum composes with the dual map") {
    Rng rng(13);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (const auto& moduli : {std::vector<Coord>{8}, {2, 4}, {3, 3}, {12}}) {
        FiniteAbelianGroup g = make_group(moduli);
        std::vector<cplx> mass(g.order());
        for (cplx& v : mass) v = cplx(unif(rng), unif(rng));
        SignedMeasure sigma(g, mass);
        for (const Homomorphism& phi : enumerate_automorphisms(g)) {
            Table pushed_hat = measure_fourier(pushforward(sigma, phi));
            Table sigma_hat = measure_fourier(sigma);
            Homomorphism dual = phi.dual_map();
            for (std::uint64_t c = 0; c < g.order(); ++c) {
                // (sigma_phi)^(c) = sigma^(dual(c))
                Element mapped = dual.apply(g.element_at(c));
                CHECK(std::abs(pushed_hat[c] - sigma_hat[g.index_of(mapped)]) <
                      1e-9);
            }
        }
    }
}

TEST_CASE("pushforward change of variables and Fubini exchange") {
    // The integral chain: sum_x psi(phi(x)) sigma(x) = sum_t psi(t) sigma_phi(t),
    // and the double sum over (x, y) is order-independent.
    Rng rng(41);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (const auto& moduli : {std::vector<Coord>{6}, {2, 2, 2}, {16}}) {
        FiniteAbelianGroup g = make_group(moduli);
        std::vector<cplx> mass(g.order());
        Table psi(g.order()), w(g.order());
        for (cplx& v : mass) v = unif(rng);
        for (cplx& v : psi) v = unif(rng);
        for (cplx& v : w) v = unif(rng);
        SignedMeasure sigma(g, mass);
        Homomorphism phi(g, g, enumerate_automorphisms(g).back().matrix());
        SignedMeasure pushed = pushforward(sigma, phi);

        cplx direct = 0.0, via_pushforward = 0.0;
        for (std::uint64_t x = 0; x < g.order(); ++x) {
            direct += psi[g.index_of(phi.apply(g.element_at(x)))] * sigma.mass[x];
            via_pushforward += psi[x] * pushed.mass[x];
        }
        CHECK(std::abs(direct - via_pushforward) < 1e-12);

        cplx xy = 0.0, yx = 0.0;
        for (std::uint64_t x = 0; x < g.order(); ++x)
            for (std::uint64_t y = 0; y < g.order(); ++y) {
                Element sum = g.add(g.element_at(x), g.element_at(y));
                cplx term = psi[g.index_of(phi.apply(sum))] * w[y] * pushed.mass[x];
                xy += term;
            }
        for (std::uint64_t y = 0; y < g.order(); ++y)
            for (std::uint64_t x = 0; x < g.order(); ++x) {
                Element sum = g.add(g.element_at(x), g.element_at(y));
                yx += psi[g.index_of(phi.apply(sum))] * w[y] * pushed.mass[x];
            }
        CHECK(std::abs(xy - yx) < 1e-12);
    }
}

TEST_CASE("double dual") {
    CHECK(verify_double_dual(make_group({6})));
    CHECK(verify_double_dual(make_group({})));
    CHECK(verify_double_dual(make_group({2, 3, 4})));
    CHECK_THROWS_AS(verify_double_dual(make_group({64}), 32), resource_error);
}
