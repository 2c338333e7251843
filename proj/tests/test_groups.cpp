#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "groupnet/domain.hpp"
#include "groupnet/group.hpp"
#include "groupnet/hom.hpp"

using namespace gn;

TEST_CASE("make_group strips trivial factors and computes order") {
    CHECK(make_group({2, 4}).order() == 8);
    FiniteAbelianGroup g = make_group({1, 3});
    CHECK(g.moduli() == std::vector<Coord>{3});
    CHECK(g.order() == 3);
    CHECK(make_group({}).order() == 1);
    CHECK_THROWS_AS(make_group({0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(make_group({-3}), std::invalid_argument);
}

TEST_CASE("coordinatewise arithmetic") {
    FiniteAbelianGroup z4 = make_group({4});
    CHECK(z4.add({3}, {2}) == Element{1});
    FiniteAbelianGroup g = make_group({2, 3});
    CHECK(g.add({1, 2}, {1, 2}) == Element{0, 1});
    CHECK(g.neg({1, 2}) == Element{1, 1});
    CHECK(g.add({1, 2}, g.neg({1, 2})) == g.identity());
    CHECK_THROWS_AS(g.add({1}, {0, 0}), std::invalid_argument);
}

TEST_CASE("group laws hold exhaustively on small groups") {
    for (const auto& moduli :
         {std::vector<Coord>{6}, {2, 3}, {4, 4}, {2, 2, 2}}) {
        FiniteAbelianGroup g = make_group(moduli);
        for (std::uint64_t a = 0; a < g.order(); ++a)
            for (std::uint64_t b = 0; b < g.order(); ++b) {
                Element ea = g.element_at(a), eb = g.element_at(b);
                CHECK(g.add(ea, eb) == g.add(eb, ea));
                CHECK(g.add(ea, g.identity()) == ea);
                CHECK(g.add(ea, g.neg(ea)) == g.identity());
                for (std::uint64_t c = 0; c < g.order(); ++c) {
                    Element ec = g.element_at(c);
                    CHECK(g.add(g.add(ea, eb), ec) == g.add(ea, g.add(eb, ec)));
                }
            }
    }
}

TEST_CASE("haar integration in both modes") {
    FiniteAbelianGroup z6 = make_group({6}, HaarMode::counting);
    CHECK(haar_integrate(z6, [](const Element&) { return 1.0; }) ==
          doctest::Approx(6.0));
    CHECK(haar_integrate(z6.with_haar_mode(HaarMode::probability),
                         [](const Element&) { return 1.0; }) ==
          doctest::Approx(1.0));

    Domain torus = Domain::torus_grid(1, 8);
    double mass = 0.0;  // delta at the origin picks up a single point weight
    for (std::size_t i = 0; i < torus.size(); ++i)
        if (torus.point(i) == std::vector<Coord>{0}) mass += torus.point_weight();
    CHECK(mass == doctest::Approx(1.0 / 8.0));
}

TEST_CASE("haar invariance examples and exhaustive oracle") {
    FiniteAbelianGroup z3 = make_group({3});
    CHECK(check_haar_invariance(z3, {{1}, {2}}, {1}));
    FiniteAbelianGroup z22 = make_group({2, 2});
    for (std::uint64_t t = 0; t < z22.order(); ++t)
        CHECK(check_haar_invariance(z22, {z22.identity()}, z22.element_at(t)));

    // Exhaustive over all subsets and shifts for a few small groups.
    for (const auto& moduli : {std::vector<Coord>{5}, {2, 3}, {2, 2, 2}}) {
        FiniteAbelianGroup g = make_group(moduli);
        const std::uint64_t n = g.order();
        for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
            std::vector<Element> b_set;
            for (std::uint64_t i = 0; i < n; ++i)
                if (mask & (1ull << i)) b_set.push_back(g.element_at(i));
            for (std::uint64_t t = 0; t < n; ++t)
                CHECK(check_haar_invariance(g, b_set, g.element_at(t)));
        }
    }
}

TEST_CASE("Z6 and Z2xZ3 are isomorphic") {
    FiniteAbelianGroup a = make_group({6}), b = make_group({2, 3});
    // Exhaustive search over all bijections of the order-6 tables.
    std::vector<std::uint64_t> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    bool found = false;
    do {
        bool is_iso = true;
        for (std::uint64_t x = 0; x < 6 && is_iso; ++x)
            for (std::uint64_t y = 0; y < 6 && is_iso; ++y) {
                std::uint64_t lhs =
                    b.index_of(b.add(b.element_at(perm[x]), b.element_at(perm[y])));
                std::uint64_t rhs =
                    perm[a.index_of(a.add(a.element_at(x), a.element_at(y)))];
                is_iso = lhs == rhs;
            }
        found = found || is_iso;
    } while (!found && std::next_permutation(perm.begin(), perm.end()));
    CHECK(found);
    // Isomorphism-invariant counts agree across the two presentations.
    for (const auto& moduli : {std::vector<Coord>{2}, {3}, {4}, {6}, {2, 3}}) {
        FiniteAbelianGroup h = make_group(moduli);
        CHECK(hom_count(a, h) == hom_count(b, h));
    }
    CHECK(enumerate_automorphisms(a).size() == enumerate_automorphisms(b).size());
}

TEST_CASE("torus grid weights and lattice window order") {
    Domain torus = Domain::torus_grid(2, 5);
    double total = 0.0;
    for (std::size_t i = 0; i < torus.size(); ++i) total += torus.point_weight();
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));

    Domain window = Domain::lattice_window(2, 2);
    CHECK(window.size() == 25);
    // Strict total order compatible with addition when sums stay inside.
    for (std::size_t i = 0; i + 1 < window.size(); ++i)
        CHECK(lex_less(window.point(i), window.point(i + 1)));
    for (std::size_t i = 0; i < window.size(); ++i)
        for (std::size_t j = i + 1; j < window.size(); ++j)
            for (std::size_t k = 0; k < window.size(); ++k) {
                auto a = window.window_add(window.point(i), window.point(k));
                auto b = window.window_add(window.point(j), window.point(k));
                if (a && b) CHECK(lex_less(*a, *b));
            }
    CHECK(!window.window_add({2, 2}, {1, 0}).has_value());
}

TEST_CASE("signed measures") {
    FiniteAbelianGroup g = make_group({4});
    SignedMeasure mu(g, {cplx(2, 0), cplx(-1, 0), cplx(0, 0), cplx(0, 1)});
    CHECK(mu.total_variation() == doctest::Approx(4.0));
    CHECK(std::abs(mu.normalized().total_variation() - 1.0) < 1e-12);
    CHECK_THROWS_AS(SignedMeasure(g, {cplx(1, 0)}), std::invalid_argument);
}

TEST_CASE("moduli list enumeration") {
    auto lists = enumerate_moduli_lists(8);
    CHECK(std::count(lists.begin(), lists.end(), std::vector<Coord>{}) == 1);
    CHECK(std::count(lists.begin(), lists.end(), std::vector<Coord>{2, 4}) == 1);
    CHECK(std::count(lists.begin(), lists.end(), std::vector<Coord>{8}) == 1);
    for (const auto& moduli : lists) {
        std::uint64_t product = 1;
        for (Coord m : moduli) product *= m;
        CHECK(product <= 8);
        CHECK(std::is_sorted(moduli.begin(), moduli.end()));
    }
}
