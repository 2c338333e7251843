#include <doctest.h>

#include <cmath>
#include <set>

#include "groupnet/hom.hpp"

using namespace gn;

namespace {

// Independent oracle: image cardinality by applying the map to every element.
std::uint64_t image_order_bruteforce(const Homomorphism& f) {
    std::set<Element> image;
    for (std::uint64_t x = 0; x < f.source().order(); ++x)
        image.insert(f.apply(f.source().element_at(x)));
    return image.size();
}

bool additive_everywhere(const Homomorphism& f) {
    const FiniteAbelianGroup& g = f.source();
    for (std::uint64_t x = 0; x < g.order(); ++x)
        for (std::uint64_t y = 0; y < g.order(); ++y) {
            Element ex = g.element_at(x), ey = g.element_at(y);
            if (f.apply(g.add(ex, ey)) !=
                f.target().add(f.apply(ex), f.apply(ey)))
                return false;
        }
    return true;
}

}  // namespace

TEST_CASE("validate_hom matches the additivity oracle") {
    FiniteAbelianGroup z4 = make_group({4}), z6 = make_group({6});
    CHECK(Homomorphism::valid_matrix({{3}}, z4, z6));
    CHECK(additive_everywhere(Homomorphism(z4, z6, {{3}})));
    CHECK(!Homomorphism::valid_matrix({{1}}, z4, z6));
    CHECK_THROWS_AS(Homomorphism(z4, z6, {{1}}), std::invalid_argument);
    CHECK(Homomorphism::valid_matrix({{0}}, z4, z6));
    CHECK(!Homomorphism::valid_matrix({{0}, {0}}, z4, z6));
}

TEST_CASE("apply") {
    FiniteAbelianGroup z8 = make_group({8});
    Homomorphism mult3(z8, z8, {{3}});
    CHECK(mult3.apply({5}) == Element{7});
    FiniteAbelianGroup z4 = make_group({4}), z6 = make_group({6});
    CHECK(Homomorphism(z4, z6, {{3}}).apply({2}) == Element{0});
    FiniteAbelianGroup z5 = make_group({5});
    AffineMap affine(Homomorphism(z5, z5, {{2}}), {1});
    CHECK(affine.apply({3}) == Element{2});
    CHECK_THROWS_AS(mult3.apply({0, 0}), std::invalid_argument);
}

TEST_CASE("compose") {
    FiniteAbelianGroup z6 = make_group({6});
    Homomorphism m2(z6, z6, {{2}}), m3(z6, z6, {{3}});
    CHECK(m2.compose(m3).matrix() == IntMatrix{{0}});
    Homomorphism id = Homomorphism::identity(z6);
    CHECK(m2.compose(id) == m2);
    CHECK(id.compose(m2) == m2);

    // Pointwise agreement with apply-after-apply on Z_4 x Z_2.
    FiniteAbelianGroup g = make_group({4, 2});
    Rng rng(11);
    FamilySpec endo{FamilyKind::endo};
    Domain domain = Domain::finite(g);
    for (int rep = 0; rep < 10; ++rep) {
        Homomorphism f = std::get<Homomorphism>(sample_map(domain, endo, rng));
        Homomorphism h = std::get<Homomorphism>(sample_map(domain, endo, rng));
        Homomorphism fh = f.compose(h);
        for (std::uint64_t x = 0; x < g.order(); ++x) {
            Element ex = g.element_at(x);
            CHECK(fh.apply(ex) == f.apply(h.apply(ex)));
        }
    }
}

TEST_CASE("is_automorphism agrees with the brute-force image oracle") {
    FiniteAbelianGroup z8 = make_group({8});
    CHECK(Homomorphism(z8, z8, {{3}}).is_automorphism());
    CHECK(!Homomorphism(z8, z8, {{2}}).is_automorphism());
    CHECK(Homomorphism::identity(z8).is_automorphism());
    for (const auto& moduli :
         {std::vector<Coord>{12}, {2, 2}, {2, 4}, {3, 3}, {2, 2, 3}}) {
        FiniteAbelianGroup g = make_group(moduli);
        visit_homs(g, g, [&](const Homomorphism& f) {
            std::uint64_t image = image_order_bruteforce(f);
            CHECK(f.image_order() == image);
            CHECK(f.is_automorphism() == (image == g.order()));
            return true;
        });
    }
}

TEST_CASE("enumeration counts") {
    FiniteAbelianGroup z4 = make_group({4}), z6 = make_group({6});
    CHECK(enumerate_homs(z4, z6).size() == 2);
    CHECK(hom_count(z4, z6) == 2);
    CHECK(enumerate_automorphisms(make_group({8})).size() == 4);
    CHECK(enumerate_automorphisms(make_group({2, 2})).size() == 6);
    CHECK_THROWS_AS(enumerate_homs(make_group({64}), make_group({64}), 10),
                    resource_error);
}

TEST_CASE("enumerated and sampled maps are additive on small groups") {
    Rng rng(5);
    for (const auto& moduli : {std::vector<Coord>{9}, {2, 8}, {4, 6}}) {
        FiniteAbelianGroup g = make_group(moduli);
        for (const Homomorphism& f : enumerate_homs(g, g, 1u << 12))
            CHECK(Homomorphism::valid_matrix(f.matrix(), g, g));
        Domain domain = Domain::finite(g);
        for (FamilyKind kind : {FamilyKind::endo, FamilyKind::aut}) {
            FamilySpec family{kind};
            Homomorphism f = [&] {
                AnyMap m = sample_map(domain, family, rng);
                return std::get<Homomorphism>(m);
            }();
            CHECK(additive_everywhere(f));
        }
    }
}

TEST_CASE("sampling is uniform") {
    Rng rng(99);
    FiniteAbelianGroup z2 = make_group({2}), z4 = make_group({4});
    SUBCASE("Hom(Z2, Z4)") {
        FamilySpec family{FamilyKind::hom};
        family.target = z4;
        Domain domain = Domain::finite(z2);
        int zero_count = 0;
        const int n = 10000;
        for (int i = 0; i < n; ++i) {
            auto f = std::get<Homomorphism>(sample_map(domain, family, rng));
            if (f.matrix()[0][0] == 0) ++zero_count;
        }
        double sigma = std::sqrt(0.25 * n);
        CHECK(std::abs(zero_count - n / 2.0) < 3 * sigma);
    }
    SUBCASE("Translations(Z5)") {
        FiniteAbelianGroup z5 = make_group({5});
        FamilySpec family{FamilyKind::translations};
        Domain domain = Domain::finite(z5);
        std::vector<int> counts(5, 0);
        const int n = 10000;
        for (int i = 0; i < n; ++i) {
            auto m = std::get<AffineMap>(sample_map(domain, family, rng));
            ++counts[m.shift[0]];
        }
        double chi2 = 0.0;
        for (int c : counts) chi2 += (c - n / 5.0) * (c - n / 5.0) / (n / 5.0);
        CHECK(chi2 < 25.0);  // df = 4
    }
    SUBCASE("Aut of the trivial group") {
        FamilySpec family{FamilyKind::aut};
        Domain domain = Domain::finite(make_group({}));
        auto f = std::get<Homomorphism>(sample_map(domain, family, rng));
        CHECK(f.source().order() == 1);
        CHECK(f.is_automorphism());
    }
}

TEST_CASE("Aut is a group under composition") {
    for (const auto& moduli : {std::vector<Coord>{8}, {2, 4}, {3, 3}}) {
        FiniteAbelianGroup g = make_group(moduli);
        std::vector<Homomorphism> auts = enumerate_automorphisms(g);
        Homomorphism id = Homomorphism::identity(g);
        for (const Homomorphism& f : auts) {
            bool has_inverse = false;
            for (const Homomorphism& h : auts) {
                Homomorphism fh = f.compose(h);
                CHECK(std::count(auts.begin(), auts.end(), fh) == 1);  // closed
                has_inverse = has_inverse || fh == id;
            }
            CHECK(has_inverse);
        }
    }
}

TEST_CASE("affine maps with zero shift match their homomorphism") {
    FiniteAbelianGroup g = make_group({3, 4});
    Rng rng(3);
    Domain domain = Domain::finite(g);
    for (int rep = 0; rep < 5; ++rep) {
        auto f = std::get<Homomorphism>(
            sample_map(domain, FamilySpec{FamilyKind::endo}, rng));
        AffineMap affine(f, g.identity());
        for (std::uint64_t x = 0; x < g.order(); ++x)
            CHECK(affine.apply(g.element_at(x)) == f.apply(g.element_at(x)));
    }
}

TEST_CASE("window affine maps") {
    WindowAffineMap w{{{2}}, {-1}};
    CHECK(w.apply({3}) == std::vector<Coord>{5});
    Domain window = Domain::lattice_window(1, 2);
    FamilySpec family{FamilyKind::affine_window};
    std::vector<AnyMap> maps = enumerate_family(window, family);
    CHECK(maps.size() == 3 * 11);  // slopes {-1,0,1} x shifts [-5,5]
    CHECK_THROWS_AS(enumerate_family(window, FamilySpec{FamilyKind::aut}),
                    std::invalid_argument);
}
