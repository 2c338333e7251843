#include <doctest.h>

#include "groupnet/config.hpp"
#include "groupnet/specs.hpp"

using namespace gn;

TEST_CASE("domain spec parsing") {
    Domain d = parse_domain("Z4xZ6");
    CHECK(d.is_group());
    CHECK(d.group().moduli() == std::vector<Coord>{4, 6});
    CHECK(d.spec_string() == "Z4xZ6");

    Domain t = parse_domain("T1@64");
    CHECK(t.kind() == DomainKind::torus_grid);
    CHECK(t.size() == 64);
    CHECK(t.spec_string() == "T1@64");

    Domain w = parse_domain("W2@5");
    CHECK(w.kind() == DomainKind::lattice_window);
    CHECK(w.size() == 11 * 11);
    CHECK(w.spec_string() == "W2@5");

    CHECK(parse_domain("Z1").group().order() == 1);
    CHECK_THROWS_AS(parse_domain(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_domain("Z0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_domain("Q8"), std::invalid_argument);
    CHECK_THROWS_AS(parse_domain("T1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_domain("Z4x"), std::invalid_argument);
}

TEST_CASE("family spec parsing") {
    CHECK(parse_family("aut").kind == FamilyKind::aut);
    CHECK(parse_family("end").kind == FamilyKind::endo);
    CHECK(parse_family("affine-end").kind == FamilyKind::affine_end);
    CHECK(parse_family("affine-aut").kind == FamilyKind::affine_aut);
    CHECK(parse_family("translations").kind == FamilyKind::translations);

    FamilySpec hom = parse_family("hom:Z2xZ2");
    CHECK(hom.kind == FamilyKind::hom);
    REQUIRE(hom.target.has_value());
    CHECK(hom.target->moduli() == std::vector<Coord>{2, 2});

    FamilySpec torus = parse_family("torus-linear:K=8");
    CHECK(torus.kind == FamilyKind::torus_linear);
    CHECK(torus.k_max == 8);
    CHECK(parse_family("affine-torus:K=3").k_max == 3);
    CHECK(parse_family("affine-window:K=2").k_max == 2);
    CHECK(parse_family("affine-window").k_max == 1);

    CHECK_THROWS_AS(parse_family("nope"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("hom:"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("torus-linear:K=0"), std::invalid_argument);

    // Spec strings parse back to themselves.
    for (const char* s : {"aut", "end", "affine-end", "translations",
                          "hom:Z2xZ2", "torus-linear:K=8", "affine-window:K=2"})
        CHECK(parse_family(parse_family(s).spec_string()).spec_string() == s);
}

TEST_CASE("map serialization round trip") {
    FiniteAbelianGroup z4 = make_group({4}), z6 = make_group({6});
    AnyMap hom = Homomorphism(z4, z6, {{3}});
    CHECK(map_from_json(map_to_json(hom)) == hom);

    AnyMap affine = AffineMap(Homomorphism::identity(z4), {2});
    CHECK(map_from_json(map_to_json(affine)) == affine);

    AnyMap window = WindowAffineMap{{{2}}, {-3}};
    CHECK(map_from_json(map_to_json(window)) == window);

    CHECK_THROWS_AS(map_from_json(json{{"type", "bogus"}}), std::invalid_argument);
}

TEST_CASE("table serialization") {
    std::vector<cplx> t{cplx(1.5), cplx(0, -2), cplx(3, 4)};
    CHECK(table_from_json(table_to_json(t)) == t);
    // Real scalars are accepted on input.
    CHECK(table_from_json(json::array({1.0, 2.0})) ==
          std::vector<cplx>{cplx(1.0), cplx(2.0)});
}

TEST_CASE("network serialization") {
    Rng rng(2);
    Domain domain = Domain::finite(make_group({5}));
    Dictionary dict = build_dictionary(
        domain, FamilySpec{FamilyKind::translations}, make_delta0(), 5, rng);
    Eigen::VectorXcd coeffs = Eigen::VectorXcd::Ones(5);
    GroupNetwork net = network_from_fit(dict, coeffs);
    json j = network_to_json(net);
    CHECK(j["domain"] == "Z5");
    CHECK(j["terms"].size() == 5);
    CHECK(j["activation"]["name"] == "delta0");
}

TEST_CASE("config round trip and hashing") {
    ExperimentConfig cfg;
    cfg.command = "density";
    cfg.groups = {"Z4", "Z2xZ3"};
    cfg.families = {"aut"};
    cfg.activations = {"logistic"};
    cfg.n_terms = 32;
    cfg.seed = 7;

    ExperimentConfig back = ExperimentConfig::from_json(cfg.to_json());
    CHECK(back.to_json() == cfg.to_json());
    CHECK(back.hash() == cfg.hash());

    ExperimentConfig other = cfg;
    other.seed = 8;
    CHECK(other.hash() != cfg.hash());

    json j = cfg.to_json();
    j["mystery"] = 1;
    CHECK_THROWS_AS(ExperimentConfig::from_json(j), std::invalid_argument);
}
