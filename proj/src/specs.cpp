#include "groupnet/specs.hpp"

#include <regex>
#include <stdexcept>

namespace gn {

Domain parse_domain(const std::string& spec) {
    static const std::regex finite_re(R"(Z(\d+)(xZ(\d+))*)");
    static const std::regex sampled_re(R"(([TW])(\d+)@(\d+))");
    std::smatch m;
    if (std::regex_match(spec, m, sampled_re)) {
        int dims = std::stoi(m[2]);
        int param = std::stoi(m[3]);
        return m[1] == "T" ? Domain::torus_grid(dims, param)
                           : Domain::lattice_window(dims, param);
    }
    if (std::regex_match(spec, finite_re)) {
        std::vector<Coord> moduli;
        static const std::regex factor_re(R"(Z(\d+))");
        for (auto it = std::sregex_iterator(spec.begin(), spec.end(), factor_re);
             it != std::sregex_iterator(); ++it)
            moduli.push_back(std::stoll((*it)[1]));
        return Domain::finite(FiniteAbelianGroup(moduli));
    }
    throw std::invalid_argument("unrecognized group spec: " + spec);
}

FamilySpec parse_family(const std::string& spec) {
    FamilySpec f;
    auto with_k = [&spec](const std::string& prefix) -> std::optional<int> {
        if (spec.rfind(prefix + ":K=", 0) != 0) return std::nullopt;
        int k = std::stoi(spec.substr(prefix.size() + 3));
        if (k < 1) throw std::invalid_argument("family K bound must be >= 1");
        return k;
    };
    if (spec == "aut") f.kind = FamilyKind::aut;
    else if (spec == "end") f.kind = FamilyKind::endo;
    else if (spec == "affine-end") f.kind = FamilyKind::affine_end;
    else if (spec == "affine-aut") f.kind = FamilyKind::affine_aut;
    else if (spec == "translations") f.kind = FamilyKind::translations;
    else if (spec.rfind("hom:", 0) == 0) {
        f.kind = FamilyKind::hom;
        Domain target = parse_domain(spec.substr(4));
        if (target.kind() != DomainKind::finite)
            throw std::invalid_argument("hom family target must be a finite group");
        f.target = target.group();
    } else if (auto k = with_k("torus-linear")) {
        f.kind = FamilyKind::torus_linear;
        f.k_max = *k;
    } else if (auto k = with_k("affine-torus")) {
        f.kind = FamilyKind::affine_torus;
        f.k_max = *k;
    } else if (auto k = with_k("affine-window")) {
        f.kind = FamilyKind::affine_window;
        f.k_max = *k;
    } else if (spec == "affine-window") {
        f.kind = FamilyKind::affine_window;
    } else {
        throw std::invalid_argument("unrecognized family spec: " + spec);
    }
    return f;
}

namespace {
json cplx_to_json(const cplx& v) {
    if (v.imag() == 0.0) return v.real();
    return json::array({v.real(), v.imag()});
}

cplx cplx_from_json(const json& j) {
    if (j.is_array()) return {j.at(0).get<double>(), j.at(1).get<double>()};
    return {j.get<double>(), 0.0};
}
}  // namespace

json table_to_json(const std::vector<cplx>& table) {
    json arr = json::array();
    for (const cplx& v : table) arr.push_back(cplx_to_json(v));
    return arr;
}

std::vector<cplx> table_from_json(const json& j) {
    std::vector<cplx> out;
    for (const auto& v : j) out.push_back(cplx_from_json(v));
    return out;
}

json map_to_json(const AnyMap& map) {
    json j;
    if (const auto* hom = std::get_if<Homomorphism>(&map)) {
        j["source"] = hom->source().moduli();
        j["target"] = hom->target().moduli();
        j["matrix"] = hom->matrix();
    } else if (const auto* aff = std::get_if<AffineMap>(&map)) {
        j["source"] = aff->hom.source().moduli();
        j["target"] = aff->hom.target().moduli();
        j["matrix"] = aff->hom.matrix();
        j["shift"] = aff->shift;
    } else {
        const auto& w = std::get<WindowAffineMap>(map);
        j["window"] = true;
        j["matrix"] = w.matrix;
        j["shift"] = w.shift;
    }
    return j;
}

AnyMap map_from_json(const json& j) {
    if (!j.is_object() || !j.contains("matrix"))
        throw std::invalid_argument("map JSON needs a matrix field");
    IntMatrix matrix = j.at("matrix").get<IntMatrix>();
    if (j.value("window", false)) {
        return WindowAffineMap{matrix, j.at("shift").get<std::vector<Coord>>()};
    }
    FiniteAbelianGroup source(j.at("source").get<std::vector<Coord>>());
    FiniteAbelianGroup target(j.at("target").get<std::vector<Coord>>());
    Homomorphism hom(source, target, matrix);
    if (j.contains("shift"))
        return AffineMap(hom, j.at("shift").get<Element>());
    return hom;
}

json activation_to_json(const Activation& act) {
    json j;
    j["name"] = act.name;
    if (!act.table.empty()) j["table"] = table_to_json(act.table);
    return j;
}

json network_to_json(const GroupNetwork& net) {
    json j;
    j["domain"] = net.domain.spec_string();
    j["activation"] = activation_to_json(net.activation);
    json terms = json::array();
    for (const NetworkTerm& t : net.terms) {
        json term;
        term["alpha"] = cplx_to_json(t.alpha);
        term["map"] = map_to_json(t.map);
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

}  // namespace gn
