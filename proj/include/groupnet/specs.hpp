#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "groupnet/activation.hpp"
#include "groupnet/domain.hpp"
#include "groupnet/hom.hpp"
#include "groupnet/network.hpp"

namespace gn {

using json = nlohmann::ordered_json;

/// Domain spec grammar: "Z4xZ6" (finite product of cyclic groups),
/// "T1@64" (torus grid, dims@resolution), "W2@5" (lattice window,
/// dims@radius).
Domain parse_domain(const std::string& spec);

/// Family spec grammar: "aut", "end", "affine-end", "affine-aut",
/// "translations", "hom:Z2xZ2", "torus-linear:K=8", "affine-torus:K=8",
/// "affine-window:K=1".
FamilySpec parse_family(const std::string& spec);

json map_to_json(const AnyMap& map);
AnyMap map_from_json(const json& j);

json network_to_json(const GroupNetwork& net);
json activation_to_json(const Activation& act);

json table_to_json(const std::vector<cplx>& table);
std::vector<cplx> table_from_json(const json& j);

}  // namespace gn
