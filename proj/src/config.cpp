#include "groupnet/config.hpp"

#include <set>
#include <sstream>

#include "groupnet/util.hpp"

namespace gn {

json ExperimentConfig::to_json() const {
    json j;
    j["command"] = command;
    j["groups"] = groups;
    j["families"] = families;
    j["activations"] = activations;
    j["n_terms"] = n_terms;
    j["max_order"] = max_order;
    j["trials"] = trials;
    j["p"] = p;
    j["seed"] = seed;
    j["tol"] = tol;
    j["out_dir"] = out_dir;
    return j;
}

ExperimentConfig ExperimentConfig::from_json(const json& j) {
    static const std::set<std::string> known = {
        "command", "groups",   "families", "activations", "n_terms", "max_order",
        "trials",  "p",        "seed",     "tol",         "out_dir"};
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!known.count(it.key()))
            throw std::invalid_argument("unknown config key: " + it.key());
    ExperimentConfig c;
    c.command = j.at("command").get<std::string>();
    if (j.contains("groups")) c.groups = j["groups"].get<std::vector<std::string>>();
    if (j.contains("families")) c.families = j["families"].get<std::vector<std::string>>();
    if (j.contains("activations"))
        c.activations = j["activations"].get<std::vector<std::string>>();
    if (j.contains("n_terms")) c.n_terms = j["n_terms"].get<int>();
    if (j.contains("max_order")) c.max_order = j["max_order"].get<int>();
    if (j.contains("trials")) c.trials = j["trials"].get<int>();
    if (j.contains("p")) c.p = j["p"].get<double>();
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("tol")) c.tol = j["tol"].get<double>();
    if (j.contains("out_dir")) c.out_dir = j["out_dir"].get<std::string>();
    return c;
}

std::string ExperimentConfig::hash() const {
    // The output location is not part of the experiment identity, so reruns
    // into different directories hash identically.
    json j = to_json();
    j.erase("out_dir");
    std::ostringstream os;
    os << std::hex << fnv1a64(j.dump());
    return os.str();
}

}  // namespace gn
