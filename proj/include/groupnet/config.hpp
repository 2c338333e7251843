#pragma once

#include <string>
#include <vector>

#include "groupnet/specs.hpp"

namespace gn {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kOutDirEnvVar = "GROUPNET_OUT";

/// One CLI invocation, canonicalized. Round-trips through JSON; unknown
/// keys are rejected at parse time.
struct ExperimentConfig {
    std::string command;  // density | approx | fourier-check | enumerate | counterexample
    std::vector<std::string> groups;
    std::vector<std::string> families;
    std::vector<std::string> activations;
    int n_terms = 64;
    int max_order = 8;
    int trials = 20;
    double p = 2.0;
    std::uint64_t seed = 0;
    double tol = 1e-9;
    std::string out_dir;

    json to_json() const;
    static ExperimentConfig from_json(const json& j);
    /// FNV-1a hash of the canonical JSON form, hex encoded.
    std::string hash() const;
};

/// Executes the experiment and writes artifact files into out_dir.
/// Returns 0 on success, 1 on property failure, 2 on usage errors.
int run(const ExperimentConfig& config);

}  // namespace gn
