#ifndef ELPS_GENERATORS_HPP
#define ELPS_GENERATORS_HPP

#include <cstdint>
#include <string>

namespace elps {

/// n disjoint copies of the scholarship-eligibility block. One student emits
/// the plain block; from two on, atoms carry per-student suffixes
/// (_mike, _mark, _s3, _s4, ...). Deterministic for fixed (n, seed).
std::string generate_scholarship(std::size_t n, std::uint64_t seed = 0);

struct RandomProgramParams {
    std::size_t n_atoms = 4;
    std::size_t n_rules = 4;
    std::size_t max_head = 2;
    std::size_t max_body = 3;
    double p_epistemic = 0.3;
    double p_neg = 0.3;
    std::uint64_t seed = 0;
};

/// Deterministic random program sampler over atoms a0..a{n-1}: per rule a
/// head of distinct atoms (size ≤ max_head) and body literals with
/// independent epistemic/negation flags. Emits valid program text, stable
/// across runs for a fixed seed.
std::string generate_random(const RandomProgramParams& params);

}  // namespace elps

#endif
