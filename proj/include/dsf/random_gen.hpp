#ifndef DSF_RANDOM_GEN_HPP
#define DSF_RANDOM_GEN_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "dsf/degseq.hpp"

namespace dsf {

// Instance-generation parameters: length n, smallest term around p_l * n,
// largest term around p_h * n.
struct RandomSpec {
    int n = 0;
    double p_l = 0.0;
    double p_h = 0.0;
    int count = 0;
    std::uint64_t seed = 0;

    void validate() const; // throws std::invalid_argument
};

// One rejection-sampled graphical sequence: n draws from
// [max(2, round(p_l n)), min(n-1, round(p_h n))] with the two extremes
// pinned, parity fixed by decrementing a term that stays >= 2.
// Throws GenerationFailure after 10000 rejected samples.
DegreeSequence random_graphical_sequence(std::mt19937_64& rng, int n, double p_l, double p_h);

std::vector<DegreeSequence> generate_random_sequences(const RandomSpec& spec);

} // namespace dsf

#endif // DSF_RANDOM_GEN_HPP
