#include "dsf/random_gen.hpp"

#include <algorithm>
#include <cmath>

#include "dsf/errors.hpp"

namespace dsf {

void RandomSpec::validate() const {
    if (n < 3)
        throw std::invalid_argument("random spec needs n >= 3");
    if (p_l < 0.002 || p_l > 0.49)
        throw std::invalid_argument("p_l must lie in [0.002, 0.49]");
    if (p_h <= p_l || p_h > 0.99)
        throw std::invalid_argument("p_h must lie in (p_l, 0.99]");
    if (count < 1)
        throw std::invalid_argument("count must be positive");
}

DegreeSequence random_graphical_sequence(std::mt19937_64& rng, int n, double p_l, double p_h) {
    // The smallest-term floor of 2 dominates both targets; a p_h target
    // below it degenerates the window to the floor rather than failing.
    const int lo = std::max(2, static_cast<int>(std::lround(p_l * n)));
    const int hi = std::max(lo, std::min(n - 1, static_cast<int>(std::lround(p_h * n))));
    if (lo > n - 1)
        throw GenerationFailure{"degree window is empty: lo=" + std::to_string(lo) +
                                " n=" + std::to_string(n)};

    std::uniform_int_distribution<int> draw(lo, hi);
    constexpr int kMaxAttempts = 10000;
    std::vector<int> terms(static_cast<std::size_t>(n));
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        long long sum = 0;
        for (auto& t : terms) {
            t = draw(rng);
            sum += t;
        }
        sum += hi - terms[0] + lo - terms[1];
        terms[0] = hi; // pin the intended extremes
        terms[1] = lo;
        if (sum % 2 != 0) {
            // An odd sum has an odd term, which is >= 3 and can absorb the
            // parity fix without dropping below 2.
            std::vector<int> adjustable;
            for (int i = 0; i < n; ++i)
                if (terms[static_cast<std::size_t>(i)] >= 3)
                    adjustable.push_back(i);
            if (adjustable.empty())
                continue;
            std::uniform_int_distribution<std::size_t> pick(0, adjustable.size() - 1);
            --terms[static_cast<std::size_t>(adjustable[pick(rng)])];
        }
        std::vector<int> sorted = terms;
        std::sort(sorted.begin(), sorted.end(), std::greater<int>());
        if (is_graphical(sorted))
            return DegreeSequence::from_sorted_unchecked(std::move(sorted));
    }
    throw GenerationFailure{"no graphical sequence found within 10000 attempts"};
}

std::vector<DegreeSequence> generate_random_sequences(const RandomSpec& spec) {
    spec.validate();
    std::mt19937_64 rng(spec.seed);
    std::vector<DegreeSequence> out;
    out.reserve(static_cast<std::size_t>(spec.count));
    for (int i = 0; i < spec.count; ++i)
        out.push_back(random_graphical_sequence(rng, spec.n, spec.p_l, spec.p_h));
    return out;
}

} // namespace dsf
