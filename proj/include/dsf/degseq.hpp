#ifndef DSF_DEGSEQ_HPP
#define DSF_DEGSEQ_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dsf/errors.hpp"

namespace dsf {

// A degree sequence stored in canonical non-increasing order. Zero-free by
// construction (normalize rejects zeros and negatives); the empty sequence
// can still arise from multiset subtraction. Immutable value type.
class DegreeSequence {
public:
    DegreeSequence() = default;

    // Sorts and validates raw terms. Throws EmptyInput / NonPositiveTerm.
    static DegreeSequence normalized(std::vector<int> raw);

    // Adopts terms that are already non-increasing and positive (asserted in
    // debug builds, not re-checked in release). Internal fast path for
    // derived sequences whose order is known.
    static DegreeSequence from_sorted_unchecked(std::vector<int> sorted);

    int n() const { return static_cast<int>(terms_.size()); }
    bool empty() const { return terms_.empty(); }
    long long sum() const { return sum_; }
    const std::vector<int>& terms() const { return terms_; }
    std::span<const int> span() const { return terms_; }

    // 0-based; terms()[0] is the largest term.
    int operator[](int i) const { return terms_[static_cast<std::size_t>(i)]; }
    int largest() const { return terms_.front(); }
    int smallest() const { return terms_.back(); }

    bool operator==(const DegreeSequence& other) const = default;
    auto operator<=>(const DegreeSequence& other) const = default;

private:
    explicit DegreeSequence(std::vector<int> sorted);

    std::vector<int> terms_;
    long long sum_ = 0;
};

// Canonical text form: space-separated, non-increasing.
std::string to_text(const DegreeSequence& d);
std::string to_text(std::span<const int> terms);

// Parses comma- or whitespace-separated integers. Throws EmptyInput on no
// tokens and std::invalid_argument on malformed tokens.
std::vector<int> parse_terms(std::string_view text);

// Erdos-Gallai test on a non-increasing sequence. Tolerates zeros (isolated
// vertices) and the empty sequence; runs in O(n) after sorting.
bool is_graphical(std::span<const int> non_increasing);
bool is_graphical(const DegreeSequence& d);

// Wang-Kleitman characterizations for k = 1 and k = 2. Inputs must be
// normalized; both are total on zero-free sequences.
bool potentially_connected(const DegreeSequence& d);
bool potentially_biconnected(const DegreeSequence& d);

// Removes exactly one copy per listed element. Throws NotSubMultiset.
DegreeSequence multiset_subtract(const DegreeSequence& d, std::span<const int> removed);

// A pending multiset edit against a base sequence: remove one copy per
// element of `removed`, then insert every element of `added`.
struct MultisetDelta {
    const DegreeSequence* base = nullptr;
    std::vector<int> removed;
    std::vector<int> added;

    DegreeSequence apply() const; // throws NotSubMultiset
};

// Visits every distinct sub-multiset of size s exactly once, in a fixed
// order (larger values taken first). The visitor receives the chosen terms
// sorted non-increasing and returns false to stop early. Returns false iff
// the visitor stopped the walk.
bool for_each_multiset_combination(std::span<const int> pool_non_increasing, int s,
                                   const std::function<bool(std::span<const int>)>& visit);

// Convenience wrapper collecting all distinct sub-multisets of size s.
std::vector<std::vector<int>> multiset_combinations(const DegreeSequence& d, int s);

struct TermVectorHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 0x9e3779b97f4a7c15ull ^ v.size();
        for (int x : v)
            h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ull;
        return h;
    }
};

} // namespace dsf

#endif // DSF_DEGSEQ_HPP
