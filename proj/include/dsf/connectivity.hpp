#ifndef DSF_CONNECTIVITY_HPP
#define DSF_CONNECTIVITY_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dsf/degseq.hpp"

namespace dsf {

// Certificate that a graphical sequence has a disconnected realization:
// side_a and side_b are both graphical and realize d as a disjoint union.
struct SplitWitness {
    DegreeSequence side_a; // smaller side, |side_a| <= n/2
    DegreeSequence side_b;
};

// Certificate that a potentially biconnected, forcibly connected sequence
// has a realization with a cut vertex: the cut vertex has degree cut_degree
// split as d_low adjacencies into the smaller subgraph (order s) and d_high
// into the larger one; seq_low/seq_high are the two derived sequences that
// must both be graphical with even sums.
struct CutWitness {
    int cut_degree = 0;
    int d_low = 0;
    int d_high = 0;
    int s = 0;
    std::vector<int> s_low;  // degrees chosen for the smaller subgraph
    DegreeSequence seq_low;  // s_low + {d_low}, length s + 1
    DegreeSequence seq_high; // rest + {d_high}, length n - s
};

// Candidate orders of the smaller subgraph next to a cut vertex: every s in
// [d_n, floor((n-1)/2)] with d_{n-s+1} <= s and d_2 <= n-s-1.
struct CandidateOrders {
    std::vector<int> orders; // ascending
};

enum class GateStatus { ok, not_potentially_biconnected, not_forcibly_connected };

std::string to_string(GateStatus status);

// Wall-clock cutoff for the exponential searches. Default: no limit.
class Deadline {
public:
    Deadline() = default;
    static Deadline never() { return Deadline{}; }
    static Deadline after(std::chrono::steady_clock::duration budget) {
        Deadline d;
        d.at_ = std::chrono::steady_clock::now() + budget;
        d.armed_ = true;
        return d;
    }
    bool expired() const {
        return armed_ && std::chrono::steady_clock::now() >= at_;
    }

private:
    std::chrono::steady_clock::time_point at_{};
    bool armed_ = false;
};

struct SearchCounters {
    std::uint64_t cut_searches = 0;        // cut-degree enumerations entered
    std::uint64_t cut_candidates = 0;      // (s_L, d') pairs tested
    std::uint64_t split_candidates = 0;    // small-side multisets tested
    std::uint64_t graphicality_tests = 0;  // EG evaluations inside searches
};

struct SearchOptions {
    Deadline deadline{};
    SearchCounters* counters = nullptr;
};

// Generalized Havel-Hakimi step: remove one copy of `pick` from d and
// decrement each chosen target by 1. The result is returned sorted
// non-increasing; it may contain zeros and need not be graphical.
// Throws InvalidSelection.
std::vector<int> ghh(const DegreeSequence& d, int pick, std::span<const int> targets);

struct ConnectivityResult {
    bool forcibly = false;
    std::optional<SplitWitness> witness; // present iff !forcibly
};

// True iff every realization of d is connected. d must be normalized,
// zero-free and graphical (throws NotGraphical otherwise); may throw
// TimedOut under a deadline.
ConnectivityResult forcibly_connected(const DegreeSequence& d, const SearchOptions& opts = {});

// Decides by sweeping every generalized Havel-Hakimi removal choice.
// Exponential; intended for cross-checks at small n.
bool forcibly_biconnected_basic(const DegreeSequence& d, const SearchOptions& opts = {});

CandidateOrders candidate_orders(const DegreeSequence& d);

struct BiconnectivityResult {
    bool forcibly = false;
    GateStatus gate = GateStatus::ok;
    std::optional<CutWitness> witness; // first cut found, when !forcibly and gate == ok
};

// The improved test: gate on potential biconnectivity and forcible
// connectivity, apply the d_2 + d_n >= n shortcut, then search candidate
// cut degrees and smaller-side orders for a valid cutting.
BiconnectivityResult forcibly_biconnected(const DegreeSequence& d,
                                          const SearchOptions& opts = {});

// The shortcut and cut search only, for callers that have already verified
// the two gate conditions (e.g. enumeration filters that track them).
BiconnectivityResult forcibly_biconnected_after_gates(const DegreeSequence& d,
                                                      const SearchOptions& opts = {});

struct CutEnumeration {
    GateStatus gate = GateStatus::ok;
    std::vector<CutWitness> witnesses;
    bool forcibly_biconnected() const { return gate == GateStatus::ok && witnesses.empty(); }
};

// Same search as forcibly_biconnected but records every cutting found,
// deduplicated on (cut_degree, d_low, s_low).
CutEnumeration find_cut_witnesses(const DegreeSequence& d,
                                  std::optional<std::size_t> limit = std::nullopt,
                                  const SearchOptions& opts = {});

} // namespace dsf

#endif // DSF_CONNECTIVITY_HPP
