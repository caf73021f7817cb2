#include "dsf/connectivity.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>
#include <unordered_set>

#include "dsf/errors.hpp"

namespace dsf {

namespace {

// Graphicality results memoized on the canonical (non-increasing) form, so
// repeated derived sequences inside one search are tested once.
class GraphicalityCache {
public:
    explicit GraphicalityCache(SearchCounters* counters) : counters_(counters) {}

    bool test(const std::vector<int>& sorted_desc) {
        auto [it, inserted] = cache_.try_emplace(sorted_desc, false);
        if (inserted) {
            if (counters_)
                ++counters_->graphicality_tests;
            it->second = is_graphical(it->first);
        }
        return it->second;
    }

private:
    std::unordered_map<std::vector<int>, bool, TermVectorHash> cache_;
    SearchCounters* counters_;
};

void check_deadline(const SearchOptions& opts) {
    if (opts.deadline.expired())
        throw TimedOut{};
}

// full and part are sorted non-increasing; part is a sub-multiset of full.
std::vector<int> multiset_diff(std::span<const int> full, std::span<const int> part) {
    std::vector<int> out;
    out.reserve(full.size() - part.size());
    std::size_t j = 0;
    for (int t : full) {
        if (j < part.size() && part[j] == t)
            ++j;
        else
            out.push_back(t);
    }
    assert(j == part.size());
    return out;
}

std::vector<int> remove_one_copy(std::span<const int> sorted_desc, int value) {
    std::vector<int> out(sorted_desc.begin(), sorted_desc.end());
    auto it = std::find(out.begin(), out.end(), value);
    assert(it != out.end());
    out.erase(it);
    return out;
}

void insert_sorted_desc(std::vector<int>& v, int value) {
    v.insert(std::lower_bound(v.begin(), v.end(), value, std::greater<int>()), value);
}

// Searches for a disconnected split of d with smaller side of exactly s
// vertices: a sub-multiset A of the terms <= s-1 with |A| = s such that A
// and d - A are both graphical. Candidate A's are walked smallest-first.
class SplitSearch {
public:
    SplitSearch(const DegreeSequence& d, const SearchOptions& opts, GraphicalityCache& cache)
        : terms_(d.terms()), n_(d.n()), total_(d.sum()), opts_(opts), cache_(cache) {}

    std::optional<SplitWitness> try_order(int s) {
        auto first_small = std::lower_bound(terms_.begin(), terms_.end(), s - 1,
                                            std::greater<int>());
        pool_ = terms_.subspan(static_cast<std::size_t>(first_small - terms_.begin()));
        if (static_cast<int>(pool_.size()) < s)
            return std::nullopt;
        if (terms_[0] > n_ - s - 1)
            return std::nullopt;

        // Both sides must be graphical: sum(A) <= s(s-1) and
        // sum(d - A) <= (n-s)(n-s-1).
        lo_sum_ = std::max<long long>(s, total_ - static_cast<long long>(n_ - s) * (n_ - s - 1));
        hi_sum_ = static_cast<long long>(s) * (s - 1);
        if (lo_sum_ > hi_sum_)
            return std::nullopt;

        groups_.clear();
        for (int t : pool_) {
            if (!groups_.empty() && groups_.back().value == t)
                ++groups_.back().count;
            else
                groups_.push_back({t, 1, 0});
        }
        int offset = 0;
        for (auto& g : groups_) {
            g.start = offset;
            offset += g.count;
        }
        prefix_.assign(pool_.size() + 1, 0);
        for (std::size_t i = 0; i < pool_.size(); ++i)
            prefix_[i + 1] = prefix_[i] + pool_[i];

        chosen_.clear();
        witness_.reset();
        recurse(0, s, 0);
        return std::move(witness_);
    }

private:
    struct Group {
        int value;
        int count;
        int start;
    };

    long long take_largest(std::size_t start, int r) const {
        return prefix_[start + static_cast<std::size_t>(r)] - prefix_[start];
    }
    long long take_smallest(int r) const {
        return prefix_[pool_.size()] - prefix_[pool_.size() - static_cast<std::size_t>(r)];
    }

    // Returns false once a witness has been found.
    bool recurse(std::size_t gi, int rem, long long acc) {
        if (rem == 0)
            return leaf(acc);
        const auto& g = groups_[gi];
        const int later = static_cast<int>(pool_.size()) - g.start - g.count;
        if (acc + take_largest(static_cast<std::size_t>(g.start), rem) < lo_sum_)
            return true;
        if (acc + take_smallest(rem) > hi_sum_)
            return true;
        const int lo = std::max(0, rem - later);
        const int hi = std::min(g.count, rem);
        for (int k = lo; k <= hi; ++k) {
            chosen_.insert(chosen_.end(), static_cast<std::size_t>(k), g.value);
            const bool keep_going =
                recurse(gi + 1, rem - k, acc + static_cast<long long>(k) * g.value);
            chosen_.resize(chosen_.size() - static_cast<std::size_t>(k));
            if (!keep_going)
                return false;
        }
        return true;
    }

    bool leaf(long long acc) {
        if (opts_.counters)
            ++opts_.counters->split_candidates;
        if ((++ticks_ & 0x3ff) == 0)
            check_deadline(opts_);
        if (acc % 2 != 0)
            return true;
        if (!cache_.test(chosen_))
            return true;
        std::vector<int> rest = multiset_diff(terms_, chosen_);
        if (!cache_.test(rest))
            return true;
        witness_ = SplitWitness{DegreeSequence::from_sorted_unchecked(chosen_),
                                DegreeSequence::from_sorted_unchecked(std::move(rest))};
        return false;
    }

    std::span<const int> terms_;
    int n_;
    long long total_;
    const SearchOptions& opts_;
    GraphicalityCache& cache_;

    std::span<const int> pool_;
    std::vector<Group> groups_;
    std::vector<long long> prefix_;
    std::vector<int> chosen_;
    long long lo_sum_ = 0;
    long long hi_sum_ = 0;
    std::uint64_t ticks_ = 0;
    std::optional<SplitWitness> witness_;
};

std::vector<int> distinct_values_desc(std::span<const int> terms) {
    std::vector<int> values;
    for (int t : terms)
        if (values.empty() || values.back() != t)
            values.push_back(t);
    return values;
}

// The cut-degree search over candidate orders (the enumeration behind line
// 18): for every distinct degree v and order s, split v into d' + d'' and
// test the two derived sequences. Stops at the first hit unless collecting.
std::vector<CutWitness> cut_search(const DegreeSequence& d, const std::vector<int>& orders,
                                   bool first_only, std::optional<std::size_t> limit,
                                   const SearchOptions& opts) {
    const auto& terms = d.terms();
    const int n = d.n();
    const int d1 = terms[0];
    GraphicalityCache cache(opts.counters);
    std::vector<CutWitness> found;
    std::unordered_set<std::vector<int>, TermVectorHash> dedup;

    for (int v : distinct_values_desc(terms)) {
        for (int s : orders) {
            check_deadline(opts);
            if (!(v == d1 || n - s - 1 >= d1))
                continue;
            auto first_small =
                std::lower_bound(terms.begin(), terms.end(), s, std::greater<int>());
            std::vector<int> low_pool(first_small, terms.end());
            if (v <= s)
                low_pool = remove_one_copy(low_pool, v);
            if (static_cast<int>(low_pool.size()) < s)
                continue;
            std::vector<int> high_rest(terms.begin(), first_small);
            if (v > s)
                high_rest = remove_one_copy(high_rest, v);

            if (opts.counters)
                ++opts.counters->cut_searches;

            bool done = false;
            for_each_multiset_combination(low_pool, s, [&](std::span<const int> s_low) {
                check_deadline(opts);
                std::vector<int> low_left = multiset_diff(low_pool, s_low);
                std::vector<int> core(high_rest.size() + low_left.size());
                std::merge(high_rest.begin(), high_rest.end(), low_left.begin(),
                           low_left.end(), core.begin(), std::greater<int>());
                long long low_sum = 0;
                for (int t : s_low)
                    low_sum += t;

                // d' needs the parity of sum(s_low) for both derived sums to
                // be even, d' <= s for seq_low and v - d' <= n-s-1 for
                // seq_high to stand a chance of being graphical.
                int dl = std::max(1, v - (n - s - 1));
                if ((dl & 1) != (low_sum & 1))
                    ++dl;
                const int dl_max = std::min(v - 1, s);
                for (; dl <= dl_max; dl += 2) {
                    if (opts.counters)
                        ++opts.counters->cut_candidates;
                    std::vector<int> seq_low(s_low.begin(), s_low.end());
                    insert_sorted_desc(seq_low, dl);
                    if (!cache.test(seq_low))
                        continue;
                    const int dh = v - dl;
                    std::vector<int> seq_high = core;
                    insert_sorted_desc(seq_high, dh);
                    if (!cache.test(seq_high))
                        continue;

                    CutWitness w;
                    w.cut_degree = v;
                    w.d_low = dl;
                    w.d_high = dh;
                    w.s = s;
                    w.s_low.assign(s_low.begin(), s_low.end());
                    w.seq_low = DegreeSequence::from_sorted_unchecked(std::move(seq_low));
                    w.seq_high = DegreeSequence::from_sorted_unchecked(std::move(seq_high));

                    std::vector<int> key;
                    key.reserve(w.s_low.size() + 2);
                    key.push_back(v);
                    key.push_back(dl);
                    key.insert(key.end(), w.s_low.begin(), w.s_low.end());
                    if (dedup.insert(std::move(key)).second)
                        found.push_back(std::move(w));

                    if (first_only || (limit && found.size() >= *limit)) {
                        done = true;
                        return false;
                    }
                }
                return true;
            });
            if (done)
                return found;
        }
    }
    return found;
}

} // namespace

std::string to_string(GateStatus status) {
    switch (status) {
    case GateStatus::ok:
        return "ok";
    case GateStatus::not_potentially_biconnected:
        return "not potentially biconnected";
    case GateStatus::not_forcibly_connected:
        return "not forcibly connected";
    }
    return "unknown";
}

std::vector<int> ghh(const DegreeSequence& d, int pick, std::span<const int> targets) {
    if (static_cast<int>(targets.size()) != pick)
        throw InvalidSelection{"GHH target count must equal the removed term"};
    std::vector<int> rest = d.terms();
    auto it = std::find(rest.begin(), rest.end(), pick);
    if (it == rest.end())
        throw InvalidSelection{"GHH pick not present in the sequence"};
    rest.erase(it);

    std::vector<int> chosen(targets.begin(), targets.end());
    std::sort(chosen.begin(), chosen.end(), std::greater<int>());
    std::size_t j = 0;
    for (std::size_t i = 0; i < rest.size() && j < chosen.size(); ++i) {
        if (rest[i] == chosen[j]) {
            --rest[i];
            ++j;
        }
    }
    if (j != chosen.size())
        throw InvalidSelection{"GHH targets are not a sub-multiset of the remainder"};
    std::sort(rest.begin(), rest.end(), std::greater<int>());
    return rest;
}

ConnectivityResult forcibly_connected(const DegreeSequence& d, const SearchOptions& opts) {
    if (!is_graphical(d))
        throw NotGraphical{};
    const int n = d.n();
    if (n <= 1)
        return {true, std::nullopt};
    const auto& t = d.terms();
    // Two vertices in distinct components have degree sum at most n - 2.
    if (t[static_cast<std::size_t>(n - 2)] + t[static_cast<std::size_t>(n - 1)] >= n - 1)
        return {true, std::nullopt};

    GraphicalityCache cache(opts.counters);
    SplitSearch search(d, opts, cache);
    for (int s = 1; s <= n / 2; ++s) {
        check_deadline(opts);
        if (auto w = search.try_order(s))
            return {false, std::move(w)};
    }
    return {true, std::nullopt};
}

bool forcibly_biconnected_basic(const DegreeSequence& d, const SearchOptions& opts) {
    if (!potentially_biconnected(d))
        return false;
    if (!forcibly_connected(d, opts).forcibly)
        return false;

    std::unordered_set<std::vector<int>, TermVectorHash> tested;
    for (int v : distinct_values_desc(d.terms())) {
        std::vector<int> rest = remove_one_copy(d.terms(), v);
        bool done = false;
        for_each_multiset_combination(rest, v, [&](std::span<const int> targets) {
            check_deadline(opts);
            // Apply the GHH decrements directly on the remainder.
            std::vector<int> derived = rest;
            std::size_t j = 0;
            for (std::size_t i = 0; i < derived.size() && j < targets.size(); ++i)
                if (derived[i] == targets[j]) {
                    --derived[i];
                    ++j;
                }
            std::sort(derived.begin(), derived.end(), std::greater<int>());
            if (!tested.insert(derived).second)
                return true;
            if (!is_graphical(derived))
                return true;
            if (derived.back() == 0) {
                // Graphical with an isolated vertex: every realization is
                // disconnected, so v is a cut degree.
                done = true;
                return false;
            }
            auto fc = forcibly_connected(DegreeSequence::from_sorted_unchecked(derived), opts);
            if (!fc.forcibly) {
                done = true;
                return false;
            }
            return true;
        });
        if (done)
            return false;
    }
    return true;
}

CandidateOrders candidate_orders(const DegreeSequence& d) {
    const auto& t = d.terms();
    const int n = d.n();
    CandidateOrders result;
    if (n < 3)
        return result;
    for (int s = t[static_cast<std::size_t>(n - 1)]; s <= (n - 1) / 2; ++s)
        if (t[static_cast<std::size_t>(n - s)] <= s && t[1] <= n - s - 1)
            result.orders.push_back(s);
    return result;
}

BiconnectivityResult forcibly_biconnected_after_gates(const DegreeSequence& d,
                                                      const SearchOptions& opts) {
    const auto& t = d.terms();
    const int n = d.n();
    // d_2 + d_n < n is necessary for a cut degree to exist.
    if (t[1] + t[static_cast<std::size_t>(n - 1)] >= n)
        return {true, GateStatus::ok, std::nullopt};
    const CandidateOrders orders = candidate_orders(d);
    if (orders.orders.empty())
        return {true, GateStatus::ok, std::nullopt};

    auto witnesses = cut_search(d, orders.orders, /*first_only=*/true, std::nullopt, opts);
    if (witnesses.empty())
        return {true, GateStatus::ok, std::nullopt};
    return {false, GateStatus::ok, std::move(witnesses.front())};
}

BiconnectivityResult forcibly_biconnected(const DegreeSequence& d, const SearchOptions& opts) {
    if (!potentially_biconnected(d))
        return {false, GateStatus::not_potentially_biconnected, std::nullopt};
    if (!forcibly_connected(d, opts).forcibly)
        return {false, GateStatus::not_forcibly_connected, std::nullopt};
    return forcibly_biconnected_after_gates(d, opts);
}

CutEnumeration find_cut_witnesses(const DegreeSequence& d, std::optional<std::size_t> limit,
                                  const SearchOptions& opts) {
    if (!potentially_biconnected(d))
        return {GateStatus::not_potentially_biconnected, {}};
    if (!forcibly_connected(d, opts).forcibly)
        return {GateStatus::not_forcibly_connected, {}};

    const auto& t = d.terms();
    const int n = d.n();
    if (t[1] + t[static_cast<std::size_t>(n - 1)] >= n)
        return {GateStatus::ok, {}};
    const CandidateOrders orders = candidate_orders(d);
    if (orders.orders.empty())
        return {GateStatus::ok, {}};
    return {GateStatus::ok, cut_search(d, orders.orders, /*first_only=*/false, limit, opts)};
}

} // namespace dsf
