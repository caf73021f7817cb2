#include "dsf/degseq.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <numeric>
#include <sstream>

namespace dsf {

DegreeSequence::DegreeSequence(std::vector<int> sorted)
    : terms_(std::move(sorted)),
      sum_(std::accumulate(terms_.begin(), terms_.end(), 0LL)) {}

DegreeSequence DegreeSequence::normalized(std::vector<int> raw) {
    if (raw.empty())
        throw EmptyInput{};
    for (int t : raw)
        if (t <= 0)
            throw NonPositiveTerm{t};
    std::sort(raw.begin(), raw.end(), std::greater<int>());
    return DegreeSequence{std::move(raw)};
}

DegreeSequence DegreeSequence::from_sorted_unchecked(std::vector<int> sorted) {
    assert(std::is_sorted(sorted.begin(), sorted.end(), std::greater<int>()));
    assert(std::all_of(sorted.begin(), sorted.end(), [](int t) { return t > 0; }));
    return DegreeSequence{std::move(sorted)};
}

std::string to_text(std::span<const int> terms) {
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i)
            out += ' ';
        out += std::to_string(terms[i]);
    }
    return out;
}

std::string to_text(const DegreeSequence& d) { return to_text(d.span()); }

std::vector<int> parse_terms(std::string_view text) {
    std::vector<int> out;
    std::string token;
    auto flush = [&] {
        if (token.empty())
            return;
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw std::invalid_argument("bad integer token: '" + token + "'");
        out.push_back(value);
        token.clear();
    };
    for (char c : text) {
        if (c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r')
            flush();
        else
            token += c;
    }
    flush();
    if (out.empty())
        throw EmptyInput{};
    return out;
}

bool is_graphical(std::span<const int> d) {
    const int n = static_cast<int>(d.size());
    if (n == 0)
        return true;
    assert(std::is_sorted(d.begin(), d.end(), std::greater<int>()));
    if (d.front() > n - 1 || d.back() < 0)
        return false;

    long long total = 0;
    for (int t : d)
        total += t;
    if (total % 2 != 0)
        return false;

    // Suffix sums let each Erdos-Gallai inequality close in O(1); x tracks
    // the first index whose term is <= k and only ever moves left, so the
    // whole scan is linear. Inequalities beyond the last k with d_k >= k are
    // implied and skipped.
    std::vector<long long> suffix(static_cast<std::size_t>(n) + 1, 0);
    for (int i = n - 1; i >= 0; --i)
        suffix[i] = suffix[i + 1] + d[static_cast<std::size_t>(i)];

    long long lhs = 0;
    int x = n;
    for (int k = 1; k <= n; ++k) {
        lhs += d[static_cast<std::size_t>(k - 1)];
        if (d[static_cast<std::size_t>(k - 1)] < k)
            break;
        while (x > 0 && d[static_cast<std::size_t>(x - 1)] <= k)
            --x;
        const int y = std::max(x, k); // first index >= k with term <= k
        const long long rhs = static_cast<long long>(k) * (k - 1) +
                              static_cast<long long>(k) * (y - k) + suffix[y];
        if (lhs > rhs)
            return false;
    }
    return true;
}

bool is_graphical(const DegreeSequence& d) { return is_graphical(d.span()); }

bool potentially_connected(const DegreeSequence& d) {
    if (!is_graphical(d))
        return false;
    return d.n() <= 1 || d.sum() >= 2LL * (d.n() - 1);
}

bool potentially_biconnected(const DegreeSequence& d) {
    if (d.n() < 3 || d.smallest() < 2)
        return false;
    if (d.sum() < 2LL * (d.n() - 1) + 2LL * (d.largest() - 1))
        return false;
    return is_graphical(d);
}

DegreeSequence multiset_subtract(const DegreeSequence& d, std::span<const int> removed) {
    std::vector<int> rem(removed.begin(), removed.end());
    std::sort(rem.begin(), rem.end(), std::greater<int>());
    std::vector<int> out;
    out.reserve(d.terms().size());
    std::size_t j = 0;
    for (int t : d.terms()) {
        if (j < rem.size() && rem[j] == t)
            ++j;
        else
            out.push_back(t);
    }
    if (j != rem.size())
        throw NotSubMultiset{};
    return DegreeSequence::from_sorted_unchecked(std::move(out));
}

DegreeSequence MultisetDelta::apply() const {
    assert(base != nullptr);
    DegreeSequence stripped = multiset_subtract(*base, removed);
    std::vector<int> terms = stripped.terms();
    terms.insert(terms.end(), added.begin(), added.end());
    std::sort(terms.begin(), terms.end(), std::greater<int>());
    for (int t : terms)
        if (t <= 0)
            throw NonPositiveTerm{t};
    return DegreeSequence::from_sorted_unchecked(std::move(terms));
}

namespace {

struct ValueGroup {
    int value;
    int count;
};

bool combinations_rec(const std::vector<ValueGroup>& groups, std::size_t i, int rem,
                      const std::vector<int>& suffix_counts, std::vector<int>& chosen,
                      const std::function<bool(std::span<const int>)>& visit) {
    if (rem == 0)
        return visit(chosen);
    // groups[i..] still holds suffix_counts[i] items; take as many of the
    // current (largest remaining) value as possible first.
    const int later = suffix_counts[i + 1];
    const int hi = std::min(groups[i].count, rem);
    const int lo = std::max(0, rem - later);
    for (int k = hi; k >= lo; --k) {
        chosen.insert(chosen.end(), static_cast<std::size_t>(k), groups[i].value);
        const bool keep_going =
            combinations_rec(groups, i + 1, rem - k, suffix_counts, chosen, visit);
        chosen.resize(chosen.size() - static_cast<std::size_t>(k));
        if (!keep_going)
            return false;
    }
    return true;
}

} // namespace

bool for_each_multiset_combination(std::span<const int> pool, int s,
                                   const std::function<bool(std::span<const int>)>& visit) {
    assert(std::is_sorted(pool.begin(), pool.end(), std::greater<int>()));
    if (s < 0 || s > static_cast<int>(pool.size()))
        return true;
    if (s == 0) {
        std::vector<int> empty;
        return visit(empty);
    }
    std::vector<ValueGroup> groups;
    for (int t : pool) {
        if (!groups.empty() && groups.back().value == t)
            ++groups.back().count;
        else
            groups.push_back({t, 1});
    }
    std::vector<int> suffix_counts(groups.size() + 1, 0);
    for (std::size_t i = groups.size(); i-- > 0;)
        suffix_counts[i] = suffix_counts[i + 1] + groups[i].count;

    std::vector<int> chosen;
    chosen.reserve(static_cast<std::size_t>(s));
    return combinations_rec(groups, 0, s, suffix_counts, chosen, visit);
}

std::vector<std::vector<int>> multiset_combinations(const DegreeSequence& d, int s) {
    std::vector<std::vector<int>> out;
    for_each_multiset_combination(d.span(), s, [&](std::span<const int> m) {
        out.emplace_back(m.begin(), m.end());
        return true;
    });
    return out;
}

} // namespace dsf
