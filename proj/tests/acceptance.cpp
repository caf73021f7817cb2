// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Expected values are the published enumeration tables.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dsf/connectivity.hpp"
#include "dsf/degseq.hpp"
#include "dsf/enumeration.hpp"
#include "dsf/errors.hpp"
#include "dsf/oracle.hpp"
#include "dsf/random_gen.hpp"

using dsf::CountOptions;
using dsf::DegreeSequence;
using dsf::EnumMode;
using dsf::GraphProperty;
using dsf::QuantifierMode;
using dsf::SequenceFilter;
using dsf::TableKind;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream detail;

    template <typename A, typename B>
    void equal(const A& got, const B& expected, const std::string& what) {
        if (!(got == expected)) {
            ok = false;
            detail << "  " << what << ": got " << got << ", expected " << expected << "\n";
        }
    }
    void require(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            detail << "  " << what << "\n";
        }
    }
};

std::vector<std::uint64_t> totals_by_filter(long long parameter, EnumMode mode) {
    const auto tables = dsf::count_all_filters(parameter, mode, TableKind::totals);
    std::vector<std::uint64_t> out;
    for (const auto& t : tables)
        out.push_back(t.total());
    return out;
}

std::uint64_t filter_total(const std::vector<std::uint64_t>& totals, SequenceFilter f) {
    return totals[static_cast<std::size_t>(f)];
}

// Table 3, n = 4..12.
bool criterion1(Check& c) {
    const std::uint64_t expected_fb[] = {3, 9, 30, 105, 381, 1412, 5296, 20010, 76045};
    const std::uint64_t expected_fc[] = {6, 18, 63, 216, 783, 2843, 10535, 39232, 147457};
    for (int n = 4; n <= 12; ++n) {
        const auto totals = totals_by_filter(n, EnumMode::sequences);
        c.equal(filter_total(totals, SequenceFilter::forcibly_biconnected),
                expected_fb[n - 4], "D2_f(" + std::to_string(n) + ")");
        c.equal(filter_total(totals, SequenceFilter::forcibly_connected),
                expected_fc[n - 4], "D1_f(" + std::to_string(n) + ")");
    }
    return c.ok;
}

// Table 4: length-7 sequences itemized by degree sum.
bool criterion2(Check& c) {
    const std::vector<std::uint64_t> expected_c2{1, 1,  3,  7,  14, 17, 18, 19,
                                                 16, 12, 8,  5,  2,  1,  1};
    const std::vector<std::uint64_t> expected_f2{0, 0,  0,  2,  8,  14, 17, 19,
                                                 16, 12, 8,  5,  2,  1,  1};
    const auto c2 = dsf::count_filtered(7, EnumMode::sequences,
                                        SequenceFilter::potentially_biconnected,
                                        TableKind::by_degree_sum);
    const auto f2 = dsf::count_filtered(7, EnumMode::sequences,
                                        SequenceFilter::forcibly_biconnected,
                                        TableKind::by_degree_sum);
    c.equal(c2.counts.size(), expected_c2.size(), "C2[7,N] key count");
    c.equal(f2.counts.size(), expected_f2.size(), "F2[7,N] key count");
    int i = 0;
    for (long long n_sum = 14; n_sum <= 42; n_sum += 2, ++i) {
        c.equal(c2.counts.count(n_sum) ? c2.counts.at(n_sum) : ~0ull, expected_c2[i],
                "C2[7," + std::to_string(n_sum) + "]");
        c.equal(f2.counts.count(n_sum) ? f2.counts.at(n_sum) : ~0ull, expected_f2[i],
                "F2[7," + std::to_string(n_sum) + "]");
    }
    for (long long n_sum = 28; n_sum <= 42; n_sum += 2)
        c.require(c2.counts.at(n_sum) == f2.counts.at(n_sum),
                  "C2 = F2 band at N=" + std::to_string(n_sum));
    c.require(f2.counts.at(20) == 2, "F2[7,20] = 2");
    return c.ok;
}

// Table 6: graphical partition totals, N = 10..50 step 10.
bool criterion3(Check& c) {
    const std::uint64_t expected_fb[] = {2, 10, 55, 262, 1062};
    const std::uint64_t expected_fc[] = {8, 81, 586, 3308, 15748};
    int i = 0;
    for (long long total = 10; total <= 50; total += 10, ++i) {
        const auto totals = totals_by_filter(total, EnumMode::partitions);
        c.equal(filter_total(totals, SequenceFilter::forcibly_biconnected),
                expected_fb[i], "g2_f(" + std::to_string(total) + ")");
        c.equal(filter_total(totals, SequenceFilter::forcibly_connected),
                expected_fc[i], "g1_f(" + std::to_string(total) + ")");
    }
    return c.ok;
}

// Tables 7 and 8: partitions of 30 itemized by part count and largest part.
bool criterion4(Check& c) {
    const std::vector<std::uint64_t> expected_c2{1, 16, 44, 54, 30, 15, 7, 3, 1, 1};
    const std::vector<std::uint64_t> expected_f2{1, 16, 30, 8, 0, 0, 0, 0, 0, 0};
    const std::vector<std::uint64_t> expected_l2{2, 13, 23, 13, 4};

    const auto c2 = dsf::count_filtered(30, EnumMode::partitions,
                                        SequenceFilter::potentially_biconnected,
                                        TableKind::by_num_parts);
    const auto f2 = dsf::count_filtered(30, EnumMode::partitions,
                                        SequenceFilter::forcibly_biconnected,
                                        TableKind::by_num_parts);
    const auto l2 = dsf::count_filtered(30, EnumMode::partitions,
                                        SequenceFilter::forcibly_biconnected,
                                        TableKind::by_largest_part);
    int i = 0;
    for (long long j = 6; j <= 15; ++j, ++i) {
        c.equal(c2.counts.count(j) ? c2.counts.at(j) : ~0ull, expected_c2[i],
                "c2[30," + std::to_string(j) + "]");
        c.equal(f2.counts.count(j) ? f2.counts.at(j) : ~0ull, expected_f2[i],
                "f2[30," + std::to_string(j) + "]");
    }
    c.equal(l2.counts.size(), expected_l2.size(), "l2[30,j] key count");
    i = 0;
    for (long long j = 4; j <= 8; ++j, ++i)
        c.equal(l2.counts.count(j) ? l2.counts.at(j) : ~0ull, expected_l2[i],
                "l2[30," + std::to_string(j) + "]");

    const auto big_c2 = dsf::count_filtered(7, EnumMode::sequences,
                                            SequenceFilter::potentially_biconnected,
                                            TableKind::by_degree_sum);
    const auto big_f2 = dsf::count_filtered(7, EnumMode::sequences,
                                            SequenceFilter::forcibly_biconnected,
                                            TableKind::by_degree_sum);
    c.require(c2.counts.at(7) == 16 && f2.counts.at(7) == 16 && big_c2.counts.at(30) == 16 &&
                  big_f2.counts.at(30) == 16,
              "cross-check c2[30,7] = f2[30,7] = C2[7,30] = F2[7,30] = 16");
    return c.ok;
}

// Minimum largest terms: M2/M for n = 4..14, m2/m for N = 10..60 step 10.
bool criterion5(Check& c) {
    const int expected_m2[] = {2, 2, 3, 3, 4, 4, 4, 5, 5, 6, 6};
    const int expected_m[] = {2, 2, 3, 3, 3, 4, 4, 5, 5, 5, 6};
    for (int n = 4; n <= 14; ++n) {
        const auto report = dsf::extremal_largest_term(n, EnumMode::sequences);
        c.equal(report.value_forcibly_connected, expected_m[n - 4],
                "M(" + std::to_string(n) + ")");
        c.require(report.value_forcibly_biconnected.has_value(),
                  "M2(" + std::to_string(n) + ") exists");
        if (report.value_forcibly_biconnected)
            c.equal(*report.value_forcibly_biconnected, expected_m2[n - 4],
                    "M2(" + std::to_string(n) + ")");
    }
    const int expected_small[] = {2, 3, 4, 5, 5, 6};
    int i = 0;
    for (long long total = 10; total <= 60; total += 10, ++i) {
        const auto report = dsf::extremal_largest_term(total, EnumMode::partitions);
        c.equal(report.value_forcibly_connected, expected_small[i],
                "m(" + std::to_string(total) + ")");
        c.require(report.value_forcibly_biconnected.has_value(),
                  "m2(" + std::to_string(total) + ") exists");
        if (report.value_forcibly_biconnected)
            c.equal(*report.value_forcibly_biconnected, expected_small[i],
                    "m2(" + std::to_string(total) + ")");
    }
    return c.ok;
}

// Oracle equivalence across every zero-free graphical sequence, n = 4..8.
bool criterion6(Check& c) {
    std::uint64_t checked = 0;
    std::uint64_t disagreements = 0;
    for (int n = 4; n <= 8; ++n) {
        dsf::for_each_zero_free_graphical_sequence(n, [&](const DegreeSequence& d) {
            ++checked;
            const bool fb = dsf::forcibly_biconnected(d).forcibly;
            const bool fbb = dsf::forcibly_biconnected_basic(d);
            const bool fb_oracle =
                dsf::oracle_verdict(d, GraphProperty::biconnected, QuantifierMode::forcibly);
            const bool pb = dsf::potentially_biconnected(d);
            const bool pb_oracle =
                dsf::oracle_verdict(d, GraphProperty::biconnected, QuantifierMode::potentially);
            const bool fc = dsf::forcibly_connected(d).forcibly;
            const bool fc_oracle =
                dsf::oracle_verdict(d, GraphProperty::connected, QuantifierMode::forcibly);
            if (fb != fb_oracle || fbb != fb_oracle || pb != pb_oracle || fc != fc_oracle) {
                ++disagreements;
                c.detail << "  disagreement at " << dsf::to_text(d) << ": fb=" << fb
                         << " fbb=" << fbb << " oracle=" << fb_oracle << " pb=" << pb << "/"
                         << pb_oracle << " fc=" << fc << "/" << fc_oracle << "\n";
            }
            return true;
        });
    }
    c.equal(disagreements, std::uint64_t{0}, "disagreements");
    c.require(checked == 7 + 20 + 71 + 240 + 871, "sweep covered every sequence");
    return c.ok;
}

bool vertex_removal_disconnects(const dsf::Realization& g, int remove) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n));
    for (auto [u, v] : g.edges)
        if (u != remove && v != remove) {
            adj[static_cast<std::size_t>(u)].push_back(v);
            adj[static_cast<std::size_t>(v)].push_back(u);
        }
    int start = remove == 0 ? 1 : 0;
    std::vector<bool> seen(static_cast<std::size_t>(g.n), false);
    std::vector<int> stack{start};
    seen[static_cast<std::size_t>(start)] = true;
    int visited = 0;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        ++visited;
        for (int v : adj[static_cast<std::size_t>(u)])
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = true;
                stack.push_back(v);
            }
    }
    return visited < g.n - 1;
}

// Witness soundness across the same sweep.
bool criterion7(Check& c) {
    std::uint64_t witnesses = 0;
    std::uint64_t violations = 0;
    for (int n = 4; n <= 8; ++n) {
        dsf::for_each_zero_free_graphical_sequence(n, [&](const DegreeSequence& d) {
            const auto cuts = dsf::find_cut_witnesses(d);
            for (const auto& w : cuts.witnesses) {
                ++witnesses;
                bool sound = true;
                sound = sound && 1 <= w.d_low && w.d_low < w.cut_degree;
                sound = sound && w.d_low + w.d_high == w.cut_degree;
                sound = sound && d.smallest() <= w.s && w.s <= (d.n() - 1) / 2;
                sound = sound && static_cast<int>(w.s_low.size()) == w.s;
                for (int t : w.s_low)
                    sound = sound && t <= w.s;
                sound = sound && w.seq_low.n() == w.s + 1;
                sound = sound && w.seq_high.n() == d.n() - w.s;
                sound = sound && w.seq_low.sum() % 2 == 0 && w.seq_high.sum() % 2 == 0;
                sound = sound && dsf::is_graphical(w.seq_low) && dsf::is_graphical(w.seq_high);
                sound = sound && w.seq_high.largest() <= d.n() - w.s - 1;

                const auto glued = dsf::build_cut_realization(w);
                if (!glued) {
                    sound = false;
                } else {
                    std::vector<int> degrees = glued->degree_of;
                    std::sort(degrees.begin(), degrees.end(), std::greater<int>());
                    const int cut = glued->n - 1;
                    sound = sound && degrees == d.terms();
                    sound = sound && dsf::is_connected(*glued);
                    sound = sound &&
                            glued->degree_of[static_cast<std::size_t>(cut)] == w.cut_degree;
                    sound = sound && vertex_removal_disconnects(*glued, cut);
                }
                if (!sound) {
                    ++violations;
                    c.detail << "  unsound witness for " << dsf::to_text(d) << ": cut_degree="
                             << w.cut_degree << " d_low=" << w.d_low << " s=" << w.s << "\n";
                }
            }
            return true;
        });
    }
    c.equal(violations, std::uint64_t{0}, "witness violations");
    c.require(witnesses > 0, "the sweep produced witnesses to check");
    return c.ok;
}

// Unimodality of the itemized counts.
bool criterion8(Check& c) {
    for (int n = 4; n <= 10; ++n) {
        const auto f2 = dsf::count_filtered(n, EnumMode::sequences,
                                            SequenceFilter::forcibly_biconnected,
                                            TableKind::by_degree_sum);
        c.require(dsf::check_unimodal(f2.values_in_key_order()),
                  "F2[" + std::to_string(n) + ",-] unimodal");
    }
    for (long long total = 4; total <= 40; total += 2) {
        const auto f2 = dsf::count_filtered(total, EnumMode::partitions,
                                            SequenceFilter::forcibly_biconnected,
                                            TableKind::by_num_parts);
        c.require(dsf::check_unimodal(f2.values_in_key_order()),
                  "f2[" + std::to_string(total) + ",-] unimodal");
        const auto l2 = dsf::count_filtered(total, EnumMode::partitions,
                                            SequenceFilter::forcibly_biconnected,
                                            TableKind::by_largest_part);
        c.require(dsf::check_unimodal(l2.values_in_key_order()),
                  "l2[" + std::to_string(total) + ",-] unimodal");
    }
    // the three published instances
    const std::vector<std::uint64_t> f2_7{0, 0, 0, 2, 8, 14, 17, 19, 16, 12, 8, 5, 2, 1, 1};
    const std::vector<std::uint64_t> f2_30{1, 16, 30, 8, 0, 0, 0, 0, 0, 0};
    const std::vector<std::uint64_t> l2_30{2, 13, 23, 13, 4};
    c.require(dsf::check_unimodal(f2_7), "published F2[7,N] row unimodal");
    c.require(dsf::check_unimodal(f2_30), "published f2[30,j] row unimodal");
    c.require(dsf::check_unimodal(l2_30), "published l2[30,j] row unimodal");
    return c.ok;
}

// Performance smoke at n = 100 across the random grid.
bool criterion9(Check& c) {
    const double p_l_grid[] = {0.01, 0.03, 0.06, 0.1, 0.2, 0.3, 0.4, 0.49};
    const double p_h_grid[] = {0.05, 0.2, 0.35, 0.5, 0.65, 0.8, 0.95};
    constexpr int kPerCell = 100;
    constexpr double kFastSeconds = 0.1;

    std::uint64_t seed = 20240801;
    int total = 0;
    int fast = 0;
    for (double pl : p_l_grid) {
        for (double ph : p_h_grid) {
            if (ph <= pl + 0.01)
                continue;
            dsf::RandomSpec spec{100, pl, ph, kPerCell, seed++};
            const auto instances = dsf::generate_random_sequences(spec);
            for (const auto& d : instances) {
                dsf::SearchOptions opts;
                opts.deadline = dsf::Deadline::after(std::chrono::seconds(5));
                const auto start = std::chrono::steady_clock::now();
                try {
                    dsf::forcibly_biconnected(d, opts);
                } catch (const dsf::TimedOut&) {
                }
                const std::chrono::duration<double> elapsed =
                    std::chrono::steady_clock::now() - start;
                ++total;
                if (elapsed.count() < kFastSeconds)
                    ++fast;
            }
        }
    }
    const double fraction = static_cast<double>(fast) / static_cast<double>(total);
    c.detail << "  " << fast << "/" << total << " instances decided in < 0.1 s\n";
    c.require(fraction >= 0.95, "at least 95% of n=100 instances decided in < 0.1 s");
    return c.ok;
}

// Sequences with minimum degree >= n/2 never reach the cut search.
bool criterion10(Check& c) {
    std::mt19937_64 rng(0xD5F);
    std::uniform_int_distribution<int> pick_n(4, 60);
    int produced = 0;
    std::uint64_t entered = 0;
    while (produced < 1000) {
        const int n = pick_n(rng);
        const int lo = (n + 1) / 2;
        std::uniform_int_distribution<int> draw(lo, n - 1);
        std::vector<int> terms(static_cast<std::size_t>(n));
        long long sum = 0;
        for (auto& t : terms) {
            t = draw(rng);
            sum += t;
        }
        if (sum % 2 != 0) {
            bool fixed = false;
            for (auto& t : terms)
                if (t > lo) {
                    --t;
                    fixed = true;
                    break;
                }
            if (!fixed)
                continue;
        }
        std::sort(terms.begin(), terms.end(), std::greater<int>());
        if (!dsf::is_graphical(terms))
            continue;
        const auto d = DegreeSequence::from_sorted_unchecked(terms);
        ++produced;

        dsf::SearchCounters counters;
        dsf::SearchOptions opts;
        opts.counters = &counters;
        const auto result = dsf::forcibly_biconnected(d, opts);
        if (!result.forcibly || counters.cut_searches != 0) {
            c.detail << "  " << dsf::to_text(d) << ": forcibly=" << result.forcibly
                     << " cut_searches=" << counters.cut_searches << "\n";
            entered += counters.cut_searches;
            c.ok = false;
        }
    }
    c.equal(entered, std::uint64_t{0}, "cut searches entered");
    return c.ok;
}

struct Criterion {
    int id;
    const char* name;
    bool (*run)(Check&);
};

const Criterion kCriteria[] = {
    {1, "Table 3 reproduction, n = 4..12", criterion1},
    {2, "Table 4 reproduction, C2/F2[7,N]", criterion2},
    {3, "Table 6 reproduction, N = 10..50", criterion3},
    {4, "Tables 7-8 reproduction, partitions of 30", criterion4},
    {5, "extremal largest terms M2/M and m2/m", criterion5},
    {6, "oracle equivalence sweep, n = 4..8", criterion6},
    {7, "cut witness soundness sweep, n = 4..8", criterion7},
    {8, "unimodality checks", criterion8},
    {9, "performance smoke at n = 100", criterion9},
    {10, "degree >= n/2 shortcut consistency", criterion10},
};

} // namespace

int main(int argc, char** argv) {
    std::set<int> selected;
    for (int i = 1; i < argc; ++i)
        selected.insert(std::atoi(argv[i]));

    int failures = 0;
    for (const auto& criterion : kCriteria) {
        if (!selected.empty() && !selected.count(criterion.id))
            continue;
        Check check;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = criterion.run(check);
        } catch (const std::exception& e) {
            check.detail << "  exception: " << e.what() << "\n";
        }
        const std::chrono::duration<double> elapsed =
            std::chrono::steady_clock::now() - start;
        std::printf("[%s] criterion %d: %s (%.1fs)\n", ok ? "PASS" : "FAIL", criterion.id,
                    criterion.name, elapsed.count());
        if (!ok) {
            ++failures;
            std::fputs(check.detail.str().c_str(), stdout);
        }
    }
    return failures;
}
