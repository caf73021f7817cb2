#include "dsf/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "dsf/errors.hpp"
#include "dsf/version.hpp"

namespace dsf {

namespace {

// Non-increasing extension of a fixed largest term, with two prunes: the
// Erdos-Gallai inequality at the current prefix can already be beyond any
// completion, and once terms hit 1 the remaining sum is forced.
struct SequenceGenerator {
    int n = 0;
    const std::function<bool(const DegreeSequence&)>* visit = nullptr;
    std::vector<int> cur;
    long long sum = 0;

    bool run(int largest) {
        if (largest > n - 1)
            return true;
        cur.clear();
        cur.reserve(static_cast<std::size_t>(n));
        cur.push_back(largest);
        sum = largest;
        return extend();
    }

    bool feasible() const {
        const int k = static_cast<int>(cur.size());
        const int last = cur.back();
        const int rest = n - k;
        if (last == 1 && (sum + rest) % 2 != 0)
            return false;
        const long long cap = static_cast<long long>(k) * (k - 1) +
                              static_cast<long long>(rest) * std::min(last, k);
        return sum <= cap;
    }

    bool extend() {
        if (static_cast<int>(cur.size()) == n) {
            if (sum % 2 == 0 && is_graphical(cur))
                return (*visit)(DegreeSequence::from_sorted_unchecked(cur));
            return true;
        }
        for (int v = cur.back(); v >= 1; --v) {
            cur.push_back(v);
            sum += v;
            bool keep_going = true;
            if (feasible())
                keep_going = extend();
            cur.pop_back();
            sum -= v;
            if (!keep_going)
                return false;
        }
        return true;
    }
};

// Partitions of a fixed even total in non-increasing part order. A prefix
// dies when the largest part can no longer fit under (final count - 1) or
// the Erdos-Gallai bound at the prefix is already exceeded.
struct PartitionGenerator {
    long long total = 0;
    const std::function<bool(const DegreeSequence&)>* visit = nullptr;
    std::vector<int> cur;

    bool run(int largest) {
        if (largest > total - largest) // need at least `largest` further parts
            return true;
        cur.clear();
        cur.push_back(largest);
        return extend(total - largest);
    }

    bool extend(long long remaining) {
        if (remaining == 0) {
            if (is_graphical(cur))
                return (*visit)(DegreeSequence::from_sorted_unchecked(cur));
            return true;
        }
        const int first = cur.front();
        const int max_part = static_cast<int>(std::min<long long>(cur.back(), remaining));
        for (int v = max_part; v >= 1; --v) {
            const long long rest = remaining - v;
            const long long k = static_cast<long long>(cur.size()) + 1;
            if (k + rest < first + 1)
                continue; // not enough parts left for d1 <= count - 1
            if (total - rest > k * (k - 1) + rest)
                continue; // Erdos-Gallai bound at this prefix
            cur.push_back(v);
            const bool keep_going = extend(rest);
            cur.pop_back();
            if (!keep_going)
                return false;
        }
        return true;
    }
};

long long key_of(const DegreeSequence& d, TableKind kind) {
    switch (kind) {
    case TableKind::totals:
        return 0;
    case TableKind::by_degree_sum:
        return d.sum();
    case TableKind::by_num_parts:
        return d.n();
    case TableKind::by_largest_part:
        return d.largest();
    }
    return 0;
}

void validate_kind(EnumMode mode, TableKind kind) {
    if (kind == TableKind::by_degree_sum && mode != EnumMode::sequences)
        throw std::invalid_argument("by_degree_sum applies to sequences only");
    if (kind == TableKind::by_num_parts && mode != EnumMode::partitions)
        throw std::invalid_argument("by_num_parts applies to partitions only");
}

// Smallest j with j(j-1) >= total; a graphical partition needs at least
// that many parts.
long long min_parts_bound(long long total) {
    long long j = 1;
    while (j * (j - 1) < total)
        ++j;
    return j;
}

bool filter_is_biconnected(SequenceFilter f) {
    return f == SequenceFilter::potentially_biconnected ||
           f == SequenceFilter::forcibly_biconnected;
}

// Itemized tables carry the whole contiguous feasible key range so that
// leading/trailing zeros are explicit (the presentation the count tables
// use). Totals are left as a single entry.
void finalize_keys(CountTable& table) {
    if (table.kind == TableKind::totals) {
        table.counts.try_emplace(0, 0);
        return;
    }
    long long lo = 0;
    long long hi = 0;
    long long step = 1;
    const long long p = table.fixed_parameter;
    switch (table.kind) {
    case TableKind::by_degree_sum: {
        step = 2;
        hi = p * (p - 1);
        if (table.filter == SequenceFilter::all_zero_free)
            lo = p + (p % 2 != 0 ? 1 : 0);
        else if (table.filter == SequenceFilter::forcibly_connected)
            lo = 2 * (p - 1);
        else
            lo = 2 * p; // smallest potentially biconnected degree sum
        break;
    }
    case TableKind::by_num_parts: {
        lo = min_parts_bound(p);
        if (table.filter == SequenceFilter::all_zero_free)
            hi = p;
        else if (table.filter == SequenceFilter::forcibly_connected)
            hi = p / 2 + 1;
        else
            hi = p / 2; // the all-2s partition is the longest biconnected one
        break;
    }
    case TableKind::by_largest_part: {
        if (table.counts.empty())
            return;
        lo = table.counts.begin()->first; // minimum largest term: no closed form
        if (table.mode == EnumMode::sequences)
            hi = p - 1;
        else
            hi = filter_is_biconnected(table.filter) ? (p + 2) / 4 : p / 2;
        hi = std::max(hi, table.counts.rbegin()->first);
        break;
    }
    case TableKind::totals:
        return;
    }
    if (lo > hi)
        return;
    for (long long k = lo; k <= hi; k += step)
        table.counts.try_emplace(k, 0);
}

constexpr std::size_t filter_index(SequenceFilter f) { return static_cast<std::size_t>(f); }

struct FilterNeed {
    bool pot_bi = false;
    bool forc_conn = false;
    bool forc_bi = false;
};

FilterNeed need_for(SequenceFilter f) {
    switch (f) {
    case SequenceFilter::all_zero_free:
        return {};
    case SequenceFilter::potentially_biconnected:
        return {true, false, false};
    case SequenceFilter::forcibly_connected:
        return {false, true, false};
    case SequenceFilter::forcibly_biconnected:
        return {true, false, true};
    }
    return {};
}

using CountMaps = std::array<std::map<long long, std::uint64_t>, 4>;

void tally(CountMaps& maps, const DegreeSequence& d, TableKind kind, const FilterNeed& need,
           const SearchOptions& search) {
    const long long key = key_of(d, kind);
    ++maps[filter_index(SequenceFilter::all_zero_free)][key];

    bool pb = false;
    if (need.pot_bi || need.forc_bi)
        pb = potentially_biconnected(d);
    if (need.pot_bi && pb)
        ++maps[filter_index(SequenceFilter::potentially_biconnected)][key];

    bool fc = false;
    if (need.forc_conn || (need.forc_bi && pb))
        fc = forcibly_connected(d, search).forcibly;
    if (need.forc_conn && fc)
        ++maps[filter_index(SequenceFilter::forcibly_connected)][key];

    if (need.forc_bi && pb && fc && forcibly_biconnected_after_gates(d, search).forcibly)
        ++maps[filter_index(SequenceFilter::forcibly_biconnected)][key];
}

CountMaps count_maps(long long parameter, EnumMode mode, TableKind kind,
                     const FilterNeed& need, const CountOptions& opts) {
    validate_kind(mode, kind);
    if (mode == EnumMode::partitions && parameter % 2 != 0)
        throw OddSum{parameter};

    const int max_largest = mode == EnumMode::sequences
                                ? static_cast<int>(parameter) - 1
                                : static_cast<int>(parameter / 2);

    const auto run_shard = [&](int largest, CountMaps& maps) {
        const auto handle = [&](const DegreeSequence& d) {
            tally(maps, d, kind, need, opts.search);
            return true;
        };
        if (mode == EnumMode::sequences)
            for_each_sequence_with_largest_term(static_cast<int>(parameter), largest, handle);
        else
            for_each_partition_with_largest_part(parameter, largest, handle);
    };

    CountMaps result;
    const int threads = std::min(opts.threads, max_largest);
    if (threads <= 1) {
        for (int largest = 1; largest <= max_largest; ++largest)
            run_shard(largest, result);
        return result;
    }

    std::atomic<int> next{1};
    std::vector<CountMaps> partials(static_cast<std::size_t>(threads));
    std::vector<std::thread> pool;
    std::mutex error_mutex;
    std::exception_ptr error;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (;;) {
                    const int largest = next.fetch_add(1);
                    if (largest > max_largest)
                        return;
                    run_shard(largest, partials[static_cast<std::size_t>(t)]);
                }
            } catch (...) {
                const std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
            }
        });
    }
    for (auto& th : pool)
        th.join();
    if (error)
        std::rethrow_exception(error);
    for (const auto& partial : partials)
        for (std::size_t f = 0; f < partial.size(); ++f)
            for (const auto& [key, count] : partial[f])
                result[f][key] += count;
    return result;
}

CountTable make_table(EnumMode mode, SequenceFilter filter, TableKind kind,
                      long long parameter, std::map<long long, std::uint64_t> counts) {
    CountTable table;
    table.mode = mode;
    table.filter = filter;
    table.kind = kind;
    table.fixed_parameter = parameter;
    table.counts = std::move(counts);
    finalize_keys(table);
    return table;
}

} // namespace

std::string to_string(EnumMode mode) {
    return mode == EnumMode::sequences ? "sequences" : "partitions";
}

std::string to_string(SequenceFilter filter) {
    switch (filter) {
    case SequenceFilter::all_zero_free:
        return "all_zero_free";
    case SequenceFilter::potentially_biconnected:
        return "potentially_biconnected";
    case SequenceFilter::forcibly_connected:
        return "forcibly_connected";
    case SequenceFilter::forcibly_biconnected:
        return "forcibly_biconnected";
    }
    return "unknown";
}

std::string to_string(TableKind kind) {
    switch (kind) {
    case TableKind::totals:
        return "totals";
    case TableKind::by_degree_sum:
        return "by_degree_sum";
    case TableKind::by_num_parts:
        return "by_num_parts";
    case TableKind::by_largest_part:
        return "by_largest_part";
    }
    return "unknown";
}

std::optional<EnumMode> parse_enum_mode(std::string_view text) {
    if (text == "sequences")
        return EnumMode::sequences;
    if (text == "partitions")
        return EnumMode::partitions;
    return std::nullopt;
}

std::optional<SequenceFilter> parse_filter(std::string_view text) {
    if (text == "all_zero_free")
        return SequenceFilter::all_zero_free;
    if (text == "potentially_biconnected")
        return SequenceFilter::potentially_biconnected;
    if (text == "forcibly_connected")
        return SequenceFilter::forcibly_connected;
    if (text == "forcibly_biconnected")
        return SequenceFilter::forcibly_biconnected;
    return std::nullopt;
}

std::optional<TableKind> parse_table_kind(std::string_view text) {
    if (text == "totals")
        return TableKind::totals;
    if (text == "by_degree_sum")
        return TableKind::by_degree_sum;
    if (text == "by_num_parts")
        return TableKind::by_num_parts;
    if (text == "by_largest_part")
        return TableKind::by_largest_part;
    return std::nullopt;
}

std::uint64_t CountTable::total() const {
    std::uint64_t sum = 0;
    for (const auto& [key, count] : counts)
        sum += count;
    return sum;
}

std::vector<std::uint64_t> CountTable::values_in_key_order() const {
    std::vector<std::uint64_t> out;
    out.reserve(counts.size());
    for (const auto& [key, count] : counts)
        out.push_back(count);
    return out;
}

bool for_each_sequence_with_largest_term(int n, int largest,
                                         const std::function<bool(const DegreeSequence&)>& visit) {
    if (n < 1 || largest < 1)
        return true;
    SequenceGenerator gen;
    gen.n = n;
    gen.visit = &visit;
    return gen.run(largest);
}

bool for_each_zero_free_graphical_sequence(
    int n, const std::function<bool(const DegreeSequence&)>& visit) {
    for (int largest = 1; largest <= n - 1; ++largest)
        if (!for_each_sequence_with_largest_term(n, largest, visit))
            return false;
    return true;
}

bool for_each_partition_with_largest_part(long long total, int largest,
                                          const std::function<bool(const DegreeSequence&)>& visit) {
    if (total % 2 != 0)
        throw OddSum{total};
    if (total < 2 || largest < 1 || largest > total)
        return true;
    PartitionGenerator gen;
    gen.total = total;
    gen.visit = &visit;
    return gen.run(largest);
}

bool for_each_graphical_partition(long long total,
                                  const std::function<bool(const DegreeSequence&)>& visit) {
    if (total % 2 != 0)
        throw OddSum{total};
    for (int largest = 1; largest <= total / 2; ++largest)
        if (!for_each_partition_with_largest_part(total, largest, visit))
            return false;
    return true;
}

bool passes_filter(const DegreeSequence& d, SequenceFilter filter, const SearchOptions& opts) {
    switch (filter) {
    case SequenceFilter::all_zero_free:
        return d.smallest() >= 1 && is_graphical(d);
    case SequenceFilter::potentially_biconnected:
        return potentially_biconnected(d);
    case SequenceFilter::forcibly_connected:
        return forcibly_connected(d, opts).forcibly;
    case SequenceFilter::forcibly_biconnected:
        return potentially_biconnected(d) && forcibly_connected(d, opts).forcibly &&
               forcibly_biconnected_after_gates(d, opts).forcibly;
    }
    return false;
}

CountTable count_filtered(long long parameter, EnumMode mode, SequenceFilter filter,
                          TableKind kind, const CountOptions& opts) {
    auto maps = count_maps(parameter, mode, kind, need_for(filter), opts);
    return make_table(mode, filter, kind, parameter, std::move(maps[filter_index(filter)]));
}

std::array<CountTable, 4> count_all_filters(long long parameter, EnumMode mode, TableKind kind,
                                            const CountOptions& opts) {
    FilterNeed need{true, true, true};
    auto maps = count_maps(parameter, mode, kind, need, opts);
    std::array<CountTable, 4> tables;
    for (std::size_t f = 0; f < tables.size(); ++f)
        tables[f] = make_table(mode, static_cast<SequenceFilter>(f), kind, parameter,
                               std::move(maps[f]));
    return tables;
}

ExtremalReport extremal_largest_term(long long parameter, EnumMode mode,
                                     const SearchOptions& opts) {
    const int cap = mode == EnumMode::sequences ? static_cast<int>(parameter) - 1
                                                : static_cast<int>(parameter / 2);
    const auto member_exists = [&](int largest, SequenceFilter filter) {
        bool hit = false;
        const auto probe = [&](const DegreeSequence& d) {
            if (passes_filter(d, filter, opts)) {
                hit = true;
                return false;
            }
            return true;
        };
        if (mode == EnumMode::sequences)
            for_each_sequence_with_largest_term(static_cast<int>(parameter), largest, probe);
        else
            for_each_partition_with_largest_part(parameter, largest, probe);
        return hit;
    };

    ExtremalReport report;
    report.mode = mode;
    report.parameter = parameter;
    int min_connected = -1;
    for (int largest = 1; largest <= cap; ++largest)
        if (member_exists(largest, SequenceFilter::forcibly_connected)) {
            min_connected = largest;
            break;
        }
    if (min_connected < 0)
        throw NoMember{"no forcibly connected " + to_string(mode) + " member at parameter " +
                       std::to_string(parameter)};
    report.value_forcibly_connected = min_connected;
    for (int largest = min_connected; largest <= cap; ++largest)
        if (member_exists(largest, SequenceFilter::forcibly_biconnected)) {
            report.value_forcibly_biconnected = largest;
            break;
        }
    return report;
}

bool check_unimodal(std::span<const std::uint64_t> values) {
    bool falling = false;
    bool seen = false;
    std::uint64_t prev = 0;
    for (std::uint64_t v : values) {
        if (v == 0)
            continue;
        if (seen) {
            if (v > prev && falling)
                return false;
            if (v < prev)
                falling = true;
        }
        prev = v;
        seen = true;
    }
    return true;
}

std::vector<RatioRow> ratio_report(std::span<const long long> parameters, EnumMode mode,
                                   const CountOptions& opts) {
    std::vector<RatioRow> rows;
    rows.reserve(parameters.size());
    for (long long p : parameters) {
        auto tables = count_all_filters(p, mode, TableKind::totals, opts);
        RatioRow row;
        row.parameter = p;
        row.forcibly_biconnected =
            tables[filter_index(SequenceFilter::forcibly_biconnected)].total();
        row.forcibly_connected = tables[filter_index(SequenceFilter::forcibly_connected)].total();
        row.zero_free_total = tables[filter_index(SequenceFilter::all_zero_free)].total();
        rows.push_back(row);
    }
    return rows;
}

std::string format_ratio(std::uint64_t numerator, std::uint64_t denominator) {
    if (denominator == 0)
        return "-";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f",
                  static_cast<double>(numerator) / static_cast<double>(denominator));
    return buf;
}

std::filesystem::path count_table_cache_path(const std::filesystem::path& dir,
                                             long long parameter, EnumMode mode,
                                             SequenceFilter filter, TableKind kind) {
    std::string name = to_string(mode) + "_" + to_string(filter) + "_" +
                       std::to_string(parameter) + "_" + to_string(kind) + "_v" + kVersion +
                       ".tsv";
    return dir / name;
}

void save_count_table(const CountTable& table, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    const auto path = count_table_cache_path(dir, table.fixed_parameter, table.mode,
                                             table.filter, table.kind);
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write cache file: " + path.string());
    out << "# " << to_string(table.mode) << ' ' << to_string(table.filter) << ' '
        << table.fixed_parameter << '\n';
    for (const auto& [key, count] : table.counts) {
        if (table.kind == TableKind::totals)
            out << "total\t" << count << '\n';
        else
            out << key << '\t' << count << '\n';
    }
}

std::optional<CountTable> load_count_table(const std::filesystem::path& dir,
                                           long long parameter, EnumMode mode,
                                           SequenceFilter filter, TableKind kind) {
    const auto path = count_table_cache_path(dir, parameter, mode, filter, kind);
    std::ifstream in(path);
    if (!in)
        return std::nullopt;
    std::string header;
    if (!std::getline(in, header))
        return std::nullopt;
    std::istringstream hs(header);
    std::string hash, mode_text, filter_text;
    long long param = 0;
    if (!(hs >> hash >> mode_text >> filter_text >> param) || hash != "#" ||
        mode_text != to_string(mode) || filter_text != to_string(filter) || param != parameter)
        return std::nullopt;

    CountTable table;
    table.mode = mode;
    table.filter = filter;
    table.kind = kind;
    table.fixed_parameter = parameter;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream ls(line);
        std::string key_text;
        std::uint64_t count = 0;
        if (!(ls >> key_text >> count))
            return std::nullopt;
        const long long key = key_text == "total" ? 0 : std::stoll(key_text);
        table.counts[key] = count;
    }
    return table;
}

} // namespace dsf
