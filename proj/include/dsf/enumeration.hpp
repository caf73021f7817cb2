#ifndef DSF_ENUMERATION_HPP
#define DSF_ENUMERATION_HPP

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dsf/connectivity.hpp"
#include "dsf/degseq.hpp"

namespace dsf {

enum class EnumMode { sequences, partitions };
enum class SequenceFilter {
    all_zero_free,
    potentially_biconnected,
    forcibly_connected,
    forcibly_biconnected
};
enum class TableKind { totals, by_degree_sum, by_num_parts, by_largest_part };

std::string to_string(EnumMode mode);
std::string to_string(SequenceFilter filter);
std::string to_string(TableKind kind);
std::optional<EnumMode> parse_enum_mode(std::string_view text);
std::optional<SequenceFilter> parse_filter(std::string_view text);
std::optional<TableKind> parse_table_kind(std::string_view text);

// Exact enumeration counts keyed by degree sum, part count or largest part
// (kind totals uses the single key 0). Itemized tables hold the full
// contiguous feasible key range, zeros included.
struct CountTable {
    EnumMode mode = EnumMode::sequences;
    SequenceFilter filter = SequenceFilter::all_zero_free;
    TableKind kind = TableKind::totals;
    long long fixed_parameter = 0;
    std::map<long long, std::uint64_t> counts;

    std::uint64_t total() const;
    std::vector<std::uint64_t> values_in_key_order() const;
};

// Every zero-free graphical degree sequence of length n, each exactly once,
// grouped by largest term ascending. Visitor returns false to stop early;
// so does the function.
bool for_each_zero_free_graphical_sequence(int n,
                                           const std::function<bool(const DegreeSequence&)>& visit);
bool for_each_sequence_with_largest_term(int n, int largest,
                                         const std::function<bool(const DegreeSequence&)>& visit);

// Every graphical partition of the even integer total, grouped by largest
// part ascending. Throws OddSum.
bool for_each_graphical_partition(long long total,
                                  const std::function<bool(const DegreeSequence&)>& visit);
bool for_each_partition_with_largest_part(long long total, int largest,
                                          const std::function<bool(const DegreeSequence&)>& visit);

struct CountOptions {
    int threads = 1; // > 1 shards the enumeration by largest term
    SearchOptions search{};
};

bool passes_filter(const DegreeSequence& d, SequenceFilter filter,
                   const SearchOptions& opts = {});

CountTable count_filtered(long long parameter, EnumMode mode, SequenceFilter filter,
                          TableKind kind, const CountOptions& opts = {});

// One enumeration pass producing all four filter tables at once; index with
// static_cast<std::size_t>(SequenceFilter).
std::array<CountTable, 4> count_all_filters(long long parameter, EnumMode mode, TableKind kind,
                                            const CountOptions& opts = {});

// Minimum largest term over forcibly connected resp. forcibly biconnected
// members. Searches ascending largest terms, enumerating only candidates
// whose largest term is exact. Throws NoMember when not even a forcibly
// connected member exists; the biconnected value alone may be absent.
struct ExtremalReport {
    EnumMode mode = EnumMode::sequences;
    long long parameter = 0;
    int value_forcibly_connected = 0;
    std::optional<int> value_forcibly_biconnected;
};

ExtremalReport extremal_largest_term(long long parameter, EnumMode mode,
                                     const SearchOptions& opts = {});

// True iff the nonzero entries rise to a single peak then fall (plateaus
// allowed); zeros are skipped.
bool check_unimodal(std::span<const std::uint64_t> values);

struct RatioRow {
    long long parameter = 0;
    std::uint64_t forcibly_biconnected = 0;
    std::uint64_t forcibly_connected = 0;
    std::uint64_t zero_free_total = 0;
};

std::vector<RatioRow> ratio_report(std::span<const long long> parameters, EnumMode mode,
                                   const CountOptions& opts = {});

// Fixed-point 6-decimal rendering used by the ratio tables.
std::string format_ratio(std::uint64_t numerator, std::uint64_t denominator);

// Results cache: one tab-separated file per table, named by
// (mode, filter, parameter, kind, code version).
std::filesystem::path count_table_cache_path(const std::filesystem::path& dir,
                                             long long parameter, EnumMode mode,
                                             SequenceFilter filter, TableKind kind);
void save_count_table(const CountTable& table, const std::filesystem::path& dir);
std::optional<CountTable> load_count_table(const std::filesystem::path& dir,
                                           long long parameter, EnumMode mode,
                                           SequenceFilter filter, TableKind kind);

} // namespace dsf

#endif // DSF_ENUMERATION_HPP
