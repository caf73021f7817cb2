#ifndef DSF_ORACLE_HPP
#define DSF_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dsf/degseq.hpp"

namespace dsf {

struct CutWitness; // connectivity.hpp

// A labeled simple graph realizing a degree sequence. Vertex i carries the
// i-th term of the (non-increasing) target sequence.
struct Realization {
    int n = 0;
    std::vector<std::pair<int, int>> edges; // u < v, lexicographically sorted
    std::vector<int> degree_of;

    bool has_edge(int u, int v) const;
};

inline constexpr int kDefaultOracleBound = 10;

// Enumerates every labeled realization of d exactly once by repeatedly
// saturating the vertex of largest residual degree. The visitor returns
// false to stop; the function returns false iff stopped early.
// Throws OracleBoundExceeded when d.n() > max_n.
bool for_each_realization(const DegreeSequence& d,
                          const std::function<bool(const Realization&)>& visit,
                          int max_n = kDefaultOracleBound);

std::optional<Realization> first_realization(const DegreeSequence& d,
                                             int max_n = kDefaultOracleBound);

std::uint64_t count_realizations(const DegreeSequence& d, int max_n = kDefaultOracleBound);

bool is_connected(const Realization& g);

// Connected, at least 3 vertices, and no articulation vertex.
bool is_biconnected(const Realization& g);

enum class GraphProperty { connected, biconnected };
enum class QuantifierMode { forcibly, potentially };

// forcibly: every realization has the property; potentially: at least one
// does. Short-circuits on the first counterexample / witness.
// Throws NotGraphical and OracleBoundExceeded.
bool oracle_verdict(const DegreeSequence& d, GraphProperty property, QuantifierMode mode,
                    int max_n = kDefaultOracleBound);

// Builds a realization of the witnessed sequence by gluing realizations of
// seq_low and seq_high at a shared vertex of degree cut_degree. Returns
// nullopt if either side has no realization (a witness invariant violation).
std::optional<Realization> build_cut_realization(const CutWitness& witness,
                                                 int max_n = kDefaultOracleBound);

// One "u v" pair per line, 0-based labels.
std::string to_edge_list(const Realization& g);

} // namespace dsf

#endif // DSF_ORACLE_HPP
