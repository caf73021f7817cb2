#include "dsf/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

#include "dsf/connectivity.hpp"
#include "dsf/errors.hpp"

namespace dsf {

namespace {

using AdjMask = std::uint32_t;

std::vector<AdjMask> adjacency_masks(const Realization& g) {
    std::vector<AdjMask> adj(static_cast<std::size_t>(g.n), 0);
    for (auto [u, v] : g.edges) {
        adj[static_cast<std::size_t>(u)] |= AdjMask{1} << v;
        adj[static_cast<std::size_t>(v)] |= AdjMask{1} << u;
    }
    return adj;
}

// Connectivity of the vertices in `vertices` (a bitmask) under adj.
bool mask_connected(const std::vector<AdjMask>& adj, AdjMask vertices) {
    if (vertices == 0)
        return true;
    const int start = std::countr_zero(vertices);
    AdjMask seen = AdjMask{1} << start;
    AdjMask frontier = seen;
    while (frontier != 0) {
        AdjMask next = 0;
        AdjMask f = frontier;
        while (f != 0) {
            const int u = std::countr_zero(f);
            f &= f - 1;
            next |= adj[static_cast<std::size_t>(u)] & vertices;
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == vertices;
}

struct Enumerator {
    int n;
    std::vector<int> residual;
    std::vector<AdjMask> adj;
    const std::function<bool(const Realization&)>* visit;
    std::vector<int> scratch;

    bool emit() {
        Realization g;
        g.n = n;
        g.degree_of.reserve(static_cast<std::size_t>(n));
        for (int u = 0; u < n; ++u) {
            g.degree_of.push_back(std::popcount(adj[static_cast<std::size_t>(u)]));
            for (int v = u + 1; v < n; ++v)
                if (adj[static_cast<std::size_t>(u)] >> v & 1)
                    g.edges.emplace_back(u, v);
        }
        return (*visit)(g);
    }

    bool residual_feasible() {
        scratch.assign(residual.begin(), residual.end());
        std::sort(scratch.begin(), scratch.end(), std::greater<int>());
        return is_graphical(scratch);
    }

    // Assign all remaining edges of the pivot by choosing `need` neighbors
    // from candidates[from..] in index order, then recurse.
    bool choose(int pivot, const std::vector<int>& candidates, std::size_t from, int need) {
        if (need == 0)
            return run();
        if (candidates.size() - from < static_cast<std::size_t>(need))
            return true;
        for (std::size_t i = from; i + static_cast<std::size_t>(need) <= candidates.size();
             ++i) {
            const int u = candidates[i];
            adj[static_cast<std::size_t>(pivot)] |= AdjMask{1} << u;
            adj[static_cast<std::size_t>(u)] |= AdjMask{1} << pivot;
            --residual[static_cast<std::size_t>(u)];
            const bool keep_going = choose(pivot, candidates, i + 1, need - 1);
            ++residual[static_cast<std::size_t>(u)];
            adj[static_cast<std::size_t>(pivot)] &= ~(AdjMask{1} << u);
            adj[static_cast<std::size_t>(u)] &= ~(AdjMask{1} << pivot);
            if (!keep_going)
                return false;
        }
        return true;
    }

    bool run() {
        int pivot = -1;
        for (int u = 0; u < n; ++u)
            if (residual[static_cast<std::size_t>(u)] > 0 &&
                (pivot < 0 || residual[static_cast<std::size_t>(u)] >
                                  residual[static_cast<std::size_t>(pivot)]))
                pivot = u;
        if (pivot < 0)
            return emit();
        if (!residual_feasible())
            return true;

        // Any vertex still unsaturated cannot already be adjacent to the
        // pivot: every placed edge has its own (saturated) pivot endpoint.
        std::vector<int> candidates;
        candidates.reserve(static_cast<std::size_t>(n));
        for (int u = 0; u < n; ++u)
            if (u != pivot && residual[static_cast<std::size_t>(u)] > 0) {
                assert((adj[static_cast<std::size_t>(pivot)] >> u & 1) == 0);
                candidates.push_back(u);
            }

        const int need = residual[static_cast<std::size_t>(pivot)];
        residual[static_cast<std::size_t>(pivot)] = 0;
        const bool keep_going = choose(pivot, candidates, 0, need);
        residual[static_cast<std::size_t>(pivot)] = need;
        return keep_going;
    }
};

} // namespace

bool Realization::has_edge(int u, int v) const {
    if (u > v)
        std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

bool for_each_realization(const DegreeSequence& d,
                          const std::function<bool(const Realization&)>& visit, int max_n) {
    if (d.n() > max_n)
        throw OracleBoundExceeded{d.n(), max_n};
    if (d.sum() % 2 != 0)
        return true;
    Enumerator e;
    e.n = d.n();
    e.residual = d.terms();
    e.adj.assign(static_cast<std::size_t>(d.n()), 0);
    e.visit = &visit;
    return e.run();
}

std::optional<Realization> first_realization(const DegreeSequence& d, int max_n) {
    std::optional<Realization> found;
    for_each_realization(
        d,
        [&](const Realization& g) {
            found = g;
            return false;
        },
        max_n);
    return found;
}

std::uint64_t count_realizations(const DegreeSequence& d, int max_n) {
    std::uint64_t count = 0;
    for_each_realization(
        d,
        [&](const Realization&) {
            ++count;
            return true;
        },
        max_n);
    return count;
}

bool is_connected(const Realization& g) {
    if (g.n <= 1)
        return true;
    const auto adj = adjacency_masks(g);
    const AdjMask all = (AdjMask{1} << g.n) - 1;
    return mask_connected(adj, all);
}

bool is_biconnected(const Realization& g) {
    if (g.n < 3)
        return false;
    const auto adj = adjacency_masks(g);
    const AdjMask all = (AdjMask{1} << g.n) - 1;
    if (!mask_connected(adj, all))
        return false;
    for (int v = 0; v < g.n; ++v)
        if (!mask_connected(adj, all & ~(AdjMask{1} << v)))
            return false;
    return true;
}

bool oracle_verdict(const DegreeSequence& d, GraphProperty property, QuantifierMode mode,
                    int max_n) {
    if (d.n() > max_n)
        throw OracleBoundExceeded{d.n(), max_n};
    if (!is_graphical(d))
        throw NotGraphical{};
    const auto satisfies = [&](const Realization& g) {
        return property == GraphProperty::connected ? is_connected(g) : is_biconnected(g);
    };
    if (mode == QuantifierMode::forcibly) {
        bool all = true;
        for_each_realization(
            d,
            [&](const Realization& g) {
                if (!satisfies(g)) {
                    all = false;
                    return false;
                }
                return true;
            },
            max_n);
        return all;
    }
    bool any = false;
    for_each_realization(
        d,
        [&](const Realization& g) {
            if (satisfies(g)) {
                any = true;
                return false;
            }
            return true;
        },
        max_n);
    return any;
}

std::optional<Realization> build_cut_realization(const CutWitness& witness, int max_n) {
    const auto low = first_realization(witness.seq_low, max_n);
    const auto high = first_realization(witness.seq_high, max_n);
    if (!low || !high)
        return std::nullopt;

    // The shared cut vertex is a degree-d_low vertex of the low side merged
    // with a degree-d_high vertex of the high side.
    const auto find_vertex_with_degree = [](const Realization& g, int degree) {
        for (int v = 0; v < g.n; ++v)
            if (g.degree_of[static_cast<std::size_t>(v)] == degree)
                return v;
        return -1;
    };
    const int a = find_vertex_with_degree(*low, witness.d_low);
    const int b = find_vertex_with_degree(*high, witness.d_high);
    if (a < 0 || b < 0)
        return std::nullopt;

    // Low-side vertices keep their labels except `a`, which becomes the
    // glued vertex placed after all other vertices of both sides.
    Realization g;
    g.n = low->n + high->n - 1;
    const int cut = g.n - 1;
    const auto low_label = [&](int v) { return v == a ? cut : (v < a ? v : v - 1); };
    const int low_others = low->n - 1;
    const auto high_label = [&](int v) {
        return v == b ? cut : low_others + (v < b ? v : v - 1);
    };
    for (auto [u, v] : low->edges) {
        int x = low_label(u), y = low_label(v);
        g.edges.emplace_back(std::min(x, y), std::max(x, y));
    }
    for (auto [u, v] : high->edges) {
        int x = high_label(u), y = high_label(v);
        g.edges.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.degree_of.assign(static_cast<std::size_t>(g.n), 0);
    for (auto [u, v] : g.edges) {
        ++g.degree_of[static_cast<std::size_t>(u)];
        ++g.degree_of[static_cast<std::size_t>(v)];
    }
    return g;
}

std::string to_edge_list(const Realization& g) {
    std::string out;
    for (auto [u, v] : g.edges) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

} // namespace dsf
