#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dsf/connectivity.hpp"
#include "dsf/degseq.hpp"
#include "dsf/enumeration.hpp"
#include "dsf/errors.hpp"
#include "dsf/oracle.hpp"
#include "dsf/random_gen.hpp"
#include "dsf/version.hpp"

namespace py = pybind11;

namespace {

dsf::DegreeSequence make_sequence(const std::vector<int>& terms) {
    return dsf::DegreeSequence::normalized(terms);
}

dsf::GraphProperty parse_property(const std::string& text) {
    if (text == "connected")
        return dsf::GraphProperty::connected;
    if (text == "biconnected")
        return dsf::GraphProperty::biconnected;
    throw std::invalid_argument("property must be 'connected' or 'biconnected'");
}

dsf::QuantifierMode parse_mode(const std::string& text) {
    if (text == "forcibly")
        return dsf::QuantifierMode::forcibly;
    if (text == "potentially")
        return dsf::QuantifierMode::potentially;
    throw std::invalid_argument("mode must be 'forcibly' or 'potentially'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Forcibly-biconnected degree sequence toolkit";
    m.attr("__version__") = dsf::kVersion;

    py::class_<dsf::SplitWitness>(m, "SplitWitness")
        .def_property_readonly("side_a",
                               [](const dsf::SplitWitness& w) { return w.side_a.terms(); })
        .def_property_readonly("side_b",
                               [](const dsf::SplitWitness& w) { return w.side_b.terms(); })
        .def("__repr__", [](const dsf::SplitWitness& w) {
            return "SplitWitness(" + dsf::to_text(w.side_a) + " | " + dsf::to_text(w.side_b) +
                   ")";
        });

    py::class_<dsf::CutWitness>(m, "CutWitness")
        .def_readonly("cut_degree", &dsf::CutWitness::cut_degree)
        .def_readonly("d_low", &dsf::CutWitness::d_low)
        .def_readonly("d_high", &dsf::CutWitness::d_high)
        .def_readonly("s", &dsf::CutWitness::s)
        .def_readonly("s_low", &dsf::CutWitness::s_low)
        .def_property_readonly("seq_low",
                               [](const dsf::CutWitness& w) { return w.seq_low.terms(); })
        .def_property_readonly("seq_high",
                               [](const dsf::CutWitness& w) { return w.seq_high.terms(); })
        .def("__repr__", [](const dsf::CutWitness& w) {
            return "CutWitness(cut_degree=" + std::to_string(w.cut_degree) +
                   ", d_low=" + std::to_string(w.d_low) + ", s=" + std::to_string(w.s) + ")";
        });

    m.def("normalize", [](const std::vector<int>& terms) { return make_sequence(terms).terms(); },
          py::arg("terms"), "Canonical non-increasing form; rejects zeros and negatives.");

    m.def("is_graphical", [](std::vector<int> terms) {
        std::sort(terms.begin(), terms.end(), std::greater<int>());
        return dsf::is_graphical(terms);
    }, py::arg("terms"), "Erdos-Gallai test; tolerates zero terms.");

    m.def("potentially_connected",
          [](const std::vector<int>& terms) { return dsf::potentially_connected(make_sequence(terms)); },
          py::arg("terms"));
    m.def("potentially_biconnected",
          [](const std::vector<int>& terms) { return dsf::potentially_biconnected(make_sequence(terms)); },
          py::arg("terms"));

    m.def("forcibly_connected", [](const std::vector<int>& terms) {
        auto result = dsf::forcibly_connected(make_sequence(terms));
        return py::make_tuple(result.forcibly,
                              result.witness ? py::cast(*result.witness) : py::none());
    }, py::arg("terms"), "Returns (verdict, split witness or None).");

    m.def("forcibly_biconnected", [](const std::vector<int>& terms) {
        auto result = dsf::forcibly_biconnected(make_sequence(terms));
        return py::make_tuple(result.forcibly, dsf::to_string(result.gate),
                              result.witness ? py::cast(*result.witness) : py::none());
    }, py::arg("terms"), "Returns (verdict, gate status, cut witness or None).");

    m.def("forcibly_biconnected_basic",
          [](const std::vector<int>& terms) { return dsf::forcibly_biconnected_basic(make_sequence(terms)); },
          py::arg("terms"));

    m.def("candidate_orders",
          [](const std::vector<int>& terms) { return dsf::candidate_orders(make_sequence(terms)).orders; },
          py::arg("terms"));

    m.def("find_cut_witnesses", [](const std::vector<int>& terms, std::optional<std::size_t> limit) {
        auto result = dsf::find_cut_witnesses(make_sequence(terms), limit);
        return py::make_tuple(dsf::to_string(result.gate), result.witnesses);
    }, py::arg("terms"), py::arg("limit") = py::none());

    m.def("ghh", [](const std::vector<int>& terms, int pick, const std::vector<int>& targets) {
        return dsf::ghh(make_sequence(terms), pick, targets);
    }, py::arg("terms"), py::arg("pick"), py::arg("targets"));

    m.def("multiset_combinations", [](const std::vector<int>& terms, int s) {
        return dsf::multiset_combinations(make_sequence(terms), s);
    }, py::arg("terms"), py::arg("s"));

    m.def("oracle_verdict", [](const std::vector<int>& terms, const std::string& property,
                               const std::string& mode, int bound) {
        return dsf::oracle_verdict(make_sequence(terms), parse_property(property),
                                   parse_mode(mode), bound);
    }, py::arg("terms"), py::arg("property"), py::arg("mode"),
       py::arg("bound") = dsf::kDefaultOracleBound);

    m.def("realization_count", [](const std::vector<int>& terms, int bound) {
        return dsf::count_realizations(make_sequence(terms), bound);
    }, py::arg("terms"), py::arg("bound") = dsf::kDefaultOracleBound);

    m.def("enum_sequences", [](int n) {
        std::vector<std::vector<int>> out;
        dsf::for_each_zero_free_graphical_sequence(n, [&](const dsf::DegreeSequence& d) {
            out.push_back(d.terms());
            return true;
        });
        return out;
    }, py::arg("n"), "All zero-free graphical degree sequences of length n.");

    m.def("enum_partitions", [](long long total) {
        std::vector<std::vector<int>> out;
        dsf::for_each_graphical_partition(total, [&](const dsf::DegreeSequence& d) {
            out.push_back(d.terms());
            return true;
        });
        return out;
    }, py::arg("total"), "All graphical partitions of an even total.");

    m.def("count_filtered", [](long long parameter, const std::string& mode,
                               const std::string& filter, const std::string& itemize,
                               int threads) {
        const auto m_ = dsf::parse_enum_mode(mode);
        const auto f_ = dsf::parse_filter(filter);
        const auto k_ = dsf::parse_table_kind(itemize);
        if (!m_ || !f_ || !k_)
            throw std::invalid_argument("bad mode/filter/itemize value");
        dsf::CountOptions opts;
        opts.threads = threads;
        const auto table = dsf::count_filtered(parameter, *m_, *f_, *k_, opts);
        std::map<long long, std::uint64_t> counts(table.counts.begin(), table.counts.end());
        return counts;
    }, py::arg("parameter"), py::arg("mode"), py::arg("filter") = "forcibly_biconnected",
       py::arg("itemize") = "totals", py::arg("threads") = 1);

    m.def("extremal_largest_term", [](long long parameter, const std::string& mode) {
        const auto m_ = dsf::parse_enum_mode(mode);
        if (!m_)
            throw std::invalid_argument("mode must be 'sequences' or 'partitions'");
        const auto report = dsf::extremal_largest_term(parameter, *m_);
        return py::make_tuple(report.value_forcibly_connected,
                              report.value_forcibly_biconnected
                                  ? py::cast(*report.value_forcibly_biconnected)
                                  : py::none());
    }, py::arg("parameter"), py::arg("mode"));

    m.def("check_unimodal", [](const std::vector<std::uint64_t>& values) {
        return dsf::check_unimodal(values);
    }, py::arg("values"));

    m.def("ratio_report", [](const std::vector<long long>& parameters, const std::string& mode) {
        const auto m_ = dsf::parse_enum_mode(mode);
        if (!m_)
            throw std::invalid_argument("mode must be 'sequences' or 'partitions'");
        std::vector<py::tuple> rows;
        for (const auto& row : dsf::ratio_report(parameters, *m_))
            rows.push_back(py::make_tuple(row.parameter, row.forcibly_biconnected,
                                          row.forcibly_connected, row.zero_free_total));
        return rows;
    }, py::arg("parameters"), py::arg("mode"),
       "Rows of (parameter, forcibly biconnected, forcibly connected, zero-free total).");

    m.def("random_sequences", [](int n, double pl, double ph, int count, std::uint64_t seed) {
        dsf::RandomSpec spec{n, pl, ph, count, seed};
        std::vector<std::vector<int>> out;
        for (const auto& d : dsf::generate_random_sequences(spec))
            out.push_back(d.terms());
        return out;
    }, py::arg("n"), py::arg("pl"), py::arg("ph"), py::arg("count") = 1, py::arg("seed") = 0);
}
