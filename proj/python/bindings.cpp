#include "priorforge/certainty.hpp"
#include "priorforge/harness.hpp"
#include "priorforge/json_io.hpp"
#include "priorforge/priors.hpp"
#include "priorforge/report.hpp"
#include "priorforge/trades.hpp"

#include <pybind11/gil_safe_call_once.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace priorforge;

namespace {

py::object fraction(const Rational& r)
{
    PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> storage;
    const auto& cls = storage.call_once_and_store_result([] { return py::module_::import("fractions").attr("Fraction"); })
                          .get_stored();
    return cls(r.str());
}

py::list fractions(std::span<const Rational> values)
{
    py::list out;
    for (const auto& v : values) {
        out.append(fraction(v));
    }
    return out;
}

Rational to_rational(const py::handle& value)
{
    if (py::isinstance<py::float_>(value)) {
        throw ParseError("floats are not accepted; pass an int, a Fraction or a string");
    }
    return Rational::parse(py::str(value).cast<std::string>());
}

std::vector<Rational> to_rationals(const py::iterable& values)
{
    std::vector<Rational> out;
    for (const auto& v : values) {
        out.push_back(to_rational(v));
    }
    return out;
}

Distribution to_distribution(const InformationStructure& T, const py::iterable& values)
{
    auto mass = to_rationals(values);
    if (mass.size() != T.state_count()) {
        throw DimensionError("distribution has " + std::to_string(mass.size()) + " entries, expected " +
                             std::to_string(T.state_count()));
    }
    return Distribution(std::move(mass));
}

PayoffFamily to_family(const InformationStructure& T, const py::iterable& rows)
{
    PayoffFamily f;
    for (const auto& row : rows) {
        f.payoffs.emplace_back(to_rationals(py::reinterpret_borrow<py::iterable>(row)));
    }
    if (f.payoffs.size() != T.player_count()) {
        throw DimensionError("payoff family has " + std::to_string(f.payoffs.size()) + " rows, expected " +
                             std::to_string(T.player_count()));
    }
    return f;
}

py::list labels(const InformationStructure& T, const StateSet& S)
{
    py::list out;
    for (StateIndex s : S) {
        out.append(T.state_labels()[s]);
    }
    return out;
}

py::object prior_dict(const std::optional<PriorWitness>& w)
{
    if (!w) {
        return py::none();
    }
    py::dict out;
    out["prior"] = fractions(w->prior.mass());
    py::list weights;
    for (const auto& row : w->hull_weights) {
        weights.append(fractions(row));
    }
    out["hull_weights"] = weights;
    return out;
}

py::list family_rows(const PayoffFamily& f)
{
    py::list rows;
    for (const auto& p : f.payoffs) {
        rows.append(fractions(p.values()));
    }
    return rows;
}

py::object trade_dict(const InformationStructure& T, const std::optional<TradeWitness>& w)
{
    if (!w) {
        return py::none();
    }
    py::dict out;
    out["payoffs"] = family_rows(w->trade);
    out["objective"] = fraction(w->objective);
    out["component"] = w->component ? py::object(labels(T, *w->component)) : py::none();
    return out;
}

py::object pump_dict(const std::optional<MoneyPumpWitness>& w)
{
    if (!w) {
        return py::none();
    }
    py::dict out;
    out["distribution"] = fractions(w->distribution.mass());
    out["payoffs"] = family_rows(w->semi_trade);
    out["deficit"] = fraction(w->deficit);
    out["maximal"] = w->maximal;
    out["strongly_maximal"] = w->strongly_maximal;
    return out;
}

py::object json_value(const Json& doc)
{
    PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> storage;
    const auto& loads =
        storage.call_once_and_store_result([] { return py::module_::import("json").attr("loads"); }).get_stored();
    return loads(doc.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact common-prior and no-trade analysis of finite information structures";
    m.attr("__version__") = PRIORFORGE_VERSION;

    py::register_exception<Error>(m, "InputError", PyExc_ValueError);
    py::register_exception<VerificationError>(m, "VerificationError", PyExc_RuntimeError);

    py::class_<InformationStructure>(m, "Structure")
        .def_static("from_json", &structure_from_text, py::arg("text"))
        .def_static("load", [](const std::string& path) { return load_structure(path); }, py::arg("path"))
        .def_property_readonly("states", &InformationStructure::state_labels)
        .def_property_readonly("players", &InformationStructure::player_labels)
        .def(
            "cells",
            [](const InformationStructure& T, PlayerIndex i) {
                if (i >= T.player_count()) {
                    throw DimensionError("no player " + std::to_string(i));
                }
                py::list out;
                for (const auto& cell : T.cells(i)) {
                    out.append(labels(T, make_state_set(cell)));
                }
                return out;
            },
            py::arg("player"))
        .def(
            "type",
            [](const InformationStructure& T, PlayerIndex i, StateIndex s) {
                if (i >= T.player_count() || s >= T.state_count()) {
                    throw DimensionError("player or state out of range");
                }
                return fractions(T.type(i, s).mass());
            },
            py::arg("player"), py::arg("state"))
        .def("to_json", [](const InformationStructure& T) { return structure_to_json(T).dump(2); })
        .def("__eq__", [](const InformationStructure& a, const InformationStructure& b) { return a == b; })
        .def("__repr__", [](const InformationStructure& T) {
            return "<Structure " + std::to_string(T.state_count()) + " states, " + std::to_string(T.player_count()) +
                   " players>";
        });

    m.def(
        "minimal_components",
        [](const InformationStructure& T) {
            py::list out;
            for (const auto& S : minimal_components(T).minimal) {
                out.append(labels(T, S));
            }
            return out;
        },
        py::arg("structure"));
    m.def(
        "all_components",
        [](const InformationStructure& T, std::size_t max_states) {
            py::list out;
            for (const auto& S : all_components(T, max_states)) {
                out.append(labels(T, S));
            }
            return out;
        },
        py::arg("structure"), py::arg("max_states") = 20);

    m.def(
        "find_prior",
        [](const InformationStructure& T, const std::string& kind) {
            if (kind == "common") {
                return prior_dict(find_common_prior(T));
            }
            if (kind == "universal") {
                return prior_dict(find_universal_common_prior(T));
            }
            if (kind == "strong") {
                return prior_dict(find_strong_common_prior(T));
            }
            throw ParseError("unknown prior kind '" + kind + "'");
        },
        py::arg("structure"), py::arg("kind") = "common");
    m.def(
        "classify_prior",
        [](const InformationStructure& T, const py::iterable& p) {
            const auto flags = classify_prior(T, to_distribution(T, p));
            py::dict out;
            out["prior_for"] = flags.prior_for;
            out["common"] = flags.common;
            out["universal"] = flags.universal;
            out["strong"] = flags.strong;
            out["maximal"] = flags.maximal;
            out["strongly_maximal"] = flags.strongly_maximal;
            return out;
        },
        py::arg("structure"), py::arg("distribution"));

    m.def(
        "find_trade",
        [](const InformationStructure& T, const std::string& kind) {
            if (kind == "agreeable") {
                return trade_dict(T, find_agreeable_trade(T));
            }
            if (kind == "weak") {
                return trade_dict(T, find_weakly_agreeable_trade(T));
            }
            if (kind == "acceptable") {
                return trade_dict(T, find_acceptable_trade(T));
            }
            throw ParseError("unknown trade kind '" + kind + "'");
        },
        py::arg("structure"), py::arg("kind") = "agreeable");
    m.def(
        "classify_trade",
        [](const InformationStructure& T, const py::iterable& payoffs) {
            const auto c = classify_trade(T, to_family(T, payoffs));
            py::dict out;
            out["is_trade"] = c.is_trade;
            out["is_semi_trade"] = c.is_semi_trade;
            out["acceptable"] = c.acceptable;
            out["weakly_agreeable"] = c.weakly_agreeable;
            out["agreeable"] = c.agreeable;
            py::list table;
            for (const auto& row : c.expectations) {
                table.append(fractions(row));
            }
            out["expectations"] = table;
            return out;
        },
        py::arg("structure"), py::arg("payoffs"));

    m.def(
        "find_money_pump",
        [](const InformationStructure& T, const py::iterable& p) {
            return pump_dict(find_multiplayer_money_pump(T, to_distribution(T, p)));
        },
        py::arg("structure"), py::arg("distribution"));
    m.def(
        "classify_distribution",
        [](const InformationStructure& T, const py::iterable& p) {
            const auto v = classify_distribution(T, to_distribution(T, p));
            py::dict out;
            out["common_prior"] = v.common_prior.has_value();
            out["money_pump"] = pump_dict(v.money_pump);
            out["maximal"] = v.maximal;
            out["strongly_maximal"] = v.strongly_maximal;
            return out;
        },
        py::arg("structure"), py::arg("distribution"));

    m.def(
        "random_structure",
        [](std::uint64_t seed, std::size_t max_states, std::size_t max_players, std::int64_t denominator_bound) {
            GeneratorConfig cfg;
            cfg.seed = seed;
            cfg.max_states = max_states;
            cfg.max_players = max_players;
            cfg.denominator_bound = denominator_bound;
            validate_config(cfg);
            return random_structure(cfg);
        },
        py::arg("seed"), py::arg("max_states") = 6, py::arg("max_players") = 3, py::arg("denominator_bound") = 6);
    m.def(
        "cross_check",
        [](const InformationStructure& T, std::size_t samples, std::uint64_t seed) {
            CrossCheckOptions options;
            options.samples = samples;
            options.seed = seed;
            return json_value(cross_check_to_json(cross_check(T, options)));
        },
        py::arg("structure"), py::arg("samples") = 3, py::arg("seed") = 0);
    m.def(
        "report",
        [](const InformationStructure& T, const std::optional<py::iterable>& p) {
            std::optional<Distribution> d;
            if (p) {
                d = to_distribution(T, *p);
            }
            return json_value(report_to_json(analyze(T, d)));
        },
        py::arg("structure"), py::arg("distribution") = py::none());
}
