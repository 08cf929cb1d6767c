// Copyright 2026 The fqwalk Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file scenario.hpp
 * @brief Scenario description and the tabular outputs behind the fqwalk CLI.
 *
 * Every command produces a Table (named columns, rows of doubles) which is
 * then written as CSV or as a JSON array of row objects. Numbers are printed
 * with 12 significant digits through std::to_chars, so output is independent
 * of the process locale and byte-stable across runs.
 */

#pragma once

#include "fqw/basis.hpp"
#include "fqw/decoherence.hpp"
#include "fqw/entanglement.hpp"
#include "fqw/evolution.hpp"
#include "fqw/hamiltonian.hpp"
#include "fqw/types.hpp"

#include <json.hpp>

#include <array>
#include <charconv>
#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>
#include <string>
#include <system_error>
#include <utility>
#include <vector>

namespace fqw {

/// Violated ScenarioSpec invariant; the message names it.
class InvalidSpec : public Error {
public:
    using Error::Error;
};

enum class SpinPreset { up_up, down_down, triplet0, custom };
enum class OutputFormat { csv, json };

struct ScenarioSpec {
    int n_nodes = 8;
    double omega = 0.3;
    double gamma = 0.0;
    bool interacting = false;
    std::pair<int, int> initial_nodes{0, 4};
    SpinPreset spin = SpinPreset::up_up;
    std::array<cplx, 3> custom_triplet{cplx{0.0}, cplx{1.0}, cplx{0.0}};  ///< (α, β, γ) for SpinPreset::custom
    double t_max = 100.0;
    double dt = 0.1;
    std::string output = "-";
    OutputFormat format = OutputFormat::csv;

    void validate() const {
        if (n_nodes < 3)
            throw InvalidSpec("n_nodes >= 3 required for dynamics (got " + std::to_string(n_nodes) + ")");
        if (!(omega > 0.0))
            throw InvalidSpec("omega > 0 required");
        if (!(gamma >= 0.0))
            throw InvalidSpec("gamma >= 0 required");
        const auto [i, j] = initial_nodes;
        if (i < 0 || j < 0 || i >= n_nodes || j >= n_nodes)
            throw InvalidSpec("initial nodes must lie in [0, n_nodes)");
        if (i == j)
            throw InvalidSpec("initial nodes must differ (i != j)");
        if (interacting && !is_allowed(i, j, n_nodes))
            throw InvalidSpec("interacting scenario requires cyclic_distance(i, j) >= 2");
        if (!(dt > 0.0))
            throw InvalidSpec("dt > 0 required");
        if (!(t_max >= dt))
            throw InvalidSpec("t_max >= dt required");
        (void)triplet();
    }

    /// Non-fatal notes about degenerate but permitted scenarios.
    [[nodiscard]] std::vector<std::string> warnings() const {
        std::vector<std::string> w;
        if (interacting && n_nodes == 4)
            w.emplace_back("interacting dynamics with n_nodes = 4 is frozen: every hop reaches a forbidden "
                           "configuration, so H = 0");
        return w;
    }

    [[nodiscard]] CycleConfig config() const { return {n_nodes, omega}; }

    [[nodiscard]] SpinTriplet triplet() const {
        switch (spin) {
        case SpinPreset::up_up: return SpinTriplet::up_up();
        case SpinPreset::down_down: return SpinTriplet::down_down();
        case SpinPreset::triplet0: return SpinTriplet::triplet_zero();
        case SpinPreset::custom:
            try {
                return {custom_triplet[0], custom_triplet[1], custom_triplet[2]};
            } catch (const NumericContract&) {
                throw InvalidSpec("custom triplet must satisfy |alpha|^2+|beta|^2+|gamma|^2 = 1");
            }
        }
        throw InvalidSpec("unknown spin preset");
    }

    [[nodiscard]] CVector initial_coord() const {
        return antisymmetric_pair(n_nodes, initial_nodes.first, initial_nodes.second);
    }
    [[nodiscard]] FullDensity initial_density() const {
        return FullDensity::pure_product(n_nodes, initial_coord(), triplet());
    }
    [[nodiscard]] PureTwoFermionState initial_pure() const {
        return PureTwoFermionState::from_product(n_nodes, initial_coord(), triplet());
    }
    [[nodiscard]] Hamiltonian hamiltonian() const { return build_two_particle(config(), interacting); }
};

inline std::vector<double> default_sweep_gammas() { return {0.1, 0.02, 0.004, 0.0001}; }

// ----------------------------------------------------------------------------
// Tables and formatting
// ----------------------------------------------------------------------------

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// 12 significant digits, '.' separator, no locale; −0 prints as 0.
inline std::string format_number(double x) {
    if (x == 0.0)
        return "0";
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general, 12);
    if (res.ec != std::errc{})
        throw Error("number formatting failed");
    return {buf.data(), res.ptr};
}

inline double parse_number(std::string_view s) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw Error("cannot parse number '" + std::string(s) + "'");
    return v;
}

inline void write_csv(const Table& table, std::ostream& out) {
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        out << (c ? "," : "") << table.columns[c];
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            out << (c ? "," : "") << format_number(row[c]);
        out << '\n';
    }
}

inline Table read_csv(std::istream& in) {
    Table table;
    std::string line;
    if (!std::getline(in, line))
        throw Error("empty CSV input");
    std::stringstream header(line);
    for (std::string field; std::getline(header, field, ',');)
        table.columns.push_back(field);
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::vector<double> row;
        std::stringstream ss(line);
        for (std::string field; std::getline(ss, field, ',');)
            row.push_back(parse_number(field));
        if (row.size() != table.columns.size())
            throw Error("CSV row has " + std::to_string(row.size()) + " fields, header has " +
                        std::to_string(table.columns.size()));
        table.rows.push_back(std::move(row));
    }
    return table;
}

/// Array of row objects keyed by column name; values carry the same 12 digits as CSV.
inline void write_json(const Table& table, std::ostream& out) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < row.size(); ++c)
            obj[table.columns[c]] = parse_number(format_number(row[c]));
        arr.push_back(std::move(obj));
    }
    out << arr.dump(2) << '\n';
}

inline void write_table(const Table& table, OutputFormat format, std::ostream& out) {
    if (format == OutputFormat::json)
        write_json(table, out);
    else
        write_csv(table, out);
}

/// Writes to spec.output, or stdout when it is "-".
inline void emit(const Table& table, const ScenarioSpec& spec) {
    if (spec.output == "-" || spec.output.empty()) {
        write_table(table, spec.format, std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream file(spec.output, std::ios::binary | std::ios::trunc);
    if (!file)
        throw Error("cannot open output file '" + spec.output + "'");
    write_table(table, spec.format, file);
    file.flush();
    if (!file)
        throw Error("failed writing output file '" + spec.output + "'");
}

// ----------------------------------------------------------------------------
// Commands
// ----------------------------------------------------------------------------

/// Charge density per node: t,node_0,…,node_{N−1}.
inline Table walk_table(const ScenarioSpec& spec) {
    spec.validate();
    const CycleConfig cfg = spec.config();
    const TrajectoryRecord rec =
        run_trajectory(cfg, spec.hamiltonian(), spec.initial_density(), NoiseParams{spec.gamma}, spec.t_max, spec.dt);
    Table table;
    table.columns.emplace_back("t");
    for (int i = 0; i < spec.n_nodes; ++i)
        table.columns.push_back("node_" + std::to_string(i));
    for (std::size_t k = 0; k < rec.times.size(); ++k) {
        std::vector<double> row{rec.times[k]};
        for (double n : rec.densities[k])
            row.push_back(n);
        table.rows.push_back(std::move(row));
    }
    return table;
}

/// Entanglement records along the trajectory, one per sample time.
inline std::vector<EntanglementRecord> entanglement_series(const ScenarioSpec& spec, double gamma) {
    spec.validate();
    const CycleConfig cfg = spec.config();
    const NoisyEvolution evolve(cfg, spec.hamiltonian(), NoiseParams{gamma});
    const FullDensity rho0 = spec.initial_density();
    std::vector<EntanglementRecord> out;
    for (double t : sample_times(spec.t_max, spec.dt))
        out.push_back(entanglement_record(evolve(rho0, t), cfg, t));
    return out;
}

/// t,S_vN_r1,S_L_r1,E_vN,E_L
inline Table entanglement_table(const ScenarioSpec& spec) {
    Table table{{"t", "S_vN_r1", "S_L_r1", "E_vN", "E_L"}, {}};
    for (const auto& r : entanglement_series(spec, spec.gamma))
        table.rows.push_back({r.t, r.s_vn_r1, r.s_l_r1, r.e_vn, r.e_l});
    return table;
}

/// t,gamma,E_vN,D_fermi,D_dist for each rate in `gammas`, grouped by rate.
inline Table sweep_table(const ScenarioSpec& spec, const std::vector<double>& gammas) {
    if (gammas.empty())
        throw InvalidSpec("sweep needs at least one gamma");
    for (double g : gammas)
        if (!(g >= 0.0))
            throw InvalidSpec("gamma >= 0 required for every sweep rate");
    Table table{{"t", "gamma", "E_vN", "D_fermi", "D_dist"}, {}};
    for (double g : gammas) {
        for (const auto& r : entanglement_series(spec, g)) {
            const DecoherenceReport d = decoherence_report(spec.n_nodes, g, r.t);
            table.rows.push_back({r.t, g, r.e_vn, d.d_fermi, d.d_dist});
        }
    }
    return table;
}

struct SlaterSummary {
    int slater_rank;
    PurityVerdict verdict;
    double s_vn_r1;
    double s_l_r1;
};

/// Slater rank and purity verdict of the scenario's pure state after unitary evolution for time t.
inline SlaterSummary slater_summary(const ScenarioSpec& spec, double t) {
    spec.validate();
    if (!(t >= 0.0))
        throw InvalidSpec("time >= 0 required");
    PureTwoFermionState state = spec.initial_pure();
    if (t > 0.0)
        state = evolve_pure(state, Propagator(spec.hamiltonian()), t);
    const ReducedDensity r1 = reduce_single_particle(state);
    return {slater_rank(state), purity_verdict(r1, spec.config()), von_neumann_entropy(r1.matrix),
            linear_entropy(r1.matrix)};
}

} // namespace fqw
