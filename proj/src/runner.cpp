#include "entrack/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace entrack {

namespace {

std::string fmt_double(double v) {
    if (v == 0.0) v = 0.0;  // fold -0
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

struct BuiltRun {
    Circuit circuit;
    PureState input;
    std::string algorithm_id;

    BuiltRun() : input(1) {}
};

BuiltRun build(const RunConfig& config) {
    BuiltRun out;
    if (const auto* g = std::get_if<GroverSpec>(&config.algorithm)) {
        out.circuit = build_grover(*g);
        out.algorithm_id = "grover";
    } else if (const auto* q = std::get_if<QftSpec>(&config.algorithm)) {
        out.circuit = build_qft(*q);
        out.algorithm_id = "qft";
    } else if (const auto* p = std::get_if<QpeSpec>(&config.algorithm)) {
        out.circuit = build_qpe(*p);
        out.algorithm_id = "qpe";
    } else {
        out.circuit = std::get<CustomSpec>(config.algorithm).circuit;
        out.algorithm_id = "custom";
    }
    if (out.circuit.num_qubits > config.max_qubits)
        throw config_error("register of " + std::to_string(out.circuit.num_qubits) +
                           " qubits exceeds --max-qubits " + std::to_string(config.max_qubits));

    switch (config.input_source) {
        case RunConfig::InputSource::Default:
            if (const auto* p = std::get_if<QpeSpec>(&config.algorithm))
                out.input = qpe_input(*p);
            else
                out.input = PureState(out.circuit.num_qubits);
            break;
        case RunConfig::InputSource::Random:
            if (std::holds_alternative<QpeSpec>(config.algorithm))
                throw config_error("qpe input is fixed to |0..0> (x) eigenvector");
            out.input = random_state(out.circuit.num_qubits, config.seed);
            break;
        case RunConfig::InputSource::Amplitudes: {
            if (std::holds_alternative<QpeSpec>(config.algorithm))
                throw config_error("qpe input is fixed to |0..0> (x) eigenvector");
            if (config.input_amplitudes.size() !=
                (std::size_t{1} << out.circuit.num_qubits))
                throw config_error("input amplitude count does not match the register");
            out.input = PureState(out.circuit.num_qubits, config.input_amplitudes);
            break;
        }
    }
    return out;
}

void check_integrity(const StepReport& report, double tol_fail) {
    for (Inequality ineq : {Inequality::SA, Inequality::SSA}) {
        const double mn = report.of(ineq).min_saturation;
        if (mn < -tol_fail) {
            std::ostringstream msg;
            msg << kInequalityNames[static_cast<int>(ineq)] << " saturation " << mn
                << " below -" << tol_fail << " at step " << report.step_index
                << "; this inequality is a theorem, so the simulation is unsound";
            throw integrity_error(msg.str());
        }
    }
}

}  // namespace

RunResult execute(const RunConfig& config) {
    if (config.tol_fail <= 0.0) throw config_error("tol-fail must be positive");
    BuiltRun built = build(config);

    RunResult result;
    result.circuit = std::move(built.circuit);
    result.input_state = std::move(built.input);

    using clock = std::chrono::steady_clock;
    std::vector<double> step_wall_ms;
    const auto run_start = clock::now();

    auto analyze = [&](const PureState& state, int index, const std::string& kind,
                       const std::string& label) {
        const auto t0 = clock::now();
        EntropyVector ev = entropy_vector(state);
        StepReport report = analyze_step(ev, config.tol_fail);
        report.step_index = index;
        report.step_kind = kind;
        report.gate_label = label;
        step_wall_ms.push_back(
            std::chrono::duration<double, std::milli>(clock::now() - t0).count());
        check_integrity(report, config.tol_fail);
        result.reports.push_back(std::move(report));
        return ev;
    };

    analyze(result.input_state, 0, "input", "-");
    result.traces = run(result.circuit, result.input_state);
    for (std::size_t i = 0; i < result.traces.size(); ++i) {
        StepTrace& tr = result.traces[i];
        const std::string kind = tr.step.kind == StepKind::SingleQubitLayer
                                     ? "single_qubit_layer"
                                     : "multi_qubit_gate";
        tr.entropy_after = analyze(tr.state_after, static_cast<int>(i) + 1, kind,
                                   tr.step.describe());
    }
    result.total_wall_ms =
        std::chrono::duration<double, std::milli>(clock::now() - run_start).count();

    if (!config.csv_path.empty()) write_csv_file(result.reports, config.csv_path);
    if (!config.manifest_path.empty()) {
        std::ofstream f(config.manifest_path, std::ios::binary);
        if (!f) throw io_error("cannot open " + config.manifest_path);
        f << build_manifest_json(config, result, step_wall_ms) << '\n';
        if (!f) throw io_error("write failed: " + config.manifest_path);
    }
    if (!config.vectors_path.empty()) write_entropy_vectors_file(result, config.vectors_path);
    return result;
}

void write_csv(const std::vector<StepReport>& reports, std::ostream& out) {
    out << "step_index,step_kind,gate_label";
    for (const char* name : kInequalityNames)
        out << ',' << name << "_check_count," << name << "_min_sat," << name << "_mean_sat,"
            << name << "_failure_ratio," << name << "_mean_failure_sat";
    out << ",entropy_norm\n";
    for (const StepReport& r : reports) {
        out << r.step_index << ',' << r.step_kind << ',' << r.gate_label;
        for (const InequalityStats& s : r.stats)
            out << ',' << s.check_count << ',' << fmt_double(s.min_saturation) << ','
                << fmt_double(s.mean_saturation) << ',' << fmt_double(s.failure_ratio) << ','
                << fmt_double(s.mean_failure_saturation);
        out << ',' << fmt_double(r.entropy_norm) << '\n';
    }
}

void write_csv_file(const std::vector<StepReport>& reports, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw io_error("cannot open " + path);
    write_csv(reports, f);
    if (!f) throw io_error("write failed: " + path);
}

void write_entropy_vectors(const RunResult& result, std::ostream& out) {
    nlohmann::ordered_json root;
    root["num_qubits"] = result.input_state.num_qubits();
    nlohmann::ordered_json steps = nlohmann::ordered_json::array();

    auto vector_json = [](const EntropyVector& ev) {
        nlohmann::ordered_json entries;
        const QubitSet full = full_set(ev.num_qubits());
        for (QubitSet mask = 1; mask <= full; ++mask)
            entries[std::to_string(mask)] = ev[mask];
        return entries;
    };

    {
        nlohmann::ordered_json row;
        row["step_index"] = 0;
        row["entropies"] = vector_json(entropy_vector(result.input_state));
        steps.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < result.traces.size(); ++i) {
        nlohmann::ordered_json row;
        row["step_index"] = static_cast<int>(i) + 1;
        const auto& ev = result.traces[i].entropy_after;
        row["entropies"] = vector_json(ev ? *ev : entropy_vector(result.traces[i].state_after));
        steps.push_back(std::move(row));
    }
    root["steps"] = std::move(steps);
    out << root.dump(2) << '\n';
}

void write_entropy_vectors_file(const RunResult& result, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw io_error("cannot open " + path);
    write_entropy_vectors(result, f);
    if (!f) throw io_error("write failed: " + path);
}

std::string build_manifest_json(const RunConfig& config, const RunResult& result,
                                const std::vector<double>& step_wall_ms) {
    nlohmann::ordered_json m;
    m["tool"] = {{"name", "entrack"}, {"version", kToolVersion}};

    nlohmann::ordered_json cfg;
    if (const auto* g = std::get_if<GroverSpec>(&config.algorithm)) {
        cfg["algorithm"] = "grover";
        cfg["search_qubits"] = g->search_qubits;
        cfg["goal"] = g->goal;
        cfg["iterations"] = g->iterations;
    } else if (const auto* q = std::get_if<QftSpec>(&config.algorithm)) {
        cfg["algorithm"] = "qft";
        cfg["num_qubits"] = q->num_qubits;
        cfg["inverse"] = q->inverse;
    } else if (const auto* p = std::get_if<QpeSpec>(&config.algorithm)) {
        cfg["algorithm"] = "qpe";
        cfg["precision_qubits"] = p->precision_qubits;
        cfg["unitary_dim"] = p->unitary.rows();
    } else {
        cfg["algorithm"] = "custom";
        cfg["circuit"] = std::get<CustomSpec>(config.algorithm).circuit.name;
    }
    switch (config.input_source) {
        case RunConfig::InputSource::Default: cfg["input"] = "default"; break;
        case RunConfig::InputSource::Random:
            cfg["input"] = "random";
            cfg["seed"] = config.seed;
            break;
        case RunConfig::InputSource::Amplitudes: cfg["input"] = "amplitudes"; break;
    }
    m["config"] = std::move(cfg);
    m["register_qubits"] = result.circuit.num_qubits;
    m["circuit"] = result.circuit.name;
    m["gate_count"] = result.circuit.gates.size();
    m["report_rows"] = result.reports.size();

    m["tolerances"] = {{"tol_fail", config.tol_fail},
                       {"tau_hermitian", kTauHermitian},
                       {"tau_eigen", kTauEigen},
                       {"eigenvalue_truncation", kEigenvalueTruncation}};

    const int n = result.circuit.num_qubits;
    nlohmann::ordered_json enumeration;
    enumeration["subsystems"] = "every nonempty subset of the register, full set included";
    enumeration["blocks"] = "set partitions into exactly `arity` nonempty blocks, "
                            "blocks ordered by minimum element";
    enumeration["roles"] = {{"sa", "unordered {A,B}"},
                            {"ssa", "3 per tripartition (each block once as center B)"},
                            {"mmi", "1 per tripartition (symmetric)"},
                            {"ingleton", "6 per 4-partition (choice of {A,B} pair)"}};
    enumeration["failure_ratio_denominator"] =
        "all role assignments of at most `arity` possibly-empty disjoint blocks over all "
        "subsystems (empty subsystem included); degenerate assignments saturate identically "
        "and are counted but not evaluated";
    nlohmann::ordered_json checks;
    for (int fam = 0; fam < 4; ++fam) {
        const auto ineq = static_cast<Inequality>(fam);
        checks[kInequalityNames[fam]] = {{"per_step_checks", check_count(n, ineq)},
                                         {"ratio_basis", ratio_basis(n, ineq)}};
    }
    enumeration["per_family"] = std::move(checks);
    m["enumeration"] = std::move(enumeration);

    m["total_wall_ms"] = result.total_wall_ms;
    m["step_wall_ms"] = step_wall_ms;
    return nlohmann::ordered_json(m).dump(2);
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        if (tok[0] == '#') break;
        tokens.push_back(tok);
    }
    return tokens;
}

int parse_qubit(const std::string& tok, int num_qubits, const std::string& where) {
    int q;
    try {
        std::size_t pos;
        q = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
        throw config_error(where + ": bad qubit index '" + tok + "'");
    }
    if (q < 0 || q >= num_qubits)
        throw config_error(where + ": qubit " + tok + " outside register of " +
                           std::to_string(num_qubits));
    return q;
}

}  // namespace

Circuit parse_circuit_file(const std::string& path, int num_qubits) {
    std::ifstream f(path);
    if (!f) throw io_error("cannot open circuit file " + path);
    const std::filesystem::path dir = std::filesystem::path(path).parent_path();

    Circuit c;
    c.num_qubits = num_qubits;
    c.name = "custom(" + std::filesystem::path(path).filename().string() + ")";

    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        const std::string where = path + ":" + std::to_string(lineno);
        std::vector<std::string> tok = tokenize(line);
        if (tok.empty()) continue;
        const std::string& op = tok[0];
        try {
            if (op == "H" || op == "X" || op == "Z") {
                if (tok.size() != 2) throw config_error(where + ": expected '" + op + " <qubit>'");
                c.gates.push_back(standard_gate(op, parse_qubit(tok[1], num_qubits, where)));
            } else if (op == "CPSIX" || op == "C0Z") {
                // CPSIX <goal> <controls...> -> <target> | C0Z <controls...> -> <target>
                std::size_t i = (op == "CPSIX") ? 2 : 1;
                std::vector<int> controls;
                while (i < tok.size() && tok[i] != "->")
                    controls.push_back(parse_qubit(tok[i++], num_qubits, where));
                if (i + 2 != tok.size() || tok[i] != "->")
                    throw config_error(where + ": expected '-> <target>'");
                const int target = parse_qubit(tok[i + 1], num_qubits, where);
                if (op == "CPSIX")
                    c.gates.push_back(multi_controlled_x(tok[1], controls, target));
                else
                    c.gates.push_back(multi_controlled_z(controls, target));
            } else if (op == "CRK" || op == "CRKINV") {
                if (tok.size() != 6 || tok[2] != "ctrl" || tok[4] != "tgt")
                    throw config_error(where + ": expected '" + op + " <k> ctrl <q> tgt <q>'");
                const int k = std::stoi(tok[1]);
                const int ctrl = parse_qubit(tok[3], num_qubits, where);
                const int tgt = parse_qubit(tok[5], num_qubits, where);
                c.gates.push_back(op == "CRK" ? controlled_phase(k, ctrl, tgt)
                                              : controlled_phase_inverse(k, ctrl, tgt));
            } else if (op == "CU") {
                // CU <matrix-file> pow <p> ctrl <q> tgt <q...>
                if (tok.size() < 8 || tok[2] != "pow" || tok[4] != "ctrl" || tok[6] != "tgt")
                    throw config_error(where +
                                       ": expected 'CU <file> pow <p> ctrl <q> tgt <q...>'");
                const std::uint64_t power = std::stoull(tok[3]);
                const int ctrl = parse_qubit(tok[5], num_qubits, where);
                std::vector<int> targets;
                for (std::size_t i = 7; i < tok.size(); ++i)
                    targets.push_back(parse_qubit(tok[i], num_qubits, where));
                const ComplexMatrix u = load_matrix((dir / tok[1]).string());
                c.gates.push_back(controlled_unitary_power(u, power, ctrl, targets));
            } else {
                throw config_error(where + ": unknown gate '" + op + "'");
            }
        } catch (const std::invalid_argument& e) {
            throw config_error(where + ": " + e.what());
        }
    }
    return c;
}

std::vector<cplx> load_amplitudes(const std::string& path, int num_qubits) {
    std::ifstream f(path);
    if (!f) throw io_error("cannot open amplitude file " + path);
    const std::size_t dim = std::size_t{1} << num_qubits;
    std::vector<cplx> amps;
    amps.reserve(dim);
    double re, im;
    while (f >> re >> im) amps.emplace_back(re, im);
    if (amps.size() != dim)
        throw config_error(path + ": expected " + std::to_string(dim) +
                           " amplitude pairs, got " + std::to_string(amps.size()));
    double n2 = 0.0;
    for (const auto& a : amps) n2 += std::norm(a);
    if (std::abs(std::sqrt(n2) - 1.0) > 1e-6)
        throw config_error(path + ": amplitudes are not normalized");
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& a : amps) a *= inv;
    return amps;
}

ComplexMatrix load_matrix(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw io_error("cannot open matrix file " + path);
    std::size_t d;
    if (!(f >> d) || d == 0) throw config_error(path + ": missing matrix dimension");
    ComplexMatrix m(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
            double re, im;
            if (!(f >> re >> im))
                throw config_error(path + ": truncated matrix data");
            m(r, c) = cplx(re, im);
        }
    return m;
}

}  // namespace entrack
