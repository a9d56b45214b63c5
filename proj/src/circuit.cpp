#include "entrack/circuit.hpp"

#include <stdexcept>

namespace entrack {

std::string Step::describe() const {
    std::string s;
    for (std::size_t i = 0; i < gates.size(); ++i) {
        if (i) s += '+';
        s += gates[i].describe();
    }
    return s;
}

std::vector<Step> condense(const Circuit& circuit) {
    std::vector<Step> steps;
    std::vector<Gate> layer;
    auto flush_layer = [&]() {
        if (layer.empty()) return;
        steps.push_back(Step{StepKind::SingleQubitLayer, std::move(layer),
                             static_cast<int>(steps.size()) + 1});
        layer.clear();
    };
    for (const Gate& g : circuit.gates) {
        if (g.single_qubit()) {
            layer.push_back(g);
        } else {
            flush_layer();
            steps.push_back(Step{StepKind::MultiQubitGate, {g},
                                 static_cast<int>(steps.size()) + 1});
        }
    }
    flush_layer();
    return steps;
}

std::vector<StepTrace> run(const Circuit& circuit, const PureState& input) {
    if (input.num_qubits() != circuit.num_qubits)
        throw std::invalid_argument("run: input qubit count does not match circuit");
    for (const Gate& g : circuit.gates)
        for (int t : g.target_qubits)
            if (t >= circuit.num_qubits)
                throw std::invalid_argument("run: gate target outside circuit register");

    std::vector<StepTrace> traces;
    PureState state = input;
    for (Step& step : condense(circuit)) {
        for (const Gate& g : step.gates) state = apply(g, state);
        traces.push_back(StepTrace{std::move(step), state, std::nullopt});
    }
    return traces;
}

}  // namespace entrack
