#pragma once

#include <optional>
#include <string>
#include <vector>

#include "entrack/entropy.hpp"
#include "entrack/gates.hpp"
#include "entrack/pure_state.hpp"

namespace entrack {

struct Circuit {
    int num_qubits = 0;
    std::vector<Gate> gates;
    std::string name;  // builder name + parameters, e.g. "grover(n=4,goal=1101,iters=16)"
};

enum class StepKind { SingleQubitLayer, MultiQubitGate };

// A maximal run of consecutive single-qubit gates, or one gate of arity >= 2.
// Only MultiQubitGate steps can change the entropy vector, so steps are the
// unit of the analysis time axis (circuit depth, not gate count).
struct Step {
    StepKind kind;
    std::vector<Gate> gates;
    int depth_index = 0;

    // Joined gate descriptions, e.g. "H[0]+H[1]+X[4]".
    std::string describe() const;
};

struct StepTrace {
    Step step;
    PureState state_after;
    std::optional<EntropyVector> entropy_after;  // filled by the runner
};

// Greedy left-to-right grouping; concatenating the step gate lists reproduces
// circuit.gates in order.
std::vector<Step> condense(const Circuit& circuit);

// Applies the condensed steps in sequence. One trace entry per step; the raw
// input state is not an entry (the runner reports it as step 0).
std::vector<StepTrace> run(const Circuit& circuit, const PureState& input);

}  // namespace entrack
