#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace entrack {

// Subset of register qubits as a bitmask: bit i set <=> qubit i included.
// Note this is independent of the basis-label convention (qubit 0 is the most
// significant bit of a computational-basis index, see PureState).
using QubitSet = std::uint32_t;

inline int set_size(QubitSet s) { return std::popcount(s); }

inline QubitSet full_set(int num_qubits) {
    return static_cast<QubitSet>((1u << num_qubits) - 1u);
}

inline QubitSet complement(QubitSet s, int num_qubits) {
    return full_set(num_qubits) & ~s;
}

inline bool contains(QubitSet s, int qubit) { return (s >> qubit) & 1u; }

inline bool subset_of(QubitSet a, QubitSet b) { return (a & ~b) == 0; }

// Qubit labels in ascending order.
inline std::vector<int> set_qubits(QubitSet s) {
    std::vector<int> out;
    out.reserve(set_size(s));
    for (int q = 0; s != 0; ++q, s >>= 1)
        if (s & 1u) out.push_back(q);
    return out;
}

}  // namespace entrack
