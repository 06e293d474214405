#pragma once

#include <cstdint>
#include <string>

#include "dcr/instance.hpp"

namespace dcr {

// phi(x) = 1 iff in the subgraph selected by `state` every pair of terminals
// lies within `diameter` hops. Computed by breadth-first search truncated at
// that depth, exiting early once some terminal pair fails.
bool structure_phi(const NetworkInstance& instance, const EdgeStateMask& state);

// Position of a state in the coherent system: pathsets split into minpaths and
// non-minimal pathsets, cutsets into mincuts and non-maximal cutsets.
// Single-bit neighbours decide both, since phi is monotone.
enum class StateClass { Minpath, NonMinimalPathset, Mincut, NonMaximalCutset };

bool is_pathset(StateClass c);
bool is_cutset(StateClass c);
std::string to_string(StateClass c);

StateClass classify_state(const NetworkInstance& instance, const EdgeStateMask& state);

// One pass over all terminal-pair distances in the selected subgraph.
// worst_* identify the pair at greatest distance when within_diameter holds;
// on failure they name the first pair found out of reach.
struct TerminalDistanceScan {
    bool within_diameter;
    NodeId worst_u;
    NodeId worst_v;
    int worst_distance;
};
TerminalDistanceScan scan_terminal_distances(const NetworkInstance& instance,
                                             const EdgeStateMask& state);

// Cumulative number of structure-function evaluations in this process.
// Diagnostic hook; lets tests assert that closed forms never enumerate states.
std::uint64_t phi_evaluation_count();

}  // namespace dcr
