#pragma once

#include <functional>
#include <string_view>

#include "fusion/types.hpp"

namespace fusion {

using DescriptorLookup =
    std::function<const ComponentDescriptor*(std::string_view descriptor_id)>;

// Checks every EventFlowGraph invariant (unique ids, root reachability,
// transition endpoints and targets, allowed actions, unique triples, dense
// object indices, bounds inside the screen). Throws Error(kValidation)
// naming the first violation.
void validate_graph(const EventFlowGraph& graph, const DescriptorLookup& lookup);

// Lookup over a universe plus the graph's own synthesized descriptors.
DescriptorLookup make_lookup(const ComponentUniverse& universe,
                             const EventFlowGraph& graph);

}  // namespace fusion
