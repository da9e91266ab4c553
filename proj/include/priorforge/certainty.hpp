#pragma once

#include "priorforge/structure.hpp"

#include <vector>

namespace priorforge {

/// Edge s -> s' iff some player's type at s charges s'. Successor lists are
/// sorted.
struct SupportGraph {
    std::vector<std::vector<StateIndex>> successors;
};

/// The minimal common certainty components: the bottom strongly connected
/// components of the support graph, ordered by smallest contained state.
/// They are pairwise disjoint and every component contains at least one.
struct ComponentCatalog {
    std::vector<StateSet> minimal;
};

SupportGraph support_graph(const InformationStructure& T);

/// True iff S is forward-closed: every player's type at every state of S is
/// supported inside S. Throws EmptySetError for an empty S and
/// DimensionError for an out-of-range state.
bool is_component(const InformationStructure& T, const StateSet& S);

/// Forward-reachable set of s, i.e. the smallest component containing s.
StateSet closure(const InformationStructure& T, StateIndex s);

ComponentCatalog minimal_components(const InformationStructure& T);

/// Every common certainty component, ordered by size and then
/// lexicographically. Throws SizeCapError when the state count exceeds
/// `max_states`.
std::vector<StateSet> all_components(const InformationStructure& T, std::size_t max_states = 20);

/// E is commonly certain at s iff closure(s) is contained in E.
bool is_commonly_certain(const InformationStructure& T, const StateSet& E, StateIndex s);

/// p(S) > 0 for every component; checked on the minimal ones.
bool is_maximal(const InformationStructure& T, const Distribution& p);

/// p(cell) > 0 for every cell of every player.
bool is_strongly_maximal(const InformationStructure& T, const Distribution& p);

}  // namespace priorforge
