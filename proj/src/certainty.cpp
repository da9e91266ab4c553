#include "priorforge/certainty.hpp"

#include <algorithm>
#include <cstdint>

namespace priorforge {

SupportGraph support_graph(const InformationStructure& T)
{
    const std::size_t M = T.state_count();
    SupportGraph g;
    g.successors.resize(M);
    for (StateIndex s = 0; s < M; ++s) {
        std::vector<bool> hit(M, false);
        for (PlayerIndex i = 0; i < T.player_count(); ++i) {
            const auto& t = T.type(i, s);
            for (StateIndex u = 0; u < M; ++u) {
                if (!t[u].is_zero()) {
                    hit[u] = true;
                }
            }
        }
        for (StateIndex u = 0; u < M; ++u) {
            if (hit[u]) {
                g.successors[s].push_back(u);
            }
        }
    }
    return g;
}

bool is_component(const InformationStructure& T, const StateSet& S)
{
    if (S.empty()) {
        throw EmptySetError("a common certainty component must be non-empty");
    }
    std::vector<bool> in(T.state_count(), false);
    for (StateIndex s : S) {
        if (s >= T.state_count()) {
            throw DimensionError("state index " + std::to_string(s) + " out of range");
        }
        in[s] = true;
    }
    for (StateIndex s : S) {
        for (PlayerIndex i = 0; i < T.player_count(); ++i) {
            const auto& t = T.type(i, s);
            for (StateIndex u = 0; u < T.state_count(); ++u) {
                if (!in[u] && !t[u].is_zero()) {
                    return false;
                }
            }
        }
    }
    return true;
}

StateSet closure(const InformationStructure& T, StateIndex s)
{
    const SupportGraph g = support_graph(T);
    std::vector<bool> seen(T.state_count(), false);
    std::vector<StateIndex> stack{s};
    seen.at(s) = true;
    while (!stack.empty()) {
        const StateIndex v = stack.back();
        stack.pop_back();
        for (StateIndex u : g.successors[v]) {
            if (!seen[u]) {
                seen[u] = true;
                stack.push_back(u);
            }
        }
    }
    StateSet out;
    for (StateIndex u = 0; u < seen.size(); ++u) {
        if (seen[u]) {
            out.push_back(u);
        }
    }
    return out;
}

namespace {

// Iterative Tarjan; returns the SCC id of every vertex.
std::vector<std::size_t> strong_components(const SupportGraph& g, std::size_t& count)
{
    const std::size_t n = g.successors.size();
    constexpr auto unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, unvisited), low(n, 0), comp(n, unvisited);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::size_t next_index = 0;
    count = 0;

    struct Frame {
        std::size_t v;
        std::size_t edge;
    };
    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != unvisited) {
            continue;
        }
        std::vector<Frame> frames{{root, 0}};
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto& succ = g.successors[f.v];
            if (f.edge < succ.size()) {
                const std::size_t u = succ[f.edge++];
                if (index[u] == unvisited) {
                    index[u] = low[u] = next_index++;
                    stack.push_back(u);
                    on_stack[u] = true;
                    frames.push_back({u, 0});
                } else if (on_stack[u]) {
                    low[f.v] = std::min(low[f.v], index[u]);
                }
                continue;
            }
            const std::size_t v = f.v;
            frames.pop_back();
            if (!frames.empty()) {
                low[frames.back().v] = std::min(low[frames.back().v], low[v]);
            }
            if (low[v] == index[v]) {
                std::size_t w = 0;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = count;
                } while (w != v);
                ++count;
            }
        }
    }
    return comp;
}

}  // namespace

ComponentCatalog minimal_components(const InformationStructure& T)
{
    const SupportGraph g = support_graph(T);
    std::size_t count = 0;
    const auto comp = strong_components(g, count);
    std::vector<bool> bottom(count, true);
    for (StateIndex s = 0; s < g.successors.size(); ++s) {
        for (StateIndex u : g.successors[s]) {
            if (comp[u] != comp[s]) {
                bottom[comp[s]] = false;
            }
        }
    }
    std::vector<StateSet> members(count);
    for (StateIndex s = 0; s < comp.size(); ++s) {
        members[comp[s]].push_back(s);
    }
    ComponentCatalog catalog;
    for (std::size_t c = 0; c < count; ++c) {
        if (bottom[c]) {
            catalog.minimal.push_back(std::move(members[c]));
        }
    }
    std::sort(catalog.minimal.begin(), catalog.minimal.end(),
              [](const StateSet& a, const StateSet& b) { return a.front() < b.front(); });
    return catalog;
}

std::vector<StateSet> all_components(const InformationStructure& T, std::size_t max_states)
{
    const std::size_t M = T.state_count();
    if (M > max_states || M >= 63) {
        throw SizeCapError("enumerating all components needs at most " + std::to_string(max_states) +
                           " states; this structure has " + std::to_string(M));
    }
    const SupportGraph g = support_graph(T);
    std::vector<std::uint64_t> succ_mask(M, 0);
    for (StateIndex s = 0; s < M; ++s) {
        for (StateIndex u : g.successors[s]) {
            succ_mask[s] |= std::uint64_t{1} << u;
        }
    }
    std::vector<StateSet> out;
    const std::uint64_t limit = std::uint64_t{1} << M;
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
        bool closed = true;
        for (StateIndex s = 0; s < M && closed; ++s) {
            if ((mask >> s & 1U) != 0 && (succ_mask[s] & ~mask) != 0) {
                closed = false;
            }
        }
        if (closed) {
            StateSet S;
            for (StateIndex s = 0; s < M; ++s) {
                if ((mask >> s & 1U) != 0) {
                    S.push_back(s);
                }
            }
            out.push_back(std::move(S));
        }
    }
    std::sort(out.begin(), out.end(), [](const StateSet& a, const StateSet& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

bool is_commonly_certain(const InformationStructure& T, const StateSet& E, StateIndex s)
{
    const StateSet c = closure(T, s);
    const StateSet e = make_state_set(E);
    return std::includes(e.begin(), e.end(), c.begin(), c.end());
}

bool is_maximal(const InformationStructure& T, const Distribution& p)
{
    if (p.size() != T.state_count()) {
        throw DimensionError("distribution size does not match the state space");
    }
    for (const auto& S : minimal_components(T).minimal) {
        if (p.measure(S).is_zero()) {
            return false;
        }
    }
    return true;
}

bool is_strongly_maximal(const InformationStructure& T, const Distribution& p)
{
    if (p.size() != T.state_count()) {
        throw DimensionError("distribution size does not match the state space");
    }
    for (PlayerIndex i = 0; i < T.player_count(); ++i) {
        for (const auto& cell : T.cells(i)) {
            if (p.measure(cell).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace priorforge
