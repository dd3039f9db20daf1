#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "bistable/cohomology/cohomology.hpp"
#include "bistable/constraint/coupling_system.hpp"

namespace bistable {

/// A constraint graph that is a single cycle, read from its lowest vertex
/// along the lowest-index incident edge. edges[i] joins vertices[i] and
/// vertices[i+1 mod n]; coupling[i] is c_eff on that edge.
struct Ring {
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> edges;
    std::vector<bool> coupling;

    [[nodiscard]] std::size_t size() const { return vertices.size(); }
    [[nodiscard]] bool holonomy() const;
};

/// Throws unless the constraint edges form exactly one cycle (vertices off
/// the constraint graph are ignored).
[[nodiscard]] Ring ring_of(const CouplingSystem& sys);
[[nodiscard]] Ring ring_with_coupling(std::vector<bool> coupling);

/// A window of `display.size()` consecutive ring positions starting at
/// `start`, showing a local section.
struct Aperture {
    std::shared_ptr<const Ring> ring;
    std::size_t start = 0;
    std::vector<bool> display;

    [[nodiscard]] std::size_t length() const { return display.size(); }
    [[nodiscard]] std::size_t position(std::size_t i) const { return (start + i) % ring->size(); }
    /// Every ring edge inside the window is satisfied by the display.
    [[nodiscard]] bool consistent() const;
};

/// Opens a window of length k whose first vertex shows `first`, the rest
/// filled by transport. Throws when k == 0 or k >= n.
[[nodiscard]] Aperture open_aperture(std::shared_ptr<const Ring> ring, std::size_t start, std::size_t k,
                                     bool first = false);

/// Advances the window by one position (+1 or -1); the new vertex's value is
/// its neighbour's value plus the coupling on the edge crossed.
[[nodiscard]] Aperture slide_aperture(const Aperture& ap, int direction);

struct TraceStep {
    std::vector<std::size_t> window; // ring vertex ids
    std::vector<bool> display;
};

struct CircuitResult {
    bool flip = false;
    std::vector<TraceStep> steps; // initial state and one entry per slide
};

/// laps * n forward slides of a length-k window opened at `start` with the
/// first vertex showing 0; the flip compares the final display with the
/// initial one.
[[nodiscard]] CircuitResult circuit_monodromy(const CouplingSystem& sys, std::size_t window_length, std::size_t laps,
                                              std::size_t start = 0);
[[nodiscard]] CircuitResult circuit_monodromy(const Ring& ring, std::size_t window_length, std::size_t laps,
                                              std::size_t start = 0);

/// Configuration graph of two disjoint length-k windows on an n-cycle.
/// Vertices are unordered window pairs {a < b} (by start position), edges
/// move one window by one step, faces are the commuting squares where both
/// windows advance. The partition bit flips when a moving window crosses an
/// opposition edge or passes the n-1 -> 0 seam, which exchanges the roles of
/// the lower and upper window.
struct DualConfigTorsor {
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<std::pair<std::size_t, std::size_t>> configs;
    CellComplex complex;
    BitVector cocycle;
    CohomologyBasis h1;
    /// Dimension of the cycle space of the configuration graph alone.
    std::size_t graph_cycle_rank = 0;
    /// Coordinates of the cocycle in h1.
    BitVector cocycle_class;

    [[nodiscard]] std::size_t config_index(std::size_t a, std::size_t b) const;
};

/// Throws when 2k >= n or k == 0. Default ring coupling is all-agree.
[[nodiscard]] DualConfigTorsor dual_config_torsor(std::size_t n, std::size_t k,
                                                  const std::optional<std::vector<bool>>& ring_coupling = std::nullopt);

/// Closed walk from {0, floor(n/2)} in which the two windows take turns to
/// advance, the upper one first, until they have traded places.
[[nodiscard]] EdgeWalk exchange_loop(const DualConfigTorsor& t);

/// Sum of the cocycle along a closed walk of the configuration graph.
[[nodiscard]] bool config_monodromy(const DualConfigTorsor& t, const EdgeWalk& loop);

} // namespace bistable
