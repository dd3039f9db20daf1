#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bistable/cohomology/cohomology.hpp"
#include "bistable/complex/cell_complex.hpp"

namespace bistable {

/// Free: every edge toggles. Frozen: edges of the surface boundary (edges in
/// exactly one face) are fixed and potentials vanish there.
enum class BoundaryMode { Free, Frozen };

[[nodiscard]] std::string to_string(BoundaryMode mode);
/// Accepts "free" and "frozen".
[[nodiscard]] BoundaryMode boundary_mode_from_string(const std::string& text);

/// A face 2-cochain on a fixed complex.
struct FluxState {
    FluxState(std::shared_ptr<const CellComplex> complex, BitVector mu);

    std::shared_ptr<const CellComplex> complex;
    BitVector mu;
};

struct PotentialResult {
    std::optional<BitVector> potential; // δA = μ
    BitVector obstruction;              // H² coordinates of [μ]; zero when solvable

    [[nodiscard]] bool solvable() const { return potential.has_value(); }
};

/// Solves δA = μ. On failure the H² class of μ is reported.
[[nodiscard]] PotentialResult find_potential(const CellComplex& x, const BitVector& mu);
[[nodiscard]] PotentialResult find_potential(const FluxState& state);

/// H² coordinates of [μ]. On a connected closed surface this is the total
/// parity of μ.
[[nodiscard]] BitVector sector(const CellComplex& x, const BitVector& mu);

/// The group in which reachability is decided: H²(X) when free, H²(X, ∂X)
/// when frozen.
[[nodiscard]] CohomologyBasis sector_group(const CellComplex& x, BoundaryMode mode);

[[nodiscard]] BitVector toggleable_mask(const CellComplex& x, BoundaryMode mode);
[[nodiscard]] std::vector<std::size_t> toggleable_edges(const CellComplex& x, BoundaryMode mode);

struct ReachResult {
    bool reachable = false;
    std::vector<std::size_t> moves; // support of a potential, ascending
    BitVector invariant;            // class of from ⊕ to in the sector group
};

/// Edge toggles taking `from` to `to`, or the class separating them.
/// Throws std::invalid_argument on length mismatch.
[[nodiscard]] ReachResult reachable(const CellComplex& x, const BitVector& from, const BitVector& to,
                                    BoundaryMode mode);
[[nodiscard]] ReachResult reachable(const FluxState& from, const FluxState& to, BoundaryMode mode);

/// A toggle the rules forbid.
class RuleViolation : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Edge-toggle game. The potential and current flux are derived from the
/// start flux and the move log.
class GameSession {
  public:
    GameSession(std::shared_ptr<const CellComplex> complex, BoundaryMode mode, BitVector start, BitVector target);

    /// Rebuilds a session from its log.
    [[nodiscard]] static GameSession replay(std::shared_ptr<const CellComplex> complex, BoundaryMode mode,
                                            BitVector start, BitVector target, const std::vector<std::size_t>& moves);

    [[nodiscard]] const CellComplex& complex() const { return *complex_; }
    [[nodiscard]] const std::shared_ptr<const CellComplex>& complex_ptr() const { return complex_; }
    [[nodiscard]] BoundaryMode mode() const { return mode_; }
    [[nodiscard]] const BitVector& start() const { return start_; }
    [[nodiscard]] const BitVector& target() const { return target_; }
    [[nodiscard]] const BitVector& potential() const { return potential_; }
    [[nodiscard]] const BitVector& flux() const { return flux_; }
    [[nodiscard]] const std::vector<std::size_t>& moves() const { return moves_; }
    [[nodiscard]] bool won() const { return flux_ == target_; }
    [[nodiscard]] BitVector sector() const;
    [[nodiscard]] bool is_toggleable(std::size_t edge) const;
    [[nodiscard]] std::vector<std::size_t> toggleable_edges() const;

    /// Throws RuleViolation for frozen boundary edges, std::out_of_range for
    /// unknown edges.
    void toggle(std::size_t edge);
    void reset();
    /// Moves from the current flux to the target.
    [[nodiscard]] ReachResult solve() const;

  private:
    std::shared_ptr<const CellComplex> complex_;
    BoundaryMode mode_;
    BitVector start_;
    BitVector target_;
    BitVector potential_;
    BitVector flux_;
    std::vector<std::size_t> moves_;
    BitVector toggleable_;
    std::vector<std::vector<std::size_t>> edge_faces_;
};

/// Value-style toggle.
[[nodiscard]] GameSession toggle(GameSession session, std::size_t edge);

} // namespace bistable
