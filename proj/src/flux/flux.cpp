#include "bistable/flux/flux.hpp"

#include "bistable/complex/subcomplex.hpp"
#include "bistable/z2/linalg.hpp"

namespace bistable {

std::string to_string(BoundaryMode mode) { return mode == BoundaryMode::Free ? "free" : "frozen"; }

BoundaryMode boundary_mode_from_string(const std::string& text) {
    if (text == "free") {
        return BoundaryMode::Free;
    }
    if (text == "frozen") {
        return BoundaryMode::Frozen;
    }
    throw std::invalid_argument("boundary mode must be 'free' or 'frozen', got '" + text + "'");
}

FluxState::FluxState(std::shared_ptr<const CellComplex> c, BitVector m) : complex(std::move(c)), mu(std::move(m)) {
    if (!complex) {
        throw std::invalid_argument("flux: null complex");
    }
    if (mu.size() != complex->face_count()) {
        throw std::invalid_argument("flux: length " + std::to_string(mu.size()) + " does not match " +
                                    std::to_string(complex->face_count()) + " faces");
    }
}

namespace {

void require_flux(const CellComplex& x, const BitVector& mu, const char* what) {
    if (mu.size() != x.face_count()) {
        throw std::invalid_argument(std::string(what) + ": flux length " + std::to_string(mu.size()) +
                                    " does not match " + std::to_string(x.face_count()) + " faces");
    }
}

} // namespace

PotentialResult find_potential(const CellComplex& x, const BitVector& mu) {
    require_flux(x, mu, "find_potential");
    const auto solved = solve_affine(coboundary_matrix(x, 1), mu);
    PotentialResult out;
    if (solved.solvable()) {
        out.potential = solved.solution;
        out.obstruction = BitVector(cohomology(x, 2).dimension());
    } else {
        out.obstruction = sector(x, mu);
    }
    return out;
}

PotentialResult find_potential(const FluxState& state) { return find_potential(*state.complex, state.mu); }

BitVector sector(const CellComplex& x, const BitVector& mu) {
    require_flux(x, mu, "sector");
    return cohomology(x, 2).coordinates(mu);
}

CohomologyBasis sector_group(const CellComplex& x, BoundaryMode mode) {
    if (mode == BoundaryMode::Free) {
        return cohomology(x, 2);
    }
    return relative_cohomology(x, Subcomplex::surface_boundary(x), 2);
}

BitVector toggleable_mask(const CellComplex& x, BoundaryMode mode) {
    if (mode == BoundaryMode::Free) {
        return BitVector::ones(x.edge_count());
    }
    return ~Subcomplex::surface_boundary(x).edges();
}

std::vector<std::size_t> toggleable_edges(const CellComplex& x, BoundaryMode mode) {
    return toggleable_mask(x, mode).support();
}

ReachResult reachable(const CellComplex& x, const BitVector& from, const BitVector& to, BoundaryMode mode) {
    require_flux(x, from, "reachable");
    require_flux(x, to, "reachable");
    const auto diff = from ^ to;
    const auto allowed = toggleable_edges(x, mode);
    const auto solved = solve_affine(coboundary_matrix(x, 1).select_columns(allowed), diff);
    ReachResult out;
    out.reachable = solved.solvable();
    if (out.reachable) {
        for (auto j : solved.solution->support()) {
            out.moves.push_back(allowed[j]);
        }
        out.invariant = BitVector(sector_group(x, mode).dimension());
    } else {
        out.invariant = sector_group(x, mode).coordinates(diff);
    }
    return out;
}

ReachResult reachable(const FluxState& from, const FluxState& to, BoundaryMode mode) {
    if (from.complex != to.complex && !(from.complex->edges() == to.complex->edges() &&
                                         from.complex->faces() == to.complex->faces() &&
                                         from.complex->vertex_count() == to.complex->vertex_count())) {
        throw std::invalid_argument("reachable: fluxes live on different complexes");
    }
    return reachable(*from.complex, from.mu, to.mu, mode);
}

GameSession::GameSession(std::shared_ptr<const CellComplex> complex, BoundaryMode mode, BitVector start,
                         BitVector target)
    : complex_(std::move(complex)), mode_(mode), start_(std::move(start)), target_(std::move(target)) {
    if (!complex_) {
        throw std::invalid_argument("game: null complex");
    }
    require_flux(*complex_, start_, "game start");
    require_flux(*complex_, target_, "game target");
    potential_ = BitVector(complex_->edge_count());
    flux_ = start_;
    toggleable_ = toggleable_mask(*complex_, mode_);
    edge_faces_ = complex_->edge_faces();
}

GameSession GameSession::replay(std::shared_ptr<const CellComplex> complex, BoundaryMode mode, BitVector start,
                                BitVector target, const std::vector<std::size_t>& moves) {
    GameSession s(std::move(complex), mode, std::move(start), std::move(target));
    for (auto e : moves) {
        s.toggle(e);
    }
    return s;
}

BitVector GameSession::sector() const { return bistable::sector(*complex_, flux_); }

bool GameSession::is_toggleable(std::size_t edge) const { return edge < toggleable_.size() && toggleable_.get(edge); }

std::vector<std::size_t> GameSession::toggleable_edges() const { return toggleable_.support(); }

void GameSession::toggle(std::size_t edge) {
    if (edge >= complex_->edge_count()) {
        throw std::out_of_range("game: unknown edge " + std::to_string(edge));
    }
    if (!toggleable_.get(edge)) {
        throw RuleViolation("edge " + std::to_string(edge) +
                            " lies on the frozen boundary; its potential is fixed to zero");
    }
    potential_.flip(edge);
    // An edge listed twice in one face flips that face twice.
    for (auto f : edge_faces_[edge]) {
        flux_.flip(f);
    }
    moves_.push_back(edge);
}

void GameSession::reset() {
    potential_ = BitVector(complex_->edge_count());
    flux_ = start_;
    moves_.clear();
}

ReachResult GameSession::solve() const { return reachable(*complex_, flux_, target_, mode_); }

GameSession toggle(GameSession session, std::size_t edge) {
    session.toggle(edge);
    return session;
}

} // namespace bistable
