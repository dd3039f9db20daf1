#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bistable/z2/bit_matrix.hpp"

namespace bistable {

struct Edge {
    std::size_t u = 0;
    std::size_t v = 0;

    [[nodiscard]] bool touches(std::size_t w) const { return u == w || v == w; }
    /// Endpoint opposite to `w`; `w` must be an endpoint.
    [[nodiscard]] std::size_t other(std::size_t w) const { return w == u ? v : u; }

    friend bool operator==(const Edge&, const Edge&) = default;
};

using Labels = std::map<std::string, std::string>;

/// A walk through the 1-skeleton: a start vertex and the edges traversed.
struct EdgeWalk {
    std::size_t start = 0;
    std::vector<std::size_t> edges;
};

/// Combinatorial 2-complex. Faces are closed edge-walks so that doubled edges
/// (as in a 2xM torus) stay representable.
///
/// Construction does not validate; call validate() or require_valid().
class CellComplex {
  public:
    CellComplex() = default;
    CellComplex(std::size_t vertex_count, std::vector<Edge> edges,
                std::vector<std::vector<std::size_t>> faces = {}, Labels labels = {});

    [[nodiscard]] std::size_t vertex_count() const { return vertex_count_; }
    [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
    [[nodiscard]] std::size_t face_count() const { return faces_.size(); }
    /// Number of k-cells, k in {0, 1, 2}; 0 for any other k.
    [[nodiscard]] std::size_t cell_count(int k) const;

    [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
    [[nodiscard]] const Edge& edge(std::size_t e) const { return edges_.at(e); }
    [[nodiscard]] const std::vector<std::vector<std::size_t>>& faces() const { return faces_; }
    [[nodiscard]] const std::vector<std::size_t>& face(std::size_t f) const { return faces_.at(f); }
    [[nodiscard]] const Labels& labels() const { return labels_; }

    /// Vertex sequence w0, w1, ..., w_{m-1} visited by the face walk, where the
    /// walk's i-th edge joins w_i and w_{i+1 mod m}. Throws if the walk is open.
    [[nodiscard]] std::vector<std::size_t> face_vertices(std::size_t f) const;

    /// Indices of faces incident to each edge (with multiplicity mod 2).
    [[nodiscard]] std::vector<std::vector<std::size_t>> edge_faces() const;
    /// Edges incident to each vertex, in edge-index order.
    [[nodiscard]] std::vector<std::vector<std::size_t>> vertex_edges() const;

    /// Every edge lies in exactly two faces.
    [[nodiscard]] bool is_closed_surface() const;

    /// Mod-2 boundary of a set of faces, as an edge mask.
    [[nodiscard]] BitVector region_boundary(std::span<const std::size_t> faces) const;

    friend bool operator==(const CellComplex&, const CellComplex&) = default;

  private:
    std::size_t vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> faces_;
    Labels labels_;
};

/// Follows `walk` from its start vertex. Returns the visited vertex sequence
/// (length edges+1) or nullopt if some edge is not incident to the current
/// vertex or an edge index is out of range.
[[nodiscard]] std::optional<std::vector<std::size_t>> trace_walk(const CellComplex& x, const EdgeWalk& walk);
[[nodiscard]] bool is_closed_walk(const CellComplex& x, const EdgeWalk& walk);

/// Edges of a walk through the given vertex sequence, picking the
/// lowest-index edge between consecutive vertices that satisfies `allowed`
/// (all edges when the mask is empty). The sequence is closed if its last
/// vertex differs from the first. Throws if some step has no edge.
[[nodiscard]] EdgeWalk walk_through_vertices(const CellComplex& x, std::span<const std::size_t> vertices,
                                             bool close, const BitVector* allowed = nullptr);

struct ValidationOptions {
    bool allow_loops = false;
    bool allow_repeated_face_edges = false;
};

/// Checks all structural invariants, including that the composite boundary
/// ∂₁∂₂ vanishes. Returns human-readable violations; empty means valid.
[[nodiscard]] std::vector<std::string> validate(const CellComplex& x, const ValidationOptions& options = {});
/// Throws std::invalid_argument listing violations.
void require_valid(const CellComplex& x, const ValidationOptions& options = {});

/// ∂₁ (vertices x edges) for k = 1, ∂₂ (edges x faces) for k = 2.
[[nodiscard]] BitMatrix boundary_matrix(const CellComplex& x, int k);
/// δᵏ : Cᵏ → Cᵏ⁺¹ as a (#(k+1)-cells x #k-cells) matrix, k in {0, 1, 2}.
/// δ² is the zero map into the empty space.
[[nodiscard]] BitMatrix coboundary_matrix(const CellComplex& x, int k);
/// Applies δᵏ to a k-cochain.
[[nodiscard]] BitVector coboundary(const CellComplex& x, int k, const BitVector& cochain);

[[nodiscard]] long euler_characteristic(const CellComplex& x);

/// Builds a complex from polygons given as vertex cycles. Edges are created
/// in order of first appearance; a polygon side reuses the first existing
/// edge joining the same two vertices.
[[nodiscard]] CellComplex complex_from_polygons(std::size_t vertex_count,
                                                const std::vector<std::vector<std::size_t>>& polygons,
                                                Labels labels = {});

/// Connected components of the graph formed by the vertices and the edges
/// selected by `edge_mask`. Returns a component label per vertex; labels are
/// numbered in order of each component's lowest vertex.
[[nodiscard]] std::vector<std::size_t> component_labels(const CellComplex& x, const BitVector& edge_mask);

} // namespace bistable
