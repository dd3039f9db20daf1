#include "bistable/complex/subcomplex.hpp"

#include <stdexcept>
#include <string>

namespace bistable {

Subcomplex::Subcomplex(const CellComplex& x, BitVector vertices, BitVector edges, BitVector faces)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), faces_(std::move(faces)) {
    if (vertices_.size() != x.vertex_count() || edges_.size() != x.edge_count() ||
        faces_.size() != x.face_count()) {
        throw std::invalid_argument("subcomplex: mask lengths do not match the parent complex");
    }
    for (auto e : edges_.support()) {
        if (!vertices_.get(x.edge(e).u) || !vertices_.get(x.edge(e).v)) {
            throw std::invalid_argument("subcomplex not closed: edge " + std::to_string(e) +
                                        " is selected without its endpoints");
        }
    }
    for (auto f : faces_.support()) {
        for (auto e : x.face(f)) {
            if (!edges_.get(e)) {
                throw std::invalid_argument("subcomplex not closed: face " + std::to_string(f) +
                                            " is selected without edge " + std::to_string(e));
            }
        }
    }
}

Subcomplex Subcomplex::empty(const CellComplex& x) {
    return {x, BitVector(x.vertex_count()), BitVector(x.edge_count()), BitVector(x.face_count())};
}

Subcomplex Subcomplex::of_vertices(const CellComplex& x, std::span<const std::size_t> vertices) {
    BitVector mask(x.vertex_count());
    for (auto v : vertices) {
        if (v >= x.vertex_count()) {
            throw std::invalid_argument("subcomplex: vertex " + std::to_string(v) + " out of range");
        }
        mask.set(v);
    }
    return {x, std::move(mask), BitVector(x.edge_count()), BitVector(x.face_count())};
}

Subcomplex Subcomplex::closure_of_edges(const CellComplex& x, const BitVector& edges) {
    BitVector verts(x.vertex_count());
    for (auto e : edges.support()) {
        verts.set(x.edge(e).u);
        verts.set(x.edge(e).v);
    }
    return {x, std::move(verts), edges, BitVector(x.face_count())};
}

Subcomplex Subcomplex::boundary_of(const CellComplex& x, std::span<const std::size_t> faces) {
    return closure_of_edges(x, x.region_boundary(faces));
}

Subcomplex Subcomplex::surface_boundary(const CellComplex& x) {
    const auto incidence = x.edge_faces();
    BitVector edges(x.edge_count());
    for (std::size_t e = 0; e < x.edge_count(); ++e) {
        if (incidence[e].size() == 1) {
            edges.set(e);
        }
    }
    return closure_of_edges(x, edges);
}

const BitVector& Subcomplex::mask(int k) const {
    switch (k) {
    case 0:
        return vertices_;
    case 1:
        return edges_;
    case 2:
        return faces_;
    default:
        throw std::invalid_argument("subcomplex: no mask for degree " + std::to_string(k));
    }
}

} // namespace bistable
