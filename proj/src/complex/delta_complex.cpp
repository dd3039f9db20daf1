#include "bistable/complex/delta_complex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace bistable {

namespace {

// A triangle before sorting: three corners, and for each corner pair the edge
// joining them.
struct RawTriangle {
    std::array<std::size_t, 3> corners;
    std::size_t e01, e12, e02; // corners (0,1), (1,2), (0,2)
};

Triangle order_triangle(const RawTriangle& raw) {
    // Edge lookup by unordered pair of corner vertices; corners are distinct.
    auto edge_between = [&](std::size_t a, std::size_t b) {
        const auto& c = raw.corners;
        auto is = [&](std::size_t i, std::size_t j) {
            return (c[i] == a && c[j] == b) || (c[i] == b && c[j] == a);
        };
        if (is(0, 1)) {
            return raw.e01;
        }
        if (is(1, 2)) {
            return raw.e12;
        }
        return raw.e02;
    };
    Triangle t;
    t.v = raw.corners;
    std::sort(t.v.begin(), t.v.end());
    t.e = {edge_between(t.v[0], t.v[1]), edge_between(t.v[1], t.v[2]), edge_between(t.v[0], t.v[2])};
    return t;
}

} // namespace

DeltaComplex triangulate(const CellComplex& x) {
    std::vector<Edge> edges;
    edges.reserve(x.edge_count());
    for (const auto& e : x.edges()) {
        edges.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
    }
    // Per refined diagonal: the parent edges summed by the pullback.
    std::vector<std::vector<std::size_t>> diagonal_paths;
    std::vector<RawTriangle> raw;
    std::vector<std::size_t> carrier(x.face_count());

    for (std::size_t f = 0; f < x.face_count(); ++f) {
        const auto& walk = x.face(f);
        if (walk.size() < 3) {
            throw std::invalid_argument("triangulate: face " + std::to_string(f) + " has fewer than three edges");
        }
        const auto verts = x.face_vertices(f);
        if (std::set<std::size_t>(verts.begin(), verts.end()).size() != verts.size()) {
            throw std::invalid_argument("triangulate: face " + std::to_string(f) +
                                        " is a non-simple face; pre-subdivide");
        }
        // Rotate so the walk starts at the lowest vertex.
        const auto m = verts.size();
        const auto shift = static_cast<std::size_t>(std::min_element(verts.begin(), verts.end()) - verts.begin());
        std::vector<std::size_t> w(m), we(m); // w[i] -- we[i] -- w[i+1]
        for (std::size_t i = 0; i < m; ++i) {
            w[i] = verts[(i + shift) % m];
            we[i] = walk[(i + shift) % m];
        }
        // spoke[j] joins w[0] and w[j], for 1 <= j <= m-1.
        std::vector<std::size_t> spoke(m);
        spoke[1] = we[0];
        spoke[m - 1] = we[m - 1];
        for (std::size_t j = 2; j + 1 < m; ++j) {
            spoke[j] = edges.size();
            edges.push_back({std::min(w[0], w[j]), std::max(w[0], w[j])});
            diagonal_paths.emplace_back(we.begin(), we.begin() + static_cast<std::ptrdiff_t>(j));
        }
        for (std::size_t j = 1; j + 1 < m; ++j) {
            raw.push_back({{w[0], w[j], w[j + 1]}, spoke[j], we[j], spoke[j + 1]});
        }
        carrier[f] = raw.size() - 1;
    }

    DeltaComplex out;
    out.parent_edge_count = x.edge_count();
    out.parent_face_count = x.face_count();
    std::vector<std::vector<std::size_t>> tri_faces;
    tri_faces.reserve(raw.size());
    for (const auto& r : raw) {
        auto t = order_triangle(r);
        tri_faces.push_back({t.e[0], t.e[1], t.e[2]});
        out.triangles.push_back(t);
    }
    const auto refined_edges = edges.size();
    out.complex = CellComplex(x.vertex_count(), std::move(edges), std::move(tri_faces), x.labels());

    out.pullback1 = BitMatrix(refined_edges, x.edge_count());
    for (std::size_t e = 0; e < x.edge_count(); ++e) {
        out.pullback1.set(e, e);
    }
    for (std::size_t d = 0; d < diagonal_paths.size(); ++d) {
        for (auto e : diagonal_paths[d]) {
            out.pullback1.flip(x.edge_count() + d, e);
        }
    }
    out.pullback2 = BitMatrix(out.triangles.size(), x.face_count());
    for (std::size_t f = 0; f < x.face_count(); ++f) {
        out.pullback2.set(carrier[f], f);
    }
    return out;
}

BitVector pull_back(const DeltaComplex& t, int k, const BitVector& cochain) {
    switch (k) {
    case 0:
        if (cochain.size() != t.complex.vertex_count()) {
            throw std::invalid_argument("pull_back: 0-cochain has wrong length");
        }
        return cochain;
    case 1:
        return t.pullback1 * cochain;
    case 2:
        return t.pullback2 * cochain;
    default:
        throw std::invalid_argument("pull_back: degree must be 0, 1 or 2");
    }
}

} // namespace bistable
