#include "bistable/complex/cell_complex.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bistable {

CellComplex::CellComplex(std::size_t vertex_count, std::vector<Edge> edges,
                         std::vector<std::vector<std::size_t>> faces, Labels labels)
    : vertex_count_(vertex_count), edges_(std::move(edges)), faces_(std::move(faces)), labels_(std::move(labels)) {}

std::size_t CellComplex::cell_count(int k) const {
    switch (k) {
    case 0:
        return vertex_count_;
    case 1:
        return edges_.size();
    case 2:
        return faces_.size();
    default:
        return 0;
    }
}

namespace {

// Tries both orientations of the first edge; returns the vertex cycle if the
// walk closes up.
std::optional<std::vector<std::size_t>> closed_face_cycle(const CellComplex& x,
                                                          const std::vector<std::size_t>& walk) {
    if (walk.empty()) {
        return std::nullopt;
    }
    for (auto e : walk) {
        if (e >= x.edge_count()) {
            return std::nullopt;
        }
    }
    const auto& first = x.edge(walk.front());
    for (auto start : {first.u, first.v}) {
        EdgeWalk w{start, walk};
        auto verts = trace_walk(x, w);
        if (verts && verts->back() == start) {
            verts->pop_back();
            return verts;
        }
    }
    return std::nullopt;
}

} // namespace

std::vector<std::size_t> CellComplex::face_vertices(std::size_t f) const {
    auto cycle = closed_face_cycle(*this, faces_.at(f));
    if (!cycle) {
        throw std::invalid_argument("face " + std::to_string(f) + ": open face walk");
    }
    return *cycle;
}

std::vector<std::vector<std::size_t>> CellComplex::edge_faces() const {
    std::vector<std::vector<std::size_t>> out(edges_.size());
    for (std::size_t f = 0; f < faces_.size(); ++f) {
        for (auto e : faces_[f]) {
            out.at(e).push_back(f);
        }
    }
    return out;
}

std::vector<std::vector<std::size_t>> CellComplex::vertex_edges() const {
    std::vector<std::vector<std::size_t>> out(vertex_count_);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        out.at(edges_[e].u).push_back(e);
        if (edges_[e].v != edges_[e].u) {
            out.at(edges_[e].v).push_back(e);
        }
    }
    return out;
}

bool CellComplex::is_closed_surface() const {
    if (faces_.empty()) {
        return false;
    }
    const auto incidence = edge_faces();
    return std::all_of(incidence.begin(), incidence.end(), [](const auto& fs) { return fs.size() == 2; });
}

BitVector CellComplex::region_boundary(std::span<const std::size_t> faces) const {
    BitVector boundary(edges_.size());
    for (auto f : faces) {
        for (auto e : faces_.at(f)) {
            boundary.flip(e);
        }
    }
    return boundary;
}

std::optional<std::vector<std::size_t>> trace_walk(const CellComplex& x, const EdgeWalk& walk) {
    if (walk.start >= x.vertex_count()) {
        return std::nullopt;
    }
    std::vector<std::size_t> verts{walk.start};
    verts.reserve(walk.edges.size() + 1);
    std::size_t at = walk.start;
    for (auto e : walk.edges) {
        if (e >= x.edge_count() || !x.edge(e).touches(at)) {
            return std::nullopt;
        }
        at = x.edge(e).other(at);
        verts.push_back(at);
    }
    return verts;
}

bool is_closed_walk(const CellComplex& x, const EdgeWalk& walk) {
    const auto verts = trace_walk(x, walk);
    return verts && verts->back() == walk.start;
}

EdgeWalk walk_through_vertices(const CellComplex& x, std::span<const std::size_t> vertices, bool close,
                               const BitVector* allowed) {
    if (vertices.empty()) {
        throw std::invalid_argument("walk_through_vertices: empty vertex sequence");
    }
    std::vector<std::size_t> seq(vertices.begin(), vertices.end());
    if (close && seq.size() > 1 && seq.front() != seq.back()) {
        seq.push_back(seq.front());
    }
    const auto incident = x.vertex_edges();
    EdgeWalk walk{seq.front(), {}};
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        const auto a = seq[i];
        const auto b = seq[i + 1];
        if (a >= x.vertex_count() || b >= x.vertex_count()) {
            throw std::invalid_argument("walk_through_vertices: vertex out of range");
        }
        std::optional<std::size_t> found;
        for (auto e : incident[a]) {
            if (x.edge(e).other(a) == b && (allowed == nullptr || allowed->get(e))) {
                found = e;
                break;
            }
        }
        if (!found) {
            throw std::invalid_argument("walk_through_vertices: no usable edge between " + std::to_string(a) +
                                        " and " + std::to_string(b));
        }
        walk.edges.push_back(*found);
    }
    return walk;
}

std::vector<std::string> validate(const CellComplex& x, const ValidationOptions& options) {
    std::vector<std::string> violations;
    bool edges_ok = true;
    for (std::size_t e = 0; e < x.edge_count(); ++e) {
        const auto& ed = x.edge(e);
        if (ed.u >= x.vertex_count() || ed.v >= x.vertex_count()) {
            violations.push_back("edge " + std::to_string(e) + ": endpoint out of range");
            edges_ok = false;
        } else if (ed.u == ed.v && !options.allow_loops) {
            violations.push_back("edge " + std::to_string(e) + ": loop edge");
        }
    }
    bool faces_ok = edges_ok;
    for (std::size_t f = 0; f < x.face_count(); ++f) {
        const auto& walk = x.face(f);
        const auto tag = "face " + std::to_string(f) + ": ";
        if (walk.empty()) {
            violations.push_back(tag + "zero-length face");
            faces_ok = false;
            continue;
        }
        bool in_range = true;
        for (auto e : walk) {
            if (e >= x.edge_count()) {
                violations.push_back(tag + "unknown edge " + std::to_string(e));
                in_range = false;
            }
        }
        if (!in_range) {
            faces_ok = false;
            continue;
        }
        if (!options.allow_repeated_face_edges) {
            auto sorted = walk;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
                violations.push_back(tag + "repeated edge in face");
            }
        }
        if (edges_ok && !closed_face_cycle(x, walk)) {
            violations.push_back(tag + "open face walk");
            faces_ok = false;
        }
    }
    if (faces_ok && edges_ok && x.face_count() > 0) {
        if (!(boundary_matrix(x, 1) * boundary_matrix(x, 2)).is_zero()) {
            violations.push_back("boundary of boundary is nonzero");
        }
    }
    return violations;
}

void require_valid(const CellComplex& x, const ValidationOptions& options) {
    const auto violations = validate(x, options);
    if (!violations.empty()) {
        std::string msg = "invalid cell complex:";
        for (const auto& v : violations) {
            msg += "\n  " + v;
        }
        throw std::invalid_argument(msg);
    }
}

BitMatrix boundary_matrix(const CellComplex& x, int k) {
    if (k == 1) {
        BitMatrix m(x.vertex_count(), x.edge_count());
        for (std::size_t e = 0; e < x.edge_count(); ++e) {
            m.flip(x.edge(e).u, e);
            m.flip(x.edge(e).v, e);
        }
        return m;
    }
    if (k == 2) {
        BitMatrix m(x.edge_count(), x.face_count());
        for (std::size_t f = 0; f < x.face_count(); ++f) {
            for (auto e : x.face(f)) {
                m.flip(e, f);
            }
        }
        return m;
    }
    throw std::invalid_argument("boundary_matrix: k must be 1 or 2, got " + std::to_string(k));
}

BitMatrix coboundary_matrix(const CellComplex& x, int k) {
    switch (k) {
    case 0:
        return boundary_matrix(x, 1).transpose();
    case 1:
        return boundary_matrix(x, 2).transpose();
    case 2:
        return BitMatrix(0, x.face_count());
    default:
        throw std::invalid_argument("coboundary_matrix: k must be 0, 1 or 2, got " + std::to_string(k));
    }
}

BitVector coboundary(const CellComplex& x, int k, const BitVector& cochain) {
    if (cochain.size() != x.cell_count(k)) {
        throw std::invalid_argument("coboundary: cochain length does not match the number of " +
                                    std::to_string(k) + "-cells");
    }
    switch (k) {
    case 0: {
        BitVector out(x.edge_count());
        for (std::size_t e = 0; e < x.edge_count(); ++e) {
            out.set(e, cochain.get(x.edge(e).u) != cochain.get(x.edge(e).v));
        }
        return out;
    }
    case 1: {
        BitVector out(x.face_count());
        for (std::size_t f = 0; f < x.face_count(); ++f) {
            bool s = false;
            for (auto e : x.face(f)) {
                s = s != cochain.get(e);
            }
            out.set(f, s);
        }
        return out;
    }
    case 2:
        return BitVector(0);
    default:
        throw std::invalid_argument("coboundary: k must be 0, 1 or 2");
    }
}

long euler_characteristic(const CellComplex& x) {
    return static_cast<long>(x.vertex_count()) - static_cast<long>(x.edge_count()) +
           static_cast<long>(x.face_count());
}

CellComplex complex_from_polygons(std::size_t vertex_count, const std::vector<std::vector<std::size_t>>& polygons,
                                  Labels labels) {
    std::vector<Edge> edges;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
    std::vector<std::vector<std::size_t>> faces;
    faces.reserve(polygons.size());
    for (const auto& poly : polygons) {
        if (poly.size() < 2) {
            throw std::invalid_argument("complex_from_polygons: polygon needs at least two vertices");
        }
        std::vector<std::size_t> walk;
        for (std::size_t i = 0; i < poly.size(); ++i) {
            const auto a = poly[i];
            const auto b = poly[(i + 1) % poly.size()];
            if (a >= vertex_count || b >= vertex_count) {
                throw std::invalid_argument("complex_from_polygons: vertex out of range");
            }
            const auto key = std::minmax(a, b);
            auto it = index.find(key);
            if (it == index.end()) {
                it = index.emplace(key, edges.size()).first;
                edges.push_back({a, b});
            }
            walk.push_back(it->second);
        }
        faces.push_back(std::move(walk));
    }
    return CellComplex(vertex_count, std::move(edges), std::move(faces), std::move(labels));
}

std::vector<std::size_t> component_labels(const CellComplex& x, const BitVector& edge_mask) {
    // Union-find with path halving.
    std::vector<std::size_t> parent(x.vertex_count());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    };
    for (auto e : edge_mask.support()) {
        auto a = find(x.edge(e).u);
        auto b = find(x.edge(e).v);
        if (a != b) {
            parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::vector<std::size_t> label(x.vertex_count());
    std::map<std::size_t, std::size_t> numbering;
    for (std::size_t v = 0; v < x.vertex_count(); ++v) {
        const auto root = find(v);
        auto it = numbering.try_emplace(root, numbering.size()).first;
        label[v] = it->second;
    }
    return label;
}

} // namespace bistable
