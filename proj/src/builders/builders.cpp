#include "bistable/builders/builders.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>

#include "bistable/cohomology/cohomology.hpp"

namespace bistable {

namespace {

std::shared_ptr<const CellComplex> finish(CellComplex x) {
    require_valid(x);
    return std::make_shared<const CellComplex>(std::move(x));
}

Labels label(const std::string& kind, std::initializer_list<std::pair<const std::string, std::string>> extra = {}) {
    Labels l(extra);
    l["kind"] = kind;
    return l;
}

// Every edge is a constraint edge with the same coupling bit.
CouplingSystem uniform(std::shared_ptr<const CellComplex> x, bool bit, const std::string& name, Pins pins = {},
                       std::optional<BitVector> twist = std::nullopt) {
    const auto e = x->edge_count();
    auto c = bit ? BitVector::ones(e) : BitVector(e);
    return {std::move(x), BitVector::ones(e), std::move(c), std::move(twist), std::move(pins), name};
}

void require(bool ok, const std::string& message) {
    if (!ok) {
        throw std::invalid_argument(message);
    }
}

CellComplex cycle_complex(std::size_t n, const std::string& kind) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        edges.push_back({i, (i + 1) % n});
    }
    return {n, std::move(edges), {}, label(kind, {{"n", std::to_string(n)}})};
}

} // namespace

CouplingSystem gear_ring(std::size_t n) {
    require(n >= 3, "gear_ring: n must be at least 3");
    return uniform(finish(cycle_complex(n, "gear_ring")), true, "gear_ring");
}

CouplingSystem gear_torus(std::size_t rows, std::size_t cols) {
    require(rows >= 2 && cols >= 2, "gear_torus: both dimensions must be at least 2");
    const auto n = rows;
    const auto m = cols;
    auto vid = [&](std::size_t i, std::size_t j) { return (i % n) * m + (j % m); };
    auto h = [&](std::size_t i, std::size_t j) { return (i % n) * m + (j % m); };
    auto v = [&](std::size_t i, std::size_t j) { return n * m + (i % n) * m + (j % m); };
    std::vector<Edge> edges(2 * n * m);
    std::vector<std::vector<std::size_t>> faces;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            edges[h(i, j)] = {vid(i, j), vid(i, j + 1)};
            edges[v(i, j)] = {vid(i, j), vid(i + 1, j)};
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            faces.push_back({h(i, j), v(i, j + 1), h(i + 1, j), v(i, j)});
        }
    }
    CellComplex x(n * m, std::move(edges), std::move(faces),
                  label("gear_torus", {{"rows", std::to_string(n)}, {"cols", std::to_string(m)}}));
    return uniform(finish(std::move(x)), true, "gear_torus");
}

std::pair<EdgeWalk, EdgeWalk> torus_generators(std::size_t rows, std::size_t cols) {
    EdgeWalk horizontal{0, {}};
    EdgeWalk vertical{0, {}};
    for (std::size_t j = 0; j < cols; ++j) {
        horizontal.edges.push_back(j);
    }
    for (std::size_t i = 0; i < rows; ++i) {
        vertical.edges.push_back(rows * cols + i * cols);
    }
    return {horizontal, vertical};
}

std::pair<BitVector, BitVector> torus_generator_cocycles(std::size_t rows, std::size_t cols) {
    BitVector alpha(2 * rows * cols);
    BitVector beta(2 * rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
        alpha.set(i * cols + cols - 1);
    }
    for (std::size_t j = 0; j < cols; ++j) {
        beta.set(rows * cols + (rows - 1) * cols + j);
    }
    return {alpha, beta};
}

CouplingSystem mobius_ring(std::size_t n, std::vector<std::size_t> twist_edges) {
    require(n >= 3, "mobius_ring: n must be at least 3");
    if (twist_edges.empty()) {
        twist_edges.push_back(n - 1);
    }
    BitVector twist(n);
    for (auto e : twist_edges) {
        require(e < n, "mobius_ring: twist edge " + std::to_string(e) + " out of range");
        twist.flip(e);
    }
    return uniform(finish(cycle_complex(n, "mobius_ring")), true, "mobius_ring", {}, twist);
}

CouplingSystem spinning_necker_ring(std::size_t n) {
    require(n >= 3, "spinning_necker_ring: n must be at least 3");
    return uniform(finish(cycle_complex(n, "spinning_necker_ring")), false, "spinning_necker_ring", {},
                   BitVector::unit(n, n - 1));
}

CouplingSystem necker_path(std::size_t n, bool a, bool b) {
    require(n >= 1, "necker_path: n must be at least 1");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        edges.push_back({i, i + 1});
    }
    CellComplex x(n + 1, std::move(edges), {}, label("necker_path", {{"n", std::to_string(n)}}));
    return uniform(finish(std::move(x)), false, "necker_path", Pins{{0, a}, {n, b}});
}

namespace {

CellComplex grid_complex(std::size_t w, std::size_t h, const std::string& kind) {
    std::vector<Edge> edges;
    auto vid = [&](std::size_t x, std::size_t y) { return x + y * w; };
    for (std::size_t y = 0; y < h; ++y) {
        for (std::size_t x = 0; x + 1 < w; ++x) {
            edges.push_back({vid(x, y), vid(x + 1, y)});
        }
    }
    const auto horizontal = edges.size();
    for (std::size_t y = 0; y + 1 < h; ++y) {
        for (std::size_t x = 0; x < w; ++x) {
            edges.push_back({vid(x, y), vid(x, y + 1)});
        }
    }
    auto hedge = [&](std::size_t x, std::size_t y) { return y * (w - 1) + x; };
    auto vedge = [&](std::size_t x, std::size_t y) { return horizontal + y * w + x; };
    std::vector<std::vector<std::size_t>> faces;
    for (std::size_t y = 0; y + 1 < h; ++y) {
        for (std::size_t x = 0; x + 1 < w; ++x) {
            faces.push_back({hedge(x, y), vedge(x + 1, y), hedge(x, y + 1), vedge(x, y)});
        }
    }
    return {w * h, std::move(edges), std::move(faces),
            label(kind, {{"w", std::to_string(w)}, {"h", std::to_string(h)}})};
}

} // namespace

CouplingSystem necker_grid(std::size_t w, std::size_t h, Pins pins) {
    require(w >= 1 && h >= 1 && w * h >= 2, "necker_grid: grid needs at least two vertices");
    for (const auto& [v, bit] : pins) {
        require(v < w * h, "necker_grid: pinned vertex " + std::to_string(v) + " out of range");
    }
    return uniform(finish(grid_complex(w, h, "necker_grid")), false, "necker_grid", std::move(pins));
}

CouplingSystem lozenge_patch(std::size_t w, std::size_t h, bool pin_boundary) {
    require(w >= 3 && h >= 2, "lozenge_patch: need w >= 3 and h >= 2");
    auto vid = [&](std::size_t x, std::size_t y) { return x + y * w; };
    std::vector<std::vector<std::size_t>> hexagons;
    for (std::size_t y = 0; y + 1 < h; ++y) {
        for (std::size_t x = (y % 2); x + 2 < w; x += 2) {
            hexagons.push_back({vid(x, y), vid(x + 1, y), vid(x + 2, y), vid(x + 2, y + 1), vid(x + 1, y + 1),
                                vid(x, y + 1)});
        }
    }
    // Polygon construction yields the hexagon edges; add the lattice edges
    // that no hexagon covers (patch rims) afterwards.
    auto base = complex_from_polygons(w * h, hexagons);
    auto edges = base.edges();
    std::set<std::pair<std::size_t, std::size_t>> have;
    for (const auto& e : edges) {
        have.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
    }
    auto add = [&](std::size_t a, std::size_t b) {
        if (have.insert({std::min(a, b), std::max(a, b)}).second) {
            edges.push_back({a, b});
        }
    };
    for (std::size_t y = 0; y < h; ++y) {
        for (std::size_t x = 0; x < w; ++x) {
            if (x + 1 < w) {
                add(vid(x, y), vid(x + 1, y));
            }
            if (y + 1 < h && (x + y) % 2 == 0) {
                add(vid(x, y), vid(x, y + 1));
            }
        }
    }
    CellComplex x(w * h, std::move(edges), base.faces(),
                  label("lozenge_patch", {{"w", std::to_string(w)}, {"h", std::to_string(h)}}));
    Pins pins;
    if (pin_boundary) {
        for (std::size_t y = 0; y < h; ++y) {
            if (y % 2 == 0) {
                pins[vid(0, y)] = false;
            }
            if ((w - 1 + y) % 2 == 0) {
                pins[vid(w - 1, y)] = true;
            }
        }
    }
    return uniform(finish(std::move(x)), true, "lozenge_patch", std::move(pins));
}

CouplingSystem p3_rosette() {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});
    }
    for (std::size_t i = 0; i < 5; ++i) {
        edges.push_back({i, 5});
    }
    std::vector<std::vector<std::size_t>> faces;
    for (std::size_t i = 0; i < 5; ++i) {
        faces.push_back({i, 5 + (i + 1) % 5, 5 + i});
    }
    auto x = finish(CellComplex(6, std::move(edges), std::move(faces), label("p3_rosette")));
    BitVector constraint(10);
    for (std::size_t i = 0; i < 5; ++i) {
        constraint.set(i);
    }
    return {x, constraint, constraint, std::nullopt, {}, "p3_rosette"};
}

CouplingSystem heptagonal_patch(std::size_t radius) {
    require(radius >= 1 && radius <= 4, "heptagonal_patch: radius must be between 1 and 4");
    constexpr std::size_t p = 7;
    std::vector<std::vector<std::size_t>> polygons;
    std::vector<std::size_t> boundary;
    std::vector<int> degree;
    for (std::size_t i = 0; i < p; ++i) {
        boundary.push_back(i);
        degree.push_back(2);
    }
    polygons.push_back(boundary);
    std::size_t next = p;
    for (std::size_t ring = 0; ring < radius; ++ring) {
        std::vector<std::size_t> open; // boundary positions still short of degree 3
        for (std::size_t i = 0; i < boundary.size(); ++i) {
            if (degree[boundary[i]] == 2) {
                open.push_back(i);
            }
        }
        std::vector<std::size_t> spoke(open.size());
        for (auto& s : spoke) {
            s = next++;
        }
        std::vector<std::vector<std::size_t>> chains(open.size());
        for (std::size_t g = 0; g < open.size(); ++g) {
            const auto from = open[g];
            const auto to = open[(g + 1) % open.size()];
            const auto span = (to + boundary.size() - from) % boundary.size();
            const auto run = (span == 0 ? boundary.size() : span) + 1; // old boundary vertices in the face
            if (run + 2 >= p) {
                throw std::logic_error("heptagonal_patch: growth step leaves no room for a new face");
            }
            const auto extra = p - run - 2;
            for (std::size_t c = 0; c < extra; ++c) {
                chains[g].push_back(next++);
            }
            std::vector<std::size_t> face{spoke[g]};
            for (std::size_t t = 0; t < run; ++t) {
                face.push_back(boundary[(from + t) % boundary.size()]);
            }
            face.push_back(spoke[(g + 1) % open.size()]);
            face.insert(face.end(), chains[g].rbegin(), chains[g].rend());
            polygons.push_back(std::move(face));
        }
        for (auto i : open) {
            degree[boundary[i]] = 3;
        }
        degree.resize(next, 2);
        std::vector<std::size_t> fresh;
        for (std::size_t g = 0; g < open.size(); ++g) {
            fresh.push_back(spoke[g]);
            degree[spoke[g]] = 3;
            fresh.insert(fresh.end(), chains[g].begin(), chains[g].end());
        }
        boundary = std::move(fresh);
    }
    auto x = complex_from_polygons(next, polygons, label("heptagonal_patch", {{"r", std::to_string(radius)}}));
    return uniform(finish(std::move(x)), true, "heptagonal_patch");
}

CouplingSystem dodecahedral_sphere() {
    // Outer pentagon a_i = i, middle 10-ring m_j = 5 + j, inner pentagon c_i = 15 + i.
    auto a = [](std::size_t i) { return i % 5; };
    auto m = [](std::size_t j) { return 5 + j % 10; };
    auto c = [](std::size_t i) { return 15 + i % 5; };
    std::vector<std::vector<std::size_t>> faces{{a(0), a(1), a(2), a(3), a(4)}};
    for (std::size_t i = 0; i < 5; ++i) {
        faces.push_back({a(i), a(i + 1), m(2 * i + 2), m(2 * i + 1), m(2 * i)});
    }
    for (std::size_t i = 0; i < 5; ++i) {
        faces.push_back({c(i), c(i + 1), m(2 * i + 3), m(2 * i + 2), m(2 * i + 1)});
    }
    faces.push_back({c(0), c(1), c(2), c(3), c(4)});
    return uniform(finish(complex_from_polygons(20, faces, label("dodecahedral_sphere"))), true,
                   "dodecahedral_sphere");
}

namespace {

// Coherently oriented: every edge is traversed once in each direction.
std::vector<std::vector<std::size_t>> icosahedron_triangles() {
    std::vector<std::vector<std::size_t>> t;
    auto up = [](std::size_t i) { return 1 + i % 5; };
    auto lo = [](std::size_t i) { return 6 + i % 5; };
    for (std::size_t i = 0; i < 5; ++i) {
        t.push_back({0, up(i), up(i + 1)});
    }
    for (std::size_t i = 0; i < 5; ++i) {
        t.push_back({up(i + 1), up(i), lo(i)});
        t.push_back({up(i + 1), lo(i), lo(i + 1)});
    }
    for (std::size_t i = 0; i < 5; ++i) {
        t.push_back({11, lo(i + 1), lo(i)});
    }
    return t;
}

} // namespace

CouplingSystem truncated_icosahedral_sphere() {
    const auto tris = icosahedron_triangles();
    // One truncation vertex per directed icosahedron edge (u -> v), near u.
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> corner;
    for (const auto& t : tris) {
        for (std::size_t i = 0; i < 3; ++i) {
            corner[{t[i], t[(i + 1) % 3]}] = 0;
            corner[{t[(i + 1) % 3], t[i]}] = 0;
        }
    }
    std::size_t id = 0;
    for (auto& [key, value] : corner) {
        value = id++;
    }
    // Link of each vertex: successor map w -> w' around u from triangles (u, w, w').
    std::vector<std::map<std::size_t, std::size_t>> link(12);
    for (const auto& t : tris) {
        for (std::size_t i = 0; i < 3; ++i) {
            link[t[i]][t[(i + 1) % 3]] = t[(i + 2) % 3];
        }
    }
    std::vector<std::vector<std::size_t>> faces;
    for (std::size_t u = 0; u < 12; ++u) {
        std::vector<std::size_t> pentagon;
        auto w = link[u].begin()->first;
        for (std::size_t s = 0; s < 5; ++s) {
            pentagon.push_back(corner.at({u, w}));
            w = link[u].at(w);
        }
        faces.push_back(std::move(pentagon));
    }
    for (const auto& t : tris) {
        std::vector<std::size_t> hexagon;
        for (std::size_t i = 0; i < 3; ++i) {
            hexagon.push_back(corner.at({t[i], t[(i + 1) % 3]}));
            hexagon.push_back(corner.at({t[(i + 1) % 3], t[i]}));
        }
        faces.push_back(std::move(hexagon));
    }
    return uniform(finish(complex_from_polygons(id, faces, label("truncated_icosahedral_sphere"))), true,
                   "truncated_icosahedral_sphere");
}

std::vector<std::size_t> gear_corner_vertices(std::size_t k) {
    return {0, k * k, 2 * k * k};
}

CouplingSystem gear_corner(std::size_t k) {
    require(k >= 2, "gear_corner: k must be at least 2");
    // Plane 0 = XY with (a, b) = (x, y); 1 = YZ with (y, z); 2 = ZX with (z, x).
    auto vid = [&](std::size_t plane, std::size_t a, std::size_t b) { return plane * k * k + a * k + b; };
    std::vector<std::vector<std::size_t>> faces;
    for (std::size_t plane = 0; plane < 3; ++plane) {
        for (std::size_t a = 0; a + 1 < k; ++a) {
            for (std::size_t b = 0; b + 1 < k; ++b) {
                faces.push_back({vid(plane, a, b), vid(plane, a, b + 1), vid(plane, a + 1, b + 1), vid(plane, a + 1, b)});
            }
        }
    }
    // Seam between plane p's first coordinate 0 and plane p+1's second coordinate 0.
    for (std::size_t plane = 0; plane < 3; ++plane) {
        const auto nextp = (plane + 1) % 3;
        for (std::size_t t = 0; t + 1 < k; ++t) {
            faces.push_back({vid(plane, 0, t), vid(plane, 0, t + 1), vid(nextp, t + 1, 0), vid(nextp, t, 0)});
        }
    }
    faces.push_back({vid(0, 0, 0), vid(1, 0, 0), vid(2, 0, 0)});
    auto x = complex_from_polygons(3 * k * k, faces, label("gear_corner", {{"k", std::to_string(k)}}));
    return uniform(finish(std::move(x)), true, "gear_corner");
}

CouplingSystem rp2_minimal() {
    const std::vector<std::vector<std::size_t>> tris{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                                                     {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};
    auto x = finish(complex_from_polygons(6, tris, label("rp2_minimal")));
    const auto h1 = cohomology(*x, 1);
    const auto e = x->edge_count();
    return {x, BitVector::ones(e), h1.representatives().front(), std::nullopt, {}, "rp2_minimal"};
}

CouplingSystem icosahedron() {
    return uniform(finish(complex_from_polygons(12, icosahedron_triangles(), label("icosahedron"))), false,
                   "icosahedron");
}

CouplingSystem tetrahedron() {
    const std::vector<std::vector<std::size_t>> tris{{0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 2}};
    return uniform(finish(complex_from_polygons(4, tris, label("tetrahedron"))), false, "tetrahedron");
}

CouplingSystem prism(std::size_t m) {
    require(m >= 3, "prism: m must be at least 3");
    std::vector<std::vector<std::size_t>> faces;
    std::vector<std::size_t> bottom, top;
    for (std::size_t i = 0; i < m; ++i) {
        bottom.push_back(i);
        top.push_back(m + i);
    }
    faces.push_back(bottom);
    for (std::size_t i = 0; i < m; ++i) {
        faces.push_back({i, (i + 1) % m, m + (i + 1) % m, m + i});
    }
    faces.push_back(top);
    return uniform(finish(complex_from_polygons(2 * m, faces, label("prism", {{"m", std::to_string(m)}}))), false,
                   "prism");
}

// ---------------------------------------------------------------------------
// Dispatch

namespace {


std::int64_t param(const SystemSpec& spec, const std::string& key, std::optional<std::int64_t> fallback) {
    const auto it = spec.params.find(key);
    if (it != spec.params.end()) {
        return it->second;
    }
    if (!fallback) {
        throw std::invalid_argument(spec.kind + ": missing parameter --" + key);
    }
    return *fallback;
}

std::size_t count(const SystemSpec& spec, const std::string& key, std::optional<std::int64_t> fallback = {}) {
    const auto v = param(spec, key, fallback);
    require(v >= 0, spec.kind + ": parameter --" + key + " must be non-negative");
    return static_cast<std::size_t>(v);
}

bool flag(const SystemSpec& spec, const std::string& key, bool fallback) {
    const auto v = param(spec, key, fallback ? 1 : 0);
    require(v == 0 || v == 1, spec.kind + ": parameter --" + key + " must be 0 or 1");
    return v == 1;
}

struct Entry {
    BuilderInfo info;
    std::function<CouplingSystem(const SystemSpec&)> build;
};

const std::vector<Entry>& entries() {
    static const std::vector<Entry> table{
        {{"gear_ring", {"n"}, "n-cycle of meshing gears"}, [](const auto& s) { return gear_ring(count(s, "n")); }},
        {{"gear_torus", {"rows", "cols"}, "gear mesh on a rows x cols torus"},
         [](const auto& s) { return gear_torus(count(s, "rows"), count(s, "cols")); }},
        {{"mobius_ring", {"n"}, "gear ring with a frame twist (twist edges optional)"},
         [](const auto& s) { return mobius_ring(count(s, "n"), s.twist_edges); }},
        {{"spinning_necker_ring", {"n"}, "agreeing Necker ring with one frame twist"},
         [](const auto& s) { return spinning_necker_ring(count(s, "n")); }},
        {{"necker_path", {"n", "a", "b"}, "Necker path with pinned endpoints (default a=0, b=1)"},
         [](const auto& s) { return necker_path(count(s, "n"), flag(s, "a", false), flag(s, "b", true)); }},
        {{"necker_grid", {"w", "h"}, "grid of agreeing Necker cubes with optional pins"},
         [](const auto& s) { return necker_grid(count(s, "w"), count(s, "h"), s.pins); }},
        {{"lozenge_patch", {"w", "h", "pin_boundary"}, "hexagonal constraint patch of a rhombic tiling"},
         [](const auto& s) {
             return lozenge_patch(count(s, "w"), count(s, "h"), flag(s, "pin_boundary", false));
         }},
        {{"p3_rosette", {}, "pentagonal rosette disc"}, [](const auto&) { return p3_rosette(); }},
        {{"heptagonal_patch", {"r"}, "{7,3} patch of radius r"},
         [](const auto& s) { return heptagonal_patch(count(s, "r")); }},
        {{"dodecahedral_sphere", {}, "dodecahedral sphere cellulation"},
         [](const auto&) { return dodecahedral_sphere(); }},
        {{"truncated_icosahedral_sphere", {}, "truncated icosahedral sphere cellulation"},
         [](const auto&) { return truncated_icosahedral_sphere(); }},
        {{"gear_corner", {"k"}, "three k x k quarter-plane gear meshes around a corner"},
         [](const auto& s) { return gear_corner(count(s, "k")); }},
        {{"rp2_minimal", {}, "six-vertex projective plane"}, [](const auto&) { return rp2_minimal(); }},
        {{"icosahedron", {}, "icosahedral sphere board"}, [](const auto&) { return icosahedron(); }},
        {{"tetrahedron", {}, "tetrahedral sphere board"}, [](const auto&) { return tetrahedron(); }},
        {{"prism", {"m"}, "m-gonal prism surface"}, [](const auto& s) { return prism(count(s, "m")); }},
    };
    return table;
}

} // namespace

const std::vector<BuilderInfo>& builder_catalog() {
    static const std::vector<BuilderInfo> catalog = [] {
        std::vector<BuilderInfo> out;
        for (const auto& e : entries()) {
            out.push_back(e.info);
        }
        return out;
    }();
    return catalog;
}

CouplingSystem build_system(const SystemSpec& spec) {
    for (const auto& e : entries()) {
        if (e.info.kind != spec.kind) {
            continue;
        }
        for (const auto& [key, value] : spec.params) {
            if (std::find(e.info.params.begin(), e.info.params.end(), key) == e.info.params.end()) {
                throw std::invalid_argument(spec.kind + ": unknown parameter --" + key);
            }
        }
        if (!spec.pins.empty() && spec.kind != "necker_grid") {
            throw std::invalid_argument(spec.kind + ": pins are only accepted by necker_grid");
        }
        if (!spec.twist_edges.empty() && spec.kind != "mobius_ring") {
            throw std::invalid_argument(spec.kind + ": twist edges are only accepted by mobius_ring");
        }
        return e.build(spec);
    }
    throw std::invalid_argument("unknown builder kind '" + spec.kind + "'");
}

} // namespace bistable
