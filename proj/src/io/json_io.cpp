#include "bistable/io/json_io.hpp"

#include <fstream>
#include <sstream>

namespace bistable::io {

namespace {

std::size_t index_of(const Json& j, const std::string& what) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
        throw FormatError(what + ": expected a non-negative integer");
    }
    return j.get<std::size_t>();
}

const Json& field(const Json& j, const char* key, const std::string& what) {
    if (!j.is_object() || !j.contains(key)) {
        throw FormatError(what + ": missing field \"" + key + "\"");
    }
    return j.at(key);
}

Json index_list(const std::vector<std::size_t>& v) {
    Json out = Json::array();
    for (auto i : v) {
        out.push_back(i);
    }
    return out;
}

} // namespace

Json bits_to_json(const BitVector& v) {
    Json out = Json::array();
    for (std::size_t i = 0; i < v.size(); ++i) {
        out.push_back(v.get(i) ? 1 : 0);
    }
    return out;
}

BitVector bits_from_json(const Json& j, std::size_t length, const std::string& what) {
    if (!j.is_array()) {
        throw FormatError(what + ": expected an array of bits");
    }
    if (j.size() != length) {
        throw FormatError(what + ": expected " + std::to_string(length) + " bits, got " + std::to_string(j.size()));
    }
    BitVector v(length);
    for (std::size_t i = 0; i < length; ++i) {
        const auto& b = j[i];
        if (b.is_boolean()) {
            v.set(i, b.get<bool>());
        } else if (b.is_number_integer() && (b.get<int>() == 0 || b.get<int>() == 1)) {
            v.set(i, b.get<int>() == 1);
        } else {
            throw FormatError(what + ": entry " + std::to_string(i) + " is not 0 or 1");
        }
    }
    return v;
}

Json complex_to_json(const CellComplex& x) {
    Json j;
    j["vertices"] = x.vertex_count();
    Json edges = Json::array();
    for (const auto& e : x.edges()) {
        edges.push_back(Json::array({e.u, e.v}));
    }
    j["edges"] = std::move(edges);
    Json faces = Json::array();
    for (const auto& f : x.faces()) {
        faces.push_back(index_list(f));
    }
    j["faces"] = std::move(faces);
    Json labels = Json::object();
    for (const auto& [k, v] : x.labels()) {
        labels[k] = v;
    }
    j["labels"] = std::move(labels);
    return j;
}

CellComplex complex_from_json(const Json& j) {
    const auto vertices = index_of(field(j, "vertices", "complex"), "complex.vertices");
    std::vector<Edge> edges;
    const auto& je = field(j, "edges", "complex");
    if (!je.is_array()) {
        throw FormatError("complex.edges: expected an array");
    }
    for (std::size_t i = 0; i < je.size(); ++i) {
        const auto tag = "complex.edges[" + std::to_string(i) + "]";
        if (!je[i].is_array() || je[i].size() != 2) {
            throw FormatError(tag + ": expected [u, v]");
        }
        edges.push_back({index_of(je[i][0], tag), index_of(je[i][1], tag)});
    }
    std::vector<std::vector<std::size_t>> faces;
    if (j.contains("faces")) {
        const auto& jf = j.at("faces");
        if (!jf.is_array()) {
            throw FormatError("complex.faces: expected an array");
        }
        for (std::size_t i = 0; i < jf.size(); ++i) {
            const auto tag = "complex.faces[" + std::to_string(i) + "]";
            if (!jf[i].is_array()) {
                throw FormatError(tag + ": expected an edge list");
            }
            std::vector<std::size_t> walk;
            for (const auto& e : jf[i]) {
                walk.push_back(index_of(e, tag));
            }
            faces.push_back(std::move(walk));
        }
    }
    Labels labels;
    if (j.contains("labels")) {
        const auto& jl = j.at("labels");
        if (!jl.is_object()) {
            throw FormatError("complex.labels: expected an object");
        }
        for (const auto& [k, v] : jl.items()) {
            labels[k] = v.is_string() ? v.get<std::string>() : v.dump();
        }
    }
    CellComplex x(vertices, std::move(edges), std::move(faces), std::move(labels));
    const auto problems = validate(x);
    if (!problems.empty()) {
        std::string msg = "complex is invalid:";
        for (const auto& p : problems) {
            msg += "\n  " + p;
        }
        throw FormatError(msg);
    }
    return x;
}

Json system_to_json(const CouplingSystem& sys) {
    Json j;
    j["complex"] = complex_to_json(sys.ambient());
    j["constraint_edges"] = index_list(sys.constraint_edges().support());
    j["coupling"] = bits_to_json(sys.coupling());
    if (sys.twist()) {
        j["twist"] = bits_to_json(*sys.twist());
    }
    if (!sys.pinned().empty()) {
        Json pins = Json::object();
        for (const auto& [v, bit] : sys.pinned()) {
            pins[std::to_string(v)] = bit ? 1 : 0;
        }
        j["pinned"] = std::move(pins);
    }
    return j;
}

CouplingSystem system_from_json(const Json& j) {
    auto x = std::make_shared<const CellComplex>(complex_from_json(field(j, "complex", "system")));
    const auto edges = x->edge_count();
    BitVector constraint(edges);
    const auto& jc = field(j, "constraint_edges", "system");
    if (!jc.is_array()) {
        throw FormatError("system.constraint_edges: expected an array of edge indices");
    }
    for (const auto& e : jc) {
        const auto i = index_of(e, "system.constraint_edges");
        if (i >= edges) {
            throw FormatError("system.constraint_edges: edge " + std::to_string(i) + " out of range");
        }
        constraint.set(i);
    }
    auto coupling = bits_from_json(field(j, "coupling", "system"), edges, "system.coupling");
    std::optional<BitVector> twist;
    if (j.contains("twist")) {
        twist = bits_from_json(j.at("twist"), edges, "system.twist");
    }
    Pins pins;
    if (j.contains("pinned")) {
        const auto& jp = j.at("pinned");
        if (!jp.is_object()) {
            throw FormatError("system.pinned: expected an object {\"vertex\": bit}");
        }
        for (const auto& [k, v] : jp.items()) {
            std::size_t vertex = 0;
            try {
                std::size_t used = 0;
                vertex = std::stoul(k, &used);
                if (used != k.size()) {
                    throw std::invalid_argument(k);
                }
            } catch (const std::exception&) {
                throw FormatError("system.pinned: key '" + k + "' is not a vertex index");
            }
            const auto bit = bits_from_json(Json::array({v}), 1, "system.pinned[" + k + "]");
            pins[vertex] = bit.get(0);
        }
    }
    const auto kind = x->labels().count("kind") ? x->labels().at("kind") : std::string{};
    try {
        return CouplingSystem(std::move(x), std::move(constraint), std::move(coupling), std::move(twist),
                              std::move(pins), kind);
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("system: ") + e.what());
    }
}

Json walk_to_json(const CellComplex& x, const EdgeWalk& walk) {
    Json j;
    j["start"] = walk.start;
    j["edges"] = index_list(walk.edges);
    if (const auto verts = trace_walk(x, walk)) {
        j["vertices"] = index_list(*verts);
    }
    return j;
}

Json class_to_json(int degree, const BitVector& coordinates, const BitVector& representative) {
    Json j;
    j["degree"] = degree;
    j["coordinates"] = bits_to_json(coordinates);
    j["representative"] = index_list(representative.support());
    return j;
}

namespace {

Json pin_clash_to_json(const CellComplex& x, const PinClash& p) {
    Json j;
    j["kind"] = "pin_clash";
    j["source"] = p.source;
    j["target"] = p.target;
    j["transported"] = p.transported ? 1 : 0;
    j["path"] = walk_to_json(x, p.path);
    return j;
}

Json odd_cycle_to_json(const CellComplex& x, const OddCycle& c) {
    Json j;
    j["kind"] = "odd_cycle";
    j["length"] = c.cycle.edges.size();
    j["cycle"] = walk_to_json(x, c.cycle);
    return j;
}

} // namespace

Json classification_to_json(const CouplingSystem& sys, const Classification& c) {
    const auto& x = sys.ambient();
    Json j;
    j["level"] = to_string(c.level);
    j["witness"] = std::visit(
        [&](const auto& w) -> Json {
            using T = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<T, OddCycle>) {
                return odd_cycle_to_json(x, w);
            } else if constexpr (std::is_same_v<T, PinClash>) {
                return pin_clash_to_json(x, w);
            } else if constexpr (std::is_same_v<T, FrustratedRegion>) {
                Json r;
                r["kind"] = "frustrated_region";
                r["faces"] = index_list(w.faces);
                return r;
            } else {
                return nullptr;
            }
        },
        c.witness);
    Json groups = Json::object();
    for (const auto& [name, dim] : c.groups) {
        groups[name] = dim;
    }
    j["groups"] = std::move(groups);
    if (c.section_count_log2) {
        j["section_count_log2"] = *c.section_count_log2;
    }
    j["coupling_class"] = bits_to_json(c.coupling_class);
    if (c.relative_class) {
        j["relative_class"] =
            class_to_json(c.relative_class->degree, c.relative_class->coordinates, c.relative_class->representative);
    }
    if (c.secondary_conflict) {
        j["secondary_conflict"] = pin_clash_to_json(x, *c.secondary_conflict);
    }
    if (c.secondary_impossibility) {
        j["secondary_impossibility"] = odd_cycle_to_json(x, *c.secondary_impossibility);
    }
    return j;
}

Json solve_to_json(const CouplingSystem& sys, const SolveResult& r) {
    Json j;
    j["solvable"] = r.solvable();
    if (r.sections) {
        j["section_count_log2"] = r.sections->count_log2();
        j["particular"] = bits_to_json(r.sections->particular);
        Json flips = Json::array();
        for (const auto& f : r.sections->flips) {
            flips.push_back(index_list(f.support()));
        }
        j["flips"] = std::move(flips);
    }
    if (r.obstruction) {
        j["obstruction"] = std::visit(
            [&](const auto& o) -> Json {
                using T = std::decay_t<decltype(o)>;
                if constexpr (std::is_same_v<T, OddCycle>) {
                    return odd_cycle_to_json(sys.ambient(), o);
                } else {
                    return pin_clash_to_json(sys.ambient(), o);
                }
            },
            *r.obstruction);
    }
    return j;
}

Json trace_to_json(const CircuitResult& r) {
    Json j;
    Json steps = Json::array();
    for (const auto& s : r.steps) {
        Json step;
        step["window"] = index_list(s.window);
        Json display = Json::array();
        for (bool b : s.display) {
            display.push_back(b ? 1 : 0);
        }
        step["display"] = std::move(display);
        steps.push_back(std::move(step));
    }
    j["steps"] = std::move(steps);
    j["flip"] = r.flip ? 1 : 0;
    return j;
}

Json reach_to_json(const ReachResult& r) {
    Json j;
    j["reachable"] = r.reachable;
    j["invariant"] = bits_to_json(r.invariant);
    if (r.reachable) {
        j["moves"] = index_list(r.moves);
    }
    return j;
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::filesystem::path& path, const Json& j) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << dump(j);
}

} // namespace bistable::io
