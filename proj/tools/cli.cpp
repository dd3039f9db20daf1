#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "bistable/builders/builders.hpp"
#include "bistable/cohomology/cohomology.hpp"
#include "bistable/constraint/classify.hpp"
#include "bistable/constraint/extension.hpp"
#include "bistable/flux/flux.hpp"
#include "bistable/io/dot.hpp"
#include "bistable/io/json_io.hpp"
#include "bistable/service/http_server.hpp"
#include "bistable/torsor/aperture.hpp"
#include "bistable/torsor/double_cover.hpp"

namespace bistable::cli {

namespace {

using io::Json;

// Bad flags or arguments: exit 2.
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::int64_t parse_int(const std::string& text, const std::string& what) {
    std::int64_t v = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || ptr != end) {
        throw UsageError(what + ": '" + text + "' is not an integer");
    }
    return v;
}

std::size_t parse_index(const std::string& text, const std::string& what) {
    const auto v = parse_int(text, what);
    if (v < 0) {
        throw UsageError(what + ": '" + text + "' is negative");
    }
    return static_cast<std::size_t>(v);
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

std::vector<std::size_t> index_list(const std::string& text, const std::string& what) {
    std::vector<std::size_t> out;
    for (const auto& s : split(text, ',')) {
        out.push_back(parse_index(s, what));
    }
    return out;
}

BitVector face_set(const CellComplex& x, const std::string& text, const std::string& what) {
    BitVector v(x.face_count());
    for (auto f : index_list(text, what)) {
        if (f >= x.face_count()) {
            throw std::invalid_argument(what + ": face " + std::to_string(f) + " out of range");
        }
        v.flip(f);
    }
    return v;
}

std::string walk_vertices(const CellComplex& x, const EdgeWalk& w) {
    const auto verts = trace_walk(x, w);
    std::string s;
    if (verts) {
        for (std::size_t i = 0; i < verts->size(); ++i) {
            s += (i ? "," : "") + std::to_string((*verts)[i]);
        }
    }
    return s;
}

std::string bits(const BitVector& v) { return v.size() == 0 ? "(none)" : v.to_string(); }

CouplingSystem load_system(const std::string& path) { return io::system_from_json(io::read_json_file(path)); }

// A system file or a bare complex file.
std::shared_ptr<const CellComplex> load_complex(const std::string& path) {
    const auto j = io::read_json_file(path);
    if (j.is_object() && j.contains("complex")) {
        return io::system_from_json(j).ambient_ptr();
    }
    return std::make_shared<const CellComplex>(io::complex_from_json(j));
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) {
        throw std::runtime_error("cannot write " + path);
    }
    f << text;
}

// ---------------------------------------------------------------------------
// build

SystemSpec parse_build_extras(const std::string& kind, const std::vector<std::string>& extras) {
    SystemSpec spec{kind, {}, {}, {}};
    for (std::size_t i = 0; i < extras.size(); ++i) {
        auto arg = extras[i];
        if (arg.rfind("--", 0) != 0) {
            throw UsageError("build: unexpected argument '" + arg + "'");
        }
        arg = arg.substr(2);
        std::string value;
        if (const auto eq = arg.find('='); eq != std::string::npos) {
            value = arg.substr(eq + 1);
            arg = arg.substr(0, eq);
        } else {
            if (i + 1 >= extras.size()) {
                throw UsageError("build: --" + arg + " needs a value");
            }
            value = extras[++i];
        }
        if (arg == "pins") {
            for (const auto& item : split(value, ',')) {
                const auto eq = item.find('=');
                if (eq == std::string::npos) {
                    throw UsageError("build: pins are vertex=bit pairs, got '" + item + "'");
                }
                const auto v = parse_index(item.substr(0, eq), "--pins");
                const auto b = parse_int(item.substr(eq + 1), "--pins");
                if (b != 0 && b != 1) {
                    throw UsageError("build: pin values are 0 or 1");
                }
                if (!spec.pins.emplace(v, b == 1).second) {
                    throw UsageError("build: vertex " + std::to_string(v) + " pinned twice");
                }
            }
        } else if (arg == "twist-edges") {
            spec.twist_edges = index_list(value, "--twist-edges");
        } else {
            spec.params[arg] = parse_int(value, "--" + arg);
        }
    }
    return spec;
}

int cmd_build(const std::string& kind, bool list, const std::vector<std::string>& extras, const std::string& output,
              std::ostream& out) {
    if (list) {
        for (const auto& info : builder_catalog()) {
            out << info.kind;
            for (const auto& p : info.params) {
                out << " --" << p;
            }
            out << "\n    " << info.summary << "\n";
        }
        return exit_ok;
    }
    if (kind.empty()) {
        throw UsageError("build: missing builder kind (see build --list)");
    }
    CouplingSystem sys = [&] {
        try {
            return build_system(parse_build_extras(kind, extras));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }();
    const auto j = io::system_to_json(sys);
    if (output.empty() || output == "-") {
        out << io::dump(j);
    } else {
        io::write_json_file(output, j);
        out << "wrote " << output << ": " << sys.ambient().vertex_count() << " vertices, "
            << sys.ambient().edge_count() << " edges, " << sys.ambient().face_count() << " faces\n";
    }
    return exit_ok;
}

// ---------------------------------------------------------------------------
// analysis

int cmd_classify(const std::string& file, const std::string& region, bool json, std::ostream& out) {
    const auto sys = load_system(file);
    std::optional<std::vector<std::size_t>> faces;
    if (!region.empty()) {
        faces = index_list(region, "--region");
    }
    const auto c = classify(sys, faces);
    if (json) {
        out << io::dump(io::classification_to_json(sys, c));
        return exit_ok;
    }
    out << to_string(c.level) << "; ";
    if (const auto* cycle = std::get_if<OddCycle>(&c.witness)) {
        out << "witness cycle of length " << cycle->cycle.edges.size() << "\n";
        out << "  cycle: " << walk_vertices(sys.ambient(), cycle->cycle) << "\n";
    } else if (const auto* clash = std::get_if<PinClash>(&c.witness)) {
        out << "relative H1 class " << (c.relative_class && !c.relative_class->is_zero() ? "nonzero" : "zero")
            << "\n";
        out << "  pins " << clash->source << " and " << clash->target << " disagree along "
            << walk_vertices(sys.ambient(), clash->path) << "\n";
    } else if (const auto* d = std::get_if<FrustratedRegion>(&c.witness)) {
        out << "frustrated region of " << d->faces.size() << " face" << (d->faces.size() == 1 ? "" : "s") << "\n";
    } else {
        out << "2^" << c.section_count_log2.value_or(0) << " global sections\n";
    }
    for (const auto& [name, dim] : c.groups) {
        out << "  dim " << name << " = " << dim << "\n";
    }
    out << "  coupling class: " << bits(c.coupling_class) << "\n";
    if (c.secondary_conflict) {
        out << "  also: pins " << c.secondary_conflict->source << " and " << c.secondary_conflict->target
            << " clash\n";
    }
    if (c.secondary_impossibility) {
        out << "  also: odd cycle of length " << c.secondary_impossibility->cycle.edges.size() << "\n";
    }
    return exit_ok;
}

int cmd_holonomy(const std::string& file, const std::string& cycle, bool json, std::ostream& out) {
    const auto sys = load_system(file);
    const auto verts = index_list(cycle, "--cycle");
    if (verts.size() < 2) {
        throw UsageError("holonomy: --cycle needs at least two vertices");
    }
    const auto walk = walk_through_vertices(sys.ambient(), verts, true, &sys.constraint_edges());
    const bool h = holonomy(sys, walk);
    if (json) {
        Json j;
        j["cycle"] = io::walk_to_json(sys.ambient(), walk);
        j["holonomy"] = h ? 1 : 0;
        out << io::dump(j);
    } else {
        out << "holonomy = " << (h ? 1 : 0) << " around " << walk_vertices(sys.ambient(), walk) << "\n";
    }
    return exit_ok;
}

int cmd_solve(const std::string& file, bool json, std::ostream& out) {
    const auto sys = load_system(file);
    const auto r = solve_sections(sys);
    if (json) {
        out << io::dump(io::solve_to_json(sys, r));
        return exit_ok;
    }
    if (r.sections) {
        out << "solvable; 2^" << r.sections->count_log2() << " sections\n";
        out << "  particular: " << bits(r.sections->particular) << "\n";
    } else if (const auto* cycle = std::get_if<OddCycle>(&*r.obstruction)) {
        out << "unsolvable; odd cycle " << walk_vertices(sys.ambient(), cycle->cycle) << "\n";
    } else {
        const auto& clash = std::get<PinClash>(*r.obstruction);
        out << "unsolvable; pins " << clash.source << " and " << clash.target << " clash along "
            << walk_vertices(sys.ambient(), clash.path) << "\n";
    }
    return exit_ok;
}

int cmd_cover(const std::string& file, const std::string& dot, bool json, std::ostream& out) {
    const auto sys = load_system(file);
    const auto cover = build_cover(sys);
    const auto report = cover_triviality(cover);
    if (!dot.empty()) {
        write_text(dot, io::cover_to_dot(cover));
    }
    if (json) {
        Json j;
        j["lifted_vertices"] = cover.lifted.vertex_count();
        j["lifted_edges"] = cover.lifted.edge_count();
        Json comps = Json::array();
        for (const auto& r : report) {
            Json c;
            c["base_vertices"] = r.base_vertices;
            c["trivial"] = r.trivial;
            comps.push_back(std::move(c));
        }
        j["components"] = std::move(comps);
        out << io::dump(j);
        return exit_ok;
    }
    out << "cover: " << cover.lifted.vertex_count() << " vertices, " << cover.lifted.edge_count() << " edges\n";
    for (const auto& r : report) {
        out << "  base component of " << r.base_vertices.size() << " vertices: "
            << (r.trivial ? "trivial (two sheets)" : "connected (nontrivial)") << "\n";
    }
    return exit_ok;
}

int cmd_moma(const std::string& file, std::size_t window, bool dual, std::size_t laps, std::size_t start,
             const std::string& trace, bool json, std::ostream& out) {
    const auto sys = load_system(file);
    const auto ring = ring_of(sys);
    if (dual) {
        const auto t = dual_config_torsor(ring.size(), window, ring.coupling);
        const auto loop = exchange_loop(t);
        const bool flip = config_monodromy(t, loop);
        if (json) {
            Json j;
            j["configurations"] = t.configs.size();
            j["h1_dimension"] = t.h1.dimension();
            j["exchange_loop_length"] = loop.edges.size();
            j["monodromy"] = flip ? 1 : 0;
            out << io::dump(j);
        } else {
            out << "dual aperture on " << ring.size() << " vertices, window " << window << ": "
                << t.configs.size() << " configurations, dim H1 = " << t.h1.dimension() << "\n";
            out << "exchange monodromy = " << (flip ? 1 : 0) << "\n";
        }
        return exit_ok;
    }
    const auto r = circuit_monodromy(ring, window, laps, start);
    if (!trace.empty()) {
        io::write_json_file(trace, io::trace_to_json(r));
    }
    if (json) {
        Json j;
        j["ring_size"] = ring.size();
        j["holonomy"] = ring.holonomy() ? 1 : 0;
        j["laps"] = laps;
        j["flip"] = r.flip ? 1 : 0;
        out << io::dump(j);
    } else {
        out << "ring of " << ring.size() << ", holonomy " << (ring.holonomy() ? 1 : 0) << "; " << laps
            << " lap(s) with window " << window << ": flip = " << (r.flip ? 1 : 0) << "\n";
    }
    return exit_ok;
}

int cmd_cup(const std::string& file, std::size_t alpha, std::size_t beta, bool json, std::ostream& out) {
    const auto x = load_complex(file);
    const auto h1 = cohomology(*x, 1);
    if (alpha >= h1.dimension() || beta >= h1.dimension()) {
        throw std::invalid_argument("cup: H1 has dimension " + std::to_string(h1.dimension()) +
                                    "; class indices must be below it");
    }
    const auto t = triangulate(*x);
    const auto a = pull_back(t, 1, h1.representatives()[alpha]);
    const auto b = pull_back(t, 1, h1.representatives()[beta]);
    const auto cup = cup_product(t, a, b);
    if (json) {
        Json j;
        j["h1_dimension"] = h1.dimension();
        j["alpha"] = alpha;
        j["beta"] = beta;
        j["pairing"] = cup.pairing ? 1 : 0;
        out << io::dump(j);
    } else {
        out << "pairing = " << (cup.pairing ? 1 : 0) << "\n";
    }
    return exit_ok;
}

ExtensionChoice parse_extension(const std::string& text) {
    if (text == "zero") {
        return ZeroExtension{};
    }
    if (text.rfind("seed:", 0) == 0) {
        return RandomExtension{static_cast<std::uint64_t>(parse_index(text.substr(5), "--extension"))};
    }
    throw UsageError("--extension must be 'zero' or 'seed:N'");
}

int cmd_curvature(const std::string& file, const std::string& region, const std::string& extension, bool json,
                  std::ostream& out) {
    const auto sys = load_system(file);
    const auto faces = index_list(region, "--region");
    const auto ext = extend_coupling(sys, parse_extension(extension));
    const bool total = total_curvature(ext, faces);
    std::vector<std::size_t> defects;
    for (auto f : faces) {
        if (ext.curvature.get(f)) {
            defects.push_back(f);
        }
    }
    if (json) {
        Json j;
        j["region"] = faces;
        j["total_curvature"] = total ? 1 : 0;
        j["boundary_holonomy"] = boundary_holonomy(sys, faces) ? 1 : 0;
        j["frustrated_faces"] = defects;
        out << io::dump(j);
    } else {
        out << "total curvature = " << (total ? 1 : 0) << " over " << faces.size() << " face(s)\n";
        out << "  frustrated faces:";
        for (auto f : defects) {
            out << " " << f;
        }
        out << (defects.empty() ? " none\n" : "\n");
    }
    return exit_ok;
}

// ---------------------------------------------------------------------------
// flux and game

int cmd_flux_sector(const std::string& file, const std::string& mu, bool json, std::ostream& out) {
    const auto x = load_complex(file);
    const auto s = sector(*x, face_set(*x, mu, "--mu"));
    if (json) {
        Json j;
        j["sector"] = io::bits_to_json(s);
        out << io::dump(j);
    } else {
        out << "sector = " << bits(s) << "\n";
    }
    return exit_ok;
}

void print_reach(const ReachResult& r, bool json, std::ostream& out) {
    if (json) {
        out << io::dump(io::reach_to_json(r));
        return;
    }
    if (r.reachable) {
        out << "reachable in " << r.moves.size() << " toggle(s):";
        for (auto e : r.moves) {
            out << " " << e;
        }
        out << "\n";
    } else {
        out << "unreachable; separating invariant " << bits(r.invariant) << "\n";
    }
}

int cmd_flux_reach(const std::string& file, const std::string& from, const std::string& to, bool frozen, bool json,
                   std::ostream& out) {
    const auto x = load_complex(file);
    const auto r = reachable(*x, face_set(*x, from, "--from"), face_set(*x, to, "--to"),
                             frozen ? BoundaryMode::Frozen : BoundaryMode::Free);
    print_reach(r, json, out);
    return exit_ok;
}

std::shared_ptr<const CellComplex> board_or_file(const std::string& board, const std::string& file) {
    if (!file.empty()) {
        return load_complex(file);
    }
    for (const auto& b : service::boards()) {
        if (b.id == board) {
            return b.complex;
        }
    }
    throw UsageError("unknown board '" + board + "'");
}

int cmd_game_solve(const std::string& board, const std::string& file, const std::string& start,
                   const std::string& target, bool frozen, bool json, std::ostream& out) {
    const auto x = board_or_file(board, file);
    GameSession session(x, frozen ? BoundaryMode::Frozen : BoundaryMode::Free, face_set(*x, start, "--start"),
                        face_set(*x, target, "--target"));
    print_reach(session.solve(), json, out);
    return exit_ok;
}

int default_port() {
    if (const char* env = std::getenv(port_env)) {
        const auto p = parse_int(env, port_env);
        if (p <= 0 || p > 65535) {
            throw UsageError(std::string(port_env) + " must be a port number");
        }
        return static_cast<int>(p);
    }
    return fallback_port;
}

int cmd_game_serve(const std::string& host, int port, const std::string& board, std::ostream& out,
                   std::ostream& err) {
    if (port < 0) {
        port = default_port();
    }
    service::GameService svc = [&] {
        try {
            return service::GameService(board);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }();
    service::HttpServer server(svc);
    const auto bound = server.bind(host, port);
    if (bound < 0) {
        err << "error: cannot bind " << host << ":" << port << "\n";
        return exit_input_error;
    }
    out << "serving on http://" << host << ":" << bound << " (default board " << board << ")" << std::endl;
    return server.listen() ? exit_ok : exit_input_error;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cohomological analysis of bistable figures over Z2"};
    app.name("bistable");
    app.require_subcommand(1);

    std::string file;
    bool json = false;
    auto add_file = [&](CLI::App* sub) {
        sub->add_option("file", file, "system JSON file")->required();
        sub->add_flag("--json", json, "machine-readable output");
    };

    std::string kind;
    std::string output;
    bool list = false;
    auto* build = app.add_subcommand("build", "build a system from the catalog; extra --param value pairs");
    build->add_option("kind", kind, "builder kind");
    build->add_option("-o,--output", output, "output file (default stdout)");
    build->add_flag("--list", list, "list builder kinds and parameters");
    build->allow_extras();

    std::string region;
    auto* classify_cmd = app.add_subcommand("classify", "obstruction level with witness");
    add_file(classify_cmd);
    classify_cmd->add_option("--region", region, "comma-separated face indices of a region D");

    std::string cycle;
    auto* holonomy_cmd = app.add_subcommand("holonomy", "holonomy around a vertex cycle");
    add_file(holonomy_cmd);
    holonomy_cmd->add_option("--cycle", cycle, "comma-separated vertices")->required();

    auto* solve_cmd = app.add_subcommand("solve", "global sections or an obstruction");
    add_file(solve_cmd);

    std::string dot;
    auto* cover_cmd = app.add_subcommand("cover", "double cover of the constraint graph");
    add_file(cover_cmd);
    cover_cmd->add_option("--dot", dot, "write the cover as DOT");
    std::string system_dot;
    cover_cmd->add_option("--system-dot", system_dot, "write the base system as DOT");

    std::size_t window = 1;
    bool dual = false;
    std::size_t laps = 1;
    std::size_t start = 0;
    std::string trace;
    auto* moma = app.add_subcommand("moma", "aperture transport around a ring");
    add_file(moma);
    moma->add_option("--window", window, "window length")->required();
    moma->add_flag("--dual", dual, "two windows: exchange-loop monodromy");
    moma->add_option("--laps", laps, "number of laps (default 1)");
    moma->add_option("--start", start, "first window vertex (default 0)");
    moma->add_option("--trace", trace, "write the transport trace as JSON");

    std::size_t alpha = 0;
    std::size_t beta = 0;
    auto* cup = app.add_subcommand("cup", "cup product pairing of two H1 basis classes");
    add_file(cup);
    cup->add_option("--alpha", alpha, "index into the H1 basis")->required();
    cup->add_option("--beta", beta, "index into the H1 basis")->required();

    std::string extension = "zero";
    auto* curvature = app.add_subcommand("curvature", "total curvature of a region");
    add_file(curvature);
    curvature->add_option("--region", region, "comma-separated face indices")->required();
    curvature->add_option("--extension", extension, "zero or seed:N");

    std::string mu;
    std::string from;
    std::string to;
    bool frozen = false;
    auto* flux = app.add_subcommand("flux", "face fluxes and potentials");
    flux->require_subcommand(1);
    auto* flux_sector = flux->add_subcommand("sector", "H2 class of a flux");
    add_file(flux_sector);
    flux_sector->add_option("--mu", mu, "comma-separated frustrated faces");
    auto* flux_reach = flux->add_subcommand("reach", "edge toggles between two fluxes");
    add_file(flux_reach);
    flux_reach->add_option("--from", from, "comma-separated faces");
    flux_reach->add_option("--to", to, "comma-separated faces");
    flux_reach->add_flag("--frozen", frozen, "boundary edges cannot toggle");

    std::string board = "icosahedron";
    std::string host = "127.0.0.1";
    int port = -1;
    std::string game_file;
    std::string target;
    std::string game_start;
    auto* game = app.add_subcommand("game", "edge-toggle flux game");
    game->require_subcommand(1);
    auto* serve = game->add_subcommand("serve", "run the HTTP game service");
    serve->add_option("--port", port, std::string("port (default $") + port_env + " or 8080)");
    serve->add_option("--host", host, "bind address");
    serve->add_option("--board", board, "default board");
    auto* game_solve = game->add_subcommand("solve", "moves from start to target");
    game_solve->add_option("--board", board, "board id");
    game_solve->add_option("--file", game_file, "complex or system JSON instead of a board");
    game_solve->add_option("--start", game_start, "comma-separated faces set at the start");
    game_solve->add_option("--target", target, "comma-separated faces set in the target");
    game_solve->add_flag("--frozen", frozen, "boundary edges cannot toggle");
    game_solve->add_flag("--json", json, "machine-readable output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        err << "run 'bistable --help' for usage\n";
        return exit_usage;
    }
    if (!build->parsed() && !app.remaining().empty()) {
        err << "error: unexpected arguments\n";
        return exit_usage;
    }

    try {
        if (build->parsed()) {
            return cmd_build(kind, list, build->remaining(), output, out);
        }
        if (classify_cmd->parsed()) {
            return cmd_classify(file, region, json, out);
        }
        if (holonomy_cmd->parsed()) {
            return cmd_holonomy(file, cycle, json, out);
        }
        if (solve_cmd->parsed()) {
            return cmd_solve(file, json, out);
        }
        if (cover_cmd->parsed()) {
            if (!system_dot.empty()) {
                write_text(system_dot, io::system_to_dot(load_system(file)));
            }
            return cmd_cover(file, dot, json, out);
        }
        if (moma->parsed()) {
            return cmd_moma(file, window, dual, laps, start, trace, json, out);
        }
        if (cup->parsed()) {
            return cmd_cup(file, alpha, beta, json, out);
        }
        if (curvature->parsed()) {
            return cmd_curvature(file, region, extension, json, out);
        }
        if (flux_sector->parsed()) {
            return cmd_flux_sector(file, mu, json, out);
        }
        if (flux_reach->parsed()) {
            return cmd_flux_reach(file, from, to, frozen, json, out);
        }
        if (game_solve->parsed()) {
            return cmd_game_solve(board, game_file, game_start, target, frozen, json, out);
        }
        if (serve->parsed()) {
            return cmd_game_serve(host, port, board, out, err);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    err << "error: no command\n";
    return exit_usage;
}

} // namespace bistable::cli
