#include "bistable/service/game_service.hpp"

#include "bistable/builders/builders.hpp"

namespace bistable::service {

const std::vector<Board>& boards() {
    static const std::vector<Board> list{
        {"tetrahedron", "4 triangles on a sphere", tetrahedron().ambient_ptr()},
        {"icosahedron", "20 triangles on a sphere", icosahedron().ambient_ptr()},
        {"dodecahedron", "12 pentagons on a sphere", dodecahedral_sphere().ambient_ptr()},
        {"disc_grid", "3 x 3 squares on a disc; boundary edges can be frozen", necker_grid(4, 4).ambient_ptr()},
        {"torus", "3 x 3 squares on a torus", gear_torus(3, 3).ambient_ptr()},
    };
    return list;
}

namespace {

Response ok(Json body) {
    Json out;
    out["schema_version"] = schema_version;
    for (auto& [k, v] : body.items()) {
        out[k] = std::move(v);
    }
    return {200, std::move(out)};
}

std::vector<std::string> split_path(std::string_view path) {
    std::vector<std::string> parts;
    std::size_t i = 0;
    while (i < path.size()) {
        while (i < path.size() && path[i] == '/') {
            ++i;
        }
        const auto j = path.find('/', i);
        const auto end = j == std::string_view::npos ? path.size() : j;
        if (end > i) {
            parts.emplace_back(path.substr(i, end - i));
        }
        i = end;
    }
    return parts;
}

} // namespace

Response error_response(int status, const std::string& code, const std::string& message) {
    Json body;
    body["schema_version"] = schema_version;
    body["error"] = {{"code", code}, {"message", message}};
    return {status, std::move(body)};
}

GameService::GameService(std::string default_board) : default_board_(std::move(default_board)) {
    bool known = false;
    for (const auto& b : boards()) {
        known = known || b.id == default_board_;
    }
    if (!known) {
        throw std::invalid_argument("unknown board '" + default_board_ + "'");
    }
}

Response GameService::handle(std::string_view method, std::string_view path, std::string_view body) {
    const auto parts = split_path(path);
    auto parse_body = [&]() -> Json {
        if (body.empty()) {
            return Json::object();
        }
        return Json::parse(body);
    };
    try {
        if (parts.size() == 1 && parts[0] == "complexes") {
            return method == "GET" ? complexes() : error_response(405, "method_not_allowed", "use GET");
        }
        if (!parts.empty() && parts[0] == "session") {
            if (parts.size() == 1) {
                return method == "POST" ? create_session(parse_body())
                                        : error_response(405, "method_not_allowed", "use POST");
            }
            const auto& id = parts[1];
            if (parts.size() == 2) {
                return method == "GET" ? get_session(id) : error_response(405, "method_not_allowed", "use GET");
            }
            if (parts.size() == 3) {
                if (parts[2] == "toggle") {
                    return method == "POST" ? toggle(id, parse_body())
                                            : error_response(405, "method_not_allowed", "use POST");
                }
                if (parts[2] == "reset") {
                    return method == "POST" ? reset(id) : error_response(405, "method_not_allowed", "use POST");
                }
                if (parts[2] == "solvable") {
                    return method == "GET" ? solvable(id) : error_response(405, "method_not_allowed", "use GET");
                }
            }
        }
        return error_response(404, "not_found", "no route for " + std::string(path));
    } catch (const Json::exception& e) {
        return error_response(400, "bad_request", std::string("malformed JSON: ") + e.what());
    }
}

Response GameService::create_session(const Json& request) {
    if (!request.is_object()) {
        return error_response(400, "bad_request", "request body must be a JSON object");
    }
    std::shared_ptr<const CellComplex> complex;
    std::string board;
    try {
        if (request.contains("complex")) {
            complex = std::make_shared<const CellComplex>(io::complex_from_json(request.at("complex")));
            board = "inline";
        } else {
            board = request.value("complex_id", default_board_);
            for (const auto& b : boards()) {
                if (b.id == board) {
                    complex = b.complex;
                }
            }
            if (!complex) {
                return error_response(404, "unknown_complex", "no board named '" + board + "'");
            }
        }
        const auto mode = boundary_mode_from_string(request.value("mode", std::string("free")));
        const auto faces = complex->face_count();
        const auto start =
            request.contains("start") ? io::bits_from_json(request.at("start"), faces, "start") : BitVector(faces);
        const auto target =
            request.contains("target") ? io::bits_from_json(request.at("target"), faces, "target") : BitVector(faces);
        auto entry = std::make_shared<Entry>(board, GameSession(complex, mode, start, target));
        std::string id;
        {
            std::lock_guard lock(registry_mutex_);
            id = "s" + std::to_string(next_id_++);
            sessions_.emplace(id, entry);
        }
        std::lock_guard lock(entry->mutex);
        return ok({{"session_id", id}, {"state", state_of(id, *entry)}});
    } catch (const std::invalid_argument& e) {
        return error_response(400, "bad_request", e.what());
    }
}

std::shared_ptr<GameService::Entry> GameService::find(const std::string& id) const {
    std::lock_guard lock(registry_mutex_);
    const auto it = sessions_.find(id);
    return it == sessions_.end() ? nullptr : it->second;
}

Json GameService::state_of(const std::string& id, const Entry& entry) {
    const auto& s = entry.session;
    Json j;
    j["session_id"] = id;
    j["board"] = entry.board;
    j["mode"] = to_string(s.mode());
    j["faces"] = io::bits_to_json(s.flux());
    j["target"] = io::bits_to_json(s.target());
    j["sector"] = io::bits_to_json(s.sector());
    j["moves"] = s.moves().size();
    j["won"] = s.won();
    j["toggleable_edges"] = s.toggleable_edges();
    return j;
}

Response GameService::get_session(const std::string& id) {
    const auto entry = find(id);
    if (!entry) {
        return error_response(404, "unknown_session", "no session '" + id + "'");
    }
    std::lock_guard lock(entry->mutex);
    return ok(state_of(id, *entry));
}

Response GameService::toggle(const std::string& id, const Json& request) {
    const auto entry = find(id);
    if (!entry) {
        return error_response(404, "unknown_session", "no session '" + id + "'");
    }
    if (!request.is_object() || !request.contains("edge") || !request.at("edge").is_number_integer() ||
        request.at("edge").get<std::int64_t>() < 0) {
        return error_response(400, "bad_request", "expected {\"edge\": <non-negative integer>}");
    }
    const auto edge = request.at("edge").get<std::size_t>();
    std::lock_guard lock(entry->mutex);
    try {
        entry->session.toggle(edge);
    } catch (const RuleViolation& e) {
        return error_response(409, "rule_violation", e.what());
    } catch (const std::out_of_range& e) {
        return error_response(400, "unknown_edge", e.what());
    }
    return ok(state_of(id, *entry));
}

Response GameService::reset(const std::string& id) {
    const auto entry = find(id);
    if (!entry) {
        return error_response(404, "unknown_session", "no session '" + id + "'");
    }
    std::lock_guard lock(entry->mutex);
    entry->session.reset();
    return ok(state_of(id, *entry));
}

Response GameService::solvable(const std::string& id) {
    const auto entry = find(id);
    if (!entry) {
        return error_response(404, "unknown_session", "no session '" + id + "'");
    }
    ReachResult r;
    {
        std::lock_guard lock(entry->mutex);
        r = entry->session.solve();
    }
    Json body;
    body["solvable"] = r.reachable;
    body["invariant"] = io::bits_to_json(r.invariant);
    if (r.reachable) {
        body["solution"] = r.moves;
    }
    return ok(std::move(body));
}

Response GameService::complexes() const {
    Json list = Json::array();
    for (const auto& b : boards()) {
        Json j;
        j["id"] = b.id;
        j["summary"] = b.summary;
        j["closed_surface"] = b.complex->is_closed_surface();
        j["h2_dimension"] = cohomology(*b.complex, 2).dimension();
        j["complex"] = io::complex_to_json(*b.complex);
        list.push_back(std::move(j));
    }
    return ok({{"default", default_board_}, {"complexes", std::move(list)}});
}

std::size_t GameService::session_count() const {
    std::lock_guard lock(registry_mutex_);
    return sessions_.size();
}

} // namespace bistable::service
