#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "bistable/flux/flux.hpp"
#include "bistable/io/json_io.hpp"

namespace bistable::service {

using io::Json;

inline constexpr int schema_version = 1;

struct Response {
    int status = 200;
    Json body;
};

struct Board {
    std::string id;
    std::string summary;
    std::shared_ptr<const CellComplex> complex;
};

/// tetrahedron, icosahedron, dodecahedron, disc_grid, torus.
[[nodiscard]] const std::vector<Board>& boards();

/// Edge-toggle game sessions behind a JSON request/response interface.
/// Thread-safe: the registry has its own lock and each session is mutated
/// under its own mutex.
class GameService {
  public:
    explicit GameService(std::string default_board = "icosahedron");

    /// Routes a request. Every response body carries schema_version.
    [[nodiscard]] Response handle(std::string_view method, std::string_view path, std::string_view body);

    [[nodiscard]] Response create_session(const Json& request);
    [[nodiscard]] Response get_session(const std::string& id);
    [[nodiscard]] Response toggle(const std::string& id, const Json& request);
    [[nodiscard]] Response reset(const std::string& id);
    [[nodiscard]] Response solvable(const std::string& id);
    [[nodiscard]] Response complexes() const;

    [[nodiscard]] std::size_t session_count() const;
    [[nodiscard]] const std::string& default_board() const { return default_board_; }

  private:
    struct Entry {
        Entry(std::string board, GameSession session) : board(std::move(board)), session(std::move(session)) {}
        std::mutex mutex;
        std::string board;
        GameSession session;
    };

    [[nodiscard]] std::shared_ptr<Entry> find(const std::string& id) const;
    [[nodiscard]] static Json state_of(const std::string& id, const Entry& entry);

    std::string default_board_;
    mutable std::mutex registry_mutex_;
    std::map<std::string, std::shared_ptr<Entry>> sessions_;
    std::uint64_t next_id_ = 1;
};

[[nodiscard]] Response error_response(int status, const std::string& code, const std::string& message);

} // namespace bistable::service
