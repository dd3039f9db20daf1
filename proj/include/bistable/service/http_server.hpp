#pragma once

#include <memory>
#include <string>

#include "bistable/service/game_service.hpp"

namespace bistable::service {

/// HTTP front end for a GameService.
class HttpServer {
  public:
    explicit HttpServer(GameService& service);
    ~HttpServer();
    HttpServer(const HttpServer&) = delete;
    HttpServer& operator=(const HttpServer&) = delete;

    /// Binds without accepting yet; port 0 picks a free port. Returns the
    /// bound port, or -1 on failure.
    int bind(const std::string& host, int port);
    /// Blocks until stop() is called.
    bool listen();
    void stop();

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace bistable::service
