#include "bistable/service/http_server.hpp"

#include "httplib.h"

namespace bistable::service {

struct HttpServer::Impl {
    explicit Impl(GameService& s) : service(s) {}
    GameService& service;
    httplib::Server server;
};

HttpServer::HttpServer(GameService& service) : impl_(std::make_unique<Impl>(service)) {
    auto route = [this](const httplib::Request& req, httplib::Response& res) {
        const auto r = impl_->service.handle(req.method, req.path, req.body);
        res.status = r.status;
        res.set_content(r.body.dump(), "application/json");
    };
    impl_->server.Get(".*", route);
    impl_->server.Post(".*", route);
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
    if (port == 0) {
        return impl_->server.bind_to_any_port(host);
    }
    return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() {
    if (impl_) {
        impl_->server.stop();
    }
}

} // namespace bistable::service
