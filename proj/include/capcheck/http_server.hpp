#pragma once

#include "capcheck/service.hpp"

#include <httplib.h>

#include <optional>
#include <string>

namespace capcheck {

/// Registers the service routes on `server`. When `corsOrigin` is set, every
/// response carries the matching Access-Control headers and preflight
/// requests are answered.
inline void mount(httplib::Server& server, Service& service, std::optional<std::string> corsOrigin = std::nullopt) {
    auto reply = [](httplib::Response& res, const Response& r) {
        res.status = r.status;
        res.set_content(r.body.dump(), "application/json");
    };

    server.Post("/api/series", [&service, reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, service.create_series(req.body));
    });
    server.Post(R"(/api/sessions/([^/]+)/check)", [&service, reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, service.check_session(req.matches[1], req.body));
    });
    server.Get(R"(/api/sessions/([^/]+)/features)", [&service, reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, service.features(req.matches[1]));
    });
    server.Get("/api/health", [](const httplib::Request&, httplib::Response& res) {
        res.set_content(R"({"status":"ok"})", "application/json");
    });

    if (corsOrigin) {
        const std::string origin = *corsOrigin;
        server.set_post_routing_handler([origin](const httplib::Request&, httplib::Response& res) {
            res.set_header("Access-Control-Allow-Origin", origin);
            res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
            res.set_header("Access-Control-Allow-Headers", "Content-Type");
        });
        server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
    }
}

} // namespace capcheck
