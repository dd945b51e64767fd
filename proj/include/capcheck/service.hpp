#pragma once

// Request handlers for the HTTP facade. Each handler maps a request body to a
// status code and a JSON body; the socket layer lives in http_server.hpp.

#include "capcheck/caption.hpp"
#include "capcheck/check.hpp"
#include "capcheck/ingest.hpp"
#include "capcheck/json_io.hpp"
#include "capcheck/session_store.hpp"

#include <json.hpp>

#include <memory>
#include <string>
#include <string_view>

namespace capcheck {

struct Response {
    int status = 200;
    nlohmann::json body;
};

class Service {
public:
    struct Options {
        std::size_t maxPoints = 1'000'000;
        std::size_t maxSessions = 256;
        double defaultWidth = 640;
        double defaultHeight = 480;
    };

    explicit Service(std::shared_ptr<const CaptionAnalyzer> analyzer) : Service(std::move(analyzer), Options{}) {}

    Service(std::shared_ptr<const CaptionAnalyzer> analyzer, Options options)
        : analyzer_(std::move(analyzer)), options_(options), store_(options.maxSessions) {}

    /// POST /api/series
    Response create_series(std::string_view body) {
        try {
            if (detail::trim(body).empty()) return error(400, "empty body");
            auto series = parse_series(body);
            if (series.size() > options_.maxPoints)
                return error(413, "series has " + std::to_string(series.size()) + " points; the limit is " +
                                      std::to_string(options_.maxPoints));
            const auto spec = default_spec(series, options_.defaultWidth, options_.defaultHeight);
            const auto granularity = detect_granularity(series);
            const auto count = series.size();
            const auto id = store_.create(std::move(series), spec);
            return {200,
                    {{"sessionId", id},
                     {"pointCount", count},
                     {"granularity", to_string(granularity)},
                     {"defaultSpec", spec_to_json(spec)}}};
        } catch (const ParseError& e) {
            auto r = error(400, e.what());
            if (e.row()) r.body["row"] = e.row();
            if (e.column()) r.body["column"] = e.column();
            return r;
        } catch (const Error& e) {
            return error(400, e.what());
        }
    }

    /// POST /api/sessions/{id}/check with `{"spec"?: {...}, "caption": "..."}`
    Response check_session(const std::string& id, std::string_view body) {
        auto session = store_.get(id);
        if (!session) return error(404, "unknown session " + id);

        nlohmann::json req;
        try {
            req = body.empty() ? nlohmann::json::object() : nlohmann::json::parse(body);
        } catch (const nlohmann::json::parse_error& e) {
            return error(400, std::string("malformed JSON: ") + e.what());
        }
        if (!req.is_object()) return error(400, "request body must be a JSON object");

        try {
            ChartSpec spec = session->spec;
            if (req.contains("spec") && !req["spec"].is_null()) spec = spec_from_json(req["spec"], session->spec);
            std::string caption = session->caption;
            if (req.contains("caption")) {
                if (!req["caption"].is_string()) return error(400, "caption must be a string");
                caption = req["caption"].get<std::string>();
            }
            auto result = check(session->series, spec, caption, *analyzer_);
            auto json = check_result_json(result);
            store_.update(id, [&](Session& s) {
                s.spec = spec;
                s.caption = caption;
                s.lastResult = std::move(result);
            });
            return {200, std::move(json)};
        } catch (const EmptyChart& e) {
            return error(422, e.what());
        } catch (const Error& e) {
            return error(400, e.what());
        }
    }

    /// GET /api/sessions/{id}/features
    Response features(const std::string& id) {
        auto session = store_.get(id);
        if (!session) return error(404, "unknown session " + id);
        try {
            const auto clipped = clip(session->series, session->spec);
            const auto polyline = normalize(clipped, session->spec);
            auto j = features_json(enumerate_features(polyline, point_persistence(polyline)), clipped);
            j["spec"] = spec_to_json(session->spec);
            return {200, std::move(j)};
        } catch (const EmptyChart& e) {
            return error(422, e.what());
        }
    }

    SessionStore& store() noexcept { return store_; }
    const CaptionAnalyzer& analyzer() const noexcept { return *analyzer_; }

private:
    static Response error(int status, const std::string& message) { return {status, {{"error", message}}}; }

    std::shared_ptr<const CaptionAnalyzer> analyzer_;
    Options options_;
    SessionStore store_;
};

} // namespace capcheck
