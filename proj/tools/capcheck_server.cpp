// HTTP front end for the caption checker.
//
// Flags override environment: CAPCHECK_PORT, CAPCHECK_LEXICON,
// CAPCHECK_VECTORS, CAPCHECK_SIM_THRESHOLD, CAPCHECK_CORS_ORIGIN.

#include "capcheck/capcheck.hpp"
#include "capcheck/http_server.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <memory>
#include <optional>
#include <string>

int main(int argc, char** argv) {
    CLI::App app{"capcheck HTTP service"};
    int port = 8080;
    std::string host = "0.0.0.0", lexicon, vectors, cors;
    double threshold = capcheck::kDefaultSimilarityThreshold;

    app.add_option("--port", port, "listen port")->envname("CAPCHECK_PORT");
    app.add_option("--host", host, "bind address")->envname("CAPCHECK_HOST");
    app.add_option("--lexicon", lexicon, "keyword lexicon (TSV)")->envname("CAPCHECK_LEXICON");
    app.add_option("--vectors", vectors, "word vectors for similarity")->envname("CAPCHECK_VECTORS");
    app.add_option("--sim-threshold", threshold, "minimum keyword similarity")
        ->envname("CAPCHECK_SIM_THRESHOLD")
        ->check(CLI::Range(0.0, 1.0));
    app.add_option("--cors-origin", cors, "allowed browser origin")->envname("CAPCHECK_CORS_ORIGIN");
    CLI11_PARSE(app, argc, argv);

    std::shared_ptr<const capcheck::CaptionAnalyzer> analyzer;
    try {
        auto lex = lexicon.empty() ? capcheck::Lexicon::builtin() : capcheck::Lexicon::load(lexicon);
        std::shared_ptr<const capcheck::SimilarityProvider> sim;
        if (!vectors.empty()) sim = std::make_shared<capcheck::VectorSimilarity>(capcheck::VectorSimilarity::load(vectors));
        analyzer = std::make_shared<capcheck::CaptionAnalyzer>(std::move(lex), std::move(sim), threshold);
    } catch (const std::exception& e) {
        std::cerr << "capcheck_server: " << e.what() << '\n';
        return 2;
    }

    capcheck::Service service(analyzer);
    httplib::Server server;
    server.set_payload_max_length(256u << 20);
    capcheck::mount(server, service, cors.empty() ? std::nullopt : std::optional<std::string>(cors));

    std::cerr << "listening on " << host << ':' << port << '\n';
    if (!server.listen(host, port)) {
        std::cerr << "capcheck_server: cannot listen on " << host << ':' << port << '\n';
        return 1;
    }
    return 0;
}
