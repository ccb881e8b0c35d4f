#include "cograph/graph_io.hpp"

#include <sstream>

#include "cograph/errors.hpp"

namespace cograph {

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    long long n = -1, m = -1;
    if (!(in >> n >> m) || n < 0 || m < 0) throw FormatError("edge list must start with \"n m\"");
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        long long u = -1, v = -1;
        if (!(in >> u >> v)) throw FormatError("edge list ended after " + std::to_string(i) + " of " +
                                               std::to_string(m) + " edges");
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw FormatError("invalid edge " + std::to_string(u) + " " + std::to_string(v));
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    std::string rest;
    if (in >> rest) throw FormatError("trailing data after edge list: " + rest);
    return g;
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.size() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.size()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw FormatError("graph JSON needs an integer \"n\"");
    const auto n = j["n"].get<long long>();
    if (n < 0) throw FormatError("graph JSON has negative \"n\"");
    Graph g(static_cast<int>(n));
    if (!j.contains("edges")) return g;
    if (!j["edges"].is_array()) throw FormatError("graph JSON \"edges\" must be an array");
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw FormatError("each edge must be a pair of integers");
        const auto u = e[0].get<long long>(), v = e[1].get<long long>();
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw FormatError("invalid edge " + std::to_string(u) + " " + std::to_string(v));
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

Graph parse_graph(const std::string& text) {
    const auto start = text.find_first_not_of(" \t\r\n");
    if (start != std::string::npos && text[start] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw FormatError(std::string("invalid JSON: ") + e.what());
        }
        return graph_from_json(j);
    }
    return parse_edge_list(text);
}

}  // namespace cograph
