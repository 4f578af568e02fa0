#include "tropicell/graph_json.hpp"

namespace tropicell {

nlohmann::json graph_to_json(const MarkedWeightedGraph& graph)
{
    nlohmann::json vertices = nlohmann::json::array();
    for (int w : graph.weights())
        vertices.push_back({{"weight", w}});
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : graph.edge_list())
        edges.push_back({u, v});
    nlohmann::json markings = nlohmann::json::array();
    for (int v : graph.markings())
        markings.push_back(v);
    return {{"vertices", vertices}, {"edges", edges}, {"markings", markings}};
}

MarkedWeightedGraph graph_from_json(const nlohmann::json& j)
{
    try
    {
        std::vector<int> weights;
        for (const auto& v : j.at("vertices"))
            weights.push_back(v.at("weight").get<int>());
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : j.at("edges"))
        {
            if (!e.is_array() || e.size() != 2)
                throw GraphError("edge must be a pair of vertex indices");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        std::vector<int> markings = j.at("markings").get<std::vector<int>>();
        return MarkedWeightedGraph(std::move(weights), edges, std::move(markings));
    }
    catch (const nlohmann::json::exception& err)
    {
        throw GraphError(std::string("graph JSON: ") + err.what());
    }
}

} // namespace tropicell
