#ifndef LGO_IO_HPP
#define LGO_IO_HPP

#include <lgo/constructions.hpp>
#include <lgo/embedding.hpp>
#include <lgo/graph.hpp>
#include <lgo/hom.hpp>
#include <lgo/poset.hpp>
#include <lgo/realize.hpp>

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>

namespace lgo
{
    using Json = nlohmann::json;

    class ParseError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// {"name": ..., "n": ..., "edges": [[u, v], ...]} with u < v, sorted.
    auto graph_to_json(const Graph & g) -> Json;
    auto graph_from_json(const Json & j) -> Graph;

    /// Graph JSON plus "base_edges", "special_nodes" and
    /// "connecting_triangles".
    auto line_graph_to_json(const LineGraph & l) -> Json;
    auto annotation_from_json(const Json & j) -> LineGraphAnnotation;

    /// {"from": name, "to": name, "map": [t_0, t_1, ...]}
    auto mapping_to_json(const HomMapping & m) -> Json;
    auto mapping_from_json(const Json & j) -> HomMapping;

    /// {"elements": [label, ...], "leq": [[x, y], ...]}. Labels may be strings
    /// or integers; pairs are closed transitively on load.
    auto poset_from_json(const Json & j) -> Poset;
    auto poset_to_json(const Poset & q) -> Json;

    /// Labels, E and U for every element, keyed by element label.
    auto embedding_to_json(const Poset & q, const PrimeLabeling & labels) -> Json;

    /// Per-pair records {src, dst, expected, found, nodes_explored, time}.
    auto report_to_json(const RealizationReport & report) -> Json;

    /// Undirected DOT. With an annotation, special nodes are drawn circled and
    /// connecting-triangle edges dashed.
    auto to_dot(const Graph & g, const LineGraphAnnotation * annotation = nullptr) -> std::string;

    /// Throws ParseError on unreadable or malformed files.
    auto read_json_file(const std::filesystem::path & path) -> Json;
    auto load_graph(const std::filesystem::path & path) -> Graph;
    auto write_text_file(const std::filesystem::path & path, const std::string & text) -> void;
}

#endif
