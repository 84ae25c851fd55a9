#include <lgo/io.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

using std::string;
using std::vector;

namespace lgo
{
    namespace
    {
        auto quoted(const string & s) -> string
        {
            string result = "\"";
            for (auto c : s) {
                if (c == '"' || c == '\\')
                    result += '\\';
                result += c;
            }
            return result + "\"";
        }

        auto edges_to_json(const vector<Edge> & edges) -> Json
        {
            auto result = Json::array();
            for (auto & [u, v] : edges)
                result.push_back({u, v});
            return result;
        }

        auto edges_from_json(const Json & j) -> vector<Edge>
        {
            vector<Edge> result;
            for (auto & e : j) {
                if (! e.is_array() || e.size() != 2)
                    throw ParseError("edge must be a pair of vertex indices");
                result.emplace_back(e[0].get<int>(), e[1].get<int>());
            }
            return result;
        }
    }

    auto graph_to_json(const Graph & g) -> Json
    {
        return Json{{"name", g.name()}, {"n", g.vertex_count()}, {"edges", edges_to_json(g.edges())}};
    }

    auto graph_from_json(const Json & j) -> Graph
    {
        try {
            if (! j.is_object() || ! j.contains("n") || ! j.contains("edges"))
                throw ParseError("graph JSON needs \"n\" and \"edges\"");
            if (! j.at("n").is_number_integer() || ! j.at("edges").is_array())
                throw ParseError("graph JSON has wrongly typed \"n\" or \"edges\"");
            auto name = j.contains("name") ? j.at("name").get<string>() : string{};
            return Graph(j.at("n").get<int>(), edges_from_json(j.at("edges")), name);
        }
        catch (const Json::exception & e) {
            throw ParseError(string("bad graph JSON: ") + e.what());
        }
        catch (const std::invalid_argument & e) {
            throw ParseError(string("invalid graph: ") + e.what());
        }
    }

    auto line_graph_to_json(const LineGraph & l) -> Json
    {
        auto result = graph_to_json(l.graph);
        result["base_edges"] = edges_to_json(l.annotation.base_edge_of_node);
        result["special_nodes"] = l.annotation.special_nodes;
        auto triangles = Json::array();
        for (auto & t : l.annotation.connecting_triangles)
            triangles.push_back({t[0], t[1], t[2]});
        result["connecting_triangles"] = triangles;
        return result;
    }

    auto annotation_from_json(const Json & j) -> LineGraphAnnotation
    {
        LineGraphAnnotation result;
        try {
            if (j.contains("base_edges"))
                result.base_edge_of_node = edges_from_json(j.at("base_edges"));
            if (j.contains("special_nodes"))
                result.special_nodes = j.at("special_nodes").get<vector<Vertex>>();
            if (j.contains("connecting_triangles"))
                for (auto & t : j.at("connecting_triangles")) {
                    auto nodes = t.get<vector<Vertex>>();
                    if (nodes.size() != 3)
                        throw ParseError("connecting triangle must have three nodes");
                    result.connecting_triangles.push_back({nodes[0], nodes[1], nodes[2]});
                }
        }
        catch (const Json::exception & e) {
            throw ParseError(string("bad annotation JSON: ") + e.what());
        }
        return result;
    }

    auto mapping_to_json(const HomMapping & m) -> Json
    {
        return Json{{"from", m.from}, {"to", m.to}, {"map", m.map}};
    }

    auto mapping_from_json(const Json & j) -> HomMapping
    {
        try {
            return HomMapping{j.value("from", string{}), j.value("to", string{}), j.at("map").get<vector<Vertex>>()};
        }
        catch (const Json::exception & e) {
            throw ParseError(string("bad mapping JSON: ") + e.what());
        }
    }

    auto poset_from_json(const Json & j) -> Poset
    {
        auto label = [](const Json & x) -> string {
            if (x.is_string())
                return x.get<string>();
            if (x.is_number_integer())
                return std::to_string(x.get<long long>());
            throw ParseError("poset labels must be strings or integers");
        };

        try {
            if (! j.is_object() || ! j.contains("elements"))
                throw ParseError("poset JSON needs \"elements\"");
            vector<string> elements;
            for (auto & x : j.at("elements"))
                elements.push_back(label(x));
            vector<std::pair<string, string>> pairs;
            if (j.contains("leq"))
                for (auto & p : j.at("leq")) {
                    if (! p.is_array() || p.size() != 2)
                        throw ParseError("poset relation entries must be pairs");
                    pairs.emplace_back(label(p[0]), label(p[1]));
                }
            return Poset(std::move(elements), pairs);
        }
        catch (const Json::exception & e) {
            throw ParseError(string("bad poset JSON: ") + e.what());
        }
        catch (const PosetError & e) {
            throw ParseError(e.what());
        }
    }

    auto poset_to_json(const Poset & q) -> Json
    {
        auto leq = Json::array();
        for (int x = 0; x < q.size(); ++x)
            for (int y = 0; y < q.size(); ++y)
                if (x != y && q.leq(x, y))
                    leq.push_back({q.label(x), q.label(y)});
        return Json{{"elements", q.elements()}, {"leq", leq}};
    }

    auto embedding_to_json(const Poset & q, const PrimeLabeling & labels) -> Json
    {
        auto e = embed_divisibility(q, labels);
        auto u = embed_universal(q, labels);

        auto as_json = [](const PrimeSet & s) {
            Json j{{"primes", s.primes()}, {"text", s.to_string()}};
            if (auto v = s.value())
                j["value"] = *v;
            return j;
        };

        Json result{{"labels", Json::object()}, {"E", Json::object()}, {"U", Json::object()}};
        for (int x = 0; x < q.size(); ++x) {
            result["labels"][q.label(x)] = labels.primes[x];
            result["E"][q.label(x)] = as_json(e[x]);
            auto image = Json::array();
            for (auto & a : u[x])
                image.push_back(as_json(a));
            result["U"][q.label(x)] = image;
        }
        return result;
    }

    auto report_to_json(const RealizationReport & report) -> Json
    {
        auto pairs = Json::array();
        for (auto & p : report.pairs)
            pairs.push_back({{"src", p.src},
                {"dst", p.dst},
                {"expected", p.expected ? "exists" : "none"},
                {"found", p.found == SearchOutcome::found ? "exists" : to_string(p.found)},
                {"nodes_explored", p.nodes_explored},
                {"time", p.seconds}});
        return Json{{"ok", report.ok}, {"pairs", pairs}};
    }

    auto to_dot(const Graph & g, const LineGraphAnnotation * annotation) -> string
    {
        std::set<Vertex> special;
        std::set<Edge> dashed;
        if (annotation) {
            special.insert(annotation->special_nodes.begin(), annotation->special_nodes.end());
            for (auto & t : annotation->connecting_triangles) {
                dashed.insert({t[0], t[1]});
                dashed.insert({t[0], t[2]});
                dashed.insert({t[1], t[2]});
            }
        }

        std::ostringstream out;
        out << "graph " << quoted(g.name()) << " {\n";
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            out << "  " << v;
            if (annotation && v < static_cast<int>(annotation->base_edge_of_node.size())) {
                auto [x, y] = annotation->base_edge_of_node[v];
                out << " [label=\"" << x << "-" << y << "\"";
                if (special.contains(v))
                    out << ", shape=doublecircle";
                out << "]";
            }
            out << ";\n";
        }
        for (auto & [u, v] : g.edges()) {
            out << "  " << u << " -- " << v;
            if (dashed.contains({u, v}))
                out << " [style=dashed]";
            out << ";\n";
        }
        out << "}\n";
        return out.str();
    }

    auto read_json_file(const std::filesystem::path & path) -> Json
    {
        std::ifstream in(path);
        if (! in)
            throw ParseError("cannot read " + path.string());
        try {
            return Json::parse(in);
        }
        catch (const Json::exception & e) {
            throw ParseError(path.string() + ": " + e.what());
        }
    }

    auto load_graph(const std::filesystem::path & path) -> Graph
    {
        return graph_from_json(read_json_file(path));
    }

    auto write_text_file(const std::filesystem::path & path, const string & text) -> void
    {
        if (path.has_parent_path())
            std::filesystem::create_directories(path.parent_path());
        std::ofstream out(path);
        if (! out)
            throw std::runtime_error("cannot write " + path.string());
        out << text;
    }
}
