#include <lgo/roles.hpp>

#include <algorithm>
#include <set>

namespace lgo
{
    auto check_roles(const LineGraphAnnotation & source, const LineGraphAnnotation & target, std::span<const Vertex> map)
        -> RoleCheck
    {
        RoleCheck result;
        std::set<Vertex> special(target.special_nodes.begin(), target.special_nodes.end());
        for (auto v : source.special_nodes)
            if (! special.contains(map[v]))
                result.special_to_special = false;

        std::set<Triangle> triangles(target.connecting_triangles.begin(), target.connecting_triangles.end());
        for (auto & t : source.connecting_triangles) {
            Triangle image{map[t[0]], map[t[1]], map[t[2]]};
            std::sort(image.begin(), image.end());
            if (! triangles.contains(image))
                result.triangle_to_triangle = false;
        }
        return result;
    }
}
