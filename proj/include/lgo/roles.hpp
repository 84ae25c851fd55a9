#ifndef LGO_ROLES_HPP
#define LGO_ROLES_HPP

#include <lgo/constructions.hpp>

#include <span>

namespace lgo
{
    struct RoleCheck
    {
        bool special_to_special = true;
        bool triangle_to_triangle = true;

        auto ok() const -> bool { return special_to_special && triangle_to_triangle; }
    };

    /// Whether a mapping between annotated line graphs sends every special node
    /// to a special node and every connecting triangle onto a connecting
    /// triangle.
    auto check_roles(const LineGraphAnnotation & source, const LineGraphAnnotation & target, std::span<const Vertex> map)
        -> RoleCheck;
}

#endif
