#pragma once

#include <cubedens/cube.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace cubedens
{
    /// {∅, 1, 12, ..., 12⋯d}: d+1 vertices, endpoints at distance d.
    [[nodiscard]] auto make_perfect_path(int d) -> Configuration;

    /// {∅, 1, 12, ..., 12⋯d, 2⋯d, ..., d}: a 2d-cycle whose opposite vertices are at distance d.
    [[nodiscard]] auto make_perfect_cycle(int d) -> Configuration;

    [[nodiscard]] auto single_vertex(int d) -> Configuration;
    [[nodiscard]] auto adjacent_pair(int d = 2) -> Configuration;
    [[nodiscard]] auto antipodal_pair(int d = 2) -> Configuration;

    /// The two induced 8-cycles of Q_4 that are not perfect.
    [[nodiscard]] auto bad_cycle_a() -> Configuration;
    [[nodiscard]] auto bad_cycle_b() -> Configuration;

    /// V(Q_d) \ H.
    [[nodiscard]] auto complement(const Configuration & h) -> Configuration;

    [[nodiscard]] auto is_self_complementary(const Configuration & h) -> bool;

    /// Named entries: "P4@3", "C8@4", "C6@3", "W2@2", "adjacent@2", "antipodal@2",
    /// "badcycleA@4", "badcycleB@4", and the families P<d+1>@d, C<2d>@d, W<d>@d,
    /// adjacent@d, antipodal@d.
    [[nodiscard]] auto catalog_lookup(std::string_view name) -> Configuration;
    [[nodiscard]] auto catalog_names() -> std::vector<std::string>;
}
