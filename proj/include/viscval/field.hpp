#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "viscval/maze.hpp"

namespace viscval {

enum class NodeMask : std::uint8_t { free_node = 0, obstacle = 1, goal = 2, border = 3 };

/** Grid-sampled scalar field on a cell-centered lattice.
 *
 * Node (i, j) sits at (x0 + (i+0.5)h, y0 + (j+0.5)h); the domain boundary
 * coincides with the outermost cell faces. Mask classes select boundary
 * treatment in the solvers: free nodes are unknowns, goal/obstacle/border
 * nodes carry Dirichlet data (or mirror ghosts under a Neumann bc).
 */
struct ScalarField2D {
    int nx = 0;
    int ny = 0;
    double h = 1.0;
    double x0 = 0.0;
    double y0 = 0.0;
    std::vector<double> data;
    std::vector<NodeMask> mask;

    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(j) * nx + i;
    }
    bool in_bounds(int i, int j) const { return i >= 0 && i < nx && j >= 0 && j < ny; }
    Vec2 node_pos(int i, int j) const {
        return {x0 + (i + 0.5) * h, y0 + (j + 0.5) * h};
    }
    double& at(int i, int j) { return data[index(i, j)]; }
    double at(int i, int j) const { return data[index(i, j)]; }
    NodeMask mask_at(int i, int j) const { return mask[index(i, j)]; }
    bool is_free(int i, int j) const { return mask_at(i, j) == NodeMask::free_node; }
    bool is_goal(int i, int j) const { return mask_at(i, j) == NodeMask::goal; }

    /** Free node with all four axis neighbors inside the grid and free. */
    bool is_interior_free(int i, int j) const;
};

ScalarField2D make_field(int nx, int ny, double h, double fill = 0.0,
                         NodeMask fill_mask = NodeMask::free_node);

struct Rect {
    double x_min = 0, y_min = 0, x_max = 0, y_max = 0;
    bool contains(Vec2 p) const {
        return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
    }
    double width() const { return x_max - x_min; }
    double height() const { return y_max - y_min; }
};

/** Continuous arena with axis-aligned rectangular obstacles and a goal
 * region; the canonical toy scene is a single interior block with the goal
 * strip at the bottom of the arena. */
struct ObstacleScene {
    Rect arena;
    std::vector<Rect> obstacles;
    Rect goal;

    bool is_free(Vec2 p) const;

    /** Exact distance from p along unit dir to the first obstacle face or
     * arena wall (slab intersections; no grid involved). */
    double boundary_distance(Vec2 p, Vec2 dir) const;

    void validate() const;
};

/** The standard toy scene: unit arena, one centered block, goal strip at the
 * bottom. Geometry is snapped to half-node offsets of the given resolution
 * so rasterized faces fall midway between node centers. */
ObstacleScene toy_obstacle_scene();

/** Node-center rasterization of a scene; data is zero-filled. */
ScalarField2D rasterize(const ObstacleScene& scene, double h);

/** Single-row strip [0, length] with a goal node at x=0; the far end is a
 * border node (Dirichlet under the default bc). Grid edges mirror, so the
 * discrete operator is exactly one-dimensional. */
ScalarField2D make_strip(double length, double h, bool absorbing_far_end = true);

struct FieldCompare {
    double linf = 0.0;
    double rel_l2 = 0.0;
    std::vector<double> diff;  // same layout as inputs; NaN off-mask
};

/** Metrics over nodes that are free (or goal) in both fields and pass the
 * optional extra mask. Throws on shape mismatch. */
FieldCompare compare_fields(const ScalarField2D& a, const ScalarField2D& b,
                            const std::vector<std::uint8_t>* extra_mask = nullptr);

/** CSV export: one "nx,ny,h" header line, then row-major node values. The
 * mask goes to a parallel file with the same layout. */
void write_field_csv(const ScalarField2D& field, const std::string& path);
void write_mask_csv(const ScalarField2D& field, const std::string& path);

}  // namespace viscval
