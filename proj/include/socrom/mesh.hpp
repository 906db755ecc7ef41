#pragma once

#include <array>
#include <vector>

#include "socrom/types.hpp"

namespace socrom {

/// Uniform triangulation of the unit square. Each grid square is split along
/// its bottom-left/top-right diagonal, vertices are ordered row by row
/// (y-major), and the state space lives on the vertices while the control
/// space is piecewise constant per triangle.
struct StructuredMesh {
  int nx = 0;
  int ny = 0;
  std::vector<std::array<double, 2>> vertices;
  std::vector<std::array<int, 3>> cells;
  std::vector<bool> boundary_vertex_flags;

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_cells() const { return static_cast<int>(cells.size()); }

  int vertex_id(int ix, int iy) const { return iy * (nx + 1) + ix; }

  double cell_area(int c) const;
  std::array<double, 2> cell_midpoint(int c) const;
  /// Constant gradients of the three P1 shape functions on cell c.
  std::array<std::array<double, 2>, 3> shape_gradients(int c) const;

  std::vector<int> interior_vertices() const;
};

StructuredMesh build_unit_square_mesh(int nx, int ny);

/// Coarse/fine mesh pair with, for every coarse node, the set of fine cells
/// covered by the coarse grid squares incident to that node.
struct CoarseOverlay {
  StructuredMesh coarse;
  StructuredMesh fine;
  int refinement = 0;
  std::vector<std::vector<int>> neighborhoods;  // coarse node -> fine cell ids

  int num_coarse_nodes() const { return coarse.num_vertices(); }
};

CoarseOverlay build_overlay(const StructuredMesh& coarse, int refinement);

}  // namespace socrom
