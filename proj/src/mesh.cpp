#include "socrom/mesh.hpp"

#include <stdexcept>

namespace socrom {

double StructuredMesh::cell_area(int c) const {
  const auto& t = cells[static_cast<std::size_t>(c)];
  const auto& a = vertices[static_cast<std::size_t>(t[0])];
  const auto& b = vertices[static_cast<std::size_t>(t[1])];
  const auto& d = vertices[static_cast<std::size_t>(t[2])];
  return 0.5 * ((b[0] - a[0]) * (d[1] - a[1]) - (d[0] - a[0]) * (b[1] - a[1]));
}

std::array<double, 2> StructuredMesh::cell_midpoint(int c) const {
  const auto& t = cells[static_cast<std::size_t>(c)];
  const auto& a = vertices[static_cast<std::size_t>(t[0])];
  const auto& b = vertices[static_cast<std::size_t>(t[1])];
  const auto& d = vertices[static_cast<std::size_t>(t[2])];
  return {(a[0] + b[0] + d[0]) / 3.0, (a[1] + b[1] + d[1]) / 3.0};
}

std::array<std::array<double, 2>, 3> StructuredMesh::shape_gradients(int c) const {
  const auto& t = cells[static_cast<std::size_t>(c)];
  const auto& p0 = vertices[static_cast<std::size_t>(t[0])];
  const auto& p1 = vertices[static_cast<std::size_t>(t[1])];
  const auto& p2 = vertices[static_cast<std::size_t>(t[2])];
  const double det = (p1[0] - p0[0]) * (p2[1] - p0[1]) - (p2[0] - p0[0]) * (p1[1] - p0[1]);
  // grad of barycentric coordinate i is the rotated opposite edge / det
  std::array<std::array<double, 2>, 3> g;
  g[0] = {(p1[1] - p2[1]) / det, (p2[0] - p1[0]) / det};
  g[1] = {(p2[1] - p0[1]) / det, (p0[0] - p2[0]) / det};
  g[2] = {(p0[1] - p1[1]) / det, (p1[0] - p0[0]) / det};
  return g;
}

std::vector<int> StructuredMesh::interior_vertices() const {
  std::vector<int> ids;
  ids.reserve(vertices.size());
  for (int v = 0; v < num_vertices(); ++v)
    if (!boundary_vertex_flags[static_cast<std::size_t>(v)]) ids.push_back(v);
  return ids;
}

StructuredMesh build_unit_square_mesh(int nx, int ny) {
  if (nx < 1 || ny < 1)
    throw std::invalid_argument("build_unit_square_mesh: cell counts must be >= 1");
  StructuredMesh m;
  m.nx = nx;
  m.ny = ny;
  m.vertices.reserve(static_cast<std::size_t>((nx + 1) * (ny + 1)));
  m.boundary_vertex_flags.reserve(m.vertices.capacity());
  for (int iy = 0; iy <= ny; ++iy) {
    for (int ix = 0; ix <= nx; ++ix) {
      m.vertices.push_back({static_cast<double>(ix) / nx, static_cast<double>(iy) / ny});
      m.boundary_vertex_flags.push_back(ix == 0 || ix == nx || iy == 0 || iy == ny);
    }
  }
  m.cells.reserve(static_cast<std::size_t>(2 * nx * ny));
  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      const int a = m.vertex_id(ix, iy);
      const int b = m.vertex_id(ix + 1, iy);
      const int c = m.vertex_id(ix + 1, iy + 1);
      const int d = m.vertex_id(ix, iy + 1);
      m.cells.push_back({a, b, c});
      m.cells.push_back({a, c, d});
    }
  }
  return m;
}

CoarseOverlay build_overlay(const StructuredMesh& coarse, int refinement) {
  if (refinement < 1) throw std::invalid_argument("build_overlay: refinement must be >= 1");
  CoarseOverlay ov;
  ov.coarse = coarse;
  ov.refinement = refinement;
  ov.fine = build_unit_square_mesh(coarse.nx * refinement, coarse.ny * refinement);

  const int fnx = ov.fine.nx;
  ov.neighborhoods.resize(static_cast<std::size_t>(coarse.num_vertices()));
  for (int cy = 0; cy <= coarse.ny; ++cy) {
    for (int cx = 0; cx <= coarse.nx; ++cx) {
      auto& cells = ov.neighborhoods[static_cast<std::size_t>(coarse.vertex_id(cx, cy))];
      for (int sy = cy - 1; sy <= cy; ++sy) {
        for (int sx = cx - 1; sx <= cx; ++sx) {
          if (sx < 0 || sy < 0 || sx >= coarse.nx || sy >= coarse.ny) continue;
          for (int fy = sy * refinement; fy < (sy + 1) * refinement; ++fy) {
            for (int fx = sx * refinement; fx < (sx + 1) * refinement; ++fx) {
              const int sq = fy * fnx + fx;
              cells.push_back(2 * sq);
              cells.push_back(2 * sq + 1);
            }
          }
        }
      }
    }
  }
  return ov;
}

}  // namespace socrom
