#include "histop/geometry.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace histop {

Triangle::Triangle(Point2 a, Point2 b, Point2 c) : v_{a, b, c} {
  const double ux = b.x - a.x, uy = b.y - a.y;
  const double wx = c.x - a.x, wy = c.y - a.y;
  const double det = ux * wy - wx * uy;  // twice the signed area
  signed_area_ = 0.5 * det;
  if (std::fabs(signed_area_) <= 1e-14) {
    throw std::invalid_argument("Triangle: vertices are (nearly) collinear");
  }
  // lambda_2 and lambda_3 solve [u w] [l2 l3]^T = p - a; lambda_1 = 1 - l2 - l3.
  gx_[1] = wy / det;
  gy_[1] = -wx / det;
  gx_[2] = -uy / det;
  gy_[2] = ux / det;
  gx_[0] = -gx_[1] - gx_[2];
  gy_[0] = -gy_[1] - gy_[2];
  g0_ = {1.0, 0.0, 0.0};
}

Point2 Triangle::centroid() const {
  return {(v_[0].x + v_[1].x + v_[2].x) / 3.0, (v_[0].y + v_[1].y + v_[2].y) / 3.0};
}

std::array<double, 3> Triangle::barycentric(const Point2& p) const {
  const double dx = p.x - v_[0].x, dy = p.y - v_[0].y;
  const double l2 = gx_[1] * dx + gy_[1] * dy;
  const double l3 = gx_[2] * dx + gy_[2] * dy;
  return {1.0 - l2 - l3, l2, l3};
}

Point2 Triangle::edge_point(int j, double t) const {
  if (j < 0 || j > 2) {
    throw std::domain_error("edge_point: edge index must be 0, 1 or 2");
  }
  if (!(t >= -1.0 && t <= 1.0)) {
    throw std::domain_error("edge_point: parameter t=" + std::to_string(t) +
                            " outside [-1, 1]");
  }
  const Point2& p = v_[(j + 1) % 3];
  const Point2& q = v_[(j + 2) % 3];
  const double sp = 0.5 * (1.0 + t), sq = 0.5 * (1.0 - t);
  return {sp * p.x + sq * q.x, sp * p.y + sq * q.y};
}

bool Triangle::contains(const Point2& p, double tol) const {
  const auto l = barycentric(p);
  return l[0] >= -tol && l[1] >= -tol && l[2] >= -tol;
}

double h_function(const Triangle& tri, const Point2& p) {
  const auto l = tri.barycentric(p);
  return 2.0 * (l[0] * l[0] + l[1] * l[1] + l[2] * l[2]) - 1.0;
}

Mesh::Mesh(std::vector<Point2> vertices, std::vector<std::array<int, 3>> triangles)
    : vertices_(std::move(vertices)), tris_(std::move(triangles)) {
  const int nv = n_vertices();
  geom_.reserve(tris_.size());
  tri_edges_.resize(tris_.size());

  std::map<std::pair<int, int>, int> edge_index;
  for (int i = 0; i < n_triangles(); ++i) {
    const auto& t = tris_[i];
    for (int k = 0; k < 3; ++k) {
      if (t[k] < 0 || t[k] >= nv) {
        throw std::invalid_argument("Mesh: triangle " + std::to_string(i) +
                                    " references vertex " + std::to_string(t[k]));
      }
    }
    geom_.emplace_back(vertices_[t[0]], vertices_[t[1]], vertices_[t[2]]);

    for (int j = 0; j < 3; ++j) {
      // Local edge j runs from vertex (j+1)%3 to (j+2)%3, matching the
      // edge parametrization direction at t = -1 .. 1 reversed; only the
      // undirected pair identifies the mesh edge.
      const int va = t[(j + 1) % 3];
      const int vb = t[(j + 2) % 3];
      const auto key = std::minmax(va, vb);
      auto it = edge_index.find(key);
      if (it == edge_index.end()) {
        MeshEdge e;
        e.a = key.first;
        e.b = key.second;
        e.tri[0] = i;
        e.local[0] = j;
        edge_index.emplace(key, static_cast<int>(edges_.size()));
        tri_edges_[i][j] = static_cast<int>(edges_.size());
        edges_.push_back(e);
      } else {
        MeshEdge& e = edges_[it->second];
        if (e.tri[1] >= 0) {
          throw std::invalid_argument("Mesh: edge (" + std::to_string(e.a) + "," +
                                      std::to_string(e.b) +
                                      ") shared by more than two triangles");
        }
        // Conformity: the second traversal must run opposite to the first.
        const auto& t0 = tris_[e.tri[0]];
        const int wa = t0[(e.local[0] + 1) % 3];
        if (wa == va) {
          throw std::invalid_argument("Mesh: inconsistent orientation across edge (" +
                                      std::to_string(e.a) + "," + std::to_string(e.b) + ")");
        }
        e.tri[1] = i;
        e.local[1] = j;
        tri_edges_[i][j] = it->second;
      }
    }
  }
}

double Mesh::total_area() const {
  double s = 0.0;
  for (const auto& g : geom_) s += g.area();
  return s;
}

void Mesh::write_text(std::ostream& os) const {
  char buf[80];
  os << "vertices " << n_vertices() << "\n";
  for (const auto& p : vertices_) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g\n", p.x, p.y);
    os << buf;
  }
  os << "triangles " << n_triangles() << "\n";
  for (const auto& t : tris_) {
    os << t[0] << " " << t[1] << " " << t[2] << "\n";
  }
}

Mesh friedrichs_keller(int n) {
  if (n < 0) throw std::invalid_argument("friedrichs_keller: n must be nonnegative");
  const int cells = n + 1;          // squares per side
  const int side = cells + 1;       // grid points per side
  const double h = 2.0 / cells;

  std::vector<Point2> verts;
  verts.reserve(static_cast<size_t>(side) * side);
  for (int j = 0; j < side; ++j) {
    for (int i = 0; i < side; ++i) {
      verts.push_back({-1.0 + h * i, -1.0 + h * j});
    }
  }
  auto vid = [side](int i, int j) { return j * side + i; };

  std::vector<std::array<int, 3>> tris;
  tris.reserve(2 * static_cast<size_t>(cells) * cells);
  for (int j = 0; j < cells; ++j) {
    for (int i = 0; i < cells; ++i) {
      const int v00 = vid(i, j), v10 = vid(i + 1, j);
      const int v01 = vid(i, j + 1), v11 = vid(i + 1, j + 1);
      // Bottom-left to top-right diagonal; both triangles counterclockwise.
      tris.push_back({v00, v10, v11});
      tris.push_back({v00, v11, v01});
    }
  }
  return Mesh(std::move(verts), std::move(tris));
}

}  // namespace histop
