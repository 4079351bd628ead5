#pragma once

#include <array>
#include <iosfwd>
#include <vector>

namespace histop {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

// Nondegenerate triangle with cached affine maps for barycentric
// coordinates.  Edge j (0-based) is the side opposite vertex j and is
// parametrized over t in [-1, 1] as
//
//   edge_point(j, t) = (1+t)/2 * v[(j+1)%3] + (1-t)/2 * v[(j+2)%3],
//
// so t = 1 lands on v[(j+1)%3] and t = -1 on v[(j+2)%3].
class Triangle {
 public:
  // Throws std::invalid_argument when the vertices are collinear
  // (|signed area| <= 1e-14).
  Triangle(Point2 a, Point2 b, Point2 c);

  const Point2& vertex(int i) const { return v_[i]; }
  double signed_area() const { return signed_area_; }
  double area() const { return signed_area_ < 0.0 ? -signed_area_ : signed_area_; }
  Point2 centroid() const;

  // Barycentric coordinates of p; the three values sum to 1 up to round-off
  // for any p, inside the triangle or not.
  std::array<double, 3> barycentric(const Point2& p) const;

  // Point on edge j at parameter t; throws std::domain_error for t outside
  // [-1, 1] or j outside {0, 1, 2}.
  Point2 edge_point(int j, double t) const;

  // True when all barycentric coordinates are >= -tol.
  bool contains(const Point2& p, double tol = 1e-12) const;

 private:
  std::array<Point2, 3> v_;
  double signed_area_;
  // lambda_i(p) = gx_[i]*(p.x - v0.x) + gy_[i]*(p.y - v0.y) + g0_[i]
  std::array<double, 3> gx_, gy_, g0_;
};

// 2 * (lambda_1^2 + lambda_2^2 + lambda_3^2) - 1.  Equals 1 at the vertices,
// -1/3 at the centroid, and t^2 along any edge under the parametrization
// above, which is what makes univariate edge densities extend to the
// triangle through it.
double h_function(const Triangle& tri, const Point2& p);

struct MeshEdge {
  int a = -1;                 // vertex ids with a < b
  int b = -1;
  int tri[2] = {-1, -1};      // adjacent triangles; tri[1] < 0 on the boundary
  int local[2] = {-1, -1};    // local edge index within each adjacent triangle
  bool interior() const { return tri[1] >= 0; }
};

// Conforming triangulation.  Construction builds the edge table and
// verifies conformity: every edge is shared by at most two triangles,
// and an interior edge is traversed in opposite directions by its two
// triangles (consistent orientation).  Violations throw
// std::invalid_argument.
class Mesh {
 public:
  Mesh(std::vector<Point2> vertices, std::vector<std::array<int, 3>> triangles);

  int n_vertices() const { return static_cast<int>(vertices_.size()); }
  int n_triangles() const { return static_cast<int>(tris_.size()); }
  int n_edges() const { return static_cast<int>(edges_.size()); }

  const Point2& vertex(int i) const { return vertices_[i]; }
  const std::array<int, 3>& triangle_vertices(int i) const { return tris_[i]; }
  const Triangle& triangle(int i) const { return geom_[i]; }
  const MeshEdge& edge(int e) const { return edges_[e]; }
  // Global edge id of local edge j of triangle i.
  int edge_id(int i, int j) const { return tri_edges_[i][j]; }

  double total_area() const;

  // Plain-text export: vertex count and coordinates, then triangle count
  // and vertex index triples.
  void write_text(std::ostream& os) const;

 private:
  std::vector<Point2> vertices_;
  std::vector<std::array<int, 3>> tris_;
  std::vector<Triangle> geom_;
  std::vector<MeshEdge> edges_;
  std::vector<std::array<int, 3>> tri_edges_;
};

// Structured triangulation of [-1, 1]^2: an (n+1) x (n+1) grid of squares,
// each split by its bottom-left to top-right diagonal, giving 2(n+1)^2
// triangles, all counterclockwise.  Throws std::invalid_argument for n < 0.
Mesh friedrichs_keller(int n);

}  // namespace histop
