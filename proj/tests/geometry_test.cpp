#include "histop/geometry.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "test_util.hpp"

using histop::Mesh;
using histop::Point2;
using histop::Triangle;
using histop_test::random_point_in;
using histop_test::random_triangle;

TEST_CASE("barycentric coordinates are Kronecker at vertices") {
  std::mt19937 rng(2024);
  for (int k = 0; k < 10; ++k) {
    const Triangle tri = random_triangle(rng);
    for (int i = 0; i < 3; ++i) {
      const auto l = tri.barycentric(tri.vertex(i));
      for (int j = 0; j < 3; ++j) {
        CHECK(l[j] == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("barycentric partition of unity everywhere") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int k = 0; k < 5; ++k) {
    const Triangle tri = random_triangle(rng);
    for (int n = 0; n < 10000; ++n) {
      const Point2 p{u(rng), u(rng)};
      const auto l = tri.barycentric(p);
      CHECK(std::fabs(l[0] + l[1] + l[2] - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("barycentric reproduces affine functions") {
  std::mt19937 rng(11);
  for (int k = 0; k < 10; ++k) {
    const Triangle tri = random_triangle(rng);
    const auto aff = histop_test::random_affine(rng);
    for (int n = 0; n < 50; ++n) {
      const Point2 p = random_point_in(tri, rng);
      const auto l = tri.barycentric(p);
      double v = 0.0;
      for (int i = 0; i < 3; ++i) v += l[i] * aff(tri.vertex(i));
      CHECK(v == doctest::Approx(aff(p)).epsilon(1e-11));
    }
  }
}

TEST_CASE("edge parametrization endpoints, midpoint and vanishing coordinate") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> ut(-1.0, 1.0);
  for (int k = 0; k < 10; ++k) {
    const Triangle tri = random_triangle(rng);
    for (int j = 0; j < 3; ++j) {
      const Point2 hi = tri.edge_point(j, 1.0);
      const Point2 lo = tri.edge_point(j, -1.0);
      const Point2& vp = tri.vertex((j + 1) % 3);
      const Point2& vq = tri.vertex((j + 2) % 3);
      CHECK(hi.x == doctest::Approx(vp.x).epsilon(1e-14));
      CHECK(hi.y == doctest::Approx(vp.y).epsilon(1e-14));
      CHECK(lo.x == doctest::Approx(vq.x).epsilon(1e-14));
      CHECK(lo.y == doctest::Approx(vq.y).epsilon(1e-14));
      const Point2 mid = tri.edge_point(j, 0.0);
      CHECK(mid.x == doctest::Approx(0.5 * (vp.x + vq.x)).epsilon(1e-14));
      CHECK(mid.y == doctest::Approx(0.5 * (vp.y + vq.y)).epsilon(1e-14));
      // The opposite barycentric coordinate vanishes along the edge.
      for (int n = 0; n < 50; ++n) {
        const double t = ut(rng);
        const auto l = tri.barycentric(tri.edge_point(j, t));
        CHECK(std::fabs(l[j]) < 1e-13);
      }
    }
  }
}

TEST_CASE("edge parametrization rejects bad arguments") {
  const Triangle tri({0, 0}, {1, 0}, {0, 1});
  CHECK_THROWS_AS(tri.edge_point(0, 1.0001), std::domain_error);
  CHECK_THROWS_AS(tri.edge_point(0, -2.0), std::domain_error);
  CHECK_THROWS_AS(tri.edge_point(3, 0.0), std::domain_error);
  CHECK_THROWS_AS(tri.edge_point(-1, 0.0), std::domain_error);
}

TEST_CASE("degenerate triangles are rejected") {
  CHECK_THROWS_AS(Triangle({0, 0}, {1, 1}, {2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Triangle({0, 0}, {1, 0}, {2, 1e-16}), std::invalid_argument);
}

TEST_CASE("h function values") {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> ut(-1.0, 1.0);
  for (int k = 0; k < 10; ++k) {
    const Triangle tri = random_triangle(rng);
    for (int i = 0; i < 3; ++i) {
      CHECK(histop::h_function(tri, tri.vertex(i)) == doctest::Approx(1.0).epsilon(1e-11));
    }
    CHECK(histop::h_function(tri, tri.centroid()) ==
          doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
    // Along edge j the value is exactly the squared edge parameter.
    for (int j = 0; j < 3; ++j) {
      CHECK(histop::h_function(tri, tri.edge_point(j, 0.6)) ==
            doctest::Approx(0.36).epsilon(1e-11));
      for (int n = 0; n < 100; ++n) {
        const double t = ut(rng);
        CHECK(histop::h_function(tri, tri.edge_point(j, t)) ==
              doctest::Approx(t * t).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("structured mesh counts, area and conformity") {
  const Mesh m0 = histop::friedrichs_keller(0);
  CHECK(m0.n_triangles() == 2);
  CHECK(m0.n_vertices() == 4);
  CHECK(m0.total_area() == doctest::Approx(4.0).epsilon(1e-14));

  const Mesh m20 = histop::friedrichs_keller(20);
  CHECK(m20.n_triangles() == 882);
  CHECK(m20.n_vertices() == 22 * 22);
  CHECK(m20.total_area() == doctest::Approx(4.0).epsilon(1e-12));

  const Mesh m50 = histop::friedrichs_keller(50);
  CHECK(m50.n_triangles() == 5202);
  CHECK(m50.total_area() == doctest::Approx(4.0).epsilon(1e-12));

  // Counterclockwise orientation everywhere.
  for (int i = 0; i < m20.n_triangles(); ++i) {
    CHECK(m20.triangle(i).signed_area() > 0.0);
  }

  // Every edge bounded by one or two triangles; interior edge count for a
  // grid of c^2 squares: 3c^2 + 2c interior edges out of 3c^2 + ... total.
  int boundary = 0, interior = 0;
  for (int e = 0; e < m20.n_edges(); ++e) {
    if (m20.edge(e).interior()) {
      ++interior;
    } else {
      ++boundary;
    }
  }
  CHECK(boundary == 4 * 21);
  // Euler: E = V + T - 1 for a disk-like triangulation.
  CHECK(m20.n_edges() == m20.n_vertices() + m20.n_triangles() - 1);
  CHECK(interior == m20.n_edges() - boundary);

  // edge_id round trip: the edge's recorded (triangle, local) pairs point
  // back to itself.
  for (int i = 0; i < m20.n_triangles(); ++i) {
    for (int j = 0; j < 3; ++j) {
      const int e = m20.edge_id(i, j);
      const auto& me = m20.edge(e);
      const bool listed = (me.tri[0] == i && me.local[0] == j) ||
                          (me.tri[1] == i && me.local[1] == j);
      CHECK(listed);
    }
  }
}

TEST_CASE("mesh rejects nonconforming input") {
  std::vector<Point2> verts = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  // Edge (1,2) is traversed as 1->2 by both triangles here (the second is
  // clockwise), which construction must reject; the reordered variant
  // traverses it oppositely and passes.
  CHECK_THROWS_AS(Mesh(verts, {{0, 1, 2}, {1, 2, 3}}), std::invalid_argument);
  CHECK_NOTHROW(Mesh(verts, {{0, 1, 2}, {2, 1, 3}}));

  // Out-of-range vertex id.
  CHECK_THROWS_AS(Mesh(verts, {{0, 1, 7}}), std::invalid_argument);
}

TEST_CASE("mesh text export round trip") {
  const Mesh m = histop::friedrichs_keller(2);
  std::ostringstream os;
  m.write_text(os);
  std::istringstream is(os.str());
  std::string tag;
  int nv = 0, nt = 0;
  is >> tag >> nv;
  CHECK(tag == "vertices");
  CHECK(nv == m.n_vertices());
  for (int i = 0; i < nv; ++i) {
    double x, y;
    is >> x >> y;
    CHECK(x == m.vertex(i).x);
    CHECK(y == m.vertex(i).y);
  }
  is >> tag >> nt;
  CHECK(tag == "triangles");
  CHECK(nt == m.n_triangles());
  for (int i = 0; i < nt; ++i) {
    int a, b, c;
    is >> a >> b >> c;
    CHECK(a == m.triangle_vertices(i)[0]);
    CHECK(b == m.triangle_vertices(i)[1]);
    CHECK(c == m.triangle_vertices(i)[2]);
  }
}
