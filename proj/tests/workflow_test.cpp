#include "histop/workflow.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "histop/test_functions.hpp"
#include "test_util.hpp"

using histop::benchmark_function;
using histop::benchmark_functions;
using histop::LocalOperatorSpec;
using histop::Point2;

TEST_CASE("benchmark set contents") {
  const auto fns = benchmark_functions();
  REQUIRE(fns.size() == 6);
  CHECK(fns[0].id == "f1");
  CHECK(fns[5].id == "f6");
  CHECK(fns[0].fn({0.3, -0.4}) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(fns[2].fn({0.25, 0.25}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fns[4].fn({0.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(benchmark_function("f7"), std::invalid_argument);
}

TEST_CASE("four-hump blend frozen values") {
  // Reference values computed with 40-digit arithmetic for the default
  // (linear y-term) variant.
  const auto f6 = benchmark_function("f6").fn;
  CHECK(f6({-1.0, -1.0}) == doctest::Approx(0.76642059128492313186).epsilon(1e-12));
  CHECK(f6({0.0, 0.0}) == doctest::Approx(0.32576208928068413068).epsilon(1e-12));

  // The squared-variant switch changes the value where the second hump
  // contributes.
  const auto f6c = benchmark_function("f6", true).fn;
  CHECK(std::fabs(f6c({0.0, 0.0}) - f6({0.0, 0.0})) > 1e-3);
  CHECK(f6c({0.0, 0.0}) < f6({0.0, 0.0}));
}

TEST_CASE("l1 error vanishes for reproduced functions") {
  const histop::Mesh mesh = histop::friedrichs_keller(3);
  const LocalOperatorSpec spec = LocalOperatorSpec::enriched_family1(1.0, 2.0);

  std::mt19937 rng(60);
  const auto quad = histop_test::random_quadratic(rng);
  const auto rec = histop::reconstruct_global(quad.fn(), mesh, spec);
  CHECK(histop::l1_error(quad.fn(), rec) <= 1e-9);

  const auto rzero =
      histop::reconstruct_global([](const Point2&) { return 0.0; }, mesh, spec);
  CHECK(histop::l1_error([](const Point2&) { return 0.0; }, rzero) == 0.0);
}

TEST_CASE("l1 error matches a hand-computable case") {
  // Classical reconstruction of x^2 on the 2-triangle mesh: the operator
  // returns an affine function per triangle, and the L1 defect is strictly
  // positive and symmetric across the two triangles.
  const histop::Mesh mesh = histop::friedrichs_keller(0);
  const LocalOperatorSpec cls = LocalOperatorSpec::classical();
  auto f = [](const Point2& p) { return p.x * p.x; };
  const auto rec = histop::reconstruct_global(f, mesh, cls);
  const double err = histop::l1_error(f, rec);
  CHECK(err > 0.01);
  CHECK(err < 4.0);
}

TEST_CASE("workflow sweep produces ordered rows and decaying errors") {
  const std::vector<histop::TestFunction> fns = {benchmark_function("f3")};
  const std::vector<int> levels = {5, 10};
  const LocalOperatorSpec enriched = LocalOperatorSpec::enriched_family1(1.0, 2.0);

  const histop::ErrorReport report = histop::run_workflow(fns, levels, enriched);
  REQUIRE(report.rows.size() == 4);

  CHECK(report.rows[0].function == "f3");
  CHECK(report.rows[0].level == 5);
  CHECK(report.rows[0].triangles == 72);
  CHECK(report.rows[0].op == "classical");
  CHECK(report.rows[1].op == "enriched-f1");
  CHECK(report.rows[2].level == 10);
  CHECK(report.rows[2].triangles == 242);

  // Refinement reduces the error for both operators.
  CHECK(report.rows[2].l1_error < report.rows[0].l1_error);
  CHECK(report.rows[3].l1_error < report.rows[1].l1_error);
  // The enriched operator beats the classical one on each mesh.
  CHECK(report.rows[1].l1_error < report.rows[0].l1_error);
  CHECK(report.rows[3].l1_error < report.rows[2].l1_error);
}

TEST_CASE("csv export is stable and parseable") {
  const std::vector<histop::TestFunction> fns = {benchmark_function("f3")};
  const std::vector<int> levels = {3};
  const LocalOperatorSpec enriched = LocalOperatorSpec::enriched_family2(1.0, 2.0);

  const char* path = "workflow_roundtrip.tmp";
  const histop::ErrorReport r1 = histop::run_workflow(fns, levels, enriched, path);

  std::ifstream in(path);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header == "function,n,triangles,operator,l1_error");
  std::string row;
  int rows = 0;
  while (std::getline(in, row)) {
    if (row.empty()) continue;
    ++rows;
    // Five comma-separated fields, the last one a finite number.
    std::istringstream rs(row);
    std::string field;
    int nfields = 0;
    std::string last;
    while (std::getline(rs, field, ',')) {
      last = field;
      ++nfields;
    }
    CHECK(nfields == 5);
    CHECK(std::isfinite(std::stod(last)));
  }
  CHECK(rows == 2);
  in.close();

  // A rerun of the same configuration writes byte-identical output.
  std::ostringstream s1, s2;
  r1.write_csv(s1);
  const histop::ErrorReport r2 = histop::run_workflow(fns, levels, enriched);
  r2.write_csv(s2);
  CHECK(s1.str() == s2.str());
  std::remove(path);
}

TEST_CASE("operator names feed the report") {
  CHECK(std::string(LocalOperatorSpec::classical().name()) == "classical");
  CHECK(std::string(LocalOperatorSpec::enriched_family1(1, 2).name()) == "enriched-f1");
  CHECK(std::string(LocalOperatorSpec::enriched_family2(1, 2).name()) == "enriched-f2");
}
