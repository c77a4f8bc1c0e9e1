#include <cmath>
#include <filesystem>
#include <limits>

#include "doctest.h"
#include "fracmod/io.hpp"

using namespace fracmod;

TEST_SUITE("io") {

TEST_CASE("non-finite numbers round-trip as strings") {
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(io::number(inf) == "inf");
  CHECK(io::number(-inf) == "-inf");
  CHECK(std::isinf(io::to_number(io::number(inf))));
  CHECK(io::to_number(io::number(0.25)) == 0.25);
  CHECK_THROWS_AS(io::to_number(io::Json("abc")), io::FormatError);
}

TEST_CASE("grid function round-trip") {
  const GridFunction f(Grid1D(-1.0, 2.0, 4), {0.1, -3.0, 1e-300, 7.0});
  const auto back = io::grid_function_from_json(io::Json::parse(io::to_json(f).dump()));
  CHECK(back.grid() == f.grid());
  for (std::size_t i = 0; i < f.size(); ++i) CHECK(back[i] == f[i]);
  CHECK(io::to_csv(f).rfind("x,value\n-1,0.10000000000000001\n", 0) == 0);
}

TEST_CASE("report round-trip and CSV columns") {
  auto r = harness::make_report("riesz_modulus", {{"alpha", 0.75}, {"p", 2.0}, {"h", 0.125}, {"kr_sample", 0.3}}, 1.0, 0.0);
  const std::vector<harness::BoundReport> reports{r};
  const auto back = io::reports_from_json(io::Json::parse(io::to_json(reports).dump()));
  CHECK(back[0].name == r.name);
  CHECK(std::isinf(back[0].ratio));
  CHECK(back[0].params == r.params);
  CHECK(back[0].pass == r.pass);
  CHECK(io::to_csv(reports) ==
        "name,alpha,p,beta,d,h,lambda,lhs,rhs,ratio,pass\n"
        "riesz_modulus,0.75,2,,,0.125,,1,0,inf,false\n");
}

TEST_CASE("psi round-trip") {
  const auto psi = PsiFunction::tabulated({1.5, 2.0, 4.0}, {1.0, 0.5, 2.0});
  const auto back = io::psi_from_json(io::to_json(psi));
  CHECK(back(3.0) == psi(3.0));
  const auto deg = PsiFunction::degenerate(3.0, 1.0, std::numeric_limits<double>::infinity());
  const auto j = io::to_json(deg);
  CHECK(j.at("B").is_null());
  CHECK(io::psi_from_json(j).point() == 3.0);
}

TEST_CASE("atomic write replaces the file") {
  const auto path = std::filesystem::temp_directory_path() / "fracmod_io_test.txt";
  io::write_atomic(path, "first");
  io::write_atomic(path, "second");
  CHECK(io::read_file(path) == "second");
  CHECK_FALSE(std::filesystem::exists(path.string() + ".tmp"));
  std::filesystem::remove(path);
}

}  // TEST_SUITE
