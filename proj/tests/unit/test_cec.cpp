#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "vdo/analytic.hpp"
#include "vdo/cec.hpp"
#include "vdo/errors.hpp"
#include "vdo/optimizer.hpp"
#include "vdo/registry.hpp"

namespace fs = std::filesystem;
using doctest::Approx;

namespace {

// Scratch directory of shift/rotation files, removed on destruction.
struct DataDir {
  fs::path dir;

  DataDir() : dir(fs::temp_directory_path() / "vdo_cec_test") {
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  ~DataDir() { fs::remove_all(dir); }

  void write(const std::string& file, const std::string& text) const {
    std::ofstream out(dir / file);
    out << text;
  }

  void write_identity(const std::string& suite, int id, std::size_t dim) const {
    const std::string stem =
        suite + "_f" + std::to_string(id) + "_";
    const std::string tail = std::to_string(dim) + "d.txt";
    std::string shift, rot;
    for (std::size_t i = 0; i < dim; ++i) {
      shift += "0 ";
      for (std::size_t j = 0; j < dim; ++j)
        rot += (i == j ? "1 " : "0 ");
      rot += "\n";
    }
    write(stem + "shift_" + tail, shift);
    write(stem + "rot_" + tail, rot);
  }
};

}  // namespace

TEST_CASE("identity bundle reduces to the base function plus its bias") {
  DataDir data;
  data.write_identity("cec2017", 1, 3);

  const vdo::Problem p = vdo::load_cec_problem(data.dir, "cec2017", 1, 3);
  CHECK(p.name == "cec2017:1:3");
  CHECK(p.space.dim() == 3);
  CHECK(p.space.lb[0] == -100.0);
  CHECK(p.space.ub[2] == 100.0);

  const std::vector<double> zero(3, 0.0);
  CHECK(p.objective(zero) == 100.0);  // bent cigar bias

  const std::vector<double> x{0.5, -0.3, 1.2};
  CHECK(p.objective(x) == Approx(vdo::bent_cigar_value(x) + 100.0).epsilon(1e-14));
}

TEST_CASE("shift and rotation compose before the base function") {
  DataDir data;
  // Shift (1, -2, 3) with a rotation that swaps the first two coordinates.
  data.write("cec2017_f3_shift_3d.txt", "1 -2 3\n");
  data.write("cec2017_f3_rot_3d.txt", "0 1 0\n1 0 0\n0 0 1\n");

  const vdo::Problem p = vdo::load_cec_problem(data.dir, "cec2017", 3, 3);
  const std::vector<double> shifted{1.0, -2.0, 3.0};
  CHECK(p.objective(shifted) == 300.0);  // lands on the zakharov optimum

  const std::vector<double> x{2.0, 0.5, -1.0};
  const std::vector<double> z{0.5 - -2.0, 2.0 - 1.0, -1.0 - 3.0};
  CHECK(p.objective(x) == Approx(vdo::zakharov_value(z) + 300.0).epsilon(1e-14));
}

TEST_CASE("both suites map their supported ids") {
  DataDir data;
  for (int id : {1, 3, 4, 5, 9, 10}) data.write_identity("cec2017", id, 2);
  for (int id : {1, 2, 5}) data.write_identity("cec2022", id, 2);

  const std::vector<double> zero(2, 0.0);
  CHECK(vdo::load_cec_problem(data.dir, "cec2017", 1, 2).objective(zero) ==
        100.0);
  CHECK(vdo::load_cec_problem(data.dir, "cec2017", 3, 2).objective(zero) ==
        300.0);
  // Rosenbrock at the origin contributes (dim - 1) on top of the bias.
  CHECK(vdo::load_cec_problem(data.dir, "cec2017", 4, 2).objective(zero) ==
        401.0);
  CHECK(vdo::load_cec_problem(data.dir, "cec2017", 5, 2).objective(zero) ==
        500.0);
  CHECK(vdo::load_cec_problem(data.dir, "cec2017", 10, 2).objective(zero) ==
        Approx(1000.0 + vdo::schwefel_value(zero)).epsilon(1e-12));
  CHECK(vdo::load_cec_problem(data.dir, "cec2022", 1, 2).objective(zero) ==
        300.0);
  CHECK(vdo::load_cec_problem(data.dir, "cec2022", 2, 2).objective(zero) ==
        401.0);
  CHECK(vdo::load_cec_problem(data.dir, "cec2022", 5, 2).objective(zero) ==
        Approx(900.0 + vdo::levy_value(zero)).epsilon(1e-12));
}

TEST_CASE("bundle loader reports precise failure modes") {
  DataDir data;

  CHECK_THROWS_AS(vdo::load_cec_bundle(data.dir, "cec2016", 1, 3),
                  vdo::ConfigError);  // unknown suite
  CHECK_THROWS_AS(vdo::load_cec_bundle(data.dir, "cec2017", 2, 3),
                  vdo::UnsupportedFunction);  // id without a base function
  CHECK_THROWS_AS(vdo::load_cec_bundle(data.dir, "cec2017", 1, 0),
                  vdo::ConfigError);  // zero dimension
  CHECK_THROWS_AS(vdo::load_cec_bundle(data.dir, "cec2017", 1, 3),
                  vdo::DataFormatError);  // missing files

  data.write("cec2017_f1_shift_3d.txt", "1 2\n");  // two values, not three
  data.write("cec2017_f1_rot_3d.txt", "1 0 0\n0 1 0\n0 0 1\n");
  CHECK_THROWS_AS(vdo::load_cec_bundle(data.dir, "cec2017", 1, 3),
                  vdo::DataFormatError);

  data.write("cec2017_f1_shift_3d.txt", "1 2 x\n");  // non-numeric token
  CHECK_THROWS_AS(vdo::load_cec_bundle(data.dir, "cec2017", 1, 3),
                  vdo::DataFormatError);

  data.write("cec2017_f1_shift_3d.txt", "1 2 3\n");
  vdo::CecDataBundle bundle = vdo::load_cec_bundle(data.dir, "cec2017", 1, 3);
  CHECK(bundle.bias == 100.0);
  CHECK(bundle.shift == std::vector<double>{1.0, 2.0, 3.0});
  bundle.shift.resize(2);  // corrupt the bundle
  CHECK_THROWS_AS(vdo::make_cec_problem(bundle), vdo::ConfigError);
}

TEST_CASE("registry builds cec problems only with a data directory") {
  DataDir data;
  data.write_identity("cec2017", 5, 4);

  vdo::ProblemOptions opts;
  opts.cec_dir = data.dir;
  const vdo::Problem p = vdo::make_problem("cec2017:5:4", opts);
  CHECK(p.name == "cec2017:5:4");
  CHECK(p.objective(std::vector<double>(4, 0.0)) == 500.0);

  CHECK_THROWS_AS(vdo::make_problem("cec2017:5:4"), vdo::ConfigError);
  CHECK_THROWS_AS(vdo::make_problem("cec2017:5", opts), vdo::ConfigError);
  CHECK_THROWS_AS(vdo::make_problem("cec2017:0:4", opts), vdo::ConfigError);
}

TEST_CASE("optimizing a bundle stays above its bias floor") {
  DataDir data;
  data.write_identity("cec2017", 1, 3);
  const vdo::Problem p = vdo::load_cec_problem(data.dir, "cec2017", 1, 3);

  const vdo::RunResult r = vdo::optimize(p, 20, 2000, vdo::VdoParams{}, 7);
  CHECK(r.fes_used == 2000);
  CHECK(r.best_f >= 100.0);
  CHECK(r.best_f < 1e6);  // random points sit around 1e10 on this cigar
}
