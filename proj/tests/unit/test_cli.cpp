#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "edgewave/cli.hpp"
#include "edgewave/sommerfeld.hpp"

using namespace edgewave;
using namespace edgewave::cli;

namespace {

RunConfig parse_args(std::vector<const char*> args) {
  args.insert(args.begin(), "edgewave");
  return parse(static_cast<int>(args.size()), args.data());
}

int main_args(std::vector<const char*> args, std::string& out, std::string& err) {
  args.insert(args.begin(), "edgewave");
  std::ostringstream o, e;
  const int rc = cli::main(static_cast<int>(args.size()), args.data(), o, e);
  out = o.str();
  err = e.str();
  return rc;
}

}  // namespace

TEST_CASE("flag parsing") {
  const RunConfig c = parse_args({"field", "--mode=bound", "--alpha=0.7", "--k", "1.1", "--C0=1,2", "--nx=11"});
  CHECK(c.command == Command::field);
  CHECK(c.mode == Mode::bound);
  CHECK(c.alpha == 0.7);
  CHECK(*c.k == 1.1);
  CHECK(c.C0 == Cx(1, 2));
  CHECK(c.nx == 11);
  CHECK(c.ny == 201);
  CHECK_THROWS_AS(parse_args({"bogus"}), UsageError);
  CHECK_THROWS_AS(parse_args({"field", "--alpha=-1"}), UsageError);
  CHECK_THROWS_AS(parse_args({"field", "--tol=1"}), UsageError);
  CHECK_THROWS_AS(parse_args({"field", "--nope=1"}), UsageError);
  CHECK_THROWS_AS(parse_args({"field", "--C0=x"}), UsageError);
}

TEST_CASE("flags override the config file") {
  const std::string path = "edgewave_test_config.ini";
  {
    std::ofstream f(path);
    f << "alpha=0.7\nk=1.3\nbc=neumann\n";
  }
  const RunConfig c = parse_args({"field", "--config", path.c_str(), "--k=1.1"});
  CHECK(c.alpha == 0.7);
  CHECK(*c.k == 1.1);
  CHECK(c.bc == BoundaryCondition::neumann);
  {
    std::ofstream f(path);
    f << "colour=blue\n";
  }
  CHECK_THROWS_AS(parse_args({"field", "--config", path.c_str()}), UsageError);
  std::remove(path.c_str());
}

TEST_CASE("position lists") {
  CHECK(parse_positions("1:0.5:3") == std::vector<double>{1, 1.5, 2, 2.5, 3});
  CHECK(parse_positions("0.5,1,4") == std::vector<double>{0.5, 1, 4});
  CHECK_THROWS_AS(parse_positions("1:0:3"), UsageError);
  CHECK_THROWS_AS(parse_positions("1:2"), UsageError);
  CHECK_THROWS_AS(parse_positions("a,b"), UsageError);
}

TEST_CASE("field command writes the sampled grid") {
  std::string out, err;
  REQUIRE(main_args({"field", "--x0=-1", "--y0=-1", "--dx=0.1", "--dy=0.1", "--nx=21", "--ny=21", "--a=0.5"}, out,
                    err) == exit_pass);
  std::istringstream is(out);
  const FieldGrid g = read_csv(is);
  const FieldGrid ref = field_on_grid(2.0, {0.5, BoundaryCondition::dirichlet}, square_grid(-1, 1, -1, 1, 21, 21));
  CHECK(g.values == ref.values);
}

TEST_CASE("exit statuses") {
  std::string out, err;
  CHECK(main_args({"--help"}, out, err) == exit_pass);
  CHECK(out.find("--alpha") != std::string::npos);
  CHECK(main_args({"field", "--a=0.33", "--nx=11", "--ny=11", "--dx=0.2", "--dy=0.2", "--x0=-1", "--y0=-1"}, out, err) ==
        exit_usage);
  CHECK(main_args({"field", "--mode=bound", "--a=1"}, out, err) == exit_usage);
  CHECK(main_args({"tail", "--a=1,2"}, out, err) == exit_usage);
}

TEST_CASE("residual command report") {
  std::string out, err;
  REQUIRE(main_args({"residual", "--nx=41", "--ny=41", "--dx=0.1", "--dy=0.1", "--tip-radius=0.5"}, out, err) ==
          exit_pass);
  CHECK(out.rfind("mode sommerfeld\n", 0) == 0);
  CHECK(out.find("coarse false") != std::string::npos);
}

TEST_CASE("tail command summary record") {
  std::string out, err;
  REQUIRE(main_args({"tail", "--alpha=1"}, out, err) == exit_pass);
  const std::string last = out.substr(out.rfind('{'));
  const auto j = nlohmann::json::parse(last);
  CHECK(j["slope"].get<double>() == doctest::Approx(-2.0).epsilon(0.05));
  CHECK(j["k"].get<double>() == 0.5);
  CHECK(out.rfind("a,amplitude\n", 0) == 0);
}

TEST_CASE("oracle command summary record") {
  std::string out, err;
  REQUIRE(main_args({"oracle", "--x0=-2", "--y0=-2", "--dx=0.04", "--dy=0.04", "--nx=101", "--ny=101"}, out, err) ==
          exit_pass);
  const auto j = nlohmann::json::parse(out.substr(out.rfind('{')));
  CHECK(j["l2_rel"].get<double>() < 0.02);
  CHECK(j["E"].get<double>() == 4.0);
}
