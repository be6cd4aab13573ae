#include "catch_amalgamated.hpp"

#include "hen/hen.hpp"

#include <fstream>
#include <sstream>

using namespace hen;

namespace {

std::string message_of(auto&& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("set lists") {
  const Group z5 = Group::cyclic(5);
  CHECK(parse_set_list(z5, "all") == GroupSet::all(z5));
  CHECK(parse_set_list(z5, "") == GroupSet::empty(z5));
  CHECK(parse_set_list(z5, " 3, 1,1 ") == GroupSet::from_indices(z5, {1, 3}));
  CHECK_THROWS_AS(parse_set_list(z5, "5"), ParseError);
  CHECK_THROWS_AS(parse_set_list(z5, "1,,2"), ParseError);
  CHECK_THROWS_AS(parse_set_list(z5, "-1"), ParseError);
}

TEST_CASE("set files accept indices and coordinates") {
  const Group f22 = Group::vector_space(2, 2);
  std::istringstream in("# subgroup\n0,0\n\n0,1\n");
  CHECK(parse_set_file(f22, in) == GroupSet::from_indices(f22, {0, 1}));
  std::istringstream mixed("3\n1,0\n");
  CHECK(parse_set_file(f22, mixed) == GroupSet::from_indices(f22, {2, 3}));

  std::ifstream fixture(HEN_FIXTURES "/h_f2_2.txt");
  REQUIRE(fixture);
  CHECK(parse_set_file(f22, fixture) == GroupSet::from_indices(f22, {0, 1}));

  std::ifstream bad(HEN_FIXTURES "/bad_set.txt");
  const Group z5 = Group::cyclic(5);
  const auto msg = message_of([&] { parse_set_file(z5, bad); });
  CHECK(msg.starts_with("line 3:"));

  std::istringstream rank("0,1,1\n");
  CHECK_THROWS_AS(parse_set_file(f22, rank), ParseError);
  std::istringstream range("0,2\n");
  CHECK_THROWS_AS(parse_set_file(f22, range), ParseError);
}

TEST_CASE("function files") {
  const Group z5 = Group::cyclic(5);
  std::ifstream in(HEN_FIXTURES "/function_z5.txt");
  REQUIRE(in);
  const auto f = parse_function_file(z5, in);
  CHECK(f[0] == Rational(1, 2));
  CHECK(f[3] == -1);
  CHECK(f[1] == 0);

  std::ifstream dup(HEN_FIXTURES "/duplicate_function.txt");
  CHECK(message_of([&] { parse_function_file(z5, dup); }).starts_with("line 2:"));
  std::istringstream nocomma("1\n");
  CHECK_THROWS_AS(parse_function_file(z5, nocomma), ParseError);
  std::istringstream badval("1,x\n");
  CHECK_THROWS_AS(parse_function_file(z5, badval), ParseError);
  std::istringstream zero_den("1,1/0\n");
  CHECK_THROWS_AS(parse_function_file(z5, zero_den), ParseError);

  const Group f22 = Group::vector_space(2, 2);
  std::istringstream coords("1,1,3/4\n");
  CHECK(parse_function_file(f22, coords)[3] == Rational(3, 4));
}

TEST_CASE("JSON floats carry 17 significant digits") {
  Json j = Json::object();
  j["a"] = 0.1;
  j["b"] = 2.0;
  j["c"] = 1e300;
  j["d"] = std::nan("");
  j["e"] = 7;
  j["s"] = "x";
  CHECK(dump_json(j) == R"({"a":0.10000000000000001,"b":2.0,"c":1.0000000000000001e+300,"d":null,"e":7,"s":"x"})");
  const auto round = Json::parse(dump_json(j));
  CHECK(round["a"].get<double>() == 0.1);
  CHECK(round["b"].is_number_float());

  const auto flat = flatten_json(j);
  REQUIRE(flat.size() == 6);
  CHECK(flat[0] == std::pair<std::string, std::string>{"/a", "0.10000000000000001"});
  CHECK(flat[5].second == "x");
}

TEST_CASE("energy report JSON keeps exact values as strings") {
  const Group z5 = Group::cyclic(5);
  const auto rep = energy(GroupSet::from_indices(z5, {0, 1}).indicator(), Shape{2, 2});
  const auto j = to_json(rep, z5);
  CHECK(j["raw"] == "30");
  CHECK(j["normalized"] == "6/125");
  CHECK(j["group"] == "Z5");
  CHECK(j["shape"] == "2,2");
  CHECK(j["norm_grade"] == true);
}

TEST_CASE("check report JSON") {
  CheckReport r;
  r.id = "demo";
  r.instance = {{"group", "Z5"}};
  r.lhs = "1";
  r.rhs = "2";
  r.lhs_value = 1;
  r.rhs_value = 2;
  r.holds = true;
  r.seed = 9;
  const auto j = to_json(r);
  CHECK(j["instance"]["group"] == "Z5");
  CHECK(j["seed"] == 9);
  CHECK(dump_json(j).find("\"lhs_value\":1.0") != std::string::npos);
  CHECK_FALSE(j.contains("info"));
}
