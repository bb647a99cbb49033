#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "mbent/errors.hpp"
#include "mbent/qstate.hpp"

using namespace mbent;

namespace {

const char* kBell = R"({
  "version": 1,
  "kinds": [
    {"name": "A", "basis": [{"n": 0, "sigma": 0}, {"n": 1, "sigma": 0}]},
    {"name": "B", "basis": [{"n": 0, "sigma": 0}, {"n": 1, "sigma": 0}]}
  ],
  "total_particles": 1,
  "amplitudes": [
    {"index": [1, 0], "re": 0.7071067811865476, "im": 0.0},
    {"index": [0, 1], "re": 0.7071067811865476, "im": 0.0}
  ]
})";

std::string with(std::string text, const std::string& from, const std::string& to) {
  const auto pos = text.find(from);
  REQUIRE(pos != std::string::npos);
  return text.replace(pos, from.size(), to);
}

}  // namespace

TEST_CASE("bell state file") {
  const auto loaded = encode_state_from_file(kBell);
  CHECK_FALSE(loaded.renormalized);
  CHECK(loaded.state.num_kinds() == 2);
  CHECK(loaded.state.system().kind(1).name == "B");
  CHECK(loaded.state.system().total_particles() == 1);
  CHECK(std::abs(loaded.state.amplitude({1, 0}) - 1.0 / std::sqrt(2.0)) < 1e-15);
}

TEST_CASE("unnormalized amplitudes are rescaled and flagged") {
  auto text = with(with(kBell, "0.7071067811865476", "3"), "0.7071067811865476", "4");
  const auto loaded = encode_state_from_file(text);
  CHECK(loaded.renormalized);
  CHECK(std::abs(loaded.state.amplitude({1, 0}) - 0.6) < 1e-15);
  CHECK(std::abs(loaded.state.amplitude({0, 1}) - 0.8) < 1e-15);
}

TEST_CASE("null total and complex amplitudes") {
  auto text = with(with(kBell, "\"total_particles\": 1", "\"total_particles\": null"), "[0, 1]", "[1, 1]");
  text = with(text, "\"im\": 0.0}\n  ]", "\"im\": 0.5}\n  ]");
  const auto loaded = encode_state_from_file(text);
  CHECK_FALSE(loaded.state.system().total_particles().has_value());
  CHECK(loaded.state.amplitude({1, 1}).imag() > 0.0);
}

TEST_CASE("constraint violations") {
  CHECK_THROWS_AS(encode_state_from_file(with(kBell, "[0, 1]", "[1, 1]")), ConstraintViolation);
  CHECK_THROWS_AS(encode_state_from_file(with(kBell, "[0, 1]", "[0, 2]")), ConstraintViolation);
  CHECK_THROWS_AS(encode_state_from_file(with(kBell, "[0, 1]", "[0]")), ParseError);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(encode_state_from_file("not json"), ParseError);
  CHECK_THROWS_AS(encode_state_from_file("[]"), ParseError);
  CHECK_THROWS_AS(encode_state_from_file(with(kBell, "\"version\": 1", "\"version\": 2")), ParseError);
  CHECK_THROWS_AS(encode_state_from_file(with(kBell, "\"name\": \"A\", ", "")), ParseError);
  CHECK_THROWS_AS(encode_state_from_file(with(kBell, ", \"im\": 0.0}\n  ]", "}\n  ]")), ParseError);
  CHECK_THROWS_AS(encode_state_from_file(with(kBell, "\"re\": 0.7071067811865476", "\"re\": \"x\"")), ParseError);
  CHECK_THROWS_AS(encode_state_from_file(with(kBell, "[0, 1]", "[1, 0]")), ParseError);
  CHECK_THROWS_AS(encode_state_from_file(with(kBell, "\"n\": 0, \"sigma\": 0}, {\"n\": 1", "\"n\": 1, \"sigma\": 0}, {\"n\": 1")),
                  ParseError);
  CHECK_THROWS_AS(encode_state_from_file(with(kBell, "\"kinds\": [", "\"kinds\": [], \"x\": [")), ParseError);
  CHECK_THROWS_AS(load_qstate("/nonexistent/state.json"), ParseError);
}

TEST_CASE("zero amplitudes") {
  auto text = with(with(kBell, "0.7071067811865476", "0"), "0.7071067811865476", "0");
  CHECK_THROWS_AS(encode_state_from_file(text), ZeroState);
}

TEST_CASE("round trip through a file") {
  const auto original = encode_state_from_file(kBell).state;
  const auto path = std::filesystem::temp_directory_path() / "mbent_roundtrip.json";
  {
    std::ofstream f(path);
    f << write_qstate(original);
  }
  const auto back = load_qstate(path);
  std::filesystem::remove(path);
  CHECK_FALSE(back.renormalized);
  CHECK(back.state.system() == original.system());
  for (const auto& [idx, amp] : original.amplitudes()) CHECK(std::abs(back.state.amplitude(idx) - amp) < 1e-15);
}
