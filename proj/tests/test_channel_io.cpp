#include <doctest.h>

#include <sstream>

#include "crbc/channel_io.hpp"
#include "crbc/dmc.hpp"

using namespace crbc;

TEST_CASE("channel files parse, default cells are zero") {
  std::istringstream in(
      "# comment line\n"
      "dmc 2 1 2 2\n"
      "\n"
      "0 0 0 0 0.9\n"
      "0 0 1 1 0.1\n"
      "1 0 0 1 0.4\n"
      "1 0 1 0 0.6\n");
  const auto ch = io::load_channel(in);
  CHECK(ch.nx == 2);
  CHECK(ch.nx1 == 1);
  CHECK_FALSE(ch.two_sided);
  CHECK(ch.trans(0, 0, 0, 0, 0) == 0.9);
  CHECK(ch.trans(0, 0, 0, 0, 1) == 0.0);
  CHECK(ch.trans(1, 0, 0, 1, 0) == 0.6);
}

TEST_CASE("two-sided channel header") {
  std::istringstream in(
      "dmc2 2 1 1 2 2\n"
      "0 0 0 0 0 1.0\n"
      "1 0 0 1 1 1.0\n");
  const auto ch = io::load_channel(in);
  CHECK(ch.two_sided);
  CHECK(ch.nx2 == 1);
  CHECK(ch.trans(1, 0, 0, 1, 1) == 1.0);
}

TEST_CASE("channel parse errors carry line numbers") {
  auto expect_line = [](const std::string& text, std::size_t line) {
    std::istringstream in(text);
    try {
      io::load_channel(in);
      FAIL("expected ParseError");
    } catch (const io::ParseError& e) {
      CHECK(e.line() == line);
    }
  };
  expect_line("bogus 2 2 2 2\n", 1);
  expect_line("dmc 2 2 2\n", 1);                        // wrong header arity
  expect_line("dmc 2 1 2 2\n0 0 5 0 1.0\n", 2);          // index out of range
  expect_line("dmc 2 1 2 2\n0 0 0 0 1.0 extra\n", 2);    // trailing token
  expect_line("dmc 2 1 2 2\n0 0 0 0 0.5\n1 0 0 0 1.0\n", 3);  // bad row sum
}

TEST_CASE("factor files assemble evaluator inputs") {
  std::istringstream ch_in(
      "dmc 2 2 2 2\n"
      "0 0 0 0 0.5\n0 0 0 1 0.5\n"
      "0 1 1 0 0.5\n0 1 1 1 0.5\n"
      "1 0 1 1 1.0\n"
      "1 1 0 0 1.0\n");
  const auto ch = io::load_channel(ch_in);

  std::istringstream f_in(
      "factor pv1v2 2 2\n"
      "0 0 0.25\n0 1 0.25\n1 0 0.25\n1 1 0.25\n"
      "factor px_given_v 2 2 2\n"
      "0 0 0 1.0\n0 1 0 1.0\n1 0 1 1.0\n1 1 1 1.0\n"
      "factor px1 2\n"
      "0 0.5\n1 0.5\n"
      "factor pyhat 2 2 2 1\n"
      "0 0 0 0 1\n0 0 1 0 1\n0 1 0 0 1\n0 1 1 0 1\n"
      "1 0 0 0 1\n1 0 1 0 1\n1 1 0 0 1\n1 1 1 0 1\n");
  const auto factors = io::load_factors(f_in);
  const auto input = io::make_theorem1_input(factors, ch);
  CHECK(input.nv1 == 2);
  CHECK(input.nyh == 1);
  CHECK_NOTHROW(dmc::eval_theorem1(ch, input));

  CHECK_THROWS_AS(io::make_theorem4_input(factors, ch), io::ParseError);
}

TEST_CASE("factor file errors") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return io::load_factors(in);
  };
  CHECK_THROWS_AS(parse(""), io::ParseError);
  CHECK_THROWS_AS(parse("0 0 1.0\n"), io::ParseError);  // value before header
  CHECK_THROWS_AS(parse("factor p 2\n0 0.5\n0 bogus\n"), io::ParseError);
  CHECK_THROWS_AS(parse("factor p 2\n5 0.5\n"), io::ParseError);
  CHECK_THROWS_AS(parse("factor p 2\n0 1\nfactor p 2\n0 1\n"), io::ParseError);

  // shape mismatch against the channel alphabets
  std::istringstream ch_in(
      "dmc 2 1 1 2\n"
      "0 0 0 0 1.0\n"
      "1 0 0 1 1.0\n");
  const auto ch = io::load_channel(ch_in);
  const auto f = parse("factor pxx1 2 2\n0 0 0.5\n1 1 0.5\n");
  CHECK_THROWS_AS(io::make_input_dist(f, ch), io::ParseError);
}

TEST_CASE("outer-bound factor composition satisfies the required structure") {
  std::istringstream ch_in(
      "dmc 2 2 2 2\n"
      "0 0 0 0 0.25\n0 0 0 1 0.25\n0 0 1 0 0.25\n0 0 1 1 0.25\n"
      "0 1 0 0 0.7\n0 1 1 1 0.3\n"
      "1 0 0 1 0.6\n1 0 1 0 0.4\n"
      "1 1 0 0 0.5\n1 1 1 1 0.5\n");
  const auto ch = io::load_channel(ch_in);
  std::istringstream f_in(
      "factor pv1v2 2 1\n"
      "0 0 0.5\n1 0 0.5\n"
      "factor pu_given_v 2 1 2\n"
      "0 0 0 0.8\n0 0 1 0.2\n1 0 0 0.3\n1 0 1 0.7\n"
      "factor pxx1_given_v 2 1 2 2\n"
      "0 0 0 0 0.4\n0 0 0 1 0.2\n0 0 1 0 0.1\n0 0 1 1 0.3\n"
      "1 0 0 0 0.25\n1 0 0 1 0.25\n1 0 1 0 0.25\n1 0 1 1 0.25\n");
  const auto f = io::load_factors(f_in);
  const auto in = io::make_theorem2_input(f, ch);
  CHECK_NOTHROW(dmc::eval_theorem2_point(ch, in));
}
