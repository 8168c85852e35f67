#include <doctest.h>

#include <algorithm>

#include "aitgl/toy_machine.hpp"
#include "oracles.hpp"

using namespace aitgl;

namespace {
BitString bs(const char* s) { return *BitString::parse(s); }
}

TEST_CASE("program parsing") {
  auto p = ToyProgram::parse(bs("00101"));
  REQUIRE(p);
  CHECK(p->mode == Mode::cyclic);
  CHECK(p->payload == bs("101"));

  CHECK(!ToyProgram::parse(bs("1")));
  CHECK(!ToyProgram::parse(bs("")));

  auto q = ToyProgram::parse(bs("10"));
  REQUIRE(q);
  CHECK(q->mode == Mode::constant);
  CHECK(q->payload == bs(""));
}

TEST_CASE("machine semantics") {
  CHECK(run_raw(bs("0010"), 5, 100).output == bs("10101"));  // cyclic "10"
  CHECK(run_raw(bs("01101"), 5, 100).output == bs("10100"));  // pad "101"
  CHECK(run_raw(bs("00"), 4, 100).output == bs("0000"));      // empty cyclic
  CHECK(run_raw(bs("10110"), 9, 100).output == bs("110"));    // constant
  CHECK(run_raw(bs("11"), 3, 1000).output == bs("111"));
  CHECK(run_raw(bs("1"), 3, 100).kind == RunOutcome::Kind::invalid_program);

  // slow_ones cost: (val+1)*(n+1)*16
  auto r = run_raw(bs("111"), 3, 50);
  CHECK(r.kind == RunOutcome::Kind::out_of_budget);  // needs (1+1)*4*16 = 128
  r = run_raw(bs("111"), 3, 128);
  CHECK(r.has_output());
  CHECK(r.steps == 128);
}

TEST_CASE("run is deterministic and within budget") {
  for (const ToyProgram& p : all_programs(4)) {
    for (std::uint64_t n : {0, 1, 3, 7}) {
      RunOutcome a = run_program(p, n, 500);
      RunOutcome b = run_program(p, n, 500);
      CHECK(a.kind == b.kind);
      if (a.has_output()) {
        CHECK(a.output == b.output);
        CHECK(a.steps <= 500);
      }
    }
  }
}

TEST_CASE("enumerate_S: no valid programs below length 2") {
  CHECK(enumerate_S(1, 10000, 8).empty());
  CHECK(enumerate_S(0, 10000, 8).empty());
}

TEST_CASE("enumerate_S at k=2") {
  StringSet s = enumerate_S(2, 10000, 3);
  // length-2 programs give 0^n, 1^n and the empty constant
  std::vector<std::string> got;
  for (const BitString& x : s.members()) got.push_back(x.str());
  std::sort(got.begin(), got.end());
  std::vector<std::string> want = {"", "0", "00", "000", "1", "11", "111"};
  std::sort(want.begin(), want.end());
  CHECK(got == want);
  CHECK(width_of(s, 3) == 2);
}

TEST_CASE("enumerate_S is monotone in budget") {
  for (std::uint64_t b1 : {3, 10, 100}) {
    StringSet small = enumerate_S(4, b1, 5);
    StringSet big = enumerate_S(4, b1 * 7, 5);
    for (const BitString& x : small.members()) CHECK(big.contains(x));
  }
}

TEST_CASE("enumerate_S width stays under 2^(k+1)") {
  for (std::uint64_t k = 0; k <= 6; ++k) {
    StringSet s = enumerate_S(k, 1000, 10);
    for (const auto& [len, cnt] : s.per_length()) {
      CHECK(cnt < (std::uint64_t{1} << (k + 1)));
    }
  }
}

TEST_CASE("min_program_length spec points") {
  auto r = min_program_length(bs("000"), 3, 6, 10000);
  CHECK(r.length == 2);  // "00"
  r = min_program_length(bs("1"), 7, 6, 10000);
  CHECK(r.length == 3);  // constant "101"
  r = min_program_length(bs("01"), 3, 4, 10000);
  CHECK(r.length == 4);  // only the constant "1001" fits
}

TEST_CASE("min_program_length agrees with brute force") {
  std::vector<std::string> xs = {"", "0", "1", "00", "01", "10", "11",
                                 "000", "010", "111", "0110", "1111", "0000"};
  for (const auto& text : xs) {
    BitString x = bs(text.c_str());
    for (std::uint64_t n : {0, 1, 2, 3, 4, 6}) {
      for (std::uint64_t budget : {1, 20, 10000}) {
        auto got = min_program_length(x, n, 6, budget);
        auto want = test::brute_min_program_length(x, n, 6, budget);
        CHECK(got.length == want);
        if (got.length) {
          // the witness reproduces the output
          RunOutcome r = run_program(*got.witness, n, budget);
          CHECK(r.has_output());
          CHECK(r.output == x);
          CHECK(got.witness->raw.length() == *got.length);
        }
      }
    }
  }
}

TEST_CASE("min_program_length refines monotonically") {
  BitString x = bs("110");
  auto small = min_program_length(x, 3, 10, 2);
  auto big = min_program_length(x, 3, 10, 1000);
  REQUIRE(big.length);
  if (small.length) CHECK(*big.length <= *small.length);
  auto narrow = min_program_length(x, 3, 3, 1000);
  if (narrow.length) CHECK(*big.length <= *narrow.length);
}

TEST_CASE("none from min_program_length means not in S") {
  for (std::uint64_t k = 2; k <= 4; ++k) {
    StringSet s = enumerate_S(k, 200, 4);
    for (std::uint64_t len = 0; len <= 4; ++len) {
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << len); ++code) {
        std::string text(len, '0');
        for (std::uint64_t i = 0; i < len; ++i) {
          if (code & (std::uint64_t{1} << (len - 1 - i))) text[i] = '1';
        }
        BitString x = bs(text.c_str());
        if (!min_program_length(x, len, k, 200).length) CHECK(!s.contains(x));
      }
    }
  }
}

TEST_CASE("dovetailer reproduces enumerate_S membership") {
  Dovetailer dt(3, 5);
  StringSet via_rounds;
  for (int r = 0; r < 300; ++r) {
    for (const BitString& x : dt.advance_round()) via_rounds.insert(x);
  }
  StringSet direct = enumerate_S(3, 300, 5);
  CHECK(via_rounds.size() == direct.size());
  for (const BitString& x : direct.members()) CHECK(via_rounds.contains(x));
}
