#include <doctest.h>

#include "fixtures.hpp"
#include "vcp/io.hpp"

using namespace vcp;
using fixtures::ivec;

namespace {

ErrorCode code_of(std::string_view text) {
  try {
    parse_scheme_text(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("parse succeeded");
  return ErrorCode::Unsupported;
}

}  // namespace

TEST_CASE("scheme text emission") {
  CHECK(emit_scheme_text(fixtures::unique_3d()) == "n=3\n1: 2-3\n2: 1-3\n3: 1-2");
  CHECK(emit_scheme_text(fixtures::row3_5d()) == "n=5\n1: 2-4 3-5\n2: 1-3 4-5\n3: 1-4 2-5\n4: 1-5 2-3\n5: 1-2 3-4");
  CHECK(emit_scheme_compact(fixtures::row3_5d()) == "24 35 / 13 45 / 14 25 / 15 23 / 12 34");
}

TEST_CASE("scheme text parsing") {
  const auto expected = fixtures::row3_5d();
  CHECK(parse_scheme_text("n=5\n1: 2-4 3-5\n2: 1-3 4-5\n3: 1-4 2-5\n4: 1-5 2-3\n5: 1-2 3-4\n") == expected);
  // Comments, blank lines, reordered axes and reversed pairs are accepted.
  CHECK(parse_scheme_text("# row three\n\nn=5\n5: 4-3 1-2\n1: 3-5 2-4\n2: 1-3 4-5\n3: 1-4 2-5\n4: 1-5 2-3\n") ==
        expected);
  CHECK(parse_scheme_text("24 35 / 13 45 / 14 25 / 15 23 / 12 34") == expected);
  CHECK(parse_scheme_text("24 35\t13 45\t14 25\t15 23\t12 34\n") == expected);
  CHECK(parse_scheme_text("24,35|13,45|14,25|15,23|12,34") == expected);
}

TEST_CASE("syntax errors carry line and column") {
  auto where = [](std::string_view text) {
    try {
      parse_scheme_text(text);
    } catch (const SyntaxError& e) {
      return std::pair{e.line(), e.column()};
    }
    return std::pair{0, 0};
  };
  CHECK(where("n=3\n1: 2-3\n2: 1+3\n3: 1-2") == std::pair{3, 5});
  CHECK(where("n=3\n1: 2-3\n2 1-3\n3: 1-2") == std::pair{3, 2});
  CHECK(where("n=3\n1: 2-3\n9: 1-3\n3: 1-2") == std::pair{3, 1});
  CHECK(where("n=3\n1: 2-3\n1: 1-3\n3: 1-2") == std::pair{3, 1});
  CHECK(where("n=3\n1: 2-3\n3: 1-2") == std::pair{3, 7});
  CHECK(where("n=3x") == std::pair{1, 4});
  CHECK(where("23 / / 12") == std::pair{1, 6});
  CHECK(where("23 / 1x / 12") == std::pair{1, 6});
  CHECK(where("") == std::pair{1, 1});
}

TEST_CASE("semantic errors pass through from validation") {
  CHECK(code_of("n=4\n1: 2-3\n") == ErrorCode::EvenDimension);
  CHECK(code_of("n=1") == ErrorCode::TooSmall);
  CHECK(code_of("n=3\n1: 2-3\n2: 1-3\n3:") == ErrorCode::MissingPair);
  CHECK(code_of("n=3\n1: 2-3\n2: 2-2\n3: 1-2") == ErrorCode::BadMatching);
  CHECK(code_of("n=3\n1: 2-3\n2: 1-2\n3: 1-3") == ErrorCode::SelfPair);
  CHECK(code_of("n=3\n1: 2-4\n2: 1-3\n3: 1-2") == ErrorCode::IndexOutOfRange);
  CHECK(code_of("24 35 / 13 45 / 14 25 / 15 23 / 13 24") == ErrorCode::DuplicatePair);
}

TEST_CASE("text and compact forms round-trip over every scheme for n = 3, 5, 7") {
  for (int n : {3, 5, 7}) {
    auto st = enumerate_schemes(feasibility(n));
    while (auto s = st.next()) {
      const auto text = emit_scheme_text(*s);
      const auto back = parse_scheme_text(text);
      CHECK(back == *s);
      CHECK(emit_scheme_text(back) == text);
      CHECK(parse_scheme_compact(emit_scheme_compact(*s)) == *s);
    }
  }
}

TEST_CASE("JSONL lines carry the enumeration position") {
  auto st = enumerate_schemes(feasibility(7));
  std::optional<Scheme> s;
  for (int t = 0; t < 17; ++t) s = st.next();
  const auto line = scheme_to_jsonl(*s, 17, st.cursor());
  CHECK(line.rfind("{\"id\":17,\"n\":7,\"cursor\":[", 0) == 0);
  CHECK(line.find('\n') == std::string::npos);
  const auto [id, cursor] = jsonl_position(line);
  CHECK(id == 17);
  CHECK(cursor == st.cursor());

  // Resuming from the stored cursor continues with scheme 18.
  const auto expected = st.next();
  auto resumed = enumerate_schemes(feasibility(7), {.prefix = {}, .resume_after = cursor, .limit = {}});
  CHECK(resumed.next() == expected);

  CHECK(scheme_to_jsonl(fixtures::unique_3d(), 1, {0, 0, 0}) ==
        R"({"id":1,"n":3,"cursor":[0,0,0],"axes":[[[2,3]],[[1,3]],[[1,2]]]})");
  CHECK_THROWS_AS(jsonl_position("{\"id\":1}"), SyntaxError);
  CHECK_THROWS_AS(jsonl_position("not json"), SyntaxError);
}

TEST_CASE("tensor dump") {
  CHECK(emit_tensor_dump(build_tensor(fixtures::unique_3d())) == "1 2 -> 3 +1\n1 3 -> 2 -1\n2 3 -> 1 +1\n");
  const auto dump = emit_tensor_dump(build_tensor(fixtures::row3_5d()));
  CHECK(dump.find("3 5 -> 1 +1\n") != std::string::npos);
  CHECK(dump.find("1 3 -> 2 -1\n") != std::string::npos);
}

TEST_CASE("vectors") {
  CHECK(parse_real_vector("0,1,1,0,0") == RealVector{0, 1, 1, 0, 0});
  CHECK(parse_real_vector(" 0.5, -2 ,+3e1") == RealVector{0.5, -2, 30});
  CHECK_THROWS_AS(parse_real_vector("1,,2"), SyntaxError);
  CHECK_THROWS_AS(parse_real_vector("1,x"), SyntaxError);
  CHECK_THROWS_AS(parse_real_vector("nan"), SyntaxError);

  CHECK(parse_int_vector("0,-1,+2") == ivec({0, -1, 2}));
  CHECK_FALSE(parse_int_vector("0,1.5"));
  CHECK_THROWS_AS(parse_int_vector("0,a"), SyntaxError);

  CHECK(format_vector(ivec({2, 0, -1, 0, 1})) == "2*e1 - e3 + e5");
  CHECK(format_vector(ivec({0, 0, 0})) == "0");
  CHECK(format_vector(ivec({-1, 0, -3})) == "-e1 - 3*e3");
  CHECK(format_vector(RealVector{0.5, -0.0, 1}) == "0.5*e1 + e3");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(std::int64_t{-7}) == "-7");
}

TEST_CASE("census CSV") {
  CHECK(census_csv_header() == "scheme_id,closed,orthogonality_zero,xab_zero,witness");
  CensusRecord r;
  r.scheme_id = 3;
  r.closed = true;
  r.orthogonality_zero = true;
  CHECK(census_csv_row(r) == "3,true,true,false,");
  r.witness = Witness{ivec({1, 0, -2}), ivec({0, 1, 0}), 4};
  CHECK(census_csv_row(r) == "3,true,true,false,\"(1,0,-2;0,1,0)\"");
}
