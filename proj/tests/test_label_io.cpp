#include <doctest.h>

#include <sstream>

#include "cp2tri/error.hpp"
#include "cp2tri/generators.hpp"
#include "cp2tri/io.hpp"

using namespace cp2;

TEST_SUITE("label_io") {
  TEST_CASE("label tokens round-trip") {
    for (const char* tok : {"p:(12)(34)", "p:(13)(24)", "p:(14)(23)", "v:3,2", "m:14,3", "u:0,2", "k:e", "k:(01)", "k:(012)", "17"}) {
      CAPTURE(tok);
      CHECK(VertexLabel::parse(tok).to_string() == tok);
    }
  }

  TEST_CASE("perm label stores the involution") {
    const auto p = VertexLabel::perm(3);
    CHECK(p.perm_images() == std::array<int, 4>{3, 4, 1, 2});
    CHECK(p.to_string() == "p:(13)(24)");
  }

  TEST_CASE("mid label sorts its endpoints") {
    CHECK(VertexLabel::mid(4, 1, 2) == VertexLabel::mid(1, 4, 2));
    CHECK_THROWS(VertexLabel::mid(2, 2, 1));
  }

  TEST_CASE("bad tokens are rejected") {
    for (const char* tok : {"", "v:5,1", "p:(12)", "m:11,1", "u:3,0", "k:(0123)", "abc"}) {
      CAPTURE(tok);
      CHECK_THROWS_AS(VertexLabel::parse(tok), Error);
    }
  }

  TEST_CASE("text format round-trips the generated complexes") {
    for (const char* name : {"X", "Xbar", "Y", "torus-9", "cross:3", "rp2-6"}) {
      CAPTURE(name);
      const auto k = generate(name);
      CHECK(parse_complex(serialize(k)) == k);
      CHECK(complex_from_json(to_json(k)) == k);
    }
  }

  TEST_CASE("stream reader matches string parser") {
    const auto k = gen_X();
    std::istringstream in(serialize(k));
    CHECK(read_complex(in) == k);
  }

  TEST_CASE("malformed input reports line and column") {
    try {
      parse_complex("sc dim=1 nverts=2\n0,1\n1,zz\n");
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::MalformedInput);
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
      CHECK(std::string(e.what()).find("column") != std::string::npos);
    }
  }

  TEST_CASE("header must agree with the facets") {
    CHECK_THROWS_AS(parse_complex("sc dim=2 nverts=2\n0,1\n"), Error);
    CHECK_THROWS_AS(parse_complex("sc dim=1 nverts=3\n0,1\n"), Error);
    CHECK_THROWS_AS(parse_complex("complex\n0,1\n"), Error);
  }
}
