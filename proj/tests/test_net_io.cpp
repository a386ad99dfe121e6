#include <doctest.h>

#include "kit.hpp"
#include "smcnets/errors.hpp"
#include "smcnets/net_io.hpp"
#include "smcnets/translate.hpp"

using namespace smcnets;

TEST_CASE("canonical JSON") {
  Net n = identity_net(Formula::tensor(Formula::atom("x"), Formula::unit()));
  CHECK(net_to_json(n) ==
        R"({"dom":"x * I","cod":"x * I","support":[],"edges":[[{"region":"dom","path":"L"},{"region":"cod","path":"L"}],[{"region":"dom","path":"R"},{"region":"cod","path":"R"}]]})");
}

TEST_CASE("JSON round trip") {
  Theory th = kit::fixture("example.smc");
  kit::Rng rng(53);
  for (int i = 0; i < 100; ++i) {
    Net n = translate(kit::random_term(rng, th.signature, 5), th.signature);
    std::string text = net_to_json(n);
    Net back = net_from_json(text, &th.signature);
    CHECK(back == n);
    CHECK(net_to_json(back) == text);
  }
}

TEST_CASE("JSON errors") {
  CHECK_THROWS_AS(net_from_json("{", nullptr), ParseError);
  CHECK_THROWS_AS(net_from_json(R"({"dom":"x","cod":"x","support":[]})", nullptr), TypeError);
  CHECK_THROWS_AS(net_from_json(R"({"dom":"x","cod":"x","support":["f"],"edges":[]})", nullptr), TypeError);
  CHECK_THROWS_AS(
      net_from_json(R"({"dom":"x","cod":"x","support":[],"edges":[[{"region":"mid","path":""},{"region":"cod","path":""}]]})",
                    nullptr),
      TypeError);
}

TEST_CASE("DOT marks unit edges dotted") {
  Theory th = kit::fixture("monoid.smc");
  std::string dot = net_to_dot(translate(parse_term("lunit x", th.signature), th.signature));
  CHECK(dot.find("dom_L -> cod_e [style=dotted]") != std::string::npos);
  CHECK(dot.find("dom_R -> cod_e [style=solid]") != std::string::npos);
  CHECK(dot.find("subgraph cluster_dom") != std::string::npos);
}
