#include <doctest.h>

#include "folk/corpus.hpp"
#include "folk/textio.hpp"

using namespace folk;

namespace {
Kit& kit() {
  static Kit k;
  return k;
}
}  // namespace

TEST_CASE("interval categories and functors round-trip through the text format") {
  Kit& k = kit();
  Workspace ws;
  ws.kit = &k;
  std::string text = print_category(*k.one()) + print_category(*k.I()) + print_category(*k.S());
  text += print_functor(k.iv().i0) + print_functor(k.iv().v) + print_functor(k.iv().r0);
  parse_text(ws, text);
  CHECK(structurally_equal(*ws.category("1"), *k.one()));
  CHECK(structurally_equal(*ws.category("I"), *k.I()));
  CHECK(structurally_equal(*ws.category("S"), *k.S()));
  CHECK(ws.functor("i0").obj_map == k.iv().i0.obj_map);
  CHECK(ws.functor("v").arr_map == k.iv().v.arr_map);
  CHECK(ws.functor("r0").obj_map == k.iv().r0.obj_map);
}

TEST_CASE("missing composition entries are an error naming the pair") {
  Workspace ws;
  std::string text =
      "category C\n"
      "object X\n"
      "object Y\n"
      "arrow f : X -> Y\n"
      "arrow g : Y -> X\n";  // f.g and g.f missing
  CHECK_THROWS_WITH_AS(parse_text(ws, text),
                       doctest::Contains("missing composition entry"), ParseError);
}

TEST_CASE("an invalid composition table is rejected with a witness") {
  Workspace ws;
  std::string text =
      "category C\n"
      "object X\n"
      "object Y\n"
      "arrow f : X -> Y\n"
      "arrow g : Y -> X\n"
      "f . g = f\n"   // endpoints wrong: f.g : Y -> Y but f : X -> Y
      "g . f = g\n";
  CHECK_THROWS_AS(parse_text(ws, text), ParseError);
}

TEST_CASE("a functor violating functoriality is rejected") {
  Kit& k = kit();
  Workspace ws;
  ws.kit = &k;
  std::string text = print_category(*k.I());
  text +=
      "functor F : I -> I\n"
      "object 0 -> 0\n"
      "object 1 -> 1\n"
      "arrow f -> f\n"
      "arrow f_inv -> f\n";  // not a functor: f∘f_inv should be id_1
  CHECK_THROWS_AS(parse_text(ws, text), ParseError);
}

TEST_CASE("dangling references are reported") {
  Workspace ws;
  std::string text =
      "functor F : A -> B\n"
      "object X -> Y\n";
  CHECK_THROWS_WITH_AS(parse_text(ws, text), doctest::Contains("unknown category"), ParseError);
}

TEST_CASE("homotopies serialize via the carrier and round-trip") {
  Kit& k = kit();
  Workspace ws;
  ws.kit = &k;
  Homotopy h = homotopies_between(k, k.I(), k.I(), 7).back();
  std::string text = print_category(*k.I());
  Homotopy named = h;
  named.carrier.name = "H";
  text += print_homotopy(named, "I", "I");
  parse_text(ws, text);
  Homotopy back = ws.homotopy("H");
  // The parsed world is self-contained: equality holds structurally.
  CHECK(structurally_equal(*back.a0, *h.a0));
  CHECK(back.carrier.obj_map == h.carrier.obj_map);
  CHECK(back.carrier.arr_map == h.carrier.arr_map);
  CHECK(back.f0.obj_map == h.f0.obj_map);
  CHECK(back.f0.arr_map == h.f0.arr_map);
  CHECK(back.f1.obj_map == h.f1.obj_map);
  CHECK(back.f1.arr_map == h.f1.arr_map);
}

TEST_CASE("nat blocks parse and validate") {
  Kit& k = kit();
  Workspace ws;
  ws.kit = &k;
  std::string text = print_category(*k.one()) + print_category(*k.I());
  text += print_functor(k.iv().i0) + print_functor(k.iv().i1);
  text +=
      "nat N : i0 => i1\n"
      "at * : f\n";
  parse_text(ws, text);
  CHECK(ws.nats.count("N") == 1);
  // non-natural components rejected
  Workspace ws2;
  ws2.kit = &k;
  std::string bad = print_category(*k.one()) + print_category(*k.I());
  bad += print_functor(k.iv().i0) + print_functor(k.iv().i1);
  bad +=
      "nat M : i0 => i0\n"
      "at * : f\n";  // wrong endpoints
  CHECK_THROWS_AS(parse_text(ws2, bad), ParseError);
}

TEST_CASE("square blocks resolve functor references") {
  Kit& k = kit();
  Workspace ws;
  ws.kit = &k;
  std::string text = print_category(*k.one()) + print_category(*k.I());
  FunctorMap p = k.iv().p;
  FunctorMap i0 = k.iv().i0;
  FunctorMap id1 = identity_functor(k.one());
  id1.name = "id1";
  text += print_functor(i0) + print_functor(p) + print_functor(id1);
  text +=
      "square sq\n"
      "left i0\n"
      "right p\n"
      "top id1\n"
      "bottom p\n";
  parse_text(ws, text);
  CHECK(ws.squares.count("sq") == 1);
  CHECK(ws.squares["sq"].left == "i0");
}

TEST_CASE("deterministic printing") {
  Kit& k = kit();
  CHECK(print_category(*k.I()) == print_category(*k.I()));
  CHECK(print_functor(k.iv().v) == print_functor(k.iv().v));
}
