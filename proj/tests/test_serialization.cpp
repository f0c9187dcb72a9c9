#include <doctest.h>

#include "corpus.hpp"
#include "segal/errors.hpp"
#include "segal/serialization.hpp"

using namespace segal;

namespace {

  template <class T, class Read>
  void round_trip(T const& x, Read read) {
    auto const text = canonical_dump(to_json(x));
    auto const back = read(parse_document(text));
    CHECK(canonical_dump(to_json(back)) == text);
  }

  std::string error_of(auto&& f) {
    try {
      f();
    } catch (ArgumentError const& e) {
      return e.what();
    }
    return "";
  }

}  // namespace

TEST_SUITE("serialization") {
  TEST_CASE("round trips are byte-identical") {
    round_trip(generate(StandardKind::horn, 3, 1, 3), simplicial_set_from_json);
    round_trip(nerve_monoid(cyclic_monoid(3), 3).set, simplicial_set_from_json);
    round_trip(corpus::monoid_nerve(cyclic_monoid(2), 3, 1), precategory_from_json);
    round_trip(g_object(3, {0, 1, 0, 1}, corpus::names(2), 3, 1).object, precategory_from_json);
    round_trip(corpus::idempotent_monoid(), monoid_from_json);
    round_trip(linear_graph({0, 1, 2}, 3), graph_from_json);
    auto const x    = corpus::monoid_nerve(cyclic_monoid(2), 3, 1);
    auto const back = precategory_from_json(to_json(x));
    CHECK(back.space == x.space);
    CHECK(back.objects == x.objects);
  }

  TEST_CASE("errors name the field") {
    CHECK_THROWS_AS(parse_document("{"), ArgumentError);
    auto doc = to_json(generate(StandardKind::simplex, 1, std::nullopt, 2));
    doc.erase("levels");
    CHECK(error_of([&] { simplicial_set_from_json(doc); }).find("levels") != std::string::npos);

    auto m = to_json(cyclic_monoid(3));
    m["table"][1][1] = 0;
    CHECK(error_of([&] { monoid_from_json(m); }).find("table") != std::string::npos);

    auto s = to_json(corpus::monoid_nerve(cyclic_monoid(2), 2, 1));
    s.erase("object_set");
    CHECK(error_of([&] { precategory_from_json(s); }).find("object_set") != std::string::npos);

    auto g = to_json(linear_graph({0, 1}, 2));
    g["edges"][0][1] = 7;
    CHECK_THROWS(graph_from_json(g));
  }

  TEST_CASE("corrupted documents are rejected") {
    auto doc = to_json(generate(StandardKind::simplex, 2, std::nullopt, 2));
    doc["faces"]["2,0"][0] = 99;
    bool rejected = false;
    try {
      rejected = !validate(simplicial_set_from_json(doc)).ok();
    } catch (std::exception const&) {
      rejected = true;
    }
    CHECK(rejected);
    doc = to_json(generate(StandardKind::simplex, 2, std::nullopt, 2));
    doc["faces"]["2,0"][0] = doc["faces"]["2,0"][1];
    CHECK_FALSE(validate(simplicial_set_from_json(doc)).ok());
  }
}
