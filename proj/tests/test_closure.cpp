#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "klv/closure.hpp"
#include "klv/io.hpp"
#include "klv/weyl.hpp"

using klv::build_poset;
using klv::ClosurePoset;
using klv::make_clan_model;
using klv::make_diagonal_model;
using klv::OrbitModel;

TEST_CASE("clans (1,1)") {
  OrbitModel m = make_clan_model(1, 1);
  ClosurePoset p = build_poset(m);
  const int top = m.index_of("11");
  CHECK(p.down_set(top).size() == 3);
  CHECK_FALSE(p.leq(m.index_of("+-"), m.index_of("-+")));
  CHECK_FALSE(p.leq(m.index_of("-+"), m.index_of("+-")));
  REQUIRE(p.covers().size() == 2);
  CHECK(p.covers()[0] == std::pair{m.index_of("+-"), top});
  CHECK(p.covers()[1] == std::pair{m.index_of("-+"), top});
}

TEST_CASE("clans (2,1), frozen") {
  OrbitModel m = make_clan_model(2, 1);
  ClosurePoset p = build_poset(m);

  auto closure_of = [&](const char* payload) {
    std::set<std::string> out;
    for (int a : p.down_set(m.index_of(payload)))
      out.insert(m.orbit(a).payload);
    return out;
  };
  CHECK(closure_of("+11") == std::set<std::string>{"++-", "+-+", "+11"});
  CHECK(closure_of("11+") == std::set<std::string>{"+-+", "-++", "11+"});
  CHECK(closure_of("1+1") ==
        std::set<std::string>{"++-", "+-+", "-++", "+11", "11+", "1+1"});

  // Unique maximum, three minimal sign strings.
  CHECK(p.up_set(m.index_of("1+1")).size() == 1);
  for (const char* low : {"++-", "+-+", "-++"})
    CHECK(p.down_set(m.index_of(low)).size() == 1);

  // The chain example.
  CHECK(p.leq(m.index_of("+-+"), m.index_of("11+")));
  CHECK(p.leq(m.index_of("11+"), m.index_of("1+1")));

  long long comparable = 0;
  for (int b = 0; b < p.size(); ++b)
    for (int a = 0; a < p.size(); ++a)
      if (p.leq(a, b)) ++comparable;
  CHECK(comparable == 15);

  using P = std::pair<int, int>;
  std::vector<P> want = {
      {m.index_of("++-"), m.index_of("+11")},
      {m.index_of("+-+"), m.index_of("+11")},
      {m.index_of("+-+"), m.index_of("11+")},
      {m.index_of("-++"), m.index_of("11+")},
      {m.index_of("+11"), m.index_of("1+1")},
      {m.index_of("11+"), m.index_of("1+1")},
  };
  std::sort(want.begin(), want.end(), [](const P& x, const P& y) {
    return x.second != y.second ? x.second < y.second : x.first < y.first;
  });
  CHECK(p.covers() == want);
}

TEST_CASE("intervals") {
  OrbitModel m = make_clan_model(1, 1);
  ClosurePoset p = build_poset(m);
  CHECK(p.interval(m.make_orbit("+-"), m.make_orbit("11")).size() == 2);
  CHECK(p.interval(m.make_orbit("+-"), m.make_orbit("+-")).size() == 1);
  CHECK(p.interval(m.make_orbit("+-"), m.make_orbit("-+")).empty());
  CHECK_THROWS_AS(
      p.leq(klv::OrbitId{klv::ModelKind::Clans, "??", 0}, m.make_orbit("11")),
      std::invalid_argument);
}

TEST_CASE("poset axioms at desk scale") {
  std::vector<OrbitModel> models;
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; p + q <= 5; ++q) models.push_back(make_clan_model(p, q));
  models.push_back(make_diagonal_model(3));
  for (const OrbitModel& m : models) {
    ClosurePoset p = build_poset(m);
    for (int a = 0; a < p.size(); ++a) {
      CHECK(p.leq(a, a));
      for (int b = 0; b < p.size(); ++b) {
        if (p.leq(a, b) && p.leq(b, a)) CHECK(a == b);
        if (p.leq(a, b) && a != b) CHECK(m.d(a) < m.d(b));
        for (int c = 0; c < p.size(); ++c)
          if (p.leq(a, b) && p.leq(b, c)) CHECK(p.leq(a, c));
      }
    }
    for (auto [a, b] : p.covers()) CHECK(m.d(b) == m.d(a) + 1);
  }
}

TEST_CASE("diagonal closure order is the Bruhat order") {
  for (int n = 2; n <= 4; ++n) {
    OrbitModel m = make_diagonal_model(n);
    ClosurePoset p = build_poset(m);
    auto group = klv::symmetric_group(n);
    for (const auto& x : group)
      for (const auto& w : group)
        CHECK(p.leq(m.index_of(x.payload()), m.index_of(w.payload())) ==
              klv::bruhat_leq(x, w));
  }
}

TEST_CASE("diagonal n=2 single cover") {
  OrbitModel m = make_diagonal_model(2);
  ClosurePoset p = build_poset(m);
  REQUIRE(p.covers().size() == 1);
  CHECK(m.orbit(p.covers()[0].first).payload == "12");
  CHECK(m.orbit(p.covers()[0].second).payload == "21");
}

TEST_CASE("exports are deterministic") {
  OrbitModel m1 = make_clan_model(2, 2);
  OrbitModel m2 = make_clan_model(2, 2);
  CHECK(klv::poset_to_json(m1, build_poset(m1)) ==
        klv::poset_to_json(m2, build_poset(m2)));
  CHECK(klv::poset_to_dot(build_poset(m1)) ==
        klv::poset_to_dot(build_poset(m2)));
}
