#include <algorithm>
#include <map>

#include "doctest.h"
#include "sheffer/audit.hpp"
#include "sheffer/format.hpp"

namespace {

// PASS/FAIL outcome reproduced by tests/oracles/audit_oracle.py (sympy).
struct Expected {
  const char* id;
  std::size_t first_failing;  // printed variant fails at every degree from here on
};

constexpr Expected kExpected[] = {
    {"laguerre-differential-closed-form", 1}, {"laguerre-appell-recurrence", 0},
    {"miller-lee-differential-recurrence", 1}, {"miller-lee-derivative-recurrence", 0},
    {"miller-lee-scaled-recurrence", 0},
};

}  // namespace

TEST_CASE("audit outcome is frozen") {
  for (std::size_t n : {3u, 6u}) {
    const auto report = sheffer::audit_closed_forms(n);
    CHECK(report.n == n);
    REQUIRE(report.entries.size() == 20);
    for (const auto& e : report.entries) {
      CAPTURE(e.id);
      CAPTURE(e.variant);
      CHECK(e.n == n);
      const auto* exp = std::find_if(std::begin(kExpected), std::end(kExpected),
                                     [&](const Expected& x) { return e.id == x.id; });
      REQUIRE(exp != std::end(kExpected));
      if (e.variant == "derived") {
        CHECK(e.pass);
        CHECK(e.failing_degrees.empty());
        CHECK(e.residual.is_zero());
        CHECK_FALSE(e.residual_degree.has_value());
      } else {
        REQUIRE(e.variant == "printed");
        CHECK_FALSE(e.pass);
        std::vector<std::size_t> want;
        for (std::size_t d = exp->first_failing; d <= n; ++d) want.push_back(d);
        CHECK(e.failing_degrees == want);
        CHECK_FALSE(e.residual.is_zero());
      }
    }
  }
}

TEST_CASE("audit covers both parameter values per identity") {
  const auto report = sheffer::audit_closed_forms(4);
  std::map<std::string, int> count;
  for (const auto& e : report.entries) ++count[e.id + "/" + e.variant];
  CHECK(count.size() == 10);
  for (const auto& [key, c] : count) CHECK(c == 2);
  CHECK_THROWS_AS(sheffer::audit_closed_forms(2), sheffer::InvalidArgument);
}

TEST_CASE("audit json shape") {
  const auto j = sheffer::to_json(sheffer::audit_closed_forms(3));
  CHECK(j.at("n") == 3);
  const auto& e = j.at("entries").at(0);
  for (const char* key : {"identity-id", "variant", "family", "parameters", "n", "status", "failing-degrees",
                          "residual-degree", "residual", "derived-coeffs", "printed-coeffs"})
    CHECK(e.contains(key));
  CHECK(e.at("status") == "FAIL");
}
