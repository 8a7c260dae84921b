#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pjacobi/cli.hpp"

using namespace pjacobi;

TEST_CASE("config validation") {
  RunConfig c;
  c.a = 0.9;
  c.N = 3;
  CHECK_NOTHROW(c.validate());
  RunConfig bad = c;
  bad.N = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = c;
  bad.points = 1;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = c;
  bad.format = "xml";
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = c;
  bad.max_deg = 30;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("csv and json round-trip bit-exactly", "[property]") {
  std::mt19937 rng(2024);
  for (int rep = 0; rep < 20; ++rep) {
    Table t;
    t.name = "t";
    t.columns = {"i", "x", "tag"};
    for (int r = 0; r < 12; ++r) {
      const double mant = std::ldexp(static_cast<double>(rng()), -32) * 2 - 1;
      const int ex = static_cast<int>(rng() % 60) - 30;
      const double v = std::ldexp(mant, ex);
      t.rows.push_back({static_cast<std::int64_t>(rng()) - (1LL << 31), v,
                        std::string("s") + std::to_string(rng() % 100)});
    }
    const Table c = from_csv(to_csv(t), t.name);
    CHECK(c == t);
    const Table j = from_json(to_json(t), t.name);
    CHECK(j == t);
  }
}

TEST_CASE("doubles keep a floating marker in csv") {
  CHECK(format_double(0.0) == "0.0");
  CHECK(format_double(1.0) == "1.0");
  CHECK(format_double(0.5) == "0.5");
  Table t{"x", {"v"}, {{Cell(1.0)}, {Cell(std::int64_t(1))}}};
  const Table back = from_csv(to_csv(t), "x");
  CHECK(std::holds_alternative<double>(back.rows[0][0]));
  CHECK(std::holds_alternative<std::int64_t>(back.rows[1][0]));
}

TEST_CASE("identical config produces byte-identical output") {
  RunConfig c;
  c.a = 0.9;
  c.N = 3;
  c.points = 16;
  const auto out1 = emit_json(cmd_bands(c));
  const auto out2 = emit_json(cmd_bands(c));
  CHECK(out1 == out2);
  const auto m1 = emit_json(cmd_measure(c));
  const auto m2 = emit_json(cmd_measure(c));
  CHECK(m1 == m2);
}

TEST_CASE("cmd_bands output structure") {
  SECTION("a=0 merges to the single band [-1, 1]") {
    RunConfig c;
    c.a = 0.0;
    c.N = 7;
    const auto out = cmd_bands(c);
    const auto& bands = out.tables[0];
    REQUIRE(bands.rows.size() == 1);
    CHECK(std::get<double>(bands.rows[0][2]) == Catch::Approx(-1.0).margin(1e-14));
    CHECK(std::get<double>(bands.rows[0][3]) == Catch::Approx(1.0).margin(1e-14));
  }
  SECTION("N=4 double root flagged at 0") {
    RunConfig c;
    c.a = 0.9;
    c.N = 4;
    const auto out = cmd_bands(c);
    const auto& dbl = out.tables[2];
    REQUIRE(dbl.rows.size() == 1);
    CHECK(std::get<double>(dbl.rows[0][2]) == Catch::Approx(0.0).margin(1e-10));
  }
  SECTION("range emits one block per N") {
    RunConfig c;
    c.a = 0.9;
    c.n_lo = 1;
    c.n_hi = 3;
    const auto out = cmd_bands(c);
    const auto& bands = out.tables[0];
    CHECK(bands.rows.size() == 1 + 2 + 3);
  }
}

TEST_CASE("cmd_measure emits the total-mass line") {
  RunConfig c;
  c.a = 0.9;
  c.N = 3;
  c.points = 32;
  const auto out = cmd_measure(c);
  const auto& totals = out.tables[2];
  REQUIRE(totals.rows.size() == 1);
  CHECK(std::get<double>(totals.rows[0][2]) == Catch::Approx(1.0).margin(1e-9));
}

TEST_CASE("cmd_gram reports off-diagonal maximum") {
  RunConfig c;
  c.a = 0.9;
  c.N = 2;
  c.max_deg = 10;
  const auto out = cmd_gram(c);
  const auto& summary = out.tables[1];
  CHECK(std::get<double>(summary.rows[0][0]) < 1e-8);
  CHECK(std::get<double>(summary.rows[0][1]) > 0);
}

TEST_CASE("cmd_spectral d01 column is odd in x for Case II") {
  RunConfig c;
  c.a = 0.5;
  c.N = 2;
  c.points = 25;
  const auto out = cmd_spectral(c);
  const auto& tab = out.tables[0];
  // bands are symmetric; matching +-x pairs appear mirrored across rows
  const std::size_t n = tab.rows.size();
  for (std::size_t i = 0; i < n / 2; ++i) {
    const double x = std::get<double>(tab.rows[i][1]);
    const double x2 = std::get<double>(tab.rows[n - 1 - i][1]);
    CHECK(x == Catch::Approx(-x2).margin(1e-12));
    CHECK(std::get<double>(tab.rows[i][3]) ==
          Catch::Approx(-std::get<double>(tab.rows[n - 1 - i][3])).margin(1e-9));
  }
}

TEST_CASE("cmd_phi columns agree within the reported delta") {
  RunConfig c;
  c.a = 0.9;
  c.N = 2;
  c.points = 7;
  const auto out = cmd_phi(c);
  for (const auto& row : out.tables[0].rows)
    CHECK(std::get<double>(row[6]) < 1e-8);
}

TEST_CASE("cmd_verify passes for representative specs") {
  for (const auto& [a, N] : std::vector<std::pair<double, int>>{{0.9, 3}, {0.0, 1}, {1.5, 4}}) {
    RunConfig c;
    c.a = a;
    c.N = N;
    const auto v = cmd_verify(c);
    INFO("a=" << a << " N=" << N << " first failure: " << v.first_failure);
    CHECK(v.all_pass);
  }
}

TEST_CASE("csv emission is one logical table per block with header") {
  RunConfig c;
  c.a = 0.9;
  c.N = 2;
  const auto out = cmd_bands(c);
  const std::string csv = to_csv(out.tables[0]);
  CHECK(csv.rfind("N,k,xi_lo,xi_hi\n", 0) == 0);
  CHECK(csv.find("\r") == std::string::npos);  // LF endings
}
