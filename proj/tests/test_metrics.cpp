#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"
#include "thompson/embed.hpp"
#include "thompson/errors.hpp"
#include "thompson/metrics.hpp"

using namespace thompson;

TEST_CASE("caret norm and the proof quantity") {
  CHECK(caret_norm(identity(2)) == 0);
  for (int n = 2; n <= 4; ++n) {
    for (int k = 0; k <= 3; ++k) CHECK(caret_norm(power(c(k, n), 1)) == static_cast<std::size_t>(k + 1));
    for (int i = 0; i < n; ++i) CHECK(caret_norm(x(i, n)) <= 3);
  }
  CHECK(d_n(pcq_factorize(identity(2))) == 2);
  CHECK(d_n(pcq_factorize(power(c(3, 3), 2))) == 3 + 3);
  PcqFactorization f;
  f.n = 2;
  f.p = parse_word("x0 x3 x3");
  f.q = parse_word("X1");
  f.k = 4;
  CHECK(d_n(f) == 1 + 2 + 1 + 3 + 1 + 4 + 2);
}

TEST_CASE("small balls") {
  const BallTable b0 = bfs_ball(2, GeneratingSet::sigma(2), 0);
  CHECK(b0.size() == 1);
  CHECK(b0.length(identity(2)) == 0);
  const BallTable b1 = bfs_ball(2, GeneratingSet::sigma(2), 1);
  CHECK(b1.size() == 6);
  CHECK(b1.length(c(0, 2)) == 1);
  CHECK(b1.length(inverse(x(1, 2))) == 1);
  CHECK_FALSE(b1.length(x(2, 2)).has_value());
  CHECK_THROWS_AS(bfs_ball(2, GeneratingSet::sigma(2), -1), std::domain_error);
  CHECK_THROWS_AS(bfs_ball(2, GeneratingSet::sigma(2), 6, 1000), CapError);
  std::ostringstream os;
  write_growth(os, b1);
  CHECK(os.str() == "radius,count\n0,1\n1,5\n");
}

TEST_CASE("ball lengths agree with enumeration of circle maps") {
  for (int n = 2; n <= 3; ++n) {
    const int r = n == 2 ? 5 : 3;
    const auto gens = GeneratingSet::sigma(n);
    const BallTable ball = bfs_ball(n, gens, r);
    const auto ref = oracle::word_lengths(gens.letters(), n, r);
    CHECK(ref.size() == ball.size());
    for (const auto& sphere : ball.spheres) {
      for (const auto& e : sphere) {
        auto it = ref.find(from_element(e).to_string());
        REQUIRE(it != ref.end());
        CHECK(it->second == *ball.length(e));
      }
    }
  }
}

TEST_CASE("ball table properties") {
  const auto gens = GeneratingSet::sigma(2);
  const BallTable ball = bfs_ball(2, gens, 5);
  GeneratingSet reversed = gens;
  // Same table from a search with the letters in another order.
  BallSearch s(gens);
  while (s.radius() < 5) s.grow();
  for (const auto& [key, len] : ball.lengths) {
    CHECK(s.length(Element::parse(key, 2)) == len);
  }
  const auto letters = gens.letters();
  std::vector<Element> all;
  for (const auto& sp : ball.spheres) all.insert(all.end(), sp.begin(), sp.end());
  for (const auto& e : all) {
    const int le = *ball.length(e);
    for (const auto& g : letters) {
      if (auto lg = ball.length(multiply(e, letter_element(g, 2)))) CHECK(std::abs(*lg - le) <= 1);
    }
    CHECK(static_cast<std::size_t>(le) <= word_length_upper(e).length);
  }
  Rng rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    const Element& a = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
    const Element& b = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
    if (auto lab = ball.length(multiply(a, b))) CHECK(*lab <= *ball.length(a) + *ball.length(b));
  }
}

TEST_CASE("lengths beyond the ball from a meeting search") {
  BallSearch s(GeneratingSet::sigma(2));
  while (s.radius() < 4) s.grow();
  BallSearch big(GeneratingSet::sigma(2));
  while (big.radius() < 7) big.grow();
  for (const auto& layer : {big.layers()[5], big.layers()[6], big.layers()[7]}) {
    for (std::size_t i = 0; i < layer.size(); i += 97) {
      const auto b = s.bracket(layer[i]);
      CHECK(b.exact());
      CHECK(b.low == *big.length(layer[i]));
    }
  }
  const auto partial = s.bracket(big.layers()[7][0], 10);
  CHECK(partial.low >= 5);
  CHECK(partial.low <= 7);
}

TEST_CASE("word length sweep") {
  const MetricReport rep = check_length_bounds(2, 4);
  CHECK(rep.all_passed());
  CHECK(rep.rows.size() == 390);
  const auto& id = rep.rows.front();
  CHECK(id.element_key == ". . @0");
  CHECK(id.n_sigma == 0);
  CHECK(*id.len_exact == 0);
  CHECK(id.ub == 6);
  auto c0 = std::find_if(rep.rows.begin(), rep.rows.end(),
                         [](const MetricRow& r) { return r.element_key == "(. .) (. .) @1"; });
  REQUIRE(c0 != rep.rows.end());
  CHECK(c0->n_sigma == 1);
  CHECK(*c0->len_exact == 1);
  CHECK(c0->lb == Rational(1, 3));
  CHECK(c0->ub == 21);
  // Pass flags follow from the printed numbers.
  for (const auto& r : rep.rows) {
    const bool recomputed = r.lb <= *r.len_exact && Rational(*r.len_exact) <= r.ub &&
                            *r.len_exact <= static_cast<long long>(*r.len_upper) &&
                            static_cast<long long>(*r.len_upper) <= 3 * r.d_n &&
                            5LL * (r.n - 1) * static_cast<long long>(r.n_sigma) >= r.d_n - r.n;
    CHECK(recomputed == r.pass());
  }
  CHECK(check_length_bounds(3, 3).all_passed());
}

TEST_CASE("report formats") {
  const MetricReport rep = check_length_bounds(2, 2);
  std::ostringstream os;
  rep.write_csv(os);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  CHECK(line == "element_key,n,N_sigma,D_n,len_exact,len_upper,lb,ub,pass");
  std::getline(is, line);
  CHECK(line == ". . @0,2,0,2,0,0,0/1,6/1,pass");
  std::size_t rows = 0;
  while (std::getline(is, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 8);
  }
  CHECK(rows + 1 == rep.rows.size());
  const auto j = nlohmann::json::parse(rep.to_json());
  CHECK(j["rows"].size() == rep.rows.size());
  CHECK(j["summary"]["fail"] == 0);
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    const auto& row = j["rows"][i];
    CHECK(row["element_key"] == rep.rows[i].element_key);
    CHECK(reduce(Element::parse(row["element_key"].get<std::string>(), 2)).to_string() ==
          rep.rows[i].element_key);
    CHECK(parse_rational(row["lb"].get<std::string>()) == rep.rows[i].lb);
  }
}

TEST_CASE("F against T lengths") {
  const MetricReport rep = fn_vs_tn_report(2, 4);
  REQUIRE_FALSE(rep.rows.empty());
  for (const auto& r : rep.rows) {
    CHECK(r.status == "exact");
    if (r.element_key == ". . @0") {
      // 0 <= 45 * 0 - 1 is false.
      CHECK(*r.len_exact == 0);
      CHECK(r.ub == -1);
      CHECK(r.verdict == Verdict::Fail);
    } else {
      CHECK(r.pass());
    }
  }
  auto x0 = std::find_if(rep.rows.begin(), rep.rows.end(), [](const MetricRow& r) {
    return r.element_key == x(0, 2).to_string();
  });
  REQUIRE(x0 != rep.rows.end());
  CHECK(*x0->len_exact == 1);
  CHECK(x0->ub == 44);
  CHECK(std::find(x0->extra.begin(), x0->extra.end(), std::pair<std::string, std::string>{"len_F", "1"}) !=
        x0->extra.end());
  CHECK(rep.count(Verdict::Fail) == 1);
}

TEST_CASE("distortion rows") {
  std::vector<Element> sample = {identity(3), c(0, 3), x(0, 3), x(2, 3)};
  DistortionOptions opt;
  opt.tn_radius = 3;
  opt.t2_radius = 7;
  const MetricReport rep = distortion_report(3, sample, opt);
  REQUIRE(rep.rows.size() == 4);
  CHECK(*rep.rows[0].len_exact == 0);
  CHECK(rep.rows[0].pass());
  CHECK(rep.rows[1].n_sigma == 1);
  CHECK(std::find(rep.rows[1].extra.begin(), rep.rows[1].extra.end(),
                  std::pair<std::string, std::string>{"N_image", "2"}) != rep.rows[1].extra.end());
  for (const auto& r : rep.rows) CHECK(r.verdict != Verdict::Fail);
}

TEST_CASE("generator subsets of F_n") {
  const GeneratorSubsetReport r = generator_subset_report(3, 5);
  CHECK_FALSE(r.last_letter_reached);
  CHECK(r.small_ball < r.full_ball);
}
