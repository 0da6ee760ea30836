#include <algorithm>
#include <random>

#include "banet/dynamics.hpp"
#include "banet/funcparse.hpp"
#include "banet/xorcirculant.hpp"
#include "doctest.h"

using namespace banet;

namespace {

Configuration conf(const char* bits) { return Configuration::from_string(bits); }

}  // namespace

TEST_CASE("spec text form") {
  const CirculantSpec spec = CirculantSpec::parse("circulant n=4 coeffs=3,0");
  CHECK(spec.n == 4);
  CHECK(spec.coeffs == std::vector<int>{0, 3});
  CHECK(spec.canonical());
  CHECK(spec.k() == 2);
  CHECK(spec.to_string() == "circulant n=4 coeffs=3,0");
  CHECK(CirculantSpec::parse("circulant  n=5  coeffs=4,0,1").to_string() ==
        "circulant n=5 coeffs=4,0,1");

  // non-canonical specs print ascending
  CHECK(CirculantSpec(4, {0, 1}).to_string() == "circulant n=4 coeffs=0,1");

  CHECK_THROWS_AS(CirculantSpec::parse("circulant n=4"), ParseError);
  CHECK_THROWS_AS(CirculantSpec::parse("circulant n=4 coeffs="), ParseError);
  CHECK_THROWS_AS(CirculantSpec::parse("circulant n=4 coeffs=3,0 junk"), ParseError);
  CHECK_THROWS_AS(CirculantSpec::parse("circulant n=4 coeffs=4"), ParseError);
  CHECK_THROWS_AS(CirculantSpec::parse("circulant n=4 coeffs=1,1"), ParseError);
  CHECK_THROWS_AS(CirculantSpec(3, {0, 5}), DomainError);
}

TEST_CASE("make_circulant") {
  // n=4, coefficients {3,0}: f_i = x_{i-1} xor x_i
  const Network net = make_circulant(CirculantSpec(4, {3, 0}));
  for (int i = 0; i < 4; ++i) {
    for (unsigned code = 0; code < 16; ++code) {
      const bool expected = (((code >> ((i + 3) % 4)) ^ (code >> i)) & 1u) != 0;
      CHECK(net.function(i).eval(code) == expected);
    }
  }

  // the size-2 circulant is the both-xor network
  CHECK(make_circulant(CirculantSpec(2, {1, 0})) ==
        parse_network("n=2\n0: x0 ^ x1\n1: x0 ^ x1\n"));

  // odd k keeps the all-ones configuration fixed
  const CirculantSpec odd(5, {4, 0, 1});
  CHECK(parallel_step(odd, Configuration::ones(5)) == Configuration::ones(5));

  CHECK_THROWS_AS(make_circulant(CirculantSpec(4, {0, 1})), DomainError);
  CHECK_THROWS_AS(make_circulant(CirculantSpec(4, {3})), DomainError);
  CHECK_THROWS_AS(make_circulant(CirculantSpec(25, {24, 0})), CapacityError);
  CHECK(make_circulant_relaxed(CirculantSpec(4, {0, 1})).size() == 4);
}

TEST_CASE("enumeration") {
  CHECK(enumerate_circulants(5, 2).size() == 4);

  const auto three = enumerate_circulants(3, 2);
  REQUIRE(three.size() == 2);
  CHECK(three[0].coeffs == std::vector<int>{0, 2});
  CHECK(three[1].coeffs == std::vector<int>{1, 2});

  CHECK(enumerate_circulants(4, 4).size() == 1);
  CHECK(enumerate_circulants(4, 4)[0].coeffs == std::vector<int>{0, 1, 2, 3});

  CHECK_THROWS_AS(enumerate_circulants(4, 1), DomainError);
  CHECK_THROWS_AS(enumerate_circulants(4, 5), DomainError);

  // all canonical, deterministic lexicographic order
  const auto specs = enumerate_circulants(6, 3);
  CHECK(specs.size() == 10);
  for (std::size_t i = 0; i < specs.size(); ++i) {
    CHECK(specs[i].canonical());
    if (i > 0) CHECK(specs[i - 1].coeffs < specs[i].coeffs);
  }
}

TEST_CASE("symmetric network") {
  CHECK(symmetric_network(CirculantSpec(4, {3, 0})) == CirculantSpec(4, {1, 0}));
  CHECK(symmetric_network(CirculantSpec(2, {1, 0})) == CirculantSpec(2, {1, 0}));

  for (int n = 2; n <= 8; ++n) {
    for (const CirculantSpec& spec : enumerate_circulants(n, 2)) {
      CHECK(symmetric_network(symmetric_network(spec)) == spec);
    }
  }
}

TEST_CASE("interaction step") {
  CHECK(interaction_step(CirculantSpec(27, {26, 23})) == 4);
  CHECK(interaction_step(CirculantSpec(4, {3, 0})) == 0);
  CHECK(interaction_step(CirculantSpec(5, {4, 2})) == 3);
  CHECK_THROWS_AS(interaction_step(CirculantSpec(5, {4, 0, 1})), DomainError);
  CHECK_THROWS_AS(interaction_step(CirculantSpec(5, {0, 2})), DomainError);

  // never 1, and the offset arcs are present in the interaction graph
  for (int n = 2; n <= 8; ++n) {
    for (const CirculantSpec& spec : enumerate_circulants(n, 2)) {
      const int s = interaction_step(spec);
      CHECK(s != 1);
      const InteractionGraph g = interaction_graph(make_circulant(spec));
      for (int i = 0; i < n; ++i) {
        CHECK(g.has_arc(i, (i + s) % n));
        CHECK(g.has_arc(i, (i + 1) % n));  // circuit from the forced coefficient
      }
    }
  }
}

TEST_CASE("interaction graphs are exactly the coefficient-predicted arc sets") {
  for (int n = 2; n <= 7; ++n) {
    for (int k = 2; k <= n; ++k) {
      for (const CirculantSpec& spec : enumerate_circulants(n, k)) {
        std::vector<std::pair<int, int>> predicted;
        for (int i = 0; i < n; ++i) {
          for (int m : spec.coeffs) predicted.emplace_back((i + m) % n, i);
        }
        std::sort(predicted.begin(), predicted.end());
        predicted.erase(std::unique(predicted.begin(), predicted.end()),
                        predicted.end());
        CHECK(interaction_graph(make_circulant(spec)).arcs == predicted);
      }
    }
  }
}

TEST_CASE("circuit decomposition") {
  const auto entries = circuit_decomposition(CirculantSpec(27, {26, 23}));
  REQUIRE(entries.size() == 2);
  CHECK(entries[0] == CircuitDecomposition{23, 1, 27});
  CHECK(entries[1] == CircuitDecomposition{26, 1, 27});

  CHECK(circuit_decomposition(CirculantSpec(4, {2}))[0] ==
        CircuitDecomposition{2, 2, 2});
  CHECK(circuit_decomposition(CirculantSpec(4, {0}))[0] ==
        CircuitDecomposition{0, 4, 1});
}

TEST_CASE("parallel step") {
  const CirculantSpec spec(4, {3, 0});
  CHECK(parallel_step(spec, conf("1000")) == conf("1100"));
  CHECK(parallel_step(spec, Configuration(4)) == Configuration(4));
  CHECK(parallel_step(spec, Configuration::ones(4)) == Configuration(4));

  // bit-exact match with the table-backed network under the parallel update
  std::mt19937_64 rng(67);
  for (int n = 2; n <= 8; ++n) {
    for (const CirculantSpec& s : enumerate_circulants(n, 2)) {
      const Network net = make_circulant(s);
      std::vector<int> all(n);
      for (int i = 0; i < n; ++i) all[i] = i;
      for (unsigned code = 0; code < (1u << n); ++code) {
        const Configuration x(n, code);
        CHECK(parallel_step(s, x) == apply_update(net, x, all));
      }
    }
  }

  // linearity over GF(2)
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 62);
    const int m = static_cast<int>(rng() % (n - 1));
    const CirculantSpec s(n, {n - 1, m});
    Configuration x(n), y(n);
    for (int i = 0; i < n; ++i) {
      x.set_bit(i, rng() & 1u);
      y.set_bit(i, rng() & 1u);
    }
    CHECK(parallel_step(s, x ^ y) ==
          (parallel_step(s, x) ^ parallel_step(s, y)));
  }
}

TEST_CASE("space-time diagrams") {
  const CirculantSpec spec(4, {3, 0});
  const SpaceTimeDiagram diagram = space_time(spec, conf("1000"), 4);
  REQUIRE(diagram.rows.size() == 5);
  CHECK(diagram.rows[1] == conf("1100"));
  CHECK(diagram.rows[2] == conf("1010"));
  CHECK(diagram.rows[3] == conf("1111"));
  CHECK(diagram.rows[4] == conf("0000"));
  CHECK(diagram.to_text() ==
        "#...\n"
        "##..\n"
        "#.#.\n"
        "####\n"
        "....\n");
  CHECK(space_time(spec, conf("1000"), 1).to_pbm() == "P1\n4 2\n1000\n1100\n");

  CHECK(space_time(spec, conf("0110"), 0).rows ==
        std::vector<Configuration>{conf("0110")});

  // the unit seed of the size-8 self-loop network empties by row 8
  const CirculantSpec eight(8, {7, 0});
  const SpaceTimeDiagram d8 = space_time(eight, Configuration::unit(8, 0), 8);
  CHECK(d8.rows[8] == Configuration(8));

  CHECK_THROWS_AS(space_time(spec, conf("1000"), -1), DomainError);

  // PBM rows wider than 70 columns are wrapped
  const CirculantSpec wide(100, {99, 0});
  const std::string pbm = space_time(wide, Configuration::unit(100, 0), 0).to_pbm();
  CHECK(pbm.substr(0, 9) == "P1\n100 1\n");
  const std::string body = pbm.substr(9);
  CHECK(body.size() == 102);  // 70 + '\n' + 30 + '\n'
  CHECK(body[70] == '\n');
  CHECK(body.back() == '\n');
}

TEST_CASE("mask tables") {
  const MaskTable table = mask_table(CirculantSpec(4, {3, 0}), 0, 2);
  REQUIRE(table.masks.size() == 3);
  CHECK(table.masks[0] == std::vector<int>{0});
  CHECK(table.masks[1] == std::vector<int>{0, 3});
  CHECK(table.masks[2] == std::vector<int>{0, 2});

  CHECK(mask_table(CirculantSpec(2, {1, 0}), 0, 1).masks[1] ==
        std::vector<int>{0, 1});

  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 10);
    const int m = static_cast<int>(rng() % (n - 1));
    const int i = static_cast<int>(rng() % n);
    CHECK(mask_table(CirculantSpec(n, {n - 1, m}), i, 0).masks[0] ==
          std::vector<int>{i});
  }
}

TEST_CASE("mask evaluation equals direct iteration") {
  CHECK(eval_via_masks(CirculantSpec(4, {3, 0}), conf("1100"), 0, 2) == true);

  std::mt19937_64 rng(73);
  for (int n = 2; n <= 6; ++n) {
    for (const CirculantSpec& spec : enumerate_circulants(n, 2)) {
      for (unsigned code = 0; code < (1u << n); ++code) {
        const Configuration x0(n, code);
        Configuration x = x0;
        for (int t = 0; t <= 2 * n; ++t) {
          for (int i = 0; i < n; ++i) {
            CHECK(eval_via_masks(spec, x0, i, t) == x.bit(i));
          }
          x = parallel_step(spec, x);
        }
      }
    }
  }

  // t = 0 reads the seed; the zero seed stays zero
  const CirculantSpec spec(6, {5, 2});
  CHECK(eval_via_masks(spec, conf("010001"), 1, 0) == true);
  CHECK(eval_via_masks(spec, Configuration(6), 3, 17) == false);
}

TEST_CASE("space-time symmetry") {
  CHECK(check_symmetry(CirculantSpec(14, {13, 0}), 3, 28).ok);
  CHECK(check_symmetry(CirculantSpec(6, {5, 0, 2}), 0, 64).ok);

  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 30);
    const int m = static_cast<int>(rng() % (n - 1));
    const int i = static_cast<int>(rng() % n);
    const SymmetryCheck check =
        check_symmetry(CirculantSpec(n, {n - 1, m}), i, 4 * n);
    CHECK(check.ok);
    CHECK_FALSE(check.first_violation.has_value());
  }

  // masks are exactly the supports of the mirrored iterates
  const CirculantSpec spec(7, {6, 3});
  const CirculantSpec sym = symmetric_network(spec);
  const MaskTable table = mask_table(spec, 2, 14);
  Configuration state = Configuration::unit(7, 2);
  for (int t = 0; t <= 14; ++t) {
    std::vector<int> support;
    for (int j = 0; j < 7; ++j) {
      if (state.bit(j)) support.push_back(j);
    }
    CHECK(table.masks[t] == support);
    state = parallel_step(sym, state);
  }
}

TEST_CASE("repetition degree") {
  CHECK(repetition_degree(conf("0101")) == 1);
  CHECK(repetition_degree(conf("00000000")) == 3);
  CHECK(repetition_degree(conf("1001")) == 0);
  CHECK(repetition_degree(conf("10110")) == 0);  // odd length
  CHECK(repetition_degree(conf("1")) == 0);
  CHECK(repetition_degree(conf("11")) == 1);
  CHECK(repetition_degree(conf("110110")) == 1);  // halves equal, odd halves
}

TEST_CASE("power-two suite") {
  const PowerTwoReport p3 = verify_power_two_suite(3);
  CHECK(p3.n == 8);
  REQUIRE(p3.claims.size() == 5);
  for (const ClaimResult& claim : p3.claims) {
    CHECK(claim.status == ClaimStatus::Pass);
  }
  CHECK(p3.all_passed());
  CHECK(p3.to_text().find("result: PASS") != std::string::npos);

  // n = 2: the half-size claim is skipped, everything else passes
  const PowerTwoReport p1 = verify_power_two_suite(1);
  CHECK(p1.all_passed());
  bool saw_skip = false;
  for (const ClaimResult& claim : p1.claims) {
    if (claim.id == "L4-half") {
      CHECK(claim.status == ClaimStatus::Skip);
      saw_skip = true;
    } else {
      CHECK(claim.status == ClaimStatus::Pass);
    }
  }
  CHECK(saw_skip);

  CHECK_THROWS_AS(verify_power_two_suite(0), DomainError);
  CHECK_THROWS_AS(verify_power_two_suite(13), CapacityError);

  // the size-2 alternating seed empties in exactly two steps
  const CirculantSpec two(2, {1, 0});
  const Configuration ten = conf("10");
  CHECK(parallel_step(two, ten) == conf("11"));
  CHECK(parallel_step(two, parallel_step(two, ten)) == conf("00"));
}
