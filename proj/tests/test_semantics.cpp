#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "oppgeo/errors.hpp"
#include "oppgeo/semantics.hpp"
#include "oracle.hpp"

using namespace oppgeo;

TEST_CASE("universe sorts, deduplicates, and indexes atoms") {
  AtomUniverse u({"V", "D", "V"});
  CHECK(u.names() == std::vector<std::string>{"D", "V"});
  CHECK(u.size() == 2);
  CHECK(u.valuation_count() == 4);
  CHECK(u.contains("D"));
  CHECK_FALSE(u.contains("E"));
  CHECK(u.index_of("V") == 1);
  CHECK_THROWS_AS(u.index_of("E"), UnknownAtomError);

  AtomUniverse m = AtomUniverse::merged(AtomUniverse({"b"}), AtomUniverse({"a", "b", "c"}));
  CHECK(m.names() == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("universes beyond 24 atoms are rejected") {
  std::vector<std::string> names;
  for (int i = 0; i < 25; ++i) names.push_back("a" + std::to_string(i));
  CHECK_THROWS_AS(AtomUniverse{names}, AtomLimitError);
  names.pop_back();
  CHECK_NOTHROW(AtomUniverse{names});
}

TEST_CASE("rank encoding gives atom k the bit k of the rank") {
  AtomUniverse u({"D", "V"});
  // Rank 2 = binary 10: bit 0 (D) clear, bit 1 (V) set.
  Valuation v(u, 2);
  CHECK_FALSE(v.value("D"));
  CHECK(v.value("V"));
  CHECK(v.value_at(1));
  CHECK(v.to_string() == "D=false V=true");
  CHECK(Valuation(u, 1).to_string() == "D=true V=false");
  CHECK(Valuation(AtomUniverse{}, 0).to_string().empty());
}

TEST_CASE("least_true uses tuple order, not rank order") {
  AtomUniverse u({"D", "V"});
  // True at ranks 1 (D=true V=false) and 2 (D=false V=true). As tuples
  // ordered (D, V), rank 2 is (false, true) and comes first.
  TruthTable t(u, {false, true, true, false});
  auto least = t.least_true();
  REQUIRE(least.has_value());
  CHECK(least->rank() == 2);

  CHECK_FALSE(TruthTable::constant(u, false).least_true().has_value());
  CHECK(TruthTable::constant(u, true).least_true()->rank() == 0);
}

TEST_CASE("table operations are pointwise") {
  AtomUniverse u({"p", "q"});
  TruthTable p = truth_table(parse_formula("p"), u);
  TruthTable q = truth_table(parse_formula("q"), u);
  CHECK((p & q) == truth_table(parse_formula("p & q"), u));
  CHECK((p | q) == truth_table(parse_formula("p | q"), u));
  CHECK(~p == truth_table(parse_formula("!p"), u));
  CHECK(p.any());
  CHECK_FALSE(p.all());
  CHECK(TruthTable::constant(u, true).all());
}

TEST_CASE("truth_table requires the universe to cover the formula") {
  CHECK_THROWS_AS(truth_table(parse_formula("p & r"), AtomUniverse({"p", "q"})),
                  UnknownAtomError);
  CHECK(universe_of({parse_formula("p & r"), parse_formula("q")}).names() ==
        std::vector<std::string>{"p", "q", "r"});
}

TEST_CASE("truth tables agree with model-by-model evaluation") {
  std::mt19937 rng(20260822);
  const std::vector<std::string> atoms = {"a", "b", "c"};
  for (int trial = 0; trial < 200; ++trial) {
    Formula f = gen::random_formula(rng, atoms, 0);
    AtomUniverse u(atoms);
    TruthTable t = truth_table(f, u);
    for (std::uint32_t rank = 0; rank < u.valuation_count(); ++rank) {
      Valuation v(u, rank);
      oracle::Model m;
      for (std::size_t k = 0; k < atoms.size(); ++k) m[u.names()[k]] = v.value_at(k);
      CHECK(t.at(rank) == oracle::eval(f, m));
      CHECK(evaluate(f, v) == oracle::eval(f, m));
    }
  }
}

TEST_CASE("equivalence and entailment") {
  CHECK(equivalent(parse_formula("a -> b"), parse_formula("!a | b")));
  CHECK_FALSE(equivalent(parse_formula("a -> b"), parse_formula("b -> a")));
  CHECK(equivalent(parse_formula("(V -> D) -> D -> V"), parse_formula("D -> V")));

  CHECK(entails({parse_formula("!p"), parse_formula("!q")}, parse_formula("!(p | q)"),
                Formula::top()));
  CHECK_FALSE(entails({parse_formula("p | q")}, parse_formula("q"), parse_formula("!(p & q)")));
}

TEST_CASE("entailment counterexamples are least in tuple order") {
  // p|q does not entail q when p alone can hold; the only counterexample
  // under the exclusivity constraint is p=true q=false.
  auto c = entailment_counterexample({parse_formula("p | q")}, parse_formula("q"),
                                     parse_formula("!(p & q)"));
  REQUIRE(c.has_value());
  CHECK(c->to_string() == "p=true q=false");

  // Both rows of !q refute (!q entails p); the tuple-least is p=false q=false.
  auto d = entailment_counterexample({parse_formula("!q")}, parse_formula("p"), Formula::top());
  REQUIRE(d.has_value());
  CHECK(d->to_string() == "p=false q=false");

  CHECK_FALSE(entailment_counterexample({parse_formula("p")}, parse_formula("p | q"),
                                        Formula::top())
                  .has_value());
}

TEST_CASE("entailment agrees with the oracle on random instances") {
  std::mt19937 rng(7);
  const std::vector<std::string> atoms = {"a", "b", "c"};
  for (int trial = 0; trial < 100; ++trial) {
    Formula p1 = gen::random_formula(rng, atoms, 1);
    Formula p2 = gen::random_formula(rng, atoms, 1);
    Formula conclusion = gen::random_formula(rng, atoms, 1);
    Formula constraint = gen::random_formula(rng, atoms, 1);
    CHECK(entails({p1, p2}, conclusion, constraint) ==
          oracle::entails({p1, p2}, conclusion, constraint));
  }
}
