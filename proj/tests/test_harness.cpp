#include <catch_amalgamated.hpp>

#include "pacbr/harness.hpp"

using namespace pacbr;

namespace {

GenConfig small_cfg(long cases = 60) {
  GenConfig cfg;
  cfg.cases = cases;
  cfg.seed = 12345;
  return cfg;
}

Semantics corrupt(Connective c, TruthValue row, TruthValue col, TruthValue to) {
  Matrices m = Matrices::pac();
  m.entry(c, row, col) = to;
  return Semantics(m);
}

}  // namespace

TEST_CASE("formula generation is deterministic and bounded") {
  const Signature sig = make_signature(2);
  GenConfig cfg;
  cfg.max_depth = 3;

  Rng a(77), b(77);
  for (int i = 0; i < 200; ++i) {
    const Formula fa = gen_formula(cfg, a, sig);
    const Formula fb = gen_formula(cfg, b, sig);
    CHECK(fa == fb);
    CHECK(fa.depth() <= 3);
  }

  Rng c(5);
  cfg.max_depth = 1;
  for (int i = 0; i < 100; ++i)
    CHECK(gen_formula_depth(c, sig, 0).depth() == 0);
}

TEST_CASE("formula families bucket by semantics") {
  const Semantics sem;
  const Signature sig = make_signature(2);
  const FormulaFamily fam = FormulaFamily::build(sem, sig, 1);
  CHECK(fam.valuations() == 9);
  CHECK(fam.classes() > 10);
  CHECK(fam.classes() <= fam.all().size());
  // every member of a class shares the representative's designation mask
  for (std::size_t i = 0; i < fam.all().size(); ++i) {
    const auto vec = FormulaFamily::value_vector(sem, sig, fam.all()[i]);
    CHECK(vec == fam.class_values(fam.class_of(i)));
  }
}

TEST_CASE("all suites pass against the real logic") {
  const Semantics sem;
  const PostulateReport rep = run_suite(sem, small_cfg());
  INFO(rep.to_text());
  CHECK(rep.ok());
  CHECK(rep.total_checked() > 500);
}

TEST_CASE("suite selection filters the report") {
  const Semantics sem;
  const PostulateReport rep = run_suite(sem, small_cfg(20), {"expansion"});
  CHECK(rep.ok());
  for (const auto& s : rep.stats()) CHECK(s.suite == "expansion");
  CHECK_THROWS_AS(run_suite(sem, small_cfg(5), {"nonsense"}), ConfigError);
}

TEST_CASE("verdicts are reproducible from seed and config") {
  const Semantics sem;
  const GenConfig cfg = small_cfg(30);
  const std::string a = run_suite(sem, cfg).to_text();
  const std::string b = run_suite(sem, cfg).to_text();
  CHECK(a == b);

  GenConfig other = cfg;
  other.seed = 999;
  // same shape, same pass verdicts, different cases
  CHECK(run_suite(sem, other).ok());
}

TEST_CASE("a corrupted negation entry is caught and replays") {
  // ~1 := 1 breaks double negation
  const Semantics bad = corrupt(Connective::Not, TruthValue::True,
                                TruthValue::True, TruthValue::True);
  const GenConfig cfg = small_cfg(10);
  const PostulateReport rep = check_hilbert_soundness(bad, cfg);
  REQUIRE_FALSE(rep.ok());

  // every stored counterexample re-fails standalone
  int replayed = 0;
  for (const auto& s : rep.stats()) {
    for (const auto& ce : s.counterexamples) {
      CHECK(replay_case(bad, cfg, "hilbert", ce.case_index));
      ++replayed;
    }
  }
  CHECK(replayed > 0);
  // and the same cases pass against the honest tables
  for (const auto& s : rep.stats())
    for (const auto& ce : s.counterexamples)
      CHECK_FALSE(replay_case(Semantics(), cfg, "hilbert", ce.case_index));
}

TEST_CASE("a corrupted disjunction diagonal is caught by the Cn suite") {
  // 1 | -1 ... the bottom-right corner: -1 | -1 := 0 designates q|q with
  // both disjuncts false, so disjunction-in-premises must fail
  const Semantics bad = corrupt(Connective::Or, TruthValue::False,
                                TruthValue::False, TruthValue::Both);
  const PostulateReport rep = check_cn_properties(bad, small_cfg(40));
  CHECK_FALSE(rep.ok());
}

TEST_CASE("report text is stable and carries counterexamples") {
  const Semantics bad = corrupt(Connective::And, TruthValue::True,
                                TruthValue::True, TruthValue::False);
  const GenConfig cfg = small_cfg(6);
  const PostulateReport rep = check_hilbert_soundness(bad, cfg);
  const std::string text = rep.to_text();
  CHECK(text.find("failed=") != std::string::npos);
  CHECK(text.find("counterexample") != std::string::npos);
  CHECK(text == check_hilbert_soundness(bad, cfg).to_text());
}

TEST_CASE("expansion suite exercises rejection and vacuity corners") {
  const Semantics sem;
  const PostulateReport rep = check_expansion_postulates(sem, small_cfg(80));
  CHECK(rep.ok());
  long rejected = 0, vacuous = 0;
  for (const auto& s : rep.stats()) {
    if (s.id == "coverage-rejected") rejected = s.checked;
    if (s.id == "coverage-vacuous") vacuous = s.checked;
  }
  CHECK(rejected > 0);
  CHECK(vacuous > 0);
}

TEST_CASE("zero cases produce an empty report") {
  const Semantics sem;
  const PostulateReport rep = run_suite(sem, small_cfg(0));
  CHECK(rep.ok());
  CHECK(rep.total_checked() == 0);
  CHECK(rep.stats().empty());
  CHECK(rep.to_text().empty());
}

TEST_CASE("config validation") {
  GenConfig cfg;
  cfg.atoms = 5;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = GenConfig{};
  cfg.ceiling = 9;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = GenConfig{};
  cfg.max_depth = 0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
}
