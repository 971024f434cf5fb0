#include <doctest.h>

#include <map>
#include <set>

#include "parafock/verify.hpp"

using namespace parafock;

TEST_CASE("relation enumeration: 32 relations with the right family split") {
  const auto relations = enumerate_relations();
  CHECK(relations.size() == 32);

  std::map<RelationFamily, int> counts;
  std::set<std::string> labels;
  int tautologies = 0;
  for (const Relation& r : relations) {
    ++counts[r.family];
    labels.insert(r.label);
    if (r.residual().is_zero()) {
      // Only the fully symmetric brackets [{b,b},b] with a single letter
      // collapse already in the free algebra; everything else carries
      // genuine content that the representation must satisfy.
      ++tautologies;
      CHECK(r.family == RelationFamily::parabose);
      CHECK(r.xi == r.eta);
      CHECK(r.eta == r.eps);
    }
  }
  CHECK(tautologies == 2);
  CHECK(labels.size() == 32);
  CHECK(counts[RelationFamily::parabose] == 6);
  CHECK(counts[RelationFamily::parafermi] == 2);
  CHECK(counts[RelationFamily::mixed_bb_f] == 6);
  CHECK(counts[RelationFamily::mixed_ff_b] == 2);
  CHECK(counts[RelationFamily::mixed_fb_b] == 8);
  CHECK(counts[RelationFamily::mixed_bf_f] == 8);
  CHECK(labels.count("[{b+,b-},b+]") == 1);
  CHECK(labels.count("{{b-,f+},f-}") == 1);
  CHECK(labels.count("[[f+,f-],b+]") == 1);
}

TEST_CASE("all suites pass on clean actions") {
  for (int pv : {1, 2, 3}) {
    const LadderAction action{ParaOrder(pv)};
    const auto reports = run_all_suites(action, 5, 2);
    CHECK(reports.size() == 9);
    for (const Report& r : reports) {
      CHECK_MESSAGE(r.passed(), to_string(r));
      CHECK(r.checks_run > 0);
    }
    CHECK(all_passed(reports));
  }
}

TEST_CASE("vacuum conditions for p up to 6") {
  for (int pv = 1; pv <= 6; ++pv) {
    const Report r = verify_vacuum(LadderAction{ParaOrder(pv)});
    CHECK(r.checks_run == 6);
    CHECK_MESSAGE(r.passed(), to_string(r));
  }
}

TEST_CASE("threaded and sequential relation sweeps agree") {
  const LadderAction action{ParaOrder(2)};
  const Report seq = verify_relations(action, 6, 1);
  const Report par = verify_relations(action, 6, 4);
  CHECK(seq.checks_run == par.checks_run);
  CHECK(seq.passed());
  CHECK(par.passed());

  // A window too small for trilinear words yields an empty but honest run.
  const Report tiny = verify_relations(action, 2, 1);
  CHECK(tiny.checks_run == 0);
  CHECK(tiny.passed());
}

TEST_CASE("every cataloged fault is caught by the relation sweep") {
  const ParaOrder p(2);
  for (const Fault& f : fault_catalog()) {
    const LadderAction faulted(p, f);
    const Report r = verify_relations(faulted, 6, 2);
    CHECK_MESSAGE(!r.passed(), "fault ", f.name, " slipped through");
    if (!r.failures.empty()) {
      // The report names a specific relation and vector.
      CHECK(r.failures.front().context.find("|") != std::string::npos);
      CHECK(r.failures.front().expected == "0");
    }
  }
}

TEST_CASE("a faulted action also fails the local suites that see it") {
  const ParaOrder p(2);
  const LadderAction faulted(p, *fault_by_name("f+.alpha.alpha.sign"));
  CHECK_FALSE(verify_definitions(faulted, 4).passed());
  CHECK_FALSE(all_passed(run_all_suites(faulted, 5, 2)));
}

TEST_CASE("report formatting") {
  Report r{"demo", 2, 4, 0, {}};
  r.check(true, "fine", "x", "x");
  CHECK(to_string(r) == "demo p=2 max_m=4: 1 checks, PASS");
  r.check(false, "broken thing", "0", "1");
  const std::string text = to_string(r);
  CHECK(text.find("1 FAILED") != std::string::npos);
  CHECK(text.find("broken thing: expected 0, got 1") != std::string::npos);
  CHECK_FALSE(r.passed());

  Report other{"demo", 2, 4, 0, {}};
  other.check(false, "second", "a", "b");
  r.merge(other);
  CHECK(r.checks_run == 3);
  CHECK(r.failures.size() == 2);
}

TEST_CASE("suite family names") {
  CHECK(to_string(RelationFamily::parabose) == "parabose");
  CHECK(to_string(RelationFamily::mixed_bf_f) == "mixed_bf_f");
}
