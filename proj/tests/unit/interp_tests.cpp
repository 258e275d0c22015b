#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "test_util.hpp"

using namespace pyx;

// Hand-executed oracle for the new-order benchmark: 3 items at costs
// 2, 4, 6 with a 0.5 discount give line items 1, 2, 3, a total of 6.0 and an
// account balance of 94.0.
TEST_CASE("new-order run matches the hand-computed oracle") {
  Program p = pyxtest::load_program("neworder.pyx");
  Workload w = pyxtest::load_workload("neworder.workload");
  OutputTrace t = run_reference(p, w);
  REQUIRE(t.prints.size() == 1);
  CHECK(t.prints[0] == "order 1 total 6.0");
  CHECK(t.final_db.find("table lineitems") != std::string::npos);
  CHECK(t.final_db.find("row 1 1.0") != std::string::npos);
  CHECK(t.final_db.find("row 1 2.0") != std::string::npos);
  CHECK(t.final_db.find("row 1 3.0") != std::string::npos);
  CHECK(t.final_db.find("row 1 94.0") != std::string::npos);
}

TEST_CASE("reference run agrees between raw and normalized program") {
  Program raw = parse(pyxtest::read_corpus("neworder.pyx"), "neworder.pyx");
  Program norm = normalize(raw);
  Workload w = pyxtest::load_workload("neworder.workload");
  CHECK(run_reference(raw, w).text() == run_reference(norm, w).text());
}

TEST_CASE("empty workload leaves the database untouched") {
  Program p = pyxtest::load_program("neworder.pyx");
  Workload w = pyxtest::load_workload("neworder.workload");
  w.calls.clear();
  OutputTrace t = run_reference(p, w);
  CHECK(t.prints.empty());
  CHECK(t.final_db == w.db_init.dump());
}

TEST_CASE("out-of-bounds read names the statement") {
  Program p = normalize(parse("fn main() { var a = new int[2]; var x = a[2]; }\n"
                              "entry main;"));
  Workload w;
  w.calls.push_back({"main", {}});
  try {
    run_reference(p, w);
    FAIL("expected out-of-bounds error");
  } catch (const Diag &d) {
    CHECK(d.category() == "runtime");
    const Stmt *read = pyxtest::find_stmt(p, "main", NormKind::ArrayRead);
    REQUIRE(read != nullptr);
    CHECK(d.stmt_id() == read->id);
  }
}

TEST_CASE("loop head counts one more than the body") {
  Program p = normalize(parse("fn main() { var i = 0; while (i < 100) { i = i + 1; } }\n"
                              "entry main;"));
  Workload w;
  w.calls.push_back({"main", {}});
  Profile prof = profile_program(p, w);
  const Stmt *head = pyxtest::find_stmt(p, "main", NormKind::LoopHead);
  REQUIRE(head != nullptr);
  CHECK(prof.count(head->id) == 101);
  // the loop body increment runs 100 times
  CHECK(prof.count(head->body[0]->id) == 100);
}

TEST_CASE("def size of an int assignment is eight bytes") {
  Program p = normalize(parse("fn main() { var i = 0; while (i < 7) { var x = 3; i = i + 1; } }\n"
                              "entry main;"));
  Workload w;
  w.calls.push_back({"main", {}});
  Profile prof = profile_program(p, w);
  const Stmt *head = pyxtest::find_stmt(p, "main", NormKind::LoopHead);
  const Stmt *x_assign = head->body[0].get();
  CHECK(prof.count(x_assign->id) == 7);
  SizeStat s = prof.def_size.at(x_assign->id);
  CHECK(s.samples == 7);
  CHECK(s.total == 7 * 8);
  CHECK(s.mean() == 8.0);
}

TEST_CASE("insert call count equals the item count") {
  Program p = pyxtest::load_program("neworder.pyx");
  Workload w = pyxtest::load_workload("neworder.workload");
  Profile prof = profile_program(p, w);
  const Stmt *call = pyxtest::find_stmt(p, "computeTotalCost", NormKind::Call, 1);
  REQUIRE(call != nullptr); // getCosts is call 0, insertNewLineItem is call 1
  CHECK(call->expr->name == "insertNewLineItem");
  CHECK(prof.count(call->id) == 3);
}

TEST_CASE("profiles and traces are deterministic and unperturbed") {
  Program p = pyxtest::load_program("neworder.pyx");
  Workload w = pyxtest::load_workload("neworder.workload");
  RunOptions with_prof;
  with_prof.profile = true;
  RunResult a = run_program(p, w, with_prof);
  RunResult b = run_program(p, w, with_prof);
  CHECK(a.trace.text() == b.trace.text());
  CHECK(a.profile.serialize() == b.profile.serialize());
  CHECK(a.trace.text() == run_reference(p, w).text());
}

TEST_CASE("unexecuted statements profile as zero") {
  Program p = normalize(parse("fn main() { var c = false; if (c) { print(1); } }\n"
                              "entry main;"));
  Workload w;
  w.calls.push_back({"main", {}});
  Profile prof = profile_program(p, w);
  const Stmt *pr = pyxtest::find_stmt(p, "main", NormKind::Print);
  REQUIRE(pr != nullptr);
  CHECK(prof.count(pr->id) == 0);
}

TEST_CASE("cnt coherence: body statements never exceed their loop head") {
  Program p = pyxtest::load_program("neworder.pyx");
  Workload w = pyxtest::load_workload("neworder.workload");
  Profile prof = profile_program(p, w);
  for (const auto &f : p.functions) {
    for_each_stmt(f.body, [&](const Stmt &s) {
      if (s.kind != Stmt::Kind::While)
        return;
      for (const auto &b : s.body)
        CHECK(prof.count(b->id) <= prof.count(s.id));
    });
  }
}

TEST_CASE("profile round-trips through its flat file form") {
  Program p = pyxtest::load_program("neworder.pyx");
  Workload w = pyxtest::load_workload("neworder.workload");
  Profile prof = profile_program(p, w);
  Profile back = Profile::deserialize(prof.serialize());
  CHECK(back.serialize() == prof.serialize());
}

TEST_CASE("unknown table reports a query diagnostic") {
  Program p = normalize(parse("fn main() { var r = query(\"get nosuch k=? v\", 1); }\n"
                              "entry main;"));
  Workload w;
  w.calls.push_back({"main", {}});
  CHECK_THROWS_WITH_AS(run_reference(p, w), "unknown table 'nosuch'", Diag);
}

TEST_CASE("integer semantics wrap and floats stay IEEE") {
  Program p = normalize(parse(
      "fn main() { var big = 9223372036854775807; var x = big + 1; print(x); "
      "var d = 1.0 / 0.0; print(d); }\nentry main;"));
  Workload w;
  w.calls.push_back({"main", {}});
  OutputTrace t = run_reference(p, w);
  REQUIRE(t.prints.size() == 2);
  CHECK(t.prints[0] == "-9223372036854775808");
  CHECK(t.prints[1] == "inf");
}
