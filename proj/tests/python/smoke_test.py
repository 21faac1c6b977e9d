#!/usr/bin/env python3
"""Smoke tests for the elpsolve python module."""

import sys

import elpsolve

failures = 0


def check(name, cond, extra=""):
    global failures
    status = "ok" if cond else "FAIL"
    print(f"{status:4} {name} {extra}")
    if not cond:
        failures += 1


sch1 = elpsolve.generate_scholarship(1)
program = elpsolve.parse(sch1)
check("parse counts", program.num_atoms == 5 and program.num_rules == 5)
check("epistemic atoms", sorted(program.epistemic_atoms) == ["eligible", "ineligible"])
check("repr", "atoms=5" in repr(program))

check("wv_exists scholarship", elpsolve.wv_exists(sch1))
check("wv_exists loop", not elpsolve.wv_exists("a :- not a."))
check("wv_exists empty", elpsolve.wv_exists(""))

views = elpsolve.world_views(sch1)
check("one world view", len(views) == 1)
check("world view shape",
      views[0]["p"] == ["interview"] and views[0]["n"] == [] and len(views[0]["u"]) == 4)

report = elpsolve.solve(sch1, algorithm="all")
check("solve agreement", report["agreement"] is True and report["wv_exists"] is True)
check("solve stats", report["atoms"] == 5 and report["tw_epistemic_primal"] == 1
      and report["oracle_calls"] > 0)

sch2 = elpsolve.generate_scholarship(2)
report2 = elpsolve.solve(sch2, algorithm="eprim", heuristic="min-degree", seed=3)
check("eprim via kwargs", report2["wv_exists"] is True and report2["epistemic_atoms"] == 4)

check("formula true", elpsolve.evaluate_formula(sch1, "interview"))
check("formula false", not elpsolve.evaluate_formula(sch1, "eligible"))
check("formula or", elpsolve.evaluate_formula(sch1, "eligible | ineligible"))

rand = elpsolve.generate_random(atoms=4, rules=5, p_epistemic=0.5, seed=7)
check("random deterministic", rand == elpsolve.generate_random(atoms=4, rules=5,
                                                               p_epistemic=0.5, seed=7))
rand_report = elpsolve.solve(rand, algorithm="all")
check("random agreement", rand_report["agreement"] is True)

try:
    elpsolve.parse("a :- ~~b.")
    check("parse error raised", False)
except Exception:
    check("parse error raised", True)

print(f"\n{failures} failure(s)")
sys.exit(1 if failures else 0)
