#!/usr/bin/env python3
"""Run every verification at full density and print one report per check.

Covers, in order: the arbitrary-precision length oracle (g = 2..10 at
50 digits, the source of the frozen constants in the tests), the full
sweep and randomized suites, the canonical gluings for g = 2..50, the
reduction fixture corpus, and the large-genus kissing ratio (which is
below 1 at the sampled genera; see kissing_threshold.py).

Exit code 0 when every check that is supposed to pass passes.

Oracle recipe: with mpmath at dps=50,
    L(g) = (8g-4) * acosh(sqrt(2) * cos(pi/(8g-4)))
rounded to the printed digits.  The values frozen in the test suite
were produced exactly this way.
"""

import json
import math
import pathlib
import sys
import time

ROOT = pathlib.Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from fillgeo import isoperim, polygeom, reducer, surfmap
from fillgeo.errors import ValidationError

DATA_DIR = ROOT / "tests" / "data"


def oracle_section():
    try:
        import mpmath as mp
    except ImportError:
        print("mpmath not installed; skipping the oracle recomputation")
        return True
    mp.mp.dps = 50
    ok = True
    print("# length oracle (mpmath dps=50) vs float implementation")
    for g in range(2, 11):
        n = 8 * g - 4
        exact = n * mp.acosh(mp.sqrt(2) * mp.cos(mp.pi / n))
        got = polygeom.min_filling_length(g)
        rel = abs(got - float(exact)) / float(exact)
        ok = ok and rel <= 1e-12
        print(f"  g={g}: oracle {mp.nstr(exact, 21)}  float {got!r}  "
              f"rel err {rel:.2e}")
    return ok


def sweep_section():
    print("# sweeps and randomized suites (full density)")
    reports = [isoperim.verify_lemma_3_2()]
    reports += [isoperim.verify_lemma_3_3(n, 10000) for n in range(4, 21)]
    reports += [isoperim.verify_lemma_3_4(n, 10000) for n in (7, 8, 9, 10, 30)]
    reports.append(isoperim.verify_prop_3_5())
    reports.append(isoperim.verify_prop_3_6())
    reports.append(isoperim.verify_theorem_3_1(10000, seed=0))
    reports.append(isoperim.verify_merge_properties(10000, seed=0))
    reports.append(isoperim.verify_example_3_12())
    for rep in reports:
        print(" ", rep.summary())
    return all(r.passed for r in reports)


def gluing_section():
    print("# canonical gluings g=2..50")
    start = time.perf_counter()
    reports = [surfmap.verify_canonical(g) for g in range(2, 51)]
    elapsed = time.perf_counter() - start
    bad = [r.check_id for r in reports if not r.passed]
    print(f"  {len(reports)} genera verified in {elapsed:.3f}s, failures {bad}")
    return not bad


def reducer_section():
    print("# reduction fixture corpus")
    corpus = [
        ("canonical_g2.json", 2), ("canonical_g3.json", 3),
        ("canonical_g4.json", 4), ("canonical_g5.json", 5),
        ("triangle_a.json", 2), ("triangle_b.json", 2), ("triangle_c.json", 2),
        ("sixvalent_a.json", 2), ("sixvalent_b.json", 2),
    ]
    ok = True
    for name, genus in corpus:
        with open(DATA_DIR / name) as handle:
            data = json.load(handle)
        cert = reducer.reduce(reducer.validate_input(data, genus))
        print(f"  {name}: {cert.summary()}")
        ok = ok and cert.passed
    for name in ("bigon.json", "torus_claim.json"):
        with open(DATA_DIR / name) as handle:
            data = json.load(handle)
        try:
            reducer.validate_input(data, 2)
        except ValidationError as err:
            print(f"  {name}: rejected ({err})")
        else:
            print(f"  {name}: NOT rejected")
            ok = False
    return ok


def kissing_section():
    print("# large-genus kissing ratio (documented to be below 1 here)")
    for g in (10**4, 10**5, 10**6):
        lhs = polygeom.kissing_lower_bound(g, 2.0 * math.log(g) + 2.409)
        rhs = 3.525 * g / math.log(g)
        print(f"  g=10^{round(math.log10(g))}: lhs/rhs = {lhs / rhs:.10f}")
    return True


def main():
    sections = [
        oracle_section, sweep_section, gluing_section,
        reducer_section, kissing_section,
    ]
    ok = True
    start = time.perf_counter()
    for section in sections:
        ok = section() and ok
    elapsed = time.perf_counter() - start
    print(f"total {elapsed:.1f}s: {'all checks passed' if ok else 'FAILURES above'}")
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
