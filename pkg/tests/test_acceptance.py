"""One check per acceptance criterion; each prints a PASS/FAIL line."""
import json
import math
import os
import random
import subprocess
import sys
import time
from fractions import Fraction

import gen
from asymspace.classify import (
    ball_q_closed,
    ball_q_closure,
    ball_q_compact,
    Compactness,
    covering_dimension,
    report_violations,
    right_bounded,
    separation_report,
)
from asymspace.cones import theta_cone
from asymspace.fixtures import builtin
from asymspace.gauge import ball_sym_bounded, evaluate, hrep_gauge
from asymspace.lp import minimize
from asymspace.polyhedra import Polyhedron, VRep, dd_convert, lp_min_by_enumeration, polyhedron_contains
from asymspace.quotient import QuotientSpace, in_q_closure, is_q_closed_lp, is_quotient_t1
from asymspace.seminorm import seminorm_dual, seminorm_kernel, seminorm_value

BUILTINS = (
    [("orthant-m", {"m": m}) for m in (1, 2, 3)]
    + [("linf-n", {"n": n}) for n in (1, 2, 3)]
    + [(name, {}) for name in ("parabola", "piecewise-r", "p-max-abs-yminus", "q-xplus-absy", "xplus-line")]
)


def _add(x, y):
    return tuple(a + b for a, b in zip(x, y))


def _sub(x, y):
    return tuple(a - b for a, b in zip(x, y))


def _scale(a, x):
    return tuple(a * c for c in x)


def test_1_fixture_table(record):
    start = time.perf_counter()
    problems = []

    def expect(label, got, want):
        if got != want:
            problems.append(f"{label}: got {got!r}, want {want!r}")

    for m in (1, 2, 3):
        f = builtin("orthant-m", m=m)
        rep = separation_report(f.gauge, f.facts)
        expect(f"orthant-{m} dim", rep.dimension, 0)
        expect(f"orthant-{m} T1", rep["T1"], False)
        expect(f"orthant-{m} T4", rep["T4"], True)

    f = builtin("q-xplus-absy")
    rep = separation_report(f.gauge, f.facts)
    expect("q-xplus-absy dim", rep.dimension, math.inf)
    for k in ("T1", "T2", "T3", "T4"):
        expect(f"q-xplus-absy {k}", rep[k], False)

    f = builtin("parabola")
    rep = separation_report(f.gauge, f.facts)
    expect("parabola theta", rep.theta_generators, ((0, 1),))
    expect("parabola dim", rep.dimension, math.inf)
    expect("parabola right-bounded", rep.right_bounded.value, False)

    g = builtin("p-max-abs-yminus").gauge
    expect("p right-bounded", right_bounded(g), (True, 1))
    expect("p ball closed", ball_q_closed(g), False)
    strip = Polyhedron.from_hrep([((-1, 0), 1), ((1, 0), 1)])
    closure = ball_q_closure(g)
    expect("p closure strip", polyhedron_contains(strip, closure) and polyhedron_contains(closure, strip), True)

    g = builtin("xplus-line").gauge
    expect("xplus-line compact", ball_q_compact(g)[0], Compactness.COMPACT)
    expect("xplus-line q^s-bounded", ball_sym_bounded(g), None)

    for n in (1, 2, 3):
        f = builtin("linf-n", n=n)
        rep = separation_report(f.gauge, f.facts)
        expect(f"linf-{n} dim", rep.dimension, n)
        expect(f"linf-{n} flags", all(v.value is True for v in rep.flags.values()), True)

    elapsed = time.perf_counter() - start
    ok = not problems and elapsed < 5
    detail = f"{len(problems)} mismatches in {elapsed:.2f} s (limit 5 s)"
    record("1 fixture classification table", ok, detail + ("; " + "; ".join(problems) if problems else ""))
    assert ok


def test_2_seminorm_oracles(record):
    start = time.perf_counter()
    rng = random.Random(2002)
    gauges = gen.gauges(2001, 200, max_dim=4, max_funcs=8)
    mismatches = 0
    for g in gauges:
        for _ in range(5):
            x = gen.point(rng, g.dim)
            if seminorm_value(g, x) != seminorm_dual(g, x):
                mismatches += 1
    elapsed = time.perf_counter() - start
    ok = mismatches == 0 and elapsed < 30
    record("2 seminorm primal = dual", ok, f"{mismatches} mismatches over 1000 points in {elapsed:.2f} s (limit 30 s)")
    assert ok


def test_3_axiom_fuzz(record):
    rng = random.Random(3003)
    gauges = gen.gauges(3001, 100)
    plan = {
        "triangle": 3000,
        "homogeneity": 2000,
        "reverse triangle": 2000,
        "seminorm axioms": 1500,
        "quotient representatives": 1500,
    }
    violations = {k: 0 for k in plan}
    quotients = [QuotientSpace(g, gen.subspace(rng, g.dim)) for g in gauges]

    for i in range(plan["triangle"]):
        g = gauges[i % len(gauges)]
        x, y = gen.point(rng, g.dim), gen.point(rng, g.dim)
        if evaluate(g, _add(x, y)) > evaluate(g, x) + evaluate(g, y):
            violations["triangle"] += 1
    for i in range(plan["homogeneity"]):
        g = gauges[i % len(gauges)]
        x, a = gen.point(rng, g.dim), abs(gen.rational(rng))
        if evaluate(g, _scale(a, x)) != a * evaluate(g, x):
            violations["homogeneity"] += 1
    for i in range(plan["reverse triangle"]):
        # q(x) - q(y) <= q(x - y) and q(y) - q(x) <= q(y - x) = q^-(x - y)
        g = gauges[i % len(gauges)]
        x, y = gen.point(rng, g.dim), gen.point(rng, g.dim)
        d = evaluate(g, x) - evaluate(g, y)
        if not (-evaluate(g, _sub(y, x)) <= d <= evaluate(g, _sub(x, y))):
            violations["reverse triangle"] += 1
    for i in range(plan["seminorm axioms"]):
        g = gauges[i % len(gauges)]
        x, y = gen.point(rng, g.dim), gen.point(rng, g.dim)
        nx = seminorm_value(g, x)
        k = i % 3
        if k == 0:
            bad = seminorm_value(g, _scale(-1, x)) != nx
        elif k == 1:
            bad = seminorm_value(g, _add(x, y)) > nx + seminorm_value(g, y)
        else:
            bad = not (0 <= nx <= evaluate(g, x))
        violations["seminorm axioms"] += bad
    for i in range(plan["quotient representatives"]):
        qs = quotients[i % len(quotients)]
        x = gen.point(rng, qs.gauge.dim)
        basis = qs.divisor.basis
        coef = [gen.rational(rng) for _ in basis]
        y = tuple(sum(c * b[j] for c, b in zip(coef, basis)) for j in range(qs.gauge.dim))
        if qs(_add(x, y)) != qs(x):
            violations["quotient representatives"] += 1

    total = sum(plan.values())
    bad = sum(violations.values())
    detail = ", ".join(f"{k} {v}/{plan[k]}" for k, v in violations.items())
    ok = bad == 0 and total == 10_000
    record("3 axiom fuzz suites", ok, f"{bad} violations in {total} samples ({detail})")
    assert ok


def _offset_region(g, r):
    """Integer rows (H, B) of B_{q^s}[0, r] + theta_q, built independently of the LP."""
    sym = hrep_gauge(tuple(g.functionals) + tuple(_scale(-1, a) for a in g.functionals))
    pts = tuple(_scale(r, v) for v in sym.unit_ball.vrep.points)
    hrep = dd_convert(Polyhedron(g.dim, vrep=VRep(pts, theta_cone(g).generators))).hrep
    out = []
    for h, b in hrep:
        m = math.lcm(*(Fraction(c).denominator for c in (*h, b)))
        out.append((tuple(int(c * m) for c in h), int(b * m)))
    return out


def _integer_vectors(vs):
    """Common denominator L and the integer vectors L * v."""
    m = math.lcm(1, *(Fraction(c).denominator for v in vs for c in v))
    return m, [tuple(int(c * m) for c in v) for v in vs]


def _exceeds(region, x, scale):
    """Is x / scale outside the region?  x and scale are integers."""
    return any(sum(a * c for a, c in zip(h, x)) > b * scale for h, b in region)


def _count_ball_samples_outside(rng, g, region, count):
    """Sample the unit ball and count points outside the region.

    Even samples are convex combinations of the ball vertices plus rays of
    the recession cone; odd samples are random directions scaled onto or
    inside the unit sphere.  All checks run in integers.
    """
    lv, verts = _integer_vectors(g.unit_ball.vrep.points)
    _, rays = _integer_vectors(g.unit_ball.vrep.rays)
    bad = 0
    for i in range(count):
        if i % 2 == 0:
            w = [rng.randint(0, 6) for _ in verts]
            if not any(w):
                w[0] = 1
            s = sum(w)
            x = [sum(wi * v[j] for wi, v in zip(w, verts)) for j in range(g.dim)]
            for ray in rays:
                u = rng.randint(0, 20)
                x = [a + s * u * c for a, c in zip(x, ray)]
            bad += _exceeds(region, x, s * lv)
        else:
            p = [rng.randint(-10, 10) for _ in range(g.dim)]
            qp = evaluate(g, p)
            k = rng.randint(1, 8)
            if qp > 0:
                # x = p * k / (8 q(p)) with q(p) = n / d
                x = [c * k * qp.denominator for c in p]
                bad += _exceeds(region, x, 8 * qp.numerator)
            else:
                bad += _exceeds(region, [c * k for c in p], 1)
    return bad


def test_4_closure_and_right_bounded(record):
    rng = random.Random(4004)
    disagreements = 0
    for g in gen.gauges(4001, 100):
        y = gen.subspace(rng, g.dim)
        criterion = is_quotient_t1(g, y)
        direct = is_q_closed_lp(g, y)
        # direct route: LP membership of probe points in the closure Y - theta
        probes = [_scale(-1, t) for t in theta_cone(g).generators]
        probes += [gen.point(rng, g.dim) for _ in range(3)]
        members = all(x in y for x in probes if in_q_closure(g, y, x))
        if not (criterion == direct == members):
            disagreements += 1

    exceed = 0
    samples = 0
    for g in gen.gauges(4002, 100, max_dim=3, max_funcs=6):
        _, r = right_bounded(g)
        exceed += _count_ball_samples_outside(rng, g, _offset_region(g, r), 1000)
        samples += 1000
    ok = disagreements == 0 and exceed == 0
    record(
        "4 closure criterion and right-bounded radius",
        ok,
        f"closure criterion vs LP: {disagreements} disagreements on 100 pairs; "
        f"right-bounded radius: {exceed} of {samples} ball samples outside B_qs(0,r)+theta",
    )
    assert ok


def test_5_trichotomy_and_reports(record):
    branch_errors = 0
    rule_errors = 0
    branches = {0: 0, "n": 0, "inf": 0}
    for g in gen.gauges(5001, 200):
        # kernel of the seminorm, computed from the dual body, equals span theta
        k = seminorm_kernel(g).dim
        want = 0 if k == g.dim else (g.dim if k == 0 else math.inf)
        d = covering_dimension(g)
        branch_errors += d != want
        branches[0 if d == 0 else ("inf" if d == math.inf else "n")] += 1
        rep = separation_report(g)
        f = {name: rep[name] for name in rep.flags}
        bad = bool(report_violations(rep))
        bad |= f["T3"] is True and f["T2"] is False
        bad |= f["ballQClosed"] is True and f["T3.5"] is not True
        bad |= rep.dimension == 0 and f["T4"] is not True
        bad |= f["T1/4"] != f["T1"]
        rule_errors += bad
    ok = branch_errors == 0 and rule_errors == 0
    record(
        "5 trichotomy and report logic",
        ok,
        f"{branch_errors} branch mismatches, {rule_errors} inconsistent reports on 200 gauges "
        f"(branches: dim 0 x{branches[0]}, dim n x{branches['n']}, infinite x{branches['inf']})",
    )
    assert ok


def test_6_lp_self_check(record):
    rng = random.Random(6006)
    mismatches = 0
    for _ in range(100):
        nvars = rng.randint(1, 5)
        shape = "box" if nvars <= 3 else "simplex"
        c, rows = gen.bounded_program(rng, nvars, rng.randint(0, 3), shape)
        out = minimize(c, rows)
        brute = lp_min_by_enumeration(c, rows, nvars)
        if not out.optimal or out.value != brute:
            mismatches += 1
    ok = mismatches == 0
    record("6 simplex vs vertex enumeration", ok, f"{mismatches} mismatches on 100 bounded programs")
    assert ok


def test_7_cli_determinism(record, tmp_path):
    paths = []
    for name, params in BUILTINS:
        doc = {"builtin": name}
        if params:
            doc["params"] = params
        tag = "-".join([name] + [str(v) for v in params.values()])
        p = tmp_path / f"{tag}.json"
        p.write_text(json.dumps(doc))
        paths.append(str(p))
    outputs = {}
    for fmt in ("json", "text"):
        runs = []
        for seed in ("1", "2"):
            env = dict(os.environ, PYTHONHASHSEED=seed)
            res = subprocess.run(
                [sys.executable, "-m", "asymspace", "classify", *paths, "--format", fmt],
                capture_output=True, env=env, check=False,
            )
            runs.append((res.returncode, res.stdout))
        outputs[fmt] = runs
    same = all(r[0] == r[1] and r[0][0] == 0 for r in outputs.values())
    size = len(outputs["json"][0][1])
    record(
        "7 CLI classify byte-deterministic",
        same,
        f"{len(paths)} builtin files, json and text, two runs each with different hash seeds ({size} bytes json)",
    )
    assert same
