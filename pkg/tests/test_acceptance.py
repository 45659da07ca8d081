"""Acceptance gate: nine criteria, each with its runtime bound.

Every test records exactly one PASS/FAIL line (shown in the terminal summary)
before asserting, so a failure still leaves its line behind.
"""

import random
import time

from chevk1.congruence import (
    TAG_IDEAL, general_z_membership, h_delta_factors, specialize_certificate,
    universal_context, verify_h_delta_product, verify_z_factorization,
    z_membership_word,
)
from chevk1.decomposition import chevalley_matsumoto
from chevk1.group import apply_word, representation, z_gen
from chevk1.reduction import reduce_dl, reduce_e6
from chevk1.rings import (
    ZZ, Ideal, NotUnimodular, ResidueRing, asr_transform,
    maximal_ideals_containing, parse_ring, unimodular_certificate,
)
from chevk1.roots import apply_weyl_word, find_weyl_conjugator, named_subsystem
from chevk1.sampling import random_element, random_vector
from chevk1.weights import diagram
from oracles import steinberg_failures


def _run(criterion, number, title, limit, body):
    start = time.perf_counter()
    try:
        ok, detail = body()
    except Exception as exc:  # record, then fail
        criterion(number, title, False, f"{type(exc).__name__}: {exc}")
        raise
    elapsed = time.perf_counter() - start
    ok = ok and (limit is None or elapsed < limit)
    timing = f"{elapsed:.2f}s" + (f" < {limit}s" if limit else "")
    criterion(number, title, ok, f"{detail}; {timing}" if detail else timing)
    assert ok, detail


def test_1_z_factorization(criterion):
    def body():
        reports = [verify_z_factorization(universal_context(True).ring),
                   verify_z_factorization(universal_context(False).ring)]
        ok = all(r["status"] == "pass" for r in reports)
        return ok, "56x56 over Z[1/2][xi,zeta]/(xi^2) and Z[xi,zeta]/(xi^2)"
    _run(criterion, 1, "z-factorization identity", 10, body)


def test_2_h_delta_product(criterion):
    def body():
        ctx = universal_context()
        xi, zeta = ctx.ring.gen("xi"), ctx.ring.gen("zeta")
        half = ctx.ring(2).inverse()
        u = zeta * xi
        displayed = [1 + u, 1 + u, 1 + 3 * u * half, 1 + 2 * u, 1 + 3 * u * half, 1 + u, 1 + u * half]
        factors_ok = [s for _, s in h_delta_factors(xi, zeta)] == displayed
        report = verify_h_delta_product(ctx.ring)
        delta_ok = report["delta"] == [2, 2, 3, 4, 3, 2, 1]
        return factors_ok and delta_ok and report["status"] == "pass", "7 factors as displayed"
    _run(criterion, 2, "h_delta torus product", 10, body)


def test_3_steinberg_relations(criterion):
    def body():
        failures, checked, table = steinberg_failures("E6:w1", ResidueRing(5), 2, 3)
        antisym = all(table[b, a] == -n for (a, b), n in table.items())
        return not failures and checked == 72 + 72 * 70 and antisym, \
            f"{checked} relations, {len(failures)} failures"
    _run(criterion, 3, "Steinberg relations in E6 over Z/5", 60, body)


def test_4_diagram_facts(criterion):
    def body():
        sizes = [len(diagram(l)) for l in ("E6:w1", "E7:w7", "D5:w1")]
        split = [len(x) for x in diagram("E6:w1").level_decomposition(1)]
        ok = sizes == [27, 56, 10] and split == [1, 16, 10]
        for label in ("E6:w1", "E7:w7", "D5:w1"):
            d = diagram(label)
            out = {}
            for a, b, i in d.edges:
                out.setdefault(a, {})[i] = b
            for a, steps in out.items():
                for i, b in steps.items():
                    for j, c in steps.items():
                        if i != j and out.get(b, {}).get(j) != out.get(c, {}).get(i):
                            ok = False
            for n in range(len(d)):
                for r in d.system.roots:
                    m = d.shift(n, r)
                    if m is not None and d.shift(m, r) is not None:
                        ok = False
        return ok, f"sizes {sizes}, E6 levels {split}"
    _run(criterion, 4, "weight diagram facts", 5, body)


def test_5_decomposition_round_trip(criterion):
    def body():
        e6 = representation("E6:w1")
        passed = total = 0
        for seed, ring in enumerate((ResidueRing(5), ResidueRing(6), ZZ)):
            rng = random.Random(500 + seed)
            for _ in range(100):
                _, g = random_element(rng, e6, ring, 15, 30, unit_corner=True)
                split = chevalley_matsumoto(g)
                total += 1
                passed += split.product() == g and all(
                    split.g1.entry(0, n).is_zero() and split.g1.entry(n, 0).is_zero()
                    for n in range(1, 27))
        return passed == total == 300, f"{passed}/{total}"
    _run(criterion, 5, "Chevalley-Matsumoto round trip", 60, body)


def _boundaries_ok(ring, trace):
    if not trace:
        return True
    levels = diagram("E6:w1").level_decomposition(1)
    vec = {t["step"]: [ring.parse(x) for x in t["vector"]] for t in trace}
    try:
        unimodular_certificate(vec[1][1:])
        unimodular_certificate([vec[3][0], vec[3][min(levels[2])]])
    except NotUnimodular:
        return False
    return Ideal([vec[2][n] for n in levels[2]], ring).contains(vec[2][0] - 1) and vec[4][0] == 1


def test_6_reduction_soundness(criterion):
    def body():
        e6, d5 = representation("E6:w1"), representation("D5:w1")
        passed = total = 0
        for seed, ring in enumerate((ResidueRing(360), ZZ)):
            rng = random.Random(600 + seed)
            for _ in range(100):
                v = random_vector(rng, ring, 27, bound=999)
                trace = []
                word = reduce_e6(v, trace)
                total += 1
                passed += apply_word(e6, word, v)[0] == 1 and _boundaries_ok(ring, trace)
            for _ in range(100):
                v = random_vector(rng, ring, 10, bound=999)
                total += 1
                passed += apply_word(d5, reduce_dl(v), v)[0] == 1
        return passed == total == 400, f"{passed}/{total} (E6 and D5, Z/360 and Z)"
    _run(criterion, 6, "unimodular reduction soundness", 120, body)


def test_7_transitivity_sweep(criterion):
    def body():
        ctx = universal_context()
        delta = named_subsystem("A1+D6@E7")
        phi = delta.ambient
        a1 = phi.simple_root(1)
        xi, zeta = ctx.ring.gen("xi"), ctx.ring.gen("zeta")
        good = 0
        for r in delta.complement:
            word = find_weyl_conjugator(delta, r, a1)
            cert = general_z_membership(r, xi, zeta, ctx)
            good += apply_weyl_word(phi, word, r) == a1 and None not in cert.tags and cert.check()
        return good == len(delta.complement) == 64, f"{good}/64"
    _run(criterion, 7, "Weyl transitivity and membership certificates", 120, body)


def _asr_contract(row, t):
    ring = row[0].ring
    new = [r + ti * row[-1] for r, ti in zip(row, t)]
    if all(x.is_zero() for x in new):
        return all(x.is_zero() for x in row)
    old = set(maximal_ideals_containing(Ideal(row, ring))) if any(not x.is_zero() for x in row) else None
    got = set(maximal_ideals_containing(Ideal(new, ring)))
    return old is None or got <= old


def test_8_asr_oracle(criterion):
    def body():
        rng = random.Random(800)
        rings = [ResidueRing(6), ResidueRing(360), ZZ]
        passed = 0
        for k in range(500):
            ring = rings[k % 3]
            n = rng.randint(3 if ring is ZZ else 2, 6)
            if ring is ZZ:
                row = [ring(rng.randint(-999, 999)) for _ in range(n)]
            else:
                row = [ring(rng.randrange(ring.modulus)) for _ in range(n)]
            passed += _asr_contract(row, asr_transform(row, n))
        return passed == 500, f"{passed}/500"
    _run(criterion, 8, "ASR oracle contract", None, body)


def test_9_specialization(criterion):
    def body():
        ctx = universal_context()
        xi, zeta = ctx.ring.gen("xi"), ctx.ring.gen("zeta")
        cert = z_membership_word(xi, zeta)
        e7 = representation("E7:w7")
        a1 = e7.system.simple_root(1)
        z9 = ResidueRing(9)
        s1 = specialize_certificate(cert, {"xi": z9(3), "zeta": z9(2)}, z9, [3])
        ok1 = s1.check() and s1.replay() == z_gen(e7, a1, z9(3), z9(2))
        dual = parse_ring("quot(poly(Z[1/2]; eps); eps^2)")
        eps = dual.gen("eps")
        s2 = specialize_certificate(cert, {"xi": eps, "zeta": dual(3)}, dual, [eps])
        ok2 = s2.check() and all(t != TAG_IDEAL or dual.is_nilpotent(l.scalar) for l, t in zip(s2.word, s2.tags))
        s3 = specialize_certificate(cert, {"xi": z9(0), "zeta": z9(2)}, z9, [3])
        ok3 = s3.replay().is_identity()
        return ok1 and ok2 and ok3, f"Z/9 {ok1}, Z[1/2][eps]/(eps^2) {ok2}, xi->0 {ok3}"
    _run(criterion, 9, "specialization of the universal certificate", None, body)
