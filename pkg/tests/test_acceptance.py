"""Exit criteria. Every check is an exact equality; runtime bounds are wall clock.

Each test records one PASS/FAIL line, printed in the pytest terminal summary.
"""

import time

import numpy as np
import pytest

from conftest import record_acceptance
from indefdil import (
    Operator,
    ando_search,
    classify,
    compress,
    egervary_dilate,
    enumerate_self_adjoint,
    gf2,
    gf2k,
    halmos_dilate,
    inner,
    isometric_sznagy_dilate,
    parse_document,
    random_self_adjoint,
    seq_inner,
    serialize_document,
    space_make,
    sznagy_dilate,
    verify_dilation,
)
from indefdil.errors import (
    ElementOutOfRange,
    GramNotHermitian,
    GramSingular,
    InvalidInvolution,
    ParseError,
    ReducibleModulus,
)
from indefdil.seqspace import UNILATERAL, delta, random_seq
from test_document import _random_document


def _gate(name, passed, detail=""):
    record_acceptance(name, passed, detail)
    assert passed, f"{name}: {detail}"


def _identity_spaces():
    return [space_make(gf2(), d) for d in (1, 2, 3)]


def test_1_halmos_exhaustive():
    start = time.perf_counter()
    counts, failures = [], 0
    for s in _identity_spaces():
        ops = list(enumerate_self_adjoint(s))
        counts.append(len(ops))
        for t in ops:
            u = halmos_dilate(t)
            eye = Operator.identity(u.space)
            ok = u @ u.adjoint() == eye and u.adjoint() @ u == eye and compress(u, 0) == t
            ok = ok and compress(u.adjoint(), 0) == t.adjoint()
            failures += not ok
    elapsed = time.perf_counter() - start
    passed = counts == [2, 8, 64] and failures == 0 and elapsed < 1.0
    _gate("1 halmos exhaustive", passed, f"counts={counts} failures={failures} time={elapsed:.3f}s<1s")


def test_2_egervary_exhaustive():
    start = time.perf_counter()
    failures = 0
    for s in _identity_spaces():
        for t in enumerate_self_adjoint(s):
            for n in (1, 2, 3, 4):
                u = egervary_dilate(t, n)
                ustar = u.adjoint()
                p, q = Operator.identity(u.space), Operator.identity(u.space)
                for k in range(1, n + 1):
                    p, q = p @ u, q @ ustar
                    if compress(p, 0) != t**k or compress(q, 0) != t.adjoint() ** k:
                        failures += 1
    elapsed = time.perf_counter() - start

    v = space_make(gf2(), 1)
    zero = Operator(v, [[0]])
    u = egervary_dilate(zero, 1)
    second = compress(u @ u, 0)
    tight = second == Operator.identity(v) and second != zero**2
    passed = failures == 0 and tight and elapsed < 5.0
    _gate(
        "2 egervary exhaustive",
        passed,
        f"failures={failures} witness(T=0,N=1,k=2)={second.rows()} time={elapsed:.3f}s<5s",
    )


def test_3_egervary_n1_is_halmos():
    mismatches = sum(
        egervary_dilate(t, 1) != halmos_dilate(t)
        for s in _identity_spaces()
        for t in enumerate_self_adjoint(s)
    )
    _gate("3 egervary(T,1) == halmos(T)", mismatches == 0, f"mismatches={mismatches}")


RINGS_4_5 = [gf2(), gf2k(2, 0b111), gf2k(2, 0b111, frobenius=True)]
SAMPLES = 200
MAX_N = 8


def _samples(ring, salt):
    """200 (T, x, y) triples: d cycles through 1..3, window through 1..8."""
    rng = np.random.default_rng(1000 * salt + ring.order + ring.spec.star)
    spaces = {d: space_make(ring, d) for d in (1, 2, 3)}
    for i in range(SAMPLES):
        s = spaces[1 + i % 3]
        yield random_self_adjoint(s, rng), rng, 1 + i % 8


def test_4_bilateral_sznagy():
    start = time.perf_counter()
    bad = 0
    for ring in RINGS_4_5:
        for t, rng, window in _samples(ring, 4):
            op = sznagy_dilate(t)
            x = random_seq(t.space, rng, window)
            y = random_seq(t.space, rng, window)
            ux = op.apply(x)
            ok = op.apply_adjoint(ux) == x and op.apply(op.apply_adjoint(x)) == x
            ok = ok and seq_inner(ux, op.apply(y)) == seq_inner(x, y)
            powers = op.compress_powers(MAX_N)
            apowers = op.compress_powers(MAX_N, adjoint=True)
            tn, an = Operator.identity(t.space), Operator.identity(t.space)
            for n in range(MAX_N):
                tn, an = tn @ t, an @ t.adjoint()
                ok = ok and powers[n] == tn and apowers[n] == an
            bad += not ok
    elapsed = time.perf_counter() - start
    _gate("4 bilateral sz.-nagy", bad == 0 and elapsed < 10.0,
          f"failures={bad}/{SAMPLES * len(RINGS_4_5)} time={elapsed:.3f}s<10s")


def test_5_isometric_sznagy():
    start = time.perf_counter()
    bad = 0
    for ring in RINGS_4_5:
        for t, rng, window in _samples(ring, 5):
            op = isometric_sznagy_dilate(t)
            x = random_seq(t.space, rng, window, UNILATERAL)
            y = random_seq(t.space, rng, window, UNILATERAL)
            ok = op.apply_adjoint(op.apply(x)) == x
            ok = ok and seq_inner(op.apply(x), op.apply(y)) == seq_inner(x, y)
            powers = op.compress_powers(MAX_N)
            apowers = op.compress_powers(MAX_N, adjoint=True)
            tn, an = Operator.identity(t.space), Operator.identity(t.space)
            for n in range(MAX_N):
                tn, an = tn @ t, an @ t.adjoint()
                ok = ok and powers[n] == tn and apowers[n] == an
            bad += not ok
    elapsed = time.perf_counter() - start

    v = space_make(gf2(), 1)
    op = isometric_sznagy_dilate(Operator(v, [[1]]))
    probe = delta(1, v.basis(0), UNILATERAL)
    image = op.apply(op.apply_adjoint(probe))
    not_unitary = image.is_zero() and image != probe
    _gate("5 isometric sz.-nagy", bad == 0 and not_unitary,
          f"failures={bad}/{SAMPLES * len(RINGS_4_5)} UU*(delta_1)=0:{not_unitary} time={elapsed:.3f}s")


def test_6_indefinite_geometry(hyperbolic):
    e1 = hyperbolic.basis(0)
    isotropic = inner(e1, e1).value == 0
    rng = np.random.default_rng(6)
    adj_fail = 0
    for _ in range(1000):
        a = Operator(hyperbolic, rng.integers(0, 2, (2, 2)))
        x, y = hyperbolic.random_vector(rng), hyperbolic.random_vector(rng)
        adj_fail += inner(a @ x, y) != inner(x, a.adjoint() @ y)
    theorem_fail = 0
    ops = list(enumerate_self_adjoint(hyperbolic))
    for t in ops:
        reports = [verify_dilation(t, "halmos")]
        reports += [verify_dilation(t, "egervary", n=n) for n in (1, 2, 3, 4)]
        reports += [verify_dilation(t, k, max_power=MAX_N) for k in ("sznagy", "isometric")]
        theorem_fail += not all(r.ok for r in reports)
    passed = isotropic and adj_fail == 0 and theorem_fail == 0 and len(ops) == 8
    _gate("6 indefinite geometry", passed,
          f"<e1,e1>=0:{isotropic} adjoint_failures={adj_fail}/1000 "
          f"theorem_failures={theorem_fail}/{len(ops)}")


def test_7_cross_oracle(F4bar):
    bad = 0
    rng = np.random.default_rng(7)
    spaces = [space_make(gf2(), 3), space_make(gf2(), 2, [[0, 1], [1, 0]]),
              space_make(F4bar, 2), space_make(F4bar, 2, [[0, 2], [3, 0]])]
    for s in spaces:
        for _ in range(25):
            t = random_self_adjoint(s, rng)
            u = egervary_dilate(t, 4)
            lazy = sznagy_dilate(t).compress_powers(4)
            un = Operator.identity(u.space)
            for n in range(1, 5):
                un = un @ u
                direct = t**n
                bad += not (direct == compress(un, 0) == lazy[n - 1])
    _gate("7 cross-oracle agreement", bad == 0, f"disagreements={bad}/400")


def test_8_ando_search():
    v = space_make(gf2(), 1)
    ops = [Operator(v, [[0]]), Operator(v, [[1]])]
    found = 0
    for t1 in ops:
        for t2 in ops:
            res = ando_search(t1, t2)
            if res.found:
                u1, u2 = res.witness
                # independent re-verification, not reusing the search's filters
                ok = (
                    classify(u1).unitary
                    and classify(u2).unitary
                    and u1 @ u2 == u2 @ u1
                    and u1.entries[0, 0] == t1.entries[0, 0]
                    and u2.entries[0, 0] == t2.entries[0, 0]
                )
                found += ok
    _gate("8 ando search", found == 4, f"verified_pairs={found}/4")


MALFORMED = [
    ("%IIPM v0\nring gf2k k=1 modulus=2 star=identity\n", ParseError),
    ("%IIPM v1\nring gf2k k=1 modulus=2 star=identity\nbogus\n", ParseError),
    ("%IIPM v1\nring gf2k k=2 modulus=5 star=identity\n", ReducibleModulus),
    ("%IIPM v1\nring gf2k k=3 modulus=b star=frobenius:1\n", InvalidInvolution),
    ("%IIPM v1\nring gf2k k=1 modulus=2 star=identity\nspace dim=2\ngram\n1 1\n1 1\n", GramSingular),
    ("%IIPM v1\nring gf2k k=1 modulus=2 star=identity\nspace dim=2\ngram\n1 1\n0 1\n", GramNotHermitian),
    ("%IIPM v1\nring gf2k k=2 modulus=7 star=identity\noperator name=T\n4\n", ElementOutOfRange),
]


def test_9_format_round_trip():
    mismatches = 0
    for seed in range(500):
        doc = _random_document(seed)
        text = serialize_document(doc)
        mismatches += parse_document(text) != doc
    rejected = 0
    for text, error in MALFORMED:
        with pytest.raises(error):
            parse_document(text)
        rejected += 1
    _gate("9 format round-trip", mismatches == 0 and rejected == len(MALFORMED),
          f"mismatches={mismatches}/500 malformed_rejected={rejected}/{len(MALFORMED)}")
