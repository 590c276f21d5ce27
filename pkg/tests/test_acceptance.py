"""Exit criteria, one test per criterion.

Each test prints a single PASS/FAIL line (also collected into the terminal
summary) with its measured runtime against the expected limit.  A criterion
passes only if every check holds and it finishes within the limit.
"""

import itertools
import json
import random
import subprocess
import sys
import time
from contextlib import contextmanager

import numpy as np
import pytest

import oracles
from conftest import ACCEPTANCE_LINES
from invsemi import corpus
from invsemi.bicyclic import ONE, P, Q, bicyclic_mul
from invsemi.congruences import (
    Congruence,
    all_congruences,
    hom_h,
    is_congruence,
    is_congruence_free,
    principal_congruence,
)
from invsemi.constructions import brandt_extension, matrix_units
from invsemi.core import (
    find_bicyclic_witness,
    idempotents,
    inverses,
    is_group,
    is_homomorphism,
    is_inverse_semigroup,
    relabel,
    semigroups_isomorphic,
)
from invsemi.document import dumps, load, loads
from invsemi.structure import block_partition, block_translation, decompose_brandt, is_completely_0_simple_inverse

pytestmark = pytest.mark.acceptance


@contextmanager
def criterion(number, title, limit):
    """Collect failures, time the block and report one line."""
    failures = []
    start = time.perf_counter()
    try:
        yield failures
    except Exception as exc:  # report, then re-raise below
        failures.append(f"{type(exc).__name__}: {exc}")
    elapsed = time.perf_counter() - start
    if elapsed > limit:
        failures.append(f"runtime {elapsed:.2f}s exceeds {limit}s")
    status = "PASS" if not failures else "FAIL"
    line = f"[{status}] criterion {number}: {title} ({elapsed:.2f}s, limit {limit}s)"
    if failures:
        line += " -- " + "; ".join(failures[:3])
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert not failures, line


def test_criterion_1_brandt_round_trip():
    rng = np.random.default_rng(1)
    with criterion(1, "Brandt round trip over groups of order 1..8, lambda 1..4", 10) as failures:
        groups = corpus.groups()
        assert sorted({G.order for G in groups.values()}) == list(range(1, 9))
        for (name, G), lam in itertools.product(groups.items(), range(1, 5)):
            B = brandt_extension(G, lam)
            S = relabel(B, rng.permutation(B.order))
            d = decompose_brandt(S)
            if d.lam != lam:
                failures.append(f"B{lam}({name}): lambda {d.lam}")
            if semigroups_isomorphic(d.group, G) is None:
                failures.append(f"B{lam}({name}): group not isomorphic")
            if not (d.iso.is_bijective() and is_homomorphism(S, d.target, d.iso)):
                failures.append(f"B{lam}({name}): iso check failed")


def test_criterion_2_matrix_units_congruence_free():
    with criterion(2, "matrix_units(2..4) congruence-free, exhaustive at order <= 8", 5) as failures:
        for lam, order in ((2, 5), (3, 10), (4, 17)):
            M = matrix_units(lam)
            if M.order != order:
                failures.append(f"MU{lam} has order {M.order}")
            if not is_congruence_free(M):
                failures.append(f"MU{lam} scan found a proper congruence")
            if M.order <= 8:
                t = oracles.rows(M)
                congs = [p for p in oracles.set_partitions(M.order) if oracles.is_compatible(t, p)]
                if len(congs) != 2:
                    failures.append(f"MU{lam}: enumeration found {len(congs)} congruences")


def test_criterion_3_brandt_not_free():
    with criterion(3, "B_lambda(G), |G| >= 2: not free, kernel of h has lambda^2 + 1 blocks", 5) as failures:
        checked = 0
        for name, B in corpus.brandt_semigroups().items():
            lam = 1 + max(lab[0] for lab in B.labels[1:])
            if (B.order - 1) // (lam * lam) < 2:
                continue
            checked += 1
            v = is_congruence_free(B)
            if v.holds or not is_congruence(B, v.witness):
                failures.append(f"{name}: scan witness missing or invalid")
            _, ker = hom_h(B)
            if not is_congruence(B, ker) or ker.num_blocks != lam * lam + 1:
                failures.append(f"{name}: kernel of h invalid ({ker.num_blocks} blocks)")
            if ker.is_identity() or ker.is_universal():
                failures.append(f"{name}: kernel of h is trivial")
        if checked < 50:
            failures.append(f"only {checked} Brandt semigroups checked")


def test_criterion_4_block_structure():
    with criterion(4, "block partition and translation bijections", 5) as failures:
        members = {n: S for n, S in corpus.semigroups().items()
                   if S.zero is not None and is_completely_0_simple_inverse(S)}
        if len(members) < 20:
            failures.append(f"only {len(members)} completely 0-simple inverse fixtures")
        for name, S in members.items():
            bp = block_partition(S)
            G = decompose_brandt(S).group
            blocks = bp.blocks()
            if len(blocks) != bp.lam ** 2 or any(len(b) != G.order for b in blocks.values()):
                failures.append(f"{name}: block sizes")
            cover = sorted(x for b in blocks.values() for x in b)
            if cover != [x for x in range(S.order) if x != S.zero]:
                failures.append(f"{name}: blocks do not partition S minus zero")
            if len(idempotents(S)) != bp.lam + 1:
                failures.append(f"{name}: idempotent count")
            t = S.table
            inv = inverses(S)
            coords = list(itertools.product(range(bp.lam), repeat=2))
            for src, dst in itertools.product(coords, coords):
                f = block_translation(S, bp, src, dst)
                source, target = blocks[src], blocks[dst]
                images = [target[i] for i in f.image]
                if sorted(images) != sorted(target):
                    failures.append(f"{name}: {src}->{dst} not onto")
                # the map is s -> u s v with u in block (c, a) and v in block (b, d);
                # check it against x x^-1 and x^-1 x of the images directly
                for y in images:
                    if (t[y, inv[y]], t[inv[y], y]) != (bp.idempotents[dst[0]], bp.idempotents[dst[1]]):
                        failures.append(f"{name}: {src}->{dst} leaves the block")
                        break


def test_criterion_5_no_bicyclic_in_finite_monoids():
    with criterion(5, "no bicyclic witness in finite monoids; bicyclic arithmetic", 10) as failures:
        monoids = corpus.monoids()
        if len(monoids) < 30:
            failures.append(f"only {len(monoids)} monoids")
        adjoined = [n for n in monoids if n.endswith("^1")]
        if not any(n.startswith("B") for n in adjoined) or not any(n.startswith("Rees") for n in adjoined):
            failures.append("constructions with adjoined identity missing")
        for name, M in monoids.items():
            if find_bicyclic_witness(M) is not None:
                failures.append(f"{name}: bicyclic witness")
        if bicyclic_mul(P, Q) != ONE or bicyclic_mul(Q, P) == ONE:
            failures.append("pq = 1, qp != 1 fails")
        bad = oracles.bicyclic_assoc_exhaustive(bicyclic_mul, 20)
        if bad is not None:
            failures.append(f"associativity fails at {bad}")
        rnd = random.Random(5)
        for _ in range(10_000):
            x = (rnd.randint(0, 40), rnd.randint(0, 40))
            y = (rnd.randint(0, 40), rnd.randint(0, 40))
            word = "q" * x[0] + "p" * x[1] + "q" * y[0] + "p" * y[1]
            if bicyclic_mul(x, y) != oracles.rewrite_bicyclic(word):
                failures.append(f"rewrite mismatch at {x} {y}")
                break


def test_criterion_6_unique_idempotent_means_group():
    with criterion(6, "inverse with a unique idempotent is a group", 1) as failures:
        hits = 0
        for name, S in corpus.semigroups().items():
            if is_inverse_semigroup(S) and len(idempotents(S)) == 1:
                hits += 1
                if not is_group(S):
                    failures.append(name)
        if hits < 10:
            failures.append(f"only {hits} fixtures exercised")


def test_criterion_7_lattice_matches_partition_enumeration():
    with criterion(7, "all_congruences equals partition enumeration at order <= 8", 30) as failures:
        fixtures = corpus.small(8)
        if not any(S.order == 8 for S in fixtures.values()):
            failures.append("no fixture of order 8")
        for name, S in fixtures.items():
            expected = set()
            for labels in oracles.set_partitions(S.order):
                c = Congruence(labels)
                if is_congruence(S, c):
                    expected.add(c)
            got = set(all_congruences(S))
            if got != expected:
                failures.append(f"{name}: {len(got)} vs {len(expected)}")
            for x, y in itertools.combinations(range(S.order), 2):
                p = principal_congruence(S, x, y)
                if not all(p <= c for c in expected if c.related(x, y)):
                    failures.append(f"{name}: principal ({x}, {y}) is not least")
                    break


def _cli(*argv, stdin=None):
    proc = subprocess.run([sys.executable, "-m", "invsemi", *argv], capture_output=True, text=True, input=stdin)
    return proc.returncode, proc.stdout, proc.stderr


def test_criterion_8_cli_contract(tmp_path):
    with criterion(8, "CLI round trip byte-identical; exit codes 0, 1, 2", 30) as failures:
        code, doc, _ = _cli("construct", "brandt", "--group", "cyclic:2", "--lambda", "3")
        path = tmp_path / "b3z2.json"
        path.write_text(doc)
        if code != 0 or load(path).order != 19:
            failures.append("construct brandt")
        if dumps(load(path)) != doc:
            failures.append("round trip not byte-identical")
        code, again, _ = _cli("construct", "adjoin-identity", "--input", "-", stdin=doc)
        if code != 0 or dumps(loads(again)) != again:
            failures.append("stdin round trip")
        code, out, _ = _cli("analyze", str(path), "--json")
        flags = json.loads(out)["flags"] if code == 0 else {}
        if flags.get("congruence-free") is not False:
            failures.append("analyze exit 0 path")
        mu3 = tmp_path / "mu3.json"
        mu3.write_text(dumps(matrix_units(3)))
        if _cli("congruences", str(mu3), "--check-free")[:2] != (0, "true\n"):
            failures.append("exit 0: matrix units free")
        if _cli("congruences", str(path), "--check-free")[0] != 1:
            failures.append("exit 1: Brandt over Z2 not free")
        if _cli("bicyclic", "mul", "p", "q")[:2] != (0, "1\n"):
            failures.append("bicyclic mul p q")
        if _cli("bicyclic", "idem", "q")[0] != 1:
            failures.append("exit 1: q not idempotent")
        if _cli("construct", "brandt", "--lambda", "0")[0] != 2:
            failures.append("exit 2: usage error")
        broken = tmp_path / "broken.json"
        broken.write_text(doc.replace('"table": [\n    [0,', '"table": [\n    [1,', 1))
        code, _, err = _cli("analyze", str(broken))
        if code != 2 or "invsemi: " not in err:
            failures.append("exit 2: malformed document")
        runs = {_cli("analyze", str(path)) for _ in range(2)}
        if len(runs) != 1:
            failures.append("analyze output not deterministic")

