"""Analysis and decomposition reports, as plain dicts and as text."""

import hashlib

from . import config
from .congruences import hom_h, is_congruence, is_congruence_free
from .core import (
    find_bicyclic_witness,
    green_relations,
    idempotents,
    is_0_simple,
    is_group,
    is_inverse_semigroup,
    semigroups_isomorphic,
    with_markers,
)
from .corpus import groups
from .document import dumps
from .errors import InvariantViolation
from .structure import decompose_brandt, is_completely_0_simple_inverse


def digest(S):
    return "sha256:" + hashlib.sha256(dumps(S).encode("utf-8")).hexdigest()


def identify_group(G):
    """Name of a corpus group isomorphic to ``G``, or ``None``."""
    if G.order > config.max_iso_order():
        return None
    for name, H in groups().items():
        if H.order == G.order and semigroups_isomorphic(G, H) is not None:
            return name
    return None


def _blocks(c):
    return [list(b) for b in c.blocks()]


def analyze(S):
    """Flags, counts and witnesses for ``S``.

    A flag is ``None`` when it does not apply (no zero for the 0-simple
    family, order 1 for congruence-freeness).  ``checks`` names the check
    behind every flag.
    """
    digest_ = digest(S)
    S = with_markers(S)
    flags = {}
    checks = {}
    witnesses = {}

    inv = is_inverse_semigroup(S)
    flags["inverse"] = inv.holds
    checks["inverse"] = "regularity and idempotent-commutation scan"
    if not inv:
        witnesses["inverse"] = {"kind": inv.witness[0], "elements": list(inv.witness[1:])}

    flags["group"] = is_group(S)
    checks["group"] = "identity search and Latin-square test"

    decomposition = None
    if S.zero is None:
        flags["0-simple"] = None
        flags["completely-0-simple"] = None
        checks["0-simple"] = checks["completely-0-simple"] = "not applicable: no zero"
    else:
        flags["0-simple"] = is_0_simple(S)
        checks["0-simple"] = "principal two-sided ideal scan"
        flags["completely-0-simple"] = is_completely_0_simple_inverse(S) if inv else None
        checks["completely-0-simple"] = (
            "primitive idempotent scan" if inv else "not evaluated: not an inverse semigroup"
        )
        if flags["completely-0-simple"]:
            dec = decompose_brandt(S)
            decomposition = {
                "lambda": dec.lam,
                "group_order": dec.group.order,
                "group_name": identify_group(dec.group),
                "group_table": dec.group.table.tolist(),
            }

    if S.order < 2:
        flags["congruence-free"] = None
        checks["congruence-free"] = "not applicable: order 1"
    elif decomposition is not None and decomposition["group_order"] >= 2:
        _, ker = hom_h(dec.labelled(S))
        if not is_congruence(S, ker):
            raise InvariantViolation("kernel of h failed the congruence check")
        flags["congruence-free"] = False
        checks["congruence-free"] = "kernel of h, validated as a congruence"
        witnesses["congruence-free"] = {"source": "kernel of h", "blocks": _blocks(ker)}
    elif S.order > config.max_scan_order():
        flags["congruence-free"] = None
        checks["congruence-free"] = f"skipped: order above {config.max_scan_order()}"
    else:
        free = is_congruence_free(S)
        flags["congruence-free"] = free.holds
        checks["congruence-free"] = "all-pairs principal congruence scan"
        if not free:
            witnesses["congruence-free"] = {"source": "principal congruence scan", "blocks": _blocks(free.witness)}

    if S.identity is not None:
        w = find_bicyclic_witness(S)
        flags["bicyclic-free"] = w is None
        checks["bicyclic-free"] = "exhaustive pq = 1, qp != 1 pair scan"
        if w is not None:
            witnesses["bicyclic-free"] = {"p": w[0], "q": w[1]}

    return {
        "input_digest": digest_,
        "order": S.order,
        "zero": S.zero,
        "identity": S.identity,
        "flags": flags,
        "checks": checks,
        "idempotent_count": len(idempotents(S)),
        "green_class_counts": green_relations(S).counts(),
        "decomposition": decomposition,
        "witnesses": witnesses,
    }


def decomposition_report(S):
    d = decompose_brandt(S)
    return {
        "input_digest": digest(S),
        "lambda": d.lam,
        "group_order": d.group.order,
        "group_name": identify_group(d.group),
        "base_idempotent": d.blocks.idempotents[0],
        "idempotents": list(d.blocks.idempotents),
        "transversal": list(d.blocks.transversal),
        "group_elements": list(d.group_members),
        "group_table": d.group.table.tolist(),
        "iso": d.iso.image.tolist(),
    }


def _yes_no(v):
    return {True: "yes", False: "no", None: "n/a"}[v]


def format_analysis(r):
    lines = [f"order: {r['order']}", f"digest: {r['input_digest']}"]
    for key in ("inverse", "group", "0-simple", "completely-0-simple", "congruence-free", "bicyclic-free"):
        if key not in r["flags"]:
            continue
        line = f"{key}: {_yes_no(r['flags'][key])}"
        w = r["witnesses"].get(key)
        if key == "congruence-free" and w:
            line += f" (witness: {w['source']}, {len(w['blocks'])} blocks)"
        elif key == "inverse" and w:
            line += f" (witness: {w['kind']} {' '.join(map(str, w['elements']))})"
        elif key == "bicyclic-free" and w:
            line += f" (witness: p={w['p']} q={w['q']})"
        line += f"  [{r['checks'][key]}]"
        lines.append(line)
    lines.append(f"idempotents: {r['idempotent_count']}")
    g = r["green_class_counts"]
    lines.append("green classes: " + " ".join(f"{k}={g[k]}" for k in "RLHDJ"))
    d = r["decomposition"]
    if d is not None:
        name = f" ({d['group_name']})" if d["group_name"] else ""
        lines.append(f"decomposition: lambda={d['lambda']}, group order {d['group_order']}{name}")
    return "\n".join(lines) + "\n"


def format_decomposition(r):
    name = f" ({r['group_name']})" if r["group_name"] else ""
    lines = [
        f"lambda: {r['lambda']}",
        f"group order: {r['group_order']}{name}",
        f"base idempotent: {r['base_idempotent']}",
        "idempotents: " + " ".join(map(str, r["idempotents"])),
        "transversal: " + " ".join(map(str, r["transversal"])),
        "group elements: " + " ".join(map(str, r["group_elements"])),
        "group table:",
    ]
    lines += ["  " + " ".join(map(str, row)) for row in r["group_table"]]
    lines.append("iso: " + " ".join(map(str, r["iso"])))
    return "\n".join(lines) + "\n"
