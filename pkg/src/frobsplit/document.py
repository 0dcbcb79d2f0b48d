"""Serialization of enumerated lattices: JSON documents, DOT graphs, tables.

Documents are plain dicts with JSON-native values only, so a serialize /
deserialize round trip is the identity. Bytes are deterministic for a given
input and tool version: keys sorted, no timestamps, one trailing newline.
"""

from __future__ import annotations

import json

from .lattice import CompatibleLattice, canonical_text

TOOL_NAME = "frobsplit"
TOOL_VERSION = "0.1.0"


def lattice_document(
    L: CompatibleLattice,
    count_convention: str = "all",
) -> dict:
    """JSON-serializable image of a lattice, members in canonical order."""
    members = []
    n_proper = 0
    n_primes = 0
    for i, m in enumerate(L.members):
        is_prime = L.is_prime(i)
        is_trivial = L.is_trivial(i)
        n_proper += 0 if is_trivial else 1
        n_primes += 1 if is_prime else 0
        members.append(
            {
                "gens": list(canonical_text(m)),
                "dim": L.dims[i],
                "is_prime": is_prime,
                "is_trivial": is_trivial,
                "verified": bool(L.verified[i]) if L.verified else False,
            }
        )
    counts = {
        "all": len(L.members),
        "proper_nonzero": n_proper,
        "primes": n_primes,
    }
    if count_convention not in counts and count_convention != "proper-nonzero":
        raise ValueError(f"unknown count convention {count_convention!r}")
    headline = counts["proper_nonzero"] if count_convention == "proper-nonzero" else counts["all"]
    verification = {
        "passed": bool(L.report.passed) if L.report else False,
        "checks": [
            {"name": c.name, "passed": c.passed, "details": c.details}
            for c in (L.report.checks if L.report else ())
        ],
    }
    return {
        "tool": {"name": TOOL_NAME, "version": TOOL_VERSION},
        "input": {
            "p": L.splitting.p,
            "vars": list(L.splitting.ring.vars),
            "f": str(L.splitting.f),
        },
        "p": L.splitting.p,
        "vars": list(L.splitting.ring.vars),
        "members": members,
        "hasse": [list(e) for e in L.hasse_edges],
        "count": headline,
        "count_convention": count_convention,
        "counts": counts,
        "verification": verification,
    }


def to_json_bytes(doc: dict) -> bytes:
    return (json.dumps(doc, sort_keys=True, indent=2) + "\n").encode("utf-8")


def from_json_bytes(data: bytes) -> dict:
    return json.loads(data.decode("utf-8"))


def _node_label(member: dict) -> str:
    gens = member["gens"]
    inner = ", ".join(gens) if gens else "0"
    return f"({inner})\\ndim {member['dim']}"


def to_dot(doc: dict) -> str:
    """Hasse diagram as a DOT digraph, edges from smaller to larger ideals.

    Trivial nodes (the zero and unit ideals) are drawn dashed.
    """
    lines = [
        "digraph compatible_lattice {",
        "  rankdir=BT;",
        '  node [shape=box, fontname="monospace"];',
    ]
    for i, member in enumerate(doc["members"]):
        style = ', style="dashed"' if member["is_trivial"] else ""
        peripheries = ', peripheries="2"' if member["is_prime"] else ""
        lines.append(f'  n{i} [label="{_node_label(member)}"{style}{peripheries}];')
    for i, j in doc["hasse"]:
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_table(doc: dict) -> str:
    """Tab-separated member table, one row per lattice member."""
    rows = ["index\tdim\tis_prime\tis_trivial\tverified\tgens"]
    for i, member in enumerate(doc["members"]):
        rows.append(
            "\t".join(
                [
                    str(i),
                    str(member["dim"]),
                    str(int(member["is_prime"])),
                    str(int(member["is_trivial"])),
                    str(int(member["verified"])),
                    ", ".join(member["gens"]) if member["gens"] else "(0)",
                ]
            )
        )
    return "\n".join(rows) + "\n"
