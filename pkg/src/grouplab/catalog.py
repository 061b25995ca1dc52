"""Standard permutation groups and the group mini-language.

Grammar: ``C<n>``, ``D<2n>``, ``Q8``, ``S<n>``, ``A<n>``, ``V4``, ``SL(2,3)``,
``PSL(2,q)``, ``PGL(2,q)``, ``PGammaL(2,q)``, products joined by ``x``
(``S3xA5``), and ``file:<path>`` for a permutation file whose first line is
``degree <d>`` followed by one generator per line in cycle notation.
"""

from __future__ import annotations

import re
from functools import lru_cache
from pathlib import Path

import numpy as np

from .errors import ParseError
from .fields import field_of_order
from .groups import GroupTable, direct_product, group_from_permutations


def cyclic(n: int) -> GroupTable:
    if n < 1:
        raise ParseError("C<n> needs n >= 1")
    gens = [list(range(2, n + 1)) + [1]] if n > 1 else []
    return group_from_permutations(n, gens, label=f"C{n}")


def dihedral(order: int) -> GroupTable:
    """Dihedral group of the given (even) order."""
    if order < 2 or order % 2:
        raise ParseError("D<2n> needs an even order >= 2")
    n = order // 2
    if n == 1:
        return group_from_permutations(2, ["(1 2)"], label="D2")
    if n == 2:
        return group_from_permutations(4, ["(1 2)(3 4)", "(1 3)(2 4)"], label="D4")
    rot = list(range(2, n + 1)) + [1]
    refl = [1] + list(range(n, 1, -1))
    return group_from_permutations(n, [rot, refl], label=f"D{order}")


def symmetric(n: int) -> GroupTable:
    if n < 1:
        raise ParseError("S<n> needs n >= 1")
    if n == 1:
        return group_from_permutations(1, [], label="S1")
    gens = ["(1 2)"] + ([list(range(2, n + 1)) + [1]] if n > 2 else [])
    return group_from_permutations(n, gens, label=f"S{n}")


def alternating(n: int) -> GroupTable:
    if n < 1:
        raise ParseError("A<n> needs n >= 1")
    gens = [f"(1 2 {i})" for i in range(3, n + 1)]
    return group_from_permutations(max(n, 1), gens, label=f"A{n}")


def klein_four() -> GroupTable:
    return group_from_permutations(4, ["(1 2)(3 4)", "(1 3)(2 4)"], label="V4")


def quaternion() -> GroupTable:
    """Q8 by its left-regular action; points 1..8 are 1, i, j, k, -1, -i, -j, -k."""
    # unit table of i, j, k with signs
    unit = {("1", u): (u, 1) for u in "1ijk"}
    unit.update({(u, "1"): (u, 1) for u in "1ijk"})
    unit.update({("i", "i"): ("1", -1), ("j", "j"): ("1", -1), ("k", "k"): ("1", -1),
                 ("i", "j"): ("k", 1), ("j", "i"): ("k", -1), ("j", "k"): ("i", 1),
                 ("k", "j"): ("i", -1), ("k", "i"): ("j", 1), ("i", "k"): ("j", -1)})
    elems = [(u, s) for s in (1, -1) for u in "1ijk"]
    pos = {e: n for n, e in enumerate(elems)}

    def left(x):
        out = []
        for (u, s) in elems:
            v, t = unit[(x, u)]
            out.append(pos[(v, s * t)] + 1)
        return out

    return group_from_permutations(8, [left("i"), left("j")], label="Q8")


def sl23() -> GroupTable:
    """SL(2,3) acting on the eight nonzero vectors of F_3^2."""
    vecs = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]
    pos = {v: n for n, v in enumerate(vecs)}

    def act(m):
        (a, b), (c, d) = m
        return [pos[((a * x + b * y) % 3, (c * x + d * y) % 3)] + 1 for x, y in vecs]

    return group_from_permutations(8, [act(((1, 1), (0, 1))), act(((1, 0), (1, 1)))],
                                   label="SL(2,3)")


def _projective_line_gens(q: int, kind: str) -> tuple[int, list[list[int]]]:
    """Generators of PSL/PGL/PGammaL(2,q) on the q+1 points of the projective line.

    Points ``0..q-1`` are field codes, point ``q`` is infinity.
    """
    F = field_of_order(q)
    xs = F.elements()
    inf = q

    def perm(images):
        return [int(v) + 1 for v in images]

    shift = np.append(F.add(xs, 1), inf)
    w = F.primitive
    scale_by = F.mul(w, w) if kind == "PSL" else w
    scale = np.append(F.mul(scale_by, xs), inf)
    nz = xs[1:]
    flip = np.empty(q + 1, dtype=np.int64)
    flip[0], flip[inf] = inf, 0
    flip[1:q] = F.neg(F.inv(nz))
    gens = [perm(shift), perm(scale), perm(flip)]
    if kind == "PGammaL" and F.K > 1:
        gens.append(perm(np.append(F.frob(xs, 1), inf)))
    return q + 1, gens


def projective_group(kind: str, q: int) -> GroupTable:
    degree, gens = _projective_line_gens(q, kind)
    return group_from_permutations(degree, gens, label=f"{kind}(2,{q})")


def from_file(path: str) -> GroupTable:
    lines = [ln.strip() for ln in Path(path).read_text().splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError(f"{path}: empty group file")
    m = re.fullmatch(r"degree\s+(\d+)", lines[0])
    if not m:
        raise ParseError(f"{path}: first line must be 'degree <d>'")
    return group_from_permutations(int(m.group(1)), lines[1:], label=f"file:{path}")


_ATOMS = [
    (re.compile(r"C(\d+)"), lambda m: cyclic(int(m[1]))),
    (re.compile(r"D(\d+)"), lambda m: dihedral(int(m[1]))),
    (re.compile(r"Q8"), lambda m: quaternion()),
    (re.compile(r"S(\d+)"), lambda m: symmetric(int(m[1]))),
    (re.compile(r"A(\d+)"), lambda m: alternating(int(m[1]))),
    (re.compile(r"V4"), lambda m: klein_four()),
    (re.compile(r"SL\(2,3\)"), lambda m: sl23()),
    (re.compile(r"(PSL|PGL|PGammaL)\(2,(\d+)\)"), lambda m: projective_group(m[1], int(m[2]))),
]


def _split_product(spec: str) -> list[str]:
    parts, depth, cur = [], 0, ""
    for ch in spec:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "x" and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    return parts


def _atom(spec: str) -> GroupTable:
    for rx, build in _ATOMS:
        m = rx.fullmatch(spec)
        if m:
            return build(m)
    raise ParseError(f"unknown group {spec!r}")


@lru_cache(maxsize=64)
def parse_group(spec: str) -> GroupTable:
    """Build a group from the mini-language (results are cached)."""
    spec = spec.strip().replace(" ", "")
    if spec.startswith("file:"):
        return from_file(spec[5:])
    parts = _split_product(spec)
    if any(not p for p in parts):
        raise ParseError(f"malformed product {spec!r}")
    g = _atom(parts[0])
    for part in parts[1:]:
        g = direct_product(g, _atom(part))
    return g
