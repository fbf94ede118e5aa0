"""Deciding when a skew Q-function is a multiple of a single Q-function.

Homogeneous shapes fall into five families. For the rest, explicit amenable
tableaux whose content differs from the lex-largest one certify a second
term in the expansion.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .amenability import is_amenable
from .canonical import band_chain, fill_bands
from .errors import InvalidShape, PreconditionViolated, WitnessError
from .shapes import (
    SkewShape,
    StrictPartition,
    cells_of,
    components,
    first_box,
    last_box,
    normalize_basic,
    ot_cells,
    partition_difference,
)
from .tableaux import Tableau, content, letter

log = logging.getLogger(__name__)

FAMILIES = ("i", "ii", "iii", "iv", "v")


@dataclass(frozen=True)
class Witness:
    tableau: Tableau
    lemma: str
    on_transpose: bool = False

    @property
    def content(self) -> StrictPartition:
        return StrictPartition(content(self.tableau).total)


@dataclass(frozen=True)
class Homogeneous:
    k: int
    nu: StrictPartition
    family: str


@dataclass(frozen=True)
class NotHomogeneous:
    witness: Witness | None = None
    second_content: StrictPartition | None = None


ClassificationResult = Homogeneous | NotHomogeneous


# -- family patterns -------------------------------------------------------------

def staircase_size(lam) -> int | None:
    """``r`` when ``lam == (r, r-1, ..., 1)``, else None."""
    lam = tuple(lam)
    if lam and lam == tuple(range(len(lam), 0, -1)):
        return len(lam)
    return None


def _consecutive(lam) -> bool:
    return all(a - b == 1 for a, b in zip(lam, lam[1:]))


def _alternating_tail(p: int, q: int) -> list[int]:
    """``p+q, p+q-2, ...`` down to ``max(p-q, q-p+2)``."""
    stop = max(p - q, q - p + 2)
    return list(range(p + q, stop - 1, -2))


def family_iii_nu(p: int, q: int, r: int) -> StrictPartition:
    head = list(range(p + q + r, p + q, -1))
    return StrictPartition(head + _alternating_tail(p, q))


def family_iv_nu(p: int, q: int) -> StrictPartition:
    return StrictPartition(_alternating_tail(p, q))


def match_family(lam, mu) -> Homogeneous | None:
    """First family among (i)..(v) whose pattern fits ``(lam, mu)``."""
    lam, mu = tuple(lam), tuple(mu)
    if not mu:
        return Homogeneous(1, StrictPartition(lam), "i")
    r = staircase_size(lam)
    if r is not None and 0 < len(mu) < r - 1:
        return Homogeneous(1, partition_difference(lam, mu), "ii")
    q = len(mu)
    if mu == tuple(range(q, 0, -1)) and _consecutive(lam):
        p = lam[-1]
        extra = len(lam) - q - 1
        if p >= 1 and extra >= 1:
            return Homogeneous(1, family_iii_nu(p, q, extra), "iii")
        if p >= 1 and extra == 0:
            return Homogeneous(1, family_iv_nu(p, q), "iv")
    if len(mu) == 1 and len(lam) >= 2:
        r = lam[1]
        if lam == (r + 2,) + tuple(range(r, 0, -1)) and mu == (r + 1,):
            return Homogeneous(2, StrictPartition((r + 1,) + tuple(range(r - 1, 0, -1))), "v")
    return None


# -- witnesses -------------------------------------------------------------------

def _check(t: Tableau, lemma: str, on_transpose: bool = False) -> Witness:
    problems = t.violations()
    if problems:
        raise WitnessError(f"{lemma} produced an invalid tableau: {problems[0]}")
    if not is_amenable(t):
        raise WitnessError(f"{lemma} produced a tableau that is not amenable")
    return Witness(t, lemma, on_transpose)


def _lowest_rightmost(cells) -> tuple[int, int]:
    low = max(x for x, _ in cells)
    return low, max(y for x, y in cells if x == low)


def _hom1(cells, on_transpose: bool) -> Witness | None:
    bands = band_chain(cells)
    base = fill_bands(bands)
    for comp in components(cells)[1:]:
        if len({x for x, _ in comp}) < 2:
            continue
        x, y = _lowest_rightmost(comp & bands[0])
        t = base.replace({(x, y): letter(2), (x - 1, y): letter(1)})
        return _check(t, "hom1", on_transpose)
    return None


def _hom2(cells) -> Witness | None:
    comps = components(cells)
    if len(comps) < 3:
        return None
    bands = band_chain(cells)
    x, y = _lowest_rightmost(comps[1] & bands[0])
    return _check(fill_bands(bands).replace({(x, y): letter(2)}), "hom2")


def _leftmost_column(comp) -> list:
    y0 = min(y for _, y in comp)
    return sorted(c for c in comp if c[1] == y0)


def _hom4(cells, on_transpose: bool) -> Witness | None:
    first = components(cells)[0]
    if len(_leftmost_column(first)) < 2:
        return None
    p1 = band_chain(cells)[0]
    trimmed = p1 - {last_box(components(p1)[0])}
    return _check(fill_bands(band_chain(cells, first=trimmed)), "hom4", on_transpose)


def _hom5(cells, on_transpose: bool) -> Witness | None:
    first = components(cells)[0]
    column = _leftmost_column(first)
    if len(column) != 1 or not any(x < column[0][0] for x, _ in first):
        return None
    p1 = band_chain(cells)[0]
    trimmed = p1 - {_lowest_rightmost(p1)}
    return _check(fill_bands(band_chain(cells, first=trimmed)), "hom5", on_transpose)


def witness_disconnected(shape) -> Witness | None:
    """A second-content witness for a disconnected basic shape.

    Tries each construction on the shape and then on its orthogonal
    transpose; a witness found on the transpose is flagged as such, since
    both shapes have the same expansion. ``None`` only for family (v).
    """
    cells = cells_of(shape)
    if len(components(cells)) < 2:
        raise PreconditionViolated("shape is connected")
    flipped = ot_cells(cells)
    return (
        _hom1(cells, False)
        or _hom1(flipped, True)
        or _hom2(cells)
        or _hom4(cells, False)
        or _hom5(cells, False)
        or _hom4(flipped, True)
        or _hom5(flipped, True)
    )


def witness_connected(shape) -> Witness:
    """A second-content witness built from a disconnected band.

    Uses the first band (after the first) with two or more components and
    the first adjacent pair of its components.
    """
    cells = cells_of(shape)
    bands = band_chain(cells)
    base = fill_bands(bands)
    for i, band in enumerate(bands[1:], start=2):
        comps = components(band)
        if len(comps) < 2:
            continue
        left, right = comps[0], comps[1]
        x, y = first_box(left)
        u, v = last_box(right)
        previous = bands[i - 2]
        if v >= y + 2:
            s = max(r for r, c in previous if c == v - 1)
            t = base.replace({(s, v - 1): letter(i), (s - 1, v - 1): letter(i - 1)})
            return _check(t, "comps1")
        if v == y + 1:
            s = max(r for r, c in band if c == y)
            top = next(r for (r, c), code in base.entries.items() if c == y and code == letter(i - 1))
            changes = {(a, y): base[(a + 1, y)] for a in range(top - 1, s)}
            below_next = i < len(bands) and (s + 1, y) in bands[i]
            changes[(s, y)] = letter(i + 1, below_next)
            return _check(base.replace(changes), "comps2")
        raise AssertionError(f"components of band {i} overlap in columns")
    raise PreconditionViolated("every band is connected")


def witness_applies(shape) -> bool:
    """Whether some witness construction covers this basic shape: it is
    disconnected, or a band after the first has two or more components."""
    cells = cells_of(shape)
    if not cells:
        return False
    if len(components(cells)) > 1:
        return True
    return any(len(components(b)) > 1 for b in band_chain(cells)[1:])


# -- classification --------------------------------------------------------------

def classify(shape: SkewShape) -> ClassificationResult:
    """Match the shape against the homogeneous families, or explain why not.

    A staircase outer shape is matched before normalizing, since the
    staircase rule holds for any inner shape.
    """
    if not shape.is_valid:
        raise InvalidShape(f"{shape.literal()} is not a valid skew shape")
    if shape.size and shape.inner and staircase_size(shape.outer):
        hit = match_family(shape.outer, shape.inner)
        if hit is not None and hit.family == "ii":
            return hit
    basic = normalize_basic(shape)
    hit = match_family(basic.outer, basic.inner)
    if hit is not None:
        return hit
    cells = basic.cells
    if len(components(cells)) > 1:
        witness = witness_disconnected(cells)
    else:
        try:
            witness = witness_connected(cells)
        except PreconditionViolated:
            witness = None
    return NotHomogeneous(witness, witness.content if witness else None)


def staircase_reduce(shape: SkewShape) -> StrictPartition:
    """The single constituent of a staircase skew shape.

    Walks the parts ``a, a-1, ..., 1``: a part of the inner shape at the top
    means its row is removed, otherwise the last column is removed and the
    part goes to the result.
    """
    a = staircase_size(shape.outer)
    if a is None and shape.outer:
        raise PreconditionViolated(f"{shape.outer.literal()} is not a staircase")
    a = a or 0
    inner = list(shape.inner)
    if any(p > a for p in inner):
        raise PreconditionViolated("inner shape does not fit in the staircase")
    alpha = []
    for k in range(a, 0, -1):
        if inner and inner[0] == k:
            inner.pop(0)
        else:
            alpha.append(k)
    result = StrictPartition(alpha)
    assert result == partition_difference(shape.outer, shape.inner)
    return result


def is_homogeneous(shape: SkewShape) -> bool:
    return isinstance(classify(shape), Homogeneous)

