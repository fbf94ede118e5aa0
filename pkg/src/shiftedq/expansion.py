"""Expansions of skew Q-functions in the basis of Q-functions.

Tableaux are generated one value at a time. The cells holding a value ``k``
form a band: a set without diagonal pairs, closed upward and leftward inside
what remains. Every band with ``c`` components admits ``2**c`` markings,
since only the last box of each component is free.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from functools import lru_cache

from .amenability import k_amenable_codes
from .canonical import lex_max_content
from .errors import OutOfRange, SizeMismatch
from .shapes import (
    EMPTY,
    SkewShape,
    StrictPartition,
    border,
    border_substrips,
    cells_of,
    components,
    first_box,
    last_box,
    lex_compare,
    normalize_basic,
    ot_cell_map,
    shape_from_cells,
    shifted_cells,
)
from .tableaux import Tableau, content, letter, value_of

log = logging.getLogger(__name__)

INT64_MAX = 2**63 - 1


# -- result containers -----------------------------------------------------------

@dataclass(frozen=True)
class QExpansion:
    """``nu -> coefficient``; ``valid`` is False for the zero function of a
    non-contained pair, which keeps it apart from the constant 1 of ``λ/λ``."""

    terms: Mapping[StrictPartition, int] = field(default_factory=dict)
    valid: bool = True

    def __post_init__(self):
        for nu, coeff in self.terms.items():
            if coeff <= 0:
                raise ValueError(f"stored coefficient for {tuple(nu)} is {coeff}")
            if coeff > INT64_MAX:
                raise OverflowError(f"coefficient of {tuple(nu)} exceeds 64 bits")

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return self.valid and set(self.terms) == {EMPTY}

    def sorted_terms(self) -> list[tuple[StrictPartition, int]]:
        return sorted(self.terms.items(), key=lambda kv: tuple(kv[0]), reverse=True)

    def machine_lines(self) -> list[str]:
        if not self.valid or not self.terms:
            return ["ZERO 0"]
        if self.is_constant:
            return [f"EMPTY_SHAPE {self.terms[EMPTY]}"]
        return [f"{c} {nu.literal()}" for nu, c in self.sorted_terms()]

    def human(self) -> str:
        if not self.valid or not self.terms:
            return "0"
        if self.is_constant:
            return str(self.terms[EMPTY])
        parts = []
        for nu, c in self.sorted_terms():
            q = f"Q[{nu.literal()}]"
            parts.append(q if c == 1 else f"{c}·{q}")
        return " + ".join(parts)


@dataclass(frozen=True)
class MonomialPolynomial:
    terms: Mapping[tuple[int, ...], int]
    variables: int

    def __add__(self, other: "MonomialPolynomial") -> "MonomialPolynomial":
        if self.variables != other.variables:
            raise ValueError("variable counts differ")
        out = defaultdict(int, self.terms)
        for e, c in other.terms.items():
            out[e] += c
        return MonomialPolynomial({e: c for e, c in out.items() if c}, self.variables)

    def scaled(self, factor: int) -> "MonomialPolynomial":
        if factor == 0:
            return MonomialPolynomial({}, self.variables)
        return MonomialPolynomial({e: c * factor for e, c in self.terms.items()}, self.variables)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"x{i}^{p}" if p > 1 else f"x{i}"
                            for i, p in enumerate(e, start=1) if p)
            pieces.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(pieces)


# -- bands -----------------------------------------------------------------------

def valid_bands(
    remaining, allow_empty: bool = False, size: int | None = None, max_size: int | None = None
) -> Iterator[frozenset]:
    """Every set of cells that can carry the next value.

    A candidate has no cell of ``remaining`` diagonally up-left of it, and
    a chosen cell must bring along its upper and left neighbours that are
    still in ``remaining``.
    """
    remaining = frozenset(remaining)
    cands = sorted(
        ((x, y) for x, y in remaining if (x - 1, y - 1) not in remaining),
        key=lambda c: (c[0] + c[1], c[0]),
    )
    cand_set = set(cands)
    deps = []
    for x, y in cands:
        need = [c for c in ((x - 1, y), (x, y - 1)) if c in remaining]
        deps.append(None if any(c not in cand_set for c in need) else need)
    chosen: set = set()
    n = len(cands)
    cap = size if size is not None else max_size

    def rec(i):
        if cap is not None and len(chosen) > cap:
            return
        if i == n:
            if (size is None or len(chosen) == size) and (chosen or allow_empty):
                yield frozenset(chosen)
            return
        yield from rec(i + 1)
        need = deps[i]
        if need is not None and all(c in chosen for c in need):
            chosen.add(cands[i])
            yield from rec(i + 1)
            chosen.discard(cands[i])

    yield from rec(0)


def band_markings(band, k: int, fitting: bool = False) -> Iterator[dict]:
    """All legal fillings of a band by ``k`` and ``k'``.

    With ``fitting`` set, the last box of the leftmost component is forced
    to hold the unmarked ``k``.
    """
    forced = {}
    free = []
    for x, y in band:
        if (x + 1, y) in band:
            forced[(x, y)] = letter(k, True)
        elif (x, y - 1) in band:
            forced[(x, y)] = letter(k)
        else:
            free.append((x, y))
    free.sort(key=lambda c: c[1])
    start = 0
    if fitting and free:
        forced[free[0]] = letter(k)
        start = 1
    rest = free[start:]
    for mask in range(1 << len(rest)):
        filling = dict(forced)
        for bit, cell in enumerate(rest):
            filling[cell] = letter(k, bool(mask >> bit & 1))
        yield filling


# -- amenable tableaux -----------------------------------------------------------

def _reading_rank(cells) -> dict:
    return {c: i for i, c in enumerate(sorted(cells, key=lambda c: (-c[0], c[1])))}


def amenable_tableaux(
    shape, target: Sequence[int] | None = None, prune: bool = True
) -> Iterator[Tableau]:
    """Every amenable tableau of the shape, optionally with fixed content.

    With ``prune`` off, bands may be empty, may grow, and need not be
    fitting; values run up to the number of cells and only the word
    conditions filter. That mode is slower but assumes nothing about the
    shape of amenable contents.
    """
    cells = cells_of(shape)
    if target is not None:
        target = tuple(t for t in target)
        if sum(target) != len(cells) or any(t <= 0 for t in target):
            return
    if not cells:
        yield Tableau({})
        return
    rank = _reading_rank(cells)
    top = len(cells)
    entries: dict = {}
    placed: list[list] = []

    def amenable_at(k):
        # only the letters k-1 and k matter for k-amenability
        merged = sorted(placed[k - 2] + (placed[k - 1] if k - 1 < len(placed) else []))
        return k_amenable_codes([code for _, code in merged], k)

    def rec(remaining, k):
        if not remaining:
            if amenable_at(k):
                yield Tableau(entries)
            return
        size = None
        if target is not None:
            if k > len(target):
                return
            size = target[k - 1]
        if prune:
            # amenable contents are strict, so bands shrink
            cap = len(placed[-1]) - 1 if placed else None
            bands = valid_bands(remaining, size=size, max_size=cap)
        elif k > top:
            return
        else:
            bands = valid_bands(remaining, allow_empty=size is None, size=size)
        for band in bands:
            fillings = band_markings(band, k, fitting=prune) if band else [{}]
            for filling in fillings:
                placed.append([(rank[c], code) for c, code in filling.items()])
                if k == 1 or amenable_at(k):
                    entries.update(filling)
                    yield from rec(remaining - band, k + 1)
                    for c in band:
                        del entries[c]
                placed.pop()

    yield from rec(frozenset(cells), 1)


class _Grid:
    """Cells of one shape as bits, numbered in reading order."""

    def __init__(self, cells):
        order = sorted(cells, key=lambda c: (-c[0], c[1]))
        index = {c: i for i, c in enumerate(order)}
        self.size = len(order)
        self.full = (1 << self.size) - 1
        self.col = [y for _, y in order]
        bit = lambda c: 1 << index[c] if c in index else 0  # noqa: E731
        self.up = [bit((x - 1, y)) for x, y in order]
        self.left = [bit((x, y - 1)) for x, y in order]
        self.diag = [bit((x - 1, y - 1)) for x, y in order]
        self.below = [bit((x + 1, y)) for x, y in order]
        # candidates are tried in order of increasing x + y
        self.sweep = sorted(range(self.size), key=lambda i: (order[i][0] + order[i][1], order[i][0]))
        self._bits: dict = {}
        self._markings: dict = {}

    def bands(self, remaining: int, cap: int, floor: int = 1, below: int | None = None) -> Iterator[int]:
        """Bands of ``remaining`` with between ``floor`` and ``cap`` cells,
        using only cells whose reading index is less than ``below``."""
        limit = self.size if below is None else below
        cands = []
        for i in self.sweep:
            if i < limit and remaining >> i & 1 and not self.diag[i] & remaining:
                cands.append(i)
        cand_mask = 0
        for i in cands:
            cand_mask |= 1 << i
        plan = []
        for i in cands:
            need = (self.up[i] | self.left[i]) & remaining
            if need & ~cand_mask:
                continue
            plan.append((1 << i, need))
        n = len(plan)
        if n < floor:
            return

        def rec(j, chosen, count):
            if count + n - j < floor:
                return
            if j == n:
                yield chosen
                return
            yield from rec(j + 1, chosen, count)
            b, need = plan[j]
            if count < cap and need & chosen == need:
                yield from rec(j + 1, chosen | b, count + 1)

        yield from rec(0, 0, 0)

    def bits(self, mask: int) -> tuple[int, ...]:
        found = self._bits.get(mask)
        if found is None:
            found = tuple(i for i in range(self.size) if mask >> i & 1)
            self._bits[mask] = found
        return found

    def markings(self, band: int, fitting: bool = True) -> tuple[int, ...]:
        """Masks of marked cells over every legal filling of the band, only
        the fitting ones unless ``fitting`` is off."""
        found = self._markings.get((band, fitting))
        if found is not None:
            return found
        forced = 0
        free = []
        for i in self.bits(band):
            if self.below[i] & band:
                forced |= 1 << i
            elif not self.left[i] & band:
                free.append((self.col[i], i))
        free.sort()
        rest = [i for _, i in (free[1:] if fitting else free)]
        masks = []
        for choice in range(1 << len(rest)):
            marked = forced
            for j, i in enumerate(rest):
                if choice >> j & 1:
                    marked |= 1 << i
            masks.append(marked)
        found = self._markings[(band, fitting)] = tuple(masks)
        return found

    def amenable(self, lo: int, lo_marked: int, hi: int, hi_marked: int) -> bool:
        """The k-amenability scan when ``lo`` holds k-1 and ``hi`` holds k."""
        # the first letter of each value, in reading order, must be unmarked
        if hi_marked & hi & -hi or lo_marked & lo & -lo:
            return False
        order = self.bits(lo | hi)
        a = b = 0
        for i in reversed(order):
            bit = 1 << i
            if hi & bit:
                if a == b:
                    return False
                if not hi_marked & bit:
                    b += 1
            elif not lo_marked & bit:
                a += 1
        for i in order:
            bit = 1 << i
            if lo & bit:
                if lo_marked & bit:
                    a += 1
                elif a == b:
                    return False
            elif hi_marked & bit:
                if a == b:
                    return False
                b += 1
        return True


def amenable_counts(shape) -> dict[tuple[int, ...], int]:
    """Number of amenable tableaux for each content, without listing them.

    Whether the next band may follow depends only on the cells left and on
    the filling of the band just placed, so completions are memoized on that
    pair.
    """
    cells = cells_of(shape)
    if not cells:
        return {(): 1}
    grid = _Grid(cells)

    @lru_cache(maxsize=None)
    def rest(remaining: int, prev: int, prev_marked: int) -> dict:
        if not remaining:
            return {(): 1} if grid.amenable(prev, prev_marked, 0, 0) else {}
        cap = bin(prev).count("1") - 1 if prev else grid.size
        total = bin(remaining).count("1")
        # later bands are strictly smaller, so a band of s cells leaves room
        # for at most s*(s-1)/2 more
        floor = 1
        while floor * (floor + 1) // 2 < total:
            floor += 1
        # scanning from the right, no k may appear before the last unmarked k-1
        below = (prev & ~prev_marked).bit_length() if prev else None
        out: dict = defaultdict(int)
        for band in grid.bands(remaining, cap, max(floor, 1), below):
            size = bin(band).count("1")
            left = remaining & ~band
            for marked in grid.markings(band):
                if prev and not grid.amenable(prev, prev_marked, band, marked):
                    continue
                for suffix, n in rest(left, band, marked).items():
                    out[(size,) + suffix] += n
        return dict(out)

    return rest(grid.full, 0, 0)


def unpruned_counts(shape) -> dict[tuple[int, ...], int]:
    """Like :func:`amenable_counts` but relying on the word conditions alone.

    Bands may be empty or larger than the one before and every marking is
    tried, so a content of any form can appear; values stop at the number of
    cells. Used to test that amenable contents are strict.
    """
    cells = cells_of(shape)
    if not cells:
        return {(): 1}
    grid = _Grid(cells)

    @lru_cache(maxsize=None)
    def rest(remaining: int, prev: int, prev_marked: int, k: int) -> dict:
        if not remaining:
            return {(): 1} if grid.amenable(prev, prev_marked, 0, 0) else {}
        if k > grid.size:
            return {}
        # the right-to-left scan stops at the last k unless an unmarked k-1
        # comes after it; this is the scan itself, not a consequence of it
        below = (prev & ~prev_marked).bit_length() if k > 1 else None
        out: dict = defaultdict(int)
        for band in grid.bands(remaining, grid.size, 0, below):
            size = bin(band).count("1")
            left = remaining & ~band
            for marked in grid.markings(band, fitting=False):
                if k > 1 and not grid.amenable(prev, prev_marked, band, marked):
                    continue
                for suffix, n in rest(left, band, marked, k + 1).items():
                    out[(size,) + suffix] += n
        return dict(out)

    return rest(grid.full, 0, 0, 1)


def lr_coefficient(shape, nu) -> int:
    """Number of amenable tableaux of the shape with content ``nu``."""
    cells = cells_of(shape)
    nu = StrictPartition(nu)
    if nu.size != len(cells):
        raise SizeMismatch(f"|nu| = {nu.size} but the shape has {len(cells)} cells")
    if not cells:
        return 1
    if lex_compare(nu, lex_max_content(cells)) > 0:
        return 0
    return amenable_counts(cells).get(tuple(nu), 0)


def expand(shape: SkewShape) -> QExpansion:
    if not shape.is_valid:
        return QExpansion({}, valid=False)
    if shape.size == 0:
        return QExpansion({EMPTY: 1})
    basic = normalize_basic(shape)
    counts = amenable_counts(basic.cells)
    return QExpansion({StrictPartition(c): n for c, n in counts.items()})


# -- the monomial oracle ---------------------------------------------------------

def monomial_oracle(shape, m: int) -> MonomialPolynomial:
    """Sum of ``x^c(T)`` over all tableaux with values at most ``m``.

    Counted as chains of bands (possibly empty), each band weighted by the
    number of its markings; equal to summing over individual tableaux.
    """
    if isinstance(shape, SkewShape) and not shape.is_valid:
        return MonomialPolynomial({}, m)
    cells = cells_of(shape)

    @lru_cache(maxsize=None)
    def rest(remaining: frozenset, k: int) -> dict:
        width = m - k + 1
        if not remaining:
            return {(0,) * width: 1}
        if k > m:
            return {}
        out: dict = defaultdict(int)
        for band in valid_bands(remaining, allow_empty=True):
            weight = 2 ** len(components(band)) if band else 1
            for e, c in rest(remaining - band, k + 1).items():
                out[(len(band),) + e] += weight * c
        return dict(out)

    return MonomialPolynomial(rest(frozenset(cells), 1), m)


@lru_cache(maxsize=None)
def q_monomials(nu: StrictPartition, m: int) -> MonomialPolynomial:
    return monomial_oracle(SkewShape(StrictPartition(nu), EMPTY), m)


def expansion_monomials(exp: QExpansion, m: int) -> MonomialPolynomial:
    total = MonomialPolynomial({}, m)
    for nu, c in exp.terms.items():
        total = total + q_monomials(nu, m).scaled(c)
    return total


# -- closed forms ----------------------------------------------------------------

def decompose_row_strip(lam, n: int) -> QExpansion:
    """``Q_{λ/(n)}`` summed over the skew shapes of size ``n`` inside the border."""
    lam = StrictPartition(lam)
    if not lam or not 1 <= n <= lam[0]:
        raise OutOfRange(f"n = {n} is outside 1..{lam[0] if lam else 0}")
    terms = {}
    for strip in border_substrips(lam, n):
        terms[strip.inner] = 2 ** (len(components(strip.cells)) - 1)
    return QExpansion(terms)


def rim_expansion(lam) -> QExpansion:
    """``Q_{λ/(λ_1 - 1)}`` through the boxes of the border with no border box
    above or to the left; the first and last box count once, others twice."""
    lam = StrictPartition(lam)
    if not lam or lam[0] < 2:
        raise OutOfRange("needs a first part of at least 2")
    rim = border(lam)
    interior = shifted_cells(lam) - rim
    comps = components(rim)
    ends = {first_box(comps[-1]), last_box(comps[0])}
    terms = {}
    for x, y in rim:
        if (x - 1, y) in rim or (x, y - 1) in rim:
            continue
        shape = shape_from_cells(interior | {(x, y)})
        assert not shape.inner, "adding a rim box left a skew shape"
        terms[shape.outer] = 1 if (x, y) in ends else 2
    return QExpansion(terms)


def corner_expansion(lam) -> QExpansion:
    from .shapes import corner_removals

    return QExpansion({nu: 1 for nu in corner_removals(StrictPartition(lam))})


# -- the orthogonal transpose on tableaux ----------------------------------------

def lambda_flip(t: Tableau) -> Tableau:
    """Move a tableau onto the orthogonal transpose of its shape.

    Values are reversed inside the range actually used (``i -> a + b - i``);
    markings are forced inside each band except at last boxes, which copy
    the marking of the matching component of the original band.
    """
    if not t.entries:
        return Tableau({})
    moved = ot_cell_map(t.cells)
    values = [value_of(c) for c in t.entries.values()]
    a, b = min(values), max(values)
    bar = {moved[c]: value_of(code) for c, code in t.entries.items()}
    out = {}
    for i in range(a, b + 1):
        old_band = t.band(i)
        if not old_band:
            continue
        new_band = {c for c, v in bar.items() if v == i}
        target = a + b - i
        free = []
        for x, y in new_band:
            if (x + 1, y) in new_band:
                out[(x, y)] = letter(target, True)
            elif (x, y - 1) in new_band:
                out[(x, y)] = letter(target)
            else:
                free.append((x, y))
        free.sort(key=lambda c: c[1])
        old_lasts = [last_box(comp) for comp in components(old_band)]
        if len(free) != len(old_lasts):
            raise AssertionError("band component counts differ after transposing")
        for cell, source in zip(free, old_lasts):
            out[cell] = letter(target, t[source] % 2 == 1)
    return Tableau(out)
