"""Strict partitions, shifted (skew) diagrams and diagram-level constructions.

Cells are ``(row, col)`` pairs in matrix convention, 1-indexed.  Row ``i`` of
the shifted diagram of ``lam`` occupies columns ``i .. i + lam_i - 1``.  Cell
sets are plain frozensets of such pairs and are the common currency between
the modules of this package.
"""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property

from .errors import InvalidPartition, InvalidShape, NotRealizable, NotSubset, ParseError

log = logging.getLogger(__name__)

Cell = tuple[int, int]
CellSet = frozenset


class StrictPartition(tuple):
    """A strictly decreasing tuple of positive integers (possibly empty)."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for a, b in zip(parts, parts[1:]):
            if a <= b:
                raise InvalidPartition(f"parts must be strictly decreasing: {parts}")
        if parts and parts[-1] <= 0:
            raise InvalidPartition(f"parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The 1-indexed part ``lam_i``, or 0 past the end."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def literal(self) -> str:
        return ",".join(map(str, self)) if self else "0"

    def __repr__(self) -> str:
        return f"StrictPartition({list(self)})"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"


EMPTY = StrictPartition()


def _as_partition(p) -> StrictPartition:
    return p if isinstance(p, StrictPartition) else StrictPartition(p)


@dataclass(frozen=True)
class SkewShape:
    outer: StrictPartition
    inner: StrictPartition = EMPTY

    def __post_init__(self):
        object.__setattr__(self, "outer", _as_partition(self.outer))
        object.__setattr__(self, "inner", _as_partition(self.inner))

    @property
    def is_valid(self) -> bool:
        lam, mu = self.outer, self.inner
        return len(mu) <= len(lam) and all(m <= l for m, l in zip(mu, lam))

    @cached_property
    def cells(self) -> frozenset:
        return skew_cells(self)

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def literal(self) -> str:
        if not self.inner:
            return self.outer.literal()
        return f"{self.outer.literal()}/{self.inner.literal()}"

    def __str__(self) -> str:
        return f"{self.outer}/{self.inner}"


@dataclass(frozen=True)
class BorderStrip:
    """A connected cell set with no two cells on a common main diagonal step."""

    cells: frozenset
    first: Cell
    last: Cell

    @classmethod
    def from_cells(cls, cells: Iterable[Cell]) -> "BorderStrip":
        cells = frozenset(cells)
        if len(components(cells)) != 1:
            raise ValueError("a border strip must be connected")
        if any((x - 1, y - 1) in cells for x, y in cells):
            raise ValueError("a border strip has no cell diagonally above-left of another")
        return cls(cells, first_box(cells), last_box(cells))


# -- literals -----------------------------------------------------------------

def parse_partition(text: str) -> StrictPartition:
    """Parse ``"6,5,2,1"``; the empty string or ``"0"`` give the empty partition."""
    text = text.strip()
    if text in ("", "0"):
        return EMPTY
    parts = []
    for token in text.split(","):
        token = token.strip()
        if not token.isdigit() or int(token) <= 0:
            raise ParseError(f"invalid part {token!r} in partition literal {text!r}")
        parts.append(int(token))
    try:
        return StrictPartition(parts)
    except InvalidPartition as exc:
        raise ParseError(f"partition literal {text!r} is not strictly decreasing") from exc


def parse_shape(text: str) -> SkewShape:
    """Parse ``"6,5,2,1/4,3"``; a literal without ``/`` has empty inner part."""
    if text.count("/") > 1:
        raise ParseError(f"too many '/' in shape literal {text!r}")
    outer, _, inner = text.partition("/")
    return SkewShape(parse_partition(outer), parse_partition(inner))


# -- cell sets ----------------------------------------------------------------

def shifted_cells(lam) -> frozenset:
    return frozenset(
        (i, j) for i, part in enumerate(lam, start=1) for j in range(i, i + part)
    )


def skew_cells(shape: SkewShape) -> frozenset:
    if not shape.is_valid:
        raise InvalidShape(f"{shape.inner} does not fit inside {shape.outer}")
    return shifted_cells(shape.outer) - shifted_cells(shape.inner)


def cells_of(shape_or_cells) -> frozenset:
    if isinstance(shape_or_cells, SkewShape):
        return shape_or_cells.cells
    return frozenset(shape_or_cells)


def components(cells) -> list[frozenset]:
    """Edge-connected components, ordered from left to right."""
    cells = cells_of(cells)
    seen: set = set()
    comps = []
    for start in sorted(cells):
        if start in seen:
            continue
        comp = {start}
        queue = deque([start])
        seen.add(start)
        while queue:
            x, y = queue.popleft()
            for nb in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
                if nb in cells and nb not in seen:
                    seen.add(nb)
                    comp.add(nb)
                    queue.append(nb)
        comps.append(frozenset(comp))
    comps.sort(key=lambda c: min(y for _, y in c))
    lefts = [min(y for _, y in c) for c in comps]
    assert len(set(lefts)) == len(lefts), "two components start in the same column"
    return comps


def corners(cells) -> frozenset:
    cells = cells_of(cells)
    return frozenset(
        (x, y) for x, y in cells if (x + 1, y) not in cells and (x, y + 1) not in cells
    )


def first_box(cells) -> Cell:
    """The box with nothing above it and nothing to its right."""
    found = [(x, y) for x, y in cells if (x - 1, y) not in cells and (x, y + 1) not in cells]
    if len(found) != 1:
        raise ValueError(f"cell set has {len(found)} candidate first boxes")
    return found[0]


def last_box(cells) -> Cell:
    """The box with nothing below it and nothing to its left."""
    found = [(x, y) for x, y in cells if (x + 1, y) not in cells and (x, y - 1) not in cells]
    if len(found) != 1:
        raise ValueError(f"cell set has {len(found)} candidate last boxes")
    return found[0]


def broken_border_strip(cells) -> list[BorderStrip]:
    return [BorderStrip.from_cells(c) for c in components(cells)]


def is_broken_border_strip(cells) -> bool:
    try:
        broken_border_strip(cells)
    except ValueError:
        return False
    return True


# -- realizing cell sets as skew shapes ------------------------------------------

def shape_from_cells(cells) -> SkewShape:
    """Read a cell arrangement back as ``D(alpha)`` minus ``D(beta)``.

    ``alpha`` is the smallest strict partition whose diagram contains the
    cells; the arrangement is realizable iff what remains is a shifted diagram.
    """
    cells = frozenset(cells)
    if not cells:
        return SkewShape(EMPTY, EMPTY)
    if any(x < 1 or y < x for x, y in cells):
        raise NotRealizable("cell lies left of the main diagonal or above row 1")
    rows = max(x for x, _ in cells)
    reach = [0] * (rows + 2)
    for x, y in cells:
        reach[x] = max(reach[x], y)
    for i in range(rows - 1, 0, -1):
        reach[i] = max(reach[i], reach[i + 1])
    alpha = StrictPartition(reach[i] - i + 1 for i in range(1, rows + 1))
    rest = shifted_cells(alpha) - cells
    beta_parts = [sum(1 for x, _ in rest if x == i) for i in range(1, rows + 1)]
    while beta_parts and beta_parts[-1] == 0:
        beta_parts.pop()
    try:
        beta = StrictPartition(beta_parts)
    except InvalidPartition as exc:
        raise NotRealizable(f"complement rows {beta_parts} are not strict") from exc
    if shifted_cells(beta) != rest:
        raise NotRealizable("complement of the cells is not a shifted diagram")
    return SkewShape(alpha, beta)


def is_realizable(cells) -> bool:
    try:
        shape_from_cells(cells)
    except NotRealizable:
        return False
    return True


def is_basic(shape: SkewShape) -> bool:
    if not shape.is_valid:
        return False
    lam, mu = shape.outer, shape.inner
    if not mu:
        return True
    if len(lam) <= len(mu):
        return False
    return all(
        lam.part(i) > mu.part(i) and lam.part(i + 1) >= mu.part(i) - 1
        for i in range(1, len(mu) + 1)
    )


def _remove_column(cells: frozenset, y: int) -> frozenset:
    return frozenset((r, c - 1) if c > y else (r, c) for r, c in cells)


def _remove_row(cells: frozenset, x: int) -> frozenset:
    return frozenset((r - 1 if r > x else r, c - 1) for r, c in cells)


def normalize_basic(shape) -> SkewShape:
    """Remove empty columns (left to right) and empty rows (top to bottom).

    A column or row only counts as empty when the shifted result is again a
    skew diagram.  Repeats until no removal applies.
    """
    if isinstance(shape, SkewShape) and not shape.is_valid:
        raise InvalidShape(f"{shape.inner} does not fit inside {shape.outer}")
    cells = cells_of(shape)
    if not cells:
        return SkewShape(EMPTY, EMPTY)
    changed = True
    while changed:
        changed = False
        used_cols = {y for _, y in cells}
        for y in range(1, max(used_cols)):
            if y not in used_cols:
                moved = _remove_column(cells, y)
                if is_realizable(moved):
                    cells, changed = moved, True
                    break
        if changed:
            continue
        used_rows = {x for x, _ in cells}
        for x in range(1, max(used_rows)):
            if x not in used_rows:
                moved = _remove_row(cells, x)
                if is_realizable(moved):
                    cells, changed = moved, True
                    break
    return shape_from_cells(cells)


# -- border, corners and related constructions -----------------------------------

def border(lam) -> frozenset:
    diagram = shifted_cells(lam)
    return frozenset((x, y) for x, y in diagram if (x + 1, y + 1) not in diagram)


def strict_partitions(n: int, max_part: int | None = None) -> Iterator[StrictPartition]:
    """All strict partitions of ``n`` in lexicographically decreasing order."""
    if max_part is None:
        max_part = n

    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first - 1):
                yield (first,) + tail

    for parts in rec(n, max_part):
        yield StrictPartition(parts)


def strict_partitions_inside(lam) -> Iterator[StrictPartition]:
    """All strict ``nu`` with ``D(nu)`` contained in ``D(lam)``."""
    lam = tuple(lam)

    def rec(i, cap):
        yield ()
        if i >= len(lam):
            return
        for part in range(min(lam[i], cap), 0, -1):
            for tail in rec(i + 1, part - 1):
                yield (part,) + tail

    for parts in rec(0, lam[0] if lam else 0):
        yield StrictPartition(parts)


def border_substrips(lam, n: int) -> list[SkewShape]:
    """Every skew shape ``lam/nu`` of size ``n`` lying inside the border of ``lam``."""
    lam = _as_partition(lam)
    rim = border(lam)
    found = []
    for nu in strict_partitions_inside(lam):
        if nu.size != lam.size - n:
            continue
        shape = SkewShape(lam, nu)
        if shape.cells <= rim:
            found.append(shape)
    return found


def corner_removals(lam) -> list[StrictPartition]:
    """Partitions whose diagram is ``D(lam)`` with one corner removed."""
    diagram = shifted_cells(lam)
    found = []
    for corner in sorted(corners(diagram)):
        rest = diagram - {corner}
        try:
            shape = shape_from_cells(rest)
        except NotRealizable:
            log.debug("dropping corner %s of %s: remainder is not a shifted diagram", corner, lam)
            continue
        if shape.inner:
            log.debug("dropping corner %s of %s: remainder is skew", corner, lam)
            continue
        found.append(shape.outer)
    return found


def partition_difference(lam, mu) -> StrictPartition:
    """Remove the parts of ``mu`` from ``lam``."""
    remaining = list(lam)
    for part in mu:
        if part not in remaining:
            raise NotSubset(f"part {part} of {tuple(mu)} is not a part of {tuple(lam)}")
        remaining.remove(part)
    return StrictPartition(sorted(remaining, reverse=True))


# -- orthogonal transpose --------------------------------------------------------

def ot_cell_map(cells) -> dict[Cell, Cell]:
    """Where each cell lands under the orthogonal transpose.

    Reflect ``(x, y)`` to ``(-y, -x)``, then translate so the top occupied row
    is row 1 and the lowest box of the leftmost column sits on the diagonal.
    """
    cells = cells_of(cells)
    if not cells:
        return {}
    max_x = max(x for x, _ in cells)
    max_y = max(y for _, y in cells)
    low_left_y = min(y for x, y in cells if x == max_x)
    anchor_row = max_y - low_left_y + 1
    return {(x, y): (max_y - y + 1, max_x - x + anchor_row) for x, y in cells}


def ot_cells(cells) -> frozenset:
    return frozenset(ot_cell_map(cells).values())


def orthogonal_transpose(cells) -> SkewShape:
    moved = ot_cells(cells)
    try:
        return shape_from_cells(moved)
    except NotRealizable as exc:
        raise AssertionError("orthogonal transpose of a skew diagram is not skew") from exc


# -- lexicographic order ---------------------------------------------------------

def lex_compare(a, b) -> int:
    """-1, 0 or 1 as ``a`` is lexicographically below, equal to or above ``b``."""
    width = max(len(a), len(b))
    pa = tuple(a) + (0,) * (width - len(a))
    pb = tuple(b) + (0,) * (width - len(b))
    return (pa > pb) - (pa < pb)


# -- corpora ---------------------------------------------------------------------

def basic_shapes(max_cells: int, min_cells: int = 1) -> list[SkewShape]:
    """Every basic skew shape with between ``min_cells`` and ``max_cells`` cells.

    Generated row by row from the top, pruning with the basic-shape
    inequalities as rows are added; ordered by size, then outer, then inner.
    """
    found = []

    def rec(lam, mu, budget, mu_alive):
        if lam and (not mu or not mu_alive):
            shape = SkewShape(lam, mu)
            if min_cells <= shape.size and is_basic(shape):
                found.append(shape)
        if budget <= 0:
            return
        lam_cap = lam[-1] - 1 if lam else 2 * max_cells
        floor = max(mu[-1] - 1, 1) if mu and len(mu) == len(lam) else 1
        if mu_alive:
            mu_cap = mu[-1] - 1 if mu else lam_cap - 1
            for l in range(lam_cap, floor - 1, -1):
                for m in range(min(mu_cap, l - 1), max(l - budget, 1) - 1, -1):
                    rec(lam + (l,), mu + (m,), budget - (l - m), True)
        for l in range(min(lam_cap, budget), floor - 1, -1):
            rec(lam + (l,), mu, budget - l, False)

    rec((), (), max_cells, True)
    found.sort(key=lambda s: (s.size, tuple(s.outer), tuple(s.inner)))
    return found
