"""Tableaux over the marked alphabet 1' < 1 < 2' < 2 < ...

A letter is stored as one integer, ``2*value - 1`` for the marked ``value'``
and ``2*value`` for the unmarked ``value``, so integer comparison is the
alphabet order.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass

from .errors import InvalidTableau, ParseError
from .shapes import Cell, cells_of


def letter(value: int, marked: bool = False) -> int:
    return 2 * value - 1 if marked else 2 * value


def value_of(code: int) -> int:
    return (code + 1) // 2


def is_marked(code: int) -> bool:
    return code & 1 == 1


def letter_str(code: int) -> str:
    return f"{value_of(code)}'" if is_marked(code) else str(value_of(code))


def parse_letter(token: str) -> int:
    marked = token.endswith("'")
    digits = token[:-1] if marked else token
    if not digits.isdigit() or int(digits) <= 0:
        raise ParseError(f"invalid tableau letter {token!r}")
    return letter(int(digits), marked)


def reading_order(cells) -> list[Cell]:
    """Bottom row first, each row left to right."""
    return sorted(cells, key=lambda c: (-c[0], c[1]))


class Tableau:
    """A filling of a cell set by letters; immutable by convention."""

    __slots__ = ("entries", "cells", "_hash")

    def __init__(self, entries: Mapping[Cell, int]):
        self.entries = dict(entries)
        self.cells = frozenset(self.entries)
        self._hash = None

    def __getitem__(self, cell: Cell) -> int:
        return self.entries[cell]

    def get(self, cell: Cell, default=None):
        return self.entries.get(cell, default)

    def __contains__(self, cell) -> bool:
        return cell in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, Tableau) and self.entries == other.entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.entries.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Tableau({format_tableau(self)!r})"

    @property
    def max_value(self) -> int:
        return max((value_of(c) for c in self.entries.values()), default=0)

    def band(self, i: int) -> frozenset:
        """Cells whose letter is ``i`` or ``i'``."""
        return frozenset(c for c, code in self.entries.items() if value_of(code) == i)

    def replace(self, changes: Mapping[Cell, int]) -> "Tableau":
        entries = dict(self.entries)
        entries.update(changes)
        return Tableau(entries)

    def violations(self) -> list[str]:
        """Every broken tableau rule, checked over whole rows and columns."""
        problems = []
        e = self.entries
        for (x, y), code in e.items():
            below = e.get((x + 1, y))
            right = e.get((x, y + 1))
            if below is not None and below < code:
                problems.append(f"column decreases at {(x, y)}")
            if right is not None and right < code:
                problems.append(f"row decreases at {(x, y)}")
            diag = e.get((x + 1, y + 1))
            if diag is not None and value_of(diag) <= value_of(code):
                problems.append(f"diagonal does not grow at {(x, y)}")
        columns = Counter((y, code) for (_, y), code in e.items() if not is_marked(code))
        rows = Counter((x, code) for (x, _), code in e.items() if is_marked(code))
        problems += [f"column {y} repeats {letter_str(c)}" for (y, c), n in columns.items() if n > 1]
        problems += [f"row {x} repeats {letter_str(c)}" for (x, c), n in rows.items() if n > 1]
        return problems

    def is_valid(self) -> bool:
        return not self.violations()

    def validate(self) -> "Tableau":
        problems = self.violations()
        if problems:
            raise InvalidTableau("; ".join(problems))
        return self


@dataclass(frozen=True)
class Content:
    unmarked: tuple[int, ...]
    marked: tuple[int, ...]

    @property
    def total(self) -> tuple[int, ...]:
        return tuple(u + m for u, m in zip(self.unmarked, self.marked))


def content(t: Tableau) -> Content:
    size = t.max_value
    unmarked = [0] * size
    marked = [0] * size
    for code in t.entries.values():
        (marked if is_marked(code) else unmarked)[value_of(code) - 1] += 1
    return Content(tuple(unmarked), tuple(marked))


@dataclass(frozen=True)
class Word:
    letters: tuple[int, ...]
    boxes: tuple[Cell, ...]

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(letter_str(c) for c in self.letters)


def reading_word(t: Tableau) -> Word:
    boxes = tuple(reading_order(t.cells))
    return Word(tuple(t[b] for b in boxes), boxes)


def word_from_str(text: str) -> Word:
    """A free-standing word such as ``"1 2' 2"``; boxes are left empty."""
    return Word(tuple(parse_letter(tok) for tok in text.split()), ())


def m_stats(w: Word, i: int) -> tuple[int, ...]:
    """The scanning statistic ``m_i(j)`` for ``j = 0 .. 2n``.

    First pass right to left counting ``i``, second pass left to right
    adding the ``i'``.
    """
    unmarked, marked = letter(i), letter(i, True)
    stats = [0]
    for code in reversed(w.letters):
        stats.append(stats[-1] + (code == unmarked))
    for code in w.letters:
        stats.append(stats[-1] + (code == marked))
    return tuple(stats)


# -- enumeration -----------------------------------------------------------------

def _fill(order, cells, top, budget=None) -> Iterator[Tableau]:
    """Backtracking fill in reading order.

    At each cell only its left and lower neighbours are placed; adjacent
    checks suffice because rows and columns of a skew shape are contiguous.
    """
    entries: dict = {}
    n = len(order)

    def rec(pos):
        if pos == n:
            yield Tableau(entries)
            return
        x, y = order[pos]
        left = entries.get((x, y - 1))
        below = entries.get((x + 1, y))
        lo = left if left is not None else 1
        hi = below if below is not None else top
        for code in range(lo, hi + 1):
            if is_marked(code):
                if code == left:
                    continue
            elif code == below:
                continue
            if budget is not None:
                v = value_of(code) - 1
                if v >= len(budget) or budget[v] == 0:
                    continue
                budget[v] -= 1
            entries[(x, y)] = code
            yield from rec(pos + 1)
            del entries[(x, y)]
            if budget is not None:
                budget[v] += 1

    yield from rec(0)


def enumerate_tableaux(shape, max_value: int) -> Iterator[Tableau]:
    """Every tableau of the shape with letters at most ``max_value``."""
    cells = cells_of(shape)
    return _fill(reading_order(cells), cells, 2 * max_value)


def enumerate_tableaux_with_content(shape, target: Sequence[int]) -> Iterator[Tableau]:
    """Every tableau of the shape whose total content is ``target``."""
    cells = cells_of(shape)
    target = list(target)
    if any(c < 0 for c in target) or sum(target) != len(cells):
        return iter(())
    while target and target[-1] == 0:
        target.pop()
    return _fill(reading_order(cells), cells, 2 * len(target), budget=target)


# -- text format -----------------------------------------------------------------

def format_tableau(t: Tableau) -> str:
    """One line per row, ``.`` for columns left of the row's last cell that are
    not in the tableau, ``k'`` for marked letters."""
    if not t.entries:
        return ""
    lines = []
    for x in range(1, max(r for r, _ in t.cells) + 1):
        cols = [y for r, y in t.cells if r == x]
        if not cols:
            lines.append(".")
            continue
        tokens = [letter_str(t[(x, y)]) if (x, y) in t else "." for y in range(1, max(cols) + 1)]
        lines.append(" ".join(tokens))
    return "\n".join(lines)


def parse_tableau(text: str) -> Tableau:
    entries = {}
    for x, line in enumerate(text.strip("\n").splitlines(), start=1):
        for y, token in enumerate(line.split(), start=1):
            if token != ".":
                entries[(x, y)] = parse_letter(token)
    return Tableau(entries)
