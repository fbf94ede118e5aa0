"""k-amenability of words and tableaux.

Two independent implementations are kept: the scan over the reading word
and the box-local checklist. The sweep in the test suite compares them.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .shapes import Cell, components, last_box
from .tableaux import (
    Tableau,
    Word,
    content,
    letter,
    m_stats,
    reading_order,
    reading_word,
    value_of,
)


def is_fitting(t: Tableau, i: int) -> bool:
    """Whether the last box of the band ``T^(i)`` holds the unmarked ``i``."""
    band = t.band(i)
    if not band:
        return True
    leftmost = components(band)[0]
    return t[last_box(leftmost)] == letter(i)


# -- the word definition ---------------------------------------------------------

def is_k_amenable_word(w: Word, k: int) -> bool:
    """Conditions (a) to (d), evaluated on the full ``m`` statistics."""
    if k < 2:
        raise ValueError("k-amenability needs k > 1")
    letters = w.letters
    n = len(letters)
    hi = m_stats(w, k)
    lo = m_stats(w, k - 1)
    k_pair = {letter(k), letter(k, True)}
    for j in range(n):
        if hi[j] == lo[j] and letters[n - j - 1] in k_pair:
            return False
    second = {letter(k - 1), letter(k, True)}
    for j in range(n, 2 * n):
        if hi[j] == lo[j] and letters[j - n] in second:
            return False
    for target in (k, k - 1):
        first = next((c for c in letters if value_of(c) == target), None)
        if first is not None and first != letter(target):
            return False
    return True


def k_amenable_codes(codes: Sequence[int], k: int) -> bool:
    """Same predicate as :func:`is_k_amenable_word` on a bare letter sequence,
    with running counters instead of stored statistics."""
    upper, upper_m = 2 * k, 2 * k - 1
    lower, lower_m = 2 * k - 2, 2 * k - 3
    seen_upper = seen_lower = False
    for c in codes:
        if not seen_upper and (c == upper or c == upper_m):
            if c != upper:
                return False
            seen_upper = True
        elif not seen_lower and (c == lower or c == lower_m):
            if c != lower:
                return False
            seen_lower = True
        if seen_upper and seen_lower:
            break
    a = b = 0
    for c in reversed(codes):
        if a == b and (c == upper or c == upper_m):
            return False
        if c == lower:
            a += 1
        elif c == upper:
            b += 1
    for c in codes:
        if a == b and (c == lower or c == upper_m):
            return False
        if c == lower_m:
            a += 1
        elif c == upper_m:
            b += 1
    return True


def is_k_amenable(t: Tableau, k: int) -> bool:
    return k_amenable_codes(reading_word(t).letters, k)


def is_amenable(t: Tableau) -> bool:
    """k-amenable for every k > 1.

    k runs up to one past the largest value: that last check is condition
    (d) for the top value, which can fail even though no letter ``k`` exists.
    """
    codes = reading_word(t).letters
    top = t.max_value
    return all(k_amenable_codes(codes, k) for k in range(2, top + 2))


def is_amenable_codes(codes: Sequence[int]) -> bool:
    top = max(((c + 1) // 2 for c in codes), default=0)
    return all(k_amenable_codes(codes, k) for k in range(2, top + 2))


# -- the box-local checklist -----------------------------------------------------

@dataclass(frozen=True)
class ChecklistContext:
    tableau: Tableau
    k: int
    B: tuple[Cell, ...]
    B_hat: tuple[Cell, ...]
    d: int

    @property
    def b(self) -> int:
        return len(self.B)

    def prefix(self) -> tuple[Cell, ...]:
        """``B_T^(k)(d)``: the first ``d`` boxes of ``B``, top row first."""
        return self.B[: max(self.d, 0)]

    def s_box(self, cell: Cell, i: int) -> int:
        """``|S_T(x,y)^(i)|``: unmarked ``i`` weakly above and weakly right."""
        x, y = cell
        target = letter(i)
        return sum(1 for (u, v), code in self.tableau.entries.items()
                   if u <= x and v >= y and code == target)


def _top_first(cells) -> tuple[Cell, ...]:
    return tuple(reversed(reading_order(cells)))


def checklist_context(t: Tableau, k: int) -> ChecklistContext:
    e = t.entries
    mk, mk1 = letter(k, True), letter(k - 1, True)
    B = [(x, y) for (x, y), c in e.items() if c == mk and e.get((x - 1, y - 1)) != mk1]
    B_hat = [(x, y) for (x, y), c in e.items() if c == mk1 and e.get((x + 1, y + 1)) != mk]
    cont = content(t)
    unmarked = cont.unmarked + (0,) * (k + 1)
    d = len(B) + unmarked[k - 1] - unmarked[k - 2] + 1
    return ChecklistContext(t, k, _top_first(B), _top_first(B_hat), d)


def _compatible(t: Tableau, k: int, source: Cell, target: Cell) -> bool:
    """No ``k-1`` or ``k'`` in any row strictly between target and source."""
    u, x = target[0], source[0]
    blocked = {letter(k - 1), letter(k, True)}
    return not any(u < r < x and c in blocked for (r, _), c in t.entries.items())


def find_phi_matching(ctx: ChecklistContext) -> dict[Cell, Cell] | None:
    """An injective compatible map from the ``d``-prefix of ``B`` into ``B_hat``,
    found by augmenting paths; ``None`` when no such map exists."""
    sources = ctx.prefix()
    options = {
        s: [h for h in ctx.B_hat if _compatible(ctx.tableau, ctx.k, s, h)] for s in sources
    }
    owner: dict[Cell, Cell] = {}

    def augment(s, visited) -> bool:
        for h in options[s]:
            if h in visited:
                continue
            visited.add(h)
            if h not in owner or augment(owner[h], visited):
                owner[h] = s
                return True
        return False

    for s in sources:
        if not augment(s, set()):
            return None
    return {s: h for h, s in owner.items()}


def checklist_failures(t: Tableau, k: int) -> list[int]:
    """Numbers of the checklist conditions that fail; empty means k-amenable."""
    if k < 2:
        raise ValueError("k-amenability needs k > 1")
    cont = content(t)
    pad = (0,) * (k + 1)
    total = cont.total + pad
    unmarked = cont.unmarked + pad
    if total[k - 2] == 0 and total[k - 1] == 0:
        return []
    ctx = checklist_context(t, k)
    failed = []
    if not unmarked[k - 2] > unmarked[k - 1]:
        failed.append(1)
    if any(code == letter(k) and ctx.s_box(cell, k - 1) < ctx.s_box(cell, k)
           for cell, code in t.entries.items()):
        failed.append(2)
    if any(ctx.s_box(cell, k - 1) <= ctx.s_box(cell, k) for cell in ctx.B):
        failed.append(3)
    if ctx.d > 0 and find_phi_matching(ctx) is None:
        failed.append(4)
    if not is_fitting(t, k - 1):
        failed.append(5)
    if total[k - 1] > 0 and not is_fitting(t, k):
        failed.append(6)
    return failed


def _fits(e, cells, unmarked: int) -> bool:
    """Fitting test on a band given as a cell list: the bottom cell of its
    leftmost column must hold the unmarked letter."""
    y0 = min(y for _, y in cells)
    x0 = max(x for x, y in cells if y == y0)
    return e[(x0, y0)] == unmarked


def is_k_amenable_checklist(t: Tableau, k: int) -> bool:
    """Short-circuit form of :func:`checklist_failures`, cheap conditions first."""
    if k < 2:
        raise ValueError("k-amenability needs k > 1")
    e = t.entries
    lo_m, lo, hi_m, hi = 2 * k - 3, 2 * k - 2, 2 * k - 1, 2 * k
    low, low_m, high, high_m = [], [], [], []
    for cell, c in e.items():
        if c == lo:
            low.append(cell)
        elif c == hi:
            high.append(cell)
        elif c == lo_m:
            low_m.append(cell)
        elif c == hi_m:
            high_m.append(cell)
    if not (low or low_m or high or high_m):
        return True
    if len(low) <= len(high):
        return False
    if not _fits(e, low + low_m, lo):
        return False
    if (high or high_m) and not _fits(e, high + high_m, hi):
        return False

    def quadrant(x, y):
        a = sum(1 for u, v in low if u <= x and v >= y)
        b = sum(1 for u, v in high if u <= x and v >= y)
        return a, b

    for x, y in high:
        a, b = quadrant(x, y)
        if a < b:
            return False
    B = [(x, y) for x, y in high_m if e.get((x - 1, y - 1)) != lo_m]
    for x, y in B:
        a, b = quadrant(x, y)
        if a <= b:
            return False
    d = len(B) + len(high) - len(low) + 1
    if d > 0:
        B_hat = [(x, y) for x, y in low_m if e.get((x + 1, y + 1)) != hi_m]
        ctx = ChecklistContext(t, k, _top_first(B), _top_first(B_hat), d)
        if find_phi_matching(ctx) is None:
            return False
    return True


def satisfies_sufficient(t: Tableau, k: int) -> bool:
    """The five-condition sufficient test for k-amenability."""
    cont = content(t)
    total = cont.total + (0,) * (k + 1)
    if total[k - 2] == 0 and total[k - 1] == 0:
        return True
    e = t.entries
    lower, upper = letter(k - 1), letter(k)
    # (1) some k-1 with no k anywhere below it in its column
    if not any(c == lower and not any(e.get((z, y)) == upper for (z, yy) in e if yy == y and z > x)
               for (x, y), c in e.items()):
        return False
    # (2) every k has a k-1 somewhere above it in its column
    for (x, y), c in e.items():
        if c == upper and not any(e.get((z, y)) == lower for z in range(1, x)):
            return False
    # (3) every k' sits diagonally below-right of a (k-1)'
    for (x, y), c in e.items():
        if c == letter(k, True) and e.get((x - 1, y - 1)) != letter(k - 1, True):
            return False
    if not is_fitting(t, k - 1):
        return False
    return total[k - 1] == 0 or is_fitting(t, k)
