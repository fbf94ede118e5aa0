"""Corpus-wide consistency checks.

Each check walks a family of small shapes and compares two independent
computations. The CLI ``sweep`` verb and the acceptance tests both run
these.
"""

from __future__ import annotations

import logging
import time
from collections.abc import Callable, Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from .amenability import (
    checklist_failures,
    is_amenable,
    is_k_amenable_checklist,
    is_k_amenable_word,
)
from .canonical import band_chain, fill_bands
from .classification import Homogeneous, classify, witness_applies
from .expansion import (
    amenable_counts,
    amenable_tableaux,
    band_markings,
    corner_expansion,
    decompose_row_strip,
    expand,
    expansion_monomials,
    lambda_flip,
    monomial_oracle,
    rim_expansion,
    unpruned_counts,
    valid_bands,
)
from .shapes import (
    EMPTY,
    SkewShape,
    StrictPartition,
    basic_shapes,
    orthogonal_transpose,
    strict_partitions,
    strict_partitions_inside,
)
from .tableaux import (
    Tableau,
    Word,
    content,
    format_tableau,
    letter,
    reading_order,
    reading_word,
    value_of,
)

log = logging.getLogger(__name__)

MAX_REPORTED = 20


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.checked > 0 and not self.failures

    def fail(self, message: str) -> None:
        self.failures.append(message)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name}: {self.checked} checked, {len(self.failures)} failed, {self.seconds:.1f}s"
        if self.failures:
            text += f" (first: {self.failures[0]})"
        return text


def _run(name: str, items: Iterable, worker: Callable, jobs: int = 1) -> CheckResult:
    """Apply ``worker`` to each item; it returns ``(count, failure messages)``."""
    result = CheckResult(name)
    start = time.perf_counter()
    items = list(items)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(worker, items, chunksize=16))
    else:
        outcomes = [worker(item) for item in items]
    for count, messages in outcomes:
        result.checked += count
        result.failures.extend(messages)
    result.seconds = time.perf_counter() - start
    return result


@lru_cache(maxsize=None)
def cached_expand(shape: SkewShape):
    return expand(shape)


# -- oracle identity -------------------------------------------------------------

def oracle_corpus(max_cells: int = 8, max_first: int = 7) -> list[SkewShape]:
    return [s for s in basic_shapes(max_cells) if s.outer[0] <= max_first]


def _oracle_one(shape: SkewShape):
    n = shape.size
    direct = monomial_oracle(shape, n)
    via_rule = expansion_monomials(cached_expand(shape), n)
    if direct != via_rule:
        return 1, [f"{shape.literal()}: monomial expansions differ"]
    return 1, []


def check_oracle(max_cells: int = 8, max_first: int = 7, jobs: int = 1) -> CheckResult:
    return _run("oracle identity", oracle_corpus(max_cells, max_first), _oracle_one, jobs)


# -- checklist against the word definition ---------------------------------------

def letter_patterns(cells) -> Iterable[tuple[Tableau, int]]:
    """One representative tableau for each way the letters ``k-1`` and ``k``
    can sit in a tableau of this shape, together with its ``k``.

    Cells below ``k-1`` form an order ideal, filled canonically with small
    values; the two bands follow with every marking; the rest is filled
    canonically with large values.
    """
    cells = frozenset(cells)
    for ideal in _ideals(cells):
        low = band_chain(ideal) if ideal else ()
        d = len(low)
        base = dict(fill_bands(low).entries)
        rest1 = cells - ideal
        for b1 in valid_bands(rest1, allow_empty=True):
            rest2 = rest1 - b1
            for b2 in valid_bands(rest2, allow_empty=True):
                top = rest2 - b2
                high = {}
                for j, band in enumerate(band_chain(top) if top else (), start=d + 3):
                    for x, y in band:
                        high[(x, y)] = letter(j, (x + 1, y) in band)
                for f1 in _all_markings(b1, d + 1):
                    for f2 in _all_markings(b2, d + 2):
                        entries = dict(base)
                        entries.update(f1)
                        entries.update(f2)
                        entries.update(high)
                        yield Tableau(entries), d + 2


def _all_markings(band, k):
    if not band:
        yield {}
        return
    yield from band_markings(band, k, fitting=False)


def _ideals(cells) -> Iterable[frozenset]:
    """Every subset closed under taking the cell above and the cell to the left."""
    found = {frozenset()}
    frontier = [frozenset()]
    while frontier:
        nxt = []
        for ideal in frontier:
            for x, y in cells - ideal:
                up, left = (x - 1, y), (x, y - 1)
                if (up in cells and up not in ideal) or (left in cells and left not in ideal):
                    continue
                bigger = ideal | {(x, y)}
                if bigger not in found:
                    found.add(bigger)
                    nxt.append(bigger)
        frontier = nxt
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def letter_configurations(max_cells: int) -> list[tuple[frozenset, frozenset]]:
    """Every placement of the bands ``k-1`` and ``k`` that occurs in a tableau
    on a basic shape with at most ``max_cells`` cells, up to translation.

    Cells below ``k-1`` form an order ideal of the shape; what is left is a
    filter, and the two bands are taken from it in turn.
    """
    filters = set()
    for shape in basic_shapes(max_cells):
        cells = shape.cells
        for ideal in _ideals(cells):
            rest = cells - ideal
            if rest:
                filters.add(_translated(rest))
    seen = {}
    for rest in filters:
        for b1 in valid_bands(rest, allow_empty=True):
            left = rest - b1
            for b2 in valid_bands(left, allow_empty=True):
                both = b1 | b2
                if not both:
                    continue
                mx = min(x for x, _ in both)
                my = min(y for _, y in both)
                key = (_mask(b1, mx, my), _mask(b2, mx, my))
                if key not in seen:
                    seen[key] = (b1, b2)
    return list(seen.values())


def _translated(cells) -> frozenset:
    mx = min(x for x, _ in cells)
    my = min(y for _, y in cells)
    return frozenset((x - mx + 1, y - my + 1) for x, y in cells)


def _mask(cells, mx: int, my: int) -> int:
    m = 0
    for x, y in cells:
        m |= 1 << ((x - mx) * 32 + (y - my))
    return m


def _configuration_one(pair):
    b1, b2 = pair
    count = 0
    messages = []
    # the reading word of each filling, without sorting the cells every time
    boxes = tuple(reading_order(b1 | b2))
    for f1 in _all_markings(b1, 1):
        for f2 in _all_markings(b2, 2):
            entries = dict(f1)
            entries.update(f2)
            t = Tableau(entries)
            count += 1
            word = is_k_amenable_word(Word(tuple(entries[c] for c in boxes), boxes), 2)
            box = is_k_amenable_checklist(t, 2)
            if word != box and len(messages) < MAX_REPORTED:
                messages.append(f"{format_tableau(t)!r}: word={word} checklist={box}")
    return count, messages


def check_checklist(max_cells: int = 8, jobs: int = 1) -> CheckResult:
    """The checklist against the word definition, one band placement at a time.

    Both predicates read only the letters ``k-1`` and ``k`` and their
    positions, so each placement is tested once with those letters
    relabelled to 1 and 2.
    """
    start = time.perf_counter()
    pairs = letter_configurations(max_cells)
    result = _run("checklist equals word definition", pairs, _configuration_one, jobs)
    result.seconds = time.perf_counter() - start
    return result


def _checklist_one(shape: SkewShape):
    count = 0
    messages = []
    for t, k in letter_patterns(shape.cells):
        if t.violations():
            messages.append(f"{shape.literal()}: pattern tableau is invalid")
            continue
        count += 1
        word = is_k_amenable_word(reading_word(t), k)
        box = is_k_amenable_checklist(t, k)
        full = not checklist_failures(t, k)
        if (word != box or box != full) and len(messages) < MAX_REPORTED:
            messages.append(
                f"{shape.literal()} k={k}: word={word} checklist={box} "
                f"failed={checklist_failures(t, k)}"
            )
    return count, messages


def check_checklist_patterns(max_cells: int = 5, jobs: int = 1) -> CheckResult:
    """Whole tableaux: one per placement of ``k-1`` and ``k`` in each shape,
    with the other values filled in around them."""
    return _run("checklist equals word definition (embedded)", basic_shapes(max_cells), _checklist_one, jobs)


def _checklist_literal_one(args):
    shape, max_k = args
    from .tableaux import enumerate_tableaux

    count = 0
    messages = []
    for t in enumerate_tableaux(shape, shape.size):
        w = reading_word(t)
        for k in range(2, max_k + 1):
            count += 1
            word = is_k_amenable_word(w, k)
            if word != is_k_amenable_checklist(t, k) or word != (not checklist_failures(t, k)):
                messages.append(f"{shape.literal()} k={k}")
    return count, messages


def check_checklist_literal(max_cells: int = 4, max_k: int = 8, jobs: int = 1) -> CheckResult:
    items = [(s, max_k) for s in basic_shapes(max_cells)]
    return _run("checklist equals word definition (every tableau)", items, _checklist_literal_one, jobs)


# -- classification --------------------------------------------------------------

def _classify_one(shape: SkewShape):
    exp = cached_expand(shape)
    verdict = classify(shape)
    where = shape.literal()
    if isinstance(verdict, Homogeneous):
        if dict(exp.terms) != {verdict.nu: verdict.k}:
            return 1, [f"{where}: classified homogeneous but expansion is {exp.human()}"]
        return 1, []
    if len(exp.terms) == 1:
        return 1, [f"{where}: classified not homogeneous but expansion is {exp.human()}"]
    w = verdict.witness
    if w is None and witness_applies(shape.cells):
        return 1, [f"{where}: a witness construction applies but none was returned"]
    if w is not None:
        if not is_amenable(w.tableau) or w.tableau.violations():
            return 1, [f"{where}: witness from {w.lemma} does not verify"]
        if w.content not in exp.terms:
            return 1, [f"{where}: witness content {w.content.literal()} is not a term"]
        lead = max(exp.terms, key=tuple)
        if w.content == lead:
            return 1, [f"{where}: witness content equals the leading content"]
    return 1, []


def check_classification(max_cells: int = 9, jobs: int = 1) -> CheckResult:
    return _run("classification soundness", basic_shapes(max_cells), _classify_one, jobs)


# -- symmetry of coefficients ----------------------------------------------------

def _symmetry_one(lam: StrictPartition):
    inner = list(strict_partitions_inside(lam))
    table = {mu: dict(cached_expand(SkewShape(lam, mu)).terms) for mu in inner}
    count = 0
    messages = []
    for mu in inner:
        for nu in strict_partitions(lam.size - mu.size):
            count += 1
            forward = table[mu].get(nu, 0)
            backward = table[nu].get(mu, 0) if nu in table else 0
            if forward != backward:
                messages.append(
                    f"{lam.literal()}: f(mu={mu.literal()}, nu={nu.literal()}) = {forward} "
                    f"but swapped gives {backward}"
                )
    return count, messages


def check_symmetry(max_size: int = 8, jobs: int = 1) -> CheckResult:
    lams = [lam for n in range(1, max_size + 1) for lam in strict_partitions(n)]
    return _run("coefficient symmetry", lams, _symmetry_one, jobs)


# -- the row-strip closed form ---------------------------------------------------

def _row_strip_one(lam: StrictPartition):
    count = 0
    messages = []
    for n in range(1, lam[0] + 1):
        count += 1
        brute = cached_expand(SkewShape(lam, StrictPartition((n,))))
        if decompose_row_strip(lam, n).terms != brute.terms:
            messages.append(f"{lam.literal()}/{n}: closed form differs")
        if n == 1 and corner_expansion(lam).terms != brute.terms:
            messages.append(f"{lam.literal()}/1: corner form differs")
        if n == lam[0] - 1 and rim_expansion(lam).terms != brute.terms:
            messages.append(f"{lam.literal()}/{n}: rim-box form differs")
    return count, messages


def check_row_strip(max_size: int = 9, jobs: int = 1) -> CheckResult:
    lams = [lam for n in range(1, max_size + 1) for lam in strict_partitions(n)]
    return _run("row-strip closed form", lams, _row_strip_one, jobs)


# -- orthogonal transpose --------------------------------------------------------

def flip_problems(t: Tableau) -> list[str]:
    """Why ``lambda_flip(t)`` fails to be a valid tableau with reversed content."""
    flipped = lambda_flip(t)
    problems = [f"invalid image: {p}" for p in flipped.violations()[:1]]
    if not t.entries:
        return problems
    values = [value_of(c) for c in t.entries.values()]
    a, b = min(values), max(values)
    before = content(t).total
    after = content(flipped).total
    for i in range(a, b + 1):
        j = a + b - i
        if (before[i - 1] if i <= len(before) else 0) != (after[j - 1] if j <= len(after) else 0):
            problems.append("content is not reversed")
            break
    if lambda_flip(flipped) != t:
        problems.append("flipping twice does not give back the tableau")
    return problems


def _ot_one(shape: SkewShape):
    where = shape.literal()
    messages = []
    moved = orthogonal_transpose(shape.cells)
    if cached_expand(shape).terms != cached_expand(moved).terms:
        messages.append(f"{where}: expansion changes under orthogonal transpose")
    count = 1
    for t in amenable_tableaux(shape.cells):
        count += 1
        problems = flip_problems(t)
        if problems:
            messages.append(f"{where}: {problems[0]}")
            break
    return count, messages


def check_ot(max_cells: int = 8, jobs: int = 1) -> CheckResult:
    return _run("orthogonal transpose invariance", basic_shapes(max_cells), _ot_one, jobs)


# -- strict contents -------------------------------------------------------------

def _strict_one(shape: SkewShape):
    """Counts amenable tableaux by content with nothing assumed about the
    content, then checks each content and compares with the fast counter."""
    counts = unpruned_counts(shape.cells)
    messages = []
    for c in counts:
        if not all(p > 0 for p in c) or any(a <= b for a, b in zip(c, c[1:])):
            messages.append(f"{shape.literal()}: amenable content {c} is not strict")
    if counts != amenable_counts(shape.cells):
        messages.append(f"{shape.literal()}: unrestricted counts disagree with the fast counter")
    return sum(counts.values()), messages


def check_strict_content(max_cells: int = 8, max_first: int = 7, jobs: int = 1) -> CheckResult:
    return _run("strict amenable contents", oracle_corpus(max_cells, max_first), _strict_one, jobs)


ALL_CHECKS = {
    "oracle": check_oracle,
    "checklist": check_checklist,
    "classification": check_classification,
    "symmetry": check_symmetry,
    "row-strip": check_row_strip,
    "ot": check_ot,
    "strict": check_strict_content,
}
