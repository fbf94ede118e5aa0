"""The canonical tableau of a skew shape, built band by band."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyShape
from .shapes import StrictPartition, cells_of, components
from .tableaux import Tableau, letter


@dataclass(frozen=True)
class CanonicalTableau:
    tableau: Tableau
    bands: tuple[frozenset, ...]

    @property
    def content(self) -> StrictPartition:
        return StrictPartition(len(b) for b in self.bands)


def next_band(remaining) -> frozenset:
    """Cells of ``remaining`` with no cell of ``remaining`` diagonally up-left."""
    return frozenset((x, y) for x, y in remaining if (x - 1, y - 1) not in remaining)


def band_chain(cells, first: frozenset | None = None) -> tuple[frozenset, ...]:
    """Peel bands off until nothing is left.

    ``first`` overrides the first band; later bands follow the usual rule on
    what remains.
    """
    remaining = frozenset(cells)
    bands = []
    while remaining:
        band = first if (first is not None and not bands) else next_band(remaining)
        if not band:
            raise ValueError("band algorithm stalled on an empty band")
        bands.append(frozenset(band))
        remaining = remaining - band
    return tuple(bands)


def fill_bands(bands) -> Tableau:
    """Letter ``k'`` when the cell below shares the band, else ``k``."""
    entries = {}
    for k, band in enumerate(bands, start=1):
        for x, y in band:
            entries[(x, y)] = letter(k, (x + 1, y) in band)
    return Tableau(entries)


def canonical_tableau(shape) -> CanonicalTableau:
    cells = cells_of(shape)
    if not cells:
        raise EmptyShape("the canonical tableau needs at least one cell")
    bands = band_chain(cells)
    return CanonicalTableau(fill_bands(bands), bands)


def lex_max_content(shape) -> StrictPartition:
    cells = cells_of(shape)
    if not cells:
        return StrictPartition()
    return StrictPartition(len(b) for b in band_chain(cells))


def leading_coefficient(shape) -> int:
    """Coefficient of the lex-largest term: one factor 2 per extra band component."""
    cells = cells_of(shape)
    if not cells:
        return 1
    exponent = sum(len(components(b)) - 1 for b in band_chain(cells))
    return 2 ** exponent
