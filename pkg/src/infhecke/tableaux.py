"""Partitions, standard Young tableaux of shapes lambda^(n), and their stable limits.

Diagrams use English coordinates: ``(row, col)`` starting at ``(1, 1)``, row 1
on top, rows listed top to bottom.  The content of a box is ``col - row``.

For a partition ``lam`` the padded shape is ``lam^(n) = (n - |lam|, lam)``;
its first row is the long row.  A :class:`StableSYT` is a filling of the
infinite diagram ``lam^(infinity)`` in which every label beyond ``rank`` sits at
its frozen place at the end of row 1 (label ``m`` in column ``m - |lam|``).
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .limits import ResourceCapError, max_syt_size

Partition = tuple  # weakly decreasing tuple of positive ints


# ---------------------------------------------------------------------------
# partitions
# ---------------------------------------------------------------------------

def partition(parts: Iterable[int]) -> Partition:
    p = tuple(int(x) for x in parts)
    if any(x <= 0 for x in p):
        raise ValueError(f"partition parts must be positive: {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"partition must be weakly decreasing: {p}")
    return p


def parse_partition(text: str) -> Partition:
    """``"3,2,1"`` -> ``(3, 2, 1)``; the empty string (or ``"0"``) is the empty partition."""
    text = text.strip().strip("()[]")
    if not text or text == "0":
        return ()
    return partition(int(x) for x in text.split(",") if x.strip())


def size(lam: Sequence[int]) -> int:
    return sum(lam)


def n_lambda(lam: Partition) -> int:
    """Smallest ``n`` for which ``lam^(n)`` is a partition."""
    return size(lam) + (lam[0] if lam else 0)


def extended_shape(lam: Partition, n: int) -> Partition:
    """``lam^(n) = (n - |lam|, lam)``; requires ``n >= n_lambda(lam)``."""
    if n < n_lambda(lam):
        raise ValueError(f"n = {n} is below n_lambda = {n_lambda(lam)} for {lam}")
    first = n - size(lam)
    return ((first,) if first else ()) + tuple(lam)


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def hook_lengths(lam: Partition) -> list[int]:
    conj = conjugate(lam)
    return [lam[i] - j - 1 + conj[j] - i for i in range(len(lam)) for j in range(lam[i])]


def syt_count(lam: Sequence[int]) -> int:
    """Number of standard Young tableaux of shape ``lam`` (hook length formula)."""
    lam = tuple(x for x in lam if x)
    return math.factorial(size(lam)) // math.prod(hook_lengths(lam))


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    if len(inner) > len(outer):
        return any(inner[len(outer):])
    return all(a >= b for a, b in zip(outer, inner))


def skew_syt_count(outer: Sequence[int], inner: Sequence[int] = ()) -> int:
    """Number of standard fillings of ``outer / inner`` by removing outer corners one at a time."""
    outer = tuple(x for x in outer if x)
    inner = tuple(x for x in inner if x)
    if not contains(outer, inner):
        return 0
    inner_padded = inner + (0,) * (len(outer) - len(inner))

    @lru_cache(maxsize=None)
    def count(shape: tuple) -> int:
        if shape == inner_padded:
            return 1
        total = 0
        for r, length in enumerate(shape):
            below = shape[r + 1] if r + 1 < len(shape) else 0
            if length > inner_padded[r] and length > below:
                total += count(shape[:r] + (length - 1,) + shape[r + 1:])
        return total

    return count(outer)


def removable_children(lam: Sequence[int]) -> list[Partition]:
    """Partitions obtained from ``lam`` by deleting one corner box."""
    out = []
    for r, length in enumerate(lam):
        below = lam[r + 1] if r + 1 < len(lam) else 0
        if length > below:
            child = list(lam)
            child[r] -= 1
            out.append(tuple(x for x in child if x))
    return out


# ---------------------------------------------------------------------------
# finite tableaux
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FiniteSYT:
    """A standard Young tableau given by its rows (top to bottom)."""

    rows: tuple

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows if len(r)))

    @cached_property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    @cached_property
    def positions(self) -> dict:
        return {x: (i + 1, j + 1) for i, row in enumerate(self.rows) for j, x in enumerate(row)}

    def box(self, label: int) -> tuple[int, int]:
        try:
            return self.positions[label]
        except KeyError:
            raise ValueError(f"label {label} out of range 1..{self.size}") from None

    def reading_word(self) -> tuple:
        return tuple(x for row in self.rows for x in row)

    def is_standard(self) -> bool:
        if sorted(self.reading_word()) != list(range(1, self.size + 1)):
            return False
        if any(self.shape[i] < self.shape[i + 1] for i in range(len(self.shape) - 1)):
            return False
        for i, row in enumerate(self.rows):
            if any(row[j] >= row[j + 1] for j in range(len(row) - 1)):
                return False
            if i and any(self.rows[i - 1][j] >= row[j] for j in range(len(row))):
                return False
        return True

    def to_json(self) -> list:
        return [list(r) for r in self.rows]

    def __str__(self):
        return " / ".join(",".join(map(str, r)) for r in self.rows)


def column_standard(shape: Sequence[int]) -> FiniteSYT:
    """The filling that runs down each column, columns taken left to right."""
    shape = tuple(x for x in shape if x)
    rows = [[0] * x for x in shape]
    label = 1
    for j, height in enumerate(conjugate(shape)):
        for i in range(height):
            rows[i][j] = label
            label += 1
    return FiniteSYT(tuple(tuple(r) for r in rows))


def enumerate_syt(shape: Sequence[int], cap: int | None = None) -> list[FiniteSYT]:
    """All SYT of ``shape``, sorted lexicographically by row-reading word."""
    shape = tuple(x for x in shape if x)
    cap = max_syt_size() if cap is None else cap
    n = size(shape)
    if n > cap:
        raise ResourceCapError(f"shape {shape} has {n} boxes, above the cap of {cap}")
    out: list[FiniteSYT] = []
    rows: list[list[int]] = [[] for _ in shape]

    def place(label: int):
        if label > n:
            out.append(FiniteSYT(tuple(tuple(r) for r in rows)))
            return
        for r in range(len(shape)):
            if len(rows[r]) < shape[r] and (r == 0 or len(rows[r - 1]) > len(rows[r])):
                rows[r].append(label)
                place(label + 1)
                rows[r].pop()

    place(1)
    out.sort(key=FiniteSYT.reading_word)
    return out


# ---------------------------------------------------------------------------
# stable tableaux
# ---------------------------------------------------------------------------

class Move(enum.Enum):
    SAME_ROW = "SameRow"
    SAME_COLUMN = "SameColumn"
    COVER_UP = "CoverUp"
    COVER_DOWN = "CoverDown"


class InvalidMoveError(ValueError):
    """``s_i`` does not act on a tableau whose labels ``i, i+1`` share a row or column."""


@dataclass(frozen=True)
class StableSYT:
    """An element of ``SYT_infinity(lam)`` stored by its truncation to ``lam^(rank)``.

    ``rows[0]`` is the long row (it may be empty only for ``lam = ()`` at rank 0)
    and ``rows[1:]`` fill the diagram of ``lam``.  ``rank`` is minimal.
    """

    lam: Partition
    rank: int
    rows: tuple

    @classmethod
    def from_rows(cls, lam: Sequence[int], rows: Sequence[Sequence[int]]) -> StableSYT:
        """Build from a finite standard filling of some ``lam^(n)``, minimising the rank."""
        lam = partition(lam)
        rows = [list(r) for r in rows]
        if not rows:
            rows = [[]]
        if tuple(len(r) for r in rows[1:]) != lam:
            raise ValueError(f"rows {rows} do not fill lam^(n) for lam = {lam}")
        n = sum(len(r) for r in rows)
        if n < n_lambda(lam):
            raise ValueError(f"a filling of size {n} is below n_lambda for {lam}")
        if not FiniteSYT(tuple(tuple(r) for r in rows)).is_standard():
            raise ValueError(f"rows {rows} are not a standard filling")
        return cls._minimised(lam, n, rows)

    @classmethod
    def _minimised(cls, lam: Partition, n: int, rows: list) -> StableSYT:
        floor = n_lambda(lam)
        first = rows[0]
        while n > floor and first and first[-1] == n:
            first.pop()
            n -= 1
        return cls(lam, n, tuple(tuple(r) for r in rows))

    @classmethod
    def from_finite(cls, lam: Sequence[int], tableau: FiniteSYT) -> StableSYT:
        rows = list(tableau.rows)
        if tableau.shape == tuple(lam):  # first row empty (only lam^(|lam|) with lam = ())
            rows = [()] + rows
        return cls.from_rows(lam, rows)

    # -- geometry ------------------------------------------------------------
    @cached_property
    def positions(self) -> dict:
        return {x: (i + 1, j + 1) for i, row in enumerate(self.rows) for j, x in enumerate(row)}

    def box(self, label: int) -> tuple[int, int]:
        if label < 1:
            raise ValueError(f"labels start at 1, got {label}")
        if label > self.rank:
            return (1, label - size(self.lam))
        return self.positions[label]

    def rows_at(self, n: int) -> tuple:
        """Rows of the restriction to ``lam^(n)`` for ``n >= rank``."""
        if n < self.rank:
            raise ValueError(f"cannot truncate rank {self.rank} tableau to {n}")
        return (self.rows[0] + tuple(range(self.rank + 1, n + 1)),) + self.rows[1:]

    def finite(self, n: int | None = None) -> FiniteSYT:
        return FiniteSYT(self.rows_at(self.rank if n is None else n))

    def reading_word(self) -> tuple:
        return tuple(x for row in self.rows for x in row)

    def to_json(self) -> dict:
        return {
            "lambda": ",".join(map(str, self.lam)),
            "rank": self.rank,
            "rows": [list(r) for r in self.rows],
        }

    @classmethod
    def from_json(cls, obj: dict) -> StableSYT:
        lam = parse_partition(str(obj["lambda"]))
        tau = cls.from_rows(lam, obj["rows"])
        if "rank" in obj and int(obj["rank"]) != tau.rank:
            raise ValueError(f"stored rank {obj['rank']} is not minimal (expected {tau.rank})")
        return tau

    def __str__(self):
        first = ",".join(map(str, self.rows[0]))
        rest = " / ".join(",".join(map(str, r)) for r in self.rows[1:])
        return f"[{first},... / {rest}]" if rest else f"[{first},...]"


def rank(tau: StableSYT) -> int:
    return tau.rank


@lru_cache(maxsize=None)
def tau_lambda(lam: Partition) -> StableSYT:
    """The column-standard element of ``SYT_infinity(lam)`` (the poset minimum)."""
    lam = partition(lam)
    n = n_lambda(lam)
    rows = column_standard(extended_shape(lam, n)).rows if n else ()
    rows = list(rows) or [()]
    return StableSYT._minimised(lam, n, [list(r) for r in rows])


def content(tau: StableSYT | FiniteSYT, i: int) -> int:
    """``col - row`` of the box labelled ``i``."""
    r, c = tau.box(i)
    return c - r


def classify_si(tau: StableSYT | FiniteSYT, i: int) -> Move:
    if i < 1:
        raise ValueError(f"generator index must be >= 1, got {i}")
    if isinstance(tau, StableSYT) and i > tau.rank:
        return Move.SAME_ROW
    r1, c1 = tau.box(i)
    r2, c2 = tau.box(i + 1)
    if r1 == r2:
        return Move.SAME_ROW
    if c1 == c2:
        return Move.SAME_COLUMN
    if r2 < r1 and c2 > c1:
        return Move.COVER_UP
    return Move.COVER_DOWN


def apply_si(tau: StableSYT, i: int) -> StableSYT:
    """Swap labels ``i`` and ``i+1``; the move must keep the filling standard."""
    move = classify_si(tau, i)
    if move in (Move.SAME_ROW, Move.SAME_COLUMN):
        raise InvalidMoveError(f"s_{i} is not a move on {tau} ({move.value})")
    n = max(tau.rank, i + 1)
    rows = [list(r) for r in tau.rows_at(n)]
    for row in rows:
        for j, x in enumerate(row):
            if x == i:
                row[j] = i + 1
            elif x == i + 1:
                row[j] = i
    return StableSYT._minimised(tau.lam, n, rows)


def apply_si_finite(tau: FiniteSYT, i: int) -> FiniteSYT:
    move = classify_si(tau, i)
    if move in (Move.SAME_ROW, Move.SAME_COLUMN):
        raise InvalidMoveError(f"s_{i} is not a move on {tau} ({move.value})")
    swap = {i: i + 1, i + 1: i}
    return FiniteSYT(tuple(tuple(swap.get(x, x) for x in r) for r in tau.rows))


@lru_cache(maxsize=None)
def _column_standard_labels(shape: Partition) -> dict:
    return {v: k for k, v in column_standard(shape).positions.items()}


@lru_cache(maxsize=200_000)
def inversion_pairs(tau: StableSYT) -> tuple:
    """Pairs ``(box1, box2, gap)`` ordered one way by ``tau_lambda`` and the other by ``tau``.

    ``box1`` has the smaller ``tau_lambda`` label and ``gap = c(box2) - c(box1)``.
    Computed on the rank truncation, which already holds every inversion.
    """
    shape = extended_shape(tau.lam, tau.rank)
    ref = _column_standard_labels(shape)
    boxes = sorted(ref, key=ref.get)  # ordered by tau_lambda label
    at_box = {v: k for k, v in tau.positions.items()}
    labels = [at_box[b] for b in boxes]
    out = []
    for a in range(len(boxes)):
        la = labels[a]
        ra, ca = boxes[a]
        for b in range(a + 1, len(boxes)):
            if la > labels[b]:
                rb, cb = boxes[b]
                out.append((boxes[a], boxes[b], (cb - rb) - (ca - ra)))
    return tuple(out)


def inv(tau: StableSYT) -> int:
    return len(inversion_pairs(tau))


def level_tableaux(lam: Partition, n: int, cap: int | None = None) -> list[StableSYT]:
    """``SYT(lam^(n))`` as stable tableaux, in canonical order."""
    return [StableSYT.from_rows(lam, _pad_rows(lam, t)) for t in enumerate_syt(extended_shape(lam, n), cap)]


def _pad_rows(lam: Partition, t: FiniteSYT) -> tuple:
    rows = t.rows
    if len(rows) == len(lam):  # empty long row
        rows = ((),) + rows
    return rows


def canonical_key(tau: StableSYT) -> tuple:
    return tau.reading_word()


def enumerate_by_inv(lam: Sequence[int], K: int) -> list[StableSYT]:
    """Every ``tau`` in ``SYT_infinity(lam)`` with ``inv(tau) <= K``.

    Breadth-first closure from ``tau_lambda`` under covering moves; each cover
    raises ``inv`` by exactly one.  The search runs inside the truncation
    ``lam^(N)``; reaching its boundary restarts with a larger ``N``.
    Output is sorted by ``(inv, row-reading word)``.
    """
    lam = partition(lam)
    if K < 0:
        return []
    bound = n_lambda(lam) + K + 1
    while True:
        levels = _bfs_levels(lam, K, bound)
        if levels is not None:
            break
        bound += K + 1
    out = []
    for level in levels:
        out.extend(sorted(level, key=canonical_key))
    return out


def _bfs_levels(lam: Partition, K: int, bound: int):
    start = tau_lambda(lam)
    levels = [[start]]
    for _ in range(K):
        seen = set()
        nxt = []
        for tau in levels[-1]:
            for i in range(1, min(tau.rank, bound - 1) + 1):
                if classify_si(tau, i) is Move.COVER_UP:
                    new = apply_si(tau, i)
                    if new.rank >= bound:
                        return None
                    if new not in seen:
                        seen.add(new)
                        nxt.append(new)
        levels.append(nxt)
    return levels


def stable_inv_levels(lam: Sequence[int], K: int) -> list[list[StableSYT]]:
    """``enumerate_by_inv`` grouped by inversion number."""
    items = enumerate_by_inv(lam, K)
    out: list[list[StableSYT]] = [[] for _ in range(K + 1)]
    for tau in items:
        out[inv(tau)].append(tau)
    return out
