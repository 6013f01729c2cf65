"""Tableaux: data model, validation by kind, weights and desk-scale enumeration."""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Iterator, Sequence

from .alphabet import (
    AlphabetParams,
    CapExceeded,
    Letter,
    OspError,
    Partition,
    SkewShape,
    Violation,
    check_letter,
    hook_condition,
    inner_corners,
    outer_corners,
    parse_letter,
    partition,
    sym,
)
from .polynomial import Monomial

Cell = tuple[int, int]

SEMISTANDARD = "Semistandard"
DUAL_SEMISTANDARD = "DualSemistandard"
SYMPLECTIC = "Symplectic"
SPO = "Spo"
SKEW_SEMISTANDARD = "SkewSemistandard"
KINDS = (SEMISTANDARD, DUAL_SEMISTANDARD, SYMPLECTIC, SPO, SKEW_SEMISTANDARD)


@dataclass(frozen=True)
class Caps:
    """Enumeration guards; the defaults cover every acceptance run."""

    max_cells: int = 8
    max_alphabet: int = 8


DEFAULT_CAPS = Caps()


@dataclass(frozen=True)
class Tableau:
    """Rows of entries; ``None`` marks the removed inner cells of a skew tableau.

    Cells are addressed 1-based as ``(row, col)``.
    """

    rows: tuple[tuple[Any, ...], ...] = ()

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        if any(not r for r in rows):
            raise OspError("tableau rows must be nonempty")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def of(cls, rows: Sequence[Sequence[Any]]) -> "Tableau":
        """Build from rows, parsing strings as letters (``"1b"``, ``"2o"``)."""
        return cls(tuple(tuple(_parse_entry(e) for e in row) for row in rows if len(row)))

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def inner(self) -> Partition:
        return partition(sum(1 for e in r if e is None) for r in self.rows)

    @property
    def is_skew(self) -> bool:
        return any(e is None for r in self.rows for e in r)

    @property
    def size(self) -> int:
        return sum(1 for r in self.rows for e in r if e is not None)

    def __len__(self):
        return self.size

    def __getitem__(self, cell: Cell):
        r, c = cell
        return self.rows[r - 1][c - 1]

    def get(self, cell: Cell, default=None):
        r, c = cell
        if 1 <= r <= len(self.rows) and 1 <= c <= len(self.rows[r - 1]):
            return self.rows[r - 1][c - 1]
        return default

    def cells(self) -> Iterator[tuple[Cell, Any]]:
        for r, row in enumerate(self.rows, start=1):
            for c, e in enumerate(row, start=1):
                if e is not None:
                    yield (r, c), e

    def entries(self) -> list:
        return [e for _, e in self.cells()]

    def column(self, c: int) -> list:
        return [row[c - 1] for row in self.rows if len(row) >= c]

    def transpose(self) -> "Tableau":
        return Tableau(tuple(tuple(self.column(c)) for c in range(1, (self.shape or (0,))[0] + 1)))

    def to_lists(self) -> list[list]:
        return [list(r) for r in self.rows]

    def to_json(self) -> dict:
        return {"shape": list(self.shape), "rows": [[_entry_json(e) for e in r] for r in self.rows]}

    @classmethod
    def from_json(cls, data) -> "Tableau":
        if isinstance(data, str):
            data = json.loads(data)
        t = cls.of(data.get("rows", []))
        if "shape" in data and tuple(data["shape"]) != t.shape:
            raise OspError(f"shape {data['shape']} does not match rows")
        return t

    def render(self) -> str:
        return "\n".join(" ".join("." if e is None else str(e) for e in r) for r in self.rows)

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join("." if e is None else str(e) for e in r) + "]" for r in self.rows) + "]"


EMPTY = Tableau()


def _parse_entry(e):
    if e is None or isinstance(e, (Letter, int)):
        return e
    return parse_letter(e)


def _entry_json(e):
    if e is None or isinstance(e, int):
        return e
    return str(e)


def from_lists(rows: list[list]) -> Tableau:
    return Tableau(tuple(tuple(r) for r in rows if r))


@dataclass(frozen=True)
class PuncturedTableau:
    """A tableau whose cell ``hole`` is empty (stored as ``None``)."""

    tableau: Tableau
    hole: Cell

    def __post_init__(self):
        if self.tableau.get(self.hole, 0) is not None:
            raise OspError(f"hole {self.hole} is not an empty cell of the tableau")

    @classmethod
    def puncture(cls, t: Tableau, hole: Cell) -> "PuncturedTableau":
        rows = t.to_lists()
        r, c = hole
        if not (1 <= r <= len(rows) and 1 <= c <= len(rows[r - 1])):
            raise OspError(f"hole {hole} lies outside the shape")
        rows[r - 1][c - 1] = None
        return cls(from_lists(rows), hole)

    def fill(self, entry) -> Tableau:
        rows = self.tableau.to_lists()
        r, c = self.hole
        rows[r - 1][c - 1] = entry
        return from_lists(rows)


# ------------------------------------------------------------------ validity

def _check_shape(t: Tableau) -> Violation | None:
    sh = t.shape
    if any(sh[i] < sh[i + 1] for i in range(len(sh) - 1)):
        return Violation(None, f"row lengths {sh} are not a partition")
    return None


def _row_ok_weak(a, b):
    return a <= b


def _row_ok_strict(a, b):
    return a < b


def _check_grid(t: Tableau, row_ok, col_ok, what: str) -> Violation | None:
    for (r, c), e in t.cells():
        left = t.get((r, c - 1))
        if left is not None and not row_ok(left, e):
            return Violation((r, c), f"{what}: row condition fails between {left} and {e}")
        up = t.get((r - 1, c))
        if up is not None and not col_ok(up, e):
            return Violation((r, c), f"{what}: column condition fails between {up} and {e}")
    return None


def _spo_row_ok(a: Letter, b: Letter) -> bool:
    return a < b or (a == b and b.in_b0)


def _spo_col_ok(a: Letter, b: Letter) -> bool:
    return a < b or (a == b and b.in_b1)


def _check_letters(t: Tableau, params: AlphabetParams, b0_only: bool = False) -> Violation | None:
    for cell, e in t.cells():
        if not isinstance(e, Letter):
            return Violation(cell, f"entry {e!r} is not a letter")
        check_letter(e, params)
        if b0_only and e.in_b1:
            return Violation(cell, f"circled entry {e} in a symplectic tableau")
    return None


def _check_ints(t: Tableau, params: AlphabetParams | None) -> Violation | None:
    for cell, e in t.cells():
        if isinstance(e, Letter):
            continue
        if not isinstance(e, int) or e < 1:
            return Violation(cell, f"entry {e!r} is not a positive integer")
    return None


def _symplectic_rows(t: Tableau) -> Violation | None:
    for (r, c), e in t.cells():
        if e.in_b0 and e < sym(r):
            return Violation((r, c), f"symplectic violation: {e} in row {r}")
    return None


def b0_portion(t: Tableau) -> Tableau:
    """The sub-tableau of entries from B0 (rows truncated at the first circled letter)."""
    rows = []
    for row in t.rows:
        kept = []
        for e in row:
            if e.in_b1:
                break
            kept.append(e)
        if not kept:
            break
        rows.append(tuple(kept))
    return Tableau(tuple(rows))


def validate_tableau(t: Tableau, kind: str, params: AlphabetParams | None = None) -> Violation | None:
    """``None`` if ``t`` is a valid tableau of ``kind``, else the first violation."""
    if kind not in KINDS:
        raise OspError(f"unknown tableau kind {kind!r}")
    if kind != SKEW_SEMISTANDARD and t.is_skew:
        return Violation(None, "unexpected empty cell")
    bad = _check_shape(t)
    if bad:
        return bad
    if kind == SKEW_SEMISTANDARD:
        inner = [sum(1 for e in r if e is None) for r in t.rows]
        for r, row in enumerate(t.rows):
            if any(e is None for e in row[inner[r]:]) or any(inner[i] < inner[i + 1] for i in range(len(inner) - 1)):
                return Violation((r + 1, None), "empty cells do not form a partition")
        return _check_ints(t, params) or _check_grid(t, _row_ok_weak, _row_ok_strict, kind)
    if kind == SEMISTANDARD:
        return _check_ints(t, params) or _check_grid(t, _row_ok_weak, _row_ok_strict, kind)
    if kind == DUAL_SEMISTANDARD:
        return _check_ints(t, params) or _check_grid(t, _row_ok_strict, _row_ok_weak, kind)
    if params is None:
        raise OspError(f"{kind} validation needs alphabet parameters")
    if kind == SYMPLECTIC:
        return (
            _check_letters(t, params, b0_only=True)
            or _check_grid(t, _row_ok_weak, _row_ok_strict, kind)
            or _symplectic_rows(t)
        )
    # Spo: symplectic B0 part that is a Young diagram, B1 remainder row strict and column weak
    bad = _check_letters(t, params)
    if bad:
        return bad
    s = b0_portion(t)
    for (r, c), e in t.cells():
        if e.in_b0 and s.get((r, c)) is None:
            return Violation((r, c), f"symplectic entry {e} right of a circled entry")
    if _check_shape(s):
        return Violation(None, "symplectic portion is not a Young diagram")
    bad = validate_tableau(s, SYMPLECTIC, params)
    if bad:
        return Violation(bad.where, "symplectic portion: " + bad.reason)
    for (r, c), e in t.cells():
        if e.in_b0:
            continue
        left = t.get((r, c - 1))
        if left is not None and left.in_b1 and not left < e:
            return Violation((r, c), f"circled entries {left}, {e} not strictly increasing in row")
        up = t.get((r - 1, c))
        if up is not None and up.in_b1 and not up <= e:
            return Violation((r, c), f"circled entries {up}, {e} not weakly increasing in column")
    return None


def is_valid(t: Tableau, kind: str, params: AlphabetParams | None = None) -> bool:
    return validate_tableau(t, kind, params) is None


def tableau_weight(t: Tableau, params: AlphabetParams) -> Monomial:
    x = [0] * params.m
    tt = [0] * params.n
    for _, e in t.cells():
        check_letter(e, params)
        if e.kind == "sym":
            x[e.value - 1] += 1
        elif e.kind == "bar":
            x[e.value - 1] -= 1
        else:
            tt[e.value - 1] += 1
    return Monomial(tuple(x), tuple(tt), (0,) * params.q)


def content_weight(t: Tableau, params: AlphabetParams, family: str = "y") -> Monomial:
    """Monomial ``prod v_i^{#i}`` of an integer tableau; ``v`` is ``y`` (1..q) or ``t`` (1..n)."""
    width = params.q if family == "y" else params.n
    counts = [0] * width
    for _, e in t.cells():
        if not 1 <= e <= width:
            raise OspError(f"entry {e} outside 1..{width}")
        counts[e - 1] += 1
    base = Monomial.one(params.m, params.n, params.q)
    return base._replace(**{family: tuple(counts)})


# --------------------------------------------------------------- enumeration

def _kind_alphabet(kind: str, params: AlphabetParams) -> list:
    if kind == SPO:
        return params.letters()
    if kind == SYMPLECTIC:
        return params.b0()
    return list(range(1, params.q + 1))


def enumerate_tableaux(
    shape: Sequence[int] | SkewShape,
    kind: str,
    params: AlphabetParams,
    alphabet: Sequence | None = None,
    caps: Caps = DEFAULT_CAPS,
) -> Iterator[Tableau]:
    """Every valid filling of ``shape``, lexicographic in the row-major entry sequence.

    Integer kinds use ``1..q`` unless ``alphabet`` is given.
    """
    if isinstance(shape, SkewShape):
        outer, inner = shape.outer, shape.inner
        if kind not in (SKEW_SEMISTANDARD, SEMISTANDARD):
            raise OspError(f"skew shapes only enumerate as {SKEW_SEMISTANDARD}")
    else:
        outer, inner = partition(shape), ()
    letters = list(alphabet) if alphabet is not None else _kind_alphabet(kind, params)
    size = sum(outer) - sum(inner)
    if size > caps.max_cells:
        raise CapExceeded(f"{size} cells exceeds the cap of {caps.max_cells}")
    if kind in (SPO, SYMPLECTIC) and len(letters) > caps.max_alphabet:
        raise CapExceeded(f"alphabet of {len(letters)} letters exceeds the cap of {caps.max_alphabet}")
    inner = tuple(inner) + (0,) * (len(outer) - len(inner))
    cells = [(r, c) for r in range(len(outer)) for c in range(inner[r], outer[r])]
    grid = [[None] * outer[r] for r in range(len(outer))]

    if kind in (SEMISTANDARD, SKEW_SEMISTANDARD):
        row_ok, col_ok = _row_ok_weak, _row_ok_strict
    elif kind == DUAL_SEMISTANDARD:
        row_ok, col_ok = _row_ok_strict, _row_ok_weak
    elif kind == SYMPLECTIC:
        row_ok, col_ok = _row_ok_weak, _row_ok_strict
    else:
        row_ok, col_ok = _spo_row_ok, _spo_col_ok
    need_row_floor = kind in (SYMPLECTIC, SPO)

    def fill(idx: int) -> Iterator[Tableau]:
        if idx == len(cells):
            yield Tableau(tuple(tuple(r) for r in grid))
            return
        r, c = cells[idx]
        left = grid[r][c - 1] if c > inner[r] else None
        up = grid[r - 1][c] if r > 0 and c >= inner[r - 1] else None
        floor = sym(r + 1) if need_row_floor else None
        for v in letters:
            if left is not None and not row_ok(left, v):
                continue
            if up is not None and not col_ok(up, v):
                continue
            if floor is not None and v.in_b0 and v < floor:
                continue
            grid[r][c] = v
            yield from fill(idx + 1)
        grid[r][c] = None

    return fill(0)


def count_tableaux(shape, kind: str, params: AlphabetParams, caps: Caps = DEFAULT_CAPS) -> int:
    return sum(1 for _ in enumerate_tableaux(shape, kind, params, caps=caps))


# ----------------------------------------------------------- up-down tableaux

@dataclass(frozen=True)
class UpDownTableau:
    chain: tuple[Partition, ...] = ((),)

    def __post_init__(self):
        object.__setattr__(self, "chain", tuple(partition(s) for s in self.chain))

    @property
    def shape(self) -> Partition:
        return self.chain[-1]

    @property
    def length(self) -> int:
        return len(self.chain) - 1

    def to_json(self) -> list[list[int]]:
        return [list(s) for s in self.chain]


def _differ_by_one_box(a: Partition, b: Partition) -> bool:
    if abs(sum(a) - sum(b)) != 1:
        return False
    big, small = (a, b) if sum(a) > sum(b) else (b, a)
    small = small + (0,) * (len(big) - len(small))
    if len(small) > len(big):
        return False
    return sum(x - y for x, y in zip(big, small)) == 1 and all(x >= y for x, y in zip(big, small))


def validate_updown(ud: UpDownTableau, params: AlphabetParams) -> Violation | None:
    if not ud.chain or ud.chain[0] != ():
        return Violation(0, "chain must start at the empty partition")
    for i, s in enumerate(ud.chain):
        if not hook_condition(s, params):
            return Violation(i, f"shape {s} has more than {params.n} boxes in row {params.m + 1}")
        if i and not _differ_by_one_box(ud.chain[i - 1], s):
            return Violation(i, f"{ud.chain[i - 1]} -> {s} is not a single box step")
    return None


def _add_box(shape: Partition, cell: Cell) -> Partition:
    r = cell[0]
    s = list(shape) + [0]
    s[r - 1] += 1
    return partition(s)


def _remove_box(shape: Partition, cell: Cell) -> Partition:
    s = list(shape)
    s[cell[0] - 1] -= 1
    return partition(s)


def _distance(a: Partition, b: Partition) -> int:
    n = max(len(a), len(b))
    a = a + (0,) * (n - len(a))
    b = b + (0,) * (n - len(b))
    return sum(abs(x - y) for x, y in zip(a, b))


def updown_neighbours(shape: Partition, params: AlphabetParams) -> list[Partition]:
    out = [_add_box(shape, c) for c in outer_corners(shape)]
    out = [s for s in out if hook_condition(s, params)]
    out += [_remove_box(shape, c) for c in inner_corners(shape)]
    return out


def enumerate_updown(shape: Sequence[int], k: int, params: AlphabetParams) -> Iterator[UpDownTableau]:
    """All up-down (m, n)-tableaux of the given shape and length ``k``."""
    target = partition(shape)
    if k < sum(target) or (k - sum(target)) % 2 or not hook_condition(target, params):
        return iter(())

    def walk(chain: list[Partition]) -> Iterator[UpDownTableau]:
        left = k - (len(chain) - 1)
        cur = chain[-1]
        if left == 0:
            if cur == target:
                yield UpDownTableau(tuple(chain))
            return
        for nxt in updown_neighbours(cur, params):
            if _distance(nxt, target) <= left - 1:
                chain.append(nxt)
                yield from walk(chain)
                chain.pop()

    return walk([()])


def count_updown(shape: Sequence[int], k: int, params: AlphabetParams) -> int:
    """Number of up-down (m, n)-tableaux by dynamic programming over shapes."""
    target = partition(shape)

    @lru_cache(maxsize=None)
    def ways(cur: Partition, left: int) -> int:
        if _distance(cur, target) > left:
            return 0
        if left == 0:
            return 1
        return sum(ways(nxt, left - 1) for nxt in updown_neighbours(cur, params))

    if not hook_condition(target, params):
        return 0
    return ways((), k)
