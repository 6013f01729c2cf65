"""Bumping and sliding primitives.

Row, column and dual row insertion (with inverses) act on any totally ordered
entries; ``spo_insert`` mixes them on orthosymplectic tableaux and cancels a
barred letter against its unbarred partner when a symplectic violation would
occur, closing the gap with forward jeu de taquin.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from .alphabet import AlphabetParams, InfeasibleError, Letter, OspError, check_letter, sym, bar
from .tableaux import SPO, Cell, PuncturedTableau, Tableau, from_lists, is_valid

ADDED = "added"
CANCELLED = "cancelled"


@dataclass(frozen=True)
class Event:
    """One step of a trace.

    ``bump``/``place``: ``new`` written at ``cell`` displacing ``old``.
    ``cancel``: ``old`` (a barred letter) deleted at ``cell`` instead of being
    bumped by ``new``.  ``slide``: the hole moves from ``cell`` to ``to``.
    ``remove``: the hole at ``cell`` leaves the shape.
    """

    op: str
    cell: Cell
    new: Any = None
    old: Any = None
    to: Cell | None = None

    def to_json(self) -> dict:
        d: dict = {"op": self.op, "cell": list(self.cell)}
        if self.new is not None:
            d["in"] = str(self.new)
        if self.old is not None:
            d["out"] = str(self.old)
        if self.to is not None:
            d["to"] = list(self.to)
        return d


@dataclass(frozen=True)
class Effect:
    kind: str
    cell: Cell

    @property
    def added(self) -> bool:
        return self.kind == ADDED

    @property
    def cancelled(self) -> bool:
        return self.kind == CANCELLED

    def to_json(self) -> dict:
        return {"kind": self.kind, "cell": list(self.cell)}


def Added(cell: Cell) -> Effect:
    return Effect(ADDED, cell)


def Cancelled(cell: Cell) -> Effect:
    return Effect(CANCELLED, cell)


@dataclass(frozen=True)
class InsertionOutcome:
    result: Tableau
    effect: Effect
    trace: tuple[Event, ...] = ()


# ---------------------------------------------------------------- predicates
# forward: does `entry` get bumped by the incoming `x`?
# reverse: may the incoming-from-below `y` displace `entry`?

def _gt(entry, x):
    return entry > x


def _ge(entry, x):
    return entry >= x


def _lt(entry, y):
    return entry < y


def _le(entry, y):
    return entry <= y


def _spo_bumps(entry: Letter, x: Letter) -> bool:
    return entry >= x if x.in_b1 else entry > x


def _spo_unbumps(entry: Letter, y: Letter) -> bool:
    return entry <= y if y.in_b1 else entry < y


def _bump_in(rows: list[list], x, bumps: Callable, trace: list[Event]) -> Cell:
    r = 0
    while True:
        if r == len(rows):
            rows.append([x])
            trace.append(Event("place", (r + 1, 1), x))
            return (r + 1, 1)
        row = rows[r]
        for j, e in enumerate(row):
            if bumps(e, x):
                row[j] = x
                trace.append(Event("bump", (r + 1, j + 1), x, e))
                x = e
                break
        else:
            row.append(x)
            trace.append(Event("place", (r + 1, len(row)), x))
            return (r + 1, len(row))
        r += 1


def _bump_out(rows: list[list], start_row: int, y, unbumps: Callable):
    """Push ``y`` into row ``start_row`` (0-based) and upward; return the ejected entry."""
    for r in range(start_row, -1, -1):
        row = rows[r]
        for j in range(len(row) - 1, -1, -1):
            if unbumps(row[j], y):
                row[j], y = y, row[j]
                break
        else:
            raise InfeasibleError(f"no entry in row {r + 1} can be displaced by {y}")
    return y


def _pop_corner(rows: list[list], corner: Cell):
    r, c = corner
    if not (1 <= r <= len(rows) and len(rows[r - 1]) == c):
        raise OspError(f"{corner} is not a removable corner")
    if r < len(rows) and len(rows[r]) >= c:
        raise OspError(f"{corner} is not a removable corner")
    y = rows[r - 1].pop()
    if not rows[r - 1]:
        rows.pop()
    return y


def _lists(t: Tableau) -> list[list]:
    return [list(r) for r in t.rows]


# -------------------------------------------------------- classical bumping

def row_insert(t: Tableau, x) -> InsertionOutcome:
    """RSK row insertion ``t <- x``."""
    rows, trace = _lists(t), []
    cell = _bump_in(rows, x, _gt, trace)
    return InsertionOutcome(from_lists(rows), Added(cell), tuple(trace))


def row_uninsert(t: Tableau, corner: Cell) -> tuple[Tableau, Any]:
    rows = _lists(t)
    y = _pop_corner(rows, corner)
    out = _bump_out(rows, corner[0] - 2, y, _lt)
    return from_lists(rows), out


def dual_row_insert(t: Tableau, x) -> InsertionOutcome:
    """Dual row insertion ``x -> t``: bump the leftmost entry ``>= x``."""
    rows, trace = _lists(t), []
    cell = _bump_in(rows, x, _ge, trace)
    return InsertionOutcome(from_lists(rows), Added(cell), tuple(trace))


def dual_row_uninsert(t: Tableau, corner: Cell) -> tuple[Tableau, Any]:
    rows = _lists(t)
    y = _pop_corner(rows, corner)
    out = _bump_out(rows, corner[0] - 2, y, _le)
    return from_lists(rows), out


def _transpose_cell(cell: Cell) -> Cell:
    return (cell[1], cell[0])


def column_insert(t: Tableau, x) -> InsertionOutcome:
    """Column insertion: ``x`` displaces the topmost entry ``>= x`` of each column.

    Equivalent to dual row insertion on the transpose.
    """
    cols, trace = _lists(t.transpose()), []
    cell = _bump_in(cols, x, _ge, trace)
    trace = [Event(e.op, _transpose_cell(e.cell), e.new, e.old) for e in trace]
    return InsertionOutcome(from_lists(cols).transpose(), Added(_transpose_cell(cell)), tuple(trace))


def column_uninsert(t: Tableau, corner: Cell) -> tuple[Tableau, Any]:
    cols = _lists(t.transpose())
    y = _pop_corner(cols, _transpose_cell(corner))
    out = _bump_out(cols, corner[1] - 2, y, _le)
    return from_lists(cols).transpose(), out


# ------------------------------------------------------------ jeu de taquin

def _forward_slides(rows: list[list], hole: tuple[int, int], trace: list[Event]) -> Cell:
    r, c = hole
    while True:
        right = rows[r][c + 1] if c + 1 < len(rows[r]) else None
        below = rows[r + 1][c] if r + 1 < len(rows) and c < len(rows[r + 1]) else None
        if right is None and below is None:
            rows[r].pop()
            if not rows[r]:
                rows.pop()
            trace.append(Event("remove", (r + 1, c + 1)))
            return (r + 1, c + 1)
        if below is None or (right is not None and (right < below or (right == below and right.in_b1))):
            rows[r][c], rows[r][c + 1] = right, None
            trace.append(Event("slide", (r + 1, c + 1), to=(r + 1, c + 2)))
            c += 1
        else:
            rows[r][c], rows[r + 1][c] = below, None
            trace.append(Event("slide", (r + 1, c + 1), to=(r + 2, c + 1)))
            r += 1


def jdt_forward(p: PuncturedTableau, params: AlphabetParams | None = None) -> tuple[Tableau, Cell, tuple[Event, ...]]:
    """Slide the hole right/down until it is a removable corner, then delete it.

    Returns the resulting tableau, the deleted cell and the slide trace.
    """
    rows = _lists(p.tableau)
    trace: list[Event] = []
    end = _forward_slides(rows, (p.hole[0] - 1, p.hole[1] - 1), trace)
    return from_lists(rows), end, tuple(trace)


def _reverse_step(rows: list[list], r: int, c: int) -> tuple[int, int] | None:
    left = rows[r][c - 1] if c > 0 else None
    up = rows[r - 1][c] if r > 0 else None
    if left is None and up is None:
        return None
    if up is None or (left is not None and (left > up or (left == up and left.in_b1))):
        rows[r][c], rows[r][c - 1] = left, None
        return (r, c - 1)
    rows[r][c], rows[r - 1][c] = up, None
    return (r - 1, c)


def jdt_reverse_path(t: Tableau, corner: Cell) -> list[PuncturedTableau]:
    """Add an empty box at ``corner`` and slide it back up/left as far as it goes.

    Every intermediate punctured tableau is returned, starting with the
    freshly added hole.
    """
    rows = _lists(t)
    r, c = corner[0] - 1, corner[1] - 1
    if r > len(rows) or (r == len(rows) and c != 0) or (r < len(rows) and c != len(rows[r])) or (r > 0 and len(rows[r - 1]) <= c):
        raise OspError(f"{corner} is not an addable cell")
    if r == len(rows):
        rows.append([])
    rows[r].append(None)
    path = [PuncturedTableau(from_lists(rows), (r + 1, c + 1))]
    pos = (r, c)
    while True:
        pos = _reverse_step(rows, *pos)
        if pos is None:
            return path
        path.append(PuncturedTableau(from_lists(rows), (pos[0] + 1, pos[1] + 1)))


def jdt_reverse_to_column1(t: Tableau, corner: Cell, params: AlphabetParams) -> list[tuple[PuncturedTableau, int]]:
    """Candidate starting points for the hole of a cancellation that ended at ``corner``.

    A point on the reverse path qualifies when it lies in a row ``r <= m``
    whose entries left of the hole are all the unbarred letter ``r``; sliding
    the hole further left through those letters reaches column 1.  The list
    is ordered by ``r`` ascending (highest row first).
    """
    out = []
    for step, p in enumerate(jdt_reverse_path(t, corner)):
        r, c = p.hole
        if r > params.m:
            continue
        row = p.tableau.rows[r - 1]
        if all(e == sym(r) for e in row[: c - 1]):
            out.append((r, -step, p))
    out.sort(key=lambda item: (item[0], item[1]))
    return [(p, r) for r, _, p in out]


# ------------------------------------------------------------ spo insertion

def spo_insert(t: Tableau, x: Letter, params: AlphabetParams) -> InsertionOutcome:
    """Insert ``x`` into an spo-tableau.

    Symplectic letters bump the leftmost strictly larger entry, circled
    letters the leftmost weakly larger one.  The first time an unbarred ``i``
    would bump a barred ``i`` out of row ``i``, the barred letter is deleted
    instead, ``i`` is discarded and the hole is slid out; the tableau then
    loses a box.
    """
    check_letter(x, params)
    rows, trace = _lists(t), []
    r = 0
    while True:
        if r == len(rows):
            rows.append([x])
            trace.append(Event("place", (r + 1, 1), x))
            return InsertionOutcome(from_lists(rows), Added((r + 1, 1)), tuple(trace))
        row = rows[r]
        for j, e in enumerate(row):
            if _spo_bumps(e, x):
                break
        else:
            row.append(x)
            trace.append(Event("place", (r + 1, len(row)), x))
            return InsertionOutcome(from_lists(rows), Added((r + 1, len(row))), tuple(trace))
        e = row[j]
        if x.kind == "sym" and e.kind == "bar" and x.value == e.value == r + 1:
            row[j] = None
            trace.append(Event("cancel", (r + 1, j + 1), x, e))
            end = _forward_slides(rows, (r, j), trace)
            return InsertionOutcome(from_lists(rows), Cancelled(end), tuple(trace))
        row[j] = x
        trace.append(Event("bump", (r + 1, j + 1), x, e))
        x = e
        r += 1


def spo_uninsert(t: Tableau, effect: Effect, params: AlphabetParams, verify: bool = True) -> tuple[Tableau, Letter]:
    """Undo ``spo_insert``.

    ``Added(cell)``: reverse bumping from the box at ``cell``.
    ``Cancelled(cell)``: re-add a box at ``cell``, slide it back to the
    highest feasible row ``r``, restore the barred ``r`` there and reverse
    bump an ``r`` from row ``r - 1``.  Candidates are checked by re-inserting
    the ejected letter; the first that reproduces ``(t, effect)`` wins.
    """
    if effect.added:
        rows = _lists(t)
        y = _pop_corner(rows, effect.cell)
        out = _bump_out(rows, effect.cell[0] - 2, y, _spo_unbumps)
        before = from_lists(rows)
        if verify:
            again = spo_insert(before, out, params)
            if again.result != t or again.effect != effect:
                raise InfeasibleError(f"reverse bumping from {effect.cell} does not invert an insertion")
        return before, out

    for p, r in jdt_reverse_to_column1(t, effect.cell, params):
        rows = _lists(p.fill(bar(r)))
        try:
            out = _bump_out(rows, r - 2, sym(r), _spo_unbumps)
        except InfeasibleError:
            continue
        before = from_lists(rows)
        if not is_valid(before, SPO, params):
            continue
        again = spo_insert(before, out, params)
        if again.result == t and again.effect == effect:
            return before, out
    raise InfeasibleError(f"no cancellation ending at {effect.cell} produces this tableau")


def replay(t: Tableau, trace: tuple[Event, ...]) -> list[list[list]]:
    """Grids after each trace event (holes appear as ``None``)."""
    rows = _lists(t)
    snaps = []
    for ev in trace:
        r, c = ev.cell[0] - 1, ev.cell[1] - 1
        if ev.op == "place":
            if r == len(rows):
                rows.append([])
            rows[r].append(ev.new)
        elif ev.op == "bump":
            rows[r][c] = ev.new
        elif ev.op == "cancel":
            rows[r][c] = None
        elif ev.op == "slide":
            tr, tc = ev.to[0] - 1, ev.to[1] - 1
            rows[r][c], rows[tr][tc] = rows[tr][tc], None
        elif ev.op == "remove":
            rows[r].pop()
            if not rows[r]:
                rows.pop()
        snaps.append([list(row) for row in rows])
    return snaps
