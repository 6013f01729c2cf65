"""The spo- and dual spo-correspondences, the (dual) Burge maps and the word bijection."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from .alphabet import (
    A,
    ASTAR,
    BURGE,
    DUAL_BURGE,
    AlphabetParams,
    InfeasibleError,
    Letter,
    OspError,
    TwoLineArray,
    conjugate,
    validate_array,
)
from .insertion import (
    Added,
    Cancelled,
    Effect,
    column_insert,
    column_uninsert,
    dual_row_insert,
    dual_row_uninsert,
    row_insert,
    row_uninsert,
    spo_insert,
    spo_uninsert,
)
from .tableaux import (
    DUAL_SEMISTANDARD,
    EMPTY,
    SEMISTANDARD,
    SPO,
    Tableau,
    UpDownTableau,
    from_lists,
    is_valid,
    validate_updown,
)


@dataclass(frozen=True)
class SpoTriple:
    ptilde: Tableau = EMPTY
    p: Tableau = EMPTY
    l: TwoLineArray = TwoLineArray()

    def to_json(self) -> dict:
        return {"ptilde": self.ptilde.to_json(), "p": self.p.to_json(), "l": self.l.to_json()}

    @classmethod
    def from_json(cls, data) -> "SpoTriple":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(
            Tableau.from_json(data["ptilde"]),
            Tableau.from_json(data["p"]),
            TwoLineArray.from_json(data["l"], letters=False),
        )


@dataclass(frozen=True)
class DualSpoTriple:
    """``pt`` is the semistandard tableau of the transposed shape."""

    ptilde: Tableau = EMPTY
    pt: Tableau = EMPTY
    l: TwoLineArray = TwoLineArray()

    def to_json(self) -> dict:
        return {"ptilde": self.ptilde.to_json(), "p": self.pt.to_json(), "l": self.l.to_json()}

    @classmethod
    def from_json(cls, data) -> "DualSpoTriple":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(
            Tableau.from_json(data["ptilde"]),
            Tableau.from_json(data["p"]),
            TwoLineArray.from_json(data["l"], letters=False),
        )


@dataclass(frozen=True)
class Step:
    """State after processing one column (forward) or before undoing it (inverse)."""

    ptilde: Tableau
    p: Tableau
    l: TwoLineArray
    effect: Effect | None = None
    column: tuple | None = None

    def to_json(self) -> dict:
        d = {"ptilde": self.ptilde.to_json(), "p": self.p.to_json(), "l": self.l.to_json()}
        if self.effect is not None:
            d["effect"] = self.effect.to_json()
        if self.column is not None:
            d["column"] = [self.column[0], str(self.column[1])]
        return d


@dataclass(frozen=True)
class WordPair:
    t: Tableau = EMPTY
    chain: UpDownTableau = field(default_factory=UpDownTableau)

    def to_json(self) -> dict:
        return {"t": self.t.to_json(), "chain": self.chain.to_json()}

    @classmethod
    def from_json(cls, data) -> "WordPair":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(Tableau.from_json(data["t"]), UpDownTableau(tuple(tuple(s) for s in data["chain"])))


def _require(pi: TwoLineArray, cls: str, params: AlphabetParams) -> None:
    bad = validate_array(pi, cls, params)
    if bad is not None:
        raise OspError(f"array is not in class {cls}: {bad}")


def _add_cell(t: Tableau, cell, entry) -> Tableau:
    rows = t.to_lists()
    r, c = cell
    if r == len(rows) + 1:
        rows.append([])
    if len(rows[r - 1]) != c - 1:
        raise OspError(f"cannot add a box at {cell}")
    rows[r - 1].append(entry)
    return from_lists(rows)


def _remove_cell(t: Tableau, cell) -> Tableau:
    rows = t.to_lists()
    r, c = cell
    if len(rows[r - 1]) != c:
        raise OspError(f"{cell} is not at the end of its row")
    rows[r - 1].pop()
    return from_lists(rows)


def _rightmost_max(t: Tableau):
    best = None
    for (r, c), e in t.cells():
        if best is None or e > best[1] or (e == best[1] and c > best[0][1]):
            best = ((r, c), e)
    return best


def _lowest_max(t: Tableau):
    best = None
    for (r, c), e in t.cells():
        if best is None or e > best[1] or (e == best[1] and r > best[0][0]):
            best = ((r, c), e)
    return best


# ------------------------------------------------------- spo-correspondence

def spo_forward(pi: TwoLineArray, params: AlphabetParams, trace: bool = False):
    """Map an array of class A to ``(ptilde, p, l)``.

    With ``trace=True`` returns ``(triple, steps)`` where ``steps[k-1]`` is the
    state after the k-th column.
    """
    _require(pi, A, params)
    pt, p, l = EMPTY, EMPTY, TwoLineArray()
    steps = []
    for i, j in pi.columns:
        out = spo_insert(pt, j, params)
        if out.effect.added:
            p = _add_cell(p, out.effect.cell, i)
        else:
            p, a = column_uninsert(p, out.effect.cell)
            l = l.append((i, a))
        pt = out.result
        if trace:
            steps.append(Step(pt, p, l, out.effect, (i, j)))
    triple = SpoTriple(pt, p, l)
    return (triple, steps) if trace else triple


def spo_inverse(triple: SpoTriple, params: AlphabetParams, trace: bool = False):
    """Rebuild the class-A array from a triple; raises ``InfeasibleError`` off the image."""
    pt, p, l = triple.ptilde, triple.p, triple.l
    if pt.shape != p.shape:
        raise InfeasibleError("ptilde and p have different shapes")
    if not is_valid(pt, SPO, params) or not is_valid(p, SEMISTANDARD):
        raise InfeasibleError("ptilde must be an spo-tableau and p semistandard")
    _require_l(l, BURGE, params)
    cols = []
    steps = []
    while p.size or len(l):
        if trace:
            steps.append(Step(pt, p, l))
        in_p = _rightmost_max(p)
        top_l = max(l.top) if len(l) else None
        if in_p is not None and (top_l is None or in_p[1] >= top_l):
            cell, i = in_p
            p = _remove_cell(p, cell)
            pt, j = spo_uninsert(pt, Added(cell), params)
        else:
            i = top_l
            idx = max(k for k, (a, _) in enumerate(l.columns) if a == i)
            a = l.columns[idx][1]
            l = TwoLineArray(l.columns[:idx] + l.columns[idx + 1:])
            grown = column_insert(p, a)
            p = grown.result
            pt, j = spo_uninsert(pt, Cancelled(grown.effect.cell), params)
        cols.append((i, j))
    if trace:
        steps.append(Step(pt, p, l))
    pi = TwoLineArray(tuple(reversed(cols)))
    return (pi, steps) if trace else pi


def _require_l(l: TwoLineArray, cls: str, params: AlphabetParams) -> None:
    bad = validate_array(l, cls, params)
    if bad is not None:
        raise InfeasibleError(f"L is not a {cls} array: {bad}")


# ------------------------------------------------------- Burge correspondence

def burge_forward(l: TwoLineArray, trace: bool = False):
    """Burge array to a semistandard tableau whose columns all have even length."""
    _check_burge(l, BURGE)
    q = EMPTY
    steps = []
    for i, j in l.columns:
        out = row_insert(q, j)
        r, c = out.effect.cell
        q = _add_cell(out.result, (r + 1, c), i)
        if trace:
            steps.append(q)
    return (q, steps) if trace else q


def burge_inverse(q: Tableau) -> TwoLineArray:
    if not is_valid(q, SEMISTANDARD):
        raise OspError("tableau is not semistandard")
    if any(h % 2 for h in conjugate(q.shape)):
        raise OspError("tableau has a column of odd length")
    cols = []
    while q.size:
        (r, c), i = _rightmost_max(q)
        q = _remove_cell(q, (r, c))
        q, j = row_uninsert(q, (r - 1, c))
        cols.append((i, j))
    return TwoLineArray(tuple(reversed(cols)))


def dual_burge_forward(l: TwoLineArray, trace: bool = False):
    """Dual Burge array to a tableau ``s`` whose transpose is semistandard with even rows."""
    _check_burge(l, DUAL_BURGE)
    s = EMPTY
    steps = []
    for i, j in l.columns:
        out = dual_row_insert(s, j)
        r, c = out.effect.cell
        s = _add_cell(out.result, (r + 1, c), i)
        if trace:
            steps.append(s)
    return (s, steps) if trace else s


def dual_burge_inverse(s: Tableau) -> TwoLineArray:
    if not is_valid(s, DUAL_SEMISTANDARD):
        raise OspError("transpose of the tableau is not semistandard")
    if any(h % 2 for h in conjugate(s.shape)):
        raise OspError("transpose of the tableau has a row of odd length")
    cols = []
    while s.size:
        (r, c), i = _lowest_max(s)
        s = _remove_cell(s, (r, c))
        s, j = dual_row_uninsert(s, (r - 1, c))
        cols.append((i, j))
    return TwoLineArray(tuple(reversed(cols)))


def _check_burge(l: TwoLineArray, cls: str) -> None:
    top = max(l.top, default=1)
    bad = validate_array(l, cls, AlphabetParams(0, 0, max(top, 2)))
    if bad is not None:
        raise OspError(f"not a {cls} array: {bad}")


# -------------------------------------------------- dual spo-correspondence

def _sort_within_tops(l: TwoLineArray, descending: bool) -> TwoLineArray:
    # stable sort on the top row, then on the bottom row within equal tops
    key = (lambda col: (col[0], -col[1])) if descending else (lambda col: (col[0], col[1]))
    return TwoLineArray(tuple(sorted(l.columns, key=key)))


def dual_spo_forward(pi: TwoLineArray, params: AlphabetParams, trace: bool = False):
    """Map an array of class A* to ``(ptilde, p transposed, l)``."""
    _require(pi, ASTAR, params)
    pt, p, l = EMPTY, EMPTY, TwoLineArray()
    steps = []
    for i, j in pi.columns:
        out = spo_insert(pt, j, params)
        if out.effect.added:
            p = _add_cell(p, out.effect.cell, i)
        else:
            p, a = dual_row_uninsert(p, out.effect.cell)
            l = l.append((i, a))
        pt = out.result
        if trace:
            steps.append(Step(pt, p, l, out.effect, (i, j)))
    triple = DualSpoTriple(pt, p.transpose(), _sort_within_tops(l, descending=True))
    return (triple, steps) if trace else triple


def dual_spo_inverse(triple: DualSpoTriple, params: AlphabetParams, trace: bool = False):
    pt, l = triple.ptilde, triple.l
    p = triple.pt.transpose()
    if pt.shape != p.shape:
        raise InfeasibleError("shape of ptilde is not the transpose of the shape of pt")
    if not is_valid(pt, SPO, params) or not is_valid(triple.pt, SEMISTANDARD):
        raise InfeasibleError("ptilde must be an spo-tableau and pt semistandard")
    _require_l(l, DUAL_BURGE, params)
    l = _sort_within_tops(l, descending=False)
    cols = []
    steps = []
    while p.size or len(l):
        if trace:
            steps.append(Step(pt, p, l))
        top_l = max(l.top) if len(l) else None
        in_p = _lowest_max(p)
        if top_l is not None and (in_p is None or top_l >= in_p[1]):
            i = top_l
            idx = max(k for k, (a, _) in enumerate(l.columns) if a == i)
            a = l.columns[idx][1]
            l = TwoLineArray(l.columns[:idx] + l.columns[idx + 1:])
            grown = dual_row_insert(p, a)
            p = grown.result
            pt, j = spo_uninsert(pt, Cancelled(grown.effect.cell), params)
        else:
            cell, i = in_p
            p = _remove_cell(p, cell)
            pt, j = spo_uninsert(pt, Added(cell), params)
        cols.append((i, j))
    if trace:
        steps.append(Step(pt, p, l))
    pi = TwoLineArray(tuple(reversed(cols)))
    return (pi, steps) if trace else pi


# ------------------------------------------------------------ word bijection

def word_to_updown(w: Sequence[Letter], params: AlphabetParams, trace: bool = False):
    t = EMPTY
    chain = [()]
    tabs = [t]
    for x in w:
        t = spo_insert(t, x, params).result
        chain.append(t.shape)
        tabs.append(t)
    pair = WordPair(t, UpDownTableau(tuple(chain)))
    return (pair, tabs) if trace else pair


def updown_to_word(pair: WordPair, params: AlphabetParams) -> list[Letter]:
    chain = pair.chain.chain
    bad = validate_updown(pair.chain, params)
    if bad is not None:
        raise InfeasibleError(f"not an up-down tableau: {bad}")
    if pair.t.shape != chain[-1]:
        raise InfeasibleError("tableau shape differs from the final shape of the chain")
    t = pair.t
    out = []
    for k in range(len(chain) - 1, 0, -1):
        cur, prev = chain[k], chain[k - 1]
        if sum(cur) > sum(prev):
            effect = Added(_diff_cell(cur, prev))
        else:
            effect = Cancelled(_diff_cell(prev, cur))
        t, x = spo_uninsert(t, effect, params)
        out.append(x)
    return out[::-1]


def _diff_cell(big, small):
    small = tuple(small) + (0,) * (len(big) - len(small))
    for r, (a, b) in enumerate(zip(big, small), start=1):
        if a != b:
            return (r, a)
    raise OspError("shapes do not differ")
