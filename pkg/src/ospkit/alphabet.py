"""Letters of the orthosymplectic alphabet, partitions and two-line arrays.

The alphabet is ``1 < 1b < 2 < 2b < ... < m < mb < 1o < ... < no``.  Letters
carry their kind and index only, so the same letter value can be used under
several ``(m, n)`` contexts; ``rank`` is computed against a context on demand.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence, Union

SYM = "sym"
BAR = "bar"
CIRC = "circ"

# circled letters sort above every symplectic letter regardless of m
_CIRC_OFFSET = 1 << 40


class OspError(ValueError):
    """Base class for invalid input to any ospkit routine."""


class LetterRangeError(OspError):
    pass


class InfeasibleError(OspError):
    """An inverse step has no valid preimage (input is not in the image)."""


class CapExceeded(OspError):
    pass


class Letter:
    __slots__ = ("kind", "value", "_key")

    def __init__(self, kind: str, value: int):
        if kind not in (SYM, BAR, CIRC):
            raise LetterRangeError(f"unknown letter kind {kind!r}")
        if not isinstance(value, int) or value < 1:
            raise LetterRangeError(f"letter index must be a positive integer, got {value!r}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "value", value)
        if kind == SYM:
            key = 2 * value - 1
        elif kind == BAR:
            key = 2 * value
        else:
            key = _CIRC_OFFSET + value
        object.__setattr__(self, "_key", key)

    def __setattr__(self, name, value):
        raise AttributeError("Letter is immutable")

    def __reduce__(self):
        return (Letter, (self.kind, self.value))

    @property
    def in_b0(self) -> bool:
        return self.kind != CIRC

    @property
    def in_b1(self) -> bool:
        return self.kind == CIRC

    @property
    def barred(self) -> bool:
        return self.kind == BAR

    def rank(self, params: "AlphabetParams") -> int:
        check_letter(self, params)
        if self.kind == CIRC:
            return 2 * params.m + self.value
        return self._key

    def bar(self) -> "Letter":
        """The barred partner of an unbarred symplectic letter."""
        if self.kind != SYM:
            raise LetterRangeError(f"{self} has no barred partner")
        return Letter(BAR, self.value)

    def __eq__(self, other):
        if isinstance(other, Letter):
            return self._key == other._key
        return NotImplemented

    def __hash__(self):
        return hash(self._key)

    def __lt__(self, other):
        if isinstance(other, Letter):
            return self._key < other._key
        return NotImplemented

    def __le__(self, other):
        if isinstance(other, Letter):
            return self._key <= other._key
        return NotImplemented

    def __gt__(self, other):
        if isinstance(other, Letter):
            return self._key > other._key
        return NotImplemented

    def __ge__(self, other):
        if isinstance(other, Letter):
            return self._key >= other._key
        return NotImplemented

    def __str__(self):
        return str(self.value) + {SYM: "", BAR: "b", CIRC: "o"}[self.kind]

    def __repr__(self):
        return f"L({str(self)!r})"


def sym(i: int) -> Letter:
    return Letter(SYM, i)


def bar(i: int) -> Letter:
    return Letter(BAR, i)


def circ(k: int) -> Letter:
    return Letter(CIRC, k)


def parse_letter(text: str) -> Letter:
    """Parse ``"3"``, ``"3b"`` or ``"2o"``."""
    text = str(text).strip()
    kind = SYM
    if text.endswith("b"):
        kind, text = BAR, text[:-1]
    elif text.endswith("o"):
        kind, text = CIRC, text[:-1]
    if not text.isdigit():
        raise LetterRangeError(f"malformed letter {text!r}")
    return Letter(kind, int(text))


def L(text: str) -> Letter:
    return parse_letter(text)


def word(text: str) -> list[Letter]:
    """Whitespace separated letters, e.g. ``word("1o 1b 2b")``."""
    return [parse_letter(t) for t in text.split()]


@dataclass(frozen=True)
class AlphabetParams:
    m: int = 1
    n: int = 1
    q: int = 1

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise OspError("m and n must be nonnegative")
        if self.q < 1:
            raise OspError("q must be positive")

    def letters(self) -> list[Letter]:
        """All letters of B0 and B1 in ascending order."""
        out = []
        for i in range(1, self.m + 1):
            out += [sym(i), bar(i)]
        out += [circ(k) for k in range(1, self.n + 1)]
        return out

    def b0(self) -> list[Letter]:
        return [x for x in self.letters() if x.in_b0]

    def b1(self) -> list[Letter]:
        return [circ(k) for k in range(1, self.n + 1)]


def check_letter(x: Letter, params: AlphabetParams) -> None:
    if not isinstance(x, Letter):
        raise LetterRangeError(f"{x!r} is not a letter")
    limit = params.n if x.kind == CIRC else params.m
    if x.value > limit:
        raise LetterRangeError(f"letter {x} out of range for m={params.m}, n={params.n}")


def compare_letters(a: Letter, b: Letter, params: AlphabetParams) -> int:
    """-1, 0 or 1 as ``a`` is below, equal to or above ``b``."""
    check_letter(a, params)
    check_letter(b, params)
    return (a > b) - (a < b)


# ---------------------------------------------------------------- partitions

Partition = tuple


def partition(parts: Iterable[int]) -> Partition:
    """Normalise to a weakly decreasing tuple with no zero parts."""
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise OspError(f"negative part in {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise OspError(f"{parts} is not weakly decreasing")
    return tuple(p for p in parts if p > 0)


def conjugate(shape: Sequence[int]) -> Partition:
    if not shape:
        return ()
    return tuple(sum(1 for p in shape if p > j) for j in range(shape[0]))


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    if len(inner) > len(outer):
        return False
    return all(i <= o for i, o in zip(inner, outer))


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def outer_corners(shape: Sequence[int]) -> list[tuple[int, int]]:
    """Cells (1-based) that can be added to ``shape`` keeping a partition."""
    out = []
    for r in range(len(shape) + 1):
        length = shape[r] if r < len(shape) else 0
        if r == 0 or shape[r - 1] > length:
            out.append((r + 1, length + 1))
    return out


def inner_corners(shape: Sequence[int]) -> list[tuple[int, int]]:
    """Cells (1-based) whose removal leaves a partition."""
    out = []
    for r, length in enumerate(shape):
        below = shape[r + 1] if r + 1 < len(shape) else 0
        if length > below:
            out.append((r + 1, length))
    return out


def hook_condition(shape: Sequence[int], params: AlphabetParams) -> bool:
    """The (m, n) bound: row m+1 has at most n boxes."""
    return len(shape) <= params.m or shape[params.m] <= params.n


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = ()

    def __post_init__(self):
        object.__setattr__(self, "outer", partition(self.outer))
        object.__setattr__(self, "inner", partition(self.inner))
        if not contains(self.outer, self.inner):
            raise OspError(f"{self.inner} is not contained in {self.outer}")

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def cells(self) -> list[tuple[int, int]]:
        inner = self.inner + (0,) * (len(self.outer) - len(self.inner))
        return [(r + 1, c + 1) for r, row in enumerate(self.outer) for c in range(inner[r], row)]

    def conjugate(self) -> "SkewShape":
        return SkewShape(conjugate(self.outer), conjugate(self.inner))


# ---------------------------------------------------------- two-line arrays

Bottom = Union[Letter, int]

A = "A"
ASTAR = "Astar"
BURGE = "Burge"
DUAL_BURGE = "DualBurge"
ARRAY_CLASSES = (A, ASTAR, BURGE, DUAL_BURGE)


class Violation(NamedTuple):
    where: int | tuple | None
    reason: str

    def __str__(self):
        return f"{self.reason} (at {self.where})" if self.where is not None else self.reason


@dataclass(frozen=True)
class TwoLineArray:
    columns: tuple[tuple[int, Bottom], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "columns", tuple((int(a), b) for a, b in self.columns))

    @classmethod
    def from_rows(cls, top: Sequence[int], bottom: Sequence[Bottom]) -> "TwoLineArray":
        if len(top) != len(bottom):
            raise OspError("top and bottom rows differ in length")
        return cls(tuple(zip(top, bottom)))

    @property
    def top(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.columns)

    @property
    def bottom(self) -> tuple:
        return tuple(b for _, b in self.columns)

    def __len__(self):
        return len(self.columns)

    def __iter__(self):
        return iter(self.columns)

    def append(self, column) -> "TwoLineArray":
        return TwoLineArray(self.columns + (tuple(column),))

    def prepend(self, column) -> "TwoLineArray":
        return TwoLineArray((tuple(column),) + self.columns)

    def to_json(self) -> dict:
        return {"top": list(self.top), "bottom": [str(b) for b in self.bottom]}

    @classmethod
    def from_json(cls, data, letters: bool = True) -> "TwoLineArray":
        if isinstance(data, str):
            data = json.loads(data)
        conv = parse_letter if letters else int
        return cls.from_rows(data["top"], [conv(b) for b in data["bottom"]])

    def __str__(self):
        return " ".join(map(str, self.top)) + " / " + " ".join(map(str, self.bottom))


def validate_array(pi: TwoLineArray, cls: str, params: AlphabetParams) -> Violation | None:
    """Return ``None`` if ``pi`` lies in the class, else the first violation."""
    if cls not in ARRAY_CLASSES:
        raise OspError(f"unknown array class {cls!r}")
    decreasing = cls in (ASTAR, DUAL_BURGE)
    for idx, (a, b) in enumerate(pi.columns):
        if not 1 <= a <= params.q:
            return Violation(idx, f"top entry {a} outside 1..{params.q}")
        if cls in (A, ASTAR):
            if not isinstance(b, Letter):
                return Violation(idx, f"bottom entry {b!r} is not a letter")
            try:
                check_letter(b, params)
            except LetterRangeError as exc:
                return Violation(idx, str(exc))
        else:
            if isinstance(b, Letter) or not isinstance(b, int):
                return Violation(idx, f"bottom entry {b!r} is not an integer")
            hi = params.q - 1 if cls == BURGE else params.q
            if not 1 <= b <= hi:
                return Violation(idx, f"bottom entry {b} outside 1..{hi}")
            if cls == BURGE and not a > b:
                return Violation(idx, f"column ({a},{b}) needs top > bottom")
            if cls == DUAL_BURGE and not a >= b:
                return Violation(idx, f"column ({a},{b}) needs top >= bottom")
        if idx:
            pa, pb = pi.columns[idx - 1]
            if pa > a:
                return Violation(idx, "top row not weakly increasing")
            if pa == a and (pb < b if decreasing else pb > b):
                order = "decrease" if decreasing else "increase"
                return Violation(idx, f"bottoms under equal tops must weakly {order}")
            if pa == a and pb == b:
                if cls == A and b.in_b1:
                    return Violation(idx, f"column ({a},{b}) repeated with circled bottom")
                if cls == ASTAR and b.in_b0:
                    return Violation(idx, f"column ({a},{b}) repeated with symplectic bottom")
    return None


def array_weight(pi: TwoLineArray, params: AlphabetParams):
    """The monomial y^top-content x^(unbarred-barred) t^circled of ``pi``."""
    from .polynomial import Monomial

    x = [0] * params.m
    t = [0] * params.n
    y = [0] * params.q
    for a, b in pi.columns:
        check_letter(b, params)
        y[a - 1] += 1
        if b.kind == SYM:
            x[b.value - 1] += 1
        elif b.kind == BAR:
            x[b.value - 1] -= 1
        else:
            t[b.value - 1] += 1
    return Monomial(tuple(x), tuple(t), tuple(y))


def array_to_matrix(pi: TwoLineArray, params: AlphabetParams) -> list[list[int]]:
    """q x (2m+n) multiplicity matrix; columns follow the letter order."""
    bad = validate_array(pi, A, params)
    if bad is not None:
        raise OspError(f"array is not in class A: {bad}")
    width = 2 * params.m + params.n
    mat = [[0] * width for _ in range(params.q)]
    for a, b in pi.columns:
        mat[a - 1][b.rank(params) - 1] += 1
    return mat


def matrix_to_array(mat: Sequence[Sequence[int]], params: AlphabetParams) -> TwoLineArray:
    letters = params.letters()
    if len(mat) != params.q or any(len(row) != len(letters) for row in mat):
        raise OspError(f"matrix must be {params.q} x {len(letters)}")
    cols = []
    for i, row in enumerate(mat, start=1):
        for letter, count in zip(letters, row):
            if count < 0:
                raise OspError("negative matrix entry")
            if letter.in_b1 and count > 1:
                raise OspError(f"entry for ({i},{letter}) must be 0 or 1")
            cols += [(i, letter)] * count
    return TwoLineArray(tuple(cols))


def allowed_columns(cls: str, params: AlphabetParams) -> list[tuple[int, Bottom]]:
    """Distinct columns usable in arrays of ``cls``, in class order."""
    tops = range(1, params.q + 1)
    if cls in (A, ASTAR):
        letters = params.letters()
        if cls == ASTAR:
            letters = letters[::-1]
        return [(a, b) for a in tops for b in letters]
    if cls == BURGE:
        return [(a, b) for a in tops for b in range(1, a)]
    if cls == DUAL_BURGE:
        return [(a, b) for a in tops for b in range(a, 0, -1)]
    raise OspError(f"unknown array class {cls!r}")


def enumerate_arrays(cls: str, params: AlphabetParams, size: int) -> Iterator[TwoLineArray]:
    """All arrays of ``cls`` with exactly ``size`` columns."""
    from itertools import combinations_with_replacement

    cols = allowed_columns(cls, params)

    def once_only(col) -> bool:
        b = col[1]
        return (cls == A and b.in_b1) or (cls == ASTAR and b.in_b0)

    for combo in combinations_with_replacement(range(len(cols)), size):
        if any(combo[i] == combo[i + 1] and once_only(cols[combo[i]]) for i in range(size - 1)):
            continue
        yield TwoLineArray(tuple(cols[i] for i in combo))
