"""Sparse Laurent polynomials in x (signed exponents), t and y over the integers."""
from __future__ import annotations

import json
from typing import Iterable, Mapping, NamedTuple


class Monomial(NamedTuple):
    x: tuple[int, ...] = ()
    t: tuple[int, ...] = ()
    y: tuple[int, ...] = ()

    @classmethod
    def one(cls, m: int, n: int, q: int) -> "Monomial":
        return cls((0,) * m, (0,) * n, (0,) * q)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(
            tuple(a + b for a, b in zip(self.x, other.x)),
            tuple(a + b for a, b in zip(self.t, other.t)),
            tuple(a + b for a, b in zip(self.y, other.y)),
        )

    def __pow__(self, e: int) -> "Monomial":
        return Monomial(
            tuple(a * e for a in self.x), tuple(a * e for a in self.t), tuple(a * e for a in self.y)
        )

    @property
    def ydeg(self) -> int:
        return sum(self.y)

    def invert_x(self) -> "Monomial":
        return Monomial(tuple(-a for a in self.x), self.t, self.y)

    def __str__(self):
        parts = []
        for name, exps in (("x", self.x), ("t", self.t), ("y", self.y)):
            for i, e in enumerate(exps, start=1):
                if e == 1:
                    parts.append(f"{name}{i}")
                elif e:
                    parts.append(f"{name}{i}^{e}")
        return "*".join(parts) or "1"


class LaurentPolynomial:
    """Immutable mapping Monomial -> nonzero int.

    Every monomial in one polynomial must have the same family lengths;
    arithmetic assumes this and does not re-check it.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = ()):
        acc: dict[Monomial, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, c in items:
            acc[mono] = acc.get(mono, 0) + c
        self.terms = {k: v for k, v in acc.items() if v}

    @classmethod
    def monomial(cls, mono: Monomial, coeff: int = 1) -> "LaurentPolynomial":
        return cls({mono: coeff})

    @classmethod
    def constant(cls, c: int, m: int, n: int, q: int) -> "LaurentPolynomial":
        return cls({Monomial.one(m, n, q): c})

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, LaurentPolynomial):
            return self.terms == other.terms
        if isinstance(other, int) and other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return LaurentPolynomial(out)

    def __neg__(self):
        return LaurentPolynomial({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return poly_mul_truncated(self, other, None)

    def coefficient(self, mono: Monomial) -> int:
        return self.terms.get(mono, 0)

    def truncate(self, ycap: int) -> "LaurentPolynomial":
        return LaurentPolynomial({k: v for k, v in self.terms.items() if k.ydeg <= ycap})

    def degree_part(self, d: int) -> "LaurentPolynomial":
        return LaurentPolynomial({k: v for k, v in self.terms.items() if k.ydeg == d})

    def evaluate_at_ones(self) -> int:
        return sum(self.terms.values())

    def invert_x(self) -> "LaurentPolynomial":
        return LaurentPolynomial({k.invert_x(): v for k, v in self.terms.items()})

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self.terms.items())

    def to_json(self) -> list[dict]:
        return [
            {"x": list(k.x), "t": list(k.t), "y": list(k.y), "c": str(v)}
            for k, v in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, data) -> "LaurentPolynomial":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(
            (Monomial(tuple(d["x"]), tuple(d["t"]), tuple(d["y"])), int(d["c"])) for d in data
        )

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for k, v in self.sorted_terms():
            mono = str(k)
            if mono == "1":
                chunks.append(str(v))
            elif v == 1:
                chunks.append(mono)
            elif v == -1:
                chunks.append("-" + mono)
            else:
                chunks.append(f"{v}*{mono}")
        return " + ".join(chunks).replace("+ -", "- ")

    __repr__ = __str__


def poly_mul_truncated(a: LaurentPolynomial, b: LaurentPolynomial, ycap: int | None) -> LaurentPolynomial:
    """Product of ``a`` and ``b`` dropping terms of y-degree above ``ycap``."""
    out: dict[Monomial, int] = {}
    if ycap is None:
        bt = list(b.terms.items())
    else:
        bt = [(k, v) for k, v in b.terms.items() if k.ydeg <= ycap]
    for ka, va in a.terms.items():
        da = ka.ydeg
        if ycap is not None and da > ycap:
            continue
        for kb, vb in bt:
            if ycap is not None and da + kb.ydeg > ycap:
                continue
            k = ka * kb
            out[k] = out.get(k, 0) + va * vb
    return LaurentPolynomial(out)


def geometric_series(mono: Monomial, ycap: int, sign: int = 1) -> LaurentPolynomial:
    """Truncation of ``1/(1 - sign*mono)``; ``mono`` must have positive y-degree."""
    if mono.ydeg <= 0:
        raise ValueError("geometric factor needs positive y-degree to truncate")
    terms = {}
    e = 0
    while e * mono.ydeg <= ycap:
        terms[mono ** e] = sign ** e
        e += 1
    return LaurentPolynomial(terms)


def product_truncated(factors: Iterable[LaurentPolynomial], ycap: int, one: LaurentPolynomial) -> LaurentPolynomial:
    acc = one
    for f in factors:
        acc = poly_mul_truncated(acc, f, ycap)
    return acc
