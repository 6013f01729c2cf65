"""Characters by tableau enumeration and exact checks of the Cauchy-type identities."""
from __future__ import annotations

import itertools
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import comb, factorial, prod
from typing import Callable, Iterable

from .alphabet import (
    A,
    ASTAR,
    AlphabetParams,
    OspError,
    SkewShape,
    array_weight,
    conjugate,
    contains,
    enumerate_arrays,
    hook_condition,
    partition,
    partitions_of,
)
from .correspondences import (
    burge_forward,
    dual_burge_forward,
    dual_spo_forward,
    spo_forward,
    updown_to_word,
    word_to_updown,
)
from .polynomial import LaurentPolynomial, Monomial, geometric_series, poly_mul_truncated, product_truncated
from .tableaux import (
    DEFAULT_CAPS,
    SEMISTANDARD,
    SKEW_SEMISTANDARD,
    SPO,
    SYMPLECTIC,
    Caps,
    Tableau,
    content_weight,
    count_tableaux,
    count_updown,
    enumerate_tableaux,
    enumerate_updown,
    tableau_weight,
)

DIRECT = "Direct"
MUSUM = "MuSum"


def _one(params: AlphabetParams) -> LaurentPolynomial:
    return LaurentPolynomial.constant(1, params.m, params.n, params.q)


def schur(shape, params: AlphabetParams, family: str = "y", caps: Caps = DEFAULT_CAPS) -> LaurentPolynomial:
    """Schur (or skew Schur) polynomial in ``y_1..y_q`` or ``t_1..t_n``."""
    width = params.q if family == "y" else params.n
    if isinstance(shape, SkewShape):
        kind = SKEW_SEMISTANDARD
    else:
        shape, kind = partition(shape), SEMISTANDARD
    terms: dict[Monomial, int] = {}
    for t in enumerate_tableaux(shape, kind, params, alphabet=range(1, width + 1), caps=caps):
        mono = content_weight(t, params, family)
        terms[mono] = terms.get(mono, 0) + 1
    return LaurentPolynomial(terms)


def _letter_sum(tabs: Iterable[Tableau], params: AlphabetParams) -> LaurentPolynomial:
    terms: dict[Monomial, int] = {}
    for t in tabs:
        mono = tableau_weight(t, params)
        terms[mono] = terms.get(mono, 0) + 1
    return LaurentPolynomial(terms)


def symplectic_schur(mu, params: AlphabetParams, caps: Caps = DEFAULT_CAPS) -> LaurentPolynomial:
    mu = partition(mu)
    if len(mu) > params.m:
        raise OspError(f"symplectic character needs at most m={params.m} rows, got {mu}")
    return _letter_sum(enumerate_tableaux(mu, SYMPLECTIC, params, caps=caps), params)


def spo_character(lam, params: AlphabetParams, method: str = DIRECT, caps: Caps = DEFAULT_CAPS) -> LaurentPolynomial:
    """Sum of spo-tableau weights, or the same via symplectic times skew Schur in t."""
    lam = partition(lam)
    if method == DIRECT:
        return _letter_sum(enumerate_tableaux(lam, SPO, params, caps=caps), params)
    if method != MUSUM:
        raise OspError(f"unknown method {method!r}")
    total = LaurentPolynomial()
    lam_t = conjugate(lam)
    for size in range(sum(lam) + 1):
        for mu in partitions_of(size):
            if len(mu) > params.m or not contains(lam, mu):
                continue
            skew = schur(SkewShape(lam_t, conjugate(mu)), params, family="t", caps=caps)
            if skew:
                total = total + symplectic_schur(mu, params, caps) * skew
    return total


# ----------------------------------------------------------------- reports

@dataclass
class DegreeStatus:
    degree: int
    match: bool
    sides: dict[str, int] = field(default_factory=dict)
    mismatch: dict | None = None


@dataclass
class IdentityReport:
    identity: str
    m: int
    n: int
    q: int | None
    k: int
    degrees: list[DegreeStatus] = field(default_factory=list)
    counts: dict = field(default_factory=dict)
    extra: dict = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return all(d.match for d in self.degrees)

    def to_json(self) -> dict:
        d = asdict(self)
        d["status"] = "match" if self.ok else "mismatch"
        return d

    def summary(self) -> str:
        lines = [f"{self.identity} m={self.m} n={self.n} q={self.q} k={self.k}: {'match' if self.ok else 'MISMATCH'}"]
        for d in self.degrees:
            sides = ", ".join(f"{k}={v}" for k, v in d.sides.items())
            lines.append(f"  degree {d.degree}: {'match' if d.match else 'mismatch'} ({sides})")
            if d.mismatch:
                lines.append(f"    first mismatch: {d.mismatch}")
        return "\n".join(lines)


def _compare(sides: dict[str, LaurentPolynomial], k: int) -> list[DegreeStatus]:
    out = []
    names = list(sides)
    for d in range(k + 1):
        parts = {name: sides[name].degree_part(d) for name in names}
        ref = parts[names[0]]
        match = all(p == ref for p in parts.values())
        status = DegreeStatus(d, match, {name: len(p) for name, p in parts.items()})
        if not match:
            monos = sorted(set().union(*(p.terms for p in parts.values())))
            for mono in monos:
                coeffs = {name: p.coefficient(mono) for name, p in parts.items()}
                if len(set(coeffs.values())) > 1:
                    status.mismatch = {"monomial": str(mono), **{k2: str(v) for k2, v in coeffs.items()}}
                    break
        out.append(status)
    return out


def _partitions_upto(k: int, rows: int) -> list:
    return [lam for s in range(k + 1) for lam in partitions_of(s) if len(lam) <= rows]


def _even_columns(beta) -> bool:
    return all(h % 2 == 0 for h in conjugate(beta))


def _even_rows(beta) -> bool:
    return all(p % 2 == 0 for p in beta)


def _triple_weight(ptilde: Tableau, tabs: Iterable[Tableau], params: AlphabetParams) -> Monomial:
    mono = tableau_weight(ptilde, params)
    for t in tabs:
        mono = mono * content_weight(t, params)
    return mono


def _cauchy(params: AlphabetParams, k: int, dual: bool, caps: Caps) -> IdentityReport:
    start = time.perf_counter()
    m, n, q = params.m, params.n, params.q
    one = _one(params)
    big = Caps(max(caps.max_cells, k), caps.max_alphabet)

    def y(j):
        return [0] * (j - 1) + [1] + [0] * (q - j)

    def mono(x=None, t=None, yy=None):
        base = Monomial.one(m, n, q)
        return Monomial(tuple(x) if x else base.x, tuple(t) if t else base.t, tuple(yy) if yy else base.y)

    def unit(i, size, sign=1):
        v = [0] * size
        v[i - 1] = sign
        return v

    factors = []
    for j in range(1, q + 1):
        for i in range(1, m + 1):
            if dual:
                factors.append(one + LaurentPolynomial.monomial(mono(x=unit(i, m), yy=y(j))))
                factors.append(one + LaurentPolynomial.monomial(mono(x=unit(i, m, -1), yy=y(j))))
            else:
                factors.append(geometric_series(mono(x=unit(i, m), yy=y(j)), k))
                factors.append(geometric_series(mono(x=unit(i, m, -1), yy=y(j)), k))
        for i in range(1, n + 1):
            if dual:
                factors.append(geometric_series(mono(t=unit(i, n), yy=y(j)), k))
            else:
                factors.append(one + LaurentPolynomial.monomial(mono(t=unit(i, n), yy=y(j))))
    product_side = product_truncated(factors, k, one)

    lam_sum = LaurentPolynomial()
    n_spo = 0
    for lam in _partitions_upto(k, q if not dual else k):
        if not hook_condition(lam, params):
            continue
        partner = conjugate(lam) if dual else lam
        if len(partner) > q:
            continue
        s = schur(partner, params, "y", big)
        if not s:
            continue
        ch = spo_character(lam, params, DIRECT, big)
        n_spo += count_tableaux(lam, SPO, params, big)
        lam_sum = lam_sum + poly_mul_truncated(ch, s, k)
    beta_ok = _even_rows if dual else _even_columns
    beta_sum = LaurentPolynomial()
    for beta in _partitions_upto(k, q):
        if beta_ok(beta):
            beta_sum = beta_sum + schur(beta, params, "y", big)
    tableau_side = poly_mul_truncated(lam_sum, beta_sum, k)

    cls = ASTAR if dual else A
    forward = dual_spo_forward if dual else spo_forward
    array_terms: dict[Monomial, int] = {}
    triple_terms: dict[Monomial, int] = {}
    n_arrays = 0
    for size in range(k + 1):
        for pi in enumerate_arrays(cls, params, size):
            n_arrays += 1
            w = array_weight(pi, params)
            array_terms[w] = array_terms.get(w, 0) + 1
            triple = forward(pi, params)
            if dual:
                qb = dual_burge_forward(triple.l).transpose()
                tw = _triple_weight(triple.ptilde, [triple.pt, qb], params)
            else:
                qb = burge_forward(triple.l)
                tw = _triple_weight(triple.ptilde, [triple.p, qb], params)
            triple_terms[tw] = triple_terms.get(tw, 0) + 1
    sides = {
        "tableaux": tableau_side,
        "product": product_side,
        "arrays": LaurentPolynomial(array_terms),
        "bijection": LaurentPolynomial(triple_terms),
    }
    report = IdentityReport("dual_cauchy" if dual else "cauchy", m, n, q, k)
    report.degrees = _compare(sides, k)
    report.counts = {"arrays": n_arrays, "spo_tableaux": n_spo}
    report.wall_time = time.perf_counter() - start
    return report


def verify_cauchy(params: AlphabetParams, k: int, caps: Caps = DEFAULT_CAPS) -> IdentityReport:
    """Per y-degree <= k: sum of spo * s_lambda * even-column s_beta, the
    truncated product, class-A array weights and correspondence-image weights."""
    return _cauchy(params, k, dual=False, caps=caps)


def verify_dual_cauchy(params: AlphabetParams, k: int, caps: Caps = DEFAULT_CAPS) -> IdentityReport:
    return _cauchy(params, k, dual=True, caps=caps)


def verify_power_identity(params: AlphabetParams, k: int, caps: Caps = DEFAULT_CAPS) -> IdentityReport:
    """(2m+n)^k against sum of f_spo * f_ud and against the word bijection."""
    start = time.perf_counter()
    big = Caps(max(caps.max_cells, k), caps.max_alphabet)
    letters = params.letters()
    power = len(letters) ** k
    double_sum = 0
    terms = []
    for r in range(k // 2 + 1):
        for lam in partitions_of(k - 2 * r):
            if not hook_condition(lam, params):
                continue
            f_spo = count_tableaux(lam, SPO, params, big)
            f_ud = sum(1 for _ in enumerate_updown(lam, k, params))
            if f_ud != count_updown(lam, k, params):
                raise AssertionError(f"up-down enumeration disagrees with recurrence at {lam}")
            double_sum += f_spo * f_ud
            terms.append({"shape": list(lam), "f_spo": f_spo, "f_ud": f_ud})
    images = set()
    roundtrip_failures = 0
    n_words = 0
    for w in itertools.product(letters, repeat=k):
        n_words += 1
        pair = word_to_updown(list(w), params)
        images.add((pair.t, pair.chain))
        if updown_to_word(pair, params) != list(w):
            roundtrip_failures += 1
    bijective = len(images) if roundtrip_failures == 0 and len(images) == n_words else -1
    report = IdentityReport("power", params.m, params.n, None, k)
    sides = {"power": power, "tableau_sum": double_sum, "word_images": bijective}
    report.degrees = [DegreeStatus(k, len(set(sides.values())) == 1, sides)]
    report.counts = {"words": n_words, "distinct_images": len(images), "roundtrip_failures": roundtrip_failures}
    report.extra = {"terms": terms}
    report.wall_time = time.perf_counter() - start
    return report


# ------------------------------------------------------------ matrix count

def _compositions(total: int, parts: int, cap: int | None = None):
    if parts == 0:
        if total == 0:
            yield ()
        return
    hi = total if cap is None else min(cap, total)
    for first in range(hi + 1):
        for rest in _compositions(total - first, parts - 1, cap):
            yield (first,) + rest


def count_matrices(params: AlphabetParams, k: int) -> int:
    """Nonnegative q x (2m+n) matrices with entry sum k and a 0/1 circled block."""
    count = 0
    for r in range(k + 1):
        b1 = sum(1 for _ in _compositions(r, params.q * params.n, cap=1))
        b0 = sum(1 for _ in _compositions(k - r, 2 * params.m * params.q))
        count += b1 * b0
    return count


def _cont(mu) -> dict[int, int]:
    out: dict[int, int] = {}
    for p in mu:
        out[p] = out.get(p, 0) + 1
    return out


def closed_forms(params: AlphabetParams, k: int) -> dict:
    """Closed-form counts of class-A arrays with k columns.

    ``standard`` is the multiset count sum_r C(nq, r) sum_mu C(2mq, l) l! / prod_i cont(mu, i)!,
    l = len(mu).  Two variants without the factorials are also evaluated:
    ``binomial_*`` uses C(2mq, l) l! / prod_i cont(mu, i) and ``falling_*``
    uses 2mq / ((2mq - l)! prod_i cont(mu, i)).  ``*_literal`` takes the
    product over i = 1..k-r (None when some count is zero); ``*_occurring_parts``
    only over part sizes present in mu.
    """
    m, n, q = params.m, params.n, params.q
    cells = 2 * m * q
    standard = Fraction(0)
    stmt_literal: Fraction | None = Fraction(0)
    stmt_parts = Fraction(0)
    proof_literal: Fraction | None = Fraction(0)
    proof_parts = Fraction(0)
    for r in range(k + 1):
        lead = comb(n * q, r)
        for mu in partitions_of(k - r):
            ell = len(mu)
            cont = _cont(mu)
            if ell > cells:
                continue
            standard += lead * Fraction(comb(cells, ell) * factorial(ell), prod(factorial(c) for c in cont.values()))
            occurring = prod(cont.values())
            stmt_parts += lead * Fraction(comb(cells, ell) * factorial(ell), occurring)
            proof_parts += lead * Fraction(cells, factorial(cells - ell) * occurring)
            literal = prod(cont.get(i, 0) for i in range(1, k - r + 1))
            if literal == 0 or stmt_literal is None:
                stmt_literal = proof_literal = None
            else:
                stmt_literal += lead * Fraction(comb(cells, ell) * factorial(ell), literal)
                proof_literal += lead * Fraction(cells, factorial(cells - ell) * literal)

    def show(v):
        return None if v is None else str(v)

    return {
        "standard": show(standard),
        "binomial_literal": show(stmt_literal),
        "binomial_occurring_parts": show(stmt_parts),
        "falling_literal": show(proof_literal),
        "falling_occurring_parts": show(proof_parts),
    }


def verify_matrix_count(params: AlphabetParams, k: int, caps: Caps = DEFAULT_CAPS) -> IdentityReport:
    """Class-A arrays with k columns: matrix count vs sum f_spo d^lambda d^beta_even.

    ``d^beta_even`` counts semistandard tableaux on 1..q whose columns all
    have even length, the shapes produced by the Burge map.
    """
    start = time.perf_counter()
    big = Caps(max(caps.max_cells, k), caps.max_alphabet)
    matrices = count_matrices(params, k)
    arrays = sum(1 for _ in enumerate_arrays(A, params, k))
    triple_side = 0
    for size in range(k + 1):
        d_beta = sum(
            count_tableaux(beta, SEMISTANDARD, params, big)
            for beta in partitions_of(k - size)
            if _even_columns(beta)
        )
        if not d_beta:
            continue
        for lam in partitions_of(size):
            if not hook_condition(lam, params):
                continue
            f_spo = count_tableaux(lam, SPO, params, big)
            d_lam = count_tableaux(lam, SEMISTANDARD, params, big)
            triple_side += f_spo * d_lam * d_beta
    forms = closed_forms(params, k)
    sides = {"matrices": matrices, "arrays": arrays, "triples": triple_side, "closed_form": int(Fraction(forms["standard"]))}
    report = IdentityReport("matrix_count", params.m, params.n, params.q, k)
    report.degrees = [DegreeStatus(k, len(set(sides.values())) == 1, sides)]
    report.extra = {"closed_forms": forms}
    report.wall_time = time.perf_counter() - start
    return report


VERIFIERS: dict[str, Callable[..., IdentityReport]] = {
    "cauchy": verify_cauchy,
    "dual-cauchy": verify_dual_cauchy,
    "power": verify_power_identity,
    "matrix": verify_matrix_count,
}
