import itertools

import pytest

from ospkit.alphabet import AlphabetParams, CapExceeded, LetterRangeError, OspError, SkewShape, L, partitions_of
from ospkit.polynomial import Monomial
from ospkit.tableaux import (
    DUAL_SEMISTANDARD,
    EMPTY,
    KINDS,
    SEMISTANDARD,
    SKEW_SEMISTANDARD,
    SPO,
    SYMPLECTIC,
    Caps,
    PuncturedTableau,
    Tableau,
    UpDownTableau,
    b0_portion,
    count_tableaux,
    count_updown,
    enumerate_tableaux,
    enumerate_updown,
    is_valid,
    tableau_weight,
    validate_tableau,
    validate_updown,
)

from golden import CHAR_TABLEAUX, tab


def _cells_of(shape):
    return [(r, c) for r, length in enumerate(shape) for c in range(length)]


def _spo_by_definition(rows, m):
    """Spo test written from the definition, independent of the library checker."""
    grid = {(r, c): e for r, row in enumerate(rows) for c, e in enumerate(row)}
    b0 = {k: e for k, e in grid.items() if e.in_b0}
    # B0 cells form a Young diagram at the top-left
    for (r, c) in b0:
        if c > 0 and (r, c - 1) not in b0:
            return False
        if r > 0 and (r - 1, c) not in b0:
            return False
    for (r, c), e in b0.items():
        if e.value < r + 1 or e.value > m:
            return False
        if (r, c + 1) in b0 and not e <= b0[(r, c + 1)]:
            return False
        if (r + 1, c) in b0 and not e < b0[(r + 1, c)]:
            return False
    for (r, c), e in grid.items():
        right, below = grid.get((r, c + 1)), grid.get((r + 1, c))
        if right is not None and right.in_b1 and not e < right:
            return False
        if below is not None and below.in_b1 and not e <= below:
            return False
    return True


# --- validation

def test_character_example_tableaux():
    p = AlphabetParams(m=1, n=2)
    for row in CHAR_TABLEAUX:
        assert is_valid(tab([row]), SPO, p)
    v = validate_tableau(tab([["1o", "1o"]]), SPO, p)
    assert v is not None and "strictly" in v.reason


def test_single_cell_every_kind():
    p = AlphabetParams(m=1, n=1, q=1)
    for kind in (SEMISTANDARD, DUAL_SEMISTANDARD, SKEW_SEMISTANDARD):
        assert is_valid(tab([[1]]), kind, p)
    for kind in (SYMPLECTIC, SPO):
        assert is_valid(tab([["1"]]), kind, p)


def test_circled_column_weak():
    assert is_valid(tab([["1o"], ["1o"]]), SPO, AlphabetParams(m=1, n=1))


def test_symplectic_condition():
    p = AlphabetParams(m=2, n=0)
    assert not is_valid(tab([["1"], ["1b"]]), SYMPLECTIC, p)
    assert is_valid(tab([["1"], ["2"]]), SYMPLECTIC, p)
    v = validate_tableau(tab([["1", "1b"], ["1b"]]), SYMPLECTIC, p)
    assert v is not None


def test_out_of_range_letter():
    with pytest.raises(LetterRangeError):
        tableau_weight(tab([["3"]]), AlphabetParams(m=2, n=1))
    with pytest.raises(LetterRangeError):
        validate_tableau(tab([["2o"]]), SPO, AlphabetParams(m=1, n=1))


def test_semistandard_and_dual():
    assert is_valid(tab([[1, 1], [2]]), SEMISTANDARD)
    assert not is_valid(tab([[1, 1], [1]]), SEMISTANDARD)
    assert is_valid(tab([[1, 2], [1]]), DUAL_SEMISTANDARD)
    assert not is_valid(tab([[1, 1]]), DUAL_SEMISTANDARD)


def test_skew_validation():
    t = Tableau.of([[None, 1], [1]])
    assert t.is_skew and t.inner == (1,)
    assert is_valid(t, SKEW_SEMISTANDARD)
    assert not is_valid(t, SEMISTANDARD)


def test_shape_must_be_partition():
    assert not is_valid(Tableau(((1,), (1, 2))), SEMISTANDARD)


# --- weights

def test_weights():
    p = AlphabetParams(m=1, n=1)
    assert tableau_weight(tab([["1b", "1o"]]), p) == Monomial((-1,), (1,), (0,))
    assert tableau_weight(tab([["1", "1b"]]), p) == Monomial.one(1, 1, 1)
    assert tableau_weight(EMPTY, p) == Monomial.one(1, 1, 1)


def test_weight_is_product_of_cells():
    for m, n in [(1, 1), (2, 1)]:
        p = AlphabetParams(m, n)
        for size in range(4):
            for lam in partitions_of(size):
                for t in enumerate_tableaux(lam, SPO, p):
                    w = Monomial.one(m, n, 1)
                    for _, e in t.cells():
                        w = w * tableau_weight(tab([[str(e)]]), p)
                    assert tableau_weight(t, p) == w


# --- enumeration

def test_enumerate_character_example():
    got = [t.to_lists() for t in enumerate_tableaux((2,), SPO, AlphabetParams(m=1, n=2))]
    assert [[[str(e) for e in r] for r in t] for t in got] == [[row] for row in CHAR_TABLEAUX]


def test_enumerate_trivial_and_column():
    assert list(enumerate_tableaux((), SPO, AlphabetParams())) == [EMPTY]
    got = {str(t) for t in enumerate_tableaux((1, 1), SPO, AlphabetParams(m=1, n=1))}
    assert got == {"[[1], [1o]]", "[[1b], [1o]]", "[[1o], [1o]]"}


@pytest.mark.parametrize("m,n", [(0, 1), (1, 0), (1, 1), (2, 0), (0, 2), (1, 2), (2, 1), (2, 2)])
def test_spo_enumeration_matches_filter(m, n):
    p = AlphabetParams(m, n)
    letters = p.letters()
    for size in range(5):
        for lam in partitions_of(size):
            cells = _cells_of(lam)
            brute = 0
            for fill in itertools.product(letters, repeat=len(cells)):
                rows = [[None] * length for length in lam]
                for (r, c), e in zip(cells, fill):
                    rows[r][c] = e
                if _spo_by_definition(rows, m):
                    brute += 1
                    assert is_valid(tab(rows), SPO, p)
            listed = list(enumerate_tableaux(lam, SPO, p))
            assert len(listed) == brute == count_tableaux(lam, SPO, p)
            assert len(set(listed)) == len(listed)


def test_enumeration_is_lexicographic():
    p = AlphabetParams(m=1, n=1)
    seqs = [[e.rank(p) for _, e in t.cells()] for t in enumerate_tableaux((2, 1), SPO, p)]
    assert seqs == sorted(seqs)


def test_valid_spo_has_symplectic_b0_portion():
    p = AlphabetParams(m=2, n=2)
    for lam in [(2, 1), (2, 2), (3, 1), (1, 1, 1)]:
        for t in enumerate_tableaux(lam, SPO, p):
            assert is_valid(b0_portion(t), SYMPLECTIC, p)


def test_semistandard_counts_hook_content():
    # number of SSYT of shape (2,1) on {1,2,3} is 8; shape (2,2) on {1,2,3} is 6
    p = AlphabetParams(q=3)
    assert count_tableaux((2, 1), SEMISTANDARD, p) == 8
    assert count_tableaux((2, 2), SEMISTANDARD, p) == 6


def test_skew_enumeration():
    got = list(enumerate_tableaux(SkewShape((2, 1), (1,)), SKEW_SEMISTANDARD, AlphabetParams(q=2)))
    # two independent cells on {1,2}
    assert len(got) == 4


def test_caps():
    with pytest.raises(CapExceeded):
        list(enumerate_tableaux((3, 3, 3), SPO, AlphabetParams(), caps=Caps(max_cells=8)))
    with pytest.raises(CapExceeded):
        list(enumerate_tableaux((1,), SPO, AlphabetParams(m=4, n=1), caps=Caps(max_alphabet=8)))


# --- json and punctured tableaux

def test_json_roundtrip():
    t = tab([["1", "1b"], ["2o"]])
    assert t.to_json() == {"shape": [2, 1], "rows": [["1", "1b"], ["2o"]]}
    assert Tableau.from_json(t.to_json()) == t
    with pytest.raises(OspError):
        Tableau.from_json({"shape": [3], "rows": [["1"]]})


def test_puncture_and_fill():
    t = tab([["1", "1b"], ["2"]])
    p = PuncturedTableau.puncture(t, (1, 2))
    assert p.fill(L("1b")) == t
    with pytest.raises(OspError):
        PuncturedTableau.puncture(t, (2, 2))


# --- up-down tableaux

def test_updown_validation():
    p = AlphabetParams(m=1, n=1)
    assert validate_updown(UpDownTableau(((), (1,), (2,))), p) is None
    assert validate_updown(UpDownTableau(((),)), p) is None
    assert validate_updown(UpDownTableau(((), (1,), (1, 1))), AlphabetParams(m=1, n=0)) is not None
    assert validate_updown(UpDownTableau(((), (2,))), p) is not None


def test_updown_counts():
    p = AlphabetParams(m=1, n=1)
    assert [u.chain for u in enumerate_updown((2,), 2, p)] == [((), (1,), (2,))]
    assert len(list(enumerate_updown((), 0, p))) == 1
    assert [u.chain for u in enumerate_updown((), 2, p)] == [((), (1,), ())]


@pytest.mark.parametrize("m,n", [(1, 0), (1, 1), (2, 1), (0, 2)])
def test_updown_enumeration_matches_recurrence(m, n):
    p = AlphabetParams(m, n)
    for k in range(6):
        for size in range(k + 1):
            for lam in partitions_of(size):
                listed = list(enumerate_updown(lam, k, p))
                assert len(listed) == count_updown(lam, k, p)
                assert all(validate_updown(u, p) is None and u.shape == lam for u in listed)


def test_kinds_listed():
    assert set(KINDS) == {SEMISTANDARD, DUAL_SEMISTANDARD, SYMPLECTIC, SPO, SKEW_SEMISTANDARD}
