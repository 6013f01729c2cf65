from collections import Counter

import pytest

from ospkit.alphabet import (
    A,
    ASTAR,
    BURGE,
    DUAL_BURGE,
    AlphabetParams,
    InfeasibleError,
    OspError,
    TwoLineArray,
    array_weight,
    conjugate,
    enumerate_arrays,
    partitions_of,
    validate_array,
    word,
)
from ospkit.correspondences import (
    DualSpoTriple,
    SpoTriple,
    WordPair,
    burge_forward,
    burge_inverse,
    dual_burge_forward,
    dual_burge_inverse,
    dual_spo_forward,
    dual_spo_inverse,
    spo_forward,
    spo_inverse,
    updown_to_word,
    word_to_updown,
)
from ospkit.tableaux import EMPTY, SEMISTANDARD, SPO, UpDownTableau, enumerate_tableaux, is_valid, tableau_weight

from golden import (
    BURGE_INV_L,
    BURGE_INV_Q,
    BURGE_L,
    BURGE_Q,
    DUAL_L,
    DUAL_PARAMS,
    DUAL_PI,
    DUAL_S_T,
    DUAL_STEPS,
    EX4_PARAMS,
    EX4_PI,
    EX4_STEPS,
    WORD,
    WORD_P,
    WORD_PARAMS,
    WORD_SHAPES,
    arr,
    tab,
)

SMALL = AlphabetParams(m=1, n=1, q=2)


def _arrays(cls, params, max_cols):
    for size in range(max_cols + 1):
        yield from enumerate_arrays(cls, params, size)


def _even_column_tableaux(max_cells, top):
    p = AlphabetParams(q=top)
    for size in range(0, max_cells + 1, 2):
        for beta in partitions_of(size):
            if all(h % 2 == 0 for h in conjugate(beta)):
                yield from enumerate_tableaux(beta, SEMISTANDARD, p)


# --- spo correspondence, worked example

def test_example_forward_steps():
    triple, steps = spo_forward(EX4_PI, EX4_PARAMS, trace=True)
    assert len(steps) == 9
    for k, (step, (pt, p, (top, bottom))) in enumerate(zip(steps, EX4_STEPS), start=1):
        assert step.ptilde == tab(pt), k
        assert step.p == tab(p), k
        assert step.l == arr(top, bottom), k
    assert triple == SpoTriple(tab(EX4_STEPS[-1][0]), tab(EX4_STEPS[-1][1]), arr([3, 4], [2, 3]))


def test_example_inverse():
    pt, p, (top, bottom) = EX4_STEPS[-1]
    triple = SpoTriple(tab(pt), tab(p), arr(top, bottom))
    pi, steps = spo_inverse(triple, EX4_PARAMS, trace=True)
    assert pi == EX4_PI
    # the states met while undoing are the forward states in reverse
    got = [(s.ptilde, s.p, s.l) for s in steps]
    want = [(tab(a), tab(b), arr(*c)) for a, b, c in reversed(EX4_STEPS)] + [(EMPTY, EMPTY, TwoLineArray())]
    assert got == want


def test_example_inverse_step_six_to_five():
    # undoing column 6 re-creates ptilde_5 and ejects the letter 1 under top 4
    pt, p, (top, bottom) = EX4_STEPS[5]
    sub = TwoLineArray(EX4_PI.columns[:6])
    assert spo_inverse(SpoTriple(tab(pt), tab(p), arr(top, bottom)), EX4_PARAMS) == sub
    assert sub.columns[-1] == (4, word("1")[0])


def test_empty_triples():
    assert spo_forward(TwoLineArray(), SMALL) == SpoTriple()
    assert spo_inverse(SpoTriple(), SMALL) == TwoLineArray()
    assert dual_spo_forward(TwoLineArray(), SMALL) == DualSpoTriple()
    assert dual_spo_inverse(DualSpoTriple(), SMALL) == TwoLineArray()


def test_forward_rejects_wrong_class():
    with pytest.raises(OspError):
        spo_forward(arr([1, 1], "1o 1o"), SMALL)
    with pytest.raises(OspError):
        dual_spo_forward(arr([1, 1], "1 1"), SMALL)


def test_inverse_rejects_mismatched_shapes():
    bad = SpoTriple(tab([["1"]]), tab([[1, 1]]), TwoLineArray())
    with pytest.raises((InfeasibleError, OspError)):
        spo_inverse(bad, SMALL)


def test_triple_json_roundtrip():
    triple = spo_forward(EX4_PI, EX4_PARAMS)
    assert SpoTriple.from_json(triple.to_json()) == triple
    dual = dual_spo_forward(DUAL_PI, DUAL_PARAMS)
    assert DualSpoTriple.from_json(dual.to_json()) == dual


# --- spo correspondence, exhaustive

@pytest.mark.parametrize("params,max_cols", [(SMALL, 3), (AlphabetParams(2, 1, 2), 3), (AlphabetParams(1, 2, 2), 3)], ids=str)
def test_spo_roundtrip_and_invariants(params, max_cols):
    seen = set()
    for pi in _arrays(A, params, max_cols):
        triple, steps = spo_forward(pi, params, trace=True)
        assert all(s.ptilde.shape == s.p.shape for s in steps)
        assert is_valid(triple.ptilde, SPO, params)
        assert is_valid(triple.p, SEMISTANDARD)
        assert validate_array(triple.l, BURGE, params) is None
        # tops of pi = entries of P + tops of L + bottoms of L
        tops = Counter(pi.top)
        assert tops == Counter(e for _, e in triple.p.cells()) + Counter(triple.l.top) + Counter(triple.l.bottom)
        # circled letters never cancel
        circled = Counter(b for b in pi.bottom if b.in_b1)
        assert circled == Counter(e for _, e in triple.ptilde.cells() if e.in_b1)
        # x and t weights survive cancellation
        w = array_weight(pi, params)
        tw = tableau_weight(triple.ptilde, params)
        assert (w.x, w.t) == (tw.x, tw.t)
        assert spo_inverse(triple, params) == pi
        key = (triple.ptilde, triple.p, triple.l)
        assert key not in seen
        seen.add(key)


# --- Burge

def test_burge_example():
    q, steps = burge_forward(BURGE_L, trace=True)
    assert steps == [tab(rows) for rows in BURGE_Q]
    assert q == tab(BURGE_Q[-1])
    assert burge_inverse(q) == BURGE_L


def test_burge_inverse_example():
    assert burge_inverse(tab(BURGE_INV_Q)) == BURGE_INV_L
    assert burge_forward(BURGE_INV_L) == tab(BURGE_INV_Q)


def test_burge_empty():
    assert burge_forward(TwoLineArray()) == EMPTY
    assert burge_inverse(EMPTY) == TwoLineArray()


def test_burge_rejects_odd_columns():
    with pytest.raises(OspError):
        burge_inverse(tab([[1, 2], [3]]))


def test_burge_roundtrip_tableaux():
    count = 0
    for q in _even_column_tableaux(4, 4):
        l = burge_inverse(q)
        assert validate_array(l, BURGE, AlphabetParams(0, 0, 4)) is None
        assert burge_forward(l) == q
        count += 1
    assert count > 10


def test_burge_roundtrip_arrays():
    p = AlphabetParams(0, 0, 4)
    for l in _arrays(BURGE, p, 3):
        q = burge_forward(l)
        assert is_valid(q, SEMISTANDARD)
        assert all(h % 2 == 0 for h in conjugate(q.shape))
        assert burge_inverse(q) == l


# --- dual spo correspondence

def test_dual_example_steps():
    triple, steps = dual_spo_forward(DUAL_PI, DUAL_PARAMS, trace=True)
    for k, (pt, p, (top, bottom)) in DUAL_STEPS.items():
        step = steps[k - 1]
        assert step.ptilde == tab(pt), k
        assert step.p == tab(p), k
        assert step.l == arr(top, bottom), k
    assert triple.ptilde == tab(DUAL_STEPS[16][0])
    assert triple.pt == tab(DUAL_STEPS[16][1]).transpose()
    assert triple.l == DUAL_L


def test_dual_example_inverse():
    triple = dual_spo_forward(DUAL_PI, DUAL_PARAMS)
    assert dual_spo_inverse(triple, DUAL_PARAMS) == DUAL_PI


@pytest.mark.parametrize("params,max_cols", [(SMALL, 3), (AlphabetParams(2, 1, 2), 3), (AlphabetParams(1, 2, 2), 3)], ids=str)
def test_dual_roundtrip_and_invariants(params, max_cols):
    seen = set()
    for pi in _arrays(ASTAR, params, max_cols):
        triple, steps = dual_spo_forward(pi, params, trace=True)
        assert all(s.ptilde.shape == s.p.shape for s in steps)
        assert triple.pt.shape == conjugate(triple.ptilde.shape)
        assert is_valid(triple.ptilde, SPO, params)
        assert is_valid(triple.pt, SEMISTANDARD)
        assert validate_array(triple.l, DUAL_BURGE, params) is None
        assert dual_spo_inverse(triple, params) == pi
        key = (triple.ptilde, triple.pt, triple.l)
        assert key not in seen
        seen.add(key)


# --- dual Burge

def test_dual_burge_example():
    s = dual_burge_forward(DUAL_L)
    assert s.transpose() == tab(DUAL_S_T)
    assert dual_burge_inverse(s) == DUAL_L


def test_dual_burge_small():
    assert dual_burge_forward(arr([2], [1])).transpose() == tab([[1, 2]])
    assert dual_burge_forward(TwoLineArray()) == EMPTY
    assert dual_burge_inverse(EMPTY) == TwoLineArray()


def test_dual_burge_roundtrip_tableaux():
    p = AlphabetParams(q=3)
    count = 0
    for size in range(0, 5, 2):
        for beta in partitions_of(size):
            if any(part % 2 for part in beta):
                continue
            for st in enumerate_tableaux(beta, SEMISTANDARD, p):
                s = st.transpose()
                l = dual_burge_inverse(s)
                assert validate_array(l, DUAL_BURGE, p) is None
                assert dual_burge_forward(l) == s
                count += 1
    assert count > 5


def test_dual_burge_roundtrip_arrays():
    p = AlphabetParams(0, 0, 3)
    for l in _arrays(DUAL_BURGE, p, 3):
        s = dual_burge_forward(l)
        assert is_valid(s.transpose(), SEMISTANDARD)
        assert all(part % 2 == 0 for part in s.transpose().shape)
        assert dual_burge_inverse(s) == l


# --- words and up-down tableaux

def test_word_example():
    pair, tabs = word_to_updown(word(WORD), WORD_PARAMS, trace=True)
    assert [t for t in tabs] == [tab(rows) for rows in WORD_P]
    assert pair.chain.chain == tuple(WORD_SHAPES)
    assert pair.t == tab([["1o", "2o"]])
    assert updown_to_word(pair, WORD_PARAMS) == word(WORD)


def test_word_empty():
    pair = word_to_updown([], SMALL)
    assert pair == WordPair(EMPTY, UpDownTableau(((),)))
    assert updown_to_word(pair, SMALL) == []


def test_word_pair_json():
    pair = word_to_updown(word(WORD), WORD_PARAMS)
    assert WordPair.from_json(pair.to_json()) == pair


@pytest.mark.parametrize("params,k", [(AlphabetParams(1, 1), 4), (AlphabetParams(2, 0), 3), (AlphabetParams(0, 2), 4)], ids=str)
def test_word_bijection_is_injective(params, k):
    import itertools

    images = {}
    for length in range(k + 1):
        for w in itertools.product(params.letters(), repeat=length):
            pair = word_to_updown(list(w), params)
            assert pair not in images
            images[pair] = w
            assert updown_to_word(pair, params) == list(w)
