import pytest
from hypothesis import given, settings

from accordion.bijection import (BijectionError, find_x, normalize_leaf, phi, psi,
                                 split_dissection)
from accordion.complex import facets
from accordion.core import HollowDissection
from accordion.oracle import enumerate_dissections
from accordion.serpents import Serpent, enumerate_serpent_nests, is_serpent_nest
from strategies import dissections

H = HollowDissection.of


def test_normalize_fixed_point():
    D = H(4, [(1, 5)])
    assert normalize_leaf(D).target == D


def test_normalize_rotates():
    assert normalize_leaf(H(4, [(3, 7)])).target == H(4, [(1, 5)])


def test_normalize_contracts():
    norm = normalize_leaf(H(5, [(1, 7)]))
    assert norm.target == H(4, [(1, 5)])
    assert len(facets(norm.target)) == len(facets(norm.source))


@settings(max_examples=30, deadline=None)
@given(dissections(min_n=4, max_n=7))
def test_normalization_transports_facets(D):
    if not D.diagonals:
        return
    norm = normalize_leaf(D)
    assert (1, 5) in norm.target.diagonals
    Fs = facets(D)
    images = {norm.facet_forward(F) for F in Fs}
    assert images == set(facets(norm.target))
    assert all(norm.facet_backward(norm.facet_forward(F)) == F for F in Fs)


def test_find_x():
    D = H(4, [(1, 5)])
    assert find_x(D, {(2, 6)}) == 6
    assert find_x(D, {(4, 8)}) == 8


def test_split_examples():
    ctx = split_dissection(H(4, [(1, 5)]), 6)
    assert not ctx.upper.dissection.diagonals and not ctx.lower.dissection.diagonals
    ctx = split_dissection(H(5, [(1, 5), (5, 9)]), 8)
    assert ctx.zigzag == [(5, 9)]
    D = H(6, [(1, 5), (5, 9), (9, 1)])
    ctx = split_dissection(D, 12)
    assert not ctx.upper.dissection.diagonals
    assert ctx.lower.dissection.n == 5


def test_split_validates():
    with pytest.raises(ValueError):
        split_dissection(H(4, [(3, 7)]), 6)
    with pytest.raises(ValueError):
        split_dissection(H(4, [(1, 5)]), 7)


def test_unfold_single_edge_fan():
    D = H(6, [(1, 5), (5, 9), (5, 11)])
    ctx = split_dissection(D, 12)
    lower = ctx.lower.dissection
    for e in sorted(lower.diagonals):
        S = Serpent((e,), lower)
        U = ctx.unfold(S, "lower")
        assert ctx.fold(U, "lower") == S


def test_phi_psi_examples():
    D = H(4, [(1, 5)])
    single = frozenset({Serpent(((1, 5),), D)})
    assert phi(H(5), frozenset()) == frozenset()
    assert phi(D, {(2, 6)}) == single
    assert phi(D, {(4, 8)}) == frozenset()
    assert psi(D, single) == {(2, 6)}
    assert psi(D, frozenset()) == {(4, 8)}
    assert psi(H(5), frozenset()) == frozenset()


def test_phi_rejects_nonfacet():
    with pytest.raises(BijectionError):
        phi(H(5), {(2, 6)})


def test_trace_records_steps():
    D = H(5, [(1, 5), (5, 9)])
    tr = []
    N = phi(D, {(2, 8), (4, 8)}, trace=tr)
    assert tr and tr[0]["x"] == 8
    tr = []
    assert psi(D, N, trace=tr) == {(2, 8), (4, 8)}
    assert tr


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_round_trip_exhaustive(n):
    for D in enumerate_dissections(n):
        Fs, Ns = facets(D), enumerate_serpent_nests(D)
        images = [phi(D, F) for F in Fs]
        assert all(is_serpent_nest(N) for N in images)
        assert set(images) == set(Ns) and len(set(images)) == len(images)
        assert all(psi(D, N) == F for F, N in zip(Fs, images))


@settings(max_examples=15, deadline=None)
@given(dissections(min_n=7, max_n=8))
def test_round_trip_random_large(D):
    for N in enumerate_serpent_nests(D)[::7]:
        assert phi(D, psi(D, N)) == N


@pytest.mark.parametrize("n", [5, 6, 7])
def test_strict_walk_invariant_small(n):
    for D in enumerate_dissections(n):
        for N in enumerate_serpent_nests(D):
            psi(D, N, strict=True)


def test_strict_walk_invariant_breaks_on_octagon():
    # the intermediate serpent S_2 shares an end with a nest serpent, yet the
    # walk still recovers the right facet
    D = H(8, [(1, 5), (1, 7), (7, 11), (7, 15), (11, 15)])
    bad = []
    for F in facets(D):
        N = phi(D, F)
        assert psi(D, N) == F
        try:
            psi(D, N, strict=True)
        except BijectionError:
            bad.append(F)
    assert bad
