import pytest

from supergrading.gradings import (Grading, PreconditionError, brute_force_good_gradings,
                                   component_basis, even_part_nilpotents, even_target,
                                   extensions, find_even_good_grading,
                                   good_gradings_from_pyramids, grading_from_h, is_good,
                                   is_good_via_centralizer, restrict_to_even, scan_candidates)
from supergrading.pyramids import (Pyramid, SuperPartition, dynkin_pyramid, e_pq,
                                   enumerate_pyramids, h_of, h_values, psi_order,
                                   super_partitions_up_to)
from supergrading.superalg import SuperDim, SuperMatrix

GL46 = SuperPartition((3, 1), (4, 2))


def test_grading_from_h_examples():
    dim = SuperDim(2, 0)
    assert grading_from_h(SuperMatrix.zero(dim)).degrees() == {0}
    assert grading_from_h(SuperMatrix.identity(SuperDim(2, 1))).degrees() == {0}
    assert grading_from_h(SuperMatrix.diagonal(dim, [1, -1]))[0, 1] == 2
    with pytest.raises(ValueError):
        grading_from_h(SuperMatrix.unit(dim, 0, 1))
    from fractions import Fraction
    with pytest.raises(ValueError):
        grading_from_h(SuperMatrix.diagonal(dim, [Fraction(1, 2), 0]))


def test_grading_invariants_enforced():
    with pytest.raises(ValueError):
        Grading(SuperDim(2, 0), ((0, 1), (1, 0)))
    with pytest.raises(ValueError):
        Grading(SuperDim(3, 0), ((0, 1, 1), (-1, 0, 1), (-1, -1, 0)))


def test_grading_json_round_trip():
    g = grading_from_h(h_of(dynkin_pyramid(GL46)))
    assert Grading.from_dict(g.to_dict()) == g


def test_component_basis_examples():
    dim = SuperDim(2, 0)
    zero = grading_from_h(SuperMatrix.zero(dim))
    assert component_basis(zero, 0) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    g = grading_from_h(SuperMatrix.diagonal(dim, [1, -1]))
    assert component_basis(g, 2) == [(0, 1)]
    sp = SuperPartition((2,), (1,))
    g = grading_from_h(h_of(dynkin_pyramid(sp)))
    comps = [component_basis(g, k) for k in sorted(g.degrees())]
    assert sum(map(len, comps)) == 9
    assert len({ab for c in comps for ab in c}) == 9


def test_is_good_examples():
    dim = SuperDim(2, 0)
    g = grading_from_h(SuperMatrix.diagonal(dim, [1, -1]))
    assert not is_good(g, SuperMatrix.zero(dim))
    with pytest.raises(PreconditionError):
        is_good(g, SuperMatrix.unit(dim, 1, 0))  # degree -2
    odd_dim = SuperDim(1, 1)
    with pytest.raises(PreconditionError):
        is_good(grading_from_h(SuperMatrix.diagonal(odd_dim, [1, -1])),
                SuperMatrix.unit(odd_dim, 0, 1))


@pytest.mark.parametrize("sp", list(super_partitions_up_to(5)), ids=str)
def test_dynkin_grading_is_good(sp):
    h = h_of(dynkin_pyramid(sp))
    e = e_pq(sp)
    assert is_good(grading_from_h(h), e)
    assert is_good_via_centralizer(h, e)


def test_is_good_via_centralizer_examples():
    sp = SuperPartition((2,), (1,))
    assert is_good_via_centralizer(h_of(dynkin_pyramid(sp)), e_pq(sp))
    dim = SuperDim(1, 0)
    assert is_good_via_centralizer(SuperMatrix.zero(dim), SuperMatrix.zero(dim))
    with pytest.raises(PreconditionError):
        is_good_via_centralizer(SuperMatrix.zero(SuperDim(2, 0)),
                                SuperMatrix.unit(SuperDim(2, 0), 1, 0))


def _split_target_candidates(shifts):
    """Full gl(4|6) diagonal h whose g0 part has rows f=(-2,-2) and f=(-3,1), shifted by c."""
    specs = psi_order(GL46)  # (4,odd), (3,even), (2,odd), (1,even)
    for c in shifts:
        yield h_values(specs, (-3, -2 + c, 1, -2 + c))


def test_split_target_has_no_good_extension():
    e = e_pq(GL46)
    target = even_target(GL46, (-2, -2), (-3, 1))
    seen = 0
    for hv in _split_target_candidates(range(-8, 9)):
        g = Grading.from_values(GL46.dim, hv)
        assert restrict_to_even(g) == target
        assert not is_good(g, e)
        assert not is_good_via_centralizer(SuperMatrix.diagonal(GL46.dim, hv), e)
        seen += 1
    assert seen == 17


def test_good_gradings_from_pyramids_examples():
    (g,) = good_gradings_from_pyramids(SuperPartition((1,), ()))
    assert g.degrees() == {0}
    assert len(set(good_gradings_from_pyramids(SuperPartition((2,), (1,))))) == 3
    gs = set(good_gradings_from_pyramids(GL46))
    for offs in [(-3, -3, -1, -1), (-3, -2, -1, 0), (-3, -1, -1, 1)]:
        assert grading_from_h(h_of(Pyramid(offs, psi_order(GL46)))) in gs


@pytest.mark.parametrize("sp", list(super_partitions_up_to(4)), ids=str)
def test_pyramid_gradings_distinct_and_good(sp):
    gs = good_gradings_from_pyramids(sp)
    assert len(set(gs)) == len(enumerate_pyramids(sp))
    e = e_pq(sp)
    N = sp.m + sp.n
    for g in gs:
        assert is_good(g, e)
        assert all(g[k // N, k % N] == 2 for k, x in enumerate(e.vector()) if x)


def test_brute_force_examples():
    sp = SuperPartition((2,), (1,))
    assert brute_force_good_gradings(sp, 3) == set(good_gradings_from_pyramids(sp))
    assert len(brute_force_good_gradings(sp, 3)) == 3
    sp = SuperPartition((1,), (1,))
    assert brute_force_good_gradings(sp, 3) == set(good_gradings_from_pyramids(sp))


@pytest.mark.slow
def test_brute_force_gl46_margin2():
    assert brute_force_good_gradings(GL46, 2) == set(good_gradings_from_pyramids(GL46))


@pytest.mark.parametrize("sp", list(super_partitions_up_to(4)), ids=str)
def test_criteria_agree_on_scanned_candidates(sp):
    for c in scan_candidates(sp, 2):
        assert c.good == c.good_via_centralizer
        if c.good:
            assert c.in_window


def test_restrict_examples():
    z = grading_from_h(SuperMatrix.zero(SuperDim(2, 1)))
    pair = restrict_to_even(z)
    assert pair.even.degrees() == {0} and pair.odd.degrees() == {0}
    assert restrict_to_even(grading_from_h(SuperMatrix.zero(SuperDim(2, 0)))).odd is None


@pytest.mark.parametrize("sp", list(super_partitions_up_to(5)), ids=str)
def test_dynkin_restricts_to_dynkin(sp):
    pair = restrict_to_even(grading_from_h(h_of(dynkin_pyramid(sp))))
    if sp.p:
        assert pair.even == grading_from_h(h_of(dynkin_pyramid(SuperPartition(sp.p, ()))))
    if sp.q:
        dq = h_of(dynkin_pyramid(SuperPartition((), sp.q)))
        assert pair.odd == grading_from_h(dq)


@pytest.mark.parametrize("sp", list(super_partitions_up_to(4)), ids=str)
def test_restriction_of_good_is_good(sp):
    ev, od = even_part_nilpotents(sp)
    for g in good_gradings_from_pyramids(sp):
        pair = restrict_to_even(g)
        if ev is not None:
            assert is_good(pair.even, ev)
        if od is not None:
            assert is_good(pair.odd, od)


def test_extensions_symmetric_target():
    target = restrict_to_even(grading_from_h(h_of(dynkin_pyramid(GL46))))
    assert [P.offsets for P in extensions(GL46, target)] == \
        [(-3, -3, -1, -1), (-3, -2, -1, 0), (-3, -1, -1, 1)]


def test_extensions_split_target():
    assert extensions(GL46, even_target(GL46, (-2, -2), (-3, 1))) == []


def test_extensions_trivial():
    sp = SuperPartition((1,), (1,))
    target = restrict_to_even(grading_from_h(SuperMatrix.zero(sp.dim)))
    assert [P.offsets for P in extensions(sp, target)] == [(0, 0)]


def test_find_even_examples():
    P = find_even_good_grading(SuperPartition((2,), (1,)))
    assert P.offsets[1] in (-1, 1)
    P = find_even_good_grading(SuperPartition((1,), ()))
    assert grading_from_h(h_of(P)).degrees() == {0}
    P = find_even_good_grading(GL46)
    g = grading_from_h(h_of(P))
    assert g.is_even() and is_good(g, e_pq(GL46))
