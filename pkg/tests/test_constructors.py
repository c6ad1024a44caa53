import numpy as np
import pytest

from galchar.classify import analyze_structure, check_frobenius_action
from galchar.constructors import (
    CaseParams,
    ParamsInvalid,
    affine_semidirect,
    construct_case,
    dihedral,
    extraspecial_semidirect,
    generalized_quaternion,
    heisenberg,
    quaternion8,
    quaternion_subgroup_SL2,
    singer_matrix,
    sweep_parameter_points,
    symmetric,
)
from galchar.fpmat import close_matrix_group, mat_order
from galchar.numth import primitive_root
from galchar.perm import PermGroup, Permutation


def test_singer_matrix():
    s = singer_matrix(2, 2)
    assert s.tolist() == [[0, 1], [1, 1]]
    assert mat_order(s, 2) == 3
    assert singer_matrix(3, 1).tolist() == [[2]]
    for p, n in ((3, 2), (5, 2), (2, 4)):
        assert mat_order(singer_matrix(p, n), p) == p**n - 1


def test_affine_semidirect_examples():
    a4 = affine_semidirect(2, 2, [singer_matrix(2, 2)], 1)
    assert a4.order == 12
    assert a4.nilpotent_residue().order == 4

    s3 = affine_semidirect(3, 1, [np.array([[2]], dtype=np.int64)], 1)
    assert s3.order == 6
    assert not s3.is_nilpotent()

    cover = affine_semidirect(2, 2, [singer_matrix(2, 2)], 2)
    assert cover.order == 36


def test_affine_rejects_singular():
    with pytest.raises(ParamsInvalid):
        affine_semidirect(3, 2, [np.array([[1, 0], [0, 0]], dtype=np.int64)], 1)


def test_quaternion_subgroups():
    for p, order in ((3, 8), (7, 16), (5, 8)):
        x, y = quaternion_subgroup_SL2(p, order)
        dets = [int(round(np.linalg.det(m))) % p for m in (x, y)]
        assert dets == [1, 1]
        elements = close_matrix_group([x, y], p)
        assert len(elements) == order
        # unique involution, cyclic index-2 subgroup: generalized quaternion
        involutions = [
            m
            for m in elements
            if np.array_equal(m @ m % p, np.eye(2, dtype=np.int64))
            and not np.array_equal(m, np.eye(2, dtype=np.int64))
        ]
        assert len(involutions) == 1
        assert mat_order(x, p) == order // 2
        # acts Frobeniusly on F_p^2
        assert check_frobenius_action([x, y], p, 2)

    with pytest.raises(ParamsInvalid):
        quaternion_subgroup_SL2(3, 4)


def test_heisenberg_and_q8():
    h = heisenberg(3)
    assert h.order == 27
    assert h.exponent == 3
    assert h.center().order == 3
    q8 = quaternion8()
    assert q8.order == 8
    assert sum(1 for x in q8.elements if x.order() == 2) == 1
    assert heisenberg(2).order == 8


def test_generalized_quaternion_structure():
    for order in (8, 16, 32):
        q = generalized_quaternion(order)
        assert q.order == order
        assert q.is_generalized_quaternion()
    with pytest.raises(ValueError):
        generalized_quaternion(4)


def test_extraspecial_semidirect_sl23():
    g = extraspecial_semidirect(2, [np.array([[0, 1], [1, 1]], dtype=np.int64)], 1)
    assert g.order == 24
    assert g.center().order == 2
    assert g.derived_subgroup().order == 8
    report = analyze_structure(g)
    assert report.case_tag == "a5"


def test_extraspecial_semidirect_a4_a6():
    g = extraspecial_semidirect(3, [singer_matrix(3, 2)], 1)
    assert g.order == 216
    assert analyze_structure(g).case_tag == "a4"
    x, y = quaternion_subgroup_SL2(3, 8)
    g = extraspecial_semidirect(3, [x, y], 1)
    assert g.order == 216
    assert analyze_structure(g).case_tag == "a6"


def test_heisenberg_automorphism_is_homomorphism():
    # phi_g . phi_h = phi_{gh} realised on the permutation level: the
    # group generated by P-translations and two automorphisms has order
    # |P| * |<g, h>|
    s = singer_matrix(3, 2)
    s2 = s @ s % 3
    g = extraspecial_semidirect(3, [s2], 1)
    assert g.order == 27 * 4


def test_construct_case_examples():
    d10 = construct_case(CaseParams("a1", 5, 1, 2))
    assert d10.order == 10
    assert analyze_structure(d10).case_tag == "a1"

    a2 = construct_case(CaseParams("a2", 3, 2, 1))
    assert a2.order == 72
    table_report = analyze_structure(a2)
    assert table_report.case_tag == "a2"

    a3 = construct_case(CaseParams("a3", 2, 2, 1, height=2))
    assert a3.order == 36

    a7 = construct_case(CaseParams("a7", 2, 2, 1, height=2))
    assert a7.order == 72


def test_construct_case_invalid_params():
    with pytest.raises(ParamsInvalid):
        construct_case(CaseParams("a1", 5, 1, 3))  # 3 does not divide 4
    with pytest.raises(ParamsInvalid):
        construct_case(CaseParams("a5", 3, 2, 2))  # odd-p a5: not transitive
    with pytest.raises(ParamsInvalid):
        construct_case(CaseParams("a6", 3, 2, 2))  # Q4 does not exist
    with pytest.raises(ParamsInvalid):
        construct_case(CaseParams("a1", 2, 1, 1))  # trivial complement
    with pytest.raises(ParamsInvalid):
        construct_case(CaseParams("a3", 2, 2, 1, height=1))  # needs C > 1
    with pytest.raises(ParamsInvalid):
        construct_case(CaseParams("a2", 5, 2, 1))  # 5 is not Mersenne


def test_constructed_frobenius_property():
    # a1 groups are Frobenius: stabilizers of nonzero vector points trivial
    g = construct_case(CaseParams("a1", 7, 1, 2))
    # points 0..6 are the vectors; 0 is the zero vector
    for point in range(1, 7):
        stab = [x for x in g.elements if x(point) == point and not x.is_identity]
        non_translations = [x for x in stab if x(0) == 0]
        assert not non_translations or all(x.is_identity for x in non_translations)
    report = analyze_structure(g)
    assert report.checklist["frobenius_action"]


def test_extraspecial_lemma_converse():
    # p-groups with Phi = P' = Z of index p^2 have order exactly p^3
    from galchar.perm import frattini_of_pgroup

    for maker, p in ((lambda: heisenberg(3), 3), (quaternion8, 2)):
        group = maker()
        z = group.center()
        fr = frattini_of_pgroup(group, p)
        der = group.derived_subgroup()
        if z.elements == fr.elements == der.elements and group.order == z.order * p * p:
            assert group.order == p**3


def test_sweep_enumeration():
    points = sweep_parameter_points()
    labels = {params.label() for params in points}
    assert "a1(p=3,n=1,d=1,h=1)" in labels  # S3
    assert "a3(p=2,n=2,d=1,h=5)" in labels  # order 972
    assert "a7(p=2,n=2,d=1,h=4)" in labels  # order 648
    assert "a5(p=3,n=2,d=2,h=1)" in labels  # infeasible, must be probed
    assert all(params.tag in {"a1", "a2", "a3", "a4", "a5", "a6", "a7"} for params in points)
    # enumeration is deterministic
    assert [p.label() for p in sweep_parameter_points()] == [
        p.label() for p in points
    ]
