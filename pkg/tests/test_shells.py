import math

import pytest

from goeritz.primitivity import is_primitive_whitehead
from goeritz.sequences import make_params
from goeritz.shells import (
    DiskClass,
    DualPairKind,
    ShellKind,
    build_shell,
    dual_shell_relation,
    intersection_number,
    shell_primitive_indices,
)
from goeritz.words import abelianize, parse_word


def coprime_pairs(max_p):
    for p in range(2, max_p + 1):
        for q in range(1, p // 2 + 1):
            if math.gcd(p, q) == 1:
                yield p, q


def test_shell_words_5_2():
    shell = build_shell(make_params(5, 2))
    words = [str(e.boundary_word) for e in shell.entries]
    assert words[2] == "xy^2xy^3"
    assert words[4] == "xyxyxy^2xy"
    assert words[0] == "y^5"
    assert words[5] == "xyxyxyxyxy"


def test_first_entry_is_x_y_to_the_p():
    for p, q in ((4, 1), (7, 2), (9, 4), (11, 3)):
        shell = build_shell(make_params(p, q))
        assert str(shell.entries[1].boundary_word) == f"xy^{p}"


def test_shell_classes_8_3():
    shell = build_shell(make_params(8, 3))
    primitive = {e.index for e in shell.entries if e.disk_class is DiskClass.PRIMITIVE}
    assert primitive == {1, 3, 5, 7}
    assert shell.entries[0].disk_class is DiskClass.SEMIPRIMITIVE
    assert shell.entries[8].disk_class is DiskClass.SEMIPRIMITIVE


def test_kind_slopes_and_index_sets():
    params = make_params(10, 3)
    assert ShellKind.Q.slope(params) == 3
    assert ShellKind.P_MINUS_Q.slope(params) == 7
    assert ShellKind.Q_PRIME.slope(params) == 3
    assert ShellKind.P_MINUS_Q_PRIME.slope(params) == 7

    params = make_params(11, 3)  # q' = 4 here: 3*4 = 12 = 1 mod 11
    assert shell_primitive_indices(params, ShellKind.Q) == frozenset({1, 4, 7, 10})
    assert shell_primitive_indices(params, ShellKind.Q_PRIME) == frozenset({1, 3, 8, 10})


def test_intersection_numbers():
    shell = build_shell(make_params(5, 2))
    assert intersection_number(shell, 0, 5) == 4
    for j in range(4):
        assert intersection_number(shell, j, j + 1) == 0
    for j in range(3):
        assert intersection_number(shell, j, j + 2) == 1
    with pytest.raises(ValueError):
        intersection_number(shell, 3, 3)
    with pytest.raises(ValueError):
        intersection_number(shell, 4, 2)
    with pytest.raises(ValueError):
        intersection_number(shell, 0, 6)


def test_intersection_symmetry_under_reversal():
    # reading a shell backwards is again a shell: (i, j) matches (p-j, p-i)
    shell = build_shell(make_params(7, 2))
    p = 7
    for i in range(p):
        for j in range(i + 1, p + 1):
            assert intersection_number(shell, i, j) == intersection_number(
                shell, p - j, p - i
            )


def test_oracle_matches_classes_all_kinds():
    for p, q in coprime_pairs(40):
        params = make_params(p, q)
        for kind in ShellKind:
            shell = build_shell(params, kind)
            for entry in shell.entries:
                oracle = is_primitive_whitehead(entry.boundary_word)
                assert oracle == (entry.disk_class is DiskClass.PRIMITIVE), (
                    p,
                    q,
                    kind,
                    entry.index,
                )


def test_endpoint_words():
    for p, q in coprime_pairs(12):
        shell = build_shell(make_params(p, q))
        assert shell.entries[0].boundary_word == parse_word(f"y^{p}")
        assert shell.entries[p].boundary_word == parse_word("xy" * p)
        assert not is_primitive_whitehead(shell.entries[0].boundary_word)
        assert not is_primitive_whitehead(shell.entries[p].boundary_word)


def test_entry_abelianizations():
    for p, q in coprime_pairs(20):
        for kind in ShellKind:
            shell = build_shell(make_params(p, q), kind)
            for entry in shell.entries:
                assert abelianize(entry.boundary_word) == (entry.index, p)


def test_index_adjacency_pattern():
    # indices 1 and p-1 sit next to a semiprimitive endpoint; the companion
    # index sits next to neither endpoint whenever it is strictly inside
    for p, q in coprime_pairs(40):
        params = make_params(p, q)
        prim = shell_primitive_indices(params, ShellKind.Q)
        assert 1 in prim and p - 1 in prim
        qp = params.q_prime
        if 2 < qp < p - 2:
            assert {qp - 1, qp + 1}.isdisjoint({0, p})


def test_dual_shell_relation_no_common_dual():
    rel = dual_shell_relation(make_params(5, 2), DualPairKind.NO_COMMON_DUAL)
    assert rel.sd_kind is ShellKind.Q_PRIME and rel.sd_slope == 2
    assert rel.d_positions_in_se == (2, 3)
    assert rel.e_positions_in_sd == (2, 3)

    rel = dual_shell_relation(make_params(10, 3), DualPairKind.NO_COMMON_DUAL)
    assert rel.sd_slope == 3
    assert rel.e_positions_in_sd == (3, 7)
    assert rel.d_positions_in_se == (3, 7)


def test_dual_shell_relation_common_dual():
    rel = dual_shell_relation(make_params(7, 1), DualPairKind.COMMON_DUAL)
    assert rel.sd_kind is ShellKind.Q and rel.sd_slope == 1
    assert rel.e_positions_in_sd == (1, 6)
    assert rel.d_positions_in_se == (1, 6)


def test_dual_shell_relation_rejects_q1_without_common_dual():
    with pytest.raises(ValueError, match="common dual"):
        dual_shell_relation(make_params(7, 1), DualPairKind.NO_COMMON_DUAL)
