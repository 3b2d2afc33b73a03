from fractions import Fraction as F

import pytest

from heckepaths.errors import CapHit, NotDominant, UnsupportedType
from heckepaths.model import (
    enumerate_hecke,
    freudenthal_multiplicity,
    generate_ls_paths,
    multiplicity,
    multiplicity_table,
)
from heckepaths.paths import is_hecke, is_ls, stats
from heckepaths.root_system import dominance_difference

from conftest import frac_vec, group_elements


class TestGenerateLS:
    def test_a1_adjoint(self, a1):
        graph = generate_ls_paths(a1, (F(1),))
        assert len(graph.nodes) == 3 and not graph.partial
        assert {p.endpoint for p in graph.nodes} == {(F(1),), (F(0),), (F(-1),)}

    def test_a2_adjoint(self, a2):
        graph = generate_ls_paths(a2, frac_vec(1, 1))
        assert len(graph.nodes) == 8
        assert graph.endpoint_counts()[frac_vec(0, 0)] == 2

    def test_zero_shape(self, a2):
        graph = generate_ls_paths(a2, frac_vec(0, 0))
        assert len(graph.nodes) == 1 and graph.nodes[0].is_constant

    def test_every_node_is_ls(self, a2):
        graph = generate_ls_paths(a2, frac_vec(2, 1))
        assert all(is_ls(p).ok for p in graph.nodes)

    def test_rejects_non_dominant(self, a2):
        with pytest.raises(NotDominant):
            generate_ls_paths(a2, frac_vec(1, 0))

    def test_cap_flags_partial(self, a1aff):
        lam = _fundamental_coweight(a1aff)
        graph = generate_ls_paths(a1aff, lam, depth_cap=10)
        assert graph.partial and graph.completed_depth >= 1


class TestMultiplicity:
    def test_highest_weight(self, a1):
        assert multiplicity(a1, (F(1),), (F(1),)) == 1

    def test_above_highest(self, a1):
        assert multiplicity(a1, (F(1),), (F(2),)) == 0

    def test_a2_zero_weight(self, a2):
        assert multiplicity(a2, frac_vec(1, 1), frac_vec(0, 0)) == 2

    def test_cap_hit_raises(self, a1aff):
        lam = _fundamental_coweight(a1aff)
        delta = _delta_coroot(a1aff)
        far = tuple(a - 40 * b for a, b in zip(lam, delta))
        with pytest.raises(CapHit):
            multiplicity(a1aff, lam, far, depth_cap=10)

    def test_weyl_symmetry(self, a2):
        table = multiplicity_table(a2, frac_vec(2, 1))
        for mu, count in table.items():
            for el in group_elements(a2, 3):
                img = a2.act(el, mu)
                if img in table:
                    assert table[img] == count


class TestFreudenthal:
    def test_a1(self, a1):
        assert freudenthal_multiplicity(a1, (F(1),), (F(0),)) == 1

    def test_a2_adjoint_zero(self, a2):
        assert freudenthal_multiplicity(a2, frac_vec(1, 1), frac_vec(0, 0)) == 2

    def test_highest(self, a2):
        assert freudenthal_multiplicity(a2, frac_vec(2, 2), frac_vec(2, 2)) == 1

    def test_b2(self, b2):
        # highest-root coroot (1,1) heads the 5-dimensional dual module
        lam = _highest_root_coroot(b2)
        assert lam == (F(1), F(1))
        table = multiplicity_table(b2, lam)
        assert sum(table.values()) == 5
        for mu, count in table.items():
            assert freudenthal_multiplicity(b2, lam, mu) == count

    def test_affine_partition_values(self, a1aff):
        lam = _fundamental_coweight(a1aff)
        delta = _delta_coroot(a1aff)
        for n, expected in ((1, 1), (2, 2), (3, 3), (4, 5)):
            mu = tuple(a - n * b for a, b in zip(lam, delta))
            assert freudenthal_multiplicity(a1aff, lam, mu) == expected

    def test_g2_route_agreement(self):
        from heckepaths import RootGeneratingSystem

        g2 = RootGeneratingSystem.from_gcm([[2, -1], [-3, 2]])
        lam = frac_vec(2, 1)  # pairings (1, 0): a fundamental-type coweight
        table = multiplicity_table(g2, lam, depth_cap=10_000)
        cache = {}
        for mu, count in table.items():
            assert freudenthal_multiplicity(g2, lam, mu, cache=cache) == count

    def test_indefinite_refused(self):
        from heckepaths import RootGeneratingSystem

        indef = RootGeneratingSystem.from_gcm([[2, -3], [-3, 2]])
        with pytest.raises(UnsupportedType):
            freudenthal_multiplicity(indef, indef.zero(), indef.zero())


class TestEnumerateHecke:
    def test_a1_loop(self, a1):
        res = enumerate_hecke(a1, (F(1),), (F(0),), (F(0),))
        assert len(res) == 1
        (w,) = res
        assert w.path.breakpoints == (F(0), F(1, 2), F(1))
        assert [x.word for x in w.path.directions] == [(0,), ()]
        assert len(w.certificates) == 1

    def test_a1_straight(self, a1):
        res = enumerate_hecke(a1, (F(1),), (F(0),), (F(1),))
        assert len(res) == 1 and res[0].path.r == 1

    def test_unreachable(self, a1):
        assert enumerate_hecke(a1, (F(1),), (F(0),), (F(2),)) == []

    def test_a2_loop_counts(self, a2):
        res = enumerate_hecke(a2, frac_vec(1, 1), frac_vec(0, 0), frac_vec(0, 0))
        assert len(res) == 3
        assert sum(1 for w in res if is_ls(w.path).ok) == 2

    def test_all_outputs_hecke_with_certs(self, a2):
        for w in enumerate_hecke(a2, frac_vec(1, 1), frac_vec(0, 0), frac_vec(-1, 0)):
            assert is_hecke(w.path).ok
            assert len(w.certificates) == w.path.r - 1

    def test_deterministic_order(self, a2):
        a = enumerate_hecke(a2, frac_vec(1, 1), frac_vec(0, 0), frac_vec(0, 0))
        b = enumerate_hecke(a2, frac_vec(1, 1), frac_vec(0, 0), frac_vec(0, 0))
        assert [w.path for w in a] == [w.path for w in b]


class TestOracleAgreement:
    @pytest.mark.parametrize("lam", [(1,), (2,), (3,)])
    def test_a1(self, a1, lam):
        lam = tuple(F(x) for x in lam)
        table = multiplicity_table(a1, lam)
        for mu, count in table.items():
            assert freudenthal_multiplicity(a1, lam, mu) == count

    def test_a2_adjoint(self, a2):
        table = multiplicity_table(a2, frac_vec(1, 1))
        assert table[frac_vec(0, 0)] == freudenthal_multiplicity(a2, frac_vec(1, 1), frac_vec(0, 0))

    def test_ls_subset_of_hecke(self, a2):
        lam = frac_vec(1, 1)
        graph = generate_ls_paths(a2, lam)
        by_endpoint = {}
        for node in graph.nodes:
            by_endpoint.setdefault(node.endpoint, set()).add(node)
        for mu, nodes in by_endpoint.items():
            hecke = {w.path for w in enumerate_hecke(a2, lam, frac_vec(0, 0), mu)}
            assert nodes <= hecke

    def test_characterization_filter(self, a2):
        lam = frac_vec(1, 1)
        graph = generate_ls_paths(a2, lam)
        for mu in graph.endpoint_counts():
            rho_gap = a2.rho_value(tuple(a - b for a, b in zip(lam, mu)))
            hecke = enumerate_hecke(a2, lam, frac_vec(0, 0), mu)
            filtered = {w.path for w in hecke if stats(w.path).ddim == rho_gap}
            ls_nodes = {p for p in graph.nodes if p.endpoint == mu}
            assert filtered == ls_nodes

    def test_endpoint_bound(self, a2):
        for node in generate_ls_paths(a2, frac_vec(2, 2)).nodes:
            assert dominance_difference(a2, frac_vec(2, 2), node.endpoint) is not None


def _fundamental_coweight(system):
    """A dominant integral coweight with pairings summing to 1."""
    from itertools import product

    for y in product(range(-2, 3), repeat=system.rank_x):
        v = tuple(F(x) for x in y)
        vals = [system.pairing(i, v) for i in range(system.n)]
        if sorted(vals) == [0] * (system.n - 1) + [1]:
            return v
    raise AssertionError("no fundamental-type coweight found")


def _delta_coroot(system):
    from heckepaths.linalg import nullspace, scale_to_primitive_integers

    a = system.gcm.entries
    n = system.n
    ker = nullspace([[a[j][i] for j in range(n)] for i in range(n)])
    c = scale_to_primitive_integers(ker[0])
    if any(x < 0 for x in c):
        c = tuple(-x for x in c)
    out = system.zero()
    for i, coef in enumerate(c):
        out = tuple(a1 + coef * b for a1, b in zip(out, system.simple_coroots[i]))
    return out


def _highest_root_coroot(system):
    """Coroot vector of the highest root (finite type, rank 2)."""
    roots = system.real_roots_up_to_height(10)
    best = max(roots, key=lambda r: r.height)
    return system.coroot_vector(best)
