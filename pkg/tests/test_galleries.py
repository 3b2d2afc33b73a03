from fractions import Fraction as F

import pytest

from heckepaths.errors import FoldNotApplicable, NotHecke
from heckepaths.galleries import (
    DecoratedHeckePath,
    codim_tilde,
    decorate_with_max_chains,
    enumerate_decorations,
    fold_gallery,
    minimal_gallery,
    neg_count,
    parameter_pattern,
)
from heckepaths.model import enumerate_hecke
from heckepaths.paths import is_ls, make_path, stats, straight_path

from conftest import frac_vec


@pytest.fixture()
def v_path(a1):
    return make_path(a1, (F(1),), (F(0),), [(0,), ()], [F(0), F(1, 2), F(1)])


@pytest.fixture()
def theta_path(a2):
    return make_path(a2, frac_vec(1, 1), frac_vec(0, 0), [(0, 1, 0), ()], [F(0), F(1, 2), F(1)])


class TestMinimalGallery:
    def test_at_origin(self, a1):
        g = minimal_gallery(a1, (F(0),), (0,))
        assert [d.word for d in g.chambers] == [(), (0,)]
        assert g.trueness() == (True,) and not g.folds

    def test_true_at_half(self, a1):
        assert minimal_gallery(a1, (F(-1, 2),), (0,)).trueness() == (True,)

    def test_ghost_at_third(self, a1):
        assert minimal_gallery(a1, (F(1, 3),), (0,)).trueness() == (False,)

    def test_walls_are_inversions(self, a2):
        g = minimal_gallery(a2, frac_vec(0, 0), (0, 1, 0))
        w = a2.normalize_word((0, 1, 0))
        assert [g.step_root(j).coeffs for j in range(1, 4)] == [
            b.coeffs for b in a2.inversion_set(w)
        ]


class TestFoldGallery:
    def test_single_fold(self, a1):
        g = minimal_gallery(a1, (F(-1, 2),), (0,))
        folded = fold_gallery(g, [a1.simple_root_obj(0)])
        assert [d.word for d in folded.chambers] == [(), ()]
        assert folded.folds == frozenset({1})

    def test_empty_chain(self, a1):
        g = minimal_gallery(a1, (F(-1, 2),), (0,))
        assert fold_gallery(g, []) == g

    def test_ghost_wall_refused(self, a1):
        g = minimal_gallery(a1, (F(1, 3),), (0,))
        with pytest.raises(FoldNotApplicable):
            fold_gallery(g, [a1.simple_root_obj(0)])

    def test_ends_at_w_plus(self, a2, theta_path):
        from heckepaths.paths import is_hecke

        res = is_hecke(theta_path)
        (cert,) = res.certificates
        g = minimal_gallery(a2, theta_path.point(1), theta_path.directions[0])
        folded = fold_gallery(g, cert.roots)
        assert folded.end == theta_path.directions[1]
        # folds are at true walls, on the positive side
        assert folded.folds and all(folded.step_is_true(j) for j in folded.folds)


class TestNegCount:
    def test_folded_a1(self, a1):
        g = fold_gallery(minimal_gallery(a1, (F(-1, 2),), (0,)), [a1.simple_root_obj(0)])
        assert neg_count(g) == 0

    def test_minimal_at_special(self, a1):
        assert neg_count(minimal_gallery(a1, (F(0),), (0,))) == 1

    def test_minimal_at_ghost(self, a1):
        assert neg_count(minimal_gallery(a1, (F(1, 3),), (0,))) == 0


class TestCodimTilde:
    def test_v_path(self, v_path):
        dec = decorate_with_max_chains(v_path)
        assert codim_tilde(dec) == 1 == stats(v_path).codim

    def test_straight(self, a1):
        pi = straight_path(a1, (F(1),))
        assert codim_tilde(decorate_with_max_chains(pi)) == 0

    def test_lower_bound(self, a2, theta_path):
        cd = stats(theta_path).codim
        for dec in enumerate_decorations(theta_path):
            assert codim_tilde(dec) >= cd

    def test_ls_suite_equality(self, a2):
        lam = frac_vec(1, 1)
        for c1 in range(4):
            for c2 in range(4):
                y1 = (lam[0] - c1, lam[1] - c2)
                for w in enumerate_hecke(a2, lam, frac_vec(0, 0), y1):
                    if is_ls(w.path).ok:
                        dec = decorate_with_max_chains(w.path)
                        assert codim_tilde(dec) == stats(w.path).codim

    def test_requires_hecke(self, a1):
        bad = make_path(a1, (F(1),), (F(0),), [(), (0,)], [F(0), F(1, 2), F(1)])
        with pytest.raises(NotHecke):
            decorate_with_max_chains(bad)


class TestParameterPattern:
    def test_v_path(self, v_path):
        pat = parameter_pattern(v_path)
        assert pat.length == 1 and pat.factors == ("kappa*",)
        assert pat.groups == ((F(1, 2), 1),)

    def test_straight(self, a1):
        pat = parameter_pattern(straight_path(a1, (F(1),)))
        assert pat.length == 0 and pat.factors == ()

    def test_a2_ls_length_two(self, a2):
        p = make_path(a2, frac_vec(1, 1), frac_vec(0, 0), [(0, 1), (1,)], [F(0), F(1, 2), F(1)])
        pat = parameter_pattern(p)
        assert pat.length == 2 == stats(p).ddim

    def test_length_equals_ddim_over_suite(self, a2):
        lam = frac_vec(1, 1)
        for c1 in range(4):
            for c2 in range(4):
                y1 = (lam[0] - c1, lam[1] - c2)
                for w in enumerate_hecke(a2, lam, frac_vec(0, 0), y1):
                    assert parameter_pattern(w.path).length == stats(w.path).ddim

    def test_groups_decreasing(self, a2, theta_path):
        pat = parameter_pattern(theta_path)
        times = [t for t, _ in pat.groups]
        assert times == sorted(times, reverse=True)
        assert pat.length == sum(c for _, c in pat.groups)

    def test_max_attained_exactly_on_ls(self, a2):
        lam = frac_vec(1, 1)
        mu = frac_vec(0, 0)
        witnesses = enumerate_hecke(a2, lam, frac_vec(0, 0), mu)
        rho_gap = a2.rho_value(tuple(a - b for a, b in zip(lam, mu)))
        lengths = [parameter_pattern(w.path).length for w in witnesses]
        assert max(lengths) == rho_gap
        for w, n in zip(witnesses, lengths):
            assert (n == rho_gap) == is_ls(w.path).ok

    def test_kappa_star_count_word_invariance(self, a2):
        # empirical: swapping the reduced word of w_- does not change the
        # kappa*-count on the A2 loop suite
        from heckepaths.galleries import _max_chain, _reduced_words
        from heckepaths.paths import is_hecke

        for w in enumerate_hecke(a2, frac_vec(1, 1), frac_vec(0, 0), frac_vec(0, 0)):
            path = w.path
            for j in range(1, path.r):
                z = path.point(j)
                counts = set()
                chain = _max_chain(
                    a2, path.shape, z, path.direction_vector(j - 1), path.direction_vector(j), 20
                )
                for word in _reduced_words(a2, path.directions[j - 1]):
                    g = fold_gallery(minimal_gallery(a2, z, word), chain.roots)
                    counts.add(len(g.folds & {s for s in range(1, g.n + 1)}))
                assert len(counts) == 1

    def test_requires_hecke(self, a1):
        bad = make_path(a1, (F(1),), (F(0),), [(), (0,)], [F(0), F(1, 2), F(1)])
        with pytest.raises(NotHecke):
            parameter_pattern(bad)
