"""Core block-matrix layer: composition, dagger, sums, tolerances."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from kappalab.semicat import (
    DEFAULT_TOL, Mor, NotAScalarError, Obj, ShapeMismatchError, Tol,
    approx_eq, compose, dagger, direct_sum, identity, is_unitary,
    mor_from_blocks, residual, scalar_of,
)


def mor_1x1(label, value):
    return mor_from_blocks(Obj.of(label), Obj.of(label), {label: [[value]]})


def random_mor(rng, src: Obj, dst: Obj) -> Mor:
    return mor_from_blocks(src, dst, {
        s: rng.normal(size=(dst(s), src(s))) + 1j * rng.normal(size=(dst(s), src(s)))
        for s in set(src.support) & set(dst.support)})


OBJS = st.dictionaries(st.sampled_from("xyz"), st.integers(1, 3),
                       min_size=1, max_size=3).map(Obj.from_dict)


@st.composite
def mor_triples(draw):
    rng = np.random.default_rng(draw(st.integers(0, 2**32 - 1)))
    a, b, c, d = (draw(OBJS) for _ in range(4))
    return (random_mor(rng, a, b), random_mor(rng, b, c), random_mor(rng, c, d))


class TestCompose:
    def test_identity_laws(self):
        rng = np.random.default_rng(0)
        a, b = Obj.from_dict({"x": 2, "y": 1}), Obj.from_dict({"x": 1, "y": 2})
        f = random_mor(rng, a, b)
        assert residual(compose(identity(a), f), f) == 0
        assert residual(compose(f, identity(b)), f) == 0

    def test_scalar_multiplication(self):
        f = mor_1x1("x", 2.0)
        g = mor_1x1("x", 3.0)
        assert scalar_of(compose(f, g)) == 6.0

    def test_shape_mismatch(self):
        f = mor_1x1("x", 1.0)
        g = mor_from_blocks(Obj.of("x", 2), Obj.of("x", 2), {"x": np.eye(2)})
        with pytest.raises(ShapeMismatchError):
            compose(f, g)

    @settings(max_examples=25, deadline=None)
    @given(mor_triples())
    def test_associative(self, fgh):
        f, g, h = fgh
        r = residual(compose(compose(f, g), h), compose(f, compose(g, h)))
        assert r < 1e-12


class TestDagger:
    def test_identity(self):
        a = Obj.from_dict({"x": 3})
        assert residual(dagger(identity(a)), identity(a)) == 0

    def test_conjugates_scalars(self):
        assert scalar_of(dagger(mor_1x1("x", 1j))) == -1j

    def test_random_block_is_conjugate_transpose(self):
        # direct transpose-conjugate oracle
        rng = np.random.default_rng(1)
        m = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        f = mor_from_blocks(Obj.of("x", 2), Obj.of("x", 2), {"x": m})
        np.testing.assert_array_equal(dagger(f).block("x"), m.conj().T)

    @settings(max_examples=25, deadline=None)
    @given(mor_triples())
    def test_involution_and_antihomomorphism(self, fgh):
        f, g, _ = fgh
        assert residual(dagger(dagger(f)), f) == 0
        assert residual(dagger(compose(f, g)),
                        compose(dagger(g), dagger(f))) < 1e-12


class TestDirectSum:
    def test_identities(self):
        a, b = Obj.from_dict({"x": 1}), Obj.from_dict({"x": 2, "y": 1})
        s = direct_sum(identity(a), identity(b))
        assert residual(s, identity(a + b)) == 0

    def test_zero_padding(self):
        rng = np.random.default_rng(2)
        f = random_mor(rng, Obj.of("x"), Obj.of("x"))
        z = Mor(Obj.of("x"), Obj.of("x"), ())
        s = direct_sum(z, f)
        blk = s.block("x")
        assert blk[0, 0] == 0 and blk[0, 1] == 0 and blk[1, 0] == 0
        assert blk[1, 1] == f.block("x")[0, 0]

    def test_two_scalars_give_diagonal(self):
        # block-diagonal oracle
        s = direct_sum(mor_1x1("x", 2.0), mor_1x1("x", 5.0))
        np.testing.assert_array_equal(s.block("x"), np.diag([2.0, 5.0]))


class TestApproxEq:
    def test_reflexive(self):
        f = mor_1x1("x", 1.5 + 0.5j)
        ok, r = approx_eq(f, f)
        assert ok and r == 0

    def test_threshold_semantics(self):
        f = mor_1x1("x", 1.0)
        assert approx_eq(f, mor_1x1("x", 1.0 + 1e-12)).ok
        assert not approx_eq(f, mor_1x1("x", 1.0 + 1e-3), Tol(1e-9, 0.0)).ok

    @settings(max_examples=25, deadline=None)
    @given(mor_triples())
    def test_symmetric(self, fgh):
        f, g, _ = fgh
        g2 = Mor(f.src, f.dst, g.blocks) if (g.src, g.dst) == (f.src, f.dst) else f
        assert approx_eq(f, g2).residual == approx_eq(g2, f).residual


class TestIsUnitary:
    def test_identity(self):
        ok, r = is_unitary(identity(Obj.from_dict({"x": 2, "y": 1})))
        assert ok and r == 0

    def test_phases(self):
        f = mor_from_blocks(Obj.of("x", 2), Obj.of("x", 2),
                            {"x": np.diag(np.exp(1j * np.array([0.3, 1.7])))})
        assert is_unitary(f).ok

    def test_scalar_two_fails_with_residual_three(self):
        ok, r = is_unitary(mor_1x1("x", 2.0))
        assert not ok and abs(r - 3.0) < 1e-12

    def test_shape_mismatch(self):
        f = mor_from_blocks(Obj.of("x", 1), Obj.of("x", 2), {"x": [[1], [0]]})
        with pytest.raises(ShapeMismatchError):
            is_unitary(f)

    def test_dagger_invariance(self):
        rng = np.random.default_rng(3)
        f = random_mor(rng, Obj.of("x", 2), Obj.of("x", 2))
        assert abs(is_unitary(f).residual - is_unitary(dagger(f)).residual) < 1e-12


class TestScalarOf:
    def test_unit(self):
        assert scalar_of(identity(Obj.of("x"))) == 1.0

    def test_rejects_higher_dimension(self):
        with pytest.raises(NotAScalarError):
            scalar_of(identity(Obj.of("x", 2)))

    def test_fibonacci_quantum_dimension(self, fib):
        # Perron-Frobenius oracle: largest eigenvalue of the tau fusion matrix
        n_tau = np.array([[fib.n("tau", x, y) for x in fib.simples]
                          for y in fib.simples], dtype=float)
        d_tau = max(np.linalg.eigvals(n_tau).real)
        got = scalar_of(compose(fib.coev("tau"), dagger(fib.coev("tau"))))
        assert abs(got - d_tau) < 1e-12
        assert abs(d_tau - (1 + np.sqrt(5)) / 2) < 1e-12


class TestTol:
    def test_invariants(self):
        with pytest.raises(ValueError):
            Tol(abs_eps=0.0)
        with pytest.raises(ValueError):
            Tol(abs_eps=1e-9, rel_eps=-1.0)
