"""Fusion layer: tensor assembly, associators, duals, braiding, the suite."""

import itertools

import numpy as np
import pytest

from kappalab.catalog import builtin
from kappalab.fusion import FusionData, FusionDataError, NoBraidingError, \
    verify_fusion, zigzag_residuals
from kappalab.semicat import (
    Obj, compose, dagger, identity, is_unitary, mor_from_blocks, mor_inverse,
    residual, scalar_of,
)

GOLDEN = (1 + np.sqrt(5)) / 2


def rand_mor(fd, rng, u, v):
    return mor_from_blocks(u, v, {
        s: rng.normal(size=(v(s), u(s))) + 1j * rng.normal(size=(v(s), u(s)))
        for s in set(u.support) & set(v.support)})


class TestTensorObj:
    def test_unit_law(self, fib):
        a = Obj.from_dict({"1": 2, "tau": 3})
        assert fib.tensor_obj(fib.unit_obj(), a) == a
        assert fib.tensor_obj(a, fib.unit_obj()) == a

    def test_fibonacci_tau_square(self, fib):
        assert fib.tensor_obj("tau", "tau") == Obj.from_dict({"1": 1, "tau": 1})

    def test_ising_sigma_square(self, ising):
        assert ising.tensor_obj("sigma", "sigma") == \
            Obj.from_dict({"1": 1, "psi": 1})

    def test_multiplicity_oracle(self, ising):
        # brute-force sum over simple pairs
        a = Obj.from_dict({"sigma": 2, "psi": 1})
        b = Obj.from_dict({"1": 1, "sigma": 1})
        got = ising.tensor_obj(a, b)
        for c in ising.simples:
            want = sum(a(s) * b(t) * ising.n(s, t, c)
                       for s in ising.simples for t in ising.simples)
            assert got(c) == want


class TestTensorMor:
    def test_identities(self, fib):
        a = Obj.from_dict({"1": 1, "tau": 2})
        b = Obj.from_dict({"tau": 1})
        got = fib.tensor_mor(identity(a), identity(b))
        assert residual(got, identity(fib.tensor_obj(a, b))) == 0

    def test_pointed_scalars_multiply(self, z3):
        x = mor_from_blocks(Obj.of("1"), Obj.of("1"), {"1": [[2.0]]})
        y = mor_from_blocks(Obj.of("2"), Obj.of("2"), {"2": [[3.0 + 1j]]})
        t = z3.tensor_mor(x, y)
        assert scalar_of(t) == (2.0) * (3.0 + 1j)

    def test_functorial(self, fib):
        rng = np.random.default_rng(7)
        a = Obj.from_dict({"1": 1, "tau": 1})
        f1 = rand_mor(fib, rng, a, a)
        f2 = rand_mor(fib, rng, a, a)
        g1 = rand_mor(fib, rng, a, a)
        g2 = rand_mor(fib, rng, a, a)
        lhs = compose(fib.tensor_mor(f1, g1), fib.tensor_mor(f2, g2))
        rhs = fib.tensor_mor(compose(f1, f2), compose(g1, g2))
        assert residual(lhs, rhs) < 1e-12

    def test_dagger_compatible(self, fib):
        rng = np.random.default_rng(8)
        a = Obj.from_dict({"1": 1, "tau": 1})
        f, g = rand_mor(fib, rng, a, a), rand_mor(fib, rng, a, a)
        assert residual(fib.tensor_mor(dagger(f), dagger(g)),
                        dagger(fib.tensor_mor(f, g))) < 1e-12


class TestAssociator:
    def test_unit_slots_are_identity(self, ising):
        for a, c in itertools.product(ising.simples, repeat=2):
            for trip in ((a, ising.unit, c), (ising.unit, a, c),
                         (a, c, ising.unit)):
                m = ising.associator(*trip)
                assert residual(m, identity(m.src)) == 0

    def test_fibonacci_golden_matrix(self, fib):
        # the unitary pentagon solution, verified by the pentagon sweep
        m = fib.associator("tau", "tau", "tau").block("tau")
        want = np.array([[1 / GOLDEN, 1 / np.sqrt(GOLDEN)],
                         [1 / np.sqrt(GOLDEN), -1 / GOLDEN]])
        assert np.linalg.norm(m - want.T) < 1e-12 or \
            np.linalg.norm(m - want) < 1e-12

    def test_semion_sign(self, semion):
        assert abs(scalar_of(semion.associator("1", "1", "1")) + 1) < 1e-12

    def test_unitary(self, ising):
        for a, b, c in itertools.product(ising.simples, repeat=3):
            assert is_unitary(ising.associator(a, b, c)).ok


class TestDuality:
    def test_unit_ev_coev_trivial(self, fib):
        assert scalar_of(fib.ev(fib.unit_obj())) == 1.0
        assert scalar_of(fib.coev(fib.unit_obj())) == 1.0

    def test_quantum_dimension(self, fib):
        got = scalar_of(compose(dagger(fib.ev("tau")), fib.ev("tau")))
        assert abs(got - GOLDEN) < 1e-12

    def test_zigzag_ising_sigma(self, ising):
        z1, z2 = zigzag_residuals(ising, "sigma")
        assert max(z1, z2) < 1e-9

    def test_dual_identity(self, fib):
        u = Obj.from_dict({"1": 1, "tau": 2})
        assert residual(fib.dual_mor(identity(u)),
                        identity(fib.conj_obj(u))) < 1e-12

    def test_double_dual_is_phi_conjugation(self, ising):
        rng = np.random.default_rng(9)
        u = Obj.from_dict({"sigma": 1, "psi": 1})
        v = Obj.from_dict({"sigma": 2})
        f = rand_mor(ising, rng, u, v)
        lhs = compose(ising.phi(u), ising.dual_mor(ising.dual_mor(f)))
        rhs = compose(f, ising.phi(v))
        assert residual(lhs, rhs) < 1e-9

    def test_pointed_dual_scalar(self, z3):
        f = mor_from_blocks(Obj.of("1"), Obj.of("1"), {"1": [[2.5 + 1j]]})
        assert scalar_of(z3.dual_mor(f)) == 2.5 + 1j

    def test_conjugate_identity_and_scalar(self, z3):
        u = Obj.from_dict({"1": 1})
        assert residual(z3.conjugate_mor(identity(u)),
                        identity(z3.conj_obj(u))) < 1e-12
        f = mor_from_blocks(Obj.of("1"), Obj.of("1"), {"1": [[2.0 - 3j]]})
        assert scalar_of(z3.conjugate_mor(f)) == 2.0 + 3j

    def test_conjugate_multiplicative_up_to_nu(self, fib):
        # naturality of nu: (fbar (x) gbar) nu = nu conj(g (x) f)
        rng = np.random.default_rng(10)
        u = Obj.from_dict({"tau": 1})
        x = Obj.from_dict({"1": 1, "tau": 1})
        f = rand_mor(fib, rng, u, x)
        g = rand_mor(fib, rng, u, u)
        lhs = compose(fib.tensor_mor(fib.conjugate_mor(f), fib.conjugate_mor(g)),
                      fib.nu(x, u))
        rhs = compose(fib.nu(u, u), fib.conjugate_mor(fib.tensor_mor(g, f)))
        assert residual(lhs, rhs) < 1e-9

    def test_dual_contract_agrees_with_fast_path(self, ising):
        rng = np.random.default_rng(11)
        u = Obj.from_dict({"1": 1, "sigma": 2})
        v = Obj.from_dict({"sigma": 1, "psi": 1})
        f = rand_mor(ising, rng, u, v)
        assert residual(ising.dual_mor(f), ising.dual_contract(f)) < 1e-12
        assert residual(ising.nu(u, v), ising.nu_contract(u, v)) < 1e-12
        assert residual(ising.phi(u), ising.phi_contract(u)) < 1e-12


class TestCoherators:
    def test_nu_unitality(self, fib):
        for u in fib.simples:
            ub = fib.conj_obj(Obj.of(u))
            lhs = compose(fib.tensor_mor(identity(ub), fib.r_mor()),
                          fib.nu(u, fib.unit))
            assert residual(lhs, identity(ub)) < 1e-9

    def test_phi_pointed_is_phase(self, semion):
        val = scalar_of(semion.phi(Obj.of("1")))
        assert abs(abs(val) - 1.0) < 1e-12

    def test_r_real_structure(self, ising):
        lhs = compose(ising.r_mor(), ising.conjugate_mor(ising.r_mor()))
        assert residual(lhs, ising.phi(ising.unit_obj())) < 1e-9


class TestBraiding:
    def test_unit_braiding_trivial(self, fib):
        u = Obj.from_dict({"1": 1, "tau": 2})
        b = fib.braiding(fib.unit_obj(), u)
        assert residual(b, identity(u)) < 1e-12

    def test_semion_value(self, semion):
        assert abs(scalar_of(semion.braiding("1", "1")) - 1j) < 1e-12

    def test_fibonacci_phases(self, fib):
        # hexagon solution; frozen after the load-time hexagon sweep
        assert abs(complex(fib.R[("tau", "tau", "1")][0, 0])
                   - np.exp(-4j * np.pi / 5)) < 1e-12
        assert abs(complex(fib.R[("tau", "tau", "tau")][0, 0])
                   - np.exp(3j * np.pi / 5)) < 1e-12

    def test_no_braiding_error(self):
        fd = builtin("z2-cocycle").payload
        with pytest.raises(NoBraidingError):
            fd.braiding("1", "1")


class TestVerifyFusion:
    def test_trivial_all_zero(self, trivial):
        rep = verify_fusion(trivial)
        assert rep.overall
        assert all(c.residual < 1e-14 for c in rep.checks)

    @pytest.mark.parametrize("name", ["z2", "z2-cocycle", "z3", "semion",
                                      "fibonacci", "ising"])
    def test_catalog_passes(self, name):
        rep = verify_fusion(builtin(name).payload)
        assert rep.overall, [c.check_id for c in rep.checks if not c.passed]
        assert max(c.residual for c in rep.checks) < 1e-9

    def test_perturbed_f_entry_fails_pentagon(self, fib):
        f = {k: np.array(v, dtype=complex) for k, v in fib.F.items()}
        f[("tau", "tau", "tau", "tau")] = \
            f[("tau", "tau", "tau", "tau")] + np.array([[1e-3, 0], [0, 0]])
        bad = FusionData(fib.simples, fib.unit, dict(fib.dual), dict(fib.N),
                         f, dict(fib.evcoef), fib.R, name="perturbed")
        rep = verify_fusion(bad)
        assert not rep.check("pentagon").passed
        assert rep.check("pentagon").residual > 1e-4

    def test_evcoef_phase_rescaling_invariance(self, fib):
        # the choice of unitary dual functor is a structure; phase rescales
        # must not change any verification outcome
        rng = np.random.default_rng(12)
        ev = {s: v * np.exp(2j * np.pi * rng.random())
              for s, v in fib.evcoef.items()}
        ev[fib.unit] = fib.evcoef[fib.unit]
        rescaled = FusionData(fib.simples, fib.unit, dict(fib.dual),
                              dict(fib.N), dict(fib.F), ev, fib.R,
                              name="rescaled")
        rep0 = verify_fusion(fib)
        rep1 = verify_fusion(rescaled)
        assert [c.check_id for c in rep0.checks] == \
            [c.check_id for c in rep1.checks]
        for c0, c1 in zip(rep0.checks, rep1.checks):
            assert c0.passed == c1.passed
            assert c1.residual < 1e-9


class TestLoadValidation:
    def test_bad_dual(self, fib):
        with pytest.raises(FusionDataError, match="dual"):
            FusionData(("1", "tau"), "1", {"1": "1", "tau": "1"},
                       dict(fib.N), dict(fib.F), dict(fib.evcoef))

    def test_nonassociative_n(self):
        n = {("1", "1", "1"): 1, ("1", "g", "g"): 1, ("g", "1", "g"): 1,
             ("g", "g", "1"): 1, ("g", "g", "g"): 1}
        with pytest.raises(FusionDataError):
            FusionData(("1", "g"), "1", {"1": "1", "g": "g"}, n, {},
                       {"1": 1.0, "g": 1.0})

    def test_missing_f(self, fib):
        f = {k: v for k, v in fib.F.items()
             if k != ("tau", "tau", "tau", "tau")}
        with pytest.raises(FusionDataError, match="missing F"):
            FusionData(fib.simples, fib.unit, dict(fib.dual), dict(fib.N),
                       f, dict(fib.evcoef))

    def test_strict_unit_gauge_enforced(self, fib):
        f = {k: np.array(v, dtype=complex) for k, v in fib.F.items()}
        f[("1", "tau", "tau", "1")] = np.array([[0.5]])
        with pytest.raises(FusionDataError, match="strict-unit"):
            FusionData(fib.simples, fib.unit, dict(fib.dual), dict(fib.N),
                       f, dict(fib.evcoef))
