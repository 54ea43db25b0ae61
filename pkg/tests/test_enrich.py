"""Enrichment layer: internal homs, mates, kappa, conjugates, the suite."""

import itertools

import numpy as np
import pytest

from kappalab.catalog import builtin
from kappalab.enrich import (
    DegenerateBasisError, EnrichedFunctorData, HomBasis, build_enriched,
    check_v_natural, conjugate_enriched, random_graded, self_enrichment,
    verify_dagger_enriched,
)
from kappalab.modulecat import as_module, random_module_mor
from kappalab.semicat import (
    Obj, compose, dagger, identity, mor_from_blocks, mor_inverse, residual,
    scalar_of,
)


class TestHomObjects:
    def test_trivial_everything_scalar_one(self, enrichments):
        e = enrichments["regular:trivial"]
        assert e.hom("1", "1") == Obj.of("1")
        assert abs(scalar_of(e.j("1")) - 1) < 1e-12
        assert abs(scalar_of(e.comp("1", "1", "1")) - 1) < 1e-12
        assert abs(scalar_of(e.kappa("1", "1")) - 1) < 1e-12

    def test_fibonacci_hom_multiplicities(self, enrichments):
        e = enrichments["regular:fibonacci"]
        assert e.hom("tau", "tau") == Obj.from_dict({"1": 1, "tau": 1})
        assert e.hom("1", "tau") == Obj.of("tau")


class TestMates:
    def test_counit_is_mate_of_identity(self, enrichments):
        e = enrichments["regular:fibonacci"]
        for m, n in itertools.product(e.module.msimples, repeat=2):
            a = e.hom(m, n)
            if not a.total_dim:
                continue
            got = e.mate_fwd(e.eps(m, n), Obj.of(m), a, Obj.of(n))
            assert residual(got, identity(a)) < 1e-10

    def test_unit_is_mate_of_identity(self, enrichments):
        e = enrichments["regular:ising"]
        mod = e.module
        for m in mod.msimples:
            for u in e.base.simples:
                mu = mod.act_obj(Obj.of(m), Obj.of(u))
                got = e.mate_bwd(e.eta(m, Obj.of(u)), Obj.of(m), mu)
                assert residual(got, identity(mu)) < 1e-10

    def test_mate1_identity(self, enrichments):
        # mate(f1 o f2) = (id < f1) o mate(f2) for f1 in V, f2 into the hom
        e = enrichments["regular:fibonacci"]
        rng = np.random.default_rng(31)
        mod = e.module
        m, n = Obj.of("tau"), Obj.of("tau")
        a = e.hom(m, n)
        u = Obj.from_dict({"1": 1, "tau": 1})
        f1 = mor_from_blocks(u, a, {
            s: rng.normal(size=(a(s), u(s))) + 1j * rng.normal(size=(a(s), u(s)))
            for s in set(u.support) & set(a.support)})
        got = e.mate_bwd(f1, m, n)
        want = compose(mod.act_mor(identity(m), f1), e.mate_bwd(identity(a), m, n))
        assert residual(got, want) < 1e-10

    def test_roundtrip_on_bases(self, enrichments):
        for name in ("regular:semion", "regular:fibonacci", "vec-over-z2"):
            e = enrichments[name]
            for m, n in itertools.product(e.module.msimples, repeat=2):
                a = e.hom(m, n)
                if not a.total_dim:
                    continue
                g = identity(a)
                rt = e.mate_fwd(e.mate_bwd(g, m, n), Obj.of(m), a, Obj.of(n))
                assert residual(rt, g) < 1e-10


class TestUnderlyingDagger:
    def test_j_self_dagger(self, enrichments):
        e = enrichments["regular:ising"]
        for m in e.module.msimples:
            assert residual(e.underlying_dagger(e.j(m), m, m), e.j(m)) < 1e-9

    def test_double_application(self, enrichments):
        e = enrichments["regular:fibonacci"]
        rng = np.random.default_rng(32)
        f = random_graded(e, rng, "tau", "tau")
        dd = e.underlying_dagger(
            e.underlying_dagger(f, "tau", "tau"), "tau", "tau")
        assert residual(dd, f) < 1e-9

    def test_trivial_is_conjugation(self, enrichments):
        e = enrichments["regular:trivial"]
        f = mor_from_blocks(Obj.of("1"), e.hom("1", "1"), {"1": [[2 + 3j]]})
        assert abs(scalar_of_like(e.underlying_dagger(f, "1", "1")) - (2 - 3j)) \
            < 1e-12


def scalar_of_like(m):
    (_, b), = m.blocks
    return complex(b[0, 0])


class TestConjugateCategory:
    def test_trivial_unchanged(self, enrichments):
        e = enrichments["regular:trivial"]
        cbar = conjugate_enriched(e)
        assert abs(scalar_of(cbar.j("1")) - 1) < 1e-12
        assert abs(scalar_of(cbar.comp("1", "1", "1")) - 1) < 1e-12

    def test_conjugate_axioms(self, enrichments):
        e = enrichments["regular:fibonacci"]
        cbar = conjugate_enriched(e)
        fd = e.base
        for x, y in itertools.product(e.module.msimples, repeat=2):
            a = cbar.hom(x, y)
            if not a.total_dim:
                continue
            left = compose(fd.tensor_mor(cbar.j(x), identity(a)),
                           cbar.comp(x, x, y))
            right = compose(fd.tensor_mor(identity(a), cbar.j(y)),
                            cbar.comp(x, y, y))
            assert residual(left, identity(a)) < 1e-9
            assert residual(right, identity(a)) < 1e-9
        for x, y, z, w in itertools.product(e.module.msimples, repeat=4):
            a1, a2, a3 = cbar.hom(x, y), cbar.hom(y, z), cbar.hom(z, w)
            lhs = compose(fd.tensor_mor(cbar.comp(x, y, z), identity(a3)),
                          cbar.comp(x, z, w))
            rhs = compose(
                compose(fd.associator(a1, a2, a3),
                        fd.tensor_mor(identity(a1), cbar.comp(y, z, w))),
                cbar.comp(x, y, w))
            assert residual(lhs, rhs) < 1e-9

    def test_double_conjugate_via_phi(self, enrichments):
        # phi components form a functor A -> conj(conj(A)): functoriality
        e = enrichments["regular:ising"]
        fd = e.base
        c1 = conjugate_enriched(e)
        for x, y, z in itertools.product(e.module.msimples, repeat=3):
            a1, a2 = e.hom(x, y), e.hom(y, z)
            psi_xy = fd.phi(a1)
            psi_yz = fd.phi(a2)
            psi_xz = fd.phi(e.hom(x, z))
            compbarbar = compose(
                fd.nu(c1.hom(y, x), c1.hom(z, y)),
                fd.conjugate_mor(c1.comp(z, y, x)))
            lhs = compose(fd.tensor_mor(psi_xy, psi_yz), compbarbar)
            rhs = compose(e.comp(x, y, z), psi_xz)
            assert residual(lhs, rhs) < 1e-9

    def test_kappa_functoriality_is_kappa2(self, enrichments):
        e = enrichments["regular:semion"]
        fd = e.base
        for x, y, z in itertools.product(e.module.msimples, repeat=3):
            lhs = compose(fd.tensor_mor(e.kappa(x, y), e.kappa(y, z)),
                          e.comp(x, y, z))
            rhs = compose(e.compbar(x, y, z), e.kappa(x, z))
            assert residual(lhs, rhs) < 1e-9


class TestSelfEnrichment:
    def test_hom_multiplicities_match_closed_form(self, fib):
        se = self_enrichment(fib)
        for u, v in itertools.product(fib.simples, repeat=2):
            assert se.enriched.hom(u, v).total_dim == \
                se.hom_closed(u, v).total_dim

    @pytest.mark.parametrize("name", ["z3", "fibonacci", "ising"])
    def test_closed_forms_agree_after_transport(self, name):
        fd = builtin(name).payload
        se = self_enrichment(fd)
        e = se.enriched
        for m, n, p in itertools.product(fd.simples, repeat=3):
            lhs = compose(fd.tensor_mor(se.transport(m, n), se.transport(n, p)),
                          se.comp_closed(m, n, p))
            rhs = compose(e.comp(m, n, p), se.transport(m, p))
            assert residual(lhs, rhs) < 1e-9
        for m in fd.simples:
            assert residual(compose(e.j(m), se.transport(m, m)),
                            se.j_closed(m)) < 1e-9
        for u, v in itertools.product(fd.simples, repeat=2):
            t_vu, t_uv = se.transport(v, u), se.transport(u, v)
            lhs = compose(mor_inverse(fd.conjugate_mor(t_vu)),
                          compose(e.kappa(u, v), t_uv))
            assert residual(lhs, se.kappa_closed(u, v)) < 1e-9

    def test_underlying_dagger_iso(self, fib):
        # F(f) := coev o (id (x) f) intertwines the two daggers
        se = self_enrichment(fib)
        e = se.enriched
        rng = np.random.default_rng(33)
        for u in fib.simples:
            uo = Obj.of(u)
            f = mor_from_blocks(uo, uo, {u: [[complex(*rng.normal(size=2))]]})
            f_img = compose(fib.coev(uo),
                            fib.tensor_mor(identity(fib.conj_obj(uo)), f))
            # transport into the built hom, apply the built dagger, compare
            t = se.transport(u, u)
            f_graded = compose(f_img, mor_inverse(t))
            lhs = e.underlying_dagger(f_graded, u, u)
            f_dag_img = compose(fib.coev(uo),
                                fib.tensor_mor(identity(fib.conj_obj(uo)),
                                               dagger(f)))
            rhs = compose(f_dag_img, mor_inverse(t))
            assert residual(lhs, rhs) < 1e-9


class TestActionFunctor:
    def test_unitality(self, enrichments):
        e = enrichments["regular:fibonacci"]
        mod = e.module
        for m in mod.msimples:
            for u in e.base.simples:
                uo = Obj.of(u)
                mu = mod.act_obj(Obj.of(m), uo)
                got = compose(e.base.coev(uo), e.action_component(m, u, u))
                assert residual(got, e.j(mu)) < 1e-9

    def test_mate_of_la_at_unit(self, enrichments):
        # (a < -)_{1 -> u} = (G(rho_a) (x) eta_{a,u}) o comp
        e = enrichments["regular:ising"]
        mod, fd = e.module, e.base
        for a in mod.msimples:
            for u in fd.simples:
                ao, uo = Obj.of(a), Obj.of(u)
                a1 = mod.act_obj(ao, fd.unit_obj())
                au = mod.act_obj(ao, uo)
                lhs = e.action_component(a, fd.unit, u)
                rho_graded = e.G(mod.module_unitor(ao))
                rhs = compose(fd.tensor_mor(rho_graded, e.eta(ao, uo)),
                              e.comp(a1, ao, au))
                assert residual(lhs, rhs) < 1e-9

    def test_regular_module_matches_left_tensor(self, fib):
        # on the regular module, (m < -) is left tensoring in closed form
        se = self_enrichment(fib)
        e = se.enriched
        fd = fib
        for m, u, v in itertools.product(fd.simples, repeat=3):
            mo, uo, vo = Obj.of(m), Obj.of(u), Obj.of(v)
            mu, mv = fd.tensor_obj(mo, uo), fd.tensor_obj(mo, vo)
            got = compose(e.action_component(m, u, v), se.transport(mu, mv))
            ub = fd.conj_obj(uo)
            inner = compose(
                dagger(fd.associator(uo, ub, vo)),
                fd.tensor_mor(fd.ev(uo), identity(vo)))
            # closed form: curry of (id_m x (ev-insertion)) via the transport
            wantT = compose(
                compose(fd.coev(mu),
                        fd.tensor_mor(identity(fd.conj_obj(mu)),
                                      compose(fd.associator(mo, uo,
                                                            fd.tensor_obj(ub, vo)),
                                              fd.tensor_mor(identity(mo), inner)))),
                identity(fd.tensor_obj(fd.conj_obj(mu), mv)))
            # wantT: 1-graded; compare components by uncurrying both
            lhs = compose(fd.tensor_mor(identity(fd.tensor_obj(ub, vo)),
                                        identity(fd.tensor_obj(ub, vo))), got) \
            if False else got
            # direct check: got must equal the mate-free formula
            rhs = _closed_action_component(fd, mo, uo, vo)
            assert residual(got, rhs) < 1e-9


def _closed_action_component(fd, m, u, v):
    """ubar v -> conj(m u) (x) (m v): the left-tensor closed form."""
    ub = fd.conj_obj(u)
    uv = fd.tensor_obj(ub, v)
    mu = fd.tensor_obj(m, u)
    mv = fd.tensor_obj(m, v)
    inner = compose(dagger(fd.associator(u, ub, v)),
                    fd.tensor_mor(fd.ev(u), identity(v)))
    act = compose(fd.associator(m, u, uv),
                  fd.tensor_mor(identity(m), inner))  # m(u (ub v)) -> m v
    # curry: uv -> conj(mu) (x) mv
    return compose(
        compose(fd.coev(mu), fd.tensor_mor(identity(fd.conj_obj(mu)),
                                           fd.associator(m, u, uv))),
        fd.tensor_mor(identity(fd.conj_obj(mu)),
                      fd.tensor_mor(identity(m), inner))) \
        if False else _curry_action(fd, m, u, v)


def _curry_action(fd, m, u, v):
    ub = fd.conj_obj(u)
    uv = fd.tensor_obj(ub, v)
    mu = fd.tensor_obj(m, u)
    mub = fd.conj_obj(mu)
    inner = compose(dagger(fd.associator(u, ub, v)),
                    fd.tensor_mor(fd.ev(u), identity(v)))
    act = compose(fd.associator(m, u, uv),
                  fd.tensor_mor(identity(m), inner))  # (m u) (ub v) -> m v
    t1 = fd.tensor_mor(fd.coev(mu), identity(uv))
    t2 = fd.associator(mub, mu, uv)
    t3 = fd.tensor_mor(identity(mub), act)
    return compose(compose(t1, t2), t3)


class TestVerifySuite:
    def test_trivial_residuals_zero(self, enrichments):
        rep = verify_dagger_enriched(enrichments["regular:trivial"])
        assert rep.overall
        assert max(c.residual for c in rep.checks) < 1e-13

    @pytest.mark.parametrize("name", ["regular:fibonacci", "regular:ising",
                                      "vec-over-z2"])
    def test_catalog(self, enrichments, name):
        rep = verify_dagger_enriched(enrichments[name])
        assert rep.overall, [c.check_id for c in rep.checks if not c.passed]
        assert max(c.residual for c in rep.checks) < 1e-9

    def test_broken_unitor_fails_kappa3(self):
        mod = as_module(builtin("broken:vec-over-z2-unitor").payload)
        rep = verify_dagger_enriched(build_enriched(mod))
        assert not rep.check("kappa3").passed
        assert rep.check("kappa3").residual > 1e-4

    def test_basis_independence(self, modules):
        mod = modules["regular:fibonacci"]
        base = verify_dagger_enriched(build_enriched(mod))
        base_ids = [(c.check_id, c.passed) for c in base.checks]
        for seed in (1, 2, 3):
            e = build_enriched(mod, HomBasis.random_orthonormal(mod, seed))
            rep = verify_dagger_enriched(e)
            assert [(c.check_id, c.passed) for c in rep.checks] == base_ids
            for c0, c1 in zip(base.checks, rep.checks):
                r0 = max(c0.residual, 1e-13)
                r1 = max(c1.residual, 1e-13)
                assert r1 / r0 <= 10 and r0 / r1 <= 10

    def test_degenerate_basis_rejected(self, modules):
        mod = modules["regular:fibonacci"]
        bases = HomBasis.default(mod).bases.copy()
        key = ("tau", "tau", "1")
        bases[key] = np.zeros_like(bases[key])
        with pytest.raises(DegenerateBasisError):
            build_enriched(mod, HomBasis(mod, bases))


class TestVNatural:
    def _identity_functor(self, e):
        comps = {}
        for m, n in itertools.product(e.module.msimples, repeat=2):
            comps[(m, n)] = identity(e.hom(m, n))
        return EnrichedFunctorData(
            obj_map={m: m for m in e.module.msimples}, components=comps)

    def test_identity_components_pass(self, enrichments):
        e = enrichments["regular:fibonacci"]
        f = self._identity_functor(e)
        theta = {m: e.j(m) for m in e.module.msimples}
        rep = check_v_natural(e, e, f, f, theta)
        assert rep.overall
        assert max(c.residual for c in rep.checks) < 1e-10

    def test_random_family_fails(self, enrichments):
        e = enrichments["regular:fibonacci"]
        f = self._identity_functor(e)
        rng = np.random.default_rng(34)
        theta = {m: random_graded(e, rng, m, m) for m in e.module.msimples}
        rep = check_v_natural(e, e, f, f, theta)
        assert not rep.overall
