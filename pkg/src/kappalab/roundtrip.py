"""Reconstruction of the module action from the enrichment.

Given a module M and its enriched category, the reconstructed action
``m # u`` lives on the same objects; G and H are the identity-on-objects
functors between the original and reconstructed realizations, and omega /
omega' are the modulators comparing the two actions.  ``verify_roundtrip``
checks the modulator lemmas, ``two_adjoint_test`` compares two left
adjoints built from independent basis choices, and ``functor_transport``
turns a dagger module functor into an enriched functor and verifies it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .enrich import (EnrichedCat, EnrichedFunctorData, HomBasis,
                     assemble_component, build_enriched, random_graded)
from .modulecat import RightModule, as_module, random_module_mor
from .report import Suite, Report
from .semicat import (
    DEFAULT_TOL, Mor, Obj, Tol, compose, dagger, identity, is_unitary,
    mor_from_blocks, mor_inverse, residual,
)
from .util import rng_for

__all__ = ["RoundTrip", "ReconstructedModule", "DaggerModuleFunctorData",
           "build_roundtrip", "verify_roundtrip", "two_adjoint_test",
           "action_dagger_test", "functor_transport", "roundtrip_functor_pair"]


def _as_obj(x) -> Obj:
    return Obj.of(x) if isinstance(x, str) else x


def _chain(*mors) -> Mor:
    out = mors[0]
    for m in mors[1:]:
        out = compose(out, m)
    return out


class ReconstructedModule(RightModule):
    """The action ``m # u`` rebuilt through the adjunction of the enrichment.

    Same objects and multiplicities as the source module; the action on
    morphisms, the oplaxitor and the unitor all come from the graded
    calculus of the enriched category.
    """

    def __init__(self, e: EnrichedCat):
        super().__init__()
        self.e = e
        self.source = e.module
        self.base = e.base
        self.msimples = self.source.msimples
        self.name = f"reconstructed:{self.source.name}"

    def nt(self, m, u, n):
        return self.source.nt(m, u, n)

    def act_mor(self, f: Mor, g: Mor) -> Mor:
        e, src = self.e, self.source
        x, y = f.src, f.dst
        u, v = g.src, g.dst
        step = e.oc(e.id_box(e.G(f), x, y, u), e.box_id(y, g),
                    src.act_obj(x, u), src.act_obj(y, u), src.act_obj(y, v))
        return e.H(step, src.act_obj(x, u), src.act_obj(y, v))

    def module_associator(self, x, u, v) -> Mor:
        x, u, v = _as_obj(x), _as_obj(u), _as_obj(v)
        key = (x.mult, u.mult, v.mult)
        if key in self._assoc:
            return self._assoc[key]
        e, src = self.e, self.source
        uv = self.base.tensor_obj(u, v)
        oplax = e.H(e.box_oplaxitor(x, u, v), src.act_obj(x, uv),
                    src.act_obj(src.act_obj(x, u), v))
        out = mor_inverse(oplax)
        self._assoc[key] = out
        return out

    def module_unitor(self, x) -> Mor:
        x = _as_obj(x)
        return self.e.H(self.e.box_unitor(x),
                        self.source.act_obj(x, self.base.unit_obj()), x)

    def unitor_coeff(self, m):
        raise NotImplementedError("reconstructed unitor is not scalar data")


@dataclass
class RoundTrip:
    source: RightModule
    enriched: EnrichedCat
    reconstructed: ReconstructedModule
    omega: dict        # (m, u) -> module morphism m < u -> m # u
    omega_prime: dict  # (m, u) -> 1-graded element of sA'(m # u -> m < u)


def build_roundtrip(m, e: EnrichedCat | None = None,
                    basis: HomBasis | None = None) -> RoundTrip:
    mod = as_module(m)
    if e is None:
        e = build_enriched(mod, basis)
    elif e.module is not mod:
        raise ValueError("enriched category was built from a different module")
    recon = ReconstructedModule(e)
    omega, omega_prime = {}, {}
    for ms in mod.msimples:
        for us in mod.base.simples:
            omega[(ms, us)] = e.omega(ms, us)
            omega_prime[(ms, us)] = e.omega_prime(ms, us)
    return RoundTrip(mod, e, recon, omega, omega_prime)


def verify_roundtrip(rt: RoundTrip, tol: Tol = DEFAULT_TOL,
                     seed: int = 17) -> Report:
    """Modulator lemmas, G/H functoriality and inverses, identity-mate."""
    mod, e = rt.source, rt.enriched
    fd = e.base
    suite = Suite(f"roundtrip:{mod.name}", tol, seed=seed)
    rng = rng_for(seed)
    msp = list(mod.msimples)
    usp = list(fd.simples)

    # G/H inverse, functorial, dagger
    for x, y in itertools.product(msp, repeat=2):
        xo, yo = Obj.of(x), Obj.of(y)
        g = random_module_mor(mod, rng, xo, yo)
        suite.observe_mors("gh-mutual-inverse", e.H(e.G(g), xo, yo), g,
                           f"({x},{y})")
        if e.hom(xo, yo)(fd.unit):
            f = random_graded(e, rng, xo, yo)
            suite.observe_mors("gh-mutual-inverse",
                               e.G(e.H(f, xo, yo)), f, f"({x},{y})")
        suite.observe_mors("identity-mate",
                           _chain(mor_inverse(mod.module_unitor(xo)),
                                  mod.act_mor(identity(xo), e.G(g)),
                                  e.eps(xo, yo)),
                           g, f"({x},{y})")
    for x, y, z in itertools.product(msp, repeat=3):
        xo, yo, zo = Obj.of(x), Obj.of(y), Obj.of(z)
        g1 = random_module_mor(mod, rng, xo, yo)
        g2 = random_module_mor(mod, rng, yo, zo)
        suite.observe_mors("gh-functorial",
                           e.G(compose(g1, g2)),
                           e.oc(e.G(g1), e.G(g2), xo, yo, zo),
                           f"({x},{y},{z})")
    for x in msp:
        suite.observe_mors("gh-functorial", e.G(identity(Obj.of(x))),
                           e.j(x), f"({x},id)")
    for x, y in itertools.product(msp, repeat=2):
        xo, yo = Obj.of(x), Obj.of(y)
        g = random_module_mor(mod, rng, xo, yo)
        suite.observe_mors("gh-dagger", e.G(dagger(g)),
                           e.underlying_dagger(e.G(g), xo, yo), f"({x},{y})")

    # modulator lemmas
    for a in msp:
        for u in usp:
            ao, uo = Obj.of(a), Obj.of(u)
            au = mod.act_obj(ao, uo)
            om = rt.omega[(a, u)]
            omp = rt.omega_prime[(a, u)]
            suite.observe("modulator-unitary", is_unitary(om, tol).residual,
                          f"({a},{u})")
            suite.observe_mors("modulator-inverse",
                               compose(om, e.H(omp, au, au)),
                               identity(au), f"({a},{u})")
            # Rem. eta-eta': (eta' (x) omega') o comp = eta
            suite.observe_mors(
                "eta-eta-prime",
                compose(fd.tensor_mor(e.eta2(ao, uo), omp),
                        e.comp(ao, au, au)),
                e.eta(ao, uo), f"({a},{u})")
        # modulator unitality: omega_{a,1} then H(rho') is the unitor
        ao = Obj.of(a)
        a1 = mod.act_obj(ao, fd.unit_obj())
        suite.observe_mors(
            "modulator-unital",
            compose(e.omega(ao, fd.unit_obj()),
                    e.H(e.box_unitor(ao), a1, ao)),
            mod.module_unitor(ao), f"({a},)")

    # naturality: omega_{a,u} o H(f # g) = (H(f) < g) o omega_{b,v}
    from .modulecat import random_base_mor
    recon = rt.reconstructed
    for _ in range(4):
        a, b = (msp[rng.integers(len(msp))] for _ in range(2))
        u, v = (usp[rng.integers(len(usp))] for _ in range(2))
        ao, bo, uo, vo = Obj.of(a), Obj.of(b), Obj.of(u), Obj.of(v)
        fmod = random_module_mor(mod, rng, ao, bo)
        gmor = random_base_mor(fd, rng, uo, vo)
        lhs = compose(rt.omega[(a, u)], recon.act_mor(fmod, gmor))
        rhs = compose(mod.act_mor(fmod, gmor), rt.omega[(b, v)])
        suite.observe_mors("modulator-natural", lhs, rhs, f"({a},{b},{u},{v})")

    # associativity: alpha^dag;(omega<id);omega = omega_{a,uv};H(alpha')
    for a in msp:
        for u, v in itertools.product(usp, repeat=2):
            ao, uo, vo = Obj.of(a), Obj.of(u), Obj.of(v)
            au = mod.act_obj(ao, uo)
            uv = fd.tensor_obj(uo, vo)
            lhs = _chain(dagger(mod.module_associator(ao, uo, vo)),
                         mod.act_mor(rt.omega[(a, u)], identity(vo)),
                         e.omega(au, vo))
            rhs = compose(e.omega(ao, uv),
                          e.H(e.box_oplaxitor(ao, uo, vo),
                              mod.act_obj(ao, uv), mod.act_obj(au, vo)))
            suite.observe_mors("modulator-associative", lhs, rhs,
                               f"({a},{u},{v})")

    # Lemma omega-V-natural: conjugating (a # -) by omega' gives (a < -)
    for a in msp:
        for u, v in itertools.product(usp, repeat=2):
            ao, uo, vo = Obj.of(a), Obj.of(u), Obj.of(v)
            au, av = mod.act_obj(ao, uo), mod.act_obj(ao, vo)
            box_comp = _box_action_component(rt, ao, uo, vo)
            step = compose(fd.tensor_mor(box_comp, rt.omega_prime[(a, v)]),
                           e.comp(au, av, av))
            ompinv = e.G(mor_inverse(e.H(rt.omega_prime[(a, u)], au, au)))
            lhs = compose(fd.tensor_mor(ompinv, step), e.comp(au, au, av))
            suite.observe_mors("omega-v-natural", lhs,
                               e.action_component(a, u, v), f"({a},{u},{v})")

    return suite.finish()


def _box_action_component(rt: RoundTrip, a: Obj, u: Obj, v: Obj) -> Mor:
    """(a # -)_{u -> v} via Fact MateOfLa for the reconstructed action."""
    e, mod = rt.enriched, rt.source
    fd = e.base
    ub = fd.conj_obj(u)
    uv = fd.tensor_obj(ub, v)
    inner = compose(dagger(fd.associator(u, ub, v)),
                    fd.tensor_mor(fd.ev(u), identity(v)))
    au = mod.act_obj(a, u)
    auuv = mod.act_obj(au, uv)
    a_uuv = mod.act_obj(a, fd.tensor_obj(u, uv))
    av = mod.act_obj(a, v)
    alpha_graded = e.G(mor_inverse(e.H(e.box_oplaxitor(a, u, uv),
                                       a_uuv, auuv)))
    idbox = e.box_id(a, inner)  # id_a # (ev-insertion): a#(u uv) -> a#v
    t = e.oc(alpha_graded, idbox, auuv, a_uuv, av)
    return e.mate2_fwd(t, au, uv, av)


def action_dagger_test(m, e: EnrichedCat | None = None,
                       tol: Tol = DEFAULT_TOL, seed: int = 23) -> Report:
    """Dagger functoriality of the reconstructed action and unitarity of
    its coherators."""
    mod = as_module(m)
    if e is None:
        e = build_enriched(mod)
    fd = e.base
    suite = Suite(f"action-dagger:{mod.name}", tol, seed=seed)
    rng = rng_for(seed)
    msp = list(mod.msimples)
    usp = list(fd.simples)
    from .modulecat import random_base_mor

    for a in msp:
        ao = Obj.of(a)
        for u, v in itertools.product(usp, repeat=2):
            uo, vo = Obj.of(u), Obj.of(v)
            au, av = mod.act_obj(ao, uo), mod.act_obj(ao, vo)
            g = random_base_mor(fd, rng, uo, vo)
            lhs = e.underlying_dagger(e.box_id(ao, g), au, av)
            rhs = e.box_id(ao, dagger(g))
            suite.observe_mors("daglhd2-right", lhs, rhs, f"({a},{u},{v})")
    for a, b in itertools.product(msp, repeat=2):
        ao, bo = Obj.of(a), Obj.of(b)
        if not e.hom(ao, bo)(fd.unit):
            continue
        for u in usp:
            uo = Obj.of(u)
            au, bu = mod.act_obj(ao, uo), mod.act_obj(bo, uo)
            fp = random_graded(e, rng, ao, bo)
            lhs = e.underlying_dagger(e.id_box(fp, ao, bo, uo), au, bu)
            rhs = e.id_box(e.underlying_dagger(fp, ao, bo), bo, ao, uo)
            suite.observe_mors("daglhd2-left", lhs, rhs, f"({a},{b},{u})")
    for a in msp:
        ao = Obj.of(a)
        for u, v in itertools.product(usp, repeat=2):
            uo, vo = Obj.of(u), Obj.of(v)
            uv = fd.tensor_obj(uo, vo)
            oplax = e.H(e.box_oplaxitor(ao, uo, vo), mod.act_obj(ao, uv),
                        mod.act_obj(mod.act_obj(ao, uo), vo))
            suite.observe("daglhd3-alpha", is_unitary(oplax, tol).residual,
                          f"({a},{u},{v})")
        rho = e.H(e.box_unitor(ao), mod.act_obj(ao, fd.unit_obj()), ao)
        suite.observe("daglhd3-rho", is_unitary(rho, tol).residual, f"({a},)")
    return suite.finish()


def two_adjoint_test(m, seed_a: int, seed_b: int, tol: Tol = DEFAULT_TOL,
                     orthonormal: bool = True, scale: float = 3.0) -> Report:
    """Compare two left adjoints from independent hom-basis choices.

    psi is the canonical comparison; it is unitary exactly when both bases
    are orthonormal (this is the content of the unitary-adjoint
    proposition), while the unit/coherator identities hold for any
    invertible choice.
    """
    mod = as_module(m)
    b1 = (HomBasis.random_orthonormal(mod, seed_a) if orthonormal
          else HomBasis.scaled(mod, seed_a, scale))
    b2 = HomBasis.random_orthonormal(mod, seed_b)
    e1 = build_enriched(mod, b1)
    e2 = build_enriched(mod, b2)
    fd = mod.base
    suite = Suite(f"two-adjoint:{mod.name}", tol, seed=(seed_a, seed_b))
    suite.observe("gram-condition", b1.gram_cond(), "first basis",
                  scale=float("inf"))  # informational, never fails

    def s_mor(x: Obj, u: Obj) -> Mor:
        return e2.mate_bwd(e1.eta(x, u), x, mod.act_obj(x, u))

    def psi(x: Obj, u: Obj) -> Mor:
        return compose(mor_inverse(s_mor(x, u)),
                       e2.mate_bwd(e2.eta(x, u), x, mod.act_obj(x, u)))

    def eta_l(x: Obj, u: Obj) -> Mor:
        return e2.mate_fwd(s_mor(x, u), x, u, mod.act_obj(x, u))

    msp = list(mod.msimples)
    usp = list(fd.simples)
    for a in msp:
        ao = Obj.of(a)
        for u in usp:
            uo = Obj.of(u)
            au = mod.act_obj(ao, uo)
            ps = psi(ao, uo)
            suite.observe("psi-unitary", is_unitary(ps, tol).residual,
                          f"({a},{u})")
            lhs = compose(fd.tensor_mor(eta_l(ao, uo), e2.G(ps)),
                          e2.comp(ao, au, au))
            suite.observe_mors("two-unit-identity", lhs, e2.eta(ao, uo),
                               f"({a},{u})")
        # rho square
        one = fd.unit_obj()
        rho_hat = e2.mate_bwd(e2.j(ao), ao, ao)
        rho_l = compose(mor_inverse(s_mor(ao, one)), rho_hat)
        suite.observe_mors("two-rho-identity", rho_l,
                           compose(psi(ao, one), rho_hat), f"({a},)")
        # alpha square
        for u, v in itertools.product(usp, repeat=2):
            uo, vo = Obj.of(u), Obj.of(v)
            uv = fd.tensor_obj(uo, vo)
            au = mod.act_obj(ao, uo)
            auv = mod.act_obj(au, vo)
            alpha_dia = e2.mate_bwd(
                compose(fd.tensor_mor(e2.eta(ao, uo), e2.eta(au, vo)),
                        e2.comp(ao, au, auv)), ao, auv)
            alpha_l = compose(
                mor_inverse(s_mor(ao, uv)),
                e2.mate_bwd(
                    compose(fd.tensor_mor(eta_l(ao, uo), eta_l(au, vo)),
                            e2.comp(ao, au, auv)), ao, auv))
            lhs = _chain(alpha_l, psi(au, vo),
                         mod.act_mor(psi(ao, uo), identity(vo)))
            rhs = compose(psi(ao, uv), alpha_dia)
            suite.observe_mors("two-alpha-identity", lhs, rhs, f"({a},{u},{v})")
        # psi is V-natural
        for u, v in itertools.product(usp, repeat=2):
            uo, vo = Obj.of(u), Obj.of(v)
            au, av = mod.act_obj(ao, uo), mod.act_obj(ao, vo)
            act = e2.action_component(a, u, v)
            post = _graded_post(e2, e2.G(s_mor(ao, vo)), au, av, av)
            pre = _graded_pre(e2, e2.G(mor_inverse(s_mor(ao, uo))),
                              au, au, av)
            l_comp = _chain(act, post, pre)
            lhs = compose(fd.tensor_mor(l_comp, e2.G(psi(ao, vo))),
                          e2.comp(au, av, av))
            rhs = compose(fd.tensor_mor(e2.G(psi(ao, uo)), act),
                          e2.comp(au, au, av))
            suite.observe_mors("psi-v-natural", lhs, rhs, f"({a},{u},{v})")
    return suite.finish()


def _graded_pre(e: EnrichedCat, t: Mor, x: Obj, xp: Obj, y: Obj) -> Mor:
    """Precompose hom objects by a 1-graded element t: 1 -> A(x -> xp)."""
    a = e.hom(xp, y)
    return compose(e.base.tensor_mor(t, identity(a)), e.comp(x, xp, y))


def _graded_post(e: EnrichedCat, t: Mor, x: Obj, y: Obj, yp: Obj) -> Mor:
    a = e.hom(x, y)
    return compose(e.base.tensor_mor(identity(a), t), e.comp(x, y, yp))


# -- functor transport --------------------------------------------------------

@dataclass
class DaggerModuleFunctorData:
    """A dagger module functor between modules over the same base.

    ``obj_map`` sends module simples to module simples; the action on hom
    spaces is canonical block transport.  ``modulator[(m, u)]`` holds
    omega^F_{m,u}: F(m) < u -> F(m < u) in the target module, for simples.
    """

    obj_map: dict
    modulator: dict
    name: str = ""

    def image_obj(self, x: Obj) -> Obj:
        d = {}
        for k, mult in x.mult:
            fk = self.obj_map[k]
            d[fk] = d.get(fk, 0) + mult
        return Obj.from_dict(d)

    def occ_transport(self, msimples, x: Obj) -> dict:
        count, out = {}, {}
        for k in msimples:
            for i in range(x(k)):
                fk = self.obj_map[k]
                out[(k, i)] = (fk, count.get(fk, 0))
                count[fk] = count.get(fk, 0) + 1
        return out

    def apply(self, msimples, f: Mor) -> Mor:
        """Canonical transport of a module morphism along the object map."""
        src, dst = self.image_obj(f.src), self.image_obj(f.dst)
        occ_s = self.occ_transport(msimples, f.src)
        occ_d = self.occ_transport(msimples, f.dst)
        blocks = {n: np.zeros((dst(n), src(n)), dtype=complex)
                  for n in dst.support if src(n)}
        for k in msimples:
            b = f.block(k)
            for i in range(f.src(k)):
                for jj in range(f.dst(k)):
                    if b[jj, i] != 0:
                        fk, fi = occ_s[(k, i)]
                        fk2, fj = occ_d[(k, jj)]
                        if fk == fk2:
                            blocks[fk][fj, fi] = b[jj, i]
        return mor_from_blocks(src, dst, blocks)

    def modulator_mor(self, tgt: RightModule, src_mod: RightModule,
                      m: str, u: Obj) -> Mor:
        """omega^F_{m,u} for a composite u, assembled by naturality."""
        fm = self.obj_map[m]
        fmo, mo = Obj.of(fm), Obj.of(m)
        mu_src = src_mod.act_obj(mo, u)
        fmu = self.image_obj(mu_src)
        occ_mu = self.occ_transport(src_mod.msimples, mu_src)
        src = tgt.act_obj(fmo, u)
        blocks = {}
        for n in tgt.msimples:
            sch = tgt.channels(fmo, u, n)
            if not sch or not fmu(n):
                continue
            mtx = np.zeros((fmu(n), len(sch)), dtype=complex)
            for col, ((_, _), (s, j), mu_idx) in enumerate(sch):
                wb = self.modulator[(m, s)].block(n)
                cpos = tgt.channel_index(fmo, Obj.of(s), n)[
                    ((fm, 0), (s, 0), mu_idx)]
                ms_src = src_mod.act_obj(mo, Obj.of(s))
                occ_ms = self.occ_transport(src_mod.msimples, ms_src)
                for k2 in src_mod.msimples:
                    if self.obj_map[k2] != n:
                        continue
                    for rho in range(src_mod.nt(m, s, k2)):
                        v = wb[occ_ms[(k2, rho)][1], cpos]
                        if v != 0:
                            p = src_mod.channel_index(mo, u, k2)[
                                ((m, 0), (s, j), rho)]
                            mtx[occ_mu[(k2, p)][1], col] = v
            if mtx.any():
                blocks[n] = mtx
        return mor_from_blocks(src, fmu, blocks)


def functor_transport(f_data: DaggerModuleFunctorData, e_src: EnrichedCat,
                      e_dst: EnrichedCat, tol: Tol = DEFAULT_TOL,
                      second: DaggerModuleFunctorData | None = None):
    """Construct the enriched functor of a dagger module functor and verify.

    Returns ``(EnrichedFunctorData, Report)``.  When ``second`` is given
    (a functor out of ``e_dst``'s module, with target ``e_dst`` again for
    the shipped endo-examples), preservation of composition is checked.
    """
    mod_s, mod_d = e_src.module, e_dst.module
    fd = e_src.base
    suite = Suite(f"functor:{f_data.name}", tol)
    comps = {}
    for m, n in itertools.product(mod_s.msimples, repeat=2):
        a = e_src.hom(m, n)
        fm, fn = f_data.obj_map[m], f_data.obj_map[n]
        t = compose(f_data.modulator_mor(mod_d, mod_s, m, a),
                    f_data.apply(mod_s.msimples, e_src.eps(m, n)))
        comps[(m, n)] = e_dst.mate_fwd(t, Obj.of(fm), a, Obj.of(fn))
    data = EnrichedFunctorData(obj_map=dict(f_data.obj_map), components=comps)

    for m, n, p in itertools.product(mod_s.msimples, repeat=3):
        fm, fn, fp = (f_data.obj_map[q] for q in (m, n, p))
        lhs = compose(fd.tensor_mor(comps[(m, n)], comps[(n, p)]),
                      e_dst.comp(fm, fn, fp))
        rhs = compose(e_src.comp(m, n, p), comps[(m, p)])
        suite.observe_mors("enriched-functorial", lhs, rhs, f"({m},{n},{p})")
    for m in mod_s.msimples:
        fm = f_data.obj_map[m]
        suite.observe_mors("enriched-unital",
                           compose(e_src.j(m), comps[(m, m)]), e_dst.j(fm),
                           f"({m},)")
    for m, n in itertools.product(mod_s.msimples, repeat=2):
        fm, fn = f_data.obj_map[m], f_data.obj_map[n]
        lhs = compose(e_src.kappa(m, n), comps[(m, n)])
        rhs = compose(fd.conjugate_mor(comps[(n, m)]),
                      e_dst.kappa(Obj.of(fm), Obj.of(fn)))
        suite.observe_mors("dagger-v-functor", lhs, rhs, f"({m},{n})")
    for m in mod_s.msimples:
        for u in fd.simples:
            mo, uo = Obj.of(m), Obj.of(u)
            fm = Obj.of(f_data.obj_map[m])
            mu = mod_s.act_obj(mo, uo)
            fmu = f_data.image_obj(mu)
            comp_mu = assemble_component(e_src, e_dst, data, mo, mu)
            recomputed = e_dst.mate_bwd(
                compose(e_src.eta(mo, uo), comp_mu), fm, fmu)
            supplied = f_data.modulator[(m, u)]
            suite.observe_mors("modulator-recompute", recomputed, supplied,
                               f"({m},{u})")
            suite.observe("modulator-unitary",
                          is_unitary(supplied, tol).residual, f"({m},{u})")
    if second is not None:
        comp_obj = {m: second.obj_map[f_data.obj_map[m]]
                    for m in mod_s.msimples}
        comp_modulator = {}
        for m in mod_s.msimples:
            for u in fd.simples:
                fm = f_data.obj_map[m]
                mo, uo = Obj.of(m), Obj.of(u)
                w_g = second.modulator_mor(mod_d, mod_d, fm, uo)
                w_f = second.apply(mod_d.msimples,
                                   f_data.modulator[(m, u)])
                comp_modulator[(m, u)] = compose(w_g, w_f)
        composite = DaggerModuleFunctorData(comp_obj, comp_modulator,
                                            name="composite")
        comps2, _ = functor_transport(second, e_dst, e_dst, tol)
        compsc, _ = functor_transport(composite, e_src, e_dst, tol)
        for m, n in itertools.product(mod_s.msimples, repeat=2):
            fm, fn = f_data.obj_map[m], f_data.obj_map[n]
            lhs = compose(comps[(m, n)], comps2.components[(fm, fn)])
            suite.observe_mors("composition-preserved", lhs,
                               compsc.components[(m, n)], f"({m},{n})")
    return data, suite.finish()


def roundtrip_functor_pair(rt: RoundTrip):
    """The G of the roundtrip as a dagger module functor sA -> sA'.

    Identity on objects, with modulator H(omega') = omega^{-1}; the target
    enrichment is built over the reconstructed module with the same basis.
    """
    e = rt.enriched
    mod = rt.source
    modulator = {}
    for m in mod.msimples:
        for u in mod.base.simples:
            au = mod.act_obj(Obj.of(m), Obj.of(u))
            modulator[(m, u)] = e.H(rt.omega_prime[(m, u)], au, au)
    f_data = DaggerModuleFunctorData(
        obj_map={m: m for m in mod.msimples}, modulator=modulator,
        name=f"roundtrip-G:{mod.name}")
    e_dst = build_enriched(rt.reconstructed, HomBasis(
        rt.reconstructed, e.basis.bases))
    return f_data, e_dst
