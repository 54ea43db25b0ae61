"""The enriched-category layer: internal homs, mates, kappa.

From a dagger right module we build the enriched category whose hom
objects realize u |-> Hom(m < u, n) through the adjunction
``Hom(x < u, y) ~ Hom_U(u -> A(x -> y))``.  A basis choice for each hom
space Hom(m < s, n) fixes the counit eps; mates are computed by solving
against eps (Gram solves), and the enriched dagger kappa, the conjugate
category, the self-enrichment closed forms and the kappa1-kappa4
verification suite are all materialized on top.

Enriched objects are module objects (multiplicity vectors); all maps are
assembled additively from the module simples.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .fusion import FusionData
from .modulecat import RightModule, SymbolModule, ModuleData, as_module, \
    random_module_mor
from .report import Suite, Report
from .semicat import (
    DEFAULT_TOL, Mor, Obj, Tol, compose, dagger, identity, is_unitary,
    mor_from_blocks, mor_inverse, residual, norm,
)
from .util import rng_for, random_unitary

__all__ = ["HomBasis", "EnrichedCat", "EnrichedFunctorData", "build_enriched",
           "self_enrichment", "SelfEnrichment", "DegenerateBasisError",
           "verify_dagger_enriched", "check_v_natural", "conjugate_enriched",
           "ConjugateVCat"]


class DegenerateBasisError(ValueError):
    """A hom-space basis with a numerically singular Gram matrix."""


def _as_obj(x) -> Obj:
    return Obj.of(x) if isinstance(x, str) else x


def _chain(*mors) -> Mor:
    out = mors[0]
    for m in mors[1:]:
        out = compose(out, m)
    return out


class HomBasis:
    """Ordered bases of the hom spaces Hom(m < s, n), with Gram data.

    A basis element of Hom(m < s, n) is stored as its row vector: the
    single block (at n) of the corresponding module morphism has shape
    ``1 x Ntilde(m,s,n)``.  ``bases[(m, s, n)]`` is a ``k x dim`` array of
    ``k`` basis rows.  The trace pairing on these vectors is the standard
    inner product.
    """

    def __init__(self, module: RightModule, bases: dict):
        self.module = module
        self.bases = bases
        self._gram = {}
        self._gram_inv = {}

    @staticmethod
    def default(module: RightModule) -> "HomBasis":
        """Standard orthonormal bases (identity matrices)."""
        bases = {}
        for m in module.msimples:
            for s in module.base.simples:
                for n in module.msimples:
                    d = module.nt(m, s, n)
                    if d:
                        bases[(m, s, n)] = np.eye(d, dtype=complex)
        return HomBasis(module, bases)

    @staticmethod
    def random_orthonormal(module: RightModule, seed: int) -> "HomBasis":
        rng = rng_for(seed)
        bases = {}
        for m in module.msimples:
            for s in module.base.simples:
                for n in module.msimples:
                    d = module.nt(m, s, n)
                    if d:
                        bases[(m, s, n)] = random_unitary(rng, d)
        return HomBasis(module, bases)

    @staticmethod
    def scaled(module: RightModule, seed: int, scale: float = 3.0) -> "HomBasis":
        """A deliberately non-orthonormal choice (every other space scaled)."""
        rng = rng_for(seed)
        bases = {}
        k = 0
        for m in module.msimples:
            for s in module.base.simples:
                for n in module.msimples:
                    d = module.nt(m, s, n)
                    if d:
                        u = random_unitary(rng, d)
                        bases[(m, s, n)] = (scale if k % 2 == 0 else 1.0) * u
                        k += 1
        return HomBasis(module, bases)

    def rows(self, m, s, n) -> np.ndarray:
        return self.bases[(m, s, n)]

    def dim(self, m, s, n) -> int:
        b = self.bases.get((m, s, n))
        return 0 if b is None else b.shape[0]

    def gram(self, m, s, n) -> np.ndarray:
        key = (m, s, n)
        if key not in self._gram:
            b = self.bases[key]
            self._gram[key] = b.conj() @ b.T
        return self._gram[key]

    def gram_solve(self, m, s, n, vec: np.ndarray) -> np.ndarray:
        key = (m, s, n)
        if key not in self._gram_inv:
            g = self.gram(m, s, n)
            if np.linalg.cond(g) > 1e12:
                raise DegenerateBasisError(
                    f"singular Gram matrix for hom space ({m},{s},{n})")
            self._gram_inv[key] = np.linalg.inv(g)
        return self._gram_inv[key] @ vec

    def gram_cond(self) -> float:
        """Condition number across the direct sum of all Gram matrices."""
        svs = []
        for key in self.bases:
            svs.extend(np.linalg.svd(self.gram(*key), compute_uv=False))
        return float(max(svs) / min(svs)) if svs else 1.0


@dataclass
class EnrichedFunctorData:
    """An enriched functor: object map plus per-pair hom components."""

    obj_map: dict    # module simple -> module simple
    components: dict  # (m, n) -> Mor_U(hom_src(m,n) -> hom_dst(Fm,Fn))


class EnrichedCat:
    """The dagger enriched category of a module, via a hom-basis choice."""

    def __init__(self, module: RightModule, basis: HomBasis | None = None):
        self.module = module
        self.base = module.base
        self.basis = basis if basis is not None else HomBasis.default(module)
        self._layout = {}
        self._hom = {}
        self._eps = {}
        self._comp = {}
        self._kappa = {}
        self._eta = {}
        self._psi = {}
        for key in self.basis.bases:
            self.basis.gram_solve(*key, np.zeros(self.basis.dim(*key)))

    # -- hom objects --------------------------------------------------------

    def hom_layout(self, x: Obj, y: Obj, s: str):
        """Slots of the internal hom at U-simple s: (k, i, n, j, b)."""
        key = (x.mult, y.mult, s)
        if key not in self._layout:
            mod = self.module
            lay = [(k, i, n, j, b)
                   for k in mod.msimples for i in range(x(k))
                   for n in mod.msimples for j in range(y(n))
                   for b in range(self.basis.dim(k, s, n))]
            self._layout[key] = (lay, {t: p for p, t in enumerate(lay)})
        return self._layout[key]

    def hom(self, x, y) -> Obj:
        x, y = _as_obj(x), _as_obj(y)
        key = (x.mult, y.mult)
        if key not in self._hom:
            self._hom[key] = Obj.from_dict(
                {s: len(self.hom_layout(x, y, s)[0]) for s in self.base.simples})
        return self._hom[key]

    # -- counit and mates -----------------------------------------------------

    def eps(self, x, y) -> Mor:
        """The counit eps_{x->y}: x < A(x->y) -> y (mate of the identity)."""
        x, y = _as_obj(x), _as_obj(y)
        key = (x.mult, y.mult)
        if key in self._eps:
            return self._eps[key]
        mod = self.module
        a = self.hom(x, y)
        src = mod.act_obj(x, a)
        blocks = {}
        for n in mod.msimples:
            ch = mod.channels(x, a, n)
            if not ch or not y(n):
                continue
            m = np.zeros((y(n), len(ch)), dtype=complex)
            for col, ((k, i), (s, ell), mu) in enumerate(ch):
                k2, i2, n2, j2, b = self.hom_layout(x, y, s)[0][ell]
                if (k2, i2) == (k, i) and n2 == n:
                    m[j2, col] = self.basis.rows(k, s, n)[b][mu]
            if m.any():
                blocks[n] = m
        out = mor_from_blocks(src, y, blocks)
        self._eps[key] = out
        return out

    def mate_bwd(self, g: Mor, x, y) -> Mor:
        """Mate of g: u -> A(x->y): the module morphism (id < g) eps."""
        x, y = _as_obj(x), _as_obj(y)
        return compose(self.module.act_mor(identity(x), g), self.eps(x, y))

    def mate_fwd(self, f: Mor, x, u, y) -> Mor:
        """Mate of f: x < u -> y: the U-morphism u -> A(x->y)."""
        x, u, y = _as_obj(x), _as_obj(u), _as_obj(y)
        mod = self.module
        a = self.hom(x, y)
        blocks = {}
        for s in self.base.simples:
            if not u(s) or not a(s):
                continue
            lay = self.hom_layout(x, y, s)[0]
            g = np.zeros((a(s), u(s)), dtype=complex)
            chidx = {n: mod.channel_index(x, u, n) for n in mod.msimples}
            fblocks = {n: f.block(n) for n in mod.msimples if y(n)}
            # group layout rows by (k, i, n, j)
            groups = {}
            for pos, (k, i, n, j, b) in enumerate(lay):
                groups.setdefault((k, i, n, j), []).append((pos, b))
            for (k, i, n, j), entries in groups.items():
                dim = mod.nt(k, s, n)
                bas = self.basis.rows(k, s, n)
                for col in range(u(s)):
                    r = np.array([fblocks[n][j, chidx[n][((k, i), (s, col), mu)]]
                                  for mu in range(dim)])
                    v = bas.conj() @ r
                    coeffs = self.basis.gram_solve(k, s, n, v)
                    for pos, b in entries:
                        g[pos, col] = coeffs[b]
            if g.any():
                blocks[s] = g
        return mor_from_blocks(u, a, blocks)

    # -- the enriched structure ----------------------------------------------

    def eta(self, x, u) -> Mor:
        """Unit eta_{x,u}: u -> A(x -> x < u)."""
        x, u = _as_obj(x), _as_obj(u)
        key = (x.mult, u.mult)
        if key not in self._eta:
            xu = self.module.act_obj(x, u)
            self._eta[key] = self.mate_fwd(identity(xu), x, u, xu)
        return self._eta[key]

    def j(self, x) -> Mor:
        """Identity element j_x: 1 -> A(x->x), the mate of the unitor."""
        x = _as_obj(x)
        return self.mate_fwd(self.module.module_unitor(x), x,
                             self.base.unit_obj(), x)

    def comp(self, x, y, z) -> Mor:
        """Composition A(x->y) (x) A(y->z) -> A(x->z)."""
        x, y, z = _as_obj(x), _as_obj(y), _as_obj(z)
        key = (x.mult, y.mult, z.mult)
        if key in self._comp:
            return self._comp[key]
        mod = self.module
        a1, a2 = self.hom(x, y), self.hom(y, z)
        t = _chain(
            dagger(mod.module_associator(x, a1, a2)),
            mod.act_mor(self.eps(x, y), identity(a2)),
            self.eps(y, z))
        out = self.mate_fwd(t, x, self.base.tensor_obj(a1, a2), z)
        self._comp[key] = out
        return out

    def kappa(self, x, y) -> Mor:
        """kappa_{x->y}: conj A(y->x) -> A(x->y)."""
        x, y = _as_obj(x), _as_obj(y)
        key = (x.mult, y.mult)
        if key in self._kappa:
            return self._kappa[key]
        out = self.mate_fwd(self.kappa_mate_formula(x, y), x,
                            self.base.conj_obj(self.hom(y, x)), y)
        self._kappa[key] = out
        return out

    def kappa_mate_formula(self, x, y) -> Mor:
        """The defining composite x < conj A(y->x) -> y of mate(kappa)."""
        x, y = _as_obj(x), _as_obj(y)
        mod, fd = self.module, self.base
        a = self.hom(y, x)
        ab = fd.conj_obj(a)
        return _chain(
            mod.act_mor(dagger(self.eps(y, x)), identity(ab)),
            mod.module_associator(y, a, ab),
            mod.act_mor(identity(y), fd.ev(a)),
            mod.module_unitor(y))

    def kappa_u(self, u, v) -> Mor:
        """Self-enrichment dagger kappa^U_{u->v}: conj(vbar u) -> ubar v."""
        u, v = _as_obj(u), _as_obj(v)
        fd = self.base
        ub = fd.conj_obj(u)
        return compose(
            mor_inverse(fd.nu(u, fd.conj_obj(v))),
            fd.tensor_mor(identity(ub), mor_inverse(fd.phi(v))))

    def action_component(self, m, u, v) -> Mor:
        """(m < -)_{u->v}: U(u->v) = ubar v -> A(m<u -> m<v)."""
        m, u, v = _as_obj(m), _as_obj(u), _as_obj(v)
        mod, fd = self.module, self.base
        ub = fd.conj_obj(u)
        uv = fd.tensor_obj(ub, v)
        inner = compose(dagger(fd.associator(u, ub, v)),
                        fd.tensor_mor(fd.ev(u), identity(v)))
        t = _chain(mod.module_associator(m, u, uv),
                   mod.act_mor(identity(m), inner))
        mu = mod.act_obj(m, u)
        return self.mate_fwd(t, mu, uv, mod.act_obj(m, v))

    # -- graded calculus -------------------------------------------------------

    def oc(self, f: Mor, g: Mor, x, y, z) -> Mor:
        """Graded composition of f: w1 -> A(x->y) and g: w2 -> A(y->z).

        Routed through the mates (naturality of the module associator is
        exact for the assembled blocks), which avoids materializing the
        composition morphism on large hom objects.
        """
        x, y, z = _as_obj(x), _as_obj(y), _as_obj(z)
        mod = self.module
        t = _chain(dagger(mod.module_associator(x, f.src, g.src)),
                   mod.act_mor(self.mate_bwd(f, x, y), identity(g.src)),
                   self.mate_bwd(g, y, z))
        return self.mate_fwd(t, x, self.base.tensor_obj(f.src, g.src), z)

    def G(self, f: Mor) -> Mor:
        """Transport a module morphism to a 1-graded element of the hom."""
        return self.mate_fwd(compose(self.module.module_unitor(f.src), f),
                             f.src, self.base.unit_obj(), f.dst)

    def H(self, h: Mor, x, y) -> Mor:
        """Inverse transport: 1-graded element -> module morphism."""
        x, y = _as_obj(x), _as_obj(y)
        return _chain(mor_inverse(self.module.module_unitor(x)),
                      self.module.act_mor(identity(x), h),
                      self.eps(x, y))

    def underlying_dagger(self, f: Mor, x, y) -> Mor:
        """Dagger on the underlying category: r then conj(f) then kappa."""
        fd = self.base
        return _chain(fd.r_mor(), fd.conjugate_mor(f), self.kappa(_as_obj(y),
                                                                  _as_obj(x)))

    # -- conjugate category ----------------------------------------------------

    def compbar(self, x, y, z) -> Mor:
        """Composition of the conjugate category Abar."""
        x, y, z = _as_obj(x), _as_obj(y), _as_obj(z)
        fd = self.base
        return compose(fd.nu(self.hom(y, x), self.hom(z, y)),
                       fd.conjugate_mor(self.comp(z, y, x)))

    def jbar(self, x) -> Mor:
        fd = self.base
        return compose(fd.r_mor(), fd.conjugate_mor(self.j(_as_obj(x))))

    def graded_conj(self, g: Mor) -> Mor:
        """1-graded element of A -> 1-graded element of Abar."""
        fd = self.base
        return compose(fd.r_mor(), fd.conjugate_mor(g))

    # -- the reconstructed (CatToMod) adjunction -------------------------------

    def Psi(self, x, u, d) -> Mor:
        """V-adjoint structure map A(x<u -> d) -> ubar (x) A(x->d)."""
        x, u, d = _as_obj(x), _as_obj(u), _as_obj(d)
        key = (x.mult, u.mult, d.mult)
        if key in self._psi:
            return self._psi[key]
        mod, fd = self.module, self.base
        xu = mod.act_obj(x, u)
        a2 = self.hom(xu, d)
        theta = self.mate_fwd(
            _chain(dagger(mod.module_associator(x, u, a2)), self.eps(xu, d)),
            x, fd.tensor_obj(u, a2), d)
        ub = fd.conj_obj(u)
        out = _chain(
            fd.tensor_mor(fd.coev(u), identity(a2)),
            fd.associator(ub, u, a2),
            fd.tensor_mor(identity(ub), theta))
        self._psi[key] = out
        return out

    def mate2_fwd(self, fp: Mor, x, u, y) -> Mor:
        """Reconstructed-action mate: sA'(x # u -> y) -> V(u -> A(x->y))."""
        x, u, y = _as_obj(x), _as_obj(u), _as_obj(y)
        fd = self.base
        h = compose(fp, self.Psi(x, u, y))
        ub = fd.conj_obj(u)
        a = self.hom(x, y)
        return _chain(
            fd.tensor_mor(identity(u), h),
            dagger(fd.associator(u, ub, a)),
            fd.tensor_mor(fd.ev(u), identity(a)))

    def mate2_bwd(self, h: Mor, x, u, y) -> Mor:
        """Inverse of mate2_fwd: V(u -> A(x->y)) -> sA'(x # u -> y)."""
        x, u, y = _as_obj(x), _as_obj(u), _as_obj(y)
        fd = self.base
        ub = fd.conj_obj(u)
        curried = compose(fd.coev(u), fd.tensor_mor(identity(ub), h))
        return compose(curried, mor_inverse(self.Psi(x, u, y)))

    def eta2(self, x, u) -> Mor:
        """Unit of the reconstructed adjunction: u -> A(x -> x # u)."""
        x, u = _as_obj(x), _as_obj(u)
        xu = self.module.act_obj(x, u)
        return self.mate2_fwd(self.j(xu), x, u, xu)

    def omega(self, x, u) -> Mor:
        """Modulator omega_{x,u}: x < u -> x # u (a module morphism)."""
        return self.mate_bwd(self.eta2(x, u), _as_obj(x),
                             self.module.act_obj(_as_obj(x), _as_obj(u)))

    def omega_prime(self, x, u) -> Mor:
        """omega'_{x,u} in sA'(x # u -> x < u) (1-graded)."""
        x, u = _as_obj(x), _as_obj(u)
        xu = self.module.act_obj(x, u)
        return self.mate2_bwd(self.eta(x, u), x, u, xu)

    # -- reconstructed action on morphisms --------------------------------------

    def curry(self, g: Mor) -> Mor:
        """U-morphism u -> v as a 1-graded element of U(u->v) = ubar v."""
        fd = self.base
        return compose(fd.coev(g.src),
                       fd.tensor_mor(identity(fd.conj_obj(g.src)), g))

    def box_id(self, x, g: Mor) -> Mor:
        """id_x # g in sA'(x # u -> x # v) for g: u -> v."""
        return compose(self.curry(g), self.action_component(_as_obj(x),
                                                            g.src, g.dst))

    def id_box(self, fp: Mor, x, y, u) -> Mor:
        """fp # id_u in sA'(x # u -> y # u) for fp in sA'(x -> y)."""
        x, y, u = _as_obj(x), _as_obj(y), _as_obj(u)
        yu = self.module.act_obj(y, u)
        h = self.oc(fp, self.eta2(y, u), x, y, yu)
        # fp tensor eta2 lands in V(u -> A(x -> y#u)); take the box-mate
        return self.mate2_bwd(h, x, u, yu)

    def box_oplaxitor(self, x, u, v) -> Mor:
        """alpha'_{x,u,v} in sA'(x # (u v) -> x # u # v)."""
        x, u, v = _as_obj(x), _as_obj(u), _as_obj(v)
        mod, fd = self.module, self.base
        xu = mod.act_obj(x, u)
        xuv = mod.act_obj(xu, v)
        h = self.oc(self.eta2(x, u), self.eta2(xu, v), x, xu, xuv)
        return self.mate2_bwd(h, x, fd.tensor_obj(u, v), xuv)

    def box_unitor(self, x) -> Mor:
        """rho'_x in sA'(x # 1 -> x)."""
        x = _as_obj(x)
        return self.mate2_bwd(self.j(x), x, self.base.unit_obj(), x)


def build_enriched(module, basis: HomBasis | None = None) -> EnrichedCat:
    """Materialize the enriched category of a module (symbols accepted)."""
    mod = as_module(module)
    if basis is not None and basis.module is not mod:
        basis = HomBasis(mod, basis.bases)
    return EnrichedCat(mod, basis)


# -- conjugate category, as checkable structure ------------------------------

@dataclass
class ConjugateVCat:
    """The conjugate enriched category: homs, identities, composition."""

    parent: EnrichedCat

    def hom(self, x, y) -> Obj:
        return self.parent.base.conj_obj(self.parent.hom(y, x))

    def j(self, x) -> Mor:
        return self.parent.jbar(x)

    def comp(self, x, y, z) -> Mor:
        return self.parent.compbar(x, y, z)


def conjugate_enriched(e: EnrichedCat) -> ConjugateVCat:
    return ConjugateVCat(e)


# -- self-enrichment -----------------------------------------------------------

class SelfEnrichment:
    """Built self-enrichment of U plus the closed forms of the paper.

    The built side is ``build_enriched(regular_module(U))``; the closed
    side has hom objects ubar (x) v with composition by ev-insertion,
    identities by coev and kappa from nu/phi.  ``transport`` is the
    canonical comparison morphism between the two.
    """

    def __init__(self, fd: FusionData, basis: HomBasis | None = None):
        from .modulecat import regular_module
        self.fd = fd
        self.enriched = build_enriched(regular_module(fd), basis)
        self._t = {}

    def hom_closed(self, u, v) -> Obj:
        u, v = _as_obj(u), _as_obj(v)
        return self.fd.tensor_obj(self.fd.conj_obj(u), v)

    def comp_closed(self, u, v, w) -> Mor:
        """(ubar v)(vbar w) -> ubar w by evaluating the middle strand."""
        fd = self.fd
        u, v, w = _as_obj(u), _as_obj(v), _as_obj(w)
        ub, vb = fd.conj_obj(u), fd.conj_obj(v)
        vbw = fd.tensor_obj(vb, w)
        return _chain(
            fd.associator(ub, v, vbw),
            fd.tensor_mor(identity(ub), dagger(fd.associator(v, vb, w))),
            fd.tensor_mor(identity(ub),
                          fd.tensor_mor(fd.ev(v), identity(w))))

    def j_closed(self, v) -> Mor:
        return self.fd.coev(_as_obj(v))

    def kappa_closed(self, u, v) -> Mor:
        return self.enriched.kappa_u(u, v)

    def transport(self, m, n) -> Mor:
        """Canonical iso from the built hom A(m->n) to mbar (x) n."""
        m, n = _as_obj(m), _as_obj(n)
        key = (m.mult, n.mult)
        if key in self._t:
            return self._t[key]
        fd = self.fd
        a = self.enriched.hom(m, n)
        mb = fd.conj_obj(m)
        eps_u = Mor(fd.tensor_obj(m, a), n,
                    self.enriched.eps(m, n).blocks)  # same matrices, U-typed
        out = _chain(
            fd.tensor_mor(fd.coev(m), identity(a)),
            fd.associator(mb, m, a),
            fd.tensor_mor(identity(mb), eps_u))
        self._t[key] = out
        return out


def self_enrichment(fd: FusionData, basis: HomBasis | None = None) -> SelfEnrichment:
    return SelfEnrichment(fd, basis)


# -- natural transformations ---------------------------------------------------

def assemble_component(e_src: EnrichedCat, e_dst: EnrichedCat,
                       data: EnrichedFunctorData, x: Obj, y: Obj) -> Mor:
    """Additively extend per-simple-pair components to composite pairs."""
    fobj = lambda z: Obj.from_dict(_image_mult(data, z))
    fx, fy = fobj(x), fobj(y)
    blocks = {}
    for s in e_src.base.simples:
        lay_src = e_src.hom_layout(x, y, s)[0]
        lay_dst, dst_idx = e_dst.hom_layout(fx, fy, s)
        if not lay_src or not lay_dst:
            continue
        m = np.zeros((len(lay_dst), len(lay_src)), dtype=complex)
        occ_x = _occ_transport(data, e_src.module, x)
        occ_y = _occ_transport(data, e_src.module, y)
        for col, (k, i, n, j, b) in enumerate(lay_src):
            comp = data.components[(k, n)]
            cb = comp.block(s)
            fk, fi = occ_x[(k, i)]
            fn, fj = occ_y[(n, j)]
            # source slot of the (k,n) component at b; dst slots (fk,fn,b2)
            src_pos = [(kk, ii, nn, jj, bb) for (kk, ii, nn, jj, bb)
                       in e_src.hom_layout(Obj.of(k), Obj.of(n), s)[0]]
            c0 = src_pos.index((k, 0, n, 0, b))
            for (k2, i2, n2, j2, b2) in e_dst.hom_layout(
                    Obj.of(fk), Obj.of(fn), s)[0]:
                r0 = e_dst.hom_layout(Obj.of(fk), Obj.of(fn), s)[1][
                    (k2, i2, n2, j2, b2)]
                v = cb[r0, c0]
                if v != 0:
                    m[dst_idx[(k2, fi, n2, fj, b2)], col] = v
        if m.any():
            blocks[s] = m
    return mor_from_blocks(e_src.hom(x, y), e_dst.hom(fx, fy), blocks)


def _image_mult(data: EnrichedFunctorData, x: Obj) -> dict:
    d = {}
    for k, mult in x.mult:
        fk = data.obj_map[k]
        d[fk] = d.get(fk, 0) + mult
    return d


def _occ_transport(data: EnrichedFunctorData, mod: RightModule, x: Obj) -> dict:
    """(k, i) occurrence of x -> (F(k), occurrence in F(x))."""
    count = {}
    out = {}
    for k in mod.msimples:
        for i in range(x(k)):
            fk = data.obj_map[k]
            out[(k, i)] = (fk, count.get(fk, 0))
            count[fk] = count.get(fk, 0) + 1
    return out


def check_v_natural(e_src: EnrichedCat, e_dst: EnrichedCat,
                    f_data: EnrichedFunctorData, g_data: EnrichedFunctorData,
                    theta: dict, tol: Tol = DEFAULT_TOL) -> Report:
    """Naturality of a family theta_m: 1 -> B(F m -> G m), plus the
    transported module-natural-transformation square."""
    suite = Suite("v-natural", tol)
    mod_src, mod_dst = e_src.module, e_dst.module
    for m, n in itertools.product(mod_src.msimples, repeat=2):
        fm, fn = f_data.obj_map[m], f_data.obj_map[n]
        gm, gn = g_data.obj_map[m], g_data.obj_map[n]
        fc = f_data.components[(m, n)]
        gc = g_data.components[(m, n)]
        lhs = compose(e_dst.base.tensor_mor(theta[m], gc),
                      e_dst.comp(fm, gm, gn))
        rhs = compose(e_dst.base.tensor_mor(fc, theta[n]),
                      e_dst.comp(fm, fn, gn))
        suite.observe_mors("v-naturality", lhs, rhs, f"({m},{n})")
    # transported module square with the canonical modulators
    for m in mod_src.msimples:
        for u in e_src.base.simples:
            mu_obj = mod_src.act_obj(Obj.of(m), Obj.of(u))
            fmu = Obj.from_dict(_image_mult(f_data, mu_obj))
            fm = Obj.of(f_data.obj_map[m])
            f_comp = assemble_component(e_src, e_dst, f_data, Obj.of(m), mu_obj)
            g_comp = assemble_component(e_src, e_dst, g_data, Obj.of(m), mu_obj)
            gm = Obj.of(g_data.obj_map[m])
            gmu = Obj.from_dict(_image_mult(g_data, mu_obj))
            om_f = e_dst.mate_bwd(compose(e_src.eta(m, u), f_comp), fm, fmu)
            om_g = e_dst.mate_bwd(compose(e_src.eta(m, u), g_comp), gm, gmu)
            th_m = e_dst.H(theta[m], fm, gm)
            th_mu = e_dst.H(_assemble_graded(e_dst, f_data, g_data, theta,
                                             mu_obj, mod_src),
                            fmu, gmu)
            lhs = compose(mod_dst.act_mor(th_m, identity(Obj.of(u))), om_g)
            rhs = compose(om_f, th_mu)
            suite.observe_mors("module-natural-square", lhs, rhs, f"({m},{u})")
    return suite.finish()


def _assemble_graded(e_dst: EnrichedCat, f_data, g_data, theta,
                     x: Obj, mod_src) -> Mor:
    """theta at a composite object, assembled from the simple components."""
    fx = Obj.from_dict(_image_mult(f_data, x))
    gx = Obj.from_dict(_image_mult(g_data, x))
    a = e_dst.hom(fx, gx)
    occ_f = _occ_transport(f_data, mod_src, x)
    occ_g = _occ_transport(g_data, mod_src, x)
    unit = e_dst.base.unit
    lay, lidx = e_dst.hom_layout(fx, gx, unit)
    col = np.zeros((len(lay), 1), dtype=complex)
    for k in mod_src.msimples:
        for i in range(x(k)):
            fk, fi = occ_f[(k, i)]
            gk, gi = occ_g[(k, i)]
            th = theta[k]
            blk = th.block(unit)
            small_lay = e_dst.hom_layout(Obj.of(fk), Obj.of(gk), unit)[0]
            for pos, (k2, i2, n2, j2, b) in enumerate(small_lay):
                v = blk[pos, 0]
                if v != 0:
                    col[lidx[(k2, fi, n2, gi, b)], 0] = v
    return mor_from_blocks(e_dst.base.unit_obj(), a, {unit: col})


# -- verification ------------------------------------------------------------

def random_graded(e: EnrichedCat, rng, x, y) -> Mor:
    """Random 1-graded element of A(x->y)."""
    x, y = _as_obj(x), _as_obj(y)
    a = e.hom(x, y)
    unit = e.base.unit
    d = a(unit)
    col = rng.normal(size=(d, 1)) + 1j * rng.normal(size=(d, 1))
    return mor_from_blocks(e.base.unit_obj(), a, {unit: col})


def verify_dagger_enriched(e: EnrichedCat, tol: Tol = DEFAULT_TOL,
                           seed: int = 5) -> Report:
    """kappa1-kappa4, enriched axioms, the workhorse lemmas, V-adjoints."""
    mod, fd = e.module, e.base
    suite = Suite(f"enrich:{mod.name}", tol, seed=seed)
    rng = rng_for(seed)
    msp = list(mod.msimples)
    usp = list(fd.simples)

    # enriched unitality and associativity
    for x, y in itertools.product(msp, repeat=2):
        a = e.hom(x, y)
        left = compose(fd.tensor_mor(e.j(x), identity(a)), e.comp(x, x, y))
        right = compose(fd.tensor_mor(identity(a), e.j(y)), e.comp(x, y, y))
        suite.observe("enriched-unitality",
                      max(residual(left, identity(a)),
                          residual(right, identity(a))), f"({x},{y})")
    for x, y, z, w in itertools.product(msp, repeat=4):
        a1, a2, a3 = e.hom(x, y), e.hom(y, z), e.hom(z, w)
        lhs = compose(fd.tensor_mor(e.comp(x, y, z), identity(a3)),
                      e.comp(x, z, w))
        rhs = _chain(fd.associator(a1, a2, a3),
                     fd.tensor_mor(identity(a1), e.comp(y, z, w)),
                     e.comp(x, y, w))
        suite.observe_mors("enriched-associativity", lhs, rhs,
                           f"({x},{y},{z},{w})")

    # mate round trips on full hom bases
    for x, y in itertools.product(msp, repeat=2):
        a = e.hom(x, y)
        g = identity(a)
        rt = e.mate_fwd(e.mate_bwd(g, x, y), x, a, y)
        suite.observe_mors("mate-roundtrip", rt, g, f"({x},{y})")

    # kappa checks
    for x, y in itertools.product(msp, repeat=2):
        a = e.hom(x, y)
        kap = e.kappa(x, y)
        inv = mor_inverse(kap)
        suite.observe_mors("kappa-invertible", compose(kap, inv),
                           identity(e.hom(x, y)), f"({x},{y})")
        k1 = _chain(fd.phi(a), fd.conjugate_mor(e.kappa(y, x)), kap)
        suite.observe_mors("kappa1", k1, identity(a), f"({x},{y})")
    for x, y, z in itertools.product(msp, repeat=3):
        lhs = compose(fd.tensor_mor(e.kappa(x, y), e.kappa(y, z)),
                      e.comp(x, y, z))
        rhs = compose(e.compbar(x, y, z), e.kappa(x, z))
        suite.observe_mors("kappa2", lhs, rhs, f"({x},{y},{z})")
    for x in msp:
        suite.observe("kappa3",
                      is_unitary(mod.module_unitor(Obj.of(x)), tol).residual,
                      f"({x},)")
    for m in msp:
        for u, v in itertools.product(usp, repeat=2):
            mu = mod.act_obj(Obj.of(m), Obj.of(u))
            mv = mod.act_obj(Obj.of(m), Obj.of(v))
            lhs = compose(e.kappa_u(u, v), e.action_component(m, u, v))
            rhs = compose(fd.conjugate_mor(e.action_component(m, v, u)),
                          e.kappa(mu, mv))
            suite.observe_mors("kappa4", lhs, rhs, f"({m},{u},{v})")

    # Lemma eta-kappa-inv
    for a in msp:
        for v in usp:
            ao, vo = Obj.of(a), Obj.of(v)
            av = mod.act_obj(ao, vo)
            lhs = compose(e.eta(ao, vo), mor_inverse(e.kappa(ao, av)))
            vb = fd.conj_obj(vo)
            e0 = _chain(fd.phi(vo),
                        fd.conjugate_mor(e.kappa_u(vo, fd.unit_obj())),
                        fd.conjugate_mor(e.eta(av, vb)))
            avv = mod.act_obj(av, vb)
            avvb = mod.act_obj(ao, fd.tensor_obj(vo, vb))
            a1 = mod.act_obj(ao, fd.unit_obj())
            g_alpha = e.graded_conj(e.G(mod.module_associator(ao, vo, vb)))
            step1 = compose(fd.tensor_mor(g_alpha, e0),
                            e.compbar(avvb, avv, av))
            g_ev = e.graded_conj(e.G(mod.act_mor(identity(ao), fd.ev(vo))))
            step2 = compose(fd.tensor_mor(g_ev, step1), e.compbar(a1, avvb, av))
            g_rho = e.graded_conj(
                e.G(mor_inverse(dagger(mod.module_unitor(ao)))))
            rhs = compose(fd.tensor_mor(g_rho, step2), e.compbar(ao, a1, av))
            suite.observe_mors("lemma-eta-kappa-inv", lhs, rhs, f"({a},{v})")

    # Lemma kappa-mate: recompute the mate of kappa and compare
    for x, y in itertools.product(msp, repeat=2):
        got = e.mate_bwd(e.kappa(x, y), Obj.of(x), Obj.of(y))
        want = e.kappa_mate_formula(x, y)
        suite.observe_mors("lemma-kappa-mate", got, want, f"({x},{y})")

    # V-adjoint squares for each (m < -) -| A(m -> -)
    for m in msp:
        mo = Obj.of(m)
        for a_s, b_s in itertools.product(usp, repeat=2):
            for d in msp:
                ao, bo, do = Obj.of(a_s), Obj.of(b_s), Obj.of(d)
                rd = e.hom(mo, do)
                ma = mod.act_obj(mo, ao)
                mb = mod.act_obj(mo, bo)
                lhs = compose(_comp_closed(fd, ao, bo, rd),
                              mor_inverse(e.Psi(mo, ao, do)))
                rhs = compose(
                    fd.tensor_mor(e.action_component(m, a_s, b_s),
                                  mor_inverse(e.Psi(mo, bo, do))),
                    e.comp(ma, mb, do))
                suite.observe_mors("v-adjoint-1", lhs, rhs,
                                   f"({m};{a_s},{b_s},{d})")
        for a_s in usp:
            for c, d in itertools.product(msp, repeat=2):
                ao, co, do = Obj.of(a_s), Obj.of(c), Obj.of(d)
                ma = mod.act_obj(mo, ao)
                rc, rd = e.hom(mo, co), e.hom(mo, do)
                lhs = compose(e.comp(ma, co, do), e.Psi(mo, ao, do))
                r_cd = _chain(
                    fd.tensor_mor(fd.coev(rc), identity(e.hom(co, do))),
                    fd.associator(fd.conj_obj(rc), rc, e.hom(co, do)),
                    fd.tensor_mor(identity(fd.conj_obj(rc)), e.comp(mo, co, do)))
                rhs = compose(fd.tensor_mor(e.Psi(mo, ao, co), r_cd),
                              _comp_closed(fd, ao, rc, rd))
                suite.observe_mors("v-adjoint-2", lhs, rhs,
                                   f"({m};{a_s},{c},{d})")

    # underlying dagger consistency
    for x, y in itertools.product(msp, repeat=2):
        if e.hom(x, y)(fd.unit) == 0:
            continue
        f = random_graded(e, rng, x, y)
        fd_dag = e.underlying_dagger(f, x, y)
        suite.observe_mors("underlying-dagger",
                           e.H(fd_dag, y, x), dagger(e.H(f, x, y)),
                           f"({x},{y})")
        dd = e.underlying_dagger(fd_dag, y, x)
        suite.observe_mors("double-dagger", dd, f, f"({x},{y})")
    for x in msp:
        suite.observe_mors("j-self-dagger",
                           e.underlying_dagger(e.j(x), x, x), e.j(x), f"({x},)")

    return suite.finish()


def _comp_closed(fd: FusionData, u, v, w) -> Mor:
    """Closed-form self-enrichment composition for arbitrary objects."""
    u, v, w = _as_obj(u), _as_obj(v), _as_obj(w)
    ub, vb = fd.conj_obj(u), fd.conj_obj(v)
    vbw = fd.tensor_obj(vb, w)
    return _chain(
        fd.associator(ub, v, vbw),
        fd.tensor_mor(identity(ub), dagger(fd.associator(v, vb, w))),
        fd.tensor_mor(identity(ub), fd.tensor_mor(fd.ev(v), identity(w))))
