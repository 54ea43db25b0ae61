"""Skeletal unitary (braided) monoidal categories.

A :class:`FusionData` holds fusion multiplicities N, F-symbols, a dual
involution, ev/coev normalizations and optional R-symbols, all in a strict
skeletal gauge (unitors are identity matrices, F-entries touching the unit
are 1).  Every structural morphism — tensor products, associators,
evaluation/coevaluation, the canonical conjugation coherences nu/phi/r and
the braiding — is materialized as a :class:`~kappalab.semicat.Mor`, and
``verify_fusion`` runs the axiom suite as numerical residual checks.

Basis convention: for objects a, b the simple summands of ``a (x) b`` at a
target simple c are ordered lexicographically by (left summand occurrence,
right summand occurrence, fusion multiplicity index); all block matrices
refer to this ordering.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .report import Suite, Report
from .semicat import (
    DEFAULT_TOL, Mor, Obj, Tol, ShapeMismatchError, compose, dagger,
    identity, is_unitary, mor_from_blocks, mor_inverse, residual,
)
from .util import pmap, rng_for

__all__ = ["FusionData", "NoBraidingError", "FusionDataError", "verify_fusion"]


class FusionDataError(ValueError):
    """Structural invariant of the fusion data is violated."""


class NoBraidingError(ValueError):
    """Braiding requested but no R-symbols are present."""


def _as_obj(x) -> Obj:
    return Obj.of(x) if isinstance(x, str) else x


@dataclass
class FusionData:
    """Skeletal data of a unitary (optionally braided) fusion category.

    ``N`` maps ``(a, b, c) -> N_ab^c``.  ``F`` maps ``(a, b, c, d)`` to a
    square matrix whose rows run over admissible ``(e, mu, nu)`` (``e`` the
    a-b channel) and whose columns run over ``(f, lam, kap)`` (``f`` the
    b-c channel), both ordered by (simple index, then multiplicity
    indices).  ``R`` maps ``(a, b, c)`` to an ``N_ba^c x N_ab^c`` matrix.
    ``evcoef`` fixes the single coefficient of ``ev_s``; the coevaluation
    coefficient is derived from the zig-zag.
    """

    simples: tuple
    unit: str
    dual: dict
    N: dict
    F: dict
    evcoef: dict
    R: dict | None = None
    name: str = ""

    def __post_init__(self):
        self.simples = tuple(self.simples)
        self._index = {s: i for i, s in enumerate(self.simples)}
        self._chan = {}
        self._chanidx = {}
        self._assoc = {}
        self._Frows = {}
        self._Fcols = {}
        self._nucache = {}
        self._phiscale = {}
        self._dualscale = {}
        self._validate()
        self._coev = {s: 1.0 / (self.evcoef[s] * np.conj(self._snake_entry(s)))
                      for s in self.simples}

    # -- structural bookkeeping -------------------------------------------

    def _validate(self):
        fd = self
        if fd.unit not in fd.simples:
            raise FusionDataError(f"unit {fd.unit!r} not among simples")
        for s in fd.simples:
            if fd.dual.get(s) not in fd.simples:
                raise FusionDataError(f"dual of {s!r} missing or unknown")
            if fd.dual[fd.dual[s]] != s:
                raise FusionDataError(f"dual is not an involution at {s!r}")
        if fd.dual[fd.unit] != fd.unit:
            raise FusionDataError("dual(unit) must be the unit")
        for key, n in fd.N.items():
            if n < 0:
                raise FusionDataError(f"negative fusion multiplicity at {key}")
        for a, c in itertools.product(fd.simples, repeat=2):
            want = 1 if a == c else 0
            if fd.n(a, fd.unit, c) != want or fd.n(fd.unit, a, c) != want:
                raise FusionDataError(f"unit fusion law fails at ({a},{c})")
        for a, b in itertools.product(fd.simples, repeat=2):
            want = 1 if b == fd.dual[a] else 0
            if fd.n(a, b, fd.unit) != want:
                raise FusionDataError(f"N_({a},{b})^unit must be {want}")
        for a, b, c, d in itertools.product(fd.simples, repeat=4):
            lhs = sum(fd.n(a, b, e) * fd.n(e, c, d) for e in fd.simples)
            rhs = sum(fd.n(a, f, d) * fd.n(b, c, f) for f in fd.simples)
            if lhs != rhs:
                raise FusionDataError(
                    f"fusion ring is not associative at ({a},{b},{c},{d})")
        for s in fd.simples:
            if s not in fd.evcoef or fd.evcoef[s] == 0:
                raise FusionDataError(f"evcoef missing or zero for {s!r}")
        # F-matrices: fill unit-touching entries, demand the rest.
        for a, b, c, d in itertools.product(fd.simples, repeat=4):
            rows = self._f_rows(a, b, c, d)
            cols = self._f_cols(a, b, c, d)
            if not rows and not cols:
                continue
            if len(rows) != len(cols):
                raise FusionDataError(
                    f"F-space at ({a},{b},{c},{d}) is not square")
            key = (a, b, c, d)
            if fd.unit in (a, b, c):
                expected = np.eye(len(rows))
                got = fd.F.get(key)
                if got is None:
                    fd.F[key] = expected
                elif np.linalg.norm(np.asarray(got) - expected) > 1e-12:
                    raise FusionDataError(
                        f"strict-unit gauge violated: F at {key} is not the identity")
            elif key not in fd.F:
                raise FusionDataError(f"missing F-matrix at {key}")
            else:
                m = np.asarray(fd.F[key], dtype=complex)
                if m.shape != (len(rows), len(cols)):
                    raise FusionDataError(
                        f"F-matrix at {key} has shape {m.shape}, "
                        f"expected {(len(rows), len(cols))}")
                fd.F[key] = m
        if fd.R is not None:
            for a, b in itertools.product(fd.simples, repeat=2):
                for c in fd.simples:
                    if fd.n(a, b, c) == 0:
                        continue
                    m = fd.R.get((a, b, c))
                    if m is None and fd.unit in (a, b):
                        m = np.eye(fd.n(a, b, c))
                    if m is None:
                        raise FusionDataError(f"missing R-matrix at ({a},{b},{c})")
                    m = np.asarray(m, dtype=complex)
                    if m.shape != (fd.n(b, a, c), fd.n(a, b, c)):
                        raise FusionDataError(f"R-matrix at ({a},{b},{c}) has wrong shape")
                    fd.R[(a, b, c)] = m

    def n(self, a: str, b: str, c: str) -> int:
        return self.N.get((a, b, c), 0)

    def _f_rows(self, a, b, c, d):
        key = (a, b, c, d)
        if key not in self._Frows:
            self._Frows[key] = [
                (e, mu, nu)
                for e in self.simples
                for mu in range(self.n(a, b, e))
                for nu in range(self.n(e, c, d))]
        return self._Frows[key]

    def _f_cols(self, a, b, c, d):
        key = (a, b, c, d)
        if key not in self._Fcols:
            self._Fcols[key] = [
                (f, lam, kap)
                for f in self.simples
                for lam in range(self.n(b, c, f))
                for kap in range(self.n(a, f, d))]
        return self._Fcols[key]

    def _snake_entry(self, s: str) -> complex:
        """F-entry pairing the two unit channels of (s sbar) s -> s."""
        sb = self.dual[s]
        rows = self._f_rows(s, sb, s, s)
        cols = self._f_cols(s, sb, s, s)
        r = rows.index((self.unit, 0, 0))
        c = cols.index((self.unit, 0, 0))
        return complex(np.asarray(self.F[(s, sb, s, s)])[r, c])

    def unit_obj(self) -> Obj:
        return Obj.of(self.unit)

    def qdim(self, s: str) -> float:
        """Perron-Frobenius dimension of a simple (largest eigenvalue of N_s)."""
        mat = np.array([[self.n(s, x, y) for x in self.simples]
                        for y in self.simples], dtype=float)
        return float(max(np.linalg.eigvals(mat).real))

    # -- decomposition basis ----------------------------------------------

    def occurrences(self, a: Obj):
        return [(s, i) for s in self.simples for i in range(a(s))]

    def channels(self, a: Obj, b: Obj, c: str):
        """Ordered simple summands of a (x) b at target simple c."""
        key = (a.mult, b.mult, c)
        if key not in self._chan:
            ch = [((s, i), (t, j), mu)
                  for s in self.simples for i in range(a(s))
                  for t in self.simples for j in range(b(t))
                  for mu in range(self.n(s, t, c))]
            self._chan[key] = ch
            self._chanidx[key] = {x: k for k, x in enumerate(ch)}
        return self._chan[key]

    def channel_index(self, a: Obj, b: Obj, c: str):
        self.channels(a, b, c)
        return self._chanidx[(a.mult, b.mult, c)]

    # -- operations on objects and morphisms ------------------------------

    def tensor_obj(self, a, b) -> Obj:
        a, b = _as_obj(a), _as_obj(b)
        return Obj.from_dict(
            {c: len(self.channels(a, b, c)) for c in self.simples})

    def conj_obj(self, a) -> Obj:
        a = _as_obj(a)
        return Obj.from_dict({self.dual[s]: k for s, k in a.mult})

    def tensor_mor(self, f: Mor, g: Mor) -> Mor:
        src = self.tensor_obj(f.src, g.src)
        dst = self.tensor_obj(f.dst, g.dst)
        blocks = {}
        for c in self.simples:
            sch = self.channels(f.src, g.src, c)
            dch = self.channels(f.dst, g.dst, c)
            if not sch or not dch:
                continue
            m = np.zeros((len(dch), len(sch)), dtype=complex)
            didx = self.channel_index(f.dst, g.dst, c)
            for col, ((s, i), (t, j), mu) in enumerate(sch):
                fb, gb = f.block(s), g.block(t)
                for ii in range(f.dst(s)):
                    if fb[ii, i] == 0:
                        continue
                    for jj in range(g.dst(t)):
                        v = fb[ii, i] * gb[jj, j]
                        if v == 0:
                            continue
                        m[didx[((s, ii), (t, jj), mu)], col] = v
            if m.any():
                blocks[c] = m
        return mor_from_blocks(src, dst, blocks)

    def associator(self, a, b, c) -> Mor:
        """alpha_{a,b,c}: (a b) c -> a (b c), assembled from F-symbols."""
        a, b, c = _as_obj(a), _as_obj(b), _as_obj(c)
        key = (a.mult, b.mult, c.mult)
        if key in self._assoc:
            return self._assoc[key]
        ab = self.tensor_obj(a, b)
        bc = self.tensor_obj(b, c)
        src = self.tensor_obj(ab, c)
        dst = self.tensor_obj(a, bc)
        blocks = {}
        for d in self.simples:
            sch = self.channels(ab, c, d)
            if not sch:
                continue
            dch = self.channels(a, bc, d)
            didx = self.channel_index(a, bc, d)
            m = np.zeros((len(dch), len(sch)), dtype=complex)
            for col, ((e, p), (u, k), nu) in enumerate(sch):
                (s, i), (t, j), mu = self.channels(a, b, e)[p]
                fmat = self.F[(s, t, u, d)]
                rows = self._f_rows(s, t, u, d)
                cols = self._f_cols(s, t, u, d)
                r = rows.index((e, mu, nu))
                for cpos, (w, lam, kap) in enumerate(cols):
                    v = fmat[r, cpos]
                    if v == 0:
                        continue
                    q = self.channel_index(b, c, w)[((t, j), (u, k), lam)]
                    m[didx[((s, i), (w, q), kap)], col] = v
            if m.any():
                blocks[d] = m
        out = mor_from_blocks(src, dst, blocks)
        self._assoc[key] = out
        return out

    def ev(self, u) -> Mor:
        """ev_u: u (x) ubar -> 1, pairing the i-th occurrences."""
        u = _as_obj(u)
        ub = self.conj_obj(u)
        src = self.tensor_obj(u, ub)
        ch = self.channels(u, ub, self.unit)
        row = np.zeros((1, len(ch)), dtype=complex)
        for col, ((s, i), (t, j), _) in enumerate(ch):
            if t == self.dual[s] and j == i:
                row[0, col] = self.evcoef[s]
        return mor_from_blocks(src, self.unit_obj(), {self.unit: row})

    def coev(self, u) -> Mor:
        """coev_u: 1 -> ubar (x) u, normalized so the zig-zags close."""
        u = _as_obj(u)
        ub = self.conj_obj(u)
        dst = self.tensor_obj(ub, u)
        ch = self.channels(ub, u, self.unit)
        colv = np.zeros((len(ch), 1), dtype=complex)
        for rowi, ((t, i), (s, j), _) in enumerate(ch):
            if s == self.dual[t] and j == i:
                colv[rowi, 0] = self._coev[s]
        return mor_from_blocks(self.unit_obj(), dst, {self.unit: colv})

    def r_mor(self) -> Mor:
        """The real structure r := coev_1: 1 -> conj(1)."""
        return self.coev(self.unit_obj())

    def dual_contract(self, f: Mor) -> Mor:
        """The dual functor by explicit contraction (reference path)."""
        u, v = f.src, f.dst
        ub, vb = self.conj_obj(u), self.conj_obj(v)
        m1 = self.tensor_mor(self.coev(u), identity(vb))
        m2 = self.associator(ub, u, vb)
        m3 = self.tensor_mor(identity(ub), self.tensor_mor(f, identity(vb)))
        m4 = self.tensor_mor(identity(ub), self.ev(v))
        return compose(compose(compose(m1, m2), m3), m4)

    def _dual_scale(self, s: str) -> complex:
        """Scalar action of the contraction on id_s (1 when zig-zags close)."""
        if s not in self._dualscale:
            d = self.dual_contract(identity(Obj.of(s)))
            self._dualscale[s] = complex(d.block(self.dual[s])[0, 0])
        return self._dualscale[s]

    def dual_mor(self, f: Mor) -> Mor:
        """The dual functor on morphisms: f^*: conj(dst) -> conj(src).

        By naturality the contraction acts blockwise as a scaled transpose;
        the scale per simple is taken from the contraction on identities.
        """
        blocks = {}
        for s, b in f.blocks:
            blocks[self.dual[s]] = self._dual_scale(s) * b.T
        return mor_from_blocks(self.conj_obj(f.dst), self.conj_obj(f.src),
                               blocks)

    def conjugate_mor(self, f: Mor) -> Mor:
        """fbar := (f dagger)^*."""
        return self.dual_mor(dagger(f))

    def nu_contract(self, u, v) -> Mor:
        """nu_{u,v} by explicit contraction (reference path)."""
        u, v = _as_obj(u), _as_obj(v)
        ub, vb = self.conj_obj(u), self.conj_obj(v)
        x = self.tensor_obj(v, u)
        w = self.conj_obj(x)
        uv_b = self.tensor_obj(ub, vb)
        m1 = self.tensor_mor(self.coev(x), identity(uv_b))
        m2 = self.associator(w, x, uv_b)
        inner = compose(
            compose(
                compose(self.associator(v, u, uv_b),
                        self.tensor_mor(identity(v),
                                        dagger(self.associator(u, ub, vb)))),
                self.tensor_mor(identity(v),
                                self.tensor_mor(self.ev(u), identity(vb)))),
            self.ev(v))
        m3 = self.tensor_mor(identity(w), inner)
        return compose(compose(m1, m2), m3)

    def nu(self, u, v) -> Mor:
        """nu_{u,v}: ubar (x) vbar -> conj(v (x) u), assembled additively."""
        u, v = _as_obj(u), _as_obj(v)
        ub, vb = self.conj_obj(u), self.conj_obj(v)
        x = self.tensor_obj(v, u)
        w = self.conj_obj(x)
        blocks = {}
        for s in self.simples:
            cols = self.channels(ub, vb, s)
            if not cols:
                continue
            sd = self.dual[s]
            rows_idx = self.channel_index(v, u, sd)
            m = np.zeros((len(self.channels(v, u, sd)), len(cols)),
                         dtype=complex)
            for col, ((a1, i), (a2, j), mu) in enumerate(cols):
                t, wl = self.dual[a1], self.dual[a2]
                small = self._nu_simple(t, wl).block(s)
                small_rows = self.channels(Obj.of(wl), Obj.of(t), sd)
                for rpos, ((_, _), (_, _), rho) in enumerate(small_rows):
                    val = small[rpos, mu]
                    if val != 0:
                        m[rows_idx[((wl, j), (t, i), rho)], col] = val
            if m.any():
                blocks[s] = m
        return mor_from_blocks(self.tensor_obj(ub, vb), w, blocks)

    def _nu_simple(self, t: str, w: str) -> Mor:
        key = (t, w)
        if key not in self._nucache:
            self._nucache[key] = self.nu_contract(Obj.of(t), Obj.of(w))
        return self._nucache[key]

    def phi_contract(self, u) -> Mor:
        """phi_u by explicit contraction (reference path)."""
        u = _as_obj(u)
        ub = self.conj_obj(u)
        p1 = self.tensor_mor(identity(u), dagger(self.ev(ub)))
        p2 = dagger(self.associator(u, ub, u))
        p3 = self.tensor_mor(self.ev(u), identity(u))
        return compose(compose(p1, p2), p3)

    def phi(self, u) -> Mor:
        """phi_u: u -> conj(conj(u)), blockwise phases by naturality."""
        u = _as_obj(u)
        blocks = {}
        for s, k in u.mult:
            if s not in self._phiscale:
                self._phiscale[s] = complex(
                    self.phi_contract(Obj.of(s)).block(s)[0, 0])
            blocks[s] = self._phiscale[s] * np.eye(k)
        return mor_from_blocks(u, u, blocks)

    def braiding(self, u, v) -> Mor:
        """beta_{u,v}: u (x) v -> v (x) u from the R-symbols."""
        if self.R is None:
            raise NoBraidingError(f"{self.name or 'category'} has no R-symbols")
        u, v = _as_obj(u), _as_obj(v)
        src = self.tensor_obj(u, v)
        dst = self.tensor_obj(v, u)
        blocks = {}
        for c in self.simples:
            sch = self.channels(u, v, c)
            if not sch:
                continue
            dch = self.channels(v, u, c)
            didx = self.channel_index(v, u, c)
            m = np.zeros((len(dch), len(sch)), dtype=complex)
            for col, ((s, i), (t, j), mu) in enumerate(sch):
                rmat = self.R[(s, t, c)]
                for nu in range(rmat.shape[0]):
                    m[didx[((t, j), (s, i), nu)], col] = rmat[nu, mu]
            if m.any():
                blocks[c] = m
        return mor_from_blocks(src, dst, blocks)

    def inv_braiding(self, u, v) -> Mor:
        """beta^{-1}_{v,u}: u (x) v -> v (x) u (the reversed crossing)."""
        return mor_inverse(self.braiding(_as_obj(v), _as_obj(u)))


# -- verification ----------------------------------------------------------

def _pentagon_residual(fd: FusionData, abcd) -> float:
    a, b, c, d = (Obj.of(x) for x in abcd)
    lhs = compose(fd.associator(fd.tensor_obj(a, b), c, d),
                  fd.associator(a, b, fd.tensor_obj(c, d)))
    rhs = compose(
        compose(fd.tensor_mor(fd.associator(a, b, c), identity(d)),
                fd.associator(a, fd.tensor_obj(b, c), d)),
        fd.tensor_mor(identity(a), fd.associator(b, c, d)))
    return residual(lhs, rhs)


def _hexagon_residual(fd: FusionData, abc, inverse: bool) -> float:
    a, b, c = (Obj.of(x) for x in abc)
    braid = fd.inv_braiding if inverse else fd.braiding
    lhs = compose(compose(fd.associator(a, b, c),
                          braid(a, fd.tensor_obj(b, c))),
                  fd.associator(b, c, a))
    rhs = compose(compose(fd.tensor_mor(braid(a, b), identity(c)),
                          fd.associator(b, a, c)),
                  fd.tensor_mor(identity(b), braid(a, c)))
    return residual(lhs, rhs)


def zigzag_residuals(fd: FusionData, u) -> tuple:
    u = _as_obj(u)
    ub = fd.conj_obj(u)
    zz1 = compose(
        compose(fd.tensor_mor(identity(u), fd.coev(u)),
                dagger(fd.associator(u, ub, u))),
        fd.tensor_mor(fd.ev(u), identity(u)))
    zz2 = compose(
        compose(fd.tensor_mor(fd.coev(u), identity(ub)),
                fd.associator(ub, u, ub)),
        fd.tensor_mor(identity(ub), fd.ev(u)))
    return residual(zz1, identity(u)), residual(zz2, identity(ub))


def verify_fusion(fd: FusionData, tol: Tol = DEFAULT_TOL, seed: int = 7) -> Report:
    """Run the full fusion-category axiom suite; failures are reported."""
    suite = Suite(f"fusion:{fd.name}", tol)
    simples = fd.simples
    rng = rng_for(seed)

    for (a, b, c, d), r in zip(
            itertools.product(simples, repeat=4),
            pmap(lambda q: _pentagon_residual(fd, q),
                 itertools.product(simples, repeat=4))):
        suite.observe("pentagon", r, f"({a},{b},{c},{d})")

    for a, c in itertools.product(simples, repeat=2):
        for trip in ((a, fd.unit, c), (fd.unit, a, c), (a, c, fd.unit)):
            r = residual(fd.associator(*map(Obj.of, trip)),
                         identity(fd.tensor_obj(fd.tensor_obj(
                             Obj.of(trip[0]), Obj.of(trip[1])), Obj.of(trip[2]))))
            suite.observe("triangle-unit-gauge", r, f"{trip}")

    for a, b, c in itertools.product(simples, repeat=3):
        r = is_unitary(fd.associator(a, b, c), tol).residual
        suite.observe("f-unitarity", r, f"({a},{b},{c})")

    for s in simples:
        z1, z2 = zigzag_residuals(fd, s)
        suite.observe("zigzag", max(z1, z2), f"({s},)")

    for _ in range(4):
        u = Obj.of(simples[rng.integers(len(simples))])
        v = Obj.of(simples[rng.integers(len(simples))])
        f = mor_from_blocks(u, v, {
            s: rng.normal(size=(v(s), u(s))) + 1j * rng.normal(size=(v(s), u(s)))
            for s in set(u.support) & set(v.support)})
        suite.observe_mors("dual-dagger-functor",
                           fd.dual_mor(dagger(f)), dagger(fd.dual_mor(f)),
                           f"({u.support},{v.support})")

    for u, v in itertools.product(simples, repeat=2):
        suite.observe("nu-unitary", is_unitary(fd.nu(u, v), tol).residual,
                      f"({u},{v})")
    for u in simples:
        suite.observe("phi-unitary", is_unitary(fd.phi(u), tol).residual, f"({u},)")
    suite.observe("r-unitary", is_unitary(fd.r_mor(), tol).residual, "")

    one = fd.unit_obj()
    suite.observe_mors("inv-mon-r-real",
                       compose(fd.r_mor(), fd.conjugate_mor(fd.r_mor())),
                       fd.phi(one), "")
    for u, v in itertools.product(simples, repeat=2):
        uo, vo = Obj.of(u), Obj.of(v)
        lhs = fd.phi(fd.tensor_obj(uo, vo))
        rhs = compose(
            compose(fd.tensor_mor(fd.phi(uo), fd.phi(vo)),
                    fd.nu(fd.conj_obj(uo), fd.conj_obj(vo))),
            fd.conjugate_mor(fd.nu(vo, uo)))
        suite.observe_mors("inv-mon-phi-monoidal", lhs, rhs, f"({u},{v})")
    for u in simples:
        ub = fd.conj_obj(Obj.of(u))
        left = compose(fd.tensor_mor(identity(ub), fd.r_mor()),
                       fd.nu(u, fd.unit))
        right = compose(fd.tensor_mor(fd.r_mor(), identity(ub)),
                        fd.nu(fd.unit_obj(), Obj.of(u)))
        suite.observe("inv-mon-nu-unital",
                      max(residual(left, identity(ub)),
                          residual(right, identity(ub))), f"({u},)")
    for u, v, w in itertools.product(simples, repeat=3):
        uo, vo, wo = Obj.of(u), Obj.of(v), Obj.of(w)
        ub, vb, wb = (fd.conj_obj(x) for x in (uo, vo, wo))
        lhs = compose(
            compose(fd.tensor_mor(fd.nu(uo, vo), identity(wb)),
                    fd.nu(fd.tensor_obj(vo, uo), wo)),
            fd.conjugate_mor(dagger(fd.associator(wo, vo, uo))))
        rhs = compose(
            compose(fd.associator(ub, vb, wb),
                    fd.tensor_mor(identity(ub), fd.nu(vo, wo))),
            fd.nu(uo, fd.tensor_obj(wo, vo)))
        suite.observe_mors("inv-mon-nu-associative", lhs, rhs, f"({u},{v},{w})")

    if fd.R is not None:
        for (a, b, c), r in zip(
                itertools.product(simples, repeat=3),
                pmap(lambda q: _hexagon_residual(fd, q, False),
                     itertools.product(simples, repeat=3))):
            suite.observe("hexagon-1", r, f"({a},{b},{c})")
        for (a, b, c), r in zip(
                itertools.product(simples, repeat=3),
                pmap(lambda q: _hexagon_residual(fd, q, True),
                     itertools.product(simples, repeat=3))):
            suite.observe("hexagon-2", r, f"({a},{b},{c})")
        for u, v in itertools.product(simples, repeat=2):
            suite.observe("r-matrix-unitary",
                          is_unitary(fd.braiding(u, v), tol).residual, f"({u},{v})")
        for u, v in itertools.product(simples, repeat=2):
            uo, vo = Obj.of(u), Obj.of(v)
            ub, vb = fd.conj_obj(uo), fd.conj_obj(vo)
            lhs = compose(fd.braiding(ub, vb), fd.nu(vo, uo))
            rhs = compose(fd.nu(uo, vo),
                          fd.conjugate_mor(mor_inverse(fd.braiding(uo, vo))))
            suite.observe_mors("braided-involutive", lhs, rhs, f"({u},{v})")

    return suite.finish()
