"""Module layer: actions, associators, the module verification suite."""

import numpy as np
import pytest

from kappalab.catalog import builtin
from kappalab.modulecat import (
    ModuleData, ModuleDataError, SymbolModule, as_module, random_base_mor,
    random_module_mor, regular_module, verify_module,
)
from kappalab.semicat import (
    Obj, compose, dagger, identity, is_unitary, residual, scalar_of,
)


class TestActObj:
    def test_unit_action(self, modules):
        mod = modules["regular:fibonacci"]
        m = Obj.from_dict({"tau": 2})
        assert mod.act_obj(m, mod.base.unit_obj()) == m

    def test_regular_fibonacci(self, modules):
        mod = modules["regular:fibonacci"]
        got = mod.act_obj(Obj.of("tau"), Obj.of("tau"))
        assert got == Obj.from_dict({"1": 1, "tau": 1})

    def test_vec_over_z2(self, modules):
        mod = modules["vec-over-z2"]
        assert mod.act_obj(Obj.of("pt"), Obj.of("1")) == Obj.of("pt")


class TestActMor:
    def test_identities(self, modules):
        mod = modules["regular:ising"]
        m = Obj.from_dict({"sigma": 1, "psi": 1})
        u = Obj.from_dict({"sigma": 2})
        got = mod.act_mor(identity(m), identity(u))
        assert residual(got, identity(mod.act_obj(m, u))) == 0

    def test_exchange(self, modules):
        mod = modules["regular:fibonacci"]
        rng = np.random.default_rng(21)
        x = Obj.from_dict({"1": 1, "tau": 1})
        f = random_module_mor(mod, rng, x, x)
        g = random_base_mor(mod.base, rng, Obj.of("tau"),
                            Obj.from_dict({"1": 1, "tau": 1}))
        lhs = compose(mod.act_mor(f, identity(g.src)),
                      mod.act_mor(identity(x), g))
        rhs = compose(mod.act_mor(identity(x), g),
                      mod.act_mor(f, identity(g.dst)))
        assert residual(lhs, rhs) < 1e-12

    def test_dagger_exact(self, modules):
        mod = modules["regular:ising"]
        rng = np.random.default_rng(22)
        x = Obj.from_dict({"sigma": 1, "1": 1})
        u = Obj.from_dict({"psi": 1, "sigma": 1})
        f = random_module_mor(mod, rng, x, x)
        g = random_base_mor(mod.base, rng, u, u)
        assert residual(mod.act_mor(dagger(f), dagger(g)),
                        dagger(mod.act_mor(f, g))) == 0


class TestAssociatorUnitor:
    def test_triangle(self, modules):
        mod = modules["vec-over-z2"]
        x, v = Obj.of("pt"), Obj.of("1")
        lhs = mod.module_associator(x, mod.base.unit_obj(), v)
        rhs = mod.act_mor(mod.module_unitor(x), identity(v))
        assert residual(lhs, rhs) < 1e-12

    def test_regular_equals_base_associator(self, modules, fib):
        mod = modules["regular:fibonacci"]
        a = Obj.of("tau")
        got = mod.module_associator(a, a, a)
        want = fib.associator(a, a, a)
        assert residual(got, Mor_retyped(want, got)) < 1e-12

    def test_vec_over_z2_sign(self, modules):
        mod = modules["vec-over-z2"]
        got = mod.module_associator(Obj.of("pt"), Obj.of("1"), Obj.of("1"))
        assert abs(scalar_of_retyped(got) + 1.0) < 1e-12


def Mor_retyped(m, like):
    from kappalab.semicat import Mor
    return Mor(like.src, like.dst, m.blocks)


def scalar_of_retyped(m):
    (_, b), = m.blocks
    return complex(b[0, 0])


class TestRegularModule:
    def test_trivial(self, trivial):
        data = regular_module(trivial)
        assert data.msimples == ("1",)
        rep = verify_module(data)
        assert rep.overall and max(c.residual for c in rep.checks) < 1e-14

    @pytest.mark.parametrize("name", ["fibonacci", "ising"])
    def test_catalog_regulars_pass(self, name):
        rep = verify_module(regular_module(builtin(name).payload))
        assert rep.overall


class TestVerifyModule:
    @pytest.mark.parametrize(
        "name", ["regular:z3", "regular:semion", "vec-over-z2"])
    def test_catalog(self, modules, name):
        rep = verify_module(modules[name])
        assert rep.overall
        assert max(c.residual for c in rep.checks) < 1e-9

    def test_perturbed_ma_fails_pentagon(self, fib):
        data = regular_module(fib)
        ma = {k: np.array(v, dtype=complex) for k, v in data.MA.items()}
        ma[("tau", "tau", "tau", "tau")] = \
            ma[("tau", "tau", "tau", "tau")] + np.array([[1e-3, 0], [0, 0]])
        bad = ModuleData(base=data.base, msimples=data.msimples,
                         Ntilde=data.Ntilde, MA=ma, unitor=data.unitor,
                         name="perturbed")
        rep = verify_module(bad)
        assert not rep.check("module-pentagon").passed
        assert rep.check("module-pentagon").residual > 1e-4

    def test_broken_unitor_fails(self):
        rep = verify_module(builtin("broken:vec-over-z2-unitor").payload)
        assert not rep.check("module-unitor-unitary").passed
        assert rep.check("module-unitor-unitary").residual > 1e-4
        assert rep.check("module-pentagon").passed


class TestValidation:
    def test_bad_unit_multiplicity(self, trivial):
        with pytest.raises(ModuleDataError, match="unit"):
            SymbolModule(ModuleData(
                base=trivial, msimples=("m",),
                Ntilde={("m", "1", "m"): 2}, MA={}, unitor={"m": 1.0}))

    def test_inconsistent_multiplicities(self, fib):
        nt = {("m", "1", "m"): 1, ("m", "tau", "m"): 1}
        with pytest.raises(ModuleDataError, match="associativity"):
            SymbolModule(ModuleData(
                base=fib, msimples=("m",), Ntilde=nt,
                MA={("m", "tau", "tau", "m"): np.eye(1)}, unitor={"m": 1.0}))

    def test_missing_ma(self, fib):
        data = regular_module(fib)
        ma = {k: v for k, v in data.MA.items()
              if k != ("tau", "tau", "tau", "tau")}
        with pytest.raises(ModuleDataError, match="missing MA"):
            SymbolModule(ModuleData(base=fib, msimples=data.msimples,
                                    Ntilde=data.Ntilde, MA=ma,
                                    unitor=data.unitor))
