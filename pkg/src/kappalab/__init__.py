"""kappalab: numerical verification of dagger-enriched monoidal structures.

Finitely semisimple unitary (braided) monoidal categories, their dagger
module categories and the enriched categories built from them are
materialized as complex block matrices; every axiom and construction is
checked as a Frobenius-norm residual.
"""

from .semicat import (Tol, DEFAULT_TOL, Obj, Mor, compose, dagger, direct_sum,
                      approx_eq, is_unitary, scalar_of, identity,
                      mor_from_blocks, ShapeMismatchError, NotAScalarError)
from .fusion import FusionData, FusionDataError, NoBraidingError, verify_fusion
from .modulecat import (ModuleData, ModuleDataError, RightModule,
                        SymbolModule, regular_module, verify_module, as_module)
from .enrich import (HomBasis, EnrichedCat, EnrichedFunctorData,
                     build_enriched, self_enrichment, verify_dagger_enriched,
                     check_v_natural, conjugate_enriched, DegenerateBasisError)
from .roundtrip import (RoundTrip, ReconstructedModule,
                        DaggerModuleFunctorData, build_roundtrip,
                        verify_roundtrip, two_adjoint_test, action_dagger_test,
                        functor_transport)
from .monoidal import (CentralStructure, CentralModule, regular_central,
                       MonoidalEnrichedCat, build_monoidal_enriched,
                       half_braiding_mate, verify_monoidal, CentralDataError)
from .catalog import CatalogEntry, UnknownNameError, builtin, list_builtins
from .report import Check, Report
from .io import LoadError, load_file, save_file

__version__ = "0.1.0"
