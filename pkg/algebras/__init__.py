from algebras._damek_ricci import DamekRicciSpec
from algebras._damek_ricci import build_damek_ricci
from algebras._raw import RawSpec
from algebras._spectral import SpectralSpec
from algebras.clifford import anticommutation_defect
from algebras.clifford import clifford_generate
from algebras.clifford import minimal_dimension
from algebras.core import AlgebraSpec
from algebras.core import MetricSolvableAlgebra
from algebras.core import SpecRegistry
from algebras.core import build_from_spec
from algebras.core import make_spec
from algebras.jfamily import AdaptedBasis
from algebras.jfamily import JOperatorFamily
from algebras.jfamily import VBlock
from algebras.jfamily import XBlock
from algebras.jfamily import YBlock
from algebras.jfamily import decompose
from algebras.jfamily import j_family
from algebras.spectral import SpectralData
from algebras.spectral import check_grading
from algebras.spectral import spectral_decompose

__all__ = [
    "AdaptedBasis",
    "AlgebraSpec",
    "DamekRicciSpec",
    "JOperatorFamily",
    "MetricSolvableAlgebra",
    "RawSpec",
    "SpecRegistry",
    "SpectralData",
    "SpectralSpec",
    "VBlock",
    "XBlock",
    "YBlock",
    "anticommutation_defect",
    "build_damek_ricci",
    "build_from_spec",
    "check_grading",
    "clifford_generate",
    "decompose",
    "j_family",
    "make_spec",
    "minimal_dimension",
    "spectral_decompose",
]
