from density._blocks import MatrixV
from density._blocks import RawY
from density._blocks import ScalarX
from density._blocks import ScalarY
from density.core import BlockODE
from density.core import BlockRegistry
from density.core import make_block
from density.integrator import BlockSolution
from density.integrator import convergence_order
from density.integrator import integrate_block
from density.volume import DensityProfile
from density.volume import ScanReport
from density.volume import block_odes
from density.volume import closed_form_x
from density.volume import density_profile
from density.volume import phi_independence_scan
from density.volume import scan_grid
from density.volume import small_t_slope
from density.volume import volume_at_zero
from density.volume import volume_density
from density.volume import volume_from_blocks

__all__ = [
    "BlockODE",
    "BlockRegistry",
    "BlockSolution",
    "DensityProfile",
    "MatrixV",
    "RawY",
    "ScalarX",
    "ScalarY",
    "ScanReport",
    "block_odes",
    "closed_form_x",
    "convergence_order",
    "density_profile",
    "integrate_block",
    "make_block",
    "phi_independence_scan",
    "scan_grid",
    "small_t_slope",
    "volume_at_zero",
    "volume_density",
    "volume_from_blocks",
]
