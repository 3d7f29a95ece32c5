__version__ = '0.1.0'


# expose specific classes and functions
from .groups import build_group
from .towers import WeightSystem, standard_tower, tower_spectrum
from .factorizations import enumerate_series, verify_main_theorem
from .utils import VerificationReport, enable_logging

# pre-load submodules
from . import cli
from . import factorizations
from . import groups
from . import laplacians
from . import lattices
from . import scalars
from . import symfuncs
from . import towers
from . import utils
from . import zonotopes


__all__ = (

    # classes and functions
    'VerificationReport',
    'WeightSystem',
    'build_group',
    'enable_logging',
    'enumerate_series',
    'standard_tower',
    'tower_spectrum',
    'verify_main_theorem',

    # modules
    'cli',
    'factorizations',
    'groups',
    'laplacians',
    'lattices',
    'scalars',
    'symfuncs',
    'towers',
    'utils',
    'zonotopes',
)
