"""hallforge: exact Hall, Ringel, Heisenberg-double and lattice algebras of quiver categories over F_q."""

from .coeff import Coeff, GroundParams, parse_coeff, render_coeff
from .quiver import (BudgetExceeded, CategoryTable, ConfigError, InvalidQuiver, OutOfTable, Quiver,
                     build_table, load_config, table_from_config)
from .hopf import HopfConfig, RingelHopf
from .heis import CheckReport, HeisDouble
from .derived import Graded, TiltTable, discover_tilt
from .lattice import FAlgebra, LatticeAlgebra, LatticeConfig

__version__ = "0.1.0"
