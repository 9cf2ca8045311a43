"""Loss-given-default distributions implied by credit market data.

The package models a firm's leverage ratio (assets over debt) as a
switching geometric Brownian motion.  Default is driven by the last
passage of the leverage ratio below a distress level, followed by an
occupation-time clock under a danger threshold.  From that construction
the package computes, in closed form or by Monte Carlo:

* the distribution of the leverage ratio at default (hence the
  loss-given-default distribution),
* the default-time distribution and term default probabilities,
* maximum-likelihood parameter estimates from equity and debt series,
* model-implied CDS spreads and the spread-per-unit-loss ratio.

The numerical core lives in :mod:`lgd.model`, :mod:`lgd.laplace`,
:mod:`lgd.simulate`, :mod:`lgd.calibrate` and :mod:`lgd.pricing`;
:mod:`lgd.pipeline` orchestrates the full estimation, and
:mod:`lgd.service` wraps everything in a FastAPI app that the ``lgd``
CLI drives either in-process or over HTTP.
"""

from lgd.errors import CalibrationInfeasibleError, InputError, NumericalError
from lgd.model import DerivedParams, ModelParams, derive_params

__version__ = "0.1.0"

__all__ = [
    "CalibrationInfeasibleError",
    "DerivedParams",
    "InputError",
    "ModelParams",
    "NumericalError",
    "derive_params",
    "__version__",
]
