"""Python bindings for the nlbif C++ library.

Solutions of  -(∫|u|^p + b)^q u'' = λ u^p,  u(0) = u(1) = 0  are u = t W_p / ‖W_p‖_p,
where t = ‖u‖_p is a positive root of g(t) = (t^p + b)^q - λ ‖W_p‖_p^{1-p} t^{p-1}.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
