from ._pumls import *  # noqa: F401,F403
from ._pumls import __doc__  # noqa: F401
