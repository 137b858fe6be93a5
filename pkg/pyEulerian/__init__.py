from . import Core
from . import Validation
from .Core import *
from .Core.tools import Rat, ArgumentError, ResourceError
from .Core.poly import Poly, USeries
from .Core.general import Progression
from .Validation.suite import verify_suite
from .Validation.conf import verify_conf

__all__ = ['Core', 'Validation', 'Rat', 'Poly', 'USeries', 'Progression',
           'ArgumentError', 'ResourceError', 'verify_suite', 'verify_conf']
