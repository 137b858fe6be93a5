from . import oracle
from . import conf
