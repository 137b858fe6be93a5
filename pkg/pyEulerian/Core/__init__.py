from . import tools
from . import poly
from . import classical
from . import general
from . import qeuler



__all__ = ['tools', 'poly', 'classical', 'general', 'qeuler']
