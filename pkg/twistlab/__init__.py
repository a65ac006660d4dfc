from .version import __version__
from .classes import BWData
from . import catalog, index, mec, profile, twist

__all__ = ["__version__", "BWData", "catalog", "index", "mec", "profile", "twist"]
