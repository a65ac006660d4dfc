from .bwdata import BWData

__all__ = ["BWData"]
