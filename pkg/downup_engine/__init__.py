"""Down-Up Engine package."""

from downup_engine.main import DownUpEngine

__version__ = "0.1.0"
__all__ = ["DownUpEngine"]
