"""
Relation-system caches
"""
import logging
from pathlib import Path
from typing import Union

from ...definitions.interfaces import ICache
from ._null import NullCache
from .file_cache import FileCache

_logger = logging.getLogger(__name__)


def open_cache(root: Union[str, Path], enabled: bool = True) -> ICache:
    """
    Open the file cache at ``root``, falling back to the null cache.

    Args:
        root (str | Path): Cache directory.
        enabled (bool): Whether caching is wanted at all.

    Returns:
        ICache: A FileCache, or a NullCache if disabled or the directory cannot be created.
    """
    if not enabled:
        return NullCache()
    try:
        Path(root).mkdir(parents=True, exist_ok=True)
    except OSError as e:
        _logger.warning(f"cannot create cache directory {root} ({e}); continuing uncached")
        return NullCache()
    return FileCache(root)


__all__ = [
    "FileCache",
    "NullCache",
    "open_cache",
]
