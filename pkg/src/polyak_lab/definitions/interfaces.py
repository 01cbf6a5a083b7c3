from abc import ABC, abstractmethod
from typing import Any, Dict, Optional

from .structures import CacheKey


class ICache(ABC):
    @abstractmethod
    def get(self, key: CacheKey) -> Optional[Dict[str, Any]]:
        """
        Look up a stored document.

        Args:
            key (CacheKey): What was stored, for which skeleton and order.

        Returns:
            dict | None: The document, or None on a miss. Entries written by another
            tool version and entries failing their checksum are misses.
        """

    @abstractmethod
    def put(self, key: CacheKey, document: Dict[str, Any]) -> None:
        """
        Store a document.

        Failing to write is never an error; the computation proceeds uncached.

        Args:
            key (CacheKey): What is stored, for which skeleton and order.
            document (dict): A JSON-serializable document.
        """

    @property
    @abstractmethod
    def enabled(self) -> bool:
        """
        Whether entries are actually kept.

        Returns:
            bool: False for the null cache and for a cache that failed to write.
        """
