from typing import Any, Dict, Optional

from ...definitions.interfaces import ICache
from ...definitions.structures import CacheKey


class NullCache(ICache):
    def get(self, key: CacheKey) -> Optional[Dict[str, Any]]:
        return None

    def put(self, key: CacheKey, document: Dict[str, Any]) -> None:
        pass

    @property
    def enabled(self) -> bool:
        return False
