import json
import logging
import os
import tempfile
import threading
from pathlib import Path
from typing import Any, Dict, Optional, Union

from ...definitions.constants import TOOL_VERSION
from ...definitions.interfaces import ICache
from ...definitions.structures import CacheKey
from ...serialization.json_codec import dumps, fingerprint

_logger = logging.getLogger(__name__)


class FileCache(ICache):
    """
    Content-checked JSON files under ``<root>/<version>/<kind>/<skeleton>/<n>.json``.

    Each file wraps its payload with the writing tool version and the payload's
    sha256; a version or checksum mismatch reads as a miss.
    """

    def __init__(self, root: Union[str, Path], version: str = TOOL_VERSION) -> None:
        self._root = Path(root)
        self._version = version
        self._enabled = True
        self._locks: Dict[str, threading.Lock] = {}
        self._locks_guard = threading.Lock()

    @property
    def enabled(self) -> bool:
        return self._enabled

    def path_for(self, key: CacheKey) -> Path:
        return self._root / self._version / key.kind / key.skeleton / f"{key.order}.json"

    def _lock(self, key: CacheKey) -> threading.Lock:
        with self._locks_guard:
            return self._locks.setdefault(str(key), threading.Lock())

    def get(self, key: CacheKey) -> Optional[Dict[str, Any]]:
        path = self.path_for(key)
        if not self._enabled or not path.is_file():
            _logger.debug(f"cache miss: {key}")
            return None
        try:
            wrapper = json.loads(path.read_text(encoding="ascii"))
        except (OSError, ValueError) as e:
            _logger.debug(f"cache entry {key} unreadable ({e}); treating as a miss")
            return None
        if not isinstance(wrapper, dict) or wrapper.get("version") != self._version:
            _logger.debug(f"cache entry {key} written by another version; treating as a miss")
            return None
        payload = wrapper.get("payload")
        if not isinstance(payload, dict) or wrapper.get("checksum") != fingerprint(payload):
            _logger.debug(f"cache entry {key} failed its checksum; treating as a miss")
            return None
        _logger.debug(f"cache hit: {key}")
        return payload

    def put(self, key: CacheKey, document: Dict[str, Any]) -> None:
        if not self._enabled:
            return
        path = self.path_for(key)
        wrapper = {"version": self._version, "checksum": fingerprint(document), "payload": document}
        with self._lock(key):
            try:
                path.parent.mkdir(parents=True, exist_ok=True)
                fd, temp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
                with os.fdopen(fd, "wb") as handle:
                    handle.write(dumps(wrapper))
                os.replace(temp, path)
            except OSError as e:
                _logger.warning(f"cache directory {self._root} is not writable ({e}); continuing uncached")
                self._enabled = False
