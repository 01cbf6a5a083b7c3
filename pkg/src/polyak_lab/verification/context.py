import logging
from dataclasses import dataclass, field
from typing import Callable, Dict

from ..definitions.constants import DEFAULT_ARROW_CEILING, DEFAULT_CHORD_CEILING, DEFAULT_WITNESS_BOUND
from ..definitions.exceptions import SchemaViolationException
from ..definitions.interfaces import ICache
from ..definitions.namespace import Flavor, Profile, RelationKind, Skeleton
from ..definitions.structures import CacheKey
from ..invariants.functional import constraint_system
from ..linalg.system import RelationSystem
from ..relations.polyak import check_ceiling
from ..relations.unsigned import generate_unsigned
from ..serialization.json_codec import system_from_json, system_to_json
from .caches import NullCache

_logger = logging.getLogger(__name__)

PROFILE_CACHE_KINDS: Dict[Profile, str] = {
    Profile.GPV: "dP",
    Profile.GPV_VIRTUALIZATION: "dP+flip",
    Profile.CHORD: "dR",
}


@dataclass
class VerificationContext:
    """
    Ceilings and the relation-system cache shared by the claims of one run.

    Systems are memoized in memory for the lifetime of the context and read
    through the cache, so a claim never regenerates a system another claim built.
    """
    cache: ICache = field(default_factory=NullCache)
    arrow_ceiling: int = DEFAULT_ARROW_CEILING
    chord_ceiling: int = DEFAULT_CHORD_CEILING
    witness_bound: int = DEFAULT_WITNESS_BOUND
    _systems: Dict[CacheKey, RelationSystem] = field(default_factory=dict, repr=False)

    def cached(self, key: CacheKey, build: Callable[[], RelationSystem]) -> RelationSystem:
        if key in self._systems:
            return self._systems[key]
        system = None
        document = self.cache.get(key)
        if document is not None:
            try:
                system = system_from_json(document)
            except SchemaViolationException as e:
                _logger.debug(f"cache entry {key} does not decode ({e}); regenerating")
        if system is None:
            system = build()
            self.cache.put(key, system_to_json(system))
        self._systems[key] = system
        return system

    def profile_system(self, n: int, skeleton: Skeleton, profile: Profile) -> RelationSystem:
        check_ceiling(f"{profile.value} invariants", n, self.arrow_ceiling)
        key = CacheKey(PROFILE_CACHE_KINDS[profile], skeleton.value, n)
        return self.cached(key, lambda: constraint_system(n, skeleton, profile, self.arrow_ceiling))

    def unsigned_system(self, kind: RelationKind, n: int, skeleton: Skeleton, flavor: Flavor) -> RelationSystem:
        # 6T rows come from signed arrow relations; the others only enumerate unsigned diagrams
        ceiling = self.arrow_ceiling if kind is RelationKind.SIX_TERM else self.chord_ceiling
        check_ceiling(f"{kind.value} relations", n, ceiling)
        key = CacheKey(f"{kind.value}-{flavor.value}", skeleton.value, n)
        return self.cached(key, lambda: generate_unsigned(kind, n, skeleton, flavor, ceiling))
