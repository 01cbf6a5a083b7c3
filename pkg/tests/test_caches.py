import logging

from polyak_lab.definitions.namespace import Flavor, Profile, RelationKind, Skeleton
from polyak_lab.definitions.structures import CacheKey
from polyak_lab.serialization.json_codec import system_to_json
from polyak_lab.verification.caches import FileCache, NullCache, open_cache
from polyak_lab.verification.context import VerificationContext

KEY = CacheKey("dP", "circle", 2)
DOCUMENT = {"rows": [1, 2, 3], "name": "x"}


def test_put_then_get(tmp_path):
    cache = FileCache(tmp_path, version="1.0")
    assert cache.get(KEY) is None
    cache.put(KEY, DOCUMENT)
    assert cache.path_for(KEY) == tmp_path / "1.0" / "dP" / "circle" / "2.json"
    assert cache.get(KEY) == DOCUMENT


def test_other_version_misses(tmp_path):
    FileCache(tmp_path, version="1.0").put(KEY, DOCUMENT)
    assert FileCache(tmp_path, version="2.0").get(KEY) is None


def test_corrupt_entries_miss(tmp_path):
    cache = FileCache(tmp_path, version="1.0")
    cache.put(KEY, DOCUMENT)
    path = cache.path_for(KEY)
    text = path.read_text(encoding="ascii")
    path.write_text(text[: len(text) // 2], encoding="ascii")
    assert cache.get(KEY) is None
    path.write_text(text.replace('"x"', '"y"'), encoding="ascii")
    assert cache.get(KEY) is None


def test_unwritable_cache_disables_itself(tmp_path, caplog):
    blocker = tmp_path / "blocker"
    blocker.write_text("", encoding="ascii")
    cache = FileCache(blocker, version="1.0")
    with caplog.at_level(logging.WARNING):
        cache.put(KEY, DOCUMENT)
    assert not cache.enabled
    assert "continuing uncached" in caplog.text
    assert cache.get(KEY) is None


def test_null_cache():
    cache = NullCache()
    cache.put(KEY, DOCUMENT)
    assert cache.get(KEY) is None
    assert not cache.enabled


def test_open_cache(tmp_path):
    assert isinstance(open_cache(tmp_path / "c", enabled=False), NullCache)
    assert not (tmp_path / "c").exists()
    assert isinstance(open_cache(tmp_path / "c"), FileCache)
    assert (tmp_path / "c").is_dir()
    blocker = tmp_path / "file"
    blocker.write_text("", encoding="ascii")
    assert isinstance(open_cache(blocker / "sub"), NullCache)


def test_context_reads_systems_back_from_disk(tmp_path):
    first = VerificationContext(cache=FileCache(tmp_path))
    built = first.profile_system(1, Skeleton.CIRCLE, Profile.GPV)
    second = VerificationContext(cache=FileCache(tmp_path))
    calls = []

    def build():
        calls.append(1)
        return built

    loaded = second.cached(CacheKey("dP", "circle", 1), build)
    assert not calls
    assert system_to_json(loaded) == system_to_json(built)


def test_context_memoizes_in_memory():
    context = VerificationContext()
    one = context.unsigned_system(RelationKind.TWO_TERM, 2, Skeleton.LINE, Flavor.CHORD_UNSIGNED)
    two = context.unsigned_system(RelationKind.TWO_TERM, 2, Skeleton.LINE, Flavor.CHORD_UNSIGNED)
    assert one is two


def test_undecodable_entry_is_rebuilt(tmp_path):
    cache = FileCache(tmp_path)
    key = CacheKey("dP", "circle", 1)
    cache.put(key, {"flavor": "nonsense"})
    context = VerificationContext(cache=cache)
    system = context.profile_system(1, Skeleton.CIRCLE, Profile.GPV)
    assert system.width == 3
    assert cache.get(key) == system_to_json(system)
