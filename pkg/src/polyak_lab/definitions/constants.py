from typing_extensions import Final

TOOL_VERSION: Final[str] = "0.1.0"
CERTIFICATE_SCHEMA: Final[str] = "polyak-lab/cert/1"

DEFAULT_ENUMERATION_CEILING: Final[int] = 6
DEFAULT_ARROW_CEILING: Final[int] = 4
DEFAULT_CHORD_CEILING: Final[int] = 5
DEFAULT_WITNESS_BOUND: Final[int] = 3
MAX_WITNESS_BOUND: Final[int] = 4

CONFIG_FILENAME: Final[str] = "polyak-lab.toml"
ENV_PREFIX: Final[str] = "VKFT_"
DEFAULT_CACHE_DIR: Final[str] = "cache"

EXIT_OK: Final[int] = 0
EXIT_FAIL: Final[int] = 1
EXIT_INCONCLUSIVE: Final[int] = 2
EXIT_USAGE: Final[int] = 64
EXIT_DATA: Final[int] = 65
