from .gauss_code import emit_gauss_code, parse_gauss_code
from .json_codec import fingerprint, format_rational, parse_rational, read_json, to_json, write_json

__all__ = [
    "emit_gauss_code",
    "parse_gauss_code",
    "fingerprint",
    "format_rational",
    "parse_rational",
    "read_json",
    "to_json",
    "write_json",
]
