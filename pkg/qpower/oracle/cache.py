import json
import logging
import os
import threading
from typing import Optional

from ..algebra.scalars import QScalar


class OracleCache:
    """
    On-disk JSON store for enumeration results, one file per (kind, n):
    {"kind": "J", "n": 7, "poly": <QScalar JSON>}.
    """

    _cache_dir: Optional[str] = None
    _lock = threading.Lock()

    @classmethod
    def set_cache_dir(cls, path: Optional[str]):
        cls._cache_dir = path

    @classmethod
    def cache_dir(cls) -> Optional[str]:
        return cls._cache_dir

    @classmethod
    def _path(cls, kind: str, n: int) -> str:
        return os.path.join(cls._cache_dir, f"{kind}_{n}.json")

    @classmethod
    def get_blocking(cls, kind: str, n: int) -> Optional[QScalar]:
        if not cls._cache_dir:
            return None
        path = cls._path(kind, n)
        if not os.path.isfile(path):
            return None
        try:
            with open(path, "r") as f:
                data = json.load(f)
        except (OSError, ValueError) as e:
            logging.warning(f"Ignoring unreadable cache file {path}: {e}")
            return None
        if data.get("kind") != kind or data.get("n") != n:
            logging.warning(f"Cache file {path} holds {data.get('kind')}/{data.get('n')}, ignoring it")
            return None
        logging.debug(f"Cache hit for {kind}/{n}")
        return QScalar.from_json(data["poly"])

    @classmethod
    def put_blocking(cls, kind: str, n: int, poly: QScalar):
        if not cls._cache_dir:
            return
        with cls._lock:
            os.makedirs(cls._cache_dir, exist_ok=True)
            path = cls._path(kind, n)
            tmp = f"{path}.tmp"
            with open(tmp, "w") as f:
                json.dump({"kind": kind, "n": n, "poly": poly.to_json()}, f, sort_keys=True)
            os.replace(tmp, path)
        logging.debug(f"Cached {kind}/{n} in {cls._cache_dir}")
