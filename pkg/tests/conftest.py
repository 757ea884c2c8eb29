"""Shared fixtures: one KL cache per group string, reused across test modules."""

from heckekl import KLCache, coxeter_system

_CACHES: dict[str, KLCache] = {}


def get_cache(group: str) -> KLCache:
    if group not in _CACHES:
        _CACHES[group] = KLCache(coxeter_system(group))
    return _CACHES[group]
