"""
Memo tables for the recursive evaluators

Each decorated function gets its own dict keyed by the positional argument
tuple. Lookups and stores happen under a lock; the computation itself runs
outside it, which is safe because every decorated function is pure.
"""

import logging
import threading
from functools import wraps

logger = logging.getLogger(__name__)

# name -> wrapper, so benchmarks can start from cold tables
_registry = {}

# A cold memoized recursion is primed every WARM_STEP levels so that no
# call nests deeper than WARM_STEP memo frames.
WARM_STEP = 32


def memoized(name):
    """Cache decorator for pure functions of hashable positional arguments"""
    def decorator(func):
        cache = {}
        lock = threading.Lock()
        stats = {"hits": 0, "misses": 0}

        @wraps(func)
        def wrapper(*args):
            with lock:
                if args in cache:
                    stats["hits"] += 1
                    return cache[args]
                stats["misses"] += 1
            result = func(*args)
            with lock:
                # a concurrent caller may have stored the same value first
                return cache.setdefault(args, result)

        def cache_clear():
            with lock:
                cache.clear()
                stats["hits"] = stats["misses"] = 0

        def cache_info():
            with lock:
                return {"name": name, "size": len(cache), **stats}

        wrapper.cache_clear = cache_clear
        wrapper.cache_info = cache_info
        _registry[name] = wrapper
        return wrapper
    return decorator


def clear_all_caches():
    """Empty every registered memo table"""
    for name, wrapper in _registry.items():
        wrapper.cache_clear()
    logger.debug(f"Cleared memo tables: {', '.join(sorted(_registry))}")


def cache_report():
    return [wrapper.cache_info() for _, wrapper in sorted(_registry.items())]
