"""Shared cached builders so sweeps don't rebuild graphs and spectra."""

import functools

from ballspec.hamming import build_graph, oracle_spectrum


@functools.lru_cache(maxsize=None)
def cached_graph(n, r1, r2):
    return build_graph(n, r1, r2)


@functools.lru_cache(maxsize=None)
def cached_oracle(n, r1, r2, want_vectors=False):
    return oracle_spectrum(cached_graph(n, r1, r2), want_vectors=want_vectors)


def band_cases(max_n, include_equal=True):
    """All (n, r1, r2) with n <= max_n, 0 <= r1 <= r2 <= n//2."""
    for n in range(1, max_n + 1):
        for r2 in range(n // 2 + 1):
            for r1 in range(r2 + 1):
                if include_equal or r1 < r2:
                    yield n, r1, r2
