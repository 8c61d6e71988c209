"""Independent brute-force references shared by the tests."""
from __future__ import annotations


def partitions_brute(s: int, max_part: int | None = None, max_len: int | None = None):
    """Every partition of s as a nonincreasing tuple, filtered by the caps."""
    def rec(rem, cap):
        if rem == 0:
            yield ()
            return
        for p in range(min(rem, cap), 0, -1):
            for rest in rec(rem - p, p):
                yield (p,) + rest

    cap = s if max_part is None else max_part
    for part in rec(s, cap):
        if max_len is None or len(part) <= max_len:
            yield part
