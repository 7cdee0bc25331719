"""Arbitrary-precision binomial and cumulative binomial coefficients.

Both triangles are built by the Pascal-style recursion

    c(n, k) = c(n-1, k) + c(n-1, k-1)
    C(n, k) = C(n-1, k) + C(n-1, k-1)

with boundary rows c(n, 0) = c(n, n) = 1 and C(n, 0) = 2^n, C(n, n) = 1.
C(n, k) is the tail sum of binomials from k to n, which is the weight of a
k-out-of-n success function.

Out-of-range k is total by convention: c(n, k) = 0 for k < 0 or k > n,
C(n, k) = 2^n for k <= 0 and 0 for k > n.  This lets shifted
characteristic-set formulas be written without case splits.
"""

from __future__ import annotations


class BinomTable:
    """Memoized triangular tables for c(n, k) and C(n, k).

    The table grows on demand.  It is read-only once a row exists; callers
    sharing a table across threads must either pre-grow it with ``ensure``
    or serialize growth externally.
    """

    def __init__(self, max_n: int = 0) -> None:
        self._c: list[list[int]] = [[1]]
        self._cum: list[list[int]] = [[1]]
        self.ensure(max_n)

    @property
    def max_n(self) -> int:
        return len(self._c) - 1

    def ensure(self, n: int) -> None:
        """Grow both triangles to cover rows up to n."""
        while self.max_n < n:
            prev_c = self._c[-1]
            prev_cum = self._cum[-1]
            m = len(self._c)
            row_c = [1] + [prev_c[k] + prev_c[k - 1] for k in range(1, m)] + [1]
            row_cum = (
                [2 * prev_cum[0]]
                + [prev_cum[k] + prev_cum[k - 1] for k in range(1, m)]
                + [1]
            )
            self._c.append(row_c)
            self._cum.append(row_cum)

    def binom(self, n: int, k: int) -> int:
        """c(n, k); 0 outside 0 <= k <= n."""
        if n < 0:
            raise ValueError(f"n must be nonnegative, got {n}")
        if k < 0 or k > n:
            return 0
        self.ensure(n)
        return self._c[n][k]

    def cum_binom(self, n: int, k: int) -> int:
        """C(n, k) = sum of c(n, m) for m in k..n; 2^n for k <= 0, 0 for k > n."""
        if n < 0:
            raise ValueError(f"n must be nonnegative, got {n}")
        if k > n:
            return 0
        if k <= 0:
            return 1 << n
        self.ensure(n)
        return self._cum[n][k]


_shared = BinomTable(64)


def binom(n: int, k: int) -> int:
    """c(n, k) from the shared table."""
    return _shared.binom(n, k)


def cum_binom(n: int, k: int) -> int:
    """C(n, k) from the shared table."""
    return _shared.cum_binom(n, k)
