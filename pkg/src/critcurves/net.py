"""The net N_n: every chain of order at most n."""

from __future__ import annotations

from dataclasses import dataclass

from .chains import Chain, chain_new
from .errors import ConsistencyError, ParameterError


@dataclass(frozen=True)
class Net:
    order: int
    chains: tuple[Chain, ...]


def net(n: int) -> Net:
    """All chains with |i| ≤ n, ordered by i ascending then j ascending.

    The two horizontal chains L_{0,0} and L_{0,−1} are always present,
    and each slope i ≠ 0 contributes |i| chains, so |N_n| = n(n+1) + 2.
    """
    if n < 0:
        raise ParameterError(f"net order must be non-negative, got {n}")
    chains = []
    for i in range(-n, n + 1):
        if i > 0:
            js = range(0, i)
        elif i == 0:
            js = (-1, 0)
        else:
            js = range(i, 0)
        chains.extend(chain_new(i, j) for j in js)
    if len(chains) != n * (n + 1) + 2:
        raise ConsistencyError(
            f"net of order {n} has {len(chains)} chains, "
            f"expected {n * (n + 1) + 2}"
        )
    return Net(n, tuple(chains))
