"""Counter-based random streams (Philox4x32-10).

Every random quantity in the package is addressed by a tuple
``(seed, domain, stream, index)``:

* ``seed``   -- the user-facing seed,
* ``domain`` -- a package-internal constant separating unrelated uses
  (arc sampling, degree draws, process steps, ...),
* ``stream`` -- the trial / substream number,
* ``index``  -- position within the stream.

Because each uniform is a pure function of that address, results never
depend on scheduling, worker count or chunking; trial ``i`` always sees
the same numbers whether it runs first, last or on another process.
"""

from __future__ import annotations

import numpy as np

# Domain tags.  Appending is fine; renumbering changes sampled output.
DOMAIN_ARCS = 1          # directed arc positions (geometric skipping)
DOMAIN_ARC_LEVELS = 2    # per-arc uniforms for coupled occupancy
DOMAIN_UNDIRECTED = 3    # undirected edge positions
DOMAIN_PROCESS = 4       # abstract exploration-process steps
DOMAIN_TRUNCPOIS = 5     # zero-truncated Poisson draws
DOMAIN_PREHEART = 6      # configuration-model matching and insertion
DOMAIN_GENERIC = 7

_M0 = np.uint64(0xD2511F53)
_M1 = np.uint64(0xCD9E8D57)
_MASK32 = 0xFFFFFFFF
_MASK64 = 0xFFFFFFFFFFFFFFFF


def philox4x32(c0, c1, c2, c3, k0, k1):
    """One Philox4x32-10 block per element; inputs broadcast, uint32."""
    c0 = np.asarray(c0, dtype=np.uint32)
    c1 = np.asarray(c1, dtype=np.uint32)
    c2 = np.asarray(c2, dtype=np.uint32)
    c3 = np.asarray(c3, dtype=np.uint32)
    k0 = int(k0) & _MASK32
    k1 = int(k1) & _MASK32
    for rnd in range(10):
        p0 = _M0 * c0.astype(np.uint64)
        p2 = _M1 * c2.astype(np.uint64)
        hi0 = (p0 >> np.uint64(32)).astype(np.uint32)
        lo0 = p0.astype(np.uint32)
        hi2 = (p2 >> np.uint64(32)).astype(np.uint32)
        lo2 = p2.astype(np.uint32)
        c0, c1, c2, c3 = hi2 ^ c1 ^ np.uint32(k0), lo2, hi0 ^ c3 ^ np.uint32(k1), lo0
        k0 = (k0 + 0x9E3779B9) & _MASK32
        k1 = (k1 + 0xBB67AE85) & _MASK32
    return c0, c1, c2, c3


def splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return (x ^ (x >> 31)) & _MASK64


def derive_key(seed: int, domain: int) -> int:
    """64-bit Philox key for (seed, domain)."""
    return splitmix64(splitmix64(seed & _MASK64) ^ splitmix64(domain & _MASK64))


def uniforms_at(seed: int, domain: int, stream, index) -> np.ndarray:
    """Uniforms in [0, 1) addressed by (stream, index); arrays broadcast."""
    key = derive_key(seed, domain)
    k0 = key & _MASK32
    k1 = key >> 32
    stream = np.asarray(stream, dtype=np.uint64)
    index = np.asarray(index, dtype=np.uint64)
    c0 = (index & np.uint64(_MASK32)).astype(np.uint32)
    c1 = (index >> np.uint64(32)).astype(np.uint32)
    c2 = (stream & np.uint64(_MASK32)).astype(np.uint32)
    c3 = (stream >> np.uint64(32)).astype(np.uint32)
    x0, x1, _, _ = philox4x32(c0, c1, c2, c3, k0, k1)
    bits = (x0.astype(np.uint64) << np.uint64(32)) | x1.astype(np.uint64)
    return (bits >> np.uint64(11)).astype(np.float64) * (2.0 ** -53)


def uniforms(seed: int, domain: int, stream: int, start: int, count: int) -> np.ndarray:
    """``count`` consecutive uniforms of one stream, starting at ``start``."""
    idx = np.arange(start, start + count, dtype=np.uint64)
    return uniforms_at(seed, domain, stream, idx)


class PhiloxStream:
    """Sequential cursor over one (seed, domain, stream) lane."""

    def __init__(self, seed: int, domain: int, stream: int = 0):
        self.seed = seed
        self.domain = domain
        self.stream = stream
        self._pos = 0

    def uniforms(self, count: int) -> np.ndarray:
        out = uniforms(self.seed, self.domain, self.stream, self._pos, count)
        self._pos += count
        return out

    def uniform(self) -> float:
        return float(self.uniforms(1)[0])

    def randbelow(self, bound: int) -> int:
        # float inversion; bias O(bound * 2^-53) is negligible at our sizes
        return min(int(self.uniform() * bound), bound - 1)

    def shuffle(self, items: list) -> list:
        for i in range(len(items) - 1, 0, -1):
            j = self.randbelow(i + 1)
            items[i], items[j] = items[j], items[i]
        return items
