"""
Extended and twisted affine Weyl groups of type A
W~(t, s) = Z^t_{1/s} x S_t, with the affine Weyl group W_aff(t) as the case s = 1.

Conventions:
  * permutations are tuples of images of 0..t-1 and compose as functions;
  * (sigma . mu)[sigma[i]] = mu[i] and (lam, sigma)(mu, tau) = (lam + sigma . mu, sigma tau);
  * an integral element acts on Z as the window f(i) = sigma[i] - t * lam[sigma[i]],
    which turns the product into composition of affine permutations;
  * Pi has f(i) = i - 1, i.e. translation (0, ..., 0, 1) times the cycle i -> i - 1,
    so Pi s_i Pi^-1 = s_(i-1) and Pi^t = translation (1, ..., 1) = zeta^s.
"""

import logging
import sys
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Sequence, Tuple

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from core.errors import ConsistencyError, InvalidParametersError, RankMismatchError, TwistMismatchError

logger = logging.getLogger(__name__)

Perm = Tuple[int, ...]


def perm_compose(sigma: Perm, tau: Perm) -> Perm:
    return tuple(sigma[i] for i in tau)


def perm_inverse(sigma: Perm) -> Perm:
    inverse = [0] * len(sigma)
    for i, image in enumerate(sigma):
        inverse[image] = i
    return tuple(inverse)


def perm_act(sigma: Perm, vec: Sequence[int]) -> Tuple[int, ...]:
    out = [0] * len(sigma)
    for i, value in enumerate(vec):
        out[sigma[i]] = value
    return tuple(out)


def all_perms(t: int) -> List[Perm]:
    """S_t sorted by length, then lexicographically"""
    from itertools import permutations
    perms = list(permutations(range(t)))
    perms.sort(key=lambda p: (_inversions(p), p))
    return perms


def _inversions(sigma: Perm) -> int:
    return sum(1 for i in range(len(sigma)) for j in range(i + 1, len(sigma)) if sigma[i] > sigma[j])


@dataclass(frozen=True, order=True)
class TwistedAffineWeylElem:
    """Element (num / s, perm) of W~(t, s)"""

    s: int
    num: Tuple[int, ...]
    perm: Perm

    def __post_init__(self):
        object.__setattr__(self, "num", tuple(int(x) for x in self.num))
        object.__setattr__(self, "perm", tuple(int(x) for x in self.perm))
        if self.s < 1:
            raise InvalidParametersError("twist denominator must be positive", {"s": self.s})
        if len(self.num) != len(self.perm):
            raise RankMismatchError("translation and permutation have different rank")
        if sorted(self.perm) != list(range(len(self.perm))):
            raise InvalidParametersError("perm is not a permutation of 0..t-1", {"perm": list(self.perm)})
        if self.num and any((x - self.num[0]) % self.s for x in self.num):
            raise InvalidParametersError("translation is not in Z^t + Z(1/s, ..., 1/s)",
                                         {"num": list(self.num), "s": self.s})

    @property
    def t(self) -> int:
        return len(self.perm)

    @property
    def translation(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(x, self.s) for x in self.num)

    @property
    def grade(self) -> int:
        """b in [0, s): the zeta-power of the element"""
        return self.num[0] % self.s if self.num else 0

    @property
    def is_integral(self) -> bool:
        return self.grade == 0

    @property
    def is_permutation(self) -> bool:
        return not any(self.num)

    def _check(self, other: "TwistedAffineWeylElem") -> None:
        if other.t != self.t:
            raise RankMismatchError(f"rank {self.t} combined with rank {other.t}")
        if other.s != self.s:
            raise TwistMismatchError(f"twist {self.s} combined with twist {other.s}")

    def __mul__(self, other: "TwistedAffineWeylElem") -> "TwistedAffineWeylElem":
        self._check(other)
        moved = perm_act(self.perm, other.num)
        return TwistedAffineWeylElem(self.s, tuple(a + b for a, b in zip(self.num, moved)),
                                     perm_compose(self.perm, other.perm))

    def inverse(self) -> "TwistedAffineWeylElem":
        sigma_inv = perm_inverse(self.perm)
        return TwistedAffineWeylElem(self.s, tuple(-x for x in perm_act(sigma_inv, self.num)), sigma_inv)

    def __pow__(self, k: int) -> "TwistedAffineWeylElem":
        base = self if k >= 0 else self.inverse()
        result = identity(self.t, self.s)
        for _ in range(abs(k)):
            result = result * base
        return result

    def length(self) -> int:
        return length(self)

    def window(self) -> Tuple[int, ...]:
        """Affine permutation window of the integral part"""
        b = self.grade
        lam = [(x - b) // self.s for x in self.num]
        return tuple(self.perm[i] - self.t * lam[self.perm[i]] for i in range(self.t))

    def to_dict(self) -> dict:
        return {"s": self.s, "num": list(self.num), "perm": list(self.perm)}

    def __repr__(self) -> str:
        return f"W(s={self.s}, num={list(self.num)}, perm={list(self.perm)})"


# ---- distinguished elements -------------------------------------------------

def identity(t: int, s: int = 1) -> TwistedAffineWeylElem:
    return TwistedAffineWeylElem(s, (0,) * t, tuple(range(t)))


def translation(lam: Sequence, s: int = 1) -> TwistedAffineWeylElem:
    """Translation by lam; entries may be Fractions with denominator dividing s"""
    num = []
    for x in lam:
        scaled = Fraction(x) * s
        if scaled.denominator != 1:
            raise InvalidParametersError(f"translation entry {x} is not in (1/{s})Z")
        num.append(int(scaled))
    return TwistedAffineWeylElem(s, tuple(num), tuple(range(len(num))))


def permutation_element(sigma: Sequence[int], s: int = 1) -> TwistedAffineWeylElem:
    return TwistedAffineWeylElem(s, (0,) * len(sigma), tuple(sigma))


def simple_reflection(t: int, i: int, s: int = 1) -> TwistedAffineWeylElem:
    """s_i for 1 <= i <= t-1 swaps positions i-1 and i; s_0 = t_(-1,0,...,0,1) (0 t-1)"""
    if t < 2 or not 0 <= i < t:
        raise InvalidParametersError(f"no simple reflection s_{i} in rank {t}")
    perm = list(range(t))
    if i == 0:
        perm[0], perm[t - 1] = t - 1, 0
        num = [0] * t
        num[0], num[t - 1] = -s, s
        return TwistedAffineWeylElem(s, tuple(num), tuple(perm))
    perm[i - 1], perm[i] = i, i - 1
    return TwistedAffineWeylElem(s, (0,) * t, tuple(perm))


def pi_element(t: int, s: int = 1) -> TwistedAffineWeylElem:
    num = [0] * t
    num[t - 1] = s
    perm = tuple((i - 1) % t for i in range(t))
    return TwistedAffineWeylElem(s, tuple(num), perm)


def zeta_element(t: int, s: int = 1) -> TwistedAffineWeylElem:
    return TwistedAffineWeylElem(s, (1,) * t, tuple(range(t)))


# ---- length and reduced words -------------------------------------------------

@lru_cache(maxsize=200000)
def length(w: TwistedAffineWeylElem) -> int:
    """
    Sum over i < j of |lam[sigma i] - lam[sigma j] - [sigma i > sigma j]|.
    Differences of lam are integral on all of W~, so zeta-extraction is implicit.
    """
    total = 0
    perm, num, s = w.perm, w.num, w.s
    for i in range(w.t):
        for j in range(i + 1, w.t):
            diff = (num[perm[i]] - num[perm[j]]) // s
            total += abs(diff - (1 if perm[i] > perm[j] else 0))
    return total


def decompose(w: TwistedAffineWeylElem) -> Tuple[int, int, TwistedAffineWeylElem]:
    """(a, b, x) with w = Pi^a zeta^b x and x in the Coxeter part"""
    b = w.grade
    a = (sum(w.num) - w.t * b) // w.s
    x = zeta_element(w.t, w.s) ** (-b) * pi_element(w.t, w.s) ** (-a) * w
    return a, b, x


def reduced_word(w: TwistedAffineWeylElem, prefer: str = "smallest") -> Tuple[int, int, List[int]]:
    """
    (a, b, word) with w = Pi^a zeta^b s_word[0] s_word[1] ...
    Greedy right descent; ties broken by the smallest (or largest) index.
    """
    a, b, word = _reduced_word(w, prefer)
    return a, b, list(word)


@lru_cache(maxsize=100000)
def _reduced_word(w: TwistedAffineWeylElem, prefer: str) -> Tuple[int, int, Tuple[int, ...]]:
    a, b, x = decompose(w)
    word: List[int] = []
    order = list(range(w.t)) if prefer == "smallest" else list(reversed(range(w.t)))
    current = length(x)
    while current > 0:
        for i in order:
            y = x * simple_reflection(w.t, i, w.s)
            if length(y) < current:
                x, current = y, current - 1
                word.append(i)
                break
        else:
            raise ConsistencyError("no descent found", {"w": w.to_dict()})
    word.reverse()
    if from_word(w.t, w.s, a, b, word) != w:
        raise ConsistencyError("greedy descent did not reach the identity", {"w": w.to_dict()})
    return a, b, tuple(word)


def from_word(t: int, s: int, a: int, b: int, word: Sequence[int]) -> TwistedAffineWeylElem:
    w = pi_element(t, s) ** a * zeta_element(t, s) ** b
    for i in word:
        w = w * simple_reflection(t, i, s)
    return w


def cayley_ball(t: int, radius: int, s: int = 1) -> Dict[TwistedAffineWeylElem, int]:
    """Breadth-first distances from the identity under right multiplication by s_0..s_(t-1)"""
    start = identity(t, s)
    dist = {start: 0}
    if t < 2:
        return dist
    gens = [simple_reflection(t, i, s) for i in range(t)]
    queue = deque([start])
    while queue:
        w = queue.popleft()
        if dist[w] == radius:
            continue
        for g in gens:
            nxt = w * g
            if nxt not in dist:
                dist[nxt] = dist[w] + 1
                queue.append(nxt)
    return dist
