"""Weight words over the two-letter alphabet {black, white}.

A weight is a finite word in the letters 'b' (black) and 'w' (white); the
empty word is allowed and rendered "e" in CLI contexts.  Weights index the
simple, indecomposable, standard, costandard, projective, injective and
tilting objects throughout the engine.  This module also provides the
(marked) ruffle enumeration that underlies both tensor product rules.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

BLACK = "b"
WHITE = "w"

EMPTY_MARK = ""  # the "empty" marking of a neutral collision


def parse_weight(s):
    """Parse the CLI grammar `e | [bw]+` into a weight string."""
    if s == "e":
        return ""
    if s and all(c in "bw" for c in s):
        return s
    raise ValueError(f"bad weight literal {s!r}; want 'e' or a word in b/w")


def format_weight(lam):
    return lam if lam else "e"


def flat(lam):
    """Delete the final letter; None for the empty weight.

    Objects indexed by an absent weight are zero by convention, so callers
    treat None as "the zero object".
    """
    return lam[:-1] if lam else None


def dual(lam):
    """Interchange black and white letters (an involution)."""
    return lam.translate(str.maketrans("bw", "wb"))


def is_alternating(lam):
    """True iff no two equal adjacent letters ('ww'/'bb'-free)."""
    return all(a != b for a, b in zip(lam, lam[1:]))


def ends_white(lam):
    return lam.endswith(WHITE)


def ends_black(lam):
    return lam.endswith(BLACK)


def sort_key(lam):
    """Length-then-lexicographic order with b < w; gives stable outputs."""
    return (len(lam), lam)


def enumerate_weights(max_len):
    """All 2^(L+1) - 1 weights of length <= max_len, in sort_key order."""
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    out = []
    for n in range(max_len + 1):
        out.extend("".join(t) for t in product("bw", repeat=n))
    return out


def alternating_suffixes(max_len, final=None):
    """Nonempty alternating words of length <= max_len.

    `final` restricts the last letter ('b' or 'w'); None allows both.
    """
    out = []
    for w in enumerate_weights(max_len):
        if w and is_alternating(w) and (final is None or w.endswith(final)):
            out.append(w)
    return out


def black_tail(lam):
    """Split lam = mu + 'b'*n with mu not ending in black; returns (mu, n)."""
    n = 0
    while lam[: len(lam) - n].endswith(BLACK):
        n += 1
    return lam[: len(lam) - n], n


@dataclass(frozen=True)
class MarkedRuffle:
    """A pair of order injections covering [l], plus collision markings.

    rho1 and rho2 are strictly increasing 1-indexed position tuples for the
    letters of the two factors; their images cover every position.  rho3
    marks each neutral collision (positions hit by both factors with unequal
    letters) with 'b', 'w', or the empty mark ''.
    """

    rho1: tuple
    rho2: tuple
    rho3: tuple  # sorted tuple of (position, mark)

    @property
    def length(self):
        return max(self.rho1 + self.rho2) if (self.rho1 or self.rho2) else 0


def ruffle_weight(rho, lam, mu):
    """The output weight of a marked ruffle of lam and mu."""
    length = rho.length
    pos1 = {p: i for i, p in enumerate(rho.rho1)}
    pos2 = {p: i for i, p in enumerate(rho.rho2)}
    marks = dict(rho.rho3)
    letters = []
    for p in range(1, length + 1):
        if p in marks:
            letters.append(marks[p])
        elif p in pos1 and p in pos2:
            letters.append(lam[pos1[p]])  # non-neutral collision, both agree
        elif p in pos1:
            letters.append(lam[pos1[p]])
        else:
            letters.append(mu[pos2[p]])
    return "".join(letters)


def marked_ruffles(lam, mu, restricted=False):
    """All marked ruffles of lam and mu with their output weights.

    Ruffles correspond to interleavings of the two words where positions can
    collide; equal-letter collisions keep their letter, neutral ones take
    each of the three marks.  With `restricted` a neutral collision in the
    final position may not take the empty mark (this is the variant that
    computes tensor products of indecomposables rather than simples).
    """
    m, n = len(lam), len(mu)
    out = []

    def rec(a, b, pos, rho1, rho2, rho3, letters):
        if a == m and b == n:
            if restricted and rho3 and rho3[-1][0] == pos and rho3[-1][1] == EMPTY_MARK:
                return
            rho = MarkedRuffle(tuple(rho1), tuple(rho2), tuple(rho3))
            out.append((rho, "".join(letters)))
            return
        p = pos + 1
        if a < m:
            rho1.append(p)
            letters.append(lam[a])
            rec(a + 1, b, p, rho1, rho2, rho3, letters)
            letters.pop()
            rho1.pop()
        if b < n:
            rho2.append(p)
            letters.append(mu[b])
            rec(a, b + 1, p, rho1, rho2, rho3, letters)
            letters.pop()
            rho2.pop()
        if a < m and b < n:
            rho1.append(p)
            rho2.append(p)
            if lam[a] == mu[b]:
                letters.append(lam[a])
                rec(a + 1, b + 1, p, rho1, rho2, rho3, letters)
                letters.pop()
            else:
                for mark in (BLACK, WHITE, EMPTY_MARK):
                    rho3.append((p, mark))
                    letters.append(mark)
                    rec(a + 1, b + 1, p, rho1, rho2, rho3, letters)
                    letters.pop()
                    rho3.pop()
            rho1.pop()
            rho2.pop()

    rec(0, 0, 0, [], [], [], [])
    return out


@lru_cache(maxsize=None)
def tensor_summands(lam, mu, restricted):
    """Multiset (sorted tuple) of output weights of the (marked) ruffles."""
    return tuple(sorted((w for _, w in marked_ruffles(lam, mu, restricted)),
                        key=sort_key))
