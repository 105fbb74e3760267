"""Enumeration and transformation of 2-bridge knot words.

A *word* here is an ASCII string over ``{+,-}`` made of ``c`` maximal runs
of equal signs.  The runs alternate sign starting with ``+``, every run has
length (exponent) 1 or 2, the first and last runs have length 1, and the
total string length is congruent to 1 mod 3.  Each such word encodes an
alternating 3-strand plat presentation of a 2-bridge knot with ``c``
crossings; every 2-bridge knot with crossing number ``c`` arises from one
or two of them (two iff the word is not palindromic).

Braid words are strings over ``{a,b}`` where ``a`` is a lower-row crossing
(sigma_1) and ``b`` an upper-row crossing (sigma_2^-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

_SWAP_SIGNS = str.maketrans("+-", "-+")
_SWAP_LETTERS = str.maketrans("ab", "ba")


def runs(word: str) -> list[tuple[str, int]]:
    """Split a sign string into maximal runs, as (sign, exponent) pairs."""
    out: list[tuple[str, int]] = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        out.append((word[i], j - i))
        i = j
    return out


def exponents(word: str) -> list[int]:
    """Run lengths of a validated word (signs are implicit by position)."""
    return [e for _, e in runs(word)]


def validate_word(word: str) -> int:
    """Check word validity and return its crossing number c.

    Raises ValueError if the string is not a valid word: wrong alphabet,
    fewer than 3 runs, a run longer than 2, first/last run not single,
    wrong starting sign, or total length not 1 mod 3.  (Alternation of
    signs is automatic once the alphabet check passes, since runs are
    maximal.)
    """
    if not word or set(word) - {"+", "-"}:
        raise ValueError(f"word must be a nonempty string over +/-: {word!r}")
    rr = runs(word)
    c = len(rr)
    if c < 3:
        raise ValueError(f"word needs at least 3 runs, got {c}: {word!r}")
    if word[0] != "+":
        raise ValueError(f"word must start with +: {word!r}")
    if rr[0][1] != 1 or rr[-1][1] != 1:
        raise ValueError(f"first and last runs must have length 1: {word!r}")
    if any(e > 2 for _, e in rr):
        raise ValueError(f"run exponents must be 1 or 2: {word!r}")
    if len(word) % 3 != 1:
        raise ValueError(f"length must be 1 mod 3, got {len(word)}: {word!r}")
    return c


def word_from_interior_bits(c: int, mask: int) -> str:
    """Word whose interior exponents are encoded by the bits of mask.

    Exponent eps_{2+i} is 1 + bit (c-3-i), i.e. the most significant bit
    is eps_2, so increasing mask order is lexicographic order of exponent
    sequences.  The mask is kept by the enumerators iff the resulting
    length c + popcount(mask) is 1 mod 3.
    """
    parts = ["+"]
    for i in range(c - 2):
        e = 1 + ((mask >> (c - 3 - i)) & 1)
        parts.append(("-" if i % 2 == 0 else "+") * e)
    parts.append("-" if c % 2 == 0 else "+")
    return "".join(parts)


def enumerate_words(c: int) -> Iterator[str]:
    """Yield every word with c crossings, in lexicographic exponent order.

    The interior exponents eps_2..eps_{c-1} range over {1,2}; a choice is
    kept iff the resulting length c + (#exponents equal to 2) is 1 mod 3.
    """
    if c < 3:
        raise ValueError(f"crossing number must be >= 3, got {c}")
    for mask in range(1 << (c - 2)):
        if (c + mask.bit_count()) % 3 == 1:
            yield word_from_interior_bits(c, mask)


def enumerate_palindromic_words(c: int) -> Iterator[str]:
    """Yield only the palindromic words with c crossings.

    A word is palindromic iff its exponent vector is a palindrome, so it
    suffices to choose the first half of the interior exponents; this runs
    in O(2^(c/2)) instead of O(2^c).
    """
    if c < 3:
        raise ValueError(f"crossing number must be >= 3, got {c}")
    n = c - 2                   # interior positions
    half = (n + 1) // 2         # free positions
    for hm in range(1 << half):
        mask = 0
        for i in range(n):
            j = min(i, n - 1 - i)
            bit = (hm >> (half - 1 - j)) & 1
            mask |= bit << (n - 1 - i)
        if (c + mask.bit_count()) % 3 == 1:
            yield word_from_interior_bits(c, mask)


def jacobsthal(n: int) -> int:
    """n-th Jacobsthal number (2^n - (-1)^n) / 3: 0, 1, 1, 3, 5, 11, ..."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    return (2**n - (-1) ** n) // 3


def word_count(c: int) -> int:
    """|T(c)| = Jacobsthal(c-2) = (2^(c-2) - (-1)^c) / 3."""
    if c < 3:
        raise ValueError(f"crossing number must be >= 3, got {c}")
    return jacobsthal(c - 2)


def is_palindromic(word: str) -> bool:
    """True iff the word equals its reverse (odd c) or its sign-swapped
    reverse (even c)."""
    c = validate_word(word)
    rev = word[::-1]
    return word == rev if c % 2 == 1 else word == rev.translate(_SWAP_SIGNS)


def palindrome_count(c: int) -> int:
    """Number of palindromic words with c crossings: Jacobsthal(floor((c-1)/2))."""
    if c < 3:
        raise ValueError(f"crossing number must be >= 3, got {c}")
    return jacobsthal((c - 1) // 2)


def knot_count(c: int) -> int:
    """Number of distinct 2-bridge knots with crossing number c.

    Ernst-Sumners count, split by c mod 4; always equals
    (word_count(c) + palindrome_count(c)) / 2 since a knot is represented
    by two words, or one when that word is palindromic.
    """
    if c < 3:
        raise ValueError(f"crossing number must be >= 3, got {c}")
    r = c % 4
    if r == 0:
        return (2 ** (c - 3) + 2 ** ((c - 4) // 2)) // 3
    if r == 1:
        return (2 ** (c - 3) + 2 ** ((c - 3) // 2)) // 3
    if r == 2:
        return (2 ** (c - 3) + 2 ** ((c - 4) // 2) - 1) // 3
    return (2 ** (c - 3) + 2 ** ((c - 3) // 2) + 1) // 3


@dataclass(frozen=True)
class CountReport:
    """Word, palindrome and knot counts for one crossing number."""

    c: int
    words: int
    palindromes: int
    knots: int

    def __post_init__(self) -> None:
        assert 2 * self.knots == self.words + self.palindromes


def count_report(c: int) -> CountReport:
    """Closed-form counts for crossing number c (no enumeration)."""
    return CountReport(c, word_count(c), palindrome_count(c), knot_count(c))


def to_braid(word: str) -> str:
    """Map a word to its braid word, one letter per run.

    Runs (+)^1 and (-)^2 become 'a' (a lower crossing, sigma_1); runs
    (-)^1 and (+)^2 become 'b' (an upper crossing, sigma_2^-1).  The
    output has exactly c letters.
    """
    validate_word(word)
    return "".join(
        "a" if (s == "+") == (e == 1) else "b" for s, e in runs(word)
    )


def swap_braid(z: str) -> str:
    """Exchange the two crossing rows: a <-> b."""
    return z.translate(_SWAP_LETTERS)


def validate_braid(z: str) -> None:
    if set(z) - {"a", "b"}:
        raise ValueError(f"braid word must be over a/b: {z!r}")


def bijection_f(word: str) -> str:
    """Crossings 2..2m of the braid word, where c is 2m+1 or 2m+2.

    This is a bijection from the words with 2m+1 or 2m+2 crossings onto
    the 2^(2m-1) braid words of length 2m-1: the first crossing is always
    'a', and the trailing crossings are forced by the length-mod-3
    constraint (see bijection_f_inverse).
    """
    c = validate_word(word)
    m = (c - 1) // 2
    return to_braid(word)[1 : 2 * m]


def bijection_f_inverse(z: str) -> str:
    """Inverse of bijection_f: rebuild the unique word mapping onto z.

    Interior runs alternate sign starting at '-', one run per letter
    (at a '-' run: a -> "--", b -> "-"; at a '+' run: a -> "+",
    b -> "++").  The interior length L mod 3 then forces the ending:
    L=2 -> "+<interior>+" (c = 2m+1), L=1 -> "+<interior>+-" and
    L=0 -> "+<interior>++-" (both c = 2m+2).
    """
    validate_braid(z)
    if len(z) % 2 != 1:
        raise ValueError(f"braid word must have odd length, got {len(z)}")
    parts = []
    for i, letter in enumerate(z):
        if i % 2 == 0:
            parts.append("--" if letter == "a" else "-")
        else:
            parts.append("+" if letter == "a" else "++")
    interior = "".join(parts)
    suffix = {2: "+", 1: "+-", 0: "++-"}[len(interior) % 3]
    return "+" + interior + suffix


# Final-three-run patterns for the partition classes, keyed by the pair
# (eps_{c-2}, eps_{c-1}); eps_c is always 1.  The replacement glues a
# shorter tail in place of those runs, giving a bijection of class i onto:
# classes 2 and 3 with c-1 crossings (i=1), classes 1 and 4 with c-1
# crossings (i=2), or all words with c-2 crossings (i=3 and i=4).
_CLASS_BY_PAIR = {(1, 1): 1, (2, 2): 2, (1, 2): 3, (2, 1): 4}
_TAIL_ODD = {1: ("+-+", "++-"), 2: ("++--+", "+-"), 3: ("+--+", "+"), 4: ("++-+", "+")}
_TAIL_EVEN = {1: ("-+-", "--+"), 2: ("--++-", "-+"), 3: ("-++-", "-"), 4: ("--+-", "-")}


def partition_class(word: str) -> tuple[int, str]:
    """Classify a word by its final 3 runs and apply the tail replacement.

    Returns (i, shorter_word) with i in {1,2,3,4}.  Needs c >= 5 so that
    the final three runs do not overlap the fixed first run.
    """
    c = validate_word(word)
    if c < 5:
        raise ValueError(f"partition classes need c >= 5, got {c}")
    e = exponents(word)
    i = _CLASS_BY_PAIR[(e[-3], e[-2])]
    tail, repl = (_TAIL_ODD if c % 2 == 1 else _TAIL_EVEN)[i]
    assert word.endswith(tail)
    return i, word[: -len(tail)] + repl
