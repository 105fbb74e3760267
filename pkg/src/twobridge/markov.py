"""Orientation-state Markov chain and the summand random walk.

Reading a block of s uniformly random braid letters moves the orientation
state at a cut by a Markov chain on {1, 2, 3}: each letter either fixes the
state or transposes it with a neighbour, so the one-letter step matrix is
(1/2) M with M = [[1,1,0],[1,0,1],[0,1,1]].  The s-letter transition matrix
(1/2^s) M^s has an exact closed form and contracts toward the uniform
distribution at rate 2^(-s).

Cutting a long word into t blocks of s letters yields t summands
(orientation state, block).  Mirror cancellation turns the summand
multiset into a walk on Z^d x Z_2^p: one signed integer coordinate per
mirror pair of classes, one parity bit per palindromic-type oriented word.
Everything here evaluates the walk exactly (rational arithmetic over all
2^(s t) block sequences) or by Monte Carlo sampling, and checks the
taxicab-distance bound 3 sqrt(2^s t) + p and the per-class second-moment
bound 4 t / 2^s.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .cobordism import is_palindromic_type
from .diagram import orientation_after, strand_permutation
from .errors import BudgetError

Matrix = tuple[tuple[Fraction, Fraction, Fraction], ...]

# Exact-enumeration guard and vectorization chunk size for the walk.
SEQUENCE_BUDGET = 1 << 24
_CHUNK = 1 << 16

_FLIP = {1: 3, 2: 2, 3: 1}


def identity_matrix() -> Matrix:
    one, zero = Fraction(1), Fraction(0)
    return tuple(tuple(one if i == j else zero for j in range(3)) for i in range(3))


def matrix_multiply(a: Matrix, b: Matrix) -> Matrix:
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3))
        for i in range(3)
    )


def matrix_power(a: Matrix, k: int) -> Matrix:
    if k < 0:
        raise ValueError(f"exponent must be nonnegative, got {k}")
    result = identity_matrix()
    base = a
    while k:
        if k & 1:
            result = matrix_multiply(result, base)
        base = matrix_multiply(base, base)
        k >>= 1
    return result


def step_matrix() -> Matrix:
    """Letter counts M[i][j] = number of letters moving state i+1 to j+1."""
    counts = [[0] * 3 for _ in range(3)]
    for state in (1, 2, 3):
        for letter in "ab":
            counts[state - 1][orientation_after(state, letter) - 1] += 1
    return tuple(tuple(Fraction(n) for n in row) for row in counts)


def transition_matrix(s: int) -> Matrix:
    """Orientation-state transition probabilities across s random letters."""
    if s < 1:
        raise ValueError(f"block size must be at least 1, got {s}")
    power = matrix_power(step_matrix(), s)
    scale = Fraction(1, 2 ** s)
    return tuple(tuple(scale * x for x in row) for row in power)


def empirical_transition_matrix(s: int) -> Matrix:
    """Transition frequencies measured over all 2^s letter blocks."""
    if s < 1:
        raise ValueError(f"block size must be at least 1, got {s}")
    counts = [[0] * 3 for _ in range(3)]
    for bits in range(2 ** s):
        block = "".join("ab"[(bits >> (s - 1 - j)) & 1] for j in range(s))
        for state in (1, 2, 3):
            counts[state - 1][orientation_after(state, block) - 1] += 1
    scale = Fraction(1, 2 ** s)
    return tuple(tuple(scale * n for n in row) for row in counts)


def power_closed_form(s: int, k: int) -> Matrix:
    """Closed form for the k-th power of the block transition matrix.

    With n = k s: for odd n every entry is (1 + 2^(-n)) / 3 except the
    anti-diagonal ones at (1 - 2^(1-n)) / 3; for even n the diagonal holds
    (1 + 2^(1-n)) / 3 and everything else (1 - 2^(-n)) / 3.  (The residual
    permutation term (-J)^n alternates between minus the anti-diagonal flip
    and the identity.)  k = 0 gives the identity.
    """
    if s < 1:
        raise ValueError(f"block size must be at least 1, got {s}")
    if k < 0:
        raise ValueError(f"exponent must be nonnegative, got {k}")
    if k == 0:
        return identity_matrix()
    n = k * s
    magnitude = Fraction(1, 2 ** n)
    if n % 2:
        base = (1 + magnitude) / 3
        return tuple(
            tuple(base - magnitude if i + j == 2 else base for j in range(3))
            for i in range(3)
        )
    base = (1 - magnitude) / 3
    return tuple(
        tuple(base + magnitude if i == j else base for j in range(3))
        for i in range(3)
    )


def verify_empirical(s: int) -> bool:
    """Exact matrix power equals exhaustive block frequencies."""
    return transition_matrix(s) == empirical_transition_matrix(s)


def verify_closed_form(s_max: int, k_max: int) -> bool:
    for s in range(1, s_max + 1):
        p = transition_matrix(s)
        for k in range(0, k_max + 1):
            if matrix_power(p, k) != power_closed_form(s, k):
                return False
    return True


def verify_power_identity(r_max: int) -> bool:
    """M^r = (-J)^r + (2^r - (-1)^r)/3 * B with J the anti-diagonal
    permutation matrix and B the all-ones matrix, checked exactly."""
    m = step_matrix()
    for r in range(0, r_max + 1):
        bulk = Fraction(2 ** r - (-1) ** r, 3)
        if r % 2:
            expected = tuple(
                tuple(bulk - (i + j == 2) for j in range(3)) for i in range(3)
            )
        else:
            expected = tuple(
                tuple(bulk + (i == j) for j in range(3)) for i in range(3)
            )
        if matrix_power(m, r) != expected:
            return False
    return True


def contraction_gap(s: int, k: int) -> Fraction:
    """Largest within-row spread of the k-step block transition matrix."""
    p = matrix_power(transition_matrix(s), k)
    return max(
        abs(p[i][j] - p[i][l])
        for i in range(3) for j in range(3) for l in range(3)
    )


def verify_contraction(s_max: int, k_max: int) -> bool:
    """Row spreads shrink at least geometrically: gap(s, k) <= 2^(-k s)."""
    for s in range(1, s_max + 1):
        for k in range(1, k_max + 1):
            if contraction_gap(s, k) > Fraction(1, 2 ** (k * s)):
                return False
    return True


def pal_coordinate_count(s: int) -> int:
    """Number p of parity coordinates: palindromic-type oriented words."""
    return 3 * 2 ** (s // 2) if s % 2 == 0 else 0


@dataclass(frozen=True)
class _WalkTables:
    """Lookup tables over ids (state - 1) * 2^s + block for the walk kernel."""

    s: int
    next_state: np.ndarray
    canon: np.ndarray
    sign: np.ndarray
    is_pal: np.ndarray  # indexed by id; depends only on the block letters


@lru_cache(maxsize=None)
def _tables(s: int) -> _WalkTables:
    half = 1 << s
    blocks = np.arange(half, dtype=np.int64)

    # Orientation states after each prefix, starting from each of 1, 2, 3.
    a_step = np.array([0, 1, 3, 2], dtype=np.int64)
    b_step = np.array([0, 2, 1, 3], dtype=np.int64)
    states = np.repeat(np.arange(1, 4, dtype=np.int64), half).reshape(3, half)
    for j in range(s):
        bit = (blocks >> (s - 1 - j)) & 1
        states = np.where(bit == 0, a_step[states], b_step[states])
    ends = states  # shape (3, half): end state per (start, block)

    # Mirror block: reverse the letter order and swap a <-> b.
    reversed_bits = np.zeros(half, dtype=np.int64)
    for j in range(s):
        reversed_bits = (reversed_bits << 1) | ((blocks >> j) & 1)
    mirror_block = (half - 1) ^ reversed_bits
    is_pal_block = mirror_block == blocks

    flip = np.array([0, 3, 2, 1], dtype=np.int64)
    ids = np.arange(3 * half, dtype=np.int64)
    next_state = ends.reshape(-1)
    mirror_id = (flip[next_state] - 1) * half + np.tile(mirror_block, 3)
    is_pal = np.tile(is_pal_block, 3)
    canon = np.where(is_pal, ids, np.minimum(ids, mirror_id))
    sign = np.where(is_pal | (ids == canon), 1, -1).astype(np.int64)
    return _WalkTables(s, next_state, canon, sign, is_pal)


def oriented_word_key(s: int, ident: int) -> str:
    """Serialize an id from the walk tables as an oriented-word key."""
    state, block = divmod(ident, 1 << s)
    letters = "".join("ab"[(block >> (s - 1 - j)) & 1] for j in range(s))
    return f"o{state + 1}:{letters}"


def _walk_segments(blocks: np.ndarray, tables: _WalkTables):
    """Per-sequence class displacements.

    Returns (keys, runs, pal, end) arrays of shape (rows, t): at positions
    where ``end`` is True, ``runs`` holds the total signed displacement of
    the class ``keys`` over that sequence (match count for palindromic-type
    classes, where parity is what matters).
    """
    rows, t = blocks.shape
    s = tables.s
    keys = np.empty((rows, t), dtype=np.int64)
    signs = np.empty((rows, t), dtype=np.int64)
    state = np.ones(rows, dtype=np.int64)
    for step in range(t):
        ident = (state - 1) * (1 << s) + blocks[:, step]
        keys[:, step] = tables.canon[ident]
        signs[:, step] = tables.sign[ident]
        state = tables.next_state[ident]

    order = np.argsort(keys, axis=1, kind="stable")
    keys = np.take_along_axis(keys, order, axis=1)
    signs = np.take_along_axis(signs, order, axis=1)
    sums = np.cumsum(signs, axis=1)

    start = np.empty((rows, t), dtype=bool)
    start[:, 0] = True
    start[:, 1:] = keys[:, 1:] != keys[:, :-1]
    end = np.empty_like(start)
    end[:, -1] = True
    end[:, :-1] = start[:, 1:]

    before = np.empty_like(sums)
    before[:, 0] = 0
    before[:, 1:] = sums[:, :-1]
    anchor = np.where(start, np.arange(t, dtype=np.int64), 0)
    np.maximum.accumulate(anchor, axis=1, out=anchor)
    runs = sums - np.take_along_axis(before, anchor, axis=1)
    return keys, runs, tables.is_pal[keys], end


def _distances(blocks: np.ndarray, tables: _WalkTables) -> np.ndarray:
    keys, runs, pal, end = _walk_segments(blocks, tables)
    contributions = np.where(pal, runs & 1, np.abs(runs))
    return np.where(end, contributions, 0).sum(axis=1)


def exact_expected_distance(s: int, t: int) -> Fraction:
    """Exact E[Dist] of the t-step summand walk over all block sequences."""
    if s < 1:
        raise ValueError(f"block size must be at least 1, got {s}")
    if t < 0:
        raise ValueError(f"step count must be nonnegative, got {t}")
    if t == 0:
        return Fraction(0)
    total_sequences = 1 << (s * t)
    if total_sequences > SEQUENCE_BUDGET:
        raise BudgetError(
            f"exact walk enumeration needs 2^{s * t} block sequences, above "
            f"the 2^24 budget; use monte_carlo_distance instead")
    tables = _tables(s)
    mask = (1 << s) - 1
    total = 0
    for lo in range(0, total_sequences, _CHUNK):
        seqs = np.arange(lo, min(lo + _CHUNK, total_sequences), dtype=np.int64)
        blocks = np.empty((seqs.size, t), dtype=np.int64)
        for step in range(t):
            blocks[:, step] = (seqs >> (s * step)) & mask
        total += int(_distances(blocks, tables).sum())
    return Fraction(total, total_sequences)


def distance_bound(s: int, t: int) -> float:
    """Taxicab bound 3 sqrt(2^s t) + p on the expected walk distance."""
    return 3 * (2 ** s * t) ** 0.5 + pal_coordinate_count(s)


def distance_bound_holds(s: int, t: int, expected: Fraction) -> bool:
    """expected <= 3 sqrt(2^s t) + p, decided in exact arithmetic."""
    excess = expected - pal_coordinate_count(s)
    if excess <= 0:
        return True
    return excess * excess <= 9 * 2 ** s * t


def monte_carlo_distance(s: int, t: int, trials: int, seed: int = 0
                         ) -> tuple[float, float]:
    """Sampled (mean, standard error) of the walk distance."""
    if s < 1:
        raise ValueError(f"block size must be at least 1, got {s}")
    if trials < 2:
        raise ValueError(f"need at least 2 trials, got {trials}")
    if t == 0:
        return 0.0, 0.0
    rng = np.random.Generator(np.random.Philox(seed))
    tables = _tables(s)
    distances = np.empty(trials, dtype=np.int64)
    for lo in range(0, trials, _CHUNK):
        hi = min(lo + _CHUNK, trials)
        blocks = rng.integers(0, 1 << s, size=(hi - lo, t), dtype=np.int64)
        distances[lo:hi] = _distances(blocks, tables)
    mean = float(distances.mean())
    stderr = float(distances.std(ddof=1) / trials ** 0.5)
    return mean, stderr


@dataclass(frozen=True)
class ClassMoments:
    """Exact moments of one class displacement D_w over the full walk."""

    key: str
    palindromic: bool
    abs_mean: Fraction
    second_moment: Fraction


def per_class_moments(s: int, t: int) -> dict[str, ClassMoments]:
    """Exact E|D_w| and E[D_w^2] for every summand class."""
    if s < 1:
        raise ValueError(f"block size must be at least 1, got {s}")
    if t < 1:
        raise ValueError(f"step count must be at least 1, got {t}")
    total_sequences = 1 << (s * t)
    if total_sequences > SEQUENCE_BUDGET:
        raise BudgetError(
            f"exact walk enumeration needs 2^{s * t} block sequences, above "
            f"the 2^24 budget; use monte_carlo_distance instead")
    tables = _tables(s)
    mask = (1 << s) - 1
    size = 3 << s
    abs_totals = np.zeros(size, dtype=np.int64)
    square_totals = np.zeros(size, dtype=np.int64)
    for lo in range(0, total_sequences, _CHUNK):
        seqs = np.arange(lo, min(lo + _CHUNK, total_sequences), dtype=np.int64)
        blocks = np.empty((seqs.size, t), dtype=np.int64)
        for step in range(t):
            blocks[:, step] = (seqs >> (s * step)) & mask
        keys, runs, pal, end = _walk_segments(blocks, tables)
        flat_keys = keys[end]
        flat_runs = np.where(pal[end], runs[end] & 1, np.abs(runs[end]))
        np.add.at(abs_totals, flat_keys, flat_runs)
        np.add.at(square_totals, flat_keys, flat_runs * flat_runs)
    out: dict[str, ClassMoments] = {}
    canonical = np.flatnonzero(tables.canon == np.arange(size))
    for ident in canonical.tolist():
        key = oriented_word_key(s, ident)
        out[key] = ClassMoments(
            key, bool(tables.is_pal[ident]),
            Fraction(int(abs_totals[ident]), total_sequences),
            Fraction(int(square_totals[ident]), total_sequences))
    return out


def verify_second_moments(s: int, t: int) -> bool:
    """Every integer-coordinate class satisfies E[D_w^2] <= 4 t / 2^s."""
    bound = Fraction(4 * t, 2 ** s)
    return all(
        m.second_moment <= bound
        for m in per_class_moments(s, t).values()
        if not m.palindromic
    )


def verify_abs_means(s: int, t: int) -> bool:
    """Every integer-coordinate class satisfies E|D_w| <= 2 sqrt(t / 2^s),
    decided exactly by squaring."""
    bound = Fraction(4 * t, 2 ** s)
    return all(
        m.abs_mean * m.abs_mean <= bound
        for m in per_class_moments(s, t).values()
        if not m.palindromic
    )


def class_bucket(key: str) -> tuple[int, tuple[int, int, int], bool]:
    """Walk-distribution bucket of a class: start state, strand permutation
    of the letters, and palindromic-type flag."""
    state, letters = key.split(":")
    return int(state[1:]), strand_permutation(letters), is_palindromic_type(letters)


def verify_bucket_collapse(s: int, t: int) -> bool:
    """Class moments depend only on (start state, permutation, type)."""
    buckets: dict[tuple, tuple[Fraction, Fraction]] = {}
    for key, m in per_class_moments(s, t).items():
        bucket = class_bucket(key)
        value = (m.abs_mean, m.second_moment)
        if buckets.setdefault(bucket, value) != value:
            return False
    non_pal = {b for b in buckets if not b[2]}
    return len(non_pal) <= 18
