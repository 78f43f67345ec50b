"""Randomized sampling in permutation groups and primitive prime divisors.

The sampling side estimates how likely a random involution y is to
generate the whole group together with a fixed element x; generation is
always decided exactly (stabilizer-chain order comparison), only the
choice of y is random.  Streams are seeded per (seed, stream id), so a
parallel run that assigns stream ids by trial index reproduces the
sequential run bit for bit.

The number-theoretic side finds the primes p dividing r^m - 1 that divide
no smaller r^j - 1, used to pick element orders that pin down a classical
group's natural module.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

import sympy

from . import perm

INVOLUTION_RETRY_CAP = 10_000
ELEMENT_ORDER_RETRY_CAP = 100_000


@dataclass(frozen=True)
class SamplerConfig:
    """Reproducibility knobs: RNG seed, trial count, and the length of the
    random generator words used for each draw."""

    seed: int
    trials: int
    word_length: int = 64

    def __post_init__(self):
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must fit in 64 unsigned bits")
        if self.trials < 1:
            raise ValueError("trials must be positive")
        if self.word_length < 1:
            raise ValueError("word_length must be positive")


def _stream(config, stream_id):
    """Deterministic RNG for one sampling stream.

    Seeding with a string makes the stream independent of the process
    hash seed and identical across platforms.
    """
    return random.Random(f"{config.seed}:{stream_id}")


def _random_word(alphabet, rng, length):
    g = perm.identity(len(alphabet[0]))
    for _ in range(length):
        g = perm.compose(g, rng.choice(alphabet))
    return g


def _alphabet(generators):
    """Generators, their inverses, and the identity.

    The identity entry varies the effective word length, so fixed-length
    words reach elements of every length up to the limit.  Without it a
    single generator of even order only ever yields even powers (the
    exponent of a length-w word has the parity of w).
    """
    if not generators:
        raise ValueError("need at least one generator")
    degree = len(generators[0])
    return (list(generators) + [perm.inverse(g) for g in generators]
            + [perm.identity(degree)])


def random_element(generators, chain, config, stream_id):
    """A pseudo-random group element: the product of ``word_length``
    uniform choices among the generators, their inverses, and the
    identity.

    ``chain``, when given, is used to assert membership of the result (a
    cheap guard against mismatched arguments).  Deterministic per
    (config.seed, stream_id).
    """
    alphabet = _alphabet(generators)
    g = _random_word(alphabet, _stream(config, stream_id),
                     config.word_length)
    if chain is not None and not perm.contains(chain, g):
        raise RuntimeError("sampled element fell outside the supplied chain")
    return g


def random_involution(generators, chain, config, stream_id):
    """A pseudo-random involution: random elements g are drawn until one
    has even order, and g^(order/2) is returned.

    Raises after ``INVOLUTION_RETRY_CAP`` draws without an even-order
    element, which (far beyond any plausible unlucky streak) means the
    group has odd order and no involutions at all.
    """
    alphabet = _alphabet(generators)
    rng = _stream(config, stream_id)
    for _ in range(INVOLUTION_RETRY_CAP):
        g = _random_word(alphabet, rng, config.word_length)
        order = perm.order_of(g)
        if order % 2 == 0:
            v = perm.power(g, order // 2)
            if chain is not None and not perm.contains(chain, v):
                raise RuntimeError(
                    "sampled involution fell outside the supplied chain")
            return v
    raise ValueError(
        f"no even-order element in {INVOLUTION_RETRY_CAP} draws; "
        "the group seems to have odd order")


def element_of_order(generators, chain, p, config, stream_id=0):
    """An element of prime order ``p``, or ``None`` if none is found.

    Random elements g are drawn until p divides the order of g, and
    g^(order/p) is returned; after ``ELEMENT_ORDER_RETRY_CAP`` draws the
    search gives up (for the group orders this package samples, that
    failure is overwhelming evidence that p does not divide |G|).
    """
    if not sympy.isprime(p):
        raise ValueError("p must be prime")
    alphabet = _alphabet(generators)
    rng = _stream(config, stream_id)
    for _ in range(ELEMENT_ORDER_RETRY_CAP):
        g = _random_word(alphabet, rng, config.word_length)
        order = perm.order_of(g)
        if order % p == 0:
            v = perm.power(g, order // p)
            if chain is not None and not perm.contains(chain, v):
                raise RuntimeError(
                    "sampled element fell outside the supplied chain")
            return v
    return None


@dataclass(frozen=True)
class GenerationEstimate:
    """Monte Carlo estimate of Pr[<x, y> = G] over random involutions y."""

    successes: int
    trials: int

    @property
    def probability(self):
        return Fraction(self.successes, self.trials)


def estimate_generation_probability(generators, x, config):
    """Fraction of ``config.trials`` random involutions y that generate
    the whole group together with ``x``.

    ``x`` must be a member of the group (checked).  Each trial draws y on
    its own stream (stream id = trial index) and decides generation
    exactly, by comparing the order of a stabilizer chain over {x, y}
    with the full group's order.
    """
    full_chain = perm.build_chain(generators)
    if not perm.contains(full_chain, x):
        raise ValueError("x is not a member of the generated group")
    degree = len(generators[0])
    successes = 0
    for trial in range(config.trials):
        y = random_involution(generators, full_chain, config, trial)
        pair_chain = perm.build_chain([x, y], degree=degree,
                                      known_order=full_chain.order)
        if pair_chain.order == full_chain.order:
            successes += 1
    return GenerationEstimate(successes=successes, trials=config.trials)


def primitive_prime_divisors(r, m):
    """Primes dividing r^m - 1 but no smaller r^j - 1, ascending.

    Equivalently: the primes p with multiplicative order of r mod p
    exactly m.  Every returned prime exceeds m (order m divides p - 1).
    The list is empty only in the classical exceptional cases, such as
    (2, 6); the tests sweep a grid to pin those down.
    """
    if not sympy.isprime(r):
        raise ValueError("r must be prime")
    if m < 2:
        raise ValueError("m must be at least 2")
    out = []
    for p in sorted(sympy.factorint(r ** m - 1)):
        if p == r:
            continue
        if sympy.n_order(r, p) == m:
            if p < m + 1:
                raise RuntimeError(
                    f"primitive divisor {p} of {r}^{m}-1 below m+1; "
                    "impossible (its order divides p-1)")
            out.append(int(p))
    return out


def load_generators(path):
    """Read a group fixture: first line ``degree n``, then one permutation
    per line in cycle notation.  Blank lines and ``#`` comments skipped.
    """
    degree = None
    gens = []
    with open(path, "r", encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if degree is None:
                parts = line.split()
                if len(parts) != 2 or parts[0] != "degree":
                    raise ValueError(
                        f"{path}: first line must be 'degree n', got "
                        f"{line!r}")
                degree = int(parts[1])
                if degree < 1:
                    raise ValueError(f"{path}: degree must be positive")
                continue
            gens.append(perm.parse_cycles(line, degree))
    if degree is None:
        raise ValueError(f"{path}: empty fixture")
    if not gens:
        raise ValueError(f"{path}: no generators")
    return degree, gens
