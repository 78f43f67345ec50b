"""Regenerate the bundled group fixtures.

Writes cycle-notation generator files for the projective special linear
groups PSL_9(2) and PSL_10(2) in their natural actions (on the 511 and
1023 nonzero vectors of the F_2 module; over F_2 these groups coincide
with GL), plus a census list of small groups.  Every generated group is
verified against its known order by an exact stabilizer chain before
being written, so a bad primitive polynomial or a typo cannot produce a
silently wrong fixture.

Usage: python3 tools/make_fixtures.py
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from cayleygrr import perm  # noqa: E402

FIXTURE_DIR = (pathlib.Path(__file__).resolve().parent.parent
               / "src" / "cayleygrr" / "fixtures")

# primitive polynomials over F_2, as masks of the low-order terms:
# x^9 + x^4 + 1 and x^10 + x^3 + 1
PRIMITIVE_MASKS = {9: 0b000010001, 10: 0b0000001001}


def gl2_order(n):
    order = 1
    for i in range(n):
        order *= 2 ** n - 2 ** i
    return order


def gl2_generators(n):
    """GL(n, 2) acting on the 2^n - 1 nonzero vectors (point v-1 is the
    vector with bit pattern v).

    Generator one multiplies by the companion matrix of a primitive
    polynomial (a Singer element, one orbit on all nonzero vectors);
    generator two is the transvection v -> v + v_1 e_2.
    """
    mask = PRIMITIVE_MASKS[n]
    size = 2 ** n - 1

    def companion(v):
        v <<= 1
        if v & (1 << n):
            v ^= (1 << n) | mask
        return v

    singer = tuple(companion(v + 1) - 1 for v in range(size))
    trans = tuple(((v + 1) ^ (((v + 1) & 1) << 1)) - 1 for v in range(size))
    if perm.order_of(singer) != size:
        raise AssertionError(f"polynomial mask for n={n} is not primitive")
    chain = perm.build_chain([singer, trans], degree=size,
                             known_order=gl2_order(n))
    if chain.order != gl2_order(n):
        raise AssertionError(
            f"generators reach order {chain.order}, want {gl2_order(n)}")
    return size, [singer, trans]


def write_group(path, degree, generators, comment):
    lines = [f"# {comment}", f"degree {degree}"]
    lines.extend(perm.format_cycles(g) for g in generators)
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {path} ({degree} points, {len(generators)} generators)")


def main():
    FIXTURE_DIR.mkdir(parents=True, exist_ok=True)
    for n in (9, 10):
        degree, gens = gl2_generators(n)
        write_group(
            FIXTURE_DIR / f"psl_{n}_2.txt", degree, gens,
            f"PSL_{n}(2) = GL({n},2) on the {degree} nonzero vectors of "
            f"F_2^{n}; Singer element and a transvection")
    census = [
        "# census list: one group spec per line (built-in name, fixture",
        "# path relative to this file, or inline cycle-notation generators)",
        "A5",
        "S4",
        "C6",
        "A6",
        "C7",
        "(1,2,3,4,5,6,7) (2,4,3,7,5,6)",
        "A7",
    ]
    path = FIXTURE_DIR / "census_small.txt"
    path.write_text("\n".join(census) + "\n", encoding="utf-8")
    print(f"wrote {path}")


if __name__ == "__main__":
    main()
