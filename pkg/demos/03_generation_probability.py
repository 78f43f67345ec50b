"""Estimate the probability that a random involution generates the whole
group together with a fixed element of prime order.

For A5 with a 5-cycle the exact answer is known by enumerating all 15
involutions: 10 of them generate, so the probability is 2/3.  A seeded
Monte Carlo estimate lands close to that.  For the much larger group
PSL_9(2), acting on the 511 points of the projective space, the estimate
with an element of order 73 comes out near 1: almost every involution
works.  This is the trend that makes the construction generic for large
simple groups.
"""

import os

from cayleygrr import grouptab, perm, sampler

FIXTURE_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)),
                           os.pardir, "src", "cayleygrr", "fixtures")


def main():
    gens = [perm.parse_cycles("(1,2,3)", 5),
            perm.parse_cycles("(1,2,3,4,5)", 5)]
    x = perm.parse_cycles("(1,2,3,4,5)", 5)

    table = grouptab.enumerate_group(gens)
    involutions = [table.elements[i] for i in range(table.order)
                   if table.element_order(i) == 2]
    hits = sum(
        perm.build_chain([x, y], degree=5, known_order=60).order == 60
        for y in involutions)
    print(f"A5: {hits} of {len(involutions)} involutions generate with a "
          f"5-cycle (exact probability {hits}/{len(involutions)})")

    config = sampler.SamplerConfig(seed=1, trials=2000)
    estimate = sampler.estimate_generation_probability(gens, x, config)
    print(f"A5: seeded estimate {estimate.successes}/{estimate.trials} "
          f"= {float(estimate.probability):.4f}")
    print()

    degree, psl_gens = sampler.load_generators(
        os.path.join(FIXTURE_DIR, "psl_9_2.txt"))
    chain = perm.build_chain(psl_gens)
    print(f"PSL_9(2): degree {degree}, order {chain.order}")

    config = sampler.SamplerConfig(seed=0, trials=50)
    x = sampler.element_of_order(psl_gens, chain, 73, config)
    print(f"found an element of order {perm.order_of(x)}")
    estimate = sampler.estimate_generation_probability(psl_gens, x, config)
    print(f"PSL_9(2): seeded estimate {estimate.successes}/"
          f"{estimate.trials} = {float(estimate.probability):.4f}")


if __name__ == "__main__":
    main()
