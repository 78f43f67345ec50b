"""Certify GRR status for a few small (2,p)-generated groups and confirm
each verdict with a full automorphism search.

The Mathieu group M11 with a standard generating pair gives a genuine GRR:
the only group automorphism fixing the connection set is the identity, so
the Cayley graph's automorphism group is exactly the regular copy of M11.
The alternating group A7 with a 7-cycle never does: inverting the cycle
extends to a graph automorphism.  The Frobenius group of order 42 fails
the hypotheses outright because its involutions invert the 7-cycle.
"""

from cayleygrr import grouptab, grrcert, perm


def show(name, degree, cycles, x_text, y_text, k):
    gens = [perm.parse_cycles(text, degree) for text in cycles]
    table = grouptab.enumerate_group(gens)
    x = perm.parse_cycles(x_text, degree)
    y = perm.parse_cycles(y_text, degree)

    cert = grrcert.certify_grr(table, x, y, k)
    print(f"{name}: order {table.order}, valency {k}")
    for check, ok in cert["checks"].items():
        print(f"  {check}: {'pass' if ok else 'FAIL'}")
    print(f"  verdict: {cert['verdict']}")
    if cert["witness"] is not None:
        print(f"  witness automorphism: x -> {cert['witness']['x_image']}, "
              f"y -> {cert['witness']['y_image']}")

    if cert["verdict"] == "hypotheses_failed":
        print()
        return
    result = grrcert.verify_grr_exhaustive(table, x, y, k)
    claimed = table.order * cert["aut_gs_order"]
    print(f"  exhaustive search: |Aut| = {result['aut_order']} "
          f"(certificate predicts {claimed})")
    print(f"  graph is a GRR: {result['is_grr']}")
    print()


def main():
    show("M11", 11, ["(1,2,3,4,5,6,7,8,9,10,11)", "(2,4)(3,5)(6,8)(9,10)"],
         "(1,2,3,4,5,6,7,8,9,10,11)", "(2,4)(3,5)(6,8)(9,10)", 5)
    show("A7", 7, ["(1,2,3)", "(1,2,3,4,5,6,7)"],
         "(1,2,3,4,5,6,7)", "(1,2)(3,4)", 5)
    show("F42", 7, ["(1,2,3,4,5,6,7)", "(2,4,3,7,5,6)"],
         "(1,2,3,4,5,6,7)", "(2,7)(3,6)(4,5)", 5)


if __name__ == "__main__":
    main()
