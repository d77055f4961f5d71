"""Decomposing a disguised direct sum back into its blocks.

A known model is conjugated by a random class-preserving invertible matrix
and its basis shuffled; the decomposition recovers the label multiset and a
change of basis that reproduces the block model entrywise.
"""

import json
import random

from supercircle import (
    decompose_su11,
    direct_sum,
    make_adjoint_su11,
    make_pi_m,
    scramble,
)


def main():
    model = direct_sum(
        make_pi_m(2, "+"),
        make_pi_m(2, "-"),
        make_pi_m(-1, "+"),
        make_adjoint_su11(),
    )
    print("model blocks: pi(2,+), pi(2,-), pi(-1,+), adjoint")
    print("model dimension:", model.dim)

    rep = scramble(model, random.Random(2718))
    print()
    print("after scrambling, the U matrix starts like this:")
    u = rep.odd["U"]
    for i in range(3):
        print(" ", [str(u[i, j]) for j in range(4)], "...")

    report = decompose_su11(rep)
    print()
    print("recovered labels:")
    for label in report.labels():
        print("  ", label)
    print("change of basis verifies:", report.verify(rep))

    print()
    print("report as JSON:")
    blob = report.to_json()
    blob["basis_change"] = "... (%d columns)" % rep.dim
    print(json.dumps(blob, sort_keys=True, indent=2))


if __name__ == "__main__":
    main()
