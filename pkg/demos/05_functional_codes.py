"""Evaluation codes on the rank-n cone: exact parameters at desk scale.

The code evaluates every degree-d form at the variety's rational points;
its distance is the point count minus the largest intersection with a
hypersurface, so the oracle and the witness constructions pin it exactly.
"""

from hermcodes import (
    build_code,
    code_dimension,
    construct_extremal_form,
    make_field,
    make_standard_cone,
    min_distance,
    theoretical_parameters,
    weight_distribution,
)

ctx = make_field(2, 1)

print("exhaustive parameters (q = 2):")
for n, d in ((2, 1), (2, 2), (3, 1), (3, 2), (4, 1)):
    code = build_code(ctx, make_standard_cone(ctx, n), d)
    params = min_distance(ctx, code, "exhaustive_messages")
    theory = theoretical_parameters(n, d, 2)
    tag = "ok" if (params.m, params.k, params.dmin) == (theory.m, theory.k, theory.dmin) else "MISMATCH"
    print(f"  n={n}, d={d}: [{params.m},{params.k},{params.dmin}]  closed form agrees: {tag}")

code = build_code(ctx, make_standard_cone(ctx, 2), 1)
print("\nweight distribution of the [13,3,8] code:", weight_distribution(ctx, code))

# where exhaustion is refused, an extremal witness still pins the distance
cone = make_standard_cone(ctx, 4)
code = build_code(ctx, cone, 2)
witness = construct_extremal_form(ctx, cone, 2)
params = min_distance(ctx, code, "witness_only", witnesses=[witness.form])
print(
    f"\nn=4, d=2: k = {code_dimension(ctx, code)}, witness weight {params.dmin} "
    f"({params.dmin_status}); closed form says {theoretical_parameters(4, 2, 2).dmin}"
)
