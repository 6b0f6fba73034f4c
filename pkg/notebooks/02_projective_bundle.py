# %% [markdown]
# # The projective bundles P_1 and P_2
#
# `P_1` is `P^1 x P^n`; `P_2` projectivises the special bundle with one
# negative summand.  Everything here is a statement about classes `a t + b f`.

# %%
from cydeform.projbundle import (
    F,
    P1,
    P2,
    T,
    DivisorClass,
    base_locus_of_t_system,
    blowup_check,
    cohomology_pbundle,
    intersection_number,
    pushforward,
    section_curve_from_quotient,
)

n = 3
for P in (P1(n), P2(n)):
    print(P.E, " K =", P.canonical)

# %% [markdown]
# Full cohomology table of `O(a t + b f)` on `P_2` for a small window.
# The band `-n-1 < a < 0` is identically zero.

# %%
P = P2(n)
for a in range(-6, 3):
    row = []
    for b in range(-3, 4):
        h = [cohomology_pbundle(P, DivisorClass(a, b), i) for i in range(n + 2)]
        nz = [(i, x) for i, x in enumerate(h) if x]
        row.append(",".join(f"h{i}={x}" for i, x in nz) or ".")
    print(f"a={a:+d}: " + "  ".join(f"{r:>9}" for r in row))

# %% [markdown]
# The anticanonical class pushes forward to `S^(n+1) E (2)`.

# %%
print(pushforward(P, -P.canonical))

# %% [markdown]
# Chow ring.  `t` restricted to a fibre is a hyperplane, and on `P_2` it has
# degree `-1` on the section curve `C` cut out by the negative summand.

# %%
print("t^n f =", intersection_number(P, [T] * n + [F]))
print("t^(n+1) =", intersection_number(P, [T] * (n + 1)))
C = section_curve_from_quotient(P, -1)
print("C:", C, " t.C =", C.t_deg)
print("base locus of |t| on P_2:", base_locus_of_t_system(P, 0))
print("base locus of |t+f| on P_2:", base_locus_of_t_system(P, 1))

# %% [markdown]
# Blow-up of `C`: the proper transform of the anticanonical hypersurface
# plus the canonical class of the blow-up sums to zero.

# %%
for m in range(3, 7):
    bc = blowup_check(P2(m))
    print(m, bc.K_blowup, bc.proper_transform, bc.K_resolution_sum, bc.decomposition_ok)
