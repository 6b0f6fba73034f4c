# %% [markdown]
# # Moduli counts and the n = 3 cubic form
#
# Naive parameter count: `h0(-K) - 1 - dim Aut`.  `P_2` has one extra
# automorphism and, for `n > 3`, enough extra sections to beat `P_1`.

# %%
from cydeform.moduli import (
    aut_dim,
    cubic_form_on_X,
    lattice_isometries,
    moduli_report,
    nef_discriminator,
)
from cydeform.projbundle import P1, P2

print(f"{'n':>3} {'h0 P1':>8} {'h0 P2':>8} {'aut1':>5} {'aut2':>5} {'M1':>8} {'M2>=':>8}")
for n in range(3, 9):
    r = moduli_report(n)
    print(f"{n:>3} {r.h0_antiK_P1:>8} {r.h0_antiK_P2:>8} {r.aut_P1:>5} {r.aut_P2:>5}"
          f" {r.dim_M1:>8} {r.dim_M2_lower:>8}")

print(aut_dim(P2(4).E))

# %% [markdown]
# At `n = 3` both hypersurfaces carry the same cubic form on `H^2`, and no
# non-trivial lattice automorphism preserves it.  Nefness of `t` tells them
# apart.

# %%
f1, f2 = cubic_form_on_X(P1(3)), cubic_form_on_X(P2(3))
print(f1.as_tuple(), f2.as_tuple(), "polynomial coefficients", f2.polynomial())
for bound in (5, 10, 20):
    print(bound, [m.tolist() for m in lattice_isometries(f2, bound)])
print(nef_discriminator(3))
