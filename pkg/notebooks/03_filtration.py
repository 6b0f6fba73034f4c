# %% [markdown]
# # Filtrations of S^(n+1) E
#
# Monomials are graded by the exponent of the `O(-1)` variable.  `G^p` keeps
# the monomials of order at least `p` along `C`; `F^p` is the complementary
# piece.  Twisting by 2 and taking `h0` gives the table below.

# %%
from math import comb

from cydeform.filtration import (
    build_filtration,
    check_split_complement,
    dim_V,
    generic_multiplicity_along_C,
    lemma23_fiber_checks,
)

T = build_filtration(4)
print(T.format())
print("split complement holds:", check_split_complement(T))

# %% [markdown]
# The first jump in `h0(G^p(2))` happens at `p = floor(n/2) + 1`, so a
# general anticanonical section vanishes to order exactly `floor(n/2)`.

# %%
for n in range(3, 13):
    T = build_filtration(n)
    print(n, generic_multiplicity_along_C(T), dim_V(T), 3 * comb(2 * n + 1, n + 1))

# %% [markdown]
# Generic fibre versus special fibre of the degeneration.

# %%
for n in (3, 4, 5):
    print(n, lemma23_fiber_checks(n))
