# %% [markdown]
# # Explicit sections and the multiplication map
#
# Sections of `O(a t + b f)` on `P_2` are polynomials in the fibre variables
# `z, w1, ..., w_(n-1), v` (weights `-1, 0, ..., 0, 1`) times binary forms in
# `s, u`.  Ranks are computed over the rationals.

# %%
import time

from cydeform.filtration import build_filtration, dim_V
from cydeform.sections import (
    image_of_psi,
    monomial_basis,
    psi_prime_rank,
    vanishing_order_along_C,
)

n = 3
for e in monomial_basis(n, 1, 0):
    print(e)

# %% [markdown]
# Vanishing order along `C` is the total degree in the `w` and `v` variables.

# %%
from collections import Counter

orders = Counter(vanishing_order_along_C(e) for e in monomial_basis(n, n + 1, 2))
print(sorted(orders.items()))

# %% [markdown]
# `psi` multiplies `n-1` sections of `t` with two sections of `t+f`.  Its
# image equals the space `V` of sections vanishing to order `n-1`.

# %%
for m in (3, 4, 5):
    t0 = time.perf_counter()
    r = image_of_psi(m)
    dt = time.perf_counter() - t0
    print(f"n={m}: rank {r}, dim V {dim_V(build_filtration(m))}, {dt:.2f}s")

# %% [markdown]
# Same answer with a random unitriangular change of basis, and for the
# smaller map `psi'`.

# %%
print(image_of_psi(3, seed=1), psi_prime_rank(3), psi_prime_rank(4))
