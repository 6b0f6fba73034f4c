# %% [markdown]
# # Split bundles on P^1
#
# A split bundle is a multiset of degrees.  Cohomology, twists and symmetric
# powers all reduce to integer bookkeeping on that multiset.

# %%
from math import comb

from cydeform.bundles import SplitBundle, h0_bundle, h1_bundle, sym_pow, twist
from cydeform.projbundle import special_bundle

E = special_bundle(3)
print(E, "rank", E.rank, "degree", E.degree)

# %% [markdown]
# `h1` of `E(-1)` comes only from the `O(-2)` summand.

# %%
for k in (-2, -1, 0, 1):
    Ek = twist(E, k)
    print(f"E({k:+d}) = {Ek}:  h0 = {h0_bundle(Ek)}, h1 = {h1_bundle(Ek)}")

# %% [markdown]
# Symmetric powers.  The degree profile of `S^d E` is symmetric because `E` is
# self-dual, and the rank is the usual stars-and-bars count.

# %%
for d in range(5):
    S = sym_pow(E, d)
    assert S.rank == comb(E.rank + d - 1, d)
    print(d, S)

# %% [markdown]
# Big ints keep working far past machine precision.

# %%
S = sym_pow(special_bundle(40), 41)
print(f"rank S^41 = {S.rank}  ({S.rank.bit_length()} bits)")
print("h0(S^41 E(2)) =", h0_bundle(twist(S, 2)))

# %%
print(SplitBundle.parse("O(1)+O(-1)+O^2") == E)
