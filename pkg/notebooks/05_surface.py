# %% [markdown]
# # The surface case n = 3
#
# For `n = 3` the surface swept out over `C` is the Hirzebruch surface `F_2`.
# The anticanonical class restricts to `4C + 6f` and `C` splits off once.

# %%
from cydeform.projbundle import DivisorClass
from cydeform.surfaces import (
    SurfaceClass,
    fixed_component_decomposition,
    pairing,
    restrict_to_S,
    s4_summand_check,
)

C = SurfaceClass.section(2)
f = SurfaceClass.fiber(2)
print("C^2 =", pairing(C, C), " C.f =", pairing(C, f), " f^2 =", pairing(f, f))

D = restrict_to_S(DivisorClass(4, 2))
dec = fixed_component_decomposition(D, trace=True)
print(dec.format_trace())

# %% [markdown]
# Each copy of `C` removed raises the intersection with `C` by `e`.  On
# steeper surfaces more copies peel off.

# %%
for e in (1, 2, 3, 4):
    dec = fixed_component_decomposition(SurfaceClass(6, 5, e))
    print(e, dec.fixed, dec.mobile)

# %%
print("S^4 E'' sits inside S^4 E:", s4_summand_check())
