"""Check selection networks by the 0-1 principle, and catch a broken one."""
from cardnet import make_pw_hbit_sel, make_split, verify_selection_exhaustive, verify_selection_random
from cardnet import verify_merger_contract

for n, k in ((8, 4), (16, 2), (16, 8)):
    print(verify_selection_exhaustive(make_pw_hbit_sel(n, k), k, name=f"pw_hbit_sel({n},{k})").summary())

# too large for all 2^n binary inputs: random integer vectors instead
print(verify_selection_random(make_pw_hbit_sel(64, 16), 16, trials=2000, seed=1, name="pw_hbit_sel(64,16)").summary())

# a single split layer is not a selector; the report carries a counterexample
print(verify_selection_exhaustive(make_split(4), 2, name="split").summary())

# the merger only promises its result on valid inputs (sorted l, r with l dominating r)
for kind in ("pw-bit-merge", "pw-hbit-merge"):
    print(verify_merger_contract(kind, 8, trials=2000, seed=3).summary())
