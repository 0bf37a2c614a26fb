"""Unit propagation on the selector encoding is arc-consistent.

With k-1 inputs set to true and y_k asserted false, propagation alone fixes
every remaining input to false, walking along a path from that input to y_k.
"""
from cardnet import make_pw_hbit_sel
from cardnet.propagation import SelectionEncoding, arc_sweep, subsets_to_check

enc = SelectionEncoding(make_pw_hbit_sel(8, 4), 4)
true_inputs = (2, 5, 7)
rep = enc.arc_check(true_inputs)
print("arc check for", true_inputs, "->", "ok" if rep else rep.reason)
for x in (1, 3, 4, 6, 8):
    print(f"path from x{x}:", enc.propagation_path(true_inputs, x))

for n, k, samples in ((8, 4, None), (16, 8, 100), (32, 8, 100)):
    res = arc_sweep(make_pw_hbit_sel(n, k), k, subsets_to_check(n, k, samples, seed=0))
    print(f"pw_hbit_sel(n={n}, k={k}): {res.tested - len(res.failures)}/{res.tested} passed")
