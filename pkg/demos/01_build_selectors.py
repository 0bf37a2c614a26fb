"""Build the three selection networks and compare their sizes.

The pairwise bitonic selector (pw_hbit_sel) replaces the second half of each
merger with a cheaper half-split, so it never uses more comparators than the
plain bitonic selector.
"""
from cardnet import make_bit_sel, make_pw_bit_sel, make_pw_hbit_sel, evaluate

n = 16
print(f"{'k':>3} {'pw_hbit_sel':>12} {'pw_bit_sel':>11} {'bit_sel':>8}")
for k in (1, 2, 4, 8, 16):
    sizes = [make(n, k).size() for make in (make_pw_hbit_sel, make_pw_bit_sel, make_bit_sel)]
    print(f"{k:>3} {sizes[0]:>12} {sizes[1]:>11} {sizes[2]:>8}")

# a selector moves the k largest values to the top k channels, sorted
f = make_pw_hbit_sel(8, 4)
x = (3, 9, 1, 7, 4, 8, 2, 6)
print("\ninput ", x)
print("output", evaluate(f, x), "-> top 4:", evaluate(f, x)[:4])
print("\nnetwork text form:")
print(f.to_text())
