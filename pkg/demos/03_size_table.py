"""Exact comparator counts and the relative saving of pw_hbit_sel over pw_sel.

Writes sizes.csv next to the current directory and prints the N = 2^7 slice,
where the saving is zero for k = 2 and peaks for large k.
"""
from cardnet import sizes

rows = sizes.size_table(10)
with open("sizes.csv", "w", newline="") as out:
    sizes.write_size_csv(rows, out)
print(f"wrote {len(rows)} rows to sizes.csv")

print(f"\n{'k':>4} {'pw_sel':>7} {'pw_hbit':>8} {'bit_sel':>8} {'saving':>8}")
for r in rows:
    if r.log_n == 7:
        print(f"{2**r.log_k:>4} {r.pw_sel:>7} {r.pw_hbit_sel:>8} {r.bit_sel:>8} {float(r.codish_ratio):>8.4f}")

# the difference has a closed form in log coordinates
for N in (8, 16, 32):
    print(f"N={N}: pw_sel - pw_hbit_sel at k=N/2 is {sizes.sd_half(N)}")
